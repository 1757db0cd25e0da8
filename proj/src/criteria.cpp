#include "pfaff/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>

namespace pfaff {

std::pair<KForm, bool> integrability_obstruction(const KForm& w) {
    if (w.degree() != 1) throw std::invalid_argument("integrability obstruction expects a one-form");
    KForm obstruction = wedge(w, exterior_derivative(w));
    bool integrable = obstruction.is_zero();
    return {std::move(obstruction), integrable};
}

bool invariant_hypersurface(const KForm& w, const Polynomial& f) {
    if (w.degree() != 1) throw std::invalid_argument("invariance check expects a one-form");
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("hypersurface equation must be nonzero and nonconstant");
    if (f.ambient_dimension() != w.ambient_dimension())
        throw std::invalid_argument("ambient dimension mismatch");
    KForm df(w.ambient_dimension(), 1);
    for (uint32_t j = 1; j <= w.ambient_dimension(); ++j) df.add_term({j}, f.partial_derivative(j));
    KForm wdf = wedge(w, df);
    for (const auto& [idx, c] : wdf.terms())
        if (!divides(f, c)) return false;
    return true;
}

bool radial_annihilation(const KForm& w) {
    if (w.degree() != 1) throw std::invalid_argument("radial annihilation expects a one-form");
    return contract(w, radial_field(w.ambient_dimension())).is_zero();
}

namespace {

// splitmix64; a stable per-sample seed derivation so the sampled set
// does not depend on how work is split across threads.
uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct SampleRng {
    uint64_t state;
    explicit SampleRng(uint64_t seed, uint64_t index) : state(splitmix64(seed ^ splitmix64(index + 1))) {}
    uint64_t next_u64() {
        state = splitmix64(state);
        return state;
    }
    double next_unit() {  // (0, 1]
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }
};

// Uniform point on the sphere of the given radius in C^n = R^{2n}:
// 2n Box-Muller normals, normalized.
ComplexPoint sphere_point(uint32_t n, double radius, uint64_t seed, uint64_t index) {
    SampleRng rng(seed, index);
    while (true) {
        std::vector<double> g(2 * n);
        for (uint32_t i = 0; i < 2 * n; i += 2) {
            double u1 = rng.next_unit();
            double u2 = rng.next_unit();
            double r = std::sqrt(-2.0 * std::log(u1));
            g[i] = r * std::cos(2.0 * M_PI * u2);
            if (i + 1 < 2 * n) g[i + 1] = r * std::sin(2.0 * M_PI * u2);
        }
        double norm2 = 0.0;
        for (double v : g) norm2 += v * v;
        if (norm2 < 1e-30) continue;
        double scale = radius / std::sqrt(norm2);
        std::vector<std::complex<double>> coords(n);
        for (uint32_t i = 0; i < n; ++i) coords[i] = {g[2 * i] * scale, g[2 * i + 1] * scale};
        return ComplexPoint(std::move(coords));
    }
}

enum class SampleKind : uint8_t { clear, tangent, singular };

struct SampleOutcome {
    SampleKind kind = SampleKind::clear;
    double margin = 0.0;
};

double margin_of(const std::vector<Polynomial>& coeffs, const ComplexPoint& z) {
    uint32_t n = static_cast<uint32_t>(coeffs.size());
    std::vector<std::complex<double>> wz(n);
    double wnorm2 = 0.0, znorm2 = 0.0;
    for (uint32_t j = 0; j < n; ++j) {
        wz[j] = coeffs[j].evaluate(z);
        wnorm2 += std::norm(wz[j]);
        znorm2 += std::norm(z.coordinates[j]);
    }
    if (wnorm2 < 1e-28) return -1.0;
    // Rows (w(z), conj(z)) are proportional exactly at a tangency;
    // the margin is the largest normalized 2x2 minor.
    double best = 0.0;
    for (uint32_t j = 0; j < n; ++j)
        for (uint32_t k = j + 1; k < n; ++k) {
            std::complex<double> minor =
                wz[j] * std::conj(z.coordinates[k]) - wz[k] * std::conj(z.coordinates[j]);
            best = std::max(best, std::abs(minor));
        }
    return best / std::sqrt(wnorm2 * znorm2);
}

}  // namespace

double tangency_margin(const KForm& w, const ComplexPoint& z) {
    if (w.degree() != 1) throw std::invalid_argument("tangency margin expects a one-form");
    uint32_t n = w.ambient_dimension();
    if (z.size() != n) throw std::invalid_argument("point dimension mismatch");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(n);
    for (uint32_t j = 1; j <= n; ++j) coeffs.push_back(w.coefficient({j}));
    return margin_of(coeffs, z);
}

TransversalityReport transversality_sample(const KForm& w, double radius, uint64_t samples,
                                           uint64_t seed, double tol) {
    if (w.degree() != 1) throw std::invalid_argument("transversality sampling expects a one-form");
    uint32_t n = w.ambient_dimension();
    if (n < 2) throw std::invalid_argument("transversality sampling needs n >= 2");
    if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
    if (samples == 0) throw std::invalid_argument("sample count must be positive");

    std::vector<Polynomial> coeffs;
    coeffs.reserve(n);
    for (uint32_t j = 1; j <= n; ++j) coeffs.push_back(w.coefficient({j}));

    std::vector<SampleOutcome> outcomes(samples);
    std::vector<ComplexPoint> points(samples);

    auto worker = [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) {
            ComplexPoint z = sphere_point(n, radius, seed, i);
            double margin = margin_of(coeffs, z);
            points[i] = std::move(z);
            SampleOutcome& out = outcomes[i];
            if (margin < 0.0) {
                out.kind = SampleKind::singular;
                continue;
            }
            out.margin = margin;
            out.kind = margin < tol ? SampleKind::tangent : SampleKind::clear;
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    uint64_t workers = std::min<uint64_t>(std::max(1u, hw), 8);
    if (samples < 256) workers = 1;
    if (workers <= 1) {
        worker(0, samples);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (samples + workers - 1) / workers;
        for (uint64_t t = 0; t < workers; ++t) {
            uint64_t begin = t * chunk;
            uint64_t end = std::min(samples, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    TransversalityReport report;
    report.radius = radius;
    report.samples = samples;
    report.tolerance = tol;
    report.dimension_parity_ok = (n % 2 == 0);
    report.min_margin = std::numeric_limits<double>::infinity();
    for (uint64_t i = 0; i < samples; ++i) {
        switch (outcomes[i].kind) {
            case SampleKind::singular:
                report.singular_points.push_back(points[i]);
                break;
            case SampleKind::tangent:
                report.tangent_points.push_back(points[i]);
                report.min_margin = std::min(report.min_margin, outcomes[i].margin);
                break;
            case SampleKind::clear:
                report.min_margin = std::min(report.min_margin, outcomes[i].margin);
                break;
        }
    }
    if (!std::isfinite(report.min_margin)) report.min_margin = 0.0;
    return report;
}

namespace {

QMatrix coefficient_jacobian_at(const KForm& w, const std::vector<GaussianRational>& p) {
    uint32_t n = w.ambient_dimension();
    QMatrix jac = zero_matrix(n, n);
    for (uint32_t j = 1; j <= n; ++j) {
        Polynomial fj = w.coefficient({j});
        for (uint32_t k = 1; k <= n; ++k) jac[j - 1][k - 1] = fj.partial_derivative(k).evaluate_exact(p);
    }
    return jac;
}

}  // namespace

bool simple_singularity(const KForm& w, const std::vector<GaussianRational>& p) {
    if (w.degree() != 1) throw std::invalid_argument("singularity check expects a one-form");
    uint32_t n = w.ambient_dimension();
    if (p.size() != n) throw std::invalid_argument("point dimension mismatch");
    for (uint32_t j = 1; j <= n; ++j)
        if (!w.coefficient({j}).evaluate_exact(p).is_zero())
            throw std::invalid_argument("not a singular point of the form");
    return !det_bareiss(coefficient_jacobian_at(w, p)).is_zero();
}

Certificate isotropic_dim_bound(const KForm& w, const std::vector<GaussianRational>& p) {
    if (w.degree() != 1) throw std::invalid_argument("isotropic bound expects a one-form");
    uint32_t n = w.ambient_dimension();
    if (p.size() != n) throw std::invalid_argument("point dimension mismatch");
    KForm dw = exterior_derivative(w);
    QMatrix s = zero_matrix(n, n);
    for (const auto& [idx, c] : dw.terms()) {
        GaussianRational v = c.evaluate_exact(p);
        s[idx[0] - 1][idx[1] - 1] = v;
        s[idx[1] - 1][idx[0] - 1] = -v;
    }
    size_t rank = rank_gauss(s);  // even: s is skew
    Certificate cert;
    cert.rank_at_point = static_cast<uint32_t>(rank);
    cert.dim_bound = n - static_cast<uint32_t>(rank / 2);
    cert.kind = rank >= 4 ? Certificate::Kind::no_integral_hypersurface : Certificate::Kind::not_applicable;
    return cert;
}

bool darboux_form_check(const KForm& w, const Polynomial& p, const Polynomial& q) {
    if (w.degree() != 1) throw std::invalid_argument("Darboux check expects a one-form");
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("P and Q cannot both vanish");
    uint32_t n = w.ambient_dimension();
    if (p.ambient_dimension() != n || q.ambient_dimension() != n)
        throw std::invalid_argument("ambient dimension mismatch");
    KForm dp(n, 1), dq(n, 1);
    for (uint32_t j = 1; j <= n; ++j) {
        dp.add_term({j}, p.partial_derivative(j));
        dq.add_term({j}, q.partial_derivative(j));
    }
    return w == (p * dq - q * dp);
}

}  // namespace pfaff
