#include "pfaff/models.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pfaff/univariate.hpp"

namespace pfaff {

SkewMatrix::SkewMatrix(QMatrix entries) : entries_(std::move(entries)) {
    size_t n = entries_.size();
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("skew matrix size must be a positive even number");
    for (const auto& row : entries_)
        if (row.size() != n) throw std::invalid_argument("skew matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j)
            if (entries_[i][j] != -entries_[j][i])
                throw std::invalid_argument("matrix is not skew-symmetric");
}

SkewMatrix SkewMatrix::zero(uint32_t size) { return SkewMatrix(zero_matrix(size, size)); }

void SkewMatrix::set(uint32_t i, uint32_t j, const GaussianRational& v) {
    if (i >= size() || j >= size()) throw std::invalid_argument("skew matrix index out of range");
    if (i == j) {
        if (!v.is_zero()) throw std::invalid_argument("diagonal of a skew matrix must vanish");
        return;
    }
    entries_[i][j] = v;
    entries_[j][i] = -v;
}

SkewMatrix canonical_j(uint32_t m) {
    if (m < 1) throw std::invalid_argument("canonical_j needs m >= 1");
    SkewMatrix a = SkewMatrix::zero(2 * m);
    for (uint32_t j = 0; j < m; ++j) a.set(2 * j, 2 * j + 1, GaussianRational(-1));
    return a;
}

KForm omega_from_skew(const SkewMatrix& a) {
    // Coefficient of dz_i is (A z)_i, so canonical_j(m) yields
    // sum_j (z_{2j-1} dz_{2j} - z_{2j} dz_{2j-1}).
    return linear_one_form(a.entries());
}

PoincareDulacPair poincare_dulac(const std::vector<uint32_t>& ell) {
    if (ell.empty()) throw std::invalid_argument("exponent list must be nonempty");
    for (uint32_t l : ell)
        if (l < 1) throw std::invalid_argument("exponents must be positive");
    uint32_t m = static_cast<uint32_t>(ell.size());
    uint32_t n = 2 * m;
    KForm omega(n, 1);
    std::vector<Polynomial> xi_comps(n, Polynomial::zero(n));
    for (uint32_t j = 0; j < m; ++j) {
        uint32_t odd = 2 * j + 1, even = 2 * j + 2;  // z_{2j-1}, z_{2j} (1-based)
        Polynomial z_odd = Polynomial::variable(n, odd);
        Polynomial z_even = Polynomial::variable(n, even);
        Polynomial mixed = GaussianRational(Rational(static_cast<long>(ell[j]))) * z_even + z_odd.pow(ell[j]);
        omega.add_term({even}, z_odd);
        omega.add_term({odd}, -mixed);
        xi_comps[even - 1] = mixed;
        xi_comps[odd - 1] = z_odd;
    }
    return {std::move(omega), VectorField(n, std::move(xi_comps))};
}

Polynomial half_sum_of_squares(uint32_t m) {
    uint32_t n = 2 * m;
    Polynomial f(n);
    GaussianRational half(make_rational(1, 2));
    for (uint32_t j = 1; j <= n; ++j) f += half * (Polynomial::variable(n, j) * Polynomial::variable(n, j));
    return f;
}

KForm invariant_quadric_form(const KForm& nu, uint32_t m) {
    if (m < 1) throw std::invalid_argument("invariant quadric form needs m >= 1");
    uint32_t n = 2 * m;
    if (nu.degree() != 1 || nu.ambient_dimension() != n)
        throw std::invalid_argument("nu must be a one-form on C^{2m}");
    for (const auto& [idx, c] : nu.terms())
        if (c.total_degree() > 1)
            throw std::invalid_argument("nu must have coefficients of degree at most one");
    // d(nu)(0) must be nondegenerate: exact rank of its constant part.
    KForm dnu = exterior_derivative(nu);
    QMatrix s = zero_matrix(n, n);
    std::vector<GaussianRational> origin(n);
    for (const auto& [idx, c] : dnu.terms()) {
        GaussianRational v = c.evaluate_exact(origin);
        s[idx[0] - 1][idx[1] - 1] = v;
        s[idx[1] - 1][idx[0] - 1] = -v;
    }
    if (rank_gauss(s) != n) throw std::invalid_argument("d(nu) is degenerate at the origin");
    Polynomial f = half_sum_of_squares(m);
    KForm df(n, 1);
    for (uint32_t j = 1; j <= n; ++j) df.add_term({j}, f.partial_derivative(j));
    return df + f * nu;
}

namespace {

GaussianRational pfaffian_rec(const QMatrix& a, std::vector<uint32_t>& live) {
    if (live.empty()) return GaussianRational(1);
    // Expansion along the first live row:
    //   Pf(A) = sum_j (-1)^j a[i0][ij] Pf(A without rows/cols i0, ij).
    uint32_t i0 = live[0];
    GaussianRational acc;
    for (size_t j = 1; j < live.size(); ++j) {
        const GaussianRational& aij = a[i0][live[j]];
        if (aij.is_zero()) continue;
        std::vector<uint32_t> rest;
        rest.reserve(live.size() - 2);
        for (size_t q = 1; q < live.size(); ++q)
            if (q != j) rest.push_back(live[q]);
        GaussianRational sub = pfaffian_rec(a, rest);
        GaussianRational term = aij * sub;
        if (j % 2 == 0) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

GaussianRational pfaffian(const SkewMatrix& a) {
    std::vector<uint32_t> live(a.size());
    for (uint32_t i = 0; i < a.size(); ++i) live[i] = i;
    return pfaffian_rec(a.entries(), live);
}

SkewMatrix random_skew(uint32_t m, uint64_t seed, bool require_nonsingular) {
    if (m < 1) throw std::invalid_argument("random_skew needs m >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-3, 3);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        SkewMatrix a = SkewMatrix::zero(2 * m);
        for (uint32_t i = 0; i < 2 * m; ++i)
            for (uint32_t j = i + 1; j < 2 * m; ++j)
                a.set(i, j, GaussianRational(Rational(small(rng)), Rational(small(rng))));
        if (!require_nonsingular || !det_bareiss(a.entries()).is_zero()) return a;
    }
    throw std::runtime_error("failed to sample a nonsingular skew matrix");
}

namespace {

// Exact det((1-s)A + sB) as a polynomial in s, by interpolation at the
// integer nodes 0..2m (the degree is at most 2m).
UPoly pencil_det_poly(const SkewMatrix& a, const SkewMatrix& b) {
    uint32_t n = a.size();
    std::vector<GaussianRational> nodes, values;
    for (uint32_t t = 0; t <= n; ++t) {
        GaussianRational s(Rational(static_cast<long>(t)));
        GaussianRational one_minus_s = GaussianRational(1) - s;
        QMatrix m = zero_matrix(n, n);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) m[i][j] = one_minus_s * a.at(i, j) + s * b.at(i, j);
        nodes.push_back(s);
        values.push_back(det_bareiss(std::move(m)));
    }
    return uinterpolate(nodes, values);
}

std::vector<std::complex<double>> roots_companion(const UPoly& p) {
    int d = udegree(p);
    if (d <= 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    std::complex<double> lead = p.back().to_complex();
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -p[i].to_complex() / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<std::complex<double>> roots(solver.eigenvalues().data(),
                                            solver.eigenvalues().data() + d);
    // Deterministic obstacle order: by real part, ties by magnitude.
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return std::abs(x) < std::abs(y);
    });
    return roots;
}

struct PathSegment {
    // Straight piece z(u) = a + u*(b-a) or an upper-half-plane arc
    // z(u) = c + r*exp(i*pi*(1-u)) traversed left to right, u in [0,1].
    bool is_arc = false;
    std::complex<double> a, b;
    double center = 0.0, radius = 0.0;

    double length() const { return is_arc ? M_PI * radius : std::abs(b - a); }
    std::complex<double> at(double u) const {
        if (!is_arc) return a + u * (b - a);
        double angle = M_PI * (1.0 - u);
        return {center + radius * std::cos(angle), radius * std::sin(angle)};
    }
};

std::vector<PathSegment> build_segments(const std::vector<std::complex<double>>& roots, double r) {
    // Merge the real intervals shadowed by roots close to [0,1] into
    // detour arcs; everything else stays on the real axis.
    std::vector<std::pair<double, double>> intervals;
    for (const auto& rt : roots) {
        if (std::abs(rt.imag()) >= r) continue;
        double x = rt.real();
        if (x < -r || x > 1.0 + r) continue;
        double lo = std::max(0.0, x - r);
        double hi = std::min(1.0, x + r);
        if (lo < hi) intervals.emplace_back(lo, hi);
    }
    std::sort(intervals.begin(), intervals.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : intervals) {
        if (!merged.empty() && iv.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    std::vector<PathSegment> segs;
    double cursor = 0.0;
    for (const auto& [lo, hi] : merged) {
        if (lo > cursor) {
            PathSegment straight;
            straight.a = cursor;
            straight.b = lo;
            segs.push_back(straight);
        }
        PathSegment arc;
        arc.is_arc = true;
        arc.center = 0.5 * (lo + hi);
        arc.radius = 0.5 * (hi - lo);
        segs.push_back(arc);
        cursor = hi;
    }
    if (cursor < 1.0 || segs.empty()) {
        PathSegment straight;
        straight.a = cursor;
        straight.b = 1.0;
        segs.push_back(straight);
    }
    return segs;
}

std::vector<std::complex<double>> emit_waypoints(const std::vector<PathSegment>& segs, uint64_t count) {
    double total = 0.0;
    for (const auto& s : segs) total += s.length();
    std::vector<std::complex<double>> pts;
    pts.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        double target = total * static_cast<double>(i) / static_cast<double>(count - 1);
        double walked = 0.0;
        std::complex<double> z = segs.back().at(1.0);
        for (const auto& s : segs) {
            double len = s.length();
            if (target <= walked + len || &s == &segs.back()) {
                double u = len > 0.0 ? std::clamp((target - walked) / len, 0.0, 1.0) : 1.0;
                z = s.at(u);
                break;
            }
            walked += len;
        }
        pts.push_back(z);
    }
    pts.front() = 0.0;  // endpoints exact by contract
    pts.back() = 1.0;
    return pts;
}

// |p(s)|^2 at an exact rationalized waypoint, compared exactly against
// clearance^2; doubles convert to rationals without loss.
bool waypoint_clear(const UPoly& p, const std::complex<double>& s, const Rational& clearance2,
                    double* abs_out) {
    GaussianRational sx(Rational(s.real()), Rational(s.imag()));
    GaussianRational v = ueval(p, sx);
    Rational mag2 = v.norm2();
    *abs_out = std::sqrt(mag2.get_d());
    return mag2 >= clearance2;
}

}  // namespace

PathPlan skew_path(const SkewMatrix& a, const SkewMatrix& b, double clearance, uint64_t samples) {
    if (a.size() != b.size()) throw std::invalid_argument("path endpoints must have equal size");
    if (!(clearance > 0.0)) throw std::invalid_argument("clearance must be positive");
    if (samples < 2) throw std::invalid_argument("need at least two waypoints");
    if (det_bareiss(a.entries()).is_zero() || det_bareiss(b.entries()).is_zero())
        throw std::invalid_argument("path endpoints must be nonsingular");

    UPoly p = pencil_det_poly(a, b);
    Rational clearance2 = Rational(clearance) * Rational(clearance);
    std::vector<std::complex<double>> roots = roots_companion(p);

    PathPlan plan;
    plan.from = a.entries();
    plan.to = b.entries();
    plan.clearance = clearance;
    plan.det_poly = p;

    std::string last_failure;
    for (double radius : {0.03125, 0.0625, 0.125, 0.25, 0.375, 0.4999}) {
        std::vector<PathSegment> segs = build_segments(roots, radius);
        std::vector<std::complex<double>> waypoints = emit_waypoints(segs, samples);
        std::vector<double> abs_p(waypoints.size());
        bool ok = true;
        for (size_t i = 0; i < waypoints.size() && ok; ++i) {
            if (!waypoint_clear(p, waypoints[i], clearance2, &abs_p[i])) {
                std::ostringstream msg;
                msg << "|p| = " << abs_p[i] << " < clearance at s = (" << waypoints[i].real() << ", "
                    << waypoints[i].imag() << "), detour radius " << radius;
                last_failure = msg.str();
                ok = false;
            }
        }
        if (ok) {
            plan.waypoints = std::move(waypoints);
            plan.abs_p = std::move(abs_p);
            return plan;
        }
    }
    throw std::runtime_error("no admissible path found: " + last_failure);
}

DeformationFamily::DeformationFamily(KForm base, std::vector<std::pair<uint32_t, KForm>> components)
    : base_(std::move(base)), components_(std::move(components)) {}

KForm DeformationFamily::evaluate_at(const GaussianRational& t) const {
    KForm acc(base_.ambient_dimension(), 1);
    GaussianRational one(1);
    for (const auto& [nu, part] : components_) {
        GaussianRational scale = one;
        for (uint32_t e = 1; e < nu; ++e) scale *= t;
        acc += scale * part;
    }
    return acc;
}

KForm DeformationFamily::symbolic_in_t() const {
    uint32_t n = base_.ambient_dimension();
    KForm acc(n + 1, 1);
    for (const auto& [nu, part] : components_) {
        Monomial tpow = Monomial::unit(n + 1);
        tpow.exponents[n] = nu - 1;
        Polynomial scale = Polynomial::term(n + 1, tpow, GaussianRational(1));
        for (const auto& [idx, c] : part.terms()) acc.add_term(idx, scale * c.lift(n + 1));
    }
    return acc;
}

DeformationFamily radial_deformation(const KForm& w) {
    if (w.degree() != 1) throw std::invalid_argument("radial deformation expects a one-form");
    std::map<uint32_t, KForm> buckets;
    for (const auto& [idx, c] : w.terms()) {
        for (const auto& [deg, part] : c.homogeneous_components()) {
            if (deg == 0)
                throw std::invalid_argument(
                    "form has a constant coefficient part; the family does not extend to t = 0");
            auto [it, inserted] = buckets.try_emplace(deg, KForm(w.ambient_dimension(), 1));
            it->second.add_term(idx, part);
        }
    }
    std::vector<std::pair<uint32_t, KForm>> components;
    components.reserve(buckets.size());
    for (auto& [deg, part] : buckets) components.emplace_back(deg, std::move(part));
    return DeformationFamily(w, std::move(components));
}

namespace {

nlohmann::json rational_pair_json(const GaussianRational& v) {
    auto num_json = [](const mpz_class& z) -> nlohmann::json {
        if (z.fits_slong_p()) return z.get_si();
        return z.get_str();
    };
    return nlohmann::json::array({num_json(v.re.get_num()), num_json(v.re.get_den()),
                                  num_json(v.im.get_num()), num_json(v.im.get_den())});
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("matrix entry parts must be integers");
}

}  // namespace

std::string skew_matrix_to_json(const SkewMatrix& a) {
    nlohmann::json j;
    j["m"] = a.size() / 2;
    nlohmann::json rows = nlohmann::json::array();
    for (uint32_t i = 0; i < a.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (uint32_t k = 0; k < a.size(); ++k) row.push_back(rational_pair_json(a.at(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump(2);
}

SkewMatrix skew_matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("m") || !j.contains("entries"))
        throw std::invalid_argument("matrix file needs \"m\" and \"entries\"");
    uint32_t m = j["m"].get<uint32_t>();
    const auto& rows = j["entries"];
    if (!rows.is_array() || rows.size() != 2 * m)
        throw std::invalid_argument("entries must be a 2m x 2m array");
    QMatrix entries = zero_matrix(2 * m, 2 * m);
    for (uint32_t i = 0; i < 2 * m; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 2 * m)
            throw std::invalid_argument("entries must be a 2m x 2m array");
        for (uint32_t k = 0; k < 2 * m; ++k) {
            const auto& cell = rows[i][k];
            if (!cell.is_array() || cell.size() != 4)
                throw std::invalid_argument("each entry must be [re_num, re_den, im_num, im_den]");
            mpz_class rn = mpz_from_json(cell[0]), rd = mpz_from_json(cell[1]);
            mpz_class in = mpz_from_json(cell[2]), id = mpz_from_json(cell[3]);
            if (rd == 0 || id == 0) throw std::invalid_argument("matrix entry with zero denominator");
            Rational re(rn, rd), im(in, id);
            re.canonicalize();
            im.canonicalize();
            entries[i][k] = GaussianRational(re, im);
        }
    }
    return SkewMatrix(std::move(entries));  // validates skewness
}

SkewMatrix load_skew_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return skew_matrix_from_json(buf.str());
}

void save_skew_matrix(const SkewMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write matrix file: " + path);
    out << skew_matrix_to_json(a) << "\n";
}

}  // namespace pfaff
