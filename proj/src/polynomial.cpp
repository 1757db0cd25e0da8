#include "pfaff/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pfaff/univariate.hpp"

namespace pfaff {

Monomial Monomial::variable(uint32_t n, uint32_t j) {
    if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
    std::vector<uint32_t> e(n, 0);
    e[j - 1] = 1;
    return Monomial(std::move(e));
}

uint32_t Monomial::total_degree() const {
    uint32_t d = 0;
    for (uint32_t e : exponents) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += other.exponents[i];
    return r;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
    Monomial r = other;
    for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] -= exponents[i];
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents;  // lex with z1 heaviest
}

ComplexPoint::ComplexPoint(std::vector<std::complex<double>> coords) : coordinates(std::move(coords)) {
    for (const auto& c : coordinates)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("non-finite coordinate in complex point");
}

Polynomial Polynomial::constant(uint32_t n, GaussianRational c) {
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(n), std::move(c));
    return p;
}

Polynomial Polynomial::variable(uint32_t n, uint32_t j) {
    Polynomial p(n);
    p.terms_.emplace(Monomial::variable(n, j), GaussianRational(1));
    return p;
}

Polynomial Polynomial::term(uint32_t n, Monomial m, GaussianRational c) {
    if (m.exponents.size() != n) throw std::invalid_argument("monomial length mismatch");
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total_degree());  // leading term has max degree
}

GaussianRational Polynomial::constant_part() const { return coefficient(Monomial::unit(n_)); }

GaussianRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (m.exponents.size() != n_) throw std::invalid_argument("monomial length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ambient dimension mismatch");
    Polynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    Polynomial r(p.n_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial r = Polynomial::constant(n_, GaussianRational(1));
    for (uint32_t i = 0; i < e; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::partial_derivative(uint32_t j) const {
    if (j < 1 || j > n_) throw std::invalid_argument("derivative index out of range");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponents[j - 1];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exponents[j - 1] = e - 1;
        r.add_term(dm, GaussianRational(Rational(static_cast<long>(e))) * c);
    }
    return r;
}

std::complex<double> Polynomial::evaluate(const ComplexPoint& z) const {
    if (z.size() != n_) throw std::invalid_argument("point dimension mismatch");
    // Per-variable power tables, then one pass over the term map.
    std::vector<uint32_t> max_exp(n_, 0);
    for (const auto& [m, c] : terms_)
        for (uint32_t i = 0; i < n_; ++i) max_exp[i] = std::max(max_exp[i], m.exponents[i]);
    std::vector<std::vector<std::complex<double>>> pows(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        pows[i].resize(max_exp[i] + 1);
        pows[i][0] = 1.0;
        for (uint32_t e = 1; e <= max_exp[i]; ++e) pows[i][e] = pows[i][e - 1] * z.coordinates[i];
    }
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (uint32_t i = 0; i < n_; ++i)
            if (m.exponents[i] != 0) t *= pows[i][m.exponents[i]];
        acc += t;
    }
    return acc;
}

GaussianRational Polynomial::evaluate_exact(const std::vector<GaussianRational>& z) const {
    if (z.size() != n_) throw std::invalid_argument("point dimension mismatch");
    std::vector<uint32_t> max_exp(n_, 0);
    for (const auto& [m, c] : terms_)
        for (uint32_t i = 0; i < n_; ++i) max_exp[i] = std::max(max_exp[i], m.exponents[i]);
    std::vector<std::vector<GaussianRational>> pows(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        pows[i].resize(max_exp[i] + 1);
        pows[i][0] = GaussianRational(1);
        for (uint32_t e = 1; e <= max_exp[i]; ++e) pows[i][e] = pows[i][e - 1] * z[i];
    }
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (uint32_t i = 0; i < n_; ++i)
            if (m.exponents[i] != 0) t *= pows[i][m.exponents[i]];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() != n_) throw std::invalid_argument("composition needs one image per variable");
    uint32_t m = n_ ? images.front().ambient_dimension() : 0;
    for (const auto& img : images)
        if (img.ambient_dimension() != m) throw std::invalid_argument("image dimension mismatch");
    std::vector<uint32_t> max_exp(n_, 0);
    for (const auto& [mo, c] : terms_)
        for (uint32_t i = 0; i < n_; ++i) max_exp[i] = std::max(max_exp[i], mo.exponents[i]);
    std::vector<std::vector<Polynomial>> pows(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        pows[i].reserve(max_exp[i] + 1);
        pows[i].push_back(Polynomial::constant(m, GaussianRational(1)));
        for (uint32_t e = 1; e <= max_exp[i]; ++e) pows[i].push_back(pows[i].back() * images[i]);
    }
    Polynomial acc(m);
    for (const auto& [mo, c] : terms_) {
        Polynomial t = Polynomial::constant(m, c);
        for (uint32_t i = 0; i < n_; ++i)
            if (mo.exponents[i] != 0) t *= pows[i][mo.exponents[i]];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::lift(uint32_t new_n) const {
    if (new_n < n_) throw std::invalid_argument("lift cannot shrink the ambient dimension");
    Polynomial r(new_n);
    for (const auto& [m, c] : terms_) {
        Monomial lm = m;
        lm.exponents.resize(new_n, 0);
        r.terms_.emplace(std::move(lm), c);
    }
    return r;
}

std::vector<std::pair<uint32_t, Polynomial>> Polynomial::homogeneous_components() const {
    std::map<uint32_t, Polynomial> buckets;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = buckets.try_emplace(m.total_degree(), n_);
        it->second.add_term(m, c);
    }
    std::vector<std::pair<uint32_t, Polynomial>> out;
    out.reserve(buckets.size());
    for (auto& [d, p] : buckets) out.emplace_back(d, std::move(p));
    return out;
}

std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (f.ambient_dimension() != g.ambient_dimension())
        throw std::invalid_argument("ambient dimension mismatch");
    const auto& lead = *f.terms().begin();
    Polynomial quotient(f.ambient_dimension());
    Polynomial rest = g;
    // Single-divisor division: any leading term not divisible by LT(f)
    // can never cancel later, so divisibility fails right there.
    while (!rest.is_zero()) {
        const auto& [rm, rc] = *rest.terms().begin();
        if (!lead.first.divides(rm)) return std::nullopt;
        Polynomial t = Polynomial::term(f.ambient_dimension(), lead.first.quotient_into(rm), rc / lead.second);
        quotient += t;
        rest -= t * f;
    }
    return quotient;
}

bool divides(const Polynomial& f, const Polynomial& g) { return exact_quotient(g, f).has_value(); }

namespace {

// Restriction of f to the affine line z = a + u*b as a univariate
// polynomial in u.
UPoly restrict_to_line(const Polynomial& f, const std::vector<GaussianRational>& a,
                       const std::vector<GaussianRational>& b) {
    uint32_t n = f.ambient_dimension();
    std::vector<uint32_t> max_exp(n, 0);
    for (const auto& [m, c] : f.terms())
        for (uint32_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], m.exponents[i]);
    std::vector<std::vector<UPoly>> pows(n);
    for (uint32_t i = 0; i < n; ++i) {
        pows[i].push_back(UPoly{GaussianRational(1)});
        UPoly line{a[i], b[i]};
        utrim(line);
        for (uint32_t e = 1; e <= max_exp[i]; ++e) pows[i].push_back(umul(pows[i].back(), line));
    }
    UPoly acc;
    for (const auto& [m, c] : f.terms()) {
        UPoly t{c};
        for (uint32_t i = 0; i < n; ++i)
            if (m.exponents[i] != 0) t = umul(t, pows[i][m.exponents[i]]);
        acc = uadd(acc, t);
    }
    return acc;
}

}  // namespace

SquarefreeVerdict squarefree_probe(const Polynomial& f, uint32_t trials, uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("squarefree probe on the zero polynomial");
    if (f.is_constant()) throw std::invalid_argument("squarefree probe on a constant");
    uint32_t n = f.ambient_dimension();
    std::mt19937_64 rng(seed);
    // Wide coordinate range keeps the probability of a squarefree f
    // hitting the discriminant of its own line restriction negligible.
    std::uniform_int_distribution<long> coord(-(1L << 20), 1L << 20);
    uint32_t done = 0;
    int attempts = 0;
    while (done < trials) {
        if (++attempts > static_cast<int>(trials) * 20 + 100)
            throw std::runtime_error("squarefree probe failed to find non-degenerate lines");
        std::vector<GaussianRational> a(n), b(n);
        for (uint32_t i = 0; i < n; ++i) {
            a[i] = GaussianRational(Rational(coord(rng)));
            b[i] = GaussianRational(Rational(coord(rng)));
        }
        UPoly g = restrict_to_line(f, a, b);
        if (udegree(g) < 1) continue;  // degenerate line, try another
        UPoly d = ugcd(g, uderivative(g));
        if (udegree(d) >= 1) return SquarefreeVerdict::not_reduced;
        ++done;
    }
    return SquarefreeVerdict::probably_reduced;
}

}  // namespace pfaff
