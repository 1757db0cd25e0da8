#include "pfaff/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfaff {

namespace {

// Sorts idx ascending; returns 0 for a repeated index, else the sign of
// the sorting permutation.
int canonicalize_tuple(IndexTuple& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        size_t j = i;
        while (j > 0 && idx[j] < idx[j - 1]) {
            std::swap(idx[j], idx[j - 1]);
            --j;
            sign = -sign;
        }
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

}  // namespace

KForm KForm::from_polynomial(const Polynomial& p) {
    KForm w(p.ambient_dimension(), 0);
    if (!p.is_zero()) w.terms_.emplace(IndexTuple{}, p);
    return w;
}

KForm KForm::dz(uint32_t n, uint32_t j) {
    KForm w(n, 1);
    w.add_term({j}, Polynomial::constant(n, GaussianRational(1)));
    return w;
}

Polynomial KForm::coefficient(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Polynomial::zero(n_) : it->second;
}

Polynomial KForm::scalar() const {
    if (k_ != 0) throw std::invalid_argument("scalar() on a form of positive degree");
    auto it = terms_.find(IndexTuple{});
    return it == terms_.end() ? Polynomial::zero(n_) : it->second;
}

void KForm::add_term(IndexTuple idx, const Polynomial& c) {
    if (idx.size() != k_) throw std::invalid_argument("index tuple length does not match form degree");
    if (c.ambient_dimension() != n_) throw std::invalid_argument("coefficient dimension mismatch");
    if (c.is_zero()) return;
    for (uint32_t i : idx)
        if (i < 1 || i > n_) throw std::invalid_argument("differential index out of range");
    int sign = canonicalize_tuple(idx);
    if (sign == 0) return;
    Polynomial signed_c = sign > 0 ? c : -c;
    auto [it, inserted] = terms_.emplace(std::move(idx), std::move(signed_c));
    if (!inserted) {
        it->second += sign > 0 ? c : -c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KForm& KForm::operator+=(const KForm& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("form shape mismatch in +");
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("form shape mismatch in -");
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
}

KForm operator-(const KForm& a) {
    KForm r(a.n_, a.k_);
    for (const auto& [idx, c] : a.terms_) r.terms_.emplace(idx, -c);
    return r;
}

KForm operator*(const Polynomial& p, const KForm& w) {
    if (p.ambient_dimension() != w.n_) throw std::invalid_argument("scaling dimension mismatch");
    KForm r(w.n_, w.k_);
    for (const auto& [idx, c] : w.terms_) r.add_term(idx, p * c);
    return r;
}

KForm operator*(const GaussianRational& c, const KForm& w) {
    KForm r(w.n_, w.k_);
    if (c.is_zero()) return r;
    for (const auto& [idx, pc] : w.terms_) r.terms_.emplace(idx, c * pc);
    return r;
}

VectorField::VectorField(uint32_t n_, std::vector<Polynomial> comps) : n(n_), components(std::move(comps)) {
    if (components.size() != n) throw std::invalid_argument("vector field needs n components");
    for (const auto& p : components)
        if (p.ambient_dimension() != n) throw std::invalid_argument("component dimension mismatch");
}

PolynomialMap::PolynomialMap(uint32_t p, std::vector<Polynomial> comps)
    : source_dim(p), components(std::move(comps)) {
    for (const auto& c : components)
        if (c.ambient_dimension() != source_dim)
            throw std::invalid_argument("map component must live in the source variables");
}

PolynomialMap PolynomialMap::identity(uint32_t n) {
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (uint32_t j = 1; j <= n; ++j) comps.push_back(Polynomial::variable(n, j));
    return PolynomialMap(n, std::move(comps));
}

KForm exterior_derivative(const KForm& w) {
    uint32_t n = w.ambient_dimension();
    KForm r(n, w.degree() + 1);
    for (const auto& [idx, c] : w.terms()) {
        for (uint32_t j = 1; j <= n; ++j) {
            Polynomial dc = c.partial_derivative(j);
            if (dc.is_zero()) continue;
            IndexTuple ext;
            ext.reserve(idx.size() + 1);
            ext.push_back(j);
            ext.insert(ext.end(), idx.begin(), idx.end());
            r.add_term(std::move(ext), dc);
        }
    }
    return r;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.ambient_dimension() != b.ambient_dimension())
        throw std::invalid_argument("wedge dimension mismatch");
    KForm r(a.ambient_dimension(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            IndexTuple idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

KForm contract(const KForm& w, const VectorField& x) {
    if (w.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
    if (w.ambient_dimension() != x.n) throw std::invalid_argument("contraction dimension mismatch");
    KForm r(w.ambient_dimension(), w.degree() - 1);
    for (const auto& [idx, c] : w.terms()) {
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            const Polynomial& comp = x.components[idx[pos] - 1];
            if (comp.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (size_t q = 0; q < idx.size(); ++q)
                if (q != pos) rest.push_back(idx[q]);
            Polynomial part = c * comp;
            if (pos % 2 == 1) part = -part;
            r.add_term(std::move(rest), part);
        }
    }
    return r;
}

VectorField radial_field(uint32_t n) {
    if (n < 1) throw std::invalid_argument("radial field needs n >= 1");
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (uint32_t j = 1; j <= n; ++j) comps.push_back(Polynomial::variable(n, j));
    return VectorField(n, std::move(comps));
}

KForm pullback(const KForm& w, const PolynomialMap& phi) {
    if (phi.target_dim() != w.ambient_dimension())
        throw std::invalid_argument("pullback target dimension mismatch");
    uint32_t p = phi.source_dim;
    // d(phi_i) as one-forms over the source variables, built once.
    std::vector<KForm> dphi;
    dphi.reserve(phi.components.size());
    for (const auto& comp : phi.components) {
        KForm df(p, 1);
        for (uint32_t j = 1; j <= p; ++j) df.add_term({j}, comp.partial_derivative(j));
        dphi.push_back(std::move(df));
    }
    KForm r(p, w.degree());
    for (const auto& [idx, c] : w.terms()) {
        KForm piece = KForm::from_polynomial(c.compose(phi.components));
        for (uint32_t i : idx) piece = wedge(piece, dphi[i - 1]);
        r += piece;
    }
    return r;
}

KForm linear_one_form(const QMatrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("coefficient matrix must be square");
    KForm w(static_cast<uint32_t>(n), 1);
    for (uint32_t i = 1; i <= n; ++i) {
        Polynomial coeff(static_cast<uint32_t>(n));
        for (uint32_t j = 1; j <= n; ++j)
            coeff += m[i - 1][j - 1] * Polynomial::variable(static_cast<uint32_t>(n), j);
        w.add_term({i}, coeff);
    }
    return w;
}

QMatrix coefficient_matrix_of_linear_form(const KForm& w) {
    if (w.degree() != 1) throw std::invalid_argument("expected a one-form");
    uint32_t n = w.ambient_dimension();
    QMatrix m = zero_matrix(n, n);
    for (const auto& [idx, c] : w.terms()) {
        for (const auto& [mono, coeff] : c.terms()) {
            if (mono.total_degree() != 1)
                throw std::invalid_argument("coefficients are not homogeneous linear");
            uint32_t var = 0;
            for (uint32_t v = 0; v < n; ++v)
                if (mono.exponents[v] == 1) var = v + 1;
            m[idx[0] - 1][var - 1] = coeff;
        }
    }
    return m;
}

}  // namespace pfaff
