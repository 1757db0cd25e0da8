#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pfaff/matrixq.hpp"
#include "pfaff/polynomial.hpp"

namespace pfaff {

/// Strictly increasing 1-based variable indices labelling a wedge
/// monomial dz_{i1} ^ ... ^ dz_{ik}.
using IndexTuple = std::vector<uint32_t>;

/// Degree-k exterior form with Polynomial coefficients. Index tuples
/// are canonicalized (sorted with sign tracking) at insertion, zero
/// coefficients are never stored, and any tuple with a repeated index
/// drops out, so forms of degree k > n collapse to zero by themselves.
class KForm {
public:
    using TermMap = std::map<IndexTuple, Polynomial>;

    KForm(uint32_t n, uint32_t k) : n_(n), k_(k) {}

    static KForm zero(uint32_t n, uint32_t k) { return KForm(n, k); }
    static KForm from_polynomial(const Polynomial& p);
    /// The basis one-form dz_j.
    static KForm dz(uint32_t n, uint32_t j);

    uint32_t ambient_dimension() const { return n_; }
    uint32_t degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    /// Coefficient of a (strictly increasing) index tuple; zero if absent.
    Polynomial coefficient(const IndexTuple& idx) const;
    /// The wrapped polynomial of a 0-form.
    Polynomial scalar() const;

    /// Adds c * dz_idx; idx may be unsorted and is canonicalized with
    /// the sign of the sorting permutation.
    void add_term(IndexTuple idx, const Polynomial& c);

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator-(const KForm& a);
    friend KForm operator*(const Polynomial& p, const KForm& w);
    friend KForm operator*(const GaussianRational& c, const KForm& w);

    friend bool operator==(const KForm& a, const KForm& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

private:
    uint32_t n_;
    uint32_t k_;
    TermMap terms_;
};

/// Polynomial vector field sum_j components[j-1] d/dz_j.
struct VectorField {
    uint32_t n;
    std::vector<Polynomial> components;

    VectorField(uint32_t n_, std::vector<Polynomial> comps);
};

/// Polynomial map C^p -> C^n, for pulling forms back along polynomial
/// embeddings; components live in the source variables.
struct PolynomialMap {
    uint32_t source_dim;
    std::vector<Polynomial> components;

    PolynomialMap(uint32_t p, std::vector<Polynomial> comps);
    static PolynomialMap identity(uint32_t n);
    uint32_t target_dim() const { return static_cast<uint32_t>(components.size()); }
};

KForm exterior_derivative(const KForm& w);
KForm wedge(const KForm& a, const KForm& b);
/// Interior product; degree must be >= 1.
KForm contract(const KForm& w, const VectorField& x);
/// R = sum_j z_j d/dz_j.
VectorField radial_field(uint32_t n);
/// Substitutes z_i -> phi_i and dz_i -> d(phi_i), fully expanded.
KForm pullback(const KForm& w, const PolynomialMap& phi);

/// The linear one-form whose dz_i coefficient is (M z)_i.
KForm linear_one_form(const QMatrix& m);
/// Extracts M from a one-form with homogeneous linear coefficients;
/// throws if some coefficient is not linear.
QMatrix coefficient_matrix_of_linear_form(const KForm& w);

}  // namespace pfaff
