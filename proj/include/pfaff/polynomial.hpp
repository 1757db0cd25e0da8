#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff {

/// Exponent vector of a power product z1^e1 ... zn^en. The length is
/// fixed by the ambient dimension of the owning polynomial.
struct Monomial {
    std::vector<uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> e) : exponents(std::move(e)) {}
    static Monomial unit(uint32_t n) { return Monomial(std::vector<uint32_t>(n, 0)); }
    static Monomial variable(uint32_t n, uint32_t j);  // j is 1-based

    uint32_t total_degree() const;
    bool is_unit() const { return total_degree() == 0; }
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// other / this; caller guarantees divisibility.
    Monomial quotient_into(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

/// Graded-lexicographic "greater" predicate: higher total degree first,
/// ties broken lexicographically with z1 heaviest. Used as the map
/// comparator so iteration always starts at the leading term.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// A point of C^n with double-precision coordinates, the numeric bridge
/// for sphere sampling. Entries are checked finite on construction.
struct ComplexPoint {
    std::vector<std::complex<double>> coordinates;

    ComplexPoint() = default;
    explicit ComplexPoint(std::vector<std::complex<double>> coords);
    size_t size() const { return coordinates.size(); }
};

/// Sparse multivariate polynomial over Q(i) in a fixed ambient
/// dimension n. The term map never stores a zero coefficient and the
/// zero polynomial is the empty map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, GrlexGreater>;

    explicit Polynomial(uint32_t n) : n_(n) {}

    static Polynomial zero(uint32_t n) { return Polynomial(n); }
    static Polynomial constant(uint32_t n, GaussianRational c);
    static Polynomial variable(uint32_t n, uint32_t j);  // z_j, 1-based
    static Polynomial term(uint32_t n, Monomial m, GaussianRational c);

    uint32_t ambient_dimension() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    GaussianRational constant_part() const;
    /// Coefficient of a monomial (zero if absent).
    GaussianRational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const GaussianRational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal partial derivative with respect to z_j (1-based).
    Polynomial partial_derivative(uint32_t j) const;

    /// Numeric evaluation with per-variable power tables; term order is
    /// the canonical map order, so results are deterministic.
    std::complex<double> evaluate(const ComplexPoint& z) const;
    /// Exact evaluation at a Q(i)-rational point.
    GaussianRational evaluate_exact(const std::vector<GaussianRational>& z) const;

    /// Substitute z_j -> images[j-1]; all images share one ambient
    /// dimension, which becomes the ambient dimension of the result.
    Polynomial compose(const std::vector<Polynomial>& images) const;

    /// Reinterpret in a larger ambient dimension (new variables unused).
    Polynomial lift(uint32_t new_n) const;

    /// Splits into homogeneous parts, degrees strictly increasing; the
    /// parts sum back to the polynomial.
    std::vector<std::pair<uint32_t, Polynomial>> homogeneous_components() const;

private:
    uint32_t n_;
    TermMap terms_;
};

/// f | g over Q(i)[z1..zn] as principal-ideal membership, decided by
/// single-divisor division under graded-lex order (remainder zero iff
/// divisible). Returns the exact quotient when it exists.
std::optional<Polynomial> exact_quotient(const Polynomial& g, const Polynomial& f);
bool divides(const Polynomial& f, const Polynomial& g);

enum class SquarefreeVerdict { probably_reduced, not_reduced };

/// Probabilistic reducedness probe: restricts f to `trials` random
/// affine lines and runs the univariate gcd(g, g') squarefreeness test
/// on each. A square factor survives restriction to every line, so one
/// failing line already decides not-reduced.
SquarefreeVerdict squarefree_probe(const Polynomial& f, uint32_t trials, uint64_t seed);

}  // namespace pfaff
