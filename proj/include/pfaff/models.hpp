#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/forms.hpp"
#include "pfaff/matrixq.hpp"

namespace pfaff {

/// Skew-symmetric complex-rational matrix of even size 2m; the
/// a[j][i] == -a[i][j] invariant is validated at construction.
class SkewMatrix {
public:
    explicit SkewMatrix(QMatrix entries);
    static SkewMatrix zero(uint32_t size);

    uint32_t size() const { return static_cast<uint32_t>(entries_.size()); }
    const GaussianRational& at(uint32_t i, uint32_t j) const { return entries_[i][j]; }
    const QMatrix& entries() const { return entries_; }
    /// Sets a[i][j] = v and a[j][i] = -v; i == j requires v == 0.
    void set(uint32_t i, uint32_t j, const GaussianRational& v);

    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.entries_ == b.entries_; }

private:
    QMatrix entries_;
};

/// Block-diagonal skew matrix of size 2m with 2x2 blocks [[0,-1],[1,0]].
SkewMatrix canonical_j(uint32_t m);

/// The linear one-form sum_i (A z)_i dz_i. For canonical_j(m) this is
/// sum_j (z_{2j-1} dz_{2j} - z_{2j} dz_{2j-1}).
KForm omega_from_skew(const SkewMatrix& a);

struct PoincareDulacPair {
    KForm omega;
    VectorField xi;
};

/// The normal-form pair for exponents ell = (l_1..l_m) on C^{2m}:
///   omega = sum_j [ z_{2j-1} dz_{2j} - (l_j z_{2j} + z_{2j-1}^{l_j}) dz_{2j-1} ]
///   xi    = sum_j [ (l_j z_{2j} + z_{2j-1}^{l_j}) d/dz_{2j} + z_{2j-1} d/dz_{2j-1} ]
/// with omega . xi == 0 by construction.
PoincareDulacPair poincare_dulac(const std::vector<uint32_t>& ell);

/// df + f*nu with f = (1/2) sum_{j<=2m} z_j^2: a non-integrable form
/// with {f=0} invariant and a simple singularity at the origin.
/// Requires nu of degree <= 1 coefficients and d(nu)(0) nondegenerate.
KForm invariant_quadric_form(const KForm& nu, uint32_t m);
/// The quadric (1/2) sum_{j<=2m} z_j^2 used above.
Polynomial half_sum_of_squares(uint32_t m);

/// Exact Pfaffian by recursive first-row expansion; Pf(A)^2 == det(A).
GaussianRational pfaffian(const SkewMatrix& a);

/// Deterministic skew matrix with small Gaussian-integer entries; when
/// require_nonsingular is set, resamples until det != 0 (exact test).
SkewMatrix random_skew(uint32_t m, uint64_t seed, bool require_nonsingular);

/// A piecewise path 0 -> 1 in the complex s-plane along which
/// p(s) = det((1-s)A + sB) stays away from zero. Every emitted waypoint
/// carries |p(s)|, re-checked against the clearance on the exact
/// interpolated polynomial.
struct PathPlan {
    QMatrix from;
    QMatrix to;
    std::vector<std::complex<double>> waypoints;
    std::vector<double> abs_p;
    double clearance = 0.0;
    /// Exact coefficients of p(s), increasing degree.
    std::vector<GaussianRational> det_poly;
};

PathPlan skew_path(const SkewMatrix& a, const SkewMatrix& b, double clearance, uint64_t samples);

/// The rescaling family t^{-1} w(tz): splits w into one-forms with
/// homogeneous coefficients w = sum_nu w_nu and evaluates
/// w^t = sum_nu t^{nu-1} w_nu. Requires w to have no constant
/// coefficient part, so the family extends to t = 0 with value w_1.
class DeformationFamily {
public:
    DeformationFamily(KForm base, std::vector<std::pair<uint32_t, KForm>> components);

    const KForm& base() const { return base_; }
    const std::vector<std::pair<uint32_t, KForm>>& components() const { return components_; }

    KForm evaluate_at(const GaussianRational& t) const;
    /// The family as a single form on n+1 variables with t = z_{n+1}.
    KForm symbolic_in_t() const;

private:
    KForm base_;
    std::vector<std::pair<uint32_t, KForm>> components_;
};

DeformationFamily radial_deformation(const KForm& w);

/// File format: {"m": int, "entries": [[[re_num, re_den, im_num, im_den], ...], ...]};
/// skewness is validated on load.
SkewMatrix load_skew_matrix(const std::string& path);
void save_skew_matrix(const SkewMatrix& a, const std::string& path);
std::string skew_matrix_to_json(const SkewMatrix& a);
SkewMatrix skew_matrix_from_json(const std::string& text);

}  // namespace pfaff
