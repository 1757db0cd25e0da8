#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pfaff/forms.hpp"

namespace pfaff {

/// Outcome of numeric sphere sampling for a one-form. A tangency is a
/// sample where the covectors w(z) and conj(z) are complex-proportional
/// (normalized 2x2 minor margin below tolerance); samples where w(z)
/// vanishes numerically are singular hits, kept apart from tangencies.
struct TransversalityReport {
    double radius = 0.0;
    uint64_t samples = 0;
    std::vector<ComplexPoint> tangent_points;
    std::vector<ComplexPoint> singular_points;
    double min_margin = 0.0;
    bool dimension_parity_ok = false;
    double tolerance = 0.0;

    bool transversal_everywhere() const {
        return tangent_points.empty() && singular_points.empty();
    }
};

/// Exact rank certificate for d(omega) at a point. rank_at_point is
/// even; dim_bound = n - rank/2 bounds the dimension of any integral
/// manifold through the point, and rank >= 4 rules out a hypersurface.
struct Certificate {
    enum class Kind { no_integral_hypersurface, not_applicable };
    Kind kind = Kind::not_applicable;
    uint32_t rank_at_point = 0;
    uint32_t dim_bound = 0;
};

/// Returns (w ^ dw, w ^ dw == 0); the boolean is the Frobenius
/// integrability verdict.
std::pair<KForm, bool> integrability_obstruction(const KForm& w);

/// True iff every coefficient of w ^ df is divisible by f, i.e. {f=0}
/// is invariant for Ker(w). f must be nonzero and nonconstant, and is
/// assumed reduced (see squarefree_probe).
bool invariant_hypersurface(const KForm& w, const Polynomial& f);

/// True iff w . R == 0 exactly; forces transversality to every sphere
/// centered at the origin.
bool radial_annihilation(const KForm& w);

/// Normalized tangency margin at one point: the largest 2x2 minor of
/// the rows (w(z), conj(z)) divided by the row norms. Zero exactly at
/// a tangency; -1 signals a numeric zero of w (a singular hit).
double tangency_margin(const KForm& w, const ComplexPoint& z);

TransversalityReport transversality_sample(const KForm& w, double radius, uint64_t samples,
                                           uint64_t seed, double tol);

/// Exact check that the coefficient Jacobian of w is nonsingular at a
/// singular point p; throws if w(p) != 0.
bool simple_singularity(const KForm& w, const std::vector<GaussianRational>& p);

Certificate isotropic_dim_bound(const KForm& w, const std::vector<GaussianRational>& p);

/// True iff w == P dQ - Q dP exactly.
bool darboux_form_check(const KForm& w, const Polynomial& p, const Polynomial& q);

}  // namespace pfaff
