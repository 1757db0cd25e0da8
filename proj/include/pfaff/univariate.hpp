#pragma once

#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff {

/// Dense univariate polynomial over Q(i), coefficients in increasing
/// degree. Shared by the squarefreeness probe (restriction to lines)
/// and the path planner (exact interpolation of det((1-s)A + sB)).
using UPoly = std::vector<GaussianRational>;

void utrim(UPoly& p);
int udegree(const UPoly& p);  // -1 for zero
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(const GaussianRational& c, const UPoly& p);
UPoly uderivative(const UPoly& p);
GaussianRational ueval(const UPoly& p, const GaussianRational& x);
std::complex<double> ueval(const UPoly& p, const std::complex<double>& x);
/// Remainder of a by b (b nonzero), both over the field Q(i).
UPoly urem(const UPoly& a, const UPoly& b);
/// Monic gcd via the Euclidean algorithm.
UPoly ugcd(UPoly a, UPoly b);

/// Exact Lagrange interpolation through (nodes[i], values[i]); the
/// nodes must be pairwise distinct.
UPoly uinterpolate(const std::vector<GaussianRational>& nodes, const std::vector<GaussianRational>& values);

}  // namespace pfaff
