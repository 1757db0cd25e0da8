#include "pfaff/univariate.hpp"

#include <stdexcept>

namespace pfaff {

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udegree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    utrim(r);
    return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly uscale(const GaussianRational& c, const UPoly& p) {
    if (c.is_zero()) return {};
    UPoly r = p;
    for (auto& x : r) x *= c;
    return r;
}

UPoly uderivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = GaussianRational(Rational(static_cast<long>(i))) * p[i];
    utrim(r);
    return r;
}

GaussianRational ueval(const UPoly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::complex<double> ueval(const UPoly& p, const std::complex<double>& x) {
    std::complex<double> acc = 0.0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].to_complex();
    return acc;
}

UPoly urem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::invalid_argument("univariate remainder by zero");
    UPoly r = a;
    utrim(r);
    while (r.size() >= b.size()) {
        GaussianRational q = r.back() / b.back();
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
        r.pop_back();
        utrim(r);
        if (r.empty()) break;
    }
    return r;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussianRational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

UPoly uinterpolate(const std::vector<GaussianRational>& nodes, const std::vector<GaussianRational>& values) {
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolation arity mismatch");
    UPoly acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
        UPoly basis{GaussianRational(1)};
        GaussianRational denom(1);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = umul(basis, UPoly{-nodes[j], GaussianRational(1)});
            denom *= nodes[i] - nodes[j];
        }
        acc = uadd(acc, uscale(values[i] / denom, basis));
    }
    utrim(acc);
    return acc;
}

}  // namespace pfaff
