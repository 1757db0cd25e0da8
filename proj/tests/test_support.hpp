#pragma once

#include <complex>
#include <random>
#include <vector>

#include "pfaff/forms.hpp"
#include "pfaff/matrixq.hpp"
#include "pfaff/polynomial.hpp"

namespace pfaff::testing {

struct TestRng {
    std::mt19937_64 eng;
    explicit TestRng(uint64_t seed) : eng(seed) {}

    long int_in(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng);
    }

    // Small Gaussian-rational coefficient, mostly real, denominator 1 or 2.
    GaussianRational coeff() {
        long re = int_in(-4, 4);
        long im = int_in(0, 3) == 0 ? int_in(-2, 2) : 0;
        long den = int_in(0, 3) == 0 ? 2 : 1;
        return {make_rational(re, den), make_rational(im, den)};
    }

    GaussianRational nonzero_coeff() {
        while (true) {
            GaussianRational c = coeff();
            if (!c.is_zero()) return c;
        }
    }

    Monomial monomial(uint32_t n, uint32_t max_deg) {
        Monomial m = Monomial::unit(n);
        uint32_t budget = static_cast<uint32_t>(int_in(0, max_deg));
        for (uint32_t i = 0; i < budget; ++i) m.exponents[int_in(0, n - 1)] += 1;
        return m;
    }

    Polynomial polynomial(uint32_t n, uint32_t max_deg, int terms) {
        Polynomial p(n);
        for (int t = 0; t < terms; ++t) p.add_term(monomial(n, max_deg), coeff());
        return p;
    }

    Polynomial nonzero_polynomial(uint32_t n, uint32_t max_deg, int terms) {
        while (true) {
            Polynomial p = polynomial(n, max_deg, terms);
            if (!p.is_zero()) return p;
        }
    }

    KForm kform(uint32_t n, uint32_t k, uint32_t max_deg, int terms = 4) {
        KForm w(n, k);
        for (int t = 0; t < terms; ++t) {
            IndexTuple idx;
            for (uint32_t i = 0; i < k; ++i) idx.push_back(static_cast<uint32_t>(int_in(1, n)));
            w.add_term(std::move(idx), polynomial(n, max_deg, 2));
        }
        return w;
    }

    QMatrix qmatrix(uint32_t n) {
        QMatrix m = zero_matrix(n, n);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) m[i][j] = coeff();
        return m;
    }

    QMatrix invertible_qmatrix(uint32_t n) {
        while (true) {
            QMatrix m = qmatrix(n);
            if (!det_bareiss(m).is_zero()) return m;
        }
    }

    ComplexPoint point(uint32_t n) {
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        std::vector<std::complex<double>> coords(n);
        for (auto& c : coords) c = {d(eng), d(eng)};
        return ComplexPoint(std::move(coords));
    }
};

// Term-by-term summation oracle for numeric evaluation, kept separate
// from the power-table path in Polynomial::evaluate.
inline std::complex<double> naive_eval(const Polynomial& p, const ComplexPoint& z) {
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> t = c.to_complex();
        for (size_t i = 0; i < m.exponents.size(); ++i)
            for (uint32_t e = 0; e < m.exponents[i]; ++e) t *= z.coordinates[i];
        acc += t;
    }
    return acc;
}

inline KForm d_of(const Polynomial& f) {
    KForm df(f.ambient_dimension(), 1);
    for (uint32_t j = 1; j <= f.ambient_dimension(); ++j) df.add_term({j}, f.partial_derivative(j));
    return df;
}

}  // namespace pfaff::testing
