#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfaff/forms.hpp"
#include "pfaff/models.hpp"
#include "test_support.hpp"

using namespace pfaff;
using pfaff::testing::TestRng;
using pfaff::testing::d_of;

namespace {

Polynomial z(uint32_t n, uint32_t j) { return Polynomial::variable(n, j); }
Polynomial one(uint32_t n) { return Polynomial::constant(n, GaussianRational(1)); }

KForm omega_j(uint32_t m) { return omega_from_skew(canonical_j(m)); }

}  // namespace

TEST_CASE("index tuples canonicalize with sign, repeats vanish") {
    uint32_t n = 3;
    KForm a(n, 2), b(n, 2);
    a.add_term({2, 1}, z(n, 3));
    b.add_term({1, 2}, -z(n, 3));
    CHECK(a == b);

    KForm c(n, 2);
    c.add_term({1, 1}, z(n, 3));
    CHECK(c.is_zero());

    // degree beyond the ambient dimension collapses to zero on its own
    KForm big(2, 3);
    big.add_term({1, 2, 1}, one(2));
    CHECK(big.is_zero());
}

TEST_CASE("exterior derivative: examples") {
    SUBCASE("d(z1 dz2) = dz1 ^ dz2") {
        uint32_t n = 2;
        KForm w(n, 1);
        w.add_term({2}, z(n, 1));
        KForm expected(n, 2);
        expected.add_term({1, 2}, one(n));
        CHECK(exterior_derivative(w) == expected);
    }
    SUBCASE("d(omega_J(4)) = 2(dz1^dz2 + dz3^dz4)") {
        uint32_t n = 4;
        KForm expected(n, 2);
        expected.add_term({1, 2}, GaussianRational(2) * one(n));
        expected.add_term({3, 4}, GaussianRational(2) * one(n));
        CHECK(exterior_derivative(omega_j(2)) == expected);
    }
    SUBCASE("d(df) = 0 on random polynomials") {
        TestRng rng(101);
        for (int i = 0; i < 25; ++i) {
            uint32_t n = static_cast<uint32_t>(rng.int_in(1, 5));
            CHECK(exterior_derivative(d_of(rng.polynomial(n, 4, 5))).is_zero());
        }
    }
}

TEST_CASE("d^2 = 0 on random k-forms") {
    TestRng rng(103);
    for (int i = 0; i < 30; ++i) {
        uint32_t n = static_cast<uint32_t>(rng.int_in(2, 5));
        uint32_t k = static_cast<uint32_t>(rng.int_in(0, std::min(n, 3u)));
        KForm w = rng.kform(n, k, 3);
        CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    }
}

TEST_CASE("Leibniz rule for d over the wedge") {
    TestRng rng(107);
    for (int i = 0; i < 25; ++i) {
        uint32_t n = static_cast<uint32_t>(rng.int_in(2, 4));
        uint32_t ka = static_cast<uint32_t>(rng.int_in(0, 2));
        uint32_t kb = static_cast<uint32_t>(rng.int_in(0, 2));
        KForm a = rng.kform(n, ka, 3);
        KForm b = rng.kform(n, kb, 3);
        KForm lhs = exterior_derivative(wedge(a, b));
        KForm rhs = wedge(exterior_derivative(a), b);
        KForm mixed = wedge(a, exterior_derivative(b));
        if (ka % 2 == 1) mixed = -mixed;
        rhs += mixed;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("wedge: examples and graded commutativity") {
    uint32_t n = 4;
    SUBCASE("dz1 ^ dz1 = 0") {
        CHECK(wedge(KForm::dz(n, 1), KForm::dz(n, 1)).is_zero());
    }
    SUBCASE("omega_J(4) ^ d(omega_J(4)) matches the expanded 3-form") {
        KForm w = omega_j(2);
        KForm expected(n, 3);
        expected.add_term({2, 3, 4}, GaussianRational(2) * z(n, 1));
        expected.add_term({1, 3, 4}, GaussianRational(-2) * z(n, 2));
        expected.add_term({1, 2, 4}, GaussianRational(2) * z(n, 3));
        expected.add_term({1, 2, 3}, GaussianRational(-2) * z(n, 4));
        CHECK(wedge(w, exterior_derivative(w)) == expected);
    }
    SUBCASE("alpha ^ beta == (-1)^{ka kb} beta ^ alpha on random forms") {
        TestRng rng(109);
        for (int i = 0; i < 25; ++i) {
            uint32_t m = static_cast<uint32_t>(rng.int_in(2, 4));
            uint32_t ka = static_cast<uint32_t>(rng.int_in(0, 2));
            uint32_t kb = static_cast<uint32_t>(rng.int_in(0, 2));
            KForm a = rng.kform(m, ka, 2);
            KForm b = rng.kform(m, kb, 2);
            KForm lhs = wedge(a, b);
            KForm rhs = wedge(b, a);
            if ((ka * kb) % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(wedge(KForm::dz(2, 1), KForm::dz(3, 1)), std::invalid_argument);
    }
}

TEST_CASE("contraction: examples") {
    SUBCASE("i_{d/dz1}(dz1 ^ dz2) = dz2") {
        uint32_t n = 2;
        KForm w(n, 2);
        w.add_term({1, 2}, one(n));
        std::vector<Polynomial> comps{one(n), Polynomial::zero(n)};
        CHECK(contract(w, VectorField(n, comps)) == KForm::dz(n, 2));
    }
    SUBCASE("poincare-dulac pair annihilates for ell = (1,2)") {
        auto [omega, xi] = poincare_dulac({1, 2});
        CHECK(contract(omega, xi).is_zero());
    }
    SUBCASE("omega_A kills the radial field for random skew A") {
        TestRng rng(113);
        for (int i = 0; i < 20; ++i) {
            uint32_t m = static_cast<uint32_t>(rng.int_in(1, 4));
            SkewMatrix a = random_skew(m, rng.eng(), false);
            KForm w = omega_from_skew(a);
            CHECK(contract(w, radial_field(2 * m)).is_zero());
        }
    }
    SUBCASE("contracting a 0-form is an error") {
        KForm c = KForm::from_polynomial(one(2));
        CHECK_THROWS_AS(contract(c, radial_field(2)), std::invalid_argument);
    }
}

TEST_CASE("contraction is linear in both slots") {
    TestRng rng(127);
    for (int i = 0; i < 20; ++i) {
        uint32_t n = static_cast<uint32_t>(rng.int_in(2, 4));
        uint32_t k = static_cast<uint32_t>(rng.int_in(1, 3));
        KForm w1 = rng.kform(n, k, 2);
        KForm w2 = rng.kform(n, k, 2);
        std::vector<Polynomial> xc, yc;
        for (uint32_t j = 0; j < n; ++j) {
            xc.push_back(rng.polynomial(n, 2, 2));
            yc.push_back(rng.polynomial(n, 2, 2));
        }
        VectorField x(n, xc), y(n, yc);
        std::vector<Polynomial> sum;
        for (uint32_t j = 0; j < n; ++j) sum.push_back(xc[j] + yc[j]);
        CHECK(contract(w1 + w2, x) == contract(w1, x) + contract(w2, x));
        CHECK(contract(w1, VectorField(n, sum)) == contract(w1, x) + contract(w1, y));
    }
}

TEST_CASE("radial field") {
    VectorField r2 = radial_field(2);
    CHECK(r2.components[0] == z(2, 1));
    CHECK(r2.components[1] == z(2, 2));
    CHECK(radial_field(1).components[0] == z(1, 1));
    CHECK(contract(KForm::dz(3, 1), radial_field(3)).scalar() == z(3, 1));
}

TEST_CASE("pullback: examples") {
    SUBCASE("identity map is the identity") {
        TestRng rng(131);
        for (int i = 0; i < 10; ++i) {
            uint32_t n = static_cast<uint32_t>(rng.int_in(1, 4));
            uint32_t k = static_cast<uint32_t>(rng.int_in(0, 2));
            KForm w = rng.kform(n, k, 2);
            CHECK(pullback(w, PolynomialMap::identity(n)) == w);
        }
        CHECK(pullback(KForm::dz(1, 1), PolynomialMap::identity(1)) == KForm::dz(1, 1));
    }
    SUBCASE("an isotropic line for omega_J(4)") {
        std::vector<Polynomial> comps{z(1, 1), Polynomial::zero(1), Polynomial::zero(1),
                                      Polynomial::zero(1)};
        CHECK(pullback(omega_j(2), PolynomialMap(1, comps)).is_zero());
    }
    SUBCASE("an integral m-plane for omega_J(4)") {
        std::vector<Polynomial> comps{z(2, 1), Polynomial::zero(2), z(2, 2), Polynomial::zero(2)};
        CHECK(pullback(omega_j(2), PolynomialMap(2, comps)).is_zero());
    }
    SUBCASE("dimension mismatch is rejected") {
        std::vector<Polynomial> comps{z(1, 1)};
        CHECK_THROWS_AS(pullback(omega_j(2), PolynomialMap(1, comps)), std::invalid_argument);
    }
}

TEST_CASE("pullback commutes with d on random data") {
    TestRng rng(137);
    for (int i = 0; i < 15; ++i) {
        uint32_t p = static_cast<uint32_t>(rng.int_in(1, 3));
        uint32_t n = static_cast<uint32_t>(rng.int_in(2, 4));
        uint32_t k = static_cast<uint32_t>(rng.int_in(0, 2));
        std::vector<Polynomial> comps;
        for (uint32_t j = 0; j < n; ++j) comps.push_back(rng.polynomial(p, 2, 2));
        PolynomialMap phi(p, comps);
        KForm w = rng.kform(n, k, 2);
        CHECK(pullback(exterior_derivative(w), phi) == exterior_derivative(pullback(w, phi)));
    }
}

TEST_CASE("a linear one-form kills the radial field iff its matrix is skew") {
    TestRng rng(139);
    for (int i = 0; i < 40; ++i) {
        uint32_t n = static_cast<uint32_t>(rng.int_in(2, 5));
        QMatrix m = rng.qmatrix(n);
        if (i % 2 == 0) {  // half the draws are made skew on purpose
            for (uint32_t r = 0; r < n; ++r) {
                m[r][r] = GaussianRational(0);
                for (uint32_t c = r + 1; c < n; ++c) m[c][r] = -m[r][c];
            }
        }
        bool skew = true;
        for (uint32_t r = 0; r < n && skew; ++r)
            for (uint32_t c = 0; c < n && skew; ++c)
                if (m[r][c] != -m[c][r]) skew = false;
        KForm w = linear_one_form(m);
        CHECK(contract(w, radial_field(n)).is_zero() == skew);
        if (!w.is_zero()) CHECK(coefficient_matrix_of_linear_form(w) == m);
    }
}
