#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfaff/criteria.hpp"
#include "pfaff/models.hpp"
#include "pfaff/parser.hpp"
#include "test_support.hpp"

using namespace pfaff;
using pfaff::testing::TestRng;
using pfaff::testing::d_of;

namespace {

Polynomial z(uint32_t n, uint32_t j) { return Polynomial::variable(n, j); }

KForm omega_j(uint32_t m) { return omega_from_skew(canonical_j(m)); }

KForm darboux_omega(const Polynomial& p, const Polynomial& q) {
    return p * d_of(q) - q * d_of(p);
}

std::vector<GaussianRational> origin(uint32_t n) { return std::vector<GaussianRational>(n); }

}  // namespace

TEST_CASE("integrability obstruction") {
    SUBCASE("omega_J(2): every 3-form on C^2 vanishes") {
        auto [obstruction, integrable] = integrability_obstruction(omega_j(1));
        CHECK(obstruction.is_zero());
        CHECK(integrable);
    }
    SUBCASE("omega_J(4) is not integrable, with the explicit witness") {
        auto [obstruction, integrable] = integrability_obstruction(omega_j(2));
        CHECK_FALSE(integrable);
        uint32_t n = 4;
        KForm expected(n, 3);
        expected.add_term({2, 3, 4}, GaussianRational(2) * z(n, 1));
        expected.add_term({1, 3, 4}, GaussianRational(-2) * z(n, 2));
        expected.add_term({1, 2, 4}, GaussianRational(2) * z(n, 3));
        expected.add_term({1, 2, 3}, GaussianRational(-2) * z(n, 4));
        CHECK(obstruction == expected);
    }
    SUBCASE("P dQ - Q dP is always integrable") {
        TestRng rng(211);
        for (int i = 0; i < 30; ++i) {
            uint32_t n = static_cast<uint32_t>(rng.int_in(3, 4));
            Polynomial p = rng.polynomial(n, 3, 3);
            Polynomial q = rng.polynomial(n, 3, 3);
            if (p.is_zero() && q.is_zero()) continue;
            auto [obstruction, integrable] = integrability_obstruction(darboux_omega(p, q));
            CHECK(obstruction.is_zero());
            CHECK(integrable);
        }
    }
}

TEST_CASE("invariant hypersurface criterion") {
    SUBCASE("x dy - y dx leaves {y = 0} invariant") {
        uint32_t n = 2;
        KForm w = darboux_omega(z(n, 1), z(n, 2));
        CHECK(invariant_hypersurface(w, z(n, 2)));
    }
    SUBCASE("the quadric family fixes its quadric") {
        KForm w = invariant_quadric_form(omega_j(2), 2);
        CHECK(invariant_hypersurface(w, half_sum_of_squares(2)));
    }
    SUBCASE("omega_J(4) does not leave {z1 = 0} invariant") {
        CHECK_FALSE(invariant_hypersurface(omega_j(2), z(4, 1)));
    }
    SUBCASE("constant or zero surfaces are rejected") {
        CHECK_THROWS_AS(invariant_hypersurface(omega_j(2), Polynomial::zero(4)), std::invalid_argument);
        CHECK_THROWS_AS(invariant_hypersurface(omega_j(2), Polynomial::constant(4, GaussianRational(3))),
                        std::invalid_argument);
    }
    SUBCASE("invariant under nonzero rescaling of either argument") {
        TestRng rng(223);
        for (int i = 0; i < 10; ++i) {
            uint32_t n = 3;
            Polynomial p = rng.nonzero_polynomial(n, 2, 2);
            Polynomial q = rng.nonzero_polynomial(n, 2, 2);
            KForm w = darboux_omega(p, q);
            if (w.is_zero()) continue;
            Polynomial f = p;
            if (f.is_constant()) continue;
            GaussianRational c = rng.nonzero_coeff();
            bool base = invariant_hypersurface(w, f);
            CHECK(invariant_hypersurface(c * w, f) == base);
            CHECK(invariant_hypersurface(w, c * f) == base);
        }
    }
}

TEST_CASE("radial annihilation") {
    TestRng rng(227);
    SUBCASE("omega_A for skew A") {
        for (int i = 0; i < 10; ++i) {
            SkewMatrix a = random_skew(static_cast<uint32_t>(rng.int_in(1, 4)), rng.eng(), false);
            CHECK(radial_annihilation(omega_from_skew(a)));
        }
    }
    SUBCASE("z1 dz1 fails") {
        uint32_t n = 2;
        KForm w(n, 1);
        w.add_term({1}, z(n, 1));
        CHECK_FALSE(radial_annihilation(w));
        CHECK(contract(w, radial_field(n)).scalar() == z(n, 1) * z(n, 1));
    }
    SUBCASE("the normal forms fail (their transversal field is xi, not R)") {
        CHECK_FALSE(radial_annihilation(poincare_dulac({1}).omega));
        CHECK_FALSE(radial_annihilation(poincare_dulac({2, 3}).omega));
        CHECK_FALSE(radial_annihilation(poincare_dulac({1, 2}).omega));
    }
    SUBCASE("equivalent to skewness of the coefficient matrix") {
        for (int i = 0; i < 30; ++i) {
            uint32_t n = static_cast<uint32_t>(rng.int_in(2, 5));
            QMatrix m = rng.qmatrix(n);
            bool skew = true;
            for (uint32_t r = 0; r < n && skew; ++r)
                for (uint32_t c = 0; c < n && skew; ++c)
                    if (m[r][c] != -m[c][r]) skew = false;
            CHECK(radial_annihilation(linear_one_form(m)) == skew);
        }
    }
}

TEST_CASE("pointwise tangency margin") {
    SUBCASE("z1 dz1 + z2 dz2 is tangent at (1, 0)") {
        uint32_t n = 2;
        KForm w(n, 1);
        w.add_term({1}, z(n, 1));
        w.add_term({2}, z(n, 2));
        std::vector<std::complex<double>> coords{{1.0, 0.0}, {0.0, 0.0}};
        CHECK(tangency_margin(w, ComplexPoint(coords)) == doctest::Approx(0.0));
    }
    SUBCASE("omega_J(4) has margin >= 1/2 on the unit sphere") {
        TestRng rng(229);
        KForm w = omega_j(2);
        for (int i = 0; i < 50; ++i) {
            ComplexPoint zp = rng.point(4);
            double norm = 0.0;
            for (auto& c : zp.coordinates) norm += std::norm(c);
            for (auto& c : zp.coordinates) c /= std::sqrt(norm);
            CHECK(tangency_margin(w, zp) >= 0.5 - 1e-9);
        }
    }
    SUBCASE("a numeric zero of the form reports a singular hit") {
        uint32_t n = 2;
        KForm w(n, 1);
        w.add_term({1}, z(n, 2));
        std::vector<std::complex<double>> coords{{1.0, 0.0}, {0.0, 0.0}};
        CHECK(tangency_margin(w, ComplexPoint(coords)) == -1.0);
    }
}

TEST_CASE("transversality sampling") {
    KForm w = omega_j(2);
    SUBCASE("omega_J(4) on the unit sphere is clear with a wide margin") {
        TransversalityReport rep = transversality_sample(w, 1.0, 10000, 3, 1e-9);
        CHECK(rep.tangent_points.empty());
        CHECK(rep.singular_points.empty());
        CHECK(rep.min_margin >= 0.49);
        CHECK(rep.dimension_parity_ok);
        CHECK(rep.samples == 10000);
    }
    SUBCASE("odd ambient dimension fails the parity check") {
        uint32_t n = 3;
        KForm v(n, 1);
        v.add_term({1}, z(n, 2));
        v.add_term({2}, -z(n, 1));
        v.add_term({3}, z(n, 3));
        TransversalityReport rep = transversality_sample(v, 1.0, 64, 0, 1e-9);
        CHECK_FALSE(rep.dimension_parity_ok);
    }
    SUBCASE("identical calls give identical reports") {
        TransversalityReport a = transversality_sample(w, 1.0, 2000, 7, 1e-9);
        TransversalityReport b = transversality_sample(w, 1.0, 2000, 7, 1e-9);
        CHECK(a.min_margin == b.min_margin);
        CHECK(a.tangent_points.size() == b.tangent_points.size());
    }
    SUBCASE("omega_A stays clear for any radius and seed when A is nonsingular") {
        TestRng rng(257);
        for (int i = 0; i < 3; ++i) {
            SkewMatrix a = random_skew(static_cast<uint32_t>(rng.int_in(1, 3)), rng.eng(), true);
            KForm wa = omega_from_skew(a);
            for (double radius : {0.25, 1.0, 7.5}) {
                TransversalityReport rep =
                    transversality_sample(wa, radius, 10000, rng.eng(), 1e-9);
                CHECK(rep.tangent_points.empty());
                CHECK(rep.singular_points.empty());
            }
        }
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(transversality_sample(w, 0.0, 10, 0, 1e-9), std::invalid_argument);
        CHECK_THROWS_AS(transversality_sample(w, 1.0, 0, 0, 1e-9), std::invalid_argument);
        uint32_t n = 1;
        KForm v(n, 1);
        v.add_term({1}, z(n, 1));
        CHECK_THROWS_AS(transversality_sample(v, 1.0, 10, 0, 1e-9), std::invalid_argument);
    }
}

TEST_CASE("simple singularity") {
    TestRng rng(233);
    SUBCASE("omega_A at 0 is simple iff det A != 0") {
        for (int i = 0; i < 25; ++i) {
            uint32_t m = static_cast<uint32_t>(rng.int_in(1, 3));
            SkewMatrix a = random_skew(m, rng.eng(), false);
            bool simple = simple_singularity(omega_from_skew(a), origin(2 * m));
            CHECK(simple == !det_bareiss(a.entries()).is_zero());
        }
    }
    SUBCASE("z1^2 dz1 + z2 dz2 at 0 is degenerate") {
        uint32_t n = 2;
        KForm w(n, 1);
        w.add_term({1}, z(n, 1) * z(n, 1));
        w.add_term({2}, z(n, 2));
        CHECK_FALSE(simple_singularity(w, origin(n)));
    }
    SUBCASE("normal forms are simple at 0 for any exponents") {
        for (const auto& ell : std::vector<std::vector<uint32_t>>{{1}, {2}, {1, 1}, {3, 2}, {1, 2, 3}}) {
            auto pair = poincare_dulac(ell);
            CHECK(simple_singularity(pair.omega, origin(2 * static_cast<uint32_t>(ell.size()))));
        }
    }
    SUBCASE("a non-singular point is rejected") {
        std::vector<GaussianRational> p{GaussianRational(1), GaussianRational(0)};
        CHECK_THROWS_AS(simple_singularity(omega_j(1), p), std::invalid_argument);
    }
    SUBCASE("works at singular points away from the origin") {
        uint32_t n = 2;
        KForm w(n, 1);
        w.add_term({1}, z(n, 1) - Polynomial::constant(n, GaussianRational(1)));
        w.add_term({2}, z(n, 2));
        std::vector<GaussianRational> p{GaussianRational(1), GaussianRational(0)};
        CHECK(simple_singularity(w, p));
        CHECK_THROWS_AS(simple_singularity(w, origin(n)), std::invalid_argument);
    }
}

TEST_CASE("isotropic dimension bound") {
    SUBCASE("omega_J(2m) at 0: rank 2m, bound m, fires for m >= 2") {
        for (uint32_t m = 1; m <= 3; ++m) {
            Certificate cert = isotropic_dim_bound(omega_j(m), origin(2 * m));
            CHECK(cert.rank_at_point == 2 * m);
            CHECK(cert.dim_bound == m);
            CHECK((cert.kind == Certificate::Kind::no_integral_hypersurface) == (m >= 2));
        }
    }
    SUBCASE("normal forms at 0: d(omega)(0) = sum (1 + l_j) dz^dz has full rank") {
        for (const auto& ell : std::vector<std::vector<uint32_t>>{{1, 2}, {2, 2}, {1, 1, 4}}) {
            uint32_t m = static_cast<uint32_t>(ell.size());
            Certificate cert = isotropic_dim_bound(poincare_dulac(ell).omega, origin(2 * m));
            CHECK(cert.rank_at_point == 2 * m);
            CHECK(cert.dim_bound == m);
            CHECK(cert.kind == Certificate::Kind::no_integral_hypersurface);
        }
    }
    SUBCASE("the quadric family is rank 0 at the origin") {
        Certificate cert = isotropic_dim_bound(invariant_quadric_form(omega_j(2), 2), origin(4));
        CHECK(cert.rank_at_point == 0);
        CHECK(cert.dim_bound == 4);
        CHECK(cert.kind == Certificate::Kind::not_applicable);
    }
    SUBCASE("rank is invariant under exact linear changes of coordinates") {
        TestRng rng(239);
        for (int i = 0; i < 10; ++i) {
            uint32_t n = 4;
            KForm w = rng.kform(n, 1, 2);
            QMatrix m = rng.invertible_qmatrix(n);
            std::vector<Polynomial> comps;
            for (uint32_t r = 0; r < n; ++r) {
                Polynomial c(n);
                for (uint32_t s = 0; s < n; ++s) c += m[r][s] * z(n, s + 1);
                comps.push_back(c);
            }
            KForm pulled = pullback(w, PolynomialMap(n, comps));
            CHECK(isotropic_dim_bound(pulled, origin(n)).rank_at_point ==
                  isotropic_dim_bound(w, origin(n)).rank_at_point);
        }
    }
}

TEST_CASE("darboux form check and pencil invariance") {
    SUBCASE("z1 dz2 - z2 dz1 == P dQ - Q dP with P = z1, Q = z2") {
        CHECK(darboux_form_check(omega_j(1), z(2, 1), z(2, 2)));
    }
    SUBCASE("omega_J(4) never matches (it is not integrable)") {
        TestRng rng(241);
        KForm w = omega_j(2);
        for (int i = 0; i < 10; ++i) {
            Polynomial p = rng.polynomial(4, 2, 3);
            Polynomial q = rng.polynomial(4, 2, 3);
            if (p.is_zero() && q.is_zero()) continue;
            CHECK_FALSE(darboux_form_check(w, p, q));
        }
        CHECK(darboux_form_check(w, z(4, 1), z(4, 2)) == false);
    }
    SUBCASE("both P and Q zero is rejected") {
        CHECK_THROWS_AS(darboux_form_check(omega_j(1), Polynomial::zero(2), Polynomial::zero(2)),
                        std::invalid_argument);
    }
    SUBCASE("the pencil lambda P - mu Q is invariant for P dQ - Q dP") {
        TestRng rng(251);
        int done = 0;
        while (done < 15) {
            uint32_t n = static_cast<uint32_t>(rng.int_in(3, 4));
            Polynomial p = rng.nonzero_polynomial(n, 2, 3);
            Polynomial q = rng.nonzero_polynomial(n, 2, 3);
            KForm w = darboux_omega(p, q);
            GaussianRational lambda = rng.nonzero_coeff();
            GaussianRational mu = rng.nonzero_coeff();
            Polynomial h = lambda * p - mu * q;
            if (h.is_zero() || h.is_constant()) continue;
            if (squarefree_probe(h, 8, rng.eng()) != SquarefreeVerdict::probably_reduced) continue;
            CHECK(invariant_hypersurface(w, h));
            ++done;
        }
    }
}
