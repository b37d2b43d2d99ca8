#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "fermat/ed_formulas.hpp"

using namespace fermat;
using C = std::complex<double>;

namespace {

long curve_ed_degree(long d) {
    switch (d % 12) {
        case 0: case 1: case 3: case 4: case 7: case 9: return d * d;
        case 5: case 11: return d * d - 2;
        case 6: case 10: return d * d - 6;
        case 8: return d * d - 8;
        default: return d * d - 14;
    }
}

long ipow(long b, unsigned e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

long choose(unsigned n, unsigned k) {
    long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Vanishing count by floating-point brute force.
long delta_oracle(unsigned m, long p) {
    std::vector<long> t(m, 0);
    long count = 0;
    while (true) {
        C s = 1.0;
        for (auto ti : t) s += std::polar(1.0, 4.0 * M_PI * static_cast<double>(ti) / static_cast<double>(p));
        if (std::abs(s) < 1e-9) ++count;
        unsigned k = 0;
        while (k < m && ++t[k] == p) t[k++] = 0;
        if (k == m) break;
    }
    return count;
}

}  // namespace

TEST(Bounds, DocumentedValues) {
    EXPECT_EQ(generic_bound_projective(2, 5), 25);
    EXPECT_EQ(generic_bound_projective(3, 6), 186);
    for (unsigned d = 2; d < 20; ++d) EXPECT_EQ(generic_bound_projective(1, d), d);
    EXPECT_EQ(epsilon(2, 5), 2);
    EXPECT_EQ(epsilon(2, 8), 8);
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(epsilon(n, 3), 0);
    EXPECT_EQ(origin_multiplicity(2, 5), 80);
    EXPECT_EQ(origin_multiplicity(2, 3), 12);
    EXPECT_EQ(origin_multiplicity(1, 3), 6);
    EXPECT_EQ(system_degree(2, 5), 105);
    EXPECT_EQ(system_degree(1, 3), 9);
}

TEST(Bounds, LargeValuesAreExact) {
    // 7 * (6^40 - 1) / 5 does not fit in 64 bits
    BigInt six40 = 1;
    for (int i = 0; i < 40; ++i) six40 *= 6;
    EXPECT_EQ(generic_bound_projective(40, 7), BigInt(7 * (six40 - 1) / 5));
}

TEST(Projective, DocumentedValues) {
    EXPECT_EQ(eddeg_projective(2, 5).ed_degree, 23);
    EXPECT_EQ(eddeg_projective(2, 3).ed_degree, 9);
    EXPECT_EQ(eddeg_projective(2, 4).ed_degree, 16);
    EXPECT_EQ(eddeg_projective(2, 8).ed_degree, 56);
    EXPECT_EQ(eddeg_projective(2, 14).ed_degree, 182);
    EXPECT_EQ(eddeg_projective(1, 6).ed_degree, 4);
    EXPECT_EQ(eddeg_projective(3, 6).ed_degree, 150);
}

TEST(Projective, BreakdownTermsForTheQuinticCurve) {
    const EDBreakdown b = eddeg_projective(2, 5);
    ASSERT_EQ(b.delta_terms.size(), 2u);
    EXPECT_EQ(b.delta_terms[0].m, 1u);
    EXPECT_EQ(b.delta_terms[0].weight, 3);
    EXPECT_EQ(b.delta_terms[0].delta, 0u);
    EXPECT_EQ(b.delta_terms[1].m, 2u);
    EXPECT_EQ(b.delta_terms[1].weight, 1);
    EXPECT_EQ(b.delta_terms[1].delta, 2u);
    EXPECT_EQ(*b.system_degree, 105);
    EXPECT_EQ(*b.origin_multiplicity, 80);
}

TEST(Projective, CurveTableModTwelve) {
    for (unsigned d = 3; d <= 50; ++d) EXPECT_EQ(eddeg_projective(2, d).ed_degree, curve_ed_degree(d)) << "d=" << d;
}

TEST(Projective, DecompositionAndEpsilonAgainstOracle) {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned d = 3; d <= 12; ++d) {
            const EDBreakdown b = eddeg_projective(n, d);
            EXPECT_EQ(*b.system_degree - *b.origin_multiplicity - b.epsilon, b.ed_degree);
            EXPECT_EQ(b.general_bound - b.epsilon, b.ed_degree);
            BigInt sum = 0;
            for (const auto& t : b.delta_terms) sum += t.weight * t.delta;
            EXPECT_EQ(sum, b.epsilon);
            EXPECT_LE(b.ed_degree, b.general_bound);
            EXPECT_EQ(b.ed_degree == b.general_bound, b.epsilon == 0);

            long gbd = 0, eps = 0;
            for (unsigned i = 0; i < n; ++i) gbd += d * ipow(d - 1, i);
            for (unsigned m = 1; m <= n; ++m) eps += choose(n + 1, m + 1) * delta_oracle(m, d - 2);
            EXPECT_EQ(b.general_bound, gbd) << n << "," << d;
            EXPECT_EQ(b.epsilon, eps) << n << "," << d;
            EXPECT_EQ(*b.system_degree, gbd + d * ipow(d - 1, n));
            EXPECT_EQ(*b.origin_multiplicity, d * ipow(d - 1, n));
        }
    }
}

TEST(Projective, BinomialIdentity) {
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned d = 2; d <= 12; ++d) {
            BigInt lhs = 0, rhs = 0, pw = 1, pw1 = 1;
            for (unsigned i = 1; i <= n + 1; ++i) {
                lhs += binomial(n + 1, i) * pw;
                pw *= d - 2;
            }
            for (unsigned i = 0; i <= n; ++i) {
                rhs += pw1;
                pw1 *= d - 1;
            }
            EXPECT_EQ(lhs, rhs) << n << "," << d;
        }
    }
}

TEST(Projective, RejectsLowDegree) {
    EXPECT_THROW(eddeg_projective(2, 2), std::invalid_argument);
    EXPECT_THROW(eddeg_affine(2, 2), std::invalid_argument);
    EXPECT_THROW(eddeg_projective(0, 5), std::invalid_argument);
}

TEST(Affine, DocumentedValues) {
    for (unsigned d = 3; d <= 15; ++d) EXPECT_EQ(eddeg_affine(1, d).ed_degree, d);
    EXPECT_EQ(eddeg_affine(2, 6).ed_degree, 34);
    for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(eddeg_affine(n, 3).ed_degree, generic_bound_projective(n, 3));
    const EDBreakdown b = eddeg_affine(2, 6);
    EXPECT_FALSE(b.origin_multiplicity.has_value());
    EXPECT_FALSE(b.system_degree.has_value());
}

TEST(Affine, CorrectionAgainstOracle) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 3; d <= 10; ++d) {
            long gbd = 0, corr = 0;
            for (unsigned i = 0; i < n; ++i) gbd += d * ipow(d - 1, i);
            for (unsigned m = 1; m + 1 <= n; ++m) corr += choose(n, m + 1) * delta_oracle(m, d - 2);
            EXPECT_EQ(eddeg_affine(n, d).ed_degree, gbd - corr) << n << "," << d;
        }
}

TEST(Scaled, AllOnesMatchesProjective) {
    for (unsigned n = 1; n <= 2; ++n)
        for (unsigned d = 3; d <= 6; ++d)
            EXPECT_EQ(eddeg_scaled(n, d, ScalingVector::ones(n + 1)).ed_degree, eddeg_projective(n, d).ed_degree);
}

TEST(Scaled, GenericAndPartlySpecialVectors) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int t = 0; t < 10; ++t) {
        const C generic(g(rng) + 0.5, g(rng) - 0.5);
        EXPECT_EQ(eddeg_scaled(2, 5, ScalingVector({C(g(rng), 1.0), C(1.3, g(rng)), generic})).ed_degree, 25);
        const EDBreakdown b = eddeg_scaled(2, 5, ScalingVector({1.0, C(0, 1), generic}));
        EXPECT_EQ(b.ed_degree, 24);
        ASSERT_EQ(b.delta_terms.size(), 4u);
        EXPECT_EQ(b.delta_terms[0].subset, (std::vector<std::size_t>{0, 1}));
        EXPECT_EQ(b.delta_terms[0].delta, 1u);
    }
}

TEST(Table, Ranges) {
    const auto rows = eddeg_table(2, 3, 14);
    ASSERT_EQ(rows.size(), 12u);
    for (const auto& r : rows) EXPECT_EQ(r.ed_degree, curve_ed_degree(r.d));
    const auto one = eddeg_table(1, 3, 3);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].ed_degree, 3);
    EXPECT_TRUE(eddeg_table(2, 9, 8).empty());
}

TEST(Kinds, StringRoundTrip) {
    for (auto k : {HypersurfaceKind::Projective, HypersurfaceKind::Affine, HypersurfaceKind::Scaled})
        EXPECT_EQ(hypersurface_kind_from_string(to_string(k)), k);
    EXPECT_THROW(hypersurface_kind_from_string("conic"), std::invalid_argument);
}
