#include <gtest/gtest.h>

#include <numeric>

#include "fermat/ed_formulas.hpp"
#include "fermat/homotopy.hpp"
#include "fermat/real_experiments.hpp"

using namespace fermat;

namespace {

BigInt pow_big(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

TEST(Fewnomial, DocumentedValues) {
    EXPECT_EQ(fewnomial_bound(1), 995328);
    EXPECT_EQ(BigInt(4096 * 243), 995328);
    EXPECT_EQ(fewnomial_bound(2), pow_big(2, 48) * pow_big(4, 10));
}

TEST(Fewnomial, BothFormsAgree) {
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_EQ(fewnomial_bound(n), fewnomial_bound_orthant_form(n)) << n;
        const unsigned c5n2 = 5 * n * (5 * n - 1) / 2;
        EXPECT_EQ(fewnomial_bound(n), pow_big(2, n + 1 + c5n2) * pow_big(n + 2, 5 * n));
    }
}

TEST(RealCount, CurvesHaveOneRealCriticalPoint) {
    for (unsigned d : {3u, 5u, 7u})
        for (std::uint64_t trial = 0; trial < 5; ++trial) {
            const auto u = sample_real_data(2, 77, trial);
            const RealCount c = real_critical_points(1, d, u, trial);
            EXPECT_EQ(c.real, 1u) << "d=" << d;
            EXPECT_LE(c.real, c.finite);
        }
}

TEST(RealCount, RejectsEvenDegreeAndZeroData) {
    EXPECT_THROW(real_critical_count(1, 4, {1.0, 2.0}, 1), std::invalid_argument);
    EXPECT_THROW(real_critical_count(1, 3, {1.0, 0.0}, 1), std::invalid_argument);
}

TEST(RealCount, ConjugationClosureAndParity) {
    for (std::uint64_t trial = 0; trial < 6; ++trial) {
        const auto ur = sample_real_data(3, 5, trial);
        ComplexVector u(3);
        for (int i = 0; i < 3; ++i) u[i] = ur[static_cast<std::size_t>(i)];
        const auto solve = solve_critical_points(2, 3, u, trial);
        for (const auto& x : solve.finite_solutions) {
            double best = 1e300;
            for (const auto& y : solve.finite_solutions) best = std::min(best, (x.conjugate() - y).norm());
            EXPECT_LT(best, 1e-6 * std::max(1.0, x.norm()));
        }
        const RealCount c = real_critical_points(2, 3, ur, trial);
        EXPECT_EQ(c.real % 2, c.finite % 2);
    }
}

TEST(Scan, SingleRealPointForCurves) {
    const RealScanReport r = conjecture_scan(1, 5, 20, 3);
    EXPECT_EQ(r.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 20}}));
    EXPECT_EQ(r.conjecture_bound, 1u);
    EXPECT_TRUE(r.counterexample_candidates.empty());
}

TEST(Scan, InvariantsForTheCubicSurface) {
    const RealScanReport r = conjecture_scan(2, 3, 40, 8);
    std::uint64_t total = 0;
    for (const auto& [count, freq] : r.histogram) {
        total += freq;
        EXPECT_EQ(count % 2, 1u);
    }
    EXPECT_EQ(total, 40u);
    EXPECT_EQ(r.max_observed, r.histogram.rbegin()->first);
    EXPECT_LE(BigInt(r.max_observed), r.fewnomial_bound);
    EXPECT_EQ(r.conjecture_bound, 3u);
    EXPECT_TRUE(r.incomplete_trials.empty());
}

TEST(Scan, EmptyAndReproducible) {
    const RealScanReport empty = conjecture_scan(2, 3, 0, 1);
    EXPECT_TRUE(empty.histogram.empty());
    EXPECT_EQ(empty.max_observed, 0u);
    EXPECT_EQ(conjecture_scan(2, 3, 5, 12), conjecture_scan(2, 3, 5, 12));
}

TEST(Sampling, RealDataStreams) {
    for (std::uint64_t t = 0; t < 30; ++t) {
        const auto u = sample_real_data(4, 1, t);
        for (double v : u) EXPECT_GE(std::abs(v), 0.1);
        EXPECT_EQ(u, sample_real_data(4, 1, t));
    }
    EXPECT_NE(sample_real_data(3, 1, 0), sample_real_data(3, 1, 1));
    EXPECT_NE(sample_real_data(3, 1, 0), sample_real_data(3, 2, 0));
}
