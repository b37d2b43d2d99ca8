#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "fermat/cyclotomic.hpp"

using namespace fermat;

namespace {

std::complex<double> eval_real_poly(const IntegerPolynomial& f, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::complex<double> numeric_value(const CyclotomicInteger& x) {
    const double p = static_cast<double>(x.order());
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k)
        acc += x.coeffs()[k].get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / p);
    return acc;
}

CyclotomicInteger random_element(std::uint64_t p, std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<BigInt> c(p);
    for (auto& v : c) v = dist(rng);
    return CyclotomicInteger(p, c);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
    EXPECT_EQ(cyclotomic_polynomial(1), IntegerPolynomial({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), IntegerPolynomial({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), IntegerPolynomial({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), IntegerPolynomial({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), IntegerPolynomial({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, FirstCoefficientOutsidePlusMinusOneAt105) {
    const auto& c = cyclotomic_polynomial(105).coeffs();
    EXPECT_EQ(c.size(), 49u);
    EXPECT_EQ(c[7], -2);
    EXPECT_EQ(c[41], -2);
}

TEST(CyclotomicPolynomial, DivisorProductIsXToThePMinusOne) {
    for (std::uint64_t p = 1; p <= 60; ++p) {
        IntegerPolynomial prod({1});
        for (std::uint64_t q = 1; q <= p; ++q)
            if (p % q == 0) prod = prod * cyclotomic_polynomial(q);
        EXPECT_EQ(prod, IntegerPolynomial::x_pow_minus_one(p)) << "p=" << p;
    }
}

TEST(CyclotomicPolynomial, DegreeIsEulerPhiAndRootsArePrimitive) {
    for (std::uint64_t p = 1; p <= 60; ++p) {
        const auto& f = cyclotomic_polynomial(p);
        std::uint64_t phi = 0;
        for (std::uint64_t k = 1; k <= p; ++k)
            if (std::gcd(k, p) == 1) ++phi;
        EXPECT_EQ(static_cast<std::uint64_t>(f.degree()), phi);
        EXPECT_EQ(f.leading(), 1);
        for (std::uint64_t k = 1; k <= p; ++k) {
            const double r = std::abs(eval_real_poly(f, std::polar(1.0, 2.0 * M_PI * k / p)));
            if (std::gcd(k, p) == 1)
                EXPECT_LT(r, 1e-6) << "p=" << p << " k=" << k;
            else
                EXPECT_GT(r, 1e-6) << "p=" << p << " k=" << k;
        }
    }
}

TEST(Cyclotomic, HalfTurnCancels) {
    for (std::uint64_t p = 2; p <= 60; p += 2)
        for (std::uint64_t e = 0; e < p; ++e)
            EXPECT_TRUE(is_zero(root_power(p, e) + root_power(p, e + p / 2))) << p << " " << e;
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
    for (std::uint64_t p = 2; p <= 40; ++p) {
        CyclotomicInteger s(p);
        for (std::uint64_t e = 0; e < p; ++e) s += root_power(p, e);
        EXPECT_TRUE(is_zero(s));
        EXPECT_FALSE(is_zero(s + CyclotomicInteger::constant(p, 1)));
    }
}

TEST(Cyclotomic, ThirdRootsExample) {
    CyclotomicInteger s = CyclotomicInteger::constant(3, 1) + root_power(3, 1) + root_power(3, 2);
    EXPECT_TRUE(is_zero(s));
    EXPECT_FALSE(is_zero(root_power(3, 1) + root_power(3, 2)));
    EXPECT_EQ(as_rational_integer(root_power(3, 1) + root_power(3, 2)), BigInt(-1));
}

TEST(Cyclotomic, ZeroTestMatchesFloatingPoint) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> order(2, 40);
    int zeros = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t p = order(rng);
        CyclotomicInteger x = random_element(p, rng, 3);
        if (trial % 2 == 0) {
            // a coset sum of the subgroup of order q is zero for any q > 1 dividing p
            std::vector<std::uint64_t> divisors;
            for (std::uint64_t q = 2; q <= p; ++q)
                if (p % q == 0) divisors.push_back(q);
            const std::uint64_t q = divisors[rng() % divisors.size()];
            CyclotomicInteger coset(p);
            for (std::uint64_t j = 0; j < q; ++j) coset += root_power(p, j * (p / q) + trial);
            x = coset * random_element(p, rng, 2);
        }
        const bool exact = is_zero(x);
        const double mag = std::abs(numeric_value(x));
        zeros += exact;
        EXPECT_EQ(exact, mag < 1e-8) << "p=" << p << " |x|=" << mag;
        const CyclotomicReducer reducer(p);
        EXPECT_EQ(reducer.is_zero(x), exact);
    }
    EXPECT_GT(zeros, 400);
}

TEST(Cyclotomic, RingAxioms) {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {3u, 4u, 6u, 7u, 12u, 15u}) {
        for (int t = 0; t < 20; ++t) {
            const auto a = random_element(p, rng, 5), b = random_element(p, rng, 5), c = random_element(p, rng, 5);
            EXPECT_TRUE(equal_in_ring((a + b) + c, a + (b + c)));
            EXPECT_TRUE(equal_in_ring(a + b, b + a));
            EXPECT_TRUE(equal_in_ring(a * b, b * a));
            EXPECT_TRUE(equal_in_ring((a * b) * c, a * (b * c)));
            EXPECT_TRUE(equal_in_ring(a * (b + c), a * b + a * c));
            EXPECT_TRUE(is_zero(a - a));
            EXPECT_TRUE(equal_in_ring(a * CyclotomicInteger::constant(p, 1), a));
            EXPECT_TRUE(equal_in_ring(add(a, b), a + b));
            EXPECT_TRUE(equal_in_ring(mul(a, b), a * b));
            EXPECT_TRUE(equal_in_ring(a.rotated(1), a * root_power(p, 1)));
        }
    }
}

TEST(Cyclotomic, RootPowerWrapsNegativeExponents) {
    EXPECT_EQ(root_power(5, -1), root_power(5, 4));
    EXPECT_EQ(root_power(5, 12), root_power(5, 2));
}

TEST(Cyclotomic, RejectsMismatchedOrders) {
    EXPECT_THROW(root_power(3, 1) + root_power(4, 1), std::invalid_argument);
}

TEST(CyclotomicReducer, RowsReduceToSingleMonomialsBelowPhi) {
    for (std::uint64_t p = 1; p <= 60; ++p) {
        const CyclotomicReducer r(p);
        ASSERT_EQ(r.rank(), static_cast<std::size_t>(cyclotomic_polynomial(p).degree()));
        for (std::uint64_t k = 0; k < r.rank(); ++k) {
            const auto row = r.row(k);
            for (std::size_t j = 0; j < row.size(); ++j) EXPECT_EQ(row[j], j == k ? 1 : 0);
        }
    }
}
