/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic integers Z[zeta_p].
 *
 * Elements are stored in group-algebra form: a length-p coefficient vector,
 * coefficient of zeta^k at index k. Distinct vectors can name the same ring
 * element; reduction modulo the cyclotomic polynomial Phi_p only happens in
 * the zero test and in rational-integer recognition.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace fermat {

using BigInt = mpz_class;

/// Largest root-of-unity order accepted by the cyclotomic routines.
inline constexpr std::uint64_t kDefaultMaxOrder = 360;

/// Dense univariate integer polynomial, lowest degree first, no trailing zeros.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs);

    /// x^k - 1
    static IntegerPolynomial x_pow_minus_one(std::size_t k);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }

    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct PolynomialDivision {
    IntegerPolynomial quotient;
    IntegerPolynomial remainder;
};

/// Long division by a monic divisor; exact over the integers.
PolynomialDivision divide_by_monic(const IntegerPolynomial& dividend,
                                   const IntegerPolynomial& divisor);

/// Phi_p, via exact division of x^p - 1 by Phi_q for every proper divisor q of p.
/// Results are memoised; safe to call concurrently.
const IntegerPolynomial& cyclotomic_polynomial(std::uint64_t p);

class CyclotomicInteger {
public:
    /// The zero element of Z[zeta_order].
    explicit CyclotomicInteger(std::uint64_t order);
    CyclotomicInteger(std::uint64_t order, std::vector<BigInt> coeffs);

    /// The rational integer c, i.e. c * zeta^0.
    static CyclotomicInteger constant(std::uint64_t order, const BigInt& c);

    std::uint64_t order() const noexcept { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Multiply by zeta^shift: a cyclic rotation of the coefficient vector.
    CyclotomicInteger rotated(std::uint64_t shift) const;

    /// Remainder of the representative polynomial modulo Phi_order.
    IntegerPolynomial reduced() const;

    CyclotomicInteger& operator+=(const CyclotomicInteger& other);
    CyclotomicInteger& operator-=(const CyclotomicInteger& other);
    CyclotomicInteger operator-() const;

    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);

    /// Representation equality, not ring equality; use equal_in_ring for the latter.
    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void require_same_order(const CyclotomicInteger& other) const;
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& x);

/// zeta_p^(e mod p).
CyclotomicInteger root_power(std::uint64_t p, std::int64_t e);

CyclotomicInteger add(const CyclotomicInteger& x, const CyclotomicInteger& y);
CyclotomicInteger mul(const CyclotomicInteger& x, const CyclotomicInteger& y);

/// True iff the representative polynomial is divisible by Phi_p.
bool is_zero(const CyclotomicInteger& x);

bool equal_in_ring(const CyclotomicInteger& x, const CyclotomicInteger& y);

/// The integer c when x reduces to a constant remainder modulo Phi_p.
std::optional<BigInt> as_rational_integer(const CyclotomicInteger& x);

/**
 * Reduction of zeta^k modulo Phi_p, precomputed for every k in [0, p).
 *
 * Reduction is linear, so the reduced form of sum c_k zeta^k is
 * sum c_k * row(k). This lets enumerations keep a running reduced sum and
 * test for zero in O(phi(p)) without polynomial division.
 */
class CyclotomicReducer {
public:
    explicit CyclotomicReducer(std::uint64_t p);

    std::uint64_t order() const noexcept { return order_; }
    /// Euler phi(p), the length of a reduced vector.
    std::size_t rank() const noexcept { return rank_; }

    /// zeta^k mod Phi_p, length rank().
    std::span<const std::int64_t> row(std::uint64_t k) const;

    /// Largest absolute entry over all rows.
    std::int64_t max_abs_entry() const noexcept { return max_abs_; }

    bool is_zero(const CyclotomicInteger& x) const;

private:
    std::uint64_t order_;
    std::size_t rank_;
    std::int64_t max_abs_ = 0;
    std::vector<std::int64_t> rows_;
};

}  // namespace fermat
