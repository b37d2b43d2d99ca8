/**
 * @file expcyclo.hpp
 * @brief The exponential cyclotomic polynomials P_{m,p} and Q_{m,p}.
 *
 * P_{m,p}(A_0..A_m) is the product of the linear forms
 * A_0 + sum_k zeta^(t_k) A_k over all (t_1..t_m) in [1, p]^m. It lies in
 * Z[A_0^p, ..., A_m^p]; Q_{m,p} is the integer polynomial with
 * Q(A_0^p, ..., A_m^p) = P(A_0, ..., A_m).
 */
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/vanishing_sums.hpp"

namespace fermat {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

std::uint64_t total_degree(const Exponent& e);

class SparseIntegerPolynomial {
public:
    using TermMap = std::map<Exponent, BigInt, GrlexLess>;

    explicit SparseIntegerPolynomial(std::size_t num_vars = 1);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * x^e; drops the term if the coefficient becomes zero.
    void add_term(const Exponent& e, const BigInt& c);

    bool is_homogeneous() const;
    /// Largest total degree; 0 for the zero polynomial.
    std::uint64_t degree() const;

    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

    /// Terms in descending graded lexicographic order, variables x0..x{n-1}.
    std::string to_string() const;

    friend bool operator==(const SparseIntegerPolynomial&, const SparseIntegerPolynomial&) = default;

private:
    std::size_t num_vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SparseIntegerPolynomial& f);

class CyclotomicCoefficientPolynomial {
public:
    using TermMap = std::map<Exponent, CyclotomicInteger, GrlexLess>;

    CyclotomicCoefficientPolynomial(std::size_t num_vars, std::uint64_t order);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::uint64_t order() const noexcept { return order_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * x^e; drops the term if the coefficient becomes zero in the ring.
    void add_term(const Exponent& e, const CyclotomicInteger& c);

    /// Numeric value with zeta = exp(2 pi i / order).
    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

private:
    std::size_t num_vars_;
    std::uint64_t order_;
    TermMap terms_;
};

struct ExpCycloOptions {
    /// Maximum number of linear factors p^m multiplied out by build_P.
    std::uint64_t factor_cap = 4096;
    /// Maximum coefficient updates spent expanding the product.
    std::uint64_t expansion_budget = 200'000'000;
    /// Maximum number of factors evaluated by eval_Q.
    std::uint64_t evaluation_cap = 10'000'000;
    /// Maximum dense array length (64-bit words) for the p = 2 fallback of build_Q.
    std::uint64_t dense_entry_cap = 200'000'000;
};

/// Estimated coefficient updates for build_P(m, p); saturates at UINT64_MAX.
std::uint64_t build_P_cost(unsigned m, std::uint64_t p);

CyclotomicCoefficientPolynomial build_P(unsigned m, std::uint64_t p, const ExpCycloOptions& options = {});

/// Throws InternalConsistencyError if P has an exponent not divisible by p
/// or a coefficient that is not a rational integer.
/// For p = 2 beyond the expansion budget, P is expanded densely modulo a few
/// 61-bit primes and lifted by CRT (bounded by dense_entry_cap).
SparseIntegerPolynomial build_Q(unsigned m, std::uint64_t p, const ExpCycloOptions& options = {});

/// The dense modular route used by build_Q for p = 2; exposed for testing.
SparseIntegerPolynomial build_Q_order_two_dense(unsigned m, const ExpCycloOptions& options = {});

/// The product over [1, p]^m of (b_0 + sum zeta^(t_k) b_k), b_i the
/// principal p-th root of point_i, accumulated in log-magnitude form.
struct ProductEvaluation {
    /// phase * exp(log_abs); may be infinite or zero when out of range.
    std::complex<double> value;
    double log_abs = 0.0;
    std::complex<double> phase{1.0, 0.0};
    /// sum over factors of log(|b_0| + sum |b_k|)
    double log_scale = 0.0;
    /// min over factors of |factor| / (|b_0| + sum |b_k|)
    double min_relative_factor = 1.0;
    std::uint64_t factors = 0;
};

ProductEvaluation evaluate_Q_product(unsigned m, std::uint64_t p,
                                     const std::vector<std::complex<double>>& point,
                                     const ExpCycloOptions& options = {});

/// Q_{m,p}(point), numerically, without constructing Q.
std::complex<double> eval_Q(unsigned m, std::uint64_t p, const std::vector<std::complex<double>>& point,
                            const ExpCycloOptions& options = {});

struct ScaledVanishingResult {
    bool vanishing = false;
    /// Order and evaluation point actually used: (p, a^2) for odd p, (p/2, a) for even p.
    std::uint64_t q_order = 0;
    std::vector<std::complex<double>> q_point;
    ProductEvaluation evaluation;
};

ScaledVanishingResult scaled_vanishing_detail(unsigned m, std::uint64_t p, const ScalingVector& a,
                                              double tol = 1e-6, const ExpCycloOptions& options = {});

/// Numerical zero test of Q_{m,p}(a^2) (odd p) or Q_{m,p/2}(a) (even p).
bool scaled_vanishing(unsigned m, std::uint64_t p, const ScalingVector& a, double tol = 1e-6,
                      const ExpCycloOptions& options = {});

}  // namespace fermat
