/**
 * @file vanishing_sums.hpp
 * @brief Counting vanishing sums 1 + sum zeta^(2 t_i) = 0 of roots of unity.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fermat {

struct DeltaOptions {
    /// Maximum number of enumerated tuples, p^m.
    std::uint64_t work_cap = 100'000'000;
    /// Maximum root-of-unity order.
    std::uint64_t max_order = 360;
};

/// A tuple of nonzero complex numbers (a_0, ..., a_m).
class ScalingVector {
public:
    static constexpr double kMinModulus = 1e-12;

    ScalingVector() = default;
    /// Throws std::invalid_argument if any entry has modulus <= kMinModulus.
    explicit ScalingVector(std::vector<std::complex<double>> entries);

    static ScalingVector ones(std::size_t size);

    std::size_t size() const noexcept { return entries_.size(); }
    const std::complex<double>& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::complex<double>>& entries() const noexcept { return entries_; }

    /// The sub-vector (a_i for i in indices), in the given order.
    ScalingVector select(const std::vector<std::size_t>& indices) const;

    friend bool operator==(const ScalingVector&, const ScalingVector&) = default;

private:
    std::vector<std::complex<double>> entries_;
};

/// p^m, or cap + 1 when the product exceeds cap.
std::uint64_t tuple_count(std::uint64_t p, unsigned m, std::uint64_t cap);

/// Principal p-th root exp(log(z) / p).
std::complex<double> principal_root(std::complex<double> z, std::uint64_t p);

/// exp(2 pi i k / p).
std::complex<double> unit_root(std::uint64_t p, std::int64_t k);

/**
 * Number of ordered tuples (t_1..t_m) in [1, p]^m with
 * 1 + sum zeta^(2 t_i) = 0, decided exactly in Z[zeta_p].
 *
 * Throws WorkCapExceeded when p^m exceeds options.work_cap.
 */
std::uint64_t delta(unsigned m, std::uint64_t p, const DeltaOptions& options = {});

/// Same count with zeta replaced by zeta^generator; gcd(generator, p) must be 1.
std::uint64_t delta_with_generator(unsigned m, std::uint64_t p, std::uint64_t generator,
                                   const DeltaOptions& options = {});

/// Known closed forms for m in {1, 2, 3}; std::invalid_argument otherwise.
std::uint64_t delta_closed_form(unsigned m, std::uint64_t p);

/// delta_closed_form for m <= 3, enumeration otherwise.
std::uint64_t delta_fast(unsigned m, std::uint64_t p, const DeltaOptions& options = {});

/**
 * Number of solutions with all entries nonzero of
 *   1 + x_1^2 + ... + x_m^2 = 0,  x_i^p = a_i / a_0.
 *
 * Candidates b_i zeta^(t_i) are accepted when
 * |1 + sum (b_i zeta^t_i)^2| < tol * (1 + sum |b_i|^2).
 */
std::uint64_t delta_scaled(unsigned m, std::uint64_t p, const ScalingVector& a, double tol = 1e-9,
                           const DeltaOptions& options = {});

}  // namespace fermat
