/**
 * @file real_experiments.hpp
 * @brief Real critical points of the squared distance to a real Fermat cone:
 *        the fewnomial upper bound and a seeded experimental scan.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/homotopy.hpp"

namespace fermat {

/// 2^((25n^2 - 3n + 2) / 2) * (n + 2)^(5n)
BigInt fewnomial_bound(unsigned n);

/// The same bound written as 2^(n+1) * 2^C(5n, 2) * (n + 2)^(5n).
BigInt fewnomial_bound_orthant_form(unsigned n);

struct RealCountOptions {
    TrackingOptions tracking;
    /// An endpoint is real when max |Im x_i| < imag_tol * max(1, |x|).
    double imag_tol = 1e-7;
    /// Endpoints with imaginary part between imag_tol and this are borderline.
    double borderline_tol = 1e-4;
};

struct RealCount {
    std::uint64_t real = 0;
    std::uint64_t finite = 0;
    std::uint64_t borderline = 0;
};

/// Requires odd d >= 3 and real u with nonzero entries.
RealCount real_critical_points(unsigned n, unsigned d, const std::vector<double>& u, std::uint64_t seed,
                               const RealCountOptions& options = {});

std::uint64_t real_critical_count(unsigned n, unsigned d, const std::vector<double>& u, std::uint64_t seed,
                                  const RealCountOptions& options = {});

/// Real Gaussian entries with |u_i| >= 0.1, from the stream (seed, trial).
std::vector<double> sample_real_data(unsigned size, std::uint64_t seed, std::uint64_t trial);

struct RealScanReport {
    unsigned n = 0;
    unsigned d = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    /// real-solution count -> number of trials
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::uint64_t max_observed = 0;
    std::uint64_t conjecture_bound = 0;
    BigInt fewnomial_bound;
    /// Trials whose real count exceeds conjecture_bound.
    std::vector<std::uint64_t> counterexample_candidates;
    /// Trials with at least one borderline endpoint.
    std::vector<std::uint64_t> borderline_trials;
    /// Trials whose distinct finite count differs from the ED-degree.
    std::vector<std::uint64_t> incomplete_trials;
    double imag_tol = 0.0;

    friend bool operator==(const RealScanReport&, const RealScanReport&) = default;
};

RealScanReport conjecture_scan(unsigned n, unsigned d, std::uint64_t trials, std::uint64_t seed,
                               const RealCountOptions& options = {});

}  // namespace fermat
