#include "fermat/real_experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "fermat/ed_formulas.hpp"
#include "fermat/errors.hpp"

namespace fermat {

BigInt fewnomial_bound(unsigned n) {
    const unsigned long numerator = 25ul * n * n - 3ul * n + 2ul;
    if (numerator % 2 != 0) throw InternalConsistencyError("fewnomial_bound: odd exponent of sqrt(2)");
    BigInt two_part, base_part;
    mpz_ui_pow_ui(two_part.get_mpz_t(), 2, numerator / 2);
    mpz_ui_pow_ui(base_part.get_mpz_t(), n + 2, 5ul * n);
    return two_part * base_part;
}

BigInt fewnomial_bound_orthant_form(unsigned n) {
    BigInt orthants, positive, base_part;
    mpz_ui_pow_ui(orthants.get_mpz_t(), 2, n + 1);
    mpz_ui_pow_ui(positive.get_mpz_t(), 2, binomial(5 * n, 2).get_ui());
    mpz_ui_pow_ui(base_part.get_mpz_t(), n + 2, 5ul * n);
    return orthants * positive * base_part;
}

namespace {

void require_odd_degree(unsigned d, const char* what) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument(std::string(what) + ": d must be odd and >= 3, got " + std::to_string(d));
}

}  // namespace

RealCount real_critical_points(unsigned n, unsigned d, const std::vector<double>& u, std::uint64_t seed,
                               const RealCountOptions& options) {
    require_odd_degree(d, "real_critical_count");
    if (u.size() != n + 1) throw std::invalid_argument("real_critical_count: u must have n + 1 entries");
    ComplexVector data(static_cast<Eigen::Index>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0.0) throw std::invalid_argument("real_critical_count: u has a zero entry");
        data[static_cast<Eigen::Index>(i)] = Complex(u[i], 0.0);
    }
    const CriticalPointSolve solve = solve_critical_points(n, d, data, seed, options.tracking);
    const auto failed_limit = options.tracking.max_failed_fraction * static_cast<double>(solve.endpoints.size());
    if (static_cast<double>(solve.counts.failed) > failed_limit)
        throw InconclusiveVerification("real_critical_count: " + std::to_string(solve.counts.failed) +
                                       " paths failed; rerun with a different seed");

    RealCount out;
    out.finite = solve.finite_solutions.size();
    for (const auto& x : solve.finite_solutions) {
        double imag = 0;
        for (Eigen::Index i = 0; i < x.size(); ++i) imag = std::max(imag, std::abs(x[i].imag()));
        const double scale = std::max(1.0, x.norm());
        if (imag < options.imag_tol * scale) ++out.real;
        else if (imag < options.borderline_tol * scale) ++out.borderline;
    }
    return out;
}

std::uint64_t real_critical_count(unsigned n, unsigned d, const std::vector<double>& u, std::uint64_t seed,
                                  const RealCountOptions& options) {
    return real_critical_points(n, d, u, seed, options).real;
}

std::vector<double> sample_real_data(unsigned size, std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> u(size);
    for (auto& v : u) {
        do v = normal(rng);
        while (std::abs(v) < 0.1);
    }
    return u;
}

RealScanReport conjecture_scan(unsigned n, unsigned d, std::uint64_t trials, std::uint64_t seed,
                               const RealCountOptions& options) {
    require_odd_degree(d, "conjecture_scan");
    if (n < 1) throw std::invalid_argument("conjecture_scan: n must be >= 1");
    RealScanReport report;
    report.n = n;
    report.d = d;
    report.trials = trials;
    report.seed = seed;
    report.conjecture_bound = 2ull * n - 1;
    report.fewnomial_bound = fewnomial_bound(n);
    report.imag_tol = options.imag_tol;
    const BigInt expected = eddeg_projective(n, d).ed_degree;

    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::vector<double> u = sample_real_data(n + 1, seed, t);
        const RealCount c = real_critical_points(n, d, u, seed + t, options);
        ++report.histogram[c.real];
        report.max_observed = std::max(report.max_observed, c.real);
        if (c.real > report.conjecture_bound) report.counterexample_candidates.push_back(t);
        if (c.borderline > 0) report.borderline_trials.push_back(t);
        if (BigInt(static_cast<unsigned long>(c.finite)) != expected) report.incomplete_trials.push_back(t);
    }
    return report;
}

}  // namespace fermat
