#include "fermat/vanishing_sums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fermat/cyclotomic.hpp"
#include "fermat/errors.hpp"

namespace fermat {

ScalingVector::ScalingVector(std::vector<std::complex<double>> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!(std::abs(entries_[i]) > kMinModulus))
            throw std::invalid_argument("ScalingVector: entry " + std::to_string(i) + " is zero");
}

ScalingVector ScalingVector::ones(std::size_t size) {
    return ScalingVector(std::vector<std::complex<double>>(size, {1.0, 0.0}));
}

ScalingVector ScalingVector::select(const std::vector<std::size_t>& indices) const {
    std::vector<std::complex<double>> sub;
    sub.reserve(indices.size());
    for (std::size_t i : indices) sub.push_back(entries_.at(i));
    return ScalingVector(std::move(sub));
}

std::uint64_t tuple_count(std::uint64_t p, unsigned m, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (p != 0 && total > cap / p) return cap + 1;
        total *= p;
    }
    return total;
}

std::complex<double> principal_root(std::complex<double> z, std::uint64_t p) {
    if (p == 1) return z;
    return std::exp(std::log(z) / static_cast<double>(p));
}

std::complex<double> unit_root(std::uint64_t p, std::int64_t k) {
    const auto ip = static_cast<std::int64_t>(p);
    const std::int64_t r = ((k % ip) + ip) % ip;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p));
}

namespace {

void check_delta_args(unsigned m, std::uint64_t p, const DeltaOptions& options, const char* what) {
    if (m < 1) throw std::invalid_argument(std::string(what) + ": m must be >= 1");
    if (p < 1) throw std::invalid_argument(std::string(what) + ": p must be >= 1");
    if (p > options.max_order)
        throw std::invalid_argument(std::string(what) + ": p = " + std::to_string(p) +
                                    " exceeds the maximum order " + std::to_string(options.max_order));
    const std::uint64_t work = tuple_count(p, m, options.work_cap);
    if (work > options.work_cap) throw WorkCapExceeded(std::string(what) + " enumeration", work, options.work_cap);
}

// Depth-first walk over [1, p]^m keeping the reduced partial sums
// 1 + zeta^(e_1) + ... + zeta^(e_j) on a stack.
std::uint64_t count_reduced(unsigned m, const CyclotomicReducer& reducer,
                            const std::vector<std::uint64_t>& exponents) {
    const std::size_t rank = reducer.rank();
    const std::size_t p = exponents.size();
    std::vector<std::int64_t> stack((m + 1) * rank, 0);
    {
        const auto one = reducer.row(0);
        std::copy(one.begin(), one.end(), stack.begin());
    }
    auto level = [&](unsigned j) { return stack.data() + j * rank; };

    std::uint64_t count = 0;
    std::vector<std::size_t> index(m, 0);
    unsigned depth = 0;  // number of fixed terms on the stack
    while (true) {
        if (depth + 1 == m) {
            const std::int64_t* base = level(depth);
            for (std::size_t t = 0; t < p; ++t) {
                const auto r = reducer.row(exponents[t]);
                bool zero = true;
                for (std::size_t k = 0; k < rank; ++k)
                    if (base[k] + r[k] != 0) { zero = false; break; }
                count += zero;
            }
            // pop
            while (depth > 0 && ++index[depth - 1] == p) {
                index[depth - 1] = 0;
                --depth;
            }
            if (depth == 0) break;
            // replace the top term with the next choice
            const std::int64_t* below = level(depth - 1);
            std::int64_t* top = level(depth);
            const auto r = reducer.row(exponents[index[depth - 1]]);
            for (std::size_t k = 0; k < rank; ++k) top[k] = below[k] + r[k];
            continue;
        }
        // push the first choice for the next position
        const std::int64_t* below = level(depth);
        std::int64_t* top = level(depth + 1);
        const auto r = reducer.row(exponents[index[depth]]);
        for (std::size_t k = 0; k < rank; ++k) top[k] = below[k] + r[k];
        ++depth;
    }
    return count;
}

// Exact fallback for orders whose reduction rows could overflow 64-bit sums.
std::uint64_t count_exact(unsigned m, std::uint64_t p, const std::vector<std::uint64_t>& exponents) {
    std::vector<CyclotomicInteger> partial;
    partial.reserve(m + 1);
    partial.push_back(root_power(p, 0));
    std::uint64_t count = 0;
    auto recurse = [&](auto&& self, unsigned j) -> void {
        for (std::uint64_t e : exponents) {
            partial.push_back(partial.back() + root_power(p, static_cast<std::int64_t>(e)));
            if (j + 1 == m) count += is_zero(partial.back());
            else self(self, j + 1);
            partial.pop_back();
        }
    };
    recurse(recurse, 0);
    return count;
}

}  // namespace

std::uint64_t delta_with_generator(unsigned m, std::uint64_t p, std::uint64_t generator,
                                   const DeltaOptions& options) {
    check_delta_args(m, p, options, "delta");
    if (std::gcd(generator, p) != 1)
        throw std::invalid_argument("delta: generator must be coprime to p");

    // t ranges over [1, p]; the term is zeta^(2 t generator).
    std::vector<std::uint64_t> exponents(p);
    for (std::uint64_t t = 1; t <= p; ++t) exponents[t - 1] = (2 * t * (generator % p)) % p;

    const CyclotomicReducer reducer(p);
    const auto bound = static_cast<long double>(m + 1) * static_cast<long double>(reducer.max_abs_entry());
    if (bound < static_cast<long double>(std::int64_t{1} << 62)) return count_reduced(m, reducer, exponents);
    return count_exact(m, p, exponents);
}

std::uint64_t delta(unsigned m, std::uint64_t p, const DeltaOptions& options) {
    return delta_with_generator(m, p, 1, options);
}

std::uint64_t delta_closed_form(unsigned m, std::uint64_t p) {
    if (p < 1) throw std::invalid_argument("delta_closed_form: p must be >= 1");
    switch (m) {
        case 1: return p % 4 == 0 ? 2 : 0;
        case 2: return p % 6 == 0 ? 8 : (p % 6 == 3 ? 2 : 0);
        case 3: return p % 4 == 0 ? 12 * p - 24 : 0;
        default:
            throw std::invalid_argument("delta_closed_form: no closed form for m = " + std::to_string(m));
    }
}

std::uint64_t delta_fast(unsigned m, std::uint64_t p, const DeltaOptions& options) {
    if (m >= 1 && m <= 3) return delta_closed_form(m, p);
    return delta(m, p, options);
}

std::uint64_t delta_scaled(unsigned m, std::uint64_t p, const ScalingVector& a, double tol,
                           const DeltaOptions& options) {
    check_delta_args(m, p, options, "delta_scaled");
    if (a.size() != m + 1)
        throw std::invalid_argument("delta_scaled: scaling vector must have m + 1 = " + std::to_string(m + 1) +
                                    " entries, got " + std::to_string(a.size()));
    if (!(tol > 0)) throw std::invalid_argument("delta_scaled: tolerance must be positive");

    // squares[i][t] = (b_i zeta^t)^2
    std::vector<std::vector<std::complex<double>>> squares(m, std::vector<std::complex<double>>(p));
    double scale = 1.0;
    for (unsigned i = 0; i < m; ++i) {
        const std::complex<double> b = principal_root(a[i + 1] / a[0], p);
        scale += std::norm(b);
        for (std::uint64_t t = 0; t < p; ++t) {
            const std::complex<double> x = b * unit_root(p, static_cast<std::int64_t>(t));
            squares[i][t] = x * x;
        }
    }
    const double threshold = tol * scale;

    std::uint64_t count = 0;
    std::vector<std::complex<double>> partial(m + 1);
    partial[0] = 1.0;
    auto recurse = [&](auto&& self, unsigned j) -> void {
        for (std::uint64_t t = 0; t < p; ++t) {
            partial[j + 1] = partial[j] + squares[j][t];
            if (j + 1 == m) count += std::abs(partial[j + 1]) < threshold;
            else self(self, j + 1);
        }
    };
    recurse(recurse, 0);
    return count;
}

}  // namespace fermat
