#include "fermat/expcyclo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

template <class T>
std::complex<T> int_pow(std::complex<T> z, std::uint64_t e) {
    std::complex<T> result(1, 0);
    while (e) {
        if (e & 1) result *= z;
        z *= z;
        e >>= 1;
    }
    return result;
}

void check_mp(unsigned m, std::uint64_t p, const char* what) {
    if (m < 1) throw std::invalid_argument(std::string(what) + ": m must be >= 1");
    if (p < 1) throw std::invalid_argument(std::string(what) + ": p must be >= 1");
}

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::uint64_t total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

SparseIntegerPolynomial::SparseIntegerPolynomial(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) throw std::invalid_argument("SparseIntegerPolynomial: need at least one variable");
}

void SparseIntegerPolynomial::add_term(const Exponent& e, const BigInt& c) {
    if (e.size() != num_vars_)
        throw std::invalid_argument("SparseIntegerPolynomial: exponent length " + std::to_string(e.size()) +
                                    " != " + std::to_string(num_vars_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SparseIntegerPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto deg = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [deg](const auto& t) { return total_degree(t.first) == deg; });
}

std::uint64_t SparseIntegerPolynomial::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

std::complex<double> SparseIntegerPolynomial::evaluate(const std::vector<std::complex<double>>& point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("SparseIntegerPolynomial::evaluate: wrong arity");
    std::vector<std::vector<std::complex<long double>>> powers(num_vars_);
    for (std::size_t i = 0; i < num_vars_; ++i) powers[i].push_back(1);
    std::complex<long double> sum = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<long double> term(static_cast<long double>(c.get_d()), 0);
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (!e[i]) continue;
            auto& table = powers[i];
            while (table.size() <= e[i]) table.push_back(table.back() * std::complex<long double>(point[i]));
            term *= table[e[i]];
        }
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::string SparseIntegerPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        const BigInt mag = abs(c);
        const bool constant = total_degree(e) == 0;
        bool need_star = false;
        if (mag != 1 || constant) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparseIntegerPolynomial& f) { return os << f.to_string(); }

CyclotomicCoefficientPolynomial::CyclotomicCoefficientPolynomial(std::size_t num_vars, std::uint64_t order)
    : num_vars_(num_vars), order_(order) {
    if (num_vars == 0) throw std::invalid_argument("CyclotomicCoefficientPolynomial: need at least one variable");
    if (order == 0) throw std::invalid_argument("CyclotomicCoefficientPolynomial: order must be positive");
}

void CyclotomicCoefficientPolynomial::add_term(const Exponent& e, const CyclotomicInteger& c) {
    if (e.size() != num_vars_) throw std::invalid_argument("CyclotomicCoefficientPolynomial: exponent length mismatch");
    if (c.order() != order_) throw std::invalid_argument("CyclotomicCoefficientPolynomial: coefficient order mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!is_zero(c)) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
}

std::complex<double> CyclotomicCoefficientPolynomial::evaluate(const std::vector<std::complex<double>>& point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("CyclotomicCoefficientPolynomial::evaluate: wrong arity");
    std::complex<long double> sum = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<long double> coeff = 0;
        for (std::uint64_t k = 0; k < order_; ++k)
            if (c.coeffs()[k] != 0)
                coeff += static_cast<long double>(c.coeffs()[k].get_d()) *
                         std::complex<long double>(unit_root(order_, static_cast<std::int64_t>(k)));
        std::complex<long double> term = coeff;
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (e[i]) term *= int_pow(std::complex<long double>(point[i]), e[i]);
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::uint64_t build_P_cost(unsigned m, std::uint64_t p) {
    // sum over k <= p^m of C(k + m, m) = C(p^m + m + 1, m + 1) term updates,
    // each touching m + 1 targets with p coefficients.
    long double degree = std::pow(static_cast<long double>(p), static_cast<long double>(m));
    long double terms = 1;
    for (unsigned i = 1; i <= m + 1; ++i) terms = terms * (degree + i) / i;
    const long double cost = terms * (m + 1) * static_cast<long double>(p);
    if (!(cost < 1.8e19L)) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(cost);
}

CyclotomicCoefficientPolynomial build_P(unsigned m, std::uint64_t p, const ExpCycloOptions& options) {
    check_mp(m, p, "build_P");
    const std::uint64_t factors = tuple_count(p, m, options.factor_cap);
    if (factors > options.factor_cap) throw WorkCapExceeded("build_P factor count", factors, options.factor_cap);
    const std::uint64_t cost = build_P_cost(m, p);
    if (cost > options.expansion_budget) throw WorkCapExceeded("build_P expansion", cost, options.expansion_budget);

    // Homogeneous of degree `factors`, so only the exponents of A_1..A_m are
    // packed into the key; the exponent of A_0 is implied.
    const unsigned width = static_cast<unsigned>(std::bit_width(factors));
    if (static_cast<std::uint64_t>(width) * m > 64)
        throw WorkCapExceeded("build_P exponent packing (bits)", static_cast<std::uint64_t>(width) * m, 64);
    auto unit = [width](unsigned var) { return std::uint64_t{1} << (width * (var - 1)); };

    std::vector<std::uint64_t> keys{0};
    std::vector<BigInt> coeffs(p, 0);
    coeffs[0] = 1;

    std::vector<std::uint64_t> t(m + 1, 0);  // t[k] in [1, p], t[0] unused
    std::fill(t.begin() + 1, t.end(), 1);
    for (std::uint64_t f = 0; f < factors; ++f) {
        std::unordered_map<std::uint64_t, std::size_t> index;
        index.reserve(keys.size() * 2);
        std::vector<std::uint64_t> next_keys;
        std::vector<BigInt> next_coeffs;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const BigInt* src = coeffs.data() + i * p;
            for (unsigned v = 0; v <= m; ++v) {
                const std::uint64_t key = v == 0 ? keys[i] : keys[i] + unit(v);
                const std::uint64_t shift = v == 0 ? 0 : t[v] % p;
                auto [it, inserted] = index.try_emplace(key, next_keys.size());
                if (inserted) {
                    next_keys.push_back(key);
                    next_coeffs.resize(next_coeffs.size() + p);
                }
                BigInt* dst = next_coeffs.data() + it->second * p;
                for (std::uint64_t c = 0; c < p; ++c)
                    if (src[c] != 0) dst[(c + shift) % p] += src[c];
            }
        }
        keys = std::move(next_keys);
        coeffs = std::move(next_coeffs);

        for (unsigned k = m; k >= 1; --k) {
            if (++t[k] <= p) break;
            t[k] = 1;
        }
    }

    CyclotomicCoefficientPolynomial result(m + 1, p);
    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        Exponent e(m + 1, 0);
        std::uint64_t rest = factors;
        for (unsigned v = 1; v <= m; ++v) {
            e[v] = static_cast<std::uint32_t>((keys[i] >> (width * (v - 1))) & mask);
            rest -= e[v];
        }
        e[0] = static_cast<std::uint32_t>(rest);
        std::vector<BigInt> c(coeffs.begin() + static_cast<std::ptrdiff_t>(i * p),
                              coeffs.begin() + static_cast<std::ptrdiff_t>((i + 1) * p));
        result.add_term(e, CyclotomicInteger(p, std::move(c)));
    }
    return result;
}

namespace {

// Monomials of P(1, A_1..A_k) in a graded order: with suffix sums
// s_i = a_i + ... + a_k, rank = sum_i C(s_i + k - i, k - i + 1). Every degree
// prefix is a prefix of the array, and the neighbour e - e_j sits at
// rank - sum_{i<=j} C(s_i + k - i - 1, k - i), constant along the innermost s_k.
class DenseSimplex {
public:
    DenseSimplex(unsigned k, std::uint64_t degree) : k_(k), degree_(degree) {
        const std::size_t rows = static_cast<std::size_t>(degree + k + 1);
        binom_.assign(rows, std::vector<std::uint64_t>(k + 2, 0));
        for (std::size_t n = 0; n < rows; ++n) {
            binom_[n][0] = 1;
            for (unsigned r = 1; r <= k + 1 && r <= n; ++r)
                binom_[n][r] = binom_[n - 1][r - 1] + (r < n ? binom_[n - 1][r] : 0);
        }
    }

    std::uint64_t C(std::int64_t n, unsigned r) const {
        return n < static_cast<std::int64_t>(r) ? 0 : binom_[static_cast<std::size_t>(n)][r];
    }

    std::uint64_t size() const { return C(static_cast<std::int64_t>(degree_ + k_), k_); }

    // Multiplies the array, of degree < layer_top, by (1 + sum_j sign_j A_j) in place.
    void multiply(std::vector<std::uint64_t>& a, std::uint64_t q, std::uint64_t layer_top,
                  const std::vector<bool>& negative) const {
        std::uint64_t* data = a.data();
        if (k_ == 1) {
            for (std::uint64_t s = layer_top; s >= 1; --s) data[s] = combine(data[s], data[s - 1], negative[1], q);
            return;
        }
        std::vector<std::int64_t> sigma(k_ + 1, 0);
        std::vector<std::pair<std::uint64_t, bool>> terms;
        terms.reserve(k_);
        for (std::uint64_t s = layer_top; s >= 1; --s) {
            sigma[1] = static_cast<std::int64_t>(s);
            const std::uint64_t base = C(sigma[1] + k_ - 1, k_);
            const std::uint64_t off = C(sigma[1] + k_ - 2, k_ - 1);
            descend(data, q, negative, sigma, terms, 2, base, off);
        }
    }

    // Calls fn(rank, exponents of A_1..A_k) for every monomial of degree <= degree.
    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<std::int64_t> sigma(k_ + 2, 0);
        std::vector<std::uint32_t> e(k_ + 1, 0);
        for (std::uint64_t s = 0; s <= degree_; ++s) {
            sigma[1] = static_cast<std::int64_t>(s);
            walk(sigma, e, 2, C(sigma[1] + k_ - 1, k_), fn);
        }
    }

private:
    static std::uint64_t combine(std::uint64_t v, std::uint64_t t, bool negative, std::uint64_t q) {
        if (negative) return v >= t ? v - t : v + (q - t);
        v += t;
        return v >= q ? v - q : v;
    }

    void descend(std::uint64_t* data, std::uint64_t q, const std::vector<bool>& negative,
                 std::vector<std::int64_t>& sigma, std::vector<std::pair<std::uint64_t, bool>>& terms,
                 unsigned level, std::uint64_t base, std::uint64_t off) const {
        const std::int64_t upper = sigma[level - 1];
        if (level == k_) {
            // innermost: sigma_k = t, rank = base + t
            const std::uint64_t off_k = off + 1;
            for (std::int64_t t = upper; t >= 0; --t) {
                const std::uint64_t idx = base + static_cast<std::uint64_t>(t);
                std::uint64_t v = data[idx];
                for (const auto& [o, neg] : terms) v = combine(v, data[idx - o], neg, q);
                if (t < upper) v = combine(v, data[idx - off], negative[k_ - 1], q);
                if (t >= 1) v = combine(v, data[idx - off_k], negative[k_], q);
                data[idx] = v;
            }
            return;
        }
        for (std::int64_t t = upper; t >= 0; --t) {
            sigma[level] = t;
            const bool active = t < upper;  // a_{level-1} >= 1
            if (active) terms.emplace_back(off, negative[level - 1]);
            const std::uint64_t next_base = base + C(t + k_ - level, k_ - level + 1);
            const std::uint64_t next_off = t >= 1 ? off + C(t + k_ - level - 1, k_ - level) : 0;
            descend(data, q, negative, sigma, terms, level + 1, next_base, next_off);
            if (active) terms.pop_back();
        }
    }

    template <class Fn>
    void walk(std::vector<std::int64_t>& sigma, std::vector<std::uint32_t>& e, unsigned level, std::uint64_t base,
              Fn& fn) const {
        if (level > k_) {
            for (unsigned j = 1; j <= k_; ++j) e[j] = static_cast<std::uint32_t>(sigma[j] - sigma[j + 1]);
            fn(base, e);
            return;
        }
        for (std::int64_t t = 0; t <= sigma[level - 1]; ++t) {
            sigma[level] = t;
            walk(sigma, e, level + 1, base + C(t + k_ - level, k_ - level + 1), fn);
        }
        sigma[level] = 0;
    }

    unsigned k_;
    std::uint64_t degree_;
    std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace

SparseIntegerPolynomial build_Q_order_two_dense(unsigned m, const ExpCycloOptions& options) {
    check_mp(m, 2, "build_Q");
    const std::uint64_t factors = tuple_count(2, m, options.factor_cap);
    if (factors > options.factor_cap) throw WorkCapExceeded("build_Q factor count", factors, options.factor_cap);
    // Entry count C(2^m + m, m), checked before allocating the binomial table.
    long double entries = 1;
    for (unsigned i = 1; i <= m; ++i) entries = entries * (static_cast<long double>(factors) + i) / i;
    if (!(entries <= static_cast<long double>(options.dense_entry_cap)))
        throw WorkCapExceeded("build_Q dense entries",
                              entries < 1.8e19L ? static_cast<std::uint64_t>(entries)
                                                : std::numeric_limits<std::uint64_t>::max(),
                              options.dense_entry_cap);

    const DenseSimplex layout(m, factors);
    // |coefficient| <= (m + 1)^(2^m); primes are taken until their product exceeds twice that.
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), m + 1, factors);
    std::vector<std::uint64_t> primes;
    BigInt modulus = 1;
    BigInt candidate = (BigInt(1) << 61) - 1;
    while (modulus <= 2 * bound) {
        while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) candidate -= 2;
        primes.push_back(candidate.get_ui());
        modulus *= candidate;
        candidate -= 2;
    }

    std::vector<std::uint64_t> a(static_cast<std::size_t>(layout.size()));
    std::vector<std::uint32_t> even_exponents;  // halved, A_0 first
    std::vector<std::vector<std::uint64_t>> residues(primes.size());
    std::vector<bool> negative(m + 1, false);
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const std::uint64_t q = primes[pi];
        std::fill(a.begin(), a.end(), 0);
        a[0] = 1;
        for (std::uint64_t f = 0; f < factors; ++f) {
            // zeta^(t_k) = -1 for t_k = 1, +1 for t_k = 2
            for (unsigned j = 1; j <= m; ++j) negative[j] = ((f >> (m - j)) & 1) == 0;
            layout.multiply(a, q, f + 1, negative);
        }
        layout.for_each([&](std::uint64_t rank, const std::vector<std::uint32_t>& e) {
            std::uint64_t degree = 0;
            bool odd = false;
            for (unsigned j = 1; j <= m; ++j) {
                degree += e[j];
                odd = odd || (e[j] & 1);
            }
            const std::uint64_t e0 = factors - degree;
            odd = odd || (e0 & 1);
            if (odd) {
                if (a[rank] != 0)
                    throw InternalConsistencyError("build_Q: odd exponent with nonzero coefficient in P_{" +
                                                   std::to_string(m) + ",2}");
                return;
            }
            if (pi == 0) {
                even_exponents.push_back(static_cast<std::uint32_t>(e0 / 2));
                for (unsigned j = 1; j <= m; ++j) even_exponents.push_back(e[j] / 2);
            }
            residues[pi].push_back(a[rank]);
        });
    }
    std::vector<std::uint64_t>().swap(a);

    SparseIntegerPolynomial Q(m + 1);
    const std::size_t count = residues[0].size();
    BigInt value, step, prefix, inverse, r;
    for (std::size_t t = 0; t < count; ++t) {
        value = static_cast<unsigned long>(residues[0][t]);
        prefix = static_cast<unsigned long>(primes[0]);
        for (std::size_t pi = 1; pi < primes.size(); ++pi) {
            const BigInt qi = static_cast<unsigned long>(primes[pi]);
            r = static_cast<unsigned long>(residues[pi][t]);
            step = r - value;
            mpz_invert(inverse.get_mpz_t(), BigInt(prefix % qi).get_mpz_t(), qi.get_mpz_t());
            step = step * inverse;
            mpz_mod(step.get_mpz_t(), step.get_mpz_t(), qi.get_mpz_t());
            value += prefix * step;
            prefix *= qi;
        }
        if (2 * value > modulus) value -= modulus;
        if (value == 0) continue;
        Exponent e(even_exponents.begin() + static_cast<std::ptrdiff_t>(t * (m + 1)),
                   even_exponents.begin() + static_cast<std::ptrdiff_t>((t + 1) * (m + 1)));
        Q.add_term(e, value);
    }
    return Q;
}

SparseIntegerPolynomial build_Q(unsigned m, std::uint64_t p, const ExpCycloOptions& options) {
    if (m >= 1 && p == 2 && build_P_cost(m, p) > options.expansion_budget) return build_Q_order_two_dense(m, options);
    const CyclotomicCoefficientPolynomial P = build_P(m, p, options);
    SparseIntegerPolynomial Q(m + 1);
    for (const auto& [e, c] : P.terms()) {
        Exponent reduced(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] % p != 0)
                throw InternalConsistencyError("build_Q: exponent " + std::to_string(e[i]) + " of A_" +
                                               std::to_string(i) + " not divisible by p = " + std::to_string(p));
            reduced[i] = static_cast<std::uint32_t>(e[i] / p);
        }
        const auto value = as_rational_integer(c);
        if (!value) throw InternalConsistencyError("build_Q: coefficient is not a rational integer");
        Q.add_term(reduced, *value);
    }
    return Q;
}

ProductEvaluation evaluate_Q_product(unsigned m, std::uint64_t p, const std::vector<std::complex<double>>& point,
                                     const ExpCycloOptions& options) {
    check_mp(m, p, "eval_Q");
    if (point.size() != m + 1)
        throw std::invalid_argument("eval_Q: point must have m + 1 = " + std::to_string(m + 1) + " entries");
    const std::uint64_t factors = tuple_count(p, m, options.evaluation_cap);
    if (factors > options.evaluation_cap) throw WorkCapExceeded("eval_Q factor count", factors, options.evaluation_cap);

    std::vector<std::complex<double>> b(m + 1);
    double magnitude = 0;
    for (unsigned i = 0; i <= m; ++i) {
        b[i] = principal_root(point[i], p);
        magnitude += std::abs(b[i]);
    }
    // rotated[k][t] = zeta^(t+1) b_k, t+1 in [1, p]
    std::vector<std::vector<std::complex<double>>> rotated(m + 1, std::vector<std::complex<double>>(p));
    for (unsigned k = 1; k <= m; ++k)
        for (std::uint64_t t = 0; t < p; ++t) rotated[k][t] = unit_root(p, static_cast<std::int64_t>(t + 1)) * b[k];

    ProductEvaluation out;
    out.factors = factors;
    const double log_magnitude = magnitude > 0 ? std::log(magnitude) : -std::numeric_limits<double>::infinity();
    std::vector<std::complex<double>> partial(m + 1);
    partial[0] = b[0];
    auto recurse = [&](auto&& self, unsigned k) -> void {
        for (std::uint64_t t = 0; t < p; ++t) {
            partial[k] = partial[k - 1] + rotated[k][t];
            if (k < m) {
                self(self, k + 1);
                continue;
            }
            const double a = std::abs(partial[m]);
            out.log_scale += log_magnitude;
            out.min_relative_factor = std::min(out.min_relative_factor, magnitude > 0 ? a / magnitude : 0.0);
            if (a == 0) {
                out.log_abs = -std::numeric_limits<double>::infinity();
                out.phase = 0;
            } else if (out.phase != std::complex<double>(0)) {
                out.log_abs += std::log(a);
                out.phase *= partial[m] / a;
                out.phase /= std::abs(out.phase);
            }
        }
    };
    recurse(recurse, 1);
    out.value = std::isinf(out.log_abs) ? std::complex<double>(0) : out.phase * std::exp(out.log_abs);
    return out;
}

std::complex<double> eval_Q(unsigned m, std::uint64_t p, const std::vector<std::complex<double>>& point,
                            const ExpCycloOptions& options) {
    return evaluate_Q_product(m, p, point, options).value;
}

ScaledVanishingResult scaled_vanishing_detail(unsigned m, std::uint64_t p, const ScalingVector& a, double tol,
                                              const ExpCycloOptions& options) {
    check_mp(m, p, "scaled_vanishing");
    if (a.size() != m + 1)
        throw std::invalid_argument("scaled_vanishing: scaling vector must have m + 1 = " + std::to_string(m + 1) +
                                    " entries");
    if (!(tol > 0)) throw std::invalid_argument("scaled_vanishing: tolerance must be positive");
    ScaledVanishingResult r;
    if (p % 2 == 1) {
        r.q_order = p;
        for (const auto& ai : a.entries()) r.q_point.push_back(ai * ai);
    } else {
        r.q_order = p / 2;
        r.q_point = a.entries();
    }
    r.evaluation = evaluate_Q_product(m, r.q_order, r.q_point, options);
    r.vanishing = r.evaluation.min_relative_factor < tol;
    return r;
}

bool scaled_vanishing(unsigned m, std::uint64_t p, const ScalingVector& a, double tol,
                      const ExpCycloOptions& options) {
    return scaled_vanishing_detail(m, p, a, tol, options).vanishing;
}

}  // namespace fermat
