#include "fermat/cyclotomic.hpp"

#include "fermat/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace fermat {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntegerPolynomial IntegerPolynomial::x_pow_minus_one(std::size_t k) {
    std::vector<BigInt> c(k + 1, 0);
    c[0] = -1;
    c[k] += 1;
    return IntegerPolynomial(std::move(c));
}

void IntegerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntegerPolynomial(std::move(c));
}

PolynomialDivision divide_by_monic(const IntegerPolynomial& dividend,
                                   const IntegerPolynomial& divisor) {
    if (divisor.is_zero() || divisor.leading() != 1)
        throw std::invalid_argument("divide_by_monic: divisor must be monic");
    const long dd = divisor.degree();
    std::vector<BigInt> rem = dividend.coeffs();
    if (dividend.degree() < dd) return {IntegerPolynomial{}, dividend};

    std::vector<BigInt> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), 0);
    const auto& dc = divisor.coeffs();
    for (long k = dividend.degree(); k >= dd; --k) {
        const BigInt q = rem[static_cast<std::size_t>(k)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * dc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem))};
}

const IntegerPolynomial& cyclotomic_polynomial(std::uint64_t p) {
    if (p == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");

    static std::mutex mutex;
    static std::map<std::uint64_t, IntegerPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(p); it != cache.end()) return it->second;
    }

    IntegerPolynomial divisors_product({BigInt(1)});
    for (std::uint64_t q = 1; q < p; ++q)
        if (p % q == 0) divisors_product = divisors_product * cyclotomic_polynomial(q);

    auto [quotient, remainder] = divide_by_monic(IntegerPolynomial::x_pow_minus_one(p), divisors_product);
    if (!remainder.is_zero())
        throw InternalConsistencyError("cyclotomic_polynomial: x^p - 1 not divisible by lower factors");

    std::lock_guard lock(mutex);
    return cache.try_emplace(p, std::move(quotient)).first->second;
}

CyclotomicInteger::CyclotomicInteger(std::uint64_t order) : coeffs_(order, 0) {
    if (order == 0) throw std::invalid_argument("CyclotomicInteger: order must be positive");
}

CyclotomicInteger::CyclotomicInteger(std::uint64_t order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("CyclotomicInteger: order must be positive");
    if (coeffs_.size() != order)
        throw std::invalid_argument("CyclotomicInteger: expected " + std::to_string(order) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

CyclotomicInteger CyclotomicInteger::constant(std::uint64_t order, const BigInt& c) {
    CyclotomicInteger x(order);
    x.coeffs_[0] = c;
    return x;
}

CyclotomicInteger CyclotomicInteger::rotated(std::uint64_t shift) const {
    const std::uint64_t p = order();
    CyclotomicInteger out(p);
    shift %= p;
    for (std::uint64_t k = 0; k < p; ++k) out.coeffs_[(k + shift) % p] = coeffs_[k];
    return out;
}

IntegerPolynomial CyclotomicInteger::reduced() const {
    return divide_by_monic(IntegerPolynomial(coeffs_), cyclotomic_polynomial(order())).remainder;
}

void CyclotomicInteger::require_same_order(const CyclotomicInteger& other) const {
    if (order() != other.order())
        throw std::invalid_argument("CyclotomicInteger: order mismatch (" + std::to_string(order()) +
                                    " vs " + std::to_string(other.order()) + ")");
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& other) {
    require_same_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    CyclotomicInteger out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same_order(b);
    const std::uint64_t p = a.order();
    CyclotomicInteger out(p);
    for (std::uint64_t i = 0; i < p; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::uint64_t j = 0; j < p; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& x) {
    bool first = true;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        const BigInt& c = x.coeffs()[k];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const BigInt mag = abs(c);
        if (k == 0) os << mag;
        else {
            if (mag != 1) os << mag << "*";
            os << "z^" << k;
        }
    }
    if (first) os << "0";
    return os;
}

CyclotomicInteger root_power(std::uint64_t p, std::int64_t e) {
    if (p == 0) throw std::invalid_argument("root_power: order must be positive");
    const auto ip = static_cast<std::int64_t>(p);
    const auto k = static_cast<std::uint64_t>(((e % ip) + ip) % ip);
    std::vector<BigInt> c(p, 0);
    c[k] = 1;
    return CyclotomicInteger(p, std::move(c));
}

CyclotomicInteger add(const CyclotomicInteger& x, const CyclotomicInteger& y) { return x + y; }
CyclotomicInteger mul(const CyclotomicInteger& x, const CyclotomicInteger& y) { return x * y; }

bool is_zero(const CyclotomicInteger& x) { return x.reduced().is_zero(); }

bool equal_in_ring(const CyclotomicInteger& x, const CyclotomicInteger& y) { return is_zero(x - y); }

std::optional<BigInt> as_rational_integer(const CyclotomicInteger& x) {
    const IntegerPolynomial r = x.reduced();
    if (r.is_zero()) return BigInt(0);
    if (r.degree() == 0) return r.coeffs()[0];
    return std::nullopt;
}

CyclotomicReducer::CyclotomicReducer(std::uint64_t p) : order_(p) {
    const IntegerPolynomial& phi = cyclotomic_polynomial(p);
    rank_ = static_cast<std::size_t>(phi.degree());
    rows_.assign(p * rank_, 0);
    for (std::uint64_t k = 0; k < p; ++k) {
        std::vector<BigInt> mono(k + 1, 0);
        mono[k] = 1;
        const IntegerPolynomial r = divide_by_monic(IntegerPolynomial(std::move(mono)), phi).remainder;
        for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
            const BigInt& c = r.coeffs()[j];
            if (!c.fits_slong_p())
                throw std::overflow_error("CyclotomicReducer: reduction entry does not fit 64 bits");
            const std::int64_t v = c.get_si();
            rows_[k * rank_ + j] = v;
            max_abs_ = std::max(max_abs_, v < 0 ? -v : v);
        }
    }
}

std::span<const std::int64_t> CyclotomicReducer::row(std::uint64_t k) const {
    return {rows_.data() + (k % order_) * rank_, rank_};
}

bool CyclotomicReducer::is_zero(const CyclotomicInteger& x) const {
    if (x.order() != order_) throw std::invalid_argument("CyclotomicReducer: order mismatch");
    std::vector<BigInt> acc(rank_, 0);
    for (std::uint64_t k = 0; k < order_; ++k) {
        const BigInt& c = x.coeffs()[k];
        if (c == 0) continue;
        const auto r = row(k);
        for (std::size_t j = 0; j < rank_; ++j)
            if (r[j] != 0) acc[j] += c * static_cast<long>(r[j]);
    }
    for (const auto& a : acc)
        if (a != 0) return false;
    return true;
}

}  // namespace fermat
