#include "isophase/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace isophase {

BigInt falling_factorial(std::int64_t n, std::int64_t m)
{
    if (m < 0)
        return 0;
    if (m > n)
        return 0;
    BigInt r = 1;
    for (std::int64_t i = 0; i < m; ++i)
        r *= (n - i);
    return r;
}

BigInt factorial(std::int64_t n)
{
    return n < 0 ? BigInt(0) : falling_factorial(n, n);
}

BigInt binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt multinomial(std::int64_t n, std::span<const std::int64_t> parts)
{
    std::int64_t total = 0;
    for (auto k : parts) {
        if (k < 0)
            return 0;
        total += k;
    }
    if (total != n)
        return 0;
    BigInt r = 1;
    std::int64_t remaining = n;
    for (auto k : parts) {
        r *= binom(remaining, k);
        remaining -= k;
    }
    return r;
}

BigInt multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts)
{
    const std::vector<std::int64_t> v(parts);
    return multinomial(n, std::span<const std::int64_t>(v));
}

double log_falling_factorial(std::int64_t n, std::int64_t m)
{
    if (m < 0 || m > n)
        return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(n - m) + 1.0);
}

double log_binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log_big(const BigInt& v)
{
    if (v <= 0)
        return -std::numeric_limits<double>::infinity();
    const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(v)) + 1;
    if (bits <= 900)
        return std::log(v.convert_to<double>());
    const auto shift = static_cast<unsigned>(bits - 64);
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const Rational& v) { return v.convert_to<double>(); }

} // namespace isophase
