#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>

namespace isophase {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (n)_m = n (n-1) ... (n-m+1); (n)_0 = 1 and (n)_m = 0 for m > n.
BigInt falling_factorial(std::int64_t n, std::int64_t m);
BigInt factorial(std::int64_t n);
/// Zero outside 0 <= k <= n.
BigInt binom(std::int64_t n, std::int64_t k);
/// n! / (k_1! ... k_r!) when the parts sum to n and are nonnegative, else 0.
BigInt multinomial(std::int64_t n, std::span<const std::int64_t> parts);
BigInt multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts);

/// C(k, 2) for small k, as a plain integer.
constexpr std::int64_t pairs_of(std::int64_t k) noexcept { return k < 2 ? 0 : k * (k - 1) / 2; }

double log_falling_factorial(std::int64_t n, std::int64_t m);
double log_binom(std::int64_t n, std::int64_t k);

/// Natural log of a nonnegative big integer (-inf for zero).
double log_big(const BigInt& v);
double to_double(const BigInt& v);
double to_double(const Rational& v);

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    void merge(const CompensatedSum& o) noexcept
    {
        add(o.sum_);
        add(o.comp_);
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace isophase
