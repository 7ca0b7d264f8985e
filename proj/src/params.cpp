#include "isophase/params.hpp"

#include "isophase/errors.hpp"

#include <algorithm>
#include <cmath>

namespace isophase {

namespace {

double log_add_exp(double a, double b)
{
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (std::isinf(hi) && hi < 0)
        return hi;
    return hi + std::log1p(std::exp(lo - hi));
}

} // namespace

double ModelParams::log_tau_jk(int j, int k) const
{
    return log_add_exp(j * std::log(p) + k * std::log(q), j * std::log1p(-p) + k * std::log1p(-q));
}

double ModelParams::tau_jk(int j, int k) const { return std::exp(log_tau_jk(j, k)); }

ModelParams ModelParams::mirrored() const { return derive_params(q, p); }

ModelParams derive_params(double p, double q)
{
    if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0))
        throw ParameterError("edge probabilities must lie strictly between 0 and 1");
    ModelParams mp;
    mp.p = p;
    mp.q = q;
    mp.tau = p * q + (1 - p) * (1 - q);
    mp.tau12 = p * q * q + (1 - p) * (1 - q) * (1 - q);
    mp.tau21 = p * p * q + (1 - p) * (1 - p) * (1 - q);
    mp.lambda = 1.0 / std::log(1.0 / mp.tau);
    mp.omega = std::max(p * q, (1 - p) * (1 - q)) / mp.tau;
    mp.beta = std::sqrt(std::max(mp.omega, mp.tau12 * mp.tau21 / (mp.tau * mp.tau * mp.tau)));
    mp.gamma = mp.lambda * std::log(mp.tau / mp.tau12);
    mp.gamma_mirror = mp.lambda * std::log(mp.tau / mp.tau21);
    mp.phat = std::max(p, 1 - p);
    return mp;
}

} // namespace isophase
