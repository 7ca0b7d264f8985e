#pragma once

namespace isophase {

/// Edge laws of the two graphs, X ~ G(., p) and Y ~ G(., q), with the derived
/// coincidence constants. Build with derive_params.
struct ModelParams {
    double p = 0.5;
    double q = 0.5;

    double tau = 0.5;      ///< tau_{1,1} = pq + (1-p)(1-q)
    double tau12 = 0.25;   ///< tau_{1,2}
    double tau21 = 0.25;   ///< tau_{2,1}
    double lambda = 0.0;   ///< 1 / ln(1/tau)
    double omega = 0.0;    ///< max(pq, (1-p)(1-q)) / tau
    double beta = 0.0;     ///< sqrt(max(omega, tau12 tau21 / tau^3))
    double gamma = 0.0;    ///< lambda ln(tau / tau12)
    double gamma_mirror = 0.0; ///< lambda ln(tau / tau21), the p <-> q counterpart
    double phat = 0.5;     ///< max(p, 1-p)

    /// tau_{j,k} = p^j q^k + (1-p)^j (1-q)^k
    double tau_jk(int j, int k) const;
    double log_tau_jk(int j, int k) const;

    /// Same constants with the roles of p and q exchanged.
    ModelParams mirrored() const;
};

/// Throws ParameterError unless 0 < p, q < 1.
ModelParams derive_params(double p, double q);

/// Parameters of the embedding problem: host edges with probability 1/2.
inline ModelParams embedding_params(double p) { return derive_params(p, 0.5); }

} // namespace isophase
