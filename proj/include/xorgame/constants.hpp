#pragma once

// Scalar threshold constants and special functions for random K-XORGAME
// linear systems over GF(2).
//
// The density functions here are built from the exponential tail ratios
//   phi1(z) = (e^z - 1)/z,    phi2(z) = (e^z - 1 - z)/z^2,
// which are analytic, positive and strictly increasing on the whole real
// line. Writing Q(z) = phi1(z)/phi2(z) and exp_rem2(z) = z^2 phi2(z)
// avoids the 0/0 cancellation of the raw formulas near z = 0.

namespace xorgame {

/// (e^z - 1)/z, continued by 1 at z = 0.
double phi1(double z);

/// (e^z - 1 - z)/z^2, continued by 1/2 at z = 0.
double phi2(double z);

/// e^z - 1 - z, evaluated cancellation-safely (series for |z| < 0.5).
double exp_rem2(double z);

/// Q(z) = z(e^z - 1)/(e^z - 1 - z). Strictly increasing, Q(0) = 2.
/// Requires z >= 0.
double q_of(double z);

/// Inverse of Q on (2, inf), by bracketed bisection. Requires c > 2.
double q_inverse(double c);

/// F(z) = 1 + (e^z - 1)/z, strictly increasing for z > 0.
double big_F(double z);

/// h_K(mu) = mu / (e^{-mu}(e^mu - 1))^{K-1}. Requires mu > 0, K >= 2.
double h_K(double mu, int K);

/// Satisfiability threshold c*_K = h_K(Q^{-1}(K)). Requires K >= 3.
double c_star(int K);

/// Location of the minimum of h_K: F^{-1}(K). Requires K >= 3.
double tilde_mu(int K);

/// Minimum value of h_K: h_K(tilde_mu(K)); the empty-core threshold.
double tilde_c(int K);

/// Larger root of h_K(mu) = c, i.e. max{mu : h_K(mu) = c}.
/// Requires c > tilde_c(K).
double mu_of_c(double c, int K);

/// beta_K = exp(-(1/K + ln sqrt(K-1) - 1 + K/(2(K-1))) / (1/2 - 1/K)).
/// Requires K >= 3; satisfies 0 < beta_K < 0.2.
double beta_K(int K);

/// alpha_k = e k^{-k/(k-2)}. Requires k >= 3.
double alpha_k(int k);

/// alpha*_k = (1 - ln(exp_rem2(lambda_k)/lambda_k^2)/lambda_k)/2 with
/// lambda_k = Q^{-1}(k). Lies in (0, 1/2) and decreases in k.
double alpha_star(int k);

struct ConstantsBundle {
    int K = 0;
    double lambda_K = 0;    // Q^{-1}(K)
    double c_star = 0;      // h_K(lambda_K)
    double tilde_mu = 0;    // F^{-1}(K)
    double tilde_c = 0;     // h_K(tilde_mu)
    double beta = 0;
    double alpha_k = 0;
    double alpha_star = 0;
};

/// All constants for one K. Requires K >= 3.
ConstantsBundle compute_constants(int K);

}  // namespace xorgame
