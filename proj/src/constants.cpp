#include "xorgame/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xorgame {

namespace {

// phi1 series: sum_{j>=0} z^j/(j+1)!.  phi2 series: sum_{j>=0} z^j/(j+2)!.
// 16 terms give a truncation error below 1e-22 for |z| < 0.5.
constexpr int kSeriesTerms = 16;

double phi_series(double z, int shift) {
    double term = 1.0, sum = 0.0;
    double fact = 1.0;
    for (int j = 2; j <= shift; ++j) fact *= j;
    term = 1.0 / fact;
    sum = term;
    for (int j = 1; j < kSeriesTerms; ++j) {
        term *= z / static_cast<double>(j + shift);
        sum += term;
    }
    return sum;
}

// Bisection for strictly increasing f on [lo, hi] with f(lo) <= target <=
// f(hi); runs until the bracket cannot shrink, i.e. to machine precision.
template <typename F>
double bisect_increasing(F f, double lo, double hi, double target) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double phi1(double z) {
    if (std::fabs(z) < 0.5) return phi_series(z, 1);
    return std::expm1(z) / z;
}

double phi2(double z) {
    if (std::fabs(z) < 0.5) return phi_series(z, 2);
    return (std::expm1(z) - z) / (z * z);
}

double exp_rem2(double z) {
    if (std::fabs(z) < 0.5) return z * z * phi_series(z, 2);
    return std::expm1(z) - z;
}

double q_of(double z) {
    if (!(z >= 0)) throw std::domain_error("q_of: requires z >= 0");
    return phi1(z) / phi2(z);
}

double q_inverse(double c) {
    if (!(c > 2)) throw std::domain_error("q_inverse: requires c > 2 (Q maps (0,inf) to (2,inf))");
    double hi = 60.0;
    while (q_of(hi) < c) hi *= 2;  // c beyond Q(60) ~ 60 only for huge c
    return bisect_increasing([](double z) { return q_of(z); }, 1e-9, hi, c);
}

double big_F(double z) {
    if (!(z > 0)) throw std::domain_error("big_F: requires z > 0");
    return 1.0 + phi1(z);
}

double h_K(double mu, int K) {
    if (!(mu > 0)) throw std::domain_error("h_K: requires mu > 0");
    if (K < 2) throw std::domain_error("h_K: requires K >= 2");
    // e^{-mu}(e^mu - 1) = 1 - e^{-mu}
    return mu / std::pow(-std::expm1(-mu), K - 1);
}

double c_star(int K) {
    if (K < 3) throw std::domain_error("c_star: requires K >= 3");
    return h_K(q_inverse(static_cast<double>(K)), K);
}

double tilde_mu(int K) {
    if (K < 3) throw std::domain_error("tilde_mu: requires K >= 3");
    // F is strictly increasing with F(0+) = 2, so F^{-1}(K) is bracketed by
    // [tiny, hi] once F(hi) > K.
    double hi = 8.0;
    while (big_F(hi) < K) hi *= 2;
    return bisect_increasing([](double z) { return big_F(z); }, 1e-9, hi, static_cast<double>(K));
}

double tilde_c(int K) { return h_K(tilde_mu(K), K); }

double mu_of_c(double c, int K) {
    if (K < 3) throw std::domain_error("mu_of_c: requires K >= 3");
    const double mu_min = tilde_mu(K);
    if (!(c > h_K(mu_min, K)))
        throw std::domain_error("mu_of_c: requires c > tilde_c(K)");
    // h_K is strictly increasing on [tilde_mu, inf); grow the bracket until
    // h_K exceeds c, then bisect.
    double hi = mu_min + 1.0;
    while (h_K(hi, K) < c) hi *= 2;
    const int kk = K;
    return bisect_increasing([kk](double mu) { return h_K(mu, kk); }, mu_min, hi, c);
}

double beta_K(int K) {
    if (K < 3) throw std::domain_error("beta_K: requires K >= 3");
    const double num = 1.0 / K + std::log(std::sqrt(static_cast<double>(K - 1))) - 1.0 +
                       static_cast<double>(K) / (2.0 * (K - 1));
    const double den = 0.5 - 1.0 / K;
    return std::exp(-num / den);
}

double alpha_k(int k) {
    if (k < 3) throw std::domain_error("alpha_k: requires k >= 3");
    return std::exp(1.0) * std::pow(static_cast<double>(k),
                                    -static_cast<double>(k) / (k - 2));
}

double alpha_star(int k) {
    if (k < 3) throw std::domain_error("alpha_star: requires k >= 3");
    const double lam = q_inverse(static_cast<double>(k));
    // exp_rem2(lam)/lam^2 = phi2(lam)
    return 0.5 * (1.0 - std::log(phi2(lam)) / lam);
}

ConstantsBundle compute_constants(int K) {
    if (K < 3) throw std::domain_error("compute_constants: requires K >= 3");
    ConstantsBundle b;
    b.K = K;
    b.lambda_K = q_inverse(static_cast<double>(K));
    b.c_star = h_K(b.lambda_K, K);
    b.tilde_mu = tilde_mu(K);
    b.tilde_c = h_K(b.tilde_mu, K);
    b.beta = beta_K(K);
    b.alpha_k = alpha_k(K);
    b.alpha_star = alpha_star(K);
    return b;
}

}  // namespace xorgame
