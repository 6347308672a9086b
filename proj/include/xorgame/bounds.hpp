#pragma once

#include <utility>
#include <vector>

namespace xorgame {

/// Shannon entropy H(a) = -a ln a - (1-a) ln(1-a), with 0 ln 0 = 0.
/// Requires 0 <= a <= 1.
double entropy(double alpha);

/// A constraint density c > 2 together with lambda = Q^{-1}(c); computed once
/// and threaded through the bound functions.
struct Density {
    double c;
    double lambda;

    static Density from_c(double c);
    static Density from_lambda(double lambda);
};

struct Zeta {
    double z1;
    double z2;
};

/// J_K(alpha, zeta; c): the per-block exponential rate of the critical-set
/// bound. zeta components must be positive except at the alpha in {0, 1}
/// endpoints, where the 0 ln 0 convention applies.
double j_K(double alpha, Zeta zeta, const Density& d, int K);

/// Three-argument H_k (the k-XORSAT rate): c H(a) + c k (a ln(a/z1) +
/// (1-a) ln((1-a)/z2)) + the exp ratio term at lambda = Q^{-1}(ck).
double h_k_three(double alpha, Zeta zeta, double c, int k);

/// Two-argument H_k(alpha; lambda) = H_k(alpha, zeta_lin(alpha); Q(lambda)/k).
double h_k_two(double alpha, double lambda, int k);

/// L_K(alpha, c) = c J_K(alpha, zeta_lin(alpha); c).
double l_K(double alpha, double c, int K);
double l_K_lambda(double alpha, double lambda, int K);

/// J_sqrt,3(alpha, lambda) = J_3(alpha, zeta_sqrt(alpha); Q(lambda)) and its
/// first and second alpha-partials (closed forms; validated against central
/// finite differences in the tests).
double j_sqrt3(double alpha, double lambda);
double dj_sqrt3_dalpha(double alpha, double lambda);
double d2j_sqrt3_dalpha2(double alpha, double lambda);

/// Parameter paths (zeta_1(alpha), zeta_2(alpha)) along which J_K is driven
/// negative.
class ZetaCurve {
  public:
    enum class Kind { Lin, Sqrt, Hat };

    static ZetaCurve lin();
    static ZetaCurve sqrt_curve(int K);
    /// The piecewise curve: zeta* on [0, 1/2], its reflection on
    /// (1/2, 1-delta_hat], and the constant tail (1-delta_hat, delta_hat).
    static ZetaCurve hat(int K, double c, double delta_hat);

    Zeta operator()(double alpha) const;
    Kind kind() const { return kind_; }

    /// zeta*_K: sqrt curve on [0, 0.99 beta_K], then sqrt (K=3) or lin
    /// (K>=4) up to 1/2.
    static Zeta star(int K, double alpha);

  private:
    ZetaCurve(Kind k, int K, double c, double delta_hat)
        : kind_(k), K_(K), c_(c), delta_hat_(delta_hat) {}

    Kind kind_;
    int K_ = 0;
    double c_ = 0;
    double delta_hat_ = 0;
};

/// Test helper: J_K(a, zeta_sqrt(a); c) <= (1/2 - 1/K) a ln(a / beta_K)?
/// Holds for a in (0, beta_K), c in (2, K).
bool near_zero_bound_holds(double alpha, double c, int K);

/// Test helper for the reflection inequality: with zs = zeta_star(1-a),
/// J_K(a, (zs.z2, zs.z1); c) <= J_K(1-a, zs; c) (+1e-12 slack for the
/// symmetric point a = 1/2). Holds for a in [1/2, 1).
bool reflection_holds(double alpha, double c, int K);

/// Constant-free log-scale upper bound on E[Z^(ell)]:
/// ((K-1)/2) ln(ell) - (K/2) ln(zeta_2(a)) + m sum_i J_K(a, curve(a); c_i)
/// with a = ell/m and c_i = m/n_i. The multiplicative O(1) of the bound is
/// deliberately not included.
double ez_upper_bound_log(long m, const std::vector<long>& n_blocks, long ell, const ZetaCurve& curve);

struct TailSearchResult {
    bool found = false;
    double delta_hat = 0;
    double eps_hat = 0;
    int ladder_steps = 0;
};

/// Searches the dyadic ladder delta in {beta_K/2, beta_K/4, ...} for the
/// first delta such that interval certification proves
/// J_K(a, (1-delta, delta); c) <= -eps_hat on a in [1-delta, 1], where
/// eps_hat = -J_K(1, (1, 0); c)/2. An exhausted ladder is reported, not an
/// error. Requires c in (2, K).
TailSearchResult tail_delta_search(int K, double c);

}  // namespace xorgame
