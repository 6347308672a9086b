#include "xorgame/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "xorgame/certify.hpp"
#include "xorgame/constants.hpp"

namespace xorgame {

namespace {

double xlnx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// ln[(exp_rem2(l*u) + exp_rem2(l*v)) / (2 exp_rem2(l))] with u = z2+z1,
// v = z2-z1, written through phi2 so it stays finite as l -> 0.
double log_exp_ratio(double lam, double u, double v) {
    const double num = u * u * phi2(lam * u) + v * v * phi2(lam * v);
    return std::log(num / (2.0 * phi2(lam)));
}

}  // namespace

double entropy(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("entropy: requires alpha in [0,1]");
    return -xlnx(alpha) - xlnx(1.0 - alpha);
}

Density Density::from_c(double c) {
    if (!(c > 2)) throw std::domain_error("Density: requires c > 2");
    return Density{c, q_inverse(c)};
}

Density Density::from_lambda(double lambda) {
    if (!(lambda > 0)) throw std::domain_error("Density: requires lambda > 0");
    return Density{q_of(lambda), lambda};
}

double j_K(double alpha, Zeta zeta, const Density& d, int K) {
    if (K < 3) throw std::domain_error("j_K: requires K >= 3");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("j_K: requires alpha in [0,1]");
    // zeta components must be positive wherever their ln is actually taken;
    // at alpha = 1 (resp. 0) the zeta_2 (resp. zeta_1) factor multiplies 0.
    if (!(zeta.z1 > 0) && alpha != 0.0) throw std::domain_error("j_K: zeta_1 must be positive");
    if (!(zeta.z2 > 0) && alpha != 1.0) throw std::domain_error("j_K: zeta_2 must be positive");
    const double a = alpha, ab = 1.0 - alpha;
    // (1/K) H + a ln(a/z1) + ab ln(ab/z2)  ==  (1/K - 1) H - a ln z1 - ab ln z2
    double val = (1.0 / K - 1.0) * entropy(a);
    if (a != 0.0) val -= a * std::log(zeta.z1);
    if (ab != 0.0) val -= ab * std::log(zeta.z2);
    val += log_exp_ratio(d.lambda, zeta.z2 + zeta.z1, zeta.z2 - zeta.z1) / d.c;
    return val;
}

double h_k_three(double alpha, Zeta zeta, double c, int k) {
    if (k < 1) throw std::domain_error("h_k_three: requires k >= 1");
    if (!(c * k > 2)) throw std::domain_error("h_k_three: requires ck > 2");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("h_k_three: alpha in [0,1]");
    if (!(zeta.z1 > 0) && alpha != 0.0) throw std::domain_error("h_k_three: zeta_1 must be positive");
    if (!(zeta.z2 > 0) && alpha != 1.0) throw std::domain_error("h_k_three: zeta_2 must be positive");
    const double lam = q_inverse(c * k);
    const double a = alpha, ab = 1.0 - alpha;
    double mid = 0.0;
    if (a != 0.0) mid += a * std::log(a / zeta.z1);
    if (ab != 0.0) mid += ab * std::log(ab / zeta.z2);
    return c * entropy(a) + c * k * mid + log_exp_ratio(lam, zeta.z2 + zeta.z1, zeta.z2 - zeta.z1);
}

double h_k_two(double alpha, double lambda, int k) {
    if (!(lambda > 0)) throw std::domain_error("h_k_two: requires lambda > 0");
    if (k < 1) throw std::domain_error("h_k_two: requires k >= 1");
    // Definition chaining: the three-argument form at zeta_lin with
    // c = Q(lambda)/k (so its internal Q^{-1}(ck) recovers lambda).
    return h_k_three(alpha, Zeta{alpha, 1.0 - alpha}, q_of(lambda) / k, k);
}

double l_K_lambda(double alpha, double lambda, int K) {
    if (!(lambda > 0)) throw std::domain_error("l_K: requires lambda > 0");
    const Density d = Density::from_lambda(lambda);
    return d.c * j_K(alpha, Zeta{alpha, 1.0 - alpha}, d, K);
}

double l_K(double alpha, double c, int K) {
    const Density d = Density::from_c(c);
    return d.c * j_K(alpha, Zeta{alpha, 1.0 - alpha}, d, K);
}

// ---- J_sqrt,3 and its alpha-partials ----------------------------------
//
// With g = sqrt(alpha/2), u = 1-a+g, v = 1-a-g and c = Q(lambda), the K=3
// sqrt-curve value simplifies (the (1-a)ln((1-a)/zeta_2) term vanishes and
// a ln(a/zeta_1) = (a/2) ln(2a)) to
//   J = (1/6) a ln a - (1/3)(1-a) ln(1-a) + (a/2) ln 2
//       + (1/c) ln[(u^2 phi2(l u) + v^2 phi2(l v)) / (2 phi2(l))].
// The partials below write S'/S through phi1 (phi1(z) z = e^z - 1), which
// keeps every factor finite as lambda -> 0 or v -> 0.

double j_sqrt3(double alpha, double lambda) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("j_sqrt3: requires alpha in (0,1)");
    if (!(lambda >= 0)) throw std::domain_error("j_sqrt3: requires lambda >= 0");
    const double a = alpha;
    const double g = std::sqrt(a / 2.0);
    const double u = 1.0 - a + g, v = 1.0 - a - g;
    const double D = u * u * phi2(lambda * u) + v * v * phi2(lambda * v);
    return xlnx(a) / 6.0 - xlnx(1.0 - a) / 3.0 + 0.5 * a * std::log(2.0) +
           phi2(lambda) / phi1(lambda) * std::log(D / (2.0 * phi2(lambda)));
}

double dj_sqrt3_dalpha(double alpha, double lambda) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("dj_sqrt3: requires alpha in (0,1)");
    if (!(lambda >= 0)) throw std::domain_error("dj_sqrt3: requires lambda >= 0");
    const double a = alpha;
    const double g = std::sqrt(a / 2.0);
    const double u = 1.0 - a + g, v = 1.0 - a - g;
    const double ua = -1.0 + 1.0 / (4.0 * g), va = -1.0 - 1.0 / (4.0 * g);
    const double D = u * u * phi2(lambda * u) + v * v * phi2(lambda * v);
    const double T1 = (u * ua * phi1(lambda * u) + v * va * phi1(lambda * v)) / D;
    return (std::log(a) + 1.0) / 6.0 + (std::log(1.0 - a) + 1.0) / 3.0 + 0.5 * std::log(2.0) +
           phi2(lambda) / phi1(lambda) * T1;
}

double d2j_sqrt3_dalpha2(double alpha, double lambda) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("d2j_sqrt3: requires alpha in (0,1)");
    if (!(lambda >= 0)) throw std::domain_error("d2j_sqrt3: requires lambda >= 0");
    const double a = alpha;
    const double g = std::sqrt(a / 2.0);
    const double u = 1.0 - a + g, v = 1.0 - a - g;
    const double ua = -1.0 + 1.0 / (4.0 * g), va = -1.0 - 1.0 / (4.0 * g);
    const double gpp = -1.0 / (16.0 * g * g * g);
    const double D = u * u * phi2(lambda * u) + v * v * phi2(lambda * v);
    const double T1 = (u * ua * phi1(lambda * u) + v * va * phi1(lambda * v)) / D;
    const double T2 = (gpp * (u * phi1(lambda * u) - v * phi1(lambda * v)) +
                       ua * ua * std::exp(lambda * u) + va * va * std::exp(lambda * v)) /
                      D;
    return 1.0 / (6.0 * a) - 1.0 / (3.0 * (1.0 - a)) +
           phi2(lambda) / phi1(lambda) * (T2 - T1 * T1);
}

// ---- zeta curves -------------------------------------------------------

ZetaCurve ZetaCurve::lin() { return ZetaCurve(Kind::Lin, 0, 0, 0); }

ZetaCurve ZetaCurve::sqrt_curve(int K) {
    if (K < 3) throw std::domain_error("ZetaCurve::sqrt_curve: requires K >= 3");
    return ZetaCurve(Kind::Sqrt, K, 0, 0);
}

ZetaCurve ZetaCurve::hat(int K, double c, double delta_hat) {
    if (K < 3) throw std::domain_error("ZetaCurve::hat: requires K >= 3");
    if (!(c > 2 && c < K)) throw std::domain_error("ZetaCurve::hat: requires c in (2,K)");
    if (!(delta_hat > 0 && delta_hat < 0.5))
        throw std::domain_error("ZetaCurve::hat: requires delta_hat in (0,1/2)");
    return ZetaCurve(Kind::Hat, K, c, delta_hat);
}

Zeta ZetaCurve::star(int K, double alpha) {
    // sqrt branch up to and including 0.99 beta_K; then sqrt for K=3, lin
    // for K >= 4 (the earlier branch wins at the shared endpoint).
    if (K == 3 || alpha <= 0.99 * beta_K(K))
        return Zeta{std::sqrt(alpha / (K - 1)), 1.0 - alpha};
    return Zeta{alpha, 1.0 - alpha};
}

Zeta ZetaCurve::operator()(double alpha) const {
    switch (kind_) {
        case Kind::Lin:
            return Zeta{alpha, 1.0 - alpha};
        case Kind::Sqrt:
            return Zeta{std::sqrt(alpha / (K_ - 1)), 1.0 - alpha};
        case Kind::Hat: {
            if (alpha <= 0.5) return star(K_, alpha);
            if (alpha <= 1.0 - delta_hat_) {
                const Zeta zs = star(K_, 1.0 - alpha);
                return Zeta{zs.z2, zs.z1};
            }
            return Zeta{1.0 - delta_hat_, delta_hat_};
        }
    }
    throw std::logic_error("ZetaCurve: unknown kind");
}

// ---- inequality helpers -------------------------------------------------

bool near_zero_bound_holds(double alpha, double c, int K) {
    const Density d = Density::from_c(c);
    const Zeta z = ZetaCurve::sqrt_curve(K)(alpha);
    const double lhs = j_K(alpha, z, d, K);
    const double rhs = (0.5 - 1.0 / K) * alpha * std::log(alpha / beta_K(K));
    return lhs <= rhs + 1e-12;
}

bool reflection_holds(double alpha, double c, int K) {
    const Density d = Density::from_c(c);
    const Zeta zs = ZetaCurve::star(K, 1.0 - alpha);
    const double lhs = j_K(alpha, Zeta{zs.z2, zs.z1}, d, K);
    const double rhs = j_K(1.0 - alpha, zs, d, K);
    return lhs <= rhs + 1e-12;
}

double ez_upper_bound_log(long m, const std::vector<long>& n_blocks, long ell, const ZetaCurve& curve) {
    if (ell < 1 || ell > m) throw std::domain_error("ez_upper_bound_log: requires 1 <= ell <= m");
    const int K = static_cast<int>(n_blocks.size());
    const double alpha = static_cast<double>(ell) / static_cast<double>(m);
    const Zeta z = curve(alpha);
    if (!(z.z2 > 0)) throw std::domain_error("ez_upper_bound_log: zeta_2(alpha) must be positive");
    double sum = 0.0;
    for (long ni : n_blocks) {
        const double ci = static_cast<double>(m) / static_cast<double>(ni);
        if (!(ci > 2)) throw std::domain_error("ez_upper_bound_log: requires m/n_i > 2");
        sum += j_K(alpha, z, Density::from_c(ci), K);
    }
    return 0.5 * (K - 1) * std::log(static_cast<double>(ell)) - 0.5 * K * std::log(z.z2) +
           static_cast<double>(m) * sum;
}

TailSearchResult tail_delta_search(int K, double c) {
    if (!(c > 2 && c < K)) throw std::domain_error("tail_delta_search: requires c in (2,K)");
    const Density d = Density::from_c(c);
    // eps_hat = -J_K(1, (1,0); c)/2; at alpha=1 only the ratio term survives.
    const double eps_hat = -0.5 * log_exp_ratio(d.lambda, 1.0, -1.0) / d.c;
    TailSearchResult res;
    res.eps_hat = eps_hat;
    double delta = 0.5 * beta_K(K);
    for (int step = 1; step <= 40; ++step, delta *= 0.5) {
        res.ladder_steps = step;
        const CertificationReport rep = certify_tail(K, c, delta, eps_hat);
        if (rep.pass) {
            res.found = true;
            res.delta_hat = delta;
            return res;
        }
    }
    res.found = false;  // ladder exhausted: reported, not crashed
    return res;
}

}  // namespace xorgame
