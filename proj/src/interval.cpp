#include "xorgame/interval.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xorgame::iv {

namespace {

double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
double dn(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up2(double x) { return up(up(x)); }
double dn2(double x) { return dn(dn(x)); }

constexpr double kLn2Hi = 0.6931471805599454;        // > ln 2
constexpr double kNegInvELo = -0.36787944117144245;  // < -1/e
// 1/e with one-ulp guards on both sides, for the xlnx critical point test.
constexpr double kInvEConservLo = 0.36787944117144217;
constexpr double kInvEConservHi = 0.36787944117144245;

void check(const Interval& r) {
    if (std::isnan(r.lo) || std::isnan(r.hi) || r.lo > r.hi)
        throw std::domain_error("interval: invalid bounds");
}

}  // namespace

Interval make(double lo, double hi) {
    Interval r{lo, hi};
    check(r);
    return r;
}

Interval point(double x) { return make(x, x); }

Interval hull(Interval a, Interval b) { return make(std::min(a.lo, b.lo), std::max(a.hi, b.hi)); }

bool contains(Interval a, double x) { return a.lo <= x && x <= a.hi; }

bool subset(Interval inner, Interval outer) { return outer.lo <= inner.lo && inner.hi <= outer.hi; }

double width(Interval a) { return a.hi - a.lo; }

double midpoint(Interval a) { return 0.5 * (a.lo + a.hi); }

Interval neg(Interval a) { return Interval{-a.hi, -a.lo}; }

Interval add(Interval a, Interval b) { return Interval{dn(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval sub(Interval a, Interval b) { return Interval{dn(a.lo - b.hi), up(a.hi - b.lo)}; }

Interval mul(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval{dn(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
}

Interval div(Interval a, Interval b) {
    if (b.lo <= 0.0 && b.hi >= 0.0) throw std::domain_error("interval div: denominator contains 0");
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return Interval{dn(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
}

Interval pow_int(Interval a, int n) {
    if (n < 0) throw std::domain_error("interval pow_int: negative exponent");
    if (n == 0) return point(1.0);
    // x^n over [lo, hi] attains its extremes at the endpoints, plus 0 for
    // even n on sign-straddling input. Endpoint powers go through interval
    // multiplication so the rounding direction is right for either sign.
    auto ipow = [](double x, int k) {
        Interval r = point(x);
        for (int i = 1; i < k; ++i) r = mul(r, point(x));
        return r;
    };
    Interval e = hull(ipow(a.lo, n), ipow(a.hi, n));
    if (n % 2 == 0 && a.lo < 0.0 && a.hi > 0.0) e.lo = 0.0;
    return e;
}

Interval exp_iv(Interval a) { return Interval{std::max(0.0, dn2(std::exp(a.lo))), up2(std::exp(a.hi))}; }

Interval expm1_iv(Interval a) {
    return Interval{std::max(-1.0, dn2(std::expm1(a.lo))), up2(std::expm1(a.hi))};
}

Interval ln_iv(Interval a) {
    if (!(a.lo > 0.0)) throw std::domain_error("interval ln: requires lo > 0");
    return Interval{dn2(std::log(a.lo)), up2(std::log(a.hi))};
}

Interval sqrt_iv(Interval a) {
    if (!(a.lo >= 0.0)) throw std::domain_error("interval sqrt: requires lo >= 0");
    return Interval{std::max(0.0, dn(std::sqrt(a.lo))), up(std::sqrt(a.hi))};
}

namespace {

// Point enclosures of phi1/phi2. For |z| < 0.5 a 16-term series; the
// truncation remainder is below |z|^16/(16+shift)! * 2 and the rounding
// error below 32 eps of the partial sums (all terms bounded by 1).
Interval phi_series_enclosure(double z, int shift) {
    double fact = 1.0;
    for (int j = 2; j <= shift; ++j) fact *= j;
    double term = 1.0 / fact;
    double sum = term;
    double abs_sum = term;
    for (int j = 1; j < 16; ++j) {
        term *= z / static_cast<double>(j + shift);
        sum += term;
        abs_sum += std::fabs(term);
    }
    double trunc = std::pow(std::fabs(z), 16);
    for (int j = 1; j <= 16 + shift; ++j) trunc /= j;
    trunc *= 2.0;
    const double err = trunc + 32.0 * DBL_EPSILON * abs_sum + DBL_MIN;
    return Interval{dn(sum - err), up(sum + err)};
}

Interval phi1_point(double z) {
    if (std::fabs(z) < 0.5) return phi_series_enclosure(z, 1);
    return div(expm1_iv(point(z)), point(z));
}

Interval phi2_point(double z) {
    if (std::fabs(z) < 0.5) return phi_series_enclosure(z, 2);
    return div(sub(expm1_iv(point(z)), point(z)), mul(point(z), point(z)));
}

}  // namespace

Interval phi1_iv(Interval a) {
    return Interval{phi1_point(a.lo).lo, phi1_point(a.hi).hi};  // increasing
}

Interval phi2_iv(Interval a) {
    return Interval{phi2_point(a.lo).lo, phi2_point(a.hi).hi};  // increasing
}

Interval exp_rem2_iv(Interval a) {
    auto pt = [](double z) { return mul(mul(point(z), point(z)), phi2_point(z)); };
    if (a.lo >= 0.0) return Interval{std::max(0.0, pt(a.lo).lo), pt(a.hi).hi};
    if (a.hi <= 0.0) return Interval{std::max(0.0, pt(a.hi).lo), pt(a.lo).hi};
    return Interval{0.0, std::max(pt(a.lo).hi, pt(a.hi).hi)};
}

namespace {

Interval xlnx_point(double x) {
    if (x == 0.0) return point(0.0);
    return mul(point(x), ln_iv(point(x)));
}

Interval entropy_point(double x) {
    Interval xb = sub(point(1.0), point(x));
    xb.lo = std::max(0.0, xb.lo);  // 1-x >= 0 exactly for x in [0,1]
    return neg(add(xlnx_point(x), xlnx_iv(xb)));
}

}  // namespace

Interval xlnx_iv(Interval a) {
    if (!(a.lo >= 0.0)) throw std::domain_error("interval xlnx: requires lo >= 0");
    const Interval fa = xlnx_point(a.lo);
    const Interval fb = xlnx_point(a.hi);
    double lo = std::min(fa.lo, fb.lo);
    // global minimum -1/e at x = 1/e
    if (a.lo <= kInvEConservHi && a.hi >= kInvEConservLo) lo = std::min(lo, kNegInvELo);
    return Interval{lo, std::max(fa.hi, fb.hi)};
}

Interval entropy_iv(Interval a) {
    if (!(a.lo >= 0.0 && a.hi <= 1.0)) throw std::domain_error("interval entropy: requires [0,1]");
    const Interval fa = entropy_point(a.lo);
    const Interval fb = entropy_point(a.hi);
    const double lo = std::max(0.0, std::min(fa.lo, fb.lo));
    double hi = std::max(fa.hi, fb.hi);
    if (contains(a, 0.5)) hi = kLn2Hi;  // unimodal peak H(1/2) = ln 2
    return Interval{lo, hi};
}

Interval q_iv(Interval a) {
    if (!(a.lo >= 0.0)) throw std::domain_error("interval q: requires lo >= 0");
    const Interval qlo = div(phi1_point(a.lo), phi2_point(a.lo));
    const Interval qhi = div(phi1_point(a.hi), phi2_point(a.hi));
    return Interval{qlo.lo, qhi.hi};  // Q increasing
}

Interval q_inverse_enclosure(Interval c) {
    if (!(c.lo > 2.0)) throw std::domain_error("q_inverse_enclosure: requires c > 2");
    double hi = 64.0;
    while (q_iv(point(hi)).lo < c.hi) hi *= 2.0;
    // lower end: largest a with Q(a) certifiably <= c.lo
    double a = 0.0, b = hi;
    for (int it = 0; it < 120 && up(a) < b; ++it) {
        const double mid = 0.5 * (a + b);
        if (q_iv(point(mid)).hi <= c.lo)
            a = mid;
        else
            b = mid;
    }
    const double lam_lo = a;
    // upper end: smallest b with Q(b) certifiably >= c.hi
    a = lam_lo;
    b = hi;
    for (int it = 0; it < 120 && up(a) < b; ++it) {
        const double mid = 0.5 * (a + b);
        if (q_iv(point(mid)).lo >= c.hi)
            b = mid;
        else
            a = mid;
    }
    return make(lam_lo, b);
}

Interval q_inverse_enclosure(double c) { return q_inverse_enclosure(point(c)); }

}  // namespace xorgame::iv
