#pragma once

namespace xorgame::iv {

/// Closed interval [lo, hi] with outward rounding: every operation returns
/// an enclosure of the exact range. Directed rounding is implemented by
/// ulp-outward stepping after round-to-nearest operations (portable and
/// thread-safe); library exp/log/expm1 are assumed faithfully rounded and
/// inflated by 2 ulp.
struct Interval {
    double lo;
    double hi;
};

Interval make(double lo, double hi);  // validates: no NaN, lo <= hi
Interval point(double x);
Interval hull(Interval a, Interval b);
bool contains(Interval a, double x);
bool subset(Interval inner, Interval outer);
double width(Interval a);
double midpoint(Interval a);

Interval neg(Interval a);
Interval add(Interval a, Interval b);
Interval sub(Interval a, Interval b);
Interval mul(Interval a, Interval b);
/// Throws std::domain_error if b contains 0.
Interval div(Interval a, Interval b);
/// x^n for integer n >= 0 (tight for even powers across 0).
Interval pow_int(Interval a, int n);

Interval exp_iv(Interval a);
Interval expm1_iv(Interval a);
/// Requires a.lo > 0.
Interval ln_iv(Interval a);
/// Requires a.lo >= 0.
Interval sqrt_iv(Interval a);

/// (e^z - 1)/z and (e^z - 1 - z)/z^2; both strictly increasing on R, so the
/// enclosures are endpoint evaluations (series with an explicit remainder
/// bound for |z| < 0.5).
Interval phi1_iv(Interval a);
Interval phi2_iv(Interval a);
/// e^z - 1 - z; decreasing for z < 0, increasing for z > 0, zero at 0.
Interval exp_rem2_iv(Interval a);

/// x ln x with the 0 ln 0 = 0 convention. Requires a.lo >= 0.
Interval xlnx_iv(Interval a);
/// Binary entropy (natural log). Requires a within [0, 1].
Interval entropy_iv(Interval a);

/// Q(z) = z(e^z-1)/(e^z-1-z), strictly increasing. Requires a.lo >= 0.
Interval q_iv(Interval a);
/// Encloses Q^{-1}(c) over the interval c; requires c.lo > 2.
Interval q_inverse_enclosure(Interval c);
Interval q_inverse_enclosure(double c);

}  // namespace xorgame::iv
