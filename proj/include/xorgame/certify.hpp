#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xorgame/interval.hpp"

namespace xorgame {

/// Uniform grid over [a0,a1] (x [b0,b1] when two_d); cells share endpoints
/// so their union covers the closed rectangle.
struct GridSpec {
    double a0 = 0, a1 = 0;
    double b0 = 0, b1 = 0;
    int na = 1, nb = 1;
    bool two_d = false;

    double a_edge(int i) const { return i == 0 ? a0 : (i == na ? a1 : a0 + (a1 - a0) * i / na); }
    double b_edge(int j) const { return j == 0 ? b0 : (j == nb ? b1 : b0 + (b1 - b0) * j / nb); }
};

struct CertificationReport {
    std::string region_id;
    GridSpec grid;
    double threshold = 0;
    double worst_upper = 0;  // max over cells of the enclosure upper bound
    bool pass = false;
    std::vector<std::pair<int, int>> failing_cells;
    long wall_time_ms = 0;

    /// Canonical text form; excludes wall time so that outputs compare
    /// byte-identically across runs and thread counts.
    std::string canonical_text() const;
    std::string to_json() const;  // includes wall_time_ms
};

// Interval enclosures of the bound functions over boxes. All are
// parameterized by lambda = Q^{-1}(c) directly; q_inverse_enclosure supplies
// lambda when only c is known.

/// J_K over the box: requires zeta components positive, alpha within [0,1].
iv::Interval j_K_iv(iv::Interval alpha, iv::Interval zeta1, iv::Interval zeta2,
                    iv::Interval lambda, int K);

/// L_K(alpha, c) with c an interval (lambda derived by interval bisection).
iv::Interval l_K_iv(iv::Interval alpha, iv::Interval c, int K);

/// L_K(alpha, K) with lambda_K = Q^{-1}(K) supplied; the c/K factor is
/// exactly 1 so only lambda enters.
iv::Interval l_K_at_threshold_iv(iv::Interval alpha, iv::Interval lambda_K);

iv::Interval j_sqrt3_iv(iv::Interval alpha, iv::Interval lambda);
iv::Interval d2_j_sqrt3_iv(iv::Interval alpha, iv::Interval lambda);

/// Enclosure of beta_K from its closed form.
iv::Interval beta_K_iv(int K);
/// Enclosure of alpha*_K (lambda_K by interval bisection).
iv::Interval alpha_star_iv(int K);

// Grid certifications. Defaults reproduce the reference grids; coarser
// grids may legitimately fail to certify (reported, never an error).

/// L_K(alpha, K) <= threshold on alpha in [0.15, 0.45]. K in {4,5,6}.
CertificationReport certify_lk_grid(int K, int subdivisions = 25, double threshold = -1e-4,
                                    int threads = 1);
/// J_sqrt,3 <= -1e-4 on [0.07,0.5] x [lambda: 0,2.0].
CertificationReport certify_region_2a(int na = 200, int nb = 200, int threads = 1);
/// J_sqrt,3 <= -1e-4 on [0.07,0.4] x [lambda: 2.0,2.15].
CertificationReport certify_region_2b(int na = 400, int nb = 400, int threads = 1);
/// d2 J_sqrt,3 / d alpha^2 <= -0.01 on [0.39,0.5] x [lambda: 1.9,2.15].
CertificationReport certify_region_3(int na = 40, int nb = 40, int threads = 1);
/// H(alpha*_7) + ln((1 + e^{-2*0.99*7*beta_7})/2) < -0.016, with the side
/// conditions alpha*_7 in (0,1/2) and beta_7 in (0,0.2).
CertificationReport certify_k_geq_7();
/// beta_K < 0.2 for K in {3..14} and e/(K-1) <= 0.2 at K = 15.
CertificationReport certify_beta_bounds();
/// J_K(alpha, (1-delta, delta); c) <= -eps on alpha in [1-delta, 1], by
/// adaptive bisection (depth <= max_depth). Requires 0 < delta < 1/2, eps > 0.
CertificationReport certify_tail(int K, double c, double delta, double eps, int max_depth = 20);

}  // namespace xorgame
