#include "xorgame/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace xorgame {

using iv::Interval;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ln[(u^2 phi2(l u) + v^2 phi2(l v)) / (2 phi2(l))] over boxes, with
// u = z2 + z1, v = z2 - z1. Finite for all real arguments of phi2, so this
// stays valid on boxes touching lambda = 0 or v = 0.
Interval log_exp_ratio_iv(Interval lambda, Interval u, Interval v) {
    const Interval num = iv::add(iv::mul(iv::pow_int(u, 2), iv::phi2_iv(iv::mul(lambda, u))),
                                 iv::mul(iv::pow_int(v, 2), iv::phi2_iv(iv::mul(lambda, v))));
    const Interval den = iv::mul(iv::point(2.0), iv::phi2_iv(lambda));
    return iv::ln_iv(iv::div(num, den));
}

// 1/c = phi2(lambda)/phi1(lambda)
Interval inv_c_iv(Interval lambda) { return iv::div(iv::phi2_iv(lambda), iv::phi1_iv(lambda)); }

// u(a) = 1 - a + sqrt(a/2): unimodal with maximum 1.125 at a = 1/8.
Interval sqrt_u_iv(Interval alpha) {
    auto pt = [](double a) {
        return iv::add(iv::sub(iv::point(1.0), iv::point(a)), iv::sqrt_iv(iv::point(0.5 * a)));
    };
    const Interval fa = pt(alpha.lo), fb = pt(alpha.hi);
    double hi = std::max(fa.hi, fb.hi);
    if (iv::contains(alpha, 0.125)) hi = std::max(hi, 1.1250000000000002);
    return iv::make(std::min(fa.lo, fb.lo), hi);
}

// v(a) = 1 - a - sqrt(a/2): strictly decreasing.
Interval sqrt_v_iv(Interval alpha) {
    auto pt = [](double a) {
        return iv::sub(iv::sub(iv::point(1.0), iv::point(a)), iv::sqrt_iv(iv::point(0.5 * a)));
    };
    return iv::make(pt(alpha.hi).lo, pt(alpha.lo).hi);
}

// (phi2(l) + w^2 phi2(l w)) / (2 phi2(l)) with w = 1 - 2 alpha; the
// zeta_lin ratio shared by L_K and the two-argument H_k.
Interval lin_ratio_log_iv(Interval alpha, Interval lambda) {
    const Interval w = iv::sub(iv::point(1.0), iv::mul(iv::point(2.0), alpha));
    const Interval num = iv::add(iv::phi2_iv(lambda),
                                 iv::mul(iv::pow_int(w, 2), iv::phi2_iv(iv::mul(lambda, w))));
    return iv::ln_iv(iv::div(num, iv::mul(iv::point(2.0), iv::phi2_iv(lambda))));
}

}  // namespace

Interval j_K_iv(Interval alpha, Interval zeta1, Interval zeta2, Interval lambda, int K) {
    if (K < 3) throw std::domain_error("j_K_iv: requires K >= 3");
    if (!(alpha.lo >= 0.0 && alpha.hi <= 1.0)) throw std::domain_error("j_K_iv: alpha within [0,1]");
    if (!(zeta1.lo > 0.0 && zeta2.lo > 0.0))
        throw std::domain_error("j_K_iv: zeta components must be positive");
    // (1/K - 1) H(a) - a ln z1 - (1-a) ln z2 + (1/c) ln ratio
    const Interval coeff = iv::sub(iv::div(iv::point(1.0), iv::point(K)), iv::point(1.0));
    Interval ab = iv::sub(iv::point(1.0), alpha);
    ab.lo = std::max(0.0, ab.lo);
    ab.hi = std::min(1.0, ab.hi);
    Interval val = iv::mul(coeff, iv::entropy_iv(alpha));
    val = iv::sub(val, iv::mul(alpha, iv::ln_iv(zeta1)));
    val = iv::sub(val, iv::mul(ab, iv::ln_iv(zeta2)));
    const Interval u = iv::add(zeta2, zeta1);
    const Interval v = iv::sub(zeta2, zeta1);
    return iv::add(val, iv::mul(inv_c_iv(lambda), log_exp_ratio_iv(lambda, u, v)));
}

Interval l_K_at_threshold_iv(Interval alpha, Interval lambda_K) {
    return iv::add(iv::entropy_iv(alpha), lin_ratio_log_iv(alpha, lambda_K));
}

Interval l_K_iv(Interval alpha, Interval c, int K) {
    if (K < 3) throw std::domain_error("l_K_iv: requires K >= 3");
    const Interval lambda = iv::q_inverse_enclosure(c);
    const Interval coeff = iv::div(c, iv::point(K));
    return iv::add(iv::mul(coeff, iv::entropy_iv(alpha)), lin_ratio_log_iv(alpha, lambda));
}

Interval j_sqrt3_iv(Interval alpha, Interval lambda) {
    if (!(alpha.lo > 0.0 && alpha.hi < 1.0)) throw std::domain_error("j_sqrt3_iv: alpha within (0,1)");
    if (!(lambda.lo >= 0.0)) throw std::domain_error("j_sqrt3_iv: lambda >= 0");
    Interval ab = iv::sub(iv::point(1.0), alpha);
    ab.lo = std::max(0.0, ab.lo);
    const Interval u = sqrt_u_iv(alpha);
    const Interval v = sqrt_v_iv(alpha);
    Interval val = iv::div(iv::xlnx_iv(alpha), iv::point(6.0));
    val = iv::sub(val, iv::div(iv::xlnx_iv(ab), iv::point(3.0)));
    val = iv::add(val, iv::div(iv::mul(alpha, iv::make(0.6931471805599453, 0.6931471805599454)),
                               iv::point(2.0)));
    return iv::add(val, iv::mul(inv_c_iv(lambda), log_exp_ratio_iv(lambda, u, v)));
}

Interval d2_j_sqrt3_iv(Interval alpha, Interval lambda) {
    if (!(alpha.lo > 0.0 && alpha.hi < 1.0)) throw std::domain_error("d2_j_sqrt3_iv: alpha within (0,1)");
    if (!(lambda.lo >= 0.0)) throw std::domain_error("d2_j_sqrt3_iv: lambda >= 0");
    const Interval g = iv::sqrt_iv(iv::div(alpha, iv::point(2.0)));
    const Interval inv4g = iv::div(iv::point(1.0), iv::mul(iv::point(4.0), g));
    const Interval ua = iv::sub(inv4g, iv::point(1.0));
    const Interval va = iv::neg(iv::add(iv::point(1.0), inv4g));
    const Interval gpp = iv::neg(iv::div(iv::point(1.0), iv::mul(iv::point(16.0), iv::pow_int(g, 3))));
    const Interval u = sqrt_u_iv(alpha);
    const Interval v = sqrt_v_iv(alpha);
    const Interval lu = iv::mul(lambda, u);
    const Interval lv = iv::mul(lambda, v);
    const Interval p1u = iv::phi1_iv(lu);
    const Interval p1v = iv::phi1_iv(lv);
    const Interval D = iv::add(iv::mul(iv::pow_int(u, 2), iv::phi2_iv(lu)),
                               iv::mul(iv::pow_int(v, 2), iv::phi2_iv(lv)));
    const Interval T1 =
        iv::div(iv::add(iv::mul(iv::mul(u, ua), p1u), iv::mul(iv::mul(v, va), p1v)), D);
    const Interval T2 = iv::div(
        iv::add(iv::mul(gpp, iv::sub(iv::mul(u, p1u), iv::mul(v, p1v))),
                iv::add(iv::mul(iv::pow_int(ua, 2), iv::exp_iv(lu)),
                        iv::mul(iv::pow_int(va, 2), iv::exp_iv(lv)))),
        D);
    Interval ab = iv::sub(iv::point(1.0), alpha);
    ab.lo = std::max(0.0, ab.lo);
    Interval val = iv::div(iv::point(1.0), iv::mul(iv::point(6.0), alpha));
    val = iv::sub(val, iv::div(iv::point(1.0), iv::mul(iv::point(3.0), ab)));
    return iv::add(val, iv::mul(inv_c_iv(lambda), iv::sub(T2, iv::pow_int(T1, 2))));
}

Interval beta_K_iv(int K) {
    if (K < 3) throw std::domain_error("beta_K_iv: requires K >= 3");
    const Interval k = iv::point(static_cast<double>(K));
    const Interval km1 = iv::point(static_cast<double>(K - 1));
    Interval num = iv::div(iv::point(1.0), k);
    num = iv::add(num, iv::ln_iv(iv::sqrt_iv(km1)));
    num = iv::sub(num, iv::point(1.0));
    num = iv::add(num, iv::div(k, iv::mul(iv::point(2.0), km1)));
    const Interval den = iv::sub(iv::point(0.5), iv::div(iv::point(1.0), k));
    return iv::exp_iv(iv::neg(iv::div(num, den)));
}

Interval alpha_star_iv(int K) {
    if (K < 3) throw std::domain_error("alpha_star_iv: requires K >= 3");
    const Interval lam = iv::q_inverse_enclosure(static_cast<double>(K));
    // exp_rem2(lam)/lam^2 = phi2(lam)
    const Interval ln_term = iv::div(iv::ln_iv(iv::phi2_iv(lam)), lam);
    return iv::mul(iv::point(0.5), iv::sub(iv::point(1.0), ln_term));
}

// ---- grid drivers -------------------------------------------------------

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// Decimal grid endpoints like 0.15 are not exactly representable; stepping
// the outer boundary one ulp outward makes the certified rectangle a
// superset of the stated one. Exact endpoints (0, 0.5, 2.0) are left alone.
double out_lo(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double out_hi(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// Evaluates an upper bound for every cell of the grid, in parallel, and
// assembles the report. Cells are indexed (i, j) with i along var1.
CertificationReport run_grid(std::string region_id, GridSpec grid, double threshold, int threads,
                             const std::function<double(Interval, Interval)>& cell_upper) {
    Timer timer;
    CertificationReport rep;
    rep.region_id = std::move(region_id);
    rep.grid = grid;
    rep.threshold = threshold;
    const int total = grid.na * grid.nb;
    std::vector<double> uppers(static_cast<std::size_t>(total));

    auto run_range = [&](int from, int to) {
        for (int idx = from; idx < to; ++idx) {
            const int i = idx / grid.nb;
            const int j = idx % grid.nb;
            const Interval a = iv::make(grid.a_edge(i), grid.a_edge(i + 1));
            const Interval b = grid.two_d ? iv::make(grid.b_edge(j), grid.b_edge(j + 1))
                                          : iv::make(grid.b0, grid.b1);
            uppers[static_cast<std::size_t>(idx)] = cell_upper(a, b);
        }
    };

    threads = std::max(1, threads);
    if (threads == 1) {
        run_range(0, total);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        const int chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int from = t * chunk;
            const int to = std::min(total, from + chunk);
            if (from < to)
                pool.emplace_back([from, to, t, &run_range, &errors] {
                    try {
                        run_range(from, to);
                    } catch (...) {
                        errors[static_cast<std::size_t>(t)] = std::current_exception();
                    }
                });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    rep.worst_upper = -std::numeric_limits<double>::infinity();
    for (int idx = 0; idx < total; ++idx) {
        const double up = uppers[static_cast<std::size_t>(idx)];
        rep.worst_upper = std::max(rep.worst_upper, up);
        if (!(up <= threshold)) rep.failing_cells.emplace_back(idx / grid.nb, idx % grid.nb);
    }
    rep.pass = rep.failing_cells.empty();
    rep.wall_time_ms = timer.ms();
    return rep;
}

}  // namespace

CertificationReport certify_lk_grid(int K, int subdivisions, double threshold, int threads) {
    if (K < 4 || K > 6) throw std::domain_error("certify_lk_grid: K in {4,5,6}");
    const Interval lam = iv::q_inverse_enclosure(static_cast<double>(K));
    GridSpec grid{out_lo(0.15), out_hi(0.45), 0, 0, subdivisions, 1, false};
    return run_grid("lk" + std::to_string(K), grid, threshold, threads,
                    [lam](Interval a, Interval) { return l_K_at_threshold_iv(a, lam).hi; });
}

CertificationReport certify_region_2a(int na, int nb, int threads) {
    GridSpec grid{out_lo(0.07), 0.5, 0.0, 2.0, na, nb, true};
    return run_grid("2a", grid, -1e-4, threads,
                    [](Interval a, Interval l) { return j_sqrt3_iv(a, l).hi; });
}

CertificationReport certify_region_2b(int na, int nb, int threads) {
    GridSpec grid{out_lo(0.07), out_hi(0.4), 2.0, out_hi(2.15), na, nb, true};
    return run_grid("2b", grid, -1e-4, threads,
                    [](Interval a, Interval l) { return j_sqrt3_iv(a, l).hi; });
}

CertificationReport certify_region_3(int na, int nb, int threads) {
    GridSpec grid{out_lo(0.39), 0.5, out_lo(1.9), out_hi(2.15), na, nb, true};
    return run_grid("3", grid, -0.01, threads,
                    [](Interval a, Interval l) { return d2_j_sqrt3_iv(a, l).hi; });
}

CertificationReport certify_k_geq_7() {
    Timer timer;
    CertificationReport rep;
    rep.region_id = "kgeq7";
    rep.grid = GridSpec{0, 1, 0, 1, 1, 1, false};
    rep.threshold = -0.016;
    const Interval beta7 = beta_K_iv(7);
    const Interval astar7 = alpha_star_iv(7);
    // H(a*_7) + ln((1 + e^{-2*0.99*7*beta_7})/2)
    // 2 * 0.99 * 7 = 1386/100, enclosed exactly by interval division
    const Interval factor = iv::div(iv::point(1386.0), iv::point(100.0));
    const Interval expo = iv::neg(iv::mul(factor, beta7));
    const Interval expr = iv::add(
        iv::entropy_iv(astar7),
        iv::ln_iv(iv::div(iv::add(iv::point(1.0), iv::exp_iv(expo)), iv::point(2.0))));
    rep.worst_upper = expr.hi;
    const bool side = astar7.lo > 0.0 && astar7.hi < 0.5 && beta7.lo > 0.0 && beta7.hi < 0.2;
    rep.pass = side && expr.hi < rep.threshold;
    if (!rep.pass) rep.failing_cells.emplace_back(0, 0);
    rep.wall_time_ms = timer.ms();
    return rep;
}

CertificationReport certify_beta_bounds() {
    Timer timer;
    CertificationReport rep;
    rep.region_id = "beta";
    rep.grid = GridSpec{3, 15, 0, 1, 13, 1, false};
    rep.threshold = 0.2;
    rep.worst_upper = -std::numeric_limits<double>::infinity();
    for (int K = 3; K <= 14; ++K) {
        const double up = beta_K_iv(K).hi;
        rep.worst_upper = std::max(rep.worst_upper, up);
        if (!(up < 0.2)) rep.failing_cells.emplace_back(K - 3, 0);
    }
    // From K = 15 on, beta_K <= e/(K-1); certify the K = 15 bound.
    const double tail = iv::div(iv::exp_iv(iv::point(1.0)), iv::point(14.0)).hi;
    rep.worst_upper = std::max(rep.worst_upper, tail);
    if (!(tail <= 0.2)) rep.failing_cells.emplace_back(12, 0);
    rep.pass = rep.failing_cells.empty();
    rep.wall_time_ms = timer.ms();
    return rep;
}

CertificationReport certify_tail(int K, double c, double delta, double eps, int max_depth) {
    if (!(delta > 0 && delta < 0.5)) throw std::domain_error("certify_tail: delta within (0,1/2)");
    if (!(eps > 0)) throw std::domain_error("certify_tail: eps must be positive");
    Timer timer;
    CertificationReport rep;
    rep.region_id = "tail";
    rep.grid = GridSpec{1.0 - delta, 1.0, 0, 0, 1, 1, false};
    rep.threshold = -eps;
    const Interval lam = iv::q_inverse_enclosure(c);
    const Interval z1 = iv::point(1.0 - delta);
    const Interval z2 = iv::point(delta);
    rep.worst_upper = -std::numeric_limits<double>::infinity();
    int leaf_index = 0;

    struct Piece {
        double lo, hi;
        int depth;
    };
    std::vector<Piece> stack{{1.0 - delta, 1.0, 0}};
    while (!stack.empty()) {
        const Piece p = stack.back();
        stack.pop_back();
        const double up = j_K_iv(iv::make(p.lo, p.hi), z1, z2, lam, K).hi;
        if (up <= rep.threshold) {
            rep.worst_upper = std::max(rep.worst_upper, up);
            ++leaf_index;
            continue;
        }
        if (p.depth < max_depth) {
            const double mid = 0.5 * (p.lo + p.hi);
            stack.push_back({mid, p.hi, p.depth + 1});
            stack.push_back({p.lo, mid, p.depth + 1});
        } else {
            rep.worst_upper = std::max(rep.worst_upper, up);
            rep.failing_cells.emplace_back(leaf_index, p.depth);
            ++leaf_index;
        }
    }
    rep.pass = rep.failing_cells.empty();
    rep.wall_time_ms = timer.ms();
    return rep;
}

// ---- report serialization ------------------------------------------------

std::string CertificationReport::canonical_text() const {
    std::string s;
    s += "region=" + region_id;
    s += " grid=[" + fmt_double(grid.a0) + "," + fmt_double(grid.a1) + "]x" + std::to_string(grid.na);
    if (grid.two_d)
        s += " [" + fmt_double(grid.b0) + "," + fmt_double(grid.b1) + "]x" + std::to_string(grid.nb);
    s += " threshold=" + fmt_double(threshold);
    s += " worst_upper=" + fmt_double(worst_upper);
    s += std::string(" verdict=") + (pass ? "pass" : "fail");
    s += " failing_cells=" + std::to_string(failing_cells.size());
    for (const auto& [i, j] : failing_cells) s += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return s;
}

std::string CertificationReport::to_json() const {
    std::string s = "{\n  \"region\": \"" + region_id + "\",\n";
    s += "  \"grid\": {\"ranges\": [[" + fmt_double(grid.a0) + ", " + fmt_double(grid.a1) + "]";
    if (grid.two_d) s += ", [" + fmt_double(grid.b0) + ", " + fmt_double(grid.b1) + "]";
    s += "], \"subdivisions\": [" + std::to_string(grid.na);
    if (grid.two_d) s += ", " + std::to_string(grid.nb);
    s += "]},\n";
    s += "  \"threshold\": " + fmt_double(threshold) + ",\n";
    s += "  \"worst_upper\": " + fmt_double(worst_upper) + ",\n";
    s += std::string("  \"verdict\": \"") + (pass ? "pass" : "fail") + "\",\n";
    s += "  \"failing_cells\": [";
    for (std::size_t k = 0; k < failing_cells.size(); ++k) {
        if (k) s += ", ";
        s += "[" + std::to_string(failing_cells[k].first) + ", " + std::to_string(failing_cells[k].second) + "]";
    }
    s += "],\n";
    s += "  \"wall_time_ms\": " + std::to_string(wall_time_ms) + "\n}\n";
    return s;
}

}  // namespace xorgame
