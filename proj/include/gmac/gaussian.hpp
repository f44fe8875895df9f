#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "gmac/channel.hpp"
#include "gmac/region.hpp"
#include "gmac/scalar.hpp"

namespace gmac {

// ---------------------------------------------------------------------------
// Full-CSIT model (both encoders know the interference S0 noncausally)
// ---------------------------------------------------------------------------

/// Total coherent received power P1 + P2 + 2 sqrt(rho1 rho2 P1 P2).
inline double coherent_power(const GaussianChannel& ch, double rho1, double rho2) {
    return ch.p1 + ch.p2 + 2.0 * std::sqrt(rho1 * rho2 * ch.p1 * ch.p2);
}

/// Optimal multi-layer Costa coefficients for the full-CSIT model. The
/// denominator is the received second moment at full power use, so the
/// coefficients are minimum-MSE exactly when P'_k + P''_k = P_k.
inline CodingParams optimal_dpc_coeffs(const GaussianChannel& ch, CodingParams cp) {
    ch.validate();
    if (ch.q1 != 0.0 || ch.q2 != 0.0)
        throw std::domain_error("optimal_dpc_coeffs: full-CSIT model requires q1 = q2 = 0");
    cp.validate_powers(ch);
    const double s1 = std::sqrt(cp.rho1 * ch.p1);
    const double s2 = std::sqrt(cp.rho2 * ch.p2);
    const double den = coherent_power(ch, cp.rho1, cp.rho2) + ch.n3;
    if (!(den > 0.0)) throw std::domain_error("optimal_dpc_coeffs: nonpositive denominator");
    cp.a0 = (s1 + s2) / den;
    cp.a1 = (s1 * (s1 + s2) + (1.0 - cp.rho1) * cp.pp1) / den;
    cp.a2 = (s2 * (s1 + s2) + (1.0 - cp.rho2) * cp.pp2) / den;
    cp.a13 = (1.0 - cp.rho1) * cp.ppp1 / den;
    cp.a23 = (1.0 - cp.rho2) * cp.ppp2 / den;
    return cp;
}

/// The five covariances E{E_. (X1 + X2 + Z3)} for the precoding error
/// terms of the estimation layers, computed from the second-moment model.
/// All five vanish at the optimal coefficients.
inline std::array<double, 5> dpc_orthogonality_residuals(const GaussianChannel& ch,
                                                         const CodingParams& cp) {
    const double s1 = std::sqrt(cp.rho1 * ch.p1);
    const double s2 = std::sqrt(cp.rho2 * ch.p2);
    const double su = s1 + s2;
    const double m2 = su * su + (1.0 - cp.rho1) * (cp.pp1 + cp.ppp1) +
                      (1.0 - cp.rho2) * (cp.pp2 + cp.ppp2) + ch.n3;
    return {
        su - cp.a0 * m2,                            // E_U
        s1 * su + (1.0 - cp.rho1) * cp.pp1 - cp.a1 * m2,  // E_V1
        s2 * su + (1.0 - cp.rho2) * cp.pp2 - cp.a2 * m2,  // E_V2
        (1.0 - cp.rho1) * cp.ppp1 - cp.a13 * m2,    // E_V13
        (1.0 - cp.rho2) * cp.ppp2 - cp.a23 * m2,    // E_V23
    };
}

/// Achievable region of the full-CSIT dirty GMAC at one parameter choice.
/// The interference variance q0 deliberately never enters: the region is
/// identical for every q0 in [0, inf).
inline SplitRatePolytope prop1_region(const GaussianChannel& ch, const CodingParams& cp) {
    ch.validate();
    cp.validate_powers(ch);
    const double rb1 = 1.0 - cp.rho1, rb2 = 1.0 - cp.rho2;
    const Bits a4 = capacity_ratio(coherent_power(ch, cp.rho1, cp.rho2), ch.n3);
    const Bits c1_fb = capacity_ratio(rb1 * cp.pp1, rb1 * cp.ppp1 + ch.n2);
    const Bits c2_fb = capacity_ratio(rb2 * cp.pp2, rb2 * cp.ppp2 + ch.n1);
    const Bits c1_dir = capacity_ratio(rb1 * cp.ppp1, ch.n3);
    const Bits c2_dir = capacity_ratio(rb2 * cp.ppp2, ch.n3);
    const Bits c_dir = capacity_ratio(rb1 * cp.ppp1 + rb2 * cp.ppp2, ch.n3);
    // single bounds never bind beyond the sum bounds, so capping keeps the
    // region intact even when a feedback link is noiseless
    const Bits b_r1 = std::min(c1_fb + c1_dir, a4);
    const Bits b_r2 = std::min(c2_fb + c2_dir, a4);
    const Bits a3 = std::min(c1_fb + c2_fb + c_dir, a4);
    return SplitRatePolytope::total_rate_shape(b_r1, b_r2, {a3, a4});
}

// ---------------------------------------------------------------------------
// Doubly dirty model (encoder k knows only its private interference S_k)
// ---------------------------------------------------------------------------

/// All intermediate quantities of the doubly-dirty region evaluation.
struct Prop2Terms {
    double q1e = 0, q2e = 0;           // cleaned-state variances Q_ke
    double q1e_hat = 0, q2e_hat = 0;   // single-observation MMSE residuals
    double q1e_dhat = 0, q2e_dhat = 0; // two-observation MMSE residuals
    double p1e_prime = 0, p2e_prime = 0;
    double p1e_dprime = 0, p2e_dprime = 0;
    Bits c12 = 0, c21 = 0, c13 = 0, c23 = 0; // Gelfand-Pinsker penalties
    Bits delta1 = 0, delta2 = 0;
    Bits delta1_minus = 0, delta2_minus = 0;
    Bits cap_delta1 = 0, cap_delta2 = 0, cap_delta3 = 0;
    Bits cap_delta_minus = 0;
};

namespace detail {

/// Residual variance of scale * S after MMSE estimation of S from up to two
/// observations obs_i = W_i + g_i S with W_i ~ N(0, w_i), S ~ N(0, q).
/// Zero-power layers are handled by their limits: an observation with g > 0
/// and no codeword power reveals S exactly, one with g = 0 is useless.
inline double mmse_residual(double scale2, double q, double w1, double g1, double w2, double g2) {
    if (q <= 0.0 || scale2 <= 0.0) return 0.0;
    double precision = 1.0 / q;
    for (auto [w, g] : {std::pair{w1, g1}, std::pair{w2, g2}}) {
        if (g == 0.0) continue;
        if (w <= 0.0) return 0.0;
        precision += g * g / w;
    }
    return scale2 / precision;
}

} // namespace detail

/// Evaluates the symbol definitions of the doubly-dirty region: cleaned
/// variances, MMSE residuals, penalties and the signed delta corrections.
/// A common interference component (q0 > 0) is assumed already removed by
/// the optimal coherent Costa layer, exactly as in the full-CSIT model, so
/// q0 never enters these formulas; the sweep engine applies that
/// preprocessing when building the family.
inline Prop2Terms prop2_terms(const GaussianChannel& ch, const CodingParams& cp) {
    ch.validate();
    if (ch.q1_infinite())
        throw std::domain_error("prop2_terms: q1 is infinite; use prop3_region");
    cp.validate_powers(ch);
    cp.validate_eta(ch);
    cp.validate_alphas();

    Prop2Terms t;
    t.p1e_prime = cp.eta1 * (1.0 - cp.rho1) * cp.pp1;
    t.p2e_prime = cp.eta2 * (1.0 - cp.rho2) * cp.pp2;
    t.p1e_dprime = cp.eta1 * (1.0 - cp.rho1) * cp.ppp1;
    t.p2e_dprime = cp.eta2 * (1.0 - cp.rho2) * cp.ppp2;

    auto q_clean = [](double q, double eta, double p) {
        const double d = std::sqrt(q) - std::sqrt((1.0 - eta) * p);
        return d * d;
    };
    t.q1e = q_clean(ch.q1, cp.eta1, ch.p1);
    t.q2e = q_clean(ch.q2, cp.eta2, ch.p2);

    auto sq = [](double x) { return x * x; };
    t.q1e_hat = detail::mmse_residual(sq(1.0 - cp.a1), t.q1e, t.p1e_prime, cp.a1, 0.0, 0.0);
    t.q2e_hat = detail::mmse_residual(sq(1.0 - cp.a2), t.q2e, t.p2e_prime, cp.a2, 0.0, 0.0);
    t.q1e_dhat = detail::mmse_residual(sq(1.0 - cp.a1 - cp.a13), t.q1e, t.p1e_prime, cp.a1,
                                       t.p1e_dprime, cp.a13);
    t.q2e_dhat = detail::mmse_residual(sq(1.0 - cp.a2 - cp.a23), t.q2e, t.p2e_prime, cp.a2,
                                       t.p2e_dprime, cp.a23);

    t.c12 = capacity_ratio(cp.a1 * cp.a1 * t.q1e, t.p1e_prime);
    t.c21 = capacity_ratio(cp.a2 * cp.a2 * t.q2e, t.p2e_prime);
    t.c13 = capacity_ratio(cp.a13 * cp.a13 * t.q1e_hat, sq(1.0 - cp.a1) * t.p1e_dprime);
    t.c23 = capacity_ratio(cp.a23 * cp.a23 * t.q2e_hat, sq(1.0 - cp.a2) * t.p2e_dprime);

    t.delta1 = capacity_ratio(t.p1e_prime + t.q1e - t.q1e_hat,
                              t.p1e_dprime + t.q1e_hat + t.q2e_dhat + ch.n3) - t.c12;
    t.delta2 = capacity_ratio(t.p2e_prime + t.q2e - t.q2e_hat,
                              t.p2e_dprime + t.q2e_hat + t.q1e_dhat + ch.n3) - t.c21;
    t.delta1_minus = std::min(0.0, t.delta1);
    t.delta2_minus = std::min(0.0, t.delta2);

    const double den_hat = t.p1e_dprime + t.p2e_dprime + t.q1e_hat + t.q2e_hat + ch.n3;
    t.cap_delta1 = capacity_ratio(t.p1e_prime + t.q1e - t.q1e_hat, den_hat) - t.c12;
    t.cap_delta2 = capacity_ratio(t.p2e_prime + t.q2e - t.q2e_hat, den_hat) - t.c21;
    t.cap_delta3 = capacity_ratio(t.p1e_prime + t.p2e_prime + t.q1e - t.q1e_hat + t.q2e - t.q2e_hat,
                                  den_hat) - t.c12 - t.c21;
    t.cap_delta_minus = std::min({0.0, t.cap_delta1, t.cap_delta2, t.cap_delta3});
    return t;
}

/// The six raw bounds of the doubly-dirty region before clamping.
struct Prop2Bounds {
    Bits b12 = 0, b21 = 0, b13 = 0, b23 = 0, b13_23 = 0, b_sum = 0;
};

inline Prop2Bounds prop2_bounds(const GaussianChannel& ch, const CodingParams& cp,
                                const Prop2Terms& t) {
    const double den3 = t.q1e_dhat + t.q2e_dhat + ch.n3;
    Prop2Bounds b;
    b.b_sum = clamp_rate(
        capacity_ratio(cp.eta1 * ch.p1 + cp.eta2 * ch.p2 +
                           2.0 * std::sqrt(cp.eta1 * cp.eta2 * cp.rho1 * cp.rho2 * ch.p1 * ch.p2) +
                           t.q1e - t.q1e_dhat + t.q2e - t.q2e_dhat,
                       den3) -
        t.c12 - t.c21 - t.c13 - t.c23);
    auto finish = [&](Bits pos, Bits pen) {
        if (std::isinf(pen)) return 0.0;
        return std::min(clamp_rate(pos - pen), b.b_sum);
    };
    b.b12 = finish(capacity_ratio(t.p1e_prime + t.q1e - t.q1e_hat,
                                  t.p1e_dprime + t.q1e_hat + ch.n2), t.c12);
    b.b21 = finish(capacity_ratio(t.p2e_prime + t.q2e - t.q2e_hat,
                                  t.p2e_dprime + t.q2e_hat + ch.n1), t.c21);
    b.b13 = finish(capacity_ratio(t.p1e_dprime + t.q1e_hat - t.q1e_dhat, den3),
                   t.c13 - t.delta1_minus);
    b.b23 = finish(capacity_ratio(t.p2e_dprime + t.q2e_hat - t.q2e_dhat, den3),
                   t.c23 - t.delta2_minus);
    b.b13_23 = finish(capacity_ratio(t.p1e_dprime + t.p2e_dprime + t.q1e_hat - t.q1e_dhat +
                                         t.q2e_hat - t.q2e_dhat,
                                     den3),
                      t.c13 + t.c23 - t.cap_delta_minus);
    return b;
}

/// Achievable region of the doubly-dirty GMAC at one parameter choice.
inline SplitRatePolytope prop2_region(const GaussianChannel& ch, const CodingParams& cp) {
    const Prop2Terms t = prop2_terms(ch, cp);
    const Prop2Bounds b = prop2_bounds(ch, cp, t);
    return SplitRatePolytope::theorem1_shape(b.b12, b.b13, b.b21, b.b23, b.b13_23, b.b_sum);
}

// ---------------------------------------------------------------------------
// One fully informed encoder (Q0 = Q2 = 0, Q1 -> inf)
// ---------------------------------------------------------------------------

/// Region when encoder 1 knows the (arbitrarily strong) interference and
/// encoder 2's channel is clean. Uses rho1, rho2, a13, pp2, ppp2; encoder 1
/// spends all its non-cooperative power on the direct layer.
inline SplitRatePolytope prop3_region(const GaussianChannel& ch, const CodingParams& cp) {
    ch.validate();
    if (!ch.q1_infinite())
        throw std::domain_error(
            "prop3_region: requires the q1 = inf flag (finite q1 is handled by prop2_region)");
    if (ch.q0 != 0.0 || ch.q2 != 0.0)
        throw std::domain_error("prop3_region: requires q0 = q2 = 0");
    if (cp.pp2 + cp.ppp2 > ch.p2 * (1.0 + 1e-12) + 1e-12)
        throw std::domain_error("prop3_region: P'_2 + P''_2 exceeds P_2");
    if (cp.rho1 < 0 || cp.rho1 > 1 || cp.rho2 < 0 || cp.rho2 > 1 || cp.a13 < 0)
        throw std::domain_error("prop3_region: parameter out of range");

    const double rb1p1 = (1.0 - cp.rho1) * ch.p1;
    const double rb2 = 1.0 - cp.rho2;
    const double a = cp.a13;

    // residual of encoder 1's direct layer seen by the receiver
    double leak;
    if (a == 0.0) leak = rb1p1 > 0.0 ? kInf : 0.0;
    else {
        const double r = (1.0 - a) / a;
        leak = r * r * rb1p1;
    }

    const Bits b_r2 = capacity_ratio(rb2 * cp.pp2, rb2 * cp.ppp2 + ch.n1) +
                      capacity_ratio(rb2 * cp.ppp2, leak + ch.n3);

    const double sden = (1.0 - a) * (1.0 - a) * rb1p1 + a * a * ch.n3;
    Bits b_sum = 0.0;
    if (rb1p1 > 0.0 && sden > 0.0) b_sum = clamp_rate(0.5 * std::log2(rb1p1 / sden));

    SplitRatePolytope p;
    p.add({0, 0, 0, 1}, std::min(b_r2, b_sum)); // R2 = R23; the sum bound caps R2 anyway
    p.add({1, 0, 0, 1}, b_sum);                 // R1 + R2
    p.add({0, 1, 0, 0}, 0.0);
    p.add({0, 0, 1, 0}, 0.0);
    return p;
}

/// Closed-form maxima of the one-informed-encoder region.
inline Bits prop3_max_sum_rate(const GaussianChannel& ch) { return capacity(ch.p1 / ch.n3); }

inline Bits prop3_max_r2(const GaussianChannel& ch) {
    if (ch.n1 <= ch.n3)
        return std::min(capacity(ch.p2 / ch.n1), capacity(ch.p1 / ch.n3));
    if (ch.p1 >= ch.p2 + ch.n3) return capacity(ch.p2 / ch.n3);
    const double a = 2.0 * ch.p1 / (ch.p1 + ch.p2 + ch.n3);
    const double r = (1.0 - a) / a;
    return capacity(ch.p2 / (r * r * ch.p1 + ch.n3));
}

// ---------------------------------------------------------------------------
// Reference scenarios
// ---------------------------------------------------------------------------

enum class Scenario { GmacCsit, MacCsit, GmacNoCsit, MacNoCsit };

inline Scenario scenario_from_string(const std::string& s) {
    if (s == "gmac-csit") return Scenario::GmacCsit;
    if (s == "mac-csit") return Scenario::MacCsit;
    if (s == "gmac-no-csit") return Scenario::GmacNoCsit;
    if (s == "mac-no-csit") return Scenario::MacNoCsit;
    throw std::domain_error("unknown scenario tag: " + s);
}

/// Without CSIT the common interference is treated as additive noise on
/// every link, including the feedback links.
inline GaussianChannel scenario_channel(const GaussianChannel& ch, Scenario sc) {
    GaussianChannel out = ch;
    if (sc == Scenario::GmacNoCsit || sc == Scenario::MacNoCsit) {
        out.n1 += ch.q0;
        out.n2 += ch.q0;
        out.n3 += ch.q0;
    }
    out.q0 = 0.0;
    return out;
}

/// Full-CSIT region swept over cooperation fractions and power splits on a
/// plain product grid (power splits use the full budget, which is optimal).
inline RateRegion2D prop1_sweep_region(const GaussianChannel& ch, int rho_points = 9,
                                       int split_points = 5) {
    std::vector<RateRegion2D> parts;
    auto axis = [](int n) {
        std::vector<double> v;
        for (int i = 0; i < n; ++i) v.push_back(n == 1 ? 0.0 : double(i) / (n - 1));
        return v;
    };
    const auto rhos = axis(rho_points), splits = axis(split_points);
    for (double r1 : rhos)
        for (double r2 : rhos)
            for (double s1 : splits)
                for (double s2 : splits) {
                    CodingParams cp;
                    cp.rho1 = r1;
                    cp.rho2 = r2;
                    cp.pp1 = s1 * ch.p1;
                    cp.ppp1 = (1.0 - s1) * ch.p1;
                    cp.pp2 = s2 * ch.p2;
                    cp.ppp2 = (1.0 - s2) * ch.p2;
                    parts.push_back(project_to_r1_r2(prop1_region(ch, cp)));
                }
    return convex_union(parts);
}

/// The four reference curves: CSIT scenarios evaluate the full-CSIT region
/// (with or without cooperation); no-CSIT scenarios evaluate the same
/// formulas with the interference folded into the noise variances.
inline RateRegion2D baseline_regions(const GaussianChannel& ch, Scenario sc, int rho_points = 9,
                                     int split_points = 5) {
    ch.validate();
    const GaussianChannel eff = scenario_channel(ch, sc);
    if (sc == Scenario::GmacCsit || sc == Scenario::GmacNoCsit)
        return prop1_sweep_region(eff, rho_points, split_points);
    CodingParams cp; // no cooperation: rho = P' = 0, all power direct
    cp.ppp1 = eff.p1;
    cp.ppp2 = eff.p2;
    return project_to_r1_r2(prop1_region(eff, cp));
}

inline RateRegion2D baseline_regions(const GaussianChannel& ch, const std::string& scenario,
                                     int rho_points = 9, int split_points = 5) {
    return baseline_regions(ch, scenario_from_string(scenario), rho_points, split_points);
}

} // namespace gmac
