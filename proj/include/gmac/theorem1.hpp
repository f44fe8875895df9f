#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gmac/pmf.hpp"
#include "gmac/region.hpp"
#include "gmac/scalar.hpp"

namespace gmac {

/// The six right-hand sides of the discrete achievable region, clamped at
/// zero, together with the signed binning corrections.
struct Theorem1Bounds {
    Bits b12 = 0, b21 = 0, b13 = 0, b23 = 0, b13_23 = 0, b_sum = 0;
    Bits delta1_minus = 0, delta2_minus = 0, cap_delta_minus = 0;

    SplitRatePolytope to_polytope() const {
        return SplitRatePolytope::theorem1_shape(b12, b13, b21, b23, b13_23, b_sum);
    }
};

/// Evaluates the six rate bounds from a validated joint distribution. All
/// Gelfand-Pinsker penalty terms are computed from the same tensor.
inline Theorem1Bounds theorem1_bounds(const JointPmf& p) {
    {
        const std::vector<PmfViolation> v = validate_factorization(p);
        if (!v.empty()) {
            std::string msg = "theorem1_bounds: invalid pmf:";
            for (const PmfViolation& x : v)
                msg += " [" + x.name + " err=" + std::to_string(x.magnitude) + "]";
            throw std::domain_error(msg);
        }
    }
    Theorem1Bounds b;
    b.b12 = clamp_rate(mutual_information(p, vars(V1), vars(Y2), vars(S0, S2, U, X2)) -
                       mutual_information(p, vars(V1), vars(S1), vars(S0, U)));
    b.b21 = clamp_rate(mutual_information(p, vars(V2), vars(Y1), vars(S0, S1, U, X1)) -
                       mutual_information(p, vars(V2), vars(S2), vars(S0, U)));

    b.delta1_minus = std::min(0.0,
        mutual_information(p, vars(V1), vars(Y3), vars(U, V2, V23)) -
        mutual_information(p, vars(V1), vars(S0, S1), vars(U, V2, V23)));
    b.delta2_minus = std::min(0.0,
        mutual_information(p, vars(V2), vars(Y3), vars(U, V1, V13)) -
        mutual_information(p, vars(V2), vars(S0, S2), vars(U, V1, V13)));

    b.b13 = clamp_rate(mutual_information(p, vars(V13), vars(Y3), vars(U, V1, V2, V23)) -
                       mutual_information(p, vars(V13), vars(S0, S1), vars(U, V1, V2, V23)) +
                       b.delta1_minus);
    b.b23 = clamp_rate(mutual_information(p, vars(V23), vars(Y3), vars(U, V1, V2, V13)) -
                       mutual_information(p, vars(V23), vars(S0, S2), vars(U, V1, V2, V13)) +
                       b.delta2_minus);

    const Bits cd1 = mutual_information(p, vars(V1), vars(Y3), vars(U, V2)) -
                     mutual_information(p, vars(V1), vars(S0, S1), vars(U, V2));
    const Bits cd2 = mutual_information(p, vars(V2), vars(Y3), vars(U, V1)) -
                     mutual_information(p, vars(V2), vars(S0, S2), vars(U, V1));
    const Bits cd3 = mutual_information(p, vars(V1, V2), vars(Y3), vars(U)) -
                     mutual_information(p, vars(V1, V2), vars(S0, S1, S2), vars(U));
    b.cap_delta_minus = std::min({0.0, cd1, cd2, cd3});

    b.b13_23 = clamp_rate(mutual_information(p, vars(V13, V23), vars(Y3), vars(U, V1, V2)) -
                          mutual_information(p, vars(V13, V23), vars(S0, S1, S2), vars(U, V1, V2)) +
                          b.cap_delta_minus);
    // the full sum bound carries no Delta-style correction
    b.b_sum = clamp_rate(mutual_information(p, vars(U, V1, V2, V13, V23), vars(Y3)) -
                         mutual_information(p, vars(U, V1, V2, V13, V23), vars(S0, S1, S2)));
    return b;
}

/// Maximum achievable R1 + R2 within the six-bound polytope.
inline Bits theorem1_max_sum_rate(const Theorem1Bounds& b) {
    return std::min(b.b_sum, b.b12 + b.b21 + std::min(b.b13 + b.b23, b.b13_23));
}

// ---------------------------------------------------------------------------
// Special-case fixtures
// ---------------------------------------------------------------------------

enum class Table1Case {
    Gmac,                // no states, V13 = X1, V23 = X2
    CribbingMac,         // Y1 = X2, Y2 = X1, V1 = X1, V2 = X2, V13 = V23 = empty
    RelayPartialDf,      // M2 = V2 = V23 = empty, U = X2, V13 = X1
    PartialCsitMac,      // U = V1 = V2 = empty, Y1 = Y2 = empty
    CribbingInformedMac, // S0 = S1 = Y1 = empty, Y2 = X1, V2 = V13 = empty, V1 = X1
    CribbingCsitMac,     // Y1 = X2, Y2 = X1, V13 = V23 = empty
    RelaySourceCsit,     // S0 = S2 = empty, V2 = V23 = empty, U = X2
    RelayRelayCsit,      // S0 = S1 = empty, V13 = V2 = empty, V1 = X1
    RelayDegradedCsit,   // S2 = empty, V2 = V13 = V23 = empty
    RelayFullCsit,       // S1 = S2 = empty, V2 = V23 = empty
};

inline const std::vector<Table1Case>& all_table1_cases() {
    static const std::vector<Table1Case> cases = {
        Table1Case::Gmac,           Table1Case::CribbingMac,
        Table1Case::RelayPartialDf, Table1Case::PartialCsitMac,
        Table1Case::CribbingInformedMac, Table1Case::CribbingCsitMac,
        Table1Case::RelaySourceCsit, Table1Case::RelayRelayCsit,
        Table1Case::RelayDegradedCsit, Table1Case::RelayFullCsit};
    return cases;
}

struct Table1Fixture {
    JointPmf pmf;
    std::string notes;
};

namespace fixtures {

inline std::vector<double> uniform(int n) { return std::vector<double>(std::size_t(n), 1.0 / n); }

inline std::vector<double> bernoulli(double p1) { return {1.0 - p1, p1}; }

/// Binary symmetric kernel p(b|a), flat over (a, b).
inline std::vector<double> bsc(double eps) { return {1.0 - eps, eps, eps, 1.0 - eps}; }

/// Repeats a target table for every given combination.
inline std::vector<double> for_each_given(std::size_t gsize, const std::vector<double>& t) {
    std::vector<double> out;
    out.reserve(gsize * t.size());
    for (std::size_t g = 0; g < gsize; ++g) out.insert(out.end(), t.begin(), t.end());
    return out;
}

/// Feedback MAC without states: V13 = X1, V23 = X2 and per-user input
/// kernels p(xk | u, vk); channel is p(y1 y2 y3 | x1 x2), row-major over
/// (x1, x2, y1, y2, y3).
inline JointPmf gmac_pmf(const std::vector<double>& pu, const std::vector<double>& pv1_u,
                         const std::vector<double>& pv2_u, const std::vector<double>& px1_uv1,
                         const std::vector<double>& px2_uv2, const std::array<int, 3>& ysizes,
                         const std::vector<double>& channel) {
    const int usize = int(pu.size());
    PmfBuilder b;
    b.size(U, usize).size(V1, 2).size(V2, 2).size(V13, 2).size(V23, 2).size(X1, 2).size(X2, 2);
    b.size(Y1, ysizes[0]).size(Y2, ysizes[1]).size(Y3, ysizes[2]);
    b.factor(0, {1.0}).factor(1, {1.0}).factor(2, {1.0});
    b.factor(3, pu).factor(4, pv1_u).factor(5, pv2_u);
    // p(v13, x1 | u, v1) = p(x1 | u, v1) [v13 == x1]
    std::vector<double> f7(std::size_t(usize) * 2 * 2 * 2, 0.0);
    std::vector<double> f8(std::size_t(usize) * 2 * 2 * 2, 0.0);
    for (int u = 0; u < usize; ++u)
        for (int v = 0; v < 2; ++v)
            for (int x = 0; x < 2; ++x) {
                const std::size_t g = std::size_t(u * 2 + v);
                f7[g * 4 + std::size_t(x * 2 + x)] = px1_uv1[g * 2 + std::size_t(x)];
                f8[g * 4 + std::size_t(x * 2 + x)] = px2_uv2[g * 2 + std::size_t(x)];
            }
    b.factor(6, f7).factor(7, f8);
    b.factor(8, channel);
    return b.build();
}

/// Ideal-cribbing MAC without states: Y1 = X2, Y2 = X1, V1 = X1, V2 = X2,
/// degenerate direct layers; p(y3 | x1 x2) row-major over (x1, x2, y3).
inline JointPmf cribbing_pmf(const std::vector<double>& pu, const std::vector<double>& px1_u,
                             const std::vector<double>& px2_u, int y3size,
                             const std::vector<double>& py3_x1x2) {
    const int usize = int(pu.size());
    PmfBuilder b;
    b.size(U, usize).size(V1, 2).size(V2, 2).size(X1, 2).size(X2, 2);
    b.size(Y1, 2).size(Y2, 2).size(Y3, y3size);
    b.factor(0, {1.0}).factor(1, {1.0}).factor(2, {1.0});
    b.factor(3, pu);
    b.factor(4, px1_u); // V1 plays X1
    b.factor(5, px2_u); // V2 plays X2
    std::vector<double> f7(std::size_t(usize) * 2 * 2, 0.0); // (u, v1) -> x1 = v1
    std::vector<double> f8(std::size_t(usize) * 2 * 2, 0.0);
    for (int u = 0; u < usize; ++u)
        for (int v = 0; v < 2; ++v) {
            f7[std::size_t((u * 2 + v) * 2 + v)] = 1.0;
            f8[std::size_t((u * 2 + v) * 2 + v)] = 1.0;
        }
    b.factor(6, f7).factor(7, f8);
    // p(y1 y2 y3 | x1 x2) = [y1 == x2][y2 == x1] p(y3 | x1 x2)
    std::vector<double> f9(std::size_t(4) * std::size_t(4 * y3size), 0.0);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int y3 = 0; y3 < y3size; ++y3)
                f9[std::size_t(x1 * 2 + x2) * std::size_t(4 * y3size) +
                   std::size_t((x2 * 2 + x1) * y3size + y3)] =
                    py3_x1x2[std::size_t((x1 * 2 + x2) * y3size + y3)];
    b.factor(8, f9);
    return b.build();
}

/// p(y3 | x1, x2) = [y3 == x1 ^ x2]
inline std::vector<double> xor_channel() {
    std::vector<double> t(8, 0.0);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2) t[std::size_t((x1 * 2 + x2) * 2 + (x1 ^ x2))] = 1.0;
    return t;
}

} // namespace fixtures

/// Canonical small instantiation of each special-case row, ready for
/// theorem1_bounds, plus a note describing the applied identifications.
/// Relay rows keep M2 empty; their single-user rate is read on the R1 axis.
inline Table1Fixture table1_fixture(Table1Case c) {
    using namespace fixtures;
    Table1Fixture out;
    PmfBuilder b;
    switch (c) {
    case Table1Case::Gmac: {
        // noisy XOR at the receiver, clean cross-observations
        std::vector<double> chan(32, 0.0);
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int y3 = 0; y3 < 2; ++y3)
                    chan[std::size_t(x1 * 2 + x2) * 8 + std::size_t((x2 * 2 + x1) * 2 + y3)] =
                        (y3 == (x1 ^ x2)) ? 0.9 : 0.1;
        out.pmf = gmac_pmf(uniform(2), for_each_given(2, bernoulli(0.5)),
                           for_each_given(2, bernoulli(0.4)), for_each_given(2, bsc(0.15)),
                           for_each_given(2, bsc(0.25)), {2, 2, 2}, chan);
        out.notes = "no states; V13 = X1, V23 = X2; Y1 = X2, Y2 = X1, noisy XOR at Y3";
        return out;
    }
    case Table1Case::CribbingMac:
        out.pmf = cribbing_pmf(uniform(2), for_each_given(2, bernoulli(0.5)),
                               for_each_given(2, bernoulli(0.35)), 2, xor_channel());
        out.notes = "no states; V13 = V23 = empty, V1 = X1, V2 = X2, Y1 = X2, Y2 = X1";
        return out;
    case Table1Case::RelayPartialDf: {
        b.size(U, 2).size(V1, 2).size(V13, 2).size(X1, 2).size(X2, 2).size(Y2, 2).size(Y3, 2);
        b.factor(0, {1.0}).factor(1, {1.0}).factor(2, {1.0});
        b.factor(3, uniform(2));                        // U plays X2
        b.factor(4, for_each_given(2, bernoulli(0.5))); // V1 | U
        b.factor(5, for_each_given(2, {1.0}));          // V2 empty
        std::vector<double> f7(2 * 2 * 4, 0.0);         // (u, v1) -> (v13, x1), X1 = V13 = V1
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) f7[std::size_t((u * 2 + v) * 4 + v * 2 + v)] = 1.0;
        b.factor(6, f7);
        std::vector<double> f8(2 * 2, 0.0); // (u) -> x2 = u
        f8[0] = f8[3] = 1.0;
        b.factor(7, f8);
        // p(y2 y3 | x1 x2): relay hears a noisy X1, receiver sees noisy XOR
        std::vector<double> f9(std::size_t(4) * 4, 0.0);
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int y2 = 0; y2 < 2; ++y2)
                    for (int y3 = 0; y3 < 2; ++y3)
                        f9[std::size_t((x1 * 2 + x2) * 4 + y2 * 2 + y3)] =
                            ((y2 == x1) ? 0.95 : 0.05) * ((y3 == (x1 ^ x2)) ? 0.9 : 0.1);
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "relay: M2 = V2 = V23 = Y1 = empty, U = X2, V13 = X1; R2 = 0 in projection";
        return out;
    }
    case Table1Case::PartialCsitMac: {
        b.size(S0, 2).size(S1, 2).size(S2, 2).size(V13, 2).size(V23, 2).size(X1, 2).size(X2, 2)
            .size(Y3, 2);
        b.factor(0, uniform(2));
        b.factor(1, bsc(0.2));
        b.factor(2, bsc(0.3));
        b.factor(3, for_each_given(2, {1.0})); // U empty
        b.factor(4, for_each_given(4, {1.0})); // V1 empty
        b.factor(5, for_each_given(4, {1.0}));
        // direct GP layers: V13 = X1 xor S1 with X1 uniform; (s0, s1) -> (v13, x1)
        std::vector<double> f7(4 * 4, 0.0), f8(4 * 4, 0.0);
        for (int s0 = 0; s0 < 2; ++s0)
            for (int sk = 0; sk < 2; ++sk)
                for (int x = 0; x < 2; ++x) {
                    f7[std::size_t((s0 * 2 + sk) * 4 + (x ^ sk) * 2 + x)] = 0.5;
                    f8[std::size_t((s0 * 2 + sk) * 4 + (x ^ sk) * 2 + x)] = 0.5;
                }
        b.factor(6, f7).factor(7, f8);
        // y3 = x1 ^ x2 ^ s0 ^ s1 ^ s2; (x1, x2, s0, s1, s2) -> y3
        std::vector<double> f9(std::size_t(32) * 2, 0.0);
        for (int g = 0; g < 32; ++g) {
            const int x1 = g >> 4 & 1, x2 = g >> 3 & 1, s0 = g >> 2 & 1, s1 = g >> 1 & 1,
                      s2 = g & 1;
            f9[std::size_t(g * 2 + (x1 ^ x2 ^ s0 ^ s1 ^ s2))] = 1.0;
        }
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "U = V1 = V2 = Y1 = Y2 = empty; only the direct-layer bounds survive";
        return out;
    }
    case Table1Case::CribbingInformedMac: {
        b.size(S2, 2).size(V1, 2).size(V23, 2).size(X1, 2).size(X2, 2).size(Y2, 2).size(Y3, 2);
        b.factor(0, {1.0}).factor(1, {1.0});
        b.factor(2, uniform(2));
        b.factor(3, {1.0});
        b.factor(4, bernoulli(0.5));           // V1 plays X1
        b.factor(5, for_each_given(2, {1.0})); // V2 empty
        std::vector<double> f7 = {1, 0, 0, 1}; // (v1) -> x1 = v1
        b.factor(6, f7);
        // encoder 2 knows S2: V23 = X2 xor S2, X2 uniform; (s2) -> (v23, x2)
        std::vector<double> f8(2 * 4, 0.0);
        for (int s2 = 0; s2 < 2; ++s2)
            for (int x2 = 0; x2 < 2; ++x2) f8[std::size_t(s2 * 4 + (x2 ^ s2) * 2 + x2)] = 0.5;
        b.factor(7, f8);
        // y2 = x1 (cribbing), y3 = x1 ^ x2 ^ s2; (x1, x2, s2) -> (y2, y3)
        std::vector<double> f9(std::size_t(8) * 4, 0.0);
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int s2 = 0; s2 < 2; ++s2)
                    f9[std::size_t(((x1 * 2 + x2) * 2 + s2) * 4 + x1 * 2 + (x1 ^ x2 ^ s2))] = 1.0;
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "S0 = S1 = Y1 = empty, Y2 = X1, V2 = V13 = empty, V1 = X1";
        return out;
    }
    case Table1Case::CribbingCsitMac: {
        b.size(S0, 2).size(S1, 2).size(S2, 2).size(U, 2).size(V1, 2).size(V2, 2).size(X1, 2)
            .size(X2, 2).size(Y1, 2).size(Y2, 2).size(Y3, 2);
        b.factor(0, uniform(2));
        b.factor(1, bsc(0.25));
        b.factor(2, bsc(0.25));
        b.factor(3, for_each_given(2, bernoulli(0.5)));
        b.factor(4, for_each_given(8, bernoulli(0.5))); // V1 | S0 S1 U uniform bin index
        b.factor(5, for_each_given(8, bernoulli(0.5)));
        // X1 = V1 xor S1 (informed input); (u, v1, s0, s1) -> x1
        std::vector<double> f7(16 * 2, 0.0), f8(16 * 2, 0.0);
        for (int g = 0; g < 16; ++g) {
            const int v = g >> 2 & 1, sk = g & 1;
            f7[std::size_t(g * 2 + (v ^ sk))] = 1.0;
            f8[std::size_t(g * 2 + (v ^ sk))] = 1.0;
        }
        b.factor(6, f7).factor(7, f8);
        // y1 = x2, y2 = x1, y3 = x1 ^ x2 ^ s0; (x1, x2, s0, s1, s2) -> (y1, y2, y3)
        std::vector<double> f9(std::size_t(32) * 8, 0.0);
        for (int g = 0; g < 32; ++g) {
            const int x1 = g >> 4 & 1, x2 = g >> 3 & 1, s0 = g >> 2 & 1;
            f9[std::size_t(g * 8 + x2 * 4 + x1 * 2 + (x1 ^ x2 ^ s0))] = 1.0;
        }
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "ideal cribbing with partial CSIT: V13 = V23 = empty, Y1 = X2, Y2 = X1";
        return out;
    }
    case Table1Case::RelaySourceCsit: {
        // S0 = S2 = empty; source knows S1, relay (encoder 2) carries U = X2
        b.size(S1, 2).size(U, 2).size(V1, 2).size(V13, 2).size(X1, 2).size(X2, 2).size(Y2, 2)
            .size(Y3, 2);
        b.factor(0, {1.0});
        b.factor(1, uniform(2));
        b.factor(2, {1.0});
        b.factor(3, uniform(2));
        b.factor(4, for_each_given(4, bernoulli(0.5))); // V1 | S1 U
        b.factor(5, for_each_given(2, {1.0}));
        // X1 = V1 xor S1, V13 = X1; (u, v1, s1) -> (v13, x1)
        std::vector<double> f7(8 * 4, 0.0);
        for (int g = 0; g < 8; ++g) {
            const int v = g >> 1 & 1, s1 = g & 1;
            f7[std::size_t(g * 4 + (v ^ s1) * 2 + (v ^ s1))] = 1.0;
        }
        b.factor(6, f7);
        std::vector<double> f8 = {1, 0, 0, 1}; // (u) -> x2 = u
        b.factor(7, f8);
        // p(y2 y3 | x1 x2 s1): y2 noisy x1, y3 = x1 ^ x2 ^ s1
        std::vector<double> f9(std::size_t(8) * 4, 0.0);
        for (int g = 0; g < 8; ++g) {
            const int x1 = g >> 2 & 1, x2 = g >> 1 & 1, s1 = g & 1;
            for (int y2 = 0; y2 < 2; ++y2)
                f9[std::size_t(g * 4 + y2 * 2 + (x1 ^ x2 ^ s1))] = (y2 == x1) ? 0.9 : 0.1;
        }
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "relay with source CSIT: S0 = S2 = M2 = Y1 = empty, V2 = V23 = empty, U = X2";
        return out;
    }
    case Table1Case::RelayRelayCsit: {
        // S0 = S1 = empty; relay knows S2 and cleans it via its GP layer
        b.size(S2, 2).size(U, 2).size(V1, 2).size(V23, 2).size(X1, 2).size(X2, 2).size(Y2, 2)
            .size(Y3, 2);
        b.factor(0, {1.0}).factor(1, {1.0});
        b.factor(2, uniform(2));
        b.factor(3, uniform(2));
        b.factor(4, for_each_given(2, bernoulli(0.5))); // V1 plays X1
        b.factor(5, for_each_given(4, {1.0}));
        std::vector<double> f7(4 * 2, 0.0); // (u, v1) -> x1 = v1
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) f7[std::size_t((u * 2 + v) * 2 + v)] = 1.0;
        b.factor(6, f7);
        // V23 = X2 xor S2 with X2 = U xor S2; (u, s2) -> (v23, x2)
        std::vector<double> f8(4 * 4, 0.0);
        for (int u = 0; u < 2; ++u)
            for (int s2 = 0; s2 < 2; ++s2)
                f8[std::size_t((u * 2 + s2) * 4 + u * 2 + (u ^ s2))] = 1.0;
        b.factor(7, f8);
        // p(y2 y3 | x1 x2 s2): y2 noisy x1, y3 = x1 ^ x2 ^ s2
        std::vector<double> f9(std::size_t(8) * 4, 0.0);
        for (int g = 0; g < 8; ++g) {
            const int x1 = g >> 2 & 1, x2 = g >> 1 & 1, s2 = g & 1;
            for (int y2 = 0; y2 < 2; ++y2)
                f9[std::size_t(g * 4 + y2 * 2 + (x1 ^ x2 ^ s2))] = (y2 == x1) ? 0.9 : 0.1;
        }
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "relay with relay CSIT: S0 = S1 = M2 = Y1 = empty, V13 = V2 = empty, V1 = X1";
        return out;
    }
    case Table1Case::RelayDegradedCsit: {
        // S2 = empty; source knows (S0, S1), relay knows S0
        b.size(S0, 2).size(S1, 2).size(U, 2).size(V1, 2).size(X1, 2).size(X2, 2).size(Y2, 2)
            .size(Y3, 2);
        b.factor(0, uniform(2));
        b.factor(1, bsc(0.2));
        b.factor(2, for_each_given(2, {1.0}));
        b.factor(3, for_each_given(2, bernoulli(0.5)));
        b.factor(4, for_each_given(8, bernoulli(0.5)));
        // X1 = V1 xor S0 xor S1; (u, v1, s0, s1) -> x1
        std::vector<double> f7(16 * 2, 0.0);
        for (int g = 0; g < 16; ++g) {
            const int v = g >> 2 & 1, s0 = g >> 1 & 1, s1 = g & 1;
            f7[std::size_t(g * 2 + (v ^ s0 ^ s1))] = 1.0;
        }
        b.factor(6, f7);
        // X2 = U xor S0; (u, s0) -> x2
        std::vector<double> f8(4 * 2, 0.0);
        for (int u = 0; u < 2; ++u)
            for (int s0 = 0; s0 < 2; ++s0) f8[std::size_t((u * 2 + s0) * 2 + (u ^ s0))] = 1.0;
        b.factor(5, for_each_given(4, {1.0}));
        b.factor(7, f8);
        // p(y2 y3 | x1 x2 s0 s1): y2 noisy x1, y3 = x1 ^ x2 ^ s0 ^ s1
        std::vector<double> f9(std::size_t(16) * 4, 0.0);
        for (int g = 0; g < 16; ++g) {
            const int x1 = g >> 3 & 1, x2 = g >> 2 & 1, s0 = g >> 1 & 1, s1 = g & 1;
            for (int y2 = 0; y2 < 2; ++y2)
                f9[std::size_t(g * 4 + y2 * 2 + (x1 ^ x2 ^ s0 ^ s1))] = (y2 == x1) ? 0.9 : 0.1;
        }
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "relay, degraded CSIT: S2 = M2 = Y1 = empty, V2 = V13 = V23 = empty";
        return out;
    }
    case Table1Case::RelayFullCsit: {
        // S1 = S2 = empty; both nodes know S0
        b.size(S0, 2).size(U, 2).size(V1, 2).size(V13, 2).size(X1, 2).size(X2, 2).size(Y2, 2)
            .size(Y3, 2);
        b.factor(0, uniform(2));
        b.factor(1, for_each_given(2, {1.0}));
        b.factor(2, for_each_given(2, {1.0}));
        b.factor(3, for_each_given(2, bernoulli(0.5)));
        b.factor(4, for_each_given(4, bernoulli(0.5)));
        // X1 = V1 xor S0, V13 = X1; (u, v1, s0) -> (v13, x1)
        std::vector<double> f7(8 * 4, 0.0);
        for (int g = 0; g < 8; ++g) {
            const int v = g >> 1 & 1, s0 = g & 1;
            f7[std::size_t(g * 4 + (v ^ s0) * 2 + (v ^ s0))] = 1.0;
        }
        b.factor(6, f7);
        // X2 = U xor S0; (u, s0) -> x2
        std::vector<double> f8(4 * 2, 0.0);
        for (int u = 0; u < 2; ++u)
            for (int s0 = 0; s0 < 2; ++s0) f8[std::size_t((u * 2 + s0) * 2 + (u ^ s0))] = 1.0;
        b.factor(5, for_each_given(4, {1.0}));
        b.factor(7, f8);
        // p(y2 y3 | x1 x2 s0): y2 noisy x1, y3 = x1 ^ x2 ^ s0
        std::vector<double> f9(std::size_t(8) * 4, 0.0);
        for (int g = 0; g < 8; ++g) {
            const int x1 = g >> 2 & 1, x2 = g >> 1 & 1, s0 = g & 1;
            for (int y2 = 0; y2 < 2; ++y2)
                f9[std::size_t(g * 4 + y2 * 2 + (x1 ^ x2 ^ s0))] = (y2 == x1) ? 0.9 : 0.1;
        }
        b.factor(8, f9);
        out.pmf = b.build();
        out.notes = "relay, full CSIT at both: S1 = S2 = M2 = Y1 = empty, V2 = V23 = empty";
        return out;
    }
    }
    throw std::domain_error("table1_fixture: unknown case");
}

} // namespace gmac
