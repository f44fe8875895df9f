#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmac/channel.hpp"
#include "gmac/scalar.hpp"

namespace gmac {

/// Conditioning-variable flags for the receiver-side entropies
/// h(Y3 | subset of {U, V1, V2, V13, V23}).
enum CondVar : unsigned {
    CondU = 1u << 0,
    CondV1 = 1u << 1,
    CondV2 = 1u << 2,
    CondV13 = 1u << 3,
    CondV23 = 1u << 4,
};

namespace detail {

// basis order: U, X'1, X''1, X'2, X''2, S1, S2, Z3
struct LinearModel {
    std::array<double, 8> var{};
    // rows: Y3, U, V1, V2, V13, V23
    std::array<std::array<double, 8>, 6> coef{};
};

inline LinearModel doubly_dirty_model(const GaussianChannel& ch, const CodingParams& cp) {
    ch.validate();
    if (ch.q1_infinite())
        throw std::domain_error("mc_entropy_oracle: q1 must be finite");
    cp.validate_powers(ch);
    cp.validate_eta(ch);

    const double g1 = std::sqrt(cp.eta1 * cp.rho1 * ch.p1);
    const double g2 = std::sqrt(cp.eta2 * cp.rho2 * ch.p2);
    const double b1 = ch.q1 > 0.0 ? 1.0 - std::sqrt((1.0 - cp.eta1) * ch.p1 / ch.q1) : 1.0;
    const double b2 = ch.q2 > 0.0 ? 1.0 - std::sqrt((1.0 - cp.eta2) * ch.p2 / ch.q2) : 1.0;

    LinearModel m;
    m.var = {1.0,
             cp.eta1 * (1.0 - cp.rho1) * cp.pp1,
             cp.eta1 * (1.0 - cp.rho1) * cp.ppp1,
             cp.eta2 * (1.0 - cp.rho2) * cp.pp2,
             cp.eta2 * (1.0 - cp.rho2) * cp.ppp2,
             ch.q1,
             ch.q2,
             ch.n3};
    m.coef[0] = {g1 + g2, 1, 1, 1, 1, b1, b2, 1};          // Y3
    m.coef[1] = {1, 0, 0, 0, 0, 0, 0, 0};                  // U
    m.coef[2] = {g1, 1, 0, 0, 0, cp.a1 * b1, 0, 0};        // V1
    m.coef[3] = {g2, 0, 0, 1, 0, 0, cp.a2 * b2, 0};        // V2
    m.coef[4] = {0, 0, 1, 0, 0, cp.a13 * b1, 0, 0};        // V13
    m.coef[5] = {0, 0, 0, 0, 1, 0, cp.a23 * b2, 0};        // V23
    return m;
}

inline double dot_cov(const LinearModel& m, int a, int b) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += m.coef[a][i] * m.coef[b][i] * m.var[i];
    return s;
}

} // namespace detail

/// Regression of Y3 on the selected conditioning variables: weights,
/// residual variance, and the list of conditioned rows.
struct ConditionalGaussian {
    std::vector<int> rows;          // indices into {U,V1,V2,V13,V23} + 1
    std::vector<double> weights;    // E[Y3|c] = weights . c
    double residual_variance = 0.0; // Var(Y3|c)
};

inline ConditionalGaussian conditional_y3(const GaussianChannel& ch, const CodingParams& cp,
                                          unsigned cond) {
    const detail::LinearModel m = detail::doubly_dirty_model(ch, cp);
    static const char* names[5] = {"U", "V1", "V2", "V13", "V23"};
    ConditionalGaussian out;
    for (int v = 0; v < 5; ++v)
        if (cond & (1u << v)) out.rows.push_back(v + 1);
    const int k = int(out.rows.size());

    // Cholesky of the conditioning covariance; a vanishing pivot means one
    // conditioning variable is (almost surely) a function of the others
    std::vector<double> chol(size_t(k) * k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = detail::dot_cov(m, out.rows[i], out.rows[j]);
            for (int t = 0; t < j; ++t) s -= chol[i * k + t] * chol[j * k + t];
            if (i == j) {
                const double scale = detail::dot_cov(m, out.rows[i], out.rows[i]);
                if (s <= 1e-12 * std::max(1.0, scale))
                    throw std::domain_error(
                        std::string("mc_entropy_oracle: degenerate conditioning variable ") +
                        names[out.rows[i] - 1]);
                chol[i * k + i] = std::sqrt(s);
            } else {
                chol[i * k + j] = s / chol[j * k + j];
            }
        }
    }
    // solve Sigma_cc w = Sigma_cy
    std::vector<double> w(k);
    for (int i = 0; i < k; ++i) {
        double s = detail::dot_cov(m, out.rows[i], 0);
        for (int t = 0; t < i; ++t) s -= chol[i * k + t] * w[t];
        w[i] = s / chol[i * k + i];
    }
    for (int i = k; i-- > 0;) {
        double s = w[i];
        for (int t = i + 1; t < k; ++t) s -= chol[t * k + i] * w[t];
        w[i] = s / chol[i * k + i];
    }
    double var = detail::dot_cov(m, 0, 0);
    for (int i = 0; i < k; ++i) var -= w[i] * detail::dot_cov(m, 0, out.rows[i]);
    out.weights = std::move(w);
    out.residual_variance = var;
    return out;
}

/// Monte-Carlo estimate of h(Y3 | cond) in bits: samples the generative
/// model, scores each draw under the analytic conditional density derived
/// from the joint covariance matrix, and averages the log-losses.
/// Deterministic for a fixed seed.
inline Bits mc_entropy_oracle(const GaussianChannel& ch, const CodingParams& cp, unsigned cond,
                              std::size_t samples, std::uint64_t seed) {
    if (samples < 100000)
        throw std::domain_error("mc_entropy_oracle: need at least 1e5 samples");
    const detail::LinearModel m = detail::doubly_dirty_model(ch, cp);
    const ConditionalGaussian cg = conditional_y3(ch, cp, cond);
    if (!(cg.residual_variance > 0.0))
        throw std::domain_error("mc_entropy_oracle: vanishing conditional variance");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<double, 8> sigma{};
    for (int i = 0; i < 8; ++i) sigma[i] = std::sqrt(m.var[i]);

    double sq_sum = 0.0;
    std::array<double, 8> basis{};
    for (std::size_t it = 0; it < samples; ++it) {
        for (int i = 0; i < 8; ++i) basis[i] = sigma[i] * gauss(rng);
        auto value = [&](int row) {
            double s = 0.0;
            for (int i = 0; i < 8; ++i) s += m.coef[row][i] * basis[i];
            return s;
        };
        double mean = 0.0;
        for (size_t i = 0; i < cg.rows.size(); ++i) mean += cg.weights[i] * value(cg.rows[i]);
        const double resid = value(0) - mean;
        sq_sum += resid * resid;
    }
    const double mean_sq = sq_sum / double(samples);
    // average of -log2 N(y; mu, var) = 0.5 log2(2 pi var) + E[(y-mu)^2] / (2 var ln 2)
    return 0.5 * std::log2(2.0 * M_PI * cg.residual_variance) +
           mean_sq / (2.0 * cg.residual_variance * std::numbers::ln2_v<double>);
}

} // namespace gmac
