#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "gmac/scalar.hpp"

namespace gmac {

/// Linear-scale channel parameters of the additive-interference model
/// Y_j = X1 + X2 + S0 + S1 + S2 + Z_j: transmit powers P_k, noise
/// variances N_j, interference variances Q_0, Q_1, Q_2. q1 may be set to
/// +inf to select the one-fully-informed-encoder model.
struct GaussianChannel {
    double p1 = 1.0, p2 = 1.0;
    double n1 = 1.0, n2 = 1.0, n3 = 1.0;
    double q0 = 0.0, q1 = 0.0, q2 = 0.0;

    void validate() const {
        auto nonneg = [](double v, const char* name) {
            if (std::isnan(v) || v < 0.0)
                throw std::domain_error(std::string("GaussianChannel: ") + name + " must be >= 0");
        };
        nonneg(p1, "p1"); nonneg(p2, "p2");
        nonneg(n1, "n1"); nonneg(n2, "n2"); nonneg(n3, "n3");
        nonneg(q0, "q0"); nonneg(q1, "q1"); nonneg(q2, "q2");
        if (!(n3 > 0.0) || std::isinf(n3))
            throw std::domain_error("GaussianChannel: n3 must be finite and > 0");
        for (double v : {p1, p2, n1, n2, q0, q2})
            if (std::isinf(v)) throw std::domain_error("GaussianChannel: only q1 may be infinite");
    }

    bool q1_infinite() const { return std::isinf(q1); }
};

/// Full precoding parameter vector over which the achievable regions are
/// unions: cooperation fractions rho_k, fresh powers P'_k, direct powers
/// P''_k, cleaning fractions eta_k, and the Costa coefficients.
struct CodingParams {
    double rho1 = 0.0, rho2 = 0.0; // cooperation power fractions, in [0,1]
    double pp1 = 0.0, pp2 = 0.0;   // P'_k, fresh-information powers
    double ppp1 = 0.0, ppp2 = 0.0; // P''_k, direct-message powers
    double eta1 = 1.0, eta2 = 1.0; // cleaning fractions
    double a0 = 0.0;               // common-layer coefficient (full-CSIT model)
    double a1 = 0.0, a2 = 0.0;     // fresh-layer coefficients
    double a13 = 0.0, a23 = 0.0;   // direct-layer coefficients

    static double eta_min(double p, double q) {
        if (p <= 0.0) return 1.0;
        return 1.0 - std::min(1.0, q / p);
    }

    void validate_powers(const GaussianChannel& ch) const {
        const double tol = 1e-9 * (1.0 + ch.p1 + ch.p2);
        if (pp1 < 0 || pp2 < 0 || ppp1 < 0 || ppp2 < 0)
            throw std::domain_error("CodingParams: layer powers must be >= 0");
        if (pp1 + ppp1 > ch.p1 + tol || pp2 + ppp2 > ch.p2 + tol)
            throw std::domain_error("CodingParams: P'_k + P''_k exceeds P_k");
        if (rho1 < 0 || rho1 > 1 || rho2 < 0 || rho2 > 1)
            throw std::domain_error("CodingParams: rho_k must lie in [0,1]");
    }

    void validate_eta(const GaussianChannel& ch) const {
        const double lo1 = eta_min(ch.p1, std::isinf(ch.q1) ? ch.p1 : ch.q1);
        const double lo2 = eta_min(ch.p2, ch.q2);
        if (eta1 < lo1 - 1e-12 || eta1 > 1 + 1e-12 || eta2 < lo2 - 1e-12 || eta2 > 1 + 1e-12)
            throw std::domain_error("CodingParams: eta_k outside [1 - min(1, Q_k/P_k), 1]");
    }

    void validate_alphas() const {
        if (a1 < 0 || a2 < 0 || a13 < 0 || a23 < 0)
            throw std::domain_error("CodingParams: precoding coefficients must be >= 0");
    }
};

} // namespace gmac
