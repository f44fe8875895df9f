#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gmac {

/// Rates and entropies are expressed in bits per channel use throughout.
using Bits = double;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// C(x) = (1/2) log2(1 + x), the Gaussian capacity function.
inline Bits capacity(double snr) {
    if (!(snr >= 0.0) || !std::isfinite(snr))
        throw std::domain_error("capacity: snr must be finite and >= 0, got " + std::to_string(snr));
    return 0.5 * std::log2(1.0 + snr);
}

/// C(num/den) with the conventions used by the rate formulas:
/// a layer with zero power contributes nothing (0/0 -> 0) and a
/// noiseless link is unbounded (x/0 -> +inf for x > 0).
inline Bits capacity_ratio(double num, double den) {
    if (num < 0.0 || den < 0.0) {
        // variance expressions can go a few ulp below zero
        if (num > -1e-12 && den > -1e-12) { num = std::max(num, 0.0); den = std::max(den, 0.0); }
        else throw std::domain_error("capacity_ratio: negative variance argument");
    }
    if (num == 0.0) return 0.0;
    if (den == 0.0) return kInf;
    if (std::isinf(den)) return 0.0;
    return capacity(num / den);
}

/// Powers and variances are stated in dB; linear = 10^(dB/10).
inline double db_to_linear(double value_db) {
    if (!std::isfinite(value_db))
        throw std::domain_error("db_to_linear: non-finite input");
    return std::pow(10.0, value_db / 10.0);
}

inline double linear_to_db(double value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::domain_error("linear_to_db: input must be finite and > 0");
    return 10.0 * std::log10(value);
}

/// Differential entropy of a Gaussian with the given variance, in bits.
inline Bits gaussian_entropy(double variance) {
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw std::domain_error("gaussian_entropy: variance must be finite and > 0");
    return 0.5 * std::log2(2.0 * M_PI * M_E * variance);
}

/// Rate bounds are clamped at the constraint level; signed helper terms
/// (delta_k, Delta_k) are never clamped before taking their min with 0.
inline Bits clamp_rate(Bits b) { return b > 0.0 ? b : 0.0; }

} // namespace gmac
