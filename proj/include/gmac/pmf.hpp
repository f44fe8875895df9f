#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmac/scalar.hpp"

namespace gmac {

/// Canonical variable order of the discrete joint distribution. The dense
/// tensor is row-major in this order (S0 slowest, Y3 fastest).
enum PmfVar : int { S0, S1, S2, U, V1, V2, V13, V23, X1, X2, Y1, Y2, Y3 };

inline constexpr int kPmfVars = 13;
inline constexpr const char* kPmfVarNames[kPmfVars] = {"S0", "S1", "S2", "U",  "V1", "V2", "V13",
                                                       "V23", "X1", "X2", "Y1", "Y2", "Y3"};

using VarSet = std::uint16_t;

inline constexpr VarSet vars() { return 0; }
template <typename... Rest>
inline constexpr VarSet vars(PmfVar v, Rest... rest) {
    return VarSet(VarSet(1u << v) | vars(rest...));
}

/// The nine-factor decomposition the achievable-region theorem assumes:
/// p(s0) p(s1|s0) p(s2|s0) p(u|s0) p(v1|s0 s1 u) p(v2|s0 s2 u)
/// p(v13 x1|u v1 s0 s1) p(v23 x2|u v2 s0 s2) p(y1 y2 y3|x1 x2 s0 s1 s2).
struct PmfFactor {
    VarSet targets;
    VarSet given;
    const char* name;
};

inline const std::array<PmfFactor, 9>& pmf_factors() {
    static const std::array<PmfFactor, 9> fs = {{
        {vars(S0), vars(), "p(S0)"},
        {vars(S1), vars(S0), "p(S1|S0)"},
        {vars(S2), vars(S0), "p(S2|S0)"},
        {vars(U), vars(S0), "p(U|S0)"},
        {vars(V1), vars(S0, S1, U), "p(V1|S0 S1 U)"},
        {vars(V2), vars(S0, S2, U), "p(V2|S0 S2 U)"},
        {vars(V13, X1), vars(U, V1, S0, S1), "p(V13 X1|U V1 S0 S1)"},
        {vars(V23, X2), vars(U, V2, S0, S2), "p(V23 X2|U V2 S0 S2)"},
        {vars(Y1, Y2, Y3), vars(X1, X2, S0, S1, S2), "p(Y1 Y2 Y3|X1 X2 S0 S1 S2)"},
    }};
    return fs;
}

/// Guard on the dense tensor size; the per-variable default cap of 4 keeps
/// typical instances far below this. Auxiliary alphabets never need to be
/// larger than |U| <= |S0||S1||S2||X1||X2| + 8,
/// |Vk| <= |U||S0||S1||S2||X1||X2| + 8 and
/// |Vk3| <= |U||Vk||S0||S1||S2||X1||X2| + 4; those sufficient sizes are
/// documented here but not enforced.
inline constexpr std::size_t kMaxTensorEntries = std::size_t(1) << 24;

/// Finite-alphabet joint distribution over the thirteen channel variables.
struct JointPmf {
    std::array<int, kPmfVars> sizes{};
    std::vector<double> prob; // row-major over sizes

    JointPmf() { sizes.fill(1); }

    std::size_t total_size() const {
        std::size_t n = 1;
        for (int s : sizes) n *= std::size_t(s);
        return n;
    }

    std::size_t stride(int var) const {
        std::size_t s = 1;
        for (int v = kPmfVars - 1; v > var; --v) s *= std::size_t(sizes[v]);
        return s;
    }

    void validate() const {
        if (prob.size() != total_size())
            throw std::domain_error("JointPmf: tensor size does not match alphabet sizes");
        double sum = 0.0;
        for (double p : prob) {
            if (p < -1e-15 || std::isnan(p)) throw std::domain_error("JointPmf: negative entry");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::domain_error("JointPmf: entries sum to " + std::to_string(sum));
    }
};

namespace detail {

struct Marginal {
    std::vector<int> var_ids; // ascending
    std::vector<int> sizes;
    std::vector<double> prob;
};

/// One pass over the full tensor, accumulating into the marginal over the
/// selected variables (kept in canonical order).
inline Marginal marginalize(const JointPmf& p, VarSet sel) {
    Marginal m;
    std::size_t msize = 1;
    for (int v = 0; v < kPmfVars; ++v)
        if (sel & (1u << v)) {
            m.var_ids.push_back(v);
            m.sizes.push_back(p.sizes[v]);
            msize *= std::size_t(p.sizes[v]);
        }
    m.prob.assign(msize, 0.0);

    // mixed-radix digits for the full tensor, updated incrementally
    std::array<int, kPmfVars> digit{};
    std::vector<std::size_t> mstride(kPmfVars, 0);
    {
        std::size_t s = 1;
        for (int i = int(m.var_ids.size()); i-- > 0;) {
            mstride[m.var_ids[i]] = s;
            s *= std::size_t(m.sizes[i]);
        }
    }
    std::size_t midx = 0;
    const std::size_t n = p.prob.size();
    for (std::size_t flat = 0; flat < n; ++flat) {
        m.prob[midx] += p.prob[flat];
        for (int v = kPmfVars - 1; v >= 0; --v) {
            if (++digit[v] < p.sizes[v]) {
                midx += mstride[v];
                break;
            }
            midx -= mstride[v] * std::size_t(p.sizes[v] - 1);
            digit[v] = 0;
        }
    }
    return m;
}

/// Marginal of a marginal, over a subset of its own variables (row-major,
/// canonical variable order).
inline std::vector<double> sub_marginal(const Marginal& m, VarSet sel) {
    std::vector<std::size_t> sstride(m.var_ids.size(), 0);
    std::size_t size = 1;
    for (int i = int(m.var_ids.size()); i-- > 0;)
        if (sel & (1u << m.var_ids[i])) {
            sstride[i] = size;
            size *= std::size_t(m.sizes[i]);
        }
    std::vector<double> out(size, 0.0);
    std::vector<int> digit(m.var_ids.size(), 0);
    std::size_t oidx = 0;
    for (double v : m.prob) {
        out[oidx] += v;
        for (int i = int(m.var_ids.size()); i-- > 0;) {
            if (++digit[i] < m.sizes[i]) {
                oidx += sstride[i];
                break;
            }
            oidx -= sstride[i] * std::size_t(m.sizes[i] - 1);
            digit[i] = 0;
        }
    }
    return out;
}

} // namespace detail

/// I(left; right | given) in bits, computed exactly from the tensor.
inline Bits mutual_information(const JointPmf& p, VarSet left, VarSet right, VarSet given = 0) {
    if ((left & right) || (left & given) || (right & given))
        throw std::domain_error("mutual_information: variable sets must be disjoint");
    if (left == 0 || right == 0) return 0.0;
    // a side whose selected alphabets are all singletons carries nothing;
    // returning exactly 0 keeps degenerate-state penalty terms at literal zero
    auto subspace = [&p](VarSet sel) {
        std::size_t n = 1;
        for (int v = 0; v < kPmfVars; ++v)
            if (sel & (1u << v)) n *= std::size_t(p.sizes[v]);
        return n;
    };
    if (subspace(left) == 1 || subspace(right) == 1) return 0.0;

    const detail::Marginal joint = detail::marginalize(p, VarSet(left | right | given));
    const std::vector<double> p_lg = detail::sub_marginal(joint, VarSet(left | given));
    const std::vector<double> p_rg = detail::sub_marginal(joint, VarSet(right | given));
    const std::vector<double> p_g = given ? detail::sub_marginal(joint, given)
                                          : std::vector<double>{1.0};

    // per-entry indices into the three sub-marginals
    const int nv = int(joint.var_ids.size());
    std::vector<std::size_t> st_lg(nv, 0), st_rg(nv, 0), st_g(nv, 0);
    auto fill = [&](VarSet sel, std::vector<std::size_t>& st) {
        std::size_t s = 1;
        for (int i = nv; i-- > 0;)
            if (sel & (1u << joint.var_ids[i])) {
                st[i] = s;
                s *= std::size_t(joint.sizes[i]);
            }
    };
    fill(VarSet(left | given), st_lg);
    fill(VarSet(right | given), st_rg);
    fill(given, st_g);

    double mi = 0.0;
    std::vector<int> digit(nv, 0);
    std::size_t i_lg = 0, i_rg = 0, i_g = 0;
    for (double pj : joint.prob) {
        if (pj > 1e-15) {
            const double num = pj * p_g[i_g];
            const double den = p_lg[i_lg] * p_rg[i_rg];
            mi += pj * std::log2(num / den);
        }
        for (int i = nv; i-- > 0;) {
            if (++digit[i] < joint.sizes[i]) {
                i_lg += st_lg[i];
                i_rg += st_rg[i];
                i_g += st_g[i];
                break;
            }
            i_lg -= st_lg[i] * std::size_t(joint.sizes[i] - 1);
            i_rg -= st_rg[i] * std::size_t(joint.sizes[i] - 1);
            i_g -= st_g[i] * std::size_t(joint.sizes[i] - 1);
            digit[i] = 0;
        }
    }
    if (mi < 0.0) {
        if (mi < -1e-9) throw std::domain_error("mutual_information: negative result");
        mi = 0.0;
    }
    return mi;
}

/// A reported factorization or Markov-chain violation.
struct PmfViolation {
    std::string name;
    double magnitude = 0.0;
};

/// Empty iff the nine-factor decomposition reproduces the tensor and both
/// Markov chains S1S2 -- S0 -- U and V1V13 -- S0U -- V2V23 hold.
inline std::vector<PmfViolation> validate_factorization(const JointPmf& p) {
    p.validate();
    std::vector<PmfViolation> out;

    // reconstruct the tensor from its own conditionals
    std::vector<double> recon(p.prob.size(), 1.0);
    for (const PmfFactor& f : pmf_factors()) {
        const detail::Marginal m_tg = detail::marginalize(p, VarSet(f.targets | f.given));
        const std::vector<double> m_g = f.given ? detail::sub_marginal(m_tg, f.given)
                                                : std::vector<double>{1.0};
        // conditional factor evaluated per full-tensor entry
        const int nv = int(m_tg.var_ids.size());
        std::vector<std::size_t> st_tg(kPmfVars, 0), st_g(kPmfVars, 0);
        {
            std::size_t s = 1;
            for (int i = nv; i-- > 0;) {
                st_tg[m_tg.var_ids[i]] = s;
                s *= std::size_t(m_tg.sizes[i]);
            }
            s = 1;
            for (int i = nv; i-- > 0;)
                if (f.given & (1u << m_tg.var_ids[i])) {
                    st_g[m_tg.var_ids[i]] = s;
                    s *= std::size_t(m_tg.sizes[i]);
                }
        }
        std::array<int, kPmfVars> digit{};
        std::size_t i_tg = 0, i_g = 0;
        for (std::size_t flat = 0; flat < p.prob.size(); ++flat) {
            const double den = f.given ? m_g[i_g] : 1.0;
            recon[flat] *= den > 1e-15 ? m_tg.prob[i_tg] / den : 0.0;
            for (int v = kPmfVars - 1; v >= 0; --v) {
                if (++digit[v] < p.sizes[v]) {
                    i_tg += st_tg[v];
                    i_g += st_g[v];
                    break;
                }
                i_tg -= st_tg[v] * std::size_t(p.sizes[v] - 1);
                i_g -= st_g[v] * std::size_t(p.sizes[v] - 1);
                digit[v] = 0;
            }
        }
    }
    double max_err = 0.0;
    for (std::size_t i = 0; i < p.prob.size(); ++i)
        max_err = std::max(max_err, std::abs(recon[i] - p.prob[i]));
    if (max_err > 1e-10) out.push_back({"nine-factor decomposition", max_err});

    const Bits mc1 = mutual_information(p, vars(S1, S2), vars(U), vars(S0));
    if (mc1 > 1e-9) out.push_back({"markov chain S1S2--S0--U", mc1});
    const Bits mc2 = mutual_information(p, vars(V1, V13), vars(V2, V23), vars(S0, U));
    if (mc2 > 1e-9) out.push_back({"markov chain V1V13--S0U--V2V23", mc2});
    return out;
}

// ---------------------------------------------------------------------------
// Construction from factor tables
// ---------------------------------------------------------------------------

/// Builds a joint distribution from the nine factor tables. Each table is
/// flat row-major over (given variables ..., target variables ...), both in
/// canonical variable order, and must be a proper conditional (each given
/// combination sums to 1). Variables absent from a row keep size 1.
class PmfBuilder {
public:
    PmfBuilder() { sizes_.fill(1); }

    PmfBuilder& size(PmfVar v, int n) {
        if (n < 1) throw std::domain_error("PmfBuilder: alphabet size must be >= 1");
        sizes_[v] = n;
        return *this;
    }

    /// factor index 0..8 per pmf_factors()
    PmfBuilder& factor(int idx, std::vector<double> table) {
        tables_.at(std::size_t(idx)) = std::move(table);
        set_[std::size_t(idx)] = true;
        return *this;
    }

    JointPmf build() const {
        JointPmf p;
        p.sizes = sizes_;
        const std::size_t n = p.total_size();
        if (n > kMaxTensorEntries)
            throw std::domain_error("PmfBuilder: tensor too large (see documented alphabet caps)");
        for (int f = 0; f < 9; ++f)
            if (!set_[std::size_t(f)]) throw std::domain_error("PmfBuilder: missing factor " +
                                                               std::string(pmf_factors()[f].name));
        // verify table sizes and per-given normalization
        for (int f = 0; f < 9; ++f) {
            const PmfFactor& spec = pmf_factors()[f];
            const std::size_t tsize = subspace_size(VarSet(spec.targets));
            const std::size_t gsize = subspace_size(spec.given);
            const std::vector<double>& tab = tables_[std::size_t(f)];
            if (tab.size() != tsize * gsize)
                throw std::domain_error(std::string("PmfBuilder: wrong table size for ") +
                                        spec.name);
            for (std::size_t g = 0; g < gsize; ++g) {
                double s = 0.0;
                for (std::size_t t = 0; t < tsize; ++t) {
                    const double v = tab[g * tsize + t];
                    if (v < -1e-15) throw std::domain_error("PmfBuilder: negative factor entry");
                    s += v;
                }
                if (std::abs(s - 1.0) > 1e-12)
                    throw std::domain_error(std::string("PmfBuilder: unnormalized factor ") +
                                            spec.name);
            }
        }

        p.prob.assign(n, 1.0);
        std::array<int, kPmfVars> digit{};
        for (std::size_t flat = 0; flat < n; ++flat) {
            double v = 1.0;
            for (int f = 0; f < 9; ++f) {
                const PmfFactor& spec = pmf_factors()[f];
                const std::size_t idx = subspace_index(spec.given, digit) *
                                            subspace_size(VarSet(spec.targets)) +
                                        subspace_index(VarSet(spec.targets), digit);
                v *= tables_[std::size_t(f)][idx];
                if (v == 0.0) break;
            }
            p.prob[flat] = v;
            for (int d = kPmfVars - 1; d >= 0; --d) {
                if (++digit[d] < p.sizes[d]) break;
                digit[d] = 0;
            }
        }
        p.validate();
        return p;
    }

private:
    std::size_t subspace_size(VarSet sel) const {
        std::size_t s = 1;
        for (int v = 0; v < kPmfVars; ++v)
            if (sel & (1u << v)) s *= std::size_t(sizes_[v]);
        return s;
    }
    std::size_t subspace_index(VarSet sel, const std::array<int, kPmfVars>& digit) const {
        std::size_t idx = 0;
        for (int v = 0; v < kPmfVars; ++v)
            if (sel & (1u << v)) idx = idx * std::size_t(sizes_[v]) + std::size_t(digit[v]);
        return idx;
    }

    std::array<int, kPmfVars> sizes_;
    std::array<std::vector<double>, 9> tables_{};
    std::array<bool, 9> set_{};
};

/// Conditional table where the (single) target is a deterministic function
/// of the given variables; `fn` receives the given digits in canonical order.
inline std::vector<double> deterministic_table(const std::vector<int>& given_sizes, int target_size,
                                               const std::function<int(const std::vector<int>&)>& fn) {
    std::size_t gsize = 1;
    for (int s : given_sizes) gsize *= std::size_t(s);
    std::vector<double> tab(gsize * std::size_t(target_size), 0.0);
    std::vector<int> digit(given_sizes.size(), 0);
    for (std::size_t g = 0; g < gsize; ++g) {
        const int t = fn(digit);
        if (t < 0 || t >= target_size) throw std::domain_error("deterministic_table: out of range");
        tab[g * std::size_t(target_size) + std::size_t(t)] = 1.0;
        for (int i = int(given_sizes.size()); i-- > 0;) {
            if (++digit[std::size_t(i)] < given_sizes[std::size_t(i)]) break;
            digit[std::size_t(i)] = 0;
        }
    }
    return tab;
}

} // namespace gmac
