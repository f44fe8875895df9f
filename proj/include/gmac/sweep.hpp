#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "gmac/gaussian.hpp"
#include "gmac/region.hpp"

namespace gmac {

/// Grid densities and refinement policy for the parameter-union sweeps.
/// Defaults keep a full doubly-dirty trace tractable; figure configs may
/// use lighter grids.
struct SweepSpec {
    int rho_points = 9;
    int eta_points = 9;
    int split_points = 5;
    int alpha_points = 9;
    int refine_depth = 3;
    int refine_points = 3;      // local grid points per active axis and level
    double refine_shrink = 3.0; // range shrink factor per level
    int weights = 33;           // weighted-sum directions for boundary tracing
    std::uint64_t seed = 0;     // recorded in outputs; sweeps are grid-deterministic
    int workers = 0;            // 0 = hardware concurrency

    void validate() const {
        if (rho_points < 2 || eta_points < 2 || split_points < 2 || alpha_points < 2)
            throw std::domain_error("SweepSpec: grid densities must be >= 2 per active axis");
        if (weights < 2) throw std::domain_error("SweepSpec: need at least 2 weights");
        if (refine_depth < 0 || refine_points < 2 || refine_shrink <= 1.0)
            throw std::domain_error("SweepSpec: invalid refinement policy");
    }

    int worker_count() const {
        if (workers > 0) return workers;
        const unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? int(hc) : 1;
    }
};

enum class SweepModel {
    Prop1,
    Prop2,
    Prop2PureDpc, // doubly dirty without partial cleaning (eta pinned at 1)
    Prop3,
    BaselineGmacCsit,
    BaselineMacCsit,
    BaselineGmacNoCsit,
    BaselineMacNoCsit,
};

inline SweepModel sweep_model_from_string(const std::string& s) {
    if (s == "prop1") return SweepModel::Prop1;
    if (s == "prop2") return SweepModel::Prop2;
    if (s == "prop2-pure-dpc") return SweepModel::Prop2PureDpc;
    if (s == "prop3") return SweepModel::Prop3;
    if (s == "baseline-gmac-csit") return SweepModel::BaselineGmacCsit;
    if (s == "baseline-mac-csit") return SweepModel::BaselineMacCsit;
    if (s == "baseline-gmac-no-csit") return SweepModel::BaselineGmacNoCsit;
    if (s == "baseline-mac-no-csit") return SweepModel::BaselineMacNoCsit;
    throw std::domain_error("unknown model: " + s);
}

namespace sweep_detail {

enum class Axis { Rho1, Rho2, Eta1, Eta2, Split1, Split2, A1, A2, A13, A23 };

inline const char* axis_name(Axis a) {
    switch (a) {
    case Axis::Rho1: return "rho1";
    case Axis::Rho2: return "rho2";
    case Axis::Eta1: return "eta1";
    case Axis::Eta2: return "eta2";
    case Axis::Split1: return "split1";
    case Axis::Split2: return "split2";
    case Axis::A1: return "a1";
    case Axis::A2: return "a2";
    case Axis::A13: return "a13";
    case Axis::A23: return "a23";
    }
    return "?";
}

struct AxisSpec {
    Axis id;
    double lo = 0.0;
    double hi = 1.0;
    int points = 2;
};

} // namespace sweep_detail

/// A parameterized family of achievable polytopes: the channel the formulas
/// run on, the free axes, and the evaluation hooks. Splits always use the
/// full power budget (P' = s P, P'' = (1-s) P), which is rate-optimal.
struct ParamFamily {
    GaussianChannel channel;                       // after scenario transforms
    CodingParams prototype;                        // fixed (restricted) fields
    std::vector<sweep_detail::AxisSpec> axes;
    std::function<std::array<Bits, 6>(const CodingParams&)> bounds6;
    std::function<SplitRatePolytope(const CodingParams&)> polytope;

    CodingParams make(const std::vector<double>& vals) const {
        CodingParams cp = prototype;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            const double v = vals[i];
            switch (axes[i].id) {
            case sweep_detail::Axis::Rho1: cp.rho1 = v; break;
            case sweep_detail::Axis::Rho2: cp.rho2 = v; break;
            case sweep_detail::Axis::Eta1: cp.eta1 = v; break;
            case sweep_detail::Axis::Eta2: cp.eta2 = v; break;
            case sweep_detail::Axis::Split1:
                cp.pp1 = v * channel.p1;
                cp.ppp1 = (1.0 - v) * channel.p1;
                break;
            case sweep_detail::Axis::Split2:
                cp.pp2 = v * channel.p2;
                cp.ppp2 = (1.0 - v) * channel.p2;
                break;
            case sweep_detail::Axis::A1: cp.a1 = v; break;
            case sweep_detail::Axis::A2: cp.a2 = v; break;
            case sweep_detail::Axis::A13: cp.a13 = v; break;
            case sweep_detail::Axis::A23: cp.a23 = v; break;
            }
        }
        return cp;
    }

    std::vector<std::string> axis_names() const {
        std::vector<std::string> out;
        for (const auto& a : axes) out.push_back(sweep_detail::axis_name(a.id));
        return out;
    }
};

/// Upper bound for the precoding-coefficient sweep: twice the total-power
/// Costa coefficient of the fully coherent received signal.
inline double alpha_sweep_cap(const GaussianChannel& ch) {
    const double s = ch.p1 + ch.p2 + 2.0 * std::sqrt(ch.p1 * ch.p2);
    return 2.0 * s / (s + ch.n3);
}

/// Named cooperation-pattern restrictions of the doubly-dirty family.
enum class Prop2Restriction { None, Case1, Case2, Case3, Case4 };

inline ParamFamily make_family(const GaussianChannel& ch, SweepModel model, const SweepSpec& spec,
                               Prop2Restriction restrict_to = Prop2Restriction::None) {
    using sweep_detail::Axis;
    using sweep_detail::AxisSpec;
    ch.validate();
    ParamFamily f;

    auto prop1_like = [&](const GaussianChannel& eff, bool cooperative) {
        f.channel = eff;
        if (cooperative) {
            f.axes = {AxisSpec{Axis::Rho1, 0, 1, spec.rho_points},
                      AxisSpec{Axis::Rho2, 0, 1, spec.rho_points},
                      AxisSpec{Axis::Split1, 0, 1, spec.split_points},
                      AxisSpec{Axis::Split2, 0, 1, spec.split_points}};
        } else {
            f.prototype.ppp1 = eff.p1; // no cooperation: everything direct
            f.prototype.ppp2 = eff.p2;
        }
        const GaussianChannel c = eff;
        f.bounds6 = [c](const CodingParams& cp) {
            const SplitRatePolytope p = prop1_region(c, cp);
            const Bits minsum = std::min(p.constraints[2].bound, p.constraints[3].bound);
            return std::array<Bits, 6>{p.constraints[0].bound, 0.0, 0.0, p.constraints[1].bound,
                                       minsum, minsum};
        };
        f.polytope = [c](const CodingParams& cp) { return prop1_region(c, cp); };
    };

    switch (model) {
    case SweepModel::Prop1:
        prop1_like(ch, true);
        break;
    case SweepModel::BaselineGmacCsit:
        prop1_like(scenario_channel(ch, Scenario::GmacCsit), true);
        break;
    case SweepModel::BaselineMacCsit:
        prop1_like(scenario_channel(ch, Scenario::MacCsit), false);
        break;
    case SweepModel::BaselineGmacNoCsit:
        prop1_like(scenario_channel(ch, Scenario::GmacNoCsit), true);
        break;
    case SweepModel::BaselineMacNoCsit:
        prop1_like(scenario_channel(ch, Scenario::MacNoCsit), false);
        break;
    case SweepModel::Prop2:
    case SweepModel::Prop2PureDpc: {
        if (ch.q1_infinite())
            throw std::domain_error("prop2 sweep: q1 is infinite; use model prop3");
        f.channel = ch;
        f.channel.q0 = 0.0; // common state removed by the optimal Costa layer
        const double cap = alpha_sweep_cap(ch);
        const double e1 = CodingParams::eta_min(ch.p1, ch.q1);
        const double e2 = CodingParams::eta_min(ch.p2, ch.q2);
        const bool sweep_eta = model == SweepModel::Prop2;
        std::vector<AxisSpec> axes;
        auto add = [&](Axis id, double lo, double hi, int pts) {
            if (hi - lo < 1e-15) {
                // degenerate range: pin in the prototype instead
                CodingParams& cp = f.prototype;
                switch (id) {
                case Axis::Eta1: cp.eta1 = lo; break;
                case Axis::Eta2: cp.eta2 = lo; break;
                default: break;
                }
                return;
            }
            axes.push_back(AxisSpec{id, lo, hi, pts});
        };
        switch (restrict_to) {
        case Prop2Restriction::None:
            add(Axis::Rho1, 0, 1, spec.rho_points);
            add(Axis::Rho2, 0, 1, spec.rho_points);
            if (sweep_eta) { add(Axis::Eta1, e1, 1, spec.eta_points); add(Axis::Eta2, e2, 1, spec.eta_points); }
            add(Axis::Split1, 0, 1, spec.split_points);
            add(Axis::Split2, 0, 1, spec.split_points);
            add(Axis::A1, 0, cap, spec.alpha_points);
            add(Axis::A2, 0, cap, spec.alpha_points);
            add(Axis::A13, 0, cap, spec.alpha_points);
            add(Axis::A23, 0, cap, spec.alpha_points);
            break;
        case Prop2Restriction::Case1: // R13 = R23 = 0: all power in the fresh layer
            f.prototype.pp1 = ch.p1;
            f.prototype.pp2 = ch.p2;
            add(Axis::Rho1, 0, 1, spec.rho_points);
            add(Axis::Rho2, 0, 1, spec.rho_points);
            if (sweep_eta) { add(Axis::Eta1, e1, 1, spec.eta_points); add(Axis::Eta2, e2, 1, spec.eta_points); }
            add(Axis::A1, 0, cap, spec.alpha_points);
            add(Axis::A2, 0, cap, spec.alpha_points);
            break;
        case Prop2Restriction::Case2: // R12 = R21 = 0: direct only, no cooperation
            f.prototype.ppp1 = ch.p1;
            f.prototype.ppp2 = ch.p2;
            if (sweep_eta) { add(Axis::Eta1, e1, 1, spec.eta_points); add(Axis::Eta2, e2, 1, spec.eta_points); }
            add(Axis::A13, 0, cap, spec.alpha_points);
            add(Axis::A23, 0, cap, spec.alpha_points);
            break;
        case Prop2Restriction::Case3: // R13 = R21 = 0: encoder 2 relays encoder 1
            f.prototype.pp1 = ch.p1;   // P''_1 = 0
            f.prototype.ppp2 = ch.p2;  // P'_2 = 0
            add(Axis::Rho1, 0, 1, spec.rho_points);
            add(Axis::Rho2, 0, 1, spec.rho_points);
            if (sweep_eta) { add(Axis::Eta1, e1, 1, spec.eta_points); add(Axis::Eta2, e2, 1, spec.eta_points); }
            add(Axis::A1, 0, cap, spec.alpha_points);
            add(Axis::A23, 0, cap, spec.alpha_points);
            break;
        case Prop2Restriction::Case4: // mirror of case 3
            f.prototype.ppp1 = ch.p1;
            f.prototype.pp2 = ch.p2;
            add(Axis::Rho1, 0, 1, spec.rho_points);
            add(Axis::Rho2, 0, 1, spec.rho_points);
            if (sweep_eta) { add(Axis::Eta1, e1, 1, spec.eta_points); add(Axis::Eta2, e2, 1, spec.eta_points); }
            add(Axis::A2, 0, cap, spec.alpha_points);
            add(Axis::A13, 0, cap, spec.alpha_points);
            break;
        }
        f.axes = std::move(axes);
        const GaussianChannel c = f.channel;
        f.bounds6 = [c](const CodingParams& cp) {
            const Prop2Terms t = prop2_terms(c, cp);
            const Prop2Bounds b = prop2_bounds(c, cp, t);
            return std::array<Bits, 6>{b.b12, b.b13, b.b21, b.b23, b.b13_23, b.b_sum};
        };
        f.polytope = [c](const CodingParams& cp) { return prop2_region(c, cp); };
        break;
    }
    case SweepModel::Prop3: {
        if (!ch.q1_infinite())
            throw std::domain_error("prop3 sweep: requires the q1 = inf flag");
        f.channel = ch;
        f.prototype.ppp1 = ch.p1; // encoder 1's non-cooperative power is all direct
        f.prototype.eta1 = f.prototype.eta2 = 1.0;
        f.axes = {sweep_detail::AxisSpec{sweep_detail::Axis::Rho1, 0, 1, spec.rho_points},
                  sweep_detail::AxisSpec{sweep_detail::Axis::Rho2, 0, 1, spec.rho_points},
                  sweep_detail::AxisSpec{sweep_detail::Axis::Split2, 0, 1, spec.split_points},
                  sweep_detail::AxisSpec{sweep_detail::Axis::A13, 0, alpha_sweep_cap(ch),
                                         spec.alpha_points}};
        const GaussianChannel c = ch;
        f.bounds6 = [c](const CodingParams& cp) {
            const SplitRatePolytope p = prop3_region(c, cp);
            const Bits b_r2 = p.constraints[0].bound;
            const Bits b_sum = p.constraints[1].bound;
            return std::array<Bits, 6>{b_sum, 0.0, 0.0, b_r2, b_sum, b_sum};
        };
        f.polytope = [c](const CodingParams& cp) { return prop3_region(c, cp); };
        break;
    }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Deterministic grid optimization
// ---------------------------------------------------------------------------

namespace sweep_detail {

struct Grid {
    std::vector<AxisSpec> axes;
    std::size_t total = 1;

    explicit Grid(std::vector<AxisSpec> a) : axes(std::move(a)) {
        for (const AxisSpec& ax : axes) total *= std::size_t(ax.points);
    }

    std::vector<double> values(std::size_t flat) const {
        std::vector<double> v(axes.size());
        for (std::size_t i = axes.size(); i-- > 0;) {
            const AxisSpec& ax = axes[i];
            const std::size_t idx = flat % std::size_t(ax.points);
            flat /= std::size_t(ax.points);
            v[i] = ax.points == 1 ? ax.lo
                                  : ax.lo + (ax.hi - ax.lo) * double(idx) / double(ax.points - 1);
        }
        return v;
    }
};

/// Strict total order on candidates: higher objective wins, ties go to the
/// lexicographically smallest parameter vector.
struct Best {
    bool set = false;
    double obj = -1.0;
    std::vector<double> vals;
    Point point{};

    bool improves(double o, const std::vector<double>& v) const {
        if (!set) return true;
        if (o != obj) return o > obj;
        return std::lexicographical_compare(v.begin(), v.end(), vals.begin(), vals.end());
    }
    void take(double o, const std::vector<double>& v, const Point& p) {
        set = true;
        obj = o;
        vals = v;
        point = p;
    }
};

template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    // fn(worker_index, begin, end); partials must be merged by the caller in
    // worker order (every reduction below is also a total-order max, so the
    // result is independent of the partition)
    const int w = std::max(1, std::min<int>(workers, int(std::min<std::size_t>(std::max<std::size_t>(n, 1), 256))));
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t) {
        const std::size_t lo = n * std::size_t(t) / std::size_t(w);
        const std::size_t hi = n * std::size_t(t + 1) / std::size_t(w);
        threads.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
    }
    for (std::thread& t : threads) t.join();
}

} // namespace sweep_detail

/// One traced boundary point: the winning parameters for a weighted-sum
/// direction and the rate pair they achieve.
struct TraceRow {
    double mu = 0.0;
    std::vector<double> values; // per axis, family order
    CodingParams params;
    Point point;
};

struct TraceResult {
    RateRegion2D region;
    std::vector<TraceRow> rows;
    std::vector<std::string> axis_names;
};

/// Weighted-sum boundary tracing with local grid refinement. For each
/// weight mu the objective mu R1 + (1-mu) R2 is maximized over the product
/// grid, the best cell is refined by recursive subdivision, and the convex
/// union of all winners' polytopes is returned. Deterministic for a fixed
/// spec, independent of the worker count.
inline TraceResult trace_boundary(const GaussianChannel& ch, const SweepSpec& spec,
                                  SweepModel model,
                                  Prop2Restriction restrict_to = Prop2Restriction::None) {
    spec.validate();
    const ParamFamily family = make_family(ch, model, spec, restrict_to);
    const sweep_detail::Grid grid(family.axes);
    const int W = spec.weights;

    std::vector<double> mus(static_cast<std::size_t>(W));
    for (int j = 0; j < W; ++j) mus[std::size_t(j)] = double(j) / double(W - 1);

    auto evaluate = [&family](const std::vector<double>& vals, std::array<Point, 5>& pts,
                              int& npts) {
        const CodingParams cp = family.make(vals);
        const std::array<Bits, 6> b = family.bounds6(cp);
        theorem1_pareto_points(b[0], b[1], b[2], b[3], b[4], b[5], pts, npts);
    };

    // base pass over the full grid
    std::vector<std::vector<sweep_detail::Best>> partials(
        std::size_t(std::max(1, spec.worker_count())),
        std::vector<sweep_detail::Best>(std::size_t(W)));
    sweep_detail::parallel_for(
        grid.total, int(partials.size()), [&](int worker, std::size_t lo, std::size_t hi) {
            std::vector<sweep_detail::Best>& best = partials[std::size_t(worker)];
            std::array<Point, 5> pts;
            int npts = 0;
            for (std::size_t flat = lo; flat < hi; ++flat) {
                const std::vector<double> vals = grid.values(flat);
                evaluate(vals, pts, npts);
                for (int j = 0; j < W; ++j) {
                    const double mu = mus[std::size_t(j)];
                    for (int k = 0; k < npts; ++k) {
                        const double obj = mu * pts[k].r1 + (1.0 - mu) * pts[k].r2;
                        sweep_detail::Best& b = best[std::size_t(j)];
                        if (b.improves(obj, vals)) b.take(obj, vals, pts[k]);
                    }
                }
            }
        });
    std::vector<sweep_detail::Best> best(static_cast<std::size_t>(W));
    for (const auto& part : partials)
        for (int j = 0; j < W; ++j) {
            const sweep_detail::Best& c = part[std::size_t(j)];
            if (c.set && best[std::size_t(j)].improves(c.obj, c.vals)) best[std::size_t(j)] = c;
        }

    // per-weight local refinement; every level's winner joins the union
    std::vector<std::vector<double>> winners;
    for (int j = 0; j < W; ++j) winners.push_back(best[std::size_t(j)].vals);

    std::vector<double> step(family.axes.size());
    for (std::size_t i = 0; i < family.axes.size(); ++i) {
        const auto& ax = family.axes[i];
        step[i] = ax.points > 1 ? (ax.hi - ax.lo) / double(ax.points - 1) : 0.0;
    }

    for (int j = 0; j < W; ++j) {
        const double mu = mus[std::size_t(j)];
        sweep_detail::Best cur = best[std::size_t(j)];
        std::vector<double> width = step;
        for (int level = 0; level < spec.refine_depth; ++level) {
            std::vector<sweep_detail::AxisSpec> local(family.axes.size());
            for (std::size_t i = 0; i < family.axes.size(); ++i) {
                const auto& ax = family.axes[i];
                local[i].id = ax.id;
                local[i].lo = std::max(ax.lo, cur.vals[i] - width[i]);
                local[i].hi = std::min(ax.hi, cur.vals[i] + width[i]);
                local[i].points = width[i] > 0.0 ? spec.refine_points : 1;
            }
            const sweep_detail::Grid lgrid(local);
            std::array<Point, 5> pts;
            int npts = 0;
            for (std::size_t flat = 0; flat < lgrid.total; ++flat) {
                const std::vector<double> vals = lgrid.values(flat);
                evaluate(vals, pts, npts);
                for (int k = 0; k < npts; ++k) {
                    const double obj = mu * pts[k].r1 + (1.0 - mu) * pts[k].r2;
                    if (cur.improves(obj, vals)) cur.take(obj, vals, pts[k]);
                }
            }
            winners.push_back(cur.vals);
            for (double& w : width) w /= spec.refine_shrink;
        }
        best[std::size_t(j)] = cur;
    }

    // union of winner polytopes, projected exactly
    std::vector<RateRegion2D> parts;
    for (const std::vector<double>& vals : winners)
        parts.push_back(project_to_r1_r2(family.polytope(family.make(vals))));
    TraceResult out;
    out.region = convex_union(parts);
    out.axis_names = family.axis_names();
    for (int j = 0; j < W; ++j) {
        TraceRow row;
        row.mu = mus[std::size_t(j)];
        row.values = best[std::size_t(j)].vals;
        row.params = family.make(row.values);
        row.point = best[std::size_t(j)].point;
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// Maximum of min(b_sum, b12 + b21 + min(b13 + b23, b13_23)) over the family
/// grid with refinement: the largest achievable R1 + R2.
struct SumRateResult {
    Bits value = 0.0;
    std::vector<double> values;
    CodingParams params;
};

inline SumRateResult max_sum_rate(const ParamFamily& family, const SweepSpec& spec) {
    const sweep_detail::Grid grid(family.axes);
    auto objective = [&family](const std::vector<double>& vals) {
        const std::array<Bits, 6> b = family.bounds6(family.make(vals));
        return std::min(b[5], b[0] + b[2] + std::min(b[1] + b[3], b[4]));
    };

    std::vector<sweep_detail::Best> partials(std::size_t(std::max(1, spec.worker_count())));
    sweep_detail::parallel_for(grid.total, int(partials.size()),
                               [&](int worker, std::size_t lo, std::size_t hi) {
                                   sweep_detail::Best& b = partials[std::size_t(worker)];
                                   for (std::size_t flat = lo; flat < hi; ++flat) {
                                       const std::vector<double> vals = grid.values(flat);
                                       const double obj = objective(vals);
                                       if (b.improves(obj, vals)) b.take(obj, vals, Point{});
                                   }
                               });
    sweep_detail::Best cur;
    for (const sweep_detail::Best& c : partials)
        if (c.set && cur.improves(c.obj, c.vals)) cur = c;

    std::vector<double> width(family.axes.size());
    for (std::size_t i = 0; i < family.axes.size(); ++i) {
        const auto& ax = family.axes[i];
        width[i] = ax.points > 1 ? (ax.hi - ax.lo) / double(ax.points - 1) : 0.0;
    }
    for (int level = 0; level < spec.refine_depth; ++level) {
        std::vector<sweep_detail::AxisSpec> local(family.axes.size());
        for (std::size_t i = 0; i < family.axes.size(); ++i) {
            const auto& ax = family.axes[i];
            local[i].id = ax.id;
            local[i].lo = std::max(ax.lo, cur.vals[i] - width[i]);
            local[i].hi = std::min(ax.hi, cur.vals[i] + width[i]);
            local[i].points = width[i] > 0.0 ? spec.refine_points : 1;
        }
        const sweep_detail::Grid lgrid(local);
        for (std::size_t flat = 0; flat < lgrid.total; ++flat) {
            const std::vector<double> vals = lgrid.values(flat);
            const double obj = objective(vals);
            if (cur.improves(obj, vals)) cur.take(obj, vals, Point{});
        }
        for (double& w : width) w /= spec.refine_shrink;
    }
    SumRateResult out;
    out.value = cur.obj;
    out.values = cur.vals;
    out.params = family.make(cur.vals);
    return out;
}

// ---------------------------------------------------------------------------
// Sum-rate versus signal-to-interference ratio
// ---------------------------------------------------------------------------

struct SirRow {
    double sir_db = 0.0;
    double q_db = 0.0;
    Bits best = 0.0;      // unrestricted doubly-dirty sweep
    Bits full_coop = 0.0; // case 1 only
    Bits no_coop = 0.0;   // case 2 only
};

/// For each SIR value sets Q = P - SIR (dB) on both users and maximizes the
/// doubly-dirty sum-rate, together with the full-cooperation-only and
/// no-cooperation-only strategies.
inline std::vector<SirRow> sum_rate_vs_sir(const GaussianChannel& ch_template,
                                           const std::vector<double>& sir_db,
                                           const SweepSpec& spec) {
    ch_template.validate();
    if (std::abs(ch_template.p1 - ch_template.p2) > 1e-12 * (1.0 + ch_template.p1))
        throw std::domain_error("sum_rate_vs_sir: requires symmetric powers P1 = P2");
    const double p_db = linear_to_db(ch_template.p1);
    std::vector<SirRow> rows;
    for (double sir : sir_db) {
        GaussianChannel ch = ch_template;
        const double q_db = p_db - sir;
        ch.q1 = ch.q2 = db_to_linear(q_db);
        ch.q0 = 0.0;
        SirRow row;
        row.sir_db = sir;
        row.q_db = q_db;
        row.full_coop =
            max_sum_rate(make_family(ch, SweepModel::Prop2, spec, Prop2Restriction::Case1), spec)
                .value;
        row.no_coop =
            max_sum_rate(make_family(ch, SweepModel::Prop2, spec, Prop2Restriction::Case2), spec)
                .value;
        // the restricted patterns are members of the same union, so the
        // reported maximum can never fall below either strategy
        row.best = std::max({max_sum_rate(make_family(ch, SweepModel::Prop2, spec), spec).value,
                             row.full_coop, row.no_coop});
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Four-case decomposition
// ---------------------------------------------------------------------------

struct FourCaseResult {
    std::array<RateRegion2D, 4> cases;
    RateRegion2D hull;         // convex union of the four restricted sweeps
    RateRegion2D unrestricted; // full sweep for comparison
    double excess = 0.0;       // how far the full sweep pokes out of the hull
};

/// Runs the sweep restricted to each of the four cooperation patterns and
/// reports whether the unrestricted sweep exceeds their convex hull.
inline FourCaseResult four_case_hull(const GaussianChannel& ch, const SweepSpec& spec) {
    FourCaseResult out;
    out.cases[0] = trace_boundary(ch, spec, SweepModel::Prop2, Prop2Restriction::Case1).region;
    out.cases[1] = trace_boundary(ch, spec, SweepModel::Prop2, Prop2Restriction::Case2).region;
    out.cases[2] = trace_boundary(ch, spec, SweepModel::Prop2, Prop2Restriction::Case3).region;
    out.cases[3] = trace_boundary(ch, spec, SweepModel::Prop2, Prop2Restriction::Case4).region;
    out.hull = convex_union({out.cases[0], out.cases[1], out.cases[2], out.cases[3]});
    out.unrestricted = trace_boundary(ch, spec, SweepModel::Prop2).region;
    for (const Point& v : out.unrestricted.vertices)
        out.excess = std::max(out.excess, region_distance(out.hull, v));
    return out;
}

} // namespace gmac
