// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Reference values are frozen from independent high-precision
// evaluation; tolerances are pinned in code.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmac/gaussian.hpp"
#include "gmac/io.hpp"
#include "gmac/mc_oracle.hpp"
#include "gmac/region.hpp"
#include "gmac/sweep.hpp"
#include "gmac/theorem1.hpp"

using namespace gmac;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        passed = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!detail.empty() && detail.rfind("FAIL", 0) == 0) passed = false;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-28s (%.2fs)  %s\n", passed ? "PASS" : "FAIL", name.c_str(), secs,
                detail.c_str());
    if (!passed) ++g_failures;
}

GaussianChannel fig5_channel(double q0_db) {
    GaussianChannel ch;
    ch.p1 = ch.p2 = 10.0;
    ch.n1 = ch.n2 = 1.0;
    ch.n3 = db_to_linear(7.0);
    ch.q0 = db_to_linear(q0_db);
    return ch;
}

// frozen from 30-digit arithmetic: C(40 / 10^0.7)
constexpr double kFullCoopAnchor = 1.58344200274984999;

std::string fmt(double v) { return fmt_double(v); }

// --- criterion bodies -------------------------------------------------------

std::string interference_independence() {
    SweepSpec spec;
    spec.rho_points = 9;
    spec.split_points = 5;
    spec.weights = 33;
    spec.refine_depth = 2;
    double worst = 0.0;
    RateRegion2D first;
    for (double q0 : {2.0, 5.0, 8.0}) {
        const RateRegion2D r = trace_boundary(fig5_channel(q0), spec, SweepModel::Prop1).region;
        if (first.vertices.empty()) first = r;
        else worst = std::max(worst, hausdorff(first, r));
    }
    if (worst > 1e-9) return "FAIL max Hausdorff " + fmt(worst) + " > 1e-9";
    return "regions at Q0 in {2,5,8} dB identical, Hausdorff " + fmt(worst);
}

std::string full_cooperation_anchor() {
    const GaussianChannel ch = fig5_channel(5.0);
    CodingParams cp;
    cp.rho1 = cp.rho2 = 1.0;
    cp.pp1 = ch.p1;
    cp.pp2 = ch.p2;
    // the coherent sum bound of the full-CSIT region at rho = 1
    const SplitRatePolytope p = prop1_region(ch, cp);
    const Bits sum = p.constraints[3].bound;
    const double err = std::abs(sum - kFullCoopAnchor);
    if (err > 1e-6) return "FAIL |" + fmt(sum) + " - " + fmt(kFullCoopAnchor) + "| > 1e-6";
    return "C(40/10^0.7) reproduced within " + fmt(err);
}

std::string orthogonality() {
    std::mt19937_64 rng(0xACCE5501);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    double weakest = kInf;
    for (int i = 0; i < 10000; ++i) {
        GaussianChannel ch;
        ch.p1 = db_to_linear(-10.0 + 30.0 * u(rng));
        ch.p2 = db_to_linear(-10.0 + 30.0 * u(rng));
        ch.n3 = db_to_linear(-10.0 + 30.0 * u(rng));
        ch.n1 = ch.n2 = 1.0;
        CodingParams cp;
        cp.rho1 = u(rng);
        cp.rho2 = u(rng);
        const double s1 = u(rng), s2 = u(rng);
        cp.pp1 = s1 * ch.p1;
        cp.ppp1 = (1.0 - s1) * ch.p1;
        cp.pp2 = s2 * ch.p2;
        cp.ppp2 = (1.0 - s2) * ch.p2;
        cp = optimal_dpc_coeffs(ch, cp);
        for (double r : dpc_orthogonality_residuals(ch, cp)) worst = std::max(worst, std::abs(r));
        for (int k = 0; k < 5; ++k)
            for (double eps : {-0.05, 0.05}) {
                CodingParams mod = cp;
                (k == 0 ? mod.a0
                 : k == 1 ? mod.a1
                 : k == 2 ? mod.a2
                 : k == 3 ? mod.a13
                          : mod.a23) += eps;
                double peak = 0.0;
                for (double r : dpc_orthogonality_residuals(ch, mod))
                    peak = std::max(peak, std::abs(r));
                weakest = std::min(weakest, peak);
            }
    }
    if (worst >= 1e-12) return "FAIL max residual " + fmt(worst) + " >= 1e-12";
    if (weakest <= 1e-4) return "FAIL weakest perturbation response " + fmt(weakest) + " <= 1e-4";
    return "max residual " + fmt(worst) + ", weakest perturbation response " + fmt(weakest);
}

std::string mmse_entropy_oracle() {
    std::mt19937_64 rng(0xACCE5502);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GaussianChannel ch;
    ch.p1 = ch.p2 = 10.0;
    ch.n1 = ch.n2 = 1.0;
    ch.n3 = 10.0;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        ch.q1 = db_to_linear(-5.0 + 20.0 * u(rng));
        ch.q2 = db_to_linear(-5.0 + 20.0 * u(rng));
        CodingParams cp;
        cp.rho1 = u(rng);
        cp.rho2 = u(rng);
        const double s1 = 0.2 + 0.6 * u(rng), s2 = 0.2 + 0.6 * u(rng);
        cp.pp1 = s1 * ch.p1;
        cp.ppp1 = (1.0 - s1) * ch.p1;
        cp.pp2 = s2 * ch.p2;
        cp.ppp2 = (1.0 - s2) * ch.p2;
        const double lo1 = CodingParams::eta_min(ch.p1, ch.q1);
        const double lo2 = CodingParams::eta_min(ch.p2, ch.q2);
        cp.eta1 = lo1 + u(rng) * (1.0 - lo1);
        cp.eta2 = lo2 + u(rng) * (1.0 - lo2);
        cp.a1 = u(rng);
        cp.a2 = u(rng);
        cp.a13 = u(rng);
        cp.a23 = u(rng);
        const Prop2Terms t = prop2_terms(ch, cp);
        const Bits closed = gaussian_entropy(t.p1e_dprime + t.q1e_hat + t.q2e_dhat + ch.n3);
        const Bits mc = mc_entropy_oracle(ch, cp, CondU | CondV1 | CondV2 | CondV23, 1000000,
                                          0x5EED0000ULL + std::uint64_t(i));
        worst = std::max(worst, std::abs(mc - closed));
    }
    if (worst > 0.02) return "FAIL max |MC - closed form| " + fmt(worst) + " > 0.02";
    return "20 draws at 1e6 samples, max gap " + fmt(worst) + " bits";
}

std::string closed_form_maxima() {
    SweepSpec spec;
    spec.rho_points = 9;
    spec.split_points = 5;
    spec.alpha_points = 9;
    spec.refine_depth = 4;
    spec.refine_points = 5;
    spec.weights = 9;
    double worst_sum = 0.0, worst_r2 = 0.0;
    for (double p1_db : {10.0, 15.0}) {
        GaussianChannel ch;
        ch.p1 = db_to_linear(p1_db);
        ch.p2 = 10.0;
        ch.n1 = ch.n2 = 1.0;
        ch.n3 = 10.0;
        ch.q1 = kInf;
        const Bits sum = max_sum_rate(make_family(ch, SweepModel::Prop3, spec), spec).value;
        worst_sum = std::max(worst_sum, std::abs(sum - prop3_max_sum_rate(ch)));
        // N1 <= N3 branch at the stated parameters
        const TraceResult a = trace_boundary(ch, spec, SweepModel::Prop3);
        worst_r2 = std::max(worst_r2, std::abs(a.region.r2_max() - prop3_max_r2(ch)));
        // N1 >= N3 branches at the same powers with the noises swapped:
        // P1 = 15 dB hits P1 >= P2 + N3, P1 = 10 dB hits the interior
        // alpha13* = 2 P1 / (P1 + P2 + N3) case
        GaussianChannel sw = ch;
        sw.n1 = 10.0;
        sw.n3 = 1.0;
        const TraceResult b = trace_boundary(sw, spec, SweepModel::Prop3);
        worst_r2 = std::max(worst_r2, std::abs(b.region.r2_max() - prop3_max_r2(sw)));
    }
    if (worst_sum > 1e-3) return "FAIL max sum-rate gap " + fmt(worst_sum) + " > 1e-3";
    if (worst_r2 > 1e-3) return "FAIL max R2 gap " + fmt(worst_r2) + " > 1e-3";
    return "sum gap " + fmt(worst_sum) + ", R2 gap " + fmt(worst_r2) + " across both branches";
}

std::string degeneration_chain() {
    std::mt19937_64 rng(0xACCE5503);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // doubly dirty at Q1 = Q2 = 0 must equal the full-CSIT region
    GaussianChannel clean;
    clean.p1 = clean.p2 = 10.0;
    clean.n1 = clean.n2 = 1.0;
    clean.n3 = db_to_linear(7.0);
    double worst12 = 0.0;
    for (int i = 0; i < 200; ++i) {
        CodingParams cp;
        cp.rho1 = u(rng);
        cp.rho2 = u(rng);
        const double s1 = u(rng), s2 = u(rng);
        cp.pp1 = s1 * clean.p1;
        cp.ppp1 = (1.0 - s1) * clean.p1;
        cp.pp2 = s2 * clean.p2;
        cp.ppp2 = (1.0 - s2) * clean.p2;
        const RateRegion2D r1 = project_to_r1_r2(prop1_region(clean, cp));
        const RateRegion2D r2 = project_to_r1_r2(prop2_region(clean, cp));
        worst12 = std::max(worst12, hausdorff(r1, r2));
    }
    // one-informed-encoder region as the Q1 -> infinity limit
    GaussianChannel inf_ch;
    inf_ch.p1 = inf_ch.p2 = 10.0;
    inf_ch.n1 = inf_ch.n2 = 1.0;
    inf_ch.n3 = 10.0;
    inf_ch.q1 = kInf;
    GaussianChannel fin = inf_ch;
    fin.q1 = 1e6 * inf_ch.p1;
    double worst23 = 0.0;
    for (int i = 0; i < 100; ++i) {
        CodingParams cp;
        cp.rho1 = 0.8 * u(rng);
        cp.rho2 = 0.8 * u(rng);
        cp.a13 = 0.2 + 0.7 * u(rng);
        const double s = u(rng);
        cp.pp2 = s * inf_ch.p2;
        cp.ppp2 = (1.0 - s) * inf_ch.p2;
        const RateRegion2D r3 = project_to_r1_r2(prop3_region(inf_ch, cp));
        CodingParams sub = cp;
        sub.pp1 = 0.0;
        sub.ppp1 = inf_ch.p1;
        sub.a1 = sub.a2 = sub.a23 = 0.0;
        sub.eta1 = sub.eta2 = 1.0;
        const RateRegion2D r2 = project_to_r1_r2(prop2_region(fin, sub));
        worst23 = std::max(worst23, hausdorff(r2, r3));
    }
    if (worst12 > 1e-9) return "FAIL prop2 vs prop1 gap " + fmt(worst12) + " > 1e-9";
    if (worst23 > 1e-3) return "FAIL prop3 vs prop2 gap " + fmt(worst23) + " > 1e-3";
    return "prop2->prop1 gap " + fmt(worst12) + ", prop3->prop2 gap " + fmt(worst23);
}

// brute-force oracle: grid the splits at `step` and hull the achievable pairs
RateRegion2D brute_force_projection(const SplitRatePolytope& p, double step) {
    std::array<double, 4> cap{};
    for (int v = 0; v < 4; ++v) {
        cap[v] = kInf;
        for (const SplitConstraint& c : p.constraints)
            if (c.coeff[v] > 0.0) cap[v] = std::min(cap[v], c.bound / c.coeff[v]);
        cap[v] = std::max(cap[v], 0.0);
    }
    std::vector<Point> pts;
    for (int i12 = 0; i12 <= int(cap[0] / step); ++i12)
        for (int i13 = 0; i13 <= int(cap[1] / step); ++i13)
            for (int i21 = 0; i21 <= int(cap[2] / step); ++i21) {
                const double r12 = i12 * step, r13 = i13 * step, r21 = i21 * step;
                double r23max = cap[3];
                bool ok = true;
                for (const SplitConstraint& c : p.constraints) {
                    const double partial = c.coeff[0] * r12 + c.coeff[1] * r13 + c.coeff[2] * r21;
                    if (c.coeff[3] > 0.0)
                        r23max = std::min(r23max, (c.bound - partial) / c.coeff[3]);
                    else if (partial > c.bound + 1e-12) {
                        ok = false;
                        break;
                    }
                }
                if (!ok || r23max < -1e-12) continue;
                pts.push_back({r12 + r13, r21 + std::floor(std::max(r23max, 0.0) / step) * step});
            }
    return region_from_points(std::move(pts));
}

std::string fourier_motzkin_oracle() {
    std::mt19937_64 rng(0xACCE5504);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const SplitRatePolytope p = SplitRatePolytope::theorem1_shape(u(rng), u(rng), u(rng),
                                                                     u(rng), u(rng), u(rng));
        const double gap = hausdorff(project_to_r1_r2(p), brute_force_projection(p, 0.01));
        worst = std::max(worst, gap);
    }
    if (worst > 0.02) return "FAIL max Hausdorff " + fmt(worst) + " > 0.02";
    return "50 systems, max Hausdorff to grid oracle " + fmt(worst);
}

std::string discrete_engine() {
    using namespace fixtures;
    // (a) GMAC fixture: all state penalties vanish and the six bounds take
    // the feedback-MAC shape
    const JointPmf g = table1_fixture(Table1Case::Gmac).pmf;
    if (mutual_information(g, vars(V1), vars(S1), vars(S0, U)) != 0.0 ||
        mutual_information(g, vars(U, V1, V2, V13, V23), vars(S0, S1, S2)) != 0.0)
        return "FAIL state penalties nonzero on the no-state fixture";
    const Theorem1Bounds gb = theorem1_bounds(g);
    if (gb.delta1_minus != 0.0 || gb.delta2_minus != 0.0 || gb.cap_delta_minus != 0.0)
        return "FAIL binning corrections nonzero on the no-state fixture";
    // with every penalty at zero, all six bounds must collapse to the
    // feedback-only forms (state variables dropped from the conditioning)
    const Bits direct[6] = {
        mutual_information(g, vars(V1), vars(Y2), vars(U, X2)),
        mutual_information(g, vars(V2), vars(Y1), vars(U, X1)),
        mutual_information(g, vars(V13), vars(Y3), vars(U, V1, V2, V23)),
        mutual_information(g, vars(V23), vars(Y3), vars(U, V1, V2, V13)),
        mutual_information(g, vars(V13, V23), vars(Y3), vars(U, V1, V2)),
        mutual_information(g, vars(U, V1, V2, V13, V23), vars(Y3)),
    };
    const Bits got[6] = {gb.b12, gb.b21, gb.b13, gb.b23, gb.b13_23, gb.b_sum};
    for (int i = 0; i < 6; ++i)
        if (std::abs(got[i] - direct[i]) > 1e-12)
            return "FAIL bound " + std::to_string(i) + " off the feedback-only shape by " +
                   fmt(std::abs(got[i] - direct[i]));

    // (b) XOR cribbing at the full-cooperation distribution
    const JointPmf x = cribbing_pmf({1.0}, bernoulli(0.5), bernoulli(0.5), 2, xor_channel());
    const Bits best = theorem1_max_sum_rate(theorem1_bounds(x));
    if (std::abs(best - 1.0) > 1e-9)
        return "FAIL XOR cribbing sum rate " + fmt(best) + " != 1.0";

    // (c) ceiling: brute-forced max over inputs of I(X1 X2; Y3) for XOR
    double ceiling = 0.0;
    const int steps = 40;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; i + j <= steps; ++j)
            for (int k = 0; i + j + k <= steps; ++k) {
                const double p00 = double(i) / steps, p01 = double(j) / steps,
                             p10 = double(k) / steps;
                const double p11 = 1.0 - p00 - p01 - p10;
                const double py0 = p00 + p11;
                double h = 0.0;
                if (py0 > 1e-12) h -= py0 * std::log2(py0);
                if (1.0 - py0 > 1e-12) h -= (1.0 - py0) * std::log2(1.0 - py0);
                ceiling = std::max(ceiling, h);
                (void)p11;
            }
    std::mt19937_64 rng(0xACCE5505);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    double worst_excess = -kInf;
    for (int t = 0; t < 100; ++t) {
        const double e = u(rng), a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const JointPmf p = cribbing_pmf({e, 1 - e}, {a, 1 - a, b, 1 - b}, {c, 1 - c, d, 1 - d}, 2,
                                        xor_channel());
        worst_excess =
            std::max(worst_excess, theorem1_max_sum_rate(theorem1_bounds(p)) - ceiling);
    }
    if (worst_excess > 1e-12)
        return "FAIL cut-set ceiling exceeded by " + fmt(worst_excess);
    return "shape ok, XOR sum rate 1.0, 100 random pmfs below the cut-set ceiling";
}

std::string scenario_ordering() {
    for (double q0 : {2.0, 5.0, 8.0}) {
        const GaussianChannel ch = fig5_channel(q0);
        const RateRegion2D gmac_csit = baseline_regions(ch, Scenario::GmacCsit, 7, 4);
        const RateRegion2D mac_csit = baseline_regions(ch, Scenario::MacCsit, 7, 4);
        const RateRegion2D gmac_no = baseline_regions(ch, Scenario::GmacNoCsit, 7, 4);
        const RateRegion2D mac_no = baseline_regions(ch, Scenario::MacNoCsit, 7, 4);
        if (!region_contains(gmac_no, mac_no, 1e-9)) return "FAIL mac-no-csit not in gmac-no-csit";
        if (!region_contains(gmac_csit, gmac_no, 1e-9))
            return "FAIL gmac-no-csit not in gmac-csit";
        if (!region_contains(mac_csit, mac_no, 1e-9)) return "FAIL mac-no-csit not in mac-csit";
        if (!region_contains(gmac_csit, mac_csit, 1e-9)) return "FAIL mac-csit not in gmac-csit";
    }
    return "both containment chains hold at Q0 in {2,5,8} dB, tol 1e-9";
}

std::string read_tree(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream f(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        files[fs::relative(entry.path(), dir).string()] = ss.str();
    }
    std::string digest;
    for (const auto& [name, content] : files)
        digest += name + "\x01" + content + "\x02";
    return digest;
}

std::string determinism() {
    const std::string cli = GMAC_CLI_PATH;
    const std::string configs = GMAC_CONFIG_DIR;
    const fs::path scratch = fs::temp_directory_path() / "gmac-acceptance-determinism";
    fs::remove_all(scratch);
    fs::create_directories(scratch);

    struct Cmd {
        std::string name;
        std::string args;
    };
    const std::vector<Cmd> cmds = {
        {"verify", "verify"},
        {"fig5", "region --config " + configs + "/fig5.json"},
        {"fig6", "sumrate-sir --config " + configs + "/fig6.json"},
    };
    for (const Cmd& cmd : cmds) {
        std::vector<std::string> digests;
        for (const char* tag : {"r1-w1", "r2-w1", "r1-w8", "r2-w8"}) {
            const std::string tag_s(tag);
            const int workers = tag_s.back() == '8' ? 8 : 1;
            const fs::path out = scratch / (cmd.name + "-" + tag_s);
            const std::string full = cli + " " + cmd.args + " --out " + out.string() +
                                     " --workers " + std::to_string(workers) + " > " +
                                     (out.string() + ".log") + " 2>&1";
            const int status = std::system(full.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
                return "FAIL command " + cmd.name + " exited nonzero";
            digests.push_back(read_tree(out));
        }
        for (size_t i = 1; i < digests.size(); ++i)
            if (digests[i] != digests[0])
                return "FAIL " + cmd.name + " outputs differ across runs/worker counts";
    }
    return "verify + fig5 region + fig6 sumrate-sir byte-identical across 2 runs x workers {1,8}";
}

} // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");
    criterion("interference-independence", interference_independence);
    criterion("full-cooperation-anchor", full_cooperation_anchor);
    criterion("orthogonality", orthogonality);
    criterion("mmse-entropy-oracle", mmse_entropy_oracle);
    criterion("closed-form-maxima", closed_form_maxima);
    criterion("degeneration-chain", degeneration_chain);
    criterion("fourier-motzkin-oracle", fourier_motzkin_oracle);
    criterion("discrete-engine", discrete_engine);
    criterion("scenario-ordering", scenario_ordering);
    criterion("determinism", determinism);
    if (g_failures > 0) {
        std::printf("----------------\n%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("----------------\nall criteria passed\n");
    return 0;
}
