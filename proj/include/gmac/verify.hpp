#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmac/config.hpp"
#include "gmac/gaussian.hpp"
#include "gmac/io.hpp"
#include "gmac/sweep.hpp"
#include "gmac/theorem1.hpp"

namespace gmac {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const {
        for (const VerifyCheck& c : checks)
            if (!c.passed) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["passed"] = all_passed();
        j["checks"] = nlohmann::json::array();
        for (const VerifyCheck& c : checks)
            j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return j;
    }

    std::string to_text() const {
        std::string out;
        for (const VerifyCheck& c : checks)
            out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + ": " + c.detail + "\n";
        out += all_passed() ? "all checks passed\n" : "verification FAILED\n";
        return out;
    }
};

/// The cross-module invariant suites: precoding orthogonality, MMSE
/// residual ordering, interference independence, the one-informed-encoder
/// limit, and the discrete factorization checks.
inline VerifyReport run_verify(const RunConfig& cfg) {
    VerifyReport report;
    std::mt19937_64 rng(cfg.sweep.seed != 0 ? cfg.sweep.seed : 0x5eed5eedULL);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    { // orthogonality of the optimal precoding coefficients
        VerifyCheck c;
        c.name = "dpc-orthogonality";
        double worst = 0.0, weakest_detect = kInf;
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
            if (cfg.perturb_a0 != 0.0) cp.a0 += cfg.perturb_a0;
            for (double r : dpc_orthogonality_residuals(ch, cp)) worst = std::max(worst, std::abs(r));
            if (i % 50 == 0) {
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
                        weakest_detect = std::min(weakest_detect, peak);
                    }
            }
        }
        c.passed = worst < 1e-12 && weakest_detect > 1e-4;
        c.detail = "max residual " + fmt_double(worst) + ", weakest perturbation response " +
                   fmt_double(weakest_detect);
        report.checks.push_back(c);
    }

    { // MMSE residual ordering
        VerifyCheck c;
        c.name = "mmse-ordering";
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            GaussianChannel ch;
            ch.p1 = ch.p2 = 10.0;
            ch.n1 = ch.n2 = 1.0;
            ch.n3 = 10.0;
            ch.q1 = db_to_linear(-10.0 + 25.0 * u(rng));
            ch.q2 = db_to_linear(-10.0 + 25.0 * u(rng));
            CodingParams cp;
            cp.rho1 = u(rng);
            cp.rho2 = u(rng);
            const double s1 = u(rng), s2 = u(rng);
            cp.pp1 = s1 * ch.p1;
            cp.ppp1 = (1.0 - s1) * ch.p1;
            cp.pp2 = s2 * ch.p2;
            cp.ppp2 = (1.0 - s2) * ch.p2;
            const double lo1 = CodingParams::eta_min(ch.p1, ch.q1);
            const double lo2 = CodingParams::eta_min(ch.p2, ch.q2);
            cp.eta1 = lo1 + u(rng) * (1.0 - lo1);
            cp.eta2 = lo2 + u(rng) * (1.0 - lo2);
            cp.a1 = u(rng);
            cp.a13 = (1.0 - cp.a1) * u(rng);
            cp.a2 = u(rng);
            cp.a23 = (1.0 - cp.a2) * u(rng);
            const Prop2Terms t = prop2_terms(ch, cp);
            worst = std::max({worst, t.q1e_dhat - t.q1e_hat, t.q1e_hat - t.q1e, t.q1e - ch.q1,
                              t.q2e_dhat - t.q2e_hat, t.q2e_hat - t.q2e, t.q2e - ch.q2});
        }
        c.passed = worst <= 1e-12;
        c.detail = "max ordering violation " + fmt_double(worst);
        report.checks.push_back(c);
    }

    { // interference independence of the full-CSIT region
        VerifyCheck c;
        c.name = "interference-independence";
        SweepSpec spec = cfg.sweep;
        spec.rho_points = 7;
        spec.split_points = 4;
        spec.weights = 17;
        spec.refine_depth = 1;
        spec.workers = cfg.sweep.workers;
        GaussianChannel ch;
        ch.p1 = ch.p2 = 10.0;
        ch.n1 = ch.n2 = 1.0;
        ch.n3 = db_to_linear(7.0);
        double worst = 0.0;
        RateRegion2D first;
        for (double q0_db : {2.0, 5.0, 8.0}) {
            ch.q0 = db_to_linear(q0_db);
            const RateRegion2D r = trace_boundary(ch, spec, SweepModel::Prop1).region;
            if (first.vertices.empty()) first = r;
            else worst = std::max(worst, hausdorff(first, r));
        }
        c.passed = worst <= 1e-9;
        c.detail = "max Hausdorff gap across q0 in {2,5,8} dB: " + fmt_double(worst);
        report.checks.push_back(c);
    }

    { // one-informed-encoder region as the limit of the doubly-dirty one
        VerifyCheck c;
        c.name = "prop3-limit";
        GaussianChannel ch;
        ch.p1 = ch.p2 = 10.0;
        ch.n1 = ch.n2 = 1.0;
        ch.n3 = 10.0;
        ch.q1 = kInf;
        GaussianChannel fin = ch;
        fin.q1 = 1e6 * ch.p1;
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            CodingParams cp;
            cp.rho1 = 0.7 * u(rng);
            cp.rho2 = 0.7 * u(rng);
            cp.a13 = 0.2 + 0.7 * u(rng);
            const double s = u(rng);
            cp.pp2 = s * ch.p2;
            cp.ppp2 = (1.0 - s) * ch.p2;
            const RateRegion2D r3 = project_to_r1_r2(prop3_region(ch, cp));
            CodingParams cp2 = cp;
            cp2.pp1 = 0.0;
            cp2.ppp1 = ch.p1;
            cp2.a1 = cp2.a2 = cp2.a23 = 0.0;
            cp2.eta1 = cp2.eta2 = 1.0;
            const RateRegion2D r2 = project_to_r1_r2(prop2_region(fin, cp2));
            worst = std::max(worst, hausdorff(r2, r3));
        }
        c.passed = worst <= 1e-3;
        c.detail = "max Hausdorff gap at Q1 = 1e6 P1: " + fmt_double(worst);
        report.checks.push_back(c);
    }

    { // discrete factorization and Markov-chain validation
        VerifyCheck c;
        c.name = "factorization";
        std::string detail;
        bool ok = true;
        for (Table1Case tc : all_table1_cases()) {
            const auto violations = validate_factorization(table1_fixture(tc).pmf);
            if (!violations.empty()) {
                ok = false;
                detail += " fixture violation: " + violations[0].name + ";";
            }
        }
        if (cfg.break_markov) {
            // deliberately broken chain: U copies S1 directly
            JointPmf p;
            p.sizes.fill(1);
            p.sizes[S0] = 2;
            p.sizes[S1] = 2;
            p.sizes[U] = 2;
            p.prob.assign(8, 0.0);
            for (int s0 = 0; s0 < 2; ++s0)
                for (int s1 = 0; s1 < 2; ++s1)
                    p.prob[std::size_t((s0 * 2 + s1) * 2 + s1)] = 0.5 * ((s1 == s0) ? 0.8 : 0.2);
            const auto violations = validate_factorization(p);
            ok = false;
            detail += " injected fixture:";
            for (const PmfViolation& v : violations)
                detail += " [" + v.name + " = " + fmt_double(v.magnitude) + "]";
        }
        c.passed = ok;
        c.detail = ok ? "all special-case fixtures factor per the theorem" : detail;
        report.checks.push_back(c);
    }

    return report;
}

} // namespace gmac
