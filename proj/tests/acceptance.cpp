// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned in code next to each criterion.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lc/clusters.hpp"
#include "lc/landau.hpp"
#include "lc/potential.hpp"
#include "lc/radon.hpp"
#include "lc/specfun.hpp"
#include "lc/symbols.hpp"

using namespace lc;
namespace ld = lc::landau;
namespace rd = lc::radon;
namespace cl = lc::clusters;
namespace sy = lc::symbols;

namespace {

int g_failures = 0;

void verdict(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

const Potential kGauss = Potential::gaussian(1.0, 1.0);
const double kGamma2 = 0.099735570100358169485; // 1/(4 sqrt(2 pi))
const double kGaussPeak = 1.0 / (2.0 * std::sqrt(M_PI));

double gauss_mass(double a, double b) {
    auto invert = [](double v) { return std::sqrt(std::log(kGaussPeak / v)); };
    return 2.0 * (invert(a) - invert(b));
}

double max_over_min(const std::vector<double>& v) {
    double lo = v[0], hi = v[0];
    for (double x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

void criterion1() {
    auto c = ld::assemble_converged(ld::LandauSpec{1.0, 0}, kGauss);
    double worst = 0.0;
    for (int m = 0; m < 12; ++m)
        worst = std::max(worst, std::abs(c.eigs[m] - std::pow(3.0, -(m + 1.0))));
    char d[96];
    std::snprintf(d, sizeof(d), "max |eig - 3^-(m+1)| = %.3g, converged=%d", worst,
                  c.cutoffConverged ? 1 : 0);
    verdict(1, worst < 1e-8 && c.cutoffConverged, "lowest-level gaussian spectrum is geometric",
            d);
}

void criterion2() {
    double worst = 0.0;
    for (const Potential& V : {kGauss, Potential::power_decay(3.0)}) {
        for (double B : {1.0, 2.0}) {
            for (int q : {0, 5, 20}) {
                auto c = ld::assemble_converged(ld::LandauSpec{B, q}, V);
                worst = std::max(worst, ld::trace_identity_residual(c.matrix, V, 1e-7));
            }
        }
    }
    char d[64];
    std::snprintf(d, sizeof(d), "max residual = %.3g", worst);
    verdict(2, worst < 1e-6, "trace identity over q and B for gaussian and <x>^-3", d);
}

void criterion3() {
    const std::vector<int> qList{5, 10, 20, 40, 80, 160};
    bool pass = true;
    std::string detail;
    for (const Potential& V : {Potential::power_decay(2.0), kGauss}) {
        std::vector<double> normCol, hsCol;
        bool allConv = true;
        for (const auto& row : ld::norm_scaling_table(V, 1.0, qList)) {
            normCol.push_back(row.value);
            allConv = allConv && row.converged;
        }
        for (const auto& row : ld::schatten_scaling_table(V, 1.0, 2.0, qList)) {
            hsCol.push_back(row.value);
            allConv = allConv && row.converged;
        }
        const double rNorm = max_over_min(normCol), rHS = max_over_min(hsCol);
        char d[96];
        std::snprintf(d, sizeof(d), "%s: norm %.3f, hs %.3f; ", V.describe().c_str(), rNorm, rHS);
        detail += d;
        pass = pass && rNorm < 3.0 && rHS < 3.0 && allConv;
    }
    verdict(3, pass, "operator and hilbert-schmidt scaling columns stay within x3", detail);
}

void criterion4() {
    const std::vector<int> qList{16, 32, 64, 128, 256};
    auto report = cl::moment_convergence(kGauss, 1.0, qList, {2, 3});
    const double slope2 = report.slope("ell=2");
    const double slope3 = report.slope("ell=3");
    double relAt256 = 0.0;
    for (const auto& row : report.rows)
        if (row.q == 256 && row.label == "ell=2") relAt256 = row.residual / std::abs(row.rhs);
    char d[128];
    std::snprintf(d, sizeof(d), "slope2 = %.3f, slope3 = %.3f, rel err at q=256 = %.3f%%", slope2,
                  slope3, 100.0 * relAt256);
    verdict(4, slope2 < 0.0 && slope3 < 0.0 && relAt256 < 0.10,
            "second and third scaled moments trend to the radon functionals", d);
}

void criterion5and7() {
    // shared measure cloud for the gaussian
    rd::LimitMeasure mu = rd::limit_measure(kGauss, 1.0, 8, 20000, 7.0);
    rd::LimitMeasure fine = rd::limit_measure(kGauss, 1.0, 8, 40000, 7.0);

    // criterion 7a: interval masses against the closed-form inversion, at
    // two refinements
    double worstMass = 0.0;
    for (auto [a, b] : {std::pair{0.10, 0.20}, std::pair{0.21, 0.27}}) {
        worstMass = std::max(worstMass, std::abs(mu.mass(a, b) - gauss_mass(a, b)));
        worstMass = std::max(worstMass, std::abs(fine.mass(a, b) - gauss_mass(a, b)));
    }

    // criterion 7b: moments of the inverse-square cloud across the
    // integrability threshold (rho = 2 -> threshold ell = 1)
    const Potential p2 = Potential::power_decay(2.0);
    rd::LimitMeasure muP = rd::limit_measure(p2, 1.0, 2, 20000, 2000.0, 1e-3);
    rd::LimitMeasure muPFine = rd::limit_measure(p2, 1.0, 2, 40000, 4000.0, 1e-3);
    const double m2 = rd::measure_moment(muP, 2.0);
    const double m2f = rd::measure_moment(muPFine, 2.0);
    const double m05 = rd::measure_moment(muP, 0.5, false, false);
    const double m05f = rd::measure_moment(muPFine, 0.5, false, false);
    const bool aboveStable = std::abs(m2f - m2) / m2 < 1e-2;
    const bool belowDiverges = m05f > 1.25 * m05;
    {
        char d[128];
        std::snprintf(d, sizeof(d), "mass err %.2g; m2 drift %.2g; m0.5 growth x%.2f", worstMass,
                      std::abs(m2f - m2) / m2, m05f / m05);
        verdict(7, worstMass < 1e-3 && aboveStable && belowDiverges,
                "limit measure anchors and the moment threshold", d);
    }

    // criterion 5: distribution convergence for two disjoint bumps,
    // cross-checked against the closed-form inversion
    std::vector<rd::TestFunction> bumps{{0.15, 0.05}, {0.24, 0.03}};
    auto report = cl::distribution_convergence(kGauss, 1.0, {16, 32, 64, 128, 256}, bumps, fine);
    bool slopes = true;
    std::string d;
    for (const auto& lbl : report.labels()) {
        const double s = report.slope(lbl);
        slopes = slopes && s < 0.0;
        d += lbl + " slope " + std::to_string(s) + "; ";
    }
    // cross-check: cloud mass of each bump support against the closed form
    double worstX = 0.0;
    for (const auto& b : bumps)
        worstX = std::max(worstX,
                          std::abs(fine.mass(b.suppMin(), b.suppMax()) -
                                   gauss_mass(b.suppMin(), b.suppMax())));
    d += "support-mass err " + std::to_string(worstX);
    verdict(5, slopes && worstX < 1e-3,
            "cluster distribution functionals trend to the measure functionals", d);
}

void criterion6() {
    std::vector<double> opCol, hsCol;
    for (int q : {4, 16, 64, 256}) {
        auto g = sy::symbol_gap_norms(kGauss, 1.0, q);
        opCol.push_back(g.scaledOp);
        hsCol.push_back(g.scaledHS);
    }
    const double rOp = max_over_min(opCol), rHS = max_over_min(hsCol);
    std::vector<double> supCol;
    for (const auto& row : sy::delta_conv_sup(2.0, 1.0, {1.0, 4.0, 16.0, 64.0}))
        supCol.push_back(row.scaledSup);
    const double rSup = max_over_min(supCol);
    char d[96];
    std::snprintf(d, sizeof(d), "scaledOp x%.2f, scaledHS x%.2f, ring sup x%.2f", rOp, rHS, rSup);
    verdict(6, rOp < 4.0 && rHS < 4.0 && rSup < 3.0,
            "symbol gap norms and ring-average sups stay bounded", d);
}

void criterion8() {
    double worstW = 0.0;
    for (int q = 0; q <= 8; ++q)
        worstW = std::max(worstW, specfun::wigner_fourier_residual(q, 11.0, 512));
    double worstRatio = 0.0;
    for (int q : {4, 16, 64, 256})
        for (int i = 1; i <= 400; ++i) {
            const double x = 40.0 * i / 400.0;
            auto g = specfun::laguerre_bessel_gap(q, x);
            worstRatio = std::max(worstRatio, g.gap / g.bound);
        }
    char d[96];
    std::snprintf(d, sizeof(d), "fourier residual %.3g, sup gap/bound %.3f", worstW, worstRatio);
    verdict(8, worstW < 1e-6 && std::isfinite(worstRatio) && worstRatio < 2.0,
            "wigner fourier identity and the laguerre-bessel envelope", d);
}

void criterion9() {
    rd::TestFunction bump(0.15, 0.05);
    auto rows = rd::semiclassical_residuals(kGauss, bump, 1.0, {100.0, 1000.0, 10000.0});
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        decreasing = decreasing && rows[i].residual < rows[i - 1].residual;

    auto sf2 = ld::strong_field_check(kGauss, 0, 2, {2.0, 8.0, 32.0, 128.0});
    bool sfDecreasing = true;
    for (std::size_t i = 1; i < sf2.size(); ++i)
        sfDecreasing = sfDecreasing && std::abs(sf2[i].scaledTracePow - sf2[i].integral) <
                                           std::abs(sf2[i - 1].scaledTracePow - sf2[i - 1].integral);
    auto sf1 = ld::strong_field_check(kGauss, 0, 1, {2.0, 8.0, 32.0, 128.0});
    double worst1 = 0.0;
    for (const auto& r : sf1)
        worst1 = std::max({worst1, std::abs(r.scaledTracePow - r.integral),
                           std::abs(r.scaledPowTrace - r.integral)});
    char d[128];
    std::snprintf(d, sizeof(d),
                  "semiclassical %s, strong-field %s, ell=1 identity err %.2g",
                  decreasing ? "decreasing" : "NOT decreasing",
                  sfDecreasing ? "decreasing" : "NOT decreasing", worst1);
    verdict(9, decreasing && sfDecreasing && worst1 < 1e-6,
            "high-energy and strong-field sweeps converge", d);
}

void criterion10() {
    std::vector<double> diffs;
    for (int q : {16, 64, 256}) {
        auto c = ld::assemble_converged(ld::LandauSpec{1.0, q}, kGauss);
        double frob = 0.0;
        for (double e : c.eigs) frob += e * e;
        const double oracle = sy::hs_trace_oracle(kGauss, 1.0, std::sqrt(2.0 * q + 1.0));
        const double lambda = 2.0 * q + 1.0;
        diffs.push_back(std::sqrt(lambda) * std::abs(oracle - frob));
    }
    const bool decreasing = diffs[1] < diffs[0] && diffs[2] < diffs[1];
    char d[96];
    std::snprintf(d, sizeof(d), "scaled gaps %.3g -> %.3g -> %.3g", diffs[0], diffs[1], diffs[2]);
    verdict(10, decreasing, "matrix and symbol second moments bind to each other", d);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5and7();
    criterion6();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
