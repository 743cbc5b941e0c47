#include "lc/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace lc::clusters {

ClusterMeasure cluster_measure(const Potential& V, double B, int q,
                               landau::ConvergeOptions opts) {
    landau::LandauSpec spec{B, q};
    landau::Converged c = landau::assemble_converged(spec, V, opts);
    ClusterMeasure m;
    m.spec = spec;
    m.cutoffConverged = c.cutoffConverged;
    const double scale = std::sqrt(spec.lambda());
    m.scaledShifts.reserve(c.eigs.size());
    for (double e : c.eigs) m.scaledShifts.push_back(scale * e);
    return m;
}

double test_functional(const ClusterMeasure& m, const radon::TestFunction& rho) {
    double sum = 0.0;
    for (double s : m.scaledShifts) sum += rho(s);
    return sum / std::sqrt(m.spec.lambda());
}

double ConvergenceReport::slope(const std::string& label) const {
    // least squares of log(residual) on log(lambda)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (const auto& r : rows) {
        if (r.label != label) continue;
        if (r.residual <= 0.0) continue; // exact rows carry no trend information
        const double x = std::log(r.lambda), y = std::log(r.residual);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

std::vector<std::string> ConvergenceReport::labels() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& r : rows)
        if (seen.insert(r.label).second) out.push_back(r.label);
    return out;
}

bool ConvergenceReport::all_trends_negative() const {
    for (const auto& lbl : labels())
        if (slope(lbl) >= 0.0) return false;
    return true;
}

ConvergenceReport distribution_convergence(const Potential& V, double B,
                                           const std::vector<int>& qList,
                                           const std::vector<radon::TestFunction>& bumps,
                                           const radon::LimitMeasure& mu,
                                           landau::ConvergeOptions opts) {
    ConvergenceReport report;
    report.meta["potential"] = V.describe();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", B);
    report.meta["B"] = buf;
    report.meta["functional"] = "smooth bump";

    // rhs per bump from the measure cloud, plus an atom flag on the support
    // edges: collar mass around a smooth point shrinks with the collar,
    // mass sitting on an atom does not
    std::vector<double> rhs(bumps.size());
    std::vector<bool> flagged(bumps.size());
    for (std::size_t bi = 0; bi < bumps.size(); ++bi) {
        const auto& rho = bumps[bi];
        double sum = 0.0;
        for (std::size_t i = 0; i < mu.value.size(); ++i) sum += mu.weight[i] * rho(mu.value[i]);
        rhs[bi] = sum;
        const double delta = 0.04 * rho.halfWidth();
        const double wide = mu.boundary_sensitivity(rho.suppMin(), rho.suppMax(), delta);
        const double tight = mu.boundary_sensitivity(rho.suppMin(), rho.suppMax(), delta / 4.0);
        flagged[bi] = wide > 1e-6 && tight > 0.5 * wide;
    }

    for (int q : qList) {
        ClusterMeasure m = cluster_measure(V, B, q, opts);
        for (std::size_t bi = 0; bi < bumps.size(); ++bi) {
            ReportRow row;
            row.q = q;
            row.lambda = m.spec.lambda();
            row.lhs = test_functional(m, bumps[bi]);
            row.rhs = rhs[bi];
            row.residual = std::abs(row.lhs - row.rhs);
            std::snprintf(buf, sizeof(buf), "bump(%.6g,%.6g)", bumps[bi].center(),
                          bumps[bi].halfWidth());
            row.label = buf;
            row.flagged = flagged[bi] || !m.cutoffConverged;
            report.rows.push_back(row);
        }
    }
    return report;
}

ConvergenceReport moment_convergence(const Potential& V, double B,
                                     const std::vector<int>& qList,
                                     const std::vector<int>& ellList,
                                     landau::ConvergeOptions opts) {
    ConvergenceReport report;
    report.meta["potential"] = V.describe();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", B);
    report.meta["B"] = buf;
    report.meta["functional"] = "power moments";

    std::map<int, double> gamma;
    for (int ell : ellList) {
        if (!V.is_zero() && ell <= 1.0 / (V.rho() - 1.0))
            throw std::domain_error("moment_convergence: ell <= 1/(rho-1)");
        gamma[ell] = V.is_zero() ? 0.0 : radon::gamma_moment(V, B, ell);
    }
    // the ell = 1 rows are trace identities; hold the cutoff to the trace
    if (V.is_integrable()) opts.requireTraceConverged = true;
    for (int q : qList) {
        landau::LandauSpec spec{B, q};
        landau::Converged c = landau::assemble_converged(spec, V, opts);
        for (int ell : ellList) {
            double tracePow = 0.0;
            for (double e : c.eigs) tracePow += std::pow(e, ell);
            ReportRow row;
            row.q = q;
            row.lambda = spec.lambda();
            row.lhs = std::pow(spec.lambda(), (ell - 1.0) / 2.0) * tracePow;
            row.rhs = gamma[ell];
            row.residual = std::abs(row.lhs - row.rhs);
            std::snprintf(buf, sizeof(buf), "ell=%d", ell);
            row.label = buf;
            row.flagged = !c.cutoffConverged;
            report.rows.push_back(row);
        }
    }
    return report;
}

IntervalCount interval_count(const ClusterMeasure& m, double alpha, double beta,
                             const radon::LimitMeasure& mu, double delta) {
    if (alpha > beta) throw std::invalid_argument("interval_count: alpha > beta");
    if (alpha <= 0.0 && beta >= 0.0)
        throw std::invalid_argument("interval_count: interval must exclude 0");
    IntervalCount out;
    int count = 0;
    for (double s : m.scaledShifts)
        if (s >= alpha && s <= beta) ++count;
    out.scaledCount = count / std::sqrt(m.spec.lambda());
    out.muMass = mu.mass(alpha, beta);
    out.boundarySensitivity = mu.boundary_sensitivity(alpha, beta, delta);
    return out;
}

IntervalCount interval_count(const Potential& V, double B, int q, double alpha, double beta,
                             const radon::LimitMeasure& mu, double delta,
                             landau::ConvergeOptions opts) {
    return interval_count(cluster_measure(V, B, q, opts), alpha, beta, mu, delta);
}

} // namespace lc::clusters
