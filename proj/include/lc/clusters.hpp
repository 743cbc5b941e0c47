#pragma once

#include <map>
#include <string>
#include <vector>

#include "lc/landau.hpp"
#include "lc/radon.hpp"

namespace lc::clusters {

/// Scaled model spectrum of the q-th cluster: lambda_q^{1/2} times the
/// eigenvalues of the compressed potential on the level.
struct ClusterMeasure {
    landau::LandauSpec spec;
    std::vector<double> scaledShifts; // descending |.|
    bool cutoffConverged = false;
};

ClusterMeasure cluster_measure(const Potential& V, double B, int q,
                               landau::ConvergeOptions opts = {});

/// lambda_q^{-1/2} sum_shifts rho(shift).
double test_functional(const ClusterMeasure& m, const radon::TestFunction& rho);

struct ReportRow {
    int q = 0;
    double lambda = 0.0;
    double lhs = 0.0, rhs = 0.0, residual = 0.0;
    std::string label;  // functional descriptor (bump center / moment order)
    bool flagged = false; // boundary mass / convergence caveat
};

struct ConvergenceReport {
    std::vector<ReportRow> rows;
    std::map<std::string, std::string> meta;

    /// least-squares slope of log(residual) against log(lambda_q) for one
    /// label; negative slopes certify the trend
    double slope(const std::string& label) const;
    std::vector<std::string> labels() const;
    bool all_trends_negative() const;
};

/// Distribution functionals against the limit-measure cloud: per (q, bump)
/// lhs = test_functional, rhs = sum w rho(v), residual trend over qList.
/// Bumps whose support edges carry cloud mass get flagged rows.
ConvergenceReport distribution_convergence(const Potential& V, double B,
                                           const std::vector<int>& qList,
                                           const std::vector<radon::TestFunction>& bumps,
                                           const radon::LimitMeasure& mu,
                                           landau::ConvergeOptions opts = {});

/// Moment functionals: lhs = lambda_q^{(ell-1)/2} sum eig^ell against
/// rhs = gamma_ell by quadrature. ell = 1 rows are exact identities.
ConvergenceReport moment_convergence(const Potential& V, double B,
                                     const std::vector<int>& qList,
                                     const std::vector<int>& ellList,
                                     landau::ConvergeOptions opts = {});

struct IntervalCount {
    double scaledCount = 0.0;         // lambda_q^{-1/2} #{shifts in [alpha,beta]}
    double muMass = 0.0;              // cloud mass of [alpha,beta]
    double boundarySensitivity = 0.0; // mass shift under +-delta endpoint moves
};

/// Interval statistics; [alpha,beta] must exclude 0.
IntervalCount interval_count(const Potential& V, double B, int q, double alpha, double beta,
                             const radon::LimitMeasure& mu, double delta = 1e-3,
                             landau::ConvergeOptions opts = {});

IntervalCount interval_count(const ClusterMeasure& m, double alpha, double beta,
                             const radon::LimitMeasure& mu, double delta = 1e-3);

} // namespace lc::clusters
