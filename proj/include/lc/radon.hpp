#pragma once

#include <functional>
#include <vector>

#include "lc/parallel.hpp"
#include "lc/potential.hpp"

namespace lc::radon {

/// Smooth bump supported on [center-halfWidth, center+halfWidth], which
/// must exclude 0: t -> exp(1 - 1/(1-s^2)), s = (t-center)/halfWidth.
class TestFunction {
public:
    TestFunction(double center, double halfWidth);
    double operator()(double t) const;
    double center() const { return center_; }
    double halfWidth() const { return halfWidth_; }
    double suppMin() const { return center_ - halfWidth_; }
    double suppMax() const { return center_ + halfWidth_; }

private:
    double center_, halfWidth_;
};

/// Line average (1/2pi) \int V(b omega + t omega_perp) dt for the unit
/// direction omega = (cos a, sin a). Adaptive quadrature, absolute error
/// below absTol.
double transform(const Potential& V, double omegaAngle, double b, double absTol = 1e-10);

struct Profile {
    std::vector<double> omega; // angles in [0, 2pi)
    std::vector<double> b;     // symmetric grid
    std::vector<double> values; // row-major, omega-major
    double rho = 0.0;

    double value(int i, int j) const { return values[static_cast<std::size_t>(i) * b.size() + j]; }
    int omegaCount() const { return static_cast<int>(omega.size()); }
    int bCount() const { return static_cast<int>(b.size()); }
};

Profile make_profile(const Potential& V, int omegaCount, int bCount, double bMax,
                     Exec mode = Exec::Par, double absTol = 1e-10);

/// Empirical decay constant sup |Vt(omega,b)| <b>^{rho-1} / ||V||_{X_rho}.
double decay_check(const Profile& profile, const Potential& V);

/// Weighted sample cloud approximating the pushforward of
/// (1/2pi) Lebesgue on T x [-bMax, bMax] under (omega,b) -> B Vt(omega,b).
struct LimitMeasure {
    std::vector<double> value;
    std::vector<double> weight;
    double supportBound = 0.0; // B sup|Vt| over the grid
    double B = 1.0;
    double rho = 0.0; // inherited decay exponent (moment threshold)

    double mass(double alpha, double beta) const; // closed interval
    double boundary_sensitivity(double alpha, double beta, double delta) const;
    double total_mass_above(double eps) const;
};

/// Throws std::invalid_argument when B sup|Vt(bMax)| exceeds tailFloor
/// (truncation would lose visible mass).
LimitMeasure limit_measure(const Potential& V, double B, int omegaCount, int bCount,
                           double bMax, double tailFloor = 1e-8, Exec mode = Exec::Par);

/// Measure built from a synthetic even profile a(b) (an admissible Radon
/// image); used to exhibit atoms from flat profile stretches.
LimitMeasure limit_measure_from_profile(const std::function<double(double)>& evenProfile,
                                        double B, int bCount, double bMax);

/// sum w |v|^ell (signed=false) or sum w v^ell (signed=true). With
/// enforceThreshold, throws std::domain_error for ell <= 1/(rho-1).
double measure_moment(const LimitMeasure& mu, double ell, bool signedMoment = false,
                      bool enforceThreshold = true);

/// gamma_ell = (B^ell/2pi) \int_T \int_R Vt(omega,b)^ell db domega by
/// direct quadrature. Throws std::domain_error for ell <= 1/(rho-1).
double gamma_moment(const Potential& V, double B, int ell, double absTol = 1e-9);

/// Time average of V over the cyclotron circle of radius sqrt(E)/B
/// centered at c (equals the uniform angular average over the circle).
double orbit_average(const Potential& V, Vec2 c, double E, double B, double absTol = 1e-11);

struct SemiclassicalRow {
    double E, lhs, rhs, residual;
    double boundaryMass; // integrand mass near the c-domain boundary
};

/// For each E: lhs = E^{-1/2} (1/2pi) \int rho(sqrt(E) <V>(c,E)) B dc and
/// rhs = (1/2pi) \int\int rho(B Vt) db domega; the residual trend along a
/// geometric E list is the check.
std::vector<SemiclassicalRow> semiclassical_residuals(const Potential& V,
                                                      const TestFunction& rho,
                                                      double B,
                                                      const std::vector<double>& Elist);

} // namespace lc::radon
