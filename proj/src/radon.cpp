#include "lc/radon.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

#include "lc/quadrature.hpp"

namespace lc::radon {

TestFunction::TestFunction(double center, double halfWidth)
    : center_(center), halfWidth_(halfWidth) {
    if (halfWidth <= 0.0)
        throw std::invalid_argument("TestFunction: halfWidth must be > 0");
    if (center - halfWidth <= 0.0 && center + halfWidth >= 0.0)
        throw std::invalid_argument("TestFunction: support must exclude 0");
}

double TestFunction::operator()(double t) const {
    const double s = (t - center_) / halfWidth_;
    const double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s2));
}

double transform(const Potential& V, double omegaAngle, double b, double absTol) {
    if (V.is_zero()) return 0.0;
    const double c = std::cos(omegaAngle), s = std::sin(omegaAngle);
    const double T = V.line_truncation(b, M_PI * absTol);
    auto integrand = [&](double t) { return V(b * c - t * s, b * s + t * c); };
    return quad::line_integral(integrand, T, M_PI * absTol) / (2.0 * M_PI);
}

Profile make_profile(const Potential& V, int omegaCount, int bCount, double bMax,
                     Exec mode, double absTol) {
    if (omegaCount < 1 || bCount < 2)
        throw std::invalid_argument("make_profile: bad grid sizes");
    Profile p;
    p.rho = V.rho();
    p.omega.resize(omegaCount);
    for (int i = 0; i < omegaCount; ++i) p.omega[i] = 2.0 * M_PI * i / omegaCount;
    p.b.resize(bCount);
    for (int j = 0; j < bCount; ++j)
        p.b[j] = -bMax + 2.0 * bMax * (j + 0.5) / bCount;
    p.values.assign(static_cast<std::size_t>(omegaCount) * bCount, 0.0);
    parallel_for_dynamic(mode, static_cast<std::int64_t>(omegaCount) * bCount,
                         [&](std::int64_t idx) {
                             const int i = static_cast<int>(idx / bCount);
                             const int j = static_cast<int>(idx % bCount);
                             p.values[idx] = transform(V, p.omega[i], p.b[j], absTol);
                         });
    return p;
}

double decay_check(const Profile& profile, const Potential& V) {
    if (V.is_zero()) return 0.0;
    const double norm = V.x_rho_norm();
    double sup = 0.0;
    for (int i = 0; i < profile.omegaCount(); ++i)
        for (int j = 0; j < profile.bCount(); ++j) {
            const double b = profile.b[j];
            const double w = std::pow(1.0 + b * b, 0.5 * (profile.rho - 1.0));
            sup = std::max(sup, std::abs(profile.value(i, j)) * w);
        }
    return sup / norm;
}

double LimitMeasure::mass(double alpha, double beta) const {
    double m = 0.0;
    for (std::size_t i = 0; i < value.size(); ++i)
        if (value[i] >= alpha && value[i] <= beta) m += weight[i];
    return m;
}

double LimitMeasure::boundary_sensitivity(double alpha, double beta, double delta) const {
    return mass(alpha - delta, beta + delta) - mass(alpha + delta, beta - delta);
}

double LimitMeasure::total_mass_above(double eps) const {
    double m = 0.0;
    for (std::size_t i = 0; i < value.size(); ++i)
        if (std::abs(value[i]) > eps) m += weight[i];
    return m;
}

LimitMeasure limit_measure(const Potential& V, double B, int omegaCount, int bCount,
                           double bMax, double tailFloor, Exec mode) {
    if (bMax <= 0.0) throw std::invalid_argument("limit_measure: bMax must be > 0");
    LimitMeasure mu;
    mu.B = B;
    mu.rho = V.rho();
    if (V.is_zero()) {
        mu.supportBound = 0.0;
        return mu;
    }
    // truncation check at the edge of the b range
    double edge = 0.0;
    const int probeAngles = V.is_radial() ? 1 : 8;
    for (int i = 0; i < probeAngles; ++i)
        edge = std::max(edge,
                        std::abs(transform(V, 2.0 * M_PI * i / probeAngles, bMax, 1e-11)));
    if (B * edge > tailFloor)
        throw std::invalid_argument(
            "limit_measure: bMax too small, B*|Vt(bMax)| above the tail floor");

    Profile prof = make_profile(V, V.is_radial() ? 1 : omegaCount, bCount, bMax, mode);
    const int nOmega = prof.omegaCount();
    const double dOmega = 2.0 * M_PI / (V.is_radial() ? 1 : omegaCount);
    const double db = 2.0 * bMax / bCount;
    const double w = (V.is_radial() ? 2.0 * M_PI : dOmega) * db / (2.0 * M_PI);
    mu.value.reserve(static_cast<std::size_t>(nOmega) * bCount);
    mu.weight.reserve(mu.value.capacity());
    double sup = 0.0;
    for (int i = 0; i < nOmega; ++i)
        for (int j = 0; j < bCount; ++j) {
            const double v = B * prof.value(i, j);
            mu.value.push_back(v);
            mu.weight.push_back(w);
            sup = std::max(sup, std::abs(v));
        }
    mu.supportBound = sup;
    return mu;
}

LimitMeasure limit_measure_from_profile(const std::function<double(double)>& evenProfile,
                                        double B, int bCount, double bMax) {
    LimitMeasure mu;
    mu.B = B;
    mu.rho = std::numeric_limits<double>::infinity();
    const double db = 2.0 * bMax / bCount;
    const double w = 2.0 * M_PI * db / (2.0 * M_PI);
    double sup = 0.0;
    for (int j = 0; j < bCount; ++j) {
        const double b = -bMax + db * (j + 0.5);
        const double v = B * evenProfile(std::abs(b));
        mu.value.push_back(v);
        mu.weight.push_back(w);
        sup = std::max(sup, std::abs(v));
    }
    mu.supportBound = sup;
    return mu;
}

double measure_moment(const LimitMeasure& mu, double ell, bool signedMoment,
                      bool enforceThreshold) {
    if (enforceThreshold && std::isfinite(mu.rho) && ell <= 1.0 / (mu.rho - 1.0))
        throw std::domain_error("measure_moment: ell <= 1/(rho-1), moment not finite");
    double m = 0.0;
    for (std::size_t i = 0; i < mu.value.size(); ++i) {
        const double v = mu.value[i];
        if (v == 0.0) continue;
        if (signedMoment) {
            m += mu.weight[i] * std::pow(v, ell);
        } else {
            m += mu.weight[i] * std::pow(std::abs(v), ell);
        }
    }
    return m;
}

double gamma_moment(const Potential& V, double B, int ell, double absTol) {
    if (ell < 1) throw std::invalid_argument("gamma_moment: ell must be >= 1");
    if (ell <= 1.0 / (V.rho() - 1.0))
        throw std::domain_error("gamma_moment: ell <= 1/(rho-1), integral not finite");
    if (V.is_zero()) return 0.0;
    // tail of |Vt|^ell controlled by the decay envelope; pick bMax so the
    // remainder integral is below absTol
    const double cRho = 2.0; // generous envelope constant
    const double norm = cRho * V.x_rho_norm();
    const double exponent = (V.rho() - 1.0) * ell - 1.0;
    double bMax = std::pow(2.0 * std::pow(norm, ell) / (exponent * absTol), 1.0 / exponent);
    bMax = std::clamp(bMax, 4.0, 1e7);

    auto perOmega = [&](double omega) {
        auto integ = [&](double b) {
            return std::pow(transform(V, omega, b, absTol * 1e-3), ell);
        };
        return quad::line_integral(integ, bMax, absTol * 0.25);
    };
    double angular;
    if (V.is_radial()) {
        angular = 2.0 * M_PI * perOmega(0.0);
    } else {
        angular = quad::trapezoid_periodic_adaptive(perOmega, absTol, 8, 512);
    }
    return std::pow(B, ell) / (2.0 * M_PI) * angular;
}

double orbit_average(const Potential& V, Vec2 c, double E, double B, double absTol) {
    if (E <= 0.0) throw std::invalid_argument("orbit_average: E must be > 0");
    if (V.is_zero()) return 0.0;
    const double R = std::sqrt(E) / B;
    return quad::trapezoid_periodic_adaptive(
               [&](double th) { return V(c.x + R * std::cos(th), c.y + R * std::sin(th)); },
               absTol * 2.0 * M_PI) /
           (2.0 * M_PI);
}

namespace {

// lhs of the high-energy identity at a fixed energy: the c-plane integral
// concentrates on an annulus |c| ~ R where the orbit circle meets the bulk
// of V; rows report how much integrand mass sits at the annulus edge.
SemiclassicalRow semiclassical_row(const Potential& V, const TestFunction& rho, double B,
                                   double E, double rhs) {
    const double R = std::sqrt(E) / B;
    const double sqrtE = std::sqrt(E);
    auto scaledAverage = [&](double r, double phi) {
        return sqrtE * orbit_average(V, {r * std::cos(phi), r * std::sin(phi)}, E, B, 1e-9);
    };
    // bracket the annulus: expand until the scaled average drops below the
    // bump support on both sides
    const double lo = rho.suppMin();
    double W = 2.0;
    const bool radial = V.is_radial();
    auto edgeValue = [&](double r) {
        if (r < 0.0) return 0.0;
        double worst = 0.0;
        const int nPhi = radial ? 1 : 16;
        for (int i = 0; i < nPhi; ++i)
            worst = std::max(worst, std::abs(scaledAverage(r, 2.0 * M_PI * i / nPhi)));
        return worst;
    };
    while (W < R + 10.0 && (edgeValue(R - W) >= lo || edgeValue(R + W) >= lo)) W *= 1.5;
    const double rA = std::max(0.0, R - W), rB = R + W;

    auto radialIntegrand = [&](double r) {
        double ringAvg;
        if (radial) {
            ringAvg = rho(scaledAverage(r, 0.0));
        } else {
            ringAvg = quad::trapezoid_periodic_adaptive(
                          [&](double phi) { return rho(scaledAverage(r, phi)); }, 1e-8, 16) /
                      (2.0 * M_PI);
        }
        return r * ringAvg;
    };
    const double integral = 2.0 * M_PI * quad::adaptive(radialIntegrand, rA, rB, 1e-8, 8000);
    const double lhs = (1.0 / sqrtE) * (1.0 / (2.0 * M_PI)) * integral * B;
    // boundary mass: integrand at the annulus edges relative to its peak
    const double edge = std::abs(radialIntegrand(rA)) + std::abs(radialIntegrand(rB));
    SemiclassicalRow row;
    row.E = E;
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = std::abs(lhs - rhs);
    row.boundaryMass = edge;
    return row;
}

} // namespace

std::vector<SemiclassicalRow> semiclassical_residuals(const Potential& V,
                                                      const TestFunction& rho,
                                                      double B,
                                                      const std::vector<double>& Elist) {
    // rhs does not depend on E
    double rhs = 0.0;
    if (!V.is_zero()) {
        // b range: where B|Vt| could still reach the bump support
        const double lo = rho.suppMin();
        const double norm = 2.0 * V.x_rho_norm() * B;
        double bMax = std::pow(std::max(norm / lo, 2.0), 1.0 / (V.rho() - 1.0)) + 4.0;
        bMax = std::min(bMax, 1e6);
        auto perOmega = [&](double omega) {
            auto integ = [&](double b) { return rho(B * transform(V, omega, b, 1e-10)); };
            return quad::line_integral(integ, bMax, 1e-9);
        };
        const double angular = V.is_radial()
                                   ? 2.0 * M_PI * perOmega(0.0)
                                   : quad::trapezoid_periodic_adaptive(perOmega, 1e-8, 8, 256);
        rhs = angular / (2.0 * M_PI);
    }
    std::vector<SemiclassicalRow> rows;
    rows.reserve(Elist.size());
    for (double E : Elist) {
        if (V.is_zero()) {
            rows.push_back({E, 0.0, 0.0, 0.0, 0.0});
        } else {
            rows.push_back(semiclassical_row(V, rho, B, E, rhs));
        }
    }
    return rows;
}

} // namespace lc::radon
