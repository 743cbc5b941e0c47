#pragma once

#include <functional>
#include <vector>

namespace lc::quad {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Legendre rule on [-1,1] (Newton iteration on the Legendre recurrence).
Rule1D gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a,b].
Rule1D gauss_legendre(int n, double a, double b);

/// Gauss-Hermite rule, weight exp(-x^2) folded into the weights.
Rule1D gauss_hermite(int n);

/// One Gauss7/Kronrod15 panel on [a,b]. Returns the K15 value, writes the
/// |K15-G7| error estimate.
double gk15(const std::function<double(double)>& f, double a, double b,
            double* errEstimate);

/// Adaptive bisection on GK15 panels down to absTol. Throws
/// std::runtime_error when the panel budget is exhausted before the
/// tolerance is met.
double adaptive(const std::function<double(double)>& f, double a, double b,
                double absTol, int maxPanels = 4000);

/// Integral over [-tMax, tMax] split into dyadic windows away from the
/// origin, each integrated adaptively. Suited to integrands that decay
/// like a power of |t|: the window count grows only logarithmically.
double line_integral(const std::function<double(double)>& f, double tMax,
                     double absTol);

/// Same dyadic scheme on [0, rMax]; used for radial integrals.
double radial_integral(const std::function<double(double)>& f, double rMax,
                       double absTol);

/// Trapezoid sum of a 2pi-periodic function: (2pi/n) * sum f(2pi l/n).
double trapezoid_periodic(const std::function<double(double)>& f, int n);

/// Trapezoid with node doubling until |change| < absTol (periodic case,
/// spectrally accurate for smooth integrands).
double trapezoid_periodic_adaptive(const std::function<double(double)>& f,
                                   double absTol, int nStart = 16,
                                   int nMax = 1 << 16);

} // namespace lc::quad
