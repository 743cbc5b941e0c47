#include "lc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lc::quad {

Rule1D gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

Rule1D gauss_legendre(int n, double a, double b) {
    Rule1D rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

Rule1D gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    const int half = (n + 1) / 2;
    double x = 0.0;
    for (int i = 0; i < half; ++i) {
        // Stroud-Secrest initial guesses (largest root first).
        if (i == 0) {
            x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            x -= 1.14 * std::pow(static_cast<double>(n), 0.426) / x;
        } else if (i == 2) {
            x = 1.86 * x - 0.86 * rule.nodes[n - 1];
        } else if (i == 3) {
            x = 1.91 * x - 0.91 * rule.nodes[n - 2];
        } else {
            x = 2.0 * x - rule.nodes[n - i + 1];
        }
        double dp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            // Orthonormal Hermite-function recurrence (weight folded in up
            // to the common exp(-x^2/2) factor, which cancels in p/p').
            double p0 = pim4, p1 = std::sqrt(2.0) * x * pim4;
            for (int k = 2; k <= n; ++k) {
                double p2 = x * std::sqrt(2.0 / k) * p1 - std::sqrt((k - 1.0) / k) * p0;
                p0 = p1;
                p1 = p2;
            }
            dp = std::sqrt(2.0 * n) * p0;
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        double w = 2.0 / (dp * dp);
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

namespace {

// QUADPACK dqk15 abscissae/weights.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

} // namespace

double gk15(const std::function<double(double)>& f, double a, double b,
            double* errEstimate) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double fc = f(mid);
    double resK = kWgk[7] * fc;
    double resG = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        resK += kWgk[j] * fsum;
        if (j % 2 == 1) resG += kWg[j / 2] * fsum;
    }
    resK *= half;
    resG *= half;
    if (errEstimate) *errEstimate = std::abs(resK - resG);
    return resK;
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double absTol, int maxPanels) {
    struct Panel {
        double a, b, value, err;
    };
    double err0 = 0.0;
    double v0 = gk15(f, a, b, &err0);
    std::vector<Panel> panels{{a, b, v0, err0}};
    int evals = 1;
    while (evals < maxPanels) {
        double total = 0.0, totalErr = 0.0;
        int worst = -1;
        double worstErr = -1.0;
        for (int i = 0; i < static_cast<int>(panels.size()); ++i) {
            total += panels[i].value;
            totalErr += panels[i].err;
            if (panels[i].err > worstErr) {
                worstErr = panels[i].err;
                worst = i;
            }
        }
        if (totalErr <= absTol) return total;
        Panel p = panels[worst];
        const double m = 0.5 * (p.a + p.b);
        double e1 = 0.0, e2 = 0.0;
        Panel left{p.a, m, gk15(f, p.a, m, &e1), e1};
        Panel right{m, p.b, gk15(f, m, p.b, &e2), e2};
        panels[worst] = left;
        panels.push_back(right);
        evals += 2;
        if (m <= p.a || m >= p.b) break; // interval exhausted at double precision
    }
    double total = 0.0, totalErr = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        totalErr += p.err;
    }
    if (totalErr > absTol)
        throw std::runtime_error("adaptive quadrature: tolerance not reached");
    return total;
}

double line_integral(const std::function<double(double)>& f, double tMax,
                     double absTol) {
    if (tMax <= 0.0) return 0.0;
    // Windows [0,1],[1,2],[2,4],... and mirrored; tolerance split evenly.
    std::vector<std::pair<double, double>> windows;
    double lo = 0.0, hi = std::min(1.0, tMax);
    windows.emplace_back(lo, hi);
    while (hi < tMax) {
        lo = hi;
        hi = std::min(2.0 * hi, tMax);
        windows.emplace_back(lo, hi);
    }
    const double tolPer = absTol / (2.0 * static_cast<double>(windows.size()));
    double total = 0.0;
    for (const auto& [wa, wb] : windows) {
        total += adaptive(f, wa, wb, tolPer);
        total += adaptive(f, -wb, -wa, tolPer);
    }
    return total;
}

double radial_integral(const std::function<double(double)>& f, double rMax,
                       double absTol) {
    if (rMax <= 0.0) return 0.0;
    std::vector<std::pair<double, double>> windows;
    double lo = 0.0, hi = std::min(1.0, rMax);
    windows.emplace_back(lo, hi);
    while (hi < rMax) {
        lo = hi;
        hi = std::min(2.0 * hi, rMax);
        windows.emplace_back(lo, hi);
    }
    const double tolPer = absTol / static_cast<double>(windows.size());
    double total = 0.0;
    for (const auto& [wa, wb] : windows) total += adaptive(f, wa, wb, tolPer);
    return total;
}

double trapezoid_periodic(const std::function<double(double)>& f, int n) {
    const double h = 2.0 * M_PI / n;
    double sum = 0.0;
    for (int l = 0; l < n; ++l) sum += f(h * l);
    return sum * h;
}

double trapezoid_periodic_adaptive(const std::function<double(double)>& f,
                                   double absTol, int nStart, int nMax) {
    int n = nStart;
    double prev = trapezoid_periodic(f, n);
    while (n < nMax) {
        n *= 2;
        double cur = trapezoid_periodic(f, n);
        if (std::abs(cur - prev) < absTol) return cur;
        prev = cur;
    }
    throw std::runtime_error("periodic trapezoid: tolerance not reached");
}

} // namespace lc::quad
