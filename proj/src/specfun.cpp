#include "lc/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lc/fft.hpp"

namespace lc::specfun {

double laguerre(int q, double x) {
    if (q < 0) throw std::invalid_argument("laguerre: q must be >= 0");
    if (q == 0) return 1.0;
    double p0 = 1.0, p1 = 1.0 - x;
    for (int k = 1; k < q; ++k) {
        double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double laguerre_weighted(int q, double x) {
    if (q < 0) throw std::invalid_argument("laguerre_weighted: q must be >= 0");
    // The recurrence is linear, so the weight rides along from the seeds.
    const double w = std::exp(-0.5 * x);
    if (q == 0) return w;
    double p0 = w, p1 = (1.0 - x) * w;
    for (int k = 1; k < q; ++k) {
        double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double glaguerre(int q, double alpha, double x) {
    if (q < 0) throw std::invalid_argument("glaguerre: q must be >= 0");
    if (alpha <= -1.0) throw std::invalid_argument("glaguerre: alpha must be > -1");
    if (q == 0) return 1.0;
    double p0 = 1.0, p1 = 1.0 + alpha - x;
    for (int k = 1; k < q; ++k) {
        double p2 = ((2.0 * k + 1.0 + alpha - x) * p1 - (k + alpha) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double hermite_poly(int q, double x) {
    if (q < 0) throw std::invalid_argument("hermite_poly: q must be >= 0");
    if (q == 0) return 1.0;
    double p0 = 1.0, p1 = 2.0 * x;
    for (int k = 1; k < q; ++k) {
        double p2 = 2.0 * x * p1 - 2.0 * k * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double hermite_fn(int q, double x) {
    if (q < 0) throw std::invalid_argument("hermite_fn: q must be >= 0");
    const double pim4 = 0.7511255444649425; // pi^{-1/4}
    double p0 = pim4 * std::exp(-0.5 * x * x);
    if (q == 0) return p0;
    double p1 = std::sqrt(2.0) * x * p0;
    for (int k = 2; k <= q; ++k) {
        double p2 = x * std::sqrt(2.0 / k) * p1 - std::sqrt((k - 1.0) / k) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double laguerre_orthonormal(int n, int alpha, double u) {
    if (n < 0 || alpha < 0)
        throw std::invalid_argument("laguerre_orthonormal: n, alpha must be >= 0");
    double f0;
    if (u <= 0.0) {
        f0 = (alpha == 0) ? 1.0 : 0.0;
        if (u < 0.0) throw std::invalid_argument("laguerre_orthonormal: u must be >= 0");
    } else {
        // log-scale seed keeps u^{alpha/2} exp(-u/2) / sqrt(alpha!) in range
        f0 = std::exp(0.5 * (alpha * std::log(u) - u - std::lgamma(alpha + 1.0)));
    }
    if (n == 0) return f0;
    double f1 = (alpha + 1.0 - u) * f0 / std::sqrt(alpha + 1.0);
    for (int k = 1; k < n; ++k) {
        double f2 = ((2.0 * k + alpha + 1.0 - u) * f1 -
                     std::sqrt(k * (k + static_cast<double>(alpha))) * f0) /
                    std::sqrt((k + 1.0) * (k + 1.0 + alpha));
        f0 = f1;
        f1 = f2;
    }
    return f1;
}

void laguerre_orthonormal_batch(int n, int alpha, std::span<const double> u,
                                std::span<double> out) {
    if (out.size() != u.size())
        throw std::invalid_argument("laguerre_orthonormal_batch: size mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = laguerre_orthonormal(n, alpha, u[i]);
}

// ---------------------------------------------------------------------------
// Bessel J0/Y0.
//
// The Maclaurin series suffers catastrophic cancellation as x grows (the
// largest term reaches ~3e4 by x=14), while the Hankel expansion only
// attains ~1e-12 absolute accuracy once x >= 14.  A plain double series
// below a crossover at 8 cannot meet the 1e-12 contract, so the series
// branch accumulates in double-double arithmetic and the crossover sits at
// x = 14 where the asymptotic branch takes over.
// ---------------------------------------------------------------------------

namespace {

struct DD {
    double hi, lo;
};

inline DD dd_from(double a) { return {a, 0.0}; }

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD t = two_sum(s.hi, s.lo);
    return t;
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    DD t = two_sum(p.hi, p.lo);
    return t;
}

inline DD dd_div_double(DD a, double b) {
    double q1 = a.hi / b;
    DD p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    double q2 = r / b;
    DD t = two_sum(q1, q2);
    return t;
}

constexpr double kBesselCrossover = 14.0;
constexpr double kEulerGamma = 0.5772156649015328606;

double j0_series(double x) {
    // J0(x) = sum_k (-(x^2/4))^k / (k!)^2, double-double throughout.
    DD z = dd_mul(two_prod(x, x), dd_from(0.25));
    DD term = dd_from(1.0);
    DD sum = term;
    for (int k = 1; k <= 64; ++k) {
        term = dd_mul(term, z);
        term = dd_div_double(term, -static_cast<double>(k) * k);
        sum = dd_add(sum, term);
        if (std::abs(term.hi) < 1e-20 * std::abs(sum.hi) + 1e-40) break;
    }
    return sum.hi + sum.lo;
}

double y0_series(double x) {
    // Y0(x) = (2/pi)[(ln(x/2)+gamma) J0(x) + sum_{k>=1} (-1)^{k+1} H_k z^k/(k!)^2]
    // The harmonic numbers ride along in double-double as well: near the
    // crossover the largest term reaches ~1e4 and a double H_k would leak
    // ~1e-12 into the cancellation.
    DD z = dd_mul(two_prod(x, x), dd_from(0.25));
    DD term = dd_from(1.0);
    DD sum = dd_from(0.0);
    DD harmonic = dd_from(0.0);
    for (int k = 1; k <= 64; ++k) {
        term = dd_mul(term, z);
        term = dd_div_double(term, -static_cast<double>(k) * k);
        harmonic = dd_add(harmonic, dd_div_double(dd_from(1.0), k));
        DD contrib = dd_mul(term, DD{-harmonic.hi, -harmonic.lo}); // (-1)^{k+1} |term| H_k
        sum = dd_add(sum, contrib);
        if (std::abs(term.hi) * harmonic.hi < 1e-20 * (std::abs(sum.hi) + 1.0)) break;
    }
    const double j0 = j0_series(x);
    return (2.0 / M_PI) * ((std::log(0.5 * x) + kEulerGamma) * j0 + (sum.hi + sum.lo));
}

// Hankel modulus/phase series: c_m = [(2m-1)!!]^2 / m!, terms c_m/(8x)^m
// with alternating signs split into even (P) and odd (Q) parts. Truncated
// at the smallest term; at x >= 14 the floor is below 1e-12.
void j0y0_pq(double x, double* P, double* Q) {
    const double inv8x = 1.0 / (8.0 * x);
    double c = 1.0;     // c_0
    double pw = 1.0;    // (8x)^{-m}
    double p = 1.0, q = 0.0;
    double prev = 1.0;
    for (int m = 1; m <= 40; ++m) {
        double odd = 2.0 * m - 1.0;
        c *= odd * odd / m;
        pw *= inv8x;
        double t = c * pw;
        if (t > prev) break; // divergent tail reached
        prev = t;
        int r = m % 4;
        if (r == 1) q -= t;
        else if (r == 2) p -= t;
        else if (r == 3) q += t;
        else p += t;
        if (t < 1e-18) break;
    }
    *P = p;
    *Q = q;
}

double j0_asym(double x) {
    double p, q;
    j0y0_pq(x, &p, &q);
    const double chi = x - 0.25 * M_PI;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double y0_asym(double x) {
    double p, q;
    j0y0_pq(x, &p, &q);
    const double chi = x - 0.25 * M_PI;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

} // namespace

double bessel_j0(double x) {
    if (x < 0.0) x = -x; // even
    return (x <= kBesselCrossover) ? j0_series(x) : j0_asym(x);
}

double bessel_y0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_y0: requires x > 0");
    return (x <= kBesselCrossover) ? y0_series(x) : y0_asym(x);
}

double wigner_psi(int q, double x, double xi) {
    const double t = 2.0 * (x * x + xi * xi);
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    return sign / M_PI * laguerre_weighted(q, t);
}

GapBound laguerre_bessel_gap(int q, double x) {
    if (q < 1 || x <= 0.0)
        throw std::invalid_argument("laguerre_bessel_gap: requires q >= 1, x > 0");
    const double u = laguerre_weighted(q, x);
    const double v = bessel_j0(std::sqrt((4.0 * q + 2.0) * x));
    GapBound g;
    g.gap = std::abs(u - v);
    g.bound = std::pow(q, -0.75) * std::pow(x, 1.25) + x * x * x / q;
    return g;
}

double wigner_fourier_residual(int q, double halfWidth, int size) {
    if (size < 4 || (size & (size - 1)) != 0)
        throw std::invalid_argument("wigner_fourier_residual: size must be a power of two >= 4");
    const double boundary = std::abs(wigner_psi(q, halfWidth, 0.0));
    if (boundary > 1e-14)
        throw std::invalid_argument(
            "wigner_fourier_residual: halfWidth too small, Psi_q not resolved at the boundary");

    const int n = size;
    std::vector<std::complex<double>> grid(static_cast<std::size_t>(n) * n);
    const double h = 2.0 * halfWidth / n;
    for (int j = 0; j < n; ++j) {
        const double x = -halfWidth + j * h;
        for (int i = 0; i < n; ++i) {
            const double xi = -halfWidth + i * h;
            grid[static_cast<std::size_t>(j) * n + i] = wigner_psi(q, x, xi);
        }
    }
    fft::forward_unitary_2d(grid, n, halfWidth, Exec::Par);

    const double dz = M_PI / halfWidth;
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const double z1 = (j - n / 2) * dz;
        for (int i = 0; i < n; ++i) {
            const double z2 = (i - n / 2) * dz;
            const double expected = 0.5 * sign * wigner_psi(q, 0.5 * z1, 0.5 * z2);
            const double got = std::abs(grid[static_cast<std::size_t>(j) * n + i] - expected);
            if (got > worst) worst = got;
        }
    }
    return worst;
}

} // namespace lc::specfun
