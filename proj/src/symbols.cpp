#include "lc/symbols.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <stdexcept>

#include "lc/fft.hpp"
#include "lc/quadrature.hpp"
#include "lc/specfun.hpp"

namespace lc::symbols {

namespace {

int next_pow2(int n) {
    int p = 4;
    while (p < n) p <<= 1;
    return p;
}

std::vector<std::complex<double>> to_complex(const std::vector<double>& v) {
    std::vector<std::complex<double>> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

} // namespace

double SymbolGrid::parseval_gap() const {
    double a = 0.0, b = 0.0;
    for (double v : values) a += v * v;
    for (const auto& v : fourier) b += std::norm(v);
    a *= h() * h();
    b *= dzeta() * dzeta();
    return std::abs(a - b) / std::max(std::max(a, b), 1e-300);
}

double SymbolGrid::nyquist_shell_fraction() const {
    const int n = size;
    double shell = 0.0, total = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double e = std::norm(fourier[static_cast<std::size_t>(j) * n + i]);
            total += e;
            const int dj = std::abs(j - n / 2), di = std::abs(i - n / 2);
            if (std::max(di, dj) >= n / 2 - 2) shell += e;
        }
    return total > 0.0 ? shell / total : 0.0;
}

GridParams recommended_grid(const Potential& V, double B, int q) {
    GridParams gp;
    const double rv = V.is_zero() ? 1.0 : std::sqrt(B) * V.support_radius(1e-14);
    const double k = std::sqrt(2.0 * q + 1.0);
    gp.halfWidth = std::max(rv + 4.0, k + 12.0);
    // resolve the Laguerre-Gauss multiplier out to its decay radius 2k
    const double zetaMax = 2.0 * k + 10.0;
    gp.size = next_pow2(std::max(
        256, static_cast<int>(std::ceil(2.0 * gp.halfWidth * zetaMax / M_PI))));
    return gp;
}

SymbolGrid vb_symbol(const Potential& V, double B, GridParams gp, Exec mode) {
    if (gp.size < 4 || (gp.size & (gp.size - 1)) != 0 || gp.size % 4 != 0)
        throw std::invalid_argument("vb_symbol: size must be a power of two divisible by 4");
    if (gp.halfWidth <= 0.0) throw std::invalid_argument("vb_symbol: bad halfWidth");
    SymbolGrid g;
    g.halfWidth = gp.halfWidth;
    g.size = gp.size;
    const int n = gp.size;
    g.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    const double sqrtB = std::sqrt(B);
    const double h = g.h();
    parallel_for(mode, n, [&](std::int64_t j) {
        const double x = -gp.halfWidth + j * h;
        for (int i = 0; i < n; ++i) {
            const double y = -gp.halfWidth + i * h;
            g.values[static_cast<std::size_t>(j) * n + i] = V(-y / sqrtB, -x / sqrtB);
        }
    });
    if (!V.is_zero()) {
        const double edge = std::abs(V(gp.halfWidth / sqrtB, 0.0)) +
                            std::abs(V(0.0, gp.halfWidth / sqrtB));
        const double peak = std::abs(V.x_rho_norm());
        if (edge > 1e-9 * std::max(peak, 1.0) && V.family() == Potential::Family::Gaussian)
            throw std::runtime_error("vb_symbol: grid truncates the rescaled support");
    }
    g.fourier = to_complex(g.values);
    fft::forward_unitary_2d(g.fourier, n, gp.halfWidth, mode);
    return g;
}

double vb_scaling_residual(const Potential& V, double B, GridParams gp, int samples) {
    SymbolGrid vb = vb_symbol(V, B, gp);
    // reference: Vhat_1 by direct discrete sum on the same physical data at
    // the scaled frequency, using the B=1 grid of matching physical extent
    GridParams gp1{gp.halfWidth / std::sqrt(B), gp.size};
    SymbolGrid v1 = vb_symbol(V, 1.0, gp1);
    double worst = 0.0;
    const int n = gp.size;
    for (int s = 0; s < samples; ++s) {
        // probe along the diagonal of the frequency grid, inner quarter
        const int k = n / 2 + 1 + s * std::max(1, n / (8 * samples));
        const double z1 = vb.zeta(k), z2 = vb.zeta(k) * 0.5;
        // direct sums, both grids
        std::complex<double> a = 0.0, b = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double phaseA = vb.x(j) * z1 + vb.x(i) * z2;
                a += vb.value(j, i) * std::polar(1.0, -phaseA);
                const double phaseB = v1.x(j) * std::sqrt(B) * z1 + v1.x(i) * std::sqrt(B) * z2;
                b += v1.value(j, i) * std::polar(1.0, -phaseB);
            }
        a *= vb.h() * vb.h() / (2.0 * M_PI);
        b *= v1.h() * v1.h() / (2.0 * M_PI);
        worst = std::max(worst, std::abs(a - B * b));
    }
    return worst;
}

namespace {

SymbolGrid multiply_and_invert(SymbolGrid vb, const std::function<double(double)>& radialMult,
                               Exec mode, bool aliasCheck) {
    const int n = vb.size;
    SymbolGrid g;
    g.halfWidth = vb.halfWidth;
    g.size = n;
    g.fourier = std::move(vb.fourier);
    parallel_for(mode, n, [&](std::int64_t j) {
        const double z1 = g.zeta(static_cast<int>(j));
        for (int i = 0; i < n; ++i) {
            const double z2 = g.zeta(i);
            g.fourier[static_cast<std::size_t>(j) * n + i] *=
                radialMult(std::hypot(z1, z2));
        }
    });
    if (aliasCheck) {
        double shell = 0.0, total = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const double e = std::norm(g.fourier[static_cast<std::size_t>(j) * n + i]);
                total += e;
                if (std::max(std::abs(j - n / 2), std::abs(i - n / 2)) >= n / 2 - 2) shell += e;
            }
        if (total > 0.0 && shell / total > 1e-10)
            throw std::runtime_error("symbol grid: Nyquist shell carries energy (aliasing)");
    }
    std::vector<std::complex<double>> work = g.fourier;
    fft::inverse_unitary_2d(work, n, g.halfWidth, mode);
    g.values.resize(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < work.size(); ++i) g.values[i] = work[i].real();
    return g;
}

} // namespace

SymbolGrid symbol_sq(const Potential& V, double B, int q, GridParams gp, Exec mode) {
    SymbolGrid vb = vb_symbol(V, B, gp, mode);
    // convolution with Psi_q is the multiplier L_q(|z|^2/2) exp(-|z|^2/4)
    // on the unitary-transform side
    return multiply_and_invert(std::move(vb),
                               [q](double r) { return specfun::laguerre_weighted(q, 0.5 * r * r); },
                               mode, /*aliasCheck=*/!V.is_zero());
}

SymbolGrid symbol_tk(const Potential& V, double B, double k, GridParams gp, Exec mode) {
    if (k < 0.0) throw std::invalid_argument("symbol_tk: k must be >= 0");
    SymbolGrid vb = vb_symbol(V, B, gp, mode);
    return multiply_and_invert(std::move(vb),
                               [k](double r) { return specfun::bessel_j0(k * r); }, mode,
                               /*aliasCheck=*/false);
}

double tk_point(const Potential& V, double B, double k, Vec2 z, double absTol) {
    const double sqrtB = std::sqrt(B);
    auto vbAt = [&](double a, double b) { return V(-b / sqrtB, -a / sqrtB); };
    return quad::trapezoid_periodic_adaptive(
               [&](double th) {
                   return vbAt(z.x - k * std::cos(th), z.y - k * std::sin(th));
               },
               absTol * 2.0 * M_PI) /
           (2.0 * M_PI);
}

GapNorms symbol_gap_norms(const Potential& V, double B, int q, GridParams gp) {
    if (gp.size == 0) gp = recommended_grid(V, B, q);
    SymbolGrid vb = vb_symbol(V, B, gp);
    const double k = std::sqrt(2.0 * q + 1.0);
    const int n = gp.size;
    const double dz2 = vb.dzeta() * vb.dzeta();
    double l1 = 0.0, l2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double z1 = vb.zeta(j);
        for (int i = 0; i < n; ++i) {
            const double r = std::hypot(z1, vb.zeta(i));
            const double mult = specfun::laguerre_weighted(q, 0.5 * r * r) -
                                specfun::bessel_j0(k * r);
            const double mag = std::abs(vb.fourier[static_cast<std::size_t>(j) * n + i]) *
                               std::abs(mult);
            l1 += mag;
            l2 += mag * mag;
        }
    }
    GapNorms g;
    g.l1FourierGap = l1 * dz2 / (2.0 * M_PI);
    g.l2Gap = std::sqrt(l2 * dz2 / (2.0 * M_PI));
    const double lambda = B * (2.0 * q + 1.0);
    g.scaledOp = std::pow(lambda, 0.75) / B * g.l1FourierGap;
    g.scaledHS = std::pow(lambda, 0.75) / B * g.l2Gap;
    return g;
}

std::vector<DeltaSupRow> delta_conv_sup(double rho, double B, const std::vector<double>& kList,
                                        Exec mode) {
    const Potential V = Potential::power_decay(rho);
    std::vector<DeltaSupRow> rows(kList.size());
    for (std::size_t idx = 0; idx < kList.size(); ++idx) {
        const double k = kList[idx];
        // V_B is radial, so t_k is radial: scan |z| on a dense grid and
        // refine around the best sample
        const double rMax = k + 10.0 * std::sqrt(B) + 10.0;
        const int nScan = 2000;
        std::vector<double> vals(nScan + 1);
        parallel_for(mode, nScan + 1, [&](std::int64_t i) {
            const double r = rMax * i / nScan;
            vals[i] = tk_point(V, B, k, {r, 0.0});
        });
        int best = 0;
        for (int i = 1; i <= nScan; ++i)
            if (vals[i] > vals[best]) best = i;
        double lo = rMax * std::max(0, best - 1) / nScan;
        double hi = rMax * std::min(nScan, best + 1) / nScan;
        // golden-section refine
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = lo, b = hi;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = tk_point(V, B, k, {x1, 0.0}), f2 = tk_point(V, B, k, {x2, 0.0});
        for (int it = 0; it < 60 && (b - a) > 1e-10 * (1.0 + b); ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = tk_point(V, B, k, {x2, 0.0});
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = tk_point(V, B, k, {x1, 0.0});
            }
        }
        const double rStar = 0.5 * (a + b);
        const double sup = std::max(std::max(f1, f2), vals[best]);
        rows[idx] = {k, k / std::sqrt(B) * sup, rStar};
    }
    return rows;
}

double hs_trace_oracle(const Potential& V, double B, double k, GridParams gp) {
    if (gp.size == 0) {
        const int q = std::max(0, static_cast<int>(std::lround((k * k - 1.0) / 2.0)));
        gp = recommended_grid(V, B, q);
    }
    SymbolGrid vb = vb_symbol(V, B, gp);
    const int n = gp.size;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double z1 = vb.zeta(j);
        for (int i = 0; i < n; ++i) {
            const double r = std::hypot(z1, vb.zeta(i));
            const double t = std::abs(vb.fourier[static_cast<std::size_t>(j) * n + i]) *
                             specfun::bessel_j0(k * r);
            sum += t * t;
        }
    }
    return sum * vb.dzeta() * vb.dzeta() / (2.0 * M_PI);
}

} // namespace lc::symbols
