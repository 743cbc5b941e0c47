#include "lc/landau.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "lc/fft.hpp"
#include "lc/quadrature.hpp"
#include "lc/specfun.hpp"

namespace lc::landau {

namespace {

int radial_degree(const LandauSpec& spec, int m) {
    return m >= 0 ? spec.q : spec.q + m;
}

void check_range(const LandauSpec& spec, const BasisRange& range) {
    if (spec.B <= 0.0) throw std::invalid_argument("LandauSpec: B must be > 0");
    if (spec.q < 0) throw std::invalid_argument("LandauSpec: q must be >= 0");
    if (range.mMin < -spec.q)
        throw std::invalid_argument("BasisRange: mMin below the angular momentum floor -q");
    if (range.mMax < range.mMin) throw std::invalid_argument("BasisRange: empty range");
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

QuadratureSpec QuadratureSpec::recommended(const LandauSpec& spec, const BasisRange& range,
                                           const Potential& V) {
    check_range(spec, range);
    QuadratureSpec qs;
    const int q = spec.q;
    const int mTop = std::max(range.mMax, -range.mMin);
    // u box: full coverage of the truncated basis, clipped where the
    // potential itself has an exponential cutoff
    const double nBar = 2.0 * q + mTop + 1.0;
    double uMax = 2.0 * nBar + 12.0 * std::sqrt(nBar) + 40.0;
    switch (V.family()) {
        case Potential::Family::Gaussian:
        case Potential::Family::AngularFourierRadial:
        case Potential::Family::GridSampled: {
            const double sr = V.support_radius(1e-18);
            uMax = std::min(uMax, spec.B * sr * sr / 2.0 + 10.0);
            break;
        }
        default:
            break;
    }
    qs.uMax = uMax;
    // node count: resolve the Laguerre oscillations inside the box plus the
    // smooth exponential envelope of wide boxes
    qs.radialNodes =
        64 + static_cast<int>(std::ceil(0.8 * std::sqrt(uMax * (4.0 * q + 6.0)) + uMax / 3.0));
    qs.angularNodes = next_pow2(std::max(4 * (q + mTop) + 16, 128));
    return qs;
}

double ToeplitzMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < entries.rows(); ++i) t += entries(i, i).real();
    return t;
}

double ToeplitzMatrix::frobenius_sq() const { return entries.squaredNorm(); }

std::complex<double> basis_eval(const LandauSpec& spec, int m, double r, double theta) {
    if (m < -spec.q)
        throw std::invalid_argument("basis_eval: m below the angular momentum floor -q");
    const double u = spec.B * r * r / 2.0;
    const double radial = specfun::laguerre_orthonormal(radial_degree(spec, m), std::abs(m), u);
    const double amp = std::sqrt(spec.B / (2.0 * M_PI)) * radial;
    return std::polar(amp, m * theta);
}

namespace {

// Diagonal trace on an independent radial rule; the assembly is flagged as
// unconverged when two nearby rules disagree on it.
double diagonal_trace(const LandauSpec& spec, const Potential& V, const BasisRange& range,
                      double uMax, int nodes, Exec mode) {
    const quad::Rule1D rule = quad::gauss_legendre(nodes, 0.0, uMax);
    std::vector<double> avg(rule.size());
    for (int k = 0; k < rule.size(); ++k)
        avg[k] = V.angular_average(std::sqrt(2.0 * rule.nodes[k] / spec.B), 1e-11);
    std::vector<double> partial(range.count());
    parallel_for(mode, range.count(), [&](std::int64_t i) {
        const int m = range.mMin + static_cast<int>(i);
        double acc = 0.0;
        for (int k = 0; k < rule.size(); ++k) {
            const double f = specfun::laguerre_orthonormal(radial_degree(spec, m), std::abs(m),
                                                           rule.nodes[k]);
            acc += rule.weights[k] * f * f * avg[k];
        }
        partial[i] = acc;
    });
    double trace = 0.0;
    for (double p : partial) trace += p;
    return trace;
}

} // namespace

ToeplitzMatrix assemble(const LandauSpec& spec, const Potential& V, const BasisRange& range,
                        const QuadratureSpec& quad, Exec mode) {
    check_range(spec, range);
    const int mTop = std::max(range.mMax, -range.mMin);
    if (quad.radialNodes < 32)
        throw std::invalid_argument("assemble: radialNodes below the floor of 32");
    if (quad.angularNodes < 4 * (spec.q + mTop) + 16)
        throw std::invalid_argument(
            "assemble: angularNodes below 4(q+|mMax|)+16, coupled harmonics unresolved");
    const int n = range.count();
    ToeplitzMatrix T;
    T.spec = spec;
    T.range = range;
    T.entries = Eigen::MatrixXcd::Zero(n, n);
    T.assemblyTolerance = quad.tolerance;
    if (V.is_zero()) {
        T.diagonalFastPath = true;
        return T;
    }

    const quad::Rule1D rule = quad::gauss_legendre(quad.radialNodes, 0.0, quad.uMax);
    const int nr = rule.size();

    // f table: one orthonormal Laguerre column per basis index
    std::vector<double> F(static_cast<std::size_t>(n) * nr);
    parallel_for(mode, static_cast<std::int64_t>(n) * nr, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx / nr);
        const int k = static_cast<int>(idx % nr);
        const int m = range.mMin + i;
        F[idx] = specfun::laguerre_orthonormal(radial_degree(spec, m), std::abs(m),
                                               rule.nodes[k]);
    });

    // refinement signal: the same trace on a slightly richer independent
    // rule; disagreement means the radial rule has not converged
    auto check_refinement = [&] {
        const double tr = T.trace();
        const int richer = quad.radialNodes + std::max(32, quad.radialNodes / 8);
        const double tr2 = diagonal_trace(spec, V, range, quad.uMax, richer, mode);
        const double gate = std::max(1e3 * quad.tolerance * (1.0 + std::abs(tr)), 1e-9);
        if (std::abs(tr - tr2) > gate)
            throw std::runtime_error(
                "assemble: radial quadrature refinement moved the trace; increase radialNodes");
    };

    const bool radialPath = V.is_radial() && !quad.forceGeneralPath;
    if (radialPath) {
        T.diagonalFastPath = true;
        std::vector<double> vrad(nr);
        for (int k = 0; k < nr; ++k)
            vrad[k] = V.radial_value(std::sqrt(2.0 * rule.nodes[k] / spec.B));
        parallel_for(mode, n, [&](std::int64_t i) {
            const double* fi = &F[static_cast<std::size_t>(i) * nr];
            double acc = 0.0;
            for (int k = 0; k < nr; ++k) acc += rule.weights[k] * fi[k] * fi[k] * vrad[k];
            T.entries(i, i) = acc;
        });
        check_refinement();
        return T;
    }

    // angular harmonics of V at each radial node via FFT over theta;
    // c_d(u) = (1/2pi) \int V e^{i d theta} dtheta
    const int nth = quad.angularNodes;
    std::vector<std::complex<double>> harmonics(static_cast<std::size_t>(nr) * nth);
    parallel_for(mode, nr, [&](std::int64_t k) {
        const double r = std::sqrt(2.0 * rule.nodes[k] / spec.B);
        std::complex<double>* row = &harmonics[static_cast<std::size_t>(k) * nth];
        for (int l = 0; l < nth; ++l) {
            const double th = 2.0 * M_PI * l / nth;
            row[l] = V(r * std::cos(th), r * std::sin(th));
        }
        fft::fft_inplace(row, nth, /*inverse=*/false);
        for (int l = 0; l < nth; ++l) row[l] /= static_cast<double>(nth);
    });
    auto harmonic = [&](int k, int d) -> std::complex<double> {
        int idx = (-d) % nth;
        if (idx < 0) idx += nth;
        return harmonics[static_cast<std::size_t>(k) * nth + idx];
    };

    // entries over the upper triangle; each (i,j) reduction stays serial so
    // the parallel and serial paths agree bitwise
    parallel_for_dynamic(mode, static_cast<std::int64_t>(n) * n, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx / n);
        const int j = static_cast<int>(idx % n);
        if (j < i) return;
        const int d = (range.mMin + j) - (range.mMin + i);
        const double* fi = &F[static_cast<std::size_t>(i) * nr];
        const double* fj = &F[static_cast<std::size_t>(j) * nr];
        std::complex<double> acc = 0.0;
        for (int k = 0; k < nr; ++k) acc += rule.weights[k] * fi[k] * fj[k] * harmonic(k, d);
        T.entries(i, j) = acc;
        if (i != j) T.entries(j, i) = std::conj(acc);
    });

    // absorb residual quadrature asymmetry
    T.entries = 0.5 * (T.entries + T.entries.adjoint()).eval();

    if (V.is_radial()) {
        const double scale = std::max(T.entries.cwiseAbs().maxCoeff(), 1e-30);
        double offDiag = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) offDiag = std::max(offDiag, std::abs(T.entries(i, j)));
        if (offDiag > std::max(quad.tolerance * scale, 1e-12))
            throw std::runtime_error(
                "assemble: radial potential produced off-diagonal entries above tolerance");
    }
    check_refinement();
    return T;
}

std::vector<double> eigenvalues(const ToeplitzMatrix& T) {
    const int n = static_cast<int>(T.entries.rows());
    std::vector<double> eigs(n);
    if (T.diagonalFastPath) {
        for (int i = 0; i < n; ++i) eigs[i] = T.entries(i, i).real();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(T.entries,
                                                               Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eigenvalues: eigensolver failed");
        Eigen::VectorXd ev = solver.eigenvalues();
        for (int i = 0; i < n; ++i) eigs[i] = ev(i);
    }
    std::sort(eigs.begin(), eigs.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    return eigs;
}

namespace {

// worst move among retained eigenvalues, positives and negatives paired
// separately in magnitude order
double eigen_move(const std::vector<double>& prev, const std::vector<double>& cur,
                  double floor) {
    auto part = [](const std::vector<double>& v, bool positive) {
        std::vector<double> out;
        for (double x : v)
            if ((positive && x > 0.0) || (!positive && x < 0.0)) out.push_back(std::abs(x));
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    };
    double move = 0.0;
    for (bool positive : {true, false}) {
        const auto a = part(prev, positive);
        const auto b = part(cur, positive);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] <= floor) break;
            const double other = i < b.size() ? b[i] : 0.0;
            move = std::max(move, std::abs(a[i] - other));
        }
    }
    return move;
}

} // namespace

Converged assemble_converged(const LandauSpec& spec, const Potential& V, ConvergeOptions opts,
                             Exec mode) {
    Converged out;
    if (V.is_zero()) {
        BasisRange range{-spec.q, 4 * spec.q + opts.initialMargin};
        QuadratureSpec qs = QuadratureSpec::recommended(spec, range, V);
        out.matrix = assemble(spec, V, range, qs, mode);
        out.eigs.assign(range.count(), 0.0);
        out.cutoffConverged = true;
        return out;
    }
    int mMax = 4 * spec.q + opts.initialMargin;
    ToeplitzMatrix prevT;
    std::vector<double> prevEigs;
    double prevTrace = 0.0, prevFrob = 0.0;
    const bool integrable = V.is_integrable();
    for (int step = 0; step <= opts.maxDoublings; ++step) {
        BasisRange range{-spec.q, mMax};
        QuadratureSpec qs = QuadratureSpec::recommended(spec, range, V);
        qs.forceGeneralPath = opts.forceGeneralPath;
        ToeplitzMatrix T = assemble(spec, V, range, qs, mode);
        std::vector<double> eigs = eigenvalues(T);
        const double trace = T.trace();
        const double frob = T.frobenius_sq();
        if (step > 0) {
            const double maxAbs = std::max(
                std::abs(prevEigs.empty() ? 0.0 : prevEigs.front()), 1e-300);
            const double floor = std::max(opts.tol * maxAbs, 1e-14);
            out.eigMove = eigen_move(prevEigs, eigs, floor);
            out.traceDelta = integrable
                                 ? std::abs(trace - prevTrace) / std::max(std::abs(trace), 1e-300)
                                 : std::numeric_limits<double>::quiet_NaN();
            out.frobDelta = std::abs(frob - prevFrob) / std::max(frob, 1e-300);
            const bool traceOk = !opts.requireTraceConverged || !integrable ||
                                 out.traceDelta <= opts.tol;
            if (out.eigMove <= opts.tol * maxAbs && traceOk) {
                out.matrix = std::move(T);
                out.eigs = std::move(eigs);
                out.cutoffConverged = true;
                return out;
            }
        }
        prevT = std::move(T);
        prevEigs = std::move(eigs);
        prevTrace = trace;
        prevFrob = frob;
        mMax *= 2;
    }
    out.matrix = std::move(prevT);
    out.eigs = std::move(prevEigs);
    out.cutoffConverged = false;
    return out;
}

double toeplitz_trace(const ToeplitzMatrix& T) { return T.trace(); }

double level_kernel_partial(const LandauSpec& spec, int mMax, double u) {
    double sum = 0.0;
    for (int m = -spec.q; m <= mMax; ++m) {
        const double f = specfun::laguerre_orthonormal(radial_degree(spec, m), std::abs(m), u);
        sum += f * f;
    }
    return sum;
}

double trace_identity_residual(const ToeplitzMatrix& T, const Potential& V, double absTol) {
    if (V.is_zero()) return std::abs(T.trace());
    if (!V.is_integrable())
        throw std::domain_error("trace_identity_residual: potential is not integrable");
    const LandauSpec& spec = T.spec;
    const double target = spec.B / (2.0 * M_PI) *
                          V.integral_2d(std::min(1e-9, 0.05 * absTol) * 2.0 * M_PI / spec.B);

    // does the truncated basis still miss visible potential mass?
    const int mMax = T.range.mMax;
    const double uTop = 2.0 * spec.q + mMax + 1.0;
    const double uCov = std::max(0.0, uTop - 3.0 * std::sqrt(uTop));
    const double rCov = std::sqrt(2.0 * uCov / spec.B);
    double tailEst = 0.0;
    if (V.support_radius(1e-16) > rCov)
        tailEst = spec.B / (2.0 * M_PI) * V.integral_2d(1e-10 * 2.0 * M_PI / spec.B, rCov);
    if (std::abs(tailEst) < 0.2 * absTol) return std::abs(T.trace() - target);

    // fold the angular tail back in through the level-kernel complement:
    // Tr(P_q V P_q) = Tr(T) + (B/2pi) Int V (1 - kappa_{q,M})
    const double uEdge =
        uTop + 4.0 * std::sqrt((spec.q + 1.0) * (mMax + spec.q + 1.0)) + 30.0;
    auto integrand = [&](double u) {
        const double r = std::sqrt(2.0 * u / spec.B);
        const double kappa = level_kernel_partial(spec, mMax, u);
        return V.angular_average(r) * std::max(0.0, 1.0 - kappa);
    };
    double correction = quad::radial_integral(integrand, uEdge, 0.05 * absTol);
    const double rEdge = std::sqrt(2.0 * uEdge / spec.B);
    correction += spec.B / (2.0 * M_PI) *
                  V.integral_2d(0.05 * absTol * 2.0 * M_PI / spec.B, rEdge);
    return std::abs(T.trace() + correction - target);
}

std::vector<ScalingRow> norm_scaling_table(const Potential& V, double B,
                                           const std::vector<int>& qList,
                                           ConvergeOptions opts) {
    std::vector<ScalingRow> rows;
    for (int q : qList) {
        LandauSpec spec{B, q};
        Converged c = assemble_converged(spec, V, opts);
        const double norm = c.eigs.empty() ? 0.0 : std::abs(c.eigs.front());
        rows.push_back({q, std::sqrt(spec.lambda()) / B * norm, c.cutoffConverged});
    }
    return rows;
}

std::vector<ScalingRow> schatten_scaling_table(const Potential& V, double B, double ell,
                                               const std::vector<int>& qList,
                                               ConvergeOptions opts) {
    if (!V.is_zero() && ell <= 1.0 / (V.rho() - 1.0))
        throw std::domain_error("schatten_scaling_table: ell <= 1/(rho-1)");
    std::vector<ScalingRow> rows;
    for (int q : qList) {
        LandauSpec spec{B, q};
        Converged c = assemble_converged(spec, V, opts);
        double sum = 0.0;
        for (double e : c.eigs) sum += std::pow(std::abs(e), ell);
        const double norm = std::pow(sum, 1.0 / ell);
        const double scale = std::pow(spec.lambda(), (ell - 1.0) / (2.0 * ell)) / B;
        rows.push_back({q, scale * norm, c.cutoffConverged});
    }
    return rows;
}

std::vector<StrongFieldRow> strong_field_check(const Potential& V, int q, int ell,
                                               const std::vector<double>& Blist,
                                               ConvergeOptions opts) {
    if (ell < 1) throw std::invalid_argument("strong_field_check: ell must be >= 1");
    opts.requireTraceConverged = true;
    opts.maxDoublings = std::max(opts.maxDoublings, 8);
    std::vector<StrongFieldRow> rows;
    const Potential Vpow = V.pointwise_power(ell);
    const double integral = V.is_zero() ? 0.0 : Vpow.integral_2d(1e-10) / (2.0 * M_PI);
    for (double B : Blist) {
        LandauSpec spec{B, q};
        StrongFieldRow row;
        row.B = B;
        row.integral = integral;
        Converged c = assemble_converged(spec, V, opts);
        double tracePow = 0.0;
        for (double e : c.eigs) tracePow += std::pow(e, ell);
        row.scaledTracePow = tracePow / B;
        Converged cPow = assemble_converged(spec, Vpow, opts);
        row.scaledPowTrace = cPow.matrix.trace() / B;
        rows.push_back(row);
    }
    return rows;
}

void save_matrix(const ToeplitzMatrix& T, const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "matrix dump assumes a little-endian host");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_matrix: cannot open " + path);
    const double B = T.spec.B;
    const std::int64_t q = T.spec.q, mMin = T.range.mMin, mMax = T.range.mMax;
    out.write(reinterpret_cast<const char*>(&B), 8);
    out.write(reinterpret_cast<const char*>(&q), 8);
    out.write(reinterpret_cast<const char*>(&mMin), 8);
    out.write(reinterpret_cast<const char*>(&mMax), 8);
    const int n = T.range.count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = T.entries(i, j).real(), im = T.entries(i, j).imag();
            out.write(reinterpret_cast<const char*>(&re), 8);
            out.write(reinterpret_cast<const char*>(&im), 8);
        }
    if (!out) throw std::runtime_error("save_matrix: write failed on " + path);
}

ToeplitzMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_matrix: cannot open " + path);
    double B = 0.0;
    std::int64_t q = 0, mMin = 0, mMax = 0;
    in.read(reinterpret_cast<char*>(&B), 8);
    in.read(reinterpret_cast<char*>(&q), 8);
    in.read(reinterpret_cast<char*>(&mMin), 8);
    in.read(reinterpret_cast<char*>(&mMax), 8);
    if (!in) throw std::runtime_error("load_matrix: truncated header in " + path);
    ToeplitzMatrix T;
    T.spec = {B, static_cast<int>(q)};
    T.range = {static_cast<int>(mMin), static_cast<int>(mMax)};
    const int n = T.range.count();
    T.entries = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = 0.0, im = 0.0;
            in.read(reinterpret_cast<char*>(&re), 8);
            in.read(reinterpret_cast<char*>(&im), 8);
            T.entries(i, j) = {re, im};
        }
    if (!in) throw std::runtime_error("load_matrix: truncated data in " + path);
    return T;
}

} // namespace lc::landau
