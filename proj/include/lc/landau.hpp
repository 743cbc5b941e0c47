#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "lc/parallel.hpp"
#include "lc/potential.hpp"

namespace lc::landau {

struct LandauSpec {
    double B = 1.0; // field strength > 0
    int q = 0;      // level index >= 0
    double lambda() const { return B * (2.0 * q + 1.0); }
};

/// Angular momentum window [mMin, mMax] in the symmetric gauge; the level-q
/// eigenspace carries m >= -q.
struct BasisRange {
    int mMin = 0, mMax = 0;
    int count() const { return mMax - mMin + 1; }
};

struct QuadratureSpec {
    int radialNodes = 0;
    int angularNodes = 0; // power of two; trapezoid/FFT length in theta
    double uMax = 0.0;    // Gauss-Legendre box in u = B r^2 / 2
    double tolerance = 1e-10;
    bool forceGeneralPath = false; // bypass the radial diagonal shortcut

    static QuadratureSpec recommended(const LandauSpec& spec, const BasisRange& range,
                                      const Potential& V);
};

struct ToeplitzMatrix {
    LandauSpec spec;
    BasisRange range;
    Eigen::MatrixXcd entries; // Hermitian, count x count
    double assemblyTolerance = 0.0;
    bool diagonalFastPath = false;

    double trace() const;
    double frobenius_sq() const; // sum |entry|^2 = sum eig^2
};

/// psi_{q,m}(r,theta) in the symmetric gauge: the normalized angular
/// momentum eigenfunction of the level (Laguerre radial profile, weight
/// folded in). Throws std::invalid_argument for m < -q.
std::complex<double> basis_eval(const LandauSpec& spec, int m, double r, double theta);

/// <psi_{q,mi}, V psi_{q,mj}> by tensor quadrature (Gauss-Legendre in
/// u = B r^2/2, trapezoid/FFT in theta). Radial potentials take a
/// diagonal-only path unless forceGeneralPath is set; a radial potential
/// pushed through the general path must come out diagonal to
/// assemblyTolerance (enforced).
ToeplitzMatrix assemble(const LandauSpec& spec, const Potential& V, const BasisRange& range,
                        const QuadratureSpec& quad, Exec mode = Exec::Par);

/// Real spectrum, descending by absolute value.
std::vector<double> eigenvalues(const ToeplitzMatrix& T);

struct ConvergeOptions {
    double tol = 1e-8;       // per-eigenvalue stability at cutoff doubling
    int maxDoublings = 5;
    int initialMargin = 64;  // first cutoff is mMax = 4q + initialMargin
    bool forceGeneralPath = false;
    // also demand a trace change below tol at the accepted doubling
    // (integrable V only; the sum converges much more slowly than the top
    // of the spectrum when the field is strong)
    bool requireTraceConverged = false;
};

struct Converged {
    ToeplitzMatrix matrix;
    std::vector<double> eigs; // descending |.|
    bool cutoffConverged = false;
    double eigMove = 0.0;    // worst retained-eigenvalue move at the last doubling
    double traceDelta = 0.0; // relative trace change (integrable V only, else NaN)
    double frobDelta = 0.0;  // relative Frobenius^2 change
};

/// Assemble at mMax = 4q + margin and double the cutoff until no retained
/// eigenvalue moves by more than tol * max|eig|.
Converged assemble_converged(const LandauSpec& spec, const Potential& V,
                             ConvergeOptions opts = {}, Exec mode = Exec::Par);

double toeplitz_trace(const ToeplitzMatrix& T);

/// |Tr(P_q V P_q) - (B/2pi) Int V| with the integral by independent polar
/// quadrature. Requires integrable V. For slowly decaying potentials the
/// angular tail of the truncated trace is folded back in through the
/// level-kernel complement (see level_kernel_partial); the comparison then
/// runs two independent numerical routes to the same identity.
double trace_identity_residual(const ToeplitzMatrix& T, const Potential& V, double absTol = 1e-8);

/// kappa_{q,M}(u) = sum_{m=-q}^{M} f_{n(m)}^{(|m|)}(u)^2; increases to 1
/// as M -> inf for every u (flat level density).
double level_kernel_partial(const LandauSpec& spec, int mMax, double u);

struct ScalingRow {
    int q = 0;
    double value = 0.0;
    bool converged = false;
};

/// rows of lambda_q^{1/2} B^{-1} ||P_q V P_q|| at converged cutoffs.
std::vector<ScalingRow> norm_scaling_table(const Potential& V, double B,
                                           const std::vector<int>& qList,
                                           ConvergeOptions opts = {});

/// rows of lambda_q^{(ell-1)/(2 ell)} B^{-1} ||P_q V P_q||_ell. Requires
/// ell > 1/(rho-1).
std::vector<ScalingRow> schatten_scaling_table(const Potential& V, double B, double ell,
                                               const std::vector<int>& qList,
                                               ConvergeOptions opts = {});

struct StrongFieldRow {
    double B = 0.0;
    double scaledTracePow = 0.0; // B^{-1} Tr (P_q V P_q)^ell
    double scaledPowTrace = 0.0; // B^{-1} Tr (P_q V^ell P_q)
    double integral = 0.0;       // (1/2pi) Int V^ell
};

std::vector<StrongFieldRow> strong_field_check(const Potential& V, int q, int ell,
                                               const std::vector<double>& Blist,
                                               ConvergeOptions opts = {});

/// Binary dump: header (B, q, mMin, mMax as 64-bit little-endian fields),
/// then row-major complex entries as little-endian 64-bit float pairs.
void save_matrix(const ToeplitzMatrix& T, const std::string& path);
ToeplitzMatrix load_matrix(const std::string& path);

} // namespace lc::landau
