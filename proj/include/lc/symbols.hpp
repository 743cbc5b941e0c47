#pragma once

#include <complex>
#include <vector>

#include "lc/parallel.hpp"
#include "lc/potential.hpp"

namespace lc::symbols {

/// Uniform phase-space grid on [-L,L]^2 carrying a real symbol and its
/// unitary Fourier transform on the dual grid zeta_k = (k - n/2) pi/L.
struct SymbolGrid {
    double halfWidth = 0.0;
    int size = 0;
    std::vector<double> values;                 // row-major n x n
    std::vector<std::complex<double>> fourier;  // same layout, centered

    double h() const { return 2.0 * halfWidth / size; }
    double dzeta() const { return M_PI / halfWidth; }
    double x(int j) const { return -halfWidth + j * h(); }
    double zeta(int k) const { return (k - size / 2) * dzeta(); }
    double value(int j, int i) const { return values[static_cast<std::size_t>(j) * size + i]; }

    /// relative mismatch of the grid Parseval identity
    double parseval_gap() const;
    /// fraction of Fourier energy in the outermost two frequency shells
    double nyquist_shell_fraction() const;
};

struct GridParams {
    double halfWidth = 0.0;
    int size = 0;
};

/// halfWidth covering both the rescaled potential support and the radius
/// sqrt(2q+1) wave zone; size resolving the Laguerre-Gauss multiplier.
GridParams recommended_grid(const Potential& V, double B, int q);

/// V_B(x,y) = V(-y/sqrt(B), -x/sqrt(B)) sampled with Fourier data.
SymbolGrid vb_symbol(const Potential& V, double B, GridParams gp, Exec mode = Exec::Par);

/// max_j |Vhat_B(zeta_j) - B Vhat_1(sqrt(B) zeta_j)| at sampled frequencies
/// (the Fourier scaling law of the B-rescaling), via direct sums.
double vb_scaling_residual(const Potential& V, double B, GridParams gp, int samples = 10);

/// s_q = V_B * Psi_q via the Fourier-side Laguerre-Gauss multiplier.
/// Throws std::runtime_error when the Nyquist shell of the multiplied
/// transform carries visible energy (aliasing).
SymbolGrid symbol_sq(const Potential& V, double B, int q, GridParams gp, Exec mode = Exec::Par);

/// t_k = V_B * delta_k via the Fourier-side J0(k|zeta|) multiplier.
SymbolGrid symbol_tk(const Potential& V, double B, double k, GridParams gp,
                     Exec mode = Exec::Par);

/// t_k at a point by the exact angular average of V_B over the circle of
/// radius k (no grid truncation; suited to slowly decaying potentials).
double tk_point(const Potential& V, double B, double k, Vec2 z, double absTol = 1e-11);

struct GapNorms {
    double l1FourierGap = 0.0; // (2pi)^{-1} ||shat_q - that_k||_{L1 grid}, k = sqrt(2q+1)
    double l2Gap = 0.0;        // Hilbert-Schmidt norm of the symbol difference
    double scaledOp = 0.0;     // lambda_q^{3/4} B^{-1} l1FourierGap
    double scaledHS = 0.0;     // lambda_q^{3/4} B^{-1} l2Gap
};

GapNorms symbol_gap_norms(const Potential& V, double B, int q, GridParams gp = {});

struct DeltaSupRow {
    double k = 0.0;
    double scaledSup = 0.0;    // k B^{-1/2} sup_z t_k(z)
    double argmaxRadius = 0.0; // |z| where the sup is attained
};

/// Uniform bound scan for V = <x>^{-rho}: the row values stay bounded in k
/// and the sup concentrates near the ring |z| = k.
std::vector<DeltaSupRow> delta_conv_sup(double rho, double B, const std::vector<double>& kList,
                                        Exec mode = Exec::Par);

/// Tr (Op(t_k))^2 = (2pi)^{-1} ||t_k||^2 on the frequency grid; the
/// independent second-moment oracle.
double hs_trace_oracle(const Potential& V, double B, double k, GridParams gp = {});

} // namespace lc::symbols
