#pragma once

#include <span>

namespace lc::specfun {

/// Laguerre polynomial L_q(x), forward three-term recurrence.
double laguerre(int q, double x);

/// exp(-x/2) L_q(x). The weight is carried through the recurrence, so the
/// value stays in [-1,1] for x >= 0 at any degree.
double laguerre_weighted(int q, double x);

/// Generalized Laguerre polynomial L_q^{(alpha)}(x), alpha > -1.
double glaguerre(int q, double alpha, double x);

/// Hermite polynomial H_q(x) (physicists' convention).
double hermite_poly(int q, double x);

/// Normalized oscillator eigenfunction
///   phi_q(x) = H_q(x) exp(-x^2/2) / sqrt(sqrt(pi) 2^q q!),
/// evaluated through the orthonormal recurrence (no overflow for
/// q <= 500, |x| <= 60; values below the double range underflow to 0).
double hermite_fn(int q, double x);

/// Orthonormal Laguerre function
///   f_n^{(alpha)}(u) = sqrt(n!/(n+alpha)!) u^{alpha/2} exp(-u/2) L_n^{(alpha)}(u),
/// orthonormal on (0,inf) with respect to du. Integer alpha >= 0.
double laguerre_orthonormal(int n, int alpha, double u);

/// f_n^{(alpha)} at a batch of points (one recurrence per point).
void laguerre_orthonormal_batch(int n, int alpha, std::span<const double> u,
                                std::span<double> out);

/// Bessel J0. Power series with compensated (double-double) accumulation
/// below the crossover, Hankel asymptotic expansion above; absolute error
/// <= 1e-12 over [0, inf).
double bessel_j0(double x);

/// Bessel Y0, same scheme. Throws std::domain_error for x <= 0.
double bessel_y0(double x);

/// Wigner function of the q-th oscillator eigenstate:
///   Psi_q(x,xi) = ((-1)^q/pi) L_q(2(x^2+xi^2)) exp(-(x^2+xi^2)).
double wigner_psi(int q, double x, double xi);

struct GapBound {
    double gap;   // |exp(-x/2) L_q(x) - J0(sqrt((4q+2)x))|
    double bound; // q^{-3/4} x^{5/4} + q^{-1} x^3
};

/// Uniform Laguerre-vs-Bessel comparison; the quotient gap/bound stays
/// bounded over the (q,x) range of interest.
GapBound laguerre_bessel_gap(int q, double x);

/// Max-norm residual of the self-reproducing Fourier identity of Psi_q:
/// the unitary FFT of Psi_q on [-L,L]^2 against (-1)^q Psi_q(zeta/2)/2 on
/// the grid. size must be a power of two; throws std::invalid_argument if
/// |Psi_q| at the grid boundary exceeds the decay floor.
double wigner_fourier_residual(int q, double halfWidth, int size);

} // namespace lc::specfun
