#pragma once

#include <complex>
#include <vector>

#include "lc/parallel.hpp"

namespace lc::fft {

using cplx = std::complex<double>;

/// In-place radix-2 complex FFT, unnormalized (inverse carries no 1/n).
/// n must be a power of two.
void fft_inplace(cplx* data, int n, bool inverse);

/// In-place 2D FFT of an n x n row-major grid (rows, then columns).
/// The row and column passes are parallel over independent lines.
void fft2_inplace(cplx* data, int n, bool inverse, Exec mode = Exec::Par);

/// Continuum Fourier transform, unitary convention
///   fhat(zeta) = (2pi)^{-1} \int exp(-i x.zeta) f(x) dx  (d = 2),
/// discretized on the uniform grid x_j = -L + j (2L/n) with the frequency
/// grid zeta_k = (k - n/2) (pi/L). Grid is replaced by its transform.
/// n must be a power of two divisible by 4.
void forward_unitary_2d(std::vector<cplx>& grid, int n, double halfWidth,
                        Exec mode = Exec::Par);

/// Inverse of forward_unitary_2d (zeta grid back to the x grid).
void inverse_unitary_2d(std::vector<cplx>& grid, int n, double halfWidth,
                        Exec mode = Exec::Par);

} // namespace lc::fft
