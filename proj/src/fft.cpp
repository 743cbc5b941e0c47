#include "lc/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lc::fft {

namespace {

std::mutex g_twiddleMutex;
std::map<int, std::vector<cplx>> g_twiddleCache;

// Forward twiddles exp(-2*pi*i*k/n), k < n/2.
const std::vector<cplx>& twiddles(int n) {
    std::lock_guard<std::mutex> lock(g_twiddleMutex);
    auto it = g_twiddleCache.find(n);
    if (it != g_twiddleCache.end()) return it->second;
    std::vector<cplx> tw(n / 2);
    for (int k = 0; k < n / 2; ++k) {
        const double a = -2.0 * M_PI * k / n;
        tw[k] = {std::cos(a), std::sin(a)};
    }
    return g_twiddleCache.emplace(n, std::move(tw)).first->second;
}

void check_pow2(int n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: size must be a power of two >= 2");
}

} // namespace

void fft_inplace(cplx* data, int n, bool inverse) {
    check_pow2(n);
    // bit reversal
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    const std::vector<cplx>& tw = twiddles(n);
    for (int len = 2; len <= n; len <<= 1) {
        const int step = n / len;
        for (int i = 0; i < n; i += len) {
            for (int k = 0; k < len / 2; ++k) {
                cplx w = tw[static_cast<std::size_t>(k) * step];
                if (inverse) w = std::conj(w);
                cplx u = data[i + k];
                cplx v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

void fft2_inplace(cplx* data, int n, bool inverse, Exec mode) {
    check_pow2(n);
    twiddles(n); // warm the cache outside the parallel region
    parallel_for(mode, n, [&](std::int64_t row) {
        fft_inplace(data + row * n, n, inverse);
    });
    parallel_for(mode, n, [&](std::int64_t col) {
        std::vector<cplx> tmp(n);
        for (int row = 0; row < n; ++row) tmp[row] = data[static_cast<std::size_t>(row) * n + col];
        fft_inplace(tmp.data(), n, inverse);
        for (int row = 0; row < n; ++row) data[static_cast<std::size_t>(row) * n + col] = tmp[row];
    });
}

namespace {

// Centered grids: x_j = -L + j h pairs with zeta_k = (k - n/2) dz, which is
// a plain DFT after (-1)^{j1+j2} pre- and (-1)^{k1+k2} post-modulation
// (the leftover phase exp(-i n pi/2) is 1 for n divisible by 4).
void checker_sign(std::vector<cplx>& grid, int n) {
    for (int j = 0; j < n; ++j)
        for (int i = (j & 1) ? 0 : 1; i < n; i += 2)
            grid[static_cast<std::size_t>(j) * n + i] = -grid[static_cast<std::size_t>(j) * n + i];
}

} // namespace

void forward_unitary_2d(std::vector<cplx>& grid, int n, double halfWidth, Exec mode) {
    if (n % 4 != 0) throw std::invalid_argument("forward_unitary_2d: n must be divisible by 4");
    if (grid.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("forward_unitary_2d: grid size mismatch");
    const double h = 2.0 * halfWidth / n;
    const double scale = h * h / (2.0 * M_PI);
    checker_sign(grid, n);
    fft2_inplace(grid.data(), n, /*inverse=*/false, mode);
    checker_sign(grid, n);
    for (auto& v : grid) v *= scale;
}

void inverse_unitary_2d(std::vector<cplx>& grid, int n, double halfWidth, Exec mode) {
    if (n % 4 != 0) throw std::invalid_argument("inverse_unitary_2d: n must be divisible by 4");
    if (grid.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("inverse_unitary_2d: grid size mismatch");
    const double dz = M_PI / halfWidth;
    const double scale = dz * dz / (2.0 * M_PI);
    checker_sign(grid, n);
    fft2_inplace(grid.data(), n, /*inverse=*/true, mode);
    checker_sign(grid, n);
    for (auto& v : grid) v *= scale;
}

} // namespace lc::fft
