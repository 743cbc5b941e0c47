#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lc/fft.hpp"

using namespace lc;
using cplx = std::complex<double>;

TEST_CASE("fft matches the direct dft") {
    const int n = 16;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> us(-1.0, 1.0);
    std::vector<cplx> data(n);
    for (auto& v : data) v = {us(rng), us(rng)};
    auto direct = [&](int k) {
        cplx sum = 0.0;
        for (int j = 0; j < n; ++j)
            sum += data[j] * std::polar(1.0, -2.0 * M_PI * j * k / n);
        return sum;
    };
    std::vector<cplx> expect(n);
    for (int k = 0; k < n; ++k) expect[k] = direct(k);
    auto work = data;
    fft::fft_inplace(work.data(), n, false);
    for (int k = 0; k < n; ++k) CHECK(std::abs(work[k] - expect[k]) < 1e-12);
}

TEST_CASE("fft roundtrip") {
    const int n = 256;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> us(-1.0, 1.0);
    std::vector<cplx> data(n);
    for (auto& v : data) v = {us(rng), us(rng)};
    auto work = data;
    fft::fft_inplace(work.data(), n, false);
    fft::fft_inplace(work.data(), n, true);
    for (int k = 0; k < n; ++k) CHECK(std::abs(work[k] / static_cast<double>(n) - data[k]) < 1e-13);
}

TEST_CASE("fft2 parallel equals serial bitwise") {
    const int n = 64;
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> us(-1.0, 1.0);
    std::vector<cplx> a(static_cast<std::size_t>(n) * n);
    for (auto& v : a) v = {us(rng), us(rng)};
    auto b = a;
    fft::fft2_inplace(a.data(), n, false, Exec::Serial);
    fft::fft2_inplace(b.data(), n, false, Exec::Par);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].real() == b[i].real());
        CHECK(a[i].imag() == b[i].imag());
    }
}

TEST_CASE("unitary transform of a gaussian is a gaussian") {
    // f = exp(-|x|^2/2) has unitary transform exp(-|zeta|^2/2) (d=2 keeps it fixed)
    const int n = 128;
    const double L = 10.0;
    std::vector<cplx> grid(static_cast<std::size_t>(n) * n);
    const double h = 2.0 * L / n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double x = -L + j * h, y = -L + i * h;
            grid[static_cast<std::size_t>(j) * n + i] = std::exp(-0.5 * (x * x + y * y));
        }
    auto fourier = grid;
    fft::forward_unitary_2d(fourier, n, L);
    const double dz = M_PI / L;
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double z1 = (j - n / 2) * dz, z2 = (i - n / 2) * dz;
            const double expected = std::exp(-0.5 * (z1 * z1 + z2 * z2));
            worst = std::max(worst,
                             std::abs(fourier[static_cast<std::size_t>(j) * n + i] - expected));
        }
    CHECK(worst < 1e-12);

    // and back
    fft::inverse_unitary_2d(fourier, n, L);
    worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(fourier[i] - grid[i]));
    CHECK(worst < 1e-12);
}

TEST_CASE("grid parseval") {
    const int n = 64;
    const double L = 7.0;
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> us(-1.0, 1.0);
    std::vector<cplx> grid(static_cast<std::size_t>(n) * n);
    for (auto& v : grid) v = us(rng);
    double normX = 0.0;
    for (const auto& v : grid) normX += std::norm(v);
    const double h = 2.0 * L / n;
    normX *= h * h;
    auto fourier = grid;
    fft::forward_unitary_2d(fourier, n, L);
    double normZ = 0.0;
    for (const auto& v : fourier) normZ += std::norm(v);
    const double dz = M_PI / L;
    normZ *= dz * dz;
    CHECK(normX == doctest::Approx(normZ).epsilon(1e-12));
}
