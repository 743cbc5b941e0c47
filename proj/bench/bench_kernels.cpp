// Wall-clock comparison of the OpenMP kernels against their serial
// reference paths. Build target only; not part of the test suite.

#include <complex>
#include <cstdio>
#include <vector>

#include "lc/fft.hpp"
#include "lc/landau.hpp"
#include "lc/parallel.hpp"
#include "lc/potential.hpp"
#include "lc/radon.hpp"
#include "lc/symbols.hpp"

using lc::Exec;

namespace {

template <class F>
double time_once(const F& f) {
    const double t0 = lc::wall_time();
    f();
    return lc::wall_time() - t0;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.1f ms   omp %8.1f ms   speedup %.2fx\n", name, serial * 1e3,
                parallel * 1e3, parallel > 0.0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("threads: %d\n", lc::max_threads());

    {
        const lc::Potential V = lc::Potential::gaussian(1.0, 1.0, {0.7, -0.3});
        lc::landau::LandauSpec spec{1.0, 24};
        lc::landau::BasisRange range{-spec.q, 4 * spec.q + 64};
        auto qs = lc::landau::QuadratureSpec::recommended(spec, range, V);
        double s = time_once([&] { lc::landau::assemble(spec, V, range, qs, Exec::Serial); });
        double p = time_once([&] { lc::landau::assemble(spec, V, range, qs, Exec::Par); });
        report("toeplitz assemble q=24", s, p);
    }
    {
        const lc::Potential V = lc::Potential::gaussian(1.0, 1.0, {0.5, 0.0});
        double s = time_once([&] { lc::radon::make_profile(V, 32, 128, 6.0, Exec::Serial); });
        double p = time_once([&] { lc::radon::make_profile(V, 32, 128, 6.0, Exec::Par); });
        report("radon profile 32x128", s, p);
    }
    {
        const int n = 1024;
        std::vector<std::complex<double>> grid(static_cast<std::size_t>(n) * n);
        for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = {std::sin(0.001 * i), 0.0};
        auto copy = grid;
        double s = time_once([&] { lc::fft::fft2_inplace(copy.data(), n, false, Exec::Serial); });
        copy = grid;
        double p = time_once([&] { lc::fft::fft2_inplace(copy.data(), n, false, Exec::Par); });
        report("fft2 1024x1024", s, p);
    }
    {
        const lc::Potential V = lc::Potential::gaussian(1.0, 1.0);
        lc::symbols::GridParams gp{24.0, 1024};
        double s = time_once([&] { lc::symbols::symbol_sq(V, 1.0, 16, gp, Exec::Serial); });
        double p = time_once([&] { lc::symbols::symbol_sq(V, 1.0, 16, gp, Exec::Par); });
        report("symbol s_q grid 1024", s, p);
    }
    return 0;
}
