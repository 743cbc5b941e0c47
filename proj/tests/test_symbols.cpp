#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "lc/quadrature.hpp"
#include "lc/symbols.hpp"

using namespace lc;
namespace sy = lc::symbols;

namespace {
const Potential kGauss = Potential::gaussian(1.0, 1.0);
}

TEST_CASE("rescaled symbol samples the reflected coordinates") {
    const Potential g = Potential::gaussian(1.0, 1.0, {0.5, -0.2});
    sy::GridParams gp{10.0, 64};
    auto vb = sy::vb_symbol(g, 1.0, gp);
    for (int j : {3, 17, 40})
        for (int i : {5, 22, 60}) {
            const double x = vb.x(j), y = vb.x(i);
            CHECK(vb.value(j, i) == doctest::Approx(g(-y, -x)).epsilon(1e-14));
        }
}

TEST_CASE("radial potential gives radial symbol and fourier data") {
    sy::GridParams gp{12.0, 128};
    auto vb = sy::vb_symbol(kGauss, 2.0, gp);
    const int n = gp.size;
    // compare the two axes through the center
    for (int d = 1; d < n / 2; ++d) {
        CHECK(vb.value(n / 2 + d, n / 2) == doctest::Approx(vb.value(n / 2, n / 2 + d)));
        const auto fa = vb.fourier[static_cast<std::size_t>(n / 2 + d) * n + n / 2];
        const auto fb = vb.fourier[static_cast<std::size_t>(n / 2) * n + n / 2 + d];
        CHECK(std::abs(fa - fb) < 1e-12);
    }
}

TEST_CASE("zero potential gives zero grids") {
    sy::GridParams gp{8.0, 64};
    auto vb = sy::vb_symbol(Potential::zero(), 1.0, gp);
    for (double v : vb.values) CHECK(v == 0.0);
    auto s = sy::symbol_sq(Potential::zero(), 1.0, 3, gp);
    for (double v : s.values) CHECK(v == 0.0);
    CHECK(sy::hs_trace_oracle(Potential::zero(), 1.0, 2.0, gp) == 0.0);
}

TEST_CASE("real symbols have conjugate-symmetric fourier data") {
    const Potential g = Potential::gaussian(1.0, 1.0, {0.6, 0.1});
    sy::GridParams gp{12.0, 64};
    auto vb = sy::vb_symbol(g, 1.0, gp);
    const int n = gp.size;
    for (int j : {1, 9, 31})
        for (int i : {2, 17, 50}) {
            const auto a = vb.fourier[static_cast<std::size_t>(j) * n + i];
            const auto b = vb.fourier[static_cast<std::size_t>(n - j) * n + (n - i)];
            CHECK(std::abs(a - std::conj(b)) < 1e-12);
        }
}

TEST_CASE("parseval holds on symbol grids") {
    sy::GridParams gp{14.0, 256};
    for (double B : {1.0, 3.0}) {
        auto vb = sy::vb_symbol(kGauss, B, gp);
        CHECK(vb.parseval_gap() < 1e-10);
        auto s = sy::symbol_sq(kGauss, B, 4, gp);
        CHECK(s.parseval_gap() < 1e-10);
    }
}

TEST_CASE("fourier scaling law of the rescaling") {
    sy::GridParams gp{16.0, 128};
    CHECK(sy::vb_scaling_residual(kGauss, 4.0, gp, 6) < 1e-8);
}

TEST_CASE("parallel symbol construction equals serial bitwise") {
    sy::GridParams gp{12.0, 128};
    auto a = sy::symbol_sq(kGauss, 1.0, 5, gp, Exec::Serial);
    auto b = sy::symbol_sq(kGauss, 1.0, 5, gp, Exec::Par);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("lowest symbol is the gaussian blur") {
    // s_0 = V_B * Psi_0 with Psi_0 = exp(-|w|^2)/pi: direct 2D quadrature
    // via gauss-hermite against the fourier route at sampled points
    const double B = 1.0;
    sy::GridParams gp{14.0, 256};
    auto s0 = sy::symbol_sq(kGauss, B, 0, gp);
    auto rule = quad::gauss_hermite(48);
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> pick(gp.size / 4, 3 * gp.size / 4);
    for (int trial = 0; trial < 10; ++trial) {
        const int j = pick(rng), i = pick(rng);
        const double z1 = s0.x(j), z2 = s0.x(i);
        double direct = 0.0;
        for (int a = 0; a < rule.size(); ++a)
            for (int b = 0; b < rule.size(); ++b) {
                const double w1 = rule.nodes[a], w2 = rule.nodes[b];
                // V_B(z - w) = V(-(z2-w2), -(z1-w1)) at B=1
                direct += rule.weights[a] * rule.weights[b] *
                          kGauss(-(z2 - w2), -(z1 - w1));
            }
        direct /= M_PI;
        CHECK(std::abs(s0.value(j, i) - direct) < 1e-7);
    }
}

TEST_CASE("ring average at the origin for the gaussian") {
    // t_k(0) = exp(-k^2/B) for V = exp(-r^2)
    for (double B : {1.0, 2.0}) {
        for (double k : {0.5, 1.0, 2.0}) {
            CHECK(sy::tk_point(kGauss, B, k, {0.0, 0.0}) ==
                  doctest::Approx(std::exp(-k * k / B)).epsilon(1e-9));
        }
    }
    // the fourier route agrees on the grid
    sy::GridParams gp{14.0, 256};
    auto tk = sy::symbol_tk(kGauss, 1.0, 1.5, gp);
    const int c = gp.size / 2;
    CHECK(tk.value(c, c) == doctest::Approx(std::exp(-2.25)).epsilon(1e-7));
}

TEST_CASE("ring average is even for even symbols") {
    sy::GridParams gp{14.0, 128};
    auto tk = sy::symbol_tk(kGauss, 1.0, 2.0, gp);
    const int n = gp.size;
    for (int d = 1; d < 30; ++d) {
        CHECK(tk.value(n / 2 + d, n / 2) == doctest::Approx(tk.value(n / 2 - d, n / 2)).epsilon(1e-10));
    }
}

TEST_CASE("an unresolved multiplier trips the alias guard") {
    // q = 40 puts the Laguerre-Gauss multiplier out to |zeta| ~ 18, far past
    // the Nyquist radius of this coarse grid
    sy::GridParams gp{22.0, 64};
    CHECK_THROWS_AS(sy::symbol_sq(kGauss, 1.0, 40, gp), std::runtime_error);
}

TEST_CASE("symbol gap norms stay bounded under the level sweep") {
    // unit-scale check at two levels; the long sweep lives in acceptance
    auto g4 = sy::symbol_gap_norms(kGauss, 1.0, 4);
    auto g16 = sy::symbol_gap_norms(kGauss, 1.0, 16);
    CHECK(g4.l1FourierGap > 0.0);
    CHECK(std::isfinite(g4.scaledOp));
    CHECK(g16.scaledOp < 4.0 * g4.scaledOp);
    CHECK(g16.scaledHS < 4.0 * g4.scaledHS);
    auto z = sy::symbol_gap_norms(Potential::zero(), 1.0, 4, sy::GridParams{10.0, 64});
    CHECK(z.l1FourierGap == 0.0);
    CHECK(z.l2Gap == 0.0);
}

TEST_CASE("ring-average sup scan") {
    // k -> 0: sup t_k -> V_B(0) = 1
    auto rows = sy::delta_conv_sup(2.0, 1.0, {1e-4});
    CHECK(rows[0].scaledSup == doctest::Approx(1e-4).epsilon(1e-3)); // k * sup, sup ~ 1
    // sup near the ring radius
    auto r4 = sy::delta_conv_sup(2.0, 1.0, {4.0});
    CHECK(std::abs(r4[0].argmaxRadius - 4.0) / 4.0 < 0.15);
    CHECK(std::isfinite(r4[0].scaledSup));
}

TEST_CASE("hs trace oracle approaches the compressed-potential second moment") {
    // lambda_q^{1/2} * oracle -> gamma_2; at q=16 already within ~15%
    const double gamma2 = 0.099735570100358169485;
    const int q = 16;
    const double k = std::sqrt(2.0 * q + 1.0);
    const double lambda = 2.0 * q + 1.0;
    const double oracle = sy::hs_trace_oracle(kGauss, 1.0, k);
    CHECK(std::abs(std::sqrt(lambda) * oracle - gamma2) / gamma2 < 0.15);
}
