#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lc/quadrature.hpp"

using namespace lc;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    for (int n : {2, 5, 16, 64}) {
        auto rule = quad::gauss_legendre(n);
        // degree 2n-1 monomial on [-1,1]
        const int d = 2 * n - 1;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], d);
        CHECK(std::abs(sum) < 1e-12); // odd degree
        double sumEven = 0.0;
        for (int i = 0; i < n; ++i)
            sumEven += rule.weights[i] * std::pow(rule.nodes[i], d - 1);
        CHECK(sumEven == doctest::Approx(2.0 / d).epsilon(1e-12));
    }
}

TEST_CASE("gauss-legendre mapped interval") {
    auto rule = quad::gauss_legendre(24, 0.0, 3.0);
    double sum = 0.0;
    for (int i = 0; i < rule.size(); ++i) sum += rule.weights[i] * std::exp(-rule.nodes[i]);
    CHECK(sum == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-13));
}

TEST_CASE("gauss-hermite normalizes the gaussian weight") {
    for (int n : {1, 8, 40, 160}) {
        auto rule = quad::gauss_hermite(n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += rule.weights[i];
        CHECK(sum == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    }
    // second moment: int x^2 e^{-x^2} = sqrt(pi)/2
    auto rule = quad::gauss_hermite(12);
    double sum = 0.0;
    for (int i = 0; i < 12; ++i) sum += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    CHECK(sum == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("gk15 panel on a smooth integrand") {
    double err = 0.0;
    double v = quad::gk15([](double x) { return std::cos(x); }, 0.0, 1.0, &err);
    CHECK(v == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    CHECK(err < 1e-10);
}

TEST_CASE("adaptive quadrature reaches the tolerance") {
    double v = quad::adaptive([](double x) { return 1.0 / (1.0 + x * x); }, -50.0, 50.0, 1e-11);
    CHECK(std::abs(v - 2.0 * std::atan(50.0)) < 1e-10);
}

TEST_CASE("adaptive quadrature signals an unreachable tolerance") {
    // |x|^{-1/2} near 0 with a absurd panel budget
    CHECK_THROWS_AS(quad::adaptive([](double x) { return 1.0 / std::sqrt(std::abs(x) + 1e-300); },
                                   0.0, 1.0, 1e-14, 8),
                    std::runtime_error);
}

TEST_CASE("line integral of a gaussian") {
    double v = quad::line_integral([](double t) { return std::exp(-t * t); }, 30.0, 1e-12);
    CHECK(v == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("line integral of a slowly decaying tail") {
    // int (1+t^2)^{-1} over [-T,T] with the huge windowed range
    double T = 1e6;
    double v = quad::line_integral([](double t) { return 1.0 / (1.0 + t * t); }, T, 1e-9);
    CHECK(std::abs(v - 2.0 * std::atan(T)) < 1e-8);
}

TEST_CASE("periodic trapezoid is spectrally accurate") {
    auto f = [](double th) { return std::exp(std::cos(th)); };
    double v = quad::trapezoid_periodic_adaptive(f, 1e-12);
    // 2 pi I_0(1)
    CHECK(v == doctest::Approx(2.0 * M_PI * 1.2660658777520084).epsilon(1e-12));
}
