#pragma once

#include <string>
#include <vector>

namespace lc {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

/// Decaying electric potential on the plane: a symbolic family descriptor
/// with a declared decay exponent rho > 1 and the weighted sup norm
/// sup <x>^rho |V| attached. Evaluable pointwise; the envelope
/// |V(x)| <= xRhoNorm <x>^{-rho} holds on a validation grid.
class Potential {
public:
    enum class Family { Zero, Gaussian, PowerDecay, RadialTable, AngularFourierRadial, GridSampled };

    struct Harmonic {
        int k = 0;          // angular wavenumber
        double amplitude = 1.0;
        double width = 1.0; // Gaussian radial envelope exp(-(r/width)^2)
        double phase = 0.0;
    };

    static Potential zero();
    /// amplitude * exp(-|x-center|^2 / width^2)
    static Potential gaussian(double amplitude, double width, Vec2 center = {0.0, 0.0},
                              double rho = 4.0);
    /// <x>^{-rho}
    static Potential power_decay(double rho);
    /// radial interpolation table, <x>^{-rho} continuation past the last node
    static Potential radial_table(std::vector<double> r, std::vector<double> v, double rho);
    /// sum_j amp_j exp(-(r/width_j)^2) cos(k_j theta + phase_j)
    static Potential angular_fourier(std::vector<Harmonic> harmonics, double rho = 4.0);
    /// bilinear interpolation of an n x n table on [-L,L]^2, zero outside
    static Potential grid_sampled(int n, double halfWidth, std::vector<double> values,
                                  double rho);

    double operator()(double x, double y) const;
    double operator()(Vec2 p) const { return (*this)(p.x, p.y); }

    Family family() const { return family_; }
    double rho() const { return rho_; }
    double x_rho_norm() const { return xRhoNorm_; }
    bool is_zero() const;
    bool is_radial() const;
    /// true when \int |V| over the plane is finite
    bool is_integrable() const;
    /// radial families only
    double radial_value(double r) const;
    /// pointwise V^ell; closed under powers for zero/gaussian/powerDecay
    Potential pointwise_power(int ell) const;
    /// T so that the tail of \int_{|t|>T} V(b omega + t omega_perp) dt is < absTol
    double line_truncation(double b, double absTol) const;
    /// radius beyond which |V| < eps (from the decay envelope)
    double support_radius(double eps) const;
    /// \int_{R^2} V dx by polar quadrature; throws std::domain_error when
    /// not integrable. rMin carves out an inner disk (used by trace tails).
    double integral_2d(double absTol, double rMin = 0.0) const;
    /// (1/2pi) \int_0^{2pi} V(r cos, r sin) dtheta
    double angular_average(double r, double absTol = 1e-11) const;
    /// max over a dense polar validation grid of |V| <x>^rho / xRhoNorm - 1
    /// (positive values mean the declared envelope is violated)
    double envelope_violation(int radialSamples = 200, int angularSamples = 64) const;

    std::string describe() const;

private:
    Potential() = default;

    Family family_ = Family::Zero;
    double rho_ = 4.0;
    double xRhoNorm_ = 0.0;
    // gaussian
    double amplitude_ = 0.0, width_ = 1.0;
    Vec2 center_{};
    // tables
    std::vector<double> tableR_, tableV_;
    std::vector<Harmonic> harmonics_;
    int gridN_ = 0;
    double gridHalfWidth_ = 0.0;
    std::vector<double> gridValues_;

    void estimate_norm();
};

} // namespace lc
