#include "lc/potential.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <stdexcept>

#include "lc/quadrature.hpp"

namespace lc {

namespace {
double bracket(double v) { return std::sqrt(1.0 + v * v); } // <x> for scalar radius
}

Potential Potential::zero() {
    Potential p;
    p.family_ = Family::Zero;
    p.rho_ = 4.0;
    p.xRhoNorm_ = 0.0;
    return p;
}

Potential Potential::gaussian(double amplitude, double width, Vec2 center, double rho) {
    if (width <= 0.0) throw std::invalid_argument("Potential::gaussian: width must be > 0");
    if (rho <= 1.0) throw std::invalid_argument("Potential: rho must be > 1");
    if (amplitude == 0.0) return zero();
    Potential p;
    p.family_ = Family::Gaussian;
    p.amplitude_ = amplitude;
    p.width_ = width;
    p.center_ = center;
    p.rho_ = rho;
    p.estimate_norm();
    return p;
}

Potential Potential::power_decay(double rho) {
    if (rho <= 1.0) throw std::invalid_argument("Potential: rho must be > 1");
    Potential p;
    p.family_ = Family::PowerDecay;
    p.rho_ = rho;
    p.xRhoNorm_ = 1.0; // sup <x>^rho <x>^{-rho}
    return p;
}

Potential Potential::radial_table(std::vector<double> r, std::vector<double> v, double rho) {
    if (r.size() != v.size() || r.size() < 2)
        throw std::invalid_argument("Potential::radial_table: need matching node/value lists");
    if (!std::is_sorted(r.begin(), r.end()))
        throw std::invalid_argument("Potential::radial_table: nodes must be sorted");
    if (r.front() != 0.0)
        throw std::invalid_argument("Potential::radial_table: first node must be r = 0");
    if (rho <= 1.0) throw std::invalid_argument("Potential: rho must be > 1");
    Potential p;
    p.family_ = Family::RadialTable;
    p.tableR_ = std::move(r);
    p.tableV_ = std::move(v);
    p.rho_ = rho;
    p.estimate_norm();
    return p;
}

Potential Potential::angular_fourier(std::vector<Harmonic> harmonics, double rho) {
    if (harmonics.empty()) return zero();
    if (rho <= 1.0) throw std::invalid_argument("Potential: rho must be > 1");
    Potential p;
    p.family_ = Family::AngularFourierRadial;
    p.harmonics_ = std::move(harmonics);
    p.rho_ = rho;
    p.estimate_norm();
    return p;
}

Potential Potential::grid_sampled(int n, double halfWidth, std::vector<double> values, double rho) {
    if (n < 2 || values.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("Potential::grid_sampled: bad table size");
    if (halfWidth <= 0.0) throw std::invalid_argument("Potential::grid_sampled: bad halfWidth");
    if (rho <= 1.0) throw std::invalid_argument("Potential: rho must be > 1");
    Potential p;
    p.family_ = Family::GridSampled;
    p.gridN_ = n;
    p.gridHalfWidth_ = halfWidth;
    p.gridValues_ = std::move(values);
    p.rho_ = rho;
    p.estimate_norm();
    return p;
}

double Potential::operator()(double x, double y) const {
    switch (family_) {
        case Family::Zero:
            return 0.0;
        case Family::Gaussian: {
            const double dx = x - center_.x, dy = y - center_.y;
            return amplitude_ * std::exp(-(dx * dx + dy * dy) / (width_ * width_));
        }
        case Family::PowerDecay:
            return std::pow(1.0 + x * x + y * y, -0.5 * rho_);
        case Family::RadialTable:
            return radial_value(std::hypot(x, y));
        case Family::AngularFourierRadial: {
            const double r = std::hypot(x, y);
            const double th = std::atan2(y, x);
            double sum = 0.0;
            for (const auto& h : harmonics_) {
                const double s = r / h.width;
                sum += h.amplitude * std::exp(-s * s) * std::cos(h.k * th + h.phase);
            }
            return sum;
        }
        case Family::GridSampled: {
            const double L = gridHalfWidth_;
            if (x <= -L || x >= L || y <= -L || y >= L) return 0.0;
            const double h = 2.0 * L / (gridN_ - 1);
            const double fx = (x + L) / h, fy = (y + L) / h;
            int ix = std::min(static_cast<int>(fx), gridN_ - 2);
            int iy = std::min(static_cast<int>(fy), gridN_ - 2);
            const double tx = fx - ix, ty = fy - iy;
            auto at = [&](int i, int j) {
                return gridValues_[static_cast<std::size_t>(j) * gridN_ + i];
            };
            return (1 - tx) * (1 - ty) * at(ix, iy) + tx * (1 - ty) * at(ix + 1, iy) +
                   (1 - tx) * ty * at(ix, iy + 1) + tx * ty * at(ix + 1, iy + 1);
        }
    }
    return 0.0;
}

bool Potential::is_zero() const { return family_ == Family::Zero; }

bool Potential::is_radial() const {
    switch (family_) {
        case Family::Zero:
        case Family::PowerDecay:
        case Family::RadialTable:
            return true;
        case Family::Gaussian:
            return center_.x == 0.0 && center_.y == 0.0;
        case Family::AngularFourierRadial:
            return std::all_of(harmonics_.begin(), harmonics_.end(),
                               [](const Harmonic& h) { return h.k == 0; });
        case Family::GridSampled:
            return false;
    }
    return false;
}

bool Potential::is_integrable() const {
    switch (family_) {
        case Family::Zero:
        case Family::Gaussian:
        case Family::AngularFourierRadial:
        case Family::GridSampled:
            return true;
        case Family::PowerDecay:
        case Family::RadialTable:
            return rho_ > 2.0;
    }
    return false;
}

double Potential::radial_value(double r) const {
    switch (family_) {
        case Family::Zero:
            return 0.0;
        case Family::Gaussian:
            if (!is_radial())
                throw std::logic_error("Potential::radial_value: potential is not radial");
            return amplitude_ * std::exp(-r * r / (width_ * width_));
        case Family::PowerDecay:
            return std::pow(1.0 + r * r, -0.5 * rho_);
        case Family::RadialTable: {
            if (r >= tableR_.back()) {
                // <x>^{-rho} continuation matched at the last node
                const double scale = tableV_.back() * std::pow(bracket(tableR_.back()), rho_);
                return scale * std::pow(bracket(r), -rho_);
            }
            auto it = std::upper_bound(tableR_.begin(), tableR_.end(), r);
            const std::size_t j = static_cast<std::size_t>(it - tableR_.begin());
            const std::size_t i = j == 0 ? 0 : j - 1;
            if (j >= tableR_.size()) return tableV_.back();
            const double t = (r - tableR_[i]) / (tableR_[j] - tableR_[i]);
            return (1.0 - t) * tableV_[i] + t * tableV_[j];
        }
        case Family::AngularFourierRadial: {
            if (!is_radial())
                throw std::logic_error("Potential::radial_value: potential is not radial");
            double sum = 0.0;
            for (const auto& h : harmonics_) {
                const double s = r / h.width;
                sum += h.amplitude * std::exp(-s * s) * std::cos(h.phase);
            }
            return sum;
        }
        case Family::GridSampled:
            throw std::logic_error("Potential::radial_value: potential is not radial");
    }
    return 0.0;
}

Potential Potential::pointwise_power(int ell) const {
    if (ell < 1) throw std::invalid_argument("Potential::pointwise_power: ell must be >= 1");
    if (ell == 1) return *this;
    switch (family_) {
        case Family::Zero:
            return zero();
        case Family::Gaussian:
            return gaussian(std::pow(amplitude_, ell), width_ / std::sqrt(static_cast<double>(ell)),
                            center_, rho_ * ell);
        case Family::PowerDecay:
            return power_decay(rho_ * ell);
        default:
            throw std::invalid_argument(
                "Potential::pointwise_power: family not closed under pointwise powers");
    }
}

double Potential::line_truncation(double b, double absTol) const {
    switch (family_) {
        case Family::Zero:
            return 1.0;
        case Family::Gaussian: {
            const double offset = std::hypot(center_.x, center_.y);
            const double floor = std::max(absTol / std::max(std::abs(amplitude_), 1e-300), 1e-300);
            const double reach = width_ * std::sqrt(std::max(1.0, -std::log(floor)));
            return std::abs(b) + offset + reach + 4.0;
        }
        default: {
            // |V(b omega + t omega_perp)| <= N <t>^{-rho}; solve the tail bound
            const double n = std::max(xRhoNorm_, 1e-300);
            const double T = std::pow(2.0 * n / ((rho_ - 1.0) * absTol), 1.0 / (rho_ - 1.0));
            return std::max(T, 4.0);
        }
    }
}

double Potential::support_radius(double eps) const {
    if (family_ == Family::Zero) return 1.0;
    if (family_ == Family::Gaussian) {
        const double floor = std::max(eps / std::max(std::abs(amplitude_), 1e-300), 1e-300);
        return std::hypot(center_.x, center_.y) +
               width_ * std::sqrt(std::max(1.0, -std::log(floor))) + 2.0;
    }
    if (family_ == Family::GridSampled) return gridHalfWidth_ * std::sqrt(2.0) + 1.0;
    if (family_ == Family::AngularFourierRadial) {
        double amp = 0.0, w = 0.0;
        for (const auto& h : harmonics_) {
            amp += std::abs(h.amplitude);
            w = std::max(w, h.width);
        }
        const double floor = std::max(eps / std::max(amp, 1e-300), 1e-300);
        return w * std::sqrt(std::max(1.0, -std::log(floor))) + 2.0;
    }
    const double n = std::max(xRhoNorm_, 1e-300);
    return std::sqrt(std::max(0.0, std::pow(n / eps, 2.0 / rho_) - 1.0)) + 1.0;
}

double Potential::angular_average(double r, double absTol) const {
    if (is_radial()) return radial_value(r);
    return quad::trapezoid_periodic_adaptive(
               [&](double th) { return (*this)(r * std::cos(th), r * std::sin(th)); }, absTol) /
           (2.0 * M_PI);
}

double Potential::integral_2d(double absTol, double rMin) const {
    if (is_zero()) return 0.0;
    if (!is_integrable())
        throw std::domain_error("Potential::integral_2d: potential is not integrable (rho <= 2)");
    // truncation radius from the tail-integral bound, not the pointwise one:
    // int_{r>R} 2 pi r |V| <= 2 pi norm R^{2-rho}/(rho-2) for power tails
    double rMax;
    switch (family_) {
        case Family::PowerDecay:
        case Family::RadialTable:
            rMax = std::pow(2.0 * M_PI * std::max(xRhoNorm_, 1e-300) /
                                ((rho_ - 2.0) * 0.3 * absTol),
                            1.0 / (rho_ - 2.0));
            rMax = std::max(rMax, 4.0);
            break;
        default:
            rMax = support_radius(1e-20);
            break;
    }
    rMax = std::max(rMax, rMin + 1.0);
    const double angTol = absTol / (20.0 * std::max(rMax * rMax, 1.0));
    auto radial = [&](double r) { return 2.0 * M_PI * r * angular_average(r, angTol); };
    if (rMin > 0.0) {
        return quad::radial_integral([&](double r) { return radial(r + rMin); },
                                     rMax - rMin, absTol * 0.5);
    }
    return quad::radial_integral(radial, rMax, absTol * 0.5);
}

double Potential::envelope_violation(int radialSamples, int angularSamples) const {
    if (is_zero()) return 0.0;
    double worst = -1.0;
    const double rMax = support_radius(1e-14) * 1.2 + 5.0;
    for (int i = 0; i < radialSamples; ++i) {
        const double r = rMax * (i + 0.5) / radialSamples;
        for (int j = 0; j < angularSamples; ++j) {
            const double th = 2.0 * M_PI * j / angularSamples;
            const double v = std::abs((*this)(r * std::cos(th), r * std::sin(th)));
            const double envelope = xRhoNorm_ * std::pow(1.0 + r * r, -0.5 * rho_);
            if (envelope > 0.0) worst = std::max(worst, v / envelope - 1.0);
        }
    }
    return worst;
}

void Potential::estimate_norm() {
    // sup <x>^rho |V| over a dense radial scan (the families here are either
    // radial or have a radial envelope, so a ray scan reaches the sup).
    const double rMax = [&] {
        switch (family_) {
            case Family::Gaussian:
                return std::hypot(center_.x, center_.y) + width_ * 14.0 + 8.0;
            case Family::AngularFourierRadial: {
                double w = 0.0;
                for (const auto& h : harmonics_) w = std::max(w, h.width);
                return w * 14.0 + 8.0;
            }
            case Family::RadialTable:
                return tableR_.back() + 2.0;
            case Family::GridSampled:
                return gridHalfWidth_ * std::sqrt(2.0);
            default:
                return 10.0;
        }
    }();
    const int nR = 4000;
    const int nTh = is_radial() ? 1 : 128;
    double best = 0.0;
    for (int i = 0; i <= nR; ++i) {
        const double r = rMax * i / nR;
        const double w = std::pow(1.0 + r * r, 0.5 * rho_);
        if (nTh == 1) {
            best = std::max(best, w * std::abs(family_ == Family::RadialTable
                                                   ? radial_value(r)
                                                   : (*this)(r, 0.0)));
        } else {
            for (int j = 0; j < nTh; ++j) {
                const double th = 2.0 * M_PI * j / nTh;
                best = std::max(best, w * std::abs((*this)(r * std::cos(th), r * std::sin(th))));
            }
        }
    }
    // RadialTable continuation makes <r>^rho |V| constant past the last node.
    if (family_ == Family::RadialTable)
        best = std::max(best, std::abs(tableV_.back()) * std::pow(bracket(tableR_.back()), rho_));
    xRhoNorm_ = best;
}

std::string Potential::describe() const {
    char buf[160];
    switch (family_) {
        case Family::Zero:
            return "zero";
        case Family::Gaussian:
            std::snprintf(buf, sizeof(buf), "gaussian(A=%g,w=%g,c=(%g,%g))", amplitude_, width_,
                          center_.x, center_.y);
            return buf;
        case Family::PowerDecay:
            std::snprintf(buf, sizeof(buf), "powerDecay(rho=%g)", rho_);
            return buf;
        case Family::RadialTable:
            std::snprintf(buf, sizeof(buf), "radialTable(n=%zu,rho=%g)", tableR_.size(), rho_);
            return buf;
        case Family::AngularFourierRadial:
            std::snprintf(buf, sizeof(buf), "angularFourier(n=%zu,rho=%g)", harmonics_.size(), rho_);
            return buf;
        case Family::GridSampled:
            std::snprintf(buf, sizeof(buf), "gridSampled(n=%d,L=%g,rho=%g)", gridN_, gridHalfWidth_,
                          rho_);
            return buf;
    }
    return "unknown";
}

} // namespace lc
