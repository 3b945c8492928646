/// @file riemann.cpp
/// @brief Exact Riemann solver (pressure iteration with shock and
///        rarefaction branches).

#include "weno/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "weno/errors.hpp"

namespace weno {

namespace {

// Pressure function f_K(p) and its derivative for one side.
void side_function(double p, const Primitive& w, double c, double g, double& f, double& df) {
    if (p > w.p) {
        const double A = 2.0 / ((g + 1.0) * w.rho);
        const double B = (g - 1.0) / (g + 1.0) * w.p;
        const double s = std::sqrt(A / (p + B));
        f = (p - w.p) * s;
        df = s * (1.0 - 0.5 * (p - w.p) / (p + B));
    } else {
        const double pr = p / w.p;
        f = 2.0 * c / (g - 1.0) * (std::pow(pr, (g - 1.0) / (2.0 * g)) - 1.0);
        df = 1.0 / (w.rho * c) * std::pow(pr, -(g + 1.0) / (2.0 * g));
    }
}

}  // namespace

EulerRiemannSolution::EulerRiemannSolution(const Primitive& left, const Primitive& right, double gamma)
    : l_(left), r_(right), gamma_(gamma) {
    cl_ = sound_speed(l_, gamma);
    cr_ = sound_speed(r_, gamma);
    const double g = gamma;
    if (2.0 * (cl_ + cr_) / (g - 1.0) <= r_.u - l_.u) throw StateError("Riemann data generate vacuum");

    double p = std::max(1e-12, 0.5 * (l_.p + r_.p) - 0.125 * (r_.u - l_.u) * (l_.rho + r_.rho) * (cl_ + cr_));
    for (int it = 0; it < 100; ++it) {
        double fl, dfl, fr, dfr;
        side_function(p, l_, cl_, g, fl, dfl);
        side_function(p, r_, cr_, g, fr, dfr);
        double next = p - (fl + fr + r_.u - l_.u) / (dfl + dfr);
        if (next <= 0.0) next = 0.5 * p;
        const double change = 2.0 * std::abs(next - p) / (next + p);
        p = next;
        if (change < 1e-15) break;
    }
    double fl, dfl, fr, dfr;
    side_function(p, l_, cl_, g, fl, dfl);
    side_function(p, r_, cr_, g, fr, dfr);
    p_star_ = p;
    u_star_ = 0.5 * (l_.u + r_.u) + 0.5 * (fr - fl);
}

double EulerRiemannSolution::rho_star_left() const {
    const double g = gamma_;
    const double pr = p_star_ / l_.p;
    if (p_star_ > l_.p) {
        const double k = (g - 1.0) / (g + 1.0);
        return l_.rho * (pr + k) / (k * pr + 1.0);
    }
    return l_.rho * std::pow(pr, 1.0 / g);
}

double EulerRiemannSolution::rho_star_right() const {
    const double g = gamma_;
    const double pr = p_star_ / r_.p;
    if (p_star_ > r_.p) {
        const double k = (g - 1.0) / (g + 1.0);
        return r_.rho * (pr + k) / (k * pr + 1.0);
    }
    return r_.rho * std::pow(pr, 1.0 / g);
}

Primitive EulerRiemannSolution::sample(double xi) const {
    const double g = gamma_;
    if (xi <= u_star_) {
        if (p_star_ > l_.p) {
            const double pr = p_star_ / l_.p;
            const double s = l_.u - cl_ * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
            if (xi <= s) return l_;
            return {rho_star_left(), u_star_, p_star_};
        }
        const double head = l_.u - cl_;
        const double cs = cl_ * std::pow(p_star_ / l_.p, (g - 1.0) / (2.0 * g));
        const double tail = u_star_ - cs;
        if (xi <= head) return l_;
        if (xi >= tail) return {rho_star_left(), u_star_, p_star_};
        const double k = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * cl_) * (l_.u - xi);
        const double rho = l_.rho * std::pow(k, 2.0 / (g - 1.0));
        const double u = 2.0 / (g + 1.0) * (cl_ + 0.5 * (g - 1.0) * l_.u + xi);
        const double p = l_.p * std::pow(k, 2.0 * g / (g - 1.0));
        return {rho, u, p};
    }
    if (p_star_ > r_.p) {
        const double pr = p_star_ / r_.p;
        const double s = r_.u + cr_ * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
        if (xi >= s) return r_;
        return {rho_star_right(), u_star_, p_star_};
    }
    const double head = r_.u + cr_;
    const double cs = cr_ * std::pow(p_star_ / r_.p, (g - 1.0) / (2.0 * g));
    const double tail = u_star_ + cs;
    if (xi >= head) return r_;
    if (xi <= tail) return {rho_star_right(), u_star_, p_star_};
    const double k = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * cr_) * (r_.u - xi);
    const double rho = r_.rho * std::pow(k, 2.0 / (g - 1.0));
    const double u = 2.0 / (g + 1.0) * (-cr_ + 0.5 * (g - 1.0) * r_.u + xi);
    const double p = r_.p * std::pow(k, 2.0 * g / (g - 1.0));
    return {rho, u, p};
}

double EulerRiemannSolution::min_density() const {
    return std::min({l_.rho, r_.rho, rho_star_left(), rho_star_right()});
}

double EulerRiemannSolution::max_density() const {
    return std::max({l_.rho, r_.rho, rho_star_left(), rho_star_right()});
}

}  // namespace weno
