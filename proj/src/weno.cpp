/// @file weno.cpp
/// @brief Nonlinear weights and reconstructions.

#include "weno/weno.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "weno/errors.hpp"

namespace weno {

void WeightScheme::validate() const {
    if (family == Family::Linear) return;
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("eps must be positive");
    if (family == Family::ZR && !(p >= 1.0)) throw ConfigError("ZR requires p >= 1");
    if (family == Family::ZL) {
        if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("ZL requires p > 0");
        if (!(q >= 1.0) || !std::isfinite(q)) throw ConfigError("ZL requires q >= 1");
    }
}

std::string WeightScheme::label() const {
    std::ostringstream os;
    switch (family) {
        case Family::JS: os << "JS"; break;
        case Family::M: os << "M"; break;
        case Family::Z: os << "Z"; break;
        case Family::ZR: os << "ZR(p=" << p << ")"; break;
        case Family::ZL: os << "ZL(p=" << p << ",q=" << q << ")"; break;
        case Family::Linear: os << "Linear"; break;
    }
    return os.str();
}

Family parse_family(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "js") return Family::JS;
    if (s == "m") return Family::M;
    if (s == "z") return Family::Z;
    if (s == "zr") return Family::ZR;
    if (s == "zl") return Family::ZL;
    if (s == "linear") return Family::Linear;
    throw ConfigError("unknown scheme '" + name + "' (expected js, m, z, zr, zl or linear)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::JS: return "js";
        case Family::M: return "m";
        case Family::Z: return "z";
        case Family::ZR: return "zr";
        case Family::ZL: return "zl";
        case Family::Linear: return "linear";
    }
    return "?";
}

WeightScheme default_scheme(Family f, double p, double q) {
    switch (f) {
        case Family::JS: return WeightScheme::js();
        case Family::M: return WeightScheme::m();
        case Family::Z: return WeightScheme::z();
        case Family::ZR: return WeightScheme::zr(p);
        case Family::ZL: return WeightScheme::zl(p, q);
        case Family::Linear: return WeightScheme::linear();
    }
    return WeightScheme::js();
}

std::array<double, 5> Window5::oriented() const {
    if (orientation == Orientation::LeftBiased) return v;
    return {v[4], v[3], v[2], v[1], v[0]};
}

Triple smoothness_indicators(const double* v) {
    const double a = v[0], b = v[1], c = v[2], d = v[3], e = v[4];
    const double k = 13.0 / 12.0;
    const double t0 = a - 2.0 * b + c, s0 = a - 4.0 * b + 3.0 * c;
    const double t1 = b - 2.0 * c + d, s1 = b - d;
    const double t2 = c - 2.0 * d + e, s2 = 3.0 * c - 4.0 * d + e;
    return {k * t0 * t0 + 0.25 * s0 * s0, k * t1 * t1 + 0.25 * s1 * s1, k * t2 * t2 + 0.25 * s2 * s2};
}

Triple smoothness_indicators(const Window5& w) {
    const auto v = w.oriented();
    return smoothness_indicators(v.data());
}

double map_henrick(double omega, double d) {
    return omega * (d + d * d - 3.0 * d * omega + omega * omega) / (d * d + (1.0 - 2.0 * d) * omega);
}

namespace {

Triple normalise(const Triple& a) {
    const double s = a[0] + a[1] + a[2];
    return {a[0] / s, a[1] / s, a[2] / s};
}

double power(double x, double e) {
    if (e == 1.0) return x;
    if (e == 2.0) return x * x;
    return std::pow(x, e);
}

double root(double beta, double p) {
    if (beta == 0.0) return 0.0;
    if (p == 1.0) return beta;
    if (p == 2.0) return std::sqrt(beta);
    return std::exp(std::log(beta) / p);
}

// The beta-dependent part of the unnormalised weights, shared by every set
// of linear weights applied to the same window. JS divides d_s by f_s; the
// Z-type families multiply d_s by f_s = 1 + x_s^e, or add log d_s to
// f_s = log(1 + x_s^e) when the powers overflow.
struct Factors {
    enum class Kind { Divide, Multiply, Log } kind = Kind::Multiply;
    Triple f{};
};

Factors z_factors(double tau, const Triple& den, double e) {
    Factors r;
    for (int s = 0; s < 3; ++s) r.f[s] = 1.0 + power(tau / den[s], e);
    if (std::isfinite(r.f[0] + r.f[1] + r.f[2])) return r;
    r.kind = Factors::Kind::Log;
    for (int s = 0; s < 3; ++s) {
        const double le = e * (std::log(tau) - std::log(den[s]));
        r.f[s] = le > 700.0 ? le + std::log1p(std::exp(-le)) : std::log1p(std::exp(le));
    }
    return r;
}

Triple apply_factors(const Factors& fac, const Triple& d) {
    Triple a;
    switch (fac.kind) {
        case Factors::Kind::Divide:
            for (int s = 0; s < 3; ++s) a[s] = d[s] / fac.f[s];
            return normalise(a);
        case Factors::Kind::Multiply:
            for (int s = 0; s < 3; ++s) a[s] = d[s] * fac.f[s];
            if (std::isfinite(a[0] + a[1] + a[2])) return normalise(a);
            return apply_factors(
                Factors{Factors::Kind::Log, {std::log(fac.f[0]), std::log(fac.f[1]), std::log(fac.f[2])}}, d);
        case Factors::Kind::Log: {
            for (int s = 0; s < 3; ++s) a[s] = std::log(d[s]) + fac.f[s];
            const double mx = std::max({a[0], a[1], a[2]});
            return normalise({std::exp(a[0] - mx), std::exp(a[1] - mx), std::exp(a[2] - mx)});
        }
    }
    return d;
}

Factors js_factors(const Triple& beta, double eps) {
    Factors r{Factors::Kind::Divide, {}};
    for (int s = 0; s < 3; ++s) {
        const double den = beta[s] + eps;
        r.f[s] = den * den;
    }
    if (std::isfinite(std::min({r.f[0], r.f[1], r.f[2]}))) return r;
    const double m = std::min({beta[0], beta[1], beta[2]}) + eps;
    for (int s = 0; s < 3; ++s) {
        const double den = (beta[s] + eps) / m;
        r.f[s] = den * den;
    }
    return r;
}

Factors zr_factors(const Triple& beta, double eps, double p) {
    const Triple r = {root(beta[0], p), root(beta[1], p), root(beta[2], p)};
    const double tau = std::abs(r[0] - r[2]);
    return z_factors(tau, {r[0] + eps, r[1] + eps, r[2] + eps}, p);
}

Factors zl_factors(const Triple& beta, double eps, double p, double q) {
    const double tau = std::abs(std::log1p(beta[0]) - std::log1p(beta[2])) / p;
    return z_factors(tau, {beta[0] + eps, beta[1] + eps, beta[2] + eps}, q);
}

Factors z_plain_factors(const Triple& beta, double eps) {
    return z_factors(std::abs(beta[0] - beta[2]), {beta[0] + eps, beta[1] + eps, beta[2] + eps}, 1.0);
}

// Precomputed beta-dependent state for one window and scheme.
struct WeightState {
    const WeightScheme* scheme;
    Factors fac;

    WeightState(const Triple& beta, const WeightScheme& s) : scheme(&s) {
        switch (s.family) {
            case Family::JS:
            case Family::M: fac = js_factors(beta, s.eps); break;
            case Family::Z: fac = z_plain_factors(beta, s.eps); break;
            case Family::ZR: fac = zr_factors(beta, s.eps, s.p); break;
            case Family::ZL: fac = zl_factors(beta, s.eps, s.p, s.q); break;
            case Family::Linear: break;
        }
    }

    Triple weights(const Triple& d) const {
        switch (scheme->family) {
            case Family::Linear: return d;
            case Family::M: {
                const Triple w = apply_factors(fac, d);
                return normalise({map_henrick(w[0], d[0]), map_henrick(w[1], d[1]), map_henrick(w[2], d[2])});
            }
            default: return apply_factors(fac, d);
        }
    }
};

}  // namespace

Triple weights_js(const Triple& beta, const Triple& d, double eps) { return apply_factors(js_factors(beta, eps), d); }

Triple weights_m(const Triple& beta, const Triple& d, double eps) {
    const Triple w = weights_js(beta, d, eps);
    return normalise({map_henrick(w[0], d[0]), map_henrick(w[1], d[1]), map_henrick(w[2], d[2])});
}

Triple weights_z(const Triple& beta, const Triple& d, double eps) { return apply_factors(z_plain_factors(beta, eps), d); }

Triple weights_zr(const Triple& beta, const Triple& d, double eps, double p) {
    return apply_factors(zr_factors(beta, eps, p), d);
}

Triple weights_zl(const Triple& beta, const Triple& d, double eps, double p, double q) {
    return apply_factors(zl_factors(beta, eps, p, q), d);
}

Triple nonlinear_weights(const Triple& beta, const Triple& d, const WeightScheme& s) {
    return WeightState(beta, s).weights(d);
}

namespace {

double combine(const NodeCoefficients& k, const double* v, const Triple& w) {
    const double c0 = k.c[0][0] * v[0] + k.c[0][1] * v[1] + k.c[0][2] * v[2];
    const double c1 = k.c[1][0] * v[1] + k.c[1][1] * v[2] + k.c[1][2] * v[3];
    const double c2 = k.c[2][0] * v[2] + k.c[2][1] * v[3] + k.c[2][2] * v[4];
    return w[0] * c0 + w[1] * c1 + w[2] * c2;
}

}  // namespace

double reconstruct_left(const double* v, const WeightScheme& s, Triple* weights) {
    const NodeCoefficients& k = node_coefficients(Node::Interface);
    const Triple beta = smoothness_indicators(v);
    const Triple w = nonlinear_weights(beta, {k.d[0], k.d[1], k.d[2]}, s);
    if (weights) *weights = w;
    return combine(k, v, w);
}

double reconstruct_right(const double* v, const WeightScheme& s) {
    const double r[5] = {v[4], v[3], v[2], v[1], v[0]};
    return reconstruct_left(r, s);
}

double reconstruct_interface(const Window5& w, const WeightScheme& s, Triple* weights) {
    const auto v = w.oriented();
    return reconstruct_left(v.data(), s, weights);
}

namespace {

// sigma+ w+ - sigma- w-, divided by its sum to remove the rounding of the
// cancellation.
Triple combine_split(const Triple& wp, const Triple& wm, double sigma_plus, double sigma_minus) {
    Triple c;
    for (int s = 0; s < 3; ++s) c[s] = sigma_plus * wp[s] - sigma_minus * wm[s];
    const double sum = c[0] + c[1] + c[2];
    return {c[0] / sum, c[1] / sum, c[2] / sum};
}

Triple center_weights(const WeightState& ws) {
    const SplitCoefficients& sp = center_split_coefficients();
    const Triple wp = ws.weights({sp.gamma_plus[0], sp.gamma_plus[1], sp.gamma_plus[2]});
    const Triple wm = ws.weights({sp.gamma_minus[0], sp.gamma_minus[1], sp.gamma_minus[2]});
    return combine_split(wp, wm, sp.sigma_plus, sp.sigma_minus);
}

double gauss_value(const double* v, const WeightState& ws, Node node) {
    const NodeCoefficients& k = node_coefficients(node);
    if (node == Node::GaussCenter) return combine(k, v, center_weights(ws));
    return combine(k, v, ws.weights({k.d[0], k.d[1], k.d[2]}));
}

}  // namespace

Triple center_node_weights(const Triple& beta, const WeightScheme& s) { return center_weights(WeightState(beta, s)); }

double reconstruct_gauss_point(const Window5& w, const WeightScheme& s, Node node) {
    if (node == Node::Interface) return reconstruct_interface(w, s);
    const auto& v = w.v;
    return gauss_value(v.data(), WeightState(smoothness_indicators(v.data()), s), node);
}

namespace {

// Constants of the three Gauss-node reconstructions gathered in one place.
struct GaussKernel {
    NodeCoefficients minus, center, plus;
    Triple d_minus, d_plus, gamma_plus, gamma_minus;
    double sigma_plus, sigma_minus;

    GaussKernel() {
        minus = node_coefficients(Node::GaussMinus);
        center = node_coefficients(Node::GaussCenter);
        plus = node_coefficients(Node::GaussPlus);
        const SplitCoefficients& sp = center_split_coefficients();
        d_minus = {minus.d[0], minus.d[1], minus.d[2]};
        d_plus = {plus.d[0], plus.d[1], plus.d[2]};
        gamma_plus = {sp.gamma_plus[0], sp.gamma_plus[1], sp.gamma_plus[2]};
        gamma_minus = {sp.gamma_minus[0], sp.gamma_minus[1], sp.gamma_minus[2]};
        sigma_plus = sp.sigma_plus;
        sigma_minus = sp.sigma_minus;
    }
};

const GaussKernel& gauss_kernel() {
    static const GaussKernel k;
    return k;
}

}  // namespace

std::array<double, 3> reconstruct_gauss_nodes(const double* v, const WeightScheme& s) {
    const GaussKernel& k = gauss_kernel();
    const WeightState ws(smoothness_indicators(v), s);
    const Triple wm = ws.weights(k.d_minus);
    const Triple wp = ws.weights(k.d_plus);
    const Triple gp = ws.weights(k.gamma_plus);
    const Triple gm = ws.weights(k.gamma_minus);
    const Triple wc = combine_split(gp, gm, k.sigma_plus, k.sigma_minus);
    return {combine(k.minus, v, wm), combine(k.center, v, wc), combine(k.plus, v, wp)};
}

namespace {

// Structure-of-arrays scratch for the batched reconstructions: gathered
// window values, smoothness indicators, weight factors, weights and temps.
struct Batch {
    std::array<std::vector<double>, 5> v;
    std::array<std::vector<double>, 3> b, f, w, t;
    int n = 0;

    void gather(const double* base, std::ptrdiff_t elem_stride, std::ptrdiff_t window_stride, int count) {
        n = count;
        for (auto& x : v)
            if (static_cast<int>(x.size()) < n) x.resize(n);
        for (auto* a : {&b, &f, &w, &t})
            for (auto& x : *a)
                if (static_cast<int>(x.size()) < n) x.resize(n);
        for (int q = 0; q < 5; ++q) {
            const double* src = base + q * elem_stride;
            double* dst = v[q].data();
            for (int j = 0; j < n; ++j) dst[j] = src[j * window_stride];
        }
    }

    void indicators() {
        constexpr double kc = 13.0 / 12.0;
        for (int j = 0; j < n; ++j) {
            const double a = v[0][j], bb = v[1][j], c = v[2][j], d = v[3][j], e = v[4][j];
            const double t0 = a - 2.0 * bb + c, s0 = a - 4.0 * bb + 3.0 * c;
            const double t1 = bb - 2.0 * c + d, s1 = bb - d;
            const double t2 = c - 2.0 * d + e, s2 = 3.0 * c - 4.0 * d + e;
            b[0][j] = kc * t0 * t0 + 0.25 * s0 * s0;
            b[1][j] = kc * t1 * t1 + 0.25 * s1 * s1;
            b[2][j] = kc * t2 * t2 + 0.25 * s2 * s2;
        }
    }

    // f = 1 + x^e with x held in t.
    void z_factors(double e) {
        for (int s = 0; s < 3; ++s) {
            const double* x = t[s].data();
            double* out = f[s].data();
            if (e == 1.0)
                for (int j = 0; j < n; ++j) out[j] = 1.0 + x[j];
            else if (e == 2.0)
                for (int j = 0; j < n; ++j) out[j] = 1.0 + x[j] * x[j];
            else
                for (int j = 0; j < n; ++j) out[j] = 1.0 + std::pow(x[j], e);
        }
    }

    // t = tau / (r + eps) for the per-window tau in w[0] and roots r.
    void ratios(const std::array<const double*, 3>& r, double eps) {
        for (int s = 0; s < 3; ++s)
            for (int j = 0; j < n; ++j) t[s][j] = w[0][j] / (r[s][j] + eps);
    }

    // Fills f; returns true when the JS form d / f applies.
    bool factors(const WeightScheme& s) {
        const double eps = s.eps;
        switch (s.family) {
            case Family::JS:
            case Family::M:
                for (int q = 0; q < 3; ++q)
                    for (int j = 0; j < n; ++j) {
                        const double d = b[q][j] + eps;
                        f[q][j] = d * d;
                    }
                return true;
            case Family::Z:
                for (int j = 0; j < n; ++j) w[0][j] = std::abs(b[0][j] - b[2][j]);
                ratios({b[0].data(), b[1].data(), b[2].data()}, eps);
                z_factors(1.0);
                return false;
            case Family::ZR:
                // The indicators are replaced by their roots.
                for (auto& r : b) {
                    if (s.p == 2.0)
                        for (int j = 0; j < n; ++j) r[j] = std::sqrt(r[j]);
                    else
                        for (int j = 0; j < n; ++j) r[j] = root(r[j], s.p);
                }
                for (int j = 0; j < n; ++j) w[0][j] = std::abs(b[0][j] - b[2][j]);
                ratios({b[0].data(), b[1].data(), b[2].data()}, eps);
                z_factors(s.p);
                return false;
            case Family::ZL:
                for (int j = 0; j < n; ++j) w[0][j] = std::abs(std::log1p(b[0][j]) - std::log1p(b[2][j])) / s.p;
                ratios({b[0].data(), b[1].data(), b[2].data()}, eps);
                z_factors(s.q);
                return false;
            case Family::Linear:
                for (int q = 0; q < 3; ++q)
                    for (int j = 0; j < n; ++j) f[q][j] = 1.0;
                return false;
        }
        return false;
    }

    void weights(const Triple& d, bool divide, bool henrick) {
        double *w0 = w[0].data(), *w1 = w[1].data(), *w2 = w[2].data();
        const double *f0 = f[0].data(), *f1 = f[1].data(), *f2 = f[2].data();
        if (divide)
            for (int j = 0; j < n; ++j) {
                w0[j] = d[0] / f0[j];
                w1[j] = d[1] / f1[j];
                w2[j] = d[2] / f2[j];
            }
        else
            for (int j = 0; j < n; ++j) {
                w0[j] = d[0] * f0[j];
                w1[j] = d[1] * f1[j];
                w2[j] = d[2] * f2[j];
            }
        normalise_all();
        if (!henrick) return;
        for (int j = 0; j < n; ++j) {
            w0[j] = map_henrick(w0[j], d[0]);
            w1[j] = map_henrick(w1[j], d[1]);
            w2[j] = map_henrick(w2[j], d[2]);
        }
        normalise_all();
    }

    void normalise_all() {
        double *w0 = w[0].data(), *w1 = w[1].data(), *w2 = w[2].data();
        for (int j = 0; j < n; ++j) {
            const double sum = w0[j] + w1[j] + w2[j];
            w0[j] /= sum;
            w1[j] /= sum;
            w2[j] /= sum;
        }
    }

    void combine(const NodeCoefficients& k, double scale, double* out, bool accumulate) const {
        const double *u0 = v[0].data(), *u1 = v[1].data(), *u2 = v[2].data(), *u3 = v[3].data(),
                     *u4 = v[4].data();
        for (int j = 0; j < n; ++j) {
            const double q0 = k.c[0][0] * u0[j] + k.c[0][1] * u1[j] + k.c[0][2] * u2[j];
            const double q1 = k.c[1][0] * u1[j] + k.c[1][1] * u2[j] + k.c[1][2] * u3[j];
            const double q2 = k.c[2][0] * u2[j] + k.c[2][1] * u3[j] + k.c[2][2] * u4[j];
            const double r = w[0][j] * q0 + w[1][j] * q1 + w[2][j] * q2;
            out[j] = accumulate ? out[j] + scale * r : scale * r;
        }
    }
};

// Windows whose weights overflowed are redone by the per-window path with
// its log-space fallback.
template <class Redo>
void repair(int n, const double* out, Redo&& redo) {
    for (int j = 0; j < n; ++j)
        if (!std::isfinite(out[j])) redo(j);
}

}  // namespace

void reconstruct_left_batch(const double* v, std::ptrdiff_t elem_stride, std::ptrdiff_t window_stride, int count,
                            const WeightScheme& s, double* out) {
    thread_local Batch g;
    const NodeCoefficients& k = node_coefficients(Node::Interface);
    g.gather(v, elem_stride, window_stride, count);
    g.indicators();
    const bool divide = g.factors(s);
    g.weights({k.d[0], k.d[1], k.d[2]}, divide, s.family == Family::M);
    g.combine(k, 1.0, out, false);
    repair(count, out, [&](int j) {
        double w[5];
        for (int q = 0; q < 5; ++q) w[q] = v[j * window_stride + q * elem_stride];
        out[j] = reconstruct_left(w, s);
    });
}

void reconstruct_gauss_nodes_batch(const double* v, int count, const WeightScheme& s, double* minus, double* center,
                                   double* plus) {
    thread_local Batch g;
    const GaussKernel& k = gauss_kernel();
    g.gather(v, 1, 1, count);
    g.indicators();
    const bool divide = g.factors(s);
    const bool henrick = s.family == Family::M;
    g.weights(k.d_minus, divide, henrick);
    g.combine(k.minus, 1.0, minus, false);
    g.weights(k.d_plus, divide, henrick);
    g.combine(k.plus, 1.0, plus, false);
    g.weights(k.gamma_plus, divide, henrick);
    g.combine(k.center, k.sigma_plus, center, false);
    g.weights(k.gamma_minus, divide, henrick);
    g.combine(k.center, -k.sigma_minus, center, true);
    for (int j = 0; j < count; ++j)
        if (!std::isfinite(minus[j] + center[j] + plus[j])) {
            const auto r = reconstruct_gauss_nodes(v + j, s);
            minus[j] = r[0];
            center[j] = r[1];
            plus[j] = r[2];
        }
}

}  // namespace weno
