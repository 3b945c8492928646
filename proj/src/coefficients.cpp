/// @file coefficients.cpp
/// @brief Exact coefficient tables and their floating-point renderings.

#include "weno/coefficients.hpp"

#include <cmath>

#include <boost/rational.hpp>

#include "weno/errors.hpp"

namespace weno {

double Surd::value() const {
    const double ra = boost::rational_cast<double>(a);
    const double rb = boost::rational_cast<double>(b);
    return ra + rb * std::sqrt(15.0);
}

Surd operator+(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
Surd operator-(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
Surd operator*(const Surd& x, const Surd& y) {
    return {x.a * y.a + Rational(15) * x.b * y.b, x.a * y.b + x.b * y.a};
}

namespace {

Surd q(std::int64_t n, std::int64_t d) { return {Rational(n, d), Rational(0)}; }
Surd s(std::int64_t n, std::int64_t d, std::int64_t rn, std::int64_t rd) {
    return {Rational(n, d), Rational(rn, rd)};
}

StencilTable make_interface() {
    StencilTable t;
    t.candidate = {{{q(1, 3), q(-7, 6), q(11, 6)},
                    {q(-1, 6), q(5, 6), q(1, 3)},
                    {q(1, 3), q(5, 6), q(-1, 6)}}};
    t.linear = {q(1, 10), q(3, 5), q(3, 10)};
    t.big = {q(1, 30), q(-13, 60), q(47, 60), q(9, 20), q(-1, 20)};
    return t;
}

StencilTable make_gauss_minus() {
    StencilTable t;
    t.candidate = {{{s(1, 30, -1, 20), s(-1, 15, 1, 5), s(31, 30, -3, 20)},
                    {s(1, 30, 1, 20), q(14, 15), s(1, 30, -1, 20)},
                    {s(31, 30, 3, 20), s(-1, 15, -1, 5), s(1, 30, 1, 20)}}};
    t.linear = {s(126, 655, 71, 5240), q(403, 655), s(126, 655, -71, 5240)};
    t.big = {s(-3, 800, -11, 1200), s(29, 600, 41, 600), q(1093, 1200), s(29, 600, -41, 600),
             s(-3, 800, 11, 1200)};
    return t;
}

StencilTable make_gauss_center() {
    StencilTable t;
    t.candidate = {{{q(-1, 24), q(1, 12), q(23, 24)},
                    {q(-1, 24), q(13, 12), q(-1, 24)},
                    {q(23, 24), q(1, 12), q(-1, 24)}}};
    t.linear = {q(-9, 80), q(49, 40), q(-9, 80)};
    t.big = {q(3, 640), q(-29, 480), q(1067, 960), q(-29, 480), q(3, 640)};
    return t;
}

StencilTable make_gauss_plus() {
    StencilTable t;
    t.candidate = {{{s(1, 30, 1, 20), s(-1, 15, -1, 5), s(31, 30, 3, 20)},
                    {s(1, 30, -1, 20), q(14, 15), s(1, 30, 1, 20)},
                    {s(31, 30, -3, 20), s(-1, 15, 1, 5), s(1, 30, -1, 20)}}};
    t.linear = {s(126, 655, -71, 5240), q(403, 655), s(126, 655, 71, 5240)};
    t.big = {s(-3, 800, 11, 1200), s(29, 600, -41, 600), q(1093, 1200), s(29, 600, 41, 600),
             s(-3, 800, -11, 1200)};
    return t;
}

NodeCoefficients render(const StencilTable& t) {
    NodeCoefficients c{};
    for (int r = 0; r < 3; ++r) {
        for (int k = 0; k < 3; ++k) c.c[r][k] = t.candidate[r][k].value();
        c.d[r] = t.linear[r].value();
    }
    return c;
}

}  // namespace

const StencilTable& exact_table(Node node) {
    static const StencilTable interface = make_interface();
    static const StencilTable minus = make_gauss_minus();
    static const StencilTable center = make_gauss_center();
    static const StencilTable plus = make_gauss_plus();
    switch (node) {
        case Node::Interface: return interface;
        case Node::GaussMinus: return minus;
        case Node::GaussCenter: return center;
        case Node::GaussPlus: return plus;
    }
    throw ConfigError("unknown reconstruction node");
}

SplitWeights split_linear_weights(const std::array<Rational, 3>& d) {
    SplitWeights w;
    std::array<Rational, 3> plus, minus;
    for (int r = 0; r < 3; ++r) {
        plus[r] = (d[r] + Rational(3) * abs(d[r])) / Rational(2);
        minus[r] = plus[r] - d[r];
        w.sigma_plus += plus[r];
        w.sigma_minus += minus[r];
    }
    for (int r = 0; r < 3; ++r) {
        w.gamma_plus[r] = plus[r] / w.sigma_plus;
        w.gamma_minus[r] = minus[r] / w.sigma_minus;
    }
    return w;
}

const SplitWeights& center_split() {
    static const SplitWeights w = [] {
        const StencilTable& t = exact_table(Node::GaussCenter);
        return split_linear_weights({t.linear[0].a, t.linear[1].a, t.linear[2].a});
    }();
    return w;
}

const NodeCoefficients& node_coefficients(Node node) {
    static const NodeCoefficients interface = render(exact_table(Node::Interface));
    static const NodeCoefficients minus = render(exact_table(Node::GaussMinus));
    static const NodeCoefficients center = render(exact_table(Node::GaussCenter));
    static const NodeCoefficients plus = render(exact_table(Node::GaussPlus));
    switch (node) {
        case Node::Interface: return interface;
        case Node::GaussMinus: return minus;
        case Node::GaussCenter: return center;
        case Node::GaussPlus: return plus;
    }
    throw ConfigError("unknown reconstruction node");
}

const SplitCoefficients& center_split_coefficients() {
    static const SplitCoefficients c = [] {
        const SplitWeights& w = center_split();
        SplitCoefficients r{};
        r.sigma_plus = boost::rational_cast<double>(w.sigma_plus);
        r.sigma_minus = boost::rational_cast<double>(w.sigma_minus);
        for (int k = 0; k < 3; ++k) {
            r.gamma_plus[k] = boost::rational_cast<double>(w.gamma_plus[k]);
            r.gamma_minus[k] = boost::rational_cast<double>(w.gamma_minus[k]);
        }
        return r;
    }();
    return c;
}

}  // namespace weno
