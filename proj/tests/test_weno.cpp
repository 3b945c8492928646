#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "weno/coefficients.hpp"
#include "weno/errors.hpp"
#include "weno/weno.hpp"

using namespace weno;

namespace {

constexpr Triple d = kLinearWeights;

// Direct long-double evaluations of the weight formulas.
Triple js_oracle(const Triple& b, long double eps) {
    long double a[3], s = 0;
    for (int k = 0; k < 3; ++k) {
        a[k] = d[k] / ((b[k] + eps) * (b[k] + eps));
        s += a[k];
    }
    return {double(a[0] / s), double(a[1] / s), double(a[2] / s)};
}

Triple z_oracle(const Triple& b, long double eps, long double p, bool root_beta) {
    long double r[3], a[3], s = 0;
    for (int k = 0; k < 3; ++k) r[k] = root_beta ? std::pow((long double)b[k], 1.0L / p) : b[k];
    const long double tau = std::fabs(r[0] - r[2]);
    for (int k = 0; k < 3; ++k) {
        a[k] = d[k] * (1.0L + std::pow(tau / (r[k] + eps), root_beta ? p : 1.0L));
        s += a[k];
    }
    return {double(a[0] / s), double(a[1] / s), double(a[2] / s)};
}

Triple zl_oracle(const Triple& b, long double eps, long double p, long double q) {
    const long double tau = std::fabs(std::log(1.0L + b[0]) - std::log(1.0L + b[2])) / p;
    long double a[3], s = 0;
    for (int k = 0; k < 3; ++k) {
        a[k] = d[k] * (1.0L + std::pow(tau / (b[k] + eps), q));
        s += a[k];
    }
    return {double(a[0] / s), double(a[1] / s), double(a[2] / s)};
}

void check_rel(const Triple& got, const Triple& want, double rel) {
    for (int k = 0; k < 3; ++k) CHECK(std::abs(got[k] - want[k]) <= rel * std::abs(want[k]));
}

std::vector<WeightScheme> families() {
    return {WeightScheme::js(), WeightScheme::m(), WeightScheme::z(), WeightScheme::zr(2.0),
            WeightScheme::zl(2.0, 1.0), WeightScheme::zl(1.0, 2.0)};
}

}  // namespace

TEST_CASE("smoothness indicators on constant, jump and linear data") {
    const double c[5] = {3, 3, 3, 3, 3};
    const Triple b0 = smoothness_indicators(c);
    for (double b : b0) CHECK(b == 0.0);
    const double jump[5] = {1, 1, 1, 1, 0};
    const Triple bj = smoothness_indicators(jump);
    CHECK(bj[0] == 0.0);
    CHECK(bj[1] == 0.0);
    CHECK(std::abs(bj[2] - 4.0 / 3.0) <= 1e-15);
    const double lin[5] = {0, 1, 2, 3, 4};
    const Triple bl = smoothness_indicators(lin);
    for (double b : bl) CHECK(std::abs(b - 1.0) <= 1e-15);
}

TEST_CASE("right-biased windows are processed reversed") {
    Window5 w{{0.2, 1.5, -0.7, 2.0, 0.9}, Orientation::RightBiased};
    const auto o = w.oriented();
    CHECK(o[0] == 0.9);
    CHECK(o[4] == 0.2);
    const double rev[5] = {0.9, 2.0, -0.7, 1.5, 0.2};
    const WeightScheme s = WeightScheme::z();
    CHECK(reconstruct_interface(w, s) == reconstruct_left(rev, s));
    CHECK(reconstruct_right(w.v.data(), s) == reconstruct_left(rev, s));
}

TEST_CASE("JS weights") {
    const Triple flat = weights_js({0, 0, 0}, d, 1e-6);
    check_rel(flat, d, 1e-15);
    const Triple b = {0.0, 0.0, 4.0 / 3.0};
    const Triple w = weights_js(b, d, 1e-12);
    check_rel(w, js_oracle(b, 1e-12L), 1e-14);
    CHECK(std::abs(w[0] - 0.142857) <= 5e-7);
    CHECK(std::abs(w[1] - 0.857143) <= 5e-7);
    CHECK(std::abs(w[2] - 2.411e-25) <= 5e-29);
    const Triple b2 = {10.0 / 3.0 * 0.25, 13.0 / 12.0 * 0.0 + 0.25, 10.0 / 3.0 * 0.25};
    check_rel(weights_js(b2, d, 1e-12), js_oracle(b2, 1e-12L), 1e-14);
}

TEST_CASE("Henrick mapping") {
    for (double dk : d) {
        CHECK(oracle::ulps(map_henrick(dk, dk), dk) <= 2.0);
        CHECK(map_henrick(0.0, dk) == 0.0);
        CHECK(std::abs(map_henrick(1.0, dk) - 1.0) <= 1e-15);
    }
    CHECK(std::abs(map_henrick(1.0 / 7.0, 0.1) - 143.0 / 1421.0) <= 1e-16);
}

TEST_CASE("mapped weights") {
    check_rel(weights_m({0, 0, 0}, d, 1e-40), d, 4.5e-16);
    const Triple w = weights_m({0.0, 0.0, 4.0 / 3.0}, d, 1e-40);
    CHECK(std::abs(w[0] - 0.127255) <= 5e-7);
    CHECK(std::abs(w[1] - 0.872745) <= 5e-7);
    CHECK(std::abs(w[2] - 1.321e-80) <= 5e-84);
    // Two smooth stencils at the linear JS ratio and one polluted stencil.
    const Triple m5 = weights_m({1.0, 0.0, 0.0}, d, 1e-40);
    CHECK(m5[0] < 1e-70);
    CHECK(std::abs(m5[1] - 6164.0 / 9241.0) <= 1e-12);
    CHECK(std::abs(m5[2] - 3077.0 / 9241.0) <= 1e-12);
}

TEST_CASE("Z weights") {
    for (double c : {0.0, 0.3, 7.0}) check_rel(weights_z({c, c, c}, d, 1e-40), d, 2.3e-16);
    const Triple w = weights_z({0.0, 0.0, 4.0 / 3.0}, d, 1e-40);
    CHECK(std::abs(w[0] - 0.142857) <= 5e-7);
    CHECK(std::abs(w[2] - 6.429e-41) <= 5e-45);
    const Triple b = {1.0, 2.0, 5.0};
    const Triple want = {0.5 / 2.84, 1.8 / 2.84, 0.54 / 2.84};
    check_rel(weights_z(b, d, 1e-40), want, 1e-15);
    check_rel(weights_z(b, d, 1e-40), z_oracle(b, 1e-40L, 1.0L, false), 1e-15);
}

TEST_CASE("ZR weights") {
    check_rel(weights_zr({0, 0, 0}, d, 1e-40, 2.0), d, 2.3e-16);
    const Triple b = {0.0, 0.0, 4.0 / 3.0};
    const Triple w3 = weights_zr(b, d, 1e-40, 3.0);
    CHECK(std::abs(w3[2] - 6.429e-121) <= 5e-125);
    check_rel(weights_zr(b, d, 1e-40, 2.0), z_oracle(b, 1e-40L, 2.0L, true), 1e-13);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    for (int n = 0; n < 10000; ++n) {
        const Triple r = {U(rng), U(rng), U(rng)};
        const Triple z = weights_z(r, d, 1e-40);
        const Triple z1 = weights_zr(r, d, 1e-40, 1.0);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(z[k] - z1[k]) <= 1e-12);
        check_rel(weights_zr(r, d, 1e-40, 2.5), z_oracle(r, 1e-40L, 2.5L, true), 1e-12);
    }
}

TEST_CASE("ZL weights") {
    check_rel(weights_zl({0, 0, 0}, d, 1e-40, 2.0, 1.0), d, 2.3e-16);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    std::uniform_real_distribution<double> bounded(0.1, 10.0);
    for (int n = 0; n < 2000; ++n) {
        const Triple r = {U(rng), U(rng), U(rng)};
        check_rel(weights_zl(r, d, 1e-40, 2.0, 2.0), zl_oracle(r, 1e-40L, 2.0L, 2.0L), 1e-12);
        check_rel(weights_zl(r, d, 1e-40, 1.0 / 7.0, 2.0), zl_oracle(r, 1e-40L, 1.0L / 7, 2.0L), 1e-12);
        const Triple b = {bounded(rng), bounded(rng), bounded(rng)};
        const Triple big_p = weights_zl(b, d, 1e-40, 1e12, 1.0);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(big_p[k] - d[k]) <= 1e-10);
    }
}

TEST_CASE("weights of extreme indicators stay finite and normalised") {
    for (const Triple& b : {Triple{0.0, 1e-300, 1e300}, Triple{1e300, 2e300, 5e299}}) {
        for (const WeightScheme& s : families()) {
            const Triple w = nonlinear_weights(b, d, s);
            double sum = 0.0;
            for (double x : w) {
                CHECK(std::isfinite(x));
                CHECK(x >= 0.0);
                sum += x;
            }
            CHECK(std::abs(sum - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
        }
    }
}

TEST_CASE("weights sum to one within 4 ulps and are nonnegative") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> E(-20.0, 3.0);
    for (const WeightScheme& s : families()) {
        for (int n = 0; n < 10000; ++n) {
            const Triple b = {std::pow(10.0, E(rng)), std::pow(10.0, E(rng)), std::pow(10.0, E(rng))};
            const Triple w = nonlinear_weights(b, d, s);
            CHECK((w[0] >= 0.0 && w[1] >= 0.0 && w[2] >= 0.0));
            CHECK(std::abs(w[0] + w[1] + w[2] - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
        }
    }
}

TEST_CASE("linear weights on linear data reproduce the big stencil") {
    const double lin[5] = {1, 2, 3, 4, 5};
    CHECK(std::abs(reconstruct_left(lin, WeightScheme::linear()) - 3.5) <= 1e-15);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const StencilTable& t = exact_table(Node::Interface);
    for (int n = 0; n < 10000; ++n) {
        double v[5];
        double big = 0.0, scale = 0.0;
        for (int k = 0; k < 5; ++k) {
            v[k] = U(rng);
            big += t.big[k].value() * v[k];
            scale += std::abs(t.big[k].value() * v[k]);
        }
        CHECK(std::abs(reconstruct_left(v, WeightScheme::linear()) - big) <=
              4 * std::numeric_limits<double>::epsilon() * scale);
    }
}

TEST_CASE("constant windows reproduce the constant for every scheme and node") {
    const double c[5] = {0.7, 0.7, 0.7, 0.7, 0.7};
    for (const WeightScheme& s : families()) {
        CHECK(std::abs(reconstruct_left(c, s) - 0.7) <= 1e-15);
        const auto g = reconstruct_gauss_nodes(c, s);
        for (double x : g) CHECK(std::abs(x - 0.7) <= 1e-15);
    }
}

TEST_CASE("jump window under JS gives 1 to double precision") {
    const double v[5] = {1, 1, 1, 1, 0};
    Triple w;
    const double r = reconstruct_left(v, WeightScheme::js(1e-12), &w);
    CHECK(oracle::ulps(r, 1.0) <= 1.0);
    CHECK(std::abs(w[2] - 2.411e-25) <= 5e-29);
}

TEST_CASE("Gauss-point reconstruction reproduces polynomials with linear weights") {
    const WeightScheme lin = WeightScheme::linear();
    Window5 w{{0, 1, 2, 3, 4}, Orientation::LeftBiased};
    CHECK(std::abs(reconstruct_gauss_point(w, lin, Node::GaussCenter) - 2.0) <= 1e-15);
    // Cell averages of x^2 on unit cells centred at j.
    const int i = 3;
    for (int k = 0; k < 5; ++k) {
        const double x = i - 2 + k;
        w.v[k] = x * x + 1.0 / 12.0;
    }
    const double xp = i + 0.5 * std::sqrt(3.0 / 5.0);
    CHECK(std::abs(reconstruct_gauss_point(w, lin, Node::GaussPlus) - xp * xp) <= 1e-13);
    const double xm = i - 0.5 * std::sqrt(3.0 / 5.0);
    CHECK(std::abs(reconstruct_gauss_point(w, lin, Node::GaussMinus) - xm * xm) <= 1e-13);
    CHECK(std::abs(reconstruct_gauss_point(w, lin, Node::GaussCenter) - double(i * i)) <= 1e-13);
}

TEST_CASE("coefficient tables match the primitive-function oracle") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (Node node : {Node::Interface, Node::GaussMinus, Node::GaussCenter, Node::GaussPlus}) {
        const StencilTable& t = exact_table(node);
        const NodeCoefficients& f = node_coefficients(node);
        for (int n = 0; n < 100; ++n) {
            std::array<double, 5> v{};
            for (double& x : v) x = U(rng);
            for (int s = 0; s < 3; ++s) {
                double exact = 0.0, rendered = 0.0;
                for (int k = 0; k < 3; ++k) {
                    exact += t.candidate[s][k].value() * v[s + k];
                    rendered += f.c[s][k] * v[s + k];
                }
                const double want = oracle::candidate(v, s, node);
                CHECK(std::abs(exact - want) <= 1e-12);
                CHECK(std::abs(rendered - want) <= 1e-12);
            }
            double big = 0.0;
            for (int k = 0; k < 5; ++k) big += t.big[k].value() * v[k];
            CHECK(std::abs(big - oracle::big_stencil(v, node)) <= 1e-12);
        }
    }
}

TEST_CASE("linear weights combine the candidates into the big stencil exactly") {
    for (Node node : {Node::Interface, Node::GaussMinus, Node::GaussCenter, Node::GaussPlus}) {
        const StencilTable& t = exact_table(node);
        for (int cell = 0; cell < 5; ++cell) {
            Surd sum;
            for (int s = 0; s < 3; ++s) {
                const int k = cell - s;
                if (k >= 0 && k < 3) sum = sum + t.linear[s] * t.candidate[s][k];
            }
            CHECK(sum == t.big[cell]);
        }
        Surd total;
        for (int s = 0; s < 3; ++s) total = total + t.linear[s];
        CHECK(total == Surd{Rational(1), Rational(0)});
    }
}

TEST_CASE("center-node split reproduces the linear weights exactly") {
    const StencilTable& t = exact_table(Node::GaussCenter);
    const SplitWeights& sp = center_split();
    CHECK(sp.sigma_plus - sp.sigma_minus == Rational(1));
    for (int s = 0; s < 3; ++s) {
        CHECK(t.linear[s].b == Rational(0));
        CHECK(sp.gamma_plus[s] >= Rational(0));
        CHECK(sp.gamma_minus[s] >= Rational(0));
        CHECK(sp.sigma_plus * sp.gamma_plus[s] - sp.sigma_minus * sp.gamma_minus[s] == t.linear[s].a);
    }
    bool has_negative = false;
    for (int s = 0; s < 3; ++s) has_negative = has_negative || t.linear[s].a < Rational(0);
    CHECK(has_negative);
}

TEST_CASE("combined center-node weights sum to one") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> E(-12.0, 2.0);
    for (const WeightScheme& s : families()) {
        for (int n = 0; n < 1000; ++n) {
            const Triple b = {std::pow(10.0, E(rng)), std::pow(10.0, E(rng)), std::pow(10.0, E(rng))};
            const Triple w = center_node_weights(b, s);
            CHECK(std::abs(w[0] + w[1] + w[2] - 1.0) <= 4 * std::numeric_limits<double>::epsilon());
        }
    }
}

TEST_CASE("batched reconstructions agree with the per-window calls") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<double> v(64);
    for (double& x : v) x = U(rng);
    v[30] += 3.0;
    const int count = 60;
    for (const WeightScheme& s : families()) {
        std::vector<double> left(count), right(count), mi(count), ce(count), pl(count);
        reconstruct_left_batch(v.data(), 1, 1, count, s, left.data());
        reconstruct_left_batch(v.data() + 4, -1, 1, count, s, right.data());
        reconstruct_gauss_nodes_batch(v.data(), count, s, mi.data(), ce.data(), pl.data());
        for (int j = 0; j < count; ++j) {
            CHECK(std::abs(left[j] - reconstruct_left(&v[j], s)) <= 1e-14);
            CHECK(std::abs(right[j] - reconstruct_right(&v[j], s)) <= 1e-14);
            const auto g = reconstruct_gauss_nodes(&v[j], s);
            CHECK(std::abs(mi[j] - g[0]) <= 1e-14);
            CHECK(std::abs(ce[j] - g[1]) <= 1e-14);
            CHECK(std::abs(pl[j] - g[2]) <= 1e-14);
        }
    }
}

TEST_CASE("doubling a jump window keeps the dominant stencil") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    std::uniform_int_distribution<int> pos(1, 4);
    for (const WeightScheme& s : {WeightScheme::js(), WeightScheme::z(), WeightScheme::zr(2.0),
                                  WeightScheme::zl(2.0, 1.0)}) {
        for (int n = 0; n < 1000; ++n) {
            const double lo = U(rng), hi = lo + 0.5 + std::abs(U(rng));
            const int k = pos(rng);
            double v[5], v2[5];
            for (int j = 0; j < 5; ++j) {
                v[j] = j < k ? lo : hi;
                v2[j] = 2.0 * v[j];
            }
            Triple w1, w2;
            reconstruct_left(v, s, &w1);
            reconstruct_left(v2, s, &w2);
            CHECK(std::max_element(w1.begin(), w1.end()) - w1.begin() ==
                  std::max_element(w2.begin(), w2.end()) - w2.begin());
        }
    }
}

TEST_CASE("weights approach the linear ones on smooth data") {
    for (const WeightScheme& s : {WeightScheme::js(), WeightScheme::z(), WeightScheme::zr(2.0),
                                  WeightScheme::zl(2.0, 2.0), WeightScheme::zl(1.0, 1.0)}) {
        const auto o = oracle::deviation_orders(s, oracle::sine_primitive, 0.3);
        CHECK(o[0] >= 1.9);
        CHECK(o[1] >= 1.9);
    }
    const auto om = oracle::deviation_orders(WeightScheme::m(), oracle::sine_primitive, 0.3);
    CHECK(om[0] >= 2.9);
    CHECK(om[1] >= 2.9);
    const auto oc = oracle::deviation_orders(WeightScheme::zl(2.0, 2.0), oracle::critical_primitive, 0.0);
    CHECK(oc[0] >= 1.9);
    CHECK(oc[1] >= 1.9);
}

TEST_CASE("scheme parsing and validation") {
    CHECK(parse_family("ZL") == Family::ZL);
    CHECK(parse_family("js") == Family::JS);
    CHECK_THROWS_AS(parse_family("weno7"), ConfigError);
    CHECK_THROWS_AS(WeightScheme::zl(0.0, 1.0).validate(), ConfigError);
    CHECK_THROWS_AS(WeightScheme::zl(1.0, 0.0).validate(), ConfigError);
    CHECK_THROWS_AS(WeightScheme::js(0.0).validate(), ConfigError);
    CHECK_THROWS_AS(WeightScheme::zr(0.5).validate(), ConfigError);
    CHECK(WeightScheme::zl(1.0, 2.0).label() == "ZL(p=1,q=2)");
    CHECK(WeightScheme::zr(2.0).label() == "ZR(p=2)");
    CHECK(default_scheme(Family::JS).eps == 1e-6);
    CHECK(default_scheme(Family::Z).eps == 1e-40);
}
