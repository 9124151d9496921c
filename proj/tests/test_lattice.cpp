#include <doctest.h>

#include <qfourier/lattice.hpp>

#include <cmath>

using namespace qfourier;

namespace {

cplx gauss(double x) { return std::exp(-x * x); }

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("sample evaluates pointwise") {
    QParams p(0.5);
    Window w(-3, 5);
    auto one = sample([](double) { return cplx(1.0); }, w, p);
    for (int m = -3; m <= 5; ++m)
        CHECK((one.pos_at(m) == 1.0 && one.neg_at(m) == 1.0));
    auto g = sample(gauss, w, p);
    CHECK(g.pos_at(0) == std::exp(-1.0));
    auto odd = sample([](double x) { return cplx(x * x * x); }, w, p);
    for (int m = -3; m <= 5; ++m)
        CHECK(odd.neg_at(m) == -odd.pos_at(m));
}

TEST_CASE("windows and skeleton invariants") {
    CHECK_THROWS_AS(Window(3, 2), WindowError);
    QParams p(0.5);
    CHECK_THROWS(Skeleton(p, Window(0, 2), {1, 2, 3}, {1, 2}));
    CHECK_THROWS(basis(9, Sign::plus, Window(0, 5), p));
    CHECK_FALSE(intersect(Window(0, 2), Window(3, 4)).has_value());
    CHECK(*intersect(Window(0, 5), Window(3, 9)) == Window(3, 5));
}

TEST_CASE("basis and shift") {
    QParams p(0.5);
    Window w(-4, 6);
    auto b = basis(2, Sign::plus, w, p);
    CHECK(b.pos_at(2) == 1.0);
    CHECK(b.max_abs() == 1.0);
    auto s = shift_lambda(b, 1);
    CHECK(s.pos_at(1) == 1.0);
    CHECK(s.pos_at(2) == 0.0);
    CHECK(s.window() == Window(-4, 5));
    auto id = shift_lambda(b, 0);
    CHECK(id.pos() == b.pos());
    CHECK(shift_lambda(b, -2).window() == Window(-2, 6));
    CHECK_THROWS(shift_lambda(b, 20));
}

TEST_CASE("Lambda(x phi) = q^2 x Lambda phi") {
    QParams p(0.5);
    auto phi = sample(gauss, Window(-6, 20), p);
    auto a = shift_lambda(multiply_by_power(phi, 1), 1);
    auto b = multiply_by_power(shift_lambda(phi, 1), 1) * p.q2();
    CHECK(relative_max_distance(a, b) < 1e-15);
}

TEST_CASE("q-derivative of powers") {
    QParams p(0.5);
    Window w(-5, 12);
    auto d1 = q_derivative(sample([](double) { return cplx(1.0); }, w, p), 1);
    CHECK(d1.max_abs() == 0.0);
    CHECK(d1.window() == Window(-5, 11));
    auto dz = q_derivative(sample([](double x) { return cplx(x); }, w, p), 1);
    for (int m = -5; m <= 11; ++m)
        CHECK(dz.pos_at(m).real() == doctest::Approx(1.0).epsilon(1e-15));
    auto dz2 = q_derivative(sample([](double x) { return cplx(x * x); }, w, p), 1);
    auto inv = q_derivative(sample([](double x) { return cplx(1 / x); }, w, p), 1);
    for (int m = -5; m <= 11; ++m) {
        const double x = p.lattice_point(m);
        CHECK(dz2.pos_at(m).real() == doctest::Approx(1.25 * x).epsilon(1e-14));
        CHECK(dz2.neg_at(m).real() == doctest::Approx(-1.25 * x).epsilon(1e-14));
        CHECK(inv.pos_at(m).real() == doctest::Approx(-4.0 / (x * x)).epsilon(1e-14));
    }
    CHECK_THROWS(q_derivative(sample(gauss, Window(0, 1), p), 3));
}

TEST_CASE("d Lambda = q^2 Lambda d") {
    QParams p(0.7);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x) * (1 + x)); }, Window(-8, 30), p);
    auto a = q_derivative(shift_lambda(phi, 1), 1);
    auto b = shift_lambda(q_derivative(phi, 1), 1) * p.q2();
    CHECK(relative_max_distance(a, b) < 1e-14);
}

TEST_CASE("Jackson integral") {
    QParams p(0.5);
    Window w(-10, 60);
    CHECK(jackson_integral(basis(3, Sign::plus, w, p)).value.real() ==
          doctest::Approx(0.75 * std::pow(0.25, 3)).epsilon(1e-15));
    auto odd = sample([](double x) { return cplx(x * std::exp(-x * x)); }, w, p);
    CHECK(std::abs(jackson_integral(odd).value) < 1e-17);
    auto g = jackson_integral(sample(gauss, w, p));
    auto g8 = jackson_integral(sample(gauss, Window(-18, 68), p));
    CHECK(g.converged);
    CHECK(std::abs(g.value - g8.value) < 1e-12);
    // a sum that does not decay at the large end is flagged
    auto flat = jackson_integral(sample([](double) { return cplx(1.0); }, w, p));
    CHECK_FALSE(flat.converged);
    CHECK_FALSE(flat.diagnostic.empty());
}

TEST_CASE("integral of a derivative vanishes") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::exp(-(x - 0.3) * (x - 0.3)), x * std::exp(-x * x)); },
                      Window(-24, 48), p);
    CHECK(std::abs(jackson_integral(q_derivative(phi, 1)).value) < 1e-12);
}

TEST_CASE("finite q-integrals") {
    QParams p(0.5);
    CHECK(finite_q_integral([](double) { return cplx(1.0); }, 0, 1, p).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(finite_q_integral([](double x) { return cplx(x); }, 0, 1, p).real() == doctest::Approx(0.8).epsilon(1e-15));
    // int_0^2 x^2 = 8 (1-q^2)/(1-q^6)
    CHECK(finite_q_integral([](double x) { return cplx(x * x); }, 0, 2, p).real() ==
          doctest::Approx(8 * 0.75 / (1 - std::pow(0.25, 3))).epsilon(1e-14));
    CHECK_THROWS_AS(finite_q_integral([](double x) { return cplx(1 / (x * x)); }, 0, 1, p), NonConvergent);
}

TEST_CASE("absolute integrability diagnostic") {
    QParams p(0.5);
    Window w(-10, 60);
    CHECK(abs_integrable_check(sample(gauss, w, p)).integrable);
    CHECK_FALSE(abs_integrable_check(sample([](double x) { return cplx(1 / x); }, w, p)).integrable);
    CHECK(abs_integrable_check(basis(4, Sign::minus, w, p)).integrable);
}

TEST_CASE("seminorms") {
    QParams p(0.5);
    Window w(-24, 48);
    CHECK(seminorm(sample([](double) { return cplx(1.0); }, w, p), 0, 1) == 0.0);
    CHECK(std::isfinite(seminorm(basis(0, Sign::plus, w, p), 2, 2)));
    const double s = seminorm(sample(gauss, w, p), 3, 0);
    const double s2 = seminorm(sample(gauss, Window(-48, 96), p), 3, 0);
    CHECK(std::isfinite(s));
    CHECK(s < s2 + 1e-10);
    // max |x^3 exp(-x^2)| over the lattice is at most the continuous maximum
    CHECK(s <= std::pow(1.5, 1.5) * std::exp(-1.5) + 1e-15);
}

TEST_CASE("value at zero") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::cos(x) + x); }, Window(-4, 40), p);
    CHECK(std::abs(value_at_zero(phi) - 1.0) < 1e-15);
}

TEST_CASE("skeleton JSON round trip is bit exact") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x) / 3, std::sin(x) / 7); }, Window(-5, 9), p);
    auto back = skeleton_from_json(to_json(phi), p);
    CHECK(back.window() == phi.window());
    CHECK(back.pos() == phi.pos());
    CHECK(back.neg() == phi.neg());
    CHECK_THROWS_AS(skeleton_from_json(to_json(phi), QParams(0.3)), ParseError);
    CHECK_THROWS_AS(skeleton_from_json("{not json", p), ParseError);
    CHECK_THROWS_AS(skeleton_from_json(R"({"q":0.5,"m_min":0,"m_max":1,"pos":[[1,0]],"neg":[[1,0]]})", p),
                    ParseError);
}

TEST_CASE("linearity") {
    QParams p(0.5);
    Window w(-6, 20);
    // Both vanish to fourth order at 0, so the second differences carry no
    // amplified roundoff near 0.
    auto a = sample([](double x) { return cplx(std::pow(x, 4) * std::exp(-x * x)); }, w, p);
    auto b = sample([](double x) { return cplx(x, 1) * std::pow(x, 4) * std::exp(-x * x); }, w, p);
    const cplx c(0.3, -2.0);
    auto lhs = q_derivative(a + b * c, 2);
    auto rhs = q_derivative(a, 2) + q_derivative(b, 2) * c;
    CHECK(relative_max_distance(lhs, rhs) < 1e-14);
    CHECK(std::abs(jackson_integral(a + b * c).value -
                   (jackson_integral(a).value + c * jackson_integral(b).value)) < 1e-14);
}

} // TEST_SUITE
