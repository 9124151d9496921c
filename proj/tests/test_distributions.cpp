#include <doctest.h>

#include <qfourier/distributions.hpp>

#include <cmath>

using namespace qfourier;

namespace {

const cplx I(0.0, 1.0);

Window deep_window(const QParams& p) {
    const double lq = std::log(p.q2());
    return Window(int(std::floor(std::log(1e5) / lq)), int(std::ceil(std::log(1e-14) / (0.3 * lq))));
}

// (1-q^2) sum_m q^{2m} [f(q^{2m}) phi(q^{2m}) + f(-q^{2m}) phi(-q^{2m})] for real f
cplx direct_pairing(double (*f)(double, double), double param, const Skeleton& phi) {
    const QParams& p = phi.params();
    cplx sum = 0.0;
    for (int m = phi.window().m_min; m <= phi.window().m_max; ++m) {
        const double x = p.lattice_point(m);
        sum += (1 - p.q2()) * x * (f(x, param) * phi.pos_at(m) + f(-x, param) * phi.neg_at(m));
    }
    return sum;
}

} // namespace

TEST_SUITE("distributions") {

TEST_CASE("delta and the step functions") {
    QParams p(0.5);
    Window w(-10, 80);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x) * (2 + x), x); }, w, p);
    CHECK(std::abs(pair(Distribution::delta(), phi) - 2.0) < 1e-15);
    // <theta+, phi> is the half-line Jackson integral
    cplx half = 0.0;
    for (int m = w.m_min; m <= w.m_max; ++m)
        half += 0.75 * p.lattice_point(m) * phi.pos_at(m);
    CHECK(std::abs(pair(Distribution::theta_plus(), phi) - half) < 1e-14);
    // d(theta+ - theta-) = 2 delta
    auto jump = dist_derivative(Distribution::theta_plus() - Distribution::theta_minus());
    CHECK(std::abs(pair(jump, phi) - 2.0 * pair(Distribution::delta(), phi)) < 1e-13);
}

TEST_CASE("pairing conjugates coefficients") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x)); }, Window(-10, 80), p);
    const cplx c(0.5, 2.0);
    CHECK(std::abs(pair(Distribution::delta() * c, phi) - std::conj(c)) < 1e-15);
    auto reg = Distribution::regular([](double x) { return cplx(0, x * x); }, "i x^2");
    auto reg_real = Distribution::regular([](double x) { return cplx(x * x); }, "x^2");
    CHECK(std::abs(pair(reg, phi) + I * pair(reg_real, phi)) < 1e-15);
}

TEST_CASE("derivative of a regular distribution") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x) * (1 + x)); }, Window(-10, 80), p);
    auto d = dist_derivative(Distribution::regular([](double x) { return cplx(x * x); }, "x^2"));
    auto expected = Distribution::regular([](double x) { return cplx(1.25 * x); }, "1.25 x");
    CHECK(std::abs(pair(d, phi) - pair(expected, phi)) < 1e-13);
}

TEST_CASE("delta_pow is a scaled Taylor coefficient") {
    for (double q : {0.3, 0.5, 0.7}) {
        QParams p(q);
        auto phi = sample([](double x) { return cplx(std::exp(-x * x)); }, deep_window(p), p);
        // d^2 exp(-x^2) at 0 is -(1+q^2); the prefactor is (1-q^2)^2/(q^2;q^2)_2
        CHECK(pair(Distribution::delta_pow(2), phi).real() == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(std::abs(pair(Distribution::delta_pow(1), phi)) < 1e-10);
        auto lin = sample([](double x) { return cplx(3 * x * std::exp(-x * x) + 1); }, deep_window(p), p);
        CHECK(pair(Distribution::delta_pow(1), lin).real() == doctest::Approx(3.0).epsilon(1e-8));
    }
}

TEST_CASE("regularized negative powers match the direct sum away from 0") {
    // For phi vanishing to high order at 0 the plain sum of z^{-k-1} phi converges.
    for (double q : {0.3, 0.5, 0.7}) {
        QParams p(q);
        auto phi = sample([](double x) { return cplx(std::pow(x, 6) * std::exp(-x * x) * (1 + 0.5 * x)); },
                          deep_window(p), p);
        for (int k = 0; k <= 2; ++k) {
            const cplx direct = direct_pairing([](double x, double k) { return std::pow(x, -k - 1); }, k, phi);
            const cplx reg = pair(Distribution::pow_int(-k - 1), phi);
            INFO("q = " << q << ", k = " << k);
            CHECK(std::abs(reg - direct) < 1e-8 * std::abs(direct));
        }
    }
}

TEST_CASE("regularized nu powers match the direct sum away from 0") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::pow(x, 6) * std::exp(-x * x) * (1 + 0.5 * x)); },
                      deep_window(p), p);
    for (double nu : {0.5, 1.3, 2.4})
        for (int k = 1; k <= 2; ++k) {
            const double e = nu - k;
            const cplx plus = direct_pairing([](double x, double e) { return x > 0 ? std::pow(x, e) : 0.0; }, e, phi);
            const cplx minus = direct_pairing([](double x, double e) { return x < 0 ? std::pow(-x, e) : 0.0; }, e, phi);
            INFO("nu = " << nu << ", k = " << k);
            CHECK(std::abs(pair(Distribution::pow_plus_nu(nu, k), phi) - plus) < 1e-8 * std::abs(plus));
            CHECK(std::abs(pair(Distribution::pow_minus_nu(nu, k), phi) - minus) < 1e-8 * std::abs(minus));
        }
}

TEST_CASE("invalid power distributions") {
    CHECK_THROWS_AS(Distribution::pow_plus_nu(-1.5, 0), InvalidNu);
    CHECK_THROWS_AS(Distribution::pow_minus_nu(1.0, 2), InvalidNu);
    CHECK_THROWS_AS(Distribution::pow_plus_nu(0.5, -1), InvalidNu);
}

TEST_CASE("numeric transform of z^-1 is i sign s") {
    QParams p(0.5);
    Window w(-10, 10);
    auto g = fourier_numeric(Distribution::regular([](double z) { return cplx(1 / z); }, "z^-1"), w, p);
    for (int m = w.m_min; m <= w.m_max; ++m) {
        CHECK(std::abs(g.pos_at(m) - I) < 1e-12);
        CHECK(std::abs(g.neg_at(m) + I) < 1e-12);
    }
    CHECK_THROWS_AS(fourier_numeric(Distribution::delta(), w, p), NonIntegrable);
}

TEST_CASE("numeric transform of a basis skeleton") {
    QParams p(0.5);
    Window w(-6, 10);
    auto g = fourier_numeric(Distribution::regular(basis(0, Sign::plus, w, p), "basis"), w, p);
    for (int m = w.m_min; m <= w.m_max; ++m) {
        const cplx expected = 0.75 / (2 * theta0(p)) * e_q2(I * 0.75 * p.lattice_point(m), p);
        CHECK(std::abs(g.pos_at(m) - expected) < 1e-14);
    }
}

TEST_CASE("c_nu against a direct long double sum") {
    for (double q : {0.3, 0.5, 0.7})
        for (double nu : {0.3, 0.5, 0.7}) {
            QParams p(q);
            const long double qq = (long double)q * q, a = 1 - qq;
            std::complex<long double> sum = 0;
            for (int m = -400; m <= 400; ++m) {
                const long double x = std::pow(qq, (long double)m);
                sum += std::pow(x, (long double)nu) * std::complex<long double>(1 / x, a) / (1 / (a * x) + a * x);
            }
            const cplx c = c_nu(nu, p);
            INFO("q = " << q << ", nu = " << nu);
            CHECK(std::abs(c - cplx(double(sum.real()), double(sum.imag()))) < 1e-12 * std::abs(c));
        }
    CHECK_THROWS_AS(c_nu(1.0, QParams(0.5)), OutOfStrip);
    CHECK_THROWS_AS(c_nu(-0.2, QParams(0.5)), OutOfStrip);
}

TEST_CASE("c_nu at q = 0.5, nu = 0.5") {
    const cplx c = c_nu(0.5, QParams(0.5));
    CHECK(c.real() == doctest::Approx(1.390504485716453).epsilon(1e-13));
    CHECK(c.imag() == doctest::Approx(1.3861696316210719).epsilon(1e-13));
}

TEST_CASE("direct image series of z_+^(nu-1)") {
    QParams p(0.5);
    for (double nu : {0.3, 0.5, 0.7}) {
        const cplx C = nu_row_factor(nu, p) * c_nu(nu, p);
        CHECK(std::abs(nu_image_direct(nu, 1.0, p) - C) < 1e-12 * std::abs(C));
        CHECK(std::abs(nu_image_direct(nu, -1.0, p) - std::conj(C)) < 1e-12 * std::abs(C));
    }
}

TEST_CASE("table constants") {
    QParams p(0.5);
    const double t0 = 0.85054116482456221;
    CHECK(fourier_table(Distribution::delta(), p).constant.real() == doctest::Approx(1 / (2 * t0)).epsilon(1e-14));
    CHECK(fourier_table(Distribution::delta(), p).constant.real() == doctest::Approx(0.58786).epsilon(1e-5));
    CHECK(std::abs(fourier_table(Distribution::theta_plus(), p).constant - I / (2 * t0)) < 1e-15);
    // z^0 = 1 -> 2 delta
    CHECK(std::abs(fourier_table(Distribution::pow_int(0), p).constant - 2.0) < 1e-15);
    // z^-1 -> i sign s
    CHECK(std::abs(fourier_table(Distribution::pow_int(-1), p).constant - I) < 1e-15);
    // z^2: 2 i^2 q^-6 (1-q^2)(1-q^4)/(1-q^2)^2
    const double c2 = -2 * std::pow(0.5, -6) * (1 - 0.0625) / 0.75;
    CHECK(std::abs(fourier_table(Distribution::pow_int(2), p).constant - c2) < 1e-12);
    // z^-3: i^3 (1-q^2)^2/((1-q^2)(1-q^4))
    CHECK(std::abs(fourier_table(Distribution::pow_int(-3), p).constant + I * 0.75 / (1 - 0.0625)) < 1e-15);
    CHECK_THROWS_AS(fourier_table(Distribution::sign_s(), p), UnsupportedDistribution);
    CHECK_THROWS_AS(fourier_table(Distribution::pow_plus_nu(1.5, 1), p), OutOfStrip);
}

TEST_CASE("transform table rows") {
    QParams p(0.5);
    CHECK(transform_table(p, 2, std::nullopt).size() == 5);
    const auto rows = transform_table(p, 2, 0.5);
    REQUIRE(rows.size() == 7);
    CHECK(rows[3].n == 2);
    CHECK(rows[5].nu == 0.5);
    CHECK_THROWS_AS(transform_table(p, -1, std::nullopt), UsageError);
}

TEST_CASE("Parseval check on every row") {
    QParams p(0.5);
    auto psi = sample([](double s) { return cplx(1, s) * std::exp(-s * s / 2); }, deep_window(p), p);
    for (int n : {0, 1, 2})
        for (const auto& row : transform_table(p, n, 0.3)) {
            INFO(row.source_label << ", n = " << n);
            CHECK(parseval_check(row, psi) < 1e-6);
        }
}

TEST_CASE("labels") {
    CHECK(Distribution::delta().label().find("delta") != std::string::npos);
    CHECK(Distribution().is_zero());
    CHECK_FALSE(Distribution::theta_plus().is_zero());
}

} // TEST_SUITE
