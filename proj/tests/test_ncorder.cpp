#include <doctest.h>

#include <qfourier/ncorder.hpp>
#include <qfourier/qcore.hpp>

using namespace qfourier;

namespace {

QCoef qp(int k) { return QCoef(QLaurent::monomial(1, k)); }

} // namespace

TEST_SUITE("ncorder") {

TEST_CASE("Laurent polynomial arithmetic") {
    QLaurent a = QLaurent::one_minus_q(2);  // 1 - q^2
    QLaurent b = QLaurent::monomial(Rational(1, 2), -1);
    CHECK((a * b).evaluate(0.5) == doctest::Approx(0.75 * 1.0));
    CHECK((a - a).is_zero());
    CHECK(a.pow(3).evaluate(0.3) == doctest::Approx(std::pow(1 - 0.09, 3)));
    CHECK(a.to_string().find("q^2") != std::string::npos);
}

TEST_CASE("coefficients with q-Pochhammer denominators compare exactly") {
    // 1/(q^2;q^2)_2 * (1 - q^4) = 1/(1 - q^2)
    QCoef x = QCoef::inv_qpoch(2) * QCoef(QLaurent::one_minus_q(4));
    QCoef y = QCoef(1, {}, {{1, 1}});
    CHECK(x == y);
    CHECK_FALSE(x == QCoef(1));
    CHECK(QCoef::q_number(3).evaluate(0.5) == cplx(1 + 0.25 + 0.0625));
    CHECK(QCoef::q_number(-1).evaluate(0.5).real() == doctest::Approx(-4.0));
    CHECK(QCoef::i() * QCoef::i() == QCoef(-1));
}

TEST_CASE("normal ordering of products") {
    const NCLaurent z = NCLaurent::z(), s = NCLaurent::s();
    CHECK(nc_mul(z, s) == NCLaurent::monomial(1, 1, 1));
    CHECK(nc_mul(s, z) == NCLaurent::monomial(qp(-2), 1, 1));
    const NCLaurent zs = nc_mul(z, s);
    CHECK(nc_mul(zs, zs) == NCLaurent::monomial(qp(-2), 2, 2));
    for (int n = 1; n <= 8; ++n)
        CHECK(nc_pow(zs, n) == NCLaurent::monomial(qp(-n * (n - 1)), n, n));
}

TEST_CASE("derivative actions") {
    const NCLaurent one = NCLaurent::monomial(1, 0, 0);
    CHECK(nc_apply_dz(one).is_zero());
    CHECK(nc_apply_ds(one).is_zero());
    CHECK(nc_apply_dz(NCLaurent::monomial(1, 2, 0)) == NCLaurent::monomial(QCoef(1) + qp(2), 1, 0));
    CHECK(nc_apply_dz(NCLaurent::monomial(1, -1, 0)) == NCLaurent::monomial(-qp(-2), -2, 0));
    CHECK(nc_apply_ds(NCLaurent::monomial(1, 0, 2)) == NCLaurent::monomial(QCoef(1) + qp(2), 0, 1));
    CHECK(nc_apply_ds(NCLaurent::monomial(1, 1, 1)) == NCLaurent::monomial(qp(2), 1, 0));
    CHECK(nc_apply_ds_trailing(NCLaurent::monomial(1, 1, 1)) == NCLaurent::monomial(1, 1, 0));
}

TEST_CASE("operator relations on monomials") {
    const QCoef q2 = qp(2), qm2 = qp(-2);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            const NCLaurent x = NCLaurent::monomial(1, a, b);
            CHECK(nc_left_z(nc_left_s(x)) == nc_left_s(nc_left_z(x)) * q2);
            CHECK(nc_apply_dz(nc_left_s(x)) == nc_left_s(nc_apply_dz(x)) * qm2);
            CHECK(nc_apply_ds(nc_left_z(x)) == nc_left_z(nc_apply_ds(x)) * q2);
            CHECK(nc_apply_dz(nc_apply_ds(x)) == nc_apply_ds(nc_apply_dz(x)) * q2);
            CHECK(nc_lambda_z(nc_left_z(x)) == nc_left_z(nc_lambda_z(x)) * q2);
        }
}

TEST_CASE("associativity on monomial triples") {
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; b += 2) {
            const NCLaurent x = NCLaurent::monomial(1, a, b), y = NCLaurent::monomial(1, b, a),
                            u = NCLaurent::monomial(QCoef::i(), 1, -a);
            CHECK(nc_mul(nc_mul(x, y), u) == nc_mul(x, nc_mul(y, u)));
        }
}

TEST_CASE("normal-ordered series evaluated at numbers is g(z s)") {
    const double q = 0.5;
    QParams p(q);
    const auto a = coeffs_E(30);
    const NCLaurent series = normal_order_series(a, QCoef(1));
    const cplx z(0.3, 0.2), s(-0.5, 0.4);
    CHECK(std::abs(series.evaluate(q, z, s) - E_q2(z * s, p)) < 1e-14);
    const NCLaurent e = normal_order_series(coeffs_e(40), QCoef(1));
    CHECK(std::abs(e.evaluate(q, z, s) - e_q2(z * s, p)) < 1e-14);
}

TEST_CASE("kernel identities at low and default order") {
    for (int N : {2, 12})
        for (const auto& c : check_kernel_identities(N)) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.holds == c.expected);
        }
    CHECK_THROWS(check_kernel_identities(1));
}

TEST_CASE("truncation drops high z-powers") {
    const NCLaurent e = normal_order_series(coeffs_e(6), QCoef(1));
    CHECK(e.truncate(3).terms().size() == 4);
}

} // TEST_SUITE
