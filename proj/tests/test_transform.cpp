#include <doctest.h>

#include <qfourier/transform.hpp>

#include <cmath>

using namespace qfourier;

namespace {

// E(x) = prod (1 + x q^{2k}) and e(x) = sum x^n/(q^2;q^2)_n, written out here
// so the kernels are checked against something other than qcore.
cplx E_ref(cplx x, double qq) {
    cplx r = 1.0;
    for (int k = 0; k < 300; ++k)
        r *= 1.0 + x * std::pow(qq, k);
    return r;
}

cplx e_ref(cplx x, double qq) {
    cplx term = 1.0, sum = 1.0;
    for (int n = 1; n < 300; ++n) {
        term *= x / (1.0 - std::pow(qq, n));
        sum += term;
    }
    return sum;
}

const cplx I(0.0, 1.0);

} // namespace

TEST_SUITE("transform") {

TEST_CASE("kernels") {
    QParams p(0.5);
    for (double z : {0.5, -1.0, 3.0})
        for (double s : {0.25, -2.0}) {
            const cplx kf = kernel_forward(z, s, p), ref = E_ref(I * 0.75 * 0.25 * z * s, 0.25);
            CHECK(std::abs(kf - ref) < 1e-13 * std::abs(ref));
            const cplx x = -I * 0.75 * z * s;
            if (std::abs(x) < 1) {
                const cplx ki = kernel_inverse(z, s, p), eref = e_ref(x, 0.25);
                CHECK(std::abs(ki - eref) < 1e-13 * std::abs(eref));
            }
            CHECK(std::abs(kernel_forward_scaled(z, s, p).value() - kf) < 1e-14 * std::abs(kf));
        }
}

TEST_CASE("forward of a basis skeleton is a kernel column") {
    QParams p(0.5);
    Window w(-6, 12);
    for (int n : {-2, 0, 3})
        for (Sign sg : {Sign::plus, Sign::minus}) {
            const double z = (sg == Sign::plus ? 1 : -1) * p.lattice_point(n);
            auto f = fourier_forward(basis(n, sg, w, p));
            CHECK(f.window() == w);
            for (int m = w.m_min; m <= w.m_max; m += 3) {
                const cplx expected = 0.75 * p.lattice_point(n) * kernel_forward(z, p.lattice_point(m), p);
                CHECK(std::abs(f.pos_at(m) - expected) < 1e-13 * std::abs(expected));
            }
        }
}

TEST_CASE("inverse of a basis skeleton is a kernel column") {
    QParams p(0.5);
    Window w(-6, 12);
    auto g = fourier_inverse(basis(1, Sign::minus, w, p));
    const double scale = 0.75 * 0.25 / (2 * theta0(p));
    for (int m = w.m_min; m <= w.m_max; m += 2) {
        const cplx expected = scale * kernel_inverse(-p.lattice_point(m), -0.25, p);
        CHECK(std::abs(g.neg_at(m) - expected) < 1e-13 * std::abs(expected) + 1e-300);
    }
}

TEST_CASE("output does not depend on the thread count") {
    QParams p(0.5);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x), x / (1 + x * x * x * x)); }, Window(-16, 40), p);
    const auto a = to_json(fourier_forward(phi, 1)), b = to_json(fourier_forward(phi, 4)),
               c = to_json(fourier_forward(phi, 7));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(to_json(fourier_inverse(phi, 1)) == to_json(fourier_inverse(phi, 3)));
}

TEST_CASE("non-integrable input is rejected") {
    QParams p(0.5);
    auto flat = sample([](double) { return cplx(1.0); }, Window(-6, 20), p);
    CHECK_THROWS_AS(fourier_forward(flat), NonIntegrable);
    CHECK_THROWS_AS(fourier_inverse(flat), NonIntegrable);
}

TEST_CASE("orthogonality diagonal") {
    QParams p(0.5);
    CHECK(orthogonality_diagonal(p) == doctest::Approx(2 * 0.85054116482456221 / 0.75).epsilon(1e-14));
    Window w(-24, 48);
    for (int n : {-3, 0, 2}) {
        const auto vals = orthogonality(n, Direction::forward, p, w);
        for (const auto& v : vals) {
            if (v.sign == Sign::plus && v.m == n)
                CHECK(std::abs(v.value - orthogonality_diagonal(p)) < 1e-10);
            if (v.m > n)
                CHECK(std::abs(v.value) < 1e-12);
        }
    }
}

TEST_CASE("commutation relations on a Gaussian") {
    for (double q : {0.3, 0.5, 0.7}) {
        QParams p(q);
        auto idx = [&](double x) { return int(std::lround(std::log(x) / std::log(p.q2()))); };
        Window w(idx(1e5), int(std::ceil(std::log(1e-30) / std::log(p.q2()))));
        Window cw(idx(64), idx(1e-6));
        auto phi = sample([](double x) { return cplx(std::exp(-x * x)); }, w, p);
        for (int r = 0; r < 6; ++r) {
            INFO("q = " << q << ", relation " << to_string(Relation(r)));
            CHECK(commutation_check(phi, Relation(r), cw) < 1e-8);
        }
    }
}

TEST_CASE("relation names") {
    for (int r = 0; r < 6; ++r)
        CHECK(relation_from_string(to_string(Relation(r))) == Relation(r));
    CHECK_THROWS_AS(relation_from_string("nope"), UsageError);
}

TEST_CASE("relative residual") {
    QParams p(0.5);
    Window w(0, 3);
    auto a = sample([](double x) { return cplx(x); }, w, p);
    CHECK(relative_residual(a, a) == 0.0);
    CHECK(relative_residual(a * 1.5, a) == doctest::Approx(0.5));
    auto zero = a * 0.0;
    CHECK(std::isinf(relative_residual(a, zero)));
    CHECK_THROWS_AS(relative_residual(a, sample([](double x) { return cplx(x); }, Window(5, 6), p)), WindowError);
}

TEST_CASE("roundoff bound is nonnegative and small next to the transform") {
    QParams p(0.7);
    auto phi = sample([](double x) { return cplx(std::exp(-x * x)); }, Window(-20, 90), p);
    auto bound = transform_roundoff_bound(phi, Direction::inverse);
    auto f = fourier_inverse(phi);
    for (int m = -20; m <= 90; m += 7)
        CHECK(bound.pos_at(m).real() >= 0.0);
    CHECK(bound.max_abs() < 1e-12 * f.max_abs());
}

} // TEST_SUITE
