#include <qfourier/qcore.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qfourier {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr int max_product_terms = 100000;

std::string fmt(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// Index k at which |z| q^{2k} is closest to 1.
int peak_index(double absz, double qq) {
    return static_cast<int>(std::lround(std::log(absz) / -std::log(qq)));
}

void check_e_poles(cplx z, const QParams& p) {
    double a = std::abs(z);
    if (a < 0.5)
        return;
    int k0 = peak_index(a, p.q2());
    for (int k = std::max(0, k0 - 1); k <= k0 + 1; ++k) {
        double pole = std::pow(p.q2(), -k);
        if (std::abs(z - pole) < p.pole_guard()) {
            std::ostringstream os;
            os.precision(17);
            os << "e_q2 argument " << fmt(z) << " is within pole_guard of the pole q^{-" << 2 * k
               << "} = " << pole;
            throw PoleProximity(os.str());
        }
    }
}

} // namespace

// ScaledComplex ----------------------------------------------------------

void ScaledComplex::normalize() {
    double m = std::max(std::abs(mant.real()), std::abs(mant.imag()));
    if (m == 0.0 || !std::isfinite(m))
        return;
    int e = 0;
    std::frexp(m, &e);
    mant = cplx(std::ldexp(mant.real(), -e), std::ldexp(mant.imag(), -e));
    exp2 += e;
}

ScaledComplex& ScaledComplex::operator*=(cplx factor) {
    mant *= factor;
    normalize();
    return *this;
}

cplx ScaledComplex::value() const {
    return times(1.0);
}

cplx ScaledComplex::times(cplx scale) const {
    // Fold the scale into the exponent first so that a tiny scale can cancel
    // a huge exponent without intermediate overflow.
    double m = std::max(std::abs(scale.real()), std::abs(scale.imag()));
    if (m == 0.0 || (mant.real() == 0.0 && mant.imag() == 0.0))
        return 0.0;
    int e = 0;
    std::frexp(m, &e);
    cplx s(std::ldexp(scale.real(), -e), std::ldexp(scale.imag(), -e));
    cplx prod = s * mant;
    long total = exp2 + e;
    if (total > std::numeric_limits<int>::max())
        total = std::numeric_limits<int>::max();
    if (total < std::numeric_limits<int>::min())
        total = std::numeric_limits<int>::min();
    return {std::ldexp(prod.real(), static_cast<int>(total)),
            std::ldexp(prod.imag(), static_cast<int>(total))};
}

double ScaledComplex::log2_abs() const {
    return std::log2(std::abs(mant)) + static_cast<double>(exp2);
}

// Pochhammer -----------------------------------------------------------------

cplx qpoch_finite(cplx a, double qq, int n) {
    cplx prod = 1.0;
    cplx term = a;
    for (int k = 0; k < n; ++k) {
        prod *= 1.0 - term;
        term *= qq;
    }
    return prod;
}

ScaledComplex qpoch_inf_scaled(cplx a, double qq, double tol) {
    ScaledComplex prod;
    cplx term = a;
    double stop = tol * (1.0 - qq);
    for (int k = 0; k < max_product_terms; ++k) {
        if (std::abs(term) < stop)
            break;
        prod *= 1.0 - term;
        term *= qq;
    }
    return prod;
}

cplx qpoch_inf(cplx a, double qq, double tol) {
    cplx prod = 1.0;
    cplx term = a;
    double stop = tol * (1.0 - qq);
    for (int k = 0; k < max_product_terms; ++k) {
        if (std::abs(term) < stop)
            break;
        prod *= 1.0 - term;
        term *= qq;
    }
    return prod;
}

double qbinom(int l, int i, double qq2) {
    if (l < 0 || i < 0 || i > l)
        throw std::invalid_argument("qbinom requires 0 <= i <= l");
    double num = qpoch_finite(qq2, qq2, l).real();
    double den = qpoch_finite(qq2, qq2, i).real() * qpoch_finite(qq2, qq2, l - i).real();
    return num / den;
}

// Exponentials ----------------------------------------------------------------

cplx e_q2(cplx z, const QParams& p) {
    check_e_poles(z, p);
    return 1.0 / qpoch_inf(z, p.q2(), p.series_tol() * 1e-2);
}

cplx e_q2_partial_fractions(cplx z, const QParams& p) {
    check_e_poles(z, p);
    const double qq = p.q2();
    const double tol = p.series_tol() * 1e-2;
    // (-1)^k q^{k(k+1)} / (q^2;q^2)_k, updated incrementally.
    double coef = 1.0;
    double qk = 1.0; // q^{2k}
    cplx sum = 0.0;
    for (int k = 0; k < max_product_terms; ++k) {
        cplx d = 1.0 - z * qk;
        sum += coef / d;
        // Once |z q^{2k}| < 1/2 each remaining pole factor is bounded by 2 and
        // the coefficients decay faster than geometrically.
        double next = std::abs(coef) * std::pow(p.q(), 2 * k + 2) / (1.0 - qk * qq);
        if (std::abs(z) * qk < 0.5 && 4.0 * next < tol * std::max(1.0, std::abs(sum)))
            break;
        coef = -coef * std::pow(p.q(), 2 * k + 2) / (1.0 - qk * qq);
        qk *= qq;
    }
    return sum / qpoch_inf(qq, qq, tol);
}

ScaledComplex E_q2_scaled(cplx z, const QParams& p) {
    return qpoch_inf_scaled(-z, p.q2(), p.series_tol() * 1e-2);
}

cplx E_q2(cplx z, const QParams& p) {
    ScaledComplex v = E_q2_scaled(z, p);
    cplx r = v.value();
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw Overflow("E_q2(" + fmt(z) + ") exceeds the double range");
    return r;
}

// Trigonometric functions --------------------------------------------------

TrigPair small_trig(cplx z, const QParams& p) {
    if (z.imag() != 0.0) {
        cplx ep = e_q2(I * z, p);
        cplx em = e_q2(-I * z, p);
        return {0.5 * (ep + em), (ep - em) / (2.0 * I)};
    }
    const double x = z.real();
    const double qq = p.q2();
    const double tol = p.series_tol() * 1e-2;
    double coef = 1.0;  // (-1)^k q^{k(k+1)} / (q^2;q^2)_k
    double qk = 1.0;    // q^{2k}
    double sum_c = 0.0, sum_s = 0.0;
    for (int k = 0; k < max_product_terms; ++k) {
        double q4k = qk * qk;
        double d = 1.0 + x * x * q4k;
        sum_c += coef / d;
        sum_s += coef * qk / d;
        double next = std::abs(coef) * std::pow(p.q(), 2 * k + 2) / (1.0 - qk * qq);
        if (next < tol)
            break;
        coef = -coef * std::pow(p.q(), 2 * k + 2) / (1.0 - qk * qq);
        qk *= qq;
    }
    double norm = qpoch_inf(qq, qq, tol).real();
    return {sum_c / norm, x * sum_s / norm};
}

TrigPair big_trig(cplx z, const QParams& p) {
    cplx ep = E_q2(I * z, p);
    cplx em = E_q2(-I * z, p);
    return {0.5 * (ep + em), (ep - em) / (2.0 * I)};
}

cplx phi01(cplx z, const QParams& p) {
    const double qq = p.q2();
    const double tol = p.series_tol();
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int n = 0; n < max_product_terms; ++n) {
        // ratio t_{n+1}/t_n = q^{4n} z / (1 - q^{2n+2}); decreasing in n.
        cplx ratio = std::pow(qq, 2 * n) * z / (1.0 - std::pow(qq, n + 1));
        term *= ratio;
        sum += term;
        if (std::abs(ratio) < 0.5 && 2.0 * std::abs(term) < tol * std::max(1.0, std::abs(sum)))
            break;
    }
    return sum;
}

// Bilateral sums ----------------------------------------------------------------

namespace {

// Sums f(m) over all integers, walking outward from `centre`.  Each direction
// stops after at least `depth` terms once the geometric tail bound
// |f(m)| * ratio/(1-ratio) is below tol.
template <class F>
cplx bilateral_sum(F&& f, int centre, int depth, double ratio, double tol) {
    cplx up = 0.0, down = 0.0;
    const double tail = ratio / (1.0 - ratio);
    const int limit = depth + 20000;
    int m = centre;
    for (int n = 0;; ++n, ++m) {
        cplx t = f(m);
        up += t;
        if (n >= depth && std::abs(t) * tail < tol)
            break;
        if (n > limit)
            throw NonConvergent("bilateral sum failed to converge upward");
    }
    m = centre - 1;
    for (int n = 0;; ++n, --m) {
        cplx t = f(m);
        down += t;
        if (n >= depth && std::abs(t) * tail < tol)
            break;
        if (n > limit)
            throw NonConvergent("bilateral sum failed to converge downward");
    }
    return up + down;
}

} // namespace

cplx bigQ(cplx z, const QParams& p) {
    if (z == 0.0)
        throw ZeroArgument("bigQ is undefined at z = 0");
    const double qq = p.q2();
    auto term = [&](int m) {
        cplx w = z * std::pow(qq, m);
        cplx d = w + 1.0 / w;
        if (std::abs(d) < p.pole_guard())
            throw PoleProximity("bigQ summand has a vanishing denominator near z = " + fmt(z));
        return 1.0 / d;
    };
    int centre = -peak_index(std::abs(z), qq);
    return (1.0 - qq) * bilateral_sum(term, centre, p.lattice_depth(), qq, p.series_tol() * 1e-2);
}

cplx jacobi_theta(cplx u, cplx tau) {
    const double pi = std::numbers::pi;
    cplx pn = std::exp(2.0 * pi * I * tau);
    cplx w = std::exp(2.0 * pi * I * u);
    cplx prod = 1.0;
    cplx pk = pn;
    for (int n = 1; n < max_product_terms && std::abs(pk) > 1e-18; ++n) {
        prod *= (1.0 - w * pk) * (1.0 - pk / w) * (1.0 - pk);
        pk *= pn;
    }
    return 2.0 * std::exp(2.0 * pi * I * tau / 8.0) * std::sin(pi * u) * prod;
}

double jacobi_theta_prime0(double pn) {
    double prod = 1.0;
    double pk = pn;
    for (int n = 1; n < max_product_terms && pk > 1e-18; ++n) {
        double f = 1.0 - pk;
        prod *= f * f * f;
        pk *= pn;
    }
    return 2.0 * std::numbers::pi * std::pow(pn, 0.125) * prod;
}

cplx bigQ_theta_oracle(cplx z, const QParams& p) {
    if (z == 0.0)
        throw ZeroArgument("bigQ_theta_oracle is undefined at z = 0");
    const double pi = std::numbers::pi;
    const double q = p.q();
    cplx tau = -2.0 * I * std::log(q) / pi;
    cplx u = std::log(z) / (pi * I) + 0.5;
    double pn = std::pow(q, 4);
    cplx ratio = jacobi_theta(u + tau / 2.0, tau) * jacobi_theta_prime0(pn) /
                 (jacobi_theta(u, tau) * jacobi_theta(tau / 2.0, tau));
    // The bare theta quotient equals Q(z)/((1-q^2) z); see the decisions notes.
    return (1.0 - p.q2()) * z * (-ratio / (2.0 * pi * I));
}

cplx theta_lattice(cplx z, const QParams& p) {
    if (z == 0.0)
        throw ZeroArgument("theta_lattice is undefined at z = 0");
    const double qq = p.q2();
    const double c = 1.0 - qq;
    auto term = [&](int m) { return small_trig(c * std::pow(qq, m) * z, p).sin; };
    int centre = -peak_index(c * std::abs(z), qq);
    return c * bilateral_sum(term, centre, p.lattice_depth(), qq, p.series_tol() * 1e-2);
}

double theta0(const QParams& p) {
    std::call_once(p.cache_->once, [&] { p.cache_->theta0 = bigQ(1.0 - p.q2(), p).real(); });
    return p.cache_->theta0;
}

TrigLatticeSums trig_lattice_sums(cplx z, int M, const QParams& p) {
    if (M < 0)
        throw std::invalid_argument("trig_lattice_sums requires M >= 0");
    if (z == 0.0)
        return {0.0, 0.0};
    const double qq = p.q2();
    const double c = 1.0 - qq;
    const double tol = p.series_tol() * 1e-2;
    cplx sc = 0.0, ss = 0.0;
    for (int m = -M; m < max_product_terms; ++m) {
        double w = std::pow(qq, m);
        TrigPair t = small_trig(c * w * z, p);
        cplx tc = w * t.cos, ts = w * t.sin;
        sc += tc;
        ss += ts;
        // cos -> 1 and sin -> 0 for small argument, so the terms decay like q^{2m}.
        if (m > 0 && std::abs(c * z) * std::max(std::abs(tc), std::abs(ts)) / c < tol)
            break;
    }
    return {c * z * sc, c * z * ss};
}

} // namespace qfourier
