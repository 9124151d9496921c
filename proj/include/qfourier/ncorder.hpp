#ifndef QFOURIER_NCORDER_HPP
#define QFOURIER_NCORDER_HPP

#include <qfourier/params.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qfourier {

using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q with exact rational coefficients.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(Rational c); // NOLINT: constants convert implicitly
    QLaurent(long c) : QLaurent(Rational(c)) {} // NOLINT

    static QLaurent monomial(Rational c, int power);
    /// 1 - q^{power}
    static QLaurent one_minus_q(int power);

    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator-() const;
    QLaurent operator*(const QLaurent& o) const;
    QLaurent pow(int n) const;
    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }

    double evaluate(double q) const;
    std::string to_string() const;

private:
    void add_term(int power, const Rational& c);
    std::map<int, Rational> terms_;
};

/// Element of Q(q)[i] written as (re + i im) / prod_k (1 - q^{2k})^{e_k}.
/// The denominator only ever collects factors (1 - q^{2k}); that covers
/// (1-q^2)^{-1} from q-derivatives and 1/(q^2;q^2)_n from the exponentials.
class QCoef {
public:
    QCoef() = default;
    QCoef(QLaurent re, QLaurent im = {}, std::map<int, int> den = {});
    QCoef(long c) : QCoef(QLaurent(c)) {} // NOLINT

    static QCoef i();
    /// 1/(q^2;q^2)_n
    static QCoef inv_qpoch(int n);
    /// (1 - q^{2a}) / (1 - q^2), valid for negative a as well.
    static QCoef q_number(int a);

    const QLaurent& re() const noexcept { return re_; }
    const QLaurent& im() const noexcept { return im_; }
    const std::map<int, int>& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

    QCoef operator+(const QCoef& o) const;
    QCoef operator-(const QCoef& o) const;
    QCoef operator-() const;
    QCoef operator*(const QCoef& o) const;
    QCoef pow(int n) const;
    /// Exact equality (cross-multiplied over a common denominator).
    bool operator==(const QCoef& o) const;

    cplx evaluate(double q) const;
    std::string to_string() const;

private:
    QCoef with_denominator(const std::map<int, int>& target) const;
    QLaurent re_, im_;
    std::map<int, int> den_;
};

/// Normal-ordered Laurent polynomial sum c_{ab} z^a s^b in generators with
/// zs = q^2 sz.
class NCLaurent {
public:
    using Key = std::pair<int, int>;

    NCLaurent() = default;
    static NCLaurent monomial(QCoef c, int a, int b);
    static NCLaurent z() { return monomial(1, 1, 0); }
    static NCLaurent s() { return monomial(1, 0, 1); }

    const std::map<Key, QCoef>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    NCLaurent operator+(const NCLaurent& o) const;
    NCLaurent operator-(const NCLaurent& o) const;
    NCLaurent operator*(const QCoef& c) const;
    bool operator==(const NCLaurent& o) const;

    /// Drops terms whose z-power exceeds order.
    NCLaurent truncate(int order) const;

    /// Substitutes commuting numbers for z and s.
    cplx evaluate(double q, cplx z, cplx s) const;
    std::string to_string() const;

    void add(const Key& k, const QCoef& c);

private:
    std::map<Key, QCoef> terms_;
};

NCLaurent nc_mul(const NCLaurent& x, const NCLaurent& y);
NCLaurent nc_pow(const NCLaurent& x, int n);

/// d_z acting on the left z-powers.
NCLaurent nc_apply_dz(const NCLaurent& x);
/// d_s passing through z^a with the factor q^{2a} (so d_s z = q^2 z d_s).
NCLaurent nc_apply_ds(const NCLaurent& x);
/// d_s acting on the trailing s-power only (right action on the s-module).
NCLaurent nc_apply_ds_trailing(const NCLaurent& x);
/// Multiplication operators z and s from the left, and Lambda_z, Lambda_s.
NCLaurent nc_left_z(const NCLaurent& x);
NCLaurent nc_left_s(const NCLaurent& x);
NCLaurent nc_lambda_z(const NCLaurent& x);
NCLaurent nc_lambda_s(const NCLaurent& x);

/// sum_{r<=N} a_r c^r z^r s^r
NCLaurent normal_order_series(const std::vector<QCoef>& a, const QCoef& c);

/// Series coefficients to order N.
std::vector<QCoef> coeffs_e(int N);      // e_{q^2}
std::vector<QCoef> coeffs_E(int N);      // E_{q^2}
std::vector<QCoef> coeffs_phi01(int N);  // 0Phi1(-;0;q^2,.)

/// sum_{r<=N} a_r c^r (zs)^r with noncommutative powers.
NCLaurent series_in_zs(const std::vector<QCoef>& a, const QCoef& c);

struct IdentityCheck {
    std::string name;
    bool holds = false;
    bool expected = true; // false for literal forms known to be misprinted
    std::string detail;
};

/// Exact checks of the kernel identities up to order N (N >= 2).
std::vector<IdentityCheck> check_kernel_identities(int N = 12);

} // namespace qfourier

#endif
