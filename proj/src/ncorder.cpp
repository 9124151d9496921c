#include <qfourier/ncorder.hpp>

#include <cmath>
#include <optional>
#include <sstream>

namespace qfourier {

// QLaurent -------------------------------------------------------------------

QLaurent::QLaurent(Rational c) {
    add_term(0, c);
}

QLaurent QLaurent::monomial(Rational c, int power) {
    QLaurent r;
    r.add_term(power, c);
    return r;
}

QLaurent QLaurent::one_minus_q(int power) {
    QLaurent r(1);
    r.add_term(power, Rational(-1));
    return r;
}

void QLaurent::add_term(int power, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        terms_.emplace(power, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
    QLaurent r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(k, c);
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& o) const {
    return *this + (-o);
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.add_term(k1 + k2, c1 * c2);
    return r;
}

QLaurent QLaurent::pow(int n) const {
    QLaurent r(1);
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

double QLaurent::evaluate(double q) const {
    double s = 0.0;
    for (const auto& [k, c] : terms_)
        s += static_cast<double>(c) * std::pow(q, k);
    return s;
}

std::string QLaurent::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        Rational a = c < 0 ? Rational(-c) : c;
        if (k == 0 || a != 1)
            os << a;
        if (k != 0)
            os << (k == 0 || a != 1 ? "*" : "") << "q^" << k;
    }
    return os.str();
}

// QCoef ----------------------------------------------------------------------

namespace {

// Exact quotient P / (1 - q^m) when it is a Laurent polynomial.
std::optional<QLaurent> divide_one_minus(const QLaurent& p, int m) {
    if (p.is_zero())
        return QLaurent();
    // P = (1 - q^m) Q  gives  Q_j = P_j + Q_{j-m}, read off from the bottom.
    std::map<int, Rational> rem(p.terms().begin(), p.terms().end());
    QLaurent quot;
    const int top = p.terms().rbegin()->first;
    while (!rem.empty()) {
        auto [j, c] = *rem.begin();
        if (j > top - m)
            return std::nullopt;
        quot = quot + QLaurent::monomial(c, j);
        rem.erase(rem.begin());
        rem[j + m] += c;
        if (rem[j + m] == 0)
            rem.erase(j + m);
    }
    return quot;
}

} // namespace

QCoef::QCoef(QLaurent re, QLaurent im, std::map<int, int> den)
    : re_(std::move(re)), im_(std::move(im)), den_(std::move(den)) {
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto r = divide_one_minus(re_, 2 * it->first);
            auto i = r ? divide_one_minus(im_, 2 * it->first) : std::nullopt;
            if (!r || !i)
                break;
            re_ = *r;
            im_ = *i;
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

QCoef QCoef::i() {
    return QCoef(QLaurent(), QLaurent(1));
}

QCoef QCoef::inv_qpoch(int n) {
    std::map<int, int> den;
    for (int k = 1; k <= n; ++k)
        den[k] = 1;
    return QCoef(QLaurent(1), QLaurent(), den);
}

QCoef QCoef::q_number(int a) {
    return QCoef(QLaurent::one_minus_q(2 * a), QLaurent(), {{1, 1}});
}

QCoef QCoef::with_denominator(const std::map<int, int>& target) const {
    QLaurent factor(1);
    for (const auto& [k, e] : target) {
        auto it = den_.find(k);
        int have = it == den_.end() ? 0 : it->second;
        factor = factor * QLaurent::one_minus_q(2 * k).pow(e - have);
    }
    return QCoef(re_ * factor, im_ * factor, target);
}

namespace {

std::map<int, int> lcm(const std::map<int, int>& a, const std::map<int, int>& b) {
    std::map<int, int> r = a;
    for (const auto& [k, e] : b)
        r[k] = std::max(r[k], e);
    return r;
}

} // namespace

QCoef QCoef::operator+(const QCoef& o) const {
    auto d = lcm(den_, o.den_);
    QCoef a = with_denominator(d), b = o.with_denominator(d);
    if (a.re_.is_zero() && b.re_.is_zero() && a.im_.is_zero() && b.im_.is_zero())
        return {};
    QCoef r(a.re_ + b.re_, a.im_ + b.im_, d);
    if (r.is_zero())
        return {};
    return r;
}

QCoef QCoef::operator-() const {
    return QCoef(-re_, -im_, den_);
}

QCoef QCoef::operator-(const QCoef& o) const {
    return *this + (-o);
}

QCoef QCoef::operator*(const QCoef& o) const {
    QLaurent re = re_ * o.re_ - im_ * o.im_;
    QLaurent im = re_ * o.im_ + im_ * o.re_;
    if (re.is_zero() && im.is_zero())
        return {};
    std::map<int, int> d = den_;
    for (const auto& [k, e] : o.den_)
        d[k] += e;
    return QCoef(re, im, d);
}

QCoef QCoef::pow(int n) const {
    QCoef r(1);
    for (int k = 0; k < n; ++k)
        r = r * *this;
    return r;
}

bool QCoef::operator==(const QCoef& o) const {
    return (*this - o).is_zero();
}

cplx QCoef::evaluate(double q) const {
    double d = 1.0;
    for (const auto& [k, e] : den_)
        d *= std::pow(1.0 - std::pow(q, 2 * k), e);
    return cplx(re_.evaluate(q), im_.evaluate(q)) / d;
}

std::string QCoef::to_string() const {
    std::ostringstream os;
    os << "(" << re_.to_string();
    if (!im_.is_zero())
        os << ") + i*(" << im_.to_string();
    os << ")";
    if (!den_.empty()) {
        os << " / (";
        bool first = true;
        for (const auto& [k, e] : den_) {
            os << (first ? "" : "*") << "(1-q^" << 2 * k << ")";
            if (e != 1)
                os << "^" << e;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

// NCLaurent ------------------------------------------------------------------

NCLaurent NCLaurent::monomial(QCoef c, int a, int b) {
    NCLaurent r;
    r.add({a, b}, c);
    return r;
}

void NCLaurent::add(const Key& k, const QCoef& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

NCLaurent NCLaurent::operator+(const NCLaurent& o) const {
    NCLaurent r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add(k, c);
    return r;
}

NCLaurent NCLaurent::operator-(const NCLaurent& o) const {
    NCLaurent r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add(k, -c);
    return r;
}

NCLaurent NCLaurent::operator*(const QCoef& c) const {
    NCLaurent r;
    for (const auto& [k, v] : terms_)
        r.add(k, v * c);
    return r;
}

bool NCLaurent::operator==(const NCLaurent& o) const {
    return (*this - o).is_zero();
}

NCLaurent NCLaurent::truncate(int order) const {
    NCLaurent r;
    for (const auto& [k, v] : terms_)
        if (k.first <= order)
            r.terms_.emplace(k, v);
    return r;
}

cplx NCLaurent::evaluate(double q, cplx z, cplx s) const {
    cplx sum = 0.0;
    for (const auto& [k, v] : terms_)
        sum += v.evaluate(q) * std::pow(z, k.first) * std::pow(s, k.second);
    return sum;
}

std::string NCLaurent::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        os << (first ? "" : " + ") << v.to_string() << " z^" << k.first << " s^" << k.second;
        first = false;
    }
    return os.str();
}

// Algebra ----------------------------------------------------------------------

NCLaurent nc_mul(const NCLaurent& x, const NCLaurent& y) {
    NCLaurent r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            // z^a s^b z^c s^d = q^{-2bc} z^{a+c} s^{b+d}
            int power = -2 * kx.second * ky.first;
            QCoef f(QLaurent::monomial(1, power));
            r.add({kx.first + ky.first, kx.second + ky.second}, cx * cy * f);
        }
    return r;
}

NCLaurent nc_pow(const NCLaurent& x, int n) {
    NCLaurent r = NCLaurent::monomial(1, 0, 0);
    for (int k = 0; k < n; ++k)
        r = nc_mul(r, x);
    return r;
}

NCLaurent nc_apply_dz(const NCLaurent& x) {
    NCLaurent r;
    for (const auto& [k, c] : x.terms())
        if (k.first != 0)
            r.add({k.first - 1, k.second}, c * QCoef::q_number(k.first));
    return r;
}

NCLaurent nc_apply_ds(const NCLaurent& x) {
    NCLaurent r;
    for (const auto& [k, c] : x.terms())
        if (k.second != 0) {
            QCoef pass(QLaurent::monomial(1, 2 * k.first));
            r.add({k.first, k.second - 1}, c * pass * QCoef::q_number(k.second));
        }
    return r;
}

NCLaurent nc_apply_ds_trailing(const NCLaurent& x) {
    NCLaurent r;
    for (const auto& [k, c] : x.terms())
        if (k.second != 0)
            r.add({k.first, k.second - 1}, c * QCoef::q_number(k.second));
    return r;
}

NCLaurent nc_left_z(const NCLaurent& x) {
    return nc_mul(NCLaurent::z(), x);
}

NCLaurent nc_left_s(const NCLaurent& x) {
    return nc_mul(NCLaurent::s(), x);
}

NCLaurent nc_lambda_z(const NCLaurent& x) {
    NCLaurent r;
    for (const auto& [k, c] : x.terms())
        r.add(k, c * QCoef(QLaurent::monomial(1, 2 * k.first)));
    return r;
}

NCLaurent nc_lambda_s(const NCLaurent& x) {
    NCLaurent r;
    for (const auto& [k, c] : x.terms())
        r.add(k, c * QCoef(QLaurent::monomial(1, 2 * k.second)));
    return r;
}

NCLaurent normal_order_series(const std::vector<QCoef>& a, const QCoef& c) {
    NCLaurent r;
    QCoef cr(1);
    for (std::size_t n = 0; n < a.size(); ++n) {
        r.add({int(n), int(n)}, a[n] * cr);
        cr = cr * c;
    }
    return r;
}

NCLaurent series_in_zs(const std::vector<QCoef>& a, const QCoef& c) {
    NCLaurent r;
    NCLaurent zs = nc_mul(NCLaurent::z(), NCLaurent::s());
    NCLaurent power = NCLaurent::monomial(1, 0, 0);
    QCoef cr(1);
    for (std::size_t n = 0; n < a.size(); ++n) {
        r = r + power * (a[n] * cr);
        power = nc_mul(power, zs);
        cr = cr * c;
    }
    return r;
}

std::vector<QCoef> coeffs_e(int N) {
    std::vector<QCoef> a;
    for (int n = 0; n <= N; ++n)
        a.push_back(QCoef::inv_qpoch(n));
    return a;
}

std::vector<QCoef> coeffs_E(int N) {
    std::vector<QCoef> a;
    for (int n = 0; n <= N; ++n)
        a.push_back(QCoef(QLaurent::monomial(1, n * (n - 1))) * QCoef::inv_qpoch(n));
    return a;
}

std::vector<QCoef> coeffs_phi01(int N) {
    std::vector<QCoef> a;
    for (int n = 0; n <= N; ++n)
        a.push_back(QCoef(QLaurent::monomial(1, 2 * n * (n - 1))) * QCoef::inv_qpoch(n));
    return a;
}

// Kernel identities -----------------------------------------------------------

namespace {

IdentityCheck compare(std::string name, const NCLaurent& lhs, const NCLaurent& rhs,
                      bool expected = true) {
    IdentityCheck r;
    r.name = std::move(name);
    r.expected = expected;
    NCLaurent diff = lhs - rhs;
    r.holds = diff.is_zero();
    if (r.holds) {
        r.detail = "exact (" + std::to_string(lhs.terms().size()) + " terms)";
        return r;
    }
    const auto& [key, c] = *diff.terms().begin();
    auto get = [&](const NCLaurent& x) {
        auto it = x.terms().find(key);
        return it == x.terms().end() ? std::string("0") : it->second.to_string();
    };
    std::ostringstream os;
    os << "first mismatch at z^" << key.first << " s^" << key.second << ": lhs = " << get(lhs)
       << ", rhs = " << get(rhs);
    r.detail = os.str();
    return r;
}

QCoef qpow(int k) {
    return QCoef(QLaurent::monomial(1, k));
}

} // namespace

std::vector<IdentityCheck> check_kernel_identities(int N) {
    if (N < 2)
        throw std::invalid_argument("check_kernel_identities requires N >= 2");
    std::vector<IdentityCheck> out;
    const QCoef I = QCoef::i();
    const QCoef c1 = QCoef(QLaurent::one_minus_q(2)); // 1 - q^2
    const QCoef fwd = I * c1 * qpow(2);               // i(1-q^2)q^2
    const QCoef inv = -I * c1;                        // -i(1-q^2)

    out.push_back(compare("0Phi1(c (zs)) = normal-ordered E(c zs), c = i(1-q^2)q^2",
                          series_in_zs(coeffs_phi01(N), fwd),
                          normal_order_series(coeffs_E(N), fwd)));
    out.push_back(compare("E(c (zs)) = normal-ordered e(c zs), c = -i(1-q^2)",
                          series_in_zs(coeffs_E(N), inv), normal_order_series(coeffs_e(N), inv)));
    out.push_back(compare("literal sign variant E(-i(1-q^2)(zs)) = normal-ordered e(+i(1-q^2)zs)",
                          series_in_zs(coeffs_E(N), inv), normal_order_series(coeffs_e(N), -inv),
                          false));

    // Derivative relations for a few values of a; kernels use c = (1-q^2) a.
    const std::vector<std::pair<std::string, QCoef>> as = {
        {"1", QCoef(1)}, {"i q^2", I * qpow(2)}, {"-i", -I}};
    const NCLaurent s = NCLaurent::s(), z = NCLaurent::z();
    for (const auto& [label, a] : as) {
        const QCoef c = c1 * a;
        NCLaurent E = normal_order_series(coeffs_E(N), c);
        NCLaurent Eq = normal_order_series(coeffs_E(N - 1), c * qpow(2));
        NCLaurent Eq4 = normal_order_series(coeffs_E(N - 1), c * qpow(4));
        NCLaurent e = normal_order_series(coeffs_e(N), c);
        NCLaurent eN1 = normal_order_series(coeffs_e(N - 1), c);
        NCLaurent eq2 = normal_order_series(coeffs_e(N - 1), c * qpow(2));

        out.push_back(compare("d_z E((1-q^2)a zs) = a E((1-q^2)a q^2 zs) s, a = " + label,
                              nc_apply_dz(E), nc_mul(Eq, s) * a));
        out.push_back(compare("d_s(trailing) E((1-q^2)a zs) = a z E((1-q^2)a q^2 zs), a = " + label,
                              nc_apply_ds_trailing(E), nc_mul(z, Eq) * a));
        out.push_back(compare("d_z e((1-q^2)a zs) = a e((1-q^2)a zs) s, a = " + label,
                              nc_apply_dz(e), nc_mul(eN1, s) * a));
        out.push_back(compare("d_s(trailing) e((1-q^2)a zs) = a z e((1-q^2)a zs), a = " + label,
                              nc_apply_ds_trailing(e), nc_mul(z, eN1) * a));
        // With d_s commuted through z the same relations pick up q^2 and a
        // rescaled argument.
        out.push_back(compare("d_s E((1-q^2)a zs) = a q^2 z E((1-q^2)a q^4 zs), a = " + label,
                              nc_apply_ds(E), nc_mul(z, Eq4) * (a * qpow(2))));
        out.push_back(compare("d_s e((1-q^2)a zs) = a q^2 z e((1-q^2)a q^2 zs), a = " + label,
                              nc_apply_ds(e), nc_mul(z, eq2) * (a * qpow(2))));
        out.push_back(compare("literal d_s E((1-q^2)a zs) = a z E((1-q^2)a q^2 zs), a = " + label,
                              nc_apply_ds(E), nc_mul(z, Eq) * a, false));
    }
    return out;
}

} // namespace qfourier
