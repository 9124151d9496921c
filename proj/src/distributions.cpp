#include <qfourier/distributions.hpp>

#include "summation.hpp"

#include <cmath>
#include <sstream>

namespace qfourier {

namespace {

constexpr cplx I{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// (q^{-2 nu}; q^2)_k, the normalization of the regularized nu-power pairings.
double nu_pochhammer(double nu, int k, const QParams& p) {
    double r = 1.0;
    for (int j = 0; j < k; ++j)
        r *= 1.0 - std::pow(p.q(), 2.0 * (j - nu));
    return r;
}

void check_nu(double nu, int k) {
    if (!(nu > -1.0) || !std::isfinite(nu))
        throw InvalidNu("power distribution needs base exponent nu > -1, got " + fmt(nu));
    if (k < 0)
        throw InvalidNu("regularization order k must be nonnegative");
    for (int j = 0; j < k; ++j)
        if (std::abs(nu - j) < 1e-12)
            throw InvalidNu("(q^{-2nu};q^2)_k vanishes for nu = " + fmt(nu) + ", k = " +
                            std::to_string(k));
}

void warn(std::vector<std::string>* warnings, const std::string& what) {
    if (warnings)
        warnings->push_back(what);
}

// Warns when the first or last term of a lattice sum is not negligible.
void check_ends(cplx first, cplx last, cplx value, const QParams& p, const char* what,
                std::vector<std::string>* warnings) {
    const double tol = std::sqrt(p.series_tol()) * std::max(1.0, std::abs(value));
    if (std::abs(first) > tol)
        warn(warnings, std::string(what) + ": large-|z| end term " + fmt(std::abs(first)) +
                           " is not negligible; widen the window");
    if (std::abs(last) > tol)
        warn(warnings, std::string(what) + ": small-|z| end term " + fmt(std::abs(last)) +
                           " is not negligible; deepen the window");
}

cplx pair_regular(const dist::Regular& r, const Skeleton& phi, std::vector<std::string>* warnings) {
    const QParams& p = phi.params();
    Window w = phi.window();
    if (r.skeleton) {
        auto common = intersect(w, r.skeleton->window());
        if (!common)
            throw WindowError("regular distribution and test function windows do not overlap");
        w = *common;
    }
    auto f_at = [&](int m, Sign s) {
        if (r.skeleton)
            return r.skeleton->at(m, s);
        const double x = (s == Sign::plus ? 1.0 : -1.0) * p.lattice_point(m);
        return r.function(x);
    };
    detail::Accumulator acc;
    cplx first = 0.0, last = 0.0;
    for (Sign s : {Sign::plus, Sign::minus})
        for (int m = w.m_min; m <= w.m_max; ++m) {
            cplx t = (1.0 - p.q2()) * p.lattice_point(m) * std::conj(f_at(m, s)) * phi.at(m, s);
            acc.add(t);
            if (m == w.m_min)
                first += t;
            if (m == w.m_max)
                last += t;
        }
    cplx v = acc.value();
    check_ends(first, last, v, p, ("pairing with " + r.label).c_str(), warnings);
    return v;
}

cplx pair_branch(const Skeleton& phi, Sign s, const char* what, std::vector<std::string>* warnings) {
    const QParams& p = phi.params();
    const Window& w = phi.window();
    detail::Accumulator acc;
    for (int m = w.m_min; m <= w.m_max; ++m)
        acc.add((1.0 - p.q2()) * p.lattice_point(m) * phi.at(m, s));
    cplx v = acc.value();
    check_ends((1.0 - p.q2()) * p.lattice_point(w.m_min) * phi.at(w.m_min, s),
               (1.0 - p.q2()) * p.lattice_point(w.m_max) * phi.at(w.m_max, s), v, p, what, warnings);
    return v;
}

// Roundoff model of a test function handed down the pairing recursion: the
// size of the original data and how many q-derivatives were already taken
// (distributional derivatives move them onto the test function).
struct Noise {
    double scale = 0.0;
    int order = 0;
};

// (d^n phi)(0) from the even part of d^n phi, which approaches its limit like
// q^{4m}.  Differences between consecutive depths are summed until roundoff
// takes over, then the geometric tail is added.
cplx derivative_at_zero(const Skeleton& phi, int n, const Noise& nz, std::vector<std::string>* warnings) {
    Skeleton d = q_derivative(phi, n);
    const Window& w = d.window();
    if (w.size() < 4)
        throw WindowError("window too small to estimate a derivative at 0");
    auto avg = [&](int m) { return 0.5 * (d.pos_at(m) + d.neg_at(m)); };
    const QParams& p = phi.params();
    std::vector<cplx> diffs;
    std::vector<double> noise;
    for (int m = w.m_min; m < w.m_max; ++m) {
        diffs.push_back(avg(m) - avg(m + 1));
        noise.push_back(2.0 * detail::derivative_noise(nz.scale, n + nz.order, p.lattice_point(m + 1), p.q2()));
    }
    auto ts = detail::sum_with_geometric_tail(diffs, noise, std::pow(p.q2(), 2));
    if (ts.used == diffs.size())
        warn(warnings, "value at 0 of the " + std::to_string(n) +
                           "-th derivative: the window is not deep enough to reach the limit");
    return avg(w.m_min) - ts.value;
}

// <z^{-k-1}, phi> = (1-q^2)^{k+1}/(q^2;q^2)_k sum_m [d^k phi(q^{2m}) - d^k phi(-q^{2m})]
cplx pair_negative_power(int k, const Skeleton& phi, const Noise& nz, std::vector<std::string>* warnings) {
    const QParams& p = phi.params();
    Skeleton d = q_derivative(phi, k);
    const Window& w = d.window();
    std::vector<cplx> terms;
    std::vector<double> noise;
    for (int m = w.m_min; m <= w.m_max; ++m) {
        terms.push_back(d.pos_at(m) - d.neg_at(m));
        noise.push_back(2.0 * detail::derivative_noise(nz.scale, k + nz.order, p.lattice_point(m), p.q2()));
    }
    auto ts = detail::sum_with_geometric_tail(terms, noise, p.q2());
    const double c = std::pow(1.0 - p.q2(), k + 1) / qpoch_finite(p.q2(), p.q2(), k).real();
    cplx v = c * ts.value;
    check_ends(c * terms.front(), 0.0, v, p, "pairing with z^{-k-1}", warnings);
    if (ts.used == terms.size() && std::abs(terms.back()) * c > std::sqrt(p.series_tol()) * std::max(1.0, std::abs(v)))
        warn(warnings, "pairing with z^{-k-1}: small-|z| terms did not decay within the window");
    return v;
}

// z_+^{nu-k} (sign +) and z_-^{nu-k} (sign -):
// (+-1)^k (1-q^2)^{k+1}/(q^{-2nu};q^2)_k sum_m q^{2m(nu+1)} d^k phi(+-q^{2m})
cplx pair_nu_power(double nu, int k, Sign sign, const Skeleton& phi, const Noise& nz,
                   std::vector<std::string>* warnings) {
    check_nu(nu, k);
    const QParams& p = phi.params();
    Skeleton d = q_derivative(phi, k);
    const Window& w = d.window();
    std::vector<cplx> terms;
    std::vector<double> noise;
    for (int m = w.m_min; m <= w.m_max; ++m) {
        const double wt = std::pow(p.lattice_point(m), nu + 1.0);
        terms.push_back(wt * d.at(m, sign));
        noise.push_back(wt * detail::derivative_noise(nz.scale, k + nz.order, p.lattice_point(m), p.q2()));
    }
    const double ratio = std::pow(p.q2(), nu + 1.0);
    cplx v;
    if (k == 0) {
        detail::Accumulator acc;
        for (cplx t : terms)
            acc.add(t);
        v = acc.value();
    } else {
        v = detail::sum_with_geometric_tail(terms, noise, ratio).value;
    }
    double c = std::pow(1.0 - p.q2(), k + 1) / nu_pochhammer(nu, k, p);
    if (sign == Sign::minus && k % 2 == 1)
        c = -c;
    v *= c;
    check_ends(c * terms.front(), k == 0 ? c * terms.back() : 0.0, v, p, "pairing with a nu-power",
               warnings);
    return v;
}

} // namespace

// Distribution ------------------------------------------------------------------

Distribution::Distribution() : Distribution(dist::Linear{}) {}

Distribution::Distribution(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Distribution Distribution::regular(Skeleton f, std::string label) {
    return Distribution(dist::Regular{std::make_shared<const Skeleton>(std::move(f)), {}, std::move(label)});
}

Distribution Distribution::regular(PointFunction f, std::string label) {
    return Distribution(dist::Regular{nullptr, std::move(f), std::move(label)});
}

Distribution Distribution::delta_pow(int n) {
    if (n < 0)
        throw std::invalid_argument("s^{-n} delta needs n >= 0");
    return Distribution(dist::DeltaPow{n});
}

Distribution Distribution::pow_plus_nu(double nu, int k) {
    check_nu(nu, k);
    return Distribution(dist::PowPlusNu{nu, k});
}

Distribution Distribution::pow_minus_nu(double nu, int k) {
    check_nu(nu, k);
    return Distribution(dist::PowMinusNu{nu, k});
}

bool Distribution::is_zero() const {
    auto* lin = std::get_if<dist::Linear>(node_.get());
    return lin && lin->terms.empty();
}

std::string Distribution::label() const {
    return std::visit(
        overloaded{
            [](const dist::Regular& r) { return r.label; },
            [](const dist::ThetaPlus&) { return std::string("theta+"); },
            [](const dist::ThetaMinus&) { return std::string("theta-"); },
            [](const dist::Delta&) { return std::string("delta"); },
            [](const dist::DeltaPow& d) { return "s^-" + std::to_string(d.n) + " delta"; },
            [](const dist::PowInt& d) { return "z^" + std::to_string(d.n); },
            [](const dist::PowPlusNu& d) {
                return "z_+^(" + fmt(d.nu) + (d.k ? "-" + std::to_string(d.k) : "") + ")";
            },
            [](const dist::PowMinusNu& d) {
                return "z_-^(" + fmt(d.nu) + (d.k ? "-" + std::to_string(d.k) : "") + ")";
            },
            [](const dist::SignS&) { return std::string("sign"); },
            [](const dist::Derivative& d) { return "d(" + d.inner->label() + ")"; },
            [](const dist::Linear& l) {
                if (l.terms.empty())
                    return std::string("0");
                std::string s;
                for (const auto& [c, f] : l.terms) {
                    if (!s.empty())
                        s += " + ";
                    s += "(" + fmt(c.real()) + (c.imag() < 0 ? "" : "+") + fmt(c.imag()) + "i) " + f.label();
                }
                return s;
            },
        },
        *node_);
}

namespace {

void append_terms(std::vector<std::pair<cplx, Distribution>>& out, const Distribution& d, cplx c) {
    if (c == 0.0)
        return;
    if (auto* lin = std::get_if<dist::Linear>(&d.node())) {
        for (const auto& [ci, fi] : lin->terms)
            out.emplace_back(c * ci, fi);
    } else {
        out.emplace_back(c, d);
    }
}

} // namespace

Distribution Distribution::operator+(const Distribution& o) const {
    dist::Linear l;
    append_terms(l.terms, *this, 1.0);
    append_terms(l.terms, o, 1.0);
    return Distribution(std::move(l));
}

Distribution Distribution::operator-(const Distribution& o) const {
    dist::Linear l;
    append_terms(l.terms, *this, 1.0);
    append_terms(l.terms, o, -1.0);
    return Distribution(std::move(l));
}

Distribution Distribution::operator*(cplx c) const {
    dist::Linear l;
    append_terms(l.terms, *this, c);
    return Distribution(std::move(l));
}

// Pairing ------------------------------------------------------------------------

namespace {

cplx pair_impl(const Distribution& f, const Skeleton& phi, const Noise& nz,
               std::vector<std::string>* warnings) {
    const QParams& p = phi.params();
    return std::visit(
        overloaded{
            [&](const dist::Regular& r) { return pair_regular(r, phi, warnings); },
            [&](const dist::ThetaPlus&) { return pair_branch(phi, Sign::plus, "pairing with theta+", warnings); },
            [&](const dist::ThetaMinus&) {
                return pair_branch(phi, Sign::minus, "pairing with theta-", warnings);
            },
            [&](const dist::Delta&) { return value_at_zero(phi); },
            [&](const dist::DeltaPow& d) {
                const double c = std::pow(1.0 - p.q2(), d.n) / qpoch_finite(p.q2(), p.q2(), d.n).real();
                return c * derivative_at_zero(phi, d.n, nz, warnings);
            },
            [&](const dist::PowInt& d) {
                if (d.n >= 0) {
                    const int n = d.n;
                    dist::Regular r{nullptr, [n](double x) { return cplx(std::pow(x, n)); },
                                    "z^" + std::to_string(n)};
                    return pair_regular(r, phi, warnings);
                }
                return pair_negative_power(-d.n - 1, phi, nz, warnings);
            },
            [&](const dist::PowPlusNu& d) { return pair_nu_power(d.nu, d.k, Sign::plus, phi, nz, warnings); },
            [&](const dist::PowMinusNu& d) { return pair_nu_power(d.nu, d.k, Sign::minus, phi, nz, warnings); },
            [&](const dist::SignS&) {
                return pair_branch(phi, Sign::plus, "pairing with sign", warnings) -
                       pair_branch(phi, Sign::minus, "pairing with sign", warnings);
            },
            [&](const dist::Derivative& d) {
                Skeleton moved = shift_lambda(q_derivative(phi, 1), -1);
                return -pair_impl(*d.inner, moved, Noise{nz.scale, nz.order + 1}, warnings) / p.q2();
            },
            [&](const dist::Linear& l) {
                cplx v = 0.0;
                for (const auto& [c, fi] : l.terms)
                    v += std::conj(c) * pair_impl(fi, phi, nz, warnings);
                return v;
            },
        },
        f.node());
}

} // namespace

cplx pair(const Distribution& f, const Skeleton& phi, std::vector<std::string>* warnings) {
    return pair_impl(f, phi, Noise{phi.max_abs(), 0}, warnings);
}

Distribution dist_derivative(const Distribution& f) {
    if (f.is_zero())
        return f;
    if (auto* lin = std::get_if<dist::Linear>(&f.node())) {
        Distribution out;
        for (const auto& [c, fi] : lin->terms)
            out = out + dist_derivative(fi) * c;
        return out;
    }
    return Distribution(dist::Derivative{std::make_shared<const Distribution>(f)});
}

// Numeric transform ----------------------------------------------------------------

namespace {

void collect_regular(const Distribution& f, cplx c, std::vector<std::pair<cplx, const dist::Regular*>>& out) {
    if (auto* r = std::get_if<dist::Regular>(&f.node())) {
        out.emplace_back(c, r);
        return;
    }
    if (auto* lin = std::get_if<dist::Linear>(&f.node())) {
        for (const auto& [ci, fi] : lin->terms)
            collect_regular(fi, c * ci, out);
        return;
    }
    throw NonIntegrable("the numeric transform needs a regular representative; " + f.label() +
                        " has none (use the closed-form table)");
}

} // namespace

Skeleton fourier_numeric(const Distribution& f, const Window& window, const QParams& p) {
    std::vector<std::pair<cplx, const dist::Regular*>> parts;
    collect_regular(f, 1.0, parts);
    const double a = 1.0 - p.q2();
    const double scale = 1.0 / (2.0 * theta0(p));
    std::vector<cplx> gpos(window.size(), 0.0), gneg(window.size(), 0.0);
    for (const auto& [c, r] : parts) {
        // Skeletons are summed over their own window.  Functions are sampled
        // lattice_depth indices beyond the output window on both sides so
        // that z s covers both the decaying and the trivial end of the kernel.
        Skeleton rep = r->skeleton
                           ? *r->skeleton
                           : sample(r->function,
                                    Window(window.m_min - p.lattice_depth(), window.m_max + p.lattice_depth()),
                                    p);
        const Window& zw = rep.window();
        // e(i a z s) depends on z s = +-q^{2j}
        const int jlo = zw.m_min + window.m_min, jhi = zw.m_max + window.m_max;
        std::vector<cplx> kpos, kneg;
        for (int j = jlo; j <= jhi; ++j) {
            kpos.push_back(e_q2(I * a * p.lattice_point(j), p));
            kneg.push_back(e_q2(-I * a * p.lattice_point(j), p));
        }
        for (Sign so : {Sign::plus, Sign::minus})
            for (int mo = window.m_min; mo <= window.m_max; ++mo) {
                detail::Accumulator acc;
                cplx first = 0.0, last = 0.0;
                for (Sign si : {Sign::plus, Sign::minus})
                    for (int m = zw.m_min; m <= zw.m_max; ++m) {
                        const cplx v = rep.at(m, si);
                        if (v == 0.0)
                            continue;
                        const cplx k = (si != so ? kneg : kpos)[m + mo - jlo];
                        const cplx t = a * p.lattice_point(m) * v * k;
                        acc.add(t);
                        if (m == zw.m_min)
                            first += t;
                        if (m == zw.m_max)
                            last += t;
                    }
                const cplx g = acc.value();
                const double tol = std::sqrt(p.series_tol()) * std::max(1.0, std::abs(g));
                if (std::abs(first) > tol || std::abs(last) > tol) {
                    std::ostringstream os;
                    os << "transform of " << r->label << " at s = " << (so == Sign::plus ? "" : "-")
                       << "q^(2*" << mo << "): end terms " << std::abs(first) << ", " << std::abs(last)
                       << " do not decay; the representative is not absolutely integrable against the "
                          "kernel on its window";
                    throw NonIntegrable(os.str());
                }
                (so == Sign::plus ? gpos : gneg)[mo - window.m_min] += c * scale * g;
            }
    }
    return Skeleton(p, window, std::move(gpos), std::move(gneg));
}

// Constants ------------------------------------------------------------------------

cplx c_nu(double nu, const QParams& p) {
    if (!(nu > 0.0 && nu < 1.0))
        throw OutOfStrip("c_nu needs 0 < nu < 1 for the bilateral sum to converge, got nu = " + fmt(nu));
    const double a = 1.0 - p.q2();
    auto term = [&](int m) {
        const double x = p.lattice_point(m);  // q^{2m}
        return std::pow(x, nu) * (1.0 / x + I * a) / (1.0 / (a * x) + a * x);
    };
    // Both tails are geometric: ratio q^{2 nu} for m -> +inf and q^{2(1-nu)}
    // for m -> -inf.  The peak sits near m = 0.
    detail::Accumulator acc;
    acc.add(term(0));
    for (int dir : {1, -1}) {
        const double ratio = std::pow(p.q2(), dir > 0 ? nu : 1.0 - nu);
        for (int j = 1;; ++j) {
            const int m = dir * j;
            const cplx t = term(m);
            acc.add(t);
            // remaining tail below |t| ratio/(1-ratio) once the asymptotic
            // regime is reached
            if (j >= p.lattice_depth() && std::abs(t) * ratio / (1.0 - ratio) < p.series_tol() * 1e-2)
                break;
            if (j > 200000)
                throw NonConvergent("c_nu series did not converge (nu too close to the strip edge)");
        }
    }
    return acc.value();
}

double nu_row_factor(double nu, const QParams& p) {
    return e_q2(p.q2(), p).real() * E_q2(-std::pow(p.q2(), 1.0 - nu), p).real() / (2.0 * theta0(p));
}

cplx nu_image_direct(double nu, double s, const QParams& p) {
    if (!(nu > 0.0 && nu < 1.0))
        throw OutOfStrip("the direct image series needs 0 < nu < 1, got nu = " + fmt(nu));
    if (s == 0.0)
        throw ZeroArgument("the image of z_+^{nu-1} is singular at s = 0");
    const double a = 1.0 - p.q2();
    detail::Accumulator acc;
    // m -> +inf: terms ~ q^{2 nu m}; m -> -inf: e(i a q^{2m} s) decays faster
    // than any power.
    for (int dir : {1, -1}) {
        for (int j = dir > 0 ? 0 : 1;; ++j) {
            const int m = dir * j;
            const double x = p.lattice_point(m);
            const cplx t = std::pow(x, nu) * e_q2(I * a * x * s, p);
            acc.add(t);
            if (j >= p.lattice_depth() && std::abs(t) < p.series_tol() * 1e-2)
                break;
            if (j > 200000)
                throw NonConvergent("direct image series did not converge");
        }
    }
    return a / (2.0 * theta0(p)) * acc.value();
}

// Table ----------------------------------------------------------------------------

namespace {

cplx ipow(int n) {
    static const cplx powers[4] = {1.0, I, -1.0, -I};
    return powers[((n % 4) + 4) % 4];
}

TransformTableEntry nu_entry(double nu_exp, int k, double base_nu, Sign sign, const QParams& p) {
    const double nu = nu_exp + 1.0;  // the row is z_+-^{nu-1}
    if (!(nu > 0.0 && nu < 1.0))
        throw OutOfStrip("table rows for z_+-^{nu-1} need 0 < nu < 1, got nu = " + fmt(nu));
    const cplx C = nu_row_factor(nu, p) * c_nu(nu, p);
    TransformTableEntry e;
    e.source = sign == Sign::plus ? Distribution::pow_plus_nu(base_nu, k)
                                  : Distribution::pow_minus_nu(base_nu, k);
    Distribution sp = Distribution::pow_plus_nu(-nu, 0), sm = Distribution::pow_minus_nu(-nu, 0);
    if (sign == Sign::plus) {
        e.image = std::conj(C) * sm + C * sp;
        e.source_label = "z_+^(nu-1)";
        e.image_label = "K (conj(c_nu) s_-^(-nu) + c_nu s_+^(-nu)), K = e(q^2) E(-q^(2(1-nu)))/(2 Theta0)";
    } else {
        e.image = C * sm + std::conj(C) * sp;
        e.source_label = "z_-^(nu-1)";
        e.image_label = "K (c_nu s_-^(-nu) + conj(c_nu) s_+^(-nu)), K = e(q^2) E(-q^(2(1-nu)))/(2 Theta0)";
    }
    e.constant = C;
    e.nu = nu;
    return e;
}

} // namespace

TransformTableEntry fourier_table(const Distribution& f, const QParams& p) {
    const double t0 = theta0(p);
    const double a = 1.0 - p.q2();
    return std::visit(
        overloaded{
            [&](const dist::Delta&) {
                TransformTableEntry e;
                e.source = f;
                e.constant = 1.0 / (2.0 * t0);
                e.image = Distribution::regular([](double) { return cplx(1.0); }, "1") * e.constant;
                e.source_label = "delta";
                e.image_label = "1/(2 Theta0)";
                return e;
            },
            [&](const dist::ThetaPlus&) {
                TransformTableEntry e;
                e.source = f;
                e.constant = I / (2.0 * t0);
                e.image = Distribution::pow_int(-1) * e.constant + Distribution::delta();
                e.source_label = "theta+";
                e.image_label = "i/(2 Theta0) s^-1 + delta";
                return e;
            },
            [&](const dist::ThetaMinus&) {
                TransformTableEntry e;
                e.source = f;
                e.constant = -I / (2.0 * t0);
                e.image = Distribution::pow_int(-1) * e.constant + Distribution::delta();
                e.source_label = "theta-";
                e.image_label = "-i/(2 Theta0) s^-1 + delta";
                return e;
            },
            [&](const dist::PowInt& d) {
                TransformTableEntry e;
                e.source = f;
                if (d.n >= 0) {
                    const int n = d.n;
                    e.constant = 2.0 * ipow(n) * std::pow(p.q(), -double(n) * (n + 1)) *
                                 qpoch_finite(p.q2(), p.q2(), n).real() / std::pow(a, n);
                    e.image = Distribution::delta_pow(n) * e.constant;
                    e.source_label = "z^n";
                    e.image_label = "2 i^n q^(-n(n+1)) (q^2;q^2)_n/(1-q^2)^n s^-n delta";
                    e.n = n;
                } else {
                    const int n = -d.n - 1;
                    e.constant = ipow(n + 1) * std::pow(a, n) / qpoch_finite(p.q2(), p.q2(), n).real();
                    e.image = Distribution::regular(
                                  [n](double s) { return cplx(std::pow(s, n) * (s > 0 ? 1.0 : -1.0)); },
                                  "s^n sign s") *
                              e.constant;
                    e.source_label = "z^(-n-1)";
                    e.image_label = "i^(n+1) (1-q^2)^n/(q^2;q^2)_n s^n sign s";
                    e.n = n;
                }
                return e;
            },
            [&](const dist::PowPlusNu& d) { return nu_entry(d.nu - d.k, d.k, d.nu, Sign::plus, p); },
            [&](const dist::PowMinusNu& d) { return nu_entry(d.nu - d.k, d.k, d.nu, Sign::minus, p); },
            [&](const auto&) -> TransformTableEntry {
                throw UnsupportedDistribution("no closed-form transform for " + f.label());
            },
        },
        f.node());
}

std::vector<TransformTableEntry> transform_table(const QParams& p, int n, std::optional<double> nu) {
    if (n < 0)
        throw UsageError("the integer power rows need n >= 0");
    std::vector<TransformTableEntry> rows;
    rows.push_back(fourier_table(Distribution::delta(), p));
    rows.push_back(fourier_table(Distribution::theta_plus(), p));
    rows.push_back(fourier_table(Distribution::theta_minus(), p));
    rows.push_back(fourier_table(Distribution::pow_int(n), p));
    rows.push_back(fourier_table(Distribution::pow_int(-n - 1), p));
    if (nu) {
        // z_+-^{nu-1} written with base exponent nu and one regularizing derivative.
        rows.push_back(fourier_table(Distribution::pow_plus_nu(*nu, 1), p));
        rows.push_back(fourier_table(Distribution::pow_minus_nu(*nu, 1), p));
    }
    return rows;
}

double parseval_check(const TransformTableEntry& entry, const Skeleton& psi, unsigned threads) {
    if (entry.source.is_zero() && entry.image.is_zero())
        return 0.0;
    Skeleton phi = fourier_inverse(psi, threads);
    // Large-|z| entries of phi that are not above the roundoff level of the
    // inverse sum are noise, and pairings with growing weights (z^n) would
    // amplify them.
    const QParams& p = psi.params();
    Skeleton noise = transform_roundoff_bound(psi, Direction::inverse, threads);
    const Window& w = phi.window();
    std::vector<cplx> pos = phi.pos(), neg = phi.neg();
    for (int i = 0; i < w.size(); ++i) {
        if (std::abs(pos[i]) > 16.0 * std::abs(noise.pos()[i]) ||
            std::abs(neg[i]) > 16.0 * std::abs(noise.neg()[i]))
            break;
        pos[i] = neg[i] = 0.0;
    }
    phi = Skeleton(p, w, std::move(pos), std::move(neg));
    const cplx lhs = pair(entry.image, psi);
    const cplx rhs = pair(entry.source, phi);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

} // namespace qfourier
