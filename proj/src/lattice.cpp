#include <qfourier/lattice.hpp>

#include "summation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qfourier {

Window::Window(int lo, int hi) : m_min(lo), m_max(hi) {
    if (lo > hi)
        throw WindowError("window requires m_min <= m_max, got " + std::to_string(lo) + ":" +
                          std::to_string(hi));
}

std::optional<Window> intersect(const Window& a, const Window& b) {
    int lo = std::max(a.m_min, b.m_min);
    int hi = std::min(a.m_max, b.m_max);
    if (lo > hi)
        return std::nullopt;
    return Window(lo, hi);
}

// Skeleton -------------------------------------------------------------------

Skeleton::Skeleton(QParams params, Window window, std::vector<cplx> pos, std::vector<cplx> neg)
    : params_(std::move(params)), window_(window), pos_(std::move(pos)), neg_(std::move(neg)) {
    const auto n = static_cast<std::size_t>(window_.size());
    if (pos_.size() != n || neg_.size() != n)
        throw WindowError("skeleton branches must have one entry per window index");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(pos_[i].real()) || !std::isfinite(pos_[i].imag()) ||
            !std::isfinite(neg_[i].real()) || !std::isfinite(neg_[i].imag()))
            throw Overflow("skeleton entry at m = " + std::to_string(window_.m_min + int(i)) +
                           " is not finite");
    }
}

cplx Skeleton::at(int m, Sign s) const {
    if (!window_.contains(m))
        throw WindowError("index " + std::to_string(m) + " outside the skeleton window");
    auto i = static_cast<std::size_t>(m - window_.m_min);
    return s == Sign::plus ? pos_[i] : neg_[i];
}

double Skeleton::max_abs() const {
    double r = 0.0;
    for (std::size_t i = 0; i < pos_.size(); ++i)
        r = std::max({r, std::abs(pos_[i]), std::abs(neg_[i])});
    return r;
}

Skeleton Skeleton::restrict(const Window& w) const {
    if (w.m_min < window_.m_min || w.m_max > window_.m_max)
        throw WindowError("restriction window is not contained in the skeleton window");
    auto first = pos_.begin() + (w.m_min - window_.m_min);
    auto nfirst = neg_.begin() + (w.m_min - window_.m_min);
    return Skeleton(params_, w, std::vector<cplx>(first, first + w.size()),
                    std::vector<cplx>(nfirst, nfirst + w.size()));
}

namespace {

template <class Op>
Skeleton combine(const Skeleton& a, const Skeleton& b, Op op) {
    if (!a.params().same_policy(b.params()))
        throw UsageError("skeletons built with different QParams cannot be combined");
    auto w = intersect(a.window(), b.window());
    if (!w)
        throw WindowError("skeleton windows do not overlap");
    std::vector<cplx> pos, neg;
    pos.reserve(w->size());
    neg.reserve(w->size());
    for (int m = w->m_min; m <= w->m_max; ++m) {
        pos.push_back(op(a.pos_at(m), b.pos_at(m)));
        neg.push_back(op(a.neg_at(m), b.neg_at(m)));
    }
    return Skeleton(a.params(), *w, std::move(pos), std::move(neg));
}

} // namespace

Skeleton Skeleton::operator+(const Skeleton& other) const {
    return combine(*this, other, [](cplx x, cplx y) { return x + y; });
}

Skeleton Skeleton::operator-(const Skeleton& other) const {
    return combine(*this, other, [](cplx x, cplx y) { return x - y; });
}

Skeleton Skeleton::operator*(cplx c) const {
    std::vector<cplx> pos(pos_), neg(neg_);
    for (auto& v : pos)
        v *= c;
    for (auto& v : neg)
        v *= c;
    return Skeleton(params_, window_, std::move(pos), std::move(neg));
}

Skeleton pointwise_product(const Skeleton& a, const Skeleton& b) {
    return combine(a, b, [](cplx x, cplx y) { return x * y; });
}

// Construction ---------------------------------------------------------------

Skeleton sample(const PointFunction& f, const Window& window, const QParams& params) {
    std::vector<cplx> pos, neg;
    pos.reserve(window.size());
    neg.reserve(window.size());
    for (int m = window.m_min; m <= window.m_max; ++m) {
        double x = params.lattice_point(m);
        for (double pt : {x, -x}) {
            cplx v;
            try {
                v = f(pt);
            } catch (const DomainError& e) {
                std::ostringstream os;
                os.precision(17);
                os << "sampling failed at lattice point " << pt << " (m = " << m << "): " << e.what();
                throw DomainError(os.str());
            }
            (pt > 0 ? pos : neg).push_back(v);
        }
    }
    return Skeleton(params, window, std::move(pos), std::move(neg));
}

Skeleton basis(int n, Sign sign, const Window& window, const QParams& params) {
    if (!window.contains(n))
        throw WindowError("basis index " + std::to_string(n) + " outside the window");
    std::vector<cplx> pos(window.size(), 0.0), neg(window.size(), 0.0);
    (sign == Sign::plus ? pos : neg)[n - window.m_min] = 1.0;
    return Skeleton(params, window, std::move(pos), std::move(neg));
}

// Operators --------------------------------------------------------------------

Skeleton shift_lambda(const Skeleton& phi, int k) {
    const Window& w = phi.window();
    // Output index m reads input index m + k.
    auto out = intersect(w, Window(w.m_min - k, w.m_max - k));
    if (!out)
        throw WindowError("shift by " + std::to_string(k) + " leaves an empty window");
    std::vector<cplx> pos, neg;
    for (int m = out->m_min; m <= out->m_max; ++m) {
        pos.push_back(phi.pos_at(m + k));
        neg.push_back(phi.neg_at(m + k));
    }
    return Skeleton(phi.params(), *out, std::move(pos), std::move(neg));
}

Skeleton q_derivative(const Skeleton& phi, int k) {
    if (k < 0)
        throw std::invalid_argument("q_derivative order must be nonnegative");
    if (k >= phi.window().size())
        throw WindowError("window too small for " + std::to_string(k) + " q-derivatives");
    Skeleton cur = phi;
    const double c = 1.0 - phi.params().q2();
    for (int j = 0; j < k; ++j) {
        const Window& w = cur.window();
        Window out(w.m_min, w.m_max - 1);
        std::vector<cplx> pos, neg;
        for (int m = out.m_min; m <= out.m_max; ++m) {
            double x = phi.params().lattice_point(m);
            pos.push_back((cur.pos_at(m) - cur.pos_at(m + 1)) / (c * x));
            neg.push_back((cur.neg_at(m) - cur.neg_at(m + 1)) / (-c * x));
        }
        cur = Skeleton(phi.params(), out, std::move(pos), std::move(neg));
    }
    return cur;
}

Skeleton multiply_by_power(const Skeleton& phi, int n) {
    const Window& w = phi.window();
    std::vector<cplx> pos, neg;
    for (int m = w.m_min; m <= w.m_max; ++m) {
        double x = phi.params().lattice_point(m);
        double xp = std::pow(x, n);
        double xn = (n % 2 == 0) ? xp : -xp;
        pos.push_back(phi.pos_at(m) * xp);
        neg.push_back(phi.neg_at(m) * xn);
    }
    return Skeleton(phi.params(), w, std::move(pos), std::move(neg));
}

// Integrals ----------------------------------------------------------------------

namespace {

std::string tail_diagnostic(const Skeleton& phi, bool& ok) {
    const QParams& p = phi.params();
    const Window& w = phi.window();
    std::ostringstream os;
    os.precision(3);
    ok = true;
    for (int m : {w.m_min, w.m_max}) {
        double wt = p.lattice_point(m);
        double t = wt * std::max(std::abs(phi.pos_at(m)), std::abs(phi.neg_at(m)));
        if (!(t < p.series_tol())) {
            ok = false;
            os << (m == w.m_min ? "large-z" : "small-z") << " tail term " << t << " at m = " << m
               << " exceeds series_tol; ";
        }
    }
    return os.str();
}

} // namespace

JacksonResult jackson_integral(const Skeleton& phi) {
    const QParams& p = phi.params();
    const Window& w = phi.window();
    detail::Accumulator acc;
    for (int m = w.m_min; m <= w.m_max; ++m)
        acc.add(p.lattice_point(m) * phi.pos_at(m));
    for (int m = w.m_min; m <= w.m_max; ++m)
        acc.add(p.lattice_point(m) * phi.neg_at(m));
    JacksonResult r;
    r.value = (1.0 - p.q2()) * acc.value();
    r.diagnostic = tail_diagnostic(phi, r.converged);
    return r;
}

cplx finite_q_integral(const PointFunction& f, double a, double b, const QParams& p) {
    const double qq = p.q2();
    const int max_terms = 10 * p.lattice_depth();
    detail::Accumulator acc;
    int small_run = 0;
    for (int m = 0; m < max_terms; ++m) {
        double w = std::pow(qq, m);
        cplx t = 0.0;
        if (b != 0.0)
            t += b * f(b * w);
        if (a != 0.0)
            t -= a * f(a * w);
        t *= w;
        acc.add(t);
        // Require a few consecutive small terms so an isolated zero does not
        // end the sum early.
        small_run = std::abs(t) < p.series_tol() ? small_run + 1 : 0;
        if (small_run >= 3)
            return (1.0 - qq) * acc.value();
    }
    throw NonConvergent("finite q-integral terms did not decay below series_tol within " +
                        std::to_string(max_terms) + " terms");
}

IntegrabilityReport abs_integrable_check(const Skeleton& phi) {
    const QParams& p = phi.params();
    const Window& w = phi.window();
    IntegrabilityReport r;
    double s = 0.0;
    for (int m = w.m_min; m <= w.m_max; ++m)
        s += p.lattice_point(m) * (std::abs(phi.pos_at(m)) + std::abs(phi.neg_at(m)));
    r.abs_integral = (1.0 - p.q2()) * s;
    r.diagnostic = tail_diagnostic(phi, r.integrable);
    return r;
}

double seminorm(const Skeleton& phi, int k, int l) {
    Skeleton d = q_derivative(phi, l);
    Skeleton x = multiply_by_power(d, k);
    return x.max_abs();
}

cplx value_at_zero(const Skeleton& phi) {
    int m = phi.window().m_max;
    return 0.5 * (phi.pos_at(m) + phi.neg_at(m));
}

double relative_max_distance(const Skeleton& a, const Skeleton& b) {
    auto w = intersect(a.window(), b.window());
    if (!w)
        throw WindowError("skeleton windows do not overlap");
    double diff = 0.0, scale = 0.0;
    for (int m = w->m_min; m <= w->m_max; ++m) {
        diff = std::max({diff, std::abs(a.pos_at(m) - b.pos_at(m)), std::abs(a.neg_at(m) - b.neg_at(m))});
        scale = std::max({scale, std::abs(b.pos_at(m)), std::abs(b.neg_at(m))});
    }
    return diff / std::max(scale, 1e-300);
}

// JSON -------------------------------------------------------------------------

std::string to_json(const Skeleton& phi) {
    nlohmann::json j;
    j["q"] = phi.params().q();
    j["m_min"] = phi.window().m_min;
    j["m_max"] = phi.window().m_max;
    auto arr = [](const std::vector<cplx>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (cplx c : v)
            a.push_back({c.real(), c.imag()});
        return a;
    };
    j["pos"] = arr(phi.pos());
    j["neg"] = arr(phi.neg());
    return j.dump();
}

Skeleton skeleton_from_json(const std::string& text, const QParams& params) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("skeleton JSON does not parse: ") + e.what());
    }
    try {
        double q = j.at("q").get<double>();
        if (q != params.q()) {
            std::ostringstream os;
            os.precision(17);
            os << "skeleton file has q = " << q << " but the requested q is " << params.q();
            throw ParseError(os.str());
        }
        Window w(j.at("m_min").get<int>(), j.at("m_max").get<int>());
        auto read = [](const nlohmann::json& a) {
            std::vector<cplx> v;
            for (const auto& e : a) {
                if (!e.is_array() || e.size() != 2)
                    throw ParseError("skeleton entries must be [re, im] pairs");
                v.emplace_back(e[0].get<double>(), e[1].get<double>());
            }
            return v;
        };
        return Skeleton(params, w, read(j.at("pos")), read(j.at("neg")));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed skeleton JSON: ") + e.what());
    } catch (const WindowError& e) {
        throw ParseError(std::string("inconsistent skeleton JSON: ") + e.what());
    }
}

} // namespace qfourier
