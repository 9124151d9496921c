#include <qfourier/transform.hpp>

#include "summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace qfourier {

namespace {

constexpr cplx I{0.0, 1.0};

ScaledComplex reciprocal(const ScaledComplex& v) {
    ScaledComplex r;
    r.mant = 1.0 / v.mant;
    r.exp2 = -v.exp2;
    r.normalize();
    return r;
}

ScaledComplex e_scaled(cplx x, const QParams& p) {
    return reciprocal(qpoch_inf_scaled(x, p.q2(), p.series_tol() * 1e-2));
}

// Kernel values depend on z*s only, and on the lattice z*s = +-q^{2j}.
// Index j runs over [2 m_min, 2 m_max]; sign 0 is +, 1 is -.
class KernelTable {
public:
    template <class F>
    KernelTable(const Window& w, const QParams& p, F&& kernel_of_product)
        : lo_(2 * w.m_min), hi_(2 * w.m_max) {
        for (int j = lo_; j <= hi_; ++j) {
            double x = p.lattice_point(j);
            pos_.push_back(kernel_of_product(x));
            neg_.push_back(kernel_of_product(-x));
        }
    }
    const ScaledComplex& at(int j, bool negative) const {
        return negative ? neg_[j - lo_] : pos_[j - lo_];
    }

private:
    int lo_, hi_;
    std::vector<ScaledComplex> pos_, neg_;
};

template <class F>
void parallel_for(int n, unsigned threads, F&& body) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(1, n / 8)));
    if (threads <= 1) {
        for (int i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int i = static_cast<int>(t); i < n; i += static_cast<int>(threads))
                body(i);
        });
    for (auto& th : pool)
        th.join();
}

// out(+-q^{2n}) = scale * (1-q^2) sum_m q^{2m} [f(q^{2m}) K(+q^{2m} * out) + f(-q^{2m}) K(-q^{2m} * out)]
Skeleton lattice_transform(const Skeleton& f, const KernelTable& table, cplx scale, unsigned threads,
                           const char* what) {
    const QParams& p = f.params();
    const Window& w = f.window();
    const int n = w.size();
    std::vector<cplx> pos(n), neg(n);
    std::vector<double> weight(n);
    for (int i = 0; i < n; ++i)
        weight[i] = (1.0 - p.q2()) * p.lattice_point(w.m_min + i);
    parallel_for(2 * n, threads, [&](int idx) {
        const int i = idx / 2;
        const bool out_negative = (idx % 2) == 1;
        const int mo = w.m_min + i;
        detail::Accumulator acc;
        for (int branch = 0; branch < 2; ++branch) {
            const bool in_negative = branch == 1;
            const auto& vals = in_negative ? f.neg() : f.pos();
            for (int k = 0; k < n; ++k) {
                cplx v = vals[k];
                if (v == 0.0)
                    continue;
                const ScaledComplex& K = table.at(mo + w.m_min + k, in_negative != out_negative);
                acc.add(K.times(v * weight[k]));
            }
        }
        (out_negative ? neg : pos)[i] = scale * acc.value();
    });
    for (int i = 0; i < n; ++i)
        for (cplx v : {pos[i], neg[i]})
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                std::ostringstream os;
                os << what << " at lattice index " << w.m_min + i
                   << " exceeds the double range; use a smaller window";
                throw Overflow(os.str());
            }
    return Skeleton(p, w, std::move(pos), std::move(neg));
}

void require_integrable(const Skeleton& f, const char* what) {
    auto r = abs_integrable_check(f);
    if (!r.integrable)
        throw NonIntegrable(std::string(what) + " input is not absolutely integrable on its window: " +
                            r.diagnostic);
}

} // namespace

ScaledComplex kernel_forward_scaled(double z, double s, const QParams& p) {
    return E_q2_scaled(I * (1.0 - p.q2()) * p.q2() * z * s, p);
}

cplx kernel_forward(double z, double s, const QParams& p) {
    return E_q2(I * (1.0 - p.q2()) * p.q2() * z * s, p);
}

ScaledComplex kernel_inverse_scaled(double z, double s, const QParams& p) {
    return e_scaled(-I * (1.0 - p.q2()) * z * s, p);
}

cplx kernel_inverse(double z, double s, const QParams& p) {
    return kernel_inverse_scaled(z, s, p).value();
}

Skeleton fourier_forward(const Skeleton& phi, unsigned threads) {
    require_integrable(phi, "forward transform");
    const QParams& p = phi.params();
    KernelTable table(phi.window(), p, [&](double x) { return kernel_forward_scaled(x, 1.0, p); });
    return lattice_transform(phi, table, 1.0, threads, "forward transform");
}

Skeleton fourier_inverse(const Skeleton& psi, unsigned threads) {
    require_integrable(psi, "inverse transform");
    const QParams& p = psi.params();
    KernelTable table(psi.window(), p, [&](double x) { return kernel_inverse_scaled(x, 1.0, p); });
    return lattice_transform(psi, table, 1.0 / (2.0 * theta0(p)), threads, "inverse transform");
}

Skeleton transform_roundoff_bound(const Skeleton& f, Direction direction, unsigned threads) {
    const QParams& p = f.params();
    std::vector<cplx> pos, neg;
    for (cplx v : f.pos())
        pos.push_back(std::abs(v));
    for (cplx v : f.neg())
        neg.push_back(std::abs(v));
    Skeleton mag(p, f.window(), std::move(pos), std::move(neg));
    auto abs_of = [](ScaledComplex k) {
        k.mant = std::abs(k.mant);
        return k;
    };
    const double eps = std::numeric_limits<double>::epsilon();
    if (direction == Direction::forward) {
        KernelTable table(f.window(), p, [&](double x) { return abs_of(kernel_forward_scaled(x, 1.0, p)); });
        return lattice_transform(mag, table, eps, threads, "roundoff bound");
    }
    KernelTable table(f.window(), p, [&](double x) { return abs_of(kernel_inverse_scaled(x, 1.0, p)); });
    return lattice_transform(mag, table, eps / (2.0 * theta0(p)), threads, "roundoff bound");
}

double orthogonality_diagonal(const QParams& p) {
    return 2.0 * theta0(p) / (1.0 - p.q2());
}

std::vector<OrthogonalityValue> orthogonality(int n, Direction direction, const QParams& p,
                                              const Window& w) {
    const double c = 1.0 - p.q2();
    const double qn = p.lattice_point(n);
    std::vector<OrthogonalityValue> out;
    for (int mo = w.m_min; mo <= w.m_max; ++mo) {
        for (Sign so : {Sign::plus, Sign::minus}) {
            const double y = (so == Sign::plus ? 1.0 : -1.0) * p.lattice_point(mo);
            detail::Accumulator acc;
            cplx first_term = 0.0, last_term = 0.0;
            for (Sign si : {Sign::plus, Sign::minus}) {
                for (int m = w.m_min; m <= w.m_max; ++m) {
                    const double x = (si == Sign::plus ? 1.0 : -1.0) * p.lattice_point(m);
                    ScaledComplex prod;
                    if (direction == Direction::forward) {
                        // x plays z, y plays s
                        prod = e_scaled(-I * c * qn * x, p);
                        ScaledComplex k = E_q2_scaled(I * c * p.q2() * x * y, p);
                        prod.mant *= k.mant;
                        prod.exp2 += k.exp2;
                    } else {
                        // x plays s, y plays z
                        prod = e_scaled(-I * c * y * x, p);
                        ScaledComplex k = E_q2_scaled(I * c * p.q2() * qn * x, p);
                        prod.mant *= k.mant;
                        prod.exp2 += k.exp2;
                    }
                    prod.normalize();
                    cplx t = prod.times(c * p.lattice_point(m) * qn);
                    acc.add(t);
                    // The two branches cancel at the ends, so the tail test
                    // looks at the paired term.
                    if (m == w.m_min)
                        first_term += t;
                    if (m == w.m_max)
                        last_term += t;
                }
            }
            cplx v = acc.value();
            double tol = p.series_tol() * std::max(1.0, std::abs(v)) * 1e3;
            bool ok = std::isfinite(v.real()) && std::isfinite(v.imag()) && std::abs(first_term) < tol &&
                      std::abs(last_term) < tol;
            out.push_back({mo, so, y, v, ok});
        }
    }
    return out;
}

Relation relation_from_string(const std::string& name) {
    if (name == "lambda")
        return Relation::lambda;
    if (name == "dz")
        return Relation::dz;
    if (name == "z")
        return Relation::z;
    if (name == "inv_lambda")
        return Relation::inv_lambda;
    if (name == "inv_ds")
        return Relation::inv_ds;
    if (name == "inv_s")
        return Relation::inv_s;
    throw UsageError("unknown relation '" + name + "'");
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::lambda: return "lambda";
    case Relation::dz: return "dz";
    case Relation::z: return "z";
    case Relation::inv_lambda: return "inv_lambda";
    case Relation::inv_ds: return "inv_ds";
    case Relation::inv_s: return "inv_s";
    }
    return "?";
}

RelationSides commutation_sides(const Skeleton& phi, Relation relation, unsigned threads) {
    const double qm2 = 1.0 / phi.params().q2();
    switch (relation) {
    case Relation::lambda: {
        Skeleton l = fourier_forward(shift_lambda(phi, 1), threads);
        Skeleton r = shift_lambda(fourier_forward(phi, threads), -1) * qm2;
        return {l, r};
    }
    case Relation::dz: {
        Skeleton l = fourier_forward(q_derivative(phi, 1), threads);
        Skeleton r = multiply_by_power(fourier_forward(phi, threads), 1) * (-I);
        return {l, r};
    }
    case Relation::z: {
        Skeleton l = fourier_forward(multiply_by_power(phi, 1), threads);
        Skeleton r = shift_lambda(q_derivative(fourier_forward(phi, threads), 1), -1) * (-I * qm2);
        return {l, r};
    }
    case Relation::inv_lambda: {
        Skeleton l = fourier_inverse(shift_lambda(phi, 1), threads);
        Skeleton r = shift_lambda(fourier_inverse(phi, threads), -1) * qm2;
        return {l, r};
    }
    case Relation::inv_ds: {
        Skeleton l = fourier_inverse(q_derivative(phi, 1), threads);
        Skeleton r = shift_lambda(multiply_by_power(fourier_inverse(phi, threads), 1), -1) * I;
        return {l, r};
    }
    case Relation::inv_s: {
        Skeleton l = fourier_inverse(multiply_by_power(phi, 1), threads);
        Skeleton r = q_derivative(fourier_inverse(phi, threads), 1) * I;
        return {l, r};
    }
    }
    throw UsageError("unknown relation");
}

double relative_residual(const Skeleton& lhs, const Skeleton& rhs, std::optional<Window> compare) {
    auto w = intersect(lhs.window(), rhs.window());
    if (w && compare)
        w = intersect(*w, *compare);
    if (!w)
        throw WindowError("compared skeletons have no common window");
    Skeleton l = lhs.restrict(*w), r = rhs.restrict(*w);
    const double scale = r.max_abs();
    const double diff = (l - r).max_abs();
    if (scale == 0.0)
        return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / scale;
}

double commutation_check(const Skeleton& phi, Relation relation, std::optional<Window> compare,
                         unsigned threads) {
    auto sides = commutation_sides(phi, relation, threads);
    return relative_residual(sides.lhs, sides.rhs, compare);
}

double window_growth_change(const PointFunction& f, const Window& window, const QParams& params,
                            Direction direction, int grow, std::optional<Window> compare,
                            unsigned threads) {
    auto run = [&](const Window& w) {
        Skeleton s = sample(f, w, params);
        return direction == Direction::forward ? fourier_forward(s, threads)
                                               : fourier_inverse(s, threads);
    };
    Skeleton small = run(window);
    Skeleton big = run(Window(window.m_min - grow, window.m_max + grow));
    return relative_residual(small, big, compare ? compare : std::optional<Window>(window));
}

double round_trip_error(const Skeleton& phi, Direction first, int guard, unsigned threads) {
    const Window& w = phi.window();
    if (w.size() <= 2 * guard)
        throw WindowError("window too small for the round-trip guard band");
    Skeleton back = first == Direction::forward ? fourier_inverse(fourier_forward(phi, threads), threads)
                                                : fourier_forward(fourier_inverse(phi, threads), threads);
    Window inner(w.m_min + guard, w.m_max - guard);
    return relative_residual(back.restrict(inner), phi.restrict(inner));
}

} // namespace qfourier
