#ifndef QFOURIER_LATTICE_HPP
#define QFOURIER_LATTICE_HPP

#include <qfourier/errors.hpp>
#include <qfourier/params.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qfourier {

/// Inclusive index range; lattice points are +-q^{2m} for m_min <= m <= m_max.
/// Small m are large points, large m are points near 0.
struct Window {
    int m_min = 0;
    int m_max = 0;

    Window() = default;
    Window(int lo, int hi);

    int size() const noexcept { return m_max - m_min + 1; }
    bool contains(int m) const noexcept { return m >= m_min && m <= m_max; }
    bool operator==(const Window&) const = default;
};

/// Common part of two windows; nullopt when they do not overlap.
std::optional<Window> intersect(const Window& a, const Window& b);

enum class Sign { plus, minus };

/// Values of a function on the two-sided lattice {+-q^{2m}}.
class Skeleton {
public:
    Skeleton(QParams params, Window window, std::vector<cplx> pos, std::vector<cplx> neg);

    const QParams& params() const noexcept { return params_; }
    const Window& window() const noexcept { return window_; }
    const std::vector<cplx>& pos() const noexcept { return pos_; }
    const std::vector<cplx>& neg() const noexcept { return neg_; }

    cplx at(int m, Sign s) const;
    cplx pos_at(int m) const { return at(m, Sign::plus); }
    cplx neg_at(int m) const { return at(m, Sign::minus); }

    /// Largest |entry| over both branches.
    double max_abs() const;

    /// Same values on a sub-window.
    Skeleton restrict(const Window& w) const;

    Skeleton operator+(const Skeleton& other) const;
    Skeleton operator-(const Skeleton& other) const;
    Skeleton operator*(cplx c) const;

private:
    QParams params_;
    Window window_;
    std::vector<cplx> pos_;
    std::vector<cplx> neg_;
};

inline Skeleton operator*(cplx c, const Skeleton& s) { return s * c; }

using PointFunction = std::function<cplx(double)>;

Skeleton sample(const PointFunction& f, const Window& window, const QParams& params);

/// Skeleton with a single 1 at sign * q^{2n}.
Skeleton basis(int n, Sign sign, const Window& window, const QParams& params);

/// (Lambda^k phi)(x) = phi(q^{2k} x).  The result lives on the part of the
/// window where the shifted index is still available.
Skeleton shift_lambda(const Skeleton& phi, int k);

/// k-fold q^2-derivative (f(x) - f(q^2 x)) / ((1-q^2) x); consumes k indices
/// at the m_max end.
Skeleton q_derivative(const Skeleton& phi, int k = 1);

/// x^n phi(x) pointwise.
Skeleton multiply_by_power(const Skeleton& phi, int n);

/// Pointwise product of two skeletons on their common window.
Skeleton pointwise_product(const Skeleton& a, const Skeleton& b);

struct JacksonResult {
    cplx value;
    bool converged = true;
    std::string diagnostic;
};

/// (1-q^2) sum_m q^{2m} [phi(q^{2m}) + phi(-q^{2m})] over the window, with the
/// tail criterion checked at both ends.
JacksonResult jackson_integral(const Skeleton& phi);

/// (1-q^2) sum_{m>=0} q^{2m} [b f(b q^{2m}) - a f(a q^{2m})]
cplx finite_q_integral(const PointFunction& f, double a, double b, const QParams& params);

struct IntegrabilityReport {
    bool integrable = false;
    double abs_integral = 0.0;
    std::string diagnostic;
};

IntegrabilityReport abs_integrable_check(const Skeleton& phi);

/// max over the window of |x^k (d^l phi)(x)|
double seminorm(const Skeleton& phi, int k, int l);

/// Average of the two deepest entries, the lattice version of phi(0).
cplx value_at_zero(const Skeleton& phi);

/// max |a - b| over the common window, divided by max(max|b|, tiny).
double relative_max_distance(const Skeleton& a, const Skeleton& b);

std::string to_json(const Skeleton& phi);
/// Parses the interchange format; the file's q overrides params.q() only if
/// they agree, otherwise ParseError is thrown.
Skeleton skeleton_from_json(const std::string& text, const QParams& params);

} // namespace qfourier

#endif
