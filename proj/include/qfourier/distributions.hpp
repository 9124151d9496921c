#ifndef QFOURIER_DISTRIBUTIONS_HPP
#define QFOURIER_DISTRIBUTIONS_HPP

#include <qfourier/lattice.hpp>
#include <qfourier/transform.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qfourier {

class Distribution;

namespace dist {

/// Regular functional <f, phi> = int conj(f) phi, from a skeleton or from a
/// function sampled on phi's window.
struct Regular {
    std::shared_ptr<const Skeleton> skeleton;
    PointFunction function;
    std::string label;
};
struct ThetaPlus {};
struct ThetaMinus {};
struct Delta {};
/// s^{-n} delta: the n-th Taylor coefficient at 0 written with q-factorials,
/// <s^{-n} delta, phi> = (1-q^2)^n / (q^2;q^2)_n (d^n phi)(0).
struct DeltaPow {
    int n = 0;
};
/// z^n for n >= 0 (regular), z^{-k-1} through the regularized sum for n < 0.
struct PowInt {
    int n = 0;
};
/// z_+^{nu-k} (PowPlusNu) and z_-^{nu-k} (PowMinusNu) with base nu > -1.
struct PowPlusNu {
    double nu = 0.0;
    int k = 0;
};
struct PowMinusNu {
    double nu = 0.0;
    int k = 0;
};
/// theta+ - theta-
struct SignS {};
/// <d f, phi> = -q^{-2} <f, Lambda^{-1} d phi>
struct Derivative {
    std::shared_ptr<const Distribution> inner;
};
struct Linear {
    std::vector<std::pair<cplx, Distribution>> terms;
};

} // namespace dist

class Distribution {
public:
    using Node = std::variant<dist::Regular, dist::ThetaPlus, dist::ThetaMinus, dist::Delta,
                              dist::DeltaPow, dist::PowInt, dist::PowPlusNu, dist::PowMinusNu,
                              dist::SignS, dist::Derivative, dist::Linear>;

    Distribution();  // the zero functional
    explicit Distribution(Node node);

    static Distribution regular(Skeleton f, std::string label = "f");
    static Distribution regular(PointFunction f, std::string label = "f");
    static Distribution theta_plus() { return Distribution(dist::ThetaPlus{}); }
    static Distribution theta_minus() { return Distribution(dist::ThetaMinus{}); }
    static Distribution delta() { return Distribution(dist::Delta{}); }
    static Distribution delta_pow(int n);
    static Distribution pow_int(int n) { return Distribution(dist::PowInt{n}); }
    /// Throws InvalidNu for nu <= -1 or when (q^{-2nu};q^2)_k vanishes.
    static Distribution pow_plus_nu(double nu, int k);
    static Distribution pow_minus_nu(double nu, int k);
    static Distribution sign_s() { return Distribution(dist::SignS{}); }

    const Node& node() const noexcept { return *node_; }
    bool is_zero() const;
    std::string label() const;

    Distribution operator+(const Distribution& o) const;
    Distribution operator-(const Distribution& o) const;
    Distribution operator*(cplx c) const;

private:
    std::shared_ptr<const Node> node_;
};

inline Distribution operator*(cplx c, const Distribution& d) { return d * c; }

/// <f, phi>.  Coefficients of linear combinations are conjugated, as for
/// regular functionals.  Tail problems are appended to `warnings` if given.
cplx pair(const Distribution& f, const Skeleton& phi, std::vector<std::string>* warnings = nullptr);

Distribution dist_derivative(const Distribution& f);

/// g(s) = (1/(2 Theta_0)) int f(z) e_{q^2}(i(1-q^2) z s) d_{q^2}z on the
/// s-lattice of `window`, for a regular f (or a combination of regular ones).
/// This is the kernel that makes <g, psi> = <f, F^{-1} psi>.  A skeleton
/// representative is summed over its own window; a function is sampled on
/// `window` widened by lattice_depth indices at both ends.
Skeleton fourier_numeric(const Distribution& f, const Window& window, const QParams& params);

/// sum_m q^{2 nu m} (q^{-2m} + i(1-q^2)) / ((1-q^2)^{-1} q^{-2m} + (1-q^2) q^{2m});
/// OutOfStrip unless 0 < nu < 1.
cplx c_nu(double nu, const QParams& params);

/// e_{q^2}(q^2) E_{q^2}(-q^{2(1-nu)}) / (2 Theta_0), the real factor in front
/// of c_nu in the power-distribution rows.
double nu_row_factor(double nu, const QParams& params);

/// (1-q^2)/(2 Theta_0) sum_m q^{2 nu m} e_{q^2}(i(1-q^2) q^{2m} s), the direct
/// series for the image of z_+^{nu-1} at a point s.
cplx nu_image_direct(double nu, double s, const QParams& params);

struct TransformTableEntry {
    Distribution source;
    Distribution image;
    std::string source_label;
    std::string image_label;
    cplx constant;               // leading closed-form constant of the image
    std::optional<int> n;        // for the integer power rows
    std::optional<double> nu;    // for the z_+-^{nu-1} rows
};

/// Closed-form image of a table source; UnsupportedDistribution otherwise.
TransformTableEntry fourier_table(const Distribution& f, const QParams& params);

/// The seven rows (n is used for both integer power rows).  With no nu the
/// nu rows are omitted.
std::vector<TransformTableEntry> transform_table(const QParams& params, int n,
                                                 std::optional<double> nu);

/// With phi = F^{-1} psi: |<image, psi> - <source, phi>| / max(1, |<source, phi>|).
double parseval_check(const TransformTableEntry& entry, const Skeleton& psi, unsigned threads = 0);

} // namespace qfourier

#endif
