#ifndef QFOURIER_PARAMS_HPP
#define QFOURIER_PARAMS_HPP

#include <complex>
#include <memory>
#include <mutex>

namespace qfourier {

using cplx = std::complex<double>;

/// Deformation parameter q together with the numerical policy shared by
/// every module.  Immutable after construction; copies share the lazily
/// computed normalization constant.
class QParams {
public:
    explicit QParams(double q = 0.5, double series_tol = 1e-15, int lattice_depth = 48,
                     double pole_guard = 1e-8);

    double q() const noexcept { return q_; }
    double q2() const noexcept { return q_ * q_; }
    double series_tol() const noexcept { return series_tol_; }
    int lattice_depth() const noexcept { return lattice_depth_; }
    double pole_guard() const noexcept { return pole_guard_; }

    /// q^{2m}, computed as an exact power of q^2.
    double lattice_point(int m) const;

    bool same_policy(const QParams& other) const noexcept;

    QParams with_q(double q) const;

private:
    friend double theta0(const QParams&);

    struct Cache {
        std::once_flag once;
        double theta0 = 0.0;
    };

    double q_;
    double series_tol_;
    int lattice_depth_;
    double pole_guard_;
    std::shared_ptr<Cache> cache_;
};

} // namespace qfourier

#endif
