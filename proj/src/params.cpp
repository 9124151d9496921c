#include <qfourier/params.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfourier {

QParams::QParams(double q, double series_tol, int lattice_depth, double pole_guard)
    : q_(q), series_tol_(series_tol), lattice_depth_(lattice_depth), pole_guard_(pole_guard),
      cache_(std::make_shared<Cache>()) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("q must lie in (0,1), got " + std::to_string(q));
    if (!(series_tol > 0.0))
        throw std::invalid_argument("series_tol must be positive");
    if (lattice_depth < 1)
        throw std::invalid_argument("lattice_depth must be at least 1");
    if (!(pole_guard > 0.0))
        throw std::invalid_argument("pole_guard must be positive");
}

double QParams::lattice_point(int m) const {
    return std::pow(q2(), m);
}

bool QParams::same_policy(const QParams& other) const noexcept {
    return q_ == other.q_ && series_tol_ == other.series_tol_ &&
           lattice_depth_ == other.lattice_depth_ && pole_guard_ == other.pole_guard_;
}

QParams QParams::with_q(double q) const {
    return QParams(q, series_tol_, lattice_depth_, pole_guard_);
}

} // namespace qfourier
