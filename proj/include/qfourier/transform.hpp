#ifndef QFOURIER_TRANSFORM_HPP
#define QFOURIER_TRANSFORM_HPP

#include <qfourier/lattice.hpp>
#include <qfourier/qcore.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qfourier {

enum class Direction { forward, inverse };

/// Forward kernel E_{q^2}(i(1-q^2) q^2 z s).
cplx kernel_forward(double z, double s, const QParams& p);
ScaledComplex kernel_forward_scaled(double z, double s, const QParams& p);

/// Inverse kernel e_{q^2}(-i(1-q^2) z s).
cplx kernel_inverse(double z, double s, const QParams& p);
ScaledComplex kernel_inverse_scaled(double z, double s, const QParams& p);

/// threads == 0 picks the hardware concurrency.  Output does not depend on it.
Skeleton fourier_forward(const Skeleton& phi, unsigned threads = 0);
Skeleton fourier_inverse(const Skeleton& psi, unsigned threads = 0);

/// eps * sum |terms| of the transform sum at every output point: the
/// absolute roundoff level of fourier_forward / fourier_inverse.
Skeleton transform_roundoff_bound(const Skeleton& f, Direction direction, unsigned threads = 0);

struct OrthogonalityValue {
    int m;         // lattice index of the free variable
    Sign sign;
    double point;  // +-q^{2m}
    cplx value;
    bool converged;
};

/// Forward: q^{2n} * int dz e(-i(1-q^2) q^{2n} z) E(i(1-q^2) q^2 z s) for every
/// lattice s in the window; the diagonal is s = q^{2n}.
/// Inverse: q^{2n} * int ds e(-i(1-q^2) z s) E(i(1-q^2) q^2 q^{2n} s) for every
/// lattice z; the diagonal is z = q^{2n}.
std::vector<OrthogonalityValue> orthogonality(int n, Direction direction, const QParams& params,
                                              const Window& window);

/// 2 Theta_0 / (1 - q^2), the expected diagonal value.
double orthogonality_diagonal(const QParams& params);

enum class Relation { lambda, dz, z, inv_lambda, inv_ds, inv_s };

Relation relation_from_string(const std::string& name);
std::string to_string(Relation r);

struct RelationSides {
    Skeleton lhs;
    Skeleton rhs;
};

/// Both sides of one transform relation:
///   lambda      F(Lambda phi)   vs  q^{-2} Lambda^{-1} F(phi)
///   dz          F(d_z phi)      vs  -i s F(phi)
///   z           F(z phi)        vs  -i q^{-2} Lambda^{-1} d_s F(phi)
///   inv_lambda  F^{-1}(Lambda psi) vs q^{-2} Lambda^{-1} F^{-1}(psi)
///   inv_ds      F^{-1}(d_s psi) vs  i Lambda^{-1} z F^{-1}(psi)
///   inv_s       F^{-1}(s psi)   vs  i d_z F^{-1}(psi)
RelationSides commutation_sides(const Skeleton& phi, Relation relation, unsigned threads = 0);

/// max |l - r| / max |r| over the common window, or over `compare`
/// intersected with it.  Forward transforms grow without bound in s, so a
/// comparison on the full window only sees the largest points; pass a
/// moderate `compare` window to look at the bulk.
double relative_residual(const Skeleton& lhs, const Skeleton& rhs,
                         std::optional<Window> compare = std::nullopt);

double commutation_check(const Skeleton& phi, Relation relation,
                         std::optional<Window> compare = std::nullopt, unsigned threads = 0);

/// Applies the two transforms in the given order (forward: F^{-1} after F)
/// and returns the residual against the input, ignoring `guard` indices at
/// each end of the window.
double round_trip_error(const Skeleton& phi, Direction first, int guard = 8,
                        unsigned threads = 0);

/// Largest residual between the transform of phi and the transform of phi
/// extended by `grow` indices at both ends (the extension is sampled from f),
/// compared on `compare` (default: the original window).
double window_growth_change(const PointFunction& f, const Window& window, const QParams& params,
                            Direction direction, int grow = 8,
                            std::optional<Window> compare = std::nullopt, unsigned threads = 0);

} // namespace qfourier

#endif
