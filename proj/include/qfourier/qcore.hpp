#ifndef QFOURIER_QCORE_HPP
#define QFOURIER_QCORE_HPP

#include <qfourier/errors.hpp>
#include <qfourier/params.hpp>

namespace qfourier {

/// Complex number stored as mantissa * 2^exp2, for products that leave the
/// double range before they are multiplied by something small.
struct ScaledComplex {
    cplx mant{1.0, 0.0};
    long exp2 = 0;

    void normalize();
    ScaledComplex& operator*=(cplx factor);
    /// mant * 2^exp2 as a plain complex; may be 0 or infinite.
    cplx value() const;
    /// scale * mant * 2^exp2 without forming the intermediate value.
    cplx times(cplx scale) const;
    double log2_abs() const;
};

// q-Pochhammer symbols --------------------------------------------------

/// (a;qq)_n
cplx qpoch_finite(cplx a, double qq, int n);

/// (a;qq)_inf, truncated once |a qq^k| / (1-qq) drops below tol.
cplx qpoch_inf(cplx a, double qq, double tol = 1e-17);
ScaledComplex qpoch_inf_scaled(cplx a, double qq, double tol = 1e-17);

/// Gaussian binomial [l over i] in base qq2.
double qbinom(int l, int i, double qq2);

// q^2-exponentials -------------------------------------------------------

/// e_{q^2}(z) = 1/(z;q^2)_inf.  Throws PoleProximity near z = q^{-2k}.
cplx e_q2(cplx z, const QParams& p);

/// e_{q^2}(z) through its partial-fraction expansion over the poles.
cplx e_q2_partial_fractions(cplx z, const QParams& p);

/// E_{q^2}(z) = (-z;q^2)_inf.  Throws Overflow when the value leaves the
/// double range; use E_q2_scaled for large arguments.
cplx E_q2(cplx z, const QParams& p);
ScaledComplex E_q2_scaled(cplx z, const QParams& p);

struct TrigPair {
    cplx cos;
    cplx sin;
};

/// cos_{q^2}, sin_{q^2} built from e_{q^2}.  Real arguments use the
/// partial-fraction sums, which need no pole check.
TrigPair small_trig(cplx z, const QParams& p);

/// Cos_{q^2}, Sin_{q^2} built from E_{q^2}.
TrigPair big_trig(cplx z, const QParams& p);

/// 0Phi1(-;0;q^2,z) = sum q^{2n(n-1)} z^n / (q^2;q^2)_n
cplx phi01(cplx z, const QParams& p);

// Theta-type bilateral sums ---------------------------------------------

/// Q(z) = (1-q^2) sum_m 1/(z q^{2m} + z^{-1} q^{-2m})
cplx bigQ(cplx z, const QParams& p);

/// Q(z) from the Jacobi theta quotient with nome q^4.
cplx bigQ_theta_oracle(cplx z, const QParams& p);

/// Jacobi theta function from its product formula.
cplx jacobi_theta(cplx u, cplx tau);

/// theta'(0|tau) = 2 pi p^{1/8} prod (1-p^n)^3 for real nome p.
double jacobi_theta_prime0(double p);

/// Theta(z) = (1-q^2) sum_m sin_{q^2}((1-q^2) q^{2m} z)
cplx theta_lattice(cplx z, const QParams& p);

/// Theta(1); computed once per QParams (and its copies).
double theta0(const QParams& p);

struct TrigLatticeSums {
    cplx lhs_cos;
    cplx lhs_sin;
};

/// Left-hand sides of the two truncated lattice sums
///   (1-q^2) z sum_{m>=-M} q^{2m} cos_{q^2}((1-q^2) q^{2m} z)
///   (1-q^2) z sum_{m>=-M} q^{2m} sin_{q^2}((1-q^2) q^{2m} z)
/// whose closed forms are sin_{q^2}(w) and 1 - cos_{q^2}(w), w = (1-q^2) q^{-2M} z.
TrigLatticeSums trig_lattice_sums(cplx z, int M, const QParams& p);

} // namespace qfourier

#endif
