#ifndef QFOURIER_SRC_SUMMATION_HPP
#define QFOURIER_SRC_SUMMATION_HPP

#include <algorithm>
#include <qfourier/params.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace qfourier::detail {

// Neumaier-compensated complex accumulator.  Order of additions is the
// caller's, so results stay deterministic.
class Accumulator {
public:
    void add(cplx x) {
        add_part(sum_re_, comp_re_, x.real());
        add_part(sum_im_, comp_im_, x.imag());
    }
    cplx value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void add_part(double& sum, double& comp, double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double sum_re_ = 0.0, sum_im_ = 0.0;
    double comp_re_ = 0.0, comp_im_ = 0.0;
};

struct TailSum {
    cplx value;
    std::size_t used = 0;  // number of terms summed before the tail estimate
    bool truncated = false;  // true when a tail estimate was added
};

// Sums a sequence whose exact terms decay like ratio^m past their peak while
// the computed terms carry a roundoff level noise[i] that grows.  The sum
// stops before the first pair of terms that sink below a few times their
// noise level and adds the geometric tail t*r/(1-r) of the last trusted
// term, r = min(ratio, observed decay of the last two terms).
inline TailSum sum_with_geometric_tail(const std::vector<cplx>& terms, const std::vector<double>& noise,
                                       double ratio) {
    const std::size_t n = terms.size();
    TailSum out;
    if (n == 0)
        return out;
    auto buried = [&](std::size_t i) { return i >= n || std::abs(terms[i]) <= 8.0 * noise[i]; };
    // The peak is searched among trusted terms only; noise can be larger.
    std::size_t peak = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (!buried(i) && (buried(peak) || std::abs(terms[i]) > std::abs(terms[peak])))
            peak = i;
    std::size_t stop = n - 1;
    for (std::size_t i = peak; i + 1 < n; ++i)
        if (buried(i + 1) && buried(i + 2)) {
            stop = i;
            break;
        }
    Accumulator acc;
    for (std::size_t i = 0; i <= stop; ++i)
        acc.add(terms[i]);
    if (stop > peak && std::abs(terms[stop]) < std::abs(terms[stop - 1])) {
        // ratio is the slowest decay the terms can have; use the observed
        // one when the terms fall off faster.
        const double r = std::min(ratio, std::abs(terms[stop]) / std::abs(terms[stop - 1]));
        acc.add(terms[stop] * (r / (1.0 - r)));
        out.truncated = true;
    }
    out.value = acc.value();
    out.used = stop + 1;
    return out;
}

// Roundoff level of the k-th q-derivative at |x| for data of size `scale`:
// every difference quotient doubles the absolute error and divides by
// (1-q^2)|x|, and the j-th one reaches down to q^{2j}|x|.
inline double derivative_noise(double scale, int k, double x, double qq) {
    double r = scale * 2.2e-16;
    for (int j = 0; j < k; ++j)
        r *= 2.0 / ((1.0 - qq) * std::abs(x) * std::pow(qq, j));
    return r;
}

} // namespace qfourier::detail

#endif
