#ifndef QFOURIER_VERIFY_HPP
#define QFOURIER_VERIFY_HPP

#include <qfourier/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qfourier {

struct CheckResult {
    std::string suite;
    std::string name;
    double residual = 0.0;  // NaN for exact (symbolic) checks
    double tolerance = 0.0;
    bool passed = false;
    bool exact = false;
    /// Literal form of a statement that is known not to hold; reported for
    /// reference and never counted as a failure.
    bool known_false = false;
    std::string detail;
};

struct VerifyConfig {
    QParams params;
    std::optional<Window> window;  // overrides every suite's default window
    std::optional<double> nu;      // enables the power-distribution rows of the table suite
    unsigned threads = 0;
};

/// qcore, lattice, ncorder, orthogonality, transform, table
std::vector<std::string> verify_suite_names();

/// Runs one suite, or every suite for "all".  UsageError for unknown names.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyConfig& config);

/// True when every check that is not marked known_false passed.
bool verify_passed(const std::vector<CheckResult>& results);

// Default windows, as functions of q.

/// |x| from about 2.8e14 down to 1.3e-29 (indices -24..48 at q = 0.5).
Window default_lattice_window(const QParams& params);
/// |x| <= 1e5 down to 1e-30: where forward transforms of Gaussians stay finite.
Window default_transform_window(const QParams& params);
/// |x| in [1e-6, 64], where transform relations are compared.
Window default_comparison_window(const QParams& params);
/// |x| <= 1e5 down to q^{0.6 m} < 1e-14, deep enough for regularized pairings.
Window default_pairing_window(const QParams& params);

} // namespace qfourier

#endif
