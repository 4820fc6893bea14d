#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace extinf {

class InsufficientSamplesError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Both samples have zero variance, so the t statistic is undefined.
class DegenerateSampleError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct SampleSet {
    std::vector<double> values;
    std::string label;
};

/// Arithmetic mean. Throws InsufficientSamplesError on empty input and
/// std::invalid_argument on non-finite values.
[[nodiscard]] double mean(std::span<const double> values);

/// Unbiased sample variance (divisor n - 1); needs at least two values.
[[nodiscard]] double variance(std::span<const double> values);

/// P(T <= t) for Student's t with `df` degrees of freedom, via the
/// regularized incomplete beta function. df may be fractional.
[[nodiscard]] double student_t_cdf(double t, double df);

/// I_x(a, b), evaluated with a Lentz continued fraction (relative tolerance
/// 1e-14, at most 10000 terms) on whichever side of the symmetry point
/// converges fastest.
[[nodiscard]] double regularized_incomplete_beta(double a, double b, double x);

enum class Alternative {
    mean_a_less,  // H0: mean_a >= mean_b, Ha: mean_a < mean_b
};

struct WelchReport {
    double t = 0.0;
    double df = 0.0;
    double p_one_tailed = 0.0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    double alpha = 0.01;
    bool reject_null = false;
};

/// One-tailed Welch test with Welch-Satterthwaite degrees of freedom.
/// p_one_tailed = P(T_df <= t); the null is rejected when p < alpha.
[[nodiscard]] WelchReport welch_test(std::span<const double> a, std::span<const double> b, double alpha,
                                     Alternative alternative = Alternative::mean_a_less);

[[nodiscard]] inline WelchReport welch_test(const SampleSet& a, const SampleSet& b, double alpha) {
    return welch_test(a.values, b.values, alpha);
}

/// All report fields as a JSON object.
[[nodiscard]] std::string to_json(const WelchReport& report);

/// e.g. "reject H0 at alpha=0.01 (p=0.000217)".
[[nodiscard]] std::string verdict_line(const WelchReport& report);

}  // namespace extinf
