#include "extinf/stats.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace extinf {

namespace {

constexpr double kTolerance = 1e-14;
constexpr int kMaxTerms = 10000;
constexpr double kTiny = 1e-300;

void require_finite(std::span<const double> values) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("sample values must be finite");
        }
    }
}

// Continued fraction for I_x(a, b) (modified Lentz). Converges quickly for
// x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) {
        d = kTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxTerms; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kTolerance) {
            return h;
        }
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

// I_x(a, b) given x, y = 1 - x (passed separately so callers can compute it
// without cancellation), their logs, and ln B(a, b).
double incomplete_beta(double a, double b, double x, double y, double log_x, double log_y, double log_beta) {
    if (x <= 0.0) {
        return 0.0;
    }
    if (y <= 0.0) {
        return 1.0;
    }
    const double front = std::exp(a * log_x + b * log_y - log_beta);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, y) / b;
}

// ln B(a, 1/2). For large a the lgamma difference loses digits, so use the
// asymptotic series of ln Gamma(a + 1/2) - ln Gamma(a) instead.
double log_beta_half(double a) {
    constexpr double kLogGammaHalf = 0.57236494292470008707;  // ln sqrt(pi)
    if (a < 20.0) {
        return std::lgamma(a) + kLogGammaHalf - std::lgamma(a + 0.5);
    }
    const double inv = 1.0 / a;
    const double inv2 = inv * inv;
    const double ratio = 0.5 * std::log(a) - inv / 8.0 +
                         inv * inv2 * (1.0 / 192.0 - inv2 * (1.0 / 640.0 - inv2 * (17.0 / 14336.0 - inv2 * 31.0 / 18432.0)));
    return kLogGammaHalf - ratio;
}

}  // namespace

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw InsufficientSamplesError("mean needs at least one value");
    }
    require_finite(values);
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
    if (values.size() < 2) {
        throw InsufficientSamplesError("variance needs at least two values, got " + std::to_string(values.size()));
    }
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - m) * (v - m);
    }
    return ss / static_cast<double>(values.size() - 1);
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("incomplete beta needs a > 0 and b > 0");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("incomplete beta needs x in [0, 1]");
    }
    const double y = 1.0 - x;
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return incomplete_beta(a, b, x, y, std::log(x), std::log1p(-x), log_beta);
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0) || std::isnan(df)) {
        throw std::invalid_argument("degrees of freedom must be positive");
    }
    if (std::isnan(t)) {
        throw std::invalid_argument("t must not be NaN");
    }
    if (std::isinf(t)) {
        return t > 0.0 ? 1.0 : 0.0;
    }
    if (std::isinf(df)) {
        return 0.5 * std::erfc(-t / std::numbers::sqrt2);
    }
    // P(|T| > |t|) = I_x(df/2, 1/2) with x = df / (df + t^2).
    const double t2 = t * t;
    const double denom = df + t2;
    const double x = df / denom;
    const double y = t2 / denom;
    const double log_x = -std::log1p(t2 / df);
    const double log_y = std::log(y);
    const double a = 0.5 * df;
    const double tail = 0.5 * incomplete_beta(a, 0.5, x, y, log_x, log_y, log_beta_half(a));
    return t < 0.0 ? tail : 1.0 - tail;
}

WelchReport welch_test(std::span<const double> a, std::span<const double> b, double alpha, Alternative alternative) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    if (a.size() < 2 || b.size() < 2) {
        throw InsufficientSamplesError("welch test needs at least two samples per group");
    }

    WelchReport r;
    r.alpha = alpha;
    r.n_a = a.size();
    r.n_b = b.size();
    r.mean_a = mean(a);
    r.mean_b = mean(b);
    r.var_a = variance(a);
    r.var_b = variance(b);
    if (r.var_a == 0.0 && r.var_b == 0.0) {
        throw DegenerateSampleError("both samples have zero variance");
    }

    const double se_a = r.var_a / static_cast<double>(r.n_a);
    const double se_b = r.var_b / static_cast<double>(r.n_b);
    const double se = se_a + se_b;
    r.t = (r.mean_a - r.mean_b) / std::sqrt(se);
    r.df = se * se /
           (se_a * se_a / static_cast<double>(r.n_a - 1) + se_b * se_b / static_cast<double>(r.n_b - 1));

    switch (alternative) {
        case Alternative::mean_a_less:
            r.p_one_tailed = student_t_cdf(r.t, r.df);
            break;
    }
    r.reject_null = r.p_one_tailed < alpha;
    return r;
}

std::string to_json(const WelchReport& r) {
    const nlohmann::json doc = {
        {"t", r.t},
        {"df", r.df},
        {"p_one_tailed", r.p_one_tailed},
        {"mean_a", r.mean_a},
        {"mean_b", r.mean_b},
        {"var_a", r.var_a},
        {"var_b", r.var_b},
        {"n_a", r.n_a},
        {"n_b", r.n_b},
        {"alpha", r.alpha},
        {"reject_null", r.reject_null},
        {"alternative", "mean_a_less"},
    };
    return doc.dump();
}

std::string verdict_line(const WelchReport& r) {
    std::ostringstream os;
    os << (r.reject_null ? "reject H0" : "fail to reject H0") << " at alpha=" << r.alpha << " (p=" << r.p_one_tailed
       << ")";
    return os.str();
}

}  // namespace extinf
