#include "extinf/extended_weight.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace extinf {

ExtendedWeight ExtendedWeight::finite(double value) {
    if (std::isnan(value)) {
        throw DomainError("finite weight must not be NaN");
    }
    if (std::isinf(value)) {
        throw DomainError("finite weight must not be infinite");
    }
    if (value < 0.0) {
        throw DomainError("finite weight must be non-negative, got " + std::to_string(value));
    }
    return unchecked_finite(value);
}

double to_binary64(ExtendedWeight w) noexcept {
    if (w.is_infinite()) {
        return std::numeric_limits<double>::infinity();
    }
    return *w.value();
}

ExtendedWeight from_binary64(double x) {
    if (std::isnan(x)) {
        throw DomainError("cannot convert NaN to an extended weight");
    }
    if (x < 0.0) {
        throw DomainError("cannot convert negative value to an extended weight");
    }
    if (std::isinf(x)) {
        return ExtendedWeight::infinity();
    }
    return ExtendedWeight::unchecked_finite(x);
}

std::string to_string(ExtendedWeight w) {
    if (w.is_infinite()) {
        return "inf";
    }
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *w.value());
    return std::string(buf.data(), end);
}

ExtendedWeight parse_extended_weight(std::string_view text) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lowered == "inf") {
        return ExtendedWeight::infinity();
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("not an extended weight: '" + std::string(text) + "'");
    }
    return ExtendedWeight::finite(value);
}

}  // namespace extinf
