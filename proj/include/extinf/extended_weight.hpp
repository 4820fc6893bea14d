#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace extinf {

/// Thrown when a binary64 value has no counterpart in the extended domain
/// (NaN, negative values, or an infinite value passed as a finite payload).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A non-negative path cost that is either finite or the sentinel infinity.
///
/// The sentinel compares greater than every finite cost and absorbs addition.
/// Unlike IEEE-754 +inf it is a tag, not a bit pattern, so comparisons against
/// it never touch the payload.
class ExtendedWeight {
  public:
    /// Finite(0).
    constexpr ExtendedWeight() noexcept = default;

    [[nodiscard]] static constexpr ExtendedWeight infinity() noexcept { return ExtendedWeight(0.0, true); }

    /// Finite(value). Throws DomainError unless value is finite and >= 0.
    [[nodiscard]] static ExtendedWeight finite(double value);

    [[nodiscard]] constexpr bool is_infinite() const noexcept { return infinite_; }
    [[nodiscard]] constexpr bool is_finite() const noexcept { return !infinite_; }

    /// Payload of a finite weight; nullopt for the sentinel.
    [[nodiscard]] constexpr std::optional<double> value() const noexcept {
        if (infinite_) {
            return std::nullopt;
        }
        return value_;
    }

    // Hot-path constructor for callers that already hold a valid payload
    // (graph edge weights that passed validation, sums of such weights).
    [[nodiscard]] static constexpr ExtendedWeight unchecked_finite(double value) noexcept {
        return ExtendedWeight(value + 0.0, false);
    }

    friend constexpr std::strong_ordering compare(ExtendedWeight a, ExtendedWeight b) noexcept {
        if (a.infinite_ || b.infinite_) {
            return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
        }
        if (a.value_ < b.value_) {
            return std::strong_ordering::less;
        }
        if (b.value_ < a.value_) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    friend constexpr std::strong_ordering operator<=>(ExtendedWeight a, ExtendedWeight b) noexcept {
        return compare(a, b);
    }

    friend constexpr bool operator==(ExtendedWeight a, ExtendedWeight b) noexcept {
        return compare(a, b) == std::strong_ordering::equal;
    }

    /// Infinity absorbs; finite sums that overflow binary64 saturate to Infinity.
    friend constexpr ExtendedWeight add(ExtendedWeight a, ExtendedWeight b) noexcept {
        if (a.infinite_) {
            return a;
        }
        if (b.infinite_) {
            return b;
        }
        const double sum = a.value_ + b.value_;
        if (sum > kMaxFinite) {
            return infinity();
        }
        return ExtendedWeight(sum, false);
    }

    friend constexpr ExtendedWeight operator+(ExtendedWeight a, ExtendedWeight b) noexcept { return add(a, b); }

  private:
    static constexpr double kMaxFinite = 1.7976931348623157e308;

    constexpr ExtendedWeight(double value, bool infinite) noexcept : value_(value), infinite_(infinite) {}

    double value_ = 0.0;
    bool infinite_ = false;
};

/// Infinity maps to IEEE-754 +inf (0x7FF0000000000000); finite payloads map to themselves.
[[nodiscard]] double to_binary64(ExtendedWeight w) noexcept;

/// Inverse of to_binary64. Throws DomainError on NaN or negative input.
[[nodiscard]] ExtendedWeight from_binary64(double x);

/// `inf` for the sentinel, shortest round-trip decimal otherwise.
[[nodiscard]] std::string to_string(ExtendedWeight w);

/// Accepts `inf` in any letter case or a non-negative decimal literal.
[[nodiscard]] ExtendedWeight parse_extended_weight(std::string_view text);

}  // namespace extinf
