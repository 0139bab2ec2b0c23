#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace igcob {

/// A natural number or omega. Addition saturates at omega.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat omega() {
    ExtNat x;
    x.value_.reset();
    return x;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_omega() const { return !value_.has_value(); }

  /// Precondition: is_finite().
  constexpr std::uint64_t value() const { return *value_; }

  constexpr ExtNat& operator+=(const ExtNat& rhs) {
    if (is_omega() || rhs.is_omega()) {
      value_.reset();
    } else {
      *value_ += *rhs.value_;
    }
    return *this;
  }
  friend constexpr ExtNat operator+(ExtNat lhs, const ExtNat& rhs) { return lhs += rhs; }

  friend constexpr bool operator==(const ExtNat&, const ExtNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.is_omega() || b.is_omega()) {
      return a.is_omega() <=> b.is_omega();
    }
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return is_omega() ? "omega" : std::to_string(*value_); }

  /// Accepts a decimal literal or "omega".
  static std::optional<ExtNat> parse(std::string_view text);

 private:
  std::optional<std::uint64_t> value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const ExtNat& x) { return os << x.to_string(); }

}  // namespace igcob
