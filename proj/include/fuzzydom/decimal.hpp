// Copyright 2026 The fuzzydom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzydom {

namespace detail {

constexpr std::int64_t pow10(int digits) {
  std::int64_t p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

}  // namespace detail

/**
 * Fixed-point decimal with `Digits` fractional digits, stored as a scaled
 * 64-bit integer. Addition, subtraction and comparison are exact; the product
 * of two values carries the sum of their scales so it is exact as well.
 */
template <int Digits>
class FixedDecimal {
 public:
  static_assert(Digits >= 0 && Digits <= 15);
  static constexpr int kDigits = Digits;
  static constexpr std::int64_t kScale = detail::pow10(Digits);

  constexpr FixedDecimal() = default;

  static constexpr FixedDecimal from_scaled(std::int64_t scaled) {
    FixedDecimal d;
    d.scaled_ = scaled;
    return d;
  }

  static constexpr FixedDecimal from_integer(std::int64_t value) {
    return from_scaled(value * kScale);
  }

  /// Parses `[-]digits[.digits]`. Returns nullopt on malformed text or when
  /// more than `Digits` fractional digits are present.
  static std::optional<FixedDecimal> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '-') {
      negative = true;
      text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
    if (frac.size() > static_cast<std::size_t>(Digits)) return std::nullopt;
    if (whole.size() > 12) return std::nullopt;

    std::int64_t value = 0;
    for (char c : whole) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + (c - '0');
    }
    std::int64_t fraction = 0;
    for (char c : frac) {
      if (c < '0' || c > '9') return std::nullopt;
      fraction = fraction * 10 + (c - '0');
    }
    for (std::size_t i = frac.size(); i < static_cast<std::size_t>(Digits); ++i) {
      fraction *= 10;
    }
    std::int64_t scaled = value * kScale + fraction;
    return from_scaled(negative ? -scaled : scaled);
  }

  constexpr std::int64_t scaled() const { return scaled_; }

  constexpr bool is_zero() const { return scaled_ == 0; }

  /// Always prints exactly `Digits` fractional digits.
  std::string to_string() const {
    std::int64_t magnitude = scaled_ < 0 ? -scaled_ : scaled_;
    std::string whole = std::to_string(magnitude / kScale);
    std::string out = scaled_ < 0 ? "-" + whole : whole;
    if constexpr (Digits > 0) {
      std::string frac = std::to_string(magnitude % kScale);
      out += '.';
      out.append(static_cast<std::size_t>(Digits) - frac.size(), '0');
      out += frac;
    }
    return out;
  }

  /// Exact conversion to a finer scale.
  template <int Wider>
  constexpr FixedDecimal<Wider> widen() const {
    static_assert(Wider >= Digits);
    return FixedDecimal<Wider>::from_scaled(scaled_ * detail::pow10(Wider - Digits));
  }

  double to_double() const { return static_cast<double>(scaled_) / kScale; }

  constexpr FixedDecimal& operator+=(FixedDecimal o) {
    scaled_ += o.scaled_;
    return *this;
  }
  constexpr FixedDecimal& operator-=(FixedDecimal o) {
    scaled_ -= o.scaled_;
    return *this;
  }

  friend constexpr FixedDecimal operator+(FixedDecimal a, FixedDecimal b) {
    return from_scaled(a.scaled_ + b.scaled_);
  }
  friend constexpr FixedDecimal operator-(FixedDecimal a, FixedDecimal b) {
    return from_scaled(a.scaled_ - b.scaled_);
  }
  friend constexpr FixedDecimal operator*(std::int64_t k, FixedDecimal a) {
    return from_scaled(k * a.scaled_);
  }
  friend constexpr FixedDecimal operator*(FixedDecimal a, std::int64_t k) {
    return from_scaled(k * a.scaled_);
  }

  friend constexpr auto operator<=>(FixedDecimal, FixedDecimal) = default;
  friend constexpr bool operator==(FixedDecimal, FixedDecimal) = default;

 private:
  std::int64_t scaled_ = 0;
};

template <int A, int B>
constexpr FixedDecimal<A + B> operator*(FixedDecimal<A> a, FixedDecimal<B> b) {
  return FixedDecimal<A + B>::from_scaled(a.scaled() * b.scaled());
}

template <int Digits>
constexpr FixedDecimal<Digits> min(FixedDecimal<Digits> a, FixedDecimal<Digits> b) {
  return b < a ? b : a;
}

template <int Digits>
constexpr FixedDecimal<Digits> max(FixedDecimal<Digits> a, FixedDecimal<Digits> b) {
  return a < b ? b : a;
}

/// Membership degrees, set weights and every domination parameter use 4
/// fractional digits.
using Decimal = FixedDecimal<4>;

constexpr Decimal kZero = Decimal::from_scaled(0);
constexpr Decimal kOne = Decimal::from_scaled(Decimal::kScale);

/// Parses a 4-digit decimal; throws std::invalid_argument otherwise.
inline Decimal parse_decimal(std::string_view text) {
  auto d = Decimal::parse(text);
  if (!d) {
    throw std::invalid_argument("invalid decimal '" + std::string(text) +
                                "' (at most 4 fractional digits)");
  }
  return *d;
}

}  // namespace fuzzydom
