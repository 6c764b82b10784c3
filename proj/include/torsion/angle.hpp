#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "torsion/rational.hpp"

namespace torsion {

/// Unit in which an angle fraction p/q is expressed: 2π·p/q or π·p/q.
enum class AngleUnit { TwoPi, Pi };

std::string_view to_string(AngleUnit unit);
AngleUnit parse_angle_unit(std::string_view text);

/// A rotation angle that is a rational multiple of π, kept as a reduced fraction.
class Angle {
 public:
  Angle() = default;
  /// Reduces p/q; throws InvalidArgument if q == 0.
  Angle(std::int64_t p, std::int64_t q, AngleUnit unit = AngleUnit::TwoPi);

  std::int64_t numerator() const noexcept { return p_; }
  std::int64_t denominator() const noexcept { return q_; }
  AngleUnit unit() const noexcept { return unit_; }

  /// The angle as a fraction of a full turn, reduced into [0, 1).
  Rational turns() const;
  double radians() const;

  /// True when the angle is a multiple of 2π.
  bool is_trivial() const;

  /// Same point on the circle, irrespective of unit.
  bool same_rotation(const Angle& other) const { return turns() == other.turns(); }

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
  AngleUnit unit_ = AngleUnit::TwoPi;
};

/// Least common multiple of the turn denominators: the period in m of every e^{i m φ}.
std::int64_t common_period(std::span<const Angle> angles);

}  // namespace torsion
