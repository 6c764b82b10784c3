#include "torsion/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "torsion/error.hpp"

namespace torsion {

std::string_view to_string(AngleUnit unit) {
  return unit == AngleUnit::TwoPi ? "two_pi" : "pi";
}

AngleUnit parse_angle_unit(std::string_view text) {
  if (text == "two_pi") return AngleUnit::TwoPi;
  if (text == "pi") return AngleUnit::Pi;
  throw InvalidArgument("angle unit must be \"two_pi\" or \"pi\", got \"" + std::string(text) +
                        "\"");
}

Angle::Angle(std::int64_t p, std::int64_t q, AngleUnit unit) : unit_(unit) {
  if (q == 0) throw InvalidArgument("angle with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = g ? p / g : p;
  q_ = g ? q / g : q;
}

Rational Angle::turns() const {
  Rational t = make_rational(p_, unit_ == AngleUnit::TwoPi ? q_ : 2 * q_);
  // Reduce into [0, 1).
  BigInt floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= floor_part;
  return t;
}

double Angle::radians() const {
  return 2.0 * std::numbers::pi * to_double(turns());
}

bool Angle::is_trivial() const { return turns() == 0; }

std::int64_t common_period(std::span<const Angle> angles) {
  std::int64_t q = 1;
  for (const auto& a : angles) q = std::lcm(q, a.turns().get_den().get_si());
  return q;
}

}  // namespace torsion
