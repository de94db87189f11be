#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "grain/errors.hpp"

namespace grain {

// Exact rational arithmetic for boundary classification.  Scaling regimes
// change on lower dimensional sets (gamma equal to a critical exponent,
// alpha equal to 2-p, ...), and floating point cannot decide membership in
// such a set reliably.  When the inputs are supplied as rationals the
// comparisons below are exact; intermediate products use 128-bit integers so
// they cannot overflow for any normalized operands.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n) : num(n), den(1) {}
  Frac(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;

  // Three-way comparison via cross multiplication, overflow-free.
  int cmp(const Frac& o) const;
  bool operator==(const Frac& o) const { return cmp(o) == 0; }
  bool operator<(const Frac& o) const { return cmp(o) < 0; }
  bool operator<=(const Frac& o) const { return cmp(o) <= 0; }
  bool operator>(const Frac& o) const { return cmp(o) > 0; }
  bool operator>=(const Frac& o) const { return cmp(o) >= 0; }

  // Accepts "3/2", "-1/4", "2", and plain decimals like "0.25" (interpreted
  // exactly as written, i.e. 25/100).  Returns nullopt on anything else.
  static std::optional<Frac> parse(const std::string& text);

  std::string str() const;
};

}  // namespace grain
