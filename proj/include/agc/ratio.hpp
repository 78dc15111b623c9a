#pragma once

#include <cstdint>
#include <string>

namespace agc {

// Exact quotient of two counters, kept as numerator/denominator so reports
// never carry pre-rounded values. den == 0 marks an undefined ratio (empty
// input graph, zero baseline).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  bool defined() const { return den != 0; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// True when both sides are defined and num_a/den_a == num_b/den_b exactly.
bool same_value(const Ratio& a, const Ratio& b);

// a/b > 1 as an exact integer comparison; false when undefined.
bool exceeds_one(const Ratio& r);

// Fixed-point decimal with `places` fractional digits, round half up.
// Undefined ratios render as "n/a".
std::string render(const Ratio& r, int places = 3);

}  // namespace agc
