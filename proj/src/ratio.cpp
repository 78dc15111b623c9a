#include "agc/ratio.hpp"

namespace agc {

bool same_value(const Ratio& a, const Ratio& b) {
  if (!a.defined() || !b.defined()) return false;
  return static_cast<unsigned __int128>(a.num) * b.den ==
         static_cast<unsigned __int128>(b.num) * a.den;
}

bool exceeds_one(const Ratio& r) { return r.defined() && r.num > r.den; }

std::string render(const Ratio& r, int places) {
  if (!r.defined()) return "n/a";
  std::uint64_t whole = r.num / r.den;
  unsigned __int128 rem = r.num % r.den;
  unsigned __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  unsigned __int128 frac = (rem * scale + r.den / 2) / r.den;
  if (frac >= scale) {
    frac -= scale;
    ++whole;
  }
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::string digits;
    for (int i = 0; i < places; ++i) {
      digits.push_back(static_cast<char>('0' + static_cast<unsigned>(frac % 10)));
      frac /= 10;
    }
    out.push_back('.');
    out.append(digits.rbegin(), digits.rend());
  }
  return out;
}

}  // namespace agc
