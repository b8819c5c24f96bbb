#include "homnalg/rational.hpp"

#include <cstdlib>

#include "homnalg/error.hpp"

namespace homnalg {

Rat rat_parse(std::string_view s) {
  if (s.empty()) throw Error("empty rational literal");
  std::string t(s);
  // validate shape: [-]digits[/digits]
  std::size_t i = 0;
  if (t[i] == '-' || t[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++digits;
  if (digits == 0) throw Error("malformed rational '" + t + "'");
  if (i < t.size()) {
    if (t[i] != '/') throw Error("malformed rational '" + t + "'");
    ++i;
    std::size_t den_digits = 0;
    std::size_t den_start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != t.size()) throw Error("malformed rational '" + t + "'");
    if (t.substr(den_start) == std::string(den_digits, '0'))
      throw Error("zero denominator in '" + t + "'");
  }
  Rat r;
  if (r.set_str(t, 10) != 0) throw Error("malformed rational '" + t + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_str();
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) {
  return Vec(n);
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

void add_scaled(Vec& dst, const Rat& c, const Vec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

}  // namespace homnalg
