#pragma once

#include <cstdint>

#include "homnalg/catalog.hpp"

namespace homnalg::testsupport {

// deterministic xorshift generator for property-style tests
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }
  // small rational with numerator in [-4, 4] and denominator in {1, 2, 3}
  Rat rat() {
    long num = static_cast<long>(next() % 9) - 4;
    unsigned long den = 1 + next() % 3;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rat();
    return v;
  }
  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat();
    return m;
  }

private:
  std::uint64_t s_;
};

inline std::vector<std::string> algebra_fixture_names() {
  std::vector<std::string> out;
  for (const std::string& n : list_fixtures())
    if (get_fixture(n).algebra) out.push_back(n);
  return out;
}

inline std::vector<std::string> perfect_fixture_names() {
  std::vector<std::string> out;
  for (const std::string& n : algebra_fixture_names())
    if (is_perfect(*get_fixture(n).algebra)) out.push_back(n);
  return out;
}

inline std::vector<std::string> extension_fixture_names() {
  std::vector<std::string> out;
  for (const std::string& n : list_fixtures())
    if (get_fixture(n).extension) out.push_back(n);
  return out;
}

}  // namespace homnalg::testsupport
