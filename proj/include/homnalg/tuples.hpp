#pragma once

#include <cstdint>
#include <vector>

namespace homnalg {

using IdxTuple = std::vector<std::uint32_t>;

/// Big-endian mixed-radix flattening: the first index is most significant, so
/// lexicographic tuple order matches numeric order of the flat index.
inline std::size_t flatten(const IdxTuple& t, std::uint32_t radix) {
  std::size_t idx = 0;
  for (std::uint32_t x : t) idx = idx * radix + x;
  return idx;
}

inline IdxTuple unflatten(std::size_t idx, std::uint32_t radix, std::size_t len) {
  IdxTuple t(len);
  for (std::size_t i = len; i-- > 0;) {
    t[i] = static_cast<std::uint32_t>(idx % radix);
    idx /= radix;
  }
  return t;
}

/// Lexicographic odometer over [radix]^len. Returns false when radix == 0 and
/// len > 0 (empty product space has one tuple only when len == 0).
template <typename Fn>
void for_each_tuple(std::uint32_t radix, std::size_t len, Fn&& fn) {
  if (len == 0) {
    fn(IdxTuple{});
    return;
  }
  if (radix == 0) return;
  IdxTuple t(len, 0);
  while (true) {
    fn(const_cast<const IdxTuple&>(t));
    std::size_t i = len;
    while (i > 0) {
      if (++t[i - 1] < radix) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

struct SignedPerm {
  IdxTuple perm;  // images of 0..n-1
  int sign;       // (-1)^(inversions)
};

/// All permutations of {0,...,n-1} with parity, in lexicographic order.
std::vector<SignedPerm> signed_permutations(std::size_t n);

/// t'[j] = t[perm[j]], the tuple realizing [x_{perm(1)},...,x_{perm(n)}].
inline IdxTuple permute_tuple(const IdxTuple& t, const IdxTuple& perm) {
  IdxTuple out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = t[perm[j]];
  return out;
}

}  // namespace homnalg
