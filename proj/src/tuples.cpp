#include "homnalg/tuples.hpp"

#include <algorithm>
#include <numeric>

namespace homnalg {

std::vector<SignedPerm> signed_permutations(std::size_t n) {
  std::vector<SignedPerm> out;
  IdxTuple p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    out.push_back({p, (inversions % 2 == 0) ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace homnalg
