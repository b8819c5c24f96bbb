#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace homnalg {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator, which is exactly the canonical form required here.
using Rat = mpq_class;

/// Dense coordinate vector.
using Vec = std::vector<Rat>;

/// Parse "p" or "p/q" (q > 0 after canonicalization). Throws Error on junk.
Rat rat_parse(std::string_view s);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
void add_scaled(Vec& dst, const Rat& c, const Vec& src);

}  // namespace homnalg
