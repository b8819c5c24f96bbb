#pragma once

#include <filesystem>

#include "homnalg/algebra.hpp"

namespace homnalg {

/// Parsed .hna document: named algebras and morphisms in file order. Algebras
/// are built through the front-door constructor (validation flags recorded);
/// morphism matrices are checked for the homomorphism conditions on load.
struct Document {
  std::vector<std::pair<std::string, AlgebraPtr>> algebras;
  std::vector<Morphism> morphisms;
  std::vector<std::pair<std::string, MorphismCheck>> morphism_checks;

  AlgebraPtr find_algebra(const std::string& name) const;
  const Morphism* find_morphism(const std::string& name) const;
};

Document parse_hna(std::string_view text, const std::string& filename = "<input>");
Document parse_hna_file(const std::filesystem::path& path);

/// Canonical rendering: brackets sorted by index tuple, explicit alpha rows in
/// basis order, rationals as p/q. Re-parsing the output yields an identical
/// document.
std::string print_hna(const Document& doc);
std::string print_algebra_hna(const std::string& name, const HomNAlgebra& a);

bool documents_equal(const Document& a, const Document& b);

/// Canonical rendering of a vector as a linear combination over labels.
std::string lincomb_str(const Vec& v, const std::vector<std::string>& labels);

/// Collapse a derived-algebra name ("uce(L)", "L0~") to a parseable identifier.
std::string hna_identifier(const std::string& name);

}  // namespace homnalg
