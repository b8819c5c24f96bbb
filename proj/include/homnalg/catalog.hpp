#pragma once

#include <functional>

#include "homnalg/extensions.hpp"

namespace homnalg {

struct FactResult {
  std::string description;
  bool passed = false;
  std::string detail;
};

/// A named, validated object with its recorded facts. Loading re-validates
/// the payload; run_expected_facts replays every recorded claim.
struct Fixture {
  std::string name;
  std::string provenance;
  AlgebraPtr algebra;                                // when the payload is an algebra
  std::optional<Morphism> morphism;                  // when it is a morphism
  std::optional<Extension> extension;                // surjective morphisms, classified
  std::vector<std::function<FactResult()>> facts;
};

const Fixture& get_fixture(const std::string& name);
std::vector<std::string> list_fixtures();
/// name or "all"
std::vector<FactResult> run_expected_facts(const std::string& name);

/// Convenience accessors used across the test suites.
AlgebraPtr catalog_algebra(const std::string& name);
Extension catalog_extension(const std::string& name);

}  // namespace homnalg
