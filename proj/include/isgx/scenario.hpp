#ifndef ISGX_SCENARIO_HPP
#define ISGX_SCENARIO_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isgx/covariant_rep.hpp"
#include "isgx/partial_action.hpp"

namespace isgx {

/// A parsed scenario file: the action plus its declared representations.
/// Parsing performs the load-time structural validation (semigroup laws run
/// in the FiniteInverseSemigroup constructor); axiom and covariance checks
/// are left to the check suites.
struct Scenario {
  std::shared_ptr<const PartialAction> action;
  std::vector<MatrixRep> representations;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;

  const GroundSet& ground() const { return action->ground(); }
  const FiniteInverseSemigroup& semigroup() const { return action->semigroup(); }

  /// Representations whose names appear in `names`; all of them when names
  /// is empty. Unknown names raise ParseError.
  std::vector<MatrixRep> select_representations(const std::vector<std::string>& names) const;

  static Scenario from_json(const nlohmann::json& doc);
  static Scenario from_file(const std::string& path);
};

}  // namespace isgx

#endif  // ISGX_SCENARIO_HPP
