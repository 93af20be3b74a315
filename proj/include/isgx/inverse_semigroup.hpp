#ifndef ISGX_INVERSE_SEMIGROUP_HPP
#define ISGX_INVERSE_SEMIGROUP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "isgx/ground_set.hpp"
#include "isgx/partial_bijection.hpp"

namespace isgx {

/// A finite unital inverse semigroup given by its multiplication table,
/// involution table and unit. Construction validates the defining laws
/// exhaustively: associativity, s·s*·s = s and s*·s·s* = s*, s** = s,
/// commuting idempotents, and the unit law.
///
/// Product convention: mult(s, t) is the element acting as "t first", the
/// same convention compose() uses on partial bijections.
class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup(std::vector<std::string> names,
                         std::vector<std::vector<int>> mult,
                         std::vector<int> inv,
                         int unit);

  int size() const { return static_cast<int>(names_.size()); }
  int mult(int s, int t) const { return mult_[s][t]; }
  int inv(int s) const { return inv_[s]; }
  int unit() const { return unit_; }
  const std::string& name(int s) const { return names_.at(s); }
  /// Index of a named element; throws StructureError for unknown names.
  int index_of(const std::string& name) const;

  bool is_idempotent(int s) const { return mult_[s][s] == s; }
  /// Product s1·s2·...·sn of a nonempty word.
  int product_of_word(std::span<const int> word) const;

  /// Present when the semigroup was generated inside I(X); element ids then
  /// index the canonical sorted list of partial bijections.
  bool has_realization() const { return realization_.has_value(); }
  const PartialBijection& bijection_of(int s) const;
  const GroundSet& ground() const;

  /// The table-mode form of the scenario schema; parses back to an equal
  /// semigroup (the realization, if any, is not carried along).
  nlohmann::json to_json() const;

 private:
  friend FiniteInverseSemigroup generate_semigroup(const GroundSet&,
                                                   const std::vector<PartialBijection>&,
                                                   const std::vector<std::string>&);
  void validate_laws() const;

  std::vector<std::string> names_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  int unit_;
  std::optional<std::vector<PartialBijection>> realization_;
  std::optional<GroundSet> ground_;
};

/// Closure of the generators inside I(X) under compose and invert, with the
/// identity map adjoined when absent. Element ids index the canonical list
/// sorted by image arrays; generator names are kept where they match.
FiniteInverseSemigroup generate_semigroup(const GroundSet& ground,
                                          const std::vector<PartialBijection>& generators,
                                          const std::vector<std::string>& generator_names = {});

/// {s : s·s = s}, each of which satisfies inv(s) = s.
std::vector<int> idempotents(const FiniteInverseSemigroup& sg);

/// Natural partial order: s ≤ t iff s = f·t for some idempotent f
/// (equivalently s = s·s*·t; both routes are evaluated and must agree).
bool natural_leq(const FiniteInverseSemigroup& sg, int s, int t);

/// True iff every element is idempotent (commutativity is then automatic,
/// and asserted anyway).
bool is_semilattice(const FiniteInverseSemigroup& sg);

}  // namespace isgx

#endif  // ISGX_INVERSE_SEMIGROUP_HPP
