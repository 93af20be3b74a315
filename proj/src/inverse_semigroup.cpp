#include "isgx/inverse_semigroup.hpp"

#include <algorithm>
#include <map>

#include "isgx/error.hpp"

namespace isgx {

FiniteInverseSemigroup::FiniteInverseSemigroup(std::vector<std::string> names,
                                               std::vector<std::vector<int>> mult,
                                               std::vector<int> inv,
                                               int unit)
    : names_(std::move(names)), mult_(std::move(mult)), inv_(std::move(inv)), unit_(unit) {
  const int n = size();
  if (n == 0) throw StructureError("semigroup must be nonempty");
  if (static_cast<int>(mult_.size()) != n)
    throw StructureError("multiplication table has wrong row count");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != n)
      throw StructureError("multiplication table has wrong column count");
    for (int v : row)
      if (v < 0 || v >= n) throw StructureError("multiplication table entry out of range");
  }
  if (static_cast<int>(inv_.size()) != n) throw StructureError("involution table has wrong size");
  for (int v : inv_)
    if (v < 0 || v >= n) throw StructureError("involution table entry out of range");
  if (unit_ < 0 || unit_ >= n) throw StructureError("unit id out of range");
  {
    std::map<std::string, int> seen;
    for (int s = 0; s < n; ++s)
      if (!seen.emplace(names_[s], s).second)
        throw StructureError("duplicate element name: " + names_[s]);
  }
  validate_laws();
}

void FiniteInverseSemigroup::validate_laws() const {
  const int n = size();
  for (int s = 0; s < n; ++s) {
    if (mult_[unit_][s] != s || mult_[s][unit_] != s)
      throw StructureError("unit law fails at element " + names_[s]);
    if (mult_[mult_[s][inv_[s]]][s] != s)
      throw StructureError("s·s*·s = s fails at element " + names_[s]);
    if (mult_[mult_[inv_[s]][s]][inv_[s]] != inv_[s])
      throw StructureError("s*·s·s* = s* fails at element " + names_[s]);
    if (inv_[inv_[s]] != s)
      throw StructureError("involution not involutive at element " + names_[s]);
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        if (mult_[mult_[s][t]][u] != mult_[s][mult_[t][u]])
          throw StructureError("multiplication not associative at (" + names_[s] + "," +
                               names_[t] + "," + names_[u] + ")");
  for (int s = 0; s < n; ++s) {
    if (mult_[s][s] != s) continue;
    for (int t = 0; t < n; ++t) {
      if (mult_[t][t] != t) continue;
      if (mult_[s][t] != mult_[t][s])
        throw StructureError("idempotents do not commute: " + names_[s] + ", " + names_[t] +
                             " (not an inverse semigroup)");
    }
  }
}

int FiniteInverseSemigroup::index_of(const std::string& name) const {
  for (int s = 0; s < size(); ++s)
    if (names_[s] == name) return s;
  throw StructureError("unknown semigroup element: " + name);
}

int FiniteInverseSemigroup::product_of_word(std::span<const int> word) const {
  if (word.empty()) throw PreconditionError("product of empty word");
  int acc = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) acc = mult_[acc][word[i]];
  return acc;
}

const PartialBijection& FiniteInverseSemigroup::bijection_of(int s) const {
  if (!realization_) throw StructureError("semigroup has no I(X) realization");
  return (*realization_).at(s);
}

const GroundSet& FiniteInverseSemigroup::ground() const {
  if (!ground_) throw StructureError("semigroup has no I(X) realization");
  return *ground_;
}

nlohmann::json FiniteInverseSemigroup::to_json() const {
  nlohmann::json mult_rows = nlohmann::json::array();
  for (int s = 0; s < size(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < size(); ++t) row.push_back(names_[mult_[s][t]]);
    mult_rows.push_back(row);
  }
  nlohmann::json inv_map = nlohmann::json::object();
  for (int s = 0; s < size(); ++s) inv_map[names_[s]] = names_[inv_[s]];
  return {{"mode", "table"},
          {"elements", names_},
          {"unit", names_[unit_]},
          {"mult", mult_rows},
          {"inv", inv_map}};
}

FiniteInverseSemigroup generate_semigroup(const GroundSet& ground,
                                          const std::vector<PartialBijection>& generators,
                                          const std::vector<std::string>& generator_names) {
  if (generators.empty()) throw PreconditionError("generator list must be nonempty");
  for (const auto& g : generators)
    if (g.size() != ground.size())
      throw StructureError("generator is not over the given ground set");
  if (!generator_names.empty() && generator_names.size() != generators.size())
    throw StructureError("generator name list has wrong length");

  // Worklist closure under product and inverse; the unit is adjoined since
  // the semigroups here are always unital.
  std::vector<PartialBijection> elems;
  auto add = [&elems](const PartialBijection& candidate) -> bool {
    if (std::find(elems.begin(), elems.end(), candidate) != elems.end()) return false;
    elems.push_back(candidate);
    return true;
  };
  add(PartialBijection::identity(ground.size()));
  for (const auto& g : generators) add(g);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(elems[i].inverse());
    for (std::size_t j = 0; j <= i && j < elems.size(); ++j) {
      add(compose(elems[i], elems[j]));
      add(compose(elems[j], elems[i]));
    }
  }

  std::sort(elems.begin(), elems.end());
  const int n = static_cast<int>(elems.size());
  auto id_of = [&elems](const PartialBijection& b) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), b) - elems.begin());
  };

  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<int> inv(n);
  for (int s = 0; s < n; ++s) {
    inv[s] = id_of(elems[s].inverse());
    for (int t = 0; t < n; ++t) mult[s][t] = id_of(compose(elems[s], elems[t]));
  }
  const int unit = id_of(PartialBijection::identity(ground.size()));

  std::vector<std::string> names(n);
  for (int s = 0; s < n; ++s) names[s] = elems[s].to_string(ground);
  for (std::size_t k = 0; k < generator_names.size(); ++k)
    names[id_of(generators[k])] = generator_names[k];

  FiniteInverseSemigroup sg(std::move(names), std::move(mult), std::move(inv), unit);
  sg.realization_ = std::move(elems);
  sg.ground_ = ground;
  return sg;
}

std::vector<int> idempotents(const FiniteInverseSemigroup& sg) {
  std::vector<int> es;
  for (int s = 0; s < sg.size(); ++s)
    if (sg.is_idempotent(s)) es.push_back(s);
  return es;
}

bool natural_leq(const FiniteInverseSemigroup& sg, int s, int t) {
  bool exists = false;
  for (int f = 0; f < sg.size(); ++f) {
    if (!sg.is_idempotent(f)) continue;
    if (sg.mult(f, t) == s) {
      exists = true;
      break;
    }
  }
  const bool closed_form = sg.mult(sg.mult(s, sg.inv(s)), t) == s;
  if (exists != closed_form)
    throw StructureError("natural order routes disagree at (" + sg.name(s) + "," + sg.name(t) +
                         ")");
  return exists;
}

bool is_semilattice(const FiniteInverseSemigroup& sg) {
  for (int s = 0; s < sg.size(); ++s)
    if (!sg.is_idempotent(s)) return false;
  // Idempotents commute by the inverse-semigroup laws; assert anyway.
  for (int s = 0; s < sg.size(); ++s)
    for (int t = 0; t < sg.size(); ++t)
      if (sg.mult(s, t) != sg.mult(t, s))
        throw StructureError("all-idempotent semigroup fails to commute");
  return true;
}

}  // namespace isgx
