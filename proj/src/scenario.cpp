#include "isgx/scenario.hpp"

#include <fstream>

#include "isgx/error.hpp"

namespace isgx {

namespace {

using nlohmann::json;

[[noreturn]] void bail(const std::string& where, const std::string& what) {
  throw ParseError("scenario: " + where + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bail(where, "missing field '" + key + "'");
  return obj.at(key);
}

Complex parse_complex(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  bail(where, "expected a number or an [re, im] pair");
}

Mat parse_matrix(const json& rows, int dim, const std::string& where) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    bail(where, "expected " + std::to_string(dim) + " rows");
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      bail(where + "[" + std::to_string(i) + "]", "expected " + std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j)
      m(i, j) = parse_complex(row[j], where + "[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "]");
  }
  return m;
}

PartialBijection parse_map(const json& map_obj, const GroundSet& ground,
                           const std::string& where) {
  if (!map_obj.is_object()) bail(where, "expected an object {point: point}");
  std::vector<int> image(ground.size(), PartialBijection::kUndefined);
  for (const auto& [from, to] : map_obj.items()) {
    if (!ground.contains(from)) bail(where, "unknown point '" + from + "'");
    if (!to.is_string() || !ground.contains(to.get<std::string>()))
      bail(where, "unknown image point for '" + from + "'");
    image[ground.index_of(from)] = ground.index_of(to.get<std::string>());
  }
  try {
    return PartialBijection(std::move(image));
  } catch (const StructureError& e) {
    bail(where, e.what());
  }
}

std::shared_ptr<const FiniteInverseSemigroup> parse_semigroup(const json& sg_obj,
                                                              const GroundSet& ground,
                                                              bool& generator_mode) {
  const std::string mode = field(sg_obj, "mode", "semigroup").get<std::string>();
  if (mode == "generators") {
    generator_mode = true;
    const json& gens = field(sg_obj, "generators", "semigroup");
    if (!gens.is_object() || gens.empty())
      bail("semigroup.generators", "expected a nonempty object of named maps");
    std::vector<PartialBijection> bijections;
    std::vector<std::string> names;
    for (const auto& [name, map_obj] : gens.items()) {
      names.push_back(name);
      bijections.push_back(parse_map(map_obj, ground, "semigroup.generators." + name));
    }
    try {
      return std::make_shared<FiniteInverseSemigroup>(
          generate_semigroup(ground, bijections, names));
    } catch (const Error& e) {
      bail("semigroup", e.what());
    }
  }
  if (mode == "table") {
    generator_mode = false;
    const json& elems = field(sg_obj, "elements", "semigroup");
    if (!elems.is_array() || elems.empty())
      bail("semigroup.elements", "expected a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& e : elems) names.push_back(e.get<std::string>());
    auto id_of = [&names](const std::string& name, const std::string& where) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
      bail(where, "unknown element '" + name + "'");
    };
    const int n = static_cast<int>(names.size());

    const json& mult_rows = field(sg_obj, "mult", "semigroup");
    if (!mult_rows.is_array() || static_cast<int>(mult_rows.size()) != n)
      bail("semigroup.mult", "expected one row per element");
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      const json& row = mult_rows[i];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        bail("semigroup.mult", "row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < n; ++j)
        mult[i][j] = id_of(row[j].get<std::string>(),
                           "semigroup.mult[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }

    const json& inv_obj = field(sg_obj, "inv", "semigroup");
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
      const std::string& name = names[i];
      if (!inv_obj.contains(name)) bail("semigroup.inv", "missing entry for '" + name + "'");
      inv[i] = id_of(inv_obj.at(name).get<std::string>(), "semigroup.inv." + name);
    }

    const int unit = id_of(field(sg_obj, "unit", "semigroup").get<std::string>(),
                           "semigroup.unit");
    try {
      return std::make_shared<FiniteInverseSemigroup>(std::move(names), std::move(mult),
                                                      std::move(inv), unit);
    } catch (const Error& e) {
      bail("semigroup", e.what());
    }
  }
  bail("semigroup.mode", "expected 'generators' or 'table'");
}

}  // namespace

std::vector<MatrixRep> Scenario::select_representations(
    const std::vector<std::string>& names) const {
  if (names.empty()) return representations;
  std::vector<MatrixRep> out;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& rep : representations) {
      if (rep.name == name) {
        out.push_back(rep);
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("scenario: no representation named '" + name + "'");
  }
  return out;
}

Scenario Scenario::from_json(const json& doc) {
  Scenario sc;
  if (!doc.is_object()) bail("root", "expected an object");

  const json& gs = field(doc, "ground_set", "root");
  if (!gs.is_array() || gs.empty()) bail("ground_set", "expected a nonempty array of labels");
  std::vector<std::string> labels;
  for (const auto& l : gs) {
    if (!l.is_string()) bail("ground_set", "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  GroundSet ground = [&labels]() {
    try {
      return GroundSet(labels);
    } catch (const StructureError& e) {
      bail("ground_set", e.what());
    }
  }();

  bool generator_mode = false;
  auto semigroup = parse_semigroup(field(doc, "semigroup", "root"), ground, generator_mode);

  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number() || doc["tolerance"].get<double>() <= 0.0)
      bail("tolerance", "expected a positive number");
    sc.tolerance = doc["tolerance"].get<double>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) bail("seed", "expected a nonnegative integer");
    sc.seed = doc["seed"].get<std::uint64_t>();
  }

  const json& action = field(doc, "action", "root");
  if (action.is_string() && action.get<std::string>() == "tautological") {
    if (!generator_mode)
      bail("action", "'tautological' requires a generator-mode semigroup inside I(X)");
    sc.action = std::make_shared<PartialAction>(
        PartialAction::tautological(semigroup, sc.tolerance));
  } else if (action.is_object()) {
    if (generator_mode)
      bail("action", "explicit actions require a table-mode semigroup (named elements)");
    std::vector<Ideal> ideals;
    std::vector<PartialBijection> maps;
    for (int g = 0; g < semigroup->size(); ++g) {
      const std::string& name = semigroup->name(g);
      if (!action.contains(name)) bail("action", "missing entry for element '" + name + "'");
      const json& entry = action.at(name);
      const json& dom = field(entry, "domain", "action." + name);
      if (!dom.is_array()) bail("action." + name + ".domain", "expected an array of points");
      std::vector<int> points;
      for (const auto& p : dom) {
        if (!p.is_string() || !ground.contains(p.get<std::string>()))
          bail("action." + name + ".domain", "unknown point");
        points.push_back(ground.index_of(p.get<std::string>()));
      }
      ideals.push_back(Ideal::from_points(ground.size(), points));
      maps.push_back(parse_map(field(entry, "map", "action." + name), ground,
                               "action." + name + ".map"));
    }
    sc.action = std::make_shared<PartialAction>(semigroup, ground, std::move(ideals),
                                                std::move(maps), sc.tolerance);
  } else {
    bail("action", "expected 'tautological' or an object of per-element entries");
  }

  const json& reps = field(doc, "representations", "root");
  if (!reps.is_array()) bail("representations", "expected an array");
  int auto_index = 0;
  for (const auto& entry : reps) {
    if (entry.is_string() && entry.get<std::string>() == "regular") {
      sc.representations.push_back(regular_rep(*sc.action));
      ++auto_index;
      continue;
    }
    if (!entry.is_object()) bail("representations", "expected 'regular' or an object");
    if (generator_mode)
      bail("representations", "explicit representations require a table-mode semigroup");
    MatrixRep rep;
    rep.name = entry.contains("name") ? entry.at("name").get<std::string>()
                                      : "rep" + std::to_string(auto_index);
    ++auto_index;
    const json& dim = field(entry, "dim", "representations." + rep.name);
    if (!dim.is_number_integer() || dim.get<int>() <= 0)
      bail("representations." + rep.name + ".dim", "expected a positive integer");
    rep.dim = dim.get<int>();
    const json& labeling = field(entry, "labeling", "representations." + rep.name);
    if (!labeling.is_array() || static_cast<int>(labeling.size()) != rep.dim)
      bail("representations." + rep.name + ".labeling", "expected dim labels");
    for (const auto& l : labeling) {
      if (!l.is_string() || !ground.contains(l.get<std::string>()))
        bail("representations." + rep.name + ".labeling", "unknown point");
      rep.labeling.push_back(ground.index_of(l.get<std::string>()));
    }
    const json& u_obj = field(entry, "u", "representations." + rep.name);
    for (int g = 0; g < semigroup->size(); ++g) {
      const std::string& gname = semigroup->name(g);
      if (!u_obj.contains(gname))
        bail("representations." + rep.name + ".u", "missing matrix for element '" + gname + "'");
      rep.u.push_back(parse_matrix(u_obj.at(gname), rep.dim,
                                   "representations." + rep.name + ".u." + gname));
    }
    sc.representations.push_back(std::move(rep));
  }

  // Duplicate representation names would make --family selection ambiguous.
  for (std::size_t i = 0; i < sc.representations.size(); ++i)
    for (std::size_t j = i + 1; j < sc.representations.size(); ++j)
      if (sc.representations[i].name == sc.representations[j].name)
        bail("representations", "duplicate name '" + sc.representations[i].name + "'");

  return sc;
}

Scenario Scenario::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("scenario: invalid JSON in " + path + ": " + e.what());
  }
  return from_json(doc);
}

}  // namespace isgx
