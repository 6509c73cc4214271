#include "weuler/json_io.hpp"

namespace weuler {

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<Elem> elem_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw InvalidInput(std::string(what) + " must hold integers");
    const std::int64_t value = v.get<std::int64_t>();
    if (value < 0) throw InvalidInput(std::string(what) + " must hold nonnegative indices");
    out.push_back(static_cast<Elem>(value));
  }
  return out;
}

}  // namespace

ParsedGroup group_from_json(const Json& j, const Limits& limits) {
  if (!j.is_object()) throw InvalidInput("group file must be a JSON object");
  const std::string kind = need(j, "kind").get<std::string>();
  std::string label = j.value("label", std::string{});
  if (kind == "table") {
    const std::size_t order = need(j, "order").get<std::size_t>();
    const Json& mul = need(j, "mul");
    if (!mul.is_array() || mul.size() != order)
      throw InvalidInput("\"mul\" must have one row per element");
    std::vector<std::vector<Elem>> rows;
    rows.reserve(order);
    for (const auto& row : mul) rows.push_back(elem_vector(row, "mul row"));
    return ParsedGroup{FiniteGroup::from_table(rows, std::move(label), limits), std::nullopt};
  }
  if (kind == "perm") {
    const std::size_t degree = need(j, "degree").get<std::size_t>();
    std::vector<Perm> generators;
    for (const auto& gen : need(j, "generators"))
      generators.push_back(elem_vector(gen, "generator"));
    PermGroup P = perm_group(static_cast<Elem>(degree), generators, std::move(label), limits);
    ParsedGroup out{P.group, std::move(P)};
    return out;
  }
  throw InvalidInput("unknown group kind \"" + kind + "\"");
}

Json group_to_json(const FiniteGroup& G) {
  Json j;
  j["kind"] = "table";
  j["order"] = G.order();
  std::vector<std::vector<Elem>> rows(G.order(), std::vector<Elem>(G.order()));
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b) rows[a][b] = G.mul(a, b);
  j["mul"] = rows;
  if (!G.label().empty()) j["label"] = G.label();
  return j;
}

GSet gset_from_json(const ParsedGroup& G, const Json& j) {
  if (!j.is_object()) throw InvalidInput("G-set file must be a JSON object");
  const std::size_t size = need(j, "size").get<std::size_t>();
  if (j.contains("action")) {
    const Json& action = j["action"];
    if (!action.is_array()) throw InvalidInput("\"action\" must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    rows.reserve(action.size());
    for (const auto& row : action) {
      rows.push_back(elem_vector(row, "action row"));
      if (rows.back().size() != size) throw NotAnAction("action row size disagrees with \"size\"");
    }
    return GSet::from_action(G.group, rows);
  }
  if (j.contains("generator_images")) {
    const Json& images = j["generator_images"];
    if (!images.is_object()) throw InvalidInput("\"generator_images\" must be an object");
    std::map<Elem, Perm> map;
    for (const auto& [key, value] : images.items()) {
      map[static_cast<Elem>(std::stoul(key))] = elem_vector(value, "generator image");
    }
    return GSet::from_generator_action(G.group, size, map);
  }
  throw InvalidInput("G-set needs either \"action\" or \"generator_images\"");
}

VirtualSpace gspace_from_json(const ParsedGroup& G, const Json& j, const Limits& limits) {
  std::map<std::vector<Elem>, std::int64_t> chi;
  for (const auto& entry : need(j, "chi")) {
    std::vector<Elem> sub = elem_vector(need(entry, "subgroup"), "subgroup");
    std::sort(sub.begin(), sub.end());
    if (!chi.emplace(std::move(sub), need(entry, "value").get<std::int64_t>()).second)
      throw InvalidInput("duplicate subgroup in chi table");
  }
  return VirtualSpace(G.group, std::move(chi), limits);
}

std::unique_ptr<Space> space_from_json(const ParsedGroup& G, const Json& j, const Limits& limits) {
  if (j.is_object() && j.contains("chi"))
    return std::make_unique<VirtualSpace>(gspace_from_json(G, j, limits));
  return std::make_unique<GSet>(gset_from_json(G, j));
}

Presentation presentation_from_json(const Json& j) {
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "free_abelian") return Presentation::free_abelian(need(j, "d").get<std::size_t>());
  if (kind == "profinite_abelian")
    return Presentation::profinite_abelian(need(j, "d").get<std::size_t>(),
                                           need(j, "p").get<unsigned>());
  if (kind == "presented") {
    std::vector<std::vector<int>> relators;
    for (const auto& word : need(j, "relators")) relators.push_back(word.get<std::vector<int>>());
    return Presentation::presented(need(j, "generators").get<std::size_t>(), std::move(relators));
  }
  throw InvalidInput("unknown presentation kind \"" + kind + "\"");
}

Json series_to_json(const PowerSeries& s) {
  Json j;
  j["order"] = s.order();
  std::vector<std::string> coeffs;
  coeffs.reserve(s.order() + 1);
  for (std::size_t i = 0; i <= s.order(); ++i) coeffs.push_back(s[i].str());
  j["coeffs"] = coeffs;
  return j;
}

PowerSeries series_from_json(const Json& j) {
  const std::size_t order = need(j, "order").get<std::size_t>();
  const Json& coeffs = need(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != order + 1)
    throw InvalidInput("series needs order+1 coefficients");
  PowerSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = BigInt(coeffs[i].get<std::string>());
  return s;
}

Json element_type_to_json(const ElementType& t) {
  Json entries = Json::array();
  for (const auto& [cid, r, m] : t.entries) {
    entries.push_back(Json{{"class", cid}, {"r", r}, {"m", m}});
  }
  return Json{{"n", t.n}, {"entries", entries}};
}

ElementType element_type_from_json(const Json& j) {
  ElementType t;
  t.n = need(j, "n").get<std::size_t>();
  for (const auto& entry : need(j, "entries")) {
    t.entries.emplace_back(need(entry, "class").get<std::uint32_t>(),
                           need(entry, "r").get<std::uint32_t>(),
                           need(entry, "m").get<std::uint32_t>());
  }
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

Json mobius_table_to_json(const MobiusTable& t) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.subgroups.size(); ++i) {
    entries.push_back(Json{{"subgroup", t.subgroups[i].elements},
                           {"abelian", t.subgroups[i].is_abelian()},
                           {"value", t.values[i].str()}});
  }
  const char* kind = t.kind == MobiusKind::Subgroup       ? "subgroup"
                     : t.kind == MobiusKind::AbelianComplex ? "abelian-chi"
                                                            : "abelian-one";
  return Json{{"kind", kind}, {"entries", entries}};
}

}  // namespace weuler
