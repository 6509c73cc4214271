#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "weuler/euler.hpp"
#include "weuler/qseries.hpp"

namespace weuler {

using Json = nlohmann::json;

/// Group files:
///   {"kind":"table","order":N,"mul":[[...]]}
///   {"kind":"perm","degree":d,"generators":[[...]]}
/// Elements in all I/O are 0-based indices.  Permutation input keeps the
/// per-element permutations around for natural G-set construction.
struct ParsedGroup {
  GroupPtr group;
  std::optional<PermGroup> perms;
};
ParsedGroup group_from_json(const Json& j, const Limits& limits = default_limits());
Json group_to_json(const FiniteGroup& G);

/// G-set files, relative to a parsed group:
///   {"size":m,"action":[[...]]}                        full action table
///   {"size":m,"generator_images":{"g":[...], ...}}     derived by closure
GSet gset_from_json(const ParsedGroup& G, const Json& j);

/// Formal chi tables: {"chi":[{"subgroup":[...],"value":v}, ...]}.
VirtualSpace gspace_from_json(const ParsedGroup& G, const Json& j,
                              const Limits& limits = default_limits());

/// Either of the two space encodings, detected by shape.
std::unique_ptr<Space> space_from_json(const ParsedGroup& G, const Json& j,
                                       const Limits& limits = default_limits());

/// Presentations:
///   {"kind":"free_abelian","d":2}
///   {"kind":"profinite_abelian","d":2,"p":2}
///   {"kind":"presented","generators":k,"relators":[[1,2,-1,-2],...]}
Presentation presentation_from_json(const Json& j);

/// {"order":N,"coeffs":["1","1","4",...]} — decimal strings so coefficients
/// survive any size.
Json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

/// {"n":n,"entries":[{"class":c,"r":r,"m":m},...]}
Json element_type_to_json(const ElementType& t);
ElementType element_type_from_json(const Json& j);

Json mobius_table_to_json(const MobiusTable& t);

}  // namespace weuler
