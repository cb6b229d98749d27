#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "centext/abelian.hpp"
#include "centext/cohomology.hpp"
#include "centext/crossed_module.hpp"
#include "centext/group.hpp"

namespace centext {

using Json = nlohmann::json;

/// Reads a JSON document from a path, or from standard input for "-".
/// Throws InvalidInput on I/O or syntax errors.
Json read_json(const std::string& path);

/// Group specifications:
///   {"cayley": [[...], ...]}
///   {"permutations": ["(0 1)(2 3)", ...], "points": m}
///   {"catalog": "dihedral", "params": [4]}
///   {"product": [<spec>, <spec>, ...]}
GroupPtr group_from_json(const Json& spec, const Limits& limits = {});
Json group_to_json(const FiniteGroup& g);

/// A list of cyclic orders, normalized to invariant-factor form.
FiniteAbelian abelian_from_json(const Json& orders);
Json abelian_to_json(const FiniteAbelian& a);

/// {"group": <spec>, "coefficients": [d...], "values": [[[tuple], ...], ...]}
Cocycle2 cocycle_from_json(const Json& doc, const Limits& limits = {});
Json cocycle_to_json(const Cocycle2& f, const Json& group_spec);

/// {"H": <spec>, "G": <spec>, "delta": [...], "action": [[...]], "bracket": [[...]]}
/// action[g][h] = h^g, bracket[g1][g2] = {g1, g2}.
struct CrossedModuleDocument {
  CrossedModule xm;
  std::optional<std::vector<std::vector<Elem>>> bracket;
};
CrossedModuleDocument crossed_module_from_json(const Json& doc, const Limits& limits = {});
Json crossed_module_to_json(const CrossedModule& xm, const Json& h_spec, const Json& g_spec,
                            const std::optional<StableBracket>& bracket = std::nullopt);

}  // namespace centext
