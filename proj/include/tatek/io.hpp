#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tatek/characters.hpp"
#include "tatek/devoto.hpp"
#include "tatek/moonshine.hpp"

namespace tatek {

using json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json to_json(const Cyclotomic &c);
Cyclotomic cyclotomic_from_json(const json &j);

json to_json(const Series &s);
Series series_from_json(const json &j);

json to_json(const BivariateSeries &b);

json to_json(const Polynomial &p);

/// {"degree", "generators", "name"} for permutation groups,
/// {"wreath": {"base", "n"}} and {"product": [left, right]} otherwise.
json group_to_json(const FiniteGroup &g);
GroupPtr group_from_json(const json &j, std::size_t cap = kDefaultSizeCap);

/// Image lists are 1-based.
json element_to_json(const FiniteGroup &g, int e);
int element_from_json(const FiniteGroup &g, const json &j);

json to_json(const DevotoElement &x);
/// Reads {"group", "level", "entries"}; `group` overrides the embedded group.
/// A bare series record is read as the constant element over the group (or
/// over the trivial group when none is given).
DevotoElement devoto_from_json(const json &j, GroupPtr group = nullptr, std::size_t cap = kDefaultSizeCap);

json to_json(const RepCharacter &chi);
RepCharacter character_from_json(const json &j, GroupPtr group = nullptr, std::size_t cap = kDefaultSizeCap);

json to_json(const CoeffMap &c);
CoeffMap coeffmap_from_json(const json &j);

} // namespace tatek
