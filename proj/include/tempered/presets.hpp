#pragma once

#include "tempered/realform.hpp"

namespace tempered {

/// Built-in rank <= 2 real forms with their Cartan classes spelled out.
struct GroupPreset {
  std::string id;
  std::string description;
  std::shared_ptr<const RootDatum> datum;
  std::vector<CartanClass> cartans; // ordered by dim_a
};

/// Sorted preset ids: a1a1, sl2r, su11, su2, su21.
const std::vector<std::string>& presetIds();
bool isPresetId(const std::string& id);
GroupPreset makePreset(const std::string& id);

/// Cartan class by label; unknown labels list the valid ones in the message.
const CartanClass& findCartan(const GroupPreset& preset, const std::string& label);

} // namespace tempered
