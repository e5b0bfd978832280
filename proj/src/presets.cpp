#include "tempered/presets.hpp"

#include <algorithm>

namespace tempered {

namespace {

IntMat a1Cartan() { return {{2}}; }
IntMat a1a1Cartan() { return {{2, 0}, {0, 2}}; }
IntMat a2Cartan() { return {{2, -1}, {-1, 2}}; }

GroupPreset rankOnePreset(const std::string& id, const std::string& description,
                          RootGrading simpleGrading) {
  GroupPreset preset;
  preset.id = id;
  preset.description = description;
  preset.datum = buildRootDatum(a1Cartan());

  const Root alpha{1};
  preset.cartans.push_back(
      attachInvolution(preset.datum, {{-1}}, {{alpha, simpleGrading}}, "compact"));
  if (simpleGrading == RootGrading::Noncompact)
    preset.cartans.push_back(attachInvolution(preset.datum, {{1}}, {}, "split"));
  return preset;
}

GroupPreset su21Preset() {
  GroupPreset preset;
  preset.id = "su21";
  preset.description = "special unitary group of signature (2,1), rank-two form";
  preset.datum = buildRootDatum(a2Cartan());

  const IntMat minusId{{-1, 0}, {0, -1}};
  const std::map<Root, RootGrading> grading{{Root{1, 0}, RootGrading::Compact},
                                            {Root{0, 1}, RootGrading::Noncompact},
                                            {Root{1, 1}, RootGrading::Noncompact}};
  preset.cartans.push_back(attachInvolution(preset.datum, minusId, grading, "compact"));

  // Cayley transform through the noncompact simple root: tau = -s_2.
  const IntMat split{{-1, 0}, {-1, 1}};
  preset.cartans.push_back(attachInvolution(preset.datum, split, {}, "split"));
  return preset;
}

GroupPreset a1a1Preset() {
  GroupPreset preset;
  preset.id = "a1a1";
  preset.description = "product of two rank-one split forms";
  preset.datum = buildRootDatum(a1a1Cartan());

  const Root a1{1, 0};
  const Root a2{0, 1};
  preset.cartans.push_back(attachInvolution(
      preset.datum, {{-1, 0}, {0, -1}},
      {{a1, RootGrading::Noncompact}, {a2, RootGrading::Noncompact}}, "compact"));
  preset.cartans.push_back(attachInvolution(
      preset.datum, {{-1, 0}, {0, 1}}, {{a1, RootGrading::Noncompact}}, "mixed1"));
  preset.cartans.push_back(attachInvolution(
      preset.datum, {{1, 0}, {0, -1}}, {{a2, RootGrading::Noncompact}}, "mixed2"));
  preset.cartans.push_back(attachInvolution(preset.datum, {{1, 0}, {0, 1}}, {}, "split"));
  return preset;
}

} // namespace

const std::vector<std::string>& presetIds() {
  static const std::vector<std::string> ids{"a1a1", "sl2r", "su11", "su2", "su21"};
  return ids;
}

bool isPresetId(const std::string& id) {
  const auto& ids = presetIds();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

GroupPreset makePreset(const std::string& id) {
  if (id == "su2")
    return rankOnePreset("su2", "compact rank-one form", RootGrading::Compact);
  if (id == "sl2r")
    return rankOnePreset("sl2r", "split rank-one form (2x2 real matrices)",
                         RootGrading::Noncompact);
  if (id == "su11")
    return rankOnePreset("su11", "split rank-one form (unitary signature (1,1) model)",
                         RootGrading::Noncompact);
  if (id == "su21") return su21Preset();
  if (id == "a1a1") return a1a1Preset();
  throw DomainError("unknown preset: " + id);
}

const CartanClass& findCartan(const GroupPreset& preset, const std::string& label) {
  for (const CartanClass& cartan : preset.cartans)
    if (cartan.label == label) return cartan;
  std::string valid;
  for (const CartanClass& cartan : preset.cartans) {
    if (!valid.empty()) valid += ", ";
    valid += cartan.label;
  }
  throw DomainError("unknown Cartan label; valid labels: " + valid);
}

} // namespace tempered
