#include "tempered/json_out.hpp"

namespace tempered {

namespace {

nlohmann::json rootsJson(const std::vector<Root>& roots) {
  nlohmann::json out = nlohmann::json::array();
  for (const Root& r : roots) out.push_back(rootStr(r));
  return out;
}

std::string gradingStr(RootGrading g) {
  return g == RootGrading::Compact ? "compact" : "noncompact";
}

} // namespace

nlohmann::json groupsJson() {
  nlohmann::json out;
  out["groups"] = presetIds();
  return out;
}

nlohmann::json cartansJson(const GroupPreset& preset) {
  nlohmann::json out;
  out["group"] = preset.id;
  nlohmann::json cartans = nlohmann::json::array();
  for (const CartanClass& cartan : preset.cartans) {
    nlohmann::json c;
    c["label"] = cartan.label;
    c["dim_t"] = cartan.dimT;
    c["dim_a"] = cartan.dimA;
    c["tau"] = cartan.tau;
    nlohmann::json grading = nlohmann::json::object();
    for (const Root& r : cartan.positiveImaginary())
      grading[rootStr(r)] = gradingStr(cartan.grading.at(r));
    c["grading"] = grading;
    c["series"] = seriesKindStr(seriesKindOf(cartan));
    cartans.push_back(std::move(c));
  }
  out["cartans"] = std::move(cartans);
  return out;
}

nlohmann::json orbitReportJson(const OrbitReport& report) {
  nlohmann::json out;
  out["codim"] = report.codim;
  out["open"] = report.open;
  out["integrable"] = report.integrable;
  out["measurable"] = verdictStr(report.measurable);
  out["partially_complex"] = verdictStr(report.partiallyComplex);
  out["flag_type"] = verdictStr(report.flagType);
  out["delta_x"] = weightStr(report.deltaX);
  out["q_bracket"] = rootsJson(report.qBracket);
  out["gamma"] = rootsJson(report.gamma);
  out["m_bracket"] = rootsJson(report.mBracket);
  out["v_minus"] = rootsJson(report.vMinus);
  out["v_plus"] = rootsJson(report.vPlus);
  if (report.measurable == Verdict::Yes)
    out["normalizer"] = rootsJson(report.normalizerRoots);
  return out;
}

nlohmann::json bbwJson(const BbwResult& result) {
  nlohmann::json out;
  out["vanishes"] = result.vanishes;
  if (!result.vanishes) {
    out["q0"] = result.q0;
    out["nu"] = weightStr(result.nu);
    out["dim"] = ratStr(result.dim);
  }
  return out;
}

nlohmann::json seriesParamJson(const SeriesParam& param) {
  nlohmann::json out;
  out["cartan"] = param.cartan.label;
  out["chi"] = param.chi;
  out["nu"] = weightStr(param.nu);
  out["sigma"] = weightStr(param.sigma);
  out["kind"] = seriesKindStr(param.kind);
  out["casimir"] = ratStr(param.casimir);
  if (param.formalDegree) out["formal_degree"] = ratStr(*param.formalDegree);
  out["irreducible_hint"] = param.irreducibleHint;
  return out;
}

nlohmann::json realizationJson(const RealizationResult& result) {
  nlohmann::json out;
  out["vanishes"] = result.vanishes;
  if (!result.vanishes && result.param) {
    out["degree"] = result.degree;
    out["nu_plus_rho"] = weightStr(result.param->nu);
    out["series"] = seriesKindStr(result.param->kind);
  }
  return out;
}

nlohmann::json catalogJson(const GroupPreset& preset) {
  nlohmann::json out;
  out["group"] = preset.id;
  nlohmann::json families = nlohmann::json::array();
  for (const SeriesFamily& family : seriesCatalog(preset.cartans)) {
    nlohmann::json f;
    f["cartan"] = family.cartanLabel;
    f["series"] = seriesKindStr(family.kind);
    f["lattice_rank"] = family.latticeRank;
    f["continuous_dim"] = family.continuousDim;
    f["lattice"] = family.lattice;
    f["regularity"] = family.regularity;
    families.push_back(std::move(f));
  }
  out["families"] = std::move(families);
  return out;
}

std::string jsonToText(const nlohmann::json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += it.key();
    out += ": ";
    if (it.value().is_string())
      out += it.value().get<std::string>();
    else
      out += it.value().dump();
    out += '\n';
  }
  return out;
}

} // namespace tempered
