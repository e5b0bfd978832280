#include "tempered/checks.hpp"
#include "tempered/json_out.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tempered;

/// Flag tokens are 1-based: either "a2" or plain "2" names the second simple
/// root.  The empty string is the empty subset (full flag manifold).
std::vector<int> parseFlag(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::string digits = item;
    if (digits.front() == 'a' || digits.front() == 'A') digits.erase(0, 1);
    try {
      out.push_back(std::stoi(digits) - 1);
    } catch (const std::exception&) {
      throw DomainError("malformed flag token: " + item);
    }
  }
  return out;
}

std::vector<double> parseCoords(const std::string& text, int rank) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DomainError("malformed coordinate: " + item);
    }
  }
  if (out.empty()) out.assign(static_cast<std::size_t>(rank), 0.0);
  if (static_cast<int>(out.size()) != rank)
    throw DomainError("torus coordinates must have rank entries");
  return out;
}

void emit(const nlohmann::json& j, const std::string& format) {
  if (format == "text")
    std::cout << jsonToText(j);
  else
    std::cout << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TEMPERED_GUARD")) {
    try {
      setActiveGuard(static_cast<std::size_t>(std::stoull(env)));
    } catch (const std::exception&) {
      std::cerr << "TEMPERED_GUARD must be a non-negative integer\n";
      return 2;
    }
  }

  CLI::App app{"exact root-datum, Cartan-class, flag-orbit and tempered-series calculator"};
  app.require_subcommand(1);

  std::string group;
  std::string cartanLabel = "compact";
  std::string flagSpec;
  std::string betaSpec;
  std::string nuSpec;
  std::string sigmaSpec;
  std::string atSpec;
  std::string chi = "1";
  std::string format = "json";
  int quadrature = 4096;

  const auto addFormat = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const auto addGroup = [&](CLI::App* cmd) {
    cmd->add_option("--group", group, "group preset id")->required();
  };

  CLI::App* groupsCmd = app.add_subcommand("groups", "list the built-in group presets");
  addFormat(groupsCmd);

  CLI::App* cartansCmd =
      app.add_subcommand("cartans", "Cartan classes of a preset with their gradings");
  addGroup(cartansCmd);
  addFormat(cartansCmd);

  CLI::App* orbitCmd = app.add_subcommand(
      "orbit-report", "geometry of the base orbit on the flag of a simple-root subset");
  addGroup(orbitCmd);
  orbitCmd->add_option("--cartan", cartanLabel, "Cartan class label");
  orbitCmd->add_option("--flag", flagSpec, "comma list of simple roots (a1 or 1, 1-based)");
  addFormat(orbitCmd);

  CLI::App* openCmd =
      app.add_subcommand("open-orbits", "number of open orbits on the flag manifold");
  addGroup(openCmd);
  openCmd->add_option("--cartan", cartanLabel, "Cartan class label");
  openCmd->add_option("--flag", flagSpec, "comma list of simple roots (a1 or 1, 1-based)");
  addFormat(openCmd);

  CLI::App* bbwCmd = app.add_subcommand(
      "bbw", "sheaf-cohomology index of a highest weight on the compact form");
  addGroup(bbwCmd);
  bbwCmd->add_option("--flag", flagSpec, "comma list of simple roots (a1 or 1, 1-based)");
  bbwCmd->add_option("--beta", betaSpec, "highest weight, simple-root coordinates");
  addFormat(bbwCmd);

  CLI::App* charCmd =
      app.add_subcommand("character", "tempered character value on a Cartan subgroup");
  addGroup(charCmd);
  charCmd->add_option("--cartan", cartanLabel, "Cartan class label");
  charCmd->add_option("--nu", nuSpec, "t-side parameter, simple-root coordinates");
  charCmd->add_option("--sigma", sigmaSpec, "a-side parameter, simple-root coordinates");
  charCmd->add_option("--at", atSpec, "evaluation point coordinates");
  charCmd->add_option("--chi", chi, "central character label");
  addFormat(charCmd);

  CLI::App* realizeCmd = app.add_subcommand(
      "realize", "resolve a bundle parameter on the realization orbit of a Cartan class");
  addGroup(realizeCmd);
  realizeCmd->add_option("--cartan", cartanLabel, "Cartan class label");
  realizeCmd->add_option("--flag", flagSpec,
                         "compact isotropy subset phi_t (a1 or 1, 1-based)");
  realizeCmd->add_option("--beta", betaSpec, "bundle weight, simple-root coordinates");
  realizeCmd->add_option("--sigma", sigmaSpec, "a-side parameter, simple-root coordinates");
  realizeCmd->add_option("--chi", chi, "central character label");
  addFormat(realizeCmd);

  CLI::App* catalogCmd =
      app.add_subcommand("catalog", "tempered series families of a preset");
  addGroup(catalogCmd);
  addFormat(catalogCmd);

  CLI::App* checkCmd = app.add_subcommand("check", "run the full invariant suite");
  checkCmd->add_option("--quadrature", quadrature, "orthogonality quadrature points")
      ->check(CLI::PositiveNumber);
  addFormat(checkCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!group.empty() && !isPresetId(group)) {
      std::cerr << "unknown preset: " << group << " (expected one of";
      for (const std::string& id : presetIds()) std::cerr << " " << id;
      std::cerr << ")\n";
      return 2;
    }

    if (groupsCmd->parsed()) {
      emit(groupsJson(), format);
      return 0;
    }
    if (checkCmd->parsed()) {
      const std::vector<CheckResult> checks = runChecks(quadrature);
      bool allOk = true;
      nlohmann::json rows = nlohmann::json::array();
      for (const CheckResult& check : checks) {
        allOk = allOk && check.ok;
        nlohmann::json row;
        row["name"] = check.name;
        row["ok"] = check.ok;
        row["detail"] = check.detail;
        rows.push_back(std::move(row));
      }
      nlohmann::json out;
      out["checks"] = std::move(rows);
      out["ok"] = allOk;
      if (format == "text") {
        for (const CheckResult& check : checks)
          std::cout << (check.ok ? "[ok]  " : "[FAIL] ") << check.name << ": "
                    << check.detail << "\n";
        std::cout << (allOk ? "all checks passed" : "checks failed") << "\n";
      } else {
        std::cout << out.dump() << "\n";
      }
      return allOk ? 0 : 1;
    }

    const GroupPreset preset = makePreset(group);
    const int rank = preset.datum->rank;

    if (cartansCmd->parsed()) {
      emit(cartansJson(preset), format);
    } else if (orbitCmd->parsed()) {
      const CartanClass& cartan = findCartan(preset, cartanLabel);
      const OrbitConfig config{cartan, identityMat(rank),
                               parabolicSubset(*preset.datum, parseFlag(flagSpec))};
      emit(orbitReportJson(orbitReport(config)), format);
    } else if (openCmd->parsed()) {
      const CartanClass& cartan = findCartan(preset, cartanLabel);
      nlohmann::json out;
      out["count"] =
          countOpenOrbits(cartan, parabolicSubset(*preset.datum, parseFlag(flagSpec)));
      emit(out, format);
    } else if (bbwCmd->parsed()) {
      const BbwResult result = bottBorelWeil(*preset.datum, parseFlag(flagSpec),
                                             parseWeight(betaSpec, rank));
      emit(bbwJson(result), format);
    } else if (charCmd->parsed()) {
      const CartanClass& cartan = findCartan(preset, cartanLabel);
      const SeriesParam param = hseriesParam(cartan, chi, parseWeight(nuSpec, rank),
                                             parseWeight(sigmaSpec, rank));
      const std::vector<double> coords = parseCoords(atSpec, rank);
      const std::complex<double> value =
          characterAt(param, TorusPoint(coords), coords);
      nlohmann::json out;
      // + 0.0 canonicalizes a negative zero so the output is byte-stable
      out["value_re"] = value.real() + 0.0;
      out["value_im"] = value.imag() + 0.0;
      emit(out, format);
    } else if (realizeCmd->parsed()) {
      const CartanClass& cartan = findCartan(preset, cartanLabel);
      const RestrictedRootSystem restricted = restrictedRoots(cartan);
      const std::vector<Weight> sigmaAPlus =
          restricted.compactCartan ? std::vector<Weight>{} : restricted.positive;
      const CuspidalParabolic parabolic = cuspidalParabolic(cartan, sigmaAPlus);
      std::vector<Root> phiT;
      for (int index : parseFlag(flagSpec)) {
        if (index < 0 || index >= rank)
          throw DomainError("simple-root index out of range");
        phiT.push_back(preset.datum->simpleRoot(index));
      }
      const OrbitConfig config = realizationConfig(cartan, parabolic, phiT);
      const RealizationResult result = realize(config, chi, parseWeight(betaSpec, rank),
                                               parseWeight(sigmaSpec, rank));
      emit(realizationJson(result), format);
    } else if (catalogCmd->parsed()) {
      emit(catalogJson(preset), format);
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
