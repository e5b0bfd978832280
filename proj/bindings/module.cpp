#include "tempered/checks.hpp"
#include "tempered/json_out.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace tempered;

namespace {

py::object jsonToPy(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(jsonToPy(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = jsonToPy(value);
      return out;
    }
    default:
      return py::none();
  }
}

std::vector<Root> flagRoots(const GroupPreset& preset, const std::vector<int>& flag) {
  std::vector<Root> out;
  for (int index : flag) {
    if (index < 0 || index >= preset.datum->rank)
      throw DomainError("simple-root index out of range");
    out.push_back(preset.datum->simpleRoot(index));
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact root-datum, Cartan-class, flag-orbit and tempered-series calculator";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("groups", [] { return jsonToPy(groupsJson()); },
        "ids of the built-in group presets");

  m.def(
      "cartans",
      [](const std::string& group) { return jsonToPy(cartansJson(makePreset(group))); },
      py::arg("group"), "Cartan classes of a preset with their gradings");

  m.def(
      "orbit_report",
      [](const std::string& group, const std::string& cartan,
         const std::vector<int>& flag) {
        const GroupPreset preset = makePreset(group);
        const OrbitConfig config{findCartan(preset, cartan),
                                 identityMat(preset.datum->rank),
                                 parabolicSubset(*preset.datum, flag)};
        return jsonToPy(orbitReportJson(orbitReport(config)));
      },
      py::arg("group"), py::arg("cartan") = "compact",
      py::arg("flag") = std::vector<int>{},
      "geometry of the base orbit on the flag of a simple-root subset (0-based)");

  m.def(
      "open_orbits",
      [](const std::string& group, const std::string& cartan,
         const std::vector<int>& flag) {
        const GroupPreset preset = makePreset(group);
        return countOpenOrbits(findCartan(preset, cartan),
                               parabolicSubset(*preset.datum, flag));
      },
      py::arg("group"), py::arg("cartan") = "compact",
      py::arg("flag") = std::vector<int>{},
      "number of open orbits on the flag manifold");

  m.def(
      "bbw",
      [](const std::string& group, const std::vector<int>& flag,
         const std::string& beta) {
        const GroupPreset preset = makePreset(group);
        return jsonToPy(bbwJson(
            bottBorelWeil(*preset.datum, flag, parseWeight(beta, preset.datum->rank))));
      },
      py::arg("group"), py::arg("flag") = std::vector<int>{}, py::arg("beta") = "",
      "sheaf-cohomology index of a highest weight on the compact form");

  m.def(
      "character",
      [](const std::string& group, const std::string& cartan, const std::string& nu,
         const std::string& sigma, const std::vector<double>& at,
         const std::string& chi) {
        const GroupPreset preset = makePreset(group);
        const int rank = preset.datum->rank;
        std::vector<double> coords = at;
        if (coords.empty()) coords.assign(static_cast<std::size_t>(rank), 0.0);
        if (static_cast<int>(coords.size()) != rank)
          throw DomainError("torus coordinates must have rank entries");
        const SeriesParam param =
            hseriesParam(findCartan(preset, cartan), chi, parseWeight(nu, rank),
                         parseWeight(sigma, rank));
        return characterAt(param, TorusPoint(coords), coords);
      },
      py::arg("group"), py::arg("cartan") = "compact", py::arg("nu") = "",
      py::arg("sigma") = "", py::arg("at") = std::vector<double>{},
      py::arg("chi") = "1", "tempered character value on a Cartan subgroup");

  m.def(
      "realize",
      [](const std::string& group, const std::string& cartan,
         const std::vector<int>& flag, const std::string& beta,
         const std::string& sigma, const std::string& chi) {
        const GroupPreset preset = makePreset(group);
        const int rank = preset.datum->rank;
        const CartanClass& cls = findCartan(preset, cartan);
        const RestrictedRootSystem restricted = restrictedRoots(cls);
        const std::vector<Weight> sigmaAPlus =
            restricted.compactCartan ? std::vector<Weight>{} : restricted.positive;
        const OrbitConfig config = realizationConfig(
            cls, cuspidalParabolic(cls, sigmaAPlus), flagRoots(preset, flag));
        return jsonToPy(realizationJson(
            realize(config, chi, parseWeight(beta, rank), parseWeight(sigma, rank))));
      },
      py::arg("group"), py::arg("cartan") = "compact",
      py::arg("flag") = std::vector<int>{}, py::arg("beta") = "",
      py::arg("sigma") = "", py::arg("chi") = "1",
      "resolve a bundle parameter on the realization orbit of a Cartan class");

  m.def(
      "catalog",
      [](const std::string& group) { return jsonToPy(catalogJson(makePreset(group))); },
      py::arg("group"), "tempered series families of a preset");

  m.def(
      "check",
      [](int quadrature) {
        const std::vector<CheckResult> checks = runChecks(quadrature);
        py::list rows;
        bool allOk = true;
        for (const CheckResult& check : checks) {
          allOk = allOk && check.ok;
          py::dict row;
          row["name"] = check.name;
          row["ok"] = check.ok;
          row["detail"] = check.detail;
          rows.append(std::move(row));
        }
        py::dict out;
        out["checks"] = std::move(rows);
        out["ok"] = allOk;
        return out;
      },
      py::arg("quadrature") = 4096, "run the full invariant suite");
}
