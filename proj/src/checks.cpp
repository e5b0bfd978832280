#include "tempered/checks.hpp"

#include "tempered/presets.hpp"
#include "tempered/series.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <sstream>

namespace tempered {

namespace {

using Engine = std::mt19937;

std::vector<double> randomCoords(Engine& rng, int rank) {
  std::uniform_real_distribution<double> dist(0.05 * defaultPeriod(), 0.95 * defaultPeriod());
  std::vector<double> out(static_cast<std::size_t>(rank));
  for (double& c : out) c = dist(rng);
  return out;
}

/// Random half-integral parameter on the t-side, regular for the imaginary
/// subsystem.
Weight randomTParam(Engine& rng, const CartanClass& cartan) {
  const RootDatum& datum = *cartan.datum;
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Weight v(static_cast<std::size_t>(datum.rank));
    for (Rat& c : v) c = Rat(dist(rng));
    Weight nu = cartan.projT(v);
    bool regular = true;
    for (const Root& phi : cartan.positiveImaginary())
      if (datum.form(phi, nu) == Rat(0)) {
        regular = false;
        break;
      }
    if (regular) return nu;
  }
  throw DomainError("could not sample a regular t-parameter");
}

/// Random parameter on the a-side, regular for the restricted roots.
Weight randomAParam(Engine& rng, const CartanClass& cartan) {
  const RootDatum& datum = *cartan.datum;
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Weight v(static_cast<std::size_t>(datum.rank));
    for (Rat& c : v) c = Rat(dist(rng));
    Weight sigma = cartan.projA(v);
    bool regular = true;
    for (const Root& phi : datum.roots) {
      if (isZero(cartan.projA(phi))) continue;
      if (datum.form(phi, sigma) == Rat(0)) {
        regular = false;
        break;
      }
    }
    if (regular) return sigma;
  }
  throw DomainError("could not sample a regular a-parameter");
}

std::complex<double> characterAtRandom(Engine& rng, const SeriesParam& param,
                                       const SeriesParam& other, double& diff) {
  const int rank = param.cartan.datum->rank;
  for (int attempt = 0; attempt < 100; ++attempt) {
    try {
      // double the default period: the t-projections of half-roots can pick
      // up denominator 4 on non-orthogonal classes
      const TorusPoint t(randomCoords(rng, rank), 2.0 * defaultPeriod());
      const std::vector<double> a = randomCoords(rng, rank);
      const std::complex<double> v1 = characterAt(param, t, a);
      const std::complex<double> v2 = characterAt(other, t, a);
      diff = std::abs(v1 - v2);
      return v1;
    } catch (const DomainError&) {
      // resample away from the singular set
    }
  }
  throw DomainError("could not sample a regular torus point");
}

Rat gramForm(const RootDatum& datum, const Weight& u, const Weight& v) {
  Rat sum(0);
  for (int i = 0; i < datum.rank; ++i)
    for (int j = 0; j < datum.rank; ++j)
      sum += u[static_cast<std::size_t>(i)] * datum.halfNorms[static_cast<std::size_t>(i)] *
             Rat(datum.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
             v[static_cast<std::size_t>(j)];
  return sum;
}

std::set<Root> imageSet(const IntMat& m, const std::vector<Root>& roots) {
  std::set<Root> out;
  for (const Root& r : roots) out.insert(applyMat(m, r));
  return out;
}

} // namespace

std::vector<CheckResult> runChecks(int quadraturePoints) {
  std::vector<CheckResult> results;
  Engine rng(20250815u);
  const auto add = [&results](const std::string& name, bool ok, const std::string& detail) {
    results.push_back(CheckResult{name, ok, detail});
  };

  // --- root and Weyl tables ------------------------------------------------
  {
    struct Row {
      const char* name;
      IntMat cartan;
      std::size_t roots;
      std::size_t order;
    };
    const std::vector<Row> rows{{"A1", {{2}}, 2, 2},
                                {"A1xA1", {{2, 0}, {0, 2}}, 4, 4},
                                {"A2", {{2, -1}, {-1, 2}}, 6, 6},
                                {"B2", {{2, -2}, {-1, 2}}, 8, 8}};
    bool ok = true;
    std::ostringstream detail;
    for (const Row& row : rows) {
      const auto datum = buildRootDatum(row.cartan);
      const WeylGroup weyl = weylGroup(*datum);
      const bool match = datum->roots.size() == row.roots && weyl.order() == row.order;
      ok = ok && match;
      detail << row.name << ":" << datum->roots.size() << "/" << weyl.order() << " ";
    }
    add("root-tables", ok, detail.str());
  }

  // --- Cartan classification ----------------------------------------------
  {
    const std::map<std::string, std::size_t> expected{
        {"su2", 1}, {"sl2r", 2}, {"su11", 2}, {"su21", 2}, {"a1a1", 4}};
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id : presetIds()) {
      const GroupPreset preset = makePreset(id);
      const std::vector<CartanClass> classes = classifyCartans(preset.cartans.front());
      const WeylGroup weyl = weylGroup(*preset.datum);
      bool match = classes.size() == expected.at(id) &&
                   classes.size() == preset.cartans.size();
      // every preset class must agree with a classified class canonically
      std::set<std::pair<IntMat, std::vector<std::pair<Root, int>>>> keys;
      for (const CartanClass& c : classes) keys.insert(cartanCanonicalKey(c, weyl));
      for (const CartanClass& c : preset.cartans)
        if (!keys.count(cartanCanonicalKey(c, weyl))) match = false;
      // Cayley order independence: every transform lands back in the list
      for (const CartanClass& c : classes)
        for (const Root& gamma : c.imaginaryRoots())
          if (!c.isCompactImaginary(gamma)) {
            const CartanClass next = cayleyTransform(c, gamma);
            if (!keys.count(cartanCanonicalKey(next, weyl))) match = false;
          }
      ok = ok && match;
      detail << id << ":" << classes.size() << " ";
    }
    add("cartan-classification", ok, detail.str());
  }

  // --- restricted roots and cuspidal parabolics ----------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& id : presetIds()) {
      const GroupPreset preset = makePreset(id);
      for (const CartanClass& cartan : preset.cartans) {
        const RestrictedRootSystem restricted = restrictedRoots(cartan);
        const CuspidalParabolic parabolic = cuspidalParabolic(cartan, restricted.positive);
        Weight sum(static_cast<std::size_t>(preset.datum->rank), Rat(0));
        for (const Root& r : parabolic.nRoots) sum = addWeights(sum, cartan.projA(r));
        if (sum != negated(parabolic.modularExponent)) ok = false;
        const std::vector<Root> merged = mergePositiveSystems(
            cartan, restricted.positive, cartan.positiveImaginary());
        if (merged.size() != preset.datum->positive.size()) ok = false;
      }
    }
    // split su(2,1) restricted system: multiplicities {2, 1}, rho_a = (0, 1)
    {
      const GroupPreset preset = makePreset("su21");
      const RestrictedRootSystem restricted = restrictedRoots(findCartan(preset, "split"));
      const Weight shortRoot{Rat(0), Rat(1, 2)};
      const Weight longRoot{Rat(0), Rat(1)};
      if (restricted.positive.size() != 2 || restricted.multiplicity.at(shortRoot) != 2 ||
          restricted.multiplicity.at(longRoot) != 1 ||
          restricted.rhoA != Weight{Rat(0), Rat(1)})
        ok = false;
      detail << "su21-split:BC1(2,1) ";
    }
    add("restricted-roots", ok, detail.str());
  }

  // --- orbit sweep ----------------------------------------------------------
  {
    bool ok = true;
    long configs = 0;
    long violations = 0;
    for (const std::string& id : presetIds()) {
      const GroupPreset preset = makePreset(id);
      const WeylGroup weyl = weylGroup(*preset.datum);
      const int rank = preset.datum->rank;
      for (const CartanClass& cartan : preset.cartans)
        for (int mask = 0; mask < (1 << rank); ++mask) {
          std::vector<int> phi;
          for (int i = 0; i < rank; ++i)
            if (mask & (1 << i)) phi.push_back(i);
          const ParabolicSubset flag = parabolicSubset(*preset.datum, phi);
          for (const IntMat& w : weyl.elements) {
            const OrbitConfig config{cartan, w, flag};
            const OrbitReport report = orbitReport(config);
            ++configs;
            bool good = (report.codim == 0) == report.open;
            if (cartan.dimA == 0 && report.measurable != Verdict::Yes) good = false;
            if (report.measurable == Verdict::Yes &&
                (report.partiallyComplex != Verdict::Yes || report.flagType != Verdict::Yes))
              good = false;
            const IntMat tauEff = effectiveInvolution(config);
            const std::set<Root> phiR(flag.phiR.begin(), flag.phiR.end());
            if (imageSet(tauEff, flag.phiR) == phiR) {
              const bool shouldMeasure = report.integrable;
              if ((report.measurable == Verdict::Yes) != shouldMeasure) good = false;
            }
            if (!good) ++violations;
          }
        }
    }
    ok = violations == 0;
    std::ostringstream detail;
    detail << configs << " configs, " << violations << " violations";
    add("orbit-sweep", ok, detail.str());
  }

  // --- open-orbit counts ----------------------------------------------------
  {
    bool ok = true;
    std::ostringstream detail;
    const auto expect = [&](const std::string& id, const std::string& label,
                            const std::vector<int>& phi, long expected) {
      const GroupPreset preset = makePreset(id);
      const CartanClass& cartan = findCartan(preset, label);
      const long got = countOpenOrbits(cartan, parabolicSubset(*preset.datum, phi));
      if (got != expected) ok = false;
      detail << id << "[" << weightStr(toWeight(Root(phi.begin(), phi.end()))) << "]:" << got
             << " ";
    };
    expect("su2", "compact", {}, 1);
    expect("sl2r", "compact", {}, 2);
    expect("su21", "compact", {}, 3);
    expect("su21", "compact", {0}, 2);
    expect("a1a1", "compact", {}, 4);
    add("open-orbit-counts", ok, detail.str());
  }

  // --- Bott-Borel-Weil table -------------------------------------------------
  {
    const auto datum = buildRootDatum({{2}});
    bool ok = true;
    for (int m = -6; m <= 6; ++m) {
      const Weight beta{Rat(m, 2)};
      const BbwResult result = bottBorelWeil(*datum, {}, beta);
      if (m == -1) {
        if (!result.vanishes) ok = false;
      } else if (m >= 0) {
        if (result.vanishes || result.q0 != 0 || result.dim != Rat(m + 1) ||
            result.nu != Weight{Rat(m + 1, 2)})
          ok = false;
      } else {
        if (result.vanishes || result.q0 != 1 || result.dim != Rat(-m - 1) ||
            result.nu != Weight{Rat(-m - 1, 2)})
          ok = false;
      }
    }
    add("bbw-table", ok, "su2 beta = m*omega, m in [-6, 6]");
  }

  // --- pinned character values ----------------------------------------------
  {
    bool ok = true;
    double worst = 0.0;
    const GroupPreset sl2r = makePreset("sl2r");
    const CartanClass& compact = findCartan(sl2r, "compact");
    const SeriesParam ds = discreteSeriesParam(compact, Weight{Rat(1, 2)});
    const GroupPreset su2 = makePreset("su2");
    const SeriesParam trivial =
        discreteSeriesParam(findCartan(su2, "compact"), Weight{Rat(1, 2)});
    for (int i = 0; i < 50; ++i) {
      double diff = 0.0;
      const std::complex<double> v1 = characterAtRandom(rng, ds, ds, diff);
      worst = std::max(worst, std::abs(v1 - std::complex<double>(-1.0, 0.0)));
      const std::complex<double> v2 = characterAtRandom(rng, trivial, trivial, diff);
      worst = std::max(worst, std::abs(v2 - std::complex<double>(1.0, 0.0)));
    }
    ok = worst <= 1e-9;
    std::ostringstream detail;
    detail << "max |error| = " << worst;
    add("pinned-characters", ok, detail.str());
  }

  // --- character W-invariance and equivalence --------------------------------
  {
    bool ok = true;
    double worst = 0.0;
    for (const std::string& id : presetIds()) {
      const GroupPreset preset = makePreset(id);
      for (const CartanClass& cartan : preset.cartans) {
        const Weight nu = randomTParam(rng, cartan);
        const Weight sigma = randomAParam(rng, cartan);
        const SeriesParam base = hseriesParam(cartan, "1", nu, sigma);
        const WeylGroup weylGH = realWeylGroup(cartan);
        for (const IntMat& w : weylGH.elements) {
          const SeriesParam other =
              hseriesParam(cartan, "1", applyMat(w, nu), applyMat(w, sigma));
          if (!equivalent(base, other)) ok = false;
          for (int i = 0; i < 10; ++i) {
            double diff = 0.0;
            characterAtRandom(rng, base, other, diff);
            worst = std::max(worst, diff);
          }
        }
        // full-Weyl membership agrees with equivalence on rank-one presets
        if (preset.datum->rank == 1) {
          const WeylGroup weyl = weylGroup(*preset.datum);
          for (const IntMat& w : weyl.elements) {
            const Weight wnu = applyMat(w, nu);
            const Weight wsigma = applyMat(w, sigma);
            bool inOrbit = false;
            for (const IntMat& u : weylGH.elements)
              if (applyMat(u, nu) == wnu && applyMat(u, sigma) == wsigma) inOrbit = true;
            const SeriesParam other = hseriesParam(cartan, "1", wnu, wsigma);
            if (equivalent(base, other) != inOrbit) ok = false;
          }
        }
      }
    }
    ok = ok && worst <= 1e-9;
    std::ostringstream detail;
    detail << "max pointwise deviation = " << worst;
    add("character-w-invariance", ok, detail.str());
  }

  // --- Casimir consistency ----------------------------------------------------
  {
    bool ok = true;
    for (const std::string& id : presetIds()) {
      const GroupPreset preset = makePreset(id);
      for (const CartanClass& cartan : preset.cartans) {
        const Weight nu = randomTParam(rng, cartan);
        const Weight sigma = randomAParam(rng, cartan);
        const SeriesParam param = hseriesParam(cartan, "1", nu, sigma);
        const Rat expected = gramForm(*preset.datum, nu, nu) +
                             gramForm(*preset.datum, sigma, sigma) -
                             gramForm(*preset.datum, preset.datum->rho, preset.datum->rho);
        if (param.casimir != expected) ok = false;
        // formal degree W-invariance on equal-rank classes
        if (cartan.dimA == 0) {
          const WeylGroup weyl = weylGroup(*preset.datum);
          for (const IntMat& w : weyl.elements) {
            const SeriesParam moved = hseriesParam(cartan, "1", applyMat(w, nu), sigma);
            if (moved.formalDegree != param.formalDegree) ok = false;
          }
        }
      }
    }
    add("casimir-consistency", ok, "recomputed from the symmetrized Gram matrix");
  }

  // --- Euler identity against the Weyl character formula ----------------------
  {
    bool ok = true;
    double worst = 0.0;
    const GroupPreset su2 = makePreset("su2");
    const CartanClass& cartan = findCartan(su2, "compact");
    std::uniform_real_distribution<double> dist(0.3, defaultPeriod() - 0.3);
    for (int m = 0; m <= 5; ++m) {
      const BbwResult bbw = bottBorelWeil(*su2.datum, {}, Weight{Rat(m, 2)});
      const SeriesParam param = discreteSeriesParam(cartan, bbw.nu);
      for (int i = 0; i < 20; ++i) {
        double theta = dist(rng);
        if (std::abs(std::sin(theta / 2.0)) < 1e-3) theta += 0.5;
        const std::complex<double> got =
            characterAt(param, TorusPoint({theta}), {0.0});
        const double expected =
            std::sin((m + 1) * theta / 2.0) / std::sin(theta / 2.0);
        worst = std::max(worst, std::abs(got - std::complex<double>(expected, 0.0)));
      }
    }
    ok = worst <= 1e-9;
    std::ostringstream detail;
    detail << "max |error| = " << worst;
    add("euler-identity", ok, detail.str());
  }

  // --- realization resolver ----------------------------------------------------
  {
    bool ok = true;
    const GroupPreset sl2r = makePreset("sl2r");
    const CartanClass& compact = findCartan(sl2r, "compact");
    const CuspidalParabolic compactParabolic = cuspidalParabolic(compact, {});
    const std::vector<OrbitConfig> compactConfigs =
        realizationConfigs(compact, compactParabolic);
    if (compactConfigs.size() != 1) ok = false;
    for (int m = -8; m <= 8; ++m) {
      const Weight beta{Rat(m, 2)};
      const Weight lam = addWeights(beta, compact.datum->rho);
      const RealizationResult result =
          realize(compactConfigs.front(), "1", beta, Weight{Rat(0)});
      if (isZero(lam)) {
        if (!result.vanishes) ok = false;
        continue;
      }
      if (result.vanishes || !result.param) {
        ok = false;
        continue;
      }
      const SeriesParam expected = discreteSeriesParam(compact, lam);
      if (result.degree != qLambda(compact, lam)) ok = false;
      if (result.param->nu != expected.nu || result.param->casimir != expected.casimir ||
          result.param->formalDegree != expected.formalDegree ||
          result.param->kind != SeriesKind::RelativeDiscrete)
        ok = false;
      if (result.eulerSign != ((1 + result.degree) % 2 ? -1 : 1)) ok = false;
    }
    const CartanClass& split = findCartan(sl2r, "split");
    const CuspidalParabolic splitParabolic =
        cuspidalParabolic(split, restrictedRoots(split).positive);
    const std::vector<OrbitConfig> splitConfigs = realizationConfigs(split, splitParabolic);
    if (splitConfigs.size() != 1) ok = false;
    for (int k = 1; k <= 3; ++k) {
      const RealizationResult result =
          realize(splitConfigs.front(), "1", Weight{Rat(0)}, Weight{Rat(k)});
      if (result.vanishes || result.degree != 0 || !result.param ||
          result.param->kind != SeriesKind::Principal || result.eulerSign != 1)
        ok = false;
    }
    add("realization-resolver", ok, "sl2r compact and split configs");
  }

  // --- series disjointness -------------------------------------------------------
  {
    bool ok = true;
    long tested = 0;
    for (const std::string& id : presetIds()) {
      const GroupPreset preset = makePreset(id);
      if (preset.cartans.size() < 2) continue;
      const WeylGroup weyl = weylGroup(*preset.datum);
      std::uniform_int_distribution<std::size_t> pick(0, preset.cartans.size() - 1);
      for (int trial = 0; trial < 100; ++trial) {
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j) j = (j + 1) % preset.cartans.size();
        const CartanClass& c1 = preset.cartans[i];
        const CartanClass& c2 = preset.cartans[j];
        const Weight nu1 = randomTParam(rng, c1);
        const Weight sigma1 = randomAParam(rng, c1);
        const Weight nu2 = randomTParam(rng, c2);
        const Weight sigma2 = randomAParam(rng, c2);
        bool shared = false;
        for (const IntMat& w : weyl.elements)
          if (applyMat(w, nu1) == nu2 && applyMat(w, sigma1) == sigma2) shared = true;
        if (shared) ok = false;
        ++tested;
      }
    }
    std::ostringstream detail;
    detail << tested << " cross-class parameter pairs";
    add("series-disjointness", ok, detail.str());
  }

  // --- Schur orthogonality ----------------------------------------------------------
  {
    bool ok = true;
    const auto datum = buildRootDatum({{2}});
    double worst = 0.0;
    const int n = quadraturePoints;
    for (int p = 0; p < 5; ++p)
      for (int q = 0; q < 5; ++q) {
        const Weight lam1{Rat(p + 1, 2)};
        const Weight lam2{Rat(q + 1, 2)};
        const std::complex<double> inner = orthogonalityCheck(*datum, lam1, lam2, n);
        const double expected = p == q ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(inner - std::complex<double>(expected, 0.0)));
      }
    ok = worst <= 1e-6;
    std::ostringstream detail;
    detail << "5x5 Gram deviation = " << worst << " at n = " << n;
    add("schur-orthogonality", ok, detail.str());
  }

  return results;
}

} // namespace tempered
