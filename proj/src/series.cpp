#include "tempered/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tempered {

namespace {

constexpr double kSingularTol = 1e-9;

Rat ratAbs(const Rat& r) { return r < Rat(0) ? -r : r; }

bool halfIntegral(const Weight& w) {
  for (const Rat& c : w)
    if (c.denominator() != 1 && c.denominator() != 2) return false;
  return true;
}

Rat varpiOver(const RootDatum& datum, const std::vector<Root>& plus, const Weight& lam) {
  Rat prod(1);
  for (const Root& phi : plus) prod *= datum.form(phi, lam);
  return prod;
}

double dot(const Weight& w, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += toDouble(w[j]) * x[j];
  return s;
}

void requirePeriodic(const Weight& tPart, double period) {
  const double ratio = period / (2.0 * std::numbers::pi);
  for (const Rat& c : tPart) {
    const double k = toDouble(c) * ratio;
    if (std::abs(k - std::round(k)) > kSingularTol)
      throw DomainError("aperiodic exponential for given period");
  }
}

/// e^{lam}(t, a) = exp(i lam_t(t) + lam_a(a)): unitary on the compact side,
/// real growth on the vector side.
std::complex<double> charExp(const CartanClass& cartan, const Weight& lam,
                             const TorusPoint& t, const std::vector<double>& a) {
  const Weight tPart = cartan.projT(lam);
  const Weight aPart = cartan.projA(lam);
  requirePeriodic(tPart, t.period);
  return std::exp(std::complex<double>(dot(aPart, a), dot(tPart, t.coords)));
}

std::complex<double> denominatorOver(const CartanClass& cartan, const std::vector<Root>& plus,
                                     const TorusPoint& t, const std::vector<double>& a) {
  std::complex<double> prod(1.0, 0.0);
  for (const Root& phi : plus) {
    const Weight half = scaleWeight(Rat(1, 2), toWeight(phi));
    prod *= charExp(cartan, half, t, a) - charExp(cartan, negated(half), t, a);
  }
  return prod;
}

} // namespace

std::string seriesKindStr(SeriesKind k) {
  switch (k) {
    case SeriesKind::RelativeDiscrete: return "relative-discrete";
    case SeriesKind::Intermediate: return "intermediate";
    default: return "principal";
  }
}

SeriesKind seriesKindOf(const CartanClass& cartan) {
  if (cartan.dimA == 0) return SeriesKind::RelativeDiscrete;
  for (const auto& [root, grading] : cartan.grading)
    if (grading == RootGrading::Noncompact) return SeriesKind::Intermediate;
  return SeriesKind::Principal;
}

int qLambda(const CartanClass& cartan, const Weight& lam) {
  const RootDatum& datum = *cartan.datum;
  int count = 0;
  for (const Root& phi : cartan.positiveImaginary()) {
    const Rat pairing = datum.form(phi, lam);
    if (pairing == Rat(0)) throw DomainError("q(lambda) undefined on singular parameter");
    const bool compact = cartan.isCompactImaginary(phi);
    if ((compact && pairing < Rat(0)) || (!compact && pairing > Rat(0))) ++count;
  }
  return count;
}

SeriesParam discreteSeriesParam(const CartanClass& cartan, const Weight& lam,
                                const std::string& chi) {
  const RootDatum& datum = *cartan.datum;
  if (cartan.dimA != 0) throw DomainError("discrete series requires compact Cartan");
  if (!halfIntegral(lam)) throw DomainError("parameter not in the half-integer lattice");
  const Rat reg = varpi(datum, lam);
  if (reg == Rat(0)) throw DomainError("no discrete series at singular parameter");

  SeriesParam param;
  param.cartan = cartan;
  param.chi = chi;
  param.nu = lam;
  param.sigma.assign(datum.rank, Rat(0));
  param.kind = SeriesKind::RelativeDiscrete;
  param.casimir = datum.form(lam, lam) - datum.form(datum.rho, datum.rho);
  param.formalDegree = ratAbs(reg);
  param.irreducibleHint = true;
  return param;
}

SeriesParam hseriesParam(const CartanClass& cartan, const std::string& chi,
                         const Weight& nu, const Weight& sigma) {
  const RootDatum& datum = *cartan.datum;
  if (static_cast<int>(nu.size()) != datum.rank ||
      static_cast<int>(sigma.size()) != datum.rank)
    throw DomainError("not an H-series parameter");
  if (applyMat(cartan.tau, nu) != negated(nu)) throw DomainError("not an H-series parameter");
  if (applyMat(cartan.tau, sigma) != sigma) throw DomainError("not an H-series parameter");
  if (!halfIntegral(nu)) throw DomainError("not an H-series parameter");
  if (varpiOver(datum, cartan.positiveImaginary(), nu) == Rat(0))
    throw DomainError("not an H-series parameter");

  SeriesParam param;
  param.cartan = cartan;
  param.chi = chi;
  param.nu = nu;
  param.sigma = sigma;
  param.kind = seriesKindOf(cartan);
  param.casimir = datum.form(nu, nu) + datum.form(sigma, sigma) -
                  datum.form(datum.rho, datum.rho);
  if (cartan.dimA == 0) param.formalDegree = ratAbs(varpi(datum, nu));

  // sigma is (g, a)-regular when no root with nonzero a-restriction
  // annihilates it; that is the standard irreducibility criterion.
  param.irreducibleHint = true;
  for (const Root& phi : datum.roots) {
    if (isZero(cartan.projA(phi))) continue;
    if (datum.form(phi, sigma) == Rat(0)) {
      param.irreducibleHint = false;
      break;
    }
  }
  return param;
}

WeylGroup realWeylGroup(const CartanClass& cartan) {
  const RootDatum& datum = *cartan.datum;
  std::vector<IntMat> gens;
  for (const Root& phi : datum.positive)
    if (cartan.isCompactImaginary(phi) || cartan.isReal(phi))
      gens.push_back(datum.reflection(phi));
  return generatedSubgroup(gens, datum.rank);
}

std::complex<double> characterAt(const SeriesParam& param, const TorusPoint& t,
                                 const std::vector<double>& a) {
  const CartanClass& cartan = param.cartan;
  const RootDatum& datum = *cartan.datum;
  if (static_cast<int>(t.coords.size()) != datum.rank ||
      static_cast<int>(a.size()) != datum.rank)
    throw DomainError("torus coordinates must have rank entries");

  const std::vector<Root> imagPlus = cartan.positiveImaginary();

  if (cartan.dimA == 0) {
    const std::complex<double> delta = denominatorOver(cartan, datum.positive, t, a);
    if (std::abs(delta) <= kSingularTol)
      throw DomainError("torus point too close to singular set");
    const WeylGroup weyl = weylGroup(datum);
    std::complex<double> num(0.0, 0.0);
    for (std::size_t i = 0; i < weyl.order(); ++i)
      num += static_cast<double>(weyl.dets[i]) *
             charExp(cartan, applyMat(weyl.elements[i], param.nu), t, a);
    const double sign = qLambda(cartan, param.nu) % 2 ? -1.0 : 1.0;
    return sign * num / delta;
  }

  const std::complex<double> deltaM = denominatorOver(cartan, imagPlus, t, a);
  const std::complex<double> deltaG = denominatorOver(cartan, datum.positive, t, a);
  if (std::abs(deltaG) <= kSingularTol || std::abs(deltaM) <= kSingularTol)
    throw DomainError("torus point too close to singular set");

  std::vector<IntMat> mGens;
  std::vector<IntMat> mtGens;
  for (const Root& phi : imagPlus) {
    mGens.push_back(datum.reflection(phi));
    if (cartan.isCompactImaginary(phi)) mtGens.push_back(datum.reflection(phi));
  }
  const WeylGroup weylM = generatedSubgroup(mGens, datum.rank);
  const WeylGroup weylMT = generatedSubgroup(mtGens, datum.rank);
  const WeylGroup weylGH = realWeylGroup(cartan);
  const double signM = (imagPlus.empty() ? 0 : qLambda(cartan, param.nu)) % 2 ? -1.0 : 1.0;

  // Sum of Psi_eta(w t) e^{i sigma}(w a) over the real Weyl group; point
  // transforms are performed on the weight side, e^{mu}(w x) = e^{w^{-1} mu}(x).
  std::complex<double> total(0.0, 0.0);
  for (const IntMat& w : weylGH.elements) {
    const IntMat wInv = matInverse(w);
    std::complex<double> num(0.0, 0.0);
    for (std::size_t i = 0; i < weylM.order(); ++i) {
      const Weight mu = applyMat(wInv, applyMat(weylM.elements[i], param.nu));
      num += static_cast<double>(weylM.dets[i]) * charExp(cartan, mu, t, a);
    }
    std::complex<double> den(1.0, 0.0);
    for (const Root& phi : imagPlus) {
      const Weight half = scaleWeight(Rat(1, 2), toWeight(applyMat(wInv, phi)));
      den *= charExp(cartan, half, t, a) - charExp(cartan, negated(half), t, a);
    }
    if (std::abs(den) <= kSingularTol)
      throw DomainError("torus point too close to singular set");
    const Weight sig = applyMat(wInv, param.sigma);
    const std::complex<double> continuous =
        std::exp(std::complex<double>(0.0, dot(sig, a)));
    total += signM * (num / den) * continuous;
  }
  return (std::abs(deltaM) / std::abs(deltaG)) * total /
         static_cast<double>(weylMT.order());
}

BbwResult bottBorelWeil(const RootDatum& datum, const std::vector<int>& phi,
                        const Weight& beta) {
  for (int i : phi) {
    if (i < 0 || i >= datum.rank) throw DomainError("simple-root index out of range");
    if (datum.form(datum.simpleRoot(i), beta) < Rat(0))
      throw DomainError("not a highest weight for u");
  }
  BbwResult out;
  Weight lam = addWeights(beta, datum.rho);
  if (varpi(datum, lam) == Rat(0)) {
    out.vanishes = true;
    out.nu = lam;
    out.dim = Rat(0);
    return out;
  }
  for (const Root& root : datum.positive)
    if (datum.form(root, lam) < Rat(0)) ++out.q0;

  const WeylGroup weyl = weylGroup(datum);
  for (const IntMat& w : weyl.elements) {
    Weight cand = applyMat(w, lam);
    bool dominant = true;
    for (int i = 0; i < datum.rank && dominant; ++i)
      if (datum.form(datum.simpleRoot(i), cand) < Rat(0)) dominant = false;
    if (dominant) {
      out.nu = std::move(cand);
      break;
    }
  }
  out.dim = varpi(datum, out.nu) / varpi(datum, datum.rho);
  return out;
}

RealizationResult realize(const OrbitConfig& config, const std::string& chi,
                          const Weight& beta, const Weight& sigma) {
  const CartanClass& cartan = config.cartan;
  const RootDatum& datum = *cartan.datum;

  const OrbitReport report = orbitReport(config);
  bool admissible = report.measurable == Verdict::Yes && report.integrable;
  if (admissible)
    for (const Root& r : config.flag.phiR)
      if (!cartan.isCompactImaginary(applyMat(config.w, r))) {
        admissible = false;
        break;
      }
  if (!admissible) throw DomainError("orbit does not satisfy (6.7.1c)/(6.7.1d)");

  const IntMat tauEff = effectiveInvolution(config);
  if (static_cast<int>(beta.size()) != datum.rank ||
      applyMat(tauEff, beta) != negated(beta))
    throw DomainError("not a highest weight for u");
  for (const Root& r : config.flag.phiR)
    if (datum.isPositiveRoot(r) && datum.form(r, beta) < Rat(0))
      throw DomainError("not a highest weight for u");

  std::vector<Root> tPlus;
  for (const Root& phi : datum.positive)
    if (applyMat(tauEff, phi) == negated(phi)) tPlus.push_back(phi);
  Weight rhoT(datum.rank, Rat(0));
  for (const Root& phi : tPlus)
    rhoT = addWeights(rhoT, scaleWeight(Rat(1, 2), toWeight(phi)));
  const Weight lam = addWeights(beta, rhoT);

  RealizationResult out;
  if (varpiOver(datum, tPlus, lam) == Rat(0)) {
    out.vanishes = true;
    return out;
  }

  const auto effGrading = [&](const Root& phi) {
    return cartan.grading.at(applyMat(config.w, phi));
  };
  int degree = 0;
  for (const Root& phi : tPlus) {
    const Rat pairing = datum.form(phi, lam);
    const bool compact = effGrading(phi) == RootGrading::Compact;
    if ((compact && pairing < Rat(0)) || (!compact && pairing > Rat(0))) ++degree;
  }
  out.degree = degree;
  out.eulerSign = (tPlus.size() + degree) % 2 ? -1 : 1;

  // Representative nu: the dominant conjugate under the compact part of the
  // effective imaginary Weyl group; the real Weyl orbit keeps track of the
  // rest of the ambiguity at the parameter level.
  std::vector<IntMat> kGens;
  std::vector<Root> compactPlus;
  for (const Root& phi : tPlus)
    if (effGrading(phi) == RootGrading::Compact) {
      kGens.push_back(datum.reflection(phi));
      compactPlus.push_back(phi);
    }
  const WeylGroup weylK = generatedSubgroup(kGens, datum.rank);
  Weight nu = lam;
  for (const IntMat& u : weylK.elements) {
    Weight cand = applyMat(u, lam);
    bool dominant = true;
    for (const Root& phi : compactPlus)
      if (datum.form(phi, cand) < Rat(0)) {
        dominant = false;
        break;
      }
    if (dominant) {
      nu = std::move(cand);
      break;
    }
  }

  Weight sigmaEff = sigma;
  if (sigmaEff.empty()) sigmaEff.assign(datum.rank, Rat(0));
  out.param = hseriesParam(cartan, chi, applyMat(config.w, nu),
                           applyMat(config.w, sigmaEff));
  return out;
}

bool equivalent(const SeriesParam& a, const SeriesParam& b, std::string* reason) {
  const bool sameClass = a.cartan.datum->cartan == b.cartan.datum->cartan &&
                         a.cartan.tau == b.cartan.tau && a.cartan.grading == b.cartan.grading;
  if (!sameClass) {
    if (reason) *reason = "disjoint series";
    return false;
  }
  const WeylGroup weylGH = realWeylGroup(a.cartan);
  for (const IntMat& w : weylGH.elements)
    if (applyMat(w, a.nu) == b.nu && applyMat(w, a.sigma) == b.sigma && a.chi == b.chi)
      return true;
  if (reason) *reason = "parameters in distinct real Weyl orbits";
  return false;
}

std::vector<SeriesFamily> seriesCatalog(const std::vector<CartanClass>& cartans) {
  std::vector<SeriesFamily> out;
  for (const CartanClass& cartan : cartans) {
    SeriesFamily family;
    family.cartanLabel = cartan.label;
    family.kind = seriesKindOf(cartan);
    family.latticeRank = cartan.dimT;
    family.continuousDim = cartan.dimA;
    family.lattice =
        "half-integral t-parameters of rank " + std::to_string(cartan.dimT);
    family.regularity = "varpi_t(nu) != 0";
    out.push_back(std::move(family));
  }
  return out;
}

std::complex<double> orthogonalityCheck(const RootDatum& datum, const Weight& lam1,
                                        const Weight& lam2, int n) {
  if (n < 1) throw DomainError("quadrature size must be positive");
  const WeylGroup weyl = weylGroup(datum);
  std::vector<ExpTerm> terms1;
  std::vector<ExpTerm> terms2;
  for (std::size_t i = 0; i < weyl.order(); ++i) {
    const std::complex<double> det(static_cast<double>(weyl.dets[i]), 0.0);
    terms1.emplace_back(det, applyMat(weyl.elements[i], lam1));
    terms2.emplace_back(det, applyMat(weyl.elements[i], lam2));
  }

  const double period = defaultPeriod();
  const double step = period / static_cast<double>(n);
  std::vector<int> index(datum.rank, 0);
  std::complex<double> acc(0.0, 0.0);
  while (true) {
    std::vector<double> coords(datum.rank);
    for (int j = 0; j < datum.rank; ++j) coords[j] = step * index[j];
    const TorusPoint x(coords, period);
    acc += expEval(datum, terms1, x) * std::conj(expEval(datum, terms2, x));
    int j = 0;
    while (j < datum.rank && ++index[j] == n) index[j++] = 0;
    if (j == datum.rank) break;
  }
  double cells = 1.0;
  for (int j = 0; j < datum.rank; ++j) cells *= static_cast<double>(n);
  return acc / (static_cast<double>(weyl.order()) * cells);
}

} // namespace tempered
