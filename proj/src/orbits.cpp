#include "tempered/orbits.hpp"

#include <algorithm>
#include <set>

namespace tempered {

std::string verdictStr(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undecided";
  }
}

ParabolicSubset parabolicSubset(const RootDatum& datum, std::vector<int> phi) {
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  for (int i : phi)
    if (i < 0 || i >= datum.rank) throw DomainError("simple-root index out of range");

  ParabolicSubset out;
  out.phi = std::move(phi);
  std::set<int> support(out.phi.begin(), out.phi.end());
  for (const Root& r : datum.roots) {
    bool inSpan = true;
    for (int j = 0; j < datum.rank; ++j)
      if (r[j] != 0 && !support.count(j)) {
        inSpan = false;
        break;
      }
    if (inSpan)
      out.phiR.push_back(r);
    else if (!datum.isPositiveRoot(r))
      out.phiU.push_back(r);
  }
  return out;
}

IntMat effectiveInvolution(const OrbitConfig& config) {
  return matMul(matMul(matInverse(config.w), config.cartan.tau), config.w);
}

namespace {

std::set<Root> imageSet(const IntMat& m, const std::vector<Root>& roots) {
  std::set<Root> out;
  for (const Root& r : roots) out.insert(applyMat(m, r));
  return out;
}

bool closedUnderAddition(const RootDatum& datum, const std::set<Root>& roots) {
  for (const Root& a : roots)
    for (const Root& b : roots) {
      Root sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      if (datum.isRoot(sum) && !roots.count(sum)) return false;
    }
  return true;
}

std::size_t rationalRank(std::vector<Weight> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == Rat(0)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == Rat(0)) continue;
      const Rat factor = rows[i][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) rows[i][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// r lies in the rational span of basis iff appending it leaves the rank fixed.
bool inSpan(const std::vector<Root>& basis, const Root& r) {
  std::vector<Weight> rows;
  for (const Root& b : basis) rows.push_back(toWeight(b));
  const std::size_t base = rationalRank(rows);
  rows.push_back(toWeight(r));
  return rationalRank(rows) == base;
}

} // namespace

OrbitReport orbitReport(const OrbitConfig& config) {
  const RootDatum& datum = *config.cartan.datum;
  const IntMat tau = effectiveInvolution(config);
  const std::set<Root> phiR(config.flag.phiR.begin(), config.flag.phiR.end());
  const std::set<Root> phiU(config.flag.phiU.begin(), config.flag.phiU.end());
  const std::set<Root> tauPhiR = imageSet(tau, config.flag.phiR);
  const std::set<Root> tauPhiU = imageSet(tau, config.flag.phiU);

  OrbitReport report;

  // Crossing set Phi^u n tau Phi^u: its size is the real codimension of the
  // orbit, and its sum detects the holomorphic/antiholomorphic split.
  std::set<Root> crossing;
  for (const Root& r : config.flag.phiU)
    if (tauPhiU.count(r)) crossing.insert(r);
  report.codim = static_cast<int>(crossing.size());
  report.open = crossing.empty();

  report.deltaX.assign(datum.rank, Rat(0));
  for (const Root& r : crossing) report.deltaX = addWeights(report.deltaX, toWeight(r));

  for (const Root& r : datum.roots) {
    const Rat pairing = datum.form(r, report.deltaX);
    if (pairing >= Rat(0)) {
      report.qBracket.push_back(r);
    } else if (!crossing.count(negated(r))) {
      Root sum = applyMat(tau, r);
      for (int j = 0; j < datum.rank; ++j) sum[j] += r[j];
      if (!datum.isRoot(sum)) report.gamma.push_back(r);
    }
  }
  std::set<Root> mSet(report.qBracket.begin(), report.qBracket.end());
  mSet.insert(report.gamma.begin(), report.gamma.end());
  report.mBracket.assign(mSet.begin(), mSet.end());

  for (const Root& r : config.flag.phiU) {
    const Root tr = applyMat(tau, r);
    if (phiU.count(negated(tr))) report.vMinus.push_back(r);
  }
  for (const Root& r : report.vMinus) report.vPlus.push_back(negated(r));
  std::sort(report.vPlus.begin(), report.vPlus.end());

  // Integrability: the root set of q + tau q must be closed under addition.
  std::set<Root> qPlusTauQ(phiR.begin(), phiR.end());
  qPlusTauQ.insert(phiU.begin(), phiU.end());
  qPlusTauQ.insert(tauPhiR.begin(), tauPhiR.end());
  qPlusTauQ.insert(tauPhiU.begin(), tauPhiU.end());
  report.integrable = closedUnderAddition(datum, qPlusTauQ);

  std::set<Root> minusPhiU;
  for (const Root& r : config.flag.phiU) minusPhiU.insert(negated(r));
  const bool leviStable = tauPhiR == phiR;
  if (report.open) {
    report.measurable = (leviStable && tauPhiU == minusPhiU) ? Verdict::Yes : Verdict::No;
  } else if (leviStable) {
    report.measurable = report.integrable ? Verdict::Yes : Verdict::No;
  } else {
    report.measurable = Verdict::Undecided;
  }

  if (report.measurable == Verdict::Yes) {
    report.partiallyComplex = Verdict::Yes;
    report.flagType = Verdict::Yes;
  } else {
    report.partiallyComplex = closedUnderAddition(datum, mSet) ? Verdict::Yes : Verdict::No;
    report.flagType = Verdict::Undecided;
  }

  if (report.measurable == Verdict::Yes) {
    std::set<Root> qRoots(phiR.begin(), phiR.end());
    qRoots.insert(phiU.begin(), phiU.end());
    std::set<Root> tauQRoots(tauPhiR.begin(), tauPhiR.end());
    tauQRoots.insert(tauPhiU.begin(), tauPhiU.end());
    std::set<Root> normalizer;
    for (const Root& r : qRoots)
      if (tauQRoots.count(r)) normalizer.insert(r);
    normalizer.insert(report.vMinus.begin(), report.vMinus.end());
    normalizer.insert(report.vPlus.begin(), report.vPlus.end());
    report.normalizerRoots.assign(normalizer.begin(), normalizer.end());
  }
  return report;
}

long countOpenOrbits(const CartanClass& cartan, const ParabolicSubset& flag) {
  if (cartan.dimA != 0)
    throw DomainError("open-orbit count implemented only for equal-rank Cartan");
  const RootDatum& datum = *cartan.datum;
  const WeylGroup weyl = weylGroup(datum);

  std::vector<IntMat> kGens;
  for (const Root& r : datum.positive)
    if (cartan.isCompactImaginary(r)) kGens.push_back(datum.reflection(r));
  const WeylGroup wk = generatedSubgroup(kGens, datum.rank);

  std::vector<IntMat> phiGens;
  for (int i : flag.phi) phiGens.push_back(datum.simpleReflection(i));
  const WeylGroup wPhi = generatedSubgroup(phiGens, datum.rank);

  std::set<IntMat> canonicals;
  for (const IntMat& w : weyl.elements) {
    IntMat best = w;
    for (const IntMat& k : wk.elements)
      for (const IntMat& q : wPhi.elements) {
        IntMat candidate = matMul(matMul(k, w), q);
        if (candidate < best) best = std::move(candidate);
      }
    canonicals.insert(std::move(best));
  }
  return static_cast<long>(canonicals.size());
}

std::vector<Root> tSimpleRoots(const CartanClass& cartan) {
  const std::vector<Root> plus = cartan.positiveImaginary();
  const std::set<Root> plusSet(plus.begin(), plus.end());
  std::vector<Root> out;
  for (const Root& r : plus) {
    bool decomposable = false;
    for (const Root& a : plus) {
      Root b(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) b[i] = r[i] - a[i];
      if (plusSet.count(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(r);
  }
  return out;
}

OrbitConfig realizationConfig(const CartanClass& cartan, const CuspidalParabolic& parabolic,
                              const std::vector<Root>& phiT) {
  const RootDatum& datum = *cartan.datum;
  const std::vector<Root> tSimples = tSimpleRoots(cartan);
  const std::set<Root> tSimpleSet(tSimples.begin(), tSimples.end());
  for (const Root& r : phiT)
    if (!tSimpleSet.count(r)) throw DomainError("phi_t is not contained in the t-simple system");

  // The isotropy group must be compact modulo center, so every root in the
  // span of phi_t has to be compact imaginary.
  for (const Root& r : datum.roots)
    if (inSpan(phiT, r) && !cartan.isCompactImaginary(r))
      throw DomainError("isotropy not compact modulo center: hypothesis (6.7.1d) fails");

  const std::vector<Root> sigmaTPlus = cartan.positiveImaginary();
  const std::vector<Root> merged =
      mergePositiveSystems(cartan, parabolic.sigmaAPlus, sigmaTPlus);
  const std::set<Root> mergedSet(merged.begin(), merged.end());

  const WeylGroup weyl = weylGroup(datum);
  IntMat w = identityMat(datum.rank);
  bool found = false;
  for (const IntMat& cand : weyl.elements) {
    std::set<Root> image;
    for (const Root& r : datum.positive) image.insert(applyMat(cand, r));
    if (image == mergedSet) {
      w = cand;
      found = true;
      break;
    }
  }
  if (!found) throw DomainError("no compatible positive system");

  const IntMat wInv = matInverse(w);
  std::vector<int> flagIndices;
  for (const Root& r : phiT) {
    const Root s = applyMat(wInv, r);
    int index = -1;
    for (int i = 0; i < datum.rank; ++i)
      if (s == datum.simpleRoot(i)) index = i;
    if (index < 0) throw DomainError("no compatible positive system");
    flagIndices.push_back(index);
  }
  return OrbitConfig{cartan, w, parabolicSubset(datum, flagIndices)};
}

std::vector<OrbitConfig> realizationConfigs(const CartanClass& cartan,
                                            const CuspidalParabolic& parabolic) {
  const std::vector<Root> tSimples = tSimpleRoots(cartan);
  std::vector<OrbitConfig> out;
  const std::size_t count = tSimples.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    std::vector<Root> phiT;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::size_t{1} << i)) phiT.push_back(tSimples[i]);
    try {
      out.push_back(realizationConfig(cartan, parabolic, phiT));
    } catch (const DomainError&) {
      // subsets violating the compactness hypothesis are skipped
    }
  }
  return out;
}

} // namespace tempered
