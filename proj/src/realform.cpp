#include "tempered/realform.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tempered {

bool CartanClass::isImaginary(const Root& r) const { return applyMat(tau, r) == negated(r); }

bool CartanClass::isReal(const Root& r) const { return applyMat(tau, r) == r; }

bool CartanClass::isCompactImaginary(const Root& r) const {
  const auto it = grading.find(r);
  return it != grading.end() && it->second == RootGrading::Compact;
}

std::vector<Root> CartanClass::imaginaryRoots() const {
  std::vector<Root> out;
  for (const Root& r : datum->roots)
    if (isImaginary(r)) out.push_back(r);
  return out;
}

std::vector<Root> CartanClass::realRoots() const {
  std::vector<Root> out;
  for (const Root& r : datum->roots)
    if (isReal(r)) out.push_back(r);
  return out;
}

std::vector<Root> CartanClass::positiveImaginary() const {
  std::vector<Root> out;
  for (const Root& r : datum->positive)
    if (isImaginary(r)) out.push_back(r);
  return out;
}

Weight CartanClass::projA(const Weight& lam) const {
  return scaleWeight(Rat(1, 2), addWeights(lam, applyMat(tau, lam)));
}

Weight CartanClass::projT(const Weight& lam) const {
  return scaleWeight(Rat(1, 2), addWeights(lam, negated(applyMat(tau, lam))));
}

Weight CartanClass::projA(const Root& r) const { return projA(toWeight(r)); }

CartanClass attachInvolution(std::shared_ptr<const RootDatum> datum, const IntMat& tau,
                             const std::map<Root, RootGrading>& grading,
                             const std::string& label) {
  const int n = datum->rank;
  if (static_cast<int>(tau.size()) != n) throw DomainError("invalid involution");
  for (const auto& row : tau)
    if (static_cast<int>(row.size()) != n) throw DomainError("invalid involution");
  if (matMul(tau, tau) != identityMat(n)) throw DomainError("invalid involution");
  for (const Root& r : datum->roots)
    if (!datum->isRoot(applyMat(tau, r))) throw DomainError("invalid involution");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Root ei = datum->simpleRoot(i);
      const Root ej = datum->simpleRoot(j);
      if (datum->form(applyMat(tau, ei), toWeight(applyMat(tau, ej))) != datum->form(ei, ej))
        throw DomainError("invalid involution");
    }

  CartanClass out;
  out.datum = std::move(datum);
  out.tau = tau;
  out.label = label;
  const int trace = matTrace(tau);
  out.dimA = (n + trace) / 2;
  out.dimT = n - out.dimA;

  std::set<Root> imaginary;
  for (const Root& r : out.datum->roots)
    if (out.isImaginary(r)) imaginary.insert(r);
  for (const auto& [root, g] : grading) {
    if (!imaginary.count(root)) throw DomainError("grading must cover exactly the imaginary roots");
    const auto mirror = grading.find(negated(root));
    if (mirror != grading.end() && mirror->second != g)
      throw DomainError("grading must cover exactly the imaginary roots");
    out.grading[root] = g;
    out.grading[negated(root)] = g;
  }
  if (out.grading.size() != imaginary.size())
    throw DomainError("grading must cover exactly the imaginary roots");
  return out;
}

CartanClass cayleyTransform(const CartanClass& cartan, const Root& alpha) {
  const auto it = cartan.grading.find(alpha);
  if (it == cartan.grading.end() || it->second != RootGrading::Noncompact)
    throw DomainError("Cayley transform undefined");

  const IntMat tau2 = matMul(cartan.datum->reflection(alpha), cartan.tau);
  std::map<Root, RootGrading> grading2;
  for (const Root& r : cartan.datum->roots) {
    if (applyMat(tau2, r) != negated(r)) continue;
    const bool inherited = cartan.isImaginary(r) && cartan.datum->form(r, alpha) == Rat(0);
    if (!inherited) throw DomainError("unsupported grading propagation");
    grading2[r] = cartan.grading.at(r);
  }
  return attachInvolution(cartan.datum, tau2, grading2, "");
}

std::pair<IntMat, std::vector<std::pair<Root, int>>> cartanCanonicalKey(
    const CartanClass& cartan, const WeylGroup& weyl) {
  using Key = std::pair<IntMat, std::vector<std::pair<Root, int>>>;
  Key best;
  bool haveBest = false;
  for (const IntMat& w : weyl.elements) {
    const IntMat wInv = matInverse(w);
    IntMat conjTau = matMul(matMul(w, cartan.tau), wInv);
    std::vector<std::pair<Root, int>> gradingList;
    gradingList.reserve(cartan.grading.size());
    for (const auto& [root, g] : cartan.grading)
      gradingList.emplace_back(applyMat(w, root), g == RootGrading::Compact ? 0 : 1);
    std::sort(gradingList.begin(), gradingList.end());
    Key key{std::move(conjTau), std::move(gradingList)};
    if (!haveBest || key < best) {
      best = std::move(key);
      haveBest = true;
    }
  }
  return best;
}

namespace {

CartanClass conjugateToKey(const CartanClass& cartan,
                           const std::pair<IntMat, std::vector<std::pair<Root, int>>>& key) {
  std::map<Root, RootGrading> grading;
  for (const auto& [root, g] : key.second)
    grading[root] = g == 0 ? RootGrading::Compact : RootGrading::Noncompact;
  return attachInvolution(cartan.datum, key.first, grading, cartan.label);
}

} // namespace

std::vector<CartanClass> classifyCartans(const CartanClass& fundamental, std::size_t maxOrder) {
  const WeylGroup weyl = weylGroup(*fundamental.datum, maxOrder);
  using Key = std::pair<IntMat, std::vector<std::pair<Root, int>>>;
  std::map<Key, CartanClass> classes;
  std::deque<CartanClass> queue;

  const Key seed = cartanCanonicalKey(fundamental, weyl);
  classes.emplace(seed, conjugateToKey(fundamental, seed));
  queue.push_back(classes.begin()->second);

  while (!queue.empty()) {
    const CartanClass current = queue.front();
    queue.pop_front();
    for (const auto& [root, g] : current.grading) {
      if (g != RootGrading::Noncompact) continue;
      const CartanClass next = cayleyTransform(current, root);
      const Key key = cartanCanonicalKey(next, weyl);
      if (!classes.count(key)) {
        CartanClass canonical = conjugateToKey(next, key);
        queue.push_back(canonical);
        classes.emplace(key, std::move(canonical));
      }
    }
  }

  std::vector<CartanClass> out;
  for (auto& [key, cls] : classes) out.push_back(cls);
  std::stable_sort(out.begin(), out.end(), [&](const CartanClass& a, const CartanClass& b) {
    if (a.dimA != b.dimA) return a.dimA < b.dimA;
    return cartanCanonicalKey(a, weyl) < cartanCanonicalKey(b, weyl);
  });
  return out;
}

RestrictedRootSystem restrictedRoots(const CartanClass& cartan) {
  RestrictedRootSystem out;
  out.rhoA.assign(cartan.datum->rank, Rat(0));
  out.compactCartan = cartan.dimA == 0;
  if (out.compactCartan) return out;

  std::set<Weight> seen;
  for (const Root& r : cartan.datum->roots) {
    const Weight p = cartan.projA(r);
    if (isZero(p)) continue;
    ++out.multiplicity[p];
    seen.insert(p);
  }
  out.restricted.assign(seen.begin(), seen.end());
  for (const Weight& p : out.restricted) {
    bool positive = false;
    for (const Rat& c : p) {
      if (c == Rat(0)) continue;
      positive = c > Rat(0);
      break;
    }
    if (positive) out.positive.push_back(p);
  }
  for (const Weight& p : out.positive)
    out.rhoA = addWeights(out.rhoA, scaleWeight(Rat(out.multiplicity.at(p), 2), p));
  return out;
}

namespace {

void validateHalfSystem(const std::vector<Weight>& given, const std::set<Weight>& full,
                        const char* message) {
  std::set<Weight> plus(given.begin(), given.end());
  if (plus.size() != given.size() || plus.size() * 2 != full.size())
    throw DomainError(message);
  for (const Weight& p : plus) {
    if (!full.count(p) || plus.count(negated(p))) throw DomainError(message);
  }
}

} // namespace

std::vector<Root> mergePositiveSystems(const CartanClass& cartan,
                                       const std::vector<Weight>& sigmaAPlus,
                                       const std::vector<Root>& sigmaTPlus) {
  const char* message = "no compatible positive system";
  const RestrictedRootSystem restricted = restrictedRoots(cartan);
  std::set<Weight> allRestricted(restricted.restricted.begin(), restricted.restricted.end());
  validateHalfSystem(sigmaAPlus, allRestricted, message);

  std::set<Weight> imaginaryFull;
  std::vector<Weight> sigmaTWeights;
  for (const Root& r : sigmaTPlus) {
    if (!cartan.isImaginary(r)) throw DomainError(message);
    sigmaTWeights.push_back(toWeight(r));
  }
  for (const Root& r : cartan.imaginaryRoots()) imaginaryFull.insert(toWeight(r));
  validateHalfSystem(sigmaTWeights, imaginaryFull, message);

  const std::set<Weight> aPlus(sigmaAPlus.begin(), sigmaAPlus.end());
  const std::set<Root> tPlus(sigmaTPlus.begin(), sigmaTPlus.end());
  std::vector<Root> merged;
  for (const Root& r : cartan.datum->roots) {
    const Weight p = cartan.projA(r);
    if (isZero(p) ? tPlus.count(r) != 0 : aPlus.count(p) != 0) merged.push_back(r);
  }
  if (merged.size() * 2 != cartan.datum->roots.size()) throw DomainError(message);
  std::set<Root> mergedSet(merged.begin(), merged.end());
  for (const Root& a : merged)
    for (const Root& b : merged) {
      Root sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      if (cartan.datum->isRoot(sum) && !mergedSet.count(sum)) throw DomainError(message);
    }
  return merged;
}

CuspidalParabolic cuspidalParabolic(const CartanClass& cartan,
                                    const std::vector<Weight>& sigmaAPlus) {
  const RestrictedRootSystem restricted = restrictedRoots(cartan);
  if (!restricted.compactCartan) {
    std::set<Weight> allRestricted(restricted.restricted.begin(), restricted.restricted.end());
    validateHalfSystem(sigmaAPlus, allRestricted, "no compatible positive system");
  } else if (!sigmaAPlus.empty()) {
    throw DomainError("no restricted roots for compact Cartan");
  }

  CuspidalParabolic out;
  out.aDim = cartan.dimA;
  out.sigmaAPlus = sigmaAPlus;
  out.modularExponent.assign(cartan.datum->rank, Rat(0));
  std::set<Weight> minus;
  for (const Weight& p : sigmaAPlus) minus.insert(negated(p));
  for (const Root& r : cartan.datum->roots) {
    const Weight p = cartan.projA(r);
    if (isZero(p))
      out.mRoots.push_back(r);
    else if (minus.count(p))
      out.nRoots.push_back(r);
  }
  for (const Weight& p : sigmaAPlus) {
    const auto it = restricted.multiplicity.find(p);
    const int mult = it == restricted.multiplicity.end() ? 0 : it->second;
    out.modularExponent = addWeights(out.modularExponent, scaleWeight(Rat(mult), p));
  }
  return out;
}

} // namespace tempered
