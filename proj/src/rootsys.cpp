#include "tempered/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>

namespace tempered {

double defaultPeriod() { return 4.0 * std::numbers::pi; }

namespace {

void validateCartanMatrix(const IntMat& cartan) {
  const std::size_t n = cartan.size();
  if (n == 0) throw DomainError("invalid Cartan matrix");
  for (const auto& row : cartan)
    if (row.size() != n) throw DomainError("invalid Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw DomainError("invalid Cartan matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw DomainError("invalid Cartan matrix");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) throw DomainError("invalid Cartan matrix");
    }
  }
}

/// Symmetrizing weights per connected component, normalized so the longest
/// simple root in each component has squared length 2.
std::vector<Rat> symmetrizer(const IntMat& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<Rat> d(n, Rat(0));
  std::vector<int> component(n, -1);
  int componentCount = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int comp = componentCount++;
    component[start] = comp;
    d[start] = Rat(1);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0 || component[j] >= 0) continue;
        component[j] = comp;
        d[j] = d[i] * Rat(cartan[i][j]) / Rat(cartan[j][i]);
        queue.push_back(j);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * Rat(cartan[i][j]) != d[j] * Rat(cartan[j][i]))
        throw DomainError("invalid Cartan matrix");
  std::vector<Rat> componentMax(componentCount, Rat(0));
  for (int i = 0; i < n; ++i)
    componentMax[component[i]] = std::max(componentMax[component[i]], d[i]);
  for (int i = 0; i < n; ++i) d[i] /= componentMax[component[i]];
  return d;
}

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

} // namespace

Rat RootDatum::form(const Weight& u, const Weight& v) const {
  Rat out(0);
  for (int i = 0; i < rank; ++i) {
    if (u[i] == Rat(0)) continue;
    for (int j = 0; j < rank; ++j) out += u[i] * halfNorms[i] * Rat(cartan[i][j]) * v[j];
  }
  return out;
}

Rat RootDatum::form(const Root& u, const Root& v) const { return form(toWeight(u), toWeight(v)); }

Rat RootDatum::form(const Root& u, const Weight& v) const { return form(toWeight(u), v); }

Rat RootDatum::corootPairing(const Weight& lam, const Root& phi) const {
  return Rat(2) * form(phi, lam) / form(phi, phi);
}

bool RootDatum::isRoot(const Root& r) const {
  return std::binary_search(roots.begin(), roots.end(), r);
}

bool RootDatum::isPositiveRoot(const Root& r) const {
  return std::binary_search(positive.begin(), positive.end(), r);
}

Root RootDatum::simpleRoot(int i) const {
  Root r(rank, 0);
  r[i] = 1;
  return r;
}

IntMat RootDatum::simpleReflection(int i) const {
  IntMat m = identityMat(rank);
  for (int j = 0; j < rank; ++j) m[i][j] -= cartan[i][j];
  return m;
}

IntMat RootDatum::reflection(const Root& phi) const {
  const Rat phiNorm = form(phi, phi);
  IntMat m = identityMat(rank);
  for (int j = 0; j < rank; ++j) {
    const Rat c = Rat(2) * form(simpleRoot(j), phi) / phiNorm;
    if (c.denominator() != 1) throw DomainError("reflection is not integral on the root lattice");
    for (int i = 0; i < rank; ++i) m[i][j] -= static_cast<int>(c.numerator()) * phi[i];
  }
  return m;
}

std::shared_ptr<const RootDatum> buildRootDatum(const IntMat& cartan, std::size_t maxRoots) {
  validateCartanMatrix(cartan);
  auto datum = std::make_shared<RootDatum>();
  datum->rank = static_cast<int>(cartan.size());
  datum->cartan = cartan;
  datum->halfNorms = symmetrizer(cartan);

  const int n = datum->rank;
  std::set<Root> closure;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r = datum->simpleRoot(i);
    closure.insert(r);
    closure.insert(negated(r));
    queue.push_back(r);
    queue.push_back(negated(r));
  }
  while (!queue.empty()) {
    const Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root image = r;
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan[i][j] * r[j];
      image[i] -= pairing;
      if (closure.insert(image).second) {
        if (closure.size() > maxRoots) throw DomainError("not finite type");
        queue.push_back(image);
      }
    }
  }

  datum->roots.assign(closure.begin(), closure.end());
  for (const Root& r : datum->roots)
    if (height(r) > 0) datum->positive.push_back(r);
  datum->rho.assign(n, Rat(0));
  for (const Root& r : datum->positive)
    datum->rho = addWeights(datum->rho, scaleWeight(Rat(1, 2), toWeight(r)));
  return datum;
}

int WeylGroup::indexOf(const IntMat& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return static_cast<int>(i);
  return -1;
}

namespace {

std::size_t& guardSlot() {
  static std::size_t guard = kDeskGuard;
  return guard;
}

WeylGroup closeUnderProducts(std::vector<std::pair<IntMat, int>> seeds, const IntMat& id,
                             std::size_t maxOrder) {
  if (maxOrder == kDeskGuard) maxOrder = activeGuard();
  std::map<IntMat, int> dets{{id, 1}};
  std::deque<IntMat> queue{id};
  while (!queue.empty()) {
    const IntMat w = queue.front();
    queue.pop_front();
    const int dw = dets.at(w);
    for (const auto& [g, dg] : seeds) {
      IntMat next = matMul(w, g);
      if (dets.emplace(next, dw * dg).second) {
        if (dets.size() > maxOrder) throw DomainError("Weyl group too large for desk scale");
        queue.push_back(std::move(next));
      }
    }
  }
  WeylGroup out;
  out.elements.reserve(dets.size());
  out.dets.reserve(dets.size());
  out.elements.push_back(id);
  out.dets.push_back(1);
  for (const auto& [m, d] : dets) {
    if (m == id) continue;
    out.elements.push_back(m);
    out.dets.push_back(d);
  }
  return out;
}

} // namespace

std::size_t activeGuard() { return guardSlot(); }

void setActiveGuard(std::size_t value) { guardSlot() = value == 0 ? kDeskGuard : value; }

WeylGroup weylGroup(const RootDatum& datum, std::size_t maxOrder) {
  std::vector<std::pair<IntMat, int>> gens;
  for (int i = 0; i < datum.rank; ++i) gens.emplace_back(datum.simpleReflection(i), -1);
  return closeUnderProducts(std::move(gens), identityMat(datum.rank), maxOrder);
}

WeylGroup generatedSubgroup(const std::vector<IntMat>& generators, int rank,
                            std::size_t maxOrder) {
  std::vector<std::pair<IntMat, int>> gens;
  for (const auto& g : generators) gens.emplace_back(g, -1);
  return closeUnderProducts(std::move(gens), identityMat(rank), maxOrder);
}

Rat varpi(const RootDatum& datum, const Weight& lam) {
  Rat out(1);
  for (const Root& phi : datum.positive) out *= datum.form(phi, lam);
  return out;
}

std::complex<double> expEval(const RootDatum& datum, const std::vector<ExpTerm>& terms,
                             const TorusPoint& x) {
  if (static_cast<int>(x.coords.size()) != datum.rank)
    throw DomainError("torus point has wrong length");
  const double twoPi = 2.0 * std::numbers::pi;
  std::complex<double> total = 0.0;
  for (const auto& [coeff, lam] : terms) {
    if (static_cast<int>(lam.size()) != datum.rank)
      throw DomainError("weight has wrong length in exponential sum");
    double phase = 0.0;
    for (int j = 0; j < datum.rank; ++j) {
      const double cj = toDouble(lam[j]);
      const double cycles = cj * x.period / twoPi;
      if (std::abs(cycles - std::round(cycles)) > 1e-9)
        throw DomainError("aperiodic exponential for given period");
      phase += cj * x.coords[j];
    }
    total += coeff * std::exp(std::complex<double>(0.0, phase));
  }
  return total;
}

} // namespace tempered
