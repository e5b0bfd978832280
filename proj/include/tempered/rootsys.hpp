#pragma once

#include "tempered/rational.hpp"

#include <complex>
#include <cstddef>
#include <memory>
#include <utility>

namespace tempered {

/// Desk-scale guard shared by root closure and Weyl enumeration.
inline constexpr std::size_t kDeskGuard = 10000;

/// Process-wide override of the Weyl-order guard (the CLI wires the
/// TEMPERED_GUARD environment variable here); callers that leave maxOrder at
/// its default get this value.
std::size_t activeGuard();
void setActiveGuard(std::size_t value);

/// Default torus period: half-integer weights are single valued on a
/// 4*pi-periodic coordinate.
double defaultPeriod();

/// Finite root system built from an integer Cartan matrix.  Everything is
/// kept in simple-root coordinates; the invariant form is the symmetrized
/// Cartan form, normalized so long roots have squared length 2 in each
/// irreducible component.
struct RootDatum {
  int rank = 0;
  IntMat cartan;               // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Rat> halfNorms;  // d_i with (alpha_i, alpha_i) = 2 d_i
  std::vector<Root> roots;     // sorted
  std::vector<Root> positive;  // sorted, height > 0
  Weight rho;                  // half sum of positive roots

  Rat form(const Weight& u, const Weight& v) const;
  Rat form(const Root& u, const Root& v) const;
  Rat form(const Root& u, const Weight& v) const;
  /// <lam, phi^vee> = 2 (lam, phi) / (phi, phi).
  Rat corootPairing(const Weight& lam, const Root& phi) const;

  bool isRoot(const Root& r) const;
  bool isPositiveRoot(const Root& r) const;
  Root simpleRoot(int i) const;
  IntMat simpleReflection(int i) const;
  /// Reflection in an arbitrary root, as an integer matrix on root coordinates.
  IntMat reflection(const Root& phi) const;
};

/// Validates the Cartan matrix ("invalid Cartan matrix") and closes the
/// simple basis under reflections; closure past maxRoots means the matrix is
/// not of finite type ("not finite type").
std::shared_ptr<const RootDatum> buildRootDatum(const IntMat& cartan,
                                                std::size_t maxRoots = kDeskGuard);

struct WeylGroup {
  std::vector<IntMat> elements; // elements[0] is the identity
  std::vector<int> dets;        // matched to elements

  std::size_t order() const { return elements.size(); }
  /// Index of a matrix in the element list, -1 if absent.
  int indexOf(const IntMat& m) const;
};

/// Full Weyl group by closure of the simple reflections; enumeration past
/// maxOrder raises "Weyl group too large for desk scale".
WeylGroup weylGroup(const RootDatum& datum, std::size_t maxOrder = kDeskGuard);

/// Subgroup generated by the given reflection matrices.
WeylGroup generatedSubgroup(const std::vector<IntMat>& generators, int rank,
                            std::size_t maxOrder = kDeskGuard);

/// Product over positive roots of (phi, lam); vanishes exactly on the
/// singular set.
Rat varpi(const RootDatum& datum, const Weight& lam);

/// Point of the compact torus in coordinates dual to the simple-root pairing.
struct TorusPoint {
  std::vector<double> coords;
  double period;

  explicit TorusPoint(std::vector<double> c) : coords(std::move(c)), period(defaultPeriod()) {}
  TorusPoint(std::vector<double> c, double p) : coords(std::move(c)), period(p) {}
};

using ExpTerm = std::pair<std::complex<double>, Weight>;

/// Evaluates a finite sum of exponentials sum c * e^{lambda} at x, where
/// e^{lambda}(x) = exp(i lambda(x)).  Every weight must be periodic for the
/// point's period ("aperiodic exponential for given period").
std::complex<double> expEval(const RootDatum& datum, const std::vector<ExpTerm>& terms,
                             const TorusPoint& x);

} // namespace tempered
