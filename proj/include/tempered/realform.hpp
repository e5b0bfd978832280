#pragma once

#include "tempered/rootsys.hpp"

#include <map>
#include <string>

namespace tempered {

enum class RootGrading { Compact, Noncompact };

/// Conjugacy class of a Cartan subgroup of a real form: an involution on the
/// root lattice together with a compact/noncompact grading of its imaginary
/// roots.
struct CartanClass {
  std::shared_ptr<const RootDatum> datum;
  IntMat tau;                         // involution on simple-root coordinates
  std::map<Root, RootGrading> grading; // keyed on every imaginary root
  std::string label;
  int dimT = 0; // -1 eigenspace of tau
  int dimA = 0; // +1 eigenspace of tau

  bool isImaginary(const Root& r) const;
  bool isReal(const Root& r) const;
  bool isCompactImaginary(const Root& r) const;
  std::vector<Root> imaginaryRoots() const; // sorted
  std::vector<Root> realRoots() const;      // sorted
  /// Positive imaginary roots for the standard order (Sigma_t^+).
  std::vector<Root> positiveImaginary() const;

  /// Eigenprojections of a weight: a-part (lam + tau lam)/2, t-part the rest.
  Weight projA(const Weight& lam) const;
  Weight projT(const Weight& lam) const;
  Weight projA(const Root& r) const;
};

/// Validates tau (involutive, root-permuting, form-preserving: "invalid
/// involution") and the grading (domain exactly the imaginary roots up to
/// sign: "grading must cover exactly the imaginary roots").  The grading may
/// be given on one sign representative per pair; it is completed symmetrically.
CartanClass attachInvolution(std::shared_ptr<const RootDatum> datum, const IntMat& tau,
                             const std::map<Root, RootGrading>& grading,
                             const std::string& label = "");

/// Cayley transform through a noncompact imaginary root: tau' = s_alpha tau.
/// Imaginary roots of tau' orthogonal to alpha inherit their grading; any
/// other new imaginary root raises "unsupported grading propagation".
CartanClass cayleyTransform(const CartanClass& cartan, const Root& alpha);

/// Closure of the fundamental class under Cayley transforms, deduplicated by
/// Weyl conjugacy of (tau, grading); each class is returned as its canonical
/// (minimal) conjugate, ordered by (dim_a, canonical form).
std::vector<CartanClass> classifyCartans(const CartanClass& fundamental,
                                         std::size_t maxOrder = kDeskGuard);

/// Canonical conjugacy key used for deduplication; exposed for tests.
std::pair<IntMat, std::vector<std::pair<Root, int>>> cartanCanonicalKey(
    const CartanClass& cartan, const WeylGroup& weyl);

struct RestrictedRootSystem {
  bool compactCartan = false;       // dim_a == 0: empty system, flagged
  std::vector<Weight> restricted;   // all nonzero a-projections, sorted
  std::vector<Weight> positive;     // first nonzero coordinate > 0
  std::map<Weight, int> multiplicity;
  Weight rhoA;                      // half sum over positive with multiplicity
};

RestrictedRootSystem restrictedRoots(const CartanClass& cartan);

/// Unique positive root system restricting to the given positive systems on
/// a and t (ordered bases with the a-basis first); incompatible inputs raise
/// "no compatible positive system".
std::vector<Root> mergePositiveSystems(const CartanClass& cartan,
                                       const std::vector<Weight>& sigmaAPlus,
                                       const std::vector<Root>& sigmaTPlus);

struct CuspidalParabolic {
  std::vector<Root> mRoots;      // roots vanishing on a
  std::vector<Root> nRoots;      // roots with a-restriction in -Sigma_a^+
  int aDim = 0;
  Weight modularExponent;        // 2 rho_a
  std::vector<Weight> sigmaAPlus;
};

CuspidalParabolic cuspidalParabolic(const CartanClass& cartan,
                                    const std::vector<Weight>& sigmaAPlus);

} // namespace tempered
