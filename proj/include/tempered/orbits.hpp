#pragma once

#include "tempered/realform.hpp"

namespace tempered {

/// Parabolic datum on the complex flag side: a subset of the simple roots,
/// the roots in its span (Levi part) and the negative roots outside it
/// (nilradical part).
struct ParabolicSubset {
  std::vector<int> phi;      // simple-root indices, sorted
  std::vector<Root> phiR;    // roots in the span of phi
  std::vector<Root> phiU;    // negative roots outside the span
};

ParabolicSubset parabolicSubset(const RootDatum& datum, std::vector<int> phi);

/// Orbit of the real form through the w-translate of the base point of the
/// flag defined by the subset; all orbit formulas use the effective
/// involution w^{-1} tau w.
struct OrbitConfig {
  CartanClass cartan;
  IntMat w;
  ParabolicSubset flag;
};

enum class Verdict { Yes, No, Undecided };
std::string verdictStr(Verdict v);

struct OrbitReport {
  int codim = 0;
  bool open = false;
  bool integrable = false;
  Verdict measurable = Verdict::Undecided;
  Verdict partiallyComplex = Verdict::Undecided;
  Verdict flagType = Verdict::Undecided;
  Weight deltaX;
  std::vector<Root> qBracket;
  std::vector<Root> gamma;
  std::vector<Root> mBracket;
  std::vector<Root> vMinus;
  std::vector<Root> vPlus;
  std::vector<Root> normalizerRoots; // populated when measurable == Yes
};

OrbitReport orbitReport(const OrbitConfig& config);

/// Number of open orbits on the flag of the subset: double cosets
/// W_K \ W / W_{Phi^r}, with W_K generated by the compact imaginary
/// reflections.  Only defined for equal-rank (dim_a = 0) classes.
long countOpenOrbits(const CartanClass& cartan, const ParabolicSubset& flag);

/// Simple roots of the imaginary subsystem for the standard order.
std::vector<Root> tSimpleRoots(const CartanClass& cartan);

/// Geometric-realization config for a cuspidal parabolic and a subset phi_t
/// of the t-simple roots: the flag whose isotropy is u_bar + a + r^u + n,
/// expressed through the base-point translate that carries the standard
/// positive system to the merged one.  The isotropy group U must be compact
/// modulo center: every root in the span of phi_t must be compact imaginary
/// ("isotropy not compact modulo center: hypothesis (6.7.1d) fails").
OrbitConfig realizationConfig(const CartanClass& cartan, const CuspidalParabolic& parabolic,
                              const std::vector<Root>& phiT);

/// All realization configs of the class (one per admissible phi_t subset).
std::vector<OrbitConfig> realizationConfigs(const CartanClass& cartan,
                                            const CuspidalParabolic& parabolic);

/// Effective involution of a config: w^{-1} tau w.
IntMat effectiveInvolution(const OrbitConfig& config);

} // namespace tempered
