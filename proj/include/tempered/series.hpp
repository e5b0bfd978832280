#pragma once

#include "tempered/orbits.hpp"

#include <optional>

namespace tempered {

enum class SeriesKind { RelativeDiscrete, Intermediate, Principal };
std::string seriesKindStr(SeriesKind k);

/// Tempered series kind carried by a Cartan class: relative discrete for
/// dim_a = 0, principal when no noncompact imaginary root is left (maximally
/// split), intermediate otherwise.
SeriesKind seriesKindOf(const CartanClass& cartan);

/// Index q(lambda) = #{compact positive phi with (phi,lambda) < 0}
///                 + #{noncompact positive phi with (phi,lambda) > 0};
/// defined for equal-rank classes and regular lambda.
int qLambda(const CartanClass& cartan, const Weight& lam);

struct SeriesParam {
  CartanClass cartan;
  std::string chi;   // central character label (scalar model)
  Weight nu;         // t-side parameter, tau nu = -nu
  Weight sigma;      // a-side parameter, tau sigma = sigma
  SeriesKind kind = SeriesKind::RelativeDiscrete;
  Rat casimir;
  std::optional<Rat> formalDegree; // dim_a = 0 only
  bool irreducibleHint = false;
};

/// Relative discrete series at a regular half-integral parameter on an
/// equal-rank Cartan; formal degree |varpi(lambda)|, Casimir
/// (lambda,lambda) - (rho,rho).
SeriesParam discreteSeriesParam(const CartanClass& cartan, const Weight& lam,
                                const std::string& chi = "1");

/// H-series parameter (nu, sigma) on any Cartan class; nu must be t-regular
/// half-integral on the t-side and sigma must live on the a-side.  Casimir
/// (nu,nu) + (sigma,sigma) - (rho,rho); the irreducibility hint records
/// whether sigma is (g,a)-regular.
SeriesParam hseriesParam(const CartanClass& cartan, const std::string& chi,
                         const Weight& nu, const Weight& sigma);

/// Real Weyl group model W_{G,H}: generated by reflections in compact
/// imaginary roots and in real roots.
WeylGroup realWeylGroup(const CartanClass& cartan);

/// Distribution character at a point t * a of the Cartan subgroup,
/// t on the compact side and a on the vector side.  Regularity guard:
/// "torus point too close to singular set".
std::complex<double> characterAt(const SeriesParam& param, const TorusPoint& t,
                                 const std::vector<double>& a);

struct BbwResult {
  bool vanishes = false;
  int q0 = 0;
  Weight nu;   // dominant representative
  Rat dim;     // Weyl dimension of the realized module
};

/// Bott-Borel-Weil index for a compact group: cohomology of the line bundle
/// of beta vanishes iff beta + rho is singular; otherwise it survives in the
/// single degree q0 = #{positive phi with (beta + rho, phi) < 0} with
/// highest weight the dominant conjugate of beta + rho.
BbwResult bottBorelWeil(const RootDatum& datum, const std::vector<int>& phi,
                        const Weight& beta);

struct RealizationResult {
  bool vanishes = false;
  int degree = 0;
  int eulerSign = 1; // (-1)^{|Sigma_t^+| + degree}
  std::optional<SeriesParam> param;
};

/// Resolves the cohomology of the bundle (chi, beta, sigma) on a realization
/// config: vanishing test on beta + rho_t, surviving degree q_M(beta + rho_t)
/// and the H-series parameter it produces.
RealizationResult realize(const OrbitConfig& config, const std::string& chi,
                          const Weight& beta, const Weight& sigma);

/// Parameter-level equivalence: same Cartan class and (nu, sigma) in the same
/// W_{G,H}-orbit with equal central character labels.  Non-conjugate Cartan
/// classes give disjoint series ("disjoint series" reason).
bool equivalent(const SeriesParam& a, const SeriesParam& b, std::string* reason = nullptr);

struct SeriesFamily {
  std::string cartanLabel;
  SeriesKind kind = SeriesKind::RelativeDiscrete;
  int latticeRank = 0;    // dim_t
  int continuousDim = 0;  // dim_a
  std::string lattice;
  std::string regularity;
};

/// One tempered family per Cartan class; families on non-conjugate classes
/// are disjoint.
std::vector<SeriesFamily> seriesCatalog(const std::vector<CartanClass>& cartans);

/// Quadrature check of Schur orthogonality for two Weyl characters of a
/// compact form: inner product against the Weyl measure over the torus,
/// normalized by |W| and the period volume; expects Kronecker delta.
std::complex<double> orthogonalityCheck(const RootDatum& datum, const Weight& lam1,
                                        const Weight& lam2, int n);

} // namespace tempered
