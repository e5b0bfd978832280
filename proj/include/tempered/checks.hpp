#pragma once

#include <string>
#include <vector>

namespace tempered {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Full invariant battery over every preset: root/Weyl tables, involution
/// and classification invariants, restricted-root bookkeeping, orbit sweep
/// criteria, open-orbit counts, parameter/character identities, realization
/// guarantees, disjointness sampling and Schur orthogonality.
std::vector<CheckResult> runChecks(int quadraturePoints = 4096);

} // namespace tempered
