#include "tempered/presets.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tempered;

namespace {

// Independent grading oracle for the signature-(2,1) unitary form in
// epsilon coordinates: the root a*alpha_1 + b*alpha_2 is eps_i - eps_j with
// eps-vector (a, b - a, -b); it is compact exactly when i and j land in the
// same diagonal block of the (2, 1) signature.
bool su21CompactOracle(const Root& r) {
  const int eps[3] = {r[0], r[1] - r[0], -r[1]};
  int plus = -1;
  int minus = -1;
  for (int i = 0; i < 3; ++i) {
    if (eps[i] == 1) plus = i;
    if (eps[i] == -1) minus = i;
  }
  REQUIRE(plus >= 0);
  REQUIRE(minus >= 0);
  const auto block = [](int i) { return i < 2 ? 0 : 1; };
  return block(plus) == block(minus);
}

using Key = std::pair<IntMat, std::vector<std::pair<Root, int>>>;

std::set<Key> keySet(const std::vector<CartanClass>& classes, const WeylGroup& weyl) {
  std::set<Key> out;
  for (const CartanClass& c : classes) out.insert(cartanCanonicalKey(c, weyl));
  return out;
}

} // namespace

TEST_CASE("su(2,1) grading matches the epsilon-coordinate block oracle") {
  const GroupPreset preset = makePreset("su21");
  const CartanClass& compact = findCartan(preset, "compact");
  CHECK(compact.imaginaryRoots().size() == 6);
  for (const Root& r : compact.imaginaryRoots())
    CHECK(compact.isCompactImaginary(r) == su21CompactOracle(r));
}

TEST_CASE("involutions are validated") {
  const auto a1a1 = buildRootDatum({{2, 0}, {0, 2}});
  // order four, not an involution
  CHECK_THROWS_WITH_AS(attachInvolution(a1a1, {{0, -1}, {1, 0}}, {}), "invalid involution",
                       DomainError);
  // involutive but does not permute the roots
  CHECK_THROWS_WITH_AS(attachInvolution(a1a1, {{1, 1}, {0, -1}}, {}), "invalid involution",
                       DomainError);
  // wrong size
  CHECK_THROWS_WITH_AS(attachInvolution(a1a1, {{1}}, {}), "invalid involution", DomainError);

  const auto a2 = buildRootDatum({{2, -1}, {-1, 2}});
  // the diagram swap is a legitimate involution with no imaginary roots
  const IntMat swap{{0, 1}, {1, 0}};
  const CartanClass swapped = attachInvolution(a2, swap, {});
  CHECK(swapped.imaginaryRoots().empty());
  CHECK(swapped.realRoots() == std::vector<Root>{Root{-1, -1}, Root{1, 1}});
}

TEST_CASE("gradings must cover exactly the imaginary roots") {
  const auto a1 = buildRootDatum({{2}});
  const Root alpha{1};
  // missing entry
  CHECK_THROWS_WITH_AS(attachInvolution(a1, {{-1}}, {}),
                       "grading must cover exactly the imaginary roots", DomainError);
  // entry on a non-imaginary root
  CHECK_THROWS_WITH_AS(attachInvolution(a1, {{1}}, {{alpha, RootGrading::Compact}}),
                       "grading must cover exactly the imaginary roots", DomainError);
  // conflicting signs
  CHECK_THROWS_WITH_AS(
      attachInvolution(a1, {{-1}},
                       {{alpha, RootGrading::Compact}, {negated(alpha), RootGrading::Noncompact}}),
      "grading must cover exactly the imaginary roots", DomainError);
  // one representative per pair is completed symmetrically
  const CartanClass c = attachInvolution(a1, {{-1}}, {{alpha, RootGrading::Noncompact}});
  CHECK(c.grading.size() == 2);
  CHECK(c.grading.at(negated(alpha)) == RootGrading::Noncompact);
}

TEST_CASE("eigenspace dimensions and projections") {
  const GroupPreset a1a1 = makePreset("a1a1");
  const std::vector<std::pair<std::string, std::pair<int, int>>> dims{
      {"compact", {2, 0}}, {"mixed1", {1, 1}}, {"mixed2", {1, 1}}, {"split", {0, 2}}};
  for (const auto& [label, expected] : dims) {
    const CartanClass& c = findCartan(a1a1, label);
    CHECK(c.dimT == expected.first);
    CHECK(c.dimA == expected.second);
  }
  const CartanClass& mixed1 = findCartan(a1a1, "mixed1");
  const Weight lam{Rat(3, 2), Rat(-5, 2)};
  CHECK(addWeights(mixed1.projA(lam), mixed1.projT(lam)) == lam);
  CHECK(applyMat(mixed1.tau, mixed1.projA(lam)) == mixed1.projA(lam));
  CHECK(applyMat(mixed1.tau, mixed1.projT(lam)) == negated(mixed1.projT(lam)));
  CHECK(mixed1.projT(lam) == Weight{Rat(3, 2), Rat(0)});
  CHECK(mixed1.projA(lam) == Weight{Rat(0), Rat(-5, 2)});
}

TEST_CASE("imaginary and real roots are orthogonal in every Cartan class") {
  for (const std::string& id : presetIds()) {
    const GroupPreset preset = makePreset(id);
    for (const CartanClass& cartan : preset.cartans)
      for (const Root& im : cartan.imaginaryRoots())
        for (const Root& re : cartan.realRoots())
          CHECK(preset.datum->form(im, re) == Rat(0));
  }
}

TEST_CASE("Cayley transform moves one compact dimension to the split side") {
  const GroupPreset sl2r = makePreset("sl2r");
  const CartanClass& compact = findCartan(sl2r, "compact");
  const CartanClass split = cayleyTransform(compact, Root{1});
  CHECK(split.tau == IntMat{{1}});
  CHECK(split.dimA == 1);
  CHECK(split.grading.empty());

  const GroupPreset su21 = makePreset("su21");
  const CartanClass next = cayleyTransform(findCartan(su21, "compact"), Root{0, 1});
  CHECK(next.tau == findCartan(su21, "split").tau);
  CHECK(next.dimA == 1);

  // compact roots do not admit a Cayley transform, nor do real ones
  CHECK_THROWS_WITH_AS(cayleyTransform(findCartan(su21, "compact"), Root{1, 0}),
                       "Cayley transform undefined", DomainError);
  CHECK_THROWS_WITH_AS(cayleyTransform(findCartan(sl2r, "split"), Root{1}),
                       "Cayley transform undefined", DomainError);
}

TEST_CASE("classification closes the Cayley graph with the expected class counts") {
  const std::map<std::string, std::size_t> expected{
      {"su2", 1}, {"sl2r", 2}, {"su11", 2}, {"su21", 2}, {"a1a1", 4}};
  for (const std::string& id : presetIds()) {
    const GroupPreset preset = makePreset(id);
    const WeylGroup weyl = weylGroup(*preset.datum);
    const std::vector<CartanClass> classes = classifyCartans(preset.cartans.front());
    CHECK(classes.size() == expected.at(id));
    // preset classes occur in the classification up to conjugacy
    const std::set<Key> keys = keySet(classes, weyl);
    for (const CartanClass& c : preset.cartans) CHECK(keys.count(cartanCanonicalKey(c, weyl)));
    // classes are ordered by the split dimension
    for (std::size_t i = 1; i < classes.size(); ++i)
      CHECK(classes[i - 1].dimA <= classes[i].dimA);
  }
}

TEST_CASE("classification is independent of the Cayley order and the seed") {
  const GroupPreset a1a1 = makePreset("a1a1");
  const WeylGroup weyl = weylGroup(*a1a1.datum);
  const CartanClass& compact = findCartan(a1a1, "compact");

  const CartanClass viaFirst = cayleyTransform(cayleyTransform(compact, Root{1, 0}), Root{0, 1});
  const CartanClass viaSecond = cayleyTransform(cayleyTransform(compact, Root{0, 1}), Root{1, 0});
  CHECK(cartanCanonicalKey(viaFirst, weyl) == cartanCanonicalKey(viaSecond, weyl));

  // seeding from any conjugate representative of the fundamental class
  // produces the same family of canonical keys
  const std::vector<CartanClass> fromCompact = classifyCartans(compact);
  for (const IntMat& w : weyl.elements) {
    const IntMat wInv = matInverse(w);
    std::map<Root, RootGrading> moved;
    for (const auto& [root, g] : compact.grading) moved[applyMat(w, root)] = g;
    const CartanClass conj =
        attachInvolution(a1a1.datum, matMul(matMul(w, compact.tau), wInv), moved);
    CHECK(keySet(classifyCartans(conj), weyl) == keySet(fromCompact, weyl));
  }
}

TEST_CASE("restricted roots of the split rank-one form") {
  const GroupPreset sl2r = makePreset("sl2r");
  const RestrictedRootSystem restricted = restrictedRoots(findCartan(sl2r, "split"));
  CHECK_FALSE(restricted.compactCartan);
  CHECK(restricted.positive == std::vector<Weight>{Weight{Rat(1)}});
  CHECK(restricted.multiplicity.at(Weight{Rat(1)}) == 1);
  CHECK(restricted.rhoA == Weight{Rat(1, 2)});

  const RestrictedRootSystem none = restrictedRoots(findCartan(sl2r, "compact"));
  CHECK(none.compactCartan);
  CHECK(none.restricted.empty());
}

TEST_CASE("restricted roots of split su(2,1) form a BC1 system") {
  const GroupPreset su21 = makePreset("su21");
  const RestrictedRootSystem restricted = restrictedRoots(findCartan(su21, "split"));
  const Weight half{Rat(0), Rat(1, 2)};
  const Weight full{Rat(0), Rat(1)};
  CHECK(restricted.positive == std::vector<Weight>{half, full});
  CHECK(restricted.multiplicity.at(half) == 2);
  CHECK(restricted.multiplicity.at(full) == 1);
  CHECK(restricted.rhoA == full);
  CHECK(restricted.restricted.size() == 4);
}

TEST_CASE("merged positive systems are the unique compatible Weyl translate") {
  const GroupPreset su21 = makePreset("su21");
  const CartanClass& split = findCartan(su21, "split");
  const RestrictedRootSystem restricted = restrictedRoots(split);
  const std::vector<Root> merged = mergePositiveSystems(split, restricted.positive, {});
  CHECK(merged.size() == 3);

  // oracle: enumerate every Weyl translate of the standard positive system
  // and keep the ones whose a-projections land in the chosen positive cone
  const std::set<Weight> plusCone(restricted.positive.begin(), restricted.positive.end());
  const WeylGroup weyl = weylGroup(*su21.datum);
  std::vector<std::set<Root>> compatible;
  for (const IntMat& w : weyl.elements) {
    std::set<Root> image;
    bool good = true;
    for (const Root& r : su21.datum->positive) {
      const Root s = applyMat(w, r);
      image.insert(s);
      if (!plusCone.count(split.projA(s))) good = false;
    }
    if (good) compatible.push_back(std::move(image));
  }
  REQUIRE(compatible.size() == 1);
  CHECK(std::set<Root>(merged.begin(), merged.end()) == compatible.front());

  // incomplete or non-closed inputs are rejected
  CHECK_THROWS_WITH_AS(mergePositiveSystems(split, {Weight{Rat(0), Rat(1, 2)}}, {}),
                       "no compatible positive system", DomainError);
  CHECK_THROWS_WITH_AS(
      mergePositiveSystems(split, {Weight{Rat(0), Rat(1, 2)}, Weight{Rat(0), Rat(-1)}}, {}),
      "no compatible positive system", DomainError);
  // the imaginary half must be a half-system too
  const CartanClass& compact = findCartan(su21, "compact");
  CHECK_THROWS_WITH_AS(mergePositiveSystems(compact, {}, {Root{1, 0}}),
                       "no compatible positive system", DomainError);
  CHECK(mergePositiveSystems(compact, {}, compact.positiveImaginary()) ==
        su21.datum->positive);
}

TEST_CASE("cuspidal parabolic bookkeeping") {
  const GroupPreset sl2r = makePreset("sl2r");
  const CartanClass& split = findCartan(sl2r, "split");
  const CuspidalParabolic parabolic =
      cuspidalParabolic(split, restrictedRoots(split).positive);
  CHECK(parabolic.aDim == 1);
  CHECK(parabolic.mRoots.empty());
  CHECK(parabolic.nRoots == std::vector<Root>{Root{-1}});
  CHECK(parabolic.modularExponent == Weight{Rat(1)});

  // the modular exponent is minus the a-projection sum over the nilradical
  for (const std::string& id : presetIds()) {
    const GroupPreset preset = makePreset(id);
    for (const CartanClass& cartan : preset.cartans) {
      const RestrictedRootSystem restricted = restrictedRoots(cartan);
      const CuspidalParabolic p = cuspidalParabolic(cartan, restricted.positive);
      Weight sum(static_cast<std::size_t>(preset.datum->rank), Rat(0));
      for (const Root& r : p.nRoots) sum = addWeights(sum, cartan.projA(r));
      CHECK(sum == negated(p.modularExponent));
      CHECK(p.modularExponent == scaleWeight(Rat(2), restricted.rhoA));
      // m carries every imaginary root
      for (const Root& im : cartan.imaginaryRoots())
        CHECK(std::count(p.mRoots.begin(), p.mRoots.end(), im) == 1);
    }
  }

  // compact Cartans have no restricted roots to order
  const CartanClass& compact = findCartan(sl2r, "compact");
  CHECK_NOTHROW(cuspidalParabolic(compact, {}));
  CHECK_THROWS_WITH_AS(cuspidalParabolic(compact, {Weight{Rat(1)}}),
                       "no restricted roots for compact Cartan", DomainError);
}
