#include "catch_amalgamated.hpp"

#include "iqpbw/cartan.hpp"
#include "iqpbw/satake.hpp"

using namespace iqpbw;

namespace {

RootVec rv(IntVec v) { return RootVec{std::move(v)}; }
WeightVec wv(IntVec v) { return WeightVec{std::move(v)}; }

Scalar minusQPow(int k) { return Scalar(-1) * Scalar::qPower(k); }

}  // namespace

TEST_CASE("positive roots of small systems", "[rootdata]") {
  RootSystem a2(CartanDatum::typeA(2));
  REQUIRE(a2.positiveRoots().size() == 3);
  RootSystem a3(CartanDatum::typeA(3));
  REQUIRE(a3.positiveRoots().size() == 6);
  RootSystem b2(CartanDatum::typeB(2));
  REQUIRE(b2.positiveRoots() ==
          std::vector<RootVec>{rv({0, 1}), rv({1, 0}), rv({1, 1}), rv({1, 2})});
  RootSystem c3(CartanDatum::typeC(3));
  REQUIRE(c3.positiveRoots().size() == 9);
  RootSystem d4(CartanDatum::typeD(4));
  REQUIRE(d4.positiveRoots().size() == 12);
  RootSystem f4(CartanDatum::typeF4());
  REQUIRE(f4.positiveRoots().size() == 24);
  RootSystem g2(CartanDatum::typeG2());
  REQUIRE(g2.positiveRoots().size() == 6);
  RootSystem a1a1(CartanDatum::productA1A1());
  REQUIRE(a1a1.positiveRoots().size() == 2);

  // Highest root sanity: F4 highest root is 2a1+3a2+4a3+2a4.
  REQUIRE(f4.isPositiveRoot(rv({2, 3, 4, 2})));
  REQUIRE_FALSE(f4.isPositiveRoot(rv({2, 3, 4, 3})));
}

TEST_CASE("inversion sets and longest elements", "[rootdata]") {
  RootSystem b2(CartanDatum::typeB(2));
  auto betas = b2.inversionSet({0, 1, 0});
  REQUIRE(betas == std::vector<RootVec>{rv({1, 0}), rv({1, 1}), rv({1, 2})});
  REQUIRE_THROWS(b2.inversionSet({0, 0}));

  WeylElt w0b2 = b2.longestElement({0, 1});
  REQUIRE(b2.length(w0b2) == 4);
  // B2 longest element acts as -1.
  REQUIRE(w0b2.apply(rv({1, 0})) == rv({-1, 0}));
  REQUIRE(w0b2.apply(rv({0, 1})) == rv({0, -1}));

  RootSystem a3(CartanDatum::typeA(3));
  WeylElt w0a3 = a3.longestElement({0, 1, 2});
  REQUIRE(a3.length(w0a3) == 6);
  REQUIRE(w0a3.apply(rv({1, 0, 0})) == rv({0, 0, -1}));
  REQUIRE(w0a3.reducedWord(a3.datum()).size() == 6);

  // Parabolic longest inside A3 on the outer nodes.
  REQUIRE(a3.longestWord({0, 2}) == IntVec{0, 2});

  // Inverse and composition consistency.
  WeylElt s0 = WeylElt::simple(a3.datum(), 0);
  WeylElt s1 = WeylElt::simple(a3.datum(), 1);
  REQUIRE((s0 * s1).inverse() == s1 * s0);
  REQUIRE((s0 * s0).isIdentity());

  // Weight-side action: s_0 fixes the second fundamental weight of A2.
  CartanDatum a2 = CartanDatum::typeA(2);
  WeylElt r0 = WeylElt::simple(a2, 0);
  REQUIRE(r0.apply(wv({0, 1})) == wv({0, 1}));
  REQUIRE(r0.apply(wv({1, 0})) == wv({-1, 1}));
  REQUIRE(a2.toWeight(rv({1, 0})) == wv({2, -1}));
}

TEST_CASE("Kostant partition counts", "[rootdata]") {
  RootSystem a2(CartanDatum::typeA(2));
  REQUIRE(a2.kostantPartitions(rv({1, 1})) == 2);
  REQUIRE(a2.kostantPartitions(rv({2, 2})) == 3);
  REQUIRE(a2.kostantPartitions(rv({2, 1})) == 2);
  REQUIRE(a2.kostantPartitions(rv({0, 0})) == 1);
  REQUIRE(a2.kostantPartitions(rv({-1, 0})) == 0);
  RootSystem b2(CartanDatum::typeB(2));
  REQUIRE(b2.kostantPartitions(rv({1, 2})) == 3);
  REQUIRE(b2.kostantPartitions(rv({1, 1})) == 2);
  REQUIRE(b2.kostantPartitions(rv({2, 2})) == 4);
}

TEST_CASE("admissibility violations are rejected", "[rootdata]") {
  IntVec id2{0, 1}, id3{0, 1, 2}, id4{0, 1, 2, 3};
  // Odd pairing of a fixed white node with the black half-sum.
  REQUIRE_THROWS_AS(SatakeDiagram(CartanDatum::typeA(2), {0}, id2), SatakeError);
  // Black set not stable under the involution.
  REQUIRE_THROWS_AS(SatakeDiagram(CartanDatum::typeA(2), {0}, IntVec{1, 0}), SatakeError);
  // Not a diagram automorphism (B2 has no symmetry).
  REQUIRE_THROWS_AS(SatakeDiagram(CartanDatum::typeB(2), {}, IntVec{1, 0}), SatakeError);
  // Black longest element induces the fork swap, so tau=id must fail.
  REQUIRE_THROWS_AS(SatakeDiagram(CartanDatum::typeD(4), {1, 2, 3}, id4), SatakeError);
  // Adjacent black pair in A3 forces tau to swap them.
  REQUIRE_THROWS_AS(SatakeDiagram(CartanDatum::typeA(3), {0, 1}, id3), SatakeError);
  // Involution that is not even an involution.
  REQUIRE_THROWS_AS(SatakeDiagram(CartanDatum::typeA(3), {}, IntVec{1, 2, 0}), SatakeError);
  // All builtins construct without error.
  for (const auto& name : builtinDiagramNames()) REQUIRE_NOTHROW(makeBuiltinDiagram(name));
  REQUIRE_THROWS_AS(makeBuiltinDiagram("nosuch"), std::invalid_argument);
}

TEST_CASE("rank-one classification of builtin diagrams", "[rootdata]") {
  auto familyOf = [](const std::string& name, int rep) {
    return makeBuiltinDiagram(name).rankOne(rep).family;
  };
  REQUIRE(familyOf("AI1", 0) == RankOneFamily::AI1);
  REQUIRE(familyOf("AII3", 1) == RankOneFamily::AII3);
  REQUIRE(familyOf("AIII11", 0) == RankOneFamily::AIII11);
  REQUIRE(familyOf("AIV2", 0) == RankOneFamily::AIV);
  REQUIRE(familyOf("AIV3", 0) == RankOneFamily::AIV);
  REQUIRE(familyOf("BII2", 0) == RankOneFamily::BII);
  REQUIRE(familyOf("CII3", 1) == RankOneFamily::CII);
  REQUIRE(familyOf("DII4", 0) == RankOneFamily::DII);
  REQUIRE(familyOf("FII4", 3) == RankOneFamily::FII);
  REQUIRE(familyOf("splitA2", 0) == RankOneFamily::AI1);
  REQUIRE(familyOf("splitA2", 1) == RankOneFamily::AI1);
  REQUIRE(familyOf("qsA3", 0) == RankOneFamily::AIII11);
  REQUIRE(familyOf("qsA3", 1) == RankOneFamily::AI1);

  SatakeDiagram aiv3 = makeBuiltinDiagram("AIV3");
  REQUIRE(aiv3.whiteReps() == IntVec{0});
  REQUIRE(aiv3.rankOne(0).nodes == IntVec{0, 1, 2});
  SatakeDiagram cii3 = makeBuiltinDiagram("CII3");
  REQUIRE(cii3.whiteReps() == IntVec{1});
  REQUIRE(cii3.rankOne(1).nodes == IntVec{0, 1, 2});
}

TEST_CASE("relative reflection words match the tabulated expressions", "[rootdata]") {
  REQUIRE(makeBuiltinDiagram("AI1").bsWord(0) == IntVec{0});
  REQUIRE(makeBuiltinDiagram("AII3").bsWord(1) == IntVec{1, 0, 2, 1});
  REQUIRE(makeBuiltinDiagram("AIII11").bsWord(0) == IntVec{0, 1});
  REQUIRE(makeBuiltinDiagram("AIV2").bsWord(0) == IntVec{0, 1, 0});
  REQUIRE(makeBuiltinDiagram("AIV3").bsWord(0) == IntVec{0, 1, 2, 1, 0});
  REQUIRE(makeBuiltinDiagram("BII2").bsWord(0) == IntVec{0, 1, 0});
  REQUIRE(makeBuiltinDiagram("CII3").bsWord(1) == IntVec{1, 2, 1, 0, 1, 2, 1});
  REQUIRE(makeBuiltinDiagram("DII4").bsWord(0) == IntVec{0, 1, 2, 3, 1, 0});
  REQUIRE(makeBuiltinDiagram("FII4").bsWord(3) ==
          IntVec{3, 2, 1, 2, 0, 1, 2, 3, 2, 1, 2, 0, 1, 2, 3});
  REQUIRE(makeBuiltinDiagram("qsA3").bsWord(0) == IntVec{0, 2});
  REQUIRE(makeBuiltinDiagram("qsA3").bsWord(1) == IntVec{1});

  // The word must multiply to (local longest) * (black longest).
  for (const auto& name : builtinDiagramNames()) {
    SatakeDiagram d = makeBuiltinDiagram(name);
    for (int rep : d.whiteReps()) {
      WeylElt expect = d.localLongest(rep) * d.blackLongest();
      REQUIRE(WeylElt::fromWord(d.datum(), d.bsWord(rep)) == expect);
      REQUIRE((d.bs(rep) * d.bs(rep)).isIdentity());
    }
  }
}

TEST_CASE("restricted positive roots in word order", "[rootdata]") {
  SatakeDiagram aii3 = makeBuiltinDiagram("AII3");
  auto dec = aii3.decomposePositiveRoots();
  REQUIRE(dec.restricted == std::vector<RootVec>{rv({0, 1, 0}), rv({1, 1, 0}),
                                                 rv({0, 1, 1}), rv({1, 1, 1})});
  REQUIRE(dec.black.size() == 2);
  REQUIRE((dec.black[0] == rv({0, 0, 1}) || dec.black[0] == rv({1, 0, 0})));

  SatakeDiagram aiv3 = makeBuiltinDiagram("AIV3");
  REQUIRE(aiv3.bsInversionSet(0) ==
          std::vector<RootVec>{rv({1, 0, 0}), rv({1, 1, 0}), rv({1, 1, 1}),
                               rv({0, 0, 1}), rv({0, 1, 1})});

  SatakeDiagram bii2 = makeBuiltinDiagram("BII2");
  REQUIRE(bii2.bsInversionSet(0) ==
          std::vector<RootVec>{rv({1, 0}), rv({1, 1}), rv({1, 2})});

  SatakeDiagram cii3 = makeBuiltinDiagram("CII3");
  REQUIRE(cii3.bsInversionSet(1) ==
          std::vector<RootVec>{rv({0, 1, 0}), rv({0, 2, 1}), rv({0, 1, 1}),
                               rv({1, 2, 1}), rv({1, 1, 0}), rv({2, 2, 1}),
                               rv({1, 1, 1})});

  SatakeDiagram dii4 = makeBuiltinDiagram("DII4");
  REQUIRE(dii4.bsInversionSet(0) ==
          std::vector<RootVec>{rv({1, 0, 0, 0}), rv({1, 1, 0, 0}), rv({1, 1, 1, 0}),
                               rv({1, 1, 0, 1}), rv({1, 1, 1, 1}), rv({1, 2, 1, 1})});

  SatakeDiagram fii = makeBuiltinDiagram("FII4");
  REQUIRE(fii.bsInversionSet(3) ==
          std::vector<RootVec>{rv({0, 0, 0, 1}), rv({0, 0, 1, 1}), rv({0, 1, 2, 2}),
                               rv({0, 1, 1, 1}), rv({1, 1, 2, 2}), rv({1, 2, 2, 2}),
                               rv({1, 1, 1, 1}), rv({1, 2, 3, 2}), rv({0, 1, 2, 1}),
                               rv({1, 2, 4, 2}), rv({1, 1, 2, 1}), rv({1, 3, 4, 2}),
                               rv({2, 3, 4, 2}), rv({1, 2, 2, 1}), rv({1, 2, 3, 1})});
}

TEST_CASE("relative longest element and full longest word", "[rootdata]") {
  REQUIRE(makeBuiltinDiagram("AI1").relativeWord() == IntVec{0});
  REQUIRE(makeBuiltinDiagram("AII3").relativeWord() == IntVec{1});
  REQUIRE(makeBuiltinDiagram("AIII11").relativeWord() == IntVec{0});
  REQUIRE(makeBuiltinDiagram("AIV2").relativeWord() == IntVec{0});
  REQUIRE(makeBuiltinDiagram("CII3").relativeWord() == IntVec{1});
  REQUIRE(makeBuiltinDiagram("DII4").relativeWord() == IntVec{0});
  REQUIRE(makeBuiltinDiagram("FII4").relativeWord() == IntVec{3});
  REQUIRE(makeBuiltinDiagram("splitA2").relativeWord() == IntVec{0, 1, 0});
  REQUIRE(makeBuiltinDiagram("qsA3").relativeWord() == IntVec{0, 1, 0, 1});

  for (const auto& name : builtinDiagramNames()) {
    SatakeDiagram d = makeBuiltinDiagram(name);
    // Concatenated word is reduced of full length and splits R+ into the
    // restricted part and the black part.
    REQUIRE(d.w0Word().size() == d.roots().positiveRoots().size());
    auto dec = d.decomposePositiveRoots();
    REQUIRE(dec.restricted.size() + dec.black.size() == d.roots().positiveRoots().size());
    WeylElt prod = WeylElt::identity(d.datum());
    int totalLen = 0;
    for (int rep : d.relativeWord()) {
      prod = prod * d.bs(rep);
      totalLen += static_cast<int>(d.bsWord(rep).size());
    }
    REQUIRE(prod == d.longest() * d.blackLongest());
    REQUIRE(totalLen == d.relativeLetterCount());
    // theta maps restricted positives to negatives and permutes black ones.
    for (const auto& beta : dec.restricted)
      REQUIRE_FALSE(d.thetaRoot(beta).isNonnegative());
    for (const auto& beta : dec.black) REQUIRE(d.thetaRoot(beta).isPositive());
    // theta is an involution.
    for (const auto& beta : d.roots().positiveRoots())
      REQUIRE(d.thetaRoot(d.thetaRoot(beta)) == beta);
  }
}

TEST_CASE("distinguished parameter values", "[rootdata]") {
  REQUIRE(makeBuiltinDiagram("AI1").sigmaDiamond(0) == minusQPow(-2));
  REQUIRE(makeBuiltinDiagram("AII3").sigmaDiamond(1) == minusQPow(-1));
  REQUIRE(makeBuiltinDiagram("AIII11").sigmaDiamond(0) == minusQPow(-1));
  REQUIRE(makeBuiltinDiagram("AIV2").sigmaDiamond(0) ==
          Scalar(-1) * Scalar::tPower(-2));
  REQUIRE(makeBuiltinDiagram("AIV3").sigmaDiamond(0) ==
          Scalar(-1) * Scalar::tPower(-2));
  REQUIRE(makeBuiltinDiagram("BII2").sigmaDiamond(0) == minusQPow(-2));
  REQUIRE(makeBuiltinDiagram("CII3").sigmaDiamond(1) ==
          Scalar(-1) * Scalar::tPower(-2));
  REQUIRE(makeBuiltinDiagram("DII4").sigmaDiamond(0) == minusQPow(-1));
  REQUIRE(makeBuiltinDiagram("FII4").sigmaDiamond(3) ==
          Scalar(-1) * Scalar::tPower(-2));
  REQUIRE(makeBuiltinDiagram("splitA3").sigmaDiamond(1) == minusQPow(-2));
  REQUIRE(makeBuiltinDiagram("qsA3").sigmaDiamond(0) == minusQPow(-1));
  REQUIRE(makeBuiltinDiagram("qsA3").sigmaDiamond(1) == minusQPow(-2));
  // Black nodes carry the trivial parameter.
  REQUIRE(makeBuiltinDiagram("AII3").sigmaDiamond(0) == Scalar(1));
  // The orbit partner sees the same value.
  SatakeDiagram aiv3 = makeBuiltinDiagram("AIV3");
  REQUIRE(aiv3.sigmaDiamond(2) == aiv3.sigmaDiamond(0));

  REQUIRE(makeBuiltinDiagram("AI1").starParameter(0) == Scalar::qPower(-1));
  REQUIRE(makeBuiltinDiagram("AII3").starParameter(1) == Scalar::qPower(1));
  REQUIRE(makeBuiltinDiagram("AIII11").starParameter(0) == Scalar(1));
  REQUIRE(makeBuiltinDiagram("AIV2").starParameter(0) ==
          Scalar(-1) * Scalar::tPower(2));
  REQUIRE(makeBuiltinDiagram("AIV3").starParameter(0) ==
          Scalar(-1) * Scalar::imaginaryUnit() * Scalar::qPower(1));
  REQUIRE(makeBuiltinDiagram("BII2").starParameter(0) == Scalar::qPower(1));
  REQUIRE(makeBuiltinDiagram("CII3").starParameter(1) == Scalar::qPower(2));
  REQUIRE(makeBuiltinDiagram("DII4").starParameter(0) == Scalar::qPower(2));
  REQUIRE(makeBuiltinDiagram("FII4").starParameter(3) == Scalar::qPower(5));
}

TEST_CASE("involution lattices", "[rootdata]") {
  SatakeDiagram ai1 = makeBuiltinDiagram("AI1");
  REQUIRE(ai1.canonicalXi(wv({5})) == wv({1}));
  REQUIRE(ai1.canonicalXi(wv({-4})) == wv({0}));
  REQUIRE(ai1.xiEqual(wv({3}), wv({1})));
  REQUIRE_FALSE(ai1.xiEqual(wv({2}), wv({1})));
  REQUIRE(ai1.yiotaBasis().empty());

  SatakeDiagram qsa3 = makeBuiltinDiagram("qsA3");
  REQUIRE(qsa3.xiEqual(wv({1, 0, 0}), wv({0, 0, -1})));
  REQUIRE(qsa3.xiEqual(wv({0, 2, 0}), wv({0, 0, 0})));
  REQUIRE_FALSE(qsa3.xiEqual(wv({0, 1, 0}), wv({0, 0, 0})));
  REQUIRE(qsa3.yiotaBasis().size() == 1);
  REQUIRE(qsa3.inYiota({1, 0, -1}));
  REQUIRE_FALSE(qsa3.inYiota({0, 1, 0}));

  SatakeDiagram aii3 = makeBuiltinDiagram("AII3");
  REQUIRE(aii3.yiotaBasis().size() == 2);
  REQUIRE(aii3.inYiota({1, 0, 0}));
  REQUIRE(aii3.inYiota({0, 0, 1}));
  REQUIRE_FALSE(aii3.inYiota({0, 1, 0}));

  // theta on weights squares to the identity and matches the coweight side.
  for (const auto& name : builtinDiagramNames()) {
    SatakeDiagram d = makeBuiltinDiagram(name);
    for (int j = 0; j < d.rank(); ++j) {
      WeightVec e{IntVec(d.rank(), 0)};
      e.v[j] = 1;
      REQUIRE(d.thetaWeight(d.thetaWeight(e)) == e);
      IntVec h(d.rank(), 0);
      h[j] = 1;
      REQUIRE(d.thetaCoweight(d.thetaCoweight(h)) == h);
    }
    for (const auto& mu : d.yiotaBasis()) REQUIRE(d.inYiota(mu));
  }
}
