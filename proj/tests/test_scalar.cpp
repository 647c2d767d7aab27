#include "iqpbw/scalar.hpp"

#include "catch_amalgamated.hpp"

#include <random>

using namespace iqpbw;

namespace {

Scalar q(std::int64_t k = 1) { return Scalar::qPower(k); }
Scalar t(std::int64_t k = 1) { return Scalar::tPower(k); }

Scalar randomScalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 5), len(1, 3);
  auto poly = [&](bool nonzero) {
    Scalar p{};
    int n = len(rng);
    for (int k = 0; k < n; ++k)
      p += (Scalar(coeff(rng)) + Scalar::imaginaryUnit() * Scalar(coeff(rng))) * t(expo(rng));
    if (nonzero && p.isZero()) p = Scalar(1) + t(expo(rng));
    return p;
  };
  return poly(false) / poly(true);
}

}  // namespace

TEST_CASE("gaussian integer euclidean structure", "[scalar]") {
  GaussInt a{BigInt(7), BigInt(3)}, b{BigInt(2), BigInt(-1)};
  GaussInt qq = gaussRoundDiv(a, b);
  GaussInt r = a - qq * b;
  REQUIRE(r.norm() * 2 <= b.norm());

  // gcd(2, 1+i): 1+i divides 2 = -i (1+i)^2, so gcd is the canonical
  // associate of 1+i.
  GaussInt g = gaussGcd(GaussInt{2}, GaussInt{BigInt(1), BigInt(1)});
  REQUIRE(g == GaussInt(BigInt(1), BigInt(1)));

  REQUIRE(gaussCanonicalUnit(GaussInt{BigInt(0), BigInt(-3)}) == GaussInt(BigInt(0), BigInt(1)));
  REQUIRE(gaussCanonicalUnit(GaussInt{BigInt(-2), BigInt(5)}) == GaussInt(BigInt(0), BigInt(-1)));
}

TEST_CASE("polynomial gcd and exact division", "[scalar]") {
  // t^4 - 1 and t^2 - 1 share exactly t^2 - 1.
  GaussPoly a({GaussInt{-1}, GaussInt{0}, GaussInt{0}, GaussInt{0}, GaussInt{1}});
  GaussPoly b({GaussInt{-1}, GaussInt{0}, GaussInt{1}});
  GaussPoly g = GaussPoly::gcd(a, b);
  REQUIRE(g == b);
  GaussPoly quotient = GaussPoly::divExact(a, b);
  GaussPoly expect({GaussInt{1}, GaussInt{0}, GaussInt{1}});
  REQUIRE(quotient == expect);
}

TEST_CASE("scalar canonical form", "[scalar]") {
  // (t^4-1)/(t^2-1) reduces to t^2+1 over 1.
  Scalar x = (q() - Scalar(1)) / (Scalar::vPower(1) - Scalar(1));
  REQUIRE(x == Scalar::vPower(1) + Scalar(1));

  // 1/(i t^2) has canonical form -i t^-2: denominator becomes exactly t^2.
  Scalar y = Scalar(1) / (Scalar::imaginaryUnit() * t(2));
  REQUIRE(y == -Scalar::imaginaryUnit() * t(-2));
  REQUIRE(y.den() == GaussPoly::monomial(GaussInt{1}, 2));

  // Field axioms on random samples.
  std::mt19937 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    Scalar u = randomScalar(rng), v = randomScalar(rng), w = randomScalar(rng);
    REQUIRE((u + v) * w == u * w + v * w);
    REQUIRE((u * v) * w == u * (v * w));
    REQUIRE(u - u == Scalar{});
    if (!v.isZero()) REQUIRE(u / v * v == u);
  }
}

TEST_CASE("q-integers and binomials", "[scalar]") {
  REQUIRE(qInt(2) == q() + q(-1));
  REQUIRE(qInt(3, 2) == q(4) + Scalar(1) + q(-4));
  REQUIRE(qInt(-3) == -qInt(3));
  REQUIRE(qBinom(4, 2) == q(4) + q(2) + Scalar(2) + q(-2) + q(-4));
  REQUIRE(qBinom(2, 1, 2) == q(2) + q(-2));
  REQUIRE(qBinom(-1, 2) == Scalar(1));
  REQUIRE(qBinom(-1, 1) == Scalar(-1));
  REQUIRE(qBinom(3, 5) == Scalar{});

  for (std::int64_t m = 0; m <= 8; ++m) {
    // Pascal identity [n choose k] = q^k [n-1 choose k] + q^(k-n) [n-1 choose k-1].
    for (std::int64_t k = 1; k <= m; ++k)
      REQUIRE(qBinom(m, k) ==
              q(k) * qBinom(m - 1, k) + q(k - m) * qBinom(m - 1, k - 1));
    // Factorials divide products of consecutive q-integers.
    Scalar run{1};
    for (std::int64_t j = 1; j <= m; ++j) run *= qInt(4 + j);
    REQUIRE((run / qFactorial(m)).isIntegral(CoeffRing::LaurentQ));
  }
}

TEST_CASE("ring membership", "[scalar]") {
  REQUIRE(qInt(5).isIntegral(CoeffRing::LaurentQ));
  REQUIRE(qBinom(6, 3).isIntegral(CoeffRing::LaurentQ));
  REQUIRE((qInt(2).inverse()).isIntegral(CoeffRing::LaurentQ) == false);
  REQUIRE((q() - q(-1)).inverse().isIntegral(CoeffRing::LaurentT) == false);

  Scalar v = Scalar::vPower(1);
  REQUIRE(v.isIntegral(CoeffRing::LaurentV));
  REQUIRE(v.isIntegral(CoeffRing::LaurentQ) == false);
  REQUIRE(v.isIntegral(CoeffRing::LaurentT));

  Scalar it = Scalar::imaginaryUnit() * t(1);
  REQUIRE(it.isIntegral(CoeffRing::LaurentT));
  REQUIRE(it.isIntegral(CoeffRing::LaurentV) == false);
  REQUIRE(it.isIntegral(CoeffRing::LaurentQ) == false);

  REQUIRE(t(-2).isIntegral(CoeffRing::LaurentV));
  REQUIRE(t(-2).isIntegral(CoeffRing::LaurentQ) == false);
  REQUIRE(Scalar(-7).isIntegral(CoeffRing::LaurentQ));
}

TEST_CASE("square-root branch", "[scalar]") {
  // sqrt(-q^k) = i t^(2k).
  REQUIRE(Scalar::sqrtSignedTPower(-q(1)) == Scalar::imaginaryUnit() * t(2));
  REQUIRE(Scalar::sqrtSignedTPower(-q(-2)) == Scalar::imaginaryUnit() * t(-4));
  REQUIRE(Scalar::sqrtSignedTPower(q(3)) == t(6));
  REQUIRE(Scalar::sqrtSignedTPower(-Scalar::vPower(1)) == Scalar::imaginaryUnit() * t(1));
  Scalar s = Scalar::sqrtSignedTPower(-q(1));
  REQUIRE(s * s == -q(1));
  REQUIRE_THROWS(Scalar::sqrtSignedTPower(t(3)));
  REQUIRE_THROWS(Scalar::sqrtSignedTPower(Scalar(2)));
}

TEST_CASE("serialization round trip", "[scalar]") {
  REQUIRE(qInt(2).toString() == "t^4+t^-4");
  Scalar x = (Scalar(1) + Scalar::imaginaryUnit()) * t(-2) / (q() - Scalar(1));
  REQUIRE(Scalar::fromString(x.toString()) == x);
  REQUIRE(Scalar::fromString("(1+1i)*t^-2/(t^4-1)") == x);

  std::mt19937 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    Scalar u = randomScalar(rng);
    Scalar back = Scalar::fromString(u.toString());
    REQUIRE(back == u);
    REQUIRE(back.toString() == u.toString());
  }
  REQUIRE(Scalar::fromString("0") == Scalar{});
  REQUIRE(Scalar::fromString("-t") == -t(1));
  REQUIRE(Scalar::fromString("3i") == Scalar::imaginaryUnit() * Scalar(3));
  REQUIRE_THROWS(Scalar::fromString("t^"));
  REQUIRE_THROWS(Scalar::fromString("1 + "));
}
