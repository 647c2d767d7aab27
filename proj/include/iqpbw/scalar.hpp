#pragma once

#include "iqpbw/gaussian.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace iqpbw {

/// Coefficient rings recognized by the integrality predicate.
///   LaurentQ:  integer Laurent polynomials in q          (q = t^4)
///   LaurentV:  integer Laurent polynomials in v = q^(1/2) (v = t^2)
///   LaurentT:  Gaussian-integer Laurent polynomials in t
enum class CoeffRing { LaurentQ, LaurentV, LaurentT };

/// Element of the field Q(i)(t), where t is a fixed fourth root of q.
/// Stored as a fully reduced fraction num/den of Gaussian-integer
/// polynomials; the denominator's leading coefficient is the canonical
/// associate (Re > 0, Im >= 0) and equality is syntactic.
class Scalar {
 public:
  Scalar() : num_(), den_(GaussInt{1}) {}
  Scalar(std::int64_t n) : num_(GaussInt{n}), den_(GaussInt{1}) {}  // NOLINT
  Scalar(GaussPoly num, GaussPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  static Scalar fromGauss(GaussInt g) { return Scalar(GaussPoly(std::move(g)), GaussPoly(GaussInt{1})); }
  /// i, the imaginary unit.
  static Scalar imaginaryUnit() { return fromGauss(GaussInt{0, 1}); }
  /// t^k for k of either sign.
  static Scalar tPower(std::int64_t k) {
    if (k >= 0)
      return Scalar(GaussPoly::monomial(GaussInt{1}, static_cast<std::size_t>(k)),
                    GaussPoly(GaussInt{1}));
    return Scalar(GaussPoly(GaussInt{1}),
                  GaussPoly::monomial(GaussInt{1}, static_cast<std::size_t>(-k)));
  }
  /// q^k = t^(4k).
  static Scalar qPower(std::int64_t k) { return tPower(4 * k); }
  /// v^k = q^(k/2) = t^(2k).
  static Scalar vPower(std::int64_t k) { return tPower(2 * k); }
  /// Square root of s*t^(2m) for s = +-1: t^m (s=1) or i*t^m (s=-1).
  /// This is the fixed branch sqrt(-q^k) = i t^(2k) extended to even
  /// t-powers; throws when the argument is not +-t^(even).
  static Scalar sqrtSignedTPower(const Scalar& x);

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  const GaussPoly& num() const { return num_; }
  const GaussPoly& den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (b.isZero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.isZero() || b.isZero()) return Scalar{};
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.isZero()) throw std::domain_error("Scalar division by zero");
    if (a.isZero()) return Scalar{};
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const { return Scalar(1) / *this; }
  Scalar pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r{1};
    Scalar base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  /// Membership in the given coefficient ring (see CoeffRing).
  bool isIntegral(CoeffRing ring) const;

  /// Canonical textual form, e.g. "(1+1i)*t^-2/(t^4-1)".
  std::string toString() const;
  /// Inverse of toString (also accepts benign whitespace); bit-exact
  /// round trip on canonical forms.
  static Scalar fromString(const std::string& text);

 private:
  void reduce();

  GaussPoly num_;
  GaussPoly den_;
};

inline void Scalar::reduce() {
  if (den_.isZero()) throw std::domain_error("Scalar with zero denominator");
  if (num_.isZero()) {
    den_ = GaussPoly(GaussInt{1});
    return;
  }
  GaussPoly g = GaussPoly::gcd(num_, den_);
  if (!g.isOne()) {
    num_ = GaussPoly::divExact(num_, g);
    den_ = GaussPoly::divExact(den_, g);
  }
  GaussInt shared = gaussGcd(num_.content(), den_.content());
  if (!shared.isOne()) {
    num_ = GaussPoly::divExact(num_, GaussPoly(shared));
    den_ = GaussPoly::divExact(den_, GaussPoly(shared));
  }
  GaussInt u = gaussCanonicalUnit(den_.leading());
  if (!u.isOne()) {
    num_ = u * num_;
    den_ = u * den_;
  }
}

inline Scalar Scalar::sqrtSignedTPower(const Scalar& x) {
  if (x.isZero()) return x;
  if (!x.num_.isMonomial() || !x.den_.isMonomial())
    throw std::domain_error("sqrtSignedTPower: not a signed power of t");
  GaussInt c = x.num_.leading();
  if (!x.den_.leading().isOne())
    throw std::domain_error("sqrtSignedTPower: not a signed power of t");
  auto e = static_cast<std::int64_t>(x.num_.degree()) -
           static_cast<std::int64_t>(x.den_.degree());
  if (e % 2 != 0) throw std::domain_error("sqrtSignedTPower: odd t-power");
  if (c.isOne()) return tPower(e / 2);
  if (c == GaussInt{-1}) return imaginaryUnit() * tPower(e / 2);
  throw std::domain_error("sqrtSignedTPower: coefficient is not +-1");
}

inline bool Scalar::isIntegral(CoeffRing ring) const {
  if (isZero()) return true;
  if (!den_.isMonomial() || !den_.leading().isOne()) return false;
  if (ring == CoeffRing::LaurentT) return true;
  std::size_t shift = den_.degree();
  int mod = ring == CoeffRing::LaurentQ ? 4 : 2;
  for (std::size_t k = 0; k < num_.coeffs().size(); ++k) {
    const GaussInt& c = num_.coeffs()[k];
    if (c.isZero()) continue;
    if (c.im != 0) return false;
    auto e = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(shift);
    if (((e % mod) + mod) % mod != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

namespace detail {

inline void printGaussCoeff(std::ostringstream& os, const GaussInt& c, bool needsTimes) {
  bool mixed = c.re != 0 && c.im != 0;
  if (mixed) {
    os << '(' << c.re.str() << (c.im > 0 ? "+" : "-") << BigInt(abs(c.im)).str() << "i)";
  } else if (c.im != 0) {
    os << c.im.str() << 'i';
  } else {
    os << c.re.str();
  }
  if (needsTimes) os << '*';
}

/// Laurent polynomial num * t^(-shift), highest exponent first.
inline std::string printLaurent(const GaussPoly& num, std::int64_t shift) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = num.coeffs().size(); k-- > 0;) {
    GaussInt c = num.coeffs()[k];
    if (c.isZero()) continue;
    bool negLead = c.im != 0 ? (c.re == 0 && c.im < 0) : c.re < 0;
    if (!first)
      os << (negLead ? "-" : "+");
    else if (negLead)
      os << '-';
    if (negLead) c = -c;
    first = false;
    std::ostringstream term;
    auto e = static_cast<std::int64_t>(k) - shift;
    if (e == 0) {
      printGaussCoeff(term, c, false);
    } else {
      if (!c.isOne()) printGaussCoeff(term, c, true);
      term << 't';
      if (e != 1) term << '^' << e;
    }
    os << term.str();
  }
  if (first) os << '0';
  return os.str();
}

inline bool laurentHasMultipleTerms(const GaussPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (!c.isZero() && ++n > 1) return true;
  return false;
}

}  // namespace detail

inline std::string Scalar::toString() const {
  if (isZero()) return "0";
  std::size_t val = den_.valuation();
  GaussPoly denCore = den_.unshifted(val);
  std::string numStr = detail::printLaurent(num_, static_cast<std::int64_t>(val));
  if (denCore.isOne()) return numStr;
  std::ostringstream os;
  if (detail::laurentHasMultipleTerms(num_))
    os << '(' << numStr << ')';
  else
    os << numStr;
  os << "/(" << detail::printLaurent(denCore, 0) << ')';
  return os.str();
}

namespace detail {

struct ScalarParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ScalarParser(const std::string& text) : s(text) {}

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("Scalar parse error at position " + std::to_string(pos) +
                                ": " + what);
  }

  BigInt parseUInt() {
    skipWs();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected digits");
    BigInt x = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      x = x * 10 + (s[pos] - '0');
      ++pos;
    }
    return x;
  }
  std::int64_t parseInt() {
    skipWs();
    bool neg = eat('-');
    if (!neg) eat('+');
    BigInt x = parseUInt();
    if (neg) x = -x;
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
      fail("exponent out of range");
    return static_cast<std::int64_t>(x);
  }

  /// Term := Coeff ["*" TPart] | ["-"] TPart ;  TPart := "t" ["^" Int]
  /// Coeff := Int ["i"] | "(" Int [("+"|"-") [UInt] "i"] ")" | ["-"] "i"
  Scalar parseTerm() {
    skipWs();
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      if (eat('-'))
        neg = !neg;
      else
        eat('+');
    }
    GaussInt coeff{1};
    bool haveCoeff = false;
    if (peek() == '(') {
      eat('(');
      BigInt re = 0;
      bool negRe = eat('-');
      if (!negRe) eat('+');
      re = parseUInt();
      if (negRe) re = -re;
      skipWs();
      if (eat('i')) {
        coeff = GaussInt{0, re};
      } else {
        bool negIm = false;
        if (eat('-'))
          negIm = true;
        else if (!eat('+'))
          fail("expected '+' or '-' in complex coefficient");
        BigInt im = 1;
        skipWs();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) im = parseUInt();
        if (!eat('i')) fail("expected 'i'");
        coeff = GaussInt{re, negIm ? -im : im};
      }
      if (!eat(')')) fail("expected ')'");
      haveCoeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt x = parseUInt();
      skipWs();
      if (eat('i'))
        coeff = GaussInt{0, x};
      else
        coeff = GaussInt{x, 0};
      haveCoeff = true;
    } else if (peek() == 'i') {
      eat('i');
      coeff = GaussInt{0, 1};
      haveCoeff = true;
    }
    std::int64_t exp = 0;
    bool haveT = false;
    if (haveCoeff) {
      std::size_t save = pos;
      if (eat('*')) {
        if (peek() == 't') {
          haveT = true;
        } else {
          pos = save;
        }
      } else if (peek() == 't') {
        haveT = true;  // tolerate missing '*'
      }
    } else if (peek() == 't') {
      haveT = true;
    } else {
      fail("expected coefficient or t");
    }
    if (haveT) {
      if (!eat('t')) fail("expected 't'");
      exp = eat('^') ? parseInt() : 1;
    }
    if (neg) coeff = -coeff;
    return Scalar::fromGauss(coeff) * Scalar::tPower(exp);
  }

  /// Sum := Term (("+"|"-") Term)*  — the sign is consumed by parseTerm.
  Scalar parseSum(char stopChar) {
    Scalar acc = parseTerm();
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        acc += parseTerm();
      } else if (c == '\0' || c == stopChar || c == '/') {
        return acc;
      } else {
        fail("unexpected character");
      }
    }
  }

  Scalar parse() {
    skipWs();
    Scalar numPart;
    if (peek() == '(') {
      // Either a parenthesized numerator or a complex coefficient; try the
      // coefficient interpretation first via parseSum on the full text.
      std::size_t save = pos;
      eat('(');
      Scalar inner = parseSum(')');
      if (!eat(')')) fail("expected ')'");
      skipWs();
      if (peek() == '/' || peek() == '\0') {
        numPart = inner;
      } else {
        pos = save;
        numPart = parseSum('\0');
      }
    } else {
      numPart = parseSum('\0');
    }
    if (eat('/')) {
      if (!eat('(')) fail("expected '(' after '/'");
      Scalar denPart = parseSum(')');
      if (!eat(')')) fail("expected ')'");
      numPart /= denPart;
    }
    skipWs();
    if (pos != s.size()) fail("trailing characters");
    return numPart;
  }
};

}  // namespace detail

inline Scalar Scalar::fromString(const std::string& text) {
  detail::ScalarParser p(text);
  return p.parse();
}

// ---------------------------------------------------------------------------
// q-combinatorics. The base exponent parameter e means the bracket base is
// q^e (so e = 1 for [n]_q, e = 2 for brackets in q^2, etc.).
// ---------------------------------------------------------------------------

/// Balanced q-integer [n] = (q^en - q^-en)/(q^e - q^-e); [-n] = -[n].
inline Scalar qInt(std::int64_t n, std::int64_t e = 1) {
  if (n < 0) return -qInt(-n, e);
  Scalar r{};
  for (std::int64_t k = 0; k < n; ++k) r += Scalar::qPower(e * (n - 1 - 2 * k));
  return r;
}

/// [n]! with bracket base q^e.
inline Scalar qFactorial(std::int64_t n, std::int64_t e = 1) {
  if (n < 0) throw std::domain_error("qFactorial of negative argument");
  Scalar r{1};
  for (std::int64_t k = 2; k <= n; ++k) r *= qInt(k, e);
  return r;
}

/// Balanced q-binomial [n choose k] = [n][n-1]...[n-k+1]/[k]!; n may be
/// negative; k < 0 yields 0.
inline Scalar qBinom(std::int64_t n, std::int64_t k, std::int64_t e = 1) {
  if (k < 0) return Scalar{};
  Scalar r{1};
  for (std::int64_t j = 1; j <= k; ++j) r *= qInt(n - j + 1, e) / qInt(j, e);
  return r;
}

}  // namespace iqpbw
