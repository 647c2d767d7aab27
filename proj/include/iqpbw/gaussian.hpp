#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iqpbw {

using BigInt = boost::multiprecision::cpp_int;

/// Rounded integer quotient: nearest integer to a/b (ties toward zero side are
/// acceptable; the remainder always satisfies |a - q*b| <= |b|/2).
inline BigInt roundDiv(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("roundDiv by zero");
  BigInt q = a / b;
  BigInt r = a - q * b;
  BigInt twice = 2 * abs(r);
  if (twice > abs(b)) {
    bool sameSign = (r > 0) == (b > 0);
    q += sameSign ? 1 : -1;
  }
  return q;
}

/// Gaussian integer re + im*i with arbitrary-precision components.
struct GaussInt {
  BigInt re{0};
  BigInt im{0};

  GaussInt() = default;
  GaussInt(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  bool isZero() const { return re == 0 && im == 0; }
  bool isOne() const { return re == 1 && im == 0; }
  bool isUnit() const { return norm() == 1; }

  GaussInt conj() const { return {re, -im}; }
  BigInt norm() const { return re * re + im * im; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }
};

/// Euclidean division: q = round(a/b) componentwise, guaranteeing
/// norm(a - q*b) <= norm(b)/2.
inline GaussInt gaussRoundDiv(const GaussInt& a, const GaussInt& b) {
  if (b.isZero()) throw std::domain_error("gaussRoundDiv by zero");
  GaussInt num = a * b.conj();
  BigInt n = b.norm();
  return {roundDiv(num.re, n), roundDiv(num.im, n)};
}

/// Exact division; throws if b does not divide a.
inline GaussInt gaussDivExact(const GaussInt& a, const GaussInt& b) {
  if (b.isZero()) throw std::domain_error("gaussDivExact by zero");
  GaussInt num = a * b.conj();
  BigInt n = b.norm();
  if (num.re % n != 0 || num.im % n != 0)
    throw std::domain_error("gaussDivExact: not divisible");
  return {num.re / n, num.im / n};
}

/// The unit u in {1, i, -1, -i} with u*z in the canonical quadrant
/// {Re > 0, Im >= 0}; z must be nonzero.
inline GaussInt gaussCanonicalUnit(const GaussInt& z) {
  if (z.isZero()) throw std::domain_error("gaussCanonicalUnit of zero");
  const GaussInt units[4] = {GaussInt{1}, GaussInt{0, 1}, GaussInt{-1}, GaussInt{0, -1}};
  for (const auto& u : units) {
    GaussInt w = u * z;
    if (w.re > 0 && w.im >= 0) return u;
  }
  throw std::logic_error("gaussCanonicalUnit: no canonical associate");
}

/// gcd normalized to its canonical associate; gcd(0,0) = 0.
inline GaussInt gaussGcd(GaussInt a, GaussInt b) {
  while (!b.isZero()) {
    GaussInt q = gaussRoundDiv(a, b);
    GaussInt r = a - q * b;
    a = b;
    b = r;
  }
  if (a.isZero()) return a;
  return gaussCanonicalUnit(a) * a;
}

/// Dense polynomial over the Gaussian integers; coeffs[k] multiplies t^k.
/// Invariant: no trailing zero coefficient (zero polynomial is empty).
class GaussPoly {
 public:
  GaussPoly() = default;
  GaussPoly(GaussInt constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.isZero()) coeffs_.push_back(std::move(constant));
  }
  explicit GaussPoly(std::vector<GaussInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static GaussPoly monomial(GaussInt c, std::size_t exp) {
    GaussPoly p;
    if (c.isZero()) return p;
    p.coeffs_.assign(exp + 1, GaussInt{});
    p.coeffs_[exp] = std::move(c);
    return p;
  }

  bool isZero() const { return coeffs_.empty(); }
  bool isOne() const { return coeffs_.size() == 1 && coeffs_[0].isOne(); }
  std::size_t degree() const {
    if (isZero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.size() - 1;
  }
  /// Lowest exponent with nonzero coefficient.
  std::size_t valuation() const {
    if (isZero()) throw std::domain_error("valuation of zero polynomial");
    std::size_t v = 0;
    while (coeffs_[v].isZero()) ++v;
    return v;
  }
  bool isMonomial() const { return !isZero() && valuation() == degree(); }

  const GaussInt& operator[](std::size_t k) const {
    static const GaussInt zero{};
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  const GaussInt& leading() const {
    if (isZero()) throw std::domain_error("leading of zero polynomial");
    return coeffs_.back();
  }
  const std::vector<GaussInt>& coeffs() const { return coeffs_; }

  friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) {
    std::vector<GaussInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return GaussPoly(std::move(c));
  }
  friend GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) {
    std::vector<GaussInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return GaussPoly(std::move(c));
  }
  friend GaussPoly operator-(const GaussPoly& a) {
    std::vector<GaussInt> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a.coeffs_[k];
    return GaussPoly(std::move(c));
  }
  friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<GaussInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
      if (a.coeffs_[j].isZero()) continue;
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
        if (b.coeffs_[k].isZero()) continue;
        c[j + k] = c[j + k] + a.coeffs_[j] * b.coeffs_[k];
      }
    }
    return GaussPoly(std::move(c));
  }
  friend GaussPoly operator*(const GaussInt& s, const GaussPoly& a) {
    std::vector<GaussInt> c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.coeffs_[k];
    return GaussPoly(std::move(c));
  }
  friend bool operator==(const GaussPoly& a, const GaussPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const GaussPoly& a, const GaussPoly& b) { return !(a == b); }

  /// Multiply by t^exp.
  GaussPoly shifted(std::size_t exp) const {
    if (isZero() || exp == 0) {
      GaussPoly p = *this;
      return p;
    }
    std::vector<GaussInt> c(coeffs_.size() + exp);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + exp] = coeffs_[k];
    return GaussPoly(std::move(c));
  }
  /// Divide by t^exp exactly (requires valuation >= exp).
  GaussPoly unshifted(std::size_t exp) const {
    if (exp == 0) return *this;
    if (isZero()) return {};
    if (valuation() < exp) throw std::domain_error("unshifted: valuation too small");
    std::vector<GaussInt> c(coeffs_.begin() + static_cast<std::ptrdiff_t>(exp), coeffs_.end());
    return GaussPoly(std::move(c));
  }

  /// gcd of all coefficients, canonically normalized; zero for the zero poly.
  GaussInt content() const {
    GaussInt g{};
    for (const auto& c : coeffs_)
      if (!c.isZero()) g = gaussGcd(g, c);
    return g;
  }

  /// Exact polynomial division; throws when not divisible.
  static GaussPoly divExact(const GaussPoly& a, const GaussPoly& b) {
    if (b.isZero()) throw std::domain_error("poly divExact by zero");
    if (a.isZero()) return {};
    if (a.coeffs_.size() < b.coeffs_.size())
      throw std::domain_error("poly divExact: not divisible");
    std::vector<GaussInt> rem = a.coeffs_;
    std::vector<GaussInt> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
      GaussInt q = gaussDivExact(rem[k + b.degree()], b.leading());
      quot[k] = q;
      if (!q.isZero())
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
          rem[k + j] = rem[k + j] - q * b.coeffs_[j];
    }
    for (const auto& r : rem)
      if (!r.isZero()) throw std::domain_error("poly divExact: nonzero remainder");
    return GaussPoly(std::move(quot));
  }

  /// Primitive part with canonical leading coefficient orientation.
  GaussPoly primitivePart() const {
    if (isZero()) return {};
    GaussInt c = content();
    std::vector<GaussInt> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = gaussDivExact(coeffs_[k], c);
    return GaussPoly(std::move(out));
  }

  /// gcd via primitive pseudo-remainder sequence, returned with content
  /// gcd(content(a), content(b)) and canonical leading unit.
  static GaussPoly gcd(const GaussPoly& a, const GaussPoly& b);

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
  }

  std::vector<GaussInt> coeffs_;
};

namespace detail {

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
inline GaussPoly pseudoRem(GaussPoly a, const GaussPoly& b) {
  std::size_t db = b.degree();
  while (!a.isZero() && a.degree() >= db) {
    std::size_t shift = a.degree() - db;
    GaussInt lead = a.leading();
    a = b.leading() * a - GaussPoly::monomial(lead, shift) * b;
  }
  return a;
}

}  // namespace detail

inline GaussPoly GaussPoly::gcd(const GaussPoly& a, const GaussPoly& b) {
  if (a.isZero() && b.isZero()) return {};
  if (a.isZero()) return gaussCanonicalUnit(b.leading()) * b;
  if (b.isZero()) return gaussCanonicalUnit(a.leading()) * a;

  GaussInt contentGcd = gaussGcd(a.content(), b.content());

  // Fast path: monomial argument.
  if (a.isMonomial() || b.isMonomial()) {
    std::size_t v = std::min(a.valuation(), b.valuation());
    return GaussPoly::monomial(contentGcd, v);
  }

  std::size_t v = std::min(a.valuation(), b.valuation());
  GaussPoly x = a.unshifted(a.valuation()).primitivePart();
  GaussPoly y = b.unshifted(b.valuation()).primitivePart();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.isZero()) {
    GaussPoly r = detail::pseudoRem(x, y);
    x = std::move(y);
    y = r.isZero() ? GaussPoly{} : r.primitivePart();
  }
  GaussPoly prim = gaussCanonicalUnit(x.leading()) * x;
  return GaussPoly::monomial(contentGcd, v) * prim;
}

}  // namespace iqpbw
