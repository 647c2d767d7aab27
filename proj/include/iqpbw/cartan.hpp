#pragma once

#include "iqpbw/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace iqpbw {

using IntVec = std::vector<int>;
using IntMat = std::vector<std::vector<int>>;

/// Vector in simple-root coordinates.
struct RootVec {
  IntVec v;
  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;
  friend RootVec operator+(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] += b.v[k];
    return r;
  }
  friend RootVec operator-(const RootVec& a, const RootVec& b) {
    RootVec r = a;
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] -= b.v[k];
    return r;
  }
  friend RootVec operator-(const RootVec& a) {
    RootVec r = a;
    for (auto& x : r.v) x = -x;
    return r;
  }
  RootVec scaled(int m) const {
    RootVec r = *this;
    for (auto& x : r.v) x *= m;
    return r;
  }
  bool isZero() const {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  }
  bool isNonnegative() const {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
  }
  bool isPositive() const { return isNonnegative() && !isZero(); }
  int height() const { return std::accumulate(v.begin(), v.end(), 0); }
};

/// Vector in fundamental-weight coordinates: w[i] = <h_i, lambda>.
struct WeightVec {
  IntVec v;
  friend bool operator==(const WeightVec&, const WeightVec&) = default;
  friend auto operator<=>(const WeightVec&, const WeightVec&) = default;
  friend WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] += b.v[k];
    return r;
  }
  friend WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] -= b.v[k];
    return r;
  }
  friend WeightVec operator-(const WeightVec& a) {
    WeightVec r = a;
    for (auto& x : r.v) x = -x;
    return r;
  }
};

/// Symmetrizable Cartan matrix of finite type with minimal positive
/// symmetrizers; nodes are 0-based internally.
class CartanDatum {
 public:
  CartanDatum(IntMat cartan, IntVec symmetrizers)
      : c_(std::move(cartan)), eps_(std::move(symmetrizers)) {
    validateShape();
  }

  static CartanDatum typeA(int n);
  static CartanDatum typeB(int n);  // node n-1 (0-based) short
  static CartanDatum typeC(int n);  // node n-1 (0-based) long
  static CartanDatum typeD(int n);
  static CartanDatum typeF4();      // nodes 0,1 long; 2,3 short
  static CartanDatum typeG2();      // node 0 short, node 1 long
  static CartanDatum productA1A1();

  int rank() const { return static_cast<int>(c_.size()); }
  int cartan(int i, int j) const { return c_[i][j]; }
  int eps(int i) const { return eps_[i]; }
  const IntMat& cartanMatrix() const { return c_; }

  /// q_i = q^(eps_i).
  Scalar qi(int i) const { return Scalar::qPower(eps_[i]); }

  /// <h_i, mu> for mu in root coordinates.
  int pairRoot(int i, const RootVec& mu) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += c_[i][j] * mu.v[j];
    return s;
  }
  /// Symmetric bilinear form (alpha_i, alpha_j) = eps_i c_ij on root vectors.
  std::int64_t bilinear(const RootVec& a, const RootVec& b) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        s += std::int64_t{eps_[i]} * c_[i][j] * a.v[i] * b.v[j];
    return s;
  }
  /// Half squared length (beta, beta)/2; equals eps of the root for roots.
  std::int64_t halfNorm(const RootVec& beta) const {
    std::int64_t b = bilinear(beta, beta);
    if (b % 2 != 0) throw std::logic_error("halfNorm: odd squared length");
    return b / 2;
  }

  RootVec simpleRoot(int i) const {
    RootVec r{IntVec(rank(), 0)};
    r.v[i] = 1;
    return r;
  }
  /// X-coordinates of alpha_j: the j-th column of the Cartan matrix.
  WeightVec simpleRootWeight(int j) const {
    WeightVec w{IntVec(rank(), 0)};
    for (int k = 0; k < rank(); ++k) w.v[k] = c_[k][j];
    return w;
  }
  WeightVec toWeight(const RootVec& mu) const {
    WeightVec w{IntVec(rank(), 0)};
    for (int k = 0; k < rank(); ++k)
      for (int j = 0; j < rank(); ++j) w.v[k] += c_[k][j] * mu.v[j];
    return w;
  }

  RootVec reflectRoot(int i, RootVec mu) const {
    mu.v[i] -= pairRoot(i, mu);
    return mu;
  }
  WeightVec reflectWeight(int i, WeightVec lam) const {
    int li = lam.v[i];
    for (int k = 0; k < rank(); ++k) lam.v[k] -= li * c_[k][i];
    return lam;
  }

  bool finiteType() const;

 private:
  void validateShape() const {
    auto n = c_.size();
    if (n == 0 || eps_.size() != n) throw std::invalid_argument("Cartan datum shape");
    for (std::size_t i = 0; i < n; ++i) {
      if (c_[i].size() != n) throw std::invalid_argument("Cartan matrix not square");
      if (c_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (eps_[i] <= 0) throw std::invalid_argument("symmetrizers must be positive");
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && c_[i][j] > 0) throw std::invalid_argument("off-diagonal must be <= 0");
        if (i != j && ((c_[i][j] == 0) != (c_[j][i] == 0)))
          throw std::invalid_argument("Cartan zero pattern must be symmetric");
        if (eps_[i] * c_[i][j] != eps_[j] * c_[j][i])
          throw std::invalid_argument("symmetrizers do not symmetrize");
      }
    }
  }

  IntMat c_;
  IntVec eps_;
};

inline CartanDatum CartanDatum::typeA(int n) {
  IntMat c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return CartanDatum(c, IntVec(n, 1));
}

inline CartanDatum CartanDatum::typeB(int n) {
  if (n < 2) throw std::invalid_argument("typeB needs rank >= 2");
  IntMat c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  c[n - 1][n - 2] = -2;  // short alpha_n sees long alpha_{n-1} doubly
  IntVec eps(n, 2);
  eps[n - 1] = 1;
  return CartanDatum(c, eps);
}

inline CartanDatum CartanDatum::typeC(int n) {
  if (n < 2) throw std::invalid_argument("typeC needs rank >= 2");
  IntMat c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  c[n - 2][n - 1] = -2;  // long alpha_n seen doubly by short alpha_{n-1}
  IntVec eps(n, 1);
  eps[n - 1] = 2;
  return CartanDatum(c, eps);
}

inline CartanDatum CartanDatum::typeD(int n) {
  if (n < 3) throw std::invalid_argument("typeD needs rank >= 3");
  IntMat c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  c[n - 3][n - 1] = c[n - 1][n - 3] = -1;  // fork at node n-2 (1-based)
  return CartanDatum(c, IntVec(n, 1));
}

inline CartanDatum CartanDatum::typeF4() {
  IntMat c = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  return CartanDatum(c, {2, 2, 1, 1});
}

inline CartanDatum CartanDatum::typeG2() {
  IntMat c = {{2, -3}, {-1, 2}};
  return CartanDatum(c, {1, 3});
}

inline CartanDatum CartanDatum::productA1A1() {
  IntMat c = {{2, 0}, {0, 2}};
  return CartanDatum(c, {1, 1});
}

inline bool CartanDatum::finiteType() const {
  // Positive definiteness of the symmetrized matrix via leading minors.
  int n = rank();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = BigInt(eps_[i]) * c_[i][j];
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = m[i][j];
    // Fraction-free Gaussian elimination (Bareiss) determinant.
    BigInt prev = 1;
    bool zero = false;
    for (int col = 0; col < k && !zero; ++col) {
      int pivot = -1;
      for (int row = col; row < k; ++row)
        if (sub[row][col] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) {
        zero = true;
        break;
      }
      if (pivot != col) {
        std::swap(sub[pivot], sub[col]);
        for (auto& x : sub[col]) x = -x;  // keep determinant sign
      }
      for (int row = col + 1; row < k; ++row) {
        for (int j2 = col + 1; j2 < k; ++j2)
          sub[row][j2] = (sub[col][col] * sub[row][j2] - sub[row][col] * sub[col][j2]) / prev;
        sub[row][col] = 0;
      }
      prev = sub[col][col];
    }
    if (zero || sub[k - 1][k - 1] <= 0) return false;
  }
  return true;
}

/// Weyl group element acting on root and weight coordinates; matrices are
/// maintained in both directions so inverses and descents are cheap.
class WeylElt {
 public:
  static WeylElt identity(const CartanDatum& d) {
    WeylElt w;
    int n = d.rank();
    w.rootMat_ = w.rootInv_ = w.weightMat_ = w.weightInv_ = identityMat(n);
    return w;
  }
  static WeylElt simple(const CartanDatum& d, int i) {
    WeylElt w = identity(d);
    int n = d.rank();
    for (int j = 0; j < n; ++j) {
      w.rootMat_[i][j] -= d.cartan(i, j);  // s_i alpha_j = alpha_j - c_ij alpha_i
      w.weightMat_[j][i] -= d.cartan(j, i);
    }
    w.rootInv_ = w.rootMat_;
    w.weightInv_ = w.weightMat_;
    return w;
  }
  static WeylElt fromWord(const CartanDatum& d, const IntVec& word) {
    WeylElt w = identity(d);
    for (int i : word) w = w * simple(d, i);
    return w;
  }

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    WeylElt r;
    r.rootMat_ = mul(a.rootMat_, b.rootMat_);
    r.rootInv_ = mul(b.rootInv_, a.rootInv_);
    r.weightMat_ = mul(a.weightMat_, b.weightMat_);
    r.weightInv_ = mul(b.weightInv_, a.weightInv_);
    return r;
  }
  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.rootMat_ == b.rootMat_;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }

  WeylElt inverse() const {
    WeylElt r;
    r.rootMat_ = rootInv_;
    r.rootInv_ = rootMat_;
    r.weightMat_ = weightInv_;
    r.weightInv_ = weightMat_;
    return r;
  }

  RootVec apply(const RootVec& x) const { return {applyMat(rootMat_, x.v)}; }
  RootVec applyInverse(const RootVec& x) const { return {applyMat(rootInv_, x.v)}; }
  WeightVec apply(const WeightVec& x) const { return {applyMat(weightMat_, x.v)}; }
  WeightVec applyInverse(const WeightVec& x) const { return {applyMat(weightInv_, x.v)}; }

  bool isIdentity() const {
    for (std::size_t i = 0; i < rootMat_.size(); ++i)
      for (std::size_t j = 0; j < rootMat_.size(); ++j)
        if (rootMat_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  }

  /// True when l(w s_i) < l(w), i.e. w(alpha_i) < 0.
  bool rightDescent(const CartanDatum& d, int i) const {
    return !apply(d.simpleRoot(i)).isNonnegative();
  }
  /// True when l(s_i w) < l(w), i.e. w^{-1}(alpha_i) < 0.
  bool leftDescent(const CartanDatum& d, int i) const {
    return !applyInverse(d.simpleRoot(i)).isNonnegative();
  }

  /// Greedy reduced word: repeatedly peel the smallest left descent.
  IntVec reducedWord(const CartanDatum& d) const {
    IntVec word;
    WeylElt u = *this;
    while (!u.isIdentity()) {
      int best = -1;
      for (int i = 0; i < d.rank(); ++i)
        if (u.leftDescent(d, i)) {
          best = i;
          break;
        }
      if (best < 0) throw std::logic_error("reducedWord: no descent");
      word.push_back(best);
      u = simple(d, best) * u;
    }
    return word;
  }

  int length(const CartanDatum& d, const std::vector<RootVec>& positiveRoots) const {
    int len = 0;
    for (const auto& beta : positiveRoots)
      if (!apply(beta).isNonnegative()) ++len;
    return len;
  }

 private:
  static IntMat identityMat(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }
  static IntMat mul(const IntMat& a, const IntMat& b) {
    auto n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  }
  static IntVec applyMat(const IntMat& m, const IntVec& x) {
    auto n = m.size();
    IntVec r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i] += m[i][j] * x[j];
    return r;
  }

  IntMat rootMat_, rootInv_, weightMat_, weightInv_;
};

/// Root-system queries for one Cartan datum: positive roots, parabolic
/// longest elements, inversion sets, Kostant partition counts.
class RootSystem {
 public:
  explicit RootSystem(CartanDatum d) : datum_(std::move(d)) {
    if (!datum_.finiteType()) throw std::invalid_argument("not of finite type");
    computePositiveRoots();
  }

  const CartanDatum& datum() const { return datum_; }
  const std::vector<RootVec>& positiveRoots() const { return positive_; }
  bool isPositiveRoot(const RootVec& b) const {
    return std::find(positive_.begin(), positive_.end(), b) != positive_.end();
  }

  /// Longest element of the parabolic generated by the given nodes.
  WeylElt longestElement(const IntVec& nodes) const {
    WeylElt w = WeylElt::identity(datum_);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : nodes) {
        if (!w.rightDescent(datum_, i)) {
          w = w * WeylElt::simple(datum_, i);
          progress = true;
        }
      }
    }
    return w;
  }
  /// Its canonical reduced word restricted to the parabolic (greedy peel of
  /// the smallest parabolic left descent).
  IntVec longestWord(const IntVec& nodes) const {
    WeylElt u = longestElement(nodes);
    IntVec word;
    while (!u.isIdentity()) {
      int best = -1;
      for (int i : nodes)
        if (u.leftDescent(datum_, i)) {
          best = i;
          break;
        }
      if (best < 0) throw std::logic_error("longestWord: no descent");
      word.push_back(best);
      u = WeylElt::simple(datum_, best) * u;
    }
    return word;
  }

  /// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for a reduced word.
  std::vector<RootVec> inversionSet(const IntVec& word) const {
    std::vector<RootVec> betas;
    WeylElt prefix = WeylElt::identity(datum_);
    for (int i : word) {
      RootVec beta = prefix.apply(datum_.simpleRoot(i));
      if (!beta.isPositive()) throw std::invalid_argument("word is not reduced");
      if (std::find(betas.begin(), betas.end(), beta) != betas.end())
        throw std::invalid_argument("word is not reduced (repeated root)");
      betas.push_back(beta);
      prefix = prefix * WeylElt::simple(datum_, i);
    }
    return betas;
  }

  int length(const WeylElt& w) const { return w.length(datum_, positive_); }

  /// Number of ways to write mu as a sum of positive roots with
  /// multiplicities (dimension of a weight space of the half algebra).
  std::int64_t kostantPartitions(const RootVec& mu) const {
    if (!mu.isNonnegative()) return 0;
    return kostantRec(mu, positive_.size());
  }

 private:
  void computePositiveRoots() {
    std::set<RootVec> known;
    for (int i = 0; i < datum_.rank(); ++i) known.insert(datum_.simpleRoot(i));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<RootVec> snapshot(known.begin(), known.end());
      for (const auto& beta : snapshot)
        for (int i = 0; i < datum_.rank(); ++i) {
          RootVec next = datum_.reflectRoot(i, beta);
          if (next.isPositive() && known.insert(next).second) grew = true;
        }
    }
    positive_.assign(known.begin(), known.end());
    std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
      if (a.height() != b.height()) return a.height() < b.height();
      return a < b;
    });
  }

  std::int64_t kostantRec(const RootVec& mu, std::size_t limit) const {
    if (mu.isZero()) return 1;
    if (limit == 0) return 0;
    auto key = std::make_pair(mu, limit);
    auto it = kostantMemo_.find(key);
    if (it != kostantMemo_.end()) return it->second;
    std::int64_t total = 0;
    const RootVec& beta = positive_[limit - 1];
    RootVec rest = mu;
    while (rest.isNonnegative()) {
      total += kostantRec(rest, limit - 1);
      rest = rest - beta;
    }
    kostantMemo_.emplace(key, total);
    return total;
  }

  CartanDatum datum_;
  std::vector<RootVec> positive_;
  mutable std::map<std::pair<RootVec, std::size_t>, std::int64_t> kostantMemo_;
};

}  // namespace iqpbw
