#pragma once

#include "iqpbw/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iqpbw {

/// Raised when a diagram involution fails the admissibility conditions.
class SatakeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The finite list of irreducible real-rank-one shapes; Generic covers any
/// admissible orbit that does not match a tabulated shape.
enum class RankOneFamily { AI1, AII3, AIII11, AIV, BII, CII, DII, FII, Generic };

inline std::string toString(RankOneFamily f) {
  switch (f) {
    case RankOneFamily::AI1: return "AI1";
    case RankOneFamily::AII3: return "AII3";
    case RankOneFamily::AIII11: return "AIII11";
    case RankOneFamily::AIV: return "AIV";
    case RankOneFamily::BII: return "BII";
    case RankOneFamily::CII: return "CII";
    case RankOneFamily::DII: return "DII";
    case RankOneFamily::FII: return "FII";
    case RankOneFamily::Generic: return "Generic";
  }
  return "?";
}

/// Identification of the rank-one subdiagram attached to a white orbit:
/// nodes[k] is the ambient node playing the role of template node k.
struct RankOneInfo {
  RankOneFamily family = RankOneFamily::Generic;
  IntVec nodes;
  int templateRank() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

inline int floorDiv(int a, int b) {
  int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Column echelon form over the integers via unimodular column operations.
/// Optionally tracks the operations to extract an integer kernel basis.
struct ColumnEchelon {
  std::vector<IntVec> cols;
  IntVec pivotRows;
  std::vector<IntVec> kernel;
};

inline ColumnEchelon columnEchelon(std::vector<IntVec> cols, int rows, bool trackKernel) {
  std::size_t k = cols.size();
  std::vector<IntVec> trans;
  if (trackKernel) {
    trans.assign(k, IntVec(k, 0));
    for (std::size_t j = 0; j < k; ++j) trans[j][j] = 1;
  }
  std::size_t fixed = 0;
  IntVec pivotRows;
  for (int r = 0; r < rows && fixed < k; ++r) {
    while (true) {
      std::size_t best = k;
      for (std::size_t j = fixed; j < k; ++j)
        if (cols[j][r] != 0 &&
            (best == k || std::abs(cols[j][r]) < std::abs(cols[best][r])))
          best = j;
      if (best == k) break;  // row has no support among free columns
      std::swap(cols[best], cols[fixed]);
      if (trackKernel) std::swap(trans[best], trans[fixed]);
      bool clean = true;
      for (std::size_t j = fixed + 1; j < k; ++j) {
        if (cols[j][r] == 0) continue;
        int q = floorDiv(cols[j][r], cols[fixed][r]);
        for (int t = 0; t < rows; ++t) cols[j][t] -= q * cols[fixed][t];
        if (trackKernel)
          for (std::size_t t = 0; t < k; ++t) trans[j][t] -= q * trans[fixed][t];
        if (cols[j][r] != 0) clean = false;
      }
      if (clean) {
        if (cols[fixed][r] < 0) {
          for (auto& x : cols[fixed]) x = -x;
          if (trackKernel)
            for (auto& x : trans[fixed]) x = -x;
        }
        pivotRows.push_back(r);
        ++fixed;
        break;
      }
    }
  }
  ColumnEchelon out;
  out.pivotRows = pivotRows;
  for (std::size_t j = 0; j < fixed; ++j) out.cols.push_back(cols[j]);
  if (trackKernel)
    for (std::size_t j = fixed; j < k; ++j) {
      bool zero = std::all_of(cols[j].begin(), cols[j].end(), [](int x) { return x == 0; });
      if (!zero) throw std::logic_error("columnEchelon: non-pivot column not cleared");
      out.kernel.push_back(trans[j]);
    }
  return out;
}

}  // namespace detail

/// An admissible involutive diagram datum (Cartan datum, black subset, node
/// involution) together with all derived combinatorics: the black longest
/// element, the involution theta, white-orbit rank-one data, relative simple
/// reflections and the relative longest word.
class SatakeDiagram {
 public:
  SatakeDiagram(CartanDatum datum, IntVec blackNodes, IntVec tau)
      : roots_(std::move(datum)), black_(std::move(blackNodes)), tau_(std::move(tau)) {
    std::sort(black_.begin(), black_.end());
    black_.erase(std::unique(black_.begin(), black_.end()), black_.end());
    validate();
    computeTheta();
    computeOrbits();
    computeRelative();
  }

  const CartanDatum& datum() const { return roots_.datum(); }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return datum().rank(); }
  bool isBlack(int i) const { return isBlack_[i]; }
  const IntVec& blackNodes() const { return black_; }
  int tau(int i) const { return tau_[i]; }

  const WeylElt& blackLongest() const { return wBullet_; }
  const IntVec& blackLongestWord() const { return wBulletWord_; }
  const WeylElt& longest() const { return wLongest_; }

  /// Involution theta = -w_bullet tau on root / weight / coweight lattices.
  RootVec thetaRoot(const RootVec& mu) const {
    RootVec t{IntVec(rank(), 0)};
    for (int k = 0; k < rank(); ++k) t.v[tau_[k]] += mu.v[k];
    return -wBullet_.apply(t);
  }
  WeightVec thetaWeight(const WeightVec& lam) const {
    WeightVec t{IntVec(rank(), 0)};
    for (int k = 0; k < rank(); ++k) t.v[tau_[k]] += lam.v[k];
    return -wBullet_.apply(t);
  }
  /// Coweights in h-coordinates; theta acts by the transpose rule.
  IntVec thetaCoweight(const IntVec& mu) const {
    IntVec out(rank(), 0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) out[i] += thetaWeightMat_[j][i] * mu[j];
    return out;
  }
  bool inYiota(const IntVec& mu) const { return thetaCoweight(mu) == mu; }
  /// Basis of the theta-fixed coweight lattice.
  const std::vector<IntVec>& yiotaBasis() const { return yiotaBasis_; }

  /// Canonical representative of lambda in X/{lambda - theta(lambda)}.
  WeightVec canonicalXi(WeightVec lam) const {
    for (std::size_t k = 0; k < xcheck_.cols.size(); ++k) {
      int r = xcheck_.pivotRows[k];
      int q = detail::floorDiv(lam.v[r], xcheck_.cols[k][r]);
      if (q == 0) continue;
      for (int t = 0; t < rank(); ++t) lam.v[t] -= q * xcheck_.cols[k][t];
    }
    return lam;
  }
  bool xiEqual(const WeightVec& a, const WeightVec& b) const {
    WeightVec d = canonicalXi(a - b);
    return std::all_of(d.v.begin(), d.v.end(), [](int x) { return x == 0; });
  }

  const IntVec& whiteReps() const { return whiteReps_; }
  int orbitRep(int i) const { return std::min(i, tau_[i]); }
  bool isWhiteRep(int i) const {
    return std::find(whiteReps_.begin(), whiteReps_.end(), i) != whiteReps_.end();
  }

  const RankOneInfo& rankOne(int rep) const { return repData(rep).info; }
  /// Reduced word of the relative simple reflection attached to a white rep.
  const IntVec& bsWord(int rep) const { return repData(rep).bsWord; }
  const WeylElt& bs(int rep) const { return repData(rep).bsElt; }
  std::vector<RootVec> bsInversionSet(int rep) const {
    return roots_.inversionSet(repData(rep).bsWord);
  }
  /// Longest element of the parabolic on the blacks plus the orbit of rep.
  const WeylElt& localLongest(int rep) const { return repData(rep).wLocal; }

  /// The distinguished parameter value -q_i^{-<h_i, alpha_i + w_bullet
  /// alpha_{tau i}>/2} at white nodes, 1 at black nodes.
  Scalar sigmaDiamond(int i) const {
    if (isBlack_[i]) return Scalar(1);
    RootVec arg = datum().simpleRoot(i) + wBullet_.apply(datum().simpleRoot(tau_[i]));
    int e = datum().pairRoot(i, arg);
    return Scalar(-1) * Scalar::tPower(-2 * datum().eps(i) * e);
  }

  /// The tabulated parameter value at which the integral form is stable
  /// under the relative braid group action (per rank-one family).
  Scalar starParameter(int rep) const {
    const RankOneInfo& info = repData(rep).info;
    int n = info.templateRank();
    switch (info.family) {
      case RankOneFamily::AI1: return Scalar::qPower(-1);
      case RankOneFamily::AII3: return Scalar::qPower(1);
      case RankOneFamily::AIII11: return Scalar(1);
      case RankOneFamily::AIV: {
        // (-q)^{n/2} q^{-1/2} with the square-root branch (i t^2)^n.
        Scalar half = Scalar::imaginaryUnit() * Scalar::tPower(2);
        return half.pow(n) * Scalar::tPower(-2);
      }
      case RankOneFamily::BII: return Scalar::qPower(2 * n - 3);
      case RankOneFamily::CII: return Scalar::qPower(n - 1);
      case RankOneFamily::DII: return Scalar::qPower(n - 2);
      case RankOneFamily::FII: return Scalar::qPower(5);
      case RankOneFamily::Generic: break;
    }
    throw std::logic_error("starParameter: no tabulated value for this orbit");
  }

  /// Relative longest word as a sequence of white representatives.
  const IntVec& relativeWord() const { return relativeWord_; }
  /// Reduced word for the full longest element: the concatenated relative
  /// letters first, then the black longest word.
  const IntVec& w0Word() const { return w0Word_; }
  /// Number of initial letters of w0Word coming from the relative part.
  int relativeLetterCount() const { return relativeLetterCount_; }

  struct PositiveDecomposition {
    std::vector<RootVec> restricted;  // inversion set of the relative longest
    std::vector<RootVec> black;       // positive roots of the black subsystem
  };
  PositiveDecomposition decomposePositiveRoots() const {
    auto betas = roots_.inversionSet(w0Word_);
    PositiveDecomposition out;
    out.restricted.assign(betas.begin(), betas.begin() + relativeLetterCount_);
    out.black.assign(betas.begin() + relativeLetterCount_, betas.end());
    for (const auto& beta : out.black)
      if (!blackSupported(beta))
        throw std::logic_error("positive-root decomposition: tail not black");
    return out;
  }

 private:
  struct RepData {
    RankOneInfo info;
    IntVec bsWord;
    WeylElt bsElt;
    WeylElt wLocal;
  };

  const RepData& repData(int rep) const {
    auto it = reps_.find(rep);
    if (it == reps_.end()) throw std::invalid_argument("not a white orbit representative");
    return it->second;
  }

  bool blackSupported(const RootVec& beta) const {
    for (int k = 0; k < rank(); ++k)
      if (beta.v[k] != 0 && !isBlack_[k]) return false;
    return true;
  }

  void validate() {
    const CartanDatum& d = datum();
    int n = d.rank();
    isBlack_.assign(n, false);
    for (int b : black_) {
      if (b < 0 || b >= n) throw SatakeError("black node out of range");
      isBlack_[b] = true;
    }
    if (static_cast<int>(tau_.size()) != n) throw SatakeError("involution has wrong size");
    for (int i = 0; i < n; ++i) {
      int ti = tau_[i];
      if (ti < 0 || ti >= n) throw SatakeError("involution out of range");
      if (tau_[ti] != i) throw SatakeError("node map is not an involution");
      if (d.eps(i) != d.eps(ti)) throw SatakeError("involution does not preserve root lengths");
      if (isBlack_[i] != isBlack_[ti]) throw SatakeError("involution does not preserve the black set");
      for (int j = 0; j < n; ++j)
        if (d.cartan(tau_[i], tau_[j]) != d.cartan(i, j))
          throw SatakeError("node map is not a diagram automorphism");
    }
    // Black longest element must realize the involution on black simples.
    wBullet_ = roots_.longestElement(black_);
    wBulletWord_ = roots_.longestWord(black_);
    for (int j : black_) {
      RootVec img = -wBullet_.apply(d.simpleRoot(j));
      int found = -1;
      for (int k = 0; k < n; ++k)
        if (img == d.simpleRoot(k)) found = k;
      if (found < 0) throw std::logic_error("black longest does not permute black simples");
      if (found != tau_[j])
        throw SatakeError("involution disagrees with the black longest element");
    }
    // Fixed white nodes must pair integrally with the black half-sum.
    for (int j = 0; j < n; ++j) {
      if (isBlack_[j] || tau_[j] != j) continue;
      std::int64_t total = 0;
      for (const auto& beta : roots_.positiveRoots()) {
        if (!blackSupported(beta)) continue;
        std::int64_t num = 0;
        for (int k = 0; k < n; ++k)
          num += std::int64_t{beta.v[k]} * d.eps(k) * d.cartan(k, j);
        std::int64_t den = d.halfNorm(beta);
        if (num % den != 0) throw std::logic_error("coroot pairing not integral");
        total += num / den;
      }
      if (total % 2 != 0)
        throw SatakeError("fixed white node pairs non-integrally with the black half-sum");
    }
    wLongest_ = roots_.longestElement([n] {
      IntVec all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      return all;
    }());
  }

  void computeTheta() {
    int n = rank();
    thetaWeightMat_.assign(n, IntVec(n, 0));
    for (int j = 0; j < n; ++j) {
      WeightVec e{IntVec(n, 0)};
      e.v[j] = 1;
      WeightVec img = thetaWeight(e);
      for (int i = 0; i < n; ++i) thetaWeightMat_[i][j] = img.v[i];
    }
    std::vector<IntVec> xcheckCols;
    for (int j = 0; j < n; ++j) {
      IntVec col(n, 0);
      for (int i = 0; i < n; ++i) col[i] = (i == j ? 1 : 0) - thetaWeightMat_[i][j];
      xcheckCols.push_back(col);
    }
    xcheck_ = detail::columnEchelon(xcheckCols, n, false);
    // Kernel of (theta - 1) on coweights.
    std::vector<IntVec> ycols;
    for (int j = 0; j < n; ++j) {
      IntVec hj(n, 0);
      hj[j] = 1;
      IntVec img = thetaCoweight(hj);
      img[j] -= 1;
      ycols.push_back(img);
    }
    // Columns of the map; kernel vectors are coweights fixed by theta.
    auto ech = detail::columnEchelon(ycols, n, true);
    yiotaBasis_ = ech.kernel;
  }

  void computeOrbits() {
    for (int i = 0; i < rank(); ++i) {
      if (isBlack_[i] || orbitRep(i) != i) continue;
      whiteReps_.push_back(i);
      RepData data;
      IntVec localNodes = black_;
      localNodes.push_back(i);
      if (tau_[i] != i) localNodes.push_back(tau_[i]);
      std::sort(localNodes.begin(), localNodes.end());
      data.wLocal = roots_.longestElement(localNodes);
      data.info = classifyRankOne(i, localNodes);
      if (data.info.family == RankOneFamily::Generic) {
        data.bsElt = data.wLocal * wBullet_;
        data.bsWord = data.bsElt.reducedWord(datum());
      } else {
        data.bsWord = mapWord(templateBsWord(data.info), data.info.nodes);
        data.bsElt = WeylElt::fromWord(datum(), data.bsWord);
        if (data.bsElt != data.wLocal * wBullet_)
          throw std::logic_error("tabulated relative reflection word mismatch");
      }
      if (!(data.bsElt * data.bsElt).isIdentity())
        throw std::logic_error("relative simple reflection is not an involution");
      reps_.emplace(i, std::move(data));
    }
  }

  void computeRelative() {
    WeylElt u = wLongest_ * wBullet_;
    int len = roots_.length(u);
    while (!u.isIdentity()) {
      bool progress = false;
      for (int rep : whiteReps_) {
        const RepData& rd = reps_.at(rep);
        int step = roots_.length(rd.bsElt);
        WeylElt next = rd.bsElt.inverse() * u;
        if (roots_.length(next) == len - step) {
          relativeWord_.push_back(rep);
          u = next;
          len -= step;
          progress = true;
          break;
        }
      }
      if (!progress) throw std::logic_error("relative longest: no descending reflection");
    }
    w0Word_.clear();
    for (int rep : relativeWord_) {
      const IntVec& w = reps_.at(rep).bsWord;
      w0Word_.insert(w0Word_.end(), w.begin(), w.end());
    }
    relativeLetterCount_ = static_cast<int>(w0Word_.size());
    w0Word_.insert(w0Word_.end(), wBulletWord_.begin(), wBulletWord_.end());
    if (static_cast<int>(w0Word_.size()) != static_cast<int>(roots_.positiveRoots().size()))
      throw std::logic_error("longest word has wrong length");
    roots_.inversionSet(w0Word_);  // throws unless reduced
    if (WeylElt::fromWord(datum(), w0Word_) != wLongest_)
      throw std::logic_error("longest word does not multiply to the longest element");
  }

  // ---- rank-one classification -------------------------------------------

  static IntVec mapWord(const IntVec& word, const IntVec& nodes) {
    IntVec out;
    out.reserve(word.size());
    for (int k : word) out.push_back(nodes[k]);
    return out;
  }

  static IntVec templateBsWord(const RankOneInfo& info) {
    int n = info.templateRank();
    IntVec w;
    auto upDown = [&](int lo, int hi) {  // lo..hi then hi-1..lo
      for (int k = lo; k <= hi; ++k) w.push_back(k);
      for (int k = hi - 1; k >= lo; --k) w.push_back(k);
    };
    switch (info.family) {
      case RankOneFamily::AI1: return {0};
      case RankOneFamily::AII3: return {1, 0, 2, 1};
      case RankOneFamily::AIII11: return {0, 1};
      case RankOneFamily::AIV:
      case RankOneFamily::BII:
        upDown(0, n - 1);
        return w;
      case RankOneFamily::CII:
        upDown(1, n - 1);
        w.push_back(0);
        upDown(1, n - 1);
        return w;
      case RankOneFamily::DII:
        for (int k = 0; k <= n - 2; ++k) w.push_back(k);
        w.push_back(n - 1);
        for (int k = n - 3; k >= 0; --k) w.push_back(k);
        return w;
      case RankOneFamily::FII:
        return {3, 2, 1, 2, 0, 1, 2, 3, 2, 1, 2, 0, 1, 2, 3};
      case RankOneFamily::Generic: break;
    }
    throw std::logic_error("no tabulated word");
  }

  struct Template {
    CartanDatum datum;
    IntVec blacks;
    IntVec tau;
  };

  static std::optional<Template> makeTemplate(RankOneFamily f, int n) {
    auto identityTau = [](int m) {
      IntVec t(m);
      for (int k = 0; k < m; ++k) t[k] = k;
      return t;
    };
    auto range = [](int lo, int hi) {
      IntVec r;
      for (int k = lo; k <= hi; ++k) r.push_back(k);
      return r;
    };
    switch (f) {
      case RankOneFamily::AI1:
        if (n != 1) return std::nullopt;
        return Template{CartanDatum::typeA(1), {}, identityTau(1)};
      case RankOneFamily::AII3:
        if (n != 3) return std::nullopt;
        return Template{CartanDatum::typeA(3), {0, 2}, identityTau(3)};
      case RankOneFamily::AIII11:
        if (n != 2) return std::nullopt;
        return Template{CartanDatum::productA1A1(), {}, {1, 0}};
      case RankOneFamily::AIV: {
        if (n < 2) return std::nullopt;
        IntVec t(n);
        for (int k = 0; k < n; ++k) t[k] = n - 1 - k;
        return Template{CartanDatum::typeA(n), n > 2 ? range(1, n - 2) : IntVec{}, t};
      }
      case RankOneFamily::BII:
        if (n < 2) return std::nullopt;
        return Template{CartanDatum::typeB(n), range(1, n - 1), identityTau(n)};
      case RankOneFamily::CII:
        if (n < 3) return std::nullopt;
        return Template{CartanDatum::typeC(n), [&] {
                          IntVec b{0};
                          for (int k = 2; k < n; ++k) b.push_back(k);
                          return b;
                        }(),
                        identityTau(n)};
      case RankOneFamily::DII: {
        if (n < 4) return std::nullopt;
        IntVec t = identityTau(n);
        if (n % 2 == 0) std::swap(t[n - 2], t[n - 1]);  // black longest swaps the fork
        return Template{CartanDatum::typeD(n), range(1, n - 1), t};
      }
      case RankOneFamily::FII:
        if (n != 4) return std::nullopt;
        return Template{CartanDatum::typeF4(), {0, 1, 2}, identityTau(4)};
      case RankOneFamily::Generic: break;
    }
    return std::nullopt;
  }

  bool matchesTemplate(const RankOneInfo& info) const {
    auto tmpl = makeTemplate(info.family, info.templateRank());
    if (!tmpl) return false;
    int n = info.templateRank();
    const CartanDatum& d = datum();
    std::vector<bool> tmplBlack(n, false);
    for (int b : tmpl->blacks) tmplBlack[b] = true;
    for (int k = 0; k < n; ++k) {
      int a = info.nodes[k];
      if (d.eps(a) != tmpl->datum.eps(k)) return false;
      if (isBlack_[a] != tmplBlack[k]) return false;
      if (tau_[a] != info.nodes[tmpl->tau[k]]) return false;
      for (int l = 0; l < n; ++l)
        if (d.cartan(a, info.nodes[l]) != tmpl->datum.cartan(k, l)) return false;
    }
    return true;
  }

  RankOneInfo classifyRankOne(int i, const IntVec& localNodes) const {
    const CartanDatum& d = datum();
    auto neighbors = [&](int a) {
      IntVec nb;
      for (int b : localNodes)
        if (b != a && d.cartan(a, b) != 0) nb.push_back(b);
      return nb;
    };
    // Walk a path inside the local set starting from an endpoint.
    auto walkFrom = [&](int start) -> std::optional<IntVec> {
      IntVec path{start};
      int prev = -1, cur = start;
      while (true) {
        IntVec nb = neighbors(cur);
        nb.erase(std::remove(nb.begin(), nb.end(), prev), nb.end());
        if (nb.empty()) return path;
        if (nb.size() > 1) return std::nullopt;
        prev = cur;
        cur = nb[0];
        path.push_back(cur);
      }
    };
    std::vector<RankOneInfo> candidates;
    if (black_.empty()) {
      if (tau_[i] == i)
        candidates.push_back({RankOneFamily::AI1, {i}});
      else if (d.cartan(i, tau_[i]) == 0)
        candidates.push_back({RankOneFamily::AIII11, {i, tau_[i]}});
      else
        candidates.push_back({RankOneFamily::AIV, {i, tau_[i]}});
    } else if (tau_[i] != i) {
      if (auto path = walkFrom(i); path && path->back() == tau_[i])
        candidates.push_back({RankOneFamily::AIV, *path});
    } else {
      IntVec nb = neighbors(i);
      if (localNodes.size() == 3 && nb.size() == 2)
        candidates.push_back({RankOneFamily::AII3, {std::min(nb[0], nb[1]), i,
                                                    std::max(nb[0], nb[1])}});
      if (nb.size() == 1) {
        if (auto path = walkFrom(i)) {
          candidates.push_back({RankOneFamily::BII, *path});
          if (path->size() == 4) {
            IntVec rev(path->rbegin(), path->rend());
            candidates.push_back({RankOneFamily::FII, rev});
          }
        } else {
          // Path breaks at a fork: D-shape.
          IntVec nodes{i};
          int prev = -1, cur = i;
          while (true) {
            IntVec next = neighbors(cur);
            next.erase(std::remove(next.begin(), next.end(), prev), next.end());
            if (next.size() == 1) {
              prev = cur;
              cur = next[0];
              nodes.push_back(cur);
            } else if (next.size() == 2) {
              nodes.push_back(std::min(next[0], next[1]));
              nodes.push_back(std::max(next[0], next[1]));
              break;
            } else {
              nodes.clear();
              break;
            }
          }
          if (nodes.size() == localNodes.size())
            candidates.push_back({RankOneFamily::DII, nodes});
        }
      }
      if (nb.size() == 2) {
        // C-shape: one neighbor is a short pendant, the other continues.
        for (int swap = 0; swap < 2; ++swap) {
          int a = nb[swap], b = nb[1 - swap];
          if (neighbors(a).size() != 1) continue;
          IntVec nodes{a, i};
          int prev = i, cur = b;
          nodes.push_back(cur);
          bool ok = true;
          while (true) {
            IntVec next = neighbors(cur);
            next.erase(std::remove(next.begin(), next.end(), prev), next.end());
            if (next.empty()) break;
            if (next.size() > 1) {
              ok = false;
              break;
            }
            prev = cur;
            cur = next[0];
            nodes.push_back(cur);
          }
          if (ok && nodes.size() == localNodes.size())
            candidates.push_back({RankOneFamily::CII, nodes});
        }
      }
    }
    for (const auto& cand : candidates)
      if (matchesTemplate(cand)) return cand;
    return RankOneInfo{RankOneFamily::Generic, localNodes};
  }

  RootSystem roots_;
  IntVec black_;
  IntVec tau_;
  std::vector<bool> isBlack_;
  WeylElt wBullet_, wLongest_;
  IntVec wBulletWord_;
  IntMat thetaWeightMat_;
  detail::ColumnEchelon xcheck_;
  std::vector<IntVec> yiotaBasis_;
  IntVec whiteReps_;
  std::map<int, RepData> reps_;
  IntVec relativeWord_;
  IntVec w0Word_;
  int relativeLetterCount_ = 0;
};

// ---- builtin diagrams ------------------------------------------------------

inline const std::vector<std::string>& builtinDiagramNames() {
  static const std::vector<std::string> names = {
      "AI1",  "AII3", "AIII11", "AIV2",    "AIV3",    "BII2",
      "CII3", "DII4", "FII4",   "splitA2", "splitA3", "qsA3"};
  return names;
}

inline SatakeDiagram makeBuiltinDiagram(const std::string& rawName) {
  std::string name;
  for (char c : rawName) name.push_back(static_cast<char>(std::tolower(c)));
  auto identity = [](int n) {
    IntVec t(n);
    for (int k = 0; k < n; ++k) t[k] = k;
    return t;
  };
  if (name == "ai1") return {CartanDatum::typeA(1), {}, identity(1)};
  if (name == "aii3") return {CartanDatum::typeA(3), {0, 2}, identity(3)};
  if (name == "aiii11") return {CartanDatum::productA1A1(), {}, {1, 0}};
  if (name == "aiv2") return {CartanDatum::typeA(2), {}, {1, 0}};
  if (name == "aiv3") return {CartanDatum::typeA(3), {1}, {2, 1, 0}};
  if (name == "bii2") return {CartanDatum::typeB(2), {1}, identity(2)};
  if (name == "cii3") return {CartanDatum::typeC(3), {0, 2}, identity(3)};
  if (name == "dii4") return {CartanDatum::typeD(4), {1, 2, 3}, {0, 1, 3, 2}};
  if (name == "fii4") return {CartanDatum::typeF4(), {0, 1, 2}, identity(4)};
  if (name == "splita2") return {CartanDatum::typeA(2), {}, identity(2)};
  if (name == "splita3") return {CartanDatum::typeA(3), {}, identity(3)};
  if (name == "qsa3") return {CartanDatum::typeA(3), {}, {2, 1, 0}};
  throw std::invalid_argument("unknown builtin diagram: " + rawName);
}

}  // namespace iqpbw
