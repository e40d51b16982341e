#pragma once

/**
 * @file theta.hpp
 * @brief Type-2 transformations theta_{n,m,t}.
 *
 * theta_{n,m,t} relabels vertex x = q*m + j (0 <= j < m) as x + j*t*m mod n.
 * Vertices in the residue class j = 0 never move, so jumps that are multiples
 * of m are fixed. The map is a bijection on Z_n, hence the image of a
 * circulant graph is always isomorphic to it; the question is only whether the
 * image is again circulant in the standard labeling.
 *
 * Two evaluation paths are provided:
 *  - theta_exact_image maps every edge and tests circulancy. Authoritative.
 *  - theta_fast applies r -> r + (r mod m)*t*m to the symmetric jump set and
 *    accepts the result when it pairs up to n, as the original generator
 *    programs did. It only tracks one of the two difference classes a jump
 *    splits into, so its answer is family-dependent.
 *
 * The images for t and t' compose to the image for (t + t') mod n/m.
 */

#include <optional>
#include <string>
#include <vector>

#include "circulant/adams.hpp"
#include "circulant/classification.hpp"
#include "circulant/core.hpp"

namespace circulant {

class ThetaTransform {
 public:
  /// Requires m >= 2, m | n and 0 <= t < n/m.
  ThetaTransform(int n, int m, int t);

  int order() const noexcept { return n_; }
  int modulus() const noexcept { return m_; }
  int shift() const noexcept { return t_; }
  int shift_count() const noexcept { return n_ / m_; }

  Vertex operator()(Vertex x) const noexcept {
    const std::int64_t j = x % m_;
    return static_cast<Vertex>((x + j * t_ * m_) % n_);
  }

  /// theta_t followed by theta_t' is theta_{t+t'}.
  ThetaTransform then(const ThetaTransform& next) const;

  friend bool operator==(const ThetaTransform&, const ThetaTransform&) = default;

 private:
  int n_;
  int m_;
  int t_;
};

Vertex theta_vertex(const ThetaTransform& transform, Vertex x);

/// permutation[x] = theta(x) for all x in Z_n.
std::vector<Vertex> vertex_permutation(const ThetaTransform& transform);

struct FastImage {
  std::vector<std::int64_t> multiset;  // sorted
  bool symmetric = false;
  std::optional<JumpSet> reduced;  // present iff symmetric
};

FastImage theta_fast(const JumpSet& jumps, const ThetaTransform& transform);

struct ThetaImage {
  CirculantGraph source;
  ThetaTransform transform;
  LabeledGraph labeled;
  std::optional<JumpSet> verdict;  // set iff the image is circulant
  FastImage fast;

  bool circulant() const noexcept { return verdict.has_value(); }
};

/// Image of an arbitrary labeled graph under the vertex map.
LabeledGraph apply(const ThetaTransform& transform, const LabeledGraph& graph);

ThetaImage theta_exact_image(const CirculantGraph& graph, const ThetaTransform& transform);

/// Identical, Type1(x), Type2(m, t) or NonCirculantImage.
Classification classify_theta(const CirculantGraph& graph, const ThetaTransform& transform);

struct Type2SetResult {
  CirculantGraph base;
  int m;
  /// base first, then distinct Type-2 images by increasing t.
  std::vector<CirculantGraph> members;
  /// t at which each member first appears (0 for base).
  std::vector<int> member_shifts;
  std::optional<int> t1;
  /// Least positive t whose image equals the base, n/m if none.
  int period;
  std::vector<std::string> warnings;
};

/// Throws bad_modulus unless m >= 2 and m | n. Emits warnings when the
/// graph sits outside the hypotheses of the Type-2 theory.
Type2SetResult type2_set(const CirculantGraph& graph, int m);

/// All n/m images in order of t.
std::vector<ThetaImage> vnm_set(const CirculantGraph& graph, int m);

struct GroupReport {
  int order = 0;                 // number of elements
  std::vector<int> elements;     // shift indices modulo the period
  bool closed = true;
  bool has_identity = true;
  bool has_inverses = true;
  bool commutative = true;
  bool cyclic = false;
  std::optional<int> generator;  // least generating shift when cyclic
  std::vector<std::string> violations;

  bool is_abelian_group() const noexcept {
    return closed && has_identity && has_inverses && commutative;
  }
};

/// Checks the group axioms of the Type-2 set under t-addition modulo the
/// observed period, composing exact images.
GroupReport type2_group_check(const Type2SetResult& set);

}  // namespace circulant
