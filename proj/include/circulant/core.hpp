#pragma once

/**
 * @file core.hpp
 * @brief Canonical circulant graphs C_n(R).
 *
 * A circulant graph of order n has vertices 0..n-1 and joins i to i+r (mod n)
 * for every jump r. Jump sets are kept in reduced form: every element lies in
 * [1, floor(n/2)], sorted, no duplicates. The symmetric closure {r, n-r}
 * contains n/2 once when it is a jump.
 *
 * Edge counting follows the convention that the chord at difference n/2 is a
 * single edge for degree purposes but a double edge when edges are counted, so
 * edge_count_weighted() is always n*|R| while edge_count_simple() counts distinct
 * vertex pairs.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circulant/error.hpp"

namespace circulant {

using Vertex = int;

/// Least non-negative residue of value mod n.
constexpr std::int64_t floor_mod(std::int64_t value, std::int64_t n) noexcept {
  const std::int64_t r = value % n;
  return r < 0 ? r + n : r;
}

/// Reduced connection-set generator {r : 1 <= r <= n/2}.
class JumpSet {
 public:
  /// Sorts and deduplicates; throws unless every value already lies in
  /// [1, n/2] and n >= 3.
  JumpSet(int n, std::vector<int> jumps);

  int order() const noexcept { return n_; }
  std::span<const int> values() const& noexcept { return jumps_; }
  std::span<const int> values() const&& = delete;
  std::size_t size() const noexcept { return jumps_.size(); }
  bool contains(int r) const noexcept;
  bool has_half() const noexcept { return n_ % 2 == 0 && contains(n_ / 2); }

  friend bool operator==(const JumpSet&, const JumpSet&) = default;
  friend std::strong_ordering operator<=>(const JumpSet& a, const JumpSet& b);

 private:
  int n_;
  std::vector<int> jumps_;
};

/// The symmetric set R* = {r, n-r : r in R}, sorted ascending.
class ConnectionSet {
 public:
  int order() const noexcept { return n_; }
  std::span<const int> values() const& noexcept { return elements_; }
  std::span<const int> values() const&& = delete;
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(int d) const noexcept;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  friend ConnectionSet symmetric_closure(const JumpSet& jumps);
  ConnectionSet(int n, std::vector<int> elements)
      : n_(n), elements_(std::move(elements)) {}

  int n_;
  std::vector<int> elements_;
};

class CirculantGraph {
 public:
  explicit CirculantGraph(JumpSet jumps) : jumps_(std::move(jumps)) {}
  CirculantGraph(int n, std::vector<int> jumps)
      : jumps_(n, std::move(jumps)) {}

  int order() const noexcept { return jumps_.order(); }
  const JumpSet& jumps() const noexcept { return jumps_; }

  /// Vertex degree; the n/2 chord contributes once.
  int degree() const noexcept;
  std::int64_t edge_count_weighted() const noexcept;
  std::int64_t edge_count_simple() const noexcept;

  /// "C27(1,3,8,10)"
  std::string to_string() const;
  /// Symmetric closure form, "C27(1,3,8,10,17,19,24,26)".
  std::string to_string_full() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;
  friend std::strong_ordering operator<=>(const CirculantGraph& a,
                                          const CirculantGraph& b) {
    return a.jumps_ <=> b.jumps_;
  }

 private:
  JumpSet jumps_;
};

struct Edge {
  Vertex a;  // a < b
  Vertex b;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph on Z_n with an explicit labeling. An edge at difference n/2
/// counts twice in edge_count_weighted(), matching the circulant convention.
class LabeledGraph {
 public:
  /// Builds from an unordered list of pairs; repeated pairs collapse.
  LabeledGraph(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

  int order() const noexcept { return n_; }
  /// Sorted by (a, b).
  std::span<const Edge> edges() const& noexcept { return edges_; }
  std::span<const Edge> edges() const&& = delete;
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[row_offset(u) + static_cast<std::size_t>(v) / 64] >>
            (static_cast<unsigned>(v) % 64)) & 1u;
  }
  int degree(Vertex v) const noexcept;

  /// Bitset row of v, words_per_row() 64-bit words.
  std::span<const std::uint64_t> row(Vertex v) const& noexcept {
    return {rows_.data() + row_offset(v), words_};
  }
  std::span<const std::uint64_t> row(Vertex v) const&& = delete;
  std::size_t words_per_row() const noexcept { return words_; }

  /// Edges, with antipodal pairs counted twice.
  std::int64_t edge_count_weighted() const noexcept;
  std::int64_t edge_count_simple() const noexcept {
    return static_cast<std::int64_t>(edges_.size());
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t row_offset(Vertex v) const noexcept {
    return static_cast<std::size_t>(v) * words_;
  }

  int n_;
  std::size_t words_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> rows_;
};

/// Reduces each value mod n and replaces residues above n/2 by their
/// complement. Values congruent to 0 are rejected.
JumpSet reflexive_reduce(std::span<const std::int64_t> values, int n);
JumpSet reflexive_reduce(std::span<const int> values, int n);

ConnectionSet symmetric_closure(const JumpSet& jumps);

/// Edges {i, i+r} for every vertex i and jump r.
LabeledGraph adjacency(const CirculantGraph& graph);

/// Returns the jump set if the graph equals C_n(S) in its current labeling.
std::optional<JumpSet> detect_circulant(const LabeledGraph& graph);

}  // namespace circulant
