#include "circulant/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace circulant {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::bad_order: return "bad-order";
    case ErrorCode::bad_jumps: return "bad-jumps";
    case ErrorCode::zero_jump: return "zero-jump";
    case ErrorCode::bad_modulus: return "bad-m";
    case ErrorCode::bad_shift: return "bad-t";
    case ErrorCode::bad_unit: return "bad-unit";
    case ErrorCode::order_mismatch: return "order-mismatch";
    case ErrorCode::bad_parameter: return "bad-parameter";
    case ErrorCode::bound_exceeded: return "order-too-large";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

namespace {

void require_order(int n) {
  if (n < 3) {
    throw Error(ErrorCode::bad_order,
                "order " + std::to_string(n) + " is below the minimum of 3");
  }
}

std::string join(std::span<const int> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace

JumpSet::JumpSet(int n, std::vector<int> jumps) : n_(n), jumps_(std::move(jumps)) {
  require_order(n);
  if (jumps_.empty()) {
    throw Error(ErrorCode::bad_jumps, "jump set is empty");
  }
  for (int r : jumps_) {
    if (r < 1 || r > n / 2) {
      throw Error(ErrorCode::bad_jumps,
                  "jump " + std::to_string(r) + " outside [1, " +
                      std::to_string(n / 2) + "] for order " + std::to_string(n));
    }
  }
  std::sort(jumps_.begin(), jumps_.end());
  jumps_.erase(std::unique(jumps_.begin(), jumps_.end()), jumps_.end());
}

bool JumpSet::contains(int r) const noexcept {
  return std::binary_search(jumps_.begin(), jumps_.end(), r);
}

std::strong_ordering operator<=>(const JumpSet& a, const JumpSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.jumps_.begin(), a.jumps_.end(),
                                                b.jumps_.begin(), b.jumps_.end());
}

bool ConnectionSet::contains(int d) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), d);
}

int CirculantGraph::degree() const noexcept {
  return static_cast<int>(2 * jumps_.size()) - (jumps_.has_half() ? 1 : 0);
}

std::int64_t CirculantGraph::edge_count_weighted() const noexcept {
  return static_cast<std::int64_t>(order()) * static_cast<std::int64_t>(jumps_.size());
}

std::int64_t CirculantGraph::edge_count_simple() const noexcept {
  return edge_count_weighted() - (jumps_.has_half() ? order() / 2 : 0);
}

std::string CirculantGraph::to_string() const {
  return "C" + std::to_string(order()) + "(" + join(jumps_.values()) + ")";
}

std::string CirculantGraph::to_string_full() const {
  const auto closure = symmetric_closure(jumps_);
  return "C" + std::to_string(order()) + "(" + join(closure.values()) + ")";
}

LabeledGraph::LabeledGraph(int n, std::span<const std::pair<Vertex, Vertex>> pairs)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64) {
  if (n < 1) {
    throw Error(ErrorCode::bad_order, "labeled graph needs at least one vertex");
  }
  std::vector<std::pair<Vertex, Vertex>> sorted;
  sorted.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::bad_jumps, "edge endpoint outside [0, n-1]");
    }
    if (u == v) {
      throw Error(ErrorCode::bad_jumps, "self-loop at vertex " + std::to_string(u));
    }
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  rows_.assign(words_ * static_cast<std::size_t>(n), 0);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  edges_.reserve(sorted.size());
  for (const auto& [a, b] : sorted) {
    edges_.push_back({a, b});
    rows_[row_offset(a) + static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
    rows_[row_offset(b) + static_cast<std::size_t>(a) / 64] |= std::uint64_t{1} << (a % 64);
  }
}

int LabeledGraph::degree(Vertex v) const noexcept {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::int64_t LabeledGraph::edge_count_weighted() const noexcept {
  std::int64_t total = 0;
  for (const auto& e : edges_) total += (n_ % 2 == 0 && e.b - e.a == n_ / 2) ? 2 : 1;
  return total;
}

JumpSet reflexive_reduce(std::span<const std::int64_t> values, int n) {
  require_order(n);
  if (values.empty()) {
    throw Error(ErrorCode::bad_jumps, "no jump values given");
  }
  std::vector<int> reduced;
  reduced.reserve(values.size());
  for (auto value : values) {
    auto r = static_cast<int>(floor_mod(value, n));
    if (r == 0) {
      throw Error(ErrorCode::zero_jump,
                  "zero jump: " + std::to_string(value) + " is 0 mod " + std::to_string(n));
    }
    if (r > n / 2) r = n - r;
    reduced.push_back(r);
  }
  return JumpSet(n, std::move(reduced));
}

JumpSet reflexive_reduce(std::span<const int> values, int n) {
  std::vector<std::int64_t> wide(values.begin(), values.end());
  return reflexive_reduce(std::span<const std::int64_t>(wide), n);
}

ConnectionSet symmetric_closure(const JumpSet& jumps) {
  const int n = jumps.order();
  std::vector<int> elements;
  elements.reserve(2 * jumps.size());
  for (int r : jumps.values()) {
    elements.push_back(r);
    if (2 * r != n) elements.push_back(n - r);
  }
  std::sort(elements.begin(), elements.end());
  return ConnectionSet(n, std::move(elements));
}

LabeledGraph adjacency(const CirculantGraph& graph) {
  const int n = graph.order();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * graph.jumps().size());
  for (Vertex i = 0; i < n; ++i) {
    for (int r : graph.jumps().values()) {
      pairs.emplace_back(i, (i + r) % n);
    }
  }
  return LabeledGraph(n, pairs);
}

std::optional<JumpSet> detect_circulant(const LabeledGraph& graph) {
  const int n = graph.order();
  if (n < 3) return std::nullopt;
  // Row i must be row 0 rotated by i.
  for (Vertex i = 1; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (graph.adjacent(i, j) != graph.adjacent(0, (j - i + n) % n)) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> jumps;
  for (int d = 1; d <= n / 2; ++d) {
    if (graph.adjacent(0, d)) jumps.push_back(d);
  }
  if (jumps.empty()) return std::nullopt;
  return JumpSet(n, std::move(jumps));
}

}  // namespace circulant
