#include "circulant/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <queue>

#include "circulant/adams.hpp"
#include "circulant/theta.hpp"

namespace circulant {

OracleConfig OracleConfig::from_environment() {
  OracleConfig config;
  if (const char* raw = std::getenv("CIRCULANT_ORACLE_BOUND")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 100000) {
      throw Error(ErrorCode::parse,
                  std::string("CIRCULANT_ORACLE_BOUND is not a positive integer: ") + raw);
    }
    config.order_bound = static_cast<int>(value);
  }
  return config;
}

std::int64_t triangle_count(const CirculantGraph& graph) {
  const auto closure = symmetric_closure(graph.jumps());
  const int n = graph.order();
  std::int64_t walks = 0;
  for (int a : closure.values()) {
    for (int b : closure.values()) {
      if (closure.contains((a + b) % n)) ++walks;
    }
  }
  return walks * n / 6;
}

namespace {

int common_neighbours(const LabeledGraph& g, Vertex u, Vertex v) {
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  int count = 0;
  for (std::size_t w = 0; w < ru.size(); ++w) count += std::popcount(ru[w] & rv[w]);
  return count;
}

}  // namespace

std::int64_t triangle_count(const LabeledGraph& graph) {
  // trace(A^3) = sum over edges (u,v) of 2 * |N(u) & N(v)|.
  std::int64_t trace = 0;
  for (const auto& e : graph.edges()) trace += 2 * common_neighbours(graph, e.a, e.b);
  return trace / 6;
}

bool is_bipartite(const LabeledGraph& graph) {
  const int n = graph.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Vertex start = 0; start < n; ++start) {
    if (side[static_cast<std::size_t>(start)] >= 0) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::queue<Vertex> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v = 0; v < n; ++v) {
        if (!graph.adjacent(u, v)) continue;
        auto& sv = side[static_cast<std::size_t>(v)];
        const int su = side[static_cast<std::size_t>(u)];
        if (sv < 0) {
          sv = 1 - su;
          frontier.push(v);
        } else if (sv == su) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string Distinction::describe() const {
  return invariant + " " + first + " vs " + second;
}

std::optional<Distinction> invariant_screen(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.order() != h.order()) {
    return Distinction{"order", std::to_string(g.order()), std::to_string(h.order())};
  }
  auto degrees = [](const LabeledGraph& x) {
    std::vector<int> d;
    for (Vertex v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  auto render = [](const std::vector<int>& d) {
    if (!d.empty() && d.front() == d.back()) return std::to_string(d.front());
    std::string s;
    for (int x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "[" + s + "]";
  };
  if (auto dg = degrees(g), dh = degrees(h); dg != dh) {
    return Distinction{"degree", render(dg), render(dh)};
  }
  if (g.edge_count_simple() != h.edge_count_simple()) {
    return Distinction{"edge count", std::to_string(g.edge_count_simple()),
                       std::to_string(h.edge_count_simple())};
  }
  if (auto tg = triangle_count(g), th = triangle_count(h); tg != th) {
    return Distinction{"triangle count", std::to_string(tg), std::to_string(th)};
  }
  if (auto bg = is_bipartite(g), bh = is_bipartite(h); bg != bh) {
    return Distinction{"bipartite", bg ? "yes" : "no", bh ? "yes" : "no"};
  }
  return std::nullopt;
}

std::optional<Distinction> invariant_screen(const CirculantGraph& g, const CirculantGraph& h) {
  if (g.order() != h.order()) {
    return Distinction{"order", std::to_string(g.order()), std::to_string(h.order())};
  }
  if (g.degree() != h.degree()) {
    return Distinction{"degree", std::to_string(g.degree()), std::to_string(h.degree())};
  }
  if (g.edge_count_simple() != h.edge_count_simple()) {
    return Distinction{"edge count", std::to_string(g.edge_count_simple()),
                       std::to_string(h.edge_count_simple())};
  }
  if (auto tg = triangle_count(g), th = triangle_count(h); tg != th) {
    return Distinction{"triangle count", std::to_string(tg), std::to_string(th)};
  }
  // C_n(R) is bipartite iff n is even and every jump is odd.
  auto bipartite = [](const CirculantGraph& x) {
    const auto j = x.jumps().values();
    return x.order() % 2 == 0 && std::all_of(j.begin(), j.end(), [](int r) { return r % 2; });
  };
  if (auto bg = bipartite(g), bh = bipartite(h); bg != bh) {
    return Distinction{"bipartite", bg ? "yes" : "no", bh ? "yes" : "no"};
  }
  return std::nullopt;
}

bool verify_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                        const std::vector<Vertex>& perm) {
  const int n = g.order();
  if (h.order() != n || perm.size() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (g.edges().size() != h.edges().size()) return false;
  for (const auto& e : g.edges()) {
    if (!h.adjacent(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)])) {
      return false;
    }
  }
  return true;
}

namespace {

/// Pairwise data the search has to preserve.
struct PairTable {
  int n;
  std::vector<int> common;
  std::vector<int> triangles_at;

  explicit PairTable(const LabeledGraph& g)
      : n(g.order()),
        common(static_cast<std::size_t>(n) * n, 0),
        triangles_at(static_cast<std::size_t>(n), 0) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        common[at(u, v)] = common[at(v, u)] = common_neighbours(g, u, v);
        if (g.adjacent(u, v)) {
          triangles_at[static_cast<std::size_t>(u)] += common[at(u, v)];
          triangles_at[static_cast<std::size_t>(v)] += common[at(u, v)];
        }
      }
    }
  }

  std::size_t at(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(v);
  }
};

class Search {
 public:
  Search(const LabeledGraph& g, const LabeledGraph& h, bool pin_first)
      : g_(g), h_(h), tg_(g), th_(h), pin_first_(pin_first) {
    const int n = g.order();
    image_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), false);
    build_order();
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Start at 0, then repeatedly take the vertex with most already-ordered
  // neighbours (lowest index on ties).
  void build_order() {
    const int n = g_.order();
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(best)]) {
          best = v;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
      for (Vertex v = 0; v < n; ++v) {
        if (g_.adjacent(best, v)) ++links[static_cast<std::size_t>(v)];
      }
    }
  }

  bool compatible(std::size_t depth, Vertex w) const {
    const Vertex u = order_[depth];
    if (g_.degree(u) != h_.degree(w)) return false;
    if (tg_.triangles_at[static_cast<std::size_t>(u)] != th_.triangles_at[static_cast<std::size_t>(w)]) {
      return false;
    }
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex u2 = order_[k];
      const Vertex w2 = image_[static_cast<std::size_t>(u2)];
      if (g_.adjacent(u, u2) != h_.adjacent(w, w2)) return false;
      if (tg_.common[tg_.at(u, u2)] != th_.common[th_.at(w, w2)]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    const int n = g_.order();
    const Vertex last = (depth == 0 && pin_first_) ? 1 : n;
    for (Vertex w = 0; w < last; ++w) {
      if (used_[static_cast<std::size_t>(w)] || !compatible(depth, w)) continue;
      image_[static_cast<std::size_t>(u)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      image_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const LabeledGraph& g_;
  const LabeledGraph& h_;
  PairTable tg_;
  PairTable th_;
  bool pin_first_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> isomorphic(const LabeledGraph& g, const LabeledGraph& h,
                                              const OracleConfig& config) {
  const int n = g.order();
  if (n > config.order_bound || h.order() > config.order_bound) {
    throw Error(ErrorCode::bound_exceeded,
                "bound exceeded: order " + std::to_string(std::max(n, h.order())) +
                    " is above the oracle bound " + std::to_string(config.order_bound));
  }
  if (h.order() != n || g.edges().size() != h.edges().size()) return std::nullopt;

  // A circulant target is vertex-transitive, so some isomorphism (if any)
  // sends the first searched vertex to 0.
  const bool pin_first = detect_circulant(h).has_value();
  auto perm = Search(g, h, pin_first).run();
  if (perm && !verify_isomorphism(g, h, *perm)) {
    throw std::logic_error("isomorphism search produced an invalid witness");
  }
  return perm;
}

std::optional<std::vector<Vertex>> isomorphic(const CirculantGraph& g,
                                              const CirculantGraph& h,
                                              const OracleConfig& config) {
  if (g.order() > config.order_bound || h.order() > config.order_bound) {
    throw Error(ErrorCode::bound_exceeded,
                "bound exceeded: order " + std::to_string(std::max(g.order(), h.order())) +
                    " is above the oracle bound " + std::to_string(config.order_bound));
  }
  return isomorphic(adjacency(g), adjacency(h), config);
}

namespace {

std::vector<int> divisors_from_two(int n) {
  std::vector<int> out;
  for (int m = 2; m <= n; ++m) {
    if (n % m == 0) out.push_back(m);
  }
  return out;
}

}  // namespace

Classification classify_pair(const CirculantGraph& g, const CirculantGraph& h,
                             const OracleConfig& config) {
  if (g.order() != h.order()) {
    return verdict::NotIsomorphic{"order", "order " + std::to_string(g.order()) + " vs " +
                                               std::to_string(h.order())};
  }
  if (g.jumps() == h.jumps()) return verdict::Identical{};
  if (auto x = type1_contains(g, h.jumps())) return verdict::Type1{x->value()};

  const int n = g.order();
  const auto divisors = divisors_from_two(n);
  std::vector<std::tuple<int, int, JumpSet>> circulant_images;
  for (int m : divisors) {
    for (int t = 1; t < n / m; ++t) {
      const ThetaTransform transform(n, m, t);
      const auto forward = theta_exact_image(g, transform);
      if (forward.verdict && *forward.verdict == h.jumps()) return verdict::Type2{m, t, false};
      const auto backward = theta_exact_image(h, transform);
      if (backward.verdict && *backward.verdict == g.jumps()) return verdict::Type2{m, t, true};
      if (forward.verdict) circulant_images.emplace_back(m, t, *forward.verdict);
    }
  }

  // Least x first, then least (m, t).
  std::optional<verdict::Type1AfterType2> composite;
  for (const auto& [m, t, jumps] : circulant_images) {
    if (auto x = type1_contains(CirculantGraph(jumps), h.jumps())) {
      if (!composite || x->value() < composite->x) composite = verdict::Type1AfterType2{x->value(), m, t};
    }
  }
  if (composite) return *composite;

  if (auto d = invariant_screen(g, h)) return verdict::NotIsomorphic{d->invariant, d->describe()};
  if (auto perm = isomorphic(g, h, config)) return verdict::IsomorphicOther{std::move(*perm)};
  return verdict::NotIsomorphic{"", "exhaustive search found no isomorphism"};
}

}  // namespace circulant
