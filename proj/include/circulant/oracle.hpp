#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground truth for isomorphism questions.
 *
 * isomorphic() is an exhaustive backtracking search that shares no code with
 * the theta or multiplier machinery. Candidate images must agree with every
 * already-mapped vertex on adjacency and on the number of common
 * neighbours. A witness is re-verified edge by edge before it is returned.
 *
 * classify_pair() tries the cheap structured explanations first (identity,
 * multiplier, single theta, multiplier after theta) and falls back to the
 * invariant screen and the search.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circulant/classification.hpp"
#include "circulant/core.hpp"

namespace circulant {

inline constexpr int kDefaultOracleBound = 64;

struct OracleConfig {
  int order_bound = kDefaultOracleBound;

  /// Default bound, overridden by CIRCULANT_ORACLE_BOUND when set.
  static OracleConfig from_environment();
};

/// Triangles via jump arithmetic: ordered pairs (a, b) of R* with a + b in R*
/// are the closed 3-walks through a vertex.
std::int64_t triangle_count(const CirculantGraph& graph);

/// Triangles via trace(A^3) / 6 on the boolean adjacency matrix.
std::int64_t triangle_count(const LabeledGraph& graph);

bool is_bipartite(const LabeledGraph& graph);

struct Distinction {
  std::string invariant;  // "degree", "edge count", "triangle count", "bipartite"
  std::string first;
  std::string second;

  std::string describe() const;
};

std::optional<Distinction> invariant_screen(const CirculantGraph& g, const CirculantGraph& h);
std::optional<Distinction> invariant_screen(const LabeledGraph& g, const LabeledGraph& h);

/// True iff perm maps the edge multiset of g exactly onto that of h.
bool verify_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                        const std::vector<Vertex>& perm);

/// permutation[v] is the image in h of vertex v of g. Throws bound_exceeded
/// when the order exceeds config.order_bound.
std::optional<std::vector<Vertex>> isomorphic(const LabeledGraph& g, const LabeledGraph& h,
                                              const OracleConfig& config = {});
std::optional<std::vector<Vertex>> isomorphic(const CirculantGraph& g,
                                              const CirculantGraph& h,
                                              const OracleConfig& config = {});

/// Witness preference: least x, then least m, then least t.
Classification classify_pair(const CirculantGraph& g, const CirculantGraph& h,
                             const OracleConfig& config = {});

}  // namespace circulant
