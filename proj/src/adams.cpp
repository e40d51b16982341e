#include "circulant/adams.hpp"

#include <numeric>
#include <string>

namespace circulant {

int gcd(int a, int b) noexcept { return std::gcd(a, b); }

UnitMultiplier::UnitMultiplier(int n, int x) : n_(n), x_(x) {
  if (n < 3) {
    throw Error(ErrorCode::bad_order, "order " + std::to_string(n) + " is below 3");
  }
  if (x < 1 || x > n - 1 || std::gcd(x, n) != 1) {
    throw Error(ErrorCode::bad_unit, std::to_string(x) + " is not a unit mod " +
                                         std::to_string(n));
  }
}

UnitMultiplier UnitMultiplier::inverse() const {
  // Extended Euclid on (x, n).
  std::int64_t r0 = n_, r1 = x_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return UnitMultiplier(n_, static_cast<int>(floor_mod(s0, n_)));
}

std::vector<UnitMultiplier> units(int n) {
  if (n < 3) {
    throw Error(ErrorCode::bad_order, "order " + std::to_string(n) + " is below 3");
  }
  std::vector<UnitMultiplier> out;
  for (int x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) out.emplace_back(n, x);
  }
  return out;
}

CirculantGraph adams_image(const CirculantGraph& graph, const UnitMultiplier& u) {
  if (u.order() != graph.order()) {
    throw Error(ErrorCode::order_mismatch,
                "multiplier mod " + std::to_string(u.order()) + " applied to order " +
                    std::to_string(graph.order()));
  }
  std::vector<std::int64_t> scaled;
  scaled.reserve(graph.jumps().size());
  for (int r : graph.jumps().values()) {
    scaled.push_back(static_cast<std::int64_t>(r) * u.value());
  }
  return CirculantGraph(reflexive_reduce(scaled, graph.order()));
}

Type1Set type1_set(const CirculantGraph& graph) {
  Type1Set result{graph, {}, {}};
  for (const auto& u : units(graph.order())) {
    // Ascending scan keeps the first (least) witness.
    result.witnesses.try_emplace(adams_image(graph, u), u);
  }
  for (const auto& [member, witness] : result.witnesses) {
    result.members.push_back(member);
  }
  return result;
}

std::optional<UnitMultiplier> type1_contains(const CirculantGraph& graph,
                                             const JumpSet& target) {
  if (target.order() != graph.order()) {
    throw Error(ErrorCode::order_mismatch, "type1_contains across different orders");
  }
  if (target.size() != graph.jumps().size()) return std::nullopt;
  for (const auto& u : units(graph.order())) {
    if (adams_image(graph, u).jumps() == target) return u;
  }
  return std::nullopt;
}

UnitMultiplier type1_compose(const UnitMultiplier& x, const UnitMultiplier& y) {
  if (x.order() != y.order()) {
    throw Error(ErrorCode::order_mismatch, "composing multipliers of different orders");
  }
  const auto product = static_cast<std::int64_t>(x.value()) * y.value();
  return UnitMultiplier(x.order(), static_cast<int>(product % x.order()));
}

}  // namespace circulant
