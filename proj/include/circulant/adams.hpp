#pragma once

// Type-1 (Adam's) isomorphism: multiplier maps v_i -> v_{x*i} for units x of
// Z_n, acting on jump sets as R -> xR followed by reflexive reduction.

#include <map>
#include <optional>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

int gcd(int a, int b) noexcept;

class UnitMultiplier {
 public:
  /// Throws bad_unit unless 1 <= x <= n-1 and gcd(x, n) = 1.
  UnitMultiplier(int n, int x);

  int order() const noexcept { return n_; }
  int value() const noexcept { return x_; }
  UnitMultiplier inverse() const;

  friend bool operator==(const UnitMultiplier&, const UnitMultiplier&) = default;
  friend auto operator<=>(const UnitMultiplier&, const UnitMultiplier&) = default;

 private:
  int n_;
  int x_;
};

struct Type1Set {
  CirculantGraph base;
  /// Sorted by jump sequence.
  std::vector<CirculantGraph> members;
  /// Least unit producing each member.
  std::map<CirculantGraph, UnitMultiplier> witnesses;
};

/// Units of Z_n in ascending order; size is Euler's totient.
std::vector<UnitMultiplier> units(int n);

CirculantGraph adams_image(const CirculantGraph& graph, const UnitMultiplier& u);

Type1Set type1_set(const CirculantGraph& graph);

/// Least unit x with reduce(x*R) = target, if any.
std::optional<UnitMultiplier> type1_contains(const CirculantGraph& graph,
                                             const JumpSet& target);

UnitMultiplier type1_compose(const UnitMultiplier& x, const UnitMultiplier& y);

}  // namespace circulant
