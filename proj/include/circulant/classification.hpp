#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

namespace verdict {

struct Identical {
  friend bool operator==(const Identical&, const Identical&) = default;
};

/// second = reduce(x * first)
struct Type1 {
  int x;
  friend bool operator==(const Type1&, const Type1&) = default;
};

/// theta_{n,m,t} carries one graph exactly onto the other. When `reversed`
/// is set the transform was applied to the second graph.
struct Type2 {
  int m;
  int t;
  bool reversed = false;
  friend bool operator==(const Type2&, const Type2&) = default;
};

/// second = reduce(x * theta_{n,m,t}(first))
struct Type1AfterType2 {
  int x;
  int m;
  int t;
  friend bool operator==(const Type1AfterType2&, const Type1AfterType2&) = default;
};

/// permutation[v] is the image of vertex v of the first graph.
struct IsomorphicOther {
  std::vector<Vertex> permutation;
  friend bool operator==(const IsomorphicOther&, const IsomorphicOther&) = default;
};

struct NotIsomorphic {
  std::string invariant;  // empty when settled by exhaustive search
  std::string reason;
  friend bool operator==(const NotIsomorphic&, const NotIsomorphic&) = default;
};

struct NonCirculantImage {
  friend bool operator==(const NonCirculantImage&, const NonCirculantImage&) = default;
};

}  // namespace verdict

using Classification =
    std::variant<verdict::Identical, verdict::Type1, verdict::Type2,
                 verdict::Type1AfterType2, verdict::IsomorphicOther,
                 verdict::NotIsomorphic, verdict::NonCirculantImage>;

/// "identical", "type1", "type2", "type1-after-type2", "isomorphic-other",
/// "not-isomorphic", "non-circulant".
std::string_view tag_name(const Classification& c) noexcept;

/// One-line human form, e.g. "Type2 m=3 t=1".
std::string describe(const Classification& c);

}  // namespace circulant
