#include "circulant/theta.hpp"

#include <algorithm>
#include <set>

namespace circulant {

ThetaTransform::ThetaTransform(int n, int m, int t) : n_(n), m_(m), t_(t) {
  if (n < 3) {
    throw Error(ErrorCode::bad_order, "order " + std::to_string(n) + " is below 3");
  }
  if (m < 2 || n % m != 0) {
    throw Error(ErrorCode::bad_modulus,
                "m = " + std::to_string(m) + " must be >= 2 and divide n = " +
                    std::to_string(n));
  }
  if (t < 0 || t >= n / m) {
    throw Error(ErrorCode::bad_shift, "t = " + std::to_string(t) + " outside [0, " +
                                          std::to_string(n / m - 1) + "]");
  }
}

ThetaTransform ThetaTransform::then(const ThetaTransform& next) const {
  if (next.n_ != n_ || next.m_ != m_) {
    throw Error(ErrorCode::order_mismatch, "composing theta maps with different n or m");
  }
  return ThetaTransform(n_, m_, (t_ + next.t_) % shift_count());
}

Vertex theta_vertex(const ThetaTransform& transform, Vertex x) {
  if (x < 0 || x >= transform.order()) {
    throw Error(ErrorCode::bad_jumps, "vertex " + std::to_string(x) + " outside Z_" +
                                          std::to_string(transform.order()));
  }
  return transform(x);
}

std::vector<Vertex> vertex_permutation(const ThetaTransform& transform) {
  std::vector<Vertex> perm(static_cast<std::size_t>(transform.order()));
  for (Vertex x = 0; x < transform.order(); ++x) perm[static_cast<std::size_t>(x)] = transform(x);
  return perm;
}

FastImage theta_fast(const JumpSet& jumps, const ThetaTransform& transform) {
  if (jumps.order() != transform.order()) {
    throw Error(ErrorCode::order_mismatch, "theta order differs from jump set order");
  }
  const std::int64_t n = transform.order();
  const std::int64_t m = transform.modulus();
  const std::int64_t t = transform.shift();

  FastImage out;
  const auto closure = symmetric_closure(jumps);
  for (int r : closure.values()) {
    out.multiset.push_back((r + (r % m) * t * m) % n);
  }
  std::sort(out.multiset.begin(), out.multiset.end());

  // Pairing test: the i-th smallest and i-th largest must sum to n.
  const auto size = out.multiset.size();
  out.symmetric = true;
  for (std::size_t i = 0; i < size; ++i) {
    if (out.multiset[i] + out.multiset[size - 1 - i] != n) {
      out.symmetric = false;
      break;
    }
  }
  if (out.symmetric) {
    out.reduced = reflexive_reduce(out.multiset, static_cast<int>(n));
  }
  return out;
}

LabeledGraph apply(const ThetaTransform& transform, const LabeledGraph& graph) {
  if (graph.order() != transform.order()) {
    throw Error(ErrorCode::order_mismatch, "theta order differs from graph order");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) pairs.emplace_back(transform(e.a), transform(e.b));
  return LabeledGraph(graph.order(), pairs);
}

ThetaImage theta_exact_image(const CirculantGraph& graph, const ThetaTransform& transform) {
  if (graph.order() != transform.order()) {
    throw Error(ErrorCode::order_mismatch, "theta order differs from graph order");
  }
  auto labeled = apply(transform, adjacency(graph));
  auto verdict = detect_circulant(labeled);
  return ThetaImage{graph, transform, std::move(labeled), std::move(verdict),
                    theta_fast(graph.jumps(), transform)};
}

Classification classify_theta(const CirculantGraph& graph, const ThetaTransform& transform) {
  const auto image = theta_exact_image(graph, transform);
  if (!image.verdict) return verdict::NonCirculantImage{};
  if (*image.verdict == graph.jumps()) return verdict::Identical{};
  if (auto x = type1_contains(graph, *image.verdict)) return verdict::Type1{x->value()};
  return verdict::Type2{transform.modulus(), transform.shift()};
}

namespace {

void require_modulus(const CirculantGraph& graph, int m) {
  if (m < 2 || graph.order() % m != 0) {
    throw Error(ErrorCode::bad_modulus,
                "m = " + std::to_string(m) + " must be >= 2 and divide n = " +
                    std::to_string(graph.order()));
  }
}

std::vector<std::string> hypothesis_warnings(const CirculantGraph& graph, int m) {
  std::vector<std::string> warnings;
  const int n = graph.order();
  const auto jumps = graph.jumps().values();
  if (std::none_of(jumps.begin(), jumps.end(),
                   [&](int r) { return gcd(n, r) % m == 0; })) {
    warnings.push_back("no jump r has m | gcd(n, r)");
  }
  if (jumps.size() < 3) {
    warnings.push_back("fewer than 3 jumps");
  }
  const std::int64_t cube = static_cast<std::int64_t>(m) * m * m;
  if (n % cube != 0) {
    warnings.push_back("m^3 does not divide n");
  }
  return warnings;
}

}  // namespace

Type2SetResult type2_set(const CirculantGraph& graph, int m) {
  require_modulus(graph, m);
  const int count = graph.order() / m;
  Type2SetResult result{graph, m, {graph}, {0}, std::nullopt, count,
                        hypothesis_warnings(graph, m)};
  bool period_found = false;
  for (int t = 1; t < count; ++t) {
    const ThetaTransform transform(graph.order(), m, t);
    const auto image = theta_exact_image(graph, transform);
    if (!image.verdict) continue;
    if (*image.verdict == graph.jumps()) {
      if (!period_found) {
        result.period = t;
        period_found = true;
      }
      continue;
    }
    if (type1_contains(graph, *image.verdict)) continue;
    if (!result.t1) result.t1 = t;
    CirculantGraph member(*image.verdict);
    if (std::find(result.members.begin(), result.members.end(), member) ==
        result.members.end()) {
      result.members.push_back(std::move(member));
      result.member_shifts.push_back(t);
    }
  }
  return result;
}

std::vector<ThetaImage> vnm_set(const CirculantGraph& graph, int m) {
  require_modulus(graph, m);
  std::vector<ThetaImage> images;
  for (int t = 0; t < graph.order() / m; ++t) {
    images.push_back(theta_exact_image(graph, ThetaTransform(graph.order(), m, t)));
  }
  return images;
}

GroupReport type2_group_check(const Type2SetResult& set) {
  GroupReport report;
  const int n = set.base.order();
  const int period = set.period;
  const auto base_edges = adjacency(set.base);

  std::set<int> elements;
  for (int t : set.member_shifts) elements.insert(t % period);
  report.elements.assign(elements.begin(), elements.end());
  report.order = static_cast<int>(elements.size());

  auto image_of = [&](int t) { return apply(ThetaTransform(n, set.m, t), base_edges); };
  auto label = [](int t) { return "t=" + std::to_string(t); };

  if (!elements.contains(0)) {
    report.has_identity = false;
    report.violations.push_back("identity t=0 missing");
  }
  for (int a : elements) {
    const auto image_a = image_of(a);
    if (!elements.contains((period - a) % period)) {
      report.has_inverses = false;
      report.violations.push_back("no inverse for " + label(a));
    }
    for (int b : elements) {
      const int sum = (a + b) % period;
      const auto composed = apply(ThetaTransform(n, set.m, b), image_a);
      if (!elements.contains(sum) || composed != image_of(sum)) {
        report.closed = false;
        report.violations.push_back("closure fails for " + label(a) + " + " + label(b));
      }
      const auto swapped = apply(ThetaTransform(n, set.m, a), image_of(b));
      if (composed != swapped) {
        report.commutative = false;
        report.violations.push_back("non-commuting pair " + label(a) + ", " + label(b));
      }
    }
  }

  for (int g : elements) {
    std::set<int> generated;
    int s = 0;
    do {
      generated.insert(s);
      s = (s + g) % period;
    } while (s != 0);
    if (generated == elements) {
      report.cyclic = true;
      report.generator = g;
      break;
    }
  }
  return report;
}

}  // namespace circulant
