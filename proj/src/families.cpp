#include "circulant/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace circulant {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw Error(ErrorCode::bad_parameter, what);
}

void check_8n(int n, int s) {
  if (n < 2) reject("need n >= 2, got n = " + std::to_string(n));
  if (2 * s - 1 < 1) reject("need 1 <= 2s-1, got s = " + std::to_string(s));
  if (2 * s - 1 > 2 * n - 1) reject("need 2s-1 <= 2n-1, got s = " + std::to_string(s));
  if (n == 2 * s - 1) reject("need n != 2s-1, got n = " + std::to_string(n));
}

bool symmetric_pairs(std::span<const int> sorted, int v) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] + sorted[sorted.size() - 1 - i] != v) return false;
  }
  return true;
}

void print_members(std::ostream& out, int v, const std::vector<int>& values) {
  out << 'C' << v << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << values[i] << (i + 1 < values.size() ? "," : ")\n");
  }
}

}  // namespace

std::vector<int> admissible_s(int n) {
  std::vector<int> out;
  for (int s = 1; 2 * s - 1 <= 2 * n - 1; ++s) {
    if (n != 2 * s - 1) out.push_back(s);
  }
  return out;
}

Family8n gen_8n_basic(int n, int s) {
  check_8n(n, s);
  const int order = 8 * n;
  const int odd = 2 * s - 1;
  return Family8n{n, s, {},
                  reflexive_reduce(std::vector<int>{2, odd, 4 * n - odd}, order),
                  reflexive_reduce(std::vector<int>{2, 2 * n - odd, 2 * n + odd}, order)};
}

Family8n gen_8n_extended(int n, int s, std::vector<int> evens) {
  check_8n(n, s);
  if (evens.empty()) reject("extended family needs at least one even jump");
  int common = 0;
  bool unit_witness = false;
  for (int e : evens) {
    if (e <= 0 || e % 2 != 0) reject("jump " + std::to_string(e) + " is not a positive even");
    common = std::gcd(common, e / 2);
    if (std::gcd(4 * n, e / 2) == 1) unit_witness = true;
  }
  if (!unit_witness) {
    reject("no even jump 2y with gcd(4n, y) = 1 for n = " + std::to_string(n));
  }
  if (common != 1) reject("gcd of the halved even jumps is " + std::to_string(common));

  const int order = 8 * n;
  const int odd = 2 * s - 1;
  std::vector<int> r{odd, 4 * n - odd};
  std::vector<int> s_values{2 * n - odd, 2 * n + odd};
  r.insert(r.end(), evens.begin(), evens.end());
  s_values.insert(s_values.end(), evens.begin(), evens.end());
  return Family8n{n, s, std::move(evens), reflexive_reduce(r, order),
                  reflexive_reduce(s_values, order)};
}

bool is_prime(int value) noexcept {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::vector<FamilyNp3> gen_np3(int p, int n, const Np3Options& options) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    reject("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (n < 1) reject("need n >= 1, got n = " + std::to_string(n));
  const int v = n * p * p * p;
  const int np2 = n * p * p;
  const int k_limit = np2 - 1;
  const int k_max = options.k_max.value_or(options.full_range ? k_limit : n * p - 1);
  if (k_max < 1 || k_max > k_limit) {
    reject("k_max = " + std::to_string(k_max) + " outside [1, " + std::to_string(k_limit) + "]");
  }

  const int jumpsize = p + 1;
  const int js = 2 * jumpsize;
  std::vector<FamilyNp3> families;
  for (int k = 1; k <= k_max; ++k) {
    if (k % p == 0) continue;
    std::vector<int> base(static_cast<std::size_t>(js));
    base[0] = k;
    base[1] = p;
    for (int i = 2, j = 1; i < jumpsize; i += 2, ++j) {
      base[static_cast<std::size_t>(i)] = j * np2 - k;
      base[static_cast<std::size_t>(i) + 1] = j * np2 + k;
    }
    for (int i = 0; i < jumpsize; ++i) {
      base[static_cast<std::size_t>(js - 1 - i)] = v - base[static_cast<std::size_t>(i)];
    }
    std::sort(base.begin(), base.end());

    FamilyNp3 family{p, n, k, k % p, k / p, {base}, {}};
    for (int t = 1; t < p; ++t) {
      std::vector<int> next(base.size());
      std::transform(base.begin(), base.end(), next.begin(), [&](int r) {
        const std::int64_t moved = r + static_cast<std::int64_t>(n) * t * p * (r % p);
        return static_cast<int>(moved % v);
      });
      std::sort(next.begin(), next.end());
      family.full_members.push_back(std::move(next));
    }
    for (const auto& full : family.full_members) {
      if (!symmetric_pairs(full, v)) {
        throw std::logic_error("np^3 family member for k = " + std::to_string(k) +
                               " is not symmetric");
      }
      family.members.push_back(reflexive_reduce(full, v));
    }
    families.push_back(std::move(family));
  }
  return families;
}

std::vector<int> gen_np3_member_full(int p, int n, int x, int y, int i) {
  if (p < 3 || !is_prime(p)) reject("p = " + std::to_string(p) + " is not an odd prime");
  if (n < 1) reject("need n >= 1");
  const int np2 = n * p * p;
  const int v = np2 * p;
  if (x < 1 || x > p - 1) reject("need 1 <= x <= p-1, got x = " + std::to_string(x));
  if (y < 0 || x + y * p > np2 - 1) {
    reject("need 1 <= x+yp <= np^2-1, got x+yp = " + std::to_string(x + y * p));
  }
  if (i < 1 || i > p) reject("need 1 <= i <= p, got i = " + std::to_string(i));

  const std::int64_t d = static_cast<std::int64_t>(i - 1) * n * p * x + x + y * p;
  std::vector<std::int64_t> raw{p, d, v - d, v - p};
  for (int j = 1; j <= p - 1; ++j) {
    raw.push_back(static_cast<std::int64_t>(j) * np2 - d);
    raw.push_back(static_cast<std::int64_t>(j) * np2 + d);
  }
  std::vector<int> full;
  for (auto value : raw) full.push_back(static_cast<int>(floor_mod(value, v)));
  std::sort(full.begin(), full.end());
  return full;
}

JumpSet gen_np3_member(int p, int n, int x, int y, int i) {
  const auto full = gen_np3_member_full(p, n, x, y, i);
  return reflexive_reduce(full, n * p * p * p);
}

std::string np3_program_output(int p, int n_max, const Np3Options& options) {
  if (n_max < 1) reject("need n_max >= 1");
  std::ostringstream out;
  for (int n = 1; n <= n_max; ++n) {
    out << "\np = " << p << " and n=" << n << "\n";
    out << std::string(28, '-') << "\n";
    Np3Options per_n = options;
    if (per_n.k_max) per_n.k_max = std::min(*per_n.k_max, n * p * p - 1);
    for (const auto& family : gen_np3(p, n, per_n)) {
      for (const auto& member : family.full_members) {
        print_members(out, family.order(), member);
      }
      out << "\n" << std::string(34, '-') << "\n\n";
    }
  }
  return out.str();
}

}  // namespace circulant
