#pragma once

// Generators for explicit Type-2 families.
//
//  * Order 8n, m = 2: R = {2, 2s-1, 4n-(2s-1)}, S = {2, 2n-(2s-1), 2n+2s-1},
//    swapped by theta_{8n,2,n} (and theta_{8n,2,3n}). The extended form
//    replaces {2} by a list of even jumps {2p_1, ..., 2p_k}.
//  * Order np^3, m = p: p-member families
//      R_i = {p, d_i, j*np^2 +- d_i (j = 1..p-1), np^3 - d_i, np^3 - p}
//    with d_i = (i-1)*n*p*x + x + y*p, cycled by theta_{np^3,p,n}.

#include <optional>
#include <string>
#include <vector>

#include "circulant/core.hpp"
#include "circulant/theta.hpp"

namespace circulant {

struct Family8n {
  int n;
  int s;
  std::vector<int> evens;  // empty for the basic form
  JumpSet r;
  JumpSet s_set;

  int order() const noexcept { return 8 * n; }
  ThetaTransform transform() const { return ThetaTransform(8 * n, 2, n); }
};

Family8n gen_8n_basic(int n, int s);

/// Requires a non-empty list of even jumps 2p_i with gcd(p_i) = 1 and some
/// 2y among them with gcd(4n, y) = 1.
Family8n gen_8n_extended(int n, int s, std::vector<int> evens);

/// All admissible s for a given n.
std::vector<int> admissible_s(int n);

struct FamilyNp3 {
  int p;
  int n;
  int k;  // x + y*p
  int x;
  int y;
  /// Full sorted symmetric jump lists in generator order (t = 0..p-1).
  std::vector<std::vector<int>> full_members;
  /// The same members in reduced form.
  std::vector<JumpSet> members;

  int order() const noexcept { return n * p * p * p; }
};

struct Np3Options {
  /// Largest k scanned; defaults to n*p - 1 (full_range: n*p^2 - 1).
  std::optional<int> k_max;
  bool full_range = false;
};

bool is_prime(int value) noexcept;

std::vector<FamilyNp3> gen_np3(int p, int n, const Np3Options& options = {});

/// R_i built directly from d_i, as the full sorted symmetric list.
std::vector<int> gen_np3_member_full(int p, int n, int x, int y, int i);
JumpSet gen_np3_member(int p, int n, int x, int y, int i);

/// Text as printed by the original generator: per-n header and rule, one
/// "C{v}(...)" line per member, dashed separator after each family.
std::string np3_program_output(int p, int n_max, const Np3Options& options = {});

}  // namespace circulant
