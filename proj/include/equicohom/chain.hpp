// Brute-force chain-level verification of the free theory: the cellular
// cochain complex of the free sphere with n cells (one free cell per
// dimension), in both the untwisted and the Λ-twisted cell structure, with
// cohomology computed by exact Smith-normal-form linear algebra and compared
// against the closed-form additive table in the stable range.
#pragma once

#include "equicohom/mackey.hpp"
#include "equicohom/point.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace equicohom {

enum class Twist { Integer, Lambda };

// Requested degrees reach into the range where the finite truncation no
// longer agrees with the colimit.
struct UnstableRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Cochain complex of the free sphere with one free cell in each of n
// consecutive dimensions.  Untwisted: terms A_e in degrees 0..n-1 with
// differentials alternating 1-t, 1+t, ... at level G/e (0, 2, ... at level
// G/G).  Lambda twist: the shifted cell structure, first term in degree -1
// (carrying an implicit +Λ), differentials alternating 2, 0, ... at level
// G/G.  In both structures the differential out of (integer) degree a is
// 1-t for even a and 1+t for odd a.  Requires n >= 1.
MackeyCochainComplex sphere_antipodal_complex(long long n, Twist twist);

// Largest degree at which the n-cell truncation already computes the colimit.
long long stable_degree_bound(long long n, Twist twist);

// Compare classify(cohomology_at(complex, a)) with the closed-form table of
// the free theory — ep_group_at((a, 0)) untwisted, ep_group_at((a, 1)) for
// the lambda twist — for every a in [amin, amax].  Throws UnstableRange if
// the range leaves the stable band (amax > n-2 untwisted, n-3 twisted).
CheckReport verify_ep_table(long long n, long long amin, long long amax, Twist twist);

// Level-G/e cross-check of the untwisted truncation: cohomology is Z in
// degrees 0 and n-1 and vanishes in between, and the augmented complex
// (a copy of Z mapped in by 1 ↦ 1 + t) is acyclic below n-1.  Requires n >= 2.
CheckReport level_e_crosscheck(long long n);

}  // namespace equicohom
