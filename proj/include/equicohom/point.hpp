// Closed-form models of the RO(G)-graded ordinary cohomology of a point for
// G = Z/2 with Burnside-ring Mackey functor coefficients, together with the
// cohomology of the universal free G-space EP and of the pair (EA, EP):
// additive groups, products and module actions, restriction/transfer between
// levels, and the maps of the long exact sequence tying the three together.
// All of it is exact integer arithmetic on canonical generators.
#pragma once

#include "equicohom/mackey.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace equicohom {

// A degree a + bΛ in RO(G), with Λ the sign representation of G = Z/2.
struct ROGDegree {
  long long a = 0;
  long long b = 0;

  friend ROGDegree operator+(ROGDegree l, ROGDegree r) { return {l.a + r.a, l.b + r.b}; }
  friend ROGDegree operator-(ROGDegree l, ROGDegree r) { return {l.a - r.a, l.b - r.b}; }
  auto operator<=>(const ROGDegree&) const = default;
};

// An inclusive box of degrees, the shared shape for verification sweeps.
struct DegreeBox {
  long long amin = -12, amax = 12;
  long long bmin = -12, bmax = 12;
};

// Canonical multiplicative generators of the level-G/G ring of the point.
// Degree 0 carries the Burnside ring A(Z/2) on the basis {1, g}; every other
// nonzero degree of the table has a single canonical generator.
struct GenOne {                                   // 1, degree 0
  bool operator==(const GenOne&) const = default;
};
struct GenG {                                     // g = [Z/2], degree 0
  bool operator==(const GenG&) const = default;
};
struct GenEpsXi {                                 // ε^m ξ^n; m,n ≥ 0, (m,n) ≠ (0,0)
  long long m = 0, n = 0;
  bool operator==(const GenEpsXi&) const = default;
};
struct GenInvEpsKappa {                           // ε^{-m} κ; m ≥ 1 (m = 0 reads as κ)
  long long m = 0;
  bool operator==(const GenInvEpsKappa&) const = default;
};
struct GenTauIota {                               // τ(ι^{-n}); n ≥ 2
  long long n = 0;
  bool operator==(const GenTauIota&) const = default;
};
struct GenInvEpsTau {                             // ε^{-m} τ(ι^{-(2k+1)}); m ≥ 1, k ≥ 1
  long long m = 0, k = 0;
  bool operator==(const GenInvEpsTau&) const = default;
};

using PointGenerator =
    std::variant<GenOne, GenG, GenEpsXi, GenInvEpsKappa, GenTauIota, GenInvEpsTau>;

// |ε| = Λ, |ξ| = -2 + 2Λ, |κ| = 0, |τ(ι^{-n})| = n - nΛ.
ROGDegree degree_of(const PointGenerator& gen);
std::string to_string(const PointGenerator& gen, bool ascii = false);

// The nine-case table for H^{a+bΛ}(pt).
CatalogName point_group_at(ROGDegree d);
// The canonical level-G/G generator at d (GenOne at degree 0); nullopt when
// that level vanishes (the zero cells and the R_- diagonal).
std::optional<PointGenerator> point_generator_at(ROGDegree d);

// A homogeneous element of H^deg(pt) at level G/G: c1·gen(deg), plus cg·g at
// degree 0 only.  Stored reduced: torsion coefficients live in {0,1} and
// degrees whose group vanishes at level G/G hold the zero element.
struct PointElement {
  ROGDegree deg;
  Int c1 = 0;
  Int cg = 0;

  static PointElement zero(ROGDegree d) { return {d, 0, 0}; }
  static PointElement one() { return {{0, 0}, 1, 0}; }
  static PointElement g_elt() { return {{0, 0}, 0, 1}; }
  static PointElement kappa() { return {{0, 0}, 2, -1}; }  // κ = 2 - g
  static PointElement generator(const PointGenerator& gen);

  bool is_zero() const { return c1 == 0 && cg == 0; }
  PointElement& reduce();  // canonical coefficient representatives

  // Graded equality: zero is zero in every degree (res/tr bookkeeping can park
  // a vanishing element in a neighbouring slot); otherwise compare canonical
  // representatives in the common degree.
  friend bool operator==(const PointElement& x, const PointElement& y) {
    PointElement a = x, b = y;
    a.reduce();
    b.reduce();
    if (a.is_zero() && b.is_zero()) return true;
    return a.deg == b.deg && a.c1 == b.c1 && a.cg == b.cg;
  }
};

PointElement operator+(const PointElement& x, const PointElement& y);  // same degree
PointElement operator-(const PointElement& x, const PointElement& y);
PointElement operator*(const Int& c, const PointElement& x);

// Product in the commutative ring H^*(pt): closed form on generator pairs,
// extended bilinearly through the degree-0 coefficients.
PointElement point_mul(const PointElement& x, const PointElement& y);

// The generator-level product together with the mechanism that determines it,
// for audit output; `why`, when non-null, receives a one-line justification.
PointElement generator_product(const PointGenerator& x, const PointGenerator& y,
                               std::string* why = nullptr);

// An element c·ι^k of the level-G/e ring Z[ι, ι^{-1}]; ι^k sits in RO(G)
// degree -k + kΛ and the Weyl group acts by t·ι^k = (-1)^k ι^k.
struct LevelEElement {
  long long k = 0;
  Int coeff = 0;

  bool is_zero() const { return coeff == 0; }
  friend bool operator==(const LevelEElement& x, const LevelEElement& y) {
    if (x.is_zero() && y.is_zero()) return true;
    return x.k == y.k && x.coeff == y.coeff;
  }
};

LevelEElement level_e_mul(const LevelEElement& x, const LevelEElement& y);
LevelEElement level_e_weyl(const LevelEElement& x);

// Restriction to level G/e and transfer back; tr(ι^0) = g, tr(ι^{-1}) = 0,
// tr(ι^k) = 2ξ^{k/2} for even k > 0, 0 for odd k > 0, τ(ι^k) for k ≤ -2.
LevelEElement point_res(const PointElement& x);
PointElement point_tr(const LevelEElement& y);

// A formal sum of homogeneous pieces in distinct degrees (the CLI works with
// these); arithmetic is degree-wise with zero pieces dropped.
using PointSum = std::map<ROGDegree, PointElement>;

PointSum to_sum(const PointElement& x);
PointSum sum_add(const PointSum& x, const PointSum& y);
PointSum sum_negate(const PointSum& x);
PointSum sum_mul(const PointSum& x, const PointSum& y);
bool sum_is_zero(const PointSum& x);

// ----- The cohomology of EP ------------------------------------------------

// ε^m ξ^k at level G/G; m ≥ 0, k any integer.  |ε^m ξ^k| = (-2k) + (m+2k)Λ.
struct EPMonomial {
  long long m = 0;
  long long k = 0;
  auto operator<=>(const EPMonomial&) const = default;
};

ROGDegree degree_of(const EPMonomial& mono);

// Element of the level-G/G ring Z[ε, ξ, ξ^{-1}]/(2ε): Laurent polynomials in
// ξ with a mod-2 part in positive ε powers.  Not necessarily homogeneous.
struct EPElement {
  std::map<EPMonomial, Int> terms;

  static EPElement zero() { return {}; }
  static EPElement monomial(long long m, long long k, Int c = 1);

  bool is_zero() const { return terms.empty(); }
  EPElement& reduce();
  bool operator==(const EPElement&) const = default;
};

EPElement operator+(const EPElement& x, const EPElement& y);
EPElement operator-(const EPElement& x, const EPElement& y);
EPElement operator*(const Int& c, const EPElement& x);
EPElement ep_mul(const EPElement& x, const EPElement& y);

// Additive table for H^{a+bΛ}(EP): R / R_- on the diagonal a+b = 0 for a
// even / odd, ⟨Z/2⟩ above the diagonal for a even, zero otherwise.
CatalogName ep_group_at(ROGDegree d);

// ----- The cohomology of the pair (EA, EP) ---------------------------------

// k = 0 encodes ε^m κ (degree bΛ with b = m); k ≥ 1 encodes ε^m τ_{2k+1}
// (degree (2k+1)(1-Λ) + mΛ).  m ranges over all of Z: ε acts invertibly.
struct EAPMonomial {
  long long m = 0;
  long long k = 0;
  auto operator<=>(const EAPMonomial&) const = default;
};

ROGDegree degree_of(const EAPMonomial& mono);

// Element of the level-G/G part of H^*(EA, EP): Z on the κ family, Z/2 on
// the τ family.  A module over the point ring, not a unital ring.
struct EAPElement {
  std::map<EAPMonomial, Int> terms;

  static EAPElement zero() { return {}; }
  static EAPElement monomial(long long m, long long k, Int c = 1);

  bool is_zero() const { return terms.empty(); }
  EAPElement& reduce();
  bool operator==(const EAPElement&) const = default;
};

EAPElement operator+(const EAPElement& x, const EAPElement& y);
EAPElement operator-(const EAPElement& x, const EAPElement& y);
EAPElement operator*(const Int& c, const EAPElement& x);

// ⟨Z⟩ on the line a = 0, ⟨Z/2⟩ for odd a ≥ 3, zero otherwise.
CatalogName eap_group_at(ROGDegree d);

// The action of the point ring: ε shifts (an isomorphism), ξ lowers the τ
// index and kills κ, g and the τ-family generators act by zero.
EAPElement eap_action(const PointElement& p, const EAPElement& x);
EAPElement eap_action(const PointSum& p, const EAPElement& x);

// ----- The long exact sequence ---------------------------------------------
//
//   ... -> H^α(EA,EP) --ψ--> H^α(pt) --φ--> H^α(EP) --δ--> H^{α+1}(EA,EP) -> ...

// φ: ring map; 1 ↦ 1, g ↦ 2, ε^m ξ^n ↦ ε^m ξ^n, τ(ι^{-2k}) ↦ 2ξ^{-k},
// the κ and odd-τ families ↦ 0.
EPElement map_phi(const PointElement& x);
EPElement map_phi(const PointSum& x);

// ψ: module map; ε^m κ ↦ ε^m κ (meaning ε^{-|m|}κ, κ = 2 - g, or 2ε^m as m is
// negative, zero, positive) and ε^{-m} τ_{2k+1} ↦ ε^{-m} τ(ι^{-(2k+1)}) for
// m ≥ 0, with the positive-ε τ family mapping to zero.
PointSum map_psi(const EAPElement& x);

// δ: ε^m ξ^{-k} ↦ ε^{m+1} τ_{2k+1} for k ≥ 1, zero on ξ^{≥0} terms.
EAPElement map_delta(const EPElement& x);

// Degreewise exactness of the sequence at all three spots over the box, at
// level G/G, via integer matrices in the canonical bases.  Returns a list of
// failure descriptions; empty means exact everywhere in the box.
std::vector<std::string> les_point_check(const DegreeBox& box);

}  // namespace equicohom
