// The trigraded cohomology ring of the equivariant infinite projective space:
// normal-form basis B over the point ring, the fixed-set rings with point /
// free / pair coefficients, the involution χ* and the restriction maps ρ±*,
// the projections π±* to the middle stratum, and the Mayer–Vietoris, basis,
// and long-exact-sequence verification oracles.
#pragma once

#include "equicohom/chain.hpp"  // CheckReport
#include "equicohom/mackey.hpp"
#include "equicohom/point.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equicohom {

// ---------------------------------------------------------------------------
// Degrees a + bΛ + nΩ.

struct PiDegree {
  long long a = 0;
  long long b = 0;
  long long n = 0;

  friend PiDegree operator+(PiDegree x, PiDegree y) { return {x.a + y.a, x.b + y.b, x.n + y.n}; }
  friend PiDegree operator-(PiDegree x, PiDegree y) { return {x.a - y.a, x.b - y.b, x.n - y.n}; }
  auto operator<=>(const PiDegree&) const = default;
};

inline PiDegree chi_degree(PiDegree d) { return {d.a, d.b, -d.n}; }          // Ω ↦ -Ω
inline ROGDegree restrict_plus_degree(PiDegree d) { return {d.a + d.n, d.b - d.n}; }
inline ROGDegree restrict_minus_degree(PiDegree d) { return {d.a - d.n, d.b + d.n}; }

// ---------------------------------------------------------------------------
// Monomials in the four multiplicative generators, and the normal-form basis.

// ζ^i ζ̄^j c^k c̄^l with all exponents ≥ 0.
struct CpMonomial {
  long long i = 0, j = 0, k = 0, l = 0;
  auto operator<=>(const CpMonomial&) const = default;
};

// |c| = (1,1,1), |c̄| = (1,1,-1), |ζ| = (-1,1,1), |ζ̄| = (-1,1,-1).
PiDegree monomial_degree(const CpMonomial& m);

enum class BasisFamily { ZetaC, ZbarCbar, CCbar, ZbarCCbar, ZetaCCbar };

// The five disjoint families forming the basis B:
//   ZetaC      ζ^m c^n        m ≥ 0, n ≥ 0   (m = n = 0 is the unit)
//   ZbarCbar   ζ̄^m c̄^n       m, n ≥ 0, m+n > 0
//   CCbar      c^m c̄^n        m > 0, n > 0
//   ZbarCCbar  ζ̄ c^m c̄^n     m > n ≥ 0
//   ZetaCCbar  ζ c^m c̄^n      n > m+1, m ≥ 0
struct BasisBMonomial {
  BasisFamily family = BasisFamily::ZetaC;
  long long m = 0;
  long long n = 0;
  auto operator<=>(const BasisBMonomial&) const = default;
};

CpMonomial to_monomial(const BasisBMonomial& b);
std::optional<BasisBMonomial> basis_of(const CpMonomial& m);  // nullopt if not in B
PiDegree degree_of(const BasisBMonomial& b);
std::string to_string(const BasisBMonomial& b, bool ascii = false);

// The basis elements in dimensions a + bΛ + nΩ for fixed n, in the order of
// the three closed-form lists; the free family parameter runs 0..bound.
std::vector<BasisBMonomial> enumerate_basis_B(long long n, long long bound);

// ---------------------------------------------------------------------------
// Ring elements: finite sums Σ_β p_β · β with point-ring coefficients.

struct CpElement {
  // Coefficients are sums of homogeneous point classes, keyed by degree.
  std::map<BasisBMonomial, PointSum> terms;

  static CpElement zero() { return {}; }
  static CpElement unit();
  static CpElement monomial(const BasisBMonomial& b);
  static CpElement monomial(const BasisBMonomial& b, const PointElement& coeff);

  bool is_zero() const;
  CpElement& reduce();  // drop vanishing coefficients
  friend bool operator==(const CpElement& x, const CpElement& y);
};

CpElement operator+(const CpElement& x, const CpElement& y);
CpElement operator-(const CpElement& x, const CpElement& y);
CpElement operator*(const Int& c, const CpElement& x);
CpElement cp_scale(const PointElement& p, const CpElement& x);  // P*-module action
CpElement cp_scale(const PointSum& p, const CpElement& x);

// Exact rewriting of a raw monomial into the basis B, using ζζ̄ = ξ,
// ζc̄ = ε² - (1-g)ζ̄c and ζ̄c = ε² - (1-g)ζc̄; each step strictly lowers the
// total exponent weight, so the procedure terminates, and it is the identity
// on monomials already in B.
CpElement normalize(const CpMonomial& m);
CpElement normalize(const CpMonomial& m, const PointElement& coeff);

CpElement cp_mul(const CpElement& x, const CpElement& y);

// The ring involution: swaps c ↔ c̄ and ζ ↔ ζ̄, fixes point coefficients,
// negates the Ω part of every degree.
CpElement chi_star(const CpElement& x);

// ---------------------------------------------------------------------------
// Fixed-set rings: Laurent polynomials in ζ± with polynomial c±, over the
// point ring, the free theory, or the pair theory.

struct FixedMonomial {
  long long s = 0;  // ζ exponent, any sign
  long long j = 0;  // c exponent, ≥ 0
  auto operator<=>(const FixedMonomial&) const = default;
};

// |c±| = (2,0,0); |ζ₊| = (-1,1,1); |ζ₋| = (1,-1,1).
PiDegree fixed_monomial_degree_plus(const FixedMonomial& m);
PiDegree fixed_monomial_degree_minus(const FixedMonomial& m);

struct FixedPoly {
  std::map<FixedMonomial, PointSum> terms;

  static FixedPoly zero() { return {}; }
  static FixedPoly monomial(const FixedMonomial& m, const PointElement& coeff);
  bool is_zero() const;
  FixedPoly& reduce();
  friend bool operator==(const FixedPoly& x, const FixedPoly& y);
};
FixedPoly operator+(const FixedPoly& x, const FixedPoly& y);
FixedPoly operator-(const FixedPoly& x, const FixedPoly& y);
FixedPoly fixed_mul(const FixedPoly& x, const FixedPoly& y);
FixedPoly fixed_scale(const PointElement& p, const FixedPoly& x);

struct FixedEPPoly {
  std::map<FixedMonomial, EPElement> terms;

  static FixedEPPoly zero() { return {}; }
  static FixedEPPoly monomial(const FixedMonomial& m, const EPElement& coeff);
  bool is_zero() const;
  FixedEPPoly& reduce();
  friend bool operator==(const FixedEPPoly& x, const FixedEPPoly& y);
};
FixedEPPoly operator+(const FixedEPPoly& x, const FixedEPPoly& y);
FixedEPPoly operator-(const FixedEPPoly& x, const FixedEPPoly& y);
FixedEPPoly fixed_ep_mul(const FixedEPPoly& x, const FixedEPPoly& y);

struct FixedEAPPoly {
  std::map<FixedMonomial, EAPElement> terms;

  static FixedEAPPoly zero() { return {}; }
  static FixedEAPPoly monomial(const FixedMonomial& m, const EAPElement& coeff);
  bool is_zero() const;
  FixedEAPPoly& reduce();
  friend bool operator==(const FixedEAPPoly& x, const FixedEAPPoly& y);
};
FixedEAPPoly operator+(const FixedEAPPoly& x, const FixedEAPPoly& y);
FixedEAPPoly operator-(const FixedEAPPoly& x, const FixedEAPPoly& y);
// Module action of a point class with ξ-exponents ≥ 0 on pair coefficients.
FixedEAPPoly fixed_eap_scale(const PointElement& p, const FixedEAPPoly& x);

struct FixedElement {
  FixedPoly plus, minus;
  friend bool operator==(const FixedElement&, const FixedElement&) = default;
};
struct FixedEPElement {
  FixedEPPoly plus, minus;
  friend bool operator==(const FixedEPElement&, const FixedEPElement&) = default;
};
struct FixedEAPElement {
  FixedEAPPoly plus, minus;
  friend bool operator==(const FixedEAPElement&, const FixedEAPElement&) = default;
};

// The middle stratum has the same shape as one fixed-set branch, in the
// variables c̃, ζ̃ with free-theory coefficients.
using ZRingElement = FixedEPPoly;

// ---------------------------------------------------------------------------
// The structure maps.

// ρ±*: determined on generators by
//   ρ₊(c) = ζ₊c₊            ρ₋(c) = ζ₋(ε² + ξc₋)
//   ρ₊(c̄) = ζ₊⁻¹(ε² + ξc₊)  ρ₋(c̄) = ζ₋⁻¹c₋
//   ρ₊(ζ) = ζ₊              ρ₋(ζ) = ξζ₋
//   ρ₊(ζ̄) = ξζ₊⁻¹           ρ₋(ζ̄) = ζ₋⁻¹
FixedPoly restrict_plus(const CpElement& x);
FixedPoly restrict_minus(const CpElement& x);
FixedElement rho_star(const CpElement& x);

// The involution on the fixed set: χ(c±) = c∓, χ(ζ±) = ζ∓⁻¹.
FixedElement chi_fixed(const FixedElement& x);

// π±*: π₊(c₊) = c̃, π₊(ζ₊) = ζ̃, π₋(c₋) = ξ⁻¹ε² + c̃, π₋(ζ₋) = ξ⁻¹ζ̃.
ZRingElement pi_plus(const FixedEPPoly& plus_part);
ZRingElement pi_minus(const FixedEPPoly& minus_part);

// ---------------------------------------------------------------------------
// Additive structure.

struct CpSummand {
  BasisBMonomial beta;
  CatalogName functor;
};

// All β ∈ B whose point coefficient group at d - |β| is nonzero, with the
// functor; the cohomology at d is the direct sum.  The scan per Ω-slice is
// exact: coefficient degrees eventually leave the nonzero region of the
// point table.
std::vector<CpSummand> cp_group_at(PiDegree d);

// ---------------------------------------------------------------------------
// Verification oracles.

struct TruncationTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct HypothesisViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mayer–Vietoris at degree d: builds the matrix of π₊* - π₋* on the slot
// bases at both Mackey levels, then checks surjectivity and that the kernel
// has the invariants of the span of {ζ^m c^n} with free-theory coefficients.
// Throws TruncationTooSmall if trunc cuts off a contributing power of c.
CheckReport mv_kernel_check(PiDegree d, long long trunc);

// δ(μx) = δ(μ)x for x = Σᵢ aᵢxᵢ with aᵢ = bᵢ ε^{mᵢ} ξ^{nᵢ}, nᵢ ≥ 0,
// verified coordinatewise; when some bᵢ is ±1 with nᵢ = 0, additionally
// verifies that multiplication by x on pair coefficients is injective
// degreewise over the box.  Throws HypothesisViolated if some nᵢ < 0.
CheckReport lemma_delta_check(const FixedEPElement& x, const EPElement& mu);

// The change-of-basis check at degree d: the multiples of basis elements
// that live in d, expanded through ρ±* with pair coefficients, must map
// isomorphically onto the natural slot basis of the fixed-set modules.
CheckReport leading_term_matrix_check(PiDegree d);

// The dimension of the family display: family 1 = (2k+1) + bΛ (n = 0),
// 2 = (-n+2k) + bΛ + nΩ, 3 = (-n+2k+1) + bΛ + nΩ, 4 = (n+2k) + bΛ + nΩ,
// 5 = (n+2k+1) + bΛ + nΩ; mirror reflects through χ.  b defaults to the
// displayed value n.
PiDegree family_degree(int family, long long n, long long k, bool mirror = false);

// ψ(ηβ) = ψ(η)β, verified through fixed-set coordinates; uses that the
// restriction is injective when a + b < 0 and ε-multiplication transport
// from degrees where it is not.
CheckReport psi_beta_check(const EAPElement& eta, const BasisBMonomial& beta);

// Recompute the additive answer at d through the Mayer–Vietoris / long exact
// sequence route — kernel of π₊* - π₋*, then the connecting map coefficient-
// wise on coordinates — and compare with ⊕_β P*·β from cp_group_at.
CheckReport cp_les_check(PiDegree d);

}  // namespace equicohom
