// Finitely generated abelian groups presented by generators and relations,
// and subquotient calculus inside ambient groups of the form  ⊕_i Z/o_i
// (order 0 meaning Z).  Subgroups are given by generating columns; quotients,
// kernels, images, membership and equality all reduce to exact integer linear
// algebra from matrix.hpp.
#pragma once

#include "equicohom/matrix.hpp"

#include <optional>
#include <vector>

namespace equicohom {

// Orders of cyclic factors; 0 encodes an infinite cyclic factor.
using OrderVec = std::vector<Int>;

struct AbGroupPresentation {
  std::size_t rank_hint = 0;  // number of generators
  Mat relations;              // rows are relations among the generators
  Vec invariant_factors;      // >1 ascending by divisibility, then one 0 per free factor
};

AbGroupPresentation make_presentation(std::size_t ngens, const Mat& relations);
AbGroupPresentation presentation_from_orders(const OrderVec& orders);

// Canonical invariant-factor form of an order vector (drops 1s, merges factors).
OrderVec canonical_orders(const OrderVec& orders);
bool same_orders(const OrderVec& a, const OrderVec& b);
std::size_t free_rank(const OrderVec& orders);
std::size_t torsion_count(const OrderVec& orders);

// The lattice ⟨ o_i e_i : o_i != 0 ⟩ ⊂ Z^n, as columns.
Mat order_lattice(const OrderVec& orders);

// Does the matrix f define a homomorphism  ⊕Z/src  →  ⊕Z/dst ?
bool map_well_defined(const Mat& f, const OrderVec& src, const OrderVec& dst);

// Columns spanning { x in Z^n : f x ≡ 0 modulo dst }  (the kernel subgroup of
// the source, including the source order lattice).
Mat kernel_subgroup(const Mat& f, const OrderVec& src, const OrderVec& dst);

// x ∈ ⟨gens⟩ + order lattice ?
bool in_subgroup(const Vec& x, const Mat& gens, const OrderVec& ambient);
bool subgroup_leq(const Mat& a, const Mat& b, const OrderVec& ambient);
bool subgroup_eq(const Mat& a, const Mat& b, const OrderVec& ambient);

// Invariant factors of  (⊕Z/ambient) / ⟨gens⟩.
Vec quotient_invariants(const Mat& gens, const OrderVec& ambient);

// Rank of the induced map on free parts, i.e. rank of (im f + L)/L.
std::size_t map_rank(const Mat& f, const OrderVec& dst);
// Invariant factors of coker f = (⊕Z/dst) / im f.
Vec coker_invariants(const Mat& f, const OrderVec& dst);

// A subquotient (⟨ker_gens⟩ + L) / (⟨img_gens⟩ + L) of an ambient ⊕Z/o_i,
// put into canonical form with transport in both directions.  Requires
// ⟨img_gens⟩ ⊆ ⟨ker_gens⟩ + L (throws otherwise).
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Mat& ker_gens, const Mat& img_gens, const OrderVec& ambient);

  const OrderVec& group() const { return group_; }       // canonical orders
  std::size_t dim() const { return group_.size(); }      // canonical generators
  const Mat& lift() const { return lift_; }               // ambient representatives (columns)
  std::size_t ambient_dim() const { return ambient_.size(); }
  const OrderVec& ambient() const { return ambient_; }

  // Canonical coordinates of an ambient element of the subgroup; nullopt if x
  // does not lie in ⟨ker_gens⟩ + L.
  std::optional<Vec> express(const Vec& x) const;
  Vec reduce(Vec coords) const;  // reduce coordinates modulo the group orders

 private:
  OrderVec ambient_;
  OrderVec group_;
  Mat solver_;    // [ker_gens | order lattice]
  Mat to_canon_;  // solver coordinates -> canonical coordinates
  Mat lift_;
};

// Matrix of the induced map between two subquotients, given a matrix on the
// ambient groups carrying source subgroup/relations into the target ones.
Mat induced_map(const Subquotient& src, const Subquotient& dst, const Mat& ambient_map);

}  // namespace equicohom
