// Mackey functors for the group of order two, in coordinates: a pair of
// finitely generated abelian groups M(G/G), M(G/e) with restriction, transfer
// and Weyl action, together with the small catalog of functors that appear as
// cohomology of a point, cochain complexes of such, levelwise cohomology with
// induced structure maps, and classification against the catalog.
#pragma once

#include "equicohom/abelian.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace equicohom {

enum class BaseMackey { A, A_e, BracketZ, BracketZ2, L, Lminus, R, Rminus };

// A finite direct sum of catalog functors; the empty sum is the zero functor.
struct CatalogName {
  std::vector<BaseMackey> parts;  // kept sorted

  static CatalogName zero() { return {}; }
  static CatalogName single(BaseMackey b) { return {{b}}; }
  bool is_zero() const { return parts.empty(); }
  bool operator==(const CatalogName&) const = default;
};

std::string to_string(const CatalogName& n, bool ascii = false);
std::optional<CatalogName> catalog_name_from_string(const std::string& s);

struct MackeyFunctor {
  // Canonical form: both levels are ⊕ Z/orders[i] (0 meaning Z) and the three
  // structure maps are integer matrices in those coordinates.
  OrderVec gg, ge;
  Mat res;   // M(G/G) -> M(G/e)
  Mat tr;    // M(G/e) -> M(G/G)
  Mat weyl;  // M(G/e) -> M(G/e)

  AbGroupPresentation level_gg_presentation() const { return presentation_from_orders(gg); }
  AbGroupPresentation level_ge_presentation() const { return presentation_from_orders(ge); }
  bool operator==(const MackeyFunctor&) const = default;
};

MackeyFunctor catalog(BaseMackey name);
MackeyFunctor catalog(const CatalogName& name);  // direct sum
MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b);

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> failures;
};
AxiomReport check_axioms(const MackeyFunctor& m);

struct MackeyMorphism {
  Mat gg;  // source GG -> target GG
  Mat ge;  // source Ge -> target Ge
};
bool morphism_well_defined(const MackeyFunctor& src, const MackeyFunctor& dst,
                           const MackeyMorphism& f);

struct MackeyCochainComplex {
  long long lo = 0;                      // degree of terms[0]
  std::vector<MackeyFunctor> terms;      // terms[i] sits in degree lo + i
  std::vector<MackeyMorphism> diffs;     // diffs[i] : terms[i] -> terms[i+1]
};
bool complex_well_defined(const MackeyCochainComplex& cx, std::string* why = nullptr);

// Cohomology ker(d_out)/im(d_in) at degree k, with induced res/tr/weyl; a
// degree outside the range yields the zero functor.
MackeyFunctor cohomology_at(const MackeyCochainComplex& cx, long long k);

// Identify m as a direct sum of catalog functors via the fingerprint
// (invariant factors of both levels; ranks and cokernel factors of res, tr,
// 1+weyl, 1-weyl).  Returns nullopt when no unique sum matches.
std::optional<CatalogName> classify(const MackeyFunctor& m);

nlohmann::json mackey_to_json(const MackeyFunctor& m);

}  // namespace equicohom
