#include "equicohom/abelian.hpp"

#include <stdexcept>

namespace equicohom {

AbGroupPresentation make_presentation(std::size_t ngens, const Mat& relations) {
  AbGroupPresentation p;
  p.rank_hint = ngens;
  p.relations = relations;
  p.invariant_factors = invariant_factors(relations, ngens);
  return p;
}

AbGroupPresentation presentation_from_orders(const OrderVec& orders) {
  Mat rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel.at(i, i) = orders[i];
  return make_presentation(orders.size(), rel);
}

OrderVec canonical_orders(const OrderVec& orders) {
  return invariant_factors(Mat::diag(orders), orders.size());
}

bool same_orders(const OrderVec& a, const OrderVec& b) {
  return canonical_orders(a) == canonical_orders(b);
}

std::size_t free_rank(const OrderVec& orders) {
  std::size_t n = 0;
  for (const auto& o : orders)
    if (o == 0) ++n;
  return n;
}

std::size_t torsion_count(const OrderVec& orders) {
  std::size_t n = 0;
  for (const auto& o : orders)
    if (o > 1) ++n;
  return n;
}

Mat order_lattice(const OrderVec& orders) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    Vec c(orders.size());
    c[i] = orders[i];
    cols.push_back(c);
  }
  if (cols.empty()) return Mat(orders.size(), 0);
  return Mat::from_cols(cols);
}

bool map_well_defined(const Mat& f, const OrderVec& src, const OrderVec& dst) {
  if (f.rows() != dst.size() || f.cols() != src.size()) return false;
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (src[j] == 0) continue;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      Int v = src[j] * f.at(i, j);
      if (dst[i] == 0 ? v != 0 : v % dst[i] != 0) return false;
    }
  }
  return true;
}

Mat kernel_subgroup(const Mat& f, const OrderVec& src, const OrderVec& dst) {
  (void)src;  // the source order lattice is always contained in the result
  Mat L = order_lattice(dst);
  Mat stacked = f.hstack(L);  // [f | L], kernel gives f x = -L y
  Mat ker = kernel_basis(stacked);
  // Project kernel columns to the source coordinates.
  Mat out(f.cols(), ker.cols());
  for (std::size_t i = 0; i < f.cols(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) out.at(i, j) = ker.at(i, j);
  return out;
}

bool in_subgroup(const Vec& x, const Mat& gens, const OrderVec& ambient) {
  Mat solver = gens.hstack(order_lattice(ambient));
  if (solver.cols() == 0) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  return solve_linear(solver, x).has_value();
}

bool subgroup_leq(const Mat& a, const Mat& b, const OrderVec& ambient) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!in_subgroup(a.col(j), b, ambient)) return false;
  return true;
}

bool subgroup_eq(const Mat& a, const Mat& b, const OrderVec& ambient) {
  return subgroup_leq(a, b, ambient) && subgroup_leq(b, a, ambient);
}

Vec quotient_invariants(const Mat& gens, const OrderVec& ambient) {
  Mat rel = gens.transpose().vstack(Mat::diag(Vec(ambient.begin(), ambient.end())));
  return invariant_factors(rel, ambient.size());
}

std::size_t map_rank(const Mat& f, const OrderVec& dst) {
  Mat L = order_lattice(dst);
  return rank_of(f.hstack(L)) - rank_of(L);
}

Vec coker_invariants(const Mat& f, const OrderVec& dst) {
  return quotient_invariants(f, dst);
}

Subquotient::Subquotient(const Mat& ker_gens, const Mat& img_gens, const OrderVec& ambient)
    : ambient_(ambient) {
  const std::size_t n = ambient.size();
  if ((ker_gens.cols() > 0 && ker_gens.rows() != n) ||
      (img_gens.cols() > 0 && img_gens.rows() != n))
    throw std::invalid_argument("Subquotient: ambient dimension mismatch");

  Mat kg = ker_gens.cols() > 0 ? ker_gens : Mat(n, 0);
  solver_ = kg.hstack(order_lattice(ambient));
  const std::size_t p = solver_.cols();

  // Relations among the p subgroup generators: preimages of the image
  // generators and of the ambient order lattice, plus linear dependencies.
  std::vector<Vec> rel_rows;
  Mat denom = (img_gens.cols() > 0 ? img_gens : Mat(n, 0)).hstack(order_lattice(ambient));
  for (std::size_t j = 0; j < denom.cols(); ++j) {
    auto z = p > 0 ? solve_linear(solver_, denom.col(j)) : std::nullopt;
    if (!z) {
      if (p == 0) {
        bool zero = true;
        for (const auto& v : denom.col(j))
          if (v != 0) zero = false;
        if (zero) continue;
      }
      throw std::logic_error("Subquotient: image generator not inside the subgroup");
    }
    rel_rows.push_back(*z);
  }
  Mat deps = p > 0 ? kernel_basis(solver_) : Mat(0, 0);
  for (std::size_t j = 0; j < deps.cols(); ++j) rel_rows.push_back(deps.col(j));

  Mat R = rel_rows.empty() ? Mat(0, p) : Mat::from_rows(rel_rows);

  // Smith form of R^T: new coordinates y = U x on Z^p diagonalise the
  // relation lattice; factor i has order D[i][i] (0 beyond the rank).
  if (p == 0) {
    group_ = {};
    to_canon_ = Mat(0, 0);
    lift_ = Mat(n, 0);
    return;
  }
  SmithResult s = smith_normal_form(R.transpose());  // p x q
  std::vector<std::size_t> kept;
  OrderVec orders;
  for (std::size_t i = 0; i < p; ++i) {
    Int o = (i < s.rank) ? s.d.at(i, i) : Int(0);
    if (o == 1) continue;
    kept.push_back(i);
    orders.push_back(o);
  }
  group_ = orders;

  // to_canon_: kept rows of U;  lift_: solver * U^{-1} e_i for kept i.
  to_canon_ = Mat(kept.size(), p);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < p; ++c) to_canon_.at(r, c) = s.u.at(kept[r], c);

  Mat uinv_cols(p, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    Vec e(p);
    e[kept[c]] = 1;
    auto x = solve_linear(s.u, e);
    if (!x) throw std::logic_error("Subquotient: unimodular solve failed");
    for (std::size_t r = 0; r < p; ++r) uinv_cols.at(r, c) = (*x)[r];
  }
  lift_ = solver_ * uinv_cols;
}

Vec Subquotient::reduce(Vec coords) const {
  for (std::size_t i = 0; i < group_.size(); ++i)
    if (group_[i] != 0) coords[i] = mod_floor(coords[i], group_[i]);
  return coords;
}

std::optional<Vec> Subquotient::express(const Vec& x) const {
  if (x.size() != ambient_.size()) throw std::invalid_argument("express: dimension mismatch");
  if (solver_.cols() == 0) {
    for (const auto& v : x)
      if (v != 0) return std::nullopt;
    return Vec{};
  }
  auto z = solve_linear(solver_, x);
  if (!z) return std::nullopt;
  return reduce(to_canon_.apply(*z));
}

Mat induced_map(const Subquotient& src, const Subquotient& dst, const Mat& ambient_map) {
  Mat out(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    Vec img = ambient_map.apply(src.lift().col(j));
    auto coords = dst.express(img);
    if (!coords)
      throw std::logic_error("induced_map: image leaves the target subgroup");
    for (std::size_t i = 0; i < dst.dim(); ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

}  // namespace equicohom
