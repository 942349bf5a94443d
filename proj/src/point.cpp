// Closed-form point-level models.  Products of canonical generators are
// decided by a short list of mechanisms, each recorded next to the value so
// the full multiplication table can be emitted for audit: the quoted ring
// relations, Frobenius reciprocity x·τ(y) = τ(ρ(x)·y) with t·ι^k = (-1)^k ι^k,
// transport along ε-divisibility (multiplication by ε is injective wherever a
// product below is transported), and vanishing of the target group.
//
// Boundary conventions for transfers, both consequences of Frobenius with
// t·ι = -ι: τ(ι^0) = g and τ(ι^{±1}) = 0.
#include "equicohom/point.hpp"

#include "equicohom/text.hpp"

#include <stdexcept>
#include <utility>

namespace equicohom {

namespace {

std::string eps_xi_string(long long m, long long n, bool ascii) {
  std::string out;
  if (m > 0) {
    out += ascii ? "eps" : "ε";
    if (m != 1) out += ascii ? "^" + std::to_string(m) : unicode_superscript(m);
  }
  if (n > 0) {
    if (ascii && !out.empty()) out += "*";
    out += ascii ? "xi" : "ξ";
    if (n != 1) out += ascii ? "^" + std::to_string(n) : unicode_superscript(n);
  }
  return out;
}

}  // namespace

ROGDegree degree_of(const PointGenerator& gen) {
  struct V {
    ROGDegree operator()(const GenOne&) const { return {0, 0}; }
    ROGDegree operator()(const GenG&) const { return {0, 0}; }
    ROGDegree operator()(const GenEpsXi& e) const { return {-2 * e.n, e.m + 2 * e.n}; }
    ROGDegree operator()(const GenInvEpsKappa& e) const { return {0, -e.m}; }
    ROGDegree operator()(const GenTauIota& e) const { return {e.n, -e.n}; }
    ROGDegree operator()(const GenInvEpsTau& e) const {
      const long long odd = 2 * e.k + 1;
      return {odd, -odd - e.m};
    }
  };
  return std::visit(V{}, gen);
}

std::string to_string(const PointGenerator& gen, bool ascii) {
  struct V {
    bool ascii;
    std::string operator()(const GenOne&) const { return "1"; }
    std::string operator()(const GenG&) const { return "g"; }
    std::string operator()(const GenEpsXi& e) const { return eps_xi_string(e.m, e.n, ascii); }
    std::string operator()(const GenInvEpsKappa& e) const {
      if (e.m == 0) return ascii ? "kappa" : "κ";
      if (ascii) return "inv_eps_kappa(" + std::to_string(e.m) + ")";
      return "ε" + unicode_superscript(-e.m) + "κ";
    }
    std::string operator()(const GenTauIota& e) const {
      if (ascii) return "tau(" + std::to_string(e.n) + ")";
      return "τ(ι" + unicode_superscript(-e.n) + ")";
    }
    std::string operator()(const GenInvEpsTau& e) const {
      if (ascii)
        return "inv_eps_tau(" + std::to_string(e.m) + "," + std::to_string(e.k) + ")";
      return "ε" + unicode_superscript(-e.m) + "τ(ι" + unicode_superscript(-(2 * e.k + 1)) +
             ")";
    }
  };
  return std::visit(V{ascii}, gen);
}

CatalogName point_group_at(ROGDegree d) {
  const long long a = d.a, s = d.a + d.b;
  if (a == 0 && d.b == 0) return CatalogName::single(BaseMackey::A);
  if (s == 0) {
    if (a % 2 == 0) return CatalogName::single(a < 0 ? BaseMackey::R : BaseMackey::L);
    return CatalogName::single(a <= 1 ? BaseMackey::Rminus : BaseMackey::Lminus);
  }
  if (a == 0) return CatalogName::single(BaseMackey::BracketZ);
  if (s > 0 && a < 0 && a % 2 == 0) return CatalogName::single(BaseMackey::BracketZ2);
  if (s < 0 && a > 1 && a % 2 != 0) return CatalogName::single(BaseMackey::BracketZ2);
  return CatalogName::zero();
}

std::optional<PointGenerator> point_generator_at(ROGDegree d) {
  const long long a = d.a, b = d.b, s = a + b;
  if (a == 0 && b == 0) return GenOne{};
  if (a <= 0 && a % 2 == 0 && s >= 0) return GenEpsXi{s, -a / 2};
  if (a == 0 && b < 0) return GenInvEpsKappa{-b};
  if (s == 0 && a >= 2) return GenTauIota{a};
  if (s < 0 && a >= 3 && a % 2 != 0) return GenInvEpsTau{-s, (a - 1) / 2};
  return std::nullopt;  // the zero cells and the R_- diagonal
}

PointElement PointElement::generator(const PointGenerator& gen) {
  if (std::holds_alternative<GenOne>(gen)) return one();
  if (std::holds_alternative<GenG>(gen)) return g_elt();
  if (const auto* k = std::get_if<GenInvEpsKappa>(&gen); k != nullptr && k->m == 0)
    return kappa();
  PointElement e{degree_of(gen), 1, 0};
  return e.reduce();
}

PointElement& PointElement::reduce() {
  if (deg == ROGDegree{0, 0}) return *this;  // the Burnside ring, free on {1, g}
  cg = 0;
  CatalogName grp = point_group_at(deg);
  if (grp.is_zero()) {
    c1 = 0;
    return *this;
  }
  switch (grp.parts.front()) {
    case BaseMackey::Rminus:
      c1 = 0;  // level G/G vanishes
      break;
    case BaseMackey::BracketZ2:
    case BaseMackey::Lminus:
      c1 = mod_floor(c1, 2);
      break;
    default:
      break;  // free on the canonical generator
  }
  return *this;
}

PointElement operator+(const PointElement& x, const PointElement& y) {
  if (x.deg != y.deg)
    throw std::invalid_argument("sum of point elements in different degrees; use PointSum");
  PointElement out{x.deg, x.c1 + y.c1, x.cg + y.cg};
  return out.reduce();
}

PointElement operator-(const PointElement& x, const PointElement& y) {
  return x + Int(-1) * y;
}

PointElement operator*(const Int& c, const PointElement& x) {
  PointElement out{x.deg, c * x.c1, c * x.cg};
  return out.reduce();
}

namespace {

struct Piece {
  Int c;
  PointGenerator gen;
};

std::vector<Piece> pieces_of(const PointElement& e) {
  std::vector<Piece> ps;
  if (e.deg == ROGDegree{0, 0}) {
    if (e.c1 != 0) ps.push_back({e.c1, GenOne{}});
    if (e.cg != 0) ps.push_back({e.cg, GenG{}});
  } else if (e.c1 != 0) {
    if (auto g = point_generator_at(e.deg)) ps.push_back({e.c1, *g});
  }
  return ps;
}

bool is_plain_kappa(const PointGenerator& g) {
  const auto* k = std::get_if<GenInvEpsKappa>(&g);
  return k != nullptr && k->m == 0;
}

}  // namespace

PointElement generator_product(const PointGenerator& x, const PointGenerator& y,
                               std::string* why) {
  auto set = [&](const char* s) {
    if (why != nullptr) *why = s;
  };

  // κ written as a pseudo-generator expands in the Burnside ring first.
  if (is_plain_kappa(x) || is_plain_kappa(y)) {
    set("κ = 2 - g expanded in the Burnside ring");
    return point_mul(PointElement::generator(x), PointElement::generator(y));
  }

  const PointGenerator* p = &x;
  const PointGenerator* q = &y;
  if (p->index() > q->index()) std::swap(p, q);  // the ring is commutative
  const ROGDegree d = degree_of(*p) + degree_of(*q);

  if (std::holds_alternative<GenOne>(*p)) {
    set("1 is the unit");
    return PointElement::generator(*q);
  }

  if (std::holds_alternative<GenG>(*p)) {
    if (std::holds_alternative<GenG>(*q)) {
      set("g·g = 2g in the Burnside ring");
      PointElement e = PointElement::zero(d);
      e.cg = 2;
      return e;
    }
    if (const auto* e = std::get_if<GenEpsXi>(q)) {
      if (e->m >= 1) {
        set("gε = 0");
        return PointElement::zero(d);
      }
      set("gξ = 2ξ");
      return Int(2) * PointElement::generator(*q);
    }
    if (std::holds_alternative<GenInvEpsKappa>(*q)) {
      set("gκ = 2g - g² = 0, transported along ε-divisibility");
      return PointElement::zero(d);
    }
    if (std::holds_alternative<GenTauIota>(*q)) {
      set("Frobenius: g·τ(y) = τ(ρ(g)·y) = 2τ(y), reduced in the target group");
      return Int(2) * PointElement::generator(*q);
    }
    set("g·τ(y) = 2τ(y) with 2 = 0 on this family, transported along ε-divisibility");
    return PointElement::zero(d);
  }

  if (const auto* e1 = std::get_if<GenEpsXi>(p)) {
    if (const auto* e2 = std::get_if<GenEpsXi>(q)) {
      set("product of monomials in ε and ξ");
      return PointElement::generator(GenEpsXi{e1->m + e2->m, e1->n + e2->n});
    }
    if (const auto* kk = std::get_if<GenInvEpsKappa>(q)) {
      if (e1->n >= 1) {
        set("ξκ = 0, transported along ε-divisibility");
        return PointElement::zero(d);
      }
      if (e1->m < kk->m) {
        set("ε·(ε^{-i}κ) = ε^{-(i-1)}κ");
        return PointElement::generator(GenInvEpsKappa{kk->m - e1->m});
      }
      if (e1->m == kk->m) {
        set("ε^m·(ε^{-m}κ) = κ = 2 - g");
        return PointElement::kappa();
      }
      set("εκ = 2ε after cancelling ε^{-m}");
      return Int(2) * PointElement::generator(GenEpsXi{e1->m - kk->m, 0});
    }
    if (const auto* t = std::get_if<GenTauIota>(q)) {
      if (e1->m >= 1) {
        set("Frobenius: ε·τ(y) = τ(ρ(ε)·y) = 0");
        return PointElement::zero(d);
      }
      set("Frobenius: ξ^n·τ(ι^{-n'}) = τ(ι^{2n-n'})");
      return point_tr(LevelEElement{2 * e1->n - t->n, 1});
    }
    const auto& u = std::get<GenInvEpsTau>(*q);
    if (u.k - e1->n <= 0) {
      set("forced to zero: the target group vanishes at level G/G");
      return PointElement::zero(d);
    }
    if (e1->m < u.m) {
      set("ε- and ξ-action on the τ family, transported along ε-divisibility");
      return PointElement::generator(GenInvEpsTau{u.m - e1->m, u.k - e1->n});
    }
    if (e1->m == u.m) {
      set("ε^m cancels ε^{-m}; then Frobenius: ξ^n·τ(ι^{-n'}) = τ(ι^{2n-n'})");
      return PointElement::generator(GenTauIota{2 * (u.k - e1->n) + 1});
    }
    set("Frobenius: ε·τ(y) = 0 after cancelling ε^{-m'}");
    return PointElement::zero(d);
  }

  if (const auto* k1 = std::get_if<GenInvEpsKappa>(p)) {
    if (const auto* k2 = std::get_if<GenInvEpsKappa>(q)) {
      set("κ² = (2-g)² = 2κ, transported along ε-divisibility");
      return Int(2) * PointElement::generator(GenInvEpsKappa{k1->m + k2->m});
    }
    set("Frobenius: κ·τ(y) = τ(ρ(κ)·y) = 0 since ρ(κ) = 0, transported along ε-divisibility");
    return PointElement::zero(d);
  }

  if (const auto* t1 = std::get_if<GenTauIota>(p)) {
    if (const auto* t2 = std::get_if<GenTauIota>(q)) {
      set("Frobenius: τ(x)·τ(y) = τ(ρτ(x)·y) = (1+(-1)^n)·τ(x·y), reduced in the target group");
      if (t1->n % 2 != 0 || t2->n % 2 != 0) return PointElement::zero(d);
      return Int(2) * PointElement::generator(GenTauIota{t1->n + t2->n});
    }
    set("Frobenius as for τ·τ, transported along ε-divisibility; the factor 1+(-1)^{2k+1} = 0");
    return PointElement::zero(d);
  }

  set("Frobenius as for τ·τ, transported along ε-divisibility; the τ factors sit in odd degrees");
  return PointElement::zero(d);
}

PointElement point_mul(const PointElement& x, const PointElement& y) {
  PointElement out = PointElement::zero(x.deg + y.deg);
  for (const Piece& p : pieces_of(x)) {
    for (const Piece& q : pieces_of(y)) {
      PointElement prod = generator_product(p.gen, q.gen);
      out.c1 += p.c * q.c * prod.c1;
      out.cg += p.c * q.c * prod.cg;
    }
  }
  return out.reduce();
}

LevelEElement level_e_mul(const LevelEElement& x, const LevelEElement& y) {
  return {x.k + y.k, x.coeff * y.coeff};
}

LevelEElement level_e_weyl(const LevelEElement& x) {
  return {x.k, x.k % 2 != 0 ? -x.coeff : x.coeff};
}

LevelEElement point_res(const PointElement& x) {
  LevelEElement out{x.deg.b, 0};
  if (x.deg == ROGDegree{0, 0}) {  // ρ(1) = 1, ρ(g) = 2
    out.coeff = x.c1 + 2 * x.cg;
    return out;
  }
  if (x.deg.a + x.deg.b != 0) return out;  // level G/e vanishes off the diagonal
  if (x.deg.a % 2 != 0) return out;        // ρ = 0 out of L_-; R_- has no level G/G
  out.coeff = x.deg.a < 0 ? x.c1 : 2 * x.c1;  // ρ(ξ^n) = ι^{2n}; ρ(τ(ι^{-n})) = 2ι^{-n}
  return out;
}

PointElement point_tr(const LevelEElement& y) {
  const long long k = y.k;
  PointElement out = PointElement::zero({-k, k});
  if (y.coeff == 0) return out;
  if (k == 0) {
    out.cg = y.coeff;  // τ(1) = g
  } else if (k >= 2 && k % 2 == 0) {
    out.c1 = 2 * y.coeff;  // τ(ι^{2i}) = 2ξ^i
  } else if (k <= -2) {
    out.c1 = y.coeff;  // the canonical generator τ(ι^k)
  }
  // k = ±1 and odd k > 0: the transfer lands in a degree with no level G/G.
  return out.reduce();
}

PointSum to_sum(const PointElement& x) {
  PointSum s;
  PointElement r = x;
  r.reduce();
  if (!r.is_zero()) s.emplace(r.deg, r);
  return s;
}

PointSum sum_add(const PointSum& x, const PointSum& y) {
  PointSum out = x;
  for (const auto& [d, e] : y) {
    auto it = out.find(d);
    if (it == out.end()) {
      if (!e.is_zero()) out.emplace(d, e);
    } else {
      PointElement s = it->second + e;
      if (s.is_zero())
        out.erase(it);
      else
        it->second = s;
    }
  }
  return out;
}

PointSum sum_negate(const PointSum& x) {
  PointSum out;
  for (const auto& [d, e] : x) out.emplace(d, Int(-1) * e);
  return out;
}

PointSum sum_mul(const PointSum& x, const PointSum& y) {
  PointSum out;
  for (const auto& [dx, ex] : x)
    for (const auto& [dy, ey] : y) out = sum_add(out, to_sum(point_mul(ex, ey)));
  return out;
}

bool sum_is_zero(const PointSum& x) {
  for (const auto& [d, e] : x)
    if (!e.is_zero()) return false;
  return true;
}

// ----- EP -------------------------------------------------------------------

ROGDegree degree_of(const EPMonomial& mono) { return {-2 * mono.k, mono.m + 2 * mono.k}; }

EPElement EPElement::monomial(long long m, long long k, Int c) {
  if (m < 0) throw std::invalid_argument("negative power of ε in the EP ring");
  EPElement e;
  e.terms[{m, k}] = std::move(c);
  return e.reduce();
}

EPElement& EPElement::reduce() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.m > 0) it->second = mod_floor(it->second, 2);  // 2ε = 0
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  return *this;
}

EPElement operator+(const EPElement& x, const EPElement& y) {
  EPElement out = x;
  for (const auto& [mono, c] : y.terms) out.terms[mono] += c;
  return out.reduce();
}

EPElement operator-(const EPElement& x, const EPElement& y) { return x + Int(-1) * y; }

EPElement operator*(const Int& c, const EPElement& x) {
  EPElement out = x;
  for (auto& [mono, v] : out.terms) v *= c;
  return out.reduce();
}

EPElement ep_mul(const EPElement& x, const EPElement& y) {
  EPElement out;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms)
      out.terms[{mx.m + my.m, mx.k + my.k}] += cx * cy;
  return out.reduce();
}

CatalogName ep_group_at(ROGDegree d) {
  const long long s = d.a + d.b;
  if (s == 0)
    return CatalogName::single(d.a % 2 == 0 ? BaseMackey::R : BaseMackey::Rminus);
  if (s > 0 && d.a % 2 == 0) return CatalogName::single(BaseMackey::BracketZ2);
  return CatalogName::zero();
}

// ----- (EA, EP) -------------------------------------------------------------

ROGDegree degree_of(const EAPMonomial& mono) {
  if (mono.k == 0) return {0, mono.m};
  const long long odd = 2 * mono.k + 1;
  return {odd, mono.m - odd};
}

EAPElement EAPElement::monomial(long long m, long long k, Int c) {
  if (k < 0) throw std::invalid_argument("negative τ index in the (EA, EP) module");
  EAPElement e;
  e.terms[{m, k}] = std::move(c);
  return e.reduce();
}

EAPElement& EAPElement::reduce() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.k >= 1) it->second = mod_floor(it->second, 2);  // the τ family is 2-torsion
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  return *this;
}

EAPElement operator+(const EAPElement& x, const EAPElement& y) {
  EAPElement out = x;
  for (const auto& [mono, c] : y.terms) out.terms[mono] += c;
  return out.reduce();
}

EAPElement operator-(const EAPElement& x, const EAPElement& y) { return x + Int(-1) * y; }

EAPElement operator*(const Int& c, const EAPElement& x) {
  EAPElement out = x;
  for (auto& [mono, v] : out.terms) v *= c;
  return out.reduce();
}

CatalogName eap_group_at(ROGDegree d) {
  if (d.a == 0) return CatalogName::single(BaseMackey::BracketZ);
  if (d.a >= 3 && d.a % 2 != 0) return CatalogName::single(BaseMackey::BracketZ2);
  return CatalogName::zero();
}

EAPElement eap_action(const PointElement& p, const EAPElement& x) {
  EAPElement out;
  for (const Piece& piece : pieces_of(p)) {
    for (const auto& [mono, c] : x.terms) {
      const Int coeff = piece.c * c;
      if (std::holds_alternative<GenOne>(piece.gen)) {
        out.terms[mono] += coeff;
      } else if (std::holds_alternative<GenG>(piece.gen)) {
        // g = τ(1) acts through the vanishing level G/e: zero.
      } else if (const auto* e = std::get_if<GenEpsXi>(&piece.gen)) {
        if (mono.k == 0) {
          if (e->n == 0) out.terms[{mono.m + e->m, 0}] += coeff;  // ξκ = 0
        } else if (mono.k - e->n >= 1) {
          out.terms[{mono.m + e->m, mono.k - e->n}] += coeff;  // ξ·τ_{2k+1} = τ_{2k-1}
        }  // ξ^k·τ_{2k+1} and beyond land in vanishing groups
      } else if (const auto* kgen = std::get_if<GenInvEpsKappa>(&piece.gen)) {
        out.terms[{mono.m - kgen->m, mono.k}] += 2 * coeff;  // κ acts as 2 - g = 2
      }
      // τ(ι^{-n}) and ε^{-m}τ(ι^{-(2k+1)}) act through the vanishing level G/e.
    }
  }
  return out.reduce();
}

EAPElement eap_action(const PointSum& p, const EAPElement& x) {
  EAPElement out;
  for (const auto& [d, e] : p) out = out + eap_action(e, x);
  return out;
}

// ----- The long exact sequence ----------------------------------------------

EPElement map_phi(const PointElement& x) {
  EPElement out;
  for (const Piece& piece : pieces_of(x)) {
    if (std::holds_alternative<GenOne>(piece.gen)) {
      out.terms[{0, 0}] += piece.c;
    } else if (std::holds_alternative<GenG>(piece.gen)) {
      out.terms[{0, 0}] += 2 * piece.c;  // g restricts to 2 on the free quotient
    } else if (const auto* e = std::get_if<GenEpsXi>(&piece.gen)) {
      out.terms[{e->m, e->n}] += piece.c;
    } else if (const auto* t = std::get_if<GenTauIota>(&piece.gen)) {
      if (t->n % 2 == 0) out.terms[{0, -t->n / 2}] += 2 * piece.c;  // τ(ι^{-2k}) ↦ 2ξ^{-k}
    }
    // The κ and ε^{-m}τ families map to zero.
  }
  return out.reduce();
}

EPElement map_phi(const PointSum& x) {
  EPElement out;
  for (const auto& [d, e] : x) out = out + map_phi(e);
  return out;
}

PointSum map_psi(const EAPElement& x) {
  PointSum out;
  for (const auto& [mono, c] : x.terms) {
    PointElement e = PointElement::zero(degree_of(mono));
    if (mono.k == 0) {
      if (mono.m < 0)
        e = c * PointElement::generator(GenInvEpsKappa{-mono.m});
      else if (mono.m == 0)
        e = c * PointElement::kappa();
      else
        e = Int(2) * c * PointElement::generator(GenEpsXi{mono.m, 0});  // ε^mκ = 2ε^m
    } else {
      if (mono.m < 0)
        e = c * PointElement::generator(GenInvEpsTau{-mono.m, mono.k});
      else if (mono.m == 0)
        e = c * PointElement::generator(GenTauIota{2 * mono.k + 1});
      // m > 0: the target degree carries the zero group
    }
    out = sum_add(out, to_sum(e));
  }
  return out;
}

EAPElement map_delta(const EPElement& x) {
  EAPElement out;
  for (const auto& [mono, c] : x.terms)
    if (mono.k < 0) out.terms[{mono.m + 1, -mono.k}] += c;  // δ(ε^mξ^{-k}) = ε^{m+1}τ_{2k+1}
  return out.reduce();
}

namespace {

// The level-G/G group at one degree of one of the three theories, with its
// canonical ordered basis.
struct GradedPiece {
  OrderVec orders;
  std::vector<PointGenerator> pgens;  // point theory only
  std::optional<EPMonomial> ep;
  std::optional<EAPMonomial> eap;

  std::size_t dim() const { return orders.size(); }
};

GradedPiece point_piece(ROGDegree d) {
  GradedPiece g;
  if (d == ROGDegree{0, 0}) {
    g.pgens = {GenOne{}, GenG{}};
    g.orders = {0, 0};
    return g;
  }
  CatalogName grp = point_group_at(d);
  if (grp.is_zero() || grp.parts.front() == BaseMackey::Rminus) return g;
  g.pgens = {*point_generator_at(d)};
  const BaseMackey b = grp.parts.front();
  g.orders = {b == BaseMackey::BracketZ2 || b == BaseMackey::Lminus ? Int(2) : Int(0)};
  return g;
}

GradedPiece ep_piece(ROGDegree d) {
  GradedPiece g;
  const long long s = d.a + d.b;
  if (d.a % 2 != 0) return g;  // R_- diagonal has no level G/G; odd cells vanish
  if (s == 0) {
    g.ep = EPMonomial{0, -d.a / 2};
    g.orders = {0};
  } else if (s > 0) {
    g.ep = EPMonomial{s, -d.a / 2};
    g.orders = {2};
  }
  return g;
}

GradedPiece eap_piece(ROGDegree d) {
  GradedPiece g;
  if (d.a == 0) {
    g.eap = EAPMonomial{d.b, 0};
    g.orders = {0};
  } else if (d.a >= 3 && d.a % 2 != 0) {
    g.eap = EAPMonomial{d.a + d.b, (d.a - 1) / 2};
    g.orders = {2};
  }
  return g;
}

Vec point_coords(const GradedPiece& dst, ROGDegree d, const PointElement& e) {
  if (d == ROGDegree{0, 0}) return {e.c1, e.cg};
  return {e.c1};
}

Mat psi_matrix(const GradedPiece& src, const GradedPiece& dst, ROGDegree d) {
  Mat f(dst.dim(), src.dim());
  if (!src.eap || dst.dim() == 0) return f;
  PointSum img = map_psi(EAPElement::monomial(src.eap->m, src.eap->k));
  PointElement piece = PointElement::zero(d);
  if (auto it = img.find(d); it != img.end()) piece = it->second;
  Vec col = point_coords(dst, d, piece);
  for (std::size_t i = 0; i < dst.dim(); ++i) f.at(i, 0) = col[i];
  return f;
}

Mat phi_matrix(const GradedPiece& src, const GradedPiece& dst) {
  Mat f(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.pgens.size(); ++j) {
    EPElement img = map_phi(PointElement::generator(src.pgens[j]));
    if (dst.ep) {
      if (auto it = img.terms.find(*dst.ep); it != img.terms.end()) f.at(0, j) = it->second;
    }
  }
  return f;
}

Mat delta_matrix(const GradedPiece& src, const GradedPiece& dst) {
  Mat f(dst.dim(), src.dim());
  if (!src.ep || !dst.eap) return f;
  EAPElement img = map_delta(EPElement::monomial(src.ep->m, src.ep->k));
  if (auto it = img.terms.find(*dst.eap); it != img.terms.end()) f.at(0, 0) = it->second;
  return f;
}

// ker(g) = im(f) inside the middle group ⊕ Z/mid.
bool exact_at(const Mat& f, const OrderVec& mid, const Mat& g, const OrderVec& tgt) {
  if (mid.empty()) return true;
  const Mat ker =
      tgt.empty() ? Mat::identity(mid.size()) : kernel_subgroup(g, mid, tgt);
  return subgroup_eq(f, ker, mid);
}

}  // namespace

std::vector<std::string> les_point_check(const DegreeBox& box) {
  std::vector<std::string> failures;
  auto degstr = [](ROGDegree d) {
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
  };
  for (long long b = box.bmin; b <= box.bmax; ++b) {
    for (long long a = box.amin; a <= box.amax; ++a) {
      const ROGDegree d{a, b};
      const GradedPiece eap_d = eap_piece(d);
      const GradedPiece pt_d = point_piece(d);
      const GradedPiece ep_d = ep_piece(d);
      const GradedPiece ep_prev = ep_piece({a - 1, b});
      const GradedPiece eap_next = eap_piece({a + 1, b});

      const Mat delta_in = delta_matrix(ep_prev, eap_d);
      const Mat psi = psi_matrix(eap_d, pt_d, d);
      const Mat phi = phi_matrix(pt_d, ep_d);
      const Mat delta_out = delta_matrix(ep_d, eap_next);

      if (!exact_at(delta_in, eap_d.orders, psi, pt_d.orders))
        failures.push_back("exactness fails at degree " + degstr(d) +
                           " in the pair theory: ker ψ ≠ im δ");
      if (!exact_at(psi, pt_d.orders, phi, ep_d.orders))
        failures.push_back("exactness fails at degree " + degstr(d) +
                           " at the point: ker φ ≠ im ψ");
      if (!exact_at(phi, ep_d.orders, delta_out, eap_next.orders))
        failures.push_back("exactness fails at degree " + degstr(d) +
                           " in the free theory: ker δ ≠ im φ");
    }
  }
  return failures;
}

}  // namespace equicohom
