#include "equicohom/mackey.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace equicohom {

namespace {

const char* base_name(BaseMackey b, bool ascii) {
  switch (b) {
    case BaseMackey::A: return "A";
    case BaseMackey::A_e: return "A_e";
    case BaseMackey::BracketZ: return ascii ? "<Z>" : "⟨Z⟩";
    case BaseMackey::BracketZ2: return ascii ? "<Z/2>" : "⟨Z/2⟩";
    case BaseMackey::L: return "L";
    case BaseMackey::Lminus: return ascii ? "L-" : "L₋";
    case BaseMackey::R: return "R";
    case BaseMackey::Rminus: return ascii ? "R-" : "R₋";
  }
  return "?";
}

// Are two maps into ⊕Z/dst equal as homomorphisms (entrywise congruence)?
bool maps_equal(const Mat& a, const Mat& b, const OrderVec& dst) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int d = a.at(i, j) - b.at(i, j);
      if (dst[i] == 0 ? d != 0 : d % dst[i] != 0) return false;
    }
  return true;
}

}  // namespace

std::string to_string(const CatalogName& n, bool ascii) {
  if (n.parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < n.parts.size(); ++i) {
    if (i) os << (ascii ? " (+) " : " ⊕ ");
    os << base_name(n.parts[i], ascii);
  }
  return os.str();
}

std::optional<CatalogName> catalog_name_from_string(const std::string& s) {
  static const std::map<std::string, BaseMackey> names = {
      {"A", BaseMackey::A},
      {"A_e", BaseMackey::A_e},
      {"<Z>", BaseMackey::BracketZ},
      {"⟨Z⟩", BaseMackey::BracketZ},
      {"<Z/2>", BaseMackey::BracketZ2},
      {"⟨Z/2⟩", BaseMackey::BracketZ2},
      {"L", BaseMackey::L},
      {"L-", BaseMackey::Lminus},
      {"L₋", BaseMackey::Lminus},
      {"R", BaseMackey::R},
      {"R-", BaseMackey::Rminus},
      {"R₋", BaseMackey::Rminus},
  };
  if (s == "0") return CatalogName::zero();
  CatalogName out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(" ⊕ ", pos);
    std::size_t len = 5;  // " ⊕ " byte length
    if (next == std::string::npos) {
      next = s.find(" (+) ", pos);
      len = 5;
    }
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto it = names.find(tok);
    if (it == names.end()) return std::nullopt;
    out.parts.push_back(it->second);
    if (next == std::string::npos) break;
    pos = next + len;
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

MackeyFunctor catalog(BaseMackey name) {
  MackeyFunctor m;
  auto one = [](Int v) {
    Mat x(1, 1);
    x.at(0, 0) = v;
    return x;
  };
  switch (name) {
    case BaseMackey::A: {  // Burnside ring: GG = Z{1, g}, Ge = Z
      m.gg = {0, 0};
      m.ge = {0};
      m.res = Mat::from_rows({{Int(1), Int(2)}});
      m.tr = Mat::from_cols({{Int(0), Int(1)}});
      m.weyl = one(1);
      break;
    }
    case BaseMackey::A_e: {  // free on an orbit point: GG = Z, Ge = Z{1, t}
      m.gg = {0};
      m.ge = {0, 0};
      m.res = Mat::from_cols({{Int(1), Int(1)}});
      m.tr = Mat::from_rows({{Int(1), Int(1)}});
      m.weyl = Mat::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
      break;
    }
    case BaseMackey::BracketZ:
      m.gg = {0};
      m.res = Mat(0, 1);
      m.tr = Mat(1, 0);
      m.weyl = Mat(0, 0);
      break;
    case BaseMackey::BracketZ2:
      m.gg = {2};
      m.res = Mat(0, 1);
      m.tr = Mat(1, 0);
      m.weyl = Mat(0, 0);
      break;
    case BaseMackey::L:
      m.gg = {0};
      m.ge = {0};
      m.res = one(2);
      m.tr = one(1);
      m.weyl = one(1);
      break;
    case BaseMackey::R:
      m.gg = {0};
      m.ge = {0};
      m.res = one(1);
      m.tr = one(2);
      m.weyl = one(1);
      break;
    case BaseMackey::Lminus:
      m.gg = {2};
      m.ge = {0};
      m.res = one(0);
      m.tr = one(1);
      m.weyl = one(-1);
      break;
    case BaseMackey::Rminus:
      m.gg = {};
      m.ge = {0};
      m.res = Mat(1, 0);
      m.tr = Mat(0, 1);
      m.weyl = one(-1);
      break;
  }
  return m;
}

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
  MackeyFunctor m;
  m.gg = a.gg;
  m.gg.insert(m.gg.end(), b.gg.begin(), b.gg.end());
  m.ge = a.ge;
  m.ge.insert(m.ge.end(), b.ge.begin(), b.ge.end());
  auto block = [](const Mat& x, const Mat& y) {
    Mat r(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) r.at(x.rows() + i, x.cols() + j) = y.at(i, j);
    return r;
  };
  m.res = block(a.res, b.res);
  m.tr = block(a.tr, b.tr);
  m.weyl = block(a.weyl, b.weyl);
  return m;
}

MackeyFunctor catalog(const CatalogName& name) {
  MackeyFunctor m;  // zero functor
  m.res = Mat(0, 0);
  m.tr = Mat(0, 0);
  m.weyl = Mat(0, 0);
  for (BaseMackey b : name.parts) m = direct_sum(m, catalog(b));
  return m;
}

AxiomReport check_axioms(const MackeyFunctor& m) {
  AxiomReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };
  if (!map_well_defined(m.res, m.gg, m.ge)) fail("res is not a well-defined homomorphism");
  if (!map_well_defined(m.tr, m.ge, m.gg)) fail("tr is not a well-defined homomorphism");
  if (!map_well_defined(m.weyl, m.ge, m.ge)) fail("weyl is not a well-defined homomorphism");
  if (!rep.ok) return rep;

  Mat id_ge = Mat::identity(m.ge.size());
  if (!maps_equal(m.weyl * m.weyl, id_ge, m.ge)) fail("weyl^2 != id");
  if (!maps_equal(m.weyl * m.res, m.res, m.ge)) fail("weyl . res != res");
  if (!maps_equal(m.tr * m.weyl, m.tr, m.gg)) fail("tr . weyl != tr");
  Mat rt = m.res * m.tr;
  Mat one_plus_w = id_ge;
  for (std::size_t i = 0; i < id_ge.rows(); ++i)
    for (std::size_t j = 0; j < id_ge.cols(); ++j) one_plus_w.at(i, j) += m.weyl.at(i, j);
  if (!maps_equal(rt, one_plus_w, m.ge)) fail("res . tr != 1 + weyl");
  return rep;
}

bool morphism_well_defined(const MackeyFunctor& src, const MackeyFunctor& dst,
                           const MackeyMorphism& f) {
  if (!map_well_defined(f.gg, src.gg, dst.gg)) return false;
  if (!map_well_defined(f.ge, src.ge, dst.ge)) return false;
  if (!maps_equal(dst.res * f.gg, f.ge * src.res, dst.ge)) return false;
  if (!maps_equal(dst.tr * f.ge, f.gg * src.tr, dst.gg)) return false;
  if (!maps_equal(dst.weyl * f.ge, f.ge * src.weyl, dst.ge)) return false;
  return true;
}

bool complex_well_defined(const MackeyCochainComplex& cx, std::string* why) {
  auto report = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (cx.terms.empty()) return true;
  if (cx.diffs.size() + 1 != cx.terms.size())
    return report("differential count must be one less than term count");
  for (std::size_t i = 0; i < cx.diffs.size(); ++i) {
    if (!morphism_well_defined(cx.terms[i], cx.terms[i + 1], cx.diffs[i]))
      return report("differential " + std::to_string(i) + " is not a Mackey morphism");
    if (i + 1 < cx.diffs.size()) {
      Mat gg2 = cx.diffs[i + 1].gg * cx.diffs[i].gg;
      Mat ge2 = cx.diffs[i + 1].ge * cx.diffs[i].ge;
      if (!maps_equal(gg2, Mat(gg2.rows(), gg2.cols()), cx.terms[i + 2].gg) ||
          !maps_equal(ge2, Mat(ge2.rows(), ge2.cols()), cx.terms[i + 2].ge))
        return report("d . d != 0 at position " + std::to_string(i));
    }
  }
  return true;
}

MackeyFunctor cohomology_at(const MackeyCochainComplex& cx, long long k) {
  std::string why;
  if (!complex_well_defined(cx, &why)) throw std::invalid_argument("cohomology_at: " + why);

  MackeyFunctor zero;
  zero.res = Mat(0, 0);
  zero.tr = Mat(0, 0);
  zero.weyl = Mat(0, 0);
  if (cx.terms.empty() || k < cx.lo || k >= cx.lo + static_cast<long long>(cx.terms.size()))
    return zero;

  std::size_t idx = static_cast<std::size_t>(k - cx.lo);
  const MackeyFunctor& mid = cx.terms[idx];
  bool has_out = idx < cx.diffs.size();
  bool has_in = idx > 0;

  const MackeyFunctor& next = has_out ? cx.terms[idx + 1] : zero;
  Mat dgg_out = has_out ? cx.diffs[idx].gg : Mat(0, mid.gg.size());
  Mat dge_out = has_out ? cx.diffs[idx].ge : Mat(0, mid.ge.size());
  Mat dgg_in = has_in ? cx.diffs[idx - 1].gg : Mat(mid.gg.size(), 0);
  Mat dge_in = has_in ? cx.diffs[idx - 1].ge : Mat(mid.ge.size(), 0);

  Mat ker_gg = kernel_subgroup(dgg_out, mid.gg, next.gg);
  Mat ker_ge = kernel_subgroup(dge_out, mid.ge, next.ge);
  Subquotient h_gg(ker_gg, dgg_in, mid.gg);
  Subquotient h_ge(ker_ge, dge_in, mid.ge);

  MackeyFunctor h;
  h.gg = h_gg.group();
  h.ge = h_ge.group();
  h.res = induced_map(h_gg, h_ge, mid.res);
  h.tr = induced_map(h_ge, h_gg, mid.tr);
  h.weyl = induced_map(h_ge, h_ge, mid.weyl);
  return h;
}

namespace {

struct Fingerprint {
  OrderVec gg, ge;
  std::size_t rank_res, rank_tr, rank_wp, rank_wm;
  OrderVec coker_res, coker_tr, coker_wp, coker_wm;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const MackeyFunctor& m) {
  Fingerprint f;
  f.gg = canonical_orders(m.gg);
  f.ge = canonical_orders(m.ge);
  Mat wp = Mat::identity(m.ge.size());
  Mat wm = Mat::identity(m.ge.size());
  for (std::size_t i = 0; i < m.ge.size(); ++i)
    for (std::size_t j = 0; j < m.ge.size(); ++j) {
      wp.at(i, j) += m.weyl.at(i, j);
      wm.at(i, j) -= m.weyl.at(i, j);
    }
  f.rank_res = map_rank(m.res, m.ge);
  f.rank_tr = map_rank(m.tr, m.gg);
  f.rank_wp = map_rank(wp, m.ge);
  f.rank_wm = map_rank(wm, m.ge);
  f.coker_res = coker_invariants(m.res, m.ge);
  f.coker_tr = coker_invariants(m.tr, m.gg);
  f.coker_wp = coker_invariants(wp, m.ge);
  f.coker_wm = coker_invariants(wm, m.ge);
  return f;
}

}  // namespace

std::optional<CatalogName> classify(const MackeyFunctor& m) {
  Fingerprint target = fingerprint(m);

  // Generator budget per level; every catalog functor consumes a fixed amount,
  // so candidate multisets are constrained by exact counts.
  std::size_t ggf = free_rank(target.gg), ggt = target.gg.size() - ggf;
  std::size_t gef = free_rank(target.ge), get = target.ge.size() - gef;
  if (get != 0) return std::nullopt;  // no catalog functor has torsion at level e

  std::vector<CatalogName> matches;
  // n_A, n_Ae, n_Z, n_Z2, n_L, n_Lm, n_R, n_Rm with
  //   2 n_A + n_Ae + n_Z + n_L + n_R          = ggf
  //   n_Z2 + n_Lm                             = ggt
  //   n_A + 2 n_Ae + n_L + n_Lm + n_R + n_Rm  = gef
  for (std::size_t nA = 0; 2 * nA <= ggf; ++nA)
    for (std::size_t nAe = 0; 2 * nA + nAe <= ggf && 2 * nAe <= gef; ++nAe)
      for (std::size_t nL = 0; 2 * nA + nAe + nL <= ggf; ++nL)
        for (std::size_t nR = 0; 2 * nA + nAe + nL + nR <= ggf; ++nR)
          for (std::size_t nLm = 0; nLm <= ggt; ++nLm) {
            std::size_t nZ = ggf - 2 * nA - nAe - nL - nR;
            std::size_t nZ2 = ggt - nLm;
            std::size_t used_ge = nA + 2 * nAe + nL + nLm + nR;
            if (used_ge > gef) continue;
            std::size_t nRm = gef - used_ge;
            CatalogName cand;
            auto add = [&](BaseMackey b, std::size_t n) {
              for (std::size_t i = 0; i < n; ++i) cand.parts.push_back(b);
            };
            add(BaseMackey::A, nA);
            add(BaseMackey::A_e, nAe);
            add(BaseMackey::BracketZ, nZ);
            add(BaseMackey::BracketZ2, nZ2);
            add(BaseMackey::L, nL);
            add(BaseMackey::Lminus, nLm);
            add(BaseMackey::R, nR);
            add(BaseMackey::Rminus, nRm);
            std::sort(cand.parts.begin(), cand.parts.end());
            if (fingerprint(catalog(cand)) == target) matches.push_back(cand);
          }

  std::sort(matches.begin(), matches.end(),
            [](const CatalogName& a, const CatalogName& b) { return a.parts < b.parts; });
  matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
  if (matches.size() == 1) return matches.front();
  return std::nullopt;
}

nlohmann::json mackey_to_json(const MackeyFunctor& m) {
  auto factors = [](const OrderVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.convert_to<long long>());
    return a;
  };
  auto matrix = [](const Mat& mt) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < mt.rows(); ++i) {
      nlohmann::json r = nlohmann::json::array();
      for (std::size_t j = 0; j < mt.cols(); ++j) r.push_back(mt.at(i, j).convert_to<long long>());
      a.push_back(r);
    }
    return a;
  };
  return nlohmann::json{{"levelGG", factors(m.gg)},
                        {"levelGe", factors(m.ge)},
                        {"res", matrix(m.res)},
                        {"tr", matrix(m.tr)},
                        {"weyl", matrix(m.weyl)}};
}

}  // namespace equicohom
