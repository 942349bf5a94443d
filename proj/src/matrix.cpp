#include "equicohom/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace equicohom {

Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) return a;
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("ragged cols");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * x[j];
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (rows_ != o.rows_) throw std::invalid_argument("hstack shape mismatch");
  Mat r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("vstack shape mismatch");
  Mat r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Mat Mat::cols_slice(std::size_t from, std::size_t to) const {
  if (from > to || to > cols_) throw std::invalid_argument("cols_slice range");
  Mat r(rows_, to - from);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) os << at(i, j) << " ";
    os << "]\n";
  }
  return os.str();
}

Vec SmithResult::diagonal() const {
  std::size_t n = std::min(d.rows(), d.cols());
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
  return out;
}

namespace {

// Elementary operations on d that keep u * m * v = d invariant.
struct SnfWork {
  Mat d, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) += q * d.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d.at(r, i) += q * d.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
  SnfWork w{m, Mat::identity(m.rows()), Mat::identity(m.cols())};
  const std::size_t R = m.rows(), C = m.cols();
  const std::size_t N = std::min(R, C);

  for (std::size_t t = 0; t < N; ++t) {
    // Find pivot: smallest |entry| != 0 in the remaining submatrix.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        const Int& e = w.d.at(i, j);
        if (e == 0) continue;
        if (!found || abs(e) < abs(w.d.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;  // remaining submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    // Clear row and column t; repeat until clean (Euclidean steps).
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) {  // remainder smaller than pivot: swap up
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // Divisibility: pivot must divide every remaining entry; if not, fold the
    // offending column into column t and re-clean.
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < R && !again; ++i)
        for (std::size_t j = t + 1; j < C && !again; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_col(t, j, 1);
            // Column t now has nonzero entries below the pivot; re-clean.
            bool dirty2 = true;
            while (dirty2) {
              dirty2 = false;
              for (std::size_t r = t + 1; r < R; ++r) {
                if (w.d.at(r, t) == 0) continue;
                Int q = w.d.at(r, t) / w.d.at(t, t);
                w.add_row(r, t, -q);
                if (w.d.at(r, t) != 0) {
                  w.swap_rows(t, r);
                  dirty2 = true;
                }
              }
              for (std::size_t c = t + 1; c < C; ++c) {
                if (w.d.at(t, c) == 0) continue;
                Int q = w.d.at(t, c) / w.d.at(t, t);
                w.add_col(c, t, -q);
                if (w.d.at(t, c) != 0) {
                  w.swap_cols(t, c);
                  dirty2 = true;
                }
              }
            }
            again = true;
          }
    }

    if (w.d.at(t, t) < 0) w.negate_row(t);
  }

  SmithResult res{std::move(w.u), std::move(w.d), std::move(w.v), 0};
  for (std::size_t i = 0; i < N; ++i)
    if (res.d.at(i, i) != 0) ++res.rank;
  return res;
}

std::size_t rank_of(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return smith_normal_form(m).rank;
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear shape mismatch");
  if (m.rows() == 0) return Vec(m.cols());
  SmithResult s = smith_normal_form(m);
  Vec ub = s.u.apply(b);
  const std::size_t N = std::min(m.rows(), m.cols());
  Vec y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int di = (i < N) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      if (i < m.cols()) y[i] = ub[i] / di;
    }
  }
  return s.v.apply(y);
}

Mat kernel_basis(const Mat& m) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::identity(m.cols());
  SmithResult s = smith_normal_form(m);
  return s.v.cols_slice(s.rank, m.cols());
}

Vec invariant_factors(const Mat& relations, std::size_t ngens) {
  Vec factors;
  std::size_t rank = 0;
  if (relations.rows() > 0 && relations.cols() > 0) {
    if (relations.cols() != ngens)
      throw std::invalid_argument("invariant_factors: relation width mismatch");
    SmithResult s = smith_normal_form(relations);
    rank = s.rank;
    for (std::size_t i = 0; i < rank; ++i) {
      Int d = s.d.at(i, i);
      if (d > 1) factors.push_back(d);
    }
  }
  for (std::size_t i = rank; i < ngens; ++i) factors.push_back(0);
  return factors;
}

}  // namespace equicohom
