// Exact integer linear algebra: dense matrices over Z with arbitrary-precision
// entries, Smith normal form with tracked unimodular transforms, integer linear
// solving and kernel lattices.  This is the engine behind every group-theoretic
// verification in the library, so everything here is exact (no floating point).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace equicohom {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

// Floor modulus / division (the built-in % truncates toward zero).
Int mod_floor(const Int& a, const Int& m);

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);
  static Mat diag(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  Mat transpose() const;
  bool is_zero() const;
  bool operator==(const Mat& o) const = default;

  // Concatenation: [*this | o] and [*this ; o].
  Mat hstack(const Mat& o) const;
  Mat vstack(const Mat& o) const;
  Mat cols_slice(std::size_t from, std::size_t to) const;  // columns [from, to)

  std::string str() const;  // multi-line, for diagnostics

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Smith normal form: u * m * v = d with u, v unimodular and d diagonal,
// d[0][0] | d[1][1] | ... , all diagonal entries >= 0.
struct SmithResult {
  Mat u, d, v;
  std::size_t rank = 0;          // number of nonzero diagonal entries
  Vec diagonal() const;          // min(rows, cols) entries
};
SmithResult smith_normal_form(const Mat& m);

std::size_t rank_of(const Mat& m);

// One integer solution of m x = b, if any.
std::optional<Vec> solve_linear(const Mat& m, const Vec& b);

// Columns form a basis of { x : m x = 0 } as a lattice in Z^cols.
Mat kernel_basis(const Mat& m);

// Z^ngens modulo the lattice spanned by the ROWS of `relations`:
// invariant factors > 1 in ascending divisibility order followed by one 0 per
// free factor.  (Unit factors are dropped.)
Vec invariant_factors(const Mat& relations, std::size_t ngens);

}  // namespace equicohom
