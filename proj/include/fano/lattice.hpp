#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer linear algebra over Z^n. All arithmetic either fits in
// 64 bits or throws overflow_error; eliminations run fraction-free in
// 128-bit intermediates.

namespace fano {

using Int = long long;
using Vec = std::vector<Int>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dimension_error : error {
  using error::error;
};
struct domain_error : error {
  using error::error;
};
struct overflow_error : error {
  using error::error;
};
struct precondition_error : error {
  using error::error;
};
struct validation_error : error {
  using error::error;
};
struct parse_error : error {
  parse_error(const std::string& msg, int line)
      : error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
  int line_number;
};
struct incomplete_catalog_error : error {
  using error::error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// <a, b>, exact
Int dot(const Vec& a, const Vec& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(Int k, const Vec& v);
bool is_zero(const Vec& v);
Vec negate(const Vec& v);

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  Int& at(int r, int c) { return a[(size_t)r * cols + c]; }
  Int at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  Vec row(int r) const;
  Mat mul(const Mat& other) const;
  Vec apply(const Vec& v) const;  // this * v  (v as column)
  bool operator==(const Mat& other) const = default;
};

// Exact determinant, fraction-free (Bareiss). Throws dimension_error on
// non-square input.
Int determinant(const Mat& m);

// A lattice map given by an n x n matrix with |det| = 1.
struct UnimodularMap {
  Mat matrix;
  explicit UnimodularMap(Mat m);
  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

// True iff vs is a Z-basis (n vectors of dim n with |det| = 1).
bool is_unimodular_basis(const std::vector<Vec>& vs);

// v / gcd(entries); throws domain_error on the zero vector.
Vec primitive_part(const Vec& v);

// Row-style Hermite normal form h = u * m with u unimodular. Pivots are
// positive, entries above a pivot lie in [0, pivot), zero rows sink to
// the bottom.
struct HnfResult {
  Mat h;
  UnimodularMap u;
};
HnfResult hermite_normal_form(const Mat& m);

// Integral normal h with <h, row> = 0 for n-1 rows of dimension n, via
// signed minors; zero iff the rows are linearly dependent. Not reduced to
// primitive.
Vec nullspace_direction(const std::vector<Vec>& rows, int n);

// Unique integral c with sum c_i * basis_i == target; the basis must be
// unimodular (precondition_error otherwise).
Vec solve_integral(const std::vector<Vec>& basis, const Vec& target);

// Solve rows(m) . x = d * ones for the smallest positive d dividing
// det(m); returns (x, d) with x integral, or nullopt when m is singular.
// Used for facet normals: the hyperplane through the rows is
// {p : <x, p> = d}.
std::optional<std::pair<Vec, Int>> solve_level_one(const Mat& m);

// General exact solve of m * x = rhs for square nonsingular m; returns
// (num, den) with x = num / den componentwise, den = det(m) > 0 or < 0
// as computed, gcd not reduced. nullopt when singular.
std::optional<std::pair<Vec, Int>> solve_cramer(const Mat& m, const Vec& rhs);

}  // namespace fano
