#include "fano/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace fano {

using I128 = __int128;

static Int narrow(I128 v) {
  if (v > (I128)INT64_MAX || v < (I128)INT64_MIN) throw overflow_error("integer overflow");
  return (Int)v;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("add overflow");
  return r;
}
Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("sub overflow");
  return r;
}
Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("mul overflow");
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw dimension_error("dot: dimension mismatch");
  I128 acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += (I128)a[i] * b[i];
  return narrow(acc);
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw dimension_error("add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}
Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw dimension_error("sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}
Vec scale(Int k, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(k, v[i]);
  return r;
}
bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}
Vec negate(const Vec& v) { return scale(-1, v); }

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m((int)rows.size(), (int)rows[0].size());
  for (int r = 0; r < m.rows; ++r) {
    if ((int)rows[r].size() != m.cols) throw dimension_error("from_rows: ragged rows");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(int r) const {
  Vec v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

Mat Mat::mul(const Mat& other) const {
  if (cols != other.rows) throw dimension_error("mul: dimension mismatch");
  Mat r(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < other.cols; ++j) {
      I128 acc = 0;
      for (int k = 0; k < cols; ++k) acc += (I128)at(i, k) * other.at(k, j);
      r.at(i, j) = narrow(acc);
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if ((int)v.size() != cols) throw dimension_error("apply: dimension mismatch");
  Vec r(rows);
  for (int i = 0; i < rows; ++i) {
    I128 acc = 0;
    for (int k = 0; k < cols; ++k) acc += (I128)at(i, k) * v[k];
    r[i] = narrow(acc);
  }
  return r;
}

static I128 mul128(I128 a, I128 b) {
  I128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("overflow in elimination");
  return r;
}

// Bareiss fraction-free elimination; returns det in 128 bits.
static I128 bareiss_det(const Mat& m) {
  if (m.rows != m.cols) throw dimension_error("determinant: non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  std::vector<I128> w(m.a.begin(), m.a.end());
  auto at = [&](int r, int c) -> I128& { return w[(size_t)r * n + c]; };
  I128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        I128 num = mul128(at(r, c), at(k, k)) - mul128(at(r, k), at(k, c));
        at(r, c) = num / prev;  // exact by Bareiss
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

Int determinant(const Mat& m) { return narrow(bareiss_det(m)); }

UnimodularMap::UnimodularMap(Mat m) : matrix(std::move(m)) {
  Int d = determinant(matrix);
  if (d != 1 && d != -1) throw precondition_error("matrix is not unimodular");
}

bool is_unimodular_basis(const std::vector<Vec>& vs) {
  if (vs.empty()) throw dimension_error("empty basis");
  size_t n = vs[0].size();
  for (const auto& v : vs)
    if (v.size() != n) throw dimension_error("basis vectors of mixed dimension");
  if (vs.size() != n) return false;
  Int d = determinant(Mat::from_rows(vs));
  return d == 1 || d == -1;
}

Vec primitive_part(const Vec& v) {
  if (is_zero(v)) throw domain_error("primitive_part of zero vector");
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

HnfResult hermite_normal_form(const Mat& m) {
  int rows = m.rows, cols = m.cols;
  Mat h = m;
  Mat u = Mat::identity(rows);
  auto row_swap = [&](int a, int b) {
    for (int c = 0; c < cols; ++c) std::swap(h.at(a, c), h.at(b, c));
    for (int c = 0; c < rows; ++c) std::swap(u.at(a, c), u.at(b, c));
  };
  auto row_addmul = [&](int dst, int src, Int k) {
    // row[dst] += k * row[src]
    for (int c = 0; c < cols; ++c) h.at(dst, c) = checked_add(h.at(dst, c), checked_mul(k, h.at(src, c)));
    for (int c = 0; c < rows; ++c) u.at(dst, c) = checked_add(u.at(dst, c), checked_mul(k, u.at(src, c)));
  };
  auto row_negate = [&](int r) {
    for (int c = 0; c < cols; ++c) h.at(r, c) = -h.at(r, c);
    for (int c = 0; c < rows; ++c) u.at(r, c) = -u.at(r, c);
  };

  int pr = 0;
  for (int pc = 0; pc < cols && pr < rows; ++pc) {
    // gcd the column below pr into position pr
    while (true) {
      int piv = -1;
      for (int r = pr; r < rows; ++r)
        if (h.at(r, pc) != 0 && (piv < 0 || std::llabs(h.at(r, pc)) < std::llabs(h.at(piv, pc)))) piv = r;
      if (piv < 0) break;
      if (piv != pr) row_swap(pr, piv);
      if (h.at(pr, pc) < 0) row_negate(pr);
      bool done = true;
      for (int r = pr + 1; r < rows; ++r) {
        if (h.at(r, pc) == 0) continue;
        Int q = h.at(r, pc) / h.at(pr, pc);
        row_addmul(r, pr, -q);
        if (h.at(r, pc) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(pr, pc) == 0) continue;
    // reduce entries above the pivot into [0, pivot)
    for (int r = 0; r < pr; ++r) {
      Int q = h.at(r, pc) / h.at(pr, pc);
      if (h.at(r, pc) - checked_mul(q, h.at(pr, pc)) < 0) q -= 1;
      if (q != 0) row_addmul(r, pr, -q);
    }
    ++pr;
  }
  return {std::move(h), UnimodularMap(std::move(u))};
}

std::optional<std::pair<Vec, Int>> solve_cramer(const Mat& m, const Vec& rhs) {
  if (m.rows != m.cols) throw dimension_error("solve_cramer: non-square matrix");
  int n = m.rows;
  if ((int)rhs.size() != n) throw dimension_error("solve_cramer: rhs dimension mismatch");
  I128 d = bareiss_det(m);
  if (d == 0) return std::nullopt;
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    Mat mi = m;
    for (int r = 0; r < n; ++r) mi.at(r, i) = rhs[r];
    x[i] = narrow(bareiss_det(mi));
  }
  return std::make_pair(std::move(x), narrow(d));
}

std::optional<std::pair<Vec, Int>> solve_level_one(const Mat& m) {
  Vec ones(m.cols, 1);
  auto sol = solve_cramer(m, ones);
  if (!sol) return std::nullopt;
  auto& [num, den] = *sol;
  // rows(m) . (num/den) = 1, i.e. rows(m) . num = den. Reduce to primitive.
  Int g = std::llabs(den);
  for (Int v : num) g = std::gcd(g, v);
  for (Int& v : num) v /= g;
  den /= g;
  if (den < 0) {  // hyperplane level kept positive
    den = -den;
    for (Int& v : num) v = -v;
  }
  return std::make_pair(std::move(num), den);
}

Vec nullspace_direction(const std::vector<Vec>& rows, int n) {
  Vec h(n);
  for (int drop = 0; drop < n; ++drop) {
    Mat minor(n - 1, n - 1);
    for (int r = 0; r < n - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == drop) continue;
        minor.at(r, cc++) = rows[r][c];
      }
    }
    Int d = (n - 1 == 0) ? 1 : determinant(minor);
    h[drop] = (drop % 2 == 0) ? d : -d;
  }
  return h;
}

Vec solve_integral(const std::vector<Vec>& basis, const Vec& target) {
  if (basis.empty()) throw dimension_error("solve_integral: empty basis");
  if (!is_unimodular_basis(basis)) throw precondition_error("solve_integral: basis is not unimodular");
  // coefficients c with c^T * B = target, i.e. B^T c = target
  int n = (int)basis.size();
  Mat bt(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) bt.at(r, c) = basis[c][r];
  auto sol = solve_cramer(bt, target);
  auto& [num, den] = *sol;
  Vec c(n);
  for (int i = 0; i < n; ++i) {
    if (num[i] % den != 0) throw error("solve_integral: internal non-integral solution");
    c[i] = num[i] / den;
  }
  return c;
}

}  // namespace fano
