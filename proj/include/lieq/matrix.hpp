#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieq {

using Int = mpz_class;
using Vec = std::vector<Int>;

// Floor-style remainder into [0, |d|); d == 0 leaves the value untouched.
inline Int mod_floor(const Int& a, const Int& d) {
  if (d == 0) return a;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  if (r < 0) r += abs(d);
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

struct Bezout {
  Int g, s, t;  // s*a + t*b == g >= 0
};

inline Bezout bezout(const Int& a, const Int& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline Int exact_div(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

// dst += c * src
inline void axpy(Vec& dst, const Int& c, const Vec& src) {
  if (c == 0) return;
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (src[k] != 0) dst[k] += c * src[k];
}

inline Vec scaled(const Vec& v, const Int& c) {
  Vec r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = c * v[k];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

inline std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k].get_str();
  }
  os << ']';
  return os.str();
}

/// Dense row-major matrix of arbitrary-precision integers. Row vectors act on
/// the left: a vector x maps to x * M.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("IntMatrix::from_rows: ragged row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vec col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  void set_row(std::size_t r, const Vec& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(b, c) != 0) (*this)(a, c) += k * (*this)(b, c);
  }

  // col a += k * col b
  void add_col(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, b) != 0) (*this)(r, a) += k * (*this)(r, b);
  }

  // (row a, row b) <- (s*a + t*b, u*a + v*b)
  void mix_rows(std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u,
                const Int& v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      Int x = (*this)(a, c), y = (*this)(b, c);
      (*this)(a, c) = s * x + t * y;
      (*this)(b, c) = u * x + v * y;
    }
  }

  // (col a, col b) <- (s*a + t*b, u*a + v*b)
  void mix_cols(std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u,
                const Int& v) {
    for (std::size_t r = 0; r < rows_; ++r) {
      Int x = (*this)(r, a), y = (*this)(r, b);
      (*this)(r, a) = s * x + t * y;
      (*this)(r, b) = u * x + v * y;
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

// Row vector times matrix.
inline Vec operator*(const Vec& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("Vec*IntMatrix: dimension mismatch");
  Vec r(m.cols(), Int(0));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(k, j) != 0) r[j] += x[k] * m(k, j);
  }
  return r;
}

// Fraction-free Bareiss elimination; exact for square matrices.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: non-square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) os << to_string(m.row(r)) << '\n';
  return os;
}

}  // namespace lieq
