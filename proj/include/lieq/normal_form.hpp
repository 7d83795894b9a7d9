#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieq/matrix.hpp"

namespace lieq {

/// Row-style Hermite normal form of the lattice spanned by a list of integer
/// vectors. Pivots are positive, pivot columns strictly increase, and entries
/// above a pivot lie in [0, pivot). With tracking enabled, every basis row is
/// recorded as an integer combination of the input rows, and the input
/// dependencies are returned as a basis of the left kernel.
struct HermiteForm {
  std::size_t dim = 0;
  std::size_t input_count = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  bool tracked = false;
  std::vector<Vec> transform;  // rows[i] == sum_k transform[i][k] * input[k]
  std::vector<Vec> kernel;     // sum_k kernel[i][k] * input[k] == 0

  std::size_t rank() const { return rows.size(); }
};

inline HermiteForm hermite_form(const std::vector<Vec>& input, std::size_t dim,
                                bool track = false) {
  HermiteForm h;
  h.dim = dim;
  h.input_count = input.size();
  h.tracked = track;
  const std::size_t m = input.size();
  std::vector<std::ptrdiff_t> slot(dim, -1);
  std::vector<Vec> basis, basis_t;
  std::vector<std::size_t> basis_pivot;

  for (std::size_t idx = 0; idx < m; ++idx) {
    Vec v = input[idx];
    if (v.size() != dim) throw std::invalid_argument("hermite_form: wrong vector length");
    Vec tv;
    if (track) tv = unit_vec(m, idx);
    bool placed = false;
    for (std::size_t c = 0; c < dim; ++c) {
      if (v[c] == 0) continue;
      if (slot[c] < 0) {
        if (v[c] < 0) {
          for (auto& x : v) x = -x;
          if (track)
            for (auto& x : tv) x = -x;
        }
        slot[c] = static_cast<std::ptrdiff_t>(basis.size());
        basis.push_back(std::move(v));
        if (track) basis_t.push_back(std::move(tv));
        basis_pivot.push_back(c);
        placed = true;
        break;
      }
      Vec& b = basis[static_cast<std::size_t>(slot[c])];
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), b[c].get_mpz_t());
      if (q != 0) {
        axpy(v, -q, b);
        if (track) axpy(tv, -q, basis_t[static_cast<std::size_t>(slot[c])]);
      }
      if (v[c] == 0) continue;
      const Bezout bz = bezout(b[c], v[c]);
      const Int bc = exact_div(b[c], bz.g), vc = exact_div(v[c], bz.g);
      Vec nb(dim), nv(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        nb[k] = bz.s * b[k] + bz.t * v[k];
        nv[k] = bc * v[k] - vc * b[k];
      }
      if (track) {
        Vec& bt = basis_t[static_cast<std::size_t>(slot[c])];
        Vec nbt(m), nvt(m);
        for (std::size_t k = 0; k < m; ++k) {
          nbt[k] = bz.s * bt[k] + bz.t * tv[k];
          nvt[k] = bc * tv[k] - vc * bt[k];
        }
        bt = std::move(nbt);
        tv = std::move(nvt);
      }
      b = std::move(nb);
      v = std::move(nv);
    }
    if (!placed && track) h.kernel.push_back(std::move(tv));
  }

  // Order by pivot and reduce above each pivot.
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < dim; ++c)
    if (slot[c] >= 0) order.push_back(static_cast<std::size_t>(slot[c]));
  for (std::size_t i : order) {
    h.rows.push_back(std::move(basis[i]));
    h.pivots.push_back(basis_pivot[i]);
    if (track) h.transform.push_back(std::move(basis_t[i]));
  }
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const std::size_t c = h.pivots[i];
    for (std::size_t j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.rows[j][c].get_mpz_t(), h.rows[i][c].get_mpz_t());
      if (q == 0) continue;
      axpy(h.rows[j], -q, h.rows[i]);
      if (track) axpy(h.transform[j], -q, h.transform[i]);
    }
  }
  return h;
}

/// Coefficients c with sum c_k * input[k] == v, if v lies in the lattice.
/// Requires a tracked form.
inline std::optional<Vec> lattice_solve(const HermiteForm& h, Vec v) {
  Vec coeff(h.tracked ? h.input_count : 0, Int(0));
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const std::size_t c = h.pivots[i];
    if (v[c] == 0) continue;
    if (!divides(h.rows[i][c], v[c])) return std::nullopt;
    const Int q = exact_div(v[c], h.rows[i][c]);
    axpy(v, -q, h.rows[i]);
    if (h.tracked) axpy(coeff, q, h.transform[i]);
  }
  if (!is_zero(v)) return std::nullopt;
  return coeff;
}

inline bool lattice_contains(const HermiteForm& h, Vec v) {
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const std::size_t c = h.pivots[i];
    if (v[c] == 0) continue;
    if (!divides(h.rows[i][c], v[c])) return false;
    axpy(v, -exact_div(v[c], h.rows[i][c]), h.rows[i]);
  }
  return is_zero(v);
}

/// Smith normal form U * M * V == D with U, V unimodular and d_1 | d_2 | ...
struct SmithForm {
  IntMatrix D, U, V;
};

namespace detail {

// Shared elimination engine; any of U, V, Vinv may be null.
inline void smith_engine(IntMatrix& M, IntMatrix* U, IntMatrix* V, IntMatrix* Vinv) {
  const std::size_t r = M.rows(), c = M.cols();
  const std::size_t lim = std::min(r, c);

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    M.swap_cols(a, b);
    if (V) V->swap_cols(a, b);
    if (Vinv) Vinv->swap_rows(a, b);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    M.swap_rows(a, b);
    if (U) U->swap_rows(a, b);
  };

  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t bi = r, bj = c;
    Int best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (M(i, j) == 0) continue;
        if (bi == r || abs(M(i, j)) < best) {
          best = abs(M(i, j));
          bi = i;
          bj = j;
        }
      }
    if (bi == r) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    for (;;) {
      for (std::size_t i = t + 1; i < r; ++i) {
        if (M(i, t) == 0) continue;
        const Int a = M(t, t), b = M(i, t);
        if (divides(a, b)) {
          const Int k = exact_div(b, a);
          M.add_row(i, t, -k);
          if (U) U->add_row(i, t, -k);
        } else {
          const Bezout bz = bezout(a, b);
          const Int ag = exact_div(a, bz.g), bg = exact_div(b, bz.g);
          M.mix_rows(t, i, bz.s, bz.t, -bg, ag);
          if (U) U->mix_rows(t, i, bz.s, bz.t, -bg, ag);
        }
      }
      bool column_dirty = false;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (M(t, j) == 0) continue;
        const Int a = M(t, t), b = M(t, j);
        if (divides(a, b)) {
          const Int k = exact_div(b, a);
          M.add_col(j, t, -k);
          if (V) V->add_col(j, t, -k);
          if (Vinv) Vinv->add_row(t, j, k);
        } else {
          const Bezout bz = bezout(a, b);
          const Int ag = exact_div(a, bz.g), bg = exact_div(b, bz.g);
          M.mix_cols(t, j, bz.s, bz.t, -bg, ag);
          if (V) V->mix_cols(t, j, bz.s, bz.t, -bg, ag);
          if (Vinv) Vinv->mix_rows(t, j, ag, bg, -bz.t, bz.s);
          column_dirty = true;
        }
      }
      if (column_dirty) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!divides(M(t, t), M(i, j))) {
            M.add_row(t, i, 1);
            if (U) U->add_row(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (M(t, t) < 0) {
      M.negate_row(t);
      if (U) U->negate_row(t);
    }
  }
}

}  // namespace detail

inline SmithForm smith_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  detail::smith_engine(s.D, &s.U, &s.V, nullptr);
  return s;
}

/// Smith form keeping only the column transform and its inverse. The
/// diagonal has one entry per column; columns beyond the row count are 0.
struct ColumnSmithForm {
  Vec diagonal;
  IntMatrix V, Vinv;
};

inline ColumnSmithForm smith_columns(const IntMatrix& m) {
  IntMatrix D = m;
  ColumnSmithForm out{{}, IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols())};
  detail::smith_engine(D, nullptr, &out.V, &out.Vinv);
  out.diagonal.assign(m.cols(), Int(0));
  for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) out.diagonal[k] = D(k, k);
  return out;
}

/// Basis of { a in Z^r : sum_i a_i v_i == 0 (mod d) }; d == 0 means exact.
inline std::vector<Vec> congruence_lattice(const Vec& v, const Int& d) {
  const std::size_t r = v.size();
  std::vector<Vec> rows;
  rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) rows.push_back(unit_vec(r, i));
  Vec w(r);
  for (std::size_t i = 0; i < r; ++i) w[i] = mod_floor(v[i], d);
  std::size_t p = r;
  for (std::size_t i = 0; i < r; ++i)
    if (w[i] != 0) {
      p = i;
      break;
    }
  if (p == r) return rows;
  for (std::size_t i = p + 1; i < r; ++i) {
    if (w[i] == 0) continue;
    if (divides(w[p], w[i])) {
      axpy(rows[i], -exact_div(w[i], w[p]), rows[p]);
    } else {
      const Bezout bz = bezout(w[p], w[i]);
      const Int pg = exact_div(w[p], bz.g), ig = exact_div(w[i], bz.g);
      Vec np(r), ni(r);
      for (std::size_t k = 0; k < r; ++k) {
        np[k] = bz.s * rows[p][k] + bz.t * rows[i][k];
        ni[k] = pg * rows[i][k] - ig * rows[p][k];
      }
      rows[p] = std::move(np);
      rows[i] = std::move(ni);
      w[p] = bz.g;
    }
    w[i] = 0;
  }
  if (d == 0) {
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(p));
  } else {
    const Int mult = exact_div(d, gcd(w[p], d));
    for (auto& x : rows[p]) x *= mult;
  }
  return rows;
}

/// Basis of { x in Z^s : (x C)_j == 0 (mod moduli_j) for every column j },
/// processed one column at a time with periodic Hermite reduction.
inline std::vector<Vec> solution_lattice(const IntMatrix& C, const Vec& moduli) {
  const std::size_t s = C.rows();
  std::vector<Vec> K;
  for (std::size_t i = 0; i < s; ++i) K.push_back(unit_vec(s, i));
  std::size_t since_reduce = 0;
  for (std::size_t j = 0; j < C.cols(); ++j) {
    if (K.empty()) break;
    const Int& d = moduli[j];
    if (d == 1) continue;
    Vec vals(K.size(), Int(0));
    bool any = false;
    for (std::size_t i = 0; i < K.size(); ++i) {
      for (std::size_t k = 0; k < s; ++k)
        if (K[i][k] != 0 && C(k, j) != 0) vals[i] += K[i][k] * C(k, j);
      vals[i] = mod_floor(vals[i], d);
      if (vals[i] != 0) any = true;
    }
    if (!any) continue;
    const auto A = congruence_lattice(vals, d);
    std::vector<Vec> next;
    next.reserve(A.size());
    for (const auto& a : A) {
      Vec row(s, Int(0));
      for (std::size_t i = 0; i < a.size(); ++i) axpy(row, a[i], K[i]);
      next.push_back(std::move(row));
    }
    K = std::move(next);
    if (++since_reduce >= 4) {
      K = hermite_form(K, s).rows;
      since_reduce = 0;
    }
  }
  return hermite_form(K, s).rows;
}

}  // namespace lieq
