#pragma once

// Brute-force oracles over small finite instances. Nothing here goes through
// the Smith/Hermite pipeline except brute_gamma and the universal bilinear
// objects, whose presentations are instantiated over every element.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/liealg.hpp"
#include "lieq/module.hpp"

namespace lieq::testkit {

inline constexpr std::size_t kMaxOrder = 4096;

using Small = std::vector<long>;

/// Elements of Z/d_1 + ... + Z/d_k (all d_i >= 1) enumerated in mixed radix.
class FiniteEnumeration {
 public:
  explicit FiniteEnumeration(std::vector<long> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (long d : orders_) {
      if (d < 1) throw TooLarge("FiniteEnumeration: infinite or invalid factor");
      size_ *= static_cast<std::size_t>(d);
      if (size_ > kMaxOrder) throw TooLarge("FiniteEnumeration: order exceeds 4096");
    }
  }
  static FiniteEnumeration of(const Vec& orders) {
    std::vector<long> o;
    for (const auto& d : orders) {
      if (d == 0 || !d.fits_slong_p()) throw TooLarge("FiniteEnumeration: infinite factor");
      o.push_back(d.get_si());
    }
    return FiniteEnumeration(o);
  }

  std::size_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<long>& orders() const { return orders_; }

  Small element(std::size_t idx) const {
    Small x(orders_.size());
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      x[k] = static_cast<long>(idx % static_cast<std::size_t>(orders_[k]));
      idx /= static_cast<std::size_t>(orders_[k]);
    }
    return x;
  }
  std::size_t index(const Small& x) const {
    std::size_t idx = 0, mul = 1;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      long r = x[k] % orders_[k];
      if (r < 0) r += orders_[k];
      idx += static_cast<std::size_t>(r) * mul;
      mul *= static_cast<std::size_t>(orders_[k]);
    }
    return idx;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    Small x = element(a), y = element(b);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return index(x);
  }
  std::size_t scale(long t, std::size_t a) const {
    Small x = element(a);
    for (auto& v : x) v *= t;
    return index(x);
  }

 private:
  std::vector<long> orders_;
  std::size_t size_ = 1;
};

/// A subgroup of a finite enumeration, grown one generator at a time.
class Subgroup {
 public:
  explicit Subgroup(const FiniteEnumeration& E) : E_(&E), in_(E.size(), false) {
    in_[0] = true;
    members_.push_back(0);
  }
  bool contains(std::size_t x) const { return in_[x]; }
  std::size_t size() const { return members_.size(); }
  const std::vector<std::size_t>& generators() const { return gens_; }

  /// Adds x; returns true if the subgroup grew.
  bool add(std::size_t x) {
    if (in_[x]) return false;
    gens_.push_back(x);
    const std::vector<std::size_t> base = members_;
    std::size_t m = x;
    while (!in_[m]) {
      for (std::size_t s : base) {
        const std::size_t y = E_->add(s, m);
        in_[y] = true;
        members_.push_back(y);
      }
      m = E_->add(m, x);
    }
    return true;
  }

 private:
  const FiniteEnumeration* E_;
  std::vector<bool> in_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> gens_;
};

/// Invariant factors of E / S from the census of element orders in the
/// quotient: for each prime p, the number of cyclic factors of exponent >= k
/// is log_p(N(p^k) / N(p^(k-1))), N(t) = #{x : t x = 0}.
inline Vec quotient_factors(const FiniteEnumeration& E, const Subgroup& S) {
  const std::size_t qorder = E.size() / S.size();
  std::map<std::size_t, std::size_t> count;  // order -> number of quotient elements
  for (std::size_t x = 0; x < E.size(); ++x) {
    std::size_t t = 1, y = x;
    while (!S.contains(y)) {
      y = E.add(y, x);
      ++t;
    }
    ++count[t];
  }
  std::vector<std::size_t> primes;
  for (std::size_t m = qorder, p = 2; m > 1; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  auto killed_by = [&](std::size_t t) {
    std::size_t c = 0;
    for (const auto& [o, k] : count)
      if (t % o == 0) c += k;
    return c / S.size();
  };
  std::vector<std::vector<std::size_t>> exps;  // per prime: exponents, descending
  for (std::size_t p : primes) {
    std::vector<std::size_t> ge;  // ge[k-1] = #factors with exponent >= k
    std::size_t prev = 1, pk = 1;
    for (;;) {
      pk *= p;
      const std::size_t cur = killed_by(pk);
      std::size_t ratio = cur / prev, r = 0;
      while (ratio > 1) ratio /= p, ++r;
      if (r == 0) break;
      ge.push_back(r);
      prev = cur;
    }
    std::vector<std::size_t> e;
    for (std::size_t k = 0; k < ge.size(); ++k) {
      const std::size_t exact = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
      for (std::size_t c = 0; c < exact; ++c) e.push_back(k + 1);
    }
    std::sort(e.rbegin(), e.rend());
    exps.push_back(e);
  }
  std::size_t width = 0;
  for (const auto& e : exps) width = std::max(width, e.size());
  Vec out(width, Int(1));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t k = 0; k < exps[i].size(); ++k) {
      Int pk = 1;
      for (std::size_t t = 0; t < exps[i][k]; ++t) pk *= static_cast<long>(primes[i]);
      out[k] *= pk;
    }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Invariant factors of (ambient finite module) / span(relations).
inline Vec brute_module_quotient(const std::vector<long>& ambient, const std::vector<Small>& relations) {
  FiniteEnumeration E(ambient);
  Subgroup S(E);
  for (const auto& r : relations) S.add(E.index(r));
  return quotient_factors(E, S);
}

enum class Kind { tensor, exterior };

/// The q-tensor or q-exterior square of a finite algebra g, presented on
/// basis symbols e_a (x) e_b and {e_a} with the defining families
/// instantiated over all elements of g, closed under the symbol brackets.
class BruteProduct {
 public:
  BruteProduct(const LieAlgebra& g, long q, Kind kind)
      : g_(g), G_(FiniteEnumeration::of(g.orders())), q_(q), kind_(kind), n_(g.dim()) {
    std::vector<long> amb;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) amb.push_back(std::gcd(G_.orders()[a], G_.orders()[b]));
    if (q_ != 0)
      for (std::size_t a = 0; a < n_; ++a) amb.push_back(G_.orders()[a]);
    E_ = std::make_unique<FiniteEnumeration>(amb);
    S_ = std::make_unique<Subgroup>(*E_);
    build();
  }

  const FiniteEnumeration& ambient() const { return *E_; }
  const Subgroup& relations() const { return *S_; }
  Vec invariant_factors() const { return quotient_factors(*E_, *S_); }

  /// x (x) y for elements of g.
  Small tensor(const Small& x, const Small& y) const {
    Small v(E_->rank(), 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) v[a * n_ + b] += x[a] * y[b];
    return v;
  }
  Small brace(const Small& x) const {
    Small v(E_->rank(), 0);
    if (q_ != 0)
      for (std::size_t a = 0; a < n_; ++a) v[n_ * n_ + a] = x[a];
    return v;
  }
  bool is_zero(const Small& v) const { return S_->contains(E_->index(v)); }
  const FiniteEnumeration& algebra_elements() const { return G_; }
  Small gbracket(const Small& x, const Small& y) const {
    Vec X(x.begin(), x.end()), Y(y.begin(), y.end());
    const Vec r = g_.bracket(X, Y);
    Small out;
    for (const auto& c : r) out.push_back(c.get_si());
    return out;
  }

 private:
  static Small plus(Small a, const Small& b, long s = 1) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  }
  Small scale(const Small& x, long t) const {
    Small r = x;
    for (auto& v : r) v *= t;
    return r;
  }
  Small basis(std::size_t a) const {
    Small e(n_, 0);
    e[a] = 1;
    return e;
  }

  // bracket of two ambient symbols
  Small symbol_bracket(std::size_t s, std::size_t u) const {
    const std::size_t P = n_ * n_;
    if (s < P && u < P) {
      return tensor(gbracket(basis(s / n_), basis(s % n_)), gbracket(basis(u / n_), basis(u % n_)));
    }
    if (s >= P && u < P) {
      const Small qk = scale(basis(s - P), q_);
      const Small x = basis(u / n_), y = basis(u % n_);
      return plus(tensor(gbracket(qk, x), y), tensor(x, gbracket(qk, y)));
    }
    if (s < P && u >= P) return scale(symbol_bracket(u, s), -1);
    return tensor(scale(basis(s - P), q_), scale(basis(u - P), q_));
  }

  Small bracket(const Small& X, const Small& Y) const {
    Small r(E_->rank(), 0);
    for (std::size_t s = 0; s < X.size(); ++s) {
      if (X[s] == 0) continue;
      for (std::size_t u = 0; u < Y.size(); ++u)
        if (Y[u] != 0) r = plus(r, symbol_bracket(s, u), X[s] * Y[u]);
    }
    return r;
  }

  void add(const Small& v) { S_->add(E_->index(v)); }

  void build() {
    const std::size_t m = G_.size();
    std::vector<Small> el;
    for (std::size_t i = 0; i < m; ++i) el.push_back(G_.element(i));
    for (const auto& h : el)
      for (const auto& h2 : el)
        for (const auto& x : el) {
          // [h,h'] (x) x - h (x) [h',x] + h' (x) [h,x]
          Small v = tensor(gbracket(h, h2), x);
          v = plus(v, tensor(h, gbracket(h2, x)), -1);
          v = plus(v, tensor(h2, gbracket(h, x)));
          add(v);
          // h (x) [x,y] - [y,h] (x) x + [x,h] (x) y, with (x, y) = (h2, x)
          Small w = tensor(h, gbracket(h2, x));
          w = plus(w, tensor(gbracket(x, h), h2), -1);
          w = plus(w, tensor(gbracket(h2, h), x));
          add(w);
        }
    for (const auto& h : el) {
      for (const auto& x : el)
        if (q_ != 0) add(plus(brace(gbracket(h, x)), tensor(h, x), -q_));
      if (kind_ == Kind::exterior) add(tensor(h, h));
    }
    const std::size_t N = E_->rank();
    // alternating on every element, Jacobi on symbols, then bracket closure
    for (std::size_t x = 0; x < E_->size(); ++x) {
      const Small X = E_->element(x);
      add(bracket(X, X));
    }
    auto sym = [&](std::size_t s) {
      Small e(N, 0);
      e[s] = 1;
      return e;
    };
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t c = 0; c < N; ++c) {
          Small j = bracket(sym(a), bracket(sym(b), sym(c)));
          j = plus(j, bracket(sym(b), bracket(sym(c), sym(a))));
          j = plus(j, bracket(sym(c), bracket(sym(a), sym(b))));
          add(j);
        }
    std::size_t done = 0;
    while (done < S_->generators().size()) {
      const Small r = E_->element(S_->generators()[done++]);
      for (std::size_t u = 0; u < N; ++u) add(bracket(r, sym(u)));
    }
  }

  LieAlgebra g_;
  FiniteEnumeration G_;
  long q_;
  Kind kind_;
  std::size_t n_;
  std::unique_ptr<FiniteEnumeration> E_;
  std::unique_ptr<Subgroup> S_;
};

enum class CenterKind { tensor, exterior, ellis_tensor, ellis_exterior };

/// Elements x of g with x (x) y = 0 for every y in g (and {x} = 0 unless an
/// Ellis center), evaluated in the brute-force product.
inline std::vector<Small> brute_center(const LieAlgebra& g, long q, CenterKind kind) {
  const bool ext = kind == CenterKind::exterior || kind == CenterKind::ellis_exterior;
  const bool brace = kind == CenterKind::tensor || kind == CenterKind::exterior;
  BruteProduct P(g, q, ext ? Kind::exterior : Kind::tensor);
  const auto& G = P.algebra_elements();
  std::vector<Small> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Small x = G.element(i);
    bool ok = !brace || q == 0 || P.is_zero(P.brace(x));
    for (std::size_t j = 0; ok && j < G.size(); ++j) ok = P.is_zero(P.tensor(x, G.element(j)));
    if (ok) out.push_back(x);
  }
  return out;
}

namespace detail {

inline Vec present(std::size_t gens, const std::set<Small>& rows) {
  std::vector<Vec> R;
  R.reserve(rows.size());
  for (const auto& r : rows) {
    Vec v(r.begin(), r.end());
    R.push_back(std::move(v));
  }
  return FpModule::canonicalize(gens, R).invariant_factors();
}

inline long exponent(const std::vector<long>& orders) {
  long e = 1;
  for (long d : orders) e = std::lcm(e, d);
  return e;
}

}  // namespace detail

/// Gamma(A) from its presentation: one generator gamma(a) per element, the
/// three families over all a, b, c and all lambda in [0, e^2), e the
/// exponent of A, plus k*gamma(a) over Z/k. The range suffices: lambda = 0
/// and lambda = e give gamma(0) = 0 and e^2 gamma(a) = 0, so every family is
/// periodic in lambda with period e^2.
inline Vec brute_gamma(const std::vector<long>& orders, long ring = 0) {
  FiniteEnumeration A(orders);
  if (A.size() > 16) throw TooLarge("brute_gamma: |A| > 16");
  const std::size_t m = A.size();
  const long e = detail::exponent(orders);
  const long lam_max = e * e;
  std::set<Small> rows;
  auto put = [&](Small r) {
    if (std::all_of(r.begin(), r.end(), [](long v) { return v == 0; })) return;
    rows.insert(std::move(r));
  };
  for (std::size_t a = 0; a < m; ++a)
    for (long l = 0; l < lam_max; ++l) {
      Small r(m, 0);
      r[a] += l * l;
      r[A.scale(l, a)] -= 1;
      put(r);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Small r(m, 0);
        r[A.add(A.add(a, b), c)] += 1;
        r[a] += 1, r[b] += 1, r[c] += 1;
        r[A.add(a, b)] -= 1, r[A.add(a, c)] -= 1, r[A.add(b, c)] -= 1;
        put(r);
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (long l = 0; l < lam_max; ++l) {
        Small r(m, 0);
        const std::size_t la = A.scale(l, a);
        r[A.add(la, b)] += 1;
        r[a] += l, r[b] += l;
        r[A.add(a, b)] -= l;
        r[la] -= 1;
        r[b] -= 1;
        put(r);
      }
  if (ring >= 2)
    for (std::size_t a = 0; a < m; ++a) {
      Small r(m, 0);
      r[a] = ring;
      put(r);
    }
  return detail::present(m, rows);
}

/// Universal bilinear (or alternating bilinear) object on A x A, one symbol
/// per pair of elements and relations over all elements.
inline Vec brute_bilinear_square(const std::vector<long>& orders, bool alternating) {
  FiniteEnumeration A(orders);
  const std::size_t m = A.size();
  if (m * m > kMaxOrder) throw TooLarge("brute_bilinear_square: too many symbols");
  std::set<Small> rows;
  auto sym = [&](std::size_t a, std::size_t b) { return a * m + b; };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t a2 = 0; a2 < m; ++a2)
      for (std::size_t b = 0; b < m; ++b) {
        Small r(m * m, 0);
        r[sym(A.add(a, a2), b)] += 1;
        r[sym(a, b)] -= 1;
        r[sym(a2, b)] -= 1;
        rows.insert(r);
        Small s(m * m, 0);
        s[sym(b, A.add(a, a2))] += 1;
        s[sym(b, a)] -= 1;
        s[sym(b, a2)] -= 1;
        rows.insert(s);
      }
  if (alternating)
    for (std::size_t a = 0; a < m; ++a) {
      Small r(m * m, 0);
      r[sym(a, a)] = 1;
      rows.insert(r);
    }
  rows.erase(Small(m * m, 0));
  return detail::present(m * m, rows);
}

/// All invariant-factor chains d_1 | d_2 | ... (d_1 >= 2) of finite abelian
/// groups of order <= bound, the trivial group included.
inline std::vector<std::vector<long>> finite_abelian_groups(long bound) {
  std::vector<std::vector<long>> out{{}};
  std::vector<long> cur;
  std::function<void(long)> extend = [&](long prod) {
    out.push_back(cur);
    const long last = cur.back();
    for (long k = last; prod * k <= bound; k += last) {
      cur.push_back(k);
      extend(prod * k);
      cur.pop_back();
    }
  };
  for (long d = 2; d <= bound; ++d) {
    cur = {d};
    extend(d);
  }
  return out;
}

/// Every Lie algebra structure on (Z/p)^r for r <= 2 over the ring Z/p:
/// the zero algebra, Z/p, and [e1, e2] = a e1 + b e2 for all a, b.
inline std::vector<LieAlgebra> small_algebras(long p) {
  std::vector<LieAlgebra> out;
  const Int P = p;
  out.push_back(LieAlgebra::from_presentation(0, {}, P, {}, "0"));
  out.push_back(LieAlgebra::from_presentation(1, {}, P, {}, "Z/" + std::to_string(p)));
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) {
      std::vector<Vec> t(4, Vec(2, Int(0)));
      t[1] = Vec{Int(a), Int(b)};
      out.push_back(LieAlgebra::from_presentation(
          2, {}, P, t, "(Z/" + std::to_string(p) + ")^2[" + std::to_string(a) + "," + std::to_string(b) + "]"));
    }
  return out;
}

}  // namespace lieq::testkit
