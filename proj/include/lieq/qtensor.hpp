#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/liealg.hpp"
#include "lieq/module.hpp"

namespace lieq {

enum class ProductKind { tensor, exterior };

inline const char* to_string(ProductKind k) { return k == ProductKind::tensor ? "tensor" : "exterior"; }

/// The ring Lambda_q = Lambda / q Lambda as a modulus: Z/q over Z (q = 0 gives
/// Z itself), Z/gcd(m, q) over Z/m.
inline Int lambda_q_modulus(const Int& base, const Int& q) {
  if (base == 0) return q;
  return gcd(base, q);
}

/// h (x)^q g or h ^^q g for an ideal h of g, presented on the ambient symbols
/// b_i (x) e_j (index i*n + j) and, for q >= 1, the braces {b_i} (index p*n + i).
/// The relation lattice is closed under brackets with every symbol before the
/// canonical Lie algebra is formed.
class QProduct {
 public:
  QProduct(Ideal h, Int q, ProductKind kind)
      : h_(std::move(h)), g_(h_.parent()), q_(std::move(q)), kind_(kind) {
    if (q_ < 0) throw std::invalid_argument("QProduct: q must be non-negative");
    p_ = h_.size();
    n_ = g_.dim();
    N_ = p_ * n_ + (has_braces() ? p_ : 0);
    build_brackets();
    build_lattice();
  }

  ProductKind kind() const { return kind_; }
  const Int& q() const { return q_; }
  const LieAlgebra& g() const { return g_; }
  const Ideal& h() const { return h_; }
  bool has_braces() const { return q_ != 0; }
  std::size_t ambient_rank() const { return N_; }
  std::size_t pure(std::size_t i, std::size_t j) const { return i * n_ + j; }
  std::size_t brace(std::size_t i) const { return p_ * n_ + i; }
  bool is_brace(std::size_t s) const { return s >= p_ * n_; }

  const FpModule& module() const { return *module_; }
  const LieAlgebra& algebra() const { return algebra_; }
  /// Relations added by the bracket-closure loop beyond the defining
  /// families; zero on every instance seen so far.
  std::size_t closure_additions() const { return closure_added_; }

  Vec coordinates(const Vec& x) const { return module_->coordinates(x); }
  Vec lift(const Vec& c) const { return module_->lift(c); }
  bool is_zero(const Vec& x) const { return module_->is_zero(x); }
  Vec symbol(std::size_t s) const { return unit_vec(N_, s); }

  /// a (x) c with a in ideal coordinates and c in g coordinates.
  Vec tensor(const Vec& a, const Vec& c) const {
    Vec v(N_, Int(0));
    for (std::size_t i = 0; i < p_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (c[j] != 0) v[pure(i, j)] += a[i] * c[j];
    }
    return v;
  }
  /// {a} for a in ideal coordinates; zero when q = 0.
  Vec brace_of(const Vec& a) const {
    Vec v(N_, Int(0));
    if (!has_braces()) return v;
    for (std::size_t i = 0; i < p_; ++i) v[brace(i)] = a[i];
    return v;
  }

  const Vec& symbol_bracket(std::size_t s, std::size_t u) const { return B_[s * N_ + u]; }

  Vec bracket_ambient(const Vec& x, const Vec& y) const {
    Vec r(N_, Int(0));
    for (std::size_t s = 0; s < N_; ++s) {
      if (x[s] == 0) continue;
      for (std::size_t u = 0; u < N_; ++u)
        if (y[u] != 0) axpy(r, x[s] * y[u], B_[s * N_ + u]);
    }
    return r;
  }

  std::string symbol_name(std::size_t s) const {
    const char* op = kind_ == ProductKind::tensor ? "(x)" : "^";
    if (is_brace(s)) return "{b" + std::to_string(s - p_ * n_ + 1) + "}";
    return "b" + std::to_string(s / n_ + 1) + op + g_.names()[s % n_];
  }

  /// xi on an ambient vector: b_i (x) e_j -> [b_i, e_j], {b_i} -> q b_i.
  Vec xi_ambient(const Vec& x) const {
    Vec r(n_, Int(0));
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (x[pure(i, j)] != 0) axpy(r, x[pure(i, j)], g_.bracket(h_.iota(i), g_.basis(j)));
    if (has_braces())
      for (std::size_t i = 0; i < p_; ++i)
        if (x[brace(i)] != 0) axpy(r, x[brace(i)] * q_, h_.iota(i));
    return g_.reduce(std::move(r));
  }

  /// The action of e_l: b_i (x) e_j -> [e_l, b_i] (x) e_j + b_i (x) [e_l, e_j],
  /// {b_i} -> {[e_l, b_i]}.
  Vec act_ambient(std::size_t l, const Vec& x) const {
    Vec r(N_, Int(0));
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const Int& c = x[pure(i, j)];
        if (c == 0) continue;
        axpy(r, c, tensor(h_.action_coords(l, i), g_.basis(j)));
        axpy(r, c, tensor(unit_vec(p_, i), g_.bracket_basis(l, j)));
      }
    if (has_braces())
      for (std::size_t i = 0; i < p_; ++i)
        if (x[brace(i)] != 0) axpy(r, x[brace(i)], brace_of(h_.action_coords(l, i)));
    return r;
  }

  /// Submodule generated by the defining relations only (before closure),
  /// for the functoriality check.
  const std::vector<Vec>& defining_relations() const { return rels_; }
  /// The t11 instances (empty for the tensor kind).
  std::vector<Vec> exterior_relations() const { return wedge_relations(); }

 private:
  void build_brackets() {
    B_.assign(N_ * N_, Vec(N_, Int(0)));
    const Int q2 = q_ * q_;
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        // [b_i, e_j] in ideal coordinates
        const Vec bij = h_.reduce(scaled(h_.action_coords(j, i), -1));
        for (std::size_t k = 0; k < p_; ++k)
          for (std::size_t l = 0; l < n_; ++l)
            B_[pure(i, j) * N_ + pure(k, l)] = tensor(bij, g_.bracket(h_.iota(k), g_.basis(l)));
      }
    if (!has_braces()) return;
    for (std::size_t k = 0; k < p_; ++k)
      for (std::size_t i = 0; i < p_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          Vec v = tensor(h_.bracket_coords(k, i), g_.basis(j));
          axpy(v, 1, tensor(unit_vec(p_, i), g_.bracket(h_.iota(k), g_.basis(j))));
          v = scaled(v, q_);
          B_[pure(i, j) * N_ + brace(k)] = scaled(v, -1);
          B_[brace(k) * N_ + pure(i, j)] = std::move(v);
        }
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t k = 0; k < p_; ++k)
        B_[brace(i) * N_ + brace(k)] = scaled(tensor(unit_vec(p_, i), h_.iota(k)), q2);
  }

  std::vector<Vec> wedge_relations() const {
    std::vector<Vec> out;
    if (kind_ != ProductKind::exterior) return out;
    for (std::size_t i = 0; i < p_; ++i) {
      out.push_back(tensor(unit_vec(p_, i), h_.iota(i)));
      for (std::size_t k = i + 1; k < p_; ++k)
        out.push_back(add(tensor(unit_vec(p_, i), h_.iota(k)), tensor(unit_vec(p_, k), h_.iota(i))));
    }
    return out;
  }

  void build_lattice() {
    std::vector<Vec>& R = rels_;
    // bilinearity on a finitely presented module: orders in each slot
    for (std::size_t i = 0; i < p_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Vec v(N_, Int(0));
        if (h_.orders()[i] != 0) {
          v[pure(i, j)] = h_.orders()[i];
          R.push_back(v);
        }
        if (g_.order(j) != 0) {
          v.assign(N_, Int(0));
          v[pure(i, j)] = g_.order(j);
          R.push_back(v);
        }
      }
      if (has_braces() && h_.orders()[i] != 0) {
        Vec v(N_, Int(0));
        v[brace(i)] = h_.orders()[i];
        R.push_back(v);
      }
    }
    // [b_i,b_k] (x) e_j - b_i (x) [b_k,e_j] + b_k (x) [b_i,e_j]
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t k = i + 1; k < p_; ++k)
        for (std::size_t j = 0; j < n_; ++j) {
          Vec v = tensor(h_.bracket_coords(i, k), g_.basis(j));
          axpy(v, -1, tensor(unit_vec(p_, i), g_.bracket(h_.iota(k), g_.basis(j))));
          axpy(v, 1, tensor(unit_vec(p_, k), g_.bracket(h_.iota(i), g_.basis(j))));
          R.push_back(std::move(v));
        }
    // b_i (x) [e_j,e_l] - [e_l,b_i] (x) e_j + [e_j,b_i] (x) e_l
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t l = j + 1; l < n_; ++l) {
          Vec v = tensor(unit_vec(p_, i), g_.bracket_basis(j, l));
          axpy(v, -1, tensor(h_.action_coords(l, i), g_.basis(j)));
          axpy(v, 1, tensor(h_.action_coords(j, i), g_.basis(l)));
          R.push_back(std::move(v));
        }
    // {[b_i,e_j]} - q (b_i (x) e_j)
    if (has_braces())
      for (std::size_t i = 0; i < p_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
          Vec v = brace_of(h_.reduce(scaled(h_.action_coords(j, i), -1)));
          v[pure(i, j)] -= q_;
          R.push_back(std::move(v));
        }
    for (auto& v : wedge_relations()) R.push_back(std::move(v));
    // alternating bracket on symbols
    for (std::size_t s = 0; s < N_; ++s) {
      if (!lieq::is_zero(B_[s * N_ + s])) R.push_back(B_[s * N_ + s]);
      for (std::size_t u = s + 1; u < N_; ++u) {
        Vec v = add(B_[s * N_ + u], B_[u * N_ + s]);
        if (!lieq::is_zero(v)) R.push_back(std::move(v));
      }
    }

    std::vector<Vec> all = R;
    for (;;) {
      auto M = std::make_shared<FpModule>(FpModule::canonicalize(N_, all, g_.base_modulus()));
      std::vector<Vec> extra;
      for (const auto& r : M->relations())
        for (std::size_t u = 0; u < N_; ++u) {
          Vec v(N_, Int(0));
          for (std::size_t s = 0; s < N_; ++s)
            if (r[s] != 0) axpy(v, r[s], B_[s * N_ + u]);
          if (!M->is_zero(v)) extra.push_back(std::move(v));
        }
      if (extra.empty()) {
        module_ = M;
        form_algebra();
        const ValidationReport jac = algebra_.validate();
        for (const auto& is : jac.issues) extra.push_back(module_->lift(is.witness));
        if (extra.empty()) break;
      }
      closure_added_ += extra.size();
      if (closure_added_ > 64 * (N_ + 1) * (N_ + 1))
        throw BracketNotWellDefined("QProduct: relation closure does not stabilize", extra.front());
      all.insert(all.end(), extra.begin(), extra.end());
    }
  }

  void form_algebra() {
    const std::size_t r = module_->rank();
    std::vector<Vec> L;
    for (std::size_t k = 0; k < r; ++k) L.push_back(module_->generator(k));
    std::vector<Vec> table(r * r, Vec(r, Int(0)));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b)
        table[a * r + b] = module_->coordinates(bracket_ambient(L[a], L[b]));
    std::vector<std::string> names;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t nz = 0, at = 0;
      for (std::size_t s = 0; s < N_; ++s)
        if (L[k][s] != 0) ++nz, at = s;
      names.push_back(nz == 1 && L[k][at] == 1 ? symbol_name(at) : "t" + std::to_string(k + 1));
    }
    const std::string op = kind_ == ProductKind::tensor ? " (x)^" : " ^^";
    algebra_ = LieAlgebra(module_->moduli(), table, g_.base_modulus(),
                          (h_.is_whole() ? g_.name() : "h") + op + q_.get_str() + " " + g_.name(),
                          names);
  }

  Ideal h_;
  LieAlgebra g_;
  Int q_;
  ProductKind kind_;
  std::size_t p_ = 0, n_ = 0, N_ = 0;
  std::vector<Vec> B_;
  std::vector<Vec> rels_;
  std::shared_ptr<const FpModule> module_;
  LieAlgebra algebra_;
  std::size_t closure_added_ = 0;
};

inline QProduct q_tensor_product(const Ideal& h, const Int& q) {
  return QProduct(h, q, ProductKind::tensor);
}
inline QProduct q_exterior_product(const Ideal& h, const Int& q) {
  return QProduct(h, q, ProductKind::exterior);
}
inline QProduct q_tensor_square(const LieAlgebra& g, const Int& q) {
  return QProduct(Ideal::whole(g), q, ProductKind::tensor);
}
inline QProduct q_exterior_square(const LieAlgebra& g, const Int& q) {
  return QProduct(Ideal::whole(g), q, ProductKind::exterior);
}

/// xi on the ambient presentation, as a module map into g.
inline ModuleHom xi_module_map(const QProduct& P) {
  IntMatrix M(P.ambient_rank(), P.g().dim());
  for (std::size_t s = 0; s < P.ambient_rank(); ++s) M.set_row(s, P.xi_ambient(P.symbol(s)));
  return ModuleHom(P.module(), P.g().module(), M);
}

/// xi as a Lie homomorphism from the canonical product algebra into g.
inline LieHom xi(const QProduct& P) {
  const std::size_t r = P.algebra().dim();
  IntMatrix M(r, P.g().dim());
  for (std::size_t k = 0; k < r; ++k) M.set_row(k, P.xi_ambient(P.module().generator(k)));
  return LieHom(P.algebra(), P.g(), M);
}

/// The natural map h (x)^q g -> h ^^q g on ambient symbols (identity).
inline ModuleHom exterior_projection(const QProduct& T, const QProduct& E) {
  return ModuleHom(T.module(), E.module(), IntMatrix::identity(T.ambient_rank()));
}

/// {xi(x)} = q x on every ambient symbol; returns the first failing symbol's
/// defect, or nullopt when the identity holds.
inline std::optional<Vec> check_brace_identity(const QProduct& P) {
  for (std::size_t s = 0; s < P.ambient_rank(); ++s) {
    const Vec x = P.symbol(s);
    auto a = P.h().coordinates_of(P.xi_ambient(x));
    if (!a) return x;
    Vec d = sub(P.brace_of(*a), scaled(x, P.q()));
    if (!P.is_zero(d)) return d;
  }
  return std::nullopt;
}

/// The action of g on the product packaged with xi as a q-crossed module.
inline QCrossedModule product_action(const QProduct& P) {
  const std::size_t r = P.algebra().dim(), n = P.g().dim();
  std::vector<Vec> table(n * r);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < r; ++k)
      table[l * r + k] = P.coordinates(P.act_ambient(l, P.module().generator(k)));
  return {xi(P), LieAction(P.g(), P.algebra(), std::move(table)), P.q()};
}

/// Image of the classical (brace-free) product: the span of the pure symbols.
struct CurlyImage {
  Submodule sub;
  bool closed = false;  // brackets of pure symbols stay pure
};

inline CurlyImage curly_image(const QProduct& P) {
  std::vector<Vec> gens;
  for (std::size_t s = 0; s < P.ambient_rank(); ++s)
    if (!P.is_brace(s)) gens.push_back(P.symbol(s));
  Submodule S(P.module(), gens);
  bool closed = true;
  for (std::size_t a = 0; a < gens.size() && closed; ++a)
    for (std::size_t b = 0; b < gens.size() && closed; ++b)
      closed = S.contains(P.bracket_ambient(gens[a], gens[b]));
  return {std::move(S), closed};
}

struct GammaSummand {
  bool diagonal = true;
  std::size_t i = 0, j = 0;
  Int order;
  std::string label() const {
    return diagonal ? "diag(" + std::to_string(i + 1) + ")"
                    : "cross(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }
};

/// Whitehead's quadratic functor of A over Z (ring 0) or Z/k: one summand
/// gamma(a_i) per cyclic generator and one cross term per pair.
struct GammaModule {
  FpModule base;
  Int ring;
  std::vector<GammaSummand> summands;
  FpModule module;
  const Vec& invariant_factors() const { return module.invariant_factors(); }
};

inline Int gamma_diagonal_order(const Int& d) {
  if (d == 0) return 0;
  return divides(2, d) ? Int(2 * d) : d;
}

inline GammaModule gamma(const FpModule& A, const Int& ring = 0) {
  const Vec& d = A.moduli();
  GammaModule out{A, ring, {}, FpModule{}};
  auto over = [&](Int o) { return ring == 0 ? o : gcd(o, ring); };
  Vec orders;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.summands.push_back({true, i, i, over(gamma_diagonal_order(d[i]))});
    orders.push_back(out.summands.back().order);
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      out.summands.push_back({false, i, j, over(gcd(d[i], d[j]))});
      orders.push_back(out.summands.back().order);
    }
  out.module = FpModule::diagonal(orders);
  return out;
}

/// i : Gamma(g / g#_q g) -> g (x)^q g, gamma(x) -> x (x) x, with Gamma taken
/// over Lambda_q.
struct GammaMap {
  FpModule quotient;  // g / (g #_q g), ambient = g
  Int ring;
  GammaModule source;
  ModuleHom map;
};

inline GammaMap gamma_map_i(const QProduct& T) {
  const LieAlgebra& g = T.g();
  const Ideal hash = hash_product(g, Ideal::whole(g), T.q());
  FpModule Q = quotient(g.module(), hash.submodule()).module;
  const Int ring = lambda_q_modulus(g.base_modulus(), T.q());
  GammaModule G = gamma(Q, ring);
  std::vector<Vec> a;
  for (std::size_t i = 0; i < Q.rank(); ++i) a.push_back(Q.generator(i));
  IntMatrix M(G.summands.size(), T.ambient_rank());
  for (std::size_t s = 0; s < G.summands.size(); ++s) {
    const auto& sm = G.summands[s];
    Vec v = T.tensor(a[sm.i], a[sm.j]);
    if (!sm.diagonal) v = add(v, T.tensor(a[sm.j], a[sm.i]));
    M.set_row(s, v);
  }
  ModuleHom map(G.module, T.module(), M);
  return {std::move(Q), ring, std::move(G), std::move(map)};
}

inline GammaMap gamma_map_i(const LieAlgebra& g, const Int& q) {
  return gamma_map_i(q_tensor_square(g, q));
}

/// A chain of module maps with named checks (exactness, surjectivity, ...).
struct InducedSequence {
  struct Check {
    std::string name;
    bool holds = false;
    std::string detail;
  };
  std::vector<ModuleHom> maps;
  std::vector<Check> checks;
  bool hypothesis = true;  // for conditional parts

  bool ok() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
  void check(std::string name, bool holds, std::string detail = "") {
    checks.push_back({std::move(name), holds, std::move(detail)});
  }
  std::string summary() const {
    std::string s;
    for (const auto& c : checks) {
      if (!s.empty()) s += "; ";
      s += c.name + (c.holds ? " ok" : " FAILED");
      if (!c.detail.empty()) s += " (" + c.detail + ")";
    }
    return s;
  }
};

/// Gamma(g/g#_q g) -> g (x)^q g -> g ^^q g -> 0: exactness at the tensor
/// square, surjectivity, abelian image, and injectivity of i when
/// g/g#_q g is free over Lambda_q.
inline InducedSequence theorem1_sequence(const LieAlgebra& g, const Int& q) {
  const QProduct T = q_tensor_square(g, q);
  const QProduct E = q_exterior_square(g, q);
  GammaMap gm = gamma_map_i(T);
  ModuleHom p = exterior_projection(T, E);
  InducedSequence out;
  const Submodule img = gm.map.image();
  const Submodule ker = p.kernel();
  out.check("exact at tensor square", img == ker,
            "image " + img.describe() + ", kernel " + ker.describe());
  out.check("projection surjective", p.is_surjective());
  bool abelian = true;
  for (const auto& x : img.generators())
    for (const auto& y : img.generators()) abelian = abelian && T.is_zero(T.bracket_ambient(x, y));
  out.check("image abelian", abelian);
  out.hypothesis = is_free_over(gm.quotient, gm.ring);
  if (out.hypothesis)
    out.check("i injective", gm.map.is_injective(),
              "source " + gm.source.module.describe() + ", image " + img.describe());
  out.maps = {gm.map, p};
  return out;
}

/// h ^^q g -> g ^^q g -> (g/h) ^^q (g/h) -> 0, or the same for the curly
/// (brace-free) images.
enum class SequenceKind { exterior, curly };

inline InducedSequence right_exact_sequence(const LieAlgebra& g, const Ideal& h, const Int& q,
                                            SequenceKind kind = SequenceKind::exterior) {
  const QProduct A(h, q, ProductKind::exterior);
  const QProduct B = q_exterior_square(g, q);
  const QuotientAlgebra Q = quotient_algebra(g, h);
  const QProduct C = q_exterior_square(Q.algebra, q);
  IntMatrix alpha(A.ambient_rank(), B.ambient_rank());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) alpha.set_row(A.pure(i, j), B.tensor(h.iota(i), g.basis(j)));
    if (A.has_braces()) alpha.set_row(A.brace(i), B.brace_of(h.iota(i)));
  }
  IntMatrix beta(B.ambient_rank(), C.ambient_rank());
  std::vector<Vec> pi;
  for (std::size_t x = 0; x < g.dim(); ++x) pi.push_back(Q.projection.apply(g.basis(x)));
  for (std::size_t x = 0; x < g.dim(); ++x) {
    for (std::size_t y = 0; y < g.dim(); ++y) beta.set_row(B.pure(x, y), C.tensor(pi[x], pi[y]));
    if (B.has_braces()) beta.set_row(B.brace(x), C.brace_of(pi[x]));
  }
  ModuleHom a(A.module(), B.module(), alpha);
  ModuleHom b(B.module(), C.module(), beta);
  InducedSequence out;
  if (kind == SequenceKind::exterior) {
    const Submodule img = a.image(), ker = b.kernel();
    out.check("exact at middle", img == ker, "image " + img.describe() + ", kernel " + ker.describe());
    out.check("surjective at right", b.is_surjective());
  } else {
    std::vector<Vec> ga, gb;
    for (std::size_t s = 0; s < A.ambient_rank(); ++s)
      if (!A.is_brace(s)) ga.push_back(a.apply(A.symbol(s)));
    const Submodule img(B.module(), ga);
    const Submodule curlyB = curly_image(B).sub;
    const Submodule ker = intersection(b.kernel(), curlyB);
    out.check("exact at middle", img == ker, "image " + img.describe() + ", kernel " + ker.describe());
    for (const auto& x : curlyB.generators()) gb.push_back(b.apply(x));
    out.check("surjective at right", Submodule(C.module(), gb) == curly_image(C).sub);
  }
  out.maps = {a, b};
  return out;
}

struct AbelianDecomposition {
  Vec tensor_actual, tensor_expected;
  Vec exterior_actual, exterior_expected;
  bool products_abelian = false;
  bool ok() const {
    return products_abelian && tensor_actual == tensor_expected && exterior_actual == exterior_expected;
  }
};

/// For abelian g: g (x)^q g ~ g + T(g/qg) and g ^^q g ~ g + A(g/qg) over
/// Lambda_q when q >= 1; the classical squares T(g), A(g) when q = 0.
inline AbelianDecomposition abelian_decomposition_check(const LieAlgebra& g, const Int& q) {
  if (!g.is_abelian()) throw NotAbelianInput(g.name() + " is not abelian");
  AbelianDecomposition out;
  const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);
  out.tensor_actual = T.module().invariant_factors();
  out.exterior_actual = E.module().invariant_factors();
  out.products_abelian = T.algebra().is_abelian() && E.algebra().is_abelian();
  if (q == 0) {
    out.tensor_expected = tensor_square_ab(g.module()).module.invariant_factors();
    out.exterior_expected = exterior_square_ab(g.module()).module.invariant_factors();
  } else {
    std::vector<Vec> qg;
    for (std::size_t i = 0; i < g.dim(); ++i) qg.push_back(scaled(g.basis(i), q));
    const FpModule red = quotient(g.module(), Submodule(g.module(), qg)).module;
    out.tensor_expected =
        direct_sum_factors(g.module().invariant_factors(), tensor_square_ab(red).module.invariant_factors());
    out.exterior_expected =
        direct_sum_factors(g.module().invariant_factors(), exterior_square_ab(red).module.invariant_factors());
  }
  return out;
}

struct SplitVerdict {
  bool hypothesis = false;
  Vec tensor_factors, rhs_factors;  // g (x)^q g  vs  (g ^^q g) + Gamma
  bool holds() const { return tensor_factors == rhs_factors; }
};

/// g (x)^q g ~ (g ^^q g) + Gamma(g/g#_q g), compared by invariant factors
/// when g/g#_q g is free over Lambda_q.
inline SplitVerdict split_check(const LieAlgebra& g, const Int& q) {
  SplitVerdict v;
  const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);
  const GammaMap gm = gamma_map_i(T);
  v.hypothesis = is_free_over(gm.quotient, gm.ring);
  v.tensor_factors = T.module().invariant_factors();
  v.rhs_factors = direct_sum_factors(E.module().invariant_factors(), gm.source.invariant_factors());
  return v;
}

}  // namespace lieq
