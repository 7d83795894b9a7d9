#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/matrix.hpp"
#include "lieq/module.hpp"

namespace lieq {

/// Lie algebra over Z or Z/m on a diagonal module: basis e_1..e_n with cyclic
/// orders d_i (0 = infinite), brackets [e_i, e_j] stored as reduced
/// coordinate vectors. Copies share the immutable data.
class LieAlgebra {
 public:
  LieAlgebra() : LieAlgebra(Vec{}, {}, 0, "zero") {}

  /// Builds from constants in canonical form without validating. `brackets`
  /// is an n*n table (row-major), only entries i<j are read.
  LieAlgebra(Vec orders, const std::vector<Vec>& brackets, Int base, std::string name,
             std::vector<std::string> names = {}) {
    auto d = std::make_shared<Data>();
    const std::size_t n = orders.size();
    d->module = FpModule::diagonal(orders, base);
    d->orders = std::move(orders);
    d->base = std::move(base);
    d->name = std::move(name);
    d->names = std::move(names);
    if (d->names.size() != n) {
      d->names.clear();
      for (std::size_t i = 0; i < n; ++i) d->names.push_back("x" + std::to_string(i + 1));
    }
    d->c.assign(n * n, Vec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec v = reduce_with(d->orders, brackets.at(i * n + j));
        d->c[j * n + i] = reduce_with(d->orders, scaled(v, -1));
        d->c[i * n + j] = std::move(v);
      }
    d->abelian = true;
    for (const auto& v : d->c)
      if (!lieq::is_zero(v)) d->abelian = false;
    d_ = std::move(d);
  }

  /// Abelian algebra on cyclic summands of the given orders.
  static LieAlgebra abelian(const Vec& orders, const Int& base = 0, std::string name = "") {
    return from_presentation(orders.size(), diagonal_relations(orders), base, {},
                             std::move(name));
  }

  /// Canonicalizes an arbitrary presentation: relations on n ambient
  /// generators, brackets of ambient generators given as an n*n table (entries
  /// for i<j read; empty table = abelian). Constants are transported to the
  /// invariant-factor basis. Throws ValidationError if the result violates
  /// Jacobi or torsion compatibility, or the ambient bracket is not
  /// compatible with the relations.
  static LieAlgebra from_presentation(std::size_t n, const std::vector<Vec>& relations,
                                      const Int& base, const std::vector<Vec>& brackets,
                                      std::string name, std::vector<std::string> names = {}) {
    const FpModule M = FpModule::canonicalize(n, relations, base);
    auto amb = [&](const Vec& x, const Vec& y) {
      Vec r(n, Int(0));
      if (brackets.empty()) return r;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (y[j] == 0 || i == j) continue;
          const Int s = x[i] * y[j];
          if (i < j)
            axpy(r, s, brackets[i * n + j]);
          else
            axpy(r, -s, brackets[j * n + i]);
        }
      }
      return r;
    };
    ValidationReport report;
    for (const auto& rel : M.relations())
      for (std::size_t j = 0; j < n; ++j) {
        const Vec w = amb(rel, unit_vec(n, j));
        if (!M.is_zero(w)) report.add("RelationIncompatible", {j}, w);
      }
    if (!report.ok()) throw ValidationError(report);

    const std::size_t r = M.rank();
    std::vector<Vec> lifts;
    for (std::size_t k = 0; k < r; ++k) lifts.push_back(M.generator(k));
    std::vector<Vec> table(r * r, Vec(r, Int(0)));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) table[i * r + j] = M.coordinates(amb(lifts[i], lifts[j]));
    std::vector<std::string> cnames;
    for (std::size_t k = 0; k < r; ++k) {
      std::string nm = "x" + std::to_string(k + 1);
      if (names.size() == n) {
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (lifts[k][i] != 0) ++nz, at = i;
        if (nz == 1 && (lifts[k][at] == 1 || lifts[k][at] == -1)) nm = names[at];
      }
      cnames.push_back(nm);
    }
    for (std::size_t a = 0; a < cnames.size(); ++a)
      for (std::size_t b = a + 1; b < cnames.size(); ++b)
        if (cnames[a] == cnames[b]) cnames[b] = "x" + std::to_string(b + 1);
    LieAlgebra g(M.moduli(), table, base, std::move(name), std::move(cnames));
    const ValidationReport v = g.validate();
    if (!v.ok()) throw ValidationError(v);
    return g;
  }

  std::size_t dim() const { return d_->orders.size(); }
  const Vec& orders() const { return d_->orders; }
  const Int& order(std::size_t i) const { return d_->orders[i]; }
  const Int& base_modulus() const { return d_->base; }
  const FpModule& module() const { return d_->module; }
  const std::string& name() const { return d_->name; }
  const std::vector<std::string>& names() const { return d_->names; }
  bool is_abelian() const { return d_->abelian; }

  LieAlgebra renamed(std::string name) const {
    LieAlgebra g = *this;
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    g.d_ = std::move(d);
    return g;
  }

  /// [e_i, e_j] in reduced coordinates.
  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return d_->c[i * dim() + j]; }

  Vec bracket(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    Vec r(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0 || i == j) continue;
        axpy(r, x[i] * y[j], d_->c[i * n + j]);
      }
    }
    return reduce(std::move(r));
  }

  Vec reduce(Vec x) const { return reduce_with(d_->orders, std::move(x)); }
  bool is_zero(const Vec& x) const { return lieq::is_zero(reduce(x)); }
  bool equal(const Vec& x, const Vec& y) const { return is_zero(sub(x, y)); }
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }

  /// Alternating is structural; checks torsion compatibility and Jacobi on
  /// all generator triples, modulo the relations.
  ValidationReport validate() const {
    ValidationReport rep;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || d_->orders[i] == 0) continue;
        const Vec w = scaled(bracket_basis(i, j), d_->orders[i]);
        if (!is_zero(w)) rep.add("TorsionIncompatible", {i, j}, w);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vec w = bracket(basis(i), bracket_basis(j, k));
          w = add(w, bracket(basis(j), bracket_basis(k, i)));
          w = add(w, bracket(basis(k), bracket_basis(i, j)));
          if (!is_zero(w)) rep.add("JacobiViolation", {i, j, k}, reduce(w));
        }
    return rep;
  }

  static std::vector<Vec> diagonal_relations(const Vec& orders) {
    std::vector<Vec> rels;
    for (std::size_t i = 0; i < orders.size(); ++i)
      if (orders[i] != 0) {
        Vec r(orders.size(), Int(0));
        r[i] = orders[i];
        rels.push_back(std::move(r));
      }
    return rels;
  }

 private:
  static Vec reduce_with(const Vec& orders, Vec x) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod_floor(x[k], orders[k]);
    return x;
  }

  struct Data {
    Vec orders;
    Int base = 0;
    FpModule module;
    std::string name;
    std::vector<std::string> names;
    std::vector<Vec> c;
    bool abelian = true;
  };
  std::shared_ptr<const Data> d_;
};

inline ValidationReport validate(const LieAlgebra& g) { return g.validate(); }

/// Ideal of a Lie algebra with its own basis b_1..b_p (vectors of the parent)
/// and the induced brackets expressed in that basis.
class Ideal {
 public:
  /// The ideal spanned by gens; throws NotAnIdeal unless the span is closed
  /// under brackets with the parent.
  Ideal(LieAlgebra g, const std::vector<Vec>& gens)
      : g_(std::move(g)), sub_(std::make_shared<Submodule>(g_.module(), gens)) {
    basis_ = sub_->generators();
    for (auto& b : basis_) b = g_.reduce(b);
    orders_ = sub_->invariant_factors();
    finish();
  }

  static Ideal whole(const LieAlgebra& g) {
    Ideal I(g);
    for (std::size_t i = 0; i < g.dim(); ++i) I.basis_.push_back(g.basis(i));
    I.orders_ = g.orders();
    I.whole_ = true;
    I.sub_ = std::make_shared<Submodule>(g.module(), I.basis_);
    I.finish();
    return I;
  }
  static Ideal zero(const LieAlgebra& g) { return Ideal(g, {}); }

  const LieAlgebra& parent() const { return g_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Vec& iota(std::size_t i) const { return basis_[i]; }
  const Vec& orders() const { return orders_; }
  const Submodule& submodule() const { return *sub_; }
  bool is_whole() const { return whole_ || sub_->is_whole(); }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const Vec& x) const { return sub_->contains(x); }

  /// Coordinates of x (a parent vector) in the ideal basis.
  std::optional<Vec> coordinates_of(const Vec& x) const {
    if (whole_) return g_.reduce(x);
    return sub_->solve(x);
  }
  Vec embed(const Vec& a) const {
    Vec x(g_.dim(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) axpy(x, a[i], basis_[i]);
    return g_.reduce(std::move(x));
  }
  Vec reduce(Vec a) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod_floor(a[i], orders_[i]);
    return a;
  }

  /// [b_i, b_k] in ideal coordinates.
  const Vec& bracket_coords(std::size_t i, std::size_t k) const { return brk_[i * size() + k]; }
  /// [e_j, b_i] in ideal coordinates.
  const Vec& action_coords(std::size_t j, std::size_t i) const { return act_[j * size() + i]; }

  /// The ideal as a Lie algebra in its own right.
  LieAlgebra algebra() const {
    const std::size_t p = size();
    std::vector<Vec> table(p * p, Vec(p, Int(0)));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = i + 1; k < p; ++k) table[i * p + k] = bracket_coords(i, k);
    return LieAlgebra(orders_, table, g_.base_modulus(), g_.name() + ".ideal");
  }

 private:
  explicit Ideal(LieAlgebra g) : g_(std::move(g)) {}

  void finish() {
    const std::size_t p = size(), n = g_.dim();
    brk_.assign(p * p, Vec(p, Int(0)));
    act_.assign(n * p, Vec(p, Int(0)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < p; ++i) {
        const Vec v = g_.bracket(g_.basis(j), basis_[i]);
        auto c = coordinates_of(v);
        if (!c) throw NotAnIdeal("bracket [" + g_.names()[j] + ", b" + std::to_string(i + 1) +
                                 "] = " + to_string(v) + " leaves the submodule");
        act_[j * p + i] = *c;
      }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t k = 0; k < p; ++k) {
        auto c = coordinates_of(g_.bracket(basis_[i], basis_[k]));
        brk_[i * p + k] = *c;
      }
  }

  LieAlgebra g_;
  std::shared_ptr<const Submodule> sub_;
  std::vector<Vec> basis_;
  Vec orders_;
  bool whole_ = false;
  std::vector<Vec> brk_, act_;
};

/// Module homomorphism between Lie algebras that is expected to preserve
/// brackets; validate() checks that on generator pairs.
class LieHom {
 public:
  LieHom(LieAlgebra source, LieAlgebra target, IntMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)),
        hom_(std::make_shared<ModuleHom>(source_.module(), target_.module(), std::move(matrix))) {}

  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const ModuleHom& hom() const { return *hom_; }
  Vec apply(const Vec& x) const { return target_.reduce(hom_->apply(x)); }

  ValidationReport validate() const {
    ValidationReport rep;
    const std::size_t n = source_.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec w = sub(apply(source_.bracket_basis(i, j)),
                          target_.bracket(apply(source_.basis(i)), apply(source_.basis(j))));
        if (!target_.is_zero(w)) rep.add("BracketNotPreserved", {i, j}, target_.reduce(w));
      }
    return rep;
  }

  Submodule kernel() const { return hom_->kernel(); }
  Submodule image() const { return hom_->image(); }

 private:
  LieAlgebra source_, target_;
  std::shared_ptr<const ModuleHom> hom_;
};

/// Action of g (actor) on h (acted) by derivations: ^{e_i} b_j = table[i][j].
class LieAction {
 public:
  LieAction(LieAlgebra actor, LieAlgebra acted, std::vector<Vec> table)
      : g_(std::move(actor)), h_(std::move(acted)), a_(std::move(table)) {
    for (auto& v : a_) v = h_.reduce(v);
  }

  const LieAlgebra& actor() const { return g_; }
  const LieAlgebra& acted() const { return h_; }
  const Vec& on_basis(std::size_t i, std::size_t j) const { return a_[i * h_.dim() + j]; }

  Vec act(const Vec& x, const Vec& y) const {
    Vec r(h_.dim(), Int(0));
    for (std::size_t i = 0; i < g_.dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < h_.dim(); ++j)
        if (y[j] != 0) axpy(r, x[i] * y[j], on_basis(i, j));
    }
    return h_.reduce(std::move(r));
  }

  ValidationReport validate() const {
    ValidationReport rep;
    const std::size_t n = g_.dim(), m = h_.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (g_.order(i) != 0 && !h_.is_zero(scaled(on_basis(i, j), g_.order(i))))
          rep.add("ActionTorsion", {i, j}, on_basis(i, j));
        if (h_.order(j) != 0 && !h_.is_zero(scaled(on_basis(i, j), h_.order(j))))
          rep.add("ActionTorsion", {i, j}, on_basis(i, j));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t j = 0; j < m; ++j) {
          const Vec y = h_.basis(j);
          const Vec lhs = act(g_.bracket_basis(i, k), y);
          const Vec rhs = sub(act(g_.basis(i), act(g_.basis(k), y)),
                              act(g_.basis(k), act(g_.basis(i), y)));
          if (!h_.equal(lhs, rhs)) rep.add("ActionBracket", {i, k, j}, h_.reduce(sub(lhs, rhs)));
        }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = j + 1; l < m; ++l) {
          const Vec x = g_.basis(i);
          const Vec lhs = act(x, h_.bracket_basis(j, l));
          const Vec rhs = add(h_.bracket(act(x, h_.basis(j)), h_.basis(l)),
                              h_.bracket(h_.basis(j), act(x, h_.basis(l))));
          if (!h_.equal(lhs, rhs)) rep.add("ActionDerivation", {i, j, l}, h_.reduce(sub(lhs, rhs)));
        }
    return rep;
  }

 private:
  LieAlgebra g_, h_;
  std::vector<Vec> a_;
};

struct QCrossedModule {
  LieHom mu;
  LieAction action;
  Int q;
};

/// Checks the homomorphism, the action axioms and the three q-crossed
/// conditions on generators (kernel generators for the third).
inline ValidationReport validate_q_crossed(const QCrossedModule& xm) {
  ValidationReport rep = xm.mu.validate();
  rep.merge(xm.action.validate());
  const LieAlgebra& g = xm.mu.target();
  const LieAlgebra& h = xm.mu.source();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      const Vec w = sub(xm.mu.apply(xm.action.on_basis(i, j)),
                        g.bracket(g.basis(i), xm.mu.apply(h.basis(j))));
      if (!g.is_zero(w)) rep.add("ConditionFailed(i)", {i, j}, g.reduce(w));
    }
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      const Vec w = sub(xm.action.act(xm.mu.apply(h.basis(i)), h.basis(j)), h.bracket_basis(i, j));
      if (!h.is_zero(w)) rep.add("ConditionFailed(ii)", {i, j}, h.reduce(w));
    }
  const Submodule K = xm.mu.kernel();
  for (std::size_t k = 0; k < K.size(); ++k) {
    const Vec w = scaled(K.generators()[k], xm.q);
    if (!h.is_zero(w)) rep.add("ConditionFailed(iii)", {k}, K.generators()[k]);
  }
  return rep;
}

/// Coordinate matrix of x -> ([x,e_1], ..., [x,e_n]) and, when with_q, q*x.
inline Submodule center_kernel(const LieAlgebra& g, std::optional<Int> q) {
  const std::size_t n = g.dim();
  const std::size_t blocks = n + (q ? 1 : 0);
  IntMatrix C(n, n * blocks);
  Vec moduli;
  for (std::size_t b = 0; b < blocks; ++b) moduli.insert(moduli.end(), g.orders().begin(), g.orders().end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) C(i, j * n + k) = g.bracket_basis(i, j)[k];
    if (q) C(i, n * n + i) = *q;
  }
  return coordinate_kernel(g.module(), C, moduli);
}

inline Submodule center(const LieAlgebra& g) { return center_kernel(g, std::nullopt); }
inline Submodule q_center(const LieAlgebra& g, const Int& q) { return center_kernel(g, q); }

/// h #_q g: spanned by all [b_i, e_j] and q*b_i.
inline Ideal hash_product(const LieAlgebra& g, const Ideal& h, const Int& q) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) gens.push_back(g.bracket(h.iota(i), g.basis(j)));
    gens.push_back(g.reduce(scaled(h.iota(i), q)));
  }
  return Ideal(g, gens);
}

inline Ideal derived_subalgebra(const LieAlgebra& g) { return hash_product(g, Ideal::whole(g), 0); }

inline bool is_q_perfect(const LieAlgebra& g, const Int& q) {
  return hash_product(g, Ideal::whole(g), q).is_whole();
}

struct QuotientAlgebra {
  LieAlgebra algebra;
  LieHom projection;
  FpModule presentation;  // g's module modulo the ideal, ambient = g
  /// A preimage in g of the k-th basis vector of the quotient.
  Vec lift(std::size_t k) const { return presentation.generator(k); }
};

inline QuotientAlgebra quotient_algebra(const LieAlgebra& g, const Ideal& h) {
  auto Q = quotient(g.module(), h.submodule());
  const FpModule& M = Q.module;
  const std::size_t r = M.rank();
  std::vector<Vec> lifts;
  for (std::size_t k = 0; k < r; ++k) lifts.push_back(M.generator(k));
  std::vector<Vec> table(r * r, Vec(r, Int(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      table[i * r + j] = M.coordinates(g.bracket(lifts[i], lifts[j]));
  LieAlgebra qa(M.moduli(), table, g.base_modulus(), g.name() + "/ideal");
  const ValidationReport v = qa.validate();
  if (!v.ok()) throw ValidationError(v);
  IntMatrix P(g.dim(), r);
  for (std::size_t i = 0; i < g.dim(); ++i) P.set_row(i, M.coordinates(g.basis(i)));
  LieHom proj(g, qa, P);
  return {qa, proj, M};
}

inline QuotientAlgebra quotient_algebra(const LieAlgebra& g, const Submodule& s) {
  return quotient_algebra(g, Ideal(g, s.generators()));
}

/// Der(m): module maps D (row convention x -> xD) with
/// [x,y]D = [xD,y] + [x,yD]; Lie bracket [D,D'] = D'D - DD'.
struct DerivationAlgebra {
  LieAlgebra algebra;
  std::vector<IntMatrix> basis;  // matrix of each basis derivation

  bool contains(const IntMatrix& D) const { return solve(D).has_value(); }
  std::optional<Vec> solve(const IntMatrix& D) const {
    auto e = to_endo(D);
    if (!e) return std::nullopt;
    return kernel->solve(*e);
  }

  // Internal: endomorphism module coordinates.
  std::shared_ptr<const Submodule> kernel;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  Vec step;
  Vec slot_orders;
  Vec orders;  // orders of the algebra m

  std::optional<Vec> to_endo(const IntMatrix& D) const {
    const std::size_t n = orders.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Int v = mod_floor(D(i, k), orders[k]);
        if (orders[i] != 0 && mod_floor(orders[i] * v, orders[k]) != 0) return std::nullopt;
      }
    Vec y(slots.size(), Int(0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, k] = slots[s];
      const Int v = mod_floor(D(i, k), orders[k]);
      if (!divides(step[s], v)) return std::nullopt;
      y[s] = exact_div(v, step[s]);
    }
    // entries outside slots must vanish
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        bool in = false;
        for (const auto& sl : slots) in = in || (sl.first == i && sl.second == k);
        if (!in && mod_floor(D(i, k), orders[k]) != 0) return std::nullopt;
      }
    return y;
  }
};

inline DerivationAlgebra derivations(const LieAlgebra& m) {
  const std::size_t n = m.dim();
  DerivationAlgebra out{LieAlgebra(), {}, nullptr, {}, {}, {}, m.orders()};
  // Hom(Z/d_i, Z/d_k) is cyclic: generated by e_i -> step*e_k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int &di = m.order(i), &dk = m.order(k);
      Int step, ord;
      if (dk == 0) {
        if (di != 0) continue;
        step = 1, ord = 0;
      } else {
        const Int g = gcd(di, dk);
        step = exact_div(dk, g), ord = g;
      }
      if (ord == 1) continue;
      out.slots.emplace_back(i, k);
      out.step.push_back(step);
      out.slot_orders.push_back(ord);
    }
  const std::size_t s = out.slots.size();
  auto matrix_of = [&](const Vec& y) {
    IntMatrix D(n, n);
    for (std::size_t t = 0; t < s; ++t) {
      const auto [i, k] = out.slots[t];
      D(i, k) = mod_floor(y[t] * out.step[t], m.order(k));
    }
    return D;
  };
  auto apply = [&](const Vec& x, const IntMatrix& D) { return m.reduce(x * D); };
  const FpModule E = FpModule::diagonal(out.slot_orders, m.base_modulus());
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  IntMatrix C(s, pairs * n);
  Vec moduli;
  for (std::size_t p = 0; p < pairs; ++p) moduli.insert(moduli.end(), m.orders().begin(), m.orders().end());
  for (std::size_t t = 0; t < s; ++t) {
    const IntMatrix D = matrix_of(unit_vec(s, t));
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++p) {
        Vec w = apply(m.bracket_basis(i, j), D);
        w = sub(w, m.bracket(apply(m.basis(i), D), m.basis(j)));
        w = sub(w, m.bracket(m.basis(i), apply(m.basis(j), D)));
        w = m.reduce(w);
        for (std::size_t k = 0; k < n; ++k) C(t, p * n + k) = w[k];
      }
  }
  auto K = std::make_shared<Submodule>(coordinate_kernel(E, C, moduli));
  out.kernel = K;
  const std::size_t r = K->size();
  for (std::size_t a = 0; a < r; ++a) out.basis.push_back(matrix_of(K->generators()[a]));
  std::vector<Vec> table(r * r, Vec(r, Int(0)));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      IntMatrix comm = out.basis[b] * out.basis[a];
      const IntMatrix ab = out.basis[a] * out.basis[b];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) comm(i, k) -= ab(i, k);
      auto c = out.solve(comm);
      if (!c) throw Error("derivations: commutator left the derivation module");
      table[a * r + b] = *c;
    }
  out.algebra = LieAlgebra(K->invariant_factors(), table, m.base_modulus(), "Der(" + m.name() + ")");
  return out;
}

/// Matrix of the inner derivation y -> [x, y].
inline IntMatrix inner_derivation(const LieAlgebra& m, const Vec& x) {
  IntMatrix D(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) D.set_row(i, m.bracket(x, m.basis(i)));
  return D;
}

struct InnerDerivations {
  LieAlgebra algebra;  // m / Z_q(m)
  QCrossedModule crossed;
  Submodule q_center;
  bool exact = false;  // kernel of the boundary map equals Z_q(m)
};

/// IDer(m, q) realized as m / Z_q(m), with the boundary map m -> IDer and
/// the action ^{x} m' = [lift(x), m'].
inline InnerDerivations inner_q_derivations(const LieAlgebra& m, const Int& q) {
  const Submodule Zq = q_center(m, q);
  const QuotientAlgebra Q = quotient_algebra(m, Ideal(m, Zq.generators()));
  const std::size_t r = Q.algebra.dim(), n = m.dim();
  std::vector<Vec> table(r * n);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) table[k * n + j] = m.bracket(Q.lift(k), m.basis(j));
  LieAction action(Q.algebra, m, std::move(table));
  QCrossedModule xm{Q.projection, action, q};
  const bool exact = Q.projection.kernel() == Zq;
  return {Q.algebra.renamed("IDer(" + m.name() + "," + q.get_str() + ")"), xm, Zq, exact};
}

}  // namespace lieq
