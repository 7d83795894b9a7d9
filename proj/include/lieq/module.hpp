#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/matrix.hpp"
#include "lieq/normal_form.hpp"

namespace lieq {

/// Invariant-factor chain of the diagonal module with the given cyclic
/// orders: 1s dropped, finite factors in divisibility order, zeros last.
inline Vec chain_factors(Vec moduli) {
  Vec finite, zeros;
  for (auto& m : moduli) {
    m = abs(m);
    if (m == 1) continue;
    (m == 0 ? zeros : finite).push_back(m);
  }
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      const Int g = gcd(finite[i], finite[j]);
      const Int l = exact_div(finite[i] * finite[j], g);
      finite[i] = g;
      finite[j] = l;
    }
  Vec out;
  for (auto& f : finite)
    if (f != 1) out.push_back(f);
  out.insert(out.end(), zeros.begin(), zeros.end());
  return out;
}

/// Human-readable decomposition, e.g. "Z/2 + Z/4 + Z"; "0" for the zero module.
inline std::string describe_factors(const Vec& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " + ";
    s += f == 0 ? std::string("Z") : "Z/" + f.get_str();
  }
  return s;
}

/// A finitely presented abelian group: Z^n modulo a relation lattice, with an
/// optional base modulus m >= 2 meaning the module is over Z/m (realized by
/// the relations m*e_i). Canonical coordinates come from a unimodular basis
/// change; coordinate k is taken modulo its modulus (0 = free).
class FpModule {
 public:
  FpModule() : FpModule(canonicalize(0, {}, 0)) {}

  static FpModule canonicalize(std::size_t ambient_rank, const std::vector<Vec>& relations,
                               const Int& base_modulus = 0) {
    auto d = std::make_shared<Data>();
    d->n = ambient_rank;
    d->base = base_modulus;
    std::vector<Vec> rows = relations;
    if (base_modulus >= 2)
      for (std::size_t i = 0; i < ambient_rank; ++i) {
        Vec r(ambient_rank, Int(0));
        r[i] = base_modulus;
        rows.push_back(std::move(r));
      }
    HermiteForm h = hermite_form(rows, ambient_rank);
    const ColumnSmithForm s = smith_columns(IntMatrix::from_rows(h.rows, ambient_rank));
    d->relations = std::move(h.rows);
    for (std::size_t k = 0; k < ambient_rank; ++k) {
      if (s.diagonal[k] == 1) continue;
      d->sig.push_back(k);
      d->moduli.push_back(s.diagonal[k]);
    }
    d->factors = d->moduli;
    d->identity = s.V == IntMatrix::identity(ambient_rank);
    d->V = s.V;
    d->Vinv = s.Vinv;
    return FpModule(std::move(d));
  }

  /// Direct sum of cyclic modules, one per ambient generator, in the given
  /// (not necessarily divisibility-ordered) orders.
  static FpModule diagonal(const Vec& orders, const Int& base_modulus = 0) {
    auto d = std::make_shared<Data>();
    d->n = orders.size();
    d->base = base_modulus;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const Int o = abs(orders[k]);
      if (base_modulus >= 2 && (o == 0 || !divides(o, base_modulus)))
        throw std::invalid_argument("FpModule::diagonal: order " + o.get_str() +
                                    " incompatible with base modulus " +
                                    base_modulus.get_str());
      if (o != 0) {
        Vec r(orders.size(), Int(0));
        r[k] = o;
        d->relations.push_back(std::move(r));
      }
      if (o == 1) continue;
      d->sig.push_back(k);
      d->moduli.push_back(o);
    }
    d->factors = chain_factors(d->moduli);
    d->identity = true;
    d->V = IntMatrix::identity(orders.size());
    d->Vinv = d->V;
    return FpModule(std::move(d));
  }

  std::size_t ambient_rank() const { return d_->n; }
  const Int& base_modulus() const { return d_->base; }
  const std::vector<Vec>& relations() const { return d_->relations; }
  const Vec& invariant_factors() const { return d_->factors; }
  /// Number of canonical coordinates (cyclic summands in the chosen basis).
  std::size_t rank() const { return d_->moduli.size(); }
  const Vec& moduli() const { return d_->moduli; }
  const IntMatrix& basis_change() const { return d_->V; }
  const IntMatrix& basis_change_inverse() const { return d_->Vinv; }

  bool is_trivial() const { return d_->moduli.empty(); }
  bool is_finite() const {
    for (const auto& m : d_->moduli)
      if (m == 0) return false;
    return true;
  }
  /// Group order; nullopt when infinite.
  std::optional<Int> order() const {
    Int o = 1;
    for (const auto& m : d_->moduli) {
      if (m == 0) return std::nullopt;
      o *= m;
    }
    return o;
  }

  Vec coordinates(const Vec& x) const {
    if (x.size() != d_->n) throw std::invalid_argument("FpModule::coordinates: wrong length");
    Vec c(d_->sig.size());
    if (d_->identity) {
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod_floor(x[d_->sig[k]], d_->moduli[k]);
      return c;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::size_t col = d_->sig[k];
      Int acc = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && d_->V(i, col) != 0) acc += x[i] * d_->V(i, col);
      c[k] = mod_floor(acc, d_->moduli[k]);
    }
    return c;
  }

  Vec lift(const Vec& c) const {
    Vec x(d_->n, Int(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (d_->identity) {
        x[d_->sig[k]] += c[k];
      } else {
        const std::size_t row = d_->sig[k];
        for (std::size_t i = 0; i < d_->n; ++i)
          if (d_->Vinv(row, i) != 0) x[i] += c[k] * d_->Vinv(row, i);
      }
    }
    return x;
  }

  /// Ambient vector of canonical generator k.
  Vec generator(std::size_t k) const { return lift(unit_vec(rank(), k)); }

  bool is_zero(const Vec& x) const { return lieq::is_zero(coordinates(x)); }
  bool equal(const Vec& x, const Vec& y) const { return is_zero(sub(x, y)); }

  /// Coordinates of a vector already expressed in canonical coordinates,
  /// reduced into the standard residue range.
  Vec reduce_coordinates(Vec c) const {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod_floor(c[k], d_->moduli[k]);
    return c;
  }

  std::string describe() const { return describe_factors(invariant_factors()); }

 private:
  struct Data {
    std::size_t n = 0;
    Int base = 0;
    std::vector<Vec> relations;
    IntMatrix V, Vinv;
    bool identity = true;
    std::vector<std::size_t> sig;
    Vec moduli;
    Vec factors;
  };
  explicit FpModule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class Submodule;

/// Homomorphism of finitely presented modules given on ambient generators:
/// x maps to x * matrix. Construction rejects matrices that do not send the
/// source relation lattice into the target lattice.
class ModuleHom {
 public:
  ModuleHom(FpModule source, FpModule target, IntMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != source_.ambient_rank() || matrix_.cols() != target_.ambient_rank())
      throw std::invalid_argument("ModuleHom: matrix shape does not match modules");
    for (const auto& r : source_.relations())
      if (!target_.is_zero(r * matrix_)) throw NotWellDefined("ModuleHom", r);
  }

  const FpModule& source() const { return source_; }
  const FpModule& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  Vec apply(const Vec& x) const { return x * matrix_; }

  /// Matrix from source canonical coordinates to target canonical coordinates.
  IntMatrix coordinate_matrix() const {
    IntMatrix C(source_.rank(), target_.rank());
    for (std::size_t k = 0; k < source_.rank(); ++k)
      C.set_row(k, target_.coordinates(apply(source_.generator(k))));
    return C;
  }

  ModuleHom then(const ModuleHom& next) const {
    return ModuleHom(source_, next.target_, matrix_ * next.matrix_);
  }

  inline Submodule kernel() const;
  inline Submodule image() const;
  inline bool is_injective() const;
  inline bool is_surjective() const;

 private:
  FpModule source_, target_;
  IntMatrix matrix_;
};

/// Submodule of a finitely presented module, stored through a canonical
/// generating set (ambient coordinates of the parent) whose orders form the
/// invariant-factor chain of the submodule.
class Submodule {
 public:
  Submodule(FpModule parent, const std::vector<Vec>& generators) : parent_(std::move(parent)) {
    const std::size_t t = parent_.rank();
    const std::size_t g = generators.size();
    IntMatrix C(g, t);
    for (std::size_t i = 0; i < g; ++i) C.set_row(i, parent_.coordinates(generators[i]));
    const auto K = solution_lattice(C, parent_.moduli());
    const FpModule abstract = FpModule::canonicalize(g, K);
    for (std::size_t k = 0; k < abstract.rank(); ++k) {
      const Vec y = abstract.generator(k);
      Vec coords(t, Int(0));
      for (std::size_t i = 0; i < g; ++i)
        if (y[i] != 0)
          for (std::size_t j = 0; j < t; ++j) coords[j] += y[i] * C(i, j);
      coords = parent_.reduce_coordinates(std::move(coords));
      gen_coords_.push_back(coords);
      gens_.push_back(parent_.lift(coords));
    }
    factors_ = abstract.invariant_factors();
    std::vector<Vec> rows = gen_coords_;
    for (std::size_t j = 0; j < t; ++j)
      if (parent_.moduli()[j] != 0) {
        Vec r(t, Int(0));
        r[j] = parent_.moduli()[j];
        rows.push_back(std::move(r));
      }
    solver_ = std::make_shared<HermiteForm>(hermite_form(rows, t, true));
  }

  static Submodule zero(const FpModule& parent) { return Submodule(parent, {}); }
  static Submodule whole(const FpModule& parent) {
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < parent.rank(); ++k) gens.push_back(parent.generator(k));
    return Submodule(parent, gens);
  }

  const FpModule& parent() const { return parent_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const std::vector<Vec>& generator_coordinates() const { return gen_coords_; }
  const Vec& invariant_factors() const { return factors_; }
  std::size_t size() const { return gens_.size(); }
  const Int& order_of(std::size_t k) const { return factors_[k]; }
  FpModule module() const { return FpModule::diagonal(factors_, parent_.base_modulus()); }

  bool is_zero() const { return gens_.empty(); }
  bool contains(const Vec& x) const {
    return lattice_contains(*solver_, parent_.coordinates(x));
  }
  /// Coefficients of x on generators(), reduced modulo the generator orders.
  std::optional<Vec> solve(const Vec& x) const {
    auto sol = lattice_solve(*solver_, parent_.coordinates(x));
    if (!sol) return std::nullopt;
    Vec c(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(gens_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod_floor(c[k], factors_[k]);
    return c;
  }

  bool subset_of(const Submodule& other) const {
    for (const auto& g : gens_)
      if (!other.contains(g)) return false;
    return true;
  }
  bool operator==(const Submodule& other) const {
    return subset_of(other) && other.subset_of(*this);
  }
  bool is_whole() const {
    for (std::size_t k = 0; k < parent_.rank(); ++k)
      if (!contains(parent_.generator(k))) return false;
    return true;
  }

  ModuleHom embedding() const {
    return ModuleHom(module(), parent_, IntMatrix::from_rows(gens_, parent_.ambient_rank()));
  }

  std::string describe() const { return describe_factors(factors_); }

 private:
  FpModule parent_;
  std::vector<Vec> gens_;
  std::vector<Vec> gen_coords_;
  Vec factors_;
  std::shared_ptr<const HermiteForm> solver_;
};

inline Submodule ModuleHom::kernel() const {
  const auto K = solution_lattice(coordinate_matrix(), target_.moduli());
  std::vector<Vec> gens;
  gens.reserve(K.size());
  for (const auto& k : K) gens.push_back(source_.lift(k));
  return Submodule(source_, gens);
}

inline Submodule ModuleHom::image() const {
  std::vector<Vec> gens;
  for (std::size_t k = 0; k < source_.rank(); ++k) gens.push_back(apply(source_.generator(k)));
  return Submodule(target_, gens);
}

inline bool ModuleHom::is_injective() const { return kernel().is_zero(); }
inline bool ModuleHom::is_surjective() const { return image().is_whole(); }

inline Submodule submodule(const FpModule& m, const std::vector<Vec>& gens) {
  return Submodule(m, gens);
}

inline Submodule kernel(const ModuleHom& h) { return h.kernel(); }

/// Kernel of a map given in canonical coordinates of its source, with target
/// coordinates taken modulo target_moduli.
inline Submodule coordinate_kernel(const FpModule& source, const IntMatrix& C,
                                   const Vec& target_moduli) {
  const auto K = solution_lattice(C, target_moduli);
  std::vector<Vec> gens;
  for (const auto& k : K) gens.push_back(source.lift(k));
  return Submodule(source, gens);
}

struct Quotient {
  FpModule module;
  ModuleHom projection;
};

inline Quotient quotient(const FpModule& m, const Submodule& s) {
  std::vector<Vec> rels = m.relations();
  rels.insert(rels.end(), s.generators().begin(), s.generators().end());
  FpModule q = FpModule::canonicalize(m.ambient_rank(), rels, m.base_modulus());
  ModuleHom p(m, q, IntMatrix::identity(m.ambient_rank()));
  return {std::move(q), std::move(p)};
}

inline Submodule intersection(const Submodule& a, const Submodule& b) {
  const FpModule& m = a.parent();
  const std::size_t t = m.rank(), p = a.size(), r = b.size();
  IntMatrix C(p + r, t);
  for (std::size_t i = 0; i < p; ++i) C.set_row(i, a.generator_coordinates()[i]);
  for (std::size_t i = 0; i < r; ++i) C.set_row(p + i, scaled(b.generator_coordinates()[i], -1));
  const auto K = solution_lattice(C, m.moduli());
  std::vector<Vec> gens;
  for (const auto& k : K) {
    Vec x(m.ambient_rank(), Int(0));
    for (std::size_t i = 0; i < p; ++i) axpy(x, k[i], a.generators()[i]);
    gens.push_back(std::move(x));
  }
  return Submodule(m, gens);
}

inline Submodule sum(const Submodule& a, const Submodule& b) {
  std::vector<Vec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.parent(), gens);
}

/// True iff M is free over Z/k: M ~ (Z/k)^r for k >= 2, free abelian for
/// k == 0, and zero for k == 1.
inline bool is_free_over(const FpModule& m, const Int& k) {
  if (k == 1) return m.is_trivial();
  for (const auto& f : m.invariant_factors())
    if (f != k) return false;
  return true;
}

/// Classical abelian tensor or exterior square with its generator labels.
struct AbelianSquare {
  FpModule module;
  std::vector<std::pair<std::size_t, std::size_t>> labels;
};

inline AbelianSquare tensor_square_ab(const FpModule& m) {
  const Vec& d = m.invariant_factors();
  Vec orders;
  AbelianSquare out{FpModule{}, {}};
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      orders.push_back(gcd(d[i], d[j]));
      out.labels.emplace_back(i, j);
    }
  out.module = FpModule::diagonal(orders);
  return out;
}

inline AbelianSquare exterior_square_ab(const FpModule& m) {
  const Vec& d = m.invariant_factors();
  Vec orders;
  AbelianSquare out{FpModule{}, {}};
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      orders.push_back(gcd(d[i], d[j]));
      out.labels.emplace_back(i, j);
    }
  out.module = FpModule::diagonal(orders);
  return out;
}

/// Invariant factors of a direct sum.
inline Vec direct_sum_factors(const Vec& a, const Vec& b) {
  Vec all = a;
  all.insert(all.end(), b.begin(), b.end());
  return chain_factors(all);
}

}  // namespace lieq
