#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieq/liealg.hpp"
#include "lieq/module.hpp"
#include "lieq/qtensor.hpp"

namespace lieq {

/// Kernel of x -> (x (x) e_1, ..., x (x) e_n[, {x}]) computed in the square P.
inline Submodule product_center(const QProduct& P, bool with_brace) {
  const LieAlgebra& g = P.g();
  const std::size_t n = g.dim(), r = P.module().rank();
  const bool brace = with_brace && P.has_braces();
  const std::size_t blocks = n + (brace ? 1 : 0);
  IntMatrix C(n, r * blocks);
  Vec moduli;
  for (std::size_t b = 0; b < blocks; ++b)
    moduli.insert(moduli.end(), P.module().moduli().begin(), P.module().moduli().end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = P.coordinates(P.symbol(P.pure(i, j)));
      for (std::size_t k = 0; k < r; ++k) C(i, j * r + k) = c[k];
    }
    if (brace) {
      const Vec c = P.coordinates(P.symbol(P.brace(i)));
      for (std::size_t k = 0; k < r; ++k) C(i, n * r + k) = c[k];
    }
  }
  return coordinate_kernel(g.module(), C, moduli);
}

inline Submodule exterior_center(const QProduct& E) { return product_center(E, true); }
inline Submodule tensor_center(const QProduct& T) { return product_center(T, true); }
inline Submodule exterior_center(const LieAlgebra& g, const Int& q) {
  return product_center(q_exterior_square(g, q), true);
}
inline Submodule tensor_center(const LieAlgebra& g, const Int& q) {
  return product_center(q_tensor_square(g, q), true);
}

struct EllisCenters {
  Submodule tensor;    // Z^box_q
  Submodule exterior;  // Z^curly_q
};

inline EllisCenters ellis_centers(const LieAlgebra& g, const Int& q) {
  return {product_center(q_tensor_square(g, q), false), product_center(q_exterior_square(g, q), false)};
}

/// Z is q-torsion-free for every q; Z/m exactly when gcd(q, m) = 1.
inline bool lambda_q_torsion_free(const Int& base, const Int& q) {
  return base == 0 || gcd(q, base) == 1;
}

/// The capability criteria are proved through free presentations that need
/// a q-torsion-free ring for q >= 1.
inline bool theorem_backed(const Int& base, const Int& q) {
  return q == 0 || lambda_q_torsion_free(base, q);
}

struct CapabilityVerdict {
  bool value = false;
  bool theorem_backed = false;
};

inline CapabilityVerdict is_q_capable(const LieAlgebra& g, const Int& q) {
  return {exterior_center(g, q).is_zero(), theorem_backed(g.base_modulus(), q)};
}

inline CapabilityVerdict is_strongly_q_capable(const LieAlgebra& g, const Int& q) {
  return {product_center(q_exterior_square(g, q), false).is_zero(), theorem_backed(g.base_modulus(), q)};
}

struct InclusionCheck {
  std::string name;
  bool holds = false;
};

/// The six centers of one algebra at one q, with verdicts and flags.
struct CenterReport {
  std::string algebra;
  Int base;
  Int q;
  std::vector<std::pair<std::string, Submodule>> centers;
  bool q_capable = false;
  bool strongly_q_capable = false;
  bool lambda_q_torsion_free = false;
  bool theorem_backed = false;
  std::vector<InclusionCheck> inclusions;

  const Submodule& get(const std::string& name) const {
    for (const auto& [k, v] : centers)
      if (k == name) return v;
    throw std::out_of_range("CenterReport: no center " + name);
  }
  bool inclusions_hold() const {
    for (const auto& c : inclusions)
      if (!c.holds) return false;
    return true;
  }
};

inline CenterReport center_report(const LieAlgebra& g, const Int& q) {
  CenterReport r;
  r.algebra = g.name();
  r.base = g.base_modulus();
  r.q = q;
  const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);
  r.centers.emplace_back("center", center(g));
  r.centers.emplace_back("q_center", q_center(g, q));
  r.centers.emplace_back("tensor_center", product_center(T, true));
  r.centers.emplace_back("exterior_center", product_center(E, true));
  r.centers.emplace_back("ellis_tensor_center", product_center(T, false));
  r.centers.emplace_back("ellis_exterior_center", product_center(E, false));
  r.q_capable = r.get("exterior_center").is_zero();
  r.strongly_q_capable = r.get("ellis_exterior_center").is_zero();
  r.lambda_q_torsion_free = lambda_q_torsion_free(r.base, q);
  r.theorem_backed = theorem_backed(r.base, q);
  const std::pair<const char*, const char*> chain[] = {
      {"tensor_center", "exterior_center"},
      {"exterior_center", "q_center"},
      {"q_center", "center"},
      {"tensor_center", "ellis_tensor_center"},
      {"exterior_center", "ellis_exterior_center"},
      {"ellis_tensor_center", "ellis_exterior_center"},
      {"ellis_exterior_center", "center"},
  };
  for (const auto& [a, b] : chain)
    r.inclusions.push_back({std::string(a) + " <= " + b, r.get(a).subset_of(r.get(b))});
  return r;
}

struct CoincidenceVerdict {
  bool free = false;        // g/g#_q g is free over Lambda_q
  bool hypothesis = false;  // free and q >= 1
  Submodule tensor_center, exterior_center;
  bool equal = false;
  /// Fails only when the hypothesis holds and the centers differ.
  bool ok() const { return !hypothesis || equal; }
};

/// Z^(x)_q(g) = Z^^_q(g) whenever g/g#_q g is free over Lambda_q and q >= 1.
/// The argument runs through the brace {g}, so q = 0 is excluded: g = Z has
/// Z (x) Z = Z but Z ^ Z = 0, and the two centers are 0 and Z.
inline CoincidenceVerdict coincidence_check(const LieAlgebra& g, const Int& q) {
  const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);
  const Ideal hash = hash_product(g, Ideal::whole(g), q);
  const FpModule Q = quotient(g.module(), hash.submodule()).module;
  const bool free = is_free_over(Q, lambda_q_modulus(g.base_modulus(), q));
  CoincidenceVerdict v{free, free && q >= 1, product_center(T, true), product_center(E, true), false};
  v.equal = v.tensor_center == v.exterior_center;
  return v;
}

}  // namespace lieq
