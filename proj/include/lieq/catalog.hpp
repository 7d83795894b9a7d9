#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieq/liealg.hpp"

namespace lieq::catalog {

inline std::string ring_label(const Int& base) { return base == 0 ? "Z" : "Z/" + base.get_str(); }

namespace detail {

// Brackets as (i, j, vector) triples with i < j.
inline std::vector<Vec> table(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& b) {
  std::vector<Vec> t(n * n, Vec(n, Int(0)));
  for (const auto& [i, j, v] : b) t[i * n + j] = v;
  return t;
}

}  // namespace detail

inline LieAlgebra abelian(const Vec& orders, const Int& base = 0, std::string name = "") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < orders.size(); ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra::from_presentation(orders.size(), LieAlgebra::diagonal_relations(orders), base, {},
                                       std::move(name), names);
}

/// [x, y] = z.
inline LieAlgebra heisenberg(const Int& base = 0, std::string name = "") {
  if (name.empty()) name = base == 0 ? "heisenberg" : "heisenberg(" + ring_label(base) + ")";
  return LieAlgebra::from_presentation(3, {}, base, detail::table(3, {{0, 1, {0, 0, 1}}}), name,
                                       {"x", "y", "z"});
}

/// Strictly upper triangular 3x3 matrices (isomorphic to the Heisenberg algebra).
inline LieAlgebra n3(const Int& base = 0) {
  return LieAlgebra::from_presentation(3, {}, base, detail::table(3, {{0, 1, {0, 1, 0}}}),
                                       "n3(" + ring_label(base) + ")", {"e12", "e13", "e23"});
}

/// Strictly upper triangular 4x4 matrices, basis e12 e13 e14 e23 e24 e34.
inline LieAlgebra n4(const Int& base = 0) {
  const auto t = detail::table(6, {{0, 3, {0, 1, 0, 0, 0, 0}},
                                   {0, 4, {0, 0, 1, 0, 0, 0}},
                                   {1, 5, {0, 0, 1, 0, 0, 0}},
                                   {3, 5, {0, 0, 0, 0, 1, 0}}});
  return LieAlgebra::from_presentation(6, {}, base, t, base == 0 ? "n4" : "n4(" + ring_label(base) + ")",
                                       {"e12", "e13", "e14", "e23", "e24", "e34"});
}

/// [h, e] = 2e, [h, f] = -2f, [e, f] = h.
inline LieAlgebra sl2(const Int& base) {
  const auto t = detail::table(3, {{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}});
  return LieAlgebra::from_presentation(3, {}, base, t, "sl2(" + ring_label(base) + ")", {"h", "e", "f"});
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
  if (a.base_modulus() != b.base_modulus()) throw std::invalid_argument("direct_sum: base rings differ");
  const std::size_t n = a.dim(), m = b.dim(), N = n + m;
  Vec orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<Vec> t(N * N, Vec(N, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[i * N + j][k] = a.bracket_basis(i, j)[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) t[(n + i) * N + n + j][n + k] = b.bracket_basis(i, j)[k];
  std::vector<std::string> names = a.names();
  for (const auto& s : b.names()) {
    std::string nm = s;
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "_2";
    names.push_back(nm);
  }
  return LieAlgebra::from_presentation(N, LieAlgebra::diagonal_relations(orders), a.base_modulus(), t,
                                       std::move(name), names);
}

struct Entry {
  std::string name;
  std::string description;
  std::function<LieAlgebra()> make;
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"zero", "the zero algebra", [] { return abelian({}, 0, "zero"); }},
      {"Z", "abelian Z", [] { return abelian({0}, 0, "Z"); }},
      {"Z^2", "abelian Z + Z", [] { return abelian({0, 0}, 0, "Z^2"); }},
      {"Z/2", "abelian Z/2", [] { return abelian({2}, 0, "Z/2"); }},
      {"Z/6", "abelian Z/6", [] { return abelian({6}, 0, "Z/6"); }},
      {"(Z/2)^2", "abelian Z/2 + Z/2", [] { return abelian({2, 2}, 0, "(Z/2)^2"); }},
      {"(Z/3)^2", "abelian Z/3 + Z/3", [] { return abelian({3, 3}, 0, "(Z/3)^2"); }},
      {"(Z/4)^2", "abelian Z/4 + Z/4", [] { return abelian({4, 4}, 0, "(Z/4)^2"); }},
      {"Z+Z/2", "abelian Z + Z/2", [] { return abelian({0, 2}, 0, "Z+Z/2"); }},
      {"Z/2+Z/4", "abelian Z/2 + Z/4", [] { return abelian({2, 4}, 0, "Z/2+Z/4"); }},
      {"heisenberg", "Heisenberg algebra over Z", [] { return heisenberg(0); }},
      {"heisenberg(Z/2)", "Heisenberg algebra over Z/2", [] { return heisenberg(2); }},
      {"n3(Z/3)", "strictly upper triangular 3x3 over Z/3", [] { return n3(3); }},
      {"n4", "strictly upper triangular 4x4 over Z", [] { return n4(0); }},
      {"sl2(Z/5)", "sl2 over Z/5", [] { return sl2(5); }},
      {"sl2(Z/7)", "sl2 over Z/7", [] { return sl2(7); }},
      {"heisenberg+Z", "Heisenberg algebra plus an abelian Z",
       [] { return direct_sum(heisenberg(0), abelian({0}), "heisenberg+Z"); }},
  };
  return all;
}

inline std::optional<LieAlgebra> find(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e.make();
  return std::nullopt;
}

inline std::vector<LieAlgebra> all() {
  std::vector<LieAlgebra> out;
  for (const auto& e : entries()) out.push_back(e.make());
  return out;
}

}  // namespace lieq::catalog
