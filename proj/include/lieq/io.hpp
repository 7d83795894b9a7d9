#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lieq/errors.hpp"
#include "lieq/liealg.hpp"

namespace lieq {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline Int parse_int(const std::string& s, std::size_t line) {
  if (s.empty()) throw SyntaxError(line, "expected an integer");
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])) && !(k == 0 && s[k] == '-'))
      throw SyntaxError(line, "not an integer: '" + s + "'");
  return Int(s);
}

// Integer linear combination of generator names, e.g. "2*e3 - e1 + 0".
inline Vec parse_combination(const std::string& text, const std::map<std::string, std::size_t>& index,
                             std::size_t line) {
  Vec v(index.size(), Int(0));
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw SyntaxError(line, "empty right-hand side");
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw SyntaxError(line, "expected '+' or '-' in '" + text + "'");
    }
    first = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Int coef = 1;
    const bool has_num = pos > start;
    if (has_num) coef = Int(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') {
      if (!has_num) throw SyntaxError(line, "dangling '*' in '" + text + "'");
      ++pos;
    }
    start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    const std::string name = s.substr(start, pos - start);
    if (name.empty()) {
      if (!has_num) throw SyntaxError(line, "malformed term in '" + text + "'");
      if (coef != 0) throw SyntaxError(line, "constant term in '" + text + "'");
      continue;
    }
    auto it = index.find(name);
    if (it == index.end()) throw SyntaxError(line, "unknown generator '" + name + "'");
    v[it->second] += sign * coef;
  }
  return v;
}

}  // namespace detail

/// Parses the line-oriented algebra format:
///   ring: Z | Z/<m>
///   generators: <name>+
///   orders: <d>+                       (optional, 0 = free)
///   bracket: [<gi>,<gj>] = <combination>
/// plus an optional "name: <label>". '#' starts a comment.
inline LieAlgebra parse_algebra(const std::string& text, const std::string& default_name = "algebra") {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  Int base = 0;
  bool have_ring = false, have_gens = false, have_orders = false;
  std::string name = default_name;
  std::vector<std::string> gens;
  std::map<std::string, std::size_t> index;
  Vec orders;
  std::map<std::pair<std::size_t, std::size_t>, Vec> brackets;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw SyntaxError(line, "expected '<key>: <value>'");
    const std::string key = detail::trim(s.substr(0, colon));
    const std::string val = detail::trim(s.substr(colon + 1));
    if (key == "name") {
      name = val;
    } else if (key == "ring") {
      if (have_ring) throw SyntaxError(line, "ring given twice");
      have_ring = true;
      if (val == "Z") {
        base = 0;
      } else if (val.rfind("Z/", 0) == 0) {
        base = detail::parse_int(detail::trim(val.substr(2)), line);
        if (base < 2) throw SyntaxError(line, "ring modulus must be at least 2");
      } else {
        throw SyntaxError(line, "ring must be Z or Z/<m>");
      }
    } else if (key == "generators") {
      if (have_gens) throw SyntaxError(line, "generators given twice");
      have_gens = true;
      std::istringstream ws(val);
      std::string g;
      while (ws >> g) {
        if (!detail::is_identifier(g)) throw SyntaxError(line, "bad generator name '" + g + "'");
        if (index.count(g)) throw SyntaxError(line, "generator '" + g + "' repeated");
        index[g] = gens.size();
        gens.push_back(g);
      }
    } else if (key == "orders") {
      if (!have_gens) throw SyntaxError(line, "orders before generators");
      if (have_orders) throw SyntaxError(line, "orders given twice");
      have_orders = true;
      std::istringstream ws(val);
      std::string d;
      while (ws >> d) {
        Int o = detail::parse_int(d, line);
        if (o < 0) throw SyntaxError(line, "orders must be non-negative");
        orders.push_back(o);
      }
      if (orders.size() != gens.size()) throw SyntaxError(line, "one order per generator expected");
    } else if (key == "bracket") {
      if (!have_gens) throw SyntaxError(line, "bracket before generators");
      const auto lb = val.find('['), rb = val.find(']'), eq = val.find('=');
      if (lb != 0 || rb == std::string::npos || eq == std::string::npos || eq < rb)
        throw SyntaxError(line, "expected '[a,b] = combination'");
      const std::string inside = val.substr(1, rb - 1);
      const auto comma = inside.find(',');
      if (comma == std::string::npos) throw SyntaxError(line, "expected '[a,b]'");
      if (!detail::trim(val.substr(rb + 1, eq - rb - 1)).empty())
        throw SyntaxError(line, "unexpected text before '='");
      const std::string a = detail::trim(inside.substr(0, comma));
      const std::string b = detail::trim(inside.substr(comma + 1));
      if (!index.count(a)) throw SyntaxError(line, "unknown generator '" + a + "'");
      if (!index.count(b)) throw SyntaxError(line, "unknown generator '" + b + "'");
      std::size_t i = index[a], j = index[b];
      if (i == j) throw SyntaxError(line, "diagonal bracket [" + a + "," + a + "] is zero by definition");
      Vec v = detail::parse_combination(val.substr(eq + 1), index, line);
      if (i > j) {
        std::swap(i, j);
        v = scaled(v, -1);
      }
      if (brackets.count({i, j})) throw DuplicateBracket(line, i, j);
      brackets[{i, j}] = std::move(v);
    } else {
      throw SyntaxError(line, "unknown key '" + key + "'");
    }
  }
  if (!have_gens) throw SyntaxError(line, "missing 'generators:' line");
  const std::size_t n = gens.size();
  if (!have_orders) orders.assign(n, Int(0));
  std::vector<Vec> table;
  if (!brackets.empty()) {
    table.assign(n * n, Vec(n, Int(0)));
    for (auto& [ij, v] : brackets) table[ij.first * n + ij.second] = v;
  }
  return LieAlgebra::from_presentation(n, LieAlgebra::diagonal_relations(orders), base, table, name,
                                       gens);
}

inline LieAlgebra load_algebra(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string stem = path;
  if (auto sl = stem.find_last_of('/'); sl != std::string::npos) stem = stem.substr(sl + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_algebra(ss.str(), stem);
}

inline std::string format_combination(const Vec& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Int c = v[k];
    if (s.empty()) {
      if (c < 0) s += "-", c = -c;
    } else {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    if (c != 1) s += c.get_str() + "*";
    s += names[k];
  }
  return s.empty() ? "0" : s;
}

/// Text form of g in its canonical basis; parse_algebra(serialize(g))
/// reproduces the orders and structure constants.
inline std::string serialize(const LieAlgebra& g) {
  std::vector<std::string> names = g.names();
  bool ok = names.size() == g.dim();
  for (std::size_t i = 0; ok && i < names.size(); ++i) {
    ok = detail::is_identifier(names[i]);
    for (std::size_t j = 0; ok && j < i; ++j) ok = names[i] != names[j];
  }
  if (!ok) {
    names.clear();
    for (std::size_t i = 0; i < g.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  }
  std::ostringstream os;
  os << "name: " << g.name() << "\n";
  os << "ring: " << (g.base_modulus() == 0 ? std::string("Z") : "Z/" + g.base_modulus().get_str()) << "\n";
  os << "generators:";
  for (const auto& nm : names) os << ' ' << nm;
  os << "\n";
  bool trivial_orders = true;
  for (const auto& d : g.orders()) trivial_orders = trivial_orders && d == g.base_modulus();
  if (!trivial_orders) {
    os << "orders:";
    for (const auto& d : g.orders()) os << ' ' << d.get_str();
    os << "\n";
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!is_zero(g.bracket_basis(i, j)))
        os << "bracket: [" << names[i] << "," << names[j]
           << "] = " << format_combination(g.bracket_basis(i, j), names) << "\n";
  return os.str();
}

}  // namespace lieq
