#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lieq/capability.hpp"
#include "lieq/errors.hpp"
#include "lieq/liealg.hpp"
#include "lieq/qtensor.hpp"
#include "lieq/testkit.hpp"

namespace lieq {

/// One checked statement on one (algebra, q) instance. Failures are data.
struct Verdict {
  std::string theorem;
  std::string instance;
  bool pass = false;
  std::string witness;
};

inline std::vector<Int> default_q_sweep() { return {0, 1, 2, 3, 4, 6}; }

struct VerifyOptions {
  std::vector<Int> qs = default_q_sweep();
  bool oracle = false;      // also compare against brute-force enumeration
  std::size_t threads = 0;  // 0: LIEQ_THREADS, else hardware concurrency
};

inline std::size_t thread_cap(std::size_t requested) {
  std::size_t t = requested;
  if (t == 0) {
    if (const char* env = std::getenv("LIEQ_THREADS")) t = std::strtoul(env, nullptr, 10);
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  }
  return t;
}

namespace detail {

inline std::string factors_text(const Vec& v) { return to_string(v); }

// Finite algebras small enough for the brute-force products.
inline bool oracle_sized(const LieAlgebra& g, const Int& q) {
  Int order = 1;
  for (const auto& d : g.orders()) {
    if (d == 0) return false;
    order *= d;
  }
  Int amb = 1;
  for (const auto& a : g.orders())
    for (const auto& b : g.orders()) amb *= gcd(a, b);
  if (q != 0) amb *= order;
  return order <= Int(testkit::kMaxOrder) && amb <= Int(testkit::kMaxOrder);
}

}  // namespace detail

/// All checks that apply to g at q, in a fixed order.
inline std::vector<Verdict> verify_instance(const LieAlgebra& g, const Int& q, bool oracle = false) {
  const std::string inst = g.name() + " q=" + q.get_str();
  std::vector<Verdict> out;
  auto add = [&](std::string theorem, bool pass, std::string witness = "") {
    out.push_back({std::move(theorem), inst, pass, std::move(witness)});
  };

  const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);

  if (g.is_abelian()) {
    const AbelianDecomposition d = abelian_decomposition_check(g, q);
    add("abelian decomposition", d.ok(),
        d.ok() ? "" : "tensor " + detail::factors_text(d.tensor_actual) + " vs " +
                          detail::factors_text(d.tensor_expected) + ", exterior " +
                          detail::factors_text(d.exterior_actual) + " vs " +
                          detail::factors_text(d.exterior_expected));
  }

  if (q != 0)
    for (const QProduct* P : {&T, &E}) {
      const auto w = check_brace_identity(*P);
      add(std::string("brace identity (") + to_string(P->kind()) + ")", !w, w ? "symbol " + to_string(*w) : "");
    }

  const Ideal hash = hash_product(g, Ideal::whole(g), q);
  for (const QProduct* P : {&T, &E}) {
    const ValidationReport rep = validate_q_crossed(product_action(*P));
    const bool img = xi(*P).image() == hash.submodule();
    add(std::string("q-crossed module (") + to_string(P->kind()) + ")", rep.ok() && img,
        rep.ok() ? (img ? "" : "image of xi differs from g#_q g") : rep.summary());
  }

  const InducedSequence seq = theorem1_sequence(g, q);
  add("gamma sequence", seq.ok(), seq.ok() ? "" : seq.summary());

  const SplitVerdict split = split_check(g, q);
  if (split.hypothesis)
    add("gamma splitting", split.holds(),
        split.holds() ? "" : detail::factors_text(split.tensor_factors) + " vs " +
                                 detail::factors_text(split.rhs_factors));

  const std::pair<const char*, Ideal> ideals[] = {{"center", Ideal(g, center(g).generators())},
                                                  {"derived", derived_subalgebra(g)}};
  for (const auto& [label, h] : ideals)
    for (SequenceKind k : {SequenceKind::exterior, SequenceKind::curly}) {
      const InducedSequence s = right_exact_sequence(g, h, q, k);
      add(std::string("right exactness (") + label + ", " + (k == SequenceKind::exterior ? "exterior" : "curly") +
              ")",
          s.ok(), s.ok() ? "" : s.summary());
    }

  const CoincidenceVerdict co = coincidence_check(g, q);
  if (co.hypothesis)
    add("center coincidence", co.equal,
        co.equal ? "" : "tensor " + co.tensor_center.describe() + ", exterior " + co.exterior_center.describe());

  const CenterReport rep = center_report(g, q);
  std::string bad;
  for (const auto& c : rep.inclusions)
    if (!c.holds) bad += (bad.empty() ? "" : "; ") + c.name;
  add("center inclusions", rep.inclusions_hold(), bad);

  if (g.base_modulus() == 0 && g.orders() == Vec{0} && q != 0) {
    const bool pass = rep.get("exterior_center").is_zero() && rep.get("ellis_exterior_center").is_whole() &&
                      rep.q_capable && !rep.strongly_q_capable;
    add("capable but not strongly capable", pass,
        pass ? "" : "exterior center " + rep.get("exterior_center").describe() + ", curly exterior center " +
                        rep.get("ellis_exterior_center").describe());
  }

  if (g.dim() > 0 && derived_subalgebra(g).is_whole()) {
    const Submodule& z = rep.get("center");
    const bool eq = rep.get("ellis_tensor_center") == z && rep.get("ellis_exterior_center") == z;
    const bool strong = !z.is_zero() || !rep.theorem_backed || rep.strongly_q_capable;
    add("perfect algebra centers", eq && strong,
        eq ? (strong ? "" : "center is zero but not strongly q-capable") : "curly centers differ from the center");
  }

  const InnerDerivations der = inner_q_derivations(g, q);
  const ValidationReport drep = validate_q_crossed(der.crossed);
  add("inner q-derivations", der.exact && drep.ok(),
      der.exact ? (drep.ok() ? "" : drep.summary()) : "kernel of the boundary differs from Z_q");

  if (oracle && q.fits_slong_p() && detail::oracle_sized(g, q)) {
    try {
      for (const QProduct* P : {&T, &E}) {
        const testkit::BruteProduct B(g, q.get_si(),
                                      P->kind() == ProductKind::tensor ? testkit::Kind::tensor : testkit::Kind::exterior);
        const Vec brute = B.invariant_factors();
        const bool same = brute == P->module().invariant_factors();
        add(std::string("oracle equivalence (") + to_string(P->kind()) + ")", same,
            same ? "" : "pipeline " + to_string(P->module().invariant_factors()) + ", brute " + to_string(brute));
      }
    } catch (const TooLarge&) {
    }
  }
  return out;
}

/// Runs verify_instance over every (algebra, q) pair, fanning out across
/// threads. Results come back ordered by (algebra position, q position).
inline std::vector<Verdict> verify_suite(const std::vector<LieAlgebra>& algebras, const VerifyOptions& opt = {}) {
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t a = 0; a < algebras.size(); ++a)
    for (std::size_t k = 0; k < opt.qs.size(); ++k) tasks.emplace_back(a, k);
  std::vector<std::vector<Verdict>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < tasks.size();) {
      const auto& [a, k] = tasks[t];
      try {
        results[t] = verify_instance(algebras[a], opt.qs[k], opt.oracle);
      } catch (const std::exception& e) {
        results[t] = {{"evaluation", algebras[a].name() + " q=" + opt.qs[k].get_str(), false, e.what()}};
      }
    }
  };
  const std::size_t n = std::min(thread_cap(opt.threads), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<Verdict> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

inline bool all_pass(const std::vector<Verdict>& v) {
  return std::all_of(v.begin(), v.end(), [](const Verdict& x) { return x.pass; });
}

}  // namespace lieq
