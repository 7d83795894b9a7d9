// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lieq/capability.hpp"
#include "lieq/catalog.hpp"
#include "lieq/liealg.hpp"
#include "lieq/qtensor.hpp"
#include "lieq/testkit.hpp"

using namespace lieq;

namespace {

struct Tally {
  std::size_t checked = 0, passed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok)
      ++passed;
    else if (first_failure.empty())
      first_failure = what;
  }
  bool ok() const { return checked > 0 && passed == checked; }
  std::string text() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(checked) + " instances";
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
  }
};

std::string inst(const LieAlgebra& g, const Int& q) { return g.name() + " q=" + q.get_str(); }

const std::vector<Int> kSweep{0, 1, 2, 3, 4, 6};

bool report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  return ok;
}

bool abelian_decomposition() {
  Tally t;
  const std::vector<std::pair<const char*, Vec>> set{{"Z", {0}},   {"Z^2", {0, 0}},   {"Z/2", {2}},
                                                    {"Z/6", {6}}, {"(Z/4)^2", {4, 4}}, {"Z+Z/2", {0, 2}}};
  for (const auto& [name, orders] : set)
    for (const auto& q : kSweep) {
      const LieAlgebra g = catalog::abelian(orders, 0, name);
      t.record(abelian_decomposition_check(g, q).ok(), inst(g, q));
    }
  return report(1, "abelian decomposition", t.ok(), t.text());
}

bool brace_identity(const std::vector<LieAlgebra>& cat) {
  Tally t;
  for (const auto& g : cat)
    for (const Int q : {1, 2, 3}) {
      const bool ok = !check_brace_identity(q_tensor_square(g, q)) && !check_brace_identity(q_exterior_square(g, q));
      t.record(ok, inst(g, q));
    }
  return report(2, "brace identity {xi(x)} = qx", t.ok(), t.text());
}

bool crossed_modules(const std::vector<LieAlgebra>& cat) {
  Tally t;
  for (const auto& g : cat)
    for (const Int q : {0, 2, 3}) {
      const bool ok = validate_q_crossed(product_action(q_tensor_square(g, q))).ok() &&
                      validate_q_crossed(product_action(q_exterior_square(g, q))).ok();
      t.record(ok, inst(g, q));
    }
  return report(3, "q-crossed module validation of xi", t.ok(), t.text());
}

bool gamma_sequence(const std::vector<LieAlgebra>& cat) {
  Tally t;
  std::size_t injective = 0;
  for (const auto& g : cat)
    for (const Int q : {0, 2, 3}) {
      const InducedSequence s = theorem1_sequence(g, q);
      injective += s.hypothesis;
      t.record(s.ok(), inst(g, q) + " (" + s.summary() + ")");
    }
  return report(4, "gamma exact sequence", t.ok(),
                t.text() + ", injectivity checked on " + std::to_string(injective) + " free instances");
}

bool right_exactness() {
  const LieAlgebra h = catalog::heisenberg(0), n4 = catalog::n4(0);
  const std::vector<std::pair<LieAlgebra, Ideal>> pairs{{h, Ideal(h, center(h).generators())},
                                                        {n4, derived_subalgebra(n4)}};
  Tally braces, curly;
  for (const auto& [g, i] : pairs)
    for (const Int q : {0, 2}) {
      const InducedSequence a = right_exact_sequence(g, i, q, SequenceKind::exterior);
      braces.record(a.ok(), inst(g, q) + " (" + a.summary() + ")");
      const InducedSequence b = right_exact_sequence(g, i, q, SequenceKind::curly);
      curly.record(b.ok(), inst(g, q) + " (" + b.summary() + ")");
    }
  return report(5, "right exactness", braces.ok() && curly.ok(),
                "exterior squares " + braces.text() + " | brace-free images " + curly.text());
}

bool coincidence(const std::vector<LieAlgebra>& cat) {
  Tally all, positive_q;
  std::size_t free = 0;
  for (const auto& g : cat)
    for (const auto& q : kSweep) {
      const CoincidenceVerdict v = coincidence_check(g, q);
      if (!v.free) continue;
      ++free;
      const std::string w = inst(g, q) + " (tensor center " + v.tensor_center.describe() + ", exterior center " +
                            v.exterior_center.describe() + ")";
      all.record(v.equal, w);
      if (q >= 1) positive_q.record(v.equal, w);
    }
  return report(6, "center coincidence under freeness", all.ok(),
                "hypothesis true on " + std::to_string(free) + ", " + all.text() + " | q >= 1 only: " +
                    positive_q.text());
}

bool capable_not_strongly() {
  Tally t;
  const LieAlgebra z = catalog::abelian({0}, 0, "Z");
  for (const Int q : {1, 2, 3, 4, 6}) {
    const CenterReport r = center_report(z, q);
    const bool ok = r.get("exterior_center").is_zero() && r.get("ellis_exterior_center").is_whole() &&
                    r.q_capable && !r.strongly_q_capable;
    t.record(ok, inst(z, q));
  }
  return report(7, "Z is q-capable but not strongly q-capable", t.ok(), t.text());
}

bool perfect() {
  Tally t;
  std::size_t backed = 0;
  for (const Int p : {5, 7})
    for (const Int q : {0, 2, 3}) {
      const LieAlgebra g = catalog::sl2(p);
      const CenterReport r = center_report(g, q);
      bool ok = r.get("center").is_zero() && r.get("ellis_tensor_center").is_zero() &&
                r.get("ellis_exterior_center").is_zero();
      if (r.theorem_backed) {
        ++backed;
        ok = ok && r.strongly_q_capable;
      }
      t.record(ok, inst(g, q));
    }
  return report(8, "perfect algebras sl2(Z/5), sl2(Z/7)", t.ok(),
                t.text() + ", strong capability asserted on " + std::to_string(backed));
}

bool inclusions(const std::vector<LieAlgebra>& cat) {
  Tally t;
  for (const auto& g : cat)
    for (const auto& q : kSweep) {
      const CenterReport r = center_report(g, q);
      std::string bad;
      for (const auto& c : r.inclusions)
        if (!c.holds) bad += " " + c.name;
      t.record(r.inclusions_hold(), inst(g, q) + bad);
    }
  return report(9, "center inclusion chains", t.ok(), t.text());
}

bool oracle() {
  Tally products, gammas;
  for (long p : {2, 3})
    for (const LieAlgebra& g : testkit::small_algebras(p))
      for (long q = 0; q <= 4; ++q) {
        const QProduct T = q_tensor_square(g, q), E = q_exterior_square(g, q);
        const bool ok =
            testkit::BruteProduct(g, q, testkit::Kind::tensor).invariant_factors() ==
                T.module().invariant_factors() &&
            testkit::BruteProduct(g, q, testkit::Kind::exterior).invariant_factors() == E.module().invariant_factors();
        products.record(ok, inst(g, q));
      }
  for (const auto& A : testkit::finite_abelian_groups(16)) {
    Vec d;
    for (long o : A) d.push_back(o);
    gammas.record(testkit::brute_gamma(A) == gamma(FpModule::diagonal(d)).invariant_factors(), to_string(d));
  }
  return report(10, "oracle equivalence", products.ok() && gammas.ok(),
                "products " + products.text() + " | gamma " + gammas.text());
}

bool inner_derivations(const std::vector<LieAlgebra>& cat) {
  Tally t;
  for (const auto& g : cat)
    for (const Int q : {0, 2}) {
      const InnerDerivations d = inner_q_derivations(g, q);
      t.record(d.exact && validate_q_crossed(d.crossed).ok(), inst(g, q));
    }
  return report(11, "inner q-derivations", t.ok(), t.text());
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<LieAlgebra> cat = catalog::all();
  const std::vector<std::function<bool()>> criteria{
      abelian_decomposition,
      [&] { return brace_identity(cat); },
      [&] { return crossed_modules(cat); },
      [&] { return gamma_sequence(cat); },
      right_exactness,
      [&] { return coincidence(cat); },
      capable_not_strongly,
      perfect,
      [&] { return inclusions(cat); },
      oracle,
      [&] { return inner_derivations(cat); },
  };
  int failed = 0;
  for (const auto& c : criteria) {
    try {
      failed += c() ? 0 : 1;
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failed;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.1f s)\n", failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
