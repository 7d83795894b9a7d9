#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieq/capability.hpp"
#include "lieq/catalog.hpp"
#include "lieq/io.hpp"
#include "lieq/report.hpp"
#include "lieq/verify.hpp"

namespace {

using namespace lieq;

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

struct Usage : Error {
  using Error::Error;
};

struct Common {
  std::string format = "text";
  std::string output;
  std::string qs;
};

LieAlgebra resolve(const std::string& target) {
  if (target.rfind("catalog:", 0) == 0) {
    const std::string name = target.substr(8);
    if (auto g = catalog::find(name)) return *g;
    throw Usage("unknown catalog entry '" + name + "' (see 'lieq catalog')");
  }
  return load_algebra(target);
}

std::vector<Int> parse_qs(const std::string& raw, std::vector<Int> fallback) {
  if (raw.empty()) return fallback;
  std::vector<Int> out;
  std::istringstream in(raw);
  for (std::string s; std::getline(in, s, ',');) {
    const std::string t = detail::trim(s);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw Usage("--q expects non-negative integers, got '" + s + "'");
    out.emplace_back(t);
  }
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw IoError("cannot write " + c.output);
}

bool json(const Common& c) { return c.format == "json"; }

std::string header(const LieAlgebra& g, const Int& q) {
  return g.name() + " over " + ring_name(g.base_modulus()) + ", q=" + q.get_str();
}

int cmd_validate(const Common& c, const std::string& target) {
  std::optional<LieAlgebra> g;
  ValidationReport rep;
  try {
    g = resolve(target);
    rep = g->validate();
  } catch (const ValidationError& e) {
    rep = e.report();
  }
  if (json(c)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["target"] = target;
    j["ok"] = rep.ok();
    Json issues = Json::array();
    for (const auto& i : rep.issues) {
      Json idx = Json::array();
      for (auto k : i.indices) idx.push_back(k + 1);
      issues.push_back({{"kind", i.kind}, {"indices", idx}, {"witness", to_json(i.witness)}});
    }
    j["issues"] = issues;
    if (g) j["invariant_factors"] = to_json(g->module().invariant_factors());
    emit(c, dump(j));
  } else if (rep.ok()) {
    emit(c, g->name() + ": ok, dimension " + std::to_string(g->dim()) + " over " + ring_name(g->base_modulus()) +
                ", module " + g->module().describe() + "\n");
  } else {
    std::string s = target + ": invalid\n";
    for (const auto& i : rep.issues) s += "  " + i.describe() + "\n";
    emit(c, s);
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_product(const Common& c, const std::string& target, const std::string& kind_name) {
  const LieAlgebra g = resolve(target);
  const auto qs = parse_qs(c.qs, {0});
  if (kind_name != "tensor" && kind_name != "exterior") throw Usage("--kind must be tensor or exterior");
  const ProductKind kind = kind_name == "tensor" ? ProductKind::tensor : ProductKind::exterior;
  Json all = Json::array();
  std::string text;
  for (const auto& q : qs) {
    const QProduct P(Ideal::whole(g), q, kind);
    const LieAlgebra& A = P.algebra();
    const Vec& f = P.module().invariant_factors();
    if (json(c)) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["algebra"] = g.name();
      j["ring"] = ring_name(g.base_modulus());
      j["q"] = to_json(q);
      j["kind"] = to_string(kind);
      j["invariant_factors"] = to_json(f);
      j["generators"] = A.names();
      Json br = Json::array();
      for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t b = a + 1; b < A.dim(); ++b)
          if (!is_zero(A.bracket_basis(a, b)))
            br.push_back({{"left", a + 1}, {"right", b + 1}, {"value", to_json(A.bracket_basis(a, b))}});
      j["brackets"] = br;
      all.push_back(j);
      continue;
    }
    std::ostringstream os;
    os << header(g, q) << ", " << to_string(kind) << " square\n";
    os << "invariant factors: " << to_string(f) << " (" << describe_factors(f) << ")\n";
    bool any = false;
    for (std::size_t a = 0; a < A.dim(); ++a)
      for (std::size_t b = a + 1; b < A.dim(); ++b)
        if (!is_zero(A.bracket_basis(a, b))) {
          if (!any) os << "brackets:\n";
          any = true;
          os << "  [" << A.names()[a] << "," << A.names()[b]
             << "] = " << format_combination(A.bracket_basis(a, b), A.names()) << "\n";
        }
    if (!any) os << "brackets: all zero\n";
    text += os.str();
  }
  emit(c, json(c) ? dump(all.size() == 1 ? all[0] : all) : text);
  return kOk;
}

std::string center_text(const CenterReport& r, bool centers) {
  std::ostringstream os;
  os << r.algebra << " over " << ring_name(r.base) << ", q=" << r.q.get_str() << "\n";
  if (centers)
    for (const auto& [name, s] : r.centers) {
      os << "  " << name << ": " << s.describe();
      if (!s.is_zero()) {
        os << " generated by";
        for (const auto& x : s.generators()) os << ' ' << to_string(x);
      }
      os << "\n";
    }
  os << "  q_capable=" << (r.q_capable ? "true" : "false")
     << " strongly_q_capable=" << (r.strongly_q_capable ? "true" : "false") << "\n";
  os << "  lambda_q_torsion_free=" << (r.lambda_q_torsion_free ? "true" : "false")
     << " theorem_backed=" << (r.theorem_backed ? "true" : "false") << "\n";
  if (centers)
    for (const auto& i : r.inclusions) os << "  " << i.name << ": " << (i.holds ? "holds" : "FAILS") << "\n";
  return os.str();
}

int cmd_centers(const Common& c, const std::string& target, bool full) {
  const LieAlgebra g = resolve(target);
  const auto qs = parse_qs(c.qs, default_q_sweep());
  Json all = Json::array();
  std::string text;
  bool inclusions = true;
  for (const auto& q : qs) {
    const CenterReport r = center_report(g, q);
    inclusions = inclusions && r.inclusions_hold();
    if (json(c)) {
      Json j = center_report_json(r);
      if (!full) {
        j.erase("centers");
        j.erase("center_generators");
        j.erase("inclusions");
      }
      all.push_back(j);
    } else {
      text += center_text(r, full);
    }
  }
  emit(c, json(c) ? dump(all.size() == 1 ? all[0] : all) : text);
  return inclusions ? kOk : kCheckFailed;
}

int cmd_verify(const Common& c, const std::string& target, bool oracle) {
  std::vector<LieAlgebra> algebras;
  if (target.empty() || target == "catalog")
    algebras = catalog::all();
  else
    algebras.push_back(resolve(target));
  VerifyOptions opt;
  opt.qs = parse_qs(c.qs, default_q_sweep());
  opt.oracle = oracle;
  const auto verdicts = verify_suite(algebras, opt);
  std::size_t failed = 0;
  for (const auto& v : verdicts) failed += v.pass ? 0 : 1;
  if (json(c)) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json arr = Json::array();
    for (const auto& v : verdicts)
      arr.push_back({{"theorem", v.theorem}, {"instance", v.instance}, {"verdict", v.pass ? "pass" : "fail"},
                     {"witness", v.witness}});
    j["verdicts"] = arr;
    j["checked"] = verdicts.size();
    j["failed"] = failed;
    emit(c, dump(j));
  } else {
    std::ostringstream os;
    for (const auto& v : verdicts) {
      os << (v.pass ? "pass " : "FAIL ") << v.theorem << " | " << v.instance;
      if (!v.witness.empty()) os << " | " << v.witness;
      os << "\n";
    }
    os << verdicts.size() << " checks, " << failed << " failed\n";
    emit(c, os.str());
  }
  return failed == 0 ? kOk : kCheckFailed;
}

int cmd_catalog(const Common& c) {
  if (json(c)) {
    Json arr = Json::array();
    for (const auto& e : catalog::entries()) {
      const LieAlgebra g = e.make();
      arr.push_back({{"name", e.name},
                     {"description", e.description},
                     {"ring", ring_name(g.base_modulus())},
                     {"invariant_factors", to_json(g.module().invariant_factors())}});
    }
    emit(c, dump(arr));
    return kOk;
  }
  std::ostringstream os;
  for (const auto& e : catalog::entries()) os << e.name << "  " << e.description << "\n";
  emit(c, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-abelian q-tensor and q-exterior products of Lie algebras over Z and Z/m"};
  app.require_subcommand(1);
  Common common;
  std::string target, kind = "tensor";
  bool oracle = false;

  auto add_common = [&](CLI::App* sub, bool with_q) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", common.output, "Write the report to a file");
    if (with_q) sub->add_option("--q", common.qs, "Values of q, comma separated (e.g. 0,2,3)");
  };

  auto* validate = app.add_subcommand("validate", "Check torsion compatibility and the Jacobi identity");
  validate->add_option("target", target, "Algebra file or catalog:NAME")->required();
  add_common(validate, false);

  auto* product = app.add_subcommand("product", "Invariant factors and bracket table of g (x)^q g or g ^^q g");
  product->add_option("target", target, "Algebra file or catalog:NAME")->required();
  product->add_option("--kind", kind, "tensor or exterior")->check(CLI::IsMember({"tensor", "exterior"}));
  add_common(product, true);

  auto* centers = app.add_subcommand("centers", "All six centers with verdicts, flags and inclusions");
  centers->add_option("target", target, "Algebra file or catalog:NAME")->required();
  add_common(centers, true);

  auto* capability = app.add_subcommand("capability", "q-capability verdicts and flags");
  capability->add_option("target", target, "Algebra file or catalog:NAME")->required();
  add_common(capability, true);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks on an algebra or the whole catalog");
  verify->add_option("target", target, "Algebra file, catalog:NAME, or omit for the catalog");
  verify->add_flag("--oracle", oracle, "Also compare against brute-force enumeration");
  add_common(verify, true);

  auto* list = app.add_subcommand("catalog", "List the built-in algebras");
  add_common(list, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(common, target);
    if (*product) return cmd_product(common, target, kind);
    if (*centers) return cmd_centers(common, target, true);
    if (*capability) return cmd_centers(common, target, false);
    if (*verify) return cmd_verify(common, target, oracle);
    return cmd_catalog(common);
  } catch (const Error& e) {
    std::cerr << "lieq: " << e.what() << "\n";
  } catch (const CLI::Error& e) {
    std::cerr << "lieq: " << e.what() << "\n";
  }
  return kUsage;
}
