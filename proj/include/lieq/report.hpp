#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "lieq/capability.hpp"
#include "lieq/errors.hpp"
#include "lieq/qtensor.hpp"

namespace lieq {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline std::string ring_name(const Int& base) { return base == 0 ? "Z" : "Z/" + base.get_str(); }

inline Json center_report_json(const CenterReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra"] = r.algebra;
  j["ring"] = ring_name(r.base);
  j["q"] = to_json(r.q);
  Json centers = Json::object(), gens = Json::object();
  for (const auto& [name, s] : r.centers) {
    centers[name] = to_json(s.invariant_factors());
    Json g = Json::array();
    for (const auto& x : s.generators()) g.push_back(to_json(x));
    gens[name] = g;
  }
  j["centers"] = centers;
  j["center_generators"] = gens;
  j["verdicts"] = {{"q_capable", r.q_capable}, {"strongly_q_capable", r.strongly_q_capable}};
  j["flags"] = {{"lambda_q_torsion_free", r.lambda_q_torsion_free}, {"theorem_backed", r.theorem_backed}};
  Json inc = Json::object();
  for (const auto& c : r.inclusions) inc[c.name] = c.holds;
  j["inclusions"] = inc;
  return j;
}

inline Json sequence_json(const std::string& name, const InducedSequence& s) {
  Json j;
  j["sequence"] = name;
  j["hypothesis"] = s.hypothesis;
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back({{"check", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  j["checks"] = checks;
  j["ok"] = s.ok();
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_report(const Json& j, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  f << dump(j);
  if (!f) throw IoError("write failed for " + path);
}

inline void write_report(const CenterReport& r, const std::string& path) {
  write_report(center_report_json(r), path);
}

}  // namespace lieq
