#include "quadsyn/json_io.hpp"

#include "quadsyn/error.hpp"

namespace quadsyn {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::Parse, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (int i = 0; i < 4; ++i) a.push_back(to_json(p[i]));
  return a;
}

Json to_json(const Extensor& e) {
  if (e.grade() == 1 && !e.is_zero()) return to_json(e.to_point());
  return Json{{"grade", e.grade()}, {"coeffs", rationals(e.coeffs())}};
}

Json to_json(const Trace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps()) {
    Json js{{"id", s.id}, {"op", std::string(to_string(s.op))}, {"inputs", s.inputs}, {"output", to_json(s.output)}};
    if (!s.label.empty()) js["label"] = s.label;
    steps.push_back(std::move(js));
  }
  return Json{{"steps", std::move(steps)}};
}

Json to_json(const Certificate& c) {
  if (const auto* q = std::get_if<QuadricCoeffs>(&c)) {
    return Json{{"kind", "quadric"}, {"coeffs", rationals(std::vector<Rational>(q->begin(), q->end()))}};
  }
  if (const auto* pp = std::get_if<PlanePair>(&c)) {
    Json planes = Json::array();
    for (const Vec4* v : {&pp->first, &pp->second}) planes.push_back(rationals(std::vector<Rational>(v->begin(), v->end())));
    return Json{{"kind", "plane-pair"}, {"planes", std::move(planes)}};
  }
  return nullptr;
}

Json to_json(const Decision& d, const std::string& trace_ref) {
  Json j;
  j["on_quadric"] = d.on_quadric;
  j["branch"] = std::string(to_string(d.branch));
  j["labeling"] = d.labeling;
  j["certificate"] = to_json(d.certificate);
  j["trace_ref"] = trace_ref.empty() ? Json(nullptr) : Json(trace_ref);
  j["route"] = d.route;
  j["flagged"] = d.flagged;
  return j;
}

Json config_to_json(const Config& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return Json{{"points", std::move(a)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("coordinate must be a rational string or an integer");
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("a point needs exactly four coordinates");
  Vec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = rational_from_json(j[i]);
  if (is_zero(v)) bad("a point cannot be the zero vector");
  return Point(v);
}

Extensor extensor_from_json(const Json& j) {
  if (j.is_array()) return Extensor::point(point_from_json(j));
  const int grade = field(j, "grade").get<int>();
  if (grade < 0 || grade > 4) bad("grade out of range");
  const Json& cj = field(j, "coeffs");
  if (!cj.is_array()) bad("coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cj) coeffs.push_back(rational_from_json(c));
  if (coeffs.size() != subsets_of_grade(grade).size()) bad("wrong number of coefficients for grade");
  return Extensor(grade, std::move(coeffs));
}

Trace trace_from_json(const Json& j) {
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  Trace t;
  for (const auto& s : steps) {
    const auto op = step_op_from_string(field(s, "op").get<std::string>());
    if (!op) bad("unknown op");
    std::vector<int> inputs = field(s, "inputs").get<std::vector<int>>();
    for (int in : inputs) {
      if (in < 0 || static_cast<std::size_t>(in) >= t.size()) bad("input id does not precede its use");
    }
    Extensor out = extensor_from_json(field(s, "output"));
    const std::string label = s.contains("label") ? s.at("label").get<std::string>() : std::string();
    const int id = t.add(*op, std::move(inputs), std::move(out), label);
    if (s.contains("id") && s.at("id").get<int>() != id) bad("step ids must be consecutive from 0");
  }
  return t;
}

Certificate certificate_from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "quadric") {
    const Json& c = field(j, "coeffs");
    if (!c.is_array() || c.size() != 10) bad("quadric needs ten coefficients");
    QuadricCoeffs q;
    for (std::size_t i = 0; i < 10; ++i) q[i] = rational_from_json(c[i]);
    return q;
  }
  if (kind == "plane-pair") {
    const Json& p = field(j, "planes");
    if (!p.is_array() || p.size() != 2) bad("plane pair needs two planes");
    std::array<Vec4, 2> v;
    for (std::size_t k = 0; k < 2; ++k) {
      if (!p[k].is_array() || p[k].size() != 4) bad("a plane needs four coefficients");
      for (std::size_t i = 0; i < 4; ++i) v[k][i] = rational_from_json(p[k][i]);
    }
    return PlanePair{v[0], v[1]};
  }
  bad("unknown certificate kind");
}

Config config_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.size() != 10) bad("expected exactly 10 points");
  Config c;
  for (const auto& p : pts) c.push_back(point_from_json(p));
  return c;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace quadsyn
