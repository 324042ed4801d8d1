#include "garside/run_record.hpp"

namespace garside {

namespace {

Json round_json(const RoundCurve &c) { return Json::array({c.lo, c.hi}); }

RoundCurve round_from_json(const Json &j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

template <class T, class F> void put_optional(Json &j, const char *key, const std::optional<T> &v, F f) {
  j[key] = v ? f(*v) : Json(nullptr);
}

} // namespace

Json to_json(const SimpleElement &s) { return s.permutation().images(); }

Json to_json(const CanonicalForm &x) {
  Json factors = Json::array();
  for (const auto &f : x.factors())
    factors.push_back(to_json(f));
  return Json{{"p", x.delta_exponent()}, {"factors", std::move(factors)}};
}

Json to_json(const Curve &c) {
  Json coords = Json::array();
  for (const auto &v : c.coords())
    coords.push_back(v.get_str());
  const auto round = is_round(c);
  return Json{{"coords", std::move(coords)}, {"round", round ? round_json(*round) : Json(nullptr)}};
}

Json to_json(const Certificate &cert, int n) {
  if (const auto *p = std::get_if<PeriodicCert>(&cert))
    return Json{{"type", "periodic"}, {"power", p->power}, {"delta_exponent", p->delta_exponent}};
  if (const auto *r = std::get_if<RigidCert>(&cert))
    return Json{{"type", "rigid"},
                {"power_m", r->power_m},
                {"rigid_element", to_json(r->rigid_element)},
                {"conjugator", to_json(r->conjugator)}};
  const auto &c = std::get<ReducibleCert>(cert);
  Json j{{"type", "reducible"}, {"stage", to_string(c.stage)}};
  auto same = [](long v) { return Json(v); };
  auto form = [](const CanonicalForm &f) { return to_json(f); };
  put_optional(j, "power_i", c.power_i, same);
  put_optional(j, "k", c.k, same);
  put_optional(j, "simple_prefix", c.simple_prefix, [](const SimpleElement &s) { return to_json(s); });
  put_optional(j, "round", c.round, round_json);
  put_optional(j, "conjugator", c.conjugator, form);
  put_optional(j, "rigid_element", c.rigid_element, form);
  if (c.stage == ReducibleStage::step3_curve && c.round)
    j["invariant_curve"] = to_json(certified_curve(c, n));
  return j;
}

Json to_json(const ClassifyStats &st) {
  return Json{{"slidings", st.slidings},
              {"powers_examined", st.powers_examined},
              {"candidates_tested", st.candidates_tested},
              {"wall_ms", st.wall_ms},
              {"power_cap", st.power_cap},
              {"under_power_cap", st.under_power_cap}};
}

Json to_json(const RunRecord &r) {
  return Json{{"n", r.n},
              {"word", r.word},
              {"kind", to_string(r.result.kind)},
              {"certificate", to_json(r.result.certificate, r.n)},
              {"stats", to_json(r.result.stats)}};
}

SimpleElement simple_from_json(const Json &j) {
  return SimpleElement(Permutation(j.get<std::vector<int>>()));
}

CanonicalForm form_from_json(int n, const Json &j) {
  std::vector<SimpleElement> factors;
  for (const auto &f : j.at("factors"))
    factors.push_back(simple_from_json(f));
  return CanonicalForm::from_parts(n, j.at("p").get<long>(), factors);
}

Certificate certificate_from_json(int n, const Json &j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "periodic")
    return PeriodicCert{j.at("power").get<long>(), j.at("delta_exponent").get<long>()};
  if (type == "rigid")
    return RigidCert{j.at("power_m").get<long>(), form_from_json(n, j.at("rigid_element")),
                     form_from_json(n, j.at("conjugator"))};
  if (type != "reducible")
    throw std::invalid_argument("unknown certificate type '" + type + "'");
  ReducibleCert c{};
  const std::string stage = j.at("stage").get<std::string>();
  if (stage == "step2_no_rigid")
    c.stage = ReducibleStage::step2_no_rigid;
  else if (stage == "step3_curve")
    c.stage = ReducibleStage::step3_curve;
  else
    throw std::invalid_argument("unknown stage '" + stage + "'");
  auto present = [&](const char *key) { return j.contains(key) && !j.at(key).is_null(); };
  if (present("power_i"))
    c.power_i = j.at("power_i").get<long>();
  if (present("k"))
    c.k = j.at("k").get<long>();
  if (present("simple_prefix"))
    c.simple_prefix = simple_from_json(j.at("simple_prefix"));
  if (present("round"))
    c.round = round_from_json(j.at("round"));
  if (present("conjugator"))
    c.conjugator = form_from_json(n, j.at("conjugator"));
  if (present("rigid_element"))
    c.rigid_element = form_from_json(n, j.at("rigid_element"));
  return c;
}

ClassifyStats stats_from_json(const Json &j) {
  ClassifyStats st;
  st.slidings = j.at("slidings").get<std::size_t>();
  st.powers_examined = j.at("powers_examined").get<std::size_t>();
  st.candidates_tested = j.at("candidates_tested").get<std::size_t>();
  st.wall_ms = j.at("wall_ms").get<double>();
  st.power_cap = j.at("power_cap").get<long>();
  st.under_power_cap = j.at("under_power_cap").get<bool>();
  return st;
}

RunRecord run_record_from_json(const Json &j) {
  RunRecord r;
  r.n = j.at("n").get<int>();
  r.word = j.at("word").get<std::vector<int>>();
  r.result.kind = kind_from_string(j.at("kind").get<std::string>());
  r.result.certificate = certificate_from_json(r.n, j.at("certificate"));
  r.result.stats = stats_from_json(j.at("stats"));
  return r;
}

std::string serialize(const RunRecord &r) { return to_json(r).dump(); }

RunRecord parse_run_record(const std::string &line) {
  return run_record_from_json(Json::parse(line));
}

} // namespace garside
