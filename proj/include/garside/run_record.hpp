#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "garside/classifier.hpp"

namespace garside {

using Json = nlohmann::ordered_json;

/// One classifier run: input, verdict, certificate and counters.
struct RunRecord {
  int n = 3;
  std::vector<int> word;
  Classification result;
};

Json to_json(const SimpleElement &s);
Json to_json(const CanonicalForm &x);
Json to_json(const Curve &c);
Json to_json(const Certificate &cert, int n);
Json to_json(const ClassifyStats &st);
Json to_json(const RunRecord &r);

SimpleElement simple_from_json(const Json &j);
CanonicalForm form_from_json(int n, const Json &j);
Certificate certificate_from_json(int n, const Json &j);
ClassifyStats stats_from_json(const Json &j);
RunRecord run_record_from_json(const Json &j);

/// Single-line JSON.
std::string serialize(const RunRecord &r);
RunRecord parse_run_record(const std::string &line);

} // namespace garside
