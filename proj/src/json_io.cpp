#include "morrey/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace morrey {

using nlohmann::json;

double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

json real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round_sig12(x);
}

json log_value(const LogValue& v) {
  json j;
  j["log2_value"] = v.is_zero() ? json("-inf") : real(v.log2_value);
  j["value"] = real(v.linear_value);
  return j;
}

}  // namespace

json sequence_to_json(const SparseSequence& seq) {
  json entries = json::array();
  for (const auto& e : seq.entries())
    entries.push_back({index_to_string(e.index), e.value});
  return json{{"entries", std::move(entries)}};
}

SparseSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw std::invalid_argument("sequence JSON must contain \"entries\"");
  const json& entries = j.at("entries");
  if (!entries.is_array())
    throw std::invalid_argument("\"entries\" must be an array");
  std::vector<SparseSequence::Entry> pairs;
  pairs.reserve(entries.size());
  for (std::size_t at = 0; at < entries.size(); ++at) {
    const json& e = entries[at];
    const std::string where = "entry " + std::to_string(at);
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument(where + ": expected [index_string, value]");
    Index index = 0;
    if (e[0].is_string())
      index = parse_index(e[0].get<std::string>());
    else if (e[0].is_number_integer())
      index = e[0].get<long long>();
    else
      throw std::invalid_argument(where + ": index must be a decimal string");
    if (!e[1].is_number())
      throw std::invalid_argument(where + ": value must be a number");
    pairs.push_back({index, e[1].get<double>()});
  }
  return SparseSequence::from_pairs(std::move(pairs));
}

json window_to_json(const Window& w) {
  json j;
  if (w.kind == Window::Kind::span) {
    j["kind"] = "span";
    j["k"] = index_to_string(w.anchor);
    j["n"] = index_to_string(w.extent);
  } else {
    j["kind"] = "centered";
    j["m"] = index_to_string(w.anchor);
    j["N"] = index_to_string(w.extent);
  }
  return j;
}

json norm_result_to_json(const NormResult& r) {
  json j = log_value(r.value);
  if (r.argmax) j["argmax"] = window_to_json(*r.argmax);
  j["candidates"] = r.candidates_evaluated;
  return j;
}

json interval_result_to_json(const IntervalNormResult& r) {
  json j = log_value(r.value);
  if (r.interval)
    j["interval"] = {real(r.interval->first), real(r.interval->second)};
  j["candidates"] = r.candidates_evaluated;
  return j;
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["kind"] = c.kind == Certificate::Kind::divergence ? "divergence"
                                                      : "boundedness";
  j["overall"] = c.overall;
  json points = json::array();
  for (const auto& pt : c.points) {
    json p;
    p["n"] = pt.n;
    p["label"] = pt.label;
    p["window"] = window_to_json(pt.window);
    p["value"] = real(pt.computed.linear_value);
    p["log2_value"] = pt.computed.is_zero() ? json("-inf")
                                            : real(pt.computed.log2_value);
    p["bound"] = real(pt.bound.linear_value);
    p["bound_log2"] = real(pt.bound.log2_value);
    p["satisfied"] = pt.satisfied;
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j;
}

json verdict_to_json(const InclusionVerdict& v) {
  json j;
  j["included"] = v.included;
  j["reason"] = v.reason;
  if (v.counterexample) {
    j["counterexample"] = {{"v", v.counterexample->v},
                           {"w", v.counterexample->w},
                           {"n_max", v.counterexample->n_max}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

json equivalence_to_json(const EquivalenceReport& r,
                         const MorreyParams& params) {
  json j;
  j["p"] = real(params.p);
  j["q"] = real(params.q);
  j["centered"] = norm_result_to_json(r.centered);
  j["starred"] = norm_result_to_json(r.starred);
  j["continuous"] = interval_result_to_json(r.continuous);
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"constant", c.constant},
                      {"ratio", real(c.ratio)},
                      {"ratio_log2", real(c.ratio_log2)},
                      {"lower", 1.0},
                      {"upper", real(c.bound)},
                      {"upper_log2", real(c.bound_log2)},
                      {"pass", c.passed}});
  }
  j["checks"] = std::move(checks);
  j["overall"] = r.overall;
  return j;
}

}  // namespace morrey
