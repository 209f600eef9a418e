#include "seqnorm/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "seqnorm/expression.hpp"
#include "seqnorm/wire.hpp"

namespace seqnorm {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

ordered_json input_json(const ProbeInput& input) {
  ordered_json vectors = ordered_json::array();
  for (const FiniteVector& v : input.vectors) vectors.push_back(ordered_json::parse(vector_to_json(v)));
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : input.params) params[key] = number(value);
  return {{"vectors", vectors}, {"params", params}};
}

// CSV field: quoted when it contains a separator or a quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return format_number(v);
}

std::string significant(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  std::ostringstream out;
  out.precision(7);
  out << v;
  return out.str();
}

}  // namespace

std::string report_to_json(const ProbeReport& report) {
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"sample", v.sample},
                          {"check", v.check},
                          {"input", input_json(v.input)},
                          {"lhs", number(v.lhs)},
                          {"rhs", number(v.rhs)},
                          {"margin", number(v.margin)}});
  }
  ordered_json metrics = ordered_json::object();
  for (const auto& [key, value] : report.metrics) metrics[key] = number(value);
  const ordered_json out = {{"suiteName", report.suite},
                            {"space", report.space},
                            {"samplesRun", report.samples_run},
                            {"violations", violations},
                            {"worstMargin", number(report.worst_margin)},
                            {"verdict", verdict_name(report.verdict)},
                            {"seed", report.seed},
                            {"metrics", metrics}};
  return out.dump(2) + "\n";
}

std::string report_to_csv(const ProbeReport& report) {
  std::string out = "sample,check,lhs,rhs,margin,input\n";
  for (const Violation& v : report.violations) {
    out += std::to_string(v.sample) + "," + csv_field(v.check) + "," + csv_number(v.lhs) + "," + csv_number(v.rhs) +
           "," + csv_number(v.margin) + "," + csv_field(input_json(v.input).dump()) + "\n";
  }
  return out;
}

std::string report_to_text(const ProbeReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << "\n";
  if (!report.space.empty()) out << "space: " << report.space << "\n";
  out << "seed: " << report.seed << "\n";
  out << "samples: " << report.samples_run << "\n";
  out << "violations: " << report.violations.size() << "\n";
  out << "worst margin: " << significant(report.worst_margin) << "\n";
  for (const auto& [key, value] : report.metrics) out << key << ": " << significant(value) << "\n";
  constexpr std::size_t kListed = 20;
  for (std::size_t k = 0; k < report.violations.size() && k < kListed; ++k) {
    const Violation& v = report.violations[k];
    out << "  sample " << v.sample << " " << v.check << ": lhs " << significant(v.lhs) << " > rhs "
        << significant(v.rhs) << "\n";
  }
  if (report.violations.size() > kListed) out << "  ... " << report.violations.size() - kListed << " more\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  return out.str();
}

}  // namespace seqnorm
