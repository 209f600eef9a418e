#include "seqnorm/wire.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "seqnorm/error.hpp"

namespace seqnorm {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number", 0);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite", 0);
  return v;
}

json descriptor_json(const NormDescriptor& norm) {
  switch (norm.kind()) {
    case NormKind::kLp:
      return {{"kind", "lp"}, {"p", norm.parameter()}};
    case NormKind::kSup:
      return {{"kind", "sup"}};
    case NormKind::kL1:
      return {{"kind", "l1"}};
    case NormKind::kDay:
      return {{"kind", "day"}};
    case NormKind::kLorentz:
      return {{"kind", "lorentz"}};
    case NormKind::kTsirelson:
      return {{"kind", "tsirelson"}};
    case NormKind::kDayAugment:
      return {{"kind", "dayAug"}, {"base", descriptor_json(norm.child(0))}};
    case NormKind::kStrictlyConvex:
      return {{"kind", "scBase"}, {"base", descriptor_json(norm.child(0))}};
    case NormKind::kSymmetric2R:
      return {{"kind", "sym2R"}, {"base", descriptor_json(norm.child(0))}};
    case NormKind::kDavis:
      return {{"kind", "davis"},
              {"E", descriptor_json(norm.child(0))},
              {"F", descriptor_json(norm.child(1))},
              {"m", norm.parameter()}};
    case NormKind::kYSpace:
      return {{"kind", "Y"},
              {"E", descriptor_json(norm.child(0))},
              {"F", descriptor_json(norm.child(1))},
              {"X", descriptor_json(norm.child(2))},
              {"mRule", "pow2"}};
    case NormKind::kCustom:
      break;
  }
  throw std::invalid_argument("custom norm '" + norm.custom_name() + "' has no JSON form");
}

const json& member(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("descriptor is missing \"") + key + "\"", 0);
  return *it;
}

NormDescriptor descriptor_from(const json& j) {
  if (!j.is_object()) throw ParseError("descriptor must be an object", 0);
  const json& kind_json = member(j, "kind");
  if (!kind_json.is_string()) throw ParseError("descriptor kind must be a string", 0);
  const std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "lp") return NormDescriptor::lp(finite_number(member(j, "p"), "p"));
    if (kind == "sup") return NormDescriptor::sup();
    if (kind == "l1") return NormDescriptor::l1();
    if (kind == "day") return NormDescriptor::day();
    if (kind == "lorentz") return NormDescriptor::lorentz();
    if (kind == "tsirelson") return NormDescriptor::tsirelson();
    if (kind == "dayAug") return NormDescriptor::day_augment(descriptor_from(member(j, "base")));
    if (kind == "scBase") return NormDescriptor::strictly_convex(descriptor_from(member(j, "base")));
    if (kind == "sym2R") return NormDescriptor::symmetric_2r(descriptor_from(member(j, "base")));
    if (kind == "davis") {
      return NormDescriptor::davis(descriptor_from(member(j, "E")), descriptor_from(member(j, "F")),
                                   finite_number(member(j, "m"), "m"));
    }
    if (kind == "Y") {
      const json& rule = member(j, "mRule");
      if (rule != "pow2") throw ParseError("unknown m-rule", 0);
      return NormDescriptor::y_space(descriptor_from(member(j, "E")), descriptor_from(member(j, "F")),
                                     descriptor_from(member(j, "X")), MRule::kPow2);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  throw ParseError("unknown descriptor kind '" + kind + "'", 0);
}

}  // namespace

FiniteVector vector_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw ParseError("vector must be a JSON array", 0);
  std::vector<Entry> entries;
  const bool sparse = !j.empty() && j.front().is_array();
  Index next = 1;
  for (const json& item : j) {
    if (sparse) {
      if (!item.is_array() || item.size() != 2) throw ParseError("sparse entries must be [index, value] pairs", 0);
      const json& index = item[0];
      if (!index.is_number_integer() || index.get<std::int64_t>() < 1) {
        throw ParseError("sparse indices must be positive integers", 0);
      }
      entries.push_back({index.get<Index>(), finite_number(item[1], "coefficient")});
    } else {
      entries.push_back({next++, finite_number(item, "coefficient")});
    }
  }
  try {
    return FiniteVector::from_entries(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string vector_to_json(const FiniteVector& v) {
  json out = json::array();
  for (const Entry& e : v.entries()) out.push_back(json::array({e.index, e.value}));
  return out.dump();
}

NormDescriptor descriptor_from_json(std::string_view text) { return descriptor_from(parse_json(text)); }

std::string descriptor_to_json(const NormDescriptor& norm) { return descriptor_json(norm).dump(); }

}  // namespace seqnorm
