#include "minfam/descriptor.hpp"

#include <json.hpp>
#include <set>

#include "minfam/error.hpp"

namespace minfam {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::InvalidField, "field '" + field + "': " + what);
}

int64_t as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  if (v.is_number_unsigned() && v.get<uint64_t>() > static_cast<uint64_t>(INT64_MAX))
    field_error(field, "integer out of range");
  return v.get<int64_t>();
}

std::vector<int64_t> as_int_vector(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array of integers");
  std::vector<int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

SurfaceDescriptor parse_descriptor(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Syntax, "malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw Error(ErrorCode::Syntax, "descriptor must be a JSON object");

  static const std::set<std::string> known = {"basis_kind", "exceptional_count", "h", "sigma",
                                              "swap_rulings", "roots", "label"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) field_error(key, "unknown field");
  for (const char* required : {"basis_kind", "exceptional_count", "h"})
    if (!doc.contains(required)) field_error(required, "missing");

  SurfaceDescriptor d;
  const json& kind = doc["basis_kind"];
  if (kind == "type1") {
    d.basis_kind = BasisKind::Type1;
  } else if (kind == "type2") {
    d.basis_kind = BasisKind::Type2;
  } else {
    field_error("basis_kind", "expected \"type1\" or \"type2\"");
  }
  const int64_t count = as_int(doc["exceptional_count"], "exceptional_count");
  if (count < 0 || count > 16) field_error("exceptional_count", "outside 0..16");
  d.exceptional_count = static_cast<std::size_t>(count);
  const std::size_t rank = d.exceptional_count + (d.basis_kind == BasisKind::Type1 ? 1 : 2);

  d.h = as_int_vector(doc["h"], "h");
  if (d.h.size() != rank) field_error("h", "expected " + std::to_string(rank) + " coefficients");

  if (doc.contains("sigma")) {
    const json& s = doc["sigma"];
    if (!s.is_array()) field_error("sigma", "expected an array of index pairs");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string name = "sigma[" + std::to_string(i) + "]";
      auto pair = as_int_vector(s[i], name);
      if (pair.size() != 2) field_error(name, "expected two indices");
      if (pair[0] < 1 || pair[1] < 1 || pair[0] > count || pair[1] > count)
        field_error(name, "index outside 1.." + std::to_string(count));
      d.sigma.emplace_back(static_cast<std::size_t>(pair[0]), static_cast<std::size_t>(pair[1]));
    }
  }
  if (doc.contains("swap_rulings")) {
    if (!doc["swap_rulings"].is_boolean()) field_error("swap_rulings", "expected a boolean");
    d.swap_rulings = doc["swap_rulings"].get<bool>();
  }
  if (doc.contains("roots")) {
    const json& r = doc["roots"];
    if (!r.is_array()) field_error("roots", "expected an array of coefficient arrays");
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string name = "roots[" + std::to_string(i) + "]";
      auto v = as_int_vector(r[i], name);
      if (v.size() != rank) field_error(name, "expected " + std::to_string(rank) + " coefficients");
      d.roots.push_back(std::move(v));
    }
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) field_error("label", "expected a string");
    d.label = doc["label"].get<std::string>();
  }
  to_surface_pair(d);
  return d;
}

std::string emit_descriptor(const SurfaceDescriptor& d) {
  ordered_json doc;
  doc["basis_kind"] = d.basis_kind == BasisKind::Type1 ? "type1" : "type2";
  doc["exceptional_count"] = d.exceptional_count;
  doc["h"] = d.h;
  ordered_json sigma = ordered_json::array();
  for (auto [a, b] : d.sigma) sigma.push_back({a, b});
  doc["sigma"] = sigma;
  doc["swap_rulings"] = d.swap_rulings;
  doc["roots"] = d.roots.empty() ? ordered_json::array() : ordered_json(d.roots);
  doc["label"] = d.label;
  return doc.dump(2) + "\n";
}

SurfacePair to_surface_pair(const SurfaceDescriptor& d) {
  const LatticeBasis basis(d.basis_kind, d.exceptional_count);
  DivisorClass h = from_display(basis, d.h);
  RealInvolution sigma = RealInvolution::from_transpositions(basis, d.sigma, d.swap_rulings);
  std::vector<DivisorClass> roots;
  for (const auto& r : d.roots) roots.push_back(from_display(basis, r));
  return SurfacePair(std::move(h), std::move(sigma), CurveConfiguration(basis, std::move(roots)));
}

}  // namespace minfam
