#include "btnorm/document.hpp"

#include <json.hpp>

#include "btnorm/error.hpp"

namespace btnorm {

using json = nlohmann::json;

namespace {

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json columns_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& c : m.columns()) out.push_back(to_json(c));
  return out;
}

Vector vector_from_json(const json& j, size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected) {
    fail(Errc::malformed, std::string(what) + " must be an array of " + std::to_string(expected) + " rational strings");
  }
  Vector out;
  for (const auto& x : j) {
    if (!x.is_string()) fail(Errc::malformed, std::string(what) + " entries must be rational strings");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

Matrix columns_from_json(const json& j, size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) fail(Errc::malformed, std::string(what) + " must hold " + std::to_string(n) + " columns");
  std::vector<Vector> cols;
  for (const auto& c : j) cols.push_back(vector_from_json(c, n, what));
  return Matrix::from_columns(cols, n);
}

json parse_object(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) fail(Errc::malformed, "document is not a JSON object");
  return doc;
}

std::pair<FieldConfig, size_t> parse_header(const json& doc) {
  if (!doc.contains("prime") || !doc["prime"].is_number_unsigned()) fail(Errc::malformed, "missing integer field 'prime'");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) fail(Errc::malformed, "missing integer field 'dim'");
  unsigned long p = doc["prime"].get<unsigned long>();
  if (!is_prime(p)) fail(Errc::malformed, "field 'prime' is not a prime number");
  return {FieldConfig(p), doc["dim"].get<size_t>()};
}

// Validity problems inside a document are reported as malformed input.
template <class F>
auto as_malformed(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::malformed) throw;
    fail(Errc::malformed, e.what());
  }
}

}  // namespace

NormDocument parse_norm_document(std::string_view text) {
  json doc = parse_object(text);
  auto [cfg, n] = parse_header(doc);
  if (!doc.contains("basis") || !doc.contains("values")) fail(Errc::malformed, "norm document needs 'basis' and 'values'");
  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail(Errc::malformed, "field 'label' must be a string");
    label = doc["label"].get<std::string>();
  }
  Matrix basis = columns_from_json(doc["basis"], n, "basis");
  Vector values = vector_from_json(doc["values"], n, "values");
  return as_malformed([&] { return NormDocument{SplitNorm(cfg, basis, values), label}; });
}

std::string serialize_norm_document(const SplitNorm& norm, const std::optional<std::string>& label) {
  json doc;
  doc["prime"] = norm.cfg().prime();
  doc["dim"] = norm.dim();
  doc["basis"] = columns_to_json(norm.basis());
  doc["values"] = to_json(norm.values());
  if (label) doc["label"] = *label;
  return doc.dump(2) + "\n";
}

SplittingPair parse_pair_document(std::string_view text) {
  json doc = parse_object(text);
  auto [cfg, n] = parse_header(doc);
  if (!doc.contains("lattice") || !doc.contains("weights")) fail(Errc::malformed, "pair document needs 'lattice' and 'weights'");
  Matrix lattice = columns_from_json(doc["lattice"], n, "lattice");
  Vector weights = vector_from_json(doc["weights"], n, "weights");
  return as_malformed([&] { return SplittingPair{LatticeBasis(cfg, lattice), weights}; });
}

std::string serialize_pair_document(const SplittingPair& pair) {
  json doc;
  doc["prime"] = pair.lattice.cfg().prime();
  doc["dim"] = pair.lattice.dim();
  doc["lattice"] = columns_to_json(pair.lattice.matrix());
  doc["weights"] = to_json(pair.weights);
  return doc.dump(2) + "\n";
}

}  // namespace btnorm
