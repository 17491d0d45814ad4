#include "geomlab/registry.hpp"

#include <fstream>
#include <set>

namespace geomlab {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& detail) { throw ModelError(ModelErrorKind::MalformedDocument, detail); }

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  return doc.at(key);
}

Rational read_rational(const json& value, const std::string& where) {
  if (!value.is_string()) {
    throw ModelError(ModelErrorKind::MalformedRational,
                     where + ": expected a rational string such as \"1/2\", got " + value.dump());
  }
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const MalformedRational& e) {
    throw ModelError(ModelErrorKind::MalformedRational, where + ": " + e.what());
  }
}

RatMatrix read_matrix(const json& value, std::size_t n, const std::string& what) {
  if (!value.is_array() || value.size() != n) malformed(what + " must be an array of " + std::to_string(n) + " rows");
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!value[r].is_array() || value[r].size() != n) {
      malformed(what + " row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = read_rational(value[r][c], what + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
  }
  return m;
}

json write_matrix(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t label_index(const std::vector<std::string>& labels, const json& value, const std::string& where) {
  if (!value.is_string()) malformed(where + " must be a basis label string");
  const auto s = value.get<std::string>();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return i;
  throw ModelError(ModelErrorKind::UnknownLabel, where + " refers to undeclared basis label '" + s + "'");
}

bool is_pseudo_orthonormal(const RatMatrix& gram) {
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const Rational& v = gram(i, j);
      if (i != j && !v.is_zero()) return false;
      if (i == j && v != Rational(1) && v != Rational(-1)) return false;
    }
  return true;
}

}  // namespace

LoadedModel load_model(const json& doc) {
  if (!doc.is_object()) malformed("model document must be a JSON object");
  const json& schema = require(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kModelSchema) {
    malformed("unsupported schema " + schema.dump() + ", expected \"" + std::string(kModelSchema) + "\"");
  }
  const json& name = require(doc, "name");
  if (!name.is_string()) malformed("'name' must be a string");

  const json& basis = require(doc, "basis");
  if (!basis.is_array() || basis.empty()) malformed("'basis' must be a non-empty array of labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& l : basis) {
    if (!l.is_string() || l.get<std::string>().empty()) malformed("basis labels must be non-empty strings");
    const auto s = l.get<std::string>();
    if (!seen.insert(s).second) throw ModelError(ModelErrorKind::DuplicateLabel, "basis label '" + s + "' declared twice");
    labels.push_back(s);
  }
  const std::size_t n = labels.size();
  const json& dimension = require(doc, "dimension");
  if (!dimension.is_number_integer() || dimension.get<std::int64_t>() != static_cast<std::int64_t>(n)) {
    malformed("'dimension' must equal the number of basis labels (" + std::to_string(n) + ")");
  }

  LieAlgebraModel::BracketTable table;
  const json& brackets = require(doc, "brackets");
  if (!brackets.is_array()) malformed("'brackets' must be an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const json& entry = brackets[b];
    const std::string where = "brackets[" + std::to_string(b + 1) + "]";
    const std::size_t x = label_index(labels, require(entry, "x"), where + ".x");
    const std::size_t y = label_index(labels, require(entry, "y"), where + ".y");
    if (x == y) malformed(where + ": bracket of '" + labels[x] + "' with itself must not be listed");
    const auto key = std::make_pair(std::min(x, y), std::max(x, y));
    if (table.contains(key)) {
      throw ModelError(ModelErrorKind::DuplicateBracket,
                       where + ": bracket of '" + labels[key.first] + "' and '" + labels[key.second] + "' listed more than once");
    }
    const json& result = require(entry, "result");
    if (!result.is_array()) malformed(where + ".result must be an array");
    RatVector value(n);
    std::set<std::size_t> terms;
    for (std::size_t t = 0; t < result.size(); ++t) {
      const std::string twhere = where + ".result[" + std::to_string(t + 1) + "]";
      const std::size_t k = label_index(labels, require(result[t], "basis"), twhere + ".basis");
      if (!terms.insert(k).second) malformed(twhere + ": basis '" + labels[k] + "' appears twice");
      value[k] = read_rational(require(result[t], "coeff"), twhere + ".coeff");
    }
    if (x > y) value = scale(Rational(-1), value);
    table.emplace(key, std::move(value));
  }

  RatMatrix metric = read_matrix(require(doc, "metric"), n, "metric");

  std::optional<RatMatrix> frame;
  if (doc.contains("frame")) {
    frame = read_matrix(doc.at("frame"), n, "frame");
    if (determinant(*frame).is_zero()) malformed("frame matrix is singular");
  }
  std::optional<Rational> volume;
  if (doc.contains("volume")) {
    volume = read_rational(doc.at("volume"), "volume");
    if (volume->sign() <= 0) malformed("volume must be positive");
  }

  LoadedModel model{name.get<std::string>(), MetricLieAlgebra(LieAlgebraModel(labels, table), std::move(metric)),
                    std::move(frame), std::move(volume)};
  if (model.frame && !is_pseudo_orthonormal(model.frame->transpose() * model.space.metric() * *model.frame)) {
    malformed("frame is not pseudo-orthonormal for the metric");
  }
  return model;
}

LoadedModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(ModelErrorKind::FileNotFound, "cannot open model file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return load_model(doc);
}

json serialize_model(const MetricLieAlgebra& space, const std::string& name) {
  const auto& labels = space.labels();
  json doc;
  doc["schema"] = kModelSchema;
  doc["name"] = name;
  doc["dimension"] = labels.size();
  doc["basis"] = labels;
  json brackets = json::array();
  for (const auto& [key, value] : space.algebra().bracket_table()) {
    json result = json::array();
    for (std::size_t k = 0; k < value.size(); ++k)
      if (!value[k].is_zero()) result.push_back({{"basis", labels[k]}, {"coeff", value[k].to_string()}});
    brackets.push_back({{"x", labels[key.first]}, {"y", labels[key.second]}, {"result", std::move(result)}});
  }
  doc["brackets"] = std::move(brackets);
  doc["metric"] = write_matrix(space.metric());
  return doc;
}

json serialize_model(const LoadedModel& model) {
  json doc = serialize_model(model.space, model.name);
  if (model.frame) doc["frame"] = write_matrix(*model.frame);
  if (model.volume) doc["volume"] = model.volume->to_string();
  return doc;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"oscillator", "oscillator-frame", "heisenberg3", "abelian4-minkowski",
                                              "su2xR"};
  return names;
}

namespace {

json term(const char* basis, const char* coeff) { return {{"basis", basis}, {"coeff", coeff}}; }

json bracket_entry(const char* x, const char* y, json result) {
  return {{"x", x}, {"y", y}, {"result", std::move(result)}};
}

json document(const char* name, std::vector<std::string> basis, json brackets, json metric) {
  json doc;
  doc["schema"] = kModelSchema;
  doc["name"] = name;
  doc["dimension"] = basis.size();
  doc["basis"] = std::move(basis);
  doc["brackets"] = std::move(brackets);
  doc["metric"] = std::move(metric);
  return doc;
}

json oscillator_document() {
  json doc = document("oscillator", {"P", "X1", "Y1", "Q"},
                      json::array({bracket_entry("X1", "Y1", json::array({term("P", "1")})),
                                   bracket_entry("Q", "X1", json::array({term("Y1", "1")})),
                                   bracket_entry("Q", "Y1", json::array({term("X1", "-1")}))}),
                      json::array({json::array({"0", "0", "0", "1"}), json::array({"0", "1", "0", "0"}),
                                   json::array({"0", "0", "1", "0"}), json::array({"1", "0", "0", "0"})}));
  // columns: e1 = -P + X1, e2 = X1 + Q, e3 = Y1, e4 = -P + X1 + Q
  doc["frame"] = json::array({json::array({"-1", "0", "0", "-1"}), json::array({"1", "1", "0", "1"}),
                              json::array({"0", "0", "1", "0"}), json::array({"0", "1", "0", "1"})});
  return doc;
}

}  // namespace

LoadedModel builtin(const std::string& name) {
  if (name == "oscillator") return load_model(oscillator_document());
  if (name == "oscillator-frame") {
    const LoadedModel osc = load_model(oscillator_document());
    return load_model(serialize_model(change_of_basis(osc.space, *osc.frame), "oscillator-frame"));
  }
  if (name == "heisenberg3") {
    return load_model(document("heisenberg3", {"e1", "e2", "e3"},
                               json::array({bracket_entry("e1", "e2", json::array({term("e3", "1")}))}),
                               json::array({json::array({"1", "0", "0"}), json::array({"0", "1", "0"}),
                                            json::array({"0", "0", "1"})})));
  }
  if (name == "abelian4-minkowski") {
    return load_model(document("abelian4-minkowski", {"e1", "e2", "e3", "e4"}, json::array(),
                               json::array({json::array({"1", "0", "0", "0"}), json::array({"0", "1", "0", "0"}),
                                            json::array({"0", "0", "1", "0"}), json::array({"0", "0", "0", "-1"})})));
  }
  if (name == "su2xR") {
    return load_model(document("su2xR", {"e1", "e2", "e3", "e4"},
                               json::array({bracket_entry("e1", "e2", json::array({term("e3", "1")})),
                                            bracket_entry("e2", "e3", json::array({term("e1", "1")})),
                                            bracket_entry("e3", "e1", json::array({term("e2", "1")}))}),
                               json::array({json::array({"2", "0", "0", "0"}), json::array({"0", "2", "0", "0"}),
                                            json::array({"0", "0", "2", "0"}), json::array({"0", "0", "0", "1"})})));
  }
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw ModelError(ModelErrorKind::UnknownModel, "no builtin model '" + name + "' (known: " + known + ")");
}

}  // namespace geomlab
