#include "greyrel/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "greyrel/weights.hpp"

namespace greyrel {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(fmt::format("{}: {}", where, what));
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, fmt::format("missing required field '{}'", key));
  return *it;
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, fmt::format("expected a number, found {}", v.type_name()));
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where, "number is not finite");
  return d;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, fmt::format("expected a string, found {}", v.type_name()));
  return v.get<std::string>();
}

const json& array_at(const json& v, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
  if (!v.is_array()) fail(where, fmt::format("expected an array, found {}", v.type_name()));
  if (size && v.size() != *size) fail(where, fmt::format("expected {} entries, found {}", *size, v.size()));
  return v;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(where, fmt::format("unknown field '{}'", key));
    }
  }
}

LinguisticTerm term_at(const json& v, const AliasMap& aliases, const std::string& where) {
  const std::string label = string_at(v, where);
  try {
    return LinguisticTerm::from_label(label, aliases);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

RawCell cell_at(const json& v, const AliasMap& aliases, const std::string& where) {
  if (!v.is_object() || v.size() != 1) {
    fail(where, "a cell must be an object with exactly one of 'real', 'interval', 'ling', 'uling'");
  }
  const auto first = v.begin();
  const std::string tag = first.key();
  const json& body = first.value();
  try {
    if (tag == "real") return make_real(number_at(body, where));
    if (tag == "interval") {
      array_at(body, where, 2);
      return make_interval(number_at(body[0], where), number_at(body[1], where));
    }
    if (tag == "ling") return make_linguistic(term_at(body, aliases, where));
    if (tag == "uling") {
      array_at(body, where, 2);
      return make_uncertain_linguistic(term_at(body[0], aliases, where), term_at(body[1], aliases, where));
    }
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    fail(where, msg);
  }
  fail(where, fmt::format("unknown cell tag '{}' (expected real, interval, ling, uling)", tag));
}

GeneralizedValue preference_at(const json& v, const std::string& where) {
  array_at(v, where, 4);
  std::array<double, 4> c{};
  for (std::size_t k = 0; k < 4; ++k) {
    c[k] = number_at(v[k], where);
    if (c[k] < 0.0) fail(where, "preference components must be nonnegative");
  }
  try {
    return GeneralizedValue(c);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

}  // namespace

void DecisionProblem::validate() const {
  const std::size_t n = plans.size();
  const std::size_t m = attributes.size();
  if (n == 0) throw ValidationError("problem has no plans");
  if (m == 0) throw ValidationError("problem has no attributes");
  if (matrix.rows() != n || matrix.cols() != m) {
    throw ValidationError(fmt::format("matrix is {}x{}, expected {}x{}", matrix.rows(), matrix.cols(), n, m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::string where = fmt::format("matrix row {}, column {} (plan '{}', attribute '{}')", i + 1, j + 1,
                                            plans[i], attributes[j].id);
      try {
        greyrel::validate(matrix(i, j));
      } catch (const ValidationError& e) {
        fail(where, e.what());
      }
      if (kind_of(matrix(i, j)) != attributes[j].kind) {
        fail(where, fmt::format("{} cell in a {} column", to_string(kind_of(matrix(i, j))),
                                to_string(attributes[j].kind)));
      }
    }
  }
  if (alpha.size() != m) {
    throw ValidationError(fmt::format("{} subjective weights for {} attributes", alpha.size(), m));
  }
  if (preferences.size() != n) {
    throw ValidationError(fmt::format("{} preference values for {} plans", preferences.size(), n));
  }
  params.validate();
  borda.validate();
}

DecisionProblem problem_from_json(const json& input) {
  const json* docp = &input;
  if (input.is_object() && input.value("kind", std::string{}) == "greyrel-report") {
    docp = &require_key(input, "problem", "report");
  }
  const json& doc = *docp;
  if (!doc.is_object()) fail("problem", "top level must be an object");
  reject_unknown_keys(doc,
                      {"schema", "title", "description", "notes", "plans", "attributes", "matrix",
                       "subjective_weights", "preferences", "params", "linguistic_aliases"},
                      "problem");

  const json& schema = require_key(doc, "schema", "problem");
  if (!schema.is_number_integer() || schema.get<int>() != kProblemSchemaVersion) {
    fail("schema", fmt::format("unsupported schema {} (expected {})", schema.dump(), kProblemSchemaVersion));
  }

  DecisionProblem p;

  if (auto it = doc.find("linguistic_aliases"); it != doc.end()) {
    if (!it->is_object()) fail("linguistic_aliases", "expected an object of label -> label");
    AliasMap aliases;
    for (const auto& [from, to] : it->items()) {
      const std::string target = string_at(to, fmt::format("linguistic_aliases['{}']", from));
      aliases[canonicalize_label(from)] = canonicalize_label(target);
    }
    p.aliases = std::move(aliases);
    p.explicit_settings.insert("linguistic_aliases");
  }

  const json& plans = array_at(require_key(doc, "plans", "problem"), "plans");
  if (plans.empty()) fail("plans", "at least one plan is required");
  for (std::size_t i = 0; i < plans.size(); ++i) {
    std::string name = string_at(plans[i], fmt::format("plans[{}]", i + 1));
    if (std::find(p.plans.begin(), p.plans.end(), name) != p.plans.end()) {
      fail(fmt::format("plans[{}]", i + 1), fmt::format("duplicate plan name '{}'", name));
    }
    p.plans.push_back(std::move(name));
  }

  const json& attrs = array_at(require_key(doc, "attributes", "problem"), "attributes");
  if (attrs.empty()) fail("attributes", "at least one attribute is required");
  for (std::size_t j = 0; j < attrs.size(); ++j) {
    const std::string where = fmt::format("attributes[{}]", j + 1);
    if (!attrs[j].is_object()) fail(where, "expected an object with id, kind, direction");
    reject_unknown_keys(attrs[j], {"id", "kind", "direction", "description"}, where);
    AttributeSpec spec;
    spec.id = string_at(require_key(attrs[j], "id", where), where + ".id");
    try {
      spec.kind = parse_attribute_kind(string_at(require_key(attrs[j], "kind", where), where + ".kind"));
      spec.direction =
          parse_direction(string_at(require_key(attrs[j], "direction", where), where + ".direction"));
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      if (msg.rfind(where, 0) == 0) throw;
      fail(where, msg);
    }
    for (const auto& other : p.attributes) {
      if (other.id == spec.id) fail(where, fmt::format("duplicate attribute id '{}'", spec.id));
    }
    p.attributes.push_back(std::move(spec));
  }

  const std::size_t n = p.plans.size();
  const std::size_t m = p.attributes.size();

  const json& matrix = array_at(require_key(doc, "matrix", "problem"), "matrix", n);
  p.matrix = Grid<RawCell>(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    array_at(matrix[i], fmt::format("matrix row {} (plan '{}')", i + 1, p.plans[i]), m);
    for (std::size_t j = 0; j < m; ++j) {
      const std::string where = fmt::format("matrix row {}, column {} (plan '{}', attribute '{}')", i + 1, j + 1,
                                            p.plans[i], p.attributes[j].id);
      RawCell cell = cell_at(matrix[i][j], p.aliases, where);
      if (kind_of(cell) != p.attributes[j].kind) {
        fail(where, fmt::format("{} cell in a {} column", to_string(kind_of(cell)), to_string(p.attributes[j].kind)));
      }
      p.matrix(i, j) = std::move(cell);
    }
  }

  const json& subjective = require_key(doc, "subjective_weights", "problem");
  if (!subjective.is_object() || subjective.size() != 1) {
    fail("subjective_weights", "expected an object with exactly one of 'experts' or 'intervals'");
  }
  if (auto it = subjective.find("experts"); it != subjective.end()) {
    array_at(*it, "subjective_weights.experts");
    if (it->empty()) fail("subjective_weights.experts", "at least one expert vector is required");
    for (std::size_t l = 0; l < it->size(); ++l) {
      const std::string where = fmt::format("subjective_weights.experts[{}]", l + 1);
      array_at((*it)[l], where, m);
      std::vector<double> vec;
      for (std::size_t j = 0; j < m; ++j) {
        const double w = number_at((*it)[l][j], where);
        if (w < 0.0) fail(where, fmt::format("negative weight {} for attribute '{}'", w, p.attributes[j].id));
        vec.push_back(w);
      }
      p.expert_vectors.push_back(std::move(vec));
    }
    p.subjective_source = SubjectiveSource::ExpertVectors;
    p.alpha = subjective_interval_weights(p.expert_vectors);
  } else if (auto iv = subjective.find("intervals"); iv != subjective.end()) {
    array_at(*iv, "subjective_weights.intervals", m);
    for (std::size_t j = 0; j < m; ++j) {
      const std::string where = fmt::format("subjective_weights.intervals[{}] (attribute '{}')", j + 1, p.attributes[j].id);
      array_at((*iv)[j], where, 2);
      try {
        p.alpha.emplace_back(number_at((*iv)[j][0], where), number_at((*iv)[j][1], where));
      } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;
        fail(where, msg);
      }
    }
    p.subjective_source = SubjectiveSource::Intervals;
  } else {
    fail("subjective_weights", "expected 'experts' or 'intervals'");
  }

  const json& prefs = array_at(require_key(doc, "preferences", "problem"), "preferences", n);
  for (std::size_t i = 0; i < n; ++i) {
    p.preferences.push_back(preference_at(prefs[i], fmt::format("preferences[{}] (plan '{}')", i + 1, p.plans[i])));
  }

  if (auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_object()) fail("params", "expected an object");
    reject_unknown_keys(*it, {"rho", "theta_plus", "theta_minus", "borda_weights", "tie_break"}, "params");
    const json& params = *it;
    if (params.contains("rho")) p.params.rho = number_at(params["rho"], "params.rho");
    const bool has_plus = params.contains("theta_plus");
    const bool has_minus = params.contains("theta_minus");
    if (has_plus) p.params.theta_plus = number_at(params["theta_plus"], "params.theta_plus");
    if (has_minus) p.params.theta_minus = number_at(params["theta_minus"], "params.theta_minus");
    if (has_plus && !has_minus) p.params.theta_minus = 1.0 - p.params.theta_plus;
    if (has_minus && !has_plus) p.params.theta_plus = 1.0 - p.params.theta_minus;
    if (params.contains("borda_weights")) {
      const json& bw = array_at(params["borda_weights"], "params.borda_weights", 4);
      for (std::size_t k = 0; k < 4; ++k) p.borda.method_weights[k] = number_at(bw[k], "params.borda_weights");
    }
    if (params.contains("tie_break")) {
      try {
        p.borda.tie_break = parse_tie_break(string_at(params["tie_break"], "params.tie_break"));
      } catch (const ValidationError& e) {
        fail("params.tie_break", e.what());
      }
    }
    for (const auto& [key, _] : params.items()) p.explicit_settings.insert(key);
    try {
      p.params.validate();
      p.borda.validate();
    } catch (const ValidationError& e) {
      fail("params", e.what());
    }
  }

  p.validate();
  return p;
}

json cell_to_json(const RawCell& cell) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RealCell>) {
          return {{"real", c.value}};
        } else if constexpr (std::is_same_v<T, IntervalCell>) {
          return {{"interval", {c.lo, c.hi}}};
        } else if constexpr (std::is_same_v<T, LinguisticCell>) {
          return {{"ling", std::string(c.term.label())}};
        } else {
          return {{"uling", {std::string(c.lower.label()), std::string(c.upper.label())}}};
        }
      },
      cell);
}

json problem_to_json(const DecisionProblem& p) {
  json doc;
  doc["schema"] = kProblemSchemaVersion;
  doc["plans"] = p.plans;

  json attrs = json::array();
  for (const auto& a : p.attributes) {
    attrs.push_back({{"id", a.id}, {"kind", std::string(to_string(a.kind))},
                     {"direction", std::string(to_string(a.direction))}});
  }
  doc["attributes"] = std::move(attrs);

  json matrix = json::array();
  for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
    json row = json::array();
    for (const auto& cell : p.matrix.row(i)) row.push_back(cell_to_json(cell));
    matrix.push_back(std::move(row));
  }
  doc["matrix"] = std::move(matrix);

  if (p.subjective_source == SubjectiveSource::ExpertVectors) {
    doc["subjective_weights"] = {{"experts", p.expert_vectors}};
  } else {
    json intervals = json::array();
    for (const auto& a : p.alpha) intervals.push_back({a.lo, a.hi});
    doc["subjective_weights"] = {{"intervals", std::move(intervals)}};
  }

  json prefs = json::array();
  for (const auto& q : p.preferences) prefs.push_back(q.components());
  doc["preferences"] = std::move(prefs);

  json params = json::object();
  if (p.explicit_settings.contains("rho")) params["rho"] = p.params.rho;
  if (p.explicit_settings.contains("theta_plus")) params["theta_plus"] = p.params.theta_plus;
  if (p.explicit_settings.contains("theta_minus")) params["theta_minus"] = p.params.theta_minus;
  if (p.explicit_settings.contains("borda_weights")) params["borda_weights"] = p.borda.method_weights;
  if (p.explicit_settings.contains("tie_break")) params["tie_break"] = std::string(to_string(p.borda.tie_break));
  if (!params.empty()) doc["params"] = std::move(params);

  if (p.explicit_settings.contains("linguistic_aliases")) doc["linguistic_aliases"] = p.aliases;
  return doc;
}

DecisionProblem parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("malformed problem document at byte {}: {}", e.byte, e.what()));
  }
  return problem_from_json(doc);
}

DecisionProblem parse_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open problem file '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_problem_text(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace greyrel
