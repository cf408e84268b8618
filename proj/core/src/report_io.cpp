#include "greyrel/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace greyrel {

namespace {

using nlohmann::json;

std::string_view method_symbol(Method m) {
  switch (m) {
    case Method::Topsis: return "C";
    case Method::GreyApproach: return "C'";
    case Method::Membership: return "u";
    case Method::MaxEntropy: return "C''";
  }
  return "?";
}

std::string fixed(double v) { return fmt::format("{:.6f}", v); }

std::string tuple_text(const GeneralizedValue& v) {
  return fmt::format("{:>10.6f} {:>10.6f} {:>10.6f} {:>10.6f}", v[0], v[1], v[2], v[3]);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_num(double v) { return fmt::format("{}", v); }

std::size_t name_width(const std::vector<std::string>& names, std::size_t floor) {
  std::size_t w = floor;
  for (const auto& s : names) w = std::max(w, s.size());
  return w;
}

std::vector<std::string> attribute_ids(const DecisionProblem& p) {
  std::vector<std::string> ids;
  for (const auto& a : p.attributes) ids.push_back(a.id);
  return ids;
}

void text_matrix(std::string& out, const std::string& title, const ValueMatrix& m, const DecisionProblem& p) {
  const std::size_t pw = name_width(p.plans, 4);
  const std::size_t aw = name_width(attribute_ids(p), 9);
  out += fmt::format("\n{}\n", title);
  out += fmt::format("  {:<{}}  {:<{}}  {:>10} {:>10} {:>10} {:>10}\n", "plan", pw, "attribute", aw, "(1)", "(2)",
                     "(3)", "(4)");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out += fmt::format("  {:<{}}  {:<{}}  {}\n", p.plans[i], pw, p.attributes[j].id, aw, tuple_text(m(i, j)));
    }
  }
}

std::string emit_text(const Report& r) {
  const DecisionProblem& p = r.problem;
  const std::size_t pw = name_width(p.plans, 4);
  const std::size_t aw = name_width(attribute_ids(p), 9);
  std::string out;

  out += "greyrel decision report\n";
  out += fmt::format("plans: {}  attributes: {}\n", p.plan_count(), p.attribute_count());
  out += "\nSettings\n";
  for (const auto& [k, v] : r.settings) out += fmt::format("  {:<26} {}\n", k, v);
  if (!r.warnings.empty()) {
    out += "\nWarnings\n";
    for (const auto& w : r.warnings) out += fmt::format("  - {}\n", w);
  }

  text_matrix(out, "Normalized decision matrix X", r.normalized, p);

  out += "\nAttribute weights\n";
  out += fmt::format("  {:<{}}  {:>9} {:>9}  {:>9}  {:>9} {:>9} {:>9} {:>9}  {:>9} {:>9}  {:>9} {:>9}\n", "attribute",
                     aw, "alpha.lo", "alpha.hi", "beta.opt", "ent(1)", "ent(2)", "ent(3)", "ent(4)", "beta.lo",
                     "beta.hi", "w.lo", "w.hi");
  const WeightBundle& wb = r.weights;
  for (std::size_t j = 0; j < p.attribute_count(); ++j) {
    out += fmt::format(
        "  {:<{}}  {:>9.6f} {:>9.6f}  {:>9.6f}  {:>9.6f} {:>9.6f} {:>9.6f} {:>9.6f}  {:>9.6f} {:>9.6f}  {:>9.6f} {:>9.6f}\n",
        p.attributes[j].id, aw, wb.alpha[j].lo, wb.alpha[j].hi, wb.beta_opt[j], wb.beta_ent[0][j], wb.beta_ent[1][j],
        wb.beta_ent[2][j], wb.beta_ent[3][j], wb.beta_interval[j].lo, wb.beta_interval[j].hi, wb.w_final[j].lo,
        wb.w_final[j].hi);
  }

  text_matrix(out, "Weighted decision matrix Y", r.weighted, p);

  out += "\nIdeal vectors\n";
  out += fmt::format("  {:<{}}  {:<8}  {:>10} {:>10} {:>10} {:>10}\n", "attribute", aw, "ideal", "(1)", "(2)", "(3)",
                     "(4)");
  for (std::size_t j = 0; j < p.attribute_count(); ++j) {
    out += fmt::format("  {:<{}}  {:<8}  {}\n", p.attributes[j].id, aw, "positive",
                       tuple_text(r.evaluation.ideals.positive[j]));
    out += fmt::format("  {:<{}}  {:<8}  {}\n", p.attributes[j].id, aw, "negative",
                       tuple_text(r.evaluation.ideals.negative[j]));
  }

  out += "\nGrey incidence degrees\n";
  out += fmt::format("  {:<{}}  {:>10} {:>10}\n", "plan", pw, "G+", "G-");
  for (std::size_t i = 0; i < p.plan_count(); ++i) {
    out += fmt::format("  {:<{}}  {:>10.6f} {:>10.6f}\n", p.plans[i], pw, r.evaluation.g_plus[i],
                       r.evaluation.g_minus[i]);
  }
  out += fmt::format("  maximum-entropy weights: beta1 = {}, beta2 = {}\n", fixed(r.evaluation.betas.beta1),
                     fixed(r.evaluation.betas.beta2));

  for (const auto& ms : r.evaluation.methods) {
    out += fmt::format("\nMethod {} ({})\n", to_string(ms.method), method_symbol(ms.method));
    out += fmt::format("  {:<{}}  {:>10} {:>5}\n", "plan", pw, "score", "rank");
    for (std::size_t i = 0; i < p.plan_count(); ++i) {
      out += fmt::format("  {:<{}}  {:>10.6f} {:>5}\n", p.plans[i], pw, ms.scores[i], ms.ranks[i]);
    }
  }

  out += "\nWeighted Borda\n";
  out += fmt::format("  {:<{}}  {:>10} {:>10} {:>5}\n", "plan", pw, "borda", "tie-break", "rank");
  for (std::size_t i = 0; i < p.plan_count(); ++i) {
    out += fmt::format("  {:<{}}  {:>10.6f} {:>10.6f} {:>5}\n", p.plans[i], pw, r.ranking.borda_scores[i],
                       r.ranking.tie_break_scores[i], r.ranking.final_ranks[i]);
  }

  out += "\nRankings\n";
  for (const auto& ms : r.evaluation.methods) {
    out += fmt::format("  {:<14} {}\n", to_string(ms.method), format_order(p.plans, ms.ranks));
  }
  out += fmt::format("  {:<14} {}\n", "final", format_final_order(r));
  return out;
}

void csv_section(std::string& out, std::string_view name, std::string_view header) {
  if (!out.empty()) out += "\n";
  out += fmt::format("# {}\n{}\n", name, header);
}

void csv_matrix(std::string& out, std::string_view name, const ValueMatrix& m, const DecisionProblem& p) {
  csv_section(out, name, "plan,attribute,v1,v2,v3,v4");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& v = m(i, j);
      out += fmt::format("{},{},{},{},{},{}\n", csv_field(p.plans[i]), csv_field(p.attributes[j].id), csv_num(v[0]),
                         csv_num(v[1]), csv_num(v[2]), csv_num(v[3]));
    }
  }
}

std::string emit_csv(const Report& r) {
  const DecisionProblem& p = r.problem;
  std::string out;

  csv_section(out, "settings", "setting,value");
  for (const auto& [k, v] : r.settings) out += fmt::format("{},{}\n", csv_field(k), csv_field(v));
  csv_section(out, "warnings", "warning");
  for (const auto& w : r.warnings) out += csv_field(w) + "\n";

  csv_matrix(out, "normalized", r.normalized, p);

  csv_section(out, "weights",
              "attribute,alpha_lo,alpha_hi,beta_opt,beta_ent1,beta_ent2,beta_ent3,beta_ent4,beta_lo,beta_hi,w_lo,w_hi");
  const WeightBundle& wb = r.weights;
  for (std::size_t j = 0; j < p.attribute_count(); ++j) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(p.attributes[j].id), csv_num(wb.alpha[j].lo),
                       csv_num(wb.alpha[j].hi), csv_num(wb.beta_opt[j]), csv_num(wb.beta_ent[0][j]),
                       csv_num(wb.beta_ent[1][j]), csv_num(wb.beta_ent[2][j]), csv_num(wb.beta_ent[3][j]),
                       csv_num(wb.beta_interval[j].lo), csv_num(wb.beta_interval[j].hi), csv_num(wb.w_final[j].lo),
                       csv_num(wb.w_final[j].hi));
  }

  csv_matrix(out, "weighted", r.weighted, p);

  csv_section(out, "ideals", "attribute,ideal,v1,v2,v3,v4");
  for (std::size_t j = 0; j < p.attribute_count(); ++j) {
    for (const auto& [label, vec] : {std::pair{"positive", &r.evaluation.ideals.positive},
                                     std::pair{"negative", &r.evaluation.ideals.negative}}) {
      const auto& v = (*vec)[j];
      out += fmt::format("{},{},{},{},{},{}\n", csv_field(p.attributes[j].id), label, csv_num(v[0]), csv_num(v[1]),
                         csv_num(v[2]), csv_num(v[3]));
    }
  }

  csv_section(out, "incidence", "plan,g_plus,g_minus");
  for (std::size_t i = 0; i < p.plan_count(); ++i) {
    out += fmt::format("{},{},{}\n", csv_field(p.plans[i]), csv_num(r.evaluation.g_plus[i]),
                       csv_num(r.evaluation.g_minus[i]));
  }
  csv_section(out, "max-entropy-weights", "beta1,beta2");
  out += fmt::format("{},{}\n", csv_num(r.evaluation.betas.beta1), csv_num(r.evaluation.betas.beta2));

  for (const auto& ms : r.evaluation.methods) {
    csv_section(out, to_string(ms.method), "plan,score,rank");
    for (std::size_t i = 0; i < p.plan_count(); ++i) {
      out += fmt::format("{},{},{}\n", csv_field(p.plans[i]), csv_num(ms.scores[i]), ms.ranks[i]);
    }
  }

  csv_section(out, "borda", "plan,borda,tie_break,rank");
  for (std::size_t i = 0; i < p.plan_count(); ++i) {
    out += fmt::format("{},{},{},{}\n", csv_field(p.plans[i]), csv_num(r.ranking.borda_scores[i]),
                       csv_num(r.ranking.tie_break_scores[i]), r.ranking.final_ranks[i]);
  }

  csv_section(out, "final", "position,plan,rank");
  for (std::size_t pos = 0; pos < r.ranking.order.size(); ++pos) {
    const std::size_t plan = r.ranking.order[pos];
    out += fmt::format("{},{},{}\n", pos + 1, csv_field(p.plans[plan]), r.ranking.final_ranks[plan]);
  }
  return out;
}

json matrix_json(const ValueMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& v : m.row(i)) row.push_back(v.components());
    rows.push_back(std::move(row));
  }
  return rows;
}

json grid_json(const Grid<double>& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const auto row = g.row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

json intervals_json(const std::vector<IntervalGreyNumber>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back({x.lo, x.hi});
  return out;
}

template <typename T>
T get_at(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(fmt::format("report: missing field '{}'", key));
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(fmt::format("report: field '{}': {}", key, e.what()));
  }
}

const json& child(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ValidationError(fmt::format("report: missing field '{}'", key));
  return *it;
}

ValueMatrix matrix_from(const json& rows, std::size_t n, std::size_t m, const char* what) {
  const auto data = rows.get<std::vector<std::vector<std::array<double, 4>>>>();
  if (data.size() != n) throw ValidationError(fmt::format("report: {} has {} rows, expected {}", what, data.size(), n));
  ValueMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (data[i].size() != m) throw ValidationError(fmt::format("report: {} row {} has wrong length", what, i + 1));
    for (std::size_t j = 0; j < m; ++j) out(i, j) = GeneralizedValue(data[i][j]);
  }
  return out;
}

Grid<double> grid_from(const json& rows, std::size_t n, std::size_t m, const char* what) {
  const auto data = rows.get<std::vector<std::vector<double>>>();
  if (data.size() != n) throw ValidationError(fmt::format("report: {} has {} rows, expected {}", what, data.size(), n));
  Grid<double> out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (data[i].size() != m) throw ValidationError(fmt::format("report: {} row {} has wrong length", what, i + 1));
    for (std::size_t j = 0; j < m; ++j) out(i, j) = data[i][j];
  }
  return out;
}

std::vector<IntervalGreyNumber> intervals_from(const json& v) {
  std::vector<IntervalGreyNumber> out;
  for (const auto& pair : v.get<std::vector<std::array<double, 2>>>()) out.emplace_back(pair[0], pair[1]);
  return out;
}

std::vector<GeneralizedValue> tuples_from(const json& v) {
  std::vector<GeneralizedValue> out;
  for (const auto& t : v.get<std::vector<std::array<double, 4>>>()) out.emplace_back(t);
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::Text;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json-report" || text == "json") return ReportFormat::Json;
  throw ValidationError(fmt::format("unknown report format '{}' (expected text, csv, json-report)", text));
}

std::string format_order(const std::vector<std::string>& plans, std::span<const int> ranks) {
  std::vector<std::size_t> idx(ranks.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
  std::string out;
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    if (pos > 0) out += ranks[idx[pos]] == ranks[idx[pos - 1]] ? " = " : " > ";
    out += plans[idx[pos]];
  }
  return out;
}

std::string format_final_order(const Report& report) {
  std::string out;
  const auto& order = report.ranking.order;
  const auto& ranks = report.ranking.final_ranks;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0) out += ranks[order[pos]] == ranks[order[pos - 1]] ? " = " : " > ";
    out += report.problem.plans[order[pos]];
  }
  return out;
}

std::string emit_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return emit_text(report);
    case ReportFormat::Csv: return emit_csv(report);
    case ReportFormat::Json: return report_to_json(report).dump(2) + "\n";
  }
  return {};
}

void write_report(const Report& report, ReportFormat format, const std::filesystem::path& path) {
  const std::string bytes = emit_report(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(fmt::format("failed writing report to '{}'", path.string()));
}

json report_to_json(const Report& r) {
  json doc;
  doc["kind"] = "greyrel-report";
  doc["report_schema"] = kReportSchemaVersion;
  doc["problem"] = problem_to_json(r.problem);

  json settings = json::array();
  for (const auto& [k, v] : r.settings) settings.push_back({{"name", k}, {"value", v}});
  doc["settings"] = std::move(settings);
  doc["warnings"] = r.warnings;

  doc["normalized"] = matrix_json(r.normalized);
  doc["weights"] = {
      {"alpha", intervals_json(r.weights.alpha)},
      {"beta_opt", r.weights.beta_opt},
      {"beta_ent", r.weights.beta_ent},
      {"beta_interval", intervals_json(r.weights.beta_interval)},
      {"w_final", intervals_json(r.weights.w_final)},
  };
  doc["weighted"] = matrix_json(r.weighted);

  json positive = json::array();
  json negative = json::array();
  for (const auto& v : r.evaluation.ideals.positive) positive.push_back(v.components());
  for (const auto& v : r.evaluation.ideals.negative) negative.push_back(v.components());
  doc["ideals"] = {{"positive", std::move(positive)}, {"negative", std::move(negative)}};

  doc["incidence"] = {
      {"coefficients_plus", grid_json(r.evaluation.coefficients_plus)},
      {"coefficients_minus", grid_json(r.evaluation.coefficients_minus)},
      {"g_plus", r.evaluation.g_plus},
      {"g_minus", r.evaluation.g_minus},
      {"beta1", r.evaluation.betas.beta1},
      {"beta2", r.evaluation.betas.beta2},
  };

  json methods = json::array();
  for (const auto& ms : r.evaluation.methods) {
    methods.push_back({{"method", std::string(to_string(ms.method))}, {"scores", ms.scores}, {"ranks", ms.ranks}});
  }
  doc["methods"] = std::move(methods);

  json order = json::array();
  for (std::size_t plan : r.ranking.order) order.push_back(r.problem.plans[plan]);
  doc["borda"] = {
      {"scores", r.ranking.borda_scores},
      {"tie_break_scores", r.ranking.tie_break_scores},
      {"final_ranks", r.ranking.final_ranks},
      {"order", std::move(order)},
  };
  return doc;
}

Report report_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("kind", std::string{}) != "greyrel-report") {
    throw ValidationError("report: not a greyrel report document");
  }
  if (get_at<int>(doc, "report_schema") != kReportSchemaVersion) {
    throw ValidationError("report: unsupported report_schema");
  }

  Report r;
  r.problem = problem_from_json(child(doc, "problem"));
  const std::size_t n = r.problem.plan_count();
  const std::size_t m = r.problem.attribute_count();

  try {
    for (const auto& s : child(doc, "settings")) {
      r.settings.emplace_back(s.at("name").get<std::string>(), s.at("value").get<std::string>());
    }
    r.warnings = get_at<std::vector<std::string>>(doc, "warnings");

    r.normalized = matrix_from(child(doc, "normalized"), n, m, "normalized");

    const json& w = child(doc, "weights");
    r.weights.alpha = intervals_from(child(w, "alpha"));
    r.weights.beta_opt = get_at<std::vector<double>>(w, "beta_opt");
    r.weights.beta_ent = get_at<std::array<std::vector<double>, 4>>(w, "beta_ent");
    r.weights.beta_interval = intervals_from(child(w, "beta_interval"));
    r.weights.w_final = intervals_from(child(w, "w_final"));
    r.weights.warnings = r.warnings;

    r.weighted = matrix_from(child(doc, "weighted"), n, m, "weighted");

    const json& ideals = child(doc, "ideals");
    r.evaluation.ideals.positive = tuples_from(child(ideals, "positive"));
    r.evaluation.ideals.negative = tuples_from(child(ideals, "negative"));

    const json& inc = child(doc, "incidence");
    r.evaluation.coefficients_plus = grid_from(child(inc, "coefficients_plus"), n, m, "coefficients_plus");
    r.evaluation.coefficients_minus = grid_from(child(inc, "coefficients_minus"), n, m, "coefficients_minus");
    r.evaluation.g_plus = get_at<std::vector<double>>(inc, "g_plus");
    r.evaluation.g_minus = get_at<std::vector<double>>(inc, "g_minus");
    r.evaluation.betas = {get_at<double>(inc, "beta1"), get_at<double>(inc, "beta2")};

    const json& methods = child(doc, "methods");
    if (!methods.is_array() || methods.size() != 4) throw ValidationError("report: expected 4 method entries");
    for (std::size_t k = 0; k < 4; ++k) {
      MethodScores& ms = r.evaluation.methods[k];
      ms.method = parse_method(get_at<std::string>(methods[k], "method"));
      ms.scores = get_at<std::vector<double>>(methods[k], "scores");
      ms.ranks = get_at<std::vector<int>>(methods[k], "ranks");
    }

    const json& borda = child(doc, "borda");
    r.ranking.borda_scores = get_at<std::vector<double>>(borda, "scores");
    r.ranking.tie_break_scores = get_at<std::vector<double>>(borda, "tie_break_scores");
    r.ranking.final_ranks = get_at<std::vector<int>>(borda, "final_ranks");
    for (const auto& name : get_at<std::vector<std::string>>(borda, "order")) {
      auto it = std::find(r.problem.plans.begin(), r.problem.plans.end(), name);
      if (it == r.problem.plans.end()) throw ValidationError(fmt::format("report: unknown plan '{}' in order", name));
      r.ranking.order.push_back(static_cast<std::size_t>(it - r.problem.plans.begin()));
    }
    r.ranking.per_method = r.evaluation.methods;
  } catch (const json::exception& e) {
    throw ValidationError(fmt::format("report: {}", e.what()));
  }
  return r;
}

}  // namespace greyrel
