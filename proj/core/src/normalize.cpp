#include "greyrel/normalize.hpp"

#include <cmath>

#include <fmt/format.h>

namespace greyrel {

namespace {

struct Bounds {
  double lo;
  double hi;
};

Bounds crisp_bounds(const RawCell& cell) {
  if (const auto* r = std::get_if<RealCell>(&cell)) return {r->value, r->value};
  const auto& iv = std::get<IntervalCell>(cell);
  return {iv.lo, iv.hi};
}

double checked_denominator(double sum, const AttributeSpec& spec) {
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw DomainError(fmt::format("attribute '{}': normalization denominator is {}", spec.id, sum));
  }
  return sum;
}

std::vector<GeneralizedValue> normalize_crisp(std::span<const RawCell> cells, const AttributeSpec& spec) {
  std::vector<Bounds> bounds;
  bounds.reserve(cells.size());
  for (const auto& cell : cells) bounds.push_back(crisp_bounds(cell));

  std::vector<GeneralizedValue> out;
  out.reserve(cells.size());

  if (spec.direction == Direction::Cost) {
    double inv_lo_sum = 0.0;
    double inv_hi_sum = 0.0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (!(bounds[i].lo > 0.0)) {
        throw DomainError(fmt::format("attribute '{}' (cost), plan {}: value {} is not strictly positive", spec.id,
                                      i + 1, bounds[i].lo));
      }
      inv_lo_sum += 1.0 / bounds[i].lo;
      inv_hi_sum += 1.0 / bounds[i].hi;
    }
    checked_denominator(inv_lo_sum, spec);
    checked_denominator(inv_hi_sum, spec);
    for (const auto& b : bounds) {
      const double lower = (1.0 / b.hi) / inv_lo_sum;
      const double upper = (1.0 / b.lo) / inv_hi_sum;
      out.push_back(GeneralizedValue::sorted({lower, lower, upper, upper}));
    }
    return out;
  }

  double lo_sum = 0.0;
  double hi_sum = 0.0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i].lo < 0.0) {
      throw DomainError(
          fmt::format("attribute '{}', plan {}: negative value {} is not supported", spec.id, i + 1, bounds[i].lo));
    }
    lo_sum += bounds[i].lo;
    hi_sum += bounds[i].hi;
  }
  checked_denominator(lo_sum, spec);
  checked_denominator(hi_sum, spec);
  for (const auto& b : bounds) {
    const double lower = b.lo / hi_sum;
    const double upper = b.hi / lo_sum;
    out.push_back(GeneralizedValue::sorted({lower, lower, upper, upper}));
  }
  return out;
}

std::vector<GeneralizedValue> normalize_triangles(std::span<const RawCell> cells, const AttributeSpec& spec) {
  std::vector<Triangle> triangles;
  triangles.reserve(cells.size());
  double middle_sum = 0.0;
  for (const auto& cell : cells) {
    LinguisticTerm term = std::get<LinguisticCell>(cell).term;
    if (spec.direction == Direction::Cost) term = term.complement();
    triangles.push_back(term_to_triangle(term));
    middle_sum += triangles.back().middle;
  }
  checked_denominator(middle_sum, spec);

  std::vector<GeneralizedValue> out;
  out.reserve(cells.size());
  for (const auto& t : triangles) {
    const double mid = t.middle / middle_sum;
    out.push_back(GeneralizedValue::sorted({t.lower / middle_sum, mid, mid, t.upper / middle_sum}));
  }
  return out;
}

std::vector<GeneralizedValue> normalize_trapezoids(std::span<const RawCell> cells, const AttributeSpec& spec) {
  std::vector<std::array<double, 4>> traps;
  traps.reserve(cells.size());
  double inner_lo_sum = 0.0;
  double inner_hi_sum = 0.0;
  for (const auto& cell : cells) {
    const auto& ul = std::get<UncertainLinguisticCell>(cell);
    RawCell lifted_cell = ul;
    if (spec.direction == Direction::Cost) {
      lifted_cell = UncertainLinguisticCell{ul.upper.complement(), ul.lower.complement()};
    }
    traps.push_back(lift(lifted_cell).components());
    inner_lo_sum += traps.back()[1];
    inner_hi_sum += traps.back()[2];
  }
  checked_denominator(inner_lo_sum, spec);
  checked_denominator(inner_hi_sum, spec);

  std::vector<GeneralizedValue> out;
  out.reserve(cells.size());
  for (const auto& t : traps) {
    out.push_back(GeneralizedValue::sorted(
        {t[0] / inner_lo_sum, t[1] / inner_lo_sum, t[2] / inner_hi_sum, t[3] / inner_hi_sum}));
  }
  return out;
}

}  // namespace

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::Real: return "real";
    case AttributeKind::Interval: return "interval";
    case AttributeKind::Linguistic: return "linguistic";
    case AttributeKind::UncertainLinguistic: return "uncertain-linguistic";
  }
  return "?";
}

std::string_view to_string(Direction direction) { return direction == Direction::Cost ? "cost" : "benefit"; }

AttributeKind parse_attribute_kind(std::string_view text) {
  if (text == "real") return AttributeKind::Real;
  if (text == "interval") return AttributeKind::Interval;
  if (text == "linguistic") return AttributeKind::Linguistic;
  if (text == "uncertain-linguistic") return AttributeKind::UncertainLinguistic;
  throw ValidationError(fmt::format(
      "unknown attribute kind '{}' (expected real, interval, linguistic, uncertain-linguistic)", text));
}

Direction parse_direction(std::string_view text) {
  if (text == "cost") return Direction::Cost;
  if (text == "benefit") return Direction::Benefit;
  throw ValidationError(fmt::format("unknown attribute direction '{}' (expected cost or benefit)", text));
}

AttributeKind kind_of(const RawCell& cell) {
  switch (cell.index()) {
    case 0: return AttributeKind::Real;
    case 1: return AttributeKind::Interval;
    case 2: return AttributeKind::Linguistic;
    default: return AttributeKind::UncertainLinguistic;
  }
}

std::vector<GeneralizedValue> normalize_column(std::span<const RawCell> cells, const AttributeSpec& spec) {
  if (cells.empty()) throw DomainError(fmt::format("attribute '{}': empty column", spec.id));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    validate(cells[i]);
    if (kind_of(cells[i]) != spec.kind) {
      throw ValidationError(fmt::format("attribute '{}', plan {}: {} cell in a {} column", spec.id, i + 1,
                                        to_string(kind_of(cells[i])), to_string(spec.kind)));
    }
  }

  switch (spec.kind) {
    case AttributeKind::Real:
    case AttributeKind::Interval: return normalize_crisp(cells, spec);
    case AttributeKind::Linguistic: return normalize_triangles(cells, spec);
    case AttributeKind::UncertainLinguistic: return normalize_trapezoids(cells, spec);
  }
  return {};
}

NormalizedMatrix normalize_matrix(const Grid<RawCell>& raw, std::span<const AttributeSpec> specs) {
  if (raw.cols() != specs.size()) {
    throw ValidationError(
        fmt::format("matrix has {} columns but {} attributes are declared", raw.cols(), specs.size()));
  }
  if (raw.rows() == 0 || raw.cols() == 0) throw DomainError("decision matrix is empty");

  NormalizedMatrix out(raw.rows(), raw.cols());
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    const std::vector<RawCell> column = raw.column(j);
    const std::vector<GeneralizedValue> normalized = normalize_column(column, specs[j]);
    for (std::size_t i = 0; i < raw.rows(); ++i) out(i, j) = normalized[i];
  }
  return out;
}

}  // namespace greyrel
