#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greyrel/grey_core.hpp"

namespace greyrel {

enum class AttributeKind { Real, Interval, Linguistic, UncertainLinguistic };
enum class Direction { Cost, Benefit };

std::string_view to_string(AttributeKind kind);
std::string_view to_string(Direction direction);
/// Accepts "real", "interval", "linguistic", "uncertain-linguistic".
AttributeKind parse_attribute_kind(std::string_view text);
/// Accepts "cost", "benefit".
Direction parse_direction(std::string_view text);

struct AttributeSpec {
  std::string id;
  AttributeKind kind = AttributeKind::Real;
  Direction direction = Direction::Benefit;
};

/// The kind a cell belongs to.
AttributeKind kind_of(const RawCell& cell);

/// n plans x m attributes, every entry ordered and nonnegative.
using NormalizedMatrix = ValueMatrix;

/// Normalizes one attribute column.
///
/// Reals and intervals use sum normalization: benefit columns map [lo, hi]
/// to [lo / sum(hi), hi / sum(lo)], cost columns to
/// [(1/hi) / sum(1/lo), (1/lo) / sum(1/hi)], reals being degenerate
/// intervals. Linguistic triangles (L, M, U) are divided by sum(M);
/// trapezoids (L, a, b, U) by (sum a, sum a, sum b, sum b). Fuzzy columns
/// marked cost are mirrored on the index scale before normalizing as
/// benefit. Results are re-sorted into ascending order.
///
/// Throws ValidationError when a cell does not match `spec.kind`, and
/// DomainError for an empty column, a non-positive value in a cost column,
/// a negative value in a benefit column, or a zero denominator.
std::vector<GeneralizedValue> normalize_column(std::span<const RawCell> cells, const AttributeSpec& spec);

/// Column-wise normalization of an n x m raw matrix.
NormalizedMatrix normalize_matrix(const Grid<RawCell>& raw, std::span<const AttributeSpec> specs);

}  // namespace greyrel
