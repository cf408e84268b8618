#pragma once

// Domain values shared by every stage: the 4-tuple generalized attribute
// value, interval grey numbers, the 11-term linguistic scale, raw
// mixed-type cells, and the 4-D Euclidean distance.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "greyrel/error.hpp"

namespace greyrel {

/// Ordered 4-tuple (a1 <= a2 <= a3 <= a4) with finite components.
///
/// Reals are (v,v,v,v), intervals (lo,lo,hi,hi), linguistic terms
/// (L,M,M,U) and uncertain linguistic terms (aL,aM,bM,bU). The shape is
/// descriptive only; normalization is free to collapse it.
class GeneralizedValue {
 public:
  constexpr GeneralizedValue() = default;

  /// Throws ValidationError unless the components are finite and ascending.
  GeneralizedValue(double a1, double a2, double a3, double a4);
  explicit GeneralizedValue(const std::array<double, 4>& components);

  /// Builds a value from possibly unordered components by sorting them.
  static GeneralizedValue sorted(std::array<double, 4> components);

  static GeneralizedValue real(double v) { return {v, v, v, v}; }

  double operator[](std::size_t k) const { return c_[k]; }
  const std::array<double, 4>& components() const { return c_; }

  friend bool operator==(const GeneralizedValue&, const GeneralizedValue&) = default;

 private:
  std::array<double, 4> c_{0.0, 0.0, 0.0, 0.0};
};

/// Closed interval [lo, hi] with 0 <= lo <= hi.
struct IntervalGreyNumber {
  double lo = 0.0;
  double hi = 0.0;

  IntervalGreyNumber() = default;
  IntervalGreyNumber(double lower, double upper);

  static IntervalGreyNumber point(double v) { return {v, v}; }
  bool contains(double v, double tol = 0.0) const { return v >= lo - tol && v <= hi + tol; }

  friend bool operator==(const IntervalGreyNumber&, const IntervalGreyNumber&) = default;
};

struct Triangle {
  double lower;
  double middle;
  double upper;
};

/// Alias label -> canonical (or other alias) label. Keys are matched after
/// lower-casing and collapsing whitespace.
using AliasMap = std::map<std::string, std::string>;

/// One of the 11 terms S(-5) .. S(5).
class LinguisticTerm {
 public:
  static constexpr int kMinIndex = -5;
  static constexpr int kMaxIndex = 5;

  /// Throws ValidationError when index is outside [-5, 5].
  static LinguisticTerm from_index(int index);

  /// Resolves a label (case-insensitive) through `aliases` and then the
  /// canonical scale. Unknown labels raise a ValidationError listing every
  /// valid term and alias.
  static LinguisticTerm from_label(std::string_view label, const AliasMap& aliases = default_aliases());

  /// Aliases used when a problem does not supply its own:
  /// "ordinary" -> "general", "rather low/high" -> "comparatively low/high".
  static const AliasMap& default_aliases();

  /// Canonical labels in index order.
  static const std::array<std::string_view, 11>& labels();

  int index() const { return index_; }
  std::string_view label() const;

  /// The term mirrored on the index scale (index -> -index).
  LinguisticTerm complement() const { return LinguisticTerm(-index_); }

  friend bool operator==(const LinguisticTerm&, const LinguisticTerm&) = default;
  friend auto operator<=>(const LinguisticTerm&, const LinguisticTerm&) = default;

 private:
  explicit LinguisticTerm(int index) : index_(index) {}
  int index_ = 0;
};

/// Lower-cases and collapses internal whitespace.
std::string canonicalize_label(std::string_view label);

struct RealCell {
  double value;
};

struct IntervalCell {
  double lo;
  double hi;
};

struct LinguisticCell {
  LinguisticTerm term;
};

struct UncertainLinguisticCell {
  LinguisticTerm lower;
  LinguisticTerm upper;
};

using RawCell = std::variant<RealCell, IntervalCell, LinguisticCell, UncertainLinguisticCell>;

RawCell make_real(double v);
/// Throws ValidationError when lo > hi or either bound is not finite.
RawCell make_interval(double lo, double hi);
RawCell make_linguistic(LinguisticTerm term);
/// Throws ValidationError when lower.index() > upper.index().
RawCell make_uncertain_linguistic(LinguisticTerm lower, LinguisticTerm upper);

/// Checks the RawCell invariants; throws ValidationError.
void validate(const RawCell& cell);

/// Fixed triangular fuzzy number of a scale term.
Triangle term_to_triangle(LinguisticTerm term);
Triangle term_to_triangle(int index);

GeneralizedValue lift(const RawCell& cell);

/// 4-D Euclidean distance.
double distance(const GeneralizedValue& a, const GeneralizedValue& b);

/// Row-major n x m grid.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ValueMatrix = Grid<GeneralizedValue>;

}  // namespace greyrel
