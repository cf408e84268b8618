#include "greyrel/grey_core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace greyrel {

namespace {

constexpr std::array<std::string_view, 11> kLabels = {
    "extremely low",      "very low", "low",       "comparatively low",
    "a little low",       "general",  "a little high",
    "comparatively high", "high",     "very high", "extremely high",
};

constexpr std::array<Triangle, 11> kTriangles = {{
    {0.0, 0.0, 0.1},
    {0.0, 0.1, 0.2},
    {0.1, 0.2, 0.3},
    {0.2, 0.3, 0.4},
    {0.3, 0.4, 0.5},
    {0.4, 0.5, 0.6},
    {0.5, 0.6, 0.7},
    {0.6, 0.7, 0.8},
    {0.7, 0.8, 0.9},
    {0.8, 0.9, 1.0},
    {0.9, 1.0, 1.0},
}};

std::size_t slot(int index) { return static_cast<std::size_t>(index - LinguisticTerm::kMinIndex); }

bool is_ordered(const std::array<double, 4>& c) {
  return c[0] <= c[1] && c[1] <= c[2] && c[2] <= c[3];
}

}  // namespace

GeneralizedValue::GeneralizedValue(double a1, double a2, double a3, double a4)
    : GeneralizedValue(std::array<double, 4>{a1, a2, a3, a4}) {}

GeneralizedValue::GeneralizedValue(const std::array<double, 4>& components) : c_(components) {
  for (double v : c_) {
    if (!std::isfinite(v)) throw ValidationError("generalized value has a non-finite component");
  }
  if (!is_ordered(c_)) {
    throw ValidationError(fmt::format("generalized value ({}) is not ascending", fmt::join(c_, ", ")));
  }
}

GeneralizedValue GeneralizedValue::sorted(std::array<double, 4> components) {
  std::sort(components.begin(), components.end());
  return GeneralizedValue(components);
}

IntervalGreyNumber::IntervalGreyNumber(double lower, double upper) : lo(lower), hi(upper) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || lo > hi) {
    throw ValidationError(fmt::format("interval grey number [{}, {}] violates 0 <= lo <= hi", lo, hi));
  }
}

std::string canonicalize_label(std::string_view label) {
  std::string out;
  bool pending_space = false;
  for (char ch : label) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

LinguisticTerm LinguisticTerm::from_index(int index) {
  if (index < kMinIndex || index > kMaxIndex) {
    throw ValidationError(fmt::format("linguistic index {} outside [-5, 5]", index));
  }
  return LinguisticTerm(index);
}

const AliasMap& LinguisticTerm::default_aliases() {
  static const AliasMap aliases = {
      {"ordinary", "general"},
      {"rather low", "comparatively low"},
      {"rather high", "comparatively high"},
  };
  return aliases;
}

const std::array<std::string_view, 11>& LinguisticTerm::labels() { return kLabels; }

std::string_view LinguisticTerm::label() const { return kLabels[slot(index_)]; }

LinguisticTerm LinguisticTerm::from_label(std::string_view label, const AliasMap& aliases) {
  std::string key = canonicalize_label(label);
  // Aliases may point at other aliases; bound the chain by the map size.
  for (std::size_t hops = 0; hops <= aliases.size(); ++hops) {
    auto canonical = std::find(kLabels.begin(), kLabels.end(), key);
    if (canonical != kLabels.end()) {
      return LinguisticTerm(static_cast<int>(canonical - kLabels.begin()) + kMinIndex);
    }
    auto it = std::find_if(aliases.begin(), aliases.end(),
                           [&](const auto& kv) { return canonicalize_label(kv.first) == key; });
    if (it == aliases.end()) break;
    key = canonicalize_label(it->second);
  }

  std::vector<std::string> alias_list;
  for (const auto& [from, to] : aliases) alias_list.push_back(fmt::format("'{}' -> '{}'", from, to));
  throw ValidationError(fmt::format("unknown linguistic term '{}'; valid terms: {}; aliases: {}", label,
                                    fmt::join(kLabels, ", "),
                                    alias_list.empty() ? std::string("none") : fmt::format("{}", fmt::join(alias_list, ", "))));
}

RawCell make_real(double v) {
  RawCell cell = RealCell{v};
  validate(cell);
  return cell;
}

RawCell make_interval(double lo, double hi) {
  RawCell cell = IntervalCell{lo, hi};
  validate(cell);
  return cell;
}

RawCell make_linguistic(LinguisticTerm term) { return LinguisticCell{term}; }

RawCell make_uncertain_linguistic(LinguisticTerm lower, LinguisticTerm upper) {
  RawCell cell = UncertainLinguisticCell{lower, upper};
  validate(cell);
  return cell;
}

void validate(const RawCell& cell) {
  if (const auto* r = std::get_if<RealCell>(&cell)) {
    if (!std::isfinite(r->value)) throw ValidationError("real cell is not finite");
  } else if (const auto* iv = std::get_if<IntervalCell>(&cell)) {
    if (!std::isfinite(iv->lo) || !std::isfinite(iv->hi)) throw ValidationError("interval cell is not finite");
    if (iv->lo > iv->hi) {
      throw ValidationError(fmt::format("interval [{}, {}] has lower bound above upper bound", iv->lo, iv->hi));
    }
  } else if (const auto* ul = std::get_if<UncertainLinguisticCell>(&cell)) {
    if (ul->lower.index() > ul->upper.index()) {
      throw ValidationError(fmt::format("uncertain linguistic value ['{}', '{}'] has lower term above upper term",
                                        ul->lower.label(), ul->upper.label()));
    }
  }
}

Triangle term_to_triangle(LinguisticTerm term) { return kTriangles[slot(term.index())]; }

Triangle term_to_triangle(int index) { return term_to_triangle(LinguisticTerm::from_index(index)); }

GeneralizedValue lift(const RawCell& cell) {
  validate(cell);
  return std::visit(
      [](const auto& c) -> GeneralizedValue {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RealCell>) {
          return GeneralizedValue::real(c.value);
        } else if constexpr (std::is_same_v<T, IntervalCell>) {
          return {c.lo, c.lo, c.hi, c.hi};
        } else if constexpr (std::is_same_v<T, LinguisticCell>) {
          const Triangle t = term_to_triangle(c.term);
          return {t.lower, t.middle, t.middle, t.upper};
        } else {
          const Triangle lo = term_to_triangle(c.lower);
          const Triangle hi = term_to_triangle(c.upper);
          return {lo.lower, lo.middle, hi.middle, hi.upper};
        }
      },
      cell);
}

double distance(const GeneralizedValue& a, const GeneralizedValue& b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double diff = b[k] - a[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace greyrel
