#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

using Range = std::pair<Rational, Rational>;

/// Degrees of dependence, all in [0, 1]. Pairs are stored with the lower
/// channel first.
struct DependenceSpec {
  std::map<std::pair<Channel, Channel>, Rational> pairwise;
  std::optional<Rational> global;

  void set_pair(Channel a, Channel b, const Rational& d);
};

struct ComponentBounds {
  std::array<Range, 3> range;

  const Range& at(Channel c) const { return range[static_cast<int>(c)]; }
};

ComponentBounds make_bounds(Range t, Range i, Range f);

/// 2 - d
Rational pair_sum_bound(const Rational& d);
/// 3 - 2d
Rational triple_sum_bound_global(const Rational& d);
/// 3 - min{d_ti, d_if, d_ft}; looser than max_component_sum.
Rational triple_sum_bound_pairwise(const Rational& d_ti, const Rational& d_if, const Rational& d_ft);

/// Exact maximum of t + i + f over [0, 1]^3 with x + y <= 2 - d for every
/// constrained pair, by vertex enumeration.
Rational max_component_sum(const DependenceSpec& spec);

/// n subcomponents; each fully dependent group of size m counts as 1, each
/// listed pair with degree d counts as 2 - d.
Rational refined_sum_bound(std::size_t n, const std::vector<std::size_t>& groups,
                           const std::vector<Rational>& pair_degrees = {});

Range off_sum_range_global(const ComponentBounds& b, const Rational& d);
Range off_pair_range(const Rational& x_lo, const Rational& x_hi, const Rational& y_lo, const Rational& y_hi,
                     const Rational& d);
/// Fully dependent pair: [min of lows, max of highs].
Range dependent_pair_off_bound(const Rational& x_lo, const Rational& x_hi, const Rational& y_lo, const Rational& y_hi);
/// Fully dependent pair plus an independent third channel.
Range dependent_pair_off_bound(const Rational& x_lo, const Rational& x_hi, const Rational& y_lo, const Rational& y_hi,
                               const Rational& z_lo, const Rational& z_hi);

}  // namespace neutro
