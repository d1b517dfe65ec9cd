#include "neutro/dependence.hpp"

#include <algorithm>

namespace neutro {

namespace {

void check_degree(const Rational& d) {
  if (d < 0 || d > 1) throw ValidationError("degree of dependence " + to_string(d) + " outside [0, 1]");
}

void check_range(const Range& r) {
  if (r.first > r.second) throw ValidationError("bounds with low " + to_string(r.first) + " above high " + to_string(r.second));
}

}  // namespace

void DependenceSpec::set_pair(Channel a, Channel b, const Rational& d) {
  check_degree(d);
  if (a == b) throw ValidationError("a dependence pair needs two distinct channels");
  if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
  pairwise[{a, b}] = d;
}

ComponentBounds make_bounds(Range t, Range i, Range f) {
  ComponentBounds b{{std::move(t), std::move(i), std::move(f)}};
  for (const auto& r : b.range) check_range(r);
  return b;
}

Rational pair_sum_bound(const Rational& d) {
  check_degree(d);
  return 2 - d;
}

Rational triple_sum_bound_global(const Rational& d) {
  check_degree(d);
  return 3 - 2 * d;
}

Rational triple_sum_bound_pairwise(const Rational& d_ti, const Rational& d_if, const Rational& d_ft) {
  for (const auto* d : {&d_ti, &d_if, &d_ft}) check_degree(*d);
  return 3 - std::min({d_ti, d_if, d_ft});
}

namespace {

struct HalfSpace {
  std::array<Rational, 3> a;
  Rational b;  // a . x <= b
};

std::optional<std::array<Rational, 3>> solve3(const std::array<const HalfSpace*, 3>& rows) {
  std::array<std::array<Rational, 4>, 3> m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = rows[r]->a[c];
    m[r][3] = rows[r]->b;
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int r = col; r < 3; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational k = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= k * m[col][c];
    }
  }
  return std::array<Rational, 3>{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

Rational max_component_sum(const DependenceSpec& spec) {
  std::vector<HalfSpace> hs;
  for (int k = 0; k < 3; ++k) {
    HalfSpace up{{0, 0, 0}, 1}, down{{0, 0, 0}, 0};
    up.a[k] = 1;
    down.a[k] = -1;
    hs.push_back(up);
    hs.push_back(down);
  }
  for (const auto& [pair, d] : spec.pairwise) {
    check_degree(d);
    HalfSpace h{{0, 0, 0}, 2 - d};
    h.a[static_cast<int>(pair.first)] = 1;
    h.a[static_cast<int>(pair.second)] = 1;
    hs.push_back(h);
  }
  std::optional<Rational> best;
  const std::size_t n = hs.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r) {
        const auto x = solve3({&hs[p], &hs[q], &hs[r]});
        if (!x) continue;
        const bool feasible = std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) {
          return h.a[0] * (*x)[0] + h.a[1] * (*x)[1] + h.a[2] * (*x)[2] <= h.b;
        });
        if (!feasible) continue;
        const Rational s = (*x)[0] + (*x)[1] + (*x)[2];
        if (!best || s > *best) best = s;
      }
  // the origin is always feasible, so some vertex exists
  return *best;
}

Rational refined_sum_bound(std::size_t n, const std::vector<std::size_t>& groups,
                           const std::vector<Rational>& pair_degrees) {
  std::size_t used = 2 * pair_degrees.size();
  Rational bound(static_cast<long long>(n));
  for (std::size_t m : groups) {
    if (m < 1) throw ValidationError("dependence group must be nonempty");
    used += m;
    bound -= Rational(static_cast<long long>(m) - 1);
  }
  for (const auto& d : pair_degrees) {
    check_degree(d);
    bound -= d;
  }
  if (used > n) throw ValidationError("dependence groups use more subcomponents than n");
  return bound;
}

Range off_sum_range_global(const ComponentBounds& b, const Rational& d) {
  check_degree(d);
  const auto& t = b.at(Channel::T);
  const auto& i = b.at(Channel::I);
  const auto& f = b.at(Channel::F);
  const Rational lows = t.first + i.first + f.first;
  const Rational highs = t.second + i.second + f.second;
  const Rational min_low = std::min({t.first, i.first, f.first});
  const Rational max_high = std::max({t.second, i.second, f.second});
  return {lows - (lows - min_low) * d, highs - (highs - max_high) * d};
}

Range off_pair_range(const Rational& x_lo, const Rational& x_hi, const Rational& y_lo, const Rational& y_hi,
                     const Rational& d) {
  check_degree(d);
  check_range({x_lo, x_hi});
  check_range({y_lo, y_hi});
  const Rational lows = x_lo + y_lo, highs = x_hi + y_hi;
  return {lows - (lows - std::min(x_lo, y_lo)) * d, highs - (highs - std::max(x_hi, y_hi)) * d};
}

Range dependent_pair_off_bound(const Rational& x_lo, const Rational& x_hi, const Rational& y_lo,
                               const Rational& y_hi) {
  check_range({x_lo, x_hi});
  check_range({y_lo, y_hi});
  return {std::min(x_lo, y_lo), std::max(x_hi, y_hi)};
}

Range dependent_pair_off_bound(const Rational& x_lo, const Rational& x_hi, const Rational& y_lo, const Rational& y_hi,
                               const Rational& z_lo, const Rational& z_hi) {
  check_range({z_lo, z_hi});
  auto r = dependent_pair_off_bound(x_lo, x_hi, y_lo, y_hi);
  return {r.first + z_lo, r.second + z_hi};
}

}  // namespace neutro
