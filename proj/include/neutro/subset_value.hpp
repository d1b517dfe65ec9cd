#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "neutro/rational.hpp"

namespace neutro {

/// One interval of a SubsetValue. A closed point has lo == hi.
struct Piece {
  Rational lo;
  bool lo_open = false;
  Rational hi;
  bool hi_open = false;

  bool operator==(const Piece&) const = default;
};

/// A finite union of intervals with exact endpoints, kept in canonical form:
/// sorted, pairwise disjoint, and with touching pieces merged whenever the
/// union is connected.
class SubsetValue {
 public:
  SubsetValue() = default;

  static SubsetValue point(const Rational& x);
  static SubsetValue closed(const Rational& lo, const Rational& hi);
  static SubsetValue interval(const Rational& lo, bool lo_open, const Rational& hi, bool hi_open);
  /// Hesitant value: a finite set of crisp points.
  static SubsetValue points(const std::vector<Rational>& xs);
  static SubsetValue from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  /// Exactly one closed point.
  bool is_crisp() const;
  /// The single point of a crisp value; throws otherwise.
  const Rational& crisp() const;

  const Rational& inf() const;
  const Rational& sup() const;
  bool inf_attained() const;
  bool sup_attained() const;

  /// Some point of the value is strictly greater than x.
  bool has_point_above(const Rational& x) const;
  /// Some point of the value is strictly less than x.
  bool has_point_below(const Rational& x) const;
  /// Every point lies in the closed range [lo, hi].
  bool within(const Rational& lo, const Rational& hi) const;
  bool contains(const Rational& x) const;

  /// Smallest single interval containing the value.
  SubsetValue hull() const;
  /// Image under x -> c - x.
  SubsetValue reflect(const Rational& c) const;
  /// Image under x -> a*x + b.
  SubsetValue affine(const Rational& a, const Rational& b) const;
  SubsetValue negate() const { return affine(Rational(-1), Rational(0)); }

  bool operator==(const SubsetValue&) const = default;

  /// "0.3", "[0.1, 0.4)", "{0.1, 0.2}" or "[0, 0.2] u (0.5, 1]".
  std::string str() const;

 private:
  std::vector<Piece> pieces_;
};

/// Pointwise min of two single intervals (the exact image set).
SubsetValue interval_min(const SubsetValue& a, const SubsetValue& b);
SubsetValue interval_max(const SubsetValue& a, const SubsetValue& b);
/// Exact Minkowski sum of two single intervals.
SubsetValue interval_sum(const SubsetValue& a, const SubsetValue& b);
/// Image of a single interval under x -> min(hi, max(lo, x)).
SubsetValue clamp(const SubsetValue& v, const Rational& lo, const Rational& hi);

}  // namespace neutro
