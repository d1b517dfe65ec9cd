#include "neutro/subset_value.hpp"

#include <algorithm>
#include <sstream>

namespace neutro {

namespace {

void check_piece(const Piece& p) {
  if (p.lo > p.hi) throw ValidationError("interval with lo > hi: " + to_string(p.lo) + " > " + to_string(p.hi));
  if (p.lo == p.hi && (p.lo_open || p.hi_open))
    throw ValidationError("empty interval at " + to_string(p.lo) + " (open endpoint on a point)");
}

const Piece& single(const SubsetValue& v, const char* what) {
  if (v.pieces().size() != 1) throw ValidationError(std::string(what) + " expects a single interval");
  return v.pieces().front();
}

}  // namespace

SubsetValue SubsetValue::point(const Rational& x) { return from_pieces({Piece{x, false, x, false}}); }

SubsetValue SubsetValue::closed(const Rational& lo, const Rational& hi) {
  return from_pieces({Piece{lo, false, hi, false}});
}

SubsetValue SubsetValue::interval(const Rational& lo, bool lo_open, const Rational& hi, bool hi_open) {
  return from_pieces({Piece{lo, lo_open, hi, hi_open}});
}

SubsetValue SubsetValue::points(const std::vector<Rational>& xs) {
  std::vector<Piece> ps;
  ps.reserve(xs.size());
  for (const auto& x : xs) ps.push_back(Piece{x, false, x, false});
  return from_pieces(std::move(ps));
}

SubsetValue SubsetValue::from_pieces(std::vector<Piece> pieces) {
  for (const auto& p : pieces) check_piece(p);
  // closed lower ends first on ties so the merge below keeps them
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return !a.lo_open && b.lo_open;
  });
  SubsetValue out;
  for (auto& p : pieces) {
    if (out.pieces_.empty()) {
      out.pieces_.push_back(std::move(p));
      continue;
    }
    Piece& cur = out.pieces_.back();
    const bool joins = p.lo < cur.hi || (p.lo == cur.hi && (!cur.hi_open || !p.lo_open));
    if (!joins) {
      out.pieces_.push_back(std::move(p));
      continue;
    }
    if (p.hi > cur.hi) {
      cur.hi = p.hi;
      cur.hi_open = p.hi_open;
    } else if (p.hi == cur.hi) {
      cur.hi_open = cur.hi_open && p.hi_open;
    }
  }
  return out;
}

bool SubsetValue::is_crisp() const { return pieces_.size() == 1 && pieces_[0].lo == pieces_[0].hi; }

const Rational& SubsetValue::crisp() const {
  if (!is_crisp()) throw ValidationError("expected a crisp value, got " + str());
  return pieces_[0].lo;
}

const Rational& SubsetValue::inf() const {
  if (empty()) throw ValidationError("empty subset value has no infimum");
  return pieces_.front().lo;
}

const Rational& SubsetValue::sup() const {
  if (empty()) throw ValidationError("empty subset value has no supremum");
  return pieces_.back().hi;
}

bool SubsetValue::inf_attained() const { return !empty() && !pieces_.front().lo_open; }
bool SubsetValue::sup_attained() const { return !empty() && !pieces_.back().hi_open; }

bool SubsetValue::has_point_above(const Rational& x) const { return !empty() && sup() > x; }
bool SubsetValue::has_point_below(const Rational& x) const { return !empty() && inf() < x; }

bool SubsetValue::within(const Rational& lo, const Rational& hi) const {
  return empty() || (inf() >= lo && sup() <= hi);
}

bool SubsetValue::contains(const Rational& x) const {
  for (const auto& p : pieces_) {
    const bool above_lo = p.lo_open ? x > p.lo : x >= p.lo;
    const bool below_hi = p.hi_open ? x < p.hi : x <= p.hi;
    if (above_lo && below_hi) return true;
  }
  return false;
}

SubsetValue SubsetValue::hull() const {
  if (empty()) return {};
  return interval(inf(), pieces_.front().lo_open, sup(), pieces_.back().hi_open);
}

SubsetValue SubsetValue::reflect(const Rational& c) const { return affine(Rational(-1), c); }

SubsetValue SubsetValue::affine(const Rational& a, const Rational& b) const {
  std::vector<Piece> ps;
  ps.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    if (a == 0) {
      ps.push_back(Piece{b, false, b, false});
    } else if (a > 0) {
      ps.push_back(Piece{a * p.lo + b, p.lo_open, a * p.hi + b, p.hi_open});
    } else {
      ps.push_back(Piece{a * p.hi + b, p.hi_open, a * p.lo + b, p.lo_open});
    }
  }
  return from_pieces(std::move(ps));
}

std::string SubsetValue::str() const {
  if (empty()) return "{}";
  if (is_crisp()) return to_string(pieces_[0].lo);
  const bool all_points = std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.lo == p.hi; });
  std::ostringstream os;
  if (all_points) {
    os << '{';
    for (std::size_t k = 0; k < pieces_.size(); ++k) os << (k ? ", " : "") << to_string(pieces_[k].lo);
    os << '}';
    return os.str();
  }
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    if (k) os << " u ";
    if (p.lo == p.hi) {
      os << '{' << to_string(p.lo) << '}';
      continue;
    }
    os << (p.lo_open ? '(' : '[') << to_string(p.lo) << ", " << to_string(p.hi) << (p.hi_open ? ')' : ']');
  }
  return os.str();
}

SubsetValue interval_min(const SubsetValue& a, const SubsetValue& b) {
  const Piece& x = single(a, "interval_min");
  const Piece& y = single(b, "interval_min");
  Piece r;
  if (x.lo != y.lo) {
    r.lo = x.lo < y.lo ? x.lo : y.lo;
    r.lo_open = x.lo < y.lo ? x.lo_open : y.lo_open;
  } else {
    r.lo = x.lo;
    r.lo_open = x.lo_open && y.lo_open;
  }
  if (x.hi != y.hi) {
    r.hi = x.hi < y.hi ? x.hi : y.hi;
    r.hi_open = x.hi < y.hi ? x.hi_open : y.hi_open;
  } else {
    r.hi = x.hi;
    r.hi_open = x.hi_open || y.hi_open;
  }
  return SubsetValue::from_pieces({r});
}

SubsetValue interval_max(const SubsetValue& a, const SubsetValue& b) {
  return interval_min(a.negate(), b.negate()).negate();
}

SubsetValue interval_sum(const SubsetValue& a, const SubsetValue& b) {
  const Piece& x = single(a, "interval_sum");
  const Piece& y = single(b, "interval_sum");
  return SubsetValue::interval(x.lo + y.lo, x.lo_open || y.lo_open, x.hi + y.hi, x.hi_open || y.hi_open);
}

SubsetValue clamp(const SubsetValue& v, const Rational& lo, const Rational& hi) {
  Piece p = single(v, "clamp");
  if (p.hi <= lo) return SubsetValue::point(lo);
  if (p.lo >= hi) return SubsetValue::point(hi);
  if (p.lo < lo) {
    p.lo = lo;
    p.lo_open = false;
  }
  if (p.hi > hi) {
    p.hi = hi;
    p.hi_open = false;
  }
  return SubsetValue::from_pieces({p});
}

}  // namespace neutro
