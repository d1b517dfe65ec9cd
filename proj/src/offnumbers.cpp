#include "neutro/offnumbers.hpp"

namespace neutro {

namespace {

void check_peaks(const Rational& w, const Rational& u, const Rational& y, const ThresholdFrame& fr) {
  auto in = [&](const Rational& v, Channel c, const char* name) {
    if (v < fr.lo(c) || v > fr.hi(c))
      throw ValidationError(std::string("offnumber peak ") + name + " = " + to_string(v) + " lies outside the frame");
  };
  in(w, Channel::T, "w");
  in(u, Channel::I, "u");
  in(y, Channel::F, "y");
}

}  // namespace

TriangularOffnumber make_triangular(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& w,
                                    const Rational& u, const Rational& y, const ThresholdFrame& frame) {
  if (!(a1 <= a2 && a2 <= a3)) throw ValidationError("triangular offnumber needs a1 <= a2 <= a3");
  check_peaks(w, u, y, frame);
  return {a1, a2, a3, w, u, y, frame};
}

TrapezoidalOffnumber make_trapezoidal(const Rational& a1, const Rational& a2, const Rational& a3,
                                      const Rational& a4, const Rational& w, const Rational& u, const Rational& y,
                                      const ThresholdFrame& frame) {
  if (!(a1 <= a2 && a2 <= a3 && a3 <= a4)) throw ValidationError("trapezoidal offnumber needs a1 <= a2 <= a3 <= a4");
  check_peaks(w, u, y, frame);
  return {a1, a2, a3, a4, w, u, y, frame};
}

namespace {

// Shared by both shapes: rising side on [a1, b), plateau on [b, c], falling side on (c, d].
Triple eval_shape(const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& w,
                  const Rational& u, const Rational& y, const ThresholdFrame& fr, const Rational& x) {
  if (a <= x && x < b) {
    const Rational len = b - a;
    return {(x - a) * w / len, (b - x + u * (x - a)) / len, (b - x + y * (x - a)) / len};
  }
  if (b <= x && x <= c) return {w, u, y};
  if (c < x && x <= d) {
    const Rational len = d - c;
    return {(d - x) * w / len, (x - c + u * (d - x)) / len, (x - c + y * (d - x)) / len};
  }
  return {fr.lo(Channel::T), fr.hi(Channel::I), fr.hi(Channel::F)};
}

}  // namespace

Triple triangular_eval(const TriangularOffnumber& n, const Rational& x) {
  return eval_shape(n.a1, n.a2, n.a2, n.a3, n.w, n.u, n.y, n.frame, x);
}

Triple trapezoidal_eval(const TrapezoidalOffnumber& n, const Rational& x) {
  return eval_shape(n.a1, n.a2, n.a3, n.a4, n.w, n.u, n.y, n.frame, x);
}

}  // namespace neutro
