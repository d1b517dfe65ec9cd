#pragma once

#include "neutro/core.hpp"

namespace neutro {

struct TriangularOffnumber {
  Rational a1, a2, a3;
  Rational w, u, y;
  ThresholdFrame frame;
};

struct TrapezoidalOffnumber {
  Rational a1, a2, a3, a4;
  Rational w, u, y;
  ThresholdFrame frame;
};

TriangularOffnumber make_triangular(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& w,
                                    const Rational& u, const Rational& y, const ThresholdFrame& frame);
TrapezoidalOffnumber make_trapezoidal(const Rational& a1, const Rational& a2, const Rational& a3,
                                      const Rational& a4, const Rational& w, const Rational& u, const Rational& y,
                                      const ThresholdFrame& frame);

/// Outside [a1, a3] the value is (psi_T, omega_I, omega_F). A collapsed side
/// has an empty branch, so its endpoint takes the peak value.
Triple triangular_eval(const TriangularOffnumber& n, const Rational& x);
Triple trapezoidal_eval(const TrapezoidalOffnumber& n, const Rational& x);

}  // namespace neutro
