#pragma once

#include <optional>
#include <string>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

/// (T, I, F) toward one pole.
using Tif = std::array<SubsetValue, 3>;

Tif tif(const Triple& x);
Tif tif(SubsetValue t, SubsetValue i, SubsetValue f);

enum class Polarity { plain, bipolar, tripolar, multipolar };
const char* polarity_name(Polarity p);

/// Membership of one object toward several poles. A plain element keeps its
/// single triple in `positive` and trips at 1 and 0; polar kinds trip at 1
/// and -1 on any pole.
struct PolarElement {
  std::string id;
  Polarity kind = Polarity::plain;
  std::vector<Tif> positive;
  std::optional<Tif> neutral;
  std::vector<Tif> negative;
  /// Multipolar only: b1 < ... < bn inside (0, 1).
  std::vector<Rational> poles;
  /// Relaxed ranges: positive in [psi, omega], negative in [-omega, -psi],
  /// neutral in [-omega, omega]. Otherwise [0, 1], [-1, 0] and [-1, 1].
  bool off_variant = true;
};

PolarElement make_plain(std::string id, Tif v);
PolarElement make_bipolar(std::string id, Tif pos, Tif neg, bool off_variant = true);
PolarElement make_tripolar(std::string id, Tif pos, Tif neu, Tif neg, bool off_variant = true);
PolarElement make_multipolar(std::string id, std::vector<Rational> poles, std::vector<Tif> pos, Tif neu,
                             std::vector<Tif> neg, bool off_variant = true);

void validate_polar(const PolarElement& e, const ThresholdFrame& frame);

/// Adds the element's evidence to `scan`, labelling witnesses by pole.
void scan_polar(EvidenceScan& scan, const PolarElement& e);

Verdict classify_polar(const PolarElement& e, const ThresholdFrame& frame);
Verdict classify_tripolar(const PolarElement& e, const ThresholdFrame& frame);
Verdict classify_multipolar(const PolarElement& e, const ThresholdFrame& frame);

Triple full_antagonist(const Triple& e);
Tif full_antagonist(const Tif& e);

/// (-a T, -a I, -omega_f + a (T + I)); F of the input does not enter.
Triple antagonist_projection(const Triple& e, const Rational& a, const Rational& omega_f);
Tif antagonist_projection(const Tif& e, const Rational& a, const Rational& omega_f);

/// Untouched poles get (0, 0, omega_f).
Triple neutral_default(const Rational& omega_f);

/// One degree and no poles gives a tripolar element; otherwise a multipolar
/// element with one negative pole per degree. The object is enrolled in the
/// positive pole `enrolled`; every other positive pole gets the neutral rule.
PolarElement polar_from_enrollment(std::string id, const Triple& positive, const std::vector<Rational>& degrees,
                                   const Rational& omega_f, const std::optional<Triple>& neutral = std::nullopt,
                                   const std::vector<Rational>& poles = {}, std::size_t enrolled = 0);

}  // namespace neutro
