#include "neutro/polarity.hpp"

namespace neutro {

Tif tif(const Triple& x) { return {SubsetValue::point(x.t), SubsetValue::point(x.i), SubsetValue::point(x.f)}; }

Tif tif(SubsetValue t, SubsetValue i, SubsetValue f) { return {std::move(t), std::move(i), std::move(f)}; }

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::plain: return "plain";
    case Polarity::bipolar: return "bipolar";
    case Polarity::tripolar: return "tripolar";
    case Polarity::multipolar: return "multipolar";
  }
  return "?";
}

PolarElement make_plain(std::string id, Tif v) {
  PolarElement e;
  e.id = std::move(id);
  e.kind = Polarity::plain;
  e.positive.push_back(std::move(v));
  return e;
}

PolarElement make_bipolar(std::string id, Tif pos, Tif neg, bool off_variant) {
  PolarElement e;
  e.id = std::move(id);
  e.kind = Polarity::bipolar;
  e.positive.push_back(std::move(pos));
  e.negative.push_back(std::move(neg));
  e.off_variant = off_variant;
  return e;
}

PolarElement make_tripolar(std::string id, Tif pos, Tif neu, Tif neg, bool off_variant) {
  PolarElement e = make_bipolar(std::move(id), std::move(pos), std::move(neg), off_variant);
  e.kind = Polarity::tripolar;
  e.neutral = std::move(neu);
  return e;
}

PolarElement make_multipolar(std::string id, std::vector<Rational> poles, std::vector<Tif> pos, Tif neu,
                             std::vector<Tif> neg, bool off_variant) {
  PolarElement e;
  e.id = std::move(id);
  e.kind = Polarity::multipolar;
  e.poles = std::move(poles);
  e.positive = std::move(pos);
  e.neutral = std::move(neu);
  e.negative = std::move(neg);
  e.off_variant = off_variant;
  return e;
}

namespace {

void check_tif(const Tif& v, const std::string& where, const ThresholdFrame& fr, int sign, bool off) {
  for (Channel c : kChannels) {
    const SubsetValue& x = v[static_cast<int>(c)];
    const std::string w = where + "." + channel_name(c);
    if (x.empty()) throw ValidationError(w + ": no degree supplied");
    Rational lo, hi;
    if (sign > 0) {
      lo = off ? fr.lo(c) : Rational(0);
      hi = off ? fr.hi(c) : Rational(1);
    } else if (sign < 0) {
      lo = off ? Rational(-fr.hi(c)) : Rational(-1);
      hi = off ? Rational(-fr.lo(c)) : Rational(0);
    } else {
      lo = off ? Rational(-fr.hi(c)) : Rational(-1);
      hi = off ? fr.hi(c) : Rational(1);
    }
    if (!x.within(lo, hi))
      throw ValidationError(w + " = " + x.str() + " lies outside [" + to_string(lo) + ", " + to_string(hi) + "]");
  }
}

}  // namespace

void validate_polar(const PolarElement& e, const ThresholdFrame& frame) {
  const std::size_t np = e.positive.size(), nn = e.negative.size();
  switch (e.kind) {
    case Polarity::plain:
      if (np != 1 || nn != 0 || e.neutral) throw ValidationError(e.id + ": plain element needs exactly one triple");
      for (Channel c : kChannels) {
        const SubsetValue& x = e.positive[0][static_cast<int>(c)];
        if (x.empty()) throw ValidationError(e.id + "." + channel_name(c) + ": no degree supplied");
        if (!x.within(frame.lo(c), frame.hi(c)))
          throw ValidationError(e.id + "." + channel_name(c) + " = " + x.str() + " lies outside the frame");
      }
      return;
    case Polarity::bipolar:
      if (np != 1 || nn != 1 || e.neutral) throw ValidationError(e.id + ": bipolar element needs pos and neg");
      break;
    case Polarity::tripolar:
      if (np != 1 || nn != 1 || !e.neutral) throw ValidationError(e.id + ": tripolar element needs pos, neu and neg");
      break;
    case Polarity::multipolar:
      if (e.poles.empty() || np != e.poles.size() || nn != e.poles.size() || !e.neutral)
        throw ValidationError(e.id + ": multipolar element needs one pos and one neg triple per pole, plus neu");
      for (std::size_t k = 0; k < e.poles.size(); ++k) {
        if (e.poles[k] <= 0 || e.poles[k] >= 1) throw ValidationError(e.id + ": poles must lie strictly inside (0, 1)");
        if (k && e.poles[k - 1] >= e.poles[k]) throw ValidationError(e.id + ": poles must be strictly increasing");
      }
      break;
  }
  for (std::size_t k = 0; k < np; ++k) check_tif(e.positive[k], e.id + ".pos" + std::to_string(k + 1), frame, 1, e.off_variant);
  if (e.neutral) check_tif(*e.neutral, e.id + ".neu", frame, 0, e.off_variant);
  for (std::size_t k = 0; k < nn; ++k) check_tif(e.negative[k], e.id + ".neg" + std::to_string(k + 1), frame, -1, e.off_variant);
}

void scan_polar(EvidenceScan& scan, const PolarElement& e) {
  const bool plain = e.kind == Polarity::plain;
  const Rational below = plain ? Rational(0) : Rational(-1);
  auto run = [&](const Tif& v, const std::string& where) {
    for (Channel c : kChannels) scan.scan(where + channel_name(c), v[static_cast<int>(c)], Rational(1), below);
  };
  if (plain) {
    run(e.positive[0], e.id + ".");
    return;
  }
  const bool many = e.positive.size() > 1;
  for (std::size_t k = 0; k < e.positive.size(); ++k)
    run(e.positive[k], e.id + ".pos" + (many ? std::to_string(k + 1) : "") + ".");
  if (e.neutral) run(*e.neutral, e.id + ".neu.");
  for (std::size_t k = 0; k < e.negative.size(); ++k)
    run(e.negative[k], e.id + ".neg" + (many ? std::to_string(k + 1) : "") + ".");
}

Verdict classify_polar(const PolarElement& e, const ThresholdFrame& frame) {
  validate_polar(e, frame);
  EvidenceScan scan;
  scan_polar(scan, e);
  return scan.verdict();
}

Verdict classify_tripolar(const PolarElement& e, const ThresholdFrame& frame) {
  if (e.kind != Polarity::tripolar) throw ValidationError(e.id + ": not a tripolar element");
  return classify_polar(e, frame);
}

Verdict classify_multipolar(const PolarElement& e, const ThresholdFrame& frame) {
  if (e.kind != Polarity::multipolar) throw ValidationError(e.id + ": not a multipolar element");
  return classify_polar(e, frame);
}

Triple full_antagonist(const Triple& e) { return {-e.t, -e.i, -e.f}; }

Tif full_antagonist(const Tif& e) { return {e[0].negate(), e[1].negate(), e[2].negate()}; }

namespace {

void check_degree(const Rational& a) {
  if (a < 0 || a > 1) throw ValidationError("degree of antagonism " + to_string(a) + " outside [0, 1]");
}

}  // namespace

Triple antagonist_projection(const Triple& e, const Rational& a, const Rational& omega_f) {
  check_degree(a);
  return {-a * e.t, -a * e.i, -omega_f + a * (e.t + e.i)};
}

Tif antagonist_projection(const Tif& e, const Rational& a, const Rational& omega_f) {
  if (!e[0].is_crisp() || !e[1].is_crisp() || !e[2].is_crisp())
    throw ValidationError("antagonist projection is defined on crisp values only");
  return tif(antagonist_projection(Triple{e[0].crisp(), e[1].crisp(), e[2].crisp()}, a, omega_f));
}

Triple neutral_default(const Rational& omega_f) { return {Rational(0), Rational(0), omega_f}; }

PolarElement polar_from_enrollment(std::string id, const Triple& positive, const std::vector<Rational>& degrees,
                                   const Rational& omega_f, const std::optional<Triple>& neutral,
                                   const std::vector<Rational>& poles, std::size_t enrolled) {
  if (degrees.empty()) throw ValidationError("at least one antagonism degree is required");
  const Triple neu = neutral.value_or(neutral_default(omega_f));
  if (degrees.size() == 1 && poles.empty())
    return make_tripolar(std::move(id), tif(positive), tif(neu),
                         tif(antagonist_projection(positive, degrees[0], omega_f)));
  if (poles.size() != degrees.size()) throw ValidationError("need one antagonism degree per pole");
  if (enrolled >= poles.size()) throw ValidationError("enrolled pole index out of range");
  std::vector<Tif> pos, neg;
  for (std::size_t k = 0; k < poles.size(); ++k) {
    pos.push_back(tif(k == enrolled ? positive : neu));
    neg.push_back(tif(antagonist_projection(positive, degrees[k], omega_f)));
  }
  return make_multipolar(std::move(id), poles, std::move(pos), tif(neu), std::move(neg));
}

}  // namespace neutro
