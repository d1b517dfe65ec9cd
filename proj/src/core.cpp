#include "neutro/core.hpp"

namespace neutro {

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::T: return "T";
    case Channel::I: return "I";
    case Channel::F: return "F";
  }
  return "?";
}

ThresholdFrame make_frame(const Rational& psi_t, const Rational& omega_t, const Rational& psi_i,
                          const Rational& omega_i, const Rational& psi_f, const Rational& omega_f) {
  ThresholdFrame fr{{psi_t, psi_i, psi_f}, {omega_t, omega_i, omega_f}};
  for (Channel c : kChannels) {
    const std::string ch = channel_name(c);
    if (fr.lo(c) > 0) throw ValidationError("frame: underlimit of " + ch + " must be <= 0, got " + to_string(fr.lo(c)));
    if (fr.hi(c) < 1) throw ValidationError("frame: overlimit of " + ch + " must be >= 1, got " + to_string(fr.hi(c)));
    if (fr.lo(c) >= fr.hi(c)) throw ValidationError("frame: underlimit of " + ch + " must be below its overlimit");
  }
  return fr;
}

ThresholdFrame make_frame(const Rational& psi, const Rational& omega) {
  return make_frame(psi, omega, psi, omega, psi, omega);
}

ThresholdFrame unit_frame() { return make_frame(Rational(0), Rational(1)); }

std::string Triple::str() const { return "(" + to_string(t) + ", " + to_string(i) + ", " + to_string(f) + ")"; }

const SubsetValue& Element::at(Channel c) const {
  switch (c) {
    case Channel::T: return t;
    case Channel::I: return i;
    case Channel::F: return f;
  }
  return t;
}

SubsetValue& Element::at(Channel c) {
  return const_cast<SubsetValue&>(static_cast<const Element&>(*this).at(c));
}

void validate_element(const Element& e, const ThresholdFrame& frame) {
  for (Channel c : kChannels) {
    const SubsetValue& v = e.at(c);
    const std::string where = e.id + "." + channel_name(c);
    if (v.empty()) throw ValidationError(where + ": no degree supplied");
    if (!v.within(frame.lo(c), frame.hi(c)))
      throw ValidationError(where + " = " + v.str() + " lies outside [" + to_string(frame.lo(c)) + ", " +
                            to_string(frame.hi(c)) + "]");
  }
}

Element make_element(std::string id, SubsetValue t, SubsetValue i, SubsetValue f, const ThresholdFrame& frame) {
  Element e{std::move(id), std::move(t), std::move(i), std::move(f)};
  validate_element(e, frame);
  return e;
}

Element crisp_element(std::string id, const Rational& t, const Rational& i, const Rational& f,
                      const ThresholdFrame& frame) {
  return make_element(std::move(id), SubsetValue::point(t), SubsetValue::point(i), SubsetValue::point(f), frame);
}

void OffCollection::add(Element e) {
  validate_element(e, frame_);
  if (elements_.count(e.id)) throw ValidationError("duplicate element id '" + e.id + "'");
  std::string id = e.id;
  elements_.emplace(std::move(id), std::move(e));
}

const Element& OffCollection::at(const std::string& id) const {
  auto it = elements_.find(id);
  if (it == elements_.end()) throw ValidationError("no element '" + id + "'");
  return it->second;
}

const char* class_name(Class c) {
  switch (c) {
    case Class::standard: return "standard";
    case Class::over: return "over";
    case Class::under: return "under";
    case Class::off: return "off";
  }
  return "?";
}

Class class_from_evidence(bool over, bool under) {
  if (over && under) return Class::off;
  if (over) return Class::over;
  if (under) return Class::under;
  return Class::standard;
}

std::string Witness::str() const { return where + (over ? " over via " : " under via ") + to_string(value); }

void EvidenceScan::scan(const std::string& where, const SubsetValue& v, const Rational& above, const Rational& below) {
  if (v.has_point_above(above)) {
    over_ = true;
    witnesses_.push_back({where, true, v.sup()});
  }
  if (v.has_point_below(below)) {
    under_ = true;
    witnesses_.push_back({where, false, v.inf()});
  }
}

void EvidenceScan::merge(const EvidenceScan& other) {
  over_ = over_ || other.over_;
  under_ = under_ || other.under_;
  witnesses_.insert(witnesses_.end(), other.witnesses_.begin(), other.witnesses_.end());
}

ComponentReport classify_component(const SubsetValue& v, const Rational& psi, const Rational& omega) {
  if (v.empty()) throw ValidationError("component has no degree supplied");
  if (!v.within(psi, omega))
    throw ValidationError("component " + v.str() + " lies outside [" + to_string(psi) + ", " + to_string(omega) + "]");
  ComponentReport r;
  const bool over = v.has_point_above(Rational(1));
  const bool under = v.has_point_below(Rational(0));
  r.cls = class_from_evidence(over, under);
  r.totally_over = over && v.inf() >= 1;
  r.partially_over = over && !r.totally_over;
  r.totally_under = under && v.sup() <= 0;
  r.partially_under = under && !r.totally_under;
  return r;
}

Verdict classify_element(const Element& e, const ThresholdFrame& frame) {
  validate_element(e, frame);
  EvidenceScan scan;
  for (Channel c : kChannels) scan.scan(e.id + "." + channel_name(c), e.at(c));
  return scan.verdict();
}

Verdict classify_collection(const OffCollection& c) {
  if (c.empty()) throw ValidationError("cannot classify an empty collection");
  EvidenceScan scan;
  for (const auto& [id, e] : c.elements())
    for (Channel ch : kChannels) scan.scan(id + "." + channel_name(ch), e.at(ch));
  return scan.verdict();
}

Rational normalize_attribute(const Rational& v, const Rational& tau_lo, const Rational& tau_hi) {
  if (tau_lo >= tau_hi)
    throw ValidationError("degenerate threshold pair: " + to_string(tau_lo) + " >= " + to_string(tau_hi));
  return (v - tau_lo) / (tau_hi - tau_lo);
}

void validate_refined(const RefinedElement& e, const ThresholdFrame& frame) {
  const std::size_t p = e.ts.size(), r = e.is.size(), s = e.fs.size();
  switch (e.form) {
    case RefinedForm::neutrosophic:
      if (p < 1 || r < 1 || s < 1 || p + r + s < 4)
        throw ValidationError(e.id + ": refined neutrosophic form needs p, r, s >= 1 and p + r + s >= 4");
      break;
    case RefinedForm::fuzzy:
      if (r != 0 || s != 0 || p < 2) throw ValidationError(e.id + ": refined fuzzy form needs p >= 2 and no I, F parts");
      break;
    case RefinedForm::intuitionistic:
      if (r != 0 || p < 1 || s < 1 || p + s < 3)
        throw ValidationError(e.id + ": refined intuitionistic form needs r = 0, p, s >= 1 and p + s >= 3");
      break;
  }
  auto check = [&](const std::vector<SubsetValue>& vs, Channel c) {
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const std::string where = e.id + "." + channel_name(c) + std::to_string(k + 1);
      if (vs[k].empty()) throw ValidationError(where + ": no degree supplied");
      if (!vs[k].within(frame.lo(c), frame.hi(c)))
        throw ValidationError(where + " = " + vs[k].str() + " lies outside the frame");
    }
  };
  check(e.ts, Channel::T);
  check(e.is, Channel::I);
  check(e.fs, Channel::F);

  if (e.form == RefinedForm::intuitionistic && !e.off_variant) {
    bool unit = true;
    Rational total = 0;
    for (const auto* vs : {&e.ts, &e.fs})
      for (const auto& v : *vs) {
        unit = unit && v.within(Rational(0), Rational(1));
        total += v.sup();
      }
    if (unit && total > 1)
      throw ValidationError(e.id + ": refined intuitionistic sups sum to " + to_string(total) + " > 1");
  }
}

namespace {

void scan_refined(EvidenceScan& scan, const RefinedElement& e) {
  auto run = [&](const std::vector<SubsetValue>& vs, Channel c) {
    for (std::size_t k = 0; k < vs.size(); ++k)
      scan.scan(e.id + "." + channel_name(c) + std::to_string(k + 1), vs[k]);
  };
  run(e.ts, Channel::T);
  run(e.is, Channel::I);
  run(e.fs, Channel::F);
}

}  // namespace

Verdict classify_refined(const RefinedElement& e, const ThresholdFrame& frame) {
  return classify_refined(std::vector<RefinedElement>{e}, frame);
}

Verdict classify_refined(const std::vector<RefinedElement>& es, const ThresholdFrame& frame) {
  EvidenceScan scan;
  for (const auto& e : es) {
    validate_refined(e, frame);
    scan_refined(scan, e);
  }
  return scan.verdict();
}

LabelScale make_label_scale(std::vector<std::string> labels, int below, int above) {
  if (labels.size() < 2) throw ValidationError("label scale needs at least two labels");
  if (below < 0 || above < 0) throw ValidationError("label scale extensions must be nonnegative");
  return LabelScale{std::move(labels), below, above};
}

Rational LabelScale::value(int index) const {
  if (index < -below || index > n() + above)
    throw ValidationError("label index " + std::to_string(index) + " outside the extended scale [" +
                          std::to_string(-below) + ", " + std::to_string(n() + above) + "]");
  return Rational(index, n());
}

std::string LabelScale::name(int index) const {
  if (index >= 0 && index <= n()) return labels[static_cast<std::size_t>(index)];
  return "L" + std::to_string(index);
}

Verdict classify_label_element(const std::set<int>& t, const std::set<int>& i, const std::set<int>& f,
                               const LabelScale& scale, const std::string& id) {
  EvidenceScan scan;
  const std::array<const std::set<int>*, 3> parts{&t, &i, &f};
  for (Channel c : kChannels) {
    const auto& idx = *parts[static_cast<int>(c)];
    if (idx.empty()) throw ValidationError(id + "." + channel_name(c) + ": no label supplied");
    std::vector<Rational> xs;
    for (int k : idx) xs.push_back(scale.value(k));
    scan.scan(id + "." + channel_name(c), SubsetValue::points(xs));
  }
  return scan.verdict();
}

void validate_complex(const ComplexElement& e, const ThresholdFrame& frame) {
  for (Channel c : kChannels) {
    const int k = static_cast<int>(c);
    const std::string where = e.id + "." + channel_name(c);
    if (e.amp[k].empty() || e.phase[k].empty()) throw ValidationError(where + ": amplitude and phase required");
    if (!e.amp[k].within(frame.lo(c), frame.hi(c)))
      throw ValidationError(where + " amplitude " + e.amp[k].str() + " lies outside the frame");
  }
}

Verdict classify_complex(const ComplexElement& e, const ThresholdFrame& frame, bool include_phases) {
  return classify_complex(std::vector<ComplexElement>{e}, frame, include_phases);
}

Verdict classify_complex(const std::vector<ComplexElement>& es, const ThresholdFrame& frame,
                         bool include_phases) {
  EvidenceScan scan;
  for (const auto& e : es) {
    validate_complex(e, frame);
    for (Channel c : kChannels) {
      const int k = static_cast<int>(c);
      scan.scan(e.id + "." + channel_name(c) + ".amp", e.amp[k]);
      if (include_phases) scan.scan(e.id + "." + channel_name(c) + ".phase", e.phase[k]);
    }
  }
  return scan.verdict();
}

bool has_off_component(const Element& e) {
  for (Channel c : kChannels)
    if (e.at(c).has_point_above(Rational(1)) || e.at(c).has_point_below(Rational(0))) return true;
  return false;
}

QuantResult off_exists(const OffCollection& c, const ElementPredicate& pred) {
  QuantResult r;
  for (const auto& [id, e] : c.elements())
    if (pred(e) && has_off_component(e)) r.ids.push_back(id);
  r.holds = !r.ids.empty();
  return r;
}

QuantResult off_forall(const OffCollection& c, const ElementPredicate& pred) {
  QuantResult r;
  for (const auto& [id, e] : c.elements())
    if (!pred(e)) r.ids.push_back(id);
  r.holds = r.ids.empty();
  return r;
}

}  // namespace neutro
