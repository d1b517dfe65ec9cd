#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "neutro/subset_value.hpp"

namespace neutro {

enum class Channel { T = 0, I = 1, F = 2 };
inline constexpr std::array<Channel, 3> kChannels{Channel::T, Channel::I, Channel::F};
const char* channel_name(Channel c);

/// Per-channel underlimits psi and overlimits omega.
struct ThresholdFrame {
  std::array<Rational, 3> psi;
  std::array<Rational, 3> omega;

  const Rational& lo(Channel c) const { return psi[static_cast<int>(c)]; }
  const Rational& hi(Channel c) const { return omega[static_cast<int>(c)]; }
  bool operator==(const ThresholdFrame&) const = default;
};

ThresholdFrame make_frame(const Rational& psi_t, const Rational& omega_t, const Rational& psi_i,
                          const Rational& omega_i, const Rational& psi_f, const Rational& omega_f);
/// Same limits on all three channels.
ThresholdFrame make_frame(const Rational& psi, const Rational& omega);
ThresholdFrame unit_frame();

/// A crisp (t, i, f) value.
struct Triple {
  Rational t, i, f;
  bool operator==(const Triple&) const = default;
  std::string str() const;
};

struct Element {
  std::string id;
  SubsetValue t, i, f;

  const SubsetValue& at(Channel c) const;
  SubsetValue& at(Channel c);
  bool operator==(const Element&) const = default;
};

/// Builds an element and checks every component against the frame.
Element make_element(std::string id, SubsetValue t, SubsetValue i, SubsetValue f, const ThresholdFrame& frame);
Element crisp_element(std::string id, const Rational& t, const Rational& i, const Rational& f,
                      const ThresholdFrame& frame);
void validate_element(const Element& e, const ThresholdFrame& frame);

/// Elements sharing one frame, ordered by id.
class OffCollection {
 public:
  explicit OffCollection(ThresholdFrame frame) : frame_(std::move(frame)) {}

  void add(Element e);
  const ThresholdFrame& frame() const { return frame_; }
  const std::map<std::string, Element>& elements() const { return elements_; }
  const Element& at(const std::string& id) const;
  bool contains(const std::string& id) const { return elements_.count(id) != 0; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool operator==(const OffCollection&) const = default;

 private:
  ThresholdFrame frame_;
  std::map<std::string, Element> elements_;
};

enum class Class { standard, over, under, off };
const char* class_name(Class c);
Class class_from_evidence(bool over, bool under);

/// One piece of over or under evidence, e.g. "x1.T over via 1.2".
struct Witness {
  std::string where;
  bool over = true;
  Rational value;

  std::string str() const;
};

struct Verdict {
  Class cls = Class::standard;
  std::vector<Witness> witnesses;
};

/// Accumulates evidence from many subset values. Over-evidence is a point
/// strictly above `above`; under-evidence is a point strictly below `below`.
class EvidenceScan {
 public:
  void scan(const std::string& where, const SubsetValue& v, const Rational& above, const Rational& below);
  void scan(const std::string& where, const SubsetValue& v) { scan(where, v, Rational(1), Rational(0)); }
  void merge(const EvidenceScan& other);

  bool over() const { return over_; }
  bool under() const { return under_; }
  Class cls() const { return class_from_evidence(over_, under_); }
  Verdict verdict() const { return {cls(), witnesses_}; }

 private:
  bool over_ = false;
  bool under_ = false;
  std::vector<Witness> witnesses_;
};

struct ComponentReport {
  Class cls = Class::standard;
  bool partially_over = false;
  bool totally_over = false;
  bool partially_under = false;
  bool totally_under = false;
};

/// A closed endpoint at 1 (or 0) does not spoil totality: [1, 1.4] is totally over.
ComponentReport classify_component(const SubsetValue& v, const Rational& psi, const Rational& omega);

Verdict classify_element(const Element& e, const ThresholdFrame& frame);
Verdict classify_collection(const OffCollection& c);

/// (v - tau_lo) / (tau_hi - tau_lo); unbounded on purpose.
Rational normalize_attribute(const Rational& v, const Rational& tau_lo, const Rational& tau_hi);

enum class RefinedForm { neutrosophic, fuzzy, intuitionistic };

struct RefinedElement {
  std::string id;
  std::vector<SubsetValue> ts, is, fs;
  RefinedForm form = RefinedForm::neutrosophic;
  /// Off variants waive the intuitionistic sum constraint.
  bool off_variant = true;
};

void validate_refined(const RefinedElement& e, const ThresholdFrame& frame);
Verdict classify_refined(const RefinedElement& e, const ThresholdFrame& frame);
Verdict classify_refined(const std::vector<RefinedElement>& es, const ThresholdFrame& frame);

/// Labels L0..Ln; `below` and `above` virtual labels extend the scale.
struct LabelScale {
  std::vector<std::string> labels;
  int below = 0;
  int above = 0;

  int n() const { return static_cast<int>(labels.size()) - 1; }
  Rational value(int index) const;
  std::string name(int index) const;
};

LabelScale make_label_scale(std::vector<std::string> labels, int below, int above);
Verdict classify_label_element(const std::set<int>& t, const std::set<int>& i, const std::set<int>& f,
                               const LabelScale& scale, const std::string& id = "x");

struct ComplexElement {
  std::string id;
  std::array<SubsetValue, 3> amp;
  std::array<SubsetValue, 3> phase;
};

void validate_complex(const ComplexElement& e, const ThresholdFrame& frame);
/// Amplitudes carry the evidence; phases are scanned only on request.
Verdict classify_complex(const ComplexElement& e, const ThresholdFrame& frame, bool include_phases = false);
Verdict classify_complex(const std::vector<ComplexElement>& es, const ThresholdFrame& frame,
                         bool include_phases = false);

struct QuantResult {
  bool holds = false;
  std::vector<std::string> ids;
};

using ElementPredicate = std::function<bool(const Element&)>;

/// Some component has a point outside [0, 1].
bool has_off_component(const Element& e);
/// Witnesses are the elements satisfying pred that carry an off component.
QuantResult off_exists(const OffCollection& c, const ElementPredicate& pred);
/// Counterexamples are the elements failing pred.
QuantResult off_forall(const OffCollection& c, const ElementPredicate& pred);

}  // namespace neutro
