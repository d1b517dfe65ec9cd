#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "neutro/algebra.hpp"
#include "neutro/offnumbers.hpp"
#include "neutro/polarity.hpp"
#include "neutro/stats.hpp"
#include "neutro/structures.hpp"

namespace neutro {

using json = nlohmann::json;

/// A JSON number (read back through its shortest decimal form) or a string
/// such as "6/15" or "-0.725".
Rational json_rational(const json& j, const std::string& where);
/// Number, [lo, hi], {"lo", "hi", "lo_open", "hi_open"}, {"set": [...]}, or
/// an array of pieces.
SubsetValue json_value(const json& j, const std::string& where);
Triple json_triple(const json& j, const std::string& where);

/// A number when the exact decimal survives the trip, "p/q" otherwise.
json to_json(const Rational& r);
json to_json(const SubsetValue& v);
json to_json(const Triple& t);

/// {"psi": x or [t, i, f], "omega": ...}; a missing frame is the unit cube.
ThresholdFrame json_frame(const json& doc);
json to_json(const ThresholdFrame& f);

OffCollection load_collection(const json& doc);
OffCollection load_collection(const json& elements, const ThresholdFrame& frame, const std::string& where);
json to_json(const OffCollection& c);

struct Workspace {
  ThresholdFrame frame;
  std::map<std::string, OffCollection> collections;
  std::map<std::string, LabelScale> scales;
};

/// "elements" becomes the collection "main"; "collections" adds named ones.
Workspace load_workspace(const json& doc);

std::vector<RefinedElement> load_refined(const json& doc, const ThresholdFrame& frame);
std::vector<ComplexElement> load_complex(const json& doc, const ThresholdFrame& frame);
PolarElement json_polar(const json& j, const std::string& id, const std::string& where);
std::vector<PolarElement> load_polar(const json& doc);
NeutroGraph load_graph(const json& doc);
NeutroMatrix load_matrix(const json& doc);
std::vector<OffProbability> load_probability(const json& doc);
std::vector<RefinedOffProbability> load_refined_probability(const json& doc);

struct LabelElement {
  std::string id;
  std::set<int> t, i, f;
};
LabelScale load_scale(const json& doc);
std::vector<LabelElement> load_label_elements(const json& doc);

struct OffnumberSpec {
  bool trapezoidal = false;
  TriangularOffnumber tri;
  TrapezoidalOffnumber trap;
};
OffnumberSpec load_offnumber(const json& doc);

struct StructureSpec {
  std::vector<LabeledResidue> generators;
  LabeledLaw law;
  long long modulus = 1;
};
StructureSpec load_structure_spec(const json& doc);

std::vector<OffCollection> load_family(const json& doc, const ThresholdFrame& frame);

std::vector<ContributionRule> load_rules(const json& doc);

/// Rows of a comma-separated file; the first row is the header.
std::vector<std::vector<std::string>> read_csv(std::istream& in);
/// Header id,t,i,f.
Sample load_sample_csv(std::istream& in);
/// Header id,event,quantity.
std::vector<ContributionEvent> load_events_csv(std::istream& in);

json read_json_file(const std::string& path);

}  // namespace neutro
