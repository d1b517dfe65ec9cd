#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "neutro/algebra.hpp"
#include "neutro/polarity.hpp"

namespace neutro {

struct NeutroGraph {
  std::map<std::string, PolarElement> vertices;
  std::map<std::pair<std::string, std::string>, PolarElement> edges;

  void add_vertex(PolarElement v);
  /// Both endpoints must already be vertices.
  void add_edge(const std::string& from, const std::string& to, PolarElement value);
};

Verdict classify_graph(const NeutroGraph& g, const ThresholdFrame& frame);

struct MatrixCell {
  Rational value;
  PolarElement label;
};

struct NeutroMatrix {
  std::vector<std::vector<MatrixCell>> cells;

  std::size_t rows() const { return cells.size(); }
  std::size_t cols() const { return cells.empty() ? 0 : cells.front().size(); }
};

Verdict classify_matrix(const NeutroMatrix& m, const ThresholdFrame& frame);

/// Triples ordered lexicographically, so they can live in a std::set.
struct TripleLess {
  bool operator()(const Triple& a, const Triple& b) const;
};
using LabelSet = std::set<Triple, TripleLess>;

struct LabeledResidue {
  long long residue = 0;
  LabelSet labels;
};

enum class Combiner { min, max };

struct LabeledLaw {
  enum class Op { add, mul } op = Op::add;
  std::array<Combiner, 3> combine{Combiner::max, Combiner::min, Combiner::min};
};

/// Residue -> every label it can carry.
using LabeledStructure = std::map<long long, LabelSet>;

/// Closes the generators under the law modulo m. A residue reached with
/// several labels keeps all of them.
LabeledStructure generate_labeled_structure(const std::vector<LabeledResidue>& generators, const LabeledLaw& law,
                                            long long modulus);
/// Per-channel view of one residue's labels: (-0.1, {0.1, 0.2}, 0.7).
std::string format_labels(const LabelSet& labels);

struct StructureReport {
  bool pass = true;
  std::string witness;
};

/// Union, intersection and complement of members stay in the family.
StructureReport check_closure(const std::vector<OffCollection>& family, NormFamily fam = NormFamily::min_max,
                              ComplementVariant variant = ComplementVariant::swap_tf);

enum class TopologyKind { over, under, off };
TopologyKind parse_topology_kind(const std::string& s);

struct TopologyReport {
  StructureReport a, b, c;

  bool pass() const { return a.pass && b.pass && c.pass; }
};

/// Constant collection on `ids` with the given crisp value.
OffCollection constant_collection(const std::vector<std::string>& ids, const Triple& value,
                                  const ThresholdFrame& frame);
/// The two constants axiom (a) asks for.
std::pair<Triple, Triple> topology_constants(TopologyKind kind, const ThresholdFrame& frame);

/// Axiom (b) is checked on all pairwise min_max intersections. Axiom (c)
/// on pairwise unions, which on a finite family covers every union.
TopologyReport check_topology(const std::vector<OffCollection>& family, const ThresholdFrame& frame,
                              TopologyKind kind);

}  // namespace neutro
