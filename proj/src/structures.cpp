#include "neutro/structures.hpp"

#include <algorithm>
#include <tuple>

namespace neutro {

void NeutroGraph::add_vertex(PolarElement v) {
  if (vertices.count(v.id)) throw ValidationError("duplicate vertex '" + v.id + "'");
  std::string id = v.id;
  vertices.emplace(std::move(id), std::move(v));
}

void NeutroGraph::add_edge(const std::string& from, const std::string& to, PolarElement value) {
  if (!vertices.count(from)) throw ValidationError("edge from unknown vertex '" + from + "'");
  if (!vertices.count(to)) throw ValidationError("edge to unknown vertex '" + to + "'");
  if (value.id.empty()) value.id = from + "-" + to;
  edges.insert_or_assign({from, to}, std::move(value));
}

Verdict classify_graph(const NeutroGraph& g, const ThresholdFrame& frame) {
  EvidenceScan scan;
  for (const auto& [id, v] : g.vertices) {
    validate_polar(v, frame);
    scan_polar(scan, v);
  }
  for (const auto& [ends, e] : g.edges) {
    if (!g.vertices.count(ends.first) || !g.vertices.count(ends.second))
      throw ValidationError("edge " + ends.first + "-" + ends.second + " has a missing endpoint");
    validate_polar(e, frame);
    scan_polar(scan, e);
  }
  return scan.verdict();
}

Verdict classify_matrix(const NeutroMatrix& m, const ThresholdFrame& frame) {
  if (m.cells.empty() || m.cols() == 0) throw ValidationError("matrix has no cells");
  EvidenceScan scan;
  for (const auto& row : m.cells) {
    if (row.size() != m.cols()) throw ValidationError("matrix rows have different lengths");
    for (const auto& cell : row) {
      validate_polar(cell.label, frame);
      scan_polar(scan, cell.label);
    }
  }
  return scan.verdict();
}

bool TripleLess::operator()(const Triple& a, const Triple& b) const {
  return std::tie(a.t, a.i, a.f) < std::tie(b.t, b.i, b.f);
}

namespace {

Rational apply(Combiner c, const Rational& a, const Rational& b) { return c == Combiner::min ? std::min(a, b) : std::max(a, b); }

long long mod(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

LabeledStructure generate_labeled_structure(const std::vector<LabeledResidue>& generators, const LabeledLaw& law,
                                            long long modulus) {
  if (modulus < 1) throw ValidationError("modulus must be at least 1");
  using State = std::pair<long long, Triple>;
  auto less = [](const State& a, const State& b) {
    if (a.first != b.first) return a.first < b.first;
    return TripleLess{}(a.second, b.second);
  };
  std::set<State, decltype(less)> seen(less);
  std::vector<State> frontier;
  for (const auto& g : generators) {
    if (g.labels.empty()) throw ValidationError("generator " + std::to_string(g.residue) + " has no label");
    for (const auto& l : g.labels) {
      State s{mod(g.residue, modulus), l};
      if (seen.insert(s).second) frontier.push_back(s);
    }
  }
  // Each new state is combined with every known state, in both orders.
  while (!frontier.empty()) {
    const State x = frontier.back();
    frontier.pop_back();
    const std::vector<State> known(seen.begin(), seen.end());
    for (const auto& y : known)
      for (const auto& [p, q] : {std::pair<const State*, const State*>{&x, &y}, {&y, &x}}) {
        const long long r = law.op == LabeledLaw::Op::add ? mod(p->first + q->first, modulus)
                                                          : mod(p->first * q->first, modulus);
        const Triple label{apply(law.combine[0], p->second.t, q->second.t),
                           apply(law.combine[1], p->second.i, q->second.i),
                           apply(law.combine[2], p->second.f, q->second.f)};
        State s{r, label};
        if (seen.insert(s).second) frontier.push_back(s);
      }
  }
  LabeledStructure out;
  for (const auto& [r, l] : seen) out[r].insert(l);
  return out;
}

std::string format_labels(const LabelSet& labels) {
  std::array<std::set<Rational>, 3> chans;
  for (const auto& l : labels) {
    chans[0].insert(l.t);
    chans[1].insert(l.i);
    chans[2].insert(l.f);
  }
  std::string out = "(";
  for (int k = 0; k < 3; ++k) {
    if (k) out += ", ";
    if (chans[k].size() == 1) {
      out += to_string(*chans[k].begin());
      continue;
    }
    out += "{";
    bool first = true;
    for (const auto& v : chans[k]) {
      out += (first ? "" : ", ") + to_string(v);
      first = false;
    }
    out += "}";
  }
  return out + ")";
}

namespace {

bool member(const std::vector<OffCollection>& family, const OffCollection& x) {
  return std::find(family.begin(), family.end(), x) != family.end();
}

std::string describe(const OffCollection& c) {
  std::string s = "{";
  bool first = true;
  for (const auto& [id, e] : c.elements()) {
    s += (first ? "" : ", ") + id + "(" + e.t.str() + ", " + e.i.str() + ", " + e.f.str() + ")";
    first = false;
  }
  return s + "}";
}

void check_shared(const std::vector<OffCollection>& family) {
  for (const auto& c : family) {
    if (!(c.frame() == family.front().frame())) throw ValidationError("family members use different frames");
    if (c.size() != family.front().size()) throw ValidationError("family members use different universes");
    for (const auto& [id, e] : c.elements())
      if (!family.front().contains(id)) throw ValidationError("family members use different universes");
  }
}

}  // namespace

StructureReport check_closure(const std::vector<OffCollection>& family, NormFamily fam, ComplementVariant variant) {
  StructureReport r;
  if (family.empty()) return r;
  check_shared(family);
  for (std::size_t p = 0; p < family.size(); ++p) {
    const OffCollection comp = off_complement(family[p], variant);
    if (!member(family, comp)) return {false, "complement of member " + std::to_string(p + 1) + " = " + describe(comp)};
    for (std::size_t q = p; q < family.size(); ++q) {
      const OffCollection u = off_union(family[p], family[q], fam);
      if (!member(family, u))
        return {false, "union of members " + std::to_string(p + 1) + " and " + std::to_string(q + 1) + " = " + describe(u)};
      const OffCollection n = off_intersection(family[p], family[q], fam);
      if (!member(family, n))
        return {false, "intersection of members " + std::to_string(p + 1) + " and " + std::to_string(q + 1) + " = " +
                           describe(n)};
    }
  }
  return r;
}

TopologyKind parse_topology_kind(const std::string& s) {
  if (s == "over") return TopologyKind::over;
  if (s == "under") return TopologyKind::under;
  if (s == "off") return TopologyKind::off;
  throw ValidationError("unknown topology kind '" + s + "' (expected over, under or off)");
}

OffCollection constant_collection(const std::vector<std::string>& ids, const Triple& value,
                                  const ThresholdFrame& frame) {
  OffCollection c(frame);
  for (const auto& id : ids) c.add(crisp_element(id, value.t, value.i, value.f, frame));
  return c;
}

std::pair<Triple, Triple> topology_constants(TopologyKind kind, const ThresholdFrame& fr) {
  const Rational& pt = fr.lo(Channel::T);
  const Rational& pi = fr.lo(Channel::I);
  const Rational& pf = fr.lo(Channel::F);
  const Rational& ot = fr.hi(Channel::T);
  const Rational& oi = fr.hi(Channel::I);
  const Rational& of = fr.hi(Channel::F);
  switch (kind) {
    case TopologyKind::over: return {{Rational(0), oi, of}, {ot, Rational(0), Rational(0)}};
    case TopologyKind::under: return {{pt, Rational(1), Rational(1)}, {Rational(1), pi, pf}};
    case TopologyKind::off: return {{pt, oi, of}, {ot, pi, pf}};
  }
  throw ValidationError("unknown topology kind");
}

TopologyReport check_topology(const std::vector<OffCollection>& family, const ThresholdFrame& frame,
                              TopologyKind kind) {
  if (family.empty()) throw ValidationError("topology check needs a nonempty family");
  for (const auto& c : family)
    if (!(c.frame() == frame)) throw ValidationError("family member uses a different frame");
  check_shared(family);
  std::vector<std::string> ids;
  for (const auto& [id, e] : family.front().elements()) ids.push_back(id);

  TopologyReport rep;
  const auto [lo, hi] = topology_constants(kind, frame);
  for (const Triple& t : {lo, hi}) {
    if (!member(family, constant_collection(ids, t, frame)) && rep.a.pass)
      rep.a = {false, "constant collection " + t.str() + " is missing"};
  }
  for (std::size_t p = 0; p < family.size() && (rep.b.pass || rep.c.pass); ++p)
    for (std::size_t q = p + 1; q < family.size(); ++q) {
      if (rep.b.pass) {
        const OffCollection n = off_intersection(family[p], family[q], NormFamily::min_max);
        if (!member(family, n))
          rep.b = {false, "intersection of members " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                              " = " + describe(n) + " is missing"};
      }
      if (rep.c.pass) {
        const OffCollection u = off_union(family[p], family[q], NormFamily::min_max);
        if (!member(family, u))
          rep.c = {false, "union of members " + std::to_string(p + 1) + " and " + std::to_string(q + 1) + " = " +
                              describe(u) + " is missing"};
      }
    }
  return rep;
}

}  // namespace neutro
