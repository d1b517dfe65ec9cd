#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "neutro/structures.hpp"
#include "support.hpp"

using namespace neutro;
using namespace testing;

namespace {

const ThresholdFrame kWide = make_frame(R("-1.2"), R("1.2"));
const ThresholdFrame kPolar = make_frame(R("-2"), R("2"));

PolarElement plain(const std::string& id, const std::string& t, const std::string& i, const std::string& f) {
  return make_plain(id, tif(T3(t, i, f)));
}

PolarElement plain_v(const std::string& id, SubsetValue t, SubsetValue i, SubsetValue f) {
  return make_plain(id, tif(std::move(t), std::move(i), std::move(f)));
}

PolarElement bipolar(const std::string& id, std::array<const char*, 6> v) {
  return make_bipolar(id, tif(T3(v[0], v[2], v[4])), tif(T3(v[1], v[3], v[5])));
}

NeutroMatrix row(std::vector<MatrixCell> cells) { return NeutroMatrix{{std::move(cells)}}; }

LabeledResidue gen(long long r, const std::string& t, const std::string& i, const std::string& f) {
  return {r, {T3(t, i, f)}};
}

std::vector<std::string> ids{"u", "v"};

}  // namespace

TEST_CASE("enrollment offgraph") {
  NeutroGraph g;
  g.add_vertex(plain("John", "6/15", "3/15", "9/15"));
  g.add_vertex(plain("George", "-9/15", "-6/15", "-3/15"));
  g.add_vertex(plain("Howard", "0", "0", "18/15"));
  g.add_edge("John", "George", plain("e", "-1", "0", "1"));
  const Verdict v = classify_graph(g, kWide);
  CHECK(v.cls == Class::off);
  CHECK_THROWS_AS(g.add_edge("John", "Nobody", plain("e", "0", "0", "0")), ValidationError);
}

TEST_CASE("graph classification") {
  NeutroGraph g;
  g.add_vertex(plain("a", "0.2", "0.3", "0.4"));
  g.add_vertex(plain("b", "1", "0", "0"));
  g.add_edge("a", "b", plain("e", "0.5", "0.5", "0.5"));
  CHECK(classify_graph(g, kWide).cls == Class::standard);

  NeutroGraph bp;
  bp.add_vertex(bipolar("x1", {"1.5", "-0.1", "0.0", "-0.4", "0.1", "-0.2"}));
  CHECK(classify_graph(bp, kPolar).cls == Class::over);
}

TEST_CASE("graph with no edges agrees with the collection") {
  OffCollection c(kWide);
  NeutroGraph g;
  c.add(crisp("p", "0.3", "-0.1", "1.1", kWide));
  c.add(crisp("q", "0.2", "0.3", "0.4", kWide));
  g.add_vertex(plain("p", "0.3", "-0.1", "1.1"));
  g.add_vertex(plain("q", "0.2", "0.3", "0.4"));
  CHECK(classify_graph(g, kWide).cls == classify_collection(c).cls);
}

TEST_CASE("bipolar matrices") {
  NeutroMatrix m1{{{{4, bipolar("4", {"0.9", "-0.1", "0.1", "-0.2", "0.0", "-0.3"})},
                    {5, bipolar("5", {"0.2", "-0.2", "0.5", "-0.3", "0.6", "-0.5"})}},
                   {{7, bipolar("7", {"0.1", "-0.6", "0.5", "-0.5", "0.2", "-0.2"})},
                    {8, bipolar("8", {"0.1", "-0.1", "0.4", "-0.3", "0.3", "-0.2"})}}}};
  CHECK(classify_matrix(m1, kPolar).cls == Class::standard);

  const auto x2 = make_bipolar("x2", Tif{P("0.2"), P("0.0"), C("-1.3", "-0.5")}, Tif{P("-0.4"), P("-0.3"), C("0.2", "0.4")});
  CHECK(classify_matrix(row({{1, x2}}), kPolar).cls == Class::under);

  NeutroMatrix m2{{{{5, bipolar("5", {"1.7", "-0.2", "0.1", "-0.3", "0.2", "-0.1"})}},
                   {{9, bipolar("9", {"0.4", "-0.1", "0.0", "-0.1", "0.5", "-1.6"})}}}};
  CHECK(classify_matrix(m2, kPolar).cls == Class::off);

  const auto m3 = row({{47, bipolar("47", {"0.2", "-1.2", "1.3", "-0.1", "0.0", "-0.5"})}});
  CHECK(classify_matrix(m3, kPolar).cls == Class::off);
}

TEST_CASE("tripolar matrices") {
  const auto standard = make_tripolar("x", tif(T3("0.6", "0.2", "0.4")), tif(T3("0.4", "0.1", "0.6")),
                                      tif(T3("-0.1", "-0.3", "0.0")));
  CHECK(classify_matrix(row({{1, standard}}), kPolar).cls == Class::standard);
}

TEST_CASE("(t, i, f) matrices") {
  const auto a = row({{2, plain("a", "1", "0", "0")}, {5, plain("b", "1", "0", "0")}});
  CHECK(classify_matrix(a, kWide).cls == Class::standard);

  NeutroMatrix d{{{{21, plain_v("a", P("0.1"), P("0.3"), C("0.9", "1.1"))}, {33, plain_v("b", P("0.6"), O("0.7", "0.8"), P("0.9"))}},
                  {{7, plain("c", "1", "0", "0")}, {-5, plain("d", "0", "0", "1")}}}};
  CHECK(classify_matrix(d, kWide).cls == Class::over);

  const auto e = row({{0, plain("a", "1", "0", "1")},
                      {-2, plain_v("b", P("0.2"), C("0.1", "0.3"), SubsetValue::points({R("-0.3"), R("0")}))}});
  CHECK(classify_matrix(e, kWide).cls == Class::under);

  const auto g = row({{25, plain("a", "-0.1", "0.2", "1.3")}, {23, plain("b", "0", "1", "0")},
                      {51, plain_v("c", P("0.2"), O("-0.1", "0.1"), P("0.8"))}});
  const auto g_frame = make_frame(R("-1.2"), R("1.3"));
  CHECK(classify_matrix(g, g_frame).cls == Class::off);

  CHECK_THROWS_AS(classify_matrix(NeutroMatrix{}, kWide), ValidationError);
}

TEST_CASE("labeled structure, additive") {
  const LabeledLaw add{LabeledLaw::Op::add, {Combiner::max, Combiner::min, Combiner::min}};
  const auto s = generate_labeled_structure({gen(1, "1.2", "0.1", "0.3")}, add, 4);
  REQUIRE(s.size() == 4);
  for (long long r = 0; r < 4; ++r) {
    CHECK(s.at(r).size() == 1);
    CHECK(*s.at(r).begin() == T3("1.2", "0.1", "0.3"));
  }
  const auto zero = generate_labeled_structure({gen(0, "0.5", "0.5", "0.5")}, add, 4);
  CHECK(zero.size() == 1);
  CHECK(format_labels(zero.at(0)) == "(0.5, 0.5, 0.5)");
}

TEST_CASE("labeled structure, multiplicative with a hesitant label") {
  const LabeledLaw mul{LabeledLaw::Op::mul, {Combiner::min, Combiner::max, Combiner::max}};
  const std::vector<LabeledResidue> gens{gen(0, "-0.1", "0.1", "0.7"), gen(2, "0.8", "0.2", "0.4")};
  const auto s = generate_labeled_structure(gens, mul, 3);
  REQUIRE(s.size() == 3);
  CHECK(format_labels(s.at(0)) == "(-0.1, {0.1, 0.2}, 0.7)");
  CHECK(format_labels(s.at(1)) == "(0.8, 0.2, 0.4)");
  CHECK(format_labels(s.at(2)) == "(0.8, 0.2, 0.4)");
  CHECK(generate_labeled_structure({gens[1], gens[0]}, mul, 3) == s);
}

TEST_CASE("closure of families") {
  const ThresholdFrame f = kWide;
  // every assignment of {psi, omega} per channel on a one-element universe
  std::vector<OffCollection> all;
  for (int mask = 0; mask < 8; ++mask) {
    auto pick = [&](int bit) { return mask & (1 << bit) ? R("1.2") : R("-1.2"); };
    all.push_back(constant_collection({"x"}, {pick(0), pick(1), pick(2)}, f));
  }
  CHECK(check_closure(all).pass);

  std::vector<OffCollection> missing(all.begin(), all.end() - 1);
  const auto r = check_closure(missing);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());

  // a = psi + omega - a only at the midpoint 0
  CHECK(check_closure({constant_collection({"x"}, T3("0", "0", "0"), f)}, NormFamily::min_max,
                      ComplementVariant::reflect_all)
            .pass);
  CHECK_FALSE(check_closure({constant_collection({"x"}, T3("0.5", "0", "0"), f)}, NormFamily::min_max,
                            ComplementVariant::reflect_all)
                  .pass);
}

TEST_CASE("topology constants") {
  const auto f = make_frame(R("-1.2"), R("1.3"), R("-1.1"), R("1.4"), R("-1.5"), R("1.6"));
  CHECK(topology_constants(TopologyKind::over, f) == std::pair{T3("0", "1.4", "1.6"), T3("1.3", "0", "0")});
  CHECK(topology_constants(TopologyKind::under, f) == std::pair{T3("-1.2", "1", "1"), T3("1", "-1.1", "-1.5")});
  CHECK(topology_constants(TopologyKind::off, f) == std::pair{T3("-1.2", "1.4", "1.6"), T3("1.3", "-1.1", "-1.5")});
}

TEST_CASE("topology verdicts") {
  for (TopologyKind kind : {TopologyKind::over, TopologyKind::under, TopologyKind::off}) {
    CAPTURE(static_cast<int>(kind));
    const auto [lo, hi] = topology_constants(kind, kWide);
    const auto lo_c = constant_collection(ids, lo, kWide), hi_c = constant_collection(ids, hi, kWide);
    CHECK(check_topology({lo_c, hi_c}, kWide, kind).pass());

    const auto r = check_topology({lo_c}, kWide, kind);
    CHECK_FALSE(r.a.pass);
    CHECK_FALSE(r.a.witness.empty());
    CHECK(r.b.pass);
    CHECK(r.c.pass);

    // two incomparable members without their meet and join
    OffCollection p(kWide), q(kWide);
    p.add(crisp("u", "0.5", "0.5", "0.5", kWide));
    p.add(crisp("v", "0.2", "0.2", "0.2", kWide));
    q.add(crisp("u", "0.2", "0.2", "0.2", kWide));
    q.add(crisp("v", "0.5", "0.5", "0.5", kWide));
    const auto broken = check_topology({lo_c, hi_c, p, q}, kWide, kind);
    CHECK(broken.a.pass);
    CHECK_FALSE(broken.b.pass);
    CHECK_FALSE(broken.c.pass);
  }
}

TEST_CASE("constant-valued grid families are closed") {
  std::vector<OffCollection> fam;
  for (const char* t : {"0", "0.6", "1.2"})
    for (const char* i : {"0", "0.6", "1.2"})
      for (const char* f : {"0", "0.6", "1.2"}) fam.push_back(constant_collection(ids, T3(t, i, f), kWide));
  const auto r = check_topology(fam, kWide, TopologyKind::over);
  CHECK(r.pass());
}
