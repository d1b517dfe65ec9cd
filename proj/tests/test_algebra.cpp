#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "neutro/algebra.hpp"
#include "support.hpp"

using namespace neutro;
using namespace testing;

namespace {

const ThresholdFrame kWide = make_frame(R("-1.2"), R("1.2"));

OffCollection pair_collection(const std::array<std::string, 3>& x1, const std::array<std::string, 3>& x2) {
  OffCollection c(kWide);
  c.add(crisp("x1", x1[0], x1[1], x1[2], kWide));
  c.add(crisp("x2", x2[0], x2[1], x2[2], kWide));
  return c;
}

const OffCollection kA = pair_collection({"-1.1", "0.8", "0.9"}, {"0.3", "0.6", "1.2"});
const OffCollection kB = pair_collection({"0.6", "1.1", "-0.2"}, {"0.3", "0.5", "0.7"});

// Independent of the library: min_max and bounded maps written out directly.
Rational oracle_norm(NormFamily f, const Rational& a, const Rational& b, const Rational& psi, const Rational& omega) {
  if (f == NormFamily::min_max) return a < b ? a : b;
  const Rational s = a + b - omega;
  return s > psi ? s : psi;
}

Rational oracle_conorm(NormFamily f, const Rational& a, const Rational& b, const Rational& psi, const Rational& omega) {
  if (f == NormFamily::min_max) return a < b ? b : a;
  Rational s = a + b;
  if (s > omega) s = omega;
  if (s < psi) s = psi;
  return s;
}

OffCollection random_collection(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-12, 12);
  OffCollection c(kWide);
  for (std::size_t k = 0; k < n; ++k) {
    auto value = [&] {
      if (d(rng) > 6) {
        Rational a = rat(d(rng), 10), b = rat(d(rng), 10);
        if (b < a) std::swap(a, b);
        return SubsetValue::closed(a, b);
      }
      return SubsetValue::point(rat(d(rng), 10));
    };
    c.add(make_element("e" + std::to_string(k), value(), value(), value(), kWide));
  }
  return c;
}

}  // namespace

TEST_CASE("component complement") {
  CHECK(component_complement(P("0.8"), R("-1.2"), R("1.2")) == P("-0.8"));
  CHECK(component_complement(P("1.2"), R("-1.2"), R("1.2")) == P("-1.2"));
  CHECK(component_complement(P("0.7"), R("0"), R("1")) == P("0.3"));
  const auto v = SubsetValue::interval(R("0.1"), true, R("0.5"), false);
  CHECK(component_complement(v, R("-1.2"), R("1.2")) == SubsetValue::interval(R("-0.5"), false, R("-0.1"), true));
}

TEST_CASE("offcomplement of the worked pair") {
  const auto c = off_complement(kA);
  CHECK(c == pair_collection({"0.9", "-0.8", "-1.1"}, {"1.2", "-0.6", "0.3"}));
}

TEST_CASE("swap_tf needs matching T and F limits") {
  const auto f = make_frame(R("-1"), R("2"), R("-1"), R("2"), R("-1"), R("1.5"));
  OffCollection c(f);
  c.add(crisp("x", "0.5", "0.5", "0.5", f));
  CHECK_THROWS_AS(off_complement(c, ComplementVariant::swap_tf), ValidationError);
  CHECK_NOTHROW(off_complement(c, ComplementVariant::reflect_all));
}

TEST_CASE("norms on the worked values") {
  const Rational psi = R("-1.2"), omega = R("1.2");
  CHECK(offnorm(NormFamily::bounded, P("-1.1"), P("0.6"), psi, omega) == P("-1.2"));
  CHECK(offnorm(NormFamily::min_max, P("-1.1"), P("0.6"), psi, omega) == P("-1.1"));
  CHECK(offconorm(NormFamily::bounded, P("0.3"), P("0.3"), psi, omega) == P("0.6"));
  CHECK(offconorm(NormFamily::min_max, P("-1.1"), P("0.6"), psi, omega) == P("0.6"));
  CHECK(offnorm(NormFamily::min_max, C("0.1", "0.5"), P("0.3"), psi, omega) == C("0.1", "0.3"));
}

TEST_CASE("norm boundary conditions against a direct oracle") {
  const Rational psi = R("-1.2"), omega = R("1.2");
  for (int k = -12; k <= 12; ++k) {
    const Rational a = rat(k, 10);
    for (NormFamily f : {NormFamily::min_max, NormFamily::bounded}) {
      CHECK(offnorm(f, P(to_string(a)), P("-1.2"), psi, omega) == P("-1.2"));
      CHECK(offnorm(f, P(to_string(a)), P("1.2"), psi, omega).crisp() == a);
    }
    CHECK(offconorm(NormFamily::min_max, P(to_string(a)), P("1.2"), psi, omega) == P("1.2"));
    CHECK(offconorm(NormFamily::min_max, P(to_string(a)), P("-1.2"), psi, omega).crisp() == a);
  }
}

TEST_CASE("crisp operators match the oracle on a 25-point grid") {
  const Rational psi = R("-1.2"), omega = R("1.2");
  for (NormFamily f : {NormFamily::min_max, NormFamily::bounded}) {
    const BinaryOp n = crisp_norm(f, psi, omega), c = crisp_conorm(f, psi, omega);
    for (int i = -12; i <= 12; ++i)
      for (int j = -12; j <= 12; ++j) {
        const Rational a = rat(i, 10), b = rat(j, 10);
        CHECK(n(a, b) == oracle_norm(f, a, b, psi, omega));
        CHECK(c(a, b) == oracle_conorm(f, a, b, psi, omega));
      }
  }
}

TEST_CASE("element and collection operators reproduce the worked results") {
  CHECK(off_union(kA, kB) == pair_collection({"0.6", "0.8", "-0.2"}, {"0.3", "0.5", "0.7"}));
  CHECK(off_intersection(kA, kB) == pair_collection({"-1.1", "1.1", "0.9"}, {"0.3", "0.6", "1.2"}));
  CHECK(off_union(kA, kB, NormFamily::bounded) == pair_collection({"-0.5", "0.7", "-0.5"}, {"0.6", "-0.1", "0.7"}));
  CHECK(off_intersection(kA, kB, NormFamily::bounded) ==
        pair_collection({"-1.2", "1.2", "0.7"}, {"-0.6", "1.1", "1.2"}));
  CHECK(off_union(kA, kA) == kA);
  CHECK(off_intersection(kA, kA) == kA);

  const Element top = crisp("t", "1.2", "-1.2", "-1.2", kWide);
  const Element& x1 = kA.at("x1");
  for (NormFamily f : {NormFamily::min_max, NormFamily::bounded}) {
    const Element r = off_and(x1, top, f, kWide);
    CHECK(r.t == x1.t);
  }
  CHECK(off_and(x1, top, NormFamily::min_max, kWide).i == x1.i);
}

TEST_CASE("domain and frame mismatches are rejected") {
  OffCollection other(kWide);
  other.add(crisp("x1", "0", "0", "0", kWide));
  CHECK_THROWS_AS(off_union(kA, other), ValidationError);
  OffCollection unit(unit_frame());
  unit.add(crisp("x1", "0", "0", "0", unit_frame()));
  unit.add(crisp("x2", "0", "0", "0", unit_frame()));
  CHECK_THROWS_AS(off_intersection(kA, unit), ValidationError);
}

TEST_CASE("complement is an involution and De Morgan holds for min_max") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int n = 0; n < 200; ++n) {
    const auto a = random_collection(rng, 3), b = random_collection(rng, 3);
    for (auto v : {ComplementVariant::swap_tf, ComplementVariant::reflect_tf, ComplementVariant::reflect_all})
      CHECK(off_complement(off_complement(a, v), v) == a);
    CHECK(off_complement(off_intersection(a, b)) == off_union(off_complement(a), off_complement(b)));
    CHECK(off_complement(off_union(a, b)) == off_intersection(off_complement(a), off_complement(b)));
  }
}

TEST_CASE("axiom verification") {
  const auto mm = verify_family(NormFamily::min_max, kWide, 500);
  REQUIRE(mm.size() == 6);
  for (const auto& r : mm) CHECK_MESSAGE(r.pass(), r.subject);

  const auto bn = verify_norm_axioms(crisp_norm(NormFamily::bounded, R("-1.2"), R("1.2")), NormRole::norm, R("-1.2"),
                                     R("1.2"), 500);
  CHECK(bn.pass());

  const BinaryOp product = [](const Rational& a, const Rational& b) { return a * b; };
  const auto pr = verify_norm_axioms(product, NormRole::norm, R("-1.2"), R("1.2"), 500, kDefaultSeed, "product");
  CHECK_FALSE(pr.axioms[0].pass);
  CHECK(pr.axioms[0].name == "overbounding");
  CHECK_FALSE(pr.axioms[0].counterexample.empty());
}

TEST_CASE("axiom sampling is reproducible") {
  CHECK(sample_grid(R("-1.2"), R("1.2"), 50, 3) == sample_grid(R("-1.2"), R("1.2"), 50, 3));
  CHECK(sample_grid(R("-1.2"), R("1.2"), 50, 3) != sample_grid(R("-1.2"), R("1.2"), 50, 4));
  for (const auto& x : sample_grid(R("-1.2"), R("1.2"), 200, 9)) {
    CHECK(x >= R("-1.2"));
    CHECK(x <= R("1.2"));
  }
}
