#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace neutro;
using namespace testing;

namespace {

const ThresholdFrame kWide = make_frame(R("-1.2"), R("1.2"));

OffCollection collection(const ThresholdFrame& frame, std::vector<Element> es) {
  OffCollection c(frame);
  for (auto& e : es) c.add(std::move(e));
  return c;
}

}  // namespace

TEST_CASE("frames") {
  CHECK_NOTHROW(make_frame(R("-1.2"), R("1.2"), R("-1.2"), R("1.2"), R("-1.2"), R("1.2")));
  CHECK(make_frame(R("0"), R("1")) == unit_frame());
  CHECK_THROWS_AS(make_frame(R("0.1"), R("1.2")), ValidationError);
  CHECK_THROWS_AS(make_frame(R("-0.5"), R("0.9")), ValidationError);
  CHECK_THROWS_AS(make_frame(R("0"), R("1"), R("0"), R("1"), R("0.2"), R("1")), ValidationError);
}

TEST_CASE("elements are checked against the frame") {
  CHECK_THROWS_AS(crisp("x", "1.3", "0", "0", kWide), ValidationError);
  CHECK_THROWS_AS(make_element("x", SubsetValue{}, P("0"), P("0"), kWide), ValidationError);
  CHECK_NOTHROW(crisp("x", "1.2", "-1.2", "0", kWide));
}

TEST_CASE("component classification") {
  SUBCASE("closed 1 does not spoil totality") {
    const auto r = classify_component(C("1", "1.4"), R("0"), R("1.4"));
    CHECK(r.cls == Class::over);
    CHECK(r.totally_over);
    CHECK_FALSE(r.partially_over);
  }
  SUBCASE("partially under") {
    const auto r = classify_component(C("-0.2", "0.2"), R("-1"), R("1"));
    CHECK(r.cls == Class::under);
    CHECK(r.partially_under);
    CHECK_FALSE(r.totally_under);
  }
  SUBCASE("open at zero is totally under") {
    const auto r = classify_component(O("-0.8", "0"), R("-1"), R("1"));
    CHECK(r.totally_under);
  }
  SUBCASE("one component both ways") {
    CHECK(classify_component(C("-0.2", "1.1"), R("-1.2"), R("1.2")).cls == Class::off);
  }
  SUBCASE("exactly 1 is not over") {
    CHECK(classify_component(P("1"), R("0"), R("1")).cls == Class::standard);
  }
  CHECK_THROWS_AS(classify_component(SubsetValue{}, R("0"), R("1")), ValidationError);
}

TEST_CASE("element classification") {
  const auto wide2 = make_frame(R("-1"), R("2"));
  CHECK(classify_element(crisp("l", "0.1", "-0.2", "1.3", wide2), wide2).cls == Class::off);
  CHECK(classify_element(crisp("x1", "1.2", "0.4", "0.1", kWide), kWide).cls == Class::over);
  CHECK(classify_element(crisp("x", "1", "0", "0", unit_frame()), unit_frame()).cls == Class::standard);
  const auto e = make_element("y", C("-0.2", "1.1"), P("0"), P("0"), kWide);
  CHECK(classify_element(e, kWide).cls == Class::off);
}

TEST_CASE("collection classification with witnesses") {
  const auto a3 = collection(kWide, {crisp("x1", "1.2", "0.4", "0.1", kWide), crisp("x2", "0.2", "0.3", "-0.7", kWide)});
  const Verdict v = classify_collection(a3);
  CHECK(v.cls == Class::off);
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0].str() == "x1.T over via 1.2");
  CHECK(v.witnesses[1].str() == "x2.F under via -0.7");

  const auto a2 = collection(kWide, {crisp("x1", "-0.4", "0.5", "0.3", kWide), crisp("x2", "0.2", "0.5", "-0.2", kWide)});
  CHECK(classify_collection(a2).cls == Class::under);
  CHECK(classify_collection(collection(unit_frame(), {crisp("x", "0.5", "0.5", "0.5", unit_frame())})).cls ==
        Class::standard);
  CHECK_THROWS_AS(classify_collection(OffCollection(kWide)), ValidationError);
}

TEST_CASE("singleton collection agrees with its element") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-12, 12);
  for (int n = 0; n < 200; ++n) {
    const auto e = crisp_element("x", rat(d(rng), 10), rat(d(rng), 10), rat(d(rng), 10), kWide);
    CHECK(classify_collection(collection(kWide, {e})).cls == classify_element(e, kWide).cls);
  }
}

TEST_CASE("reflection about the frame centre turns over into under") {
  // With psi + omega = 1, x -> 1 - x maps "above 1" onto "below 0".
  const Rational psi = R("-0.5"), omega = R("1.5");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-5, 15);
  for (int n = 0; n < 300; ++n) {
    Rational a = rat(d(rng), 10), b = rat(d(rng), 10);
    if (b < a) std::swap(a, b);
    const auto v = SubsetValue::closed(a, b);
    const auto r = classify_component(v, psi, omega);
    const auto m = classify_component(v.reflect(psi + omega), psi, omega);
    CHECK((r.cls == Class::over || r.cls == Class::off) == (m.cls == Class::under || m.cls == Class::off));
  }
}

TEST_CASE("normalize_attribute") {
  CHECK(normalize_attribute(R("25"), R("0"), R("20")) == R("1.25"));
  CHECK(normalize_attribute(R("-28"), R("0"), R("20")) == R("-1.4"));
  CHECK(normalize_attribute(R("3"), R("3"), R("7")) == 0);
  CHECK(normalize_attribute(R("7"), R("3"), R("7")) == 1);
  CHECK_THROWS_AS(normalize_attribute(R("1"), R("2"), R("2")), ValidationError);
  // affine: equal steps in v give equal steps in the result
  const Rational s1 = normalize_attribute(R("5"), R("1"), R("9")) - normalize_attribute(R("3"), R("1"), R("9"));
  const Rational s2 = normalize_attribute(R("9"), R("1"), R("9")) - normalize_attribute(R("7"), R("1"), R("9"));
  CHECK(s1 == s2);
}

TEST_CASE("refined elements") {
  auto refined = [](std::string id, std::vector<std::string> ts, std::vector<std::string> is,
                    std::vector<std::string> fs, RefinedForm form) {
    RefinedElement e;
    e.id = std::move(id);
    e.form = form;
    for (auto& s : ts) e.ts.push_back(P(s));
    for (auto& s : is) e.is.push_back(P(s));
    for (auto& s : fs) e.fs.push_back(P(s));
    return e;
  };
  const auto x1 = refined("x1", {"-0.1", "0.2"}, {"0.3"}, {"0.6", "0.5", "0.3"}, RefinedForm::neutrosophic);
  const auto x2 = refined("x2", {"0", "0.9"}, {"0.2"}, {"0.4", "1.1", "0.7"}, RefinedForm::neutrosophic);
  const Verdict v = classify_refined(std::vector<RefinedElement>{x1, x2}, kWide);
  CHECK(v.cls == Class::off);
  CHECK(v.witnesses[0].str() == "x1.T1 under via -0.1");
  CHECK(v.witnesses[1].str() == "x2.F2 over via 1.1");

  SUBCASE("arity rules") {
    CHECK_THROWS_AS(validate_refined(refined("a", {"0.1"}, {"0.1"}, {"0.1"}, RefinedForm::neutrosophic), kWide),
                    ValidationError);
    CHECK_NOTHROW(validate_refined(refined("a", {"0.1", "0.2"}, {}, {}, RefinedForm::fuzzy), kWide));
    CHECK_THROWS_AS(validate_refined(refined("a", {"0.1"}, {}, {}, RefinedForm::fuzzy), kWide), ValidationError);
    CHECK_NOTHROW(validate_refined(refined("a", {"0.1", "0.2"}, {}, {"0.3"}, RefinedForm::intuitionistic), kWide));
    CHECK_THROWS_AS(validate_refined(refined("a", {"0.1"}, {}, {"0.3"}, RefinedForm::intuitionistic), kWide),
                    ValidationError);
  }
  SUBCASE("intuitionistic sum constraint applies only to the classical variant") {
    auto e = refined("a", {"0.4", "0.3"}, {}, {"0.5"}, RefinedForm::intuitionistic);
    e.off_variant = false;
    CHECK_THROWS_AS(validate_refined(e, kWide), ValidationError);
    e.off_variant = true;
    CHECK_NOTHROW(validate_refined(e, kWide));
  }
  SUBCASE("standard") {
    const auto s = refined("s", {"0.1", "0.2"}, {"0.3"}, {"0.4"}, RefinedForm::neutrosophic);
    CHECK(classify_refined(s, kWide).cls == Class::standard);
  }
}

TEST_CASE("label elements") {
  const LabelScale scale = make_label_scale({"L0", "L1", "L2", "L3", "L4"}, 1, 1);
  CHECK(scale.value(2) == R("0.5"));
  CHECK(scale.value(5) == R("1.25"));
  CHECK(classify_label_element({5}, {1}, {-1}, scale).cls == Class::off);
  CHECK(classify_label_element({0, 4}, {1, 2}, {3}, scale).cls == Class::standard);
  CHECK(classify_label_element({5}, {1}, {2}, scale).cls == Class::over);
  CHECK_THROWS_AS(classify_label_element({6}, {1}, {2}, scale), ValidationError);
  CHECK_THROWS_AS(make_label_scale({"L0"}, 0, 0), ValidationError);
}

TEST_CASE("complex elements scan amplitudes") {
  const ThresholdFrame f = make_frame(R("-1"), R("2"));
  ComplexElement e{"x1", {P("1.2"), P("0.7"), P("0.1")}, {P("3.14159"), P("1.5708"), P("6.28318")}};
  CHECK(classify_complex(e, f).cls == Class::over);
  ComplexElement u{"y", {P("0.7"), C("0.6", "0.7"), O("-0.8", "0")}, {P("0.3"), C("4", "5"), P("0.3")}};
  CHECK(classify_complex(u, f).cls == Class::under);
  CHECK(classify_complex(u, f, true).cls == Class::off);
  ComplexElement o{"x3", {P("-0.7"), P("0.6"), P("1.3")}, {P("7"), P("2"), P("9")}};
  CHECK(classify_complex(o, f).cls == Class::off);
  ComplexElement bad{"z", {P("-1.5"), P("0"), P("0")}, {P("0"), P("0"), P("0")}};
  CHECK_THROWS_AS(classify_complex(bad, f), ValidationError);
}

TEST_CASE("offquantifiers") {
  const auto a3 = collection(kWide, {crisp("x1", "1.2", "0.4", "0.1", kWide), crisp("x2", "0.2", "0.3", "0.7", kWide)});
  const auto always = [](const Element&) { return true; };
  const auto r = off_exists(a3, always);
  CHECK(r.holds);
  CHECK(r.ids == std::vector<std::string>{"x1"});
  const auto t_over = [](const Element& e) { return e.t.has_point_above(Rational(1)); };
  CHECK(off_exists(a3, t_over).ids == std::vector<std::string>{"x1"});
  CHECK_FALSE(off_exists(OffCollection(kWide), always).holds);

  const auto f_small = [](const Element& e) { return !e.f.has_point_above(R("0.5")); };
  const auto q = off_forall(a3, f_small);
  CHECK_FALSE(q.holds);
  CHECK(q.ids == std::vector<std::string>{"x2"});
  CHECK(off_forall(a3, always).holds);
  CHECK(off_forall(OffCollection(kWide), always).holds);
}
