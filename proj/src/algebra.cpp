#include "neutro/algebra.hpp"

#include <algorithm>
#include <random>

namespace neutro {

const char* family_name(NormFamily f) { return f == NormFamily::min_max ? "minmax" : "bounded"; }

NormFamily parse_family(const std::string& s) {
  if (s == "minmax" || s == "min_max") return NormFamily::min_max;
  if (s == "bounded") return NormFamily::bounded;
  throw ValidationError("unknown norm family '" + s + "' (expected minmax or bounded)");
}

const char* variant_name(ComplementVariant v) {
  switch (v) {
    case ComplementVariant::swap_tf: return "swap_tf";
    case ComplementVariant::reflect_tf: return "reflect_tf";
    case ComplementVariant::reflect_all: return "reflect_all";
  }
  return "?";
}

ComplementVariant parse_variant(const std::string& s) {
  if (s == "swap_tf") return ComplementVariant::swap_tf;
  if (s == "reflect_tf") return ComplementVariant::reflect_tf;
  if (s == "reflect_all") return ComplementVariant::reflect_all;
  throw ValidationError("unknown complement variant '" + s + "'");
}

SubsetValue component_complement(const SubsetValue& v, const Rational& psi, const Rational& omega) {
  return v.reflect(psi + omega);
}

Element complement_element(const Element& e, ComplementVariant variant, const ThresholdFrame& frame) {
  auto refl = [&](Channel c) { return component_complement(e.at(c), frame.lo(c), frame.hi(c)); };
  Element out{e.id, {}, {}, {}};
  switch (variant) {
    case ComplementVariant::swap_tf:
      if (frame.lo(Channel::T) != frame.lo(Channel::F) || frame.hi(Channel::T) != frame.hi(Channel::F))
        throw ValidationError("swap_tf complement needs identical T and F limits");
      out.t = e.f;
      out.i = refl(Channel::I);
      out.f = e.t;
      break;
    case ComplementVariant::reflect_tf:
      out.t = refl(Channel::T);
      out.i = e.i;
      out.f = refl(Channel::F);
      break;
    case ComplementVariant::reflect_all:
      out.t = refl(Channel::T);
      out.i = refl(Channel::I);
      out.f = refl(Channel::F);
      break;
  }
  return out;
}

OffCollection off_complement(const OffCollection& a, ComplementVariant variant) {
  OffCollection out(a.frame());
  for (const auto& [id, e] : a.elements()) out.add(complement_element(e, variant, a.frame()));
  return out;
}

SubsetValue offnorm(NormFamily fam, const SubsetValue& a, const SubsetValue& b, const Rational& psi,
                    const Rational& omega) {
  const SubsetValue x = a.hull(), y = b.hull();
  if (fam == NormFamily::min_max) return clamp(interval_min(x, y), psi, omega);
  return clamp(interval_sum(x, y).affine(Rational(1), -omega), psi, omega);
}

SubsetValue offconorm(NormFamily fam, const SubsetValue& a, const SubsetValue& b, const Rational& psi,
                      const Rational& omega) {
  const SubsetValue x = a.hull(), y = b.hull();
  if (fam == NormFamily::min_max) return clamp(interval_max(x, y), psi, omega);
  return clamp(interval_sum(x, y), psi, omega);
}

namespace {

void require_same_frame(const ThresholdFrame& a, const ThresholdFrame& b) {
  if (!(a == b)) throw ValidationError("frame mismatch between operands");
}

template <class Op>
OffCollection elementwise(const OffCollection& a, const OffCollection& b, Op op) {
  require_same_frame(a.frame(), b.frame());
  for (const auto& [id, e] : a.elements())
    if (!b.contains(id)) throw ValidationError("element '" + id + "' missing from the second operand");
  for (const auto& [id, e] : b.elements())
    if (!a.contains(id)) throw ValidationError("element '" + id + "' missing from the first operand");
  OffCollection out(a.frame());
  for (const auto& [id, e] : a.elements()) out.add(op(e, b.at(id)));
  return out;
}

}  // namespace

Element off_and(const Element& e1, const Element& e2, NormFamily fam, const ThresholdFrame& frame) {
  validate_element(e1, frame);
  validate_element(e2, frame);
  const auto& fr = frame;
  return Element{e1.id, offnorm(fam, e1.t, e2.t, fr.lo(Channel::T), fr.hi(Channel::T)),
                 offconorm(fam, e1.i, e2.i, fr.lo(Channel::I), fr.hi(Channel::I)),
                 offconorm(fam, e1.f, e2.f, fr.lo(Channel::F), fr.hi(Channel::F))};
}

Element off_or(const Element& e1, const Element& e2, NormFamily fam, const ThresholdFrame& frame) {
  validate_element(e1, frame);
  validate_element(e2, frame);
  const auto& fr = frame;
  return Element{e1.id, offconorm(fam, e1.t, e2.t, fr.lo(Channel::T), fr.hi(Channel::T)),
                 offnorm(fam, e1.i, e2.i, fr.lo(Channel::I), fr.hi(Channel::I)),
                 offnorm(fam, e1.f, e2.f, fr.lo(Channel::F), fr.hi(Channel::F))};
}

OffCollection off_union(const OffCollection& a, const OffCollection& b, NormFamily fam) {
  return elementwise(a, b, [&](const Element& x, const Element& y) { return off_or(x, y, fam, a.frame()); });
}

OffCollection off_intersection(const OffCollection& a, const OffCollection& b, NormFamily fam) {
  return elementwise(a, b, [&](const Element& x, const Element& y) { return off_and(x, y, fam, a.frame()); });
}

BinaryOp crisp_norm(NormFamily fam, const Rational& psi, const Rational& omega) {
  return [=](const Rational& a, const Rational& b) {
    return offnorm(fam, SubsetValue::point(a), SubsetValue::point(b), psi, omega).crisp();
  };
}

BinaryOp crisp_conorm(NormFamily fam, const Rational& psi, const Rational& omega) {
  return [=](const Rational& a, const Rational& b) {
    return offconorm(fam, SubsetValue::point(a), SubsetValue::point(b), psi, omega).crisp();
  };
}

bool AxiomReport::pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.pass; });
}

std::vector<Rational> sample_grid(const Rational& psi, const Rational& omega, std::size_t count,
                                  std::uint64_t seed, unsigned grid) {
  std::mt19937_64 gen(seed);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t step = gen() % (static_cast<std::uint64_t>(grid) + 1);
    out.push_back(psi + (omega - psi) * Rational(static_cast<long long>(step), grid));
  }
  return out;
}

namespace {

std::string show(std::initializer_list<std::pair<const char*, Rational>> args) {
  std::string s;
  for (const auto& [name, v] : args) s += (s.empty() ? "" : ", ") + std::string(name) + "=" + to_string(v);
  return s;
}

}  // namespace

AxiomReport verify_norm_axioms(const BinaryOp& op, NormRole role, const Rational& psi, const Rational& omega,
                               std::size_t sample_count, std::uint64_t seed, const std::string& subject) {
  if (sample_count < 1) throw ValidationError("sample_count must be at least 1");
  std::vector<Rational> boundary{psi, Rational(0), Rational(1), omega};
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

  const auto draws = sample_grid(psi, omega, 5 * sample_count, seed);
  std::vector<std::pair<Rational, Rational>> pairs;
  std::vector<std::array<Rational, 3>> triples;
  for (const auto& a : boundary)
    for (const auto& b : boundary) {
      pairs.emplace_back(a, b);
      for (const auto& c : boundary) triples.push_back({a, b, c});
    }
  for (std::size_t k = 0; k < sample_count; ++k) {
    pairs.emplace_back(draws[2 * k], draws[2 * k + 1]);
    const std::size_t base = 2 * sample_count + 3 * k;
    triples.push_back({draws[base], draws[base + 1], draws[base + 2]});
  }

  AxiomResult over{"overbounding", true, "", 0}, comm{"commutativity", true, "", 0}, mono{"monotonicity", true, "", 0},
      assoc{"associativity", true, "", 0};
  auto fail = [](AxiomResult& r, std::string msg) {
    if (r.pass) r.counterexample = std::move(msg);
    r.pass = false;
  };

  // absorbing element and identity element of the operation
  const Rational absorb = role == NormRole::norm ? psi : omega;
  const Rational ident = role == NormRole::norm ? omega : psi;
  auto check_bound = [&](const Rational& a) {
    ++over.checked;
    const Rational z = op(a, absorb);
    if (z != absorb) fail(over, show({{"a", a}, {"b", absorb}}) + ": got " + to_string(z) + ", want " + to_string(absorb));
    const Rational u = op(a, ident);
    if (u != a) fail(over, show({{"a", a}, {"b", ident}}) + ": got " + to_string(u) + ", want " + to_string(a));
  };
  for (const auto& a : boundary) check_bound(a);
  for (const auto& [a, b] : pairs) check_bound(a);

  for (const auto& [a, b] : pairs) {
    ++comm.checked;
    const Rational ab = op(a, b), ba = op(b, a);
    if (ab != ba) fail(comm, show({{"a", a}, {"b", b}}) + ": " + to_string(ab) + " != " + to_string(ba));
  }

  for (const auto& t : triples) {
    const Rational lo = std::min(t[0], t[1]), hi = std::max(t[0], t[1]);
    const Rational& c = t[2];
    ++mono.checked;
    const Rational x = op(lo, c), y = op(hi, c);
    if (x > y)
      fail(mono, show({{"a", lo}, {"a'", hi}, {"b", c}}) + ": " + to_string(x) + " > " + to_string(y));

    ++assoc.checked;
    const Rational left = op(op(t[0], t[1]), t[2]);
    const Rational right = op(t[0], op(t[1], t[2]));
    if (left != right)
      fail(assoc, show({{"a", t[0]}, {"b", t[1]}, {"c", t[2]}}) + ": " + to_string(left) + " != " + to_string(right));
  }

  return AxiomReport{subject, {over, comm, mono, assoc}};
}

std::vector<AxiomReport> verify_family(NormFamily fam, const ThresholdFrame& frame, std::size_t sample_count,
                                       std::uint64_t seed) {
  std::vector<AxiomReport> out;
  for (Channel c : kChannels) {
    const Rational& psi = frame.lo(c);
    const Rational& omega = frame.hi(c);
    const std::string tag = std::string(family_name(fam)) + " " + channel_name(c);
    out.push_back(verify_norm_axioms(crisp_norm(fam, psi, omega), NormRole::norm, psi, omega, sample_count, seed,
                                     tag + " norm"));
    out.push_back(verify_norm_axioms(crisp_conorm(fam, psi, omega), NormRole::conorm, psi, omega, sample_count,
                                     seed, tag + " conorm"));
  }
  return out;
}

}  // namespace neutro
