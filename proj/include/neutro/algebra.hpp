#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

enum class NormFamily { min_max, bounded };
const char* family_name(NormFamily f);
NormFamily parse_family(const std::string& s);

/// swap_tf:     <F, psi_I + omega_I - I, T>
/// reflect_tf:  <psi_T + omega_T - T, I, psi_F + omega_F - F>
/// reflect_all: every channel reflected
enum class ComplementVariant { swap_tf, reflect_tf, reflect_all };
const char* variant_name(ComplementVariant v);
ComplementVariant parse_variant(const std::string& s);

/// x -> psi + omega - x, pointwise.
SubsetValue component_complement(const SubsetValue& v, const Rational& psi, const Rational& omega);

Element complement_element(const Element& e, ComplementVariant variant, const ThresholdFrame& frame);
OffCollection off_complement(const OffCollection& a, ComplementVariant variant = ComplementVariant::swap_tf);

/// Multi-piece values are replaced by their hull first.
SubsetValue offnorm(NormFamily fam, const SubsetValue& a, const SubsetValue& b, const Rational& psi,
                    const Rational& omega);
/// The bounded conorm is min{omega, a + b}, additionally held at or above psi.
SubsetValue offconorm(NormFamily fam, const SubsetValue& a, const SubsetValue& b, const Rational& psi,
                      const Rational& omega);

Element off_and(const Element& e1, const Element& e2, NormFamily fam, const ThresholdFrame& frame);
Element off_or(const Element& e1, const Element& e2, NormFamily fam, const ThresholdFrame& frame);

OffCollection off_union(const OffCollection& a, const OffCollection& b, NormFamily fam = NormFamily::min_max);
OffCollection off_intersection(const OffCollection& a, const OffCollection& b,
                               NormFamily fam = NormFamily::min_max);

/// Crisp binary operation on one channel.
using BinaryOp = std::function<Rational(const Rational&, const Rational&)>;

BinaryOp crisp_norm(NormFamily fam, const Rational& psi, const Rational& omega);
BinaryOp crisp_conorm(NormFamily fam, const Rational& psi, const Rational& omega);

enum class NormRole { norm, conorm };

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::string counterexample;
  std::size_t checked = 0;
};

struct AxiomReport {
  std::string subject;
  std::vector<AxiomResult> axioms;

  bool pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20190901;

/// Random crisp values in [psi, omega] on a 1/grid lattice, drawn from a
/// seeded mt19937_64 so reports are reproducible.
std::vector<Rational> sample_grid(const Rational& psi, const Rational& omega, std::size_t count,
                                  std::uint64_t seed, unsigned grid = 1000);

/// Overbounding, commutativity, monotonicity and associativity on the
/// boundary points {psi, 0, 1, omega} and `sample_count` random pairs
/// (and as many random triples).
AxiomReport verify_norm_axioms(const BinaryOp& op, NormRole role, const Rational& psi, const Rational& omega,
                               std::size_t sample_count, std::uint64_t seed = kDefaultSeed,
                               const std::string& subject = "candidate");

/// Both the norm and the conorm of a family, on every channel of the frame.
std::vector<AxiomReport> verify_family(NormFamily fam, const ThresholdFrame& frame, std::size_t sample_count,
                                       std::uint64_t seed = kDefaultSeed);

}  // namespace neutro
