#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neutro/rational.hpp"

namespace neutro {

enum class Sym { TO, T, TU, IO, I, IU, FO, F, FU };
inline constexpr std::array<Sym, 9> kSymbols{Sym::TO, Sym::T, Sym::TU, Sym::IO, Sym::I,
                                             Sym::IU, Sym::FO, Sym::F, Sym::FU};

/// "T_O", "T", "T_U", ...
std::string sym_name(Sym s);
/// Accepts TO, T_O, T_0 and the like.
Sym parse_sym(std::string_view text);

/// A total order on the nine symbols, listed ascending.
class SymbolicOrder {
 public:
  explicit SymbolicOrder(std::array<Sym, 9> ascending);

  int rank(Sym s) const { return rank_[static_cast<int>(s)]; }
  bool less(Sym a, Sym b) const { return rank(a) < rank(b); }
  const std::array<Sym, 9>& chain() const { return chain_; }

 private:
  std::array<Sym, 9> chain_;
  std::array<int, 9> rank_{};
};

/// T_U < I_U < F_U < F < I < T < F_O < I_O < T_O
const SymbolicOrder& default_order();
/// T_U < F_U < I_U < I < F < T < I_O < F_O < T_O
const SymbolicOrder& alternate_order();

/// Fixed involution: over <-> under of the same letter, T <-> F, I fixed.
/// It does not depend on the order.
Sym sym_neg(Sym s);
Sym sym_and(Sym a, Sym b, const SymbolicOrder& order);
Sym sym_or(Sym a, Sym b, const SymbolicOrder& order);
/// max{neg a, b}
Sym sym_implies(Sym a, Sym b, const SymbolicOrder& order);
/// Conjunction of the two implication values.
Sym sym_equiv(Sym p_to_q, Sym q_to_p, const SymbolicOrder& order);

/// Pairs (a, b) where neg(a and b) != neg a or neg b.
std::vector<std::pair<Sym, Sym>> de_morgan_failures(const SymbolicOrder& order);

struct Formula {
  enum class Kind { leaf, neg, conj, disj, implies, equiv };
  Kind kind = Kind::leaf;
  Sym leaf = Sym::I;
  std::shared_ptr<const Formula> lhs, rhs;
};

/// Connectives ! & | -> <-> with that precedence, -> right-associative.
Formula parse_formula(std::string_view text);
Sym eval_formula(const Formula& f, const SymbolicOrder& order = default_order());
Sym eval_formula(std::string_view text, const SymbolicOrder& order = default_order());

}  // namespace neutro
