#include "neutro/symbolic.hpp"

#include <algorithm>
#include <cctype>

namespace neutro {

std::string sym_name(Sym s) {
  switch (s) {
    case Sym::TO: return "T_O";
    case Sym::T: return "T";
    case Sym::TU: return "T_U";
    case Sym::IO: return "I_O";
    case Sym::I: return "I";
    case Sym::IU: return "I_U";
    case Sym::FO: return "F_O";
    case Sym::F: return "F";
    case Sym::FU: return "F_U";
  }
  return "?";
}

Sym parse_sym(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '_') s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s.size() == 2 && s[1] == '0') s[1] = 'O';
  for (Sym x : kSymbols) {
    std::string name = sym_name(x);
    name.erase(std::remove(name.begin(), name.end(), '_'), name.end());
    if (name == s) return x;
  }
  throw ValidationError("unknown symbol '" + std::string(text) + "'");
}

SymbolicOrder::SymbolicOrder(std::array<Sym, 9> ascending) : chain_(ascending) {
  rank_.fill(-1);
  for (int k = 0; k < 9; ++k) {
    int& r = rank_[static_cast<int>(chain_[k])];
    if (r != -1) throw ValidationError("symbolic order lists " + sym_name(chain_[k]) + " twice");
    r = k;
  }
}

const SymbolicOrder& default_order() {
  static const SymbolicOrder order({Sym::TU, Sym::IU, Sym::FU, Sym::F, Sym::I, Sym::T, Sym::FO, Sym::IO, Sym::TO});
  return order;
}

const SymbolicOrder& alternate_order() {
  static const SymbolicOrder order({Sym::TU, Sym::FU, Sym::IU, Sym::I, Sym::F, Sym::T, Sym::IO, Sym::FO, Sym::TO});
  return order;
}

Sym sym_neg(Sym s) {
  switch (s) {
    case Sym::TO: return Sym::TU;
    case Sym::TU: return Sym::TO;
    case Sym::IO: return Sym::IU;
    case Sym::IU: return Sym::IO;
    case Sym::FO: return Sym::FU;
    case Sym::FU: return Sym::FO;
    case Sym::T: return Sym::F;
    case Sym::F: return Sym::T;
    case Sym::I: return Sym::I;
  }
  return s;
}

Sym sym_and(Sym a, Sym b, const SymbolicOrder& order) { return order.less(b, a) ? b : a; }
Sym sym_or(Sym a, Sym b, const SymbolicOrder& order) { return order.less(a, b) ? b : a; }
Sym sym_implies(Sym a, Sym b, const SymbolicOrder& order) { return sym_or(sym_neg(a), b, order); }
Sym sym_equiv(Sym p_to_q, Sym q_to_p, const SymbolicOrder& order) { return sym_and(p_to_q, q_to_p, order); }

std::vector<std::pair<Sym, Sym>> de_morgan_failures(const SymbolicOrder& order) {
  std::vector<std::pair<Sym, Sym>> out;
  for (Sym a : kSymbols)
    for (Sym b : kSymbols)
      if (sym_neg(sym_and(a, b, order)) != sym_or(sym_neg(a), sym_neg(b), order)) out.emplace_back(a, b);
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Formula parse() {
    Formula f = equiv();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("formula, column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  static Formula node(Formula::Kind k, Formula a, Formula b) {
    Formula f;
    f.kind = k;
    f.lhs = std::make_shared<const Formula>(std::move(a));
    f.rhs = std::make_shared<const Formula>(std::move(b));
    return f;
  }

  Formula equiv() {
    Formula f = implies();
    while (eat("<->")) f = node(Formula::Kind::equiv, std::move(f), implies());
    return f;
  }

  Formula implies() {
    Formula f = disj();
    skip();
    if (s_.substr(pos_, 3) == "<->") return f;
    if (eat("->")) return node(Formula::Kind::implies, std::move(f), implies());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (eat("|")) f = node(Formula::Kind::disj, std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (eat("&")) f = node(Formula::Kind::conj, std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (eat("!")) {
      Formula f;
      f.kind = Formula::Kind::neg;
      f.lhs = std::make_shared<const Formula>(unary());
      return f;
    }
    if (eat("(")) {
      Formula f = equiv();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    Formula f;
    f.leaf = parse_sym(s_.substr(start, pos_ - start));
    return f;
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

Sym eval_formula(const Formula& f, const SymbolicOrder& order) {
  switch (f.kind) {
    case Formula::Kind::leaf: return f.leaf;
    case Formula::Kind::neg: return sym_neg(eval_formula(*f.lhs, order));
    case Formula::Kind::conj: return sym_and(eval_formula(*f.lhs, order), eval_formula(*f.rhs, order), order);
    case Formula::Kind::disj: return sym_or(eval_formula(*f.lhs, order), eval_formula(*f.rhs, order), order);
    case Formula::Kind::implies:
      return sym_implies(eval_formula(*f.lhs, order), eval_formula(*f.rhs, order), order);
    case Formula::Kind::equiv: {
      const Sym p = eval_formula(*f.lhs, order), q = eval_formula(*f.rhs, order);
      return sym_equiv(sym_implies(p, q, order), sym_implies(q, p, order), order);
    }
  }
  throw ValidationError("unknown connective in formula");
}

Sym eval_formula(std::string_view text, const SymbolicOrder& order) { return eval_formula(parse_formula(text), order); }

}  // namespace neutro
