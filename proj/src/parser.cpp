#include <algorithm>
#include <cctype>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "modeq/errors.hpp"
#include "modeq/formula.hpp"

namespace modeq {

namespace {

enum class Tok { End, Ident, Nat, Iff, Imp, Or, And, Not, Dia, Box, LParen, RParen, Eq, Neq, Ge, Le, Dot };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    std::size_t l = line, cc = col;
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    auto push = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(s.substr(i, n)), l, cc});
      adv(n);
    };
    if (starts("<->")) push(Tok::Iff, 3);
    else if (starts("->")) push(Tok::Imp, 2);
    else if (starts("<>")) push(Tok::Dia, 2);
    else if (starts("[]")) push(Tok::Box, 2);
    else if (starts("!=")) push(Tok::Neq, 2);
    else if (starts(">=")) push(Tok::Ge, 2);
    else if (starts("<=")) push(Tok::Le, 2);
    else if (c == '|') push(Tok::Or, 1);
    else if (c == '&') push(Tok::And, 1);
    else if (c == '~') push(Tok::Not, 1);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '=') push(Tok::Eq, 1);
    else if (c == '.') push(Tok::Dot, 1);
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (i + n < s.size() && std::isdigit(static_cast<unsigned char>(s[i + n]))) ++n;
      push(Tok::Nat, n);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (i + n < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i + n])) || s[i + n] == '_'))
        ++n;
      push(Tok::Ident, n);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Index k when the name has the form <prefix><digits>, else -1.
int indexed_name(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix || name.size() > 8) return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  if (name.size() > 2 && name[1] == '0') return -1;
  return std::stoi(name.substr(1));
}

template <class T>
class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula<T> run() {
    auto f = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    throw ParseError(msg, t.line, t.col);
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return take();
  }

  Formula<T> parse_iff() {
    auto f = parse_imp();
    while (peek().kind == Tok::Iff) {
      take();
      f = iff(f, parse_imp());
    }
    return f;
  }

  Formula<T> parse_imp() {
    auto f = parse_or();
    if (peek().kind == Tok::Imp) {
      take();
      return implies(f, parse_imp());
    }
    return f;
  }

  Formula<T> parse_or() {
    auto f = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      f = disj(f, parse_and());
    }
    return f;
  }

  Formula<T> parse_and() {
    auto f = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      f = conj(f, parse_unary());
    }
    return f;
  }

  Formula<T> parse_unary() {
    switch (peek().kind) {
      case Tok::Not:
        take();
        return neg(parse_unary());
      case Tok::Dia:
        take();
        return diamond(parse_unary());
      case Tok::Box:
        take();
        return box(parse_unary());
      default:
        break;
    }
    if constexpr (std::is_same_v<T, EqTag>) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && (t.text == "E" || t.text == "A") &&
          peek(1).kind == Tok::Ident)
        return parse_quantifier();
    }
    return parse_atom();
  }

  EqFormula parse_quantifier() {
    Op op = take().text == "E" ? Op::Exists : Op::Forall;
    std::vector<int> vars;
    while (peek().kind == Tok::Ident) {
      Token name = take();
      int k = indexed_name(name.text, 'x');
      int idx = k >= 0 ? k : detail::kProvisionalBinder + next_provisional_++;
      scope_.emplace_back(name.text, idx);
      vars.push_back(idx);
    }
    expect(Tok::Dot, "'.' after quantified variables");
    EqFormula body = parse_unary();
    for (std::size_t i = vars.size(); i-- > 0;) {
      body = EqFormula::make(op, vars[i], 0, body, {});
      scope_.pop_back();
    }
    return body;
  }

  int resolve(const Token& t) {
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i].first == t.text) return scope_[i].second;
    int k = indexed_name(t.text, 'x');
    if (k < 0) fail("unbound variable name '" + t.text + "'", &t);
    return k;
  }

  int nat() {
    Token t = expect(Tok::Nat, "natural number");
    if (t.text.size() > 6) fail("number too large", &t);
    return std::stoi(t.text);
  }

  Formula<T> parse_atom() {
    if (peek().kind == Tok::LParen) {
      take();
      auto f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind != Tok::Ident) fail("expected formula");
    if constexpr (std::is_same_v<T, PropTag>) {
      Token t = take();
      int k = indexed_name(t.text, 'p');
      if (k < 0) fail("expected propositional variable p<k>", &t);
      return prop::var(k);
    } else {
      Token t = take();
      if (t.text == "card") {
        Tok rel = peek().kind;
        if (rel != Tok::Eq && rel != Tok::Ge && rel != Tok::Le)
          fail("expected '=', '>=' or '<=' after card");
        take();
        int k = nat();
        if (rel == Tok::Eq) return eq::card(k);
        if (rel == Tok::Ge) return expand_sigma(SigmaKind::AtLeast, k, false);
        return expand_sigma(SigmaKind::AtMost, k, false);
      }
      int i = resolve(t);
      Tok rel = peek().kind;
      if (rel != Tok::Eq && rel != Tok::Neq) fail("expected '=' or '!='");
      take();
      if (peek().kind != Tok::Ident) fail("expected variable");
      Token u = take();
      int j = resolve(u);
      auto a = eq::atom(i, j);
      return rel == Tok::Eq ? a : neg(a);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, int>> scope_;
  int next_provisional_ = 0;
};

}  // namespace

EqFormula parse_eq(std::string_view text) {
  return normalize_binders(Parser<EqTag>(text).run());
}

PropFormula parse_prop(std::string_view text) { return Parser<PropTag>(text).run(); }

}  // namespace modeq
