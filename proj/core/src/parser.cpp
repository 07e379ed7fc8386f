#include "lctrs/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "lctrs/errors.hpp"

namespace lctrs {

namespace {

enum class Tok {
  Ident, Integer, Arrow, Imply, Neq, Le, Ge, Lt, Gt, Eq, Plus, Minus, Star,
  LParen, RParen, LBrack, RBrack, Colon, Semi, Comma, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 0;
  int col = 0;
  bool first_on_line = false;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  int last_token_line = 0;
  auto push = [&](Tok k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c, l != last_token_line});
    last_token_line = l;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int l = line, co = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Tok::Ident, text.substr(i, j - i), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Integer, text.substr(i, j - i), l, co);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two('-', '>')) { push(Tok::Arrow, "->", l, co); i += 2; col += 2; continue; }
    if (two('=', '>')) { push(Tok::Imply, "=>", l, co); i += 2; col += 2; continue; }
    if (two('!', '=')) { push(Tok::Neq, "!=", l, co); i += 2; col += 2; continue; }
    if (two('<', '=')) { push(Tok::Le, "<=", l, co); i += 2; col += 2; continue; }
    if (two('>', '=')) { push(Tok::Ge, ">=", l, co); i += 2; col += 2; continue; }
    Tok k;
    switch (c) {
      case '<': k = Tok::Lt; break;
      case '>': k = Tok::Gt; break;
      case '=': k = Tok::Eq; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case ':': k = Tok::Colon; break;
      case ';': k = Tok::Semi; break;
      case ',': k = Tok::Comma; break;
      default:
        throw SyntaxError(l, co, std::string("unexpected character '") + c + "'");
    }
    push(k, std::string(1, c), l, co);
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::End, "", line, col, true});
  return out;
}

// Untyped parse tree; sorts are resolved in a second pass.
struct PNode {
  enum Kind { Leaf, App, IntLit } kind = Leaf;
  std::string name;           // Leaf (variable or nullary symbol) or App head
  Int value;                  // IntLit
  std::vector<PNode> args;    // App
  int line = 0, col = 0;
};

const std::set<std::string> kReservedWords = {"THEORY", "SIGNATURE", "RULES", "ints",
                                              "bitvectors", "and", "or", "not", "true", "false"};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  LctrsProblem run() {
    expect_section("THEORY");
    TheorySpec theory = parse_theory();
    expect_section("SIGNATURE");
    std::vector<FunSymbol> user_syms;
    std::set<std::string> user_sorts;
    while (!at_section("RULES") && cur().kind != Tok::End)
      user_syms.push_back(parse_signature_entry(theory, user_syms, user_sorts));
    expect_section("RULES");
    std::vector<Rule> rules;
    LctrsProblem scaffold(theory, user_syms, {});
    while (cur().kind != Tok::End) rules.push_back(parse_rule(scaffold, rules.size()));
    return LctrsProblem(std::move(theory), std::move(user_syms), std::move(rules));
  }

  Term parse_single_term(const LctrsProblem& problem, std::map<std::string, Sort>* var_sorts) {
    PNode n = parse_expr();
    if (cur().kind != Tok::End) throw err("trailing input after term");
    std::map<std::string, Sort> local;
    std::map<std::string, Sort>& env = var_sorts ? *var_sorts : local;
    Term t = elaborate(problem, n, std::nullopt, env);
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k = 1) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token advance() { return toks_[pos_++]; }

  SyntaxError err(const std::string& msg) const {
    return SyntaxError(cur().line, cur().col, msg + " (got '" + cur().text + "')");
  }

  Token expect(Tok k, const std::string& what) {
    if (cur().kind != k) throw err("expected " + what);
    return advance();
  }

  bool at_section(const std::string& kw) const {
    return cur().kind == Tok::Ident && cur().text == kw;
  }

  void expect_section(const std::string& kw) {
    if (!at_section(kw)) throw err("expected section keyword " + kw);
    // Section keywords stand alone on their line.
    if (!cur().first_on_line || !peek().first_on_line)
      throw SyntaxError(cur().line, cur().col, kw + " must be alone on its line");
    advance();
  }

  TheorySpec parse_theory() {
    Token t = expect(Tok::Ident, "theory name (ints or bitvectors)");
    if (t.text == "ints") return TheorySpec::ints();
    if (t.text == "bitvectors") {
      Token w = expect(Tok::Integer, "bitvector width");
      long width = std::stol(w.text);
      if (width < 1 || width > 64)
        throw SyntaxError(w.line, w.col, "bitvector width must be in 1..64");
      return TheorySpec::bitvectors(static_cast<int>(width));
    }
    throw SyntaxError(t.line, t.col, "unknown theory '" + t.text + "'");
  }

  Sort parse_sort(const TheorySpec& theory, std::set<std::string>& user_sorts) {
    Token t = expect(Tok::Ident, "sort name");
    if (t.text == kDpSort.name)
      throw SyntaxError(t.line, t.col, "sort name 'dpsort' is reserved");
    Sort s{t.text};
    if (!theory.has_sort(s)) user_sorts.insert(t.text);
    return s;
  }

  FunSymbol parse_signature_entry(const TheorySpec& theory,
                                  const std::vector<FunSymbol>& user_syms,
                                  std::set<std::string>& user_sorts) {
    Token name = expect(Tok::Ident, "symbol name");
    if (kReservedWords.count(name.text))
      throw SyntaxError(name.line, name.col, "'" + name.text + "' is reserved");
    expect(Tok::Colon, "':'");
    std::vector<Sort> arg_sorts;
    if (cur().kind != Tok::Arrow) {
      arg_sorts.push_back(parse_sort(theory, user_sorts));
      while (cur().kind == Tok::Star) {
        advance();
        arg_sorts.push_back(parse_sort(theory, user_sorts));
      }
    }
    expect(Tok::Arrow, "'->'");
    Sort result = parse_sort(theory, user_sorts);
    expect(Tok::Semi, "';'");
    for (const FunSymbol& f : user_syms)
      if (f.name() == name.text && f.arity() == arg_sorts.size())
        throw SyntaxError(name.line, name.col, "duplicate symbol '" + name.text + "'");
    if (theory.find_builtin(name.text, arg_sorts.size()))
      throw SyntaxError(name.line, name.col,
                        "'" + name.text + "' clashes with a theory symbol");
    return FunSymbol(name.text, std::move(arg_sorts), std::move(result), /*in_theory=*/false,
                     /*in_terms=*/true);
  }

  Rule parse_rule(const LctrsProblem& scaffold, std::size_t index) {
    PNode lhs = parse_expr();
    expect(Tok::Arrow, "'->'");
    PNode rhs = parse_expr();
    std::optional<PNode> constraint;
    if (cur().kind == Tok::LBrack) {
      advance();
      constraint = parse_expr();
      expect(Tok::RBrack, "']'");
    }
    expect(Tok::Semi, "';'");

    std::map<std::string, Sort> env;
    Term l = elaborate(scaffold, lhs, std::nullopt, env);
    Term r = elaborate(scaffold, rhs, l.sort(), env);
    Term c = constraint ? elaborate(scaffold, *constraint, kBoolSort, env)
                        : scaffold.theory().value_term(TheoryValue::boolean(true));
    Rule rule{std::move(l), std::move(r), std::move(c)};
    check_rule(rule, scaffold.theory(), static_cast<int>(index));
    return rule;
  }

  // Precedence-climbing expression grammar:
  //   => (right) < or < and < comparisons (non-assoc) < +,- < * < unary
  PNode parse_expr() { return parse_imply(); }

  PNode parse_imply() {
    PNode lhs = parse_or();
    if (cur().kind == Tok::Imply) {
      Token op = advance();
      PNode rhs = parse_imply();
      return PNode{PNode::App, "=>", {}, {std::move(lhs), std::move(rhs)}, op.line, op.col};
    }
    return lhs;
  }

  PNode parse_or() {
    PNode lhs = parse_and();
    while (cur().kind == Tok::Ident && cur().text == "or") {
      Token op = advance();
      PNode rhs = parse_and();
      lhs = PNode{PNode::App, "or", {}, {std::move(lhs), std::move(rhs)}, op.line, op.col};
    }
    return lhs;
  }

  PNode parse_and() {
    PNode lhs = parse_cmp();
    while (cur().kind == Tok::Ident && cur().text == "and") {
      Token op = advance();
      PNode rhs = parse_cmp();
      lhs = PNode{PNode::App, "and", {}, {std::move(lhs), std::move(rhs)}, op.line, op.col};
    }
    return lhs;
  }

  PNode parse_cmp() {
    PNode lhs = parse_additive();
    switch (cur().kind) {
      case Tok::Eq: case Tok::Neq: case Tok::Le: case Tok::Lt: case Tok::Ge: case Tok::Gt: {
        Token op = advance();
        PNode rhs = parse_additive();
        return PNode{PNode::App, op.text, {}, {std::move(lhs), std::move(rhs)}, op.line, op.col};
      }
      default:
        return lhs;
    }
  }

  PNode parse_additive() {
    PNode lhs = parse_multiplicative();
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      Token op = advance();
      PNode rhs = parse_multiplicative();
      lhs = PNode{PNode::App, op.text, {}, {std::move(lhs), std::move(rhs)}, op.line, op.col};
    }
    return lhs;
  }

  PNode parse_multiplicative() {
    PNode lhs = parse_unary();
    while (cur().kind == Tok::Star) {
      Token op = advance();
      PNode rhs = parse_unary();
      lhs = PNode{PNode::App, "*", {}, {std::move(lhs), std::move(rhs)}, op.line, op.col};
    }
    return lhs;
  }

  PNode parse_unary() {
    if (cur().kind == Tok::Minus) {
      Token op = advance();
      PNode arg = parse_unary();
      return PNode{PNode::App, "-", {}, {std::move(arg)}, op.line, op.col};
    }
    if (cur().kind == Tok::Ident && cur().text == "not") {
      Token op = advance();
      PNode arg = parse_unary();
      return PNode{PNode::App, "not", {}, {std::move(arg)}, op.line, op.col};
    }
    return parse_atom();
  }

  PNode parse_atom() {
    if (cur().kind == Tok::Integer) {
      Token t = advance();
      PNode n;
      n.kind = PNode::IntLit;
      n.value = Int(t.text);
      n.line = t.line;
      n.col = t.col;
      return n;
    }
    if (cur().kind == Tok::LParen) {
      advance();
      PNode inner = parse_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (cur().kind == Tok::Ident) {
      Token t = advance();
      if (t.text == "THEORY" || t.text == "SIGNATURE" || t.text == "RULES")
        throw SyntaxError(t.line, t.col, "unexpected section keyword in term");
      PNode n{PNode::Leaf, t.text, {}, {}, t.line, t.col};
      if (cur().kind == Tok::LParen) {
        advance();
        n.kind = PNode::App;
        if (cur().kind != Tok::RParen) {
          n.args.push_back(parse_expr());
          while (cur().kind == Tok::Comma) {
            advance();
            n.args.push_back(parse_expr());
          }
        }
        expect(Tok::RParen, "')'");
      }
      return n;
    }
    throw err("expected a term");
  }

  // Sort resolution. Variables get their sort from the first hinted
  // occurrence; an unhinted fresh variable defaults to the numeric sort.
  Term elaborate(const LctrsProblem& problem, const PNode& n, const std::optional<Sort>& hint,
                 std::map<std::string, Sort>& env) {
    const TheorySpec& theory = problem.theory();
    switch (n.kind) {
      case PNode::IntLit: {
        Term t = theory.literal(n.value);
        if (hint && *hint != t.sort())
          throw SyntaxError(n.line, n.col, "integer literal where sort " + hint->name + " expected");
        return t;
      }
      case PNode::Leaf: {
        if (n.name == "true" || n.name == "false") {
          if (hint && *hint != kBoolSort)
            throw SyntaxError(n.line, n.col, "boolean literal where sort " + hint->name + " expected");
          return theory.value_term(TheoryValue::boolean(n.name == "true"));
        }
        if (auto f = problem.find_symbol(n.name, 0)) {
          if (hint && *hint != f->result_sort())
            throw SyntaxError(n.line, n.col, "'" + n.name + "' has sort " + f->result_sort().name +
                                                 ", expected " + hint->name);
          return Term::app(*f);
        }
        auto it = env.find(n.name);
        if (it != env.end()) {
          if (hint && *hint != it->second)
            throw SyntaxError(n.line, n.col, "variable '" + n.name + "' has sort " +
                                                 it->second.name + ", expected " + hint->name);
          return Term::var(n.name, it->second);
        }
        Sort s = hint ? *hint : theory.numeric_sort();
        env.emplace(n.name, s);
        return Term::var(n.name, s);
      }
      case PNode::App: {
        std::vector<FunSymbol> candidates;
        if (auto f = problem.find_symbol(n.name, n.args.size())) candidates.push_back(*f);
        // The merged lookup returns the first match; "=" has a second,
        // boolean overload to consider.
        if (!candidates.empty() && candidates[0].in_theory()) {
          for (const FunSymbol& f : theory.builtin_symbols())
            if (f.name() == n.name && f.arity() == n.args.size() && !(f == candidates[0]))
              candidates.push_back(f);
        }
        if (candidates.empty()) throw UnknownSymbolError(n.name);
        FunSymbol chosen = candidates[0];
        if (candidates.size() > 1) {
          Term first = elaborate(problem, n.args[0], std::nullopt, env);
          bool found = false;
          for (const FunSymbol& f : candidates)
            if (f.arg_sorts()[0] == first.sort()) {
              chosen = f;
              found = true;
              break;
            }
          if (!found)
            throw SyntaxError(n.line, n.col,
                              "no overload of '" + n.name + "' takes " + first.sort().name);
        }
        std::vector<Term> args;
        args.reserve(n.args.size());
        for (std::size_t i = 0; i < n.args.size(); ++i)
          args.push_back(elaborate(problem, n.args[i], chosen.arg_sorts()[i], env));
        if (hint && *hint != chosen.result_sort())
          throw SyntaxError(n.line, n.col, "'" + n.name + "' has sort " +
                                               chosen.result_sort().name + ", expected " +
                                               hint->name);
        return Term::app(chosen, std::move(args));
      }
    }
    throw err("unreachable");
  }
};

}  // namespace

LctrsProblem parse_problem(const std::string& text) { return Parser(text).run(); }

Term parse_term(const LctrsProblem& problem, const std::string& text,
                std::map<std::string, Sort>* var_sorts) {
  return Parser(text).parse_single_term(problem, var_sorts);
}

}  // namespace lctrs
