#include "lctrs/term.hpp"

#include <functional>

#include "lctrs/errors.hpp"

namespace lctrs {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

}  // namespace

FunSymbol::FunSymbol(std::string name, std::vector<Sort> arg_sorts, Sort result_sort,
                     bool in_theory, bool in_terms, std::optional<TheoryValue> value) {
  if (!in_theory && !in_terms)
    throw SortError("symbol '" + name + "' must belong to Sigma_terms or Sigma_theory");
  if (in_theory && in_terms && !value.has_value())
    throw SortError("symbol '" + name + "' is in both signature parts but is not a value");
  if (value.has_value() && (!arg_sorts.empty() || !in_theory))
    throw SortError("value symbol '" + name + "' must be a nullary theory symbol");

  std::size_t h = hash_string(name);
  h = hash_combine(h, hash_string(result_sort.name));
  for (const Sort& s : arg_sorts) h = hash_combine(h, hash_string(s.name));
  h = hash_combine(h, (in_theory ? 2u : 0u) | (in_terms ? 1u : 0u));

  d_ = std::make_shared<const Data>(Data{std::move(name), std::move(arg_sorts),
                                         std::move(result_sort), in_theory, in_terms,
                                         std::move(value), h});
}

bool FunSymbol::operator==(const FunSymbol& o) const {
  if (d_ == o.d_) return true;
  return d_->hash == o.d_->hash && d_->name == o.d_->name && d_->arg_sorts == o.d_->arg_sorts &&
         d_->result_sort == o.d_->result_sort && d_->in_theory == o.d_->in_theory &&
         d_->in_terms == o.d_->in_terms;
}

bool FunSymbol::operator<(const FunSymbol& o) const {
  if (d_ == o.d_) return false;
  if (d_->name != o.d_->name) return d_->name < o.d_->name;
  if (d_->result_sort != o.d_->result_sort) return d_->result_sort < o.d_->result_sort;
  return d_->arg_sorts < o.d_->arg_sorts;
}

Term Term::var(Var v) {
  std::size_t h = hash_combine(hash_string(v.name), hash_string(v.sort.name));
  return Term(std::make_shared<const Node>(
      Node{true, std::move(v), std::nullopt, {}, h, 1}));
}

Term Term::app(FunSymbol f, std::vector<Term> args) {
  const std::vector<Sort>& expected = f.arg_sorts();
  if (args.size() != expected.size())
    throw SortError("symbol '" + f.name() + "' expects " + std::to_string(expected.size()) +
                    " arguments, got " + std::to_string(args.size()));
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != expected[i])
      throw SortError("argument " + std::to_string(i + 1) + " of '" + f.name() + "' has sort " +
                      args[i].sort().name + ", expected " + expected[i].name);
  }
  std::size_t h = hash_combine(f.hash(), 0x517cc1b727220a95ULL);
  std::size_t sz = 1;
  for (const Term& a : args) {
    h = hash_combine(h, a.hash());
    sz += a.size();
  }
  return Term(std::make_shared<const Node>(
      Node{false, Var{}, std::move(f), std::move(args), h, sz}));
}

const Sort& Term::sort() const { return is_var() ? n_->var.sort : n_->symbol->result_sort(); }

bool Term::operator==(const Term& o) const {
  if (n_ == o.n_) return true;
  if (n_->hash != o.n_->hash || n_->is_var != o.n_->is_var) return false;
  if (is_var()) return n_->var == o.n_->var;
  if (!(*n_->symbol == *o.n_->symbol)) return false;
  if (n_->args.size() != o.n_->args.size()) return false;
  for (std::size_t i = 0; i < n_->args.size(); ++i)
    if (n_->args[i] != o.n_->args[i]) return false;
  return true;
}

VarSet Term::vars() const {
  VarSet out;
  std::function<void(const Term&)> go = [&](const Term& t) {
    if (t.is_var()) {
      out.insert(t.as_var());
    } else {
      for (const Term& a : t.args()) go(a);
    }
  };
  go(*this);
  return out;
}

std::string position_to_string(const Position& p) {
  if (p.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<std::pair<Position, Term>> subterms_with_positions(const Term& s) {
  std::vector<std::pair<Position, Term>> out;
  Position path;
  std::function<void(const Term&)> go = [&](const Term& t) {
    out.emplace_back(path, t);
    if (t.is_app()) {
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        path.push_back(static_cast<int>(i) + 1);
        go(t.args()[i]);
        path.pop_back();
      }
    }
  };
  go(s);
  return out;
}

Term subterm_at(const Term& s, const Position& p) {
  Term cur = s;
  for (int idx : p) {
    if (cur.is_var() || idx < 1 || static_cast<std::size_t>(idx) > cur.args().size())
      throw SortError("position " + position_to_string(p) + " does not exist in term");
    cur = cur.args()[idx - 1];
  }
  return cur;
}

Term replace_at(const Term& s, const Position& p, const Term& replacement) {
  if (p.empty()) {
    if (replacement.sort() != s.sort())
      throw SortError("replacement sort " + replacement.sort().name + " differs from " +
                      s.sort().name);
    return replacement;
  }
  if (s.is_var() || p.front() < 1 || static_cast<std::size_t>(p.front()) > s.args().size())
    throw SortError("position " + position_to_string(p) + " does not exist in term");
  std::vector<Term> args = s.args();
  Position rest(p.begin() + 1, p.end());
  args[p.front() - 1] = replace_at(args[p.front() - 1], rest, replacement);
  return Term::app(s.symbol(), std::move(args));
}

bool is_logical_term(const Term& s, const VarSet& allowed_vars) {
  if (s.is_var()) return allowed_vars.count(s.as_var()) != 0;
  if (!s.symbol().in_theory()) return false;
  for (const Term& a : s.args())
    if (!is_logical_term(a, allowed_vars)) return false;
  return true;
}

bool is_logical_term(const Term& s) {
  if (s.is_var()) return true;
  if (!s.symbol().in_theory()) return false;
  for (const Term& a : s.args())
    if (!is_logical_term(a)) return false;
  return true;
}

}  // namespace lctrs
