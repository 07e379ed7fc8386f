#include "lctrs/smt/solver.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "lctrs/errors.hpp"
#include "smt_process.hpp"

namespace lctrs::smt {

namespace {
namespace fs = std::filesystem;

// ---------------------------------------------------------------- s-exprs

struct Sexp {
  bool is_atom = true;
  std::string atom;
  std::vector<Sexp> items;
};

class SexpReader {
 public:
  explicit SexpReader(const std::string& text) : text_(text) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    skip_ws();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip_ws();
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Sexp read() {
    skip_ws();
    if (pos_ >= text_.size()) throw LctrsError("unexpected end of solver output");
    if (text_[pos_] == '(') {
      ++pos_;
      Sexp s;
      s.is_atom = false;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        s.items.push_back(read());
        skip_ws();
      }
      if (pos_ >= text_.size()) throw LctrsError("unbalanced solver output");
      ++pos_;
      return s;
    }
    if (text_[pos_] == '|') {
      std::size_t end = text_.find('|', pos_ + 1);
      if (end == std::string::npos) throw LctrsError("unbalanced |...| in solver output");
      Sexp s;
      s.atom = text_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return s;
    }
    if (text_[pos_] == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string::npos) throw LctrsError("unbalanced string in solver output");
      Sexp s;
      s.atom = text_.substr(pos_, end - pos_ + 1);
      pos_ = end + 1;
      return s;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')')
      ++pos_;
    Sexp s;
    s.atom = text_.substr(start, pos_ - start);
    return s;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::optional<TheoryValue> decode_value(const Sexp& v, const std::string& sort) {
  if (sort == "Bool") {
    if (v.is_atom && (v.atom == "true" || v.atom == "false"))
      return TheoryValue::boolean(v.atom == "true");
    return std::nullopt;
  }
  if (sort == "Int") {
    if (v.is_atom && !v.atom.empty() &&
        (std::isdigit(static_cast<unsigned char>(v.atom[0])) || v.atom[0] == '-'))
      return TheoryValue::integer(Int(v.atom));
    if (!v.is_atom && v.items.size() == 2 && v.items[0].is_atom && v.items[0].atom == "-")
      return TheoryValue::integer(-Int(v.items[1].atom));
    return std::nullopt;
  }
  // (_ BitVec w): accept #x..., #b..., and (_ bvN w).
  int width = 0;
  if (sscanf(sort.c_str(), "(_ BitVec %d)", &width) != 1) return std::nullopt;
  if (v.is_atom && v.atom.rfind("#x", 0) == 0)
    return TheoryValue::bitvec(BitVec::from_bits(width, std::stoull(v.atom.substr(2), nullptr, 16)));
  if (v.is_atom && v.atom.rfind("#b", 0) == 0)
    return TheoryValue::bitvec(BitVec::from_bits(width, std::stoull(v.atom.substr(2), nullptr, 2)));
  if (!v.is_atom && v.items.size() == 3 && v.items[0].atom == "_" &&
      v.items[1].atom.rfind("bv", 0) == 0)
    return TheoryValue::bitvec(
        BitVec::from_bits(width, std::stoull(v.items[1].atom.substr(2))));
  return std::nullopt;
}

Model parse_model(const std::string& text, const std::vector<SortedConst>& names) {
  Model model;
  std::vector<Sexp> top = SexpReader(text).read_all();
  for (const Sexp& group : top) {
    if (group.is_atom) continue;
    for (const Sexp& pair : group.items) {
      if (pair.is_atom || pair.items.size() != 2 || !pair.items[0].is_atom) continue;
      const std::string& name = pair.items[0].atom;
      for (const SortedConst& sc : names) {
        std::string bare = sc.name;
        if (bare.size() >= 2 && bare.front() == '|') bare = bare.substr(1, bare.size() - 2);
        if (bare == name) {
          if (auto val = decode_value(pair.items[1], sc.sort)) model[name] = *val;
          break;
        }
      }
    }
  }
  return model;
}

// ------------------------------------------------------------ the backend

class ExternalSolver final : public SmtSolver {
 public:
  explicit ExternalSolver(SolverConfig config) : config_(std::move(config)) {}

  SmtVerdict check_sat(const SmtQuery& q) override { return check_sat(q, config_.query_timeout); }

  SmtVerdict check_sat(const SmtQuery& q, std::chrono::milliseconds timeout) override {
    Deadline deadline = std::chrono::steady_clock::now() + timeout;
    try {
      return config_.session_reuse ? run_session(q, deadline) : run_oneshot(q, deadline);
    } catch (const SolverProcess::TimeoutExpired&) {
      session_.reset();
      return SmtVerdict::unknown("timeout");
    } catch (const SolverNotFoundError&) {
      throw;
    } catch (const LctrsError& e) {
      session_.reset();
      return SmtVerdict::unknown(e.what());
    }
  }

 private:
  SmtVerdict run_oneshot(const SmtQuery& q, Deadline deadline) {
    SolverProcess proc(config_.path, config_.args);
    std::string text = q.to_smtlib();
    text += "(check-sat)\n";
    if (q.want_model) text += get_value_command(q);
    text += "(exit)\n";
    proc.write_all(text);
    proc.close_stdin();

    std::vector<std::string> lines;
    while (auto line = proc.read_line(deadline)) lines.push_back(std::move(*line));
    return interpret(q, lines);
  }

  SmtVerdict run_session(const SmtQuery& q, Deadline deadline) {
    if (!session_ || !session_->running())
      session_ = std::make_unique<SolverProcess>(config_.path, config_.args);
    const std::string marker = "##Q" + std::to_string(++query_counter_) + "##";
    std::string text = "(reset)\n" + q.to_smtlib();
    text += "(check-sat)\n(echo \"" + marker + "\")\n";
    if (!session_->write_all(text)) {
      session_.reset();
      return SmtVerdict::unknown("solver process gone");
    }
    std::vector<std::string> lines;
    while (true) {
      auto line = session_->read_line(deadline);
      if (!line) {
        session_.reset();
        return SmtVerdict::unknown("solver closed its output");
      }
      if (*line == marker || *line == "\"" + marker + "\"") break;
      lines.push_back(std::move(*line));
    }
    SmtVerdict verdict = interpret(q, lines);
    if (verdict.is_sat() && q.want_model) {
      const std::string vmarker = "##V" + std::to_string(query_counter_) + "##";
      if (!session_->write_all(get_value_command(q) + "(echo \"" + vmarker + "\")\n")) {
        session_.reset();
        return SmtVerdict::unknown("solver process gone");
      }
      std::string raw;
      while (true) {
        auto line = session_->read_line(deadline);
        if (!line) {
          session_.reset();
          return SmtVerdict::unknown("solver closed its output");
        }
        if (*line == vmarker || *line == "\"" + vmarker + "\"") break;
        raw += *line + "\n";
      }
      verdict.model = parse_model(raw, q.model_names);
    }
    return verdict;
  }

  static std::string get_value_command(const SmtQuery& q) {
    std::string cmd = "(get-value (";
    for (std::size_t i = 0; i < q.model_names.size(); ++i) {
      if (i) cmd += ' ';
      cmd += q.model_names[i].name;
    }
    cmd += "))\n";
    return cmd;
  }

  // First sat/unsat/unknown token decides; anything after it on sat is
  // model text. Error lines before a verdict make the result Unknown.
  SmtVerdict interpret(const SmtQuery& q, const std::vector<std::string>& lines) {
    std::string errors;
    std::size_t i = 0;
    for (; i < lines.size(); ++i) {
      const std::string& l = lines[i];
      if (l == "sat" || l == "unsat" || l == "unknown") break;
      if (!l.empty()) errors += l + "\n";
    }
    if (i == lines.size())
      return SmtVerdict::unknown(errors.empty() ? "no verdict from solver" : errors);
    if (lines[i] == "unsat") return SmtVerdict::unsat();
    if (lines[i] == "unknown") return SmtVerdict::unknown("solver answered unknown");
    SmtVerdict v = SmtVerdict::sat();
    if (q.want_model) {
      std::string raw;
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        if (lines[j].rfind("(error", 0) == 0) continue;
        raw += lines[j] + "\n";
      }
      if (!raw.empty()) v.model = parse_model(raw, q.model_names);
    }
    return v;
  }

  SolverConfig config_;
  std::unique_ptr<SolverProcess> session_;
  unsigned query_counter_ = 0;
};

std::optional<std::string> find_on_path(const std::string& name) {
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::stringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    fs::path candidate = fs::path(dir) / name;
    if (access(candidate.c_str(), X_OK) == 0) return candidate.string();
  }
  return std::nullopt;
}

std::optional<std::string> shim_next_to_executable() {
  std::error_code ec;
  fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (ec) return std::nullopt;
  fs::path shim = exe.parent_path() / "lctrs-z3";
  if (access(shim.c_str(), X_OK) == 0) return shim.string();
  return std::nullopt;
}

}  // namespace

std::string logic_name(Logic l) {
  switch (l) {
    case Logic::LinearInts: return "QF_LIA";
    case Logic::NonlinearInts: return "QF_NIA";
    case Logic::QuantifiedInts: return "NIA";
    case Logic::BitVectors: return "QF_BV";
  }
  return "ALL";
}

std::string SmtQuery::to_smtlib() const {
  std::string out;
  if (want_model) out += "(set-option :produce-models true)\n";
  out += "(set-logic " + logic_name(logic) + ")\n";
  for (const SortedConst& d : decls)
    out += "(declare-const " + d.name + " " + d.sort + ")\n";
  for (const std::string& a : assertions) out += "(assert " + a + ")\n";
  return out;
}

SolverConfig discover_solver(const std::optional<std::string>& explicit_path,
                             const std::vector<std::string>& extra_args) {
  SolverConfig config;
  std::optional<std::string> path = explicit_path;
  if (!path) {
    if (const char* env = std::getenv("LCTRS_SOLVER"); env && *env) path = std::string(env);
  }
  if (!path) path = find_on_path("z3");
  if (!path) path = find_on_path("cvc5");
  if (!path) path = shim_next_to_executable();
  if (!path) path = find_on_path("lctrs-z3");
  if (!path)
    throw SolverNotFoundError(
        "no SMT solver found: pass --solver, set LCTRS_SOLVER, or put z3/cvc5/lctrs-z3 on PATH");
  config.path = *path;
  // z3 only reads stdin when asked to.
  if (fs::path(*path).filename() == "z3" && extra_args.empty()) config.args = {"-in"};
  for (const std::string& a : extra_args) config.args.push_back(a);
  return config;
}

std::unique_ptr<SmtSolver> make_external_solver(SolverConfig config) {
  return std::make_unique<ExternalSolver>(std::move(config));
}

SmtVerdict check_validity(SmtSolver& solver, const SmtQuery& negated_query) {
  return solver.check_sat(negated_query);
}

}  // namespace lctrs::smt
