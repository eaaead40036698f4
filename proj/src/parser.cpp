#include "flatcheck/parser.hpp"

#include <cctype>

#include "flatcheck/errors.hpp"
#include "flatcheck/operations.hpp"

namespace flatcheck {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool is_symbol(char c) const { return current_.kind == Tok::Symbol && current_.text[0] == c; }
  bool is_word(std::string_view w) const { return current_.kind == Tok::Ident && current_.text == w; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, current_); }
  [[noreturn]] static void fail_at(const std::string& what, const Token& t) { throw ParseError(what, t.line, t.column); }

  void expect(char c) {
    if (!is_symbol(c)) fail(std::string("expected '") + c + "', found " + describe(current_));
    advance();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Number: return "number " + t.text;
      case Tok::Ident: return "'" + t.text + "'";
      case Tok::Symbol: return "'" + t.text + "'";
    }
    return "?";
  }

 private:
  void advance() {
    skip();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Tok::Ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        current_.text += take();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Tok::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) current_.text += take();
    } else if (std::string_view(";,[]()+-*/^=").find(c) != std::string_view::npos) {
      current_.kind = Tok::Symbol;
      current_.text = std::string(1, take());
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, UniversePtr universe) : lex_(lex), u_(std::move(universe)) {}

  Polynomial sum() {
    Polynomial acc = product();
    while (lex_.is_symbol('+') || lex_.is_symbol('-')) {
      const bool minus = lex_.next().text[0] == '-';
      Polynomial rhs = product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

 private:
  bool starts_factor() const {
    const auto& t = lex_.peek();
    return t.kind == Tok::Ident || t.kind == Tok::Number || lex_.is_symbol('(');
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (true) {
      if (lex_.is_symbol('*')) {
        lex_.next();
        acc = acc * unary();
      } else if (lex_.is_symbol('/')) {
        const Token at = lex_.next();
        const Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) Lexer::fail_at("division by a non-constant or zero", at);
        acc *= 1 / d.constant_term();
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (lex_.is_symbol('-')) {
      lex_.next();
      return -unary();
    }
    if (lex_.is_symbol('+')) {
      lex_.next();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.is_symbol('^')) {
      lex_.next();
      if (lex_.peek().kind != Tok::Number) lex_.fail("expected a non-negative integer exponent");
      const Token t = lex_.next();
      if (t.text.size() > 6) Lexer::fail_at("exponent too large", t);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Number) return Polynomial::constant(u_, Rational(Integer(lex_.next().text)));
    if (t.kind == Tok::Ident) {
      auto idx = u_->find(t.text);
      if (!idx) lex_.fail("unknown variable '" + t.text + "'");
      lex_.next();
      return Polynomial::variable(u_, *idx);
    }
    if (lex_.is_symbol('(')) {
      lex_.next();
      Polynomial p = sum();
      lex_.expect(')');
      return p;
    }
    lex_.fail("expected a polynomial, found " + Lexer::describe(t));
  }

  Lexer& lex_;
  UniversePtr u_;
};

class ProblemParser {
 public:
  explicit ProblemParser(std::string_view text) : lex_(text) {}

  ProblemFile run() {
    while (lex_.peek().kind != Tok::End) statement();
    if (!out_.universe && !clauses_.empty()) universe(lex_.peek());
    if (!out_.universe) throw ParseError("missing ring declaration", 1, 1);
    out_.ring = clauses_;
    return std::move(out_);
  }

 private:
  void statement() {
    const Token head = lex_.peek();
    if (head.kind != Tok::Ident) lex_.fail("expected a block keyword, found " + Lexer::describe(head));
    if (head.text == "ring") {
      lex_.next();
      ring_clause(lex_.peek());
    } else if (head.text == "base" || head.text == "fiber" || head.text == "source") {
      if (clauses_.empty()) lex_.fail("'" + head.text + "' clause before 'ring'");
      ring_clause(head);
    } else if (head.text == "ideal") {
      lex_.next();
      ideal_block(head);
    } else if (head.text == "module") {
      lex_.next();
      module_block(head);
    } else if (head.text == "map") {
      lex_.next();
      map_block(head);
    } else if (head.text == "flags") {
      lex_.next();
      flags_block(head);
    } else {
      lex_.fail("unknown block '" + head.text + "'");
    }
  }

  void ring_clause(const Token& at) {
    if (out_.universe) Lexer::fail_at("ring clause after the ring is in use", at);
    const Token kind = lex_.next();
    if (kind.kind != Tok::Ident || (kind.text != "base" && kind.text != "fiber" && kind.text != "source"))
      Lexer::fail_at("expected 'base', 'fiber' or 'source'", kind);
    for (const auto& c : clauses_)
      if (c.first == kind.text) Lexer::fail_at("duplicate '" + kind.text + "' clause", kind);
    std::vector<std::string> names;
    while (lex_.peek().kind == Tok::Ident) {
      const Token t = lex_.next();
      if (declared_.count(t.text)) Lexer::fail_at("duplicate variable '" + t.text + "'", t);
      declared_.insert(t.text);
      names.push_back(t.text);
    }
    if (names.empty()) lex_.fail("expected variable names");
    lex_.expect(';');
    clauses_.emplace_back(kind.text, std::move(names));
  }

  const UniversePtr& universe(const Token& at) {
    if (!out_.universe) {
      if (clauses_.empty()) Lexer::fail_at("block before ring declaration", at);
      std::vector<VarUniverse::Variable> vars;
      for (const auto& [kind, names] : clauses_)
        for (const auto& n : names) vars.push_back({n, kind == "base" ? VarRole::Base : VarRole::Fiber});
      out_.universe = VarUniverse::make(std::move(vars));
    }
    return out_.universe;
  }

  std::vector<FreeModuleElement> elements(std::size_t rank) {
    const auto& u = out_.universe;
    std::vector<FreeModuleElement> out;
    lex_.expect('[');
    if (lex_.is_symbol(']')) {
      lex_.next();
      return out;
    }
    while (true) {
      if (rank > 1 || lex_.is_symbol('[')) {
        const Token at = lex_.peek();
        lex_.expect('[');
        std::vector<Polynomial> comps;
        while (true) {
          comps.push_back(PolyParser(lex_, u).sum());
          if (!lex_.is_symbol(',')) break;
          lex_.next();
        }
        lex_.expect(']');
        if (comps.size() != rank)
          Lexer::fail_at("vector has " + std::to_string(comps.size()) + " components, expected " +
                             std::to_string(rank),
                         at);
        out.emplace_back(std::move(comps));
      } else {
        out.emplace_back(PolyParser(lex_, u).sum());
      }
      if (!lex_.is_symbol(',')) break;
      lex_.next();
    }
    lex_.expect(']');
    return out;
  }

  Submodule term(std::size_t rank) {
    if (lex_.is_word("intersect")) {
      lex_.next();
      lex_.expect('(');
      Submodule acc = expression(rank);
      while (lex_.is_symbol(',')) {
        lex_.next();
        acc = intersect(acc, expression(rank));
      }
      lex_.expect(')');
      return acc;
    }
    return Submodule(out_.universe, rank, elements(rank));
  }

  Submodule expression(std::size_t rank) {
    Submodule acc = term(rank);
    while (lex_.is_symbol('+')) {
      lex_.next();
      acc = acc + term(rank);
    }
    return acc;
  }

  void ideal_block(const Token& head) {
    universe(head);
    bool source = false;
    if (lex_.is_word("base") || lex_.is_word("target")) {
      lex_.next();
    } else if (lex_.is_word("source")) {
      lex_.next();
      source = true;
    }
    auto& slot = source ? out_.source_ideal : out_.base_ideal;
    if (slot) Lexer::fail_at(std::string("duplicate ") + (source ? "source" : "base") + " ideal block", head);
    slot = expression(1);
    lex_.expect(';');
  }

  void module_block(const Token& head) {
    universe(head);
    if (out_.module) Lexer::fail_at("duplicate module block", head);
    std::size_t rank = 1;
    if (lex_.is_word("q")) {
      lex_.next();
      lex_.expect('=');
      if (lex_.peek().kind != Tok::Number) lex_.fail("expected the module rank");
      const Token t = lex_.next();
      if (t.text.size() > 4 || std::stoul(t.text) == 0) Lexer::fail_at("rank must be between 1 and 9999", t);
      rank = std::stoul(t.text);
    }
    if (lex_.is_word("gens")) lex_.next();
    out_.module = expression(rank);
    lex_.expect(';');
  }

  void map_block(const Token& head) {
    universe(head);
    if (out_.map) Lexer::fail_at("duplicate map block", head);
    std::vector<Polynomial> comps;
    lex_.expect('[');
    if (!lex_.is_symbol(']')) {
      while (true) {
        comps.push_back(PolyParser(lex_, out_.universe).sum());
        if (!lex_.is_symbol(',')) break;
        lex_.next();
      }
    }
    lex_.expect(']');
    lex_.expect(';');
    out_.map = std::move(comps);
  }

  void flags_block(const Token& head) {
    if (seen_flags_) Lexer::fail_at("duplicate flags block", head);
    seen_flags_ = true;
    while (lex_.peek().kind == Tok::Ident) {
      const Token first = lex_.peek();
      std::string name = lex_.next().text;
      while (lex_.is_symbol('-')) {
        lex_.next();
        if (lex_.peek().kind != Tok::Ident) lex_.fail("malformed flag name");
        name += "-" + lex_.next().text;
      }
      if (!known_flags().count(name)) Lexer::fail_at("unknown flag '" + name + "'", first);
      out_.flags.insert(name);
    }
    lex_.expect(';');
  }

  Lexer lex_;
  ProblemFile out_;
  std::vector<std::pair<std::string, std::vector<std::string>>> clauses_;
  std::set<std::string> declared_;
  bool seen_flags_ = false;
};

std::string element_list(const Submodule& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i) s += ", ";
    s += to_string(m.generators()[i]);
  }
  return s + "]";
}

}  // namespace

const std::set<std::string>& known_flags() {
  static const std::set<std::string> flags = {"assume-domain", "assume-embedding", "pure-dimensional",
                                              "normal-target"};
  return flags;
}

ProblemFile parse_problem(std::string_view text) { return ProblemParser(text).run(); }

Polynomial parse_polynomial(std::string_view text, const UniversePtr& universe) {
  Lexer lex(text);
  Polynomial p = PolyParser(lex, universe).sum();
  if (lex.peek().kind != Tok::End) lex.fail("unexpected " + Lexer::describe(lex.peek()));
  return p;
}

ModulePresentation ProblemFile::module_presentation() const {
  if (!module) throw InputError("problem has no module block");
  if (base_ideal) return ModulePresentation::make(*module, *base_ideal);
  return ModulePresentation::make(*module);
}

MapPresentation ProblemFile::map_presentation() const {
  if (!map) throw InputError("problem has no map block");
  MapPresentation mp;
  mp.universe = universe;
  mp.source_ideal = source_ideal ? *source_ideal : Ideal(universe, 1);
  mp.target_ideal = base_ideal ? *base_ideal : Ideal(universe, 1);
  mp.components = *map;
  mp.pure_dimensional = has_flag("pure-dimensional");
  mp.normal_target = has_flag("normal-target");
  return mp;
}

std::string print_problem(const ProblemFile& problem) {
  std::string s;
  for (std::size_t i = 0; i < problem.ring.size(); ++i) {
    s += (i ? "" : "ring ") + problem.ring[i].first;
    for (const auto& n : problem.ring[i].second) s += " " + n;
    s += ";\n";
  }
  if (problem.base_ideal) s += "ideal base " + element_list(*problem.base_ideal) + ";\n";
  if (problem.source_ideal) s += "ideal source " + element_list(*problem.source_ideal) + ";\n";
  if (problem.module)
    s += "module q=" + std::to_string(problem.module->rank()) + " gens " + element_list(*problem.module) + ";\n";
  if (problem.map) {
    s += "map [";
    for (std::size_t i = 0; i < problem.map->size(); ++i) s += (i ? ", " : "") + to_string((*problem.map)[i]);
    s += "];\n";
  }
  if (!problem.flags.empty()) {
    s += "flags";
    for (const auto& f : problem.flags) s += " " + f;
    s += ";\n";
  }
  return s;
}

}  // namespace flatcheck
