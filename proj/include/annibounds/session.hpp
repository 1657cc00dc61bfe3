#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "annibounds/bounds.hpp"
#include "annibounds/truncated.hpp"

namespace annibounds::session {

using Json = nlohmann::ordered_json;

struct Token {
  enum class Kind { identifier, number, symbol, end };
  Kind kind;
  std::string text;
  std::size_t offset;
};

/// Splits session text into tokens; `#` starts a comment running to end of line.
inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      if (word == "ann" && text.compare(j, 4, "-ext") == 0 && (j + 4 == text.size() || !ident_char(text[j + 4]))) {
        word = "ann-ext";
        j += 4;
      }
      out.push_back({Token::Kind::identifier, word, i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::number, text.substr(i, j - i), i});
      i = j;
    } else if (std::string(";,=[]()+-*/^@&<>.").find(c) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), i});
      ++i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::end, "", text.size()});
  return out;
}

/// One executable statement with every name already resolved.
struct Command {
  std::size_t offset = 0;
  std::size_t line = 0;
  std::string source;
  std::string verb;
  std::string name;
  std::string second_name;
  std::optional<PresentedModule> m;
  std::optional<PresentedModule> n;
  std::optional<Ideal> ideal;
  std::optional<Submodule> submodule;
  std::string ideal_label;
  int lo = 0;
  int hi = 0;
  bool flag = false;
  CdTable cd;
  std::vector<PrimaryComponent> components;
};

struct Script {
  RingPtr ring;
  std::vector<Command> commands;
};

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text), toks_(tokenize(text)) {}

  /// Parses a bare polynomial over `ring`; the whole input must be consumed.
  static Polynomial polynomial(const RingPtr& ring, const std::string& text) {
    Parser p(text);
    p.ring_ = ring;
    Polynomial f = p.expression();
    p.expect_end();
    return f;
  }

  Script script() {
    Script s;
    while (peek().kind != Token::Kind::end) {
      const Token& first = peek();
      Command c;
      c.offset = first.offset;
      c.line = line_of(first.offset);
      statement(c);
      const Token& semi = expect(";");
      c.source = collapse(text_.substr(c.offset, semi.offset - c.offset));
      if (c.verb != "ring") s.commands.push_back(std::move(c));
    }
    if (!ring_) throw SyntaxError("no ring declared", text_.size());
    s.ring = ring_;
    return s;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
  }

  Polynomial expression() {
    require_ring();
    Polynomial f(ring_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (is("+") || is("-")) {
        negate = next().text == "-";
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      f = negate ? f - t : f + t;
      first = false;
      if (!is("+") && !is("-")) break;
    }
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool is(const std::string& s) const { return peek().kind == Token::Kind::symbol && peek().text == s; }
  bool is_word(const std::string& s) const { return peek().kind == Token::Kind::identifier && peek().text == s; }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().offset); }

  const Token& expect(const std::string& s) {
    if (!is(s)) fail("expected '" + s + "'" + found());
    return next();
  }
  std::string found() const {
    if (peek().kind == Token::Kind::end) return " but input ended";
    return " but found '" + peek().text + "'";
  }
  void expect_word(const std::string& s) {
    if (!is_word(s)) fail("expected '" + s + "'" + found());
    next();
  }
  std::string identifier(const std::string& what) {
    if (peek().kind != Token::Kind::identifier) fail("expected " + what + found());
    return next().text;
  }
  int integer(const std::string& what) {
    if (peek().kind != Token::Kind::number) fail("expected " + what + found());
    const Token& t = peek();
    if (t.text.size() > 6) fail(what + " is too large");
    next();
    return std::stoi(t.text);
  }

  std::size_t line_of(std::size_t offset) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) line += text_[i] == '\n';
    return line;
  }
  static std::string collapse(const std::string& s) {
    std::string out;
    bool space = false;
    bool comment = false;
    for (char c : s) {
      if (comment) {
        if (c == '\n') comment = false;
        continue;
      }
      if (c == '#') {
        comment = true;
        space = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = true;
        continue;
      }
      if (space && !out.empty()) out += ' ';
      space = false;
      out += c;
    }
    return out;
  }

  void require_ring() const {
    if (!ring_) fail("no ring declared");
  }

  Polynomial term() {
    Polynomial f = power();
    while (is("*") || is("/")) {
      if (next().text == "*") {
        f = f * power();
        continue;
      }
      std::size_t at = peek().offset;
      Polynomial d = power();
      if (d.is_zero()) throw SyntaxError("division by zero", at);
      if (d.terms().size() != 1 || d.terms().front().mono.degree != 0)
        throw SyntaxError("division by a non-constant", at);
      f = ring_->field().inv(d.terms().front().coeff) * f;
    }
    return f;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!is("^")) return base;
    next();
    int e = integer("an exponent");
    if (e > 1000) throw SyntaxError("exponent too large", toks_[pos_ - 1].offset);
    Polynomial out = Polynomial::constant(ring_, Scalar(1));
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  Polynomial atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      next();
      return Polynomial::constant(ring_, Scalar(t.text));
    }
    if (t.kind == Token::Kind::identifier) {
      int idx = ring_->variable_index(t.text);
      if (idx < 0) fail("unknown identifier '" + t.text + "'");
      next();
      return Polynomial::variable(ring_, std::size_t(idx));
    }
    if (is("(")) {
      next();
      Polynomial f = expression();
      expect(")");
      return f;
    }
    fail("expected a term" + found());
  }

  std::vector<Polynomial> polynomial_list(const std::string& close) {
    std::vector<Polynomial> out;
    if (is(close)) return out;
    out.push_back(expression());
    while (is(",")) {
      next();
      out.push_back(expression());
    }
    return out;
  }

  FreeElement vector_literal() {
    expect("[");
    auto parts = polynomial_list("]");
    expect("]");
    if (parts.empty()) fail("a vector needs at least one entry");
    return FreeElement::from_components(ring_, parts);
  }

  Ideal ideal_ref(std::string* label) {
    if (is("<")) {
      std::size_t start = peek().offset;
      next();
      auto gens = polynomial_list(">");
      const Token& close = expect(">");
      if (label) *label = collapse(text_.substr(start, close.offset + 1 - start));
      return Ideal(ring_, gens);
    }
    std::size_t at = peek().offset;
    std::string name = identifier("an ideal name or <...>");
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw SyntaxError("unknown ideal '" + name + "'", at);
    if (label) *label = name;
    return it->second;
  }

  PresentedModule module_ref(std::string* label) {
    std::size_t at = peek().offset;
    std::string name = identifier("a module name");
    auto it = modules_.find(name);
    if (it == modules_.end()) throw SyntaxError("unknown module '" + name + "'", at);
    if (label) *label = name;
    return it->second;
  }

  void range(Command& c) {
    c.lo = c.hi = integer("a degree");
    if (is(".")) {
      next();
      expect(".");
      c.hi = integer("the end of the range");
      if (c.hi < c.lo) fail("empty degree range");
    }
  }

  void new_name(const std::string& name, std::size_t at, bool taken) {
    if (taken) throw SyntaxError("name '" + name + "' is already defined", at);
  }

  void statement(Command& c) {
    std::size_t at = peek().offset;
    std::string verb = identifier("a statement");
    c.verb = verb;
    if (verb == "ring") return ring_statement();
    if (!ring_) throw SyntaxError("no ring declared", at);
    if (verb == "ideal") {
      std::size_t nat = peek().offset;
      c.name = identifier("a name");
      new_name(c.name, nat, ideals_.count(c.name));
      expect("=");
      c.ideal = Ideal(ring_, polynomial_list(";"));
      ideals_.emplace(c.name, *c.ideal);
    } else if (verb == "submodule") {
      std::size_t nat = peek().offset;
      c.name = identifier("a name");
      new_name(c.name, nat, submodules_.count(c.name));
      expect("=");
      std::vector<FreeElement> gens{vector_literal()};
      while (is(",")) {
        next();
        gens.push_back(vector_literal());
      }
      std::size_t rank = gens.front().rank();
      for (const auto& g : gens)
        if (g.rank() != rank) throw SyntaxError("vectors have different lengths", nat);
      c.submodule = Submodule(ring_, rank, gens);
      submodules_.emplace(c.name, *c.submodule);
    } else if (verb == "module") {
      std::size_t nat = peek().offset;
      c.name = identifier("a name");
      new_name(c.name, nat, modules_.count(c.name));
      expect("=");
      std::string how = identifier("quotient, coker or free");
      if (how == "quotient") {
        if (peek().kind == Token::Kind::identifier && submodules_.count(peek().text)) {
          c.m = PresentedModule::quotient(submodules_.at(next().text));
        } else {
          c.m = PresentedModule::quotient(ideal_ref(&c.ideal_label));
        }
      } else if (how == "coker") {
        expect("[");
        std::vector<std::vector<Polynomial>> rows;
        do {
          if (!rows.empty()) next();
          expect("[");
          rows.push_back(polynomial_list("]"));
          expect("]");
        } while (is(","));
        expect("]");
        for (const auto& row : rows)
          if (row.size() != rows.front().size()) throw SyntaxError("matrix rows have different lengths", nat);
        c.m = PresentedModule::from_rows(ring_, rows);
      } else if (how == "free") {
        int r = integer("a rank");
        if (r < 1) fail("rank must be positive");
        c.m = PresentedModule::free(ring_, std::size_t(r));
      } else {
        throw SyntaxError("unknown module constructor '" + how + "'", toks_[pos_ - 1].offset);
      }
      modules_.emplace(c.name, *c.m);
    } else if (verb == "decompose" || verb == "ass" || verb == "dim" || verb == "pd" || verb == "resolution") {
      c.m = module_ref(&c.name);
    } else if (verb == "grade") {
      c.ideal = ideal_ref(&c.ideal_label);
      c.m = module_ref(&c.name);
    } else if (verb == "ext" || verb == "ann-ext") {
      c.m = module_ref(&c.name);
      c.n = module_ref(&c.second_name);
      range(c);
    } else if (verb == "oracle") {
      std::string which = identifier("an oracle kind");
      if (which == "lcmax") {
        c.verb = "oracle lcmax";
        c.m = module_ref(&c.name);
        range(c);
      } else if (which == "ext") {
        c.verb = "oracle ext";
        c.m = module_ref(&c.name);
        c.n = module_ref(&c.second_name);
        range(c);
      } else {
        throw SyntaxError("unknown oracle '" + which + "'", toks_[pos_ - 1].offset);
      }
    } else if (verb == "bounds") {
      bounds_statement(c);
    } else if (verb == "verify") {
      c.m = module_ref(&c.name);
      expect("=");
      do {
        if (!c.components.empty()) next();
        expect("(");
        std::optional<Submodule> q;
        if (peek().kind == Token::Kind::identifier && submodules_.count(peek().text)) {
          q = submodules_.at(next().text);
        } else {
          q = ideal_ref(nullptr).as_submodule();
        }
        expect("@");
        Ideal p = ideal_ref(nullptr);
        expect(")");
        c.components.push_back({*q, p});
      } while (is("&"));
    } else {
      throw SyntaxError("unknown statement '" + verb + "'", at);
    }
  }

  void bounds_statement(Command& c) {
    std::size_t at = peek().offset;
    std::string which = identifier("a bound kind (ext, lcmax, lctop, lccm)");
    c.verb = "bounds " + which;
    if (which == "ext") {
      c.m = module_ref(&c.name);
      c.n = module_ref(&c.second_name);
      range(c);
      if (is_word("gorenstein")) {
        next();
        c.flag = true;
      }
    } else if (which == "lcmax") {
      c.m = module_ref(&c.name);
      range(c);
    } else if (which == "lctop") {
      c.m = module_ref(&c.name);
      c.ideal = ideal_ref(&c.ideal_label);
      if (is("[")) {
        next();
        expect_word("cd");
        do {
          if (!c.cd.empty()) next();
          Ideal p = ideal_ref(nullptr);
          expect("=");
          bool neg = is("-");
          if (neg) next();
          int v = integer("a cohomological dimension");
          c.cd.push_back({p, neg ? -v : v});
        } while (is(","));
        expect("]");
      }
    } else if (which == "lccm") {
      c.m = module_ref(&c.name);
      c.ideal = ideal_ref(&c.ideal_label);
      range(c);
      if (is_word("exact")) {
        next();
        c.flag = true;
      }
    } else {
      throw SyntaxError("unknown bound kind '" + which + "'", at);
    }
  }

  void ring_statement() {
    if (ring_) fail("the ring is already declared");
    std::size_t at = peek().offset;
    std::string f = identifier("a field (Q or F_p)");
    Field field = Field::rationals();
    if (f == "Q") {
    } else if (f.size() > 2 && f.rfind("F_", 0) == 0 &&
               f.find_first_not_of("0123456789", 2) == std::string::npos && f.size() < 12) {
      try {
        field = Field::prime(std::stoul(f.substr(2)));
      } catch (const InvalidArgument& e) {
        throw SyntaxError(e.what(), at);
      }
    } else {
      throw SyntaxError("unknown field '" + f + "'", at);
    }
    expect("[");
    std::vector<std::string> vars{identifier("a variable")};
    while (is(",")) {
      next();
      vars.push_back(identifier("a variable"));
    }
    expect("]");
    MonomialOrder order = MonomialOrder::grevlex;
    if (is_word("order")) {
      next();
      std::size_t oat = peek().offset;
      std::string o = identifier("a monomial order");
      if (o == "grevlex") order = MonomialOrder::grevlex;
      else if (o == "lex") order = MonomialOrder::lex;
      else if (o == "glex") order = MonomialOrder::glex;
      else throw SyntaxError("unknown monomial order '" + o + "'", oat);
    }
    try {
      ring_ = make_ring(field, vars, order);
    } catch (const Error& e) {
      throw SyntaxError(e.what(), at);
    }
  }

  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, Submodule> submodules_;
  std::map<std::string, PresentedModule> modules_;
};

inline Script parse_session(const std::string& text) { return Parser(text).script(); }

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser::polynomial(ring, text);
}

struct Options {
  bool check = false;
  int max_degree = kDefaultMaxDegree;
};

/// Outcome of one statement.
struct Record {
  const Command* command = nullptr;
  bool ok = true;
  std::string error;
  Json result = Json::object();
  std::vector<std::string> text;
  std::vector<Check> checks;

  bool passed() const {
    return ok && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

namespace detail {

inline Json gens(const Ideal& i) { return i.generator_strings(); }

inline Json gens(const Submodule& s) {
  Json out = Json::array();
  for (const auto& g : s.canonical_generators()) out.push_back(g.to_string());
  if (out.empty()) out.push_back("0");
  return out;
}

inline Json primes(const std::vector<Ideal>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline std::string prime_set(const std::vector<Ideal>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + "}";
}

inline std::string submodule_string(const Submodule& s) {
  auto g = gens(s);
  std::string out = "<";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + g[i].get<std::string>();
  return out + ">";
}

inline Json check_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["skipped"] = c.skipped;
  j["detail"] = c.detail;
  return j;
}

} // namespace detail

inline Json report_json(const BoundReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["t"] = r.t;
  j["delta"] = detail::primes(r.delta);
  j["sigma"] = detail::primes(r.sigma);
  j["S_t_gens"] = detail::gens(r.S_t);
  j["T_t_gens"] = detail::gens(r.T_t);
  j["lower_gens"] = detail::gens(r.lower);
  j["upper_gens"] = r.upper ? detail::gens(*r.upper) : Json(nullptr);
  j["exact_gens"] = r.exact ? detail::gens(*r.exact) : Json(nullptr);
  j["exactness_reason"] = r.exactness_reason;
  j["notes"] = r.notes;
  return j;
}

inline std::vector<std::string> report_text(const BoundReport& r, const std::string& quantity) {
  std::vector<std::string> out;
  out.push_back("  t = " + std::to_string(r.t));
  out.push_back("    Delta = " + detail::prime_set(r.delta) + "   Sigma = " + detail::prime_set(r.sigma));
  out.push_back("    S_t = " + detail::submodule_string(r.S_t) + "   T_t = " + detail::submodule_string(r.T_t));
  out.push_back("    " + r.lower.to_string() + " <= " + quantity + " <= " +
                (r.upper ? r.upper->to_string() : std::string("(not applicable)")));
  if (r.exact) out.push_back("    exact: " + r.exact->to_string() + "   [" + r.exactness_reason + "]");
  for (const auto& n : r.notes) out.push_back("    note: " + n);
  return out;
}

class Session {
public:
  Session(Script script, Options options) : script_(std::move(script)), options_(options) {}

  const std::vector<Record>& run() {
    records_.clear();
    for (const auto& c : script_.commands) {
      Record rec;
      rec.command = &c;
      try {
        execute(c, rec);
      } catch (const Error& e) {
        rec.ok = false;
        rec.error = e.what();
      } catch (const std::exception& e) {
        rec.ok = false;
        rec.error = std::string("internal error: ") + e.what();
      }
      records_.push_back(std::move(rec));
    }
    return records_;
  }

  bool all_passed() const {
    return std::all_of(records_.begin(), records_.end(), [](const Record& r) { return r.passed(); });
  }

  Json failures_json() const {
    Json out = Json::array();
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const auto& r = records_[i];
      auto entry = [&](const std::string& reason) {
        Json f;
        f["index"] = i + 1;
        f["line"] = r.command->line;
        f["statement"] = r.command->source;
        f["reason"] = reason;
        out.push_back(f);
      };
      if (!r.ok) entry(r.error);
      for (const auto& c : r.checks)
        if (!c.passed) entry("check " + c.name + " failed" + (c.detail.empty() ? "" : ": " + c.detail));
    }
    return out;
  }

  Json json() const {
    Json j;
    j["ring"] = script_.ring->description();
    j["check"] = options_.check;
    Json cmds = Json::array();
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const auto& r = records_[i];
      Json c;
      c["index"] = i + 1;
      c["line"] = r.command->line;
      c["statement"] = r.command->source;
      c["status"] = !r.ok ? "error" : r.passed() ? "ok" : "check-failed";
      if (!r.ok) c["error"] = r.error;
      c["result"] = r.result;
      Json checks = Json::array();
      for (const auto& k : r.checks) checks.push_back(detail::check_json(k));
      c["checks"] = checks;
      cmds.push_back(c);
    }
    j["commands"] = cmds;
    j["failures"] = failures_json();
    j["ok"] = all_passed();
    return j;
  }

  std::string text() const {
    std::ostringstream os;
    os << "ring " << script_.ring->description() << "\n";
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const auto& r = records_[i];
      os << "\n[" << i + 1 << "] " << r.command->source << "\n";
      if (!r.ok) os << "  error: " << r.error << "\n";
      for (const auto& line : r.text) os << line << "\n";
      for (const auto& k : r.checks)
        os << "  check " << k.name << ": " << (k.skipped ? "skipped" : k.passed ? "pass" : "FAIL")
           << (k.detail.empty() ? "" : " (" + k.detail + ")") << "\n";
    }
    auto failures = failures_json();
    os << "\n" << (failures.empty() ? "all statements succeeded" : std::to_string(failures.size()) + " failure(s)")
       << "\n";
    for (const auto& f : failures)
      os << "  line " << f["line"].get<std::size_t>() << ": " << f["reason"].get<std::string>() << "\n";
    return os.str();
  }

private:
  const DecompositionCertificate& certificate(const Command& c, Record& rec) {
    auto it = certs_.find(c.name);
    if (it != certs_.end()) return it->second;
    rec.result["certificate"] = "computed";
    return certs_.emplace(c.name, decompose(*c.m)).first->second;
  }

  void add_checks(Record& rec, const std::vector<Check>& checks) {
    rec.checks.insert(rec.checks.end(), checks.begin(), checks.end());
  }

  void truncated_check(Record& rec, const std::string& name, const Ideal& a, const Ideal& b) {
    auto eq = truncated_equal(a, b, options_.max_degree);
    Check k{name, true, !eq.has_value(), ""};
    if (!eq) k.detail = "outside the homogeneous range up to degree " + std::to_string(options_.max_degree);
    else if (!*eq) {
      k.passed = false;
      k.detail = a.to_string() + " vs " + b.to_string();
    }
    rec.checks.push_back(k);
  }

  void oracle_checks(Record& rec, const BoundReport& rep, const std::optional<Ideal>& oracle, const std::string& why) {
    if (!options_.check) return;
    if (!oracle) {
      rec.checks.push_back({"oracle_t" + std::to_string(rep.t), true, true, why});
      return;
    }
    for (auto k : sandwich_checks(rep, *oracle)) {
      k.name += "_t" + std::to_string(rep.t);
      rec.checks.push_back(k);
    }
    if (rep.exact) truncated_check(rec, "exact_truncated_t" + std::to_string(rep.t), *rep.exact, *oracle);
  }

  static bool m_primary(const Ideal& a) { return annibounds::detail::radical_is_maximal(a); }

  void execute(const Command& c, Record& rec) {
    const std::string& v = c.verb;
    Json& res = rec.result;
    if (v == "ideal") {
      res["generators"] = detail::gens(*c.ideal);
      rec.text.push_back("  " + c.name + " = " + c.ideal->to_string());
    } else if (v == "submodule") {
      res["generators"] = detail::gens(*c.submodule);
      rec.text.push_back("  " + c.name + " = " + detail::submodule_string(*c.submodule));
    } else if (v == "module") {
      res["presentation"] = c.m->to_string();
      res["graded"] = c.m->is_graded();
      rec.text.push_back("  " + c.name + " = " + c.m->to_string() + (c.m->is_graded() ? " (graded)" : ""));
    } else if (v == "decompose") {
      auto cert = decompose(*c.m);
      record_certificate(c, rec, cert);
    } else if (v == "verify") {
      auto cert = verify_decomposition(*c.m, c.components);
      record_certificate(c, rec, cert);
    } else if (v == "ass") {
      auto ps = associated_primes(*c.m);
      res["primes"] = detail::primes(ps);
      rec.text.push_back("  Ass " + c.name + " = " + detail::prime_set(ps));
      if (options_.check) {
        auto it = certs_.find(c.name);
        if (it != certs_.end()) {
          bool same = annibounds::detail::same_primes(ps, it->second.primes());
          rec.checks.push_back({"ass_matches_certificate", same, false,
                                same ? "" : detail::prime_set(it->second.primes())});
        }
      }
    } else if (v == "dim") {
      int d = dimension(*c.m);
      res["dim"] = d;
      rec.text.push_back("  dim " + c.name + " = " + std::to_string(d));
    } else if (v == "pd") {
      int p = projective_dimension(*c.m);
      res["pd"] = p;
      rec.text.push_back("  pd " + c.name + " = " + std::to_string(p));
    } else if (v == "resolution") {
      const Resolution& r = c.m->resolution();
      Json ranks = Json::array();
      std::string s;
      for (std::size_t k = 0; k <= std::size_t(r.length()); ++k) {
        ranks.push_back(r.rank(k));
        s += (k ? " <- " : "") + std::string("R^") + std::to_string(r.rank(k));
      }
      res["ranks"] = ranks;
      res["minimal"] = c.m->is_graded();
      rec.text.push_back("  " + s);
    } else if (v == "grade") {
      ExtendedInt g = grade(*c.ideal, *c.m);
      res["grade"] = g.is_infinite() ? Json("inf") : Json(g.value());
      rec.text.push_back("  grade(" + c.ideal_label + ", " + c.name + ") = " + g.to_string());
    } else if (v == "ext") {
      Json list = Json::array();
      for (int t = c.lo; t <= c.hi; ++t) {
        PresentedModule e = ext(*c.m, *c.n, t);
        Json j;
        j["t"] = t;
        j["zero"] = e.is_zero();
        j["presentation"] = e.to_string();
        list.push_back(j);
        rec.text.push_back("  Ext^" + std::to_string(t) + "(" + c.name + ", " + c.second_name +
                           ") = " + (e.is_zero() ? std::string("0") : e.to_string()));
      }
      res["ext"] = list;
    } else if (v == "ann-ext" || v == "oracle ext") {
      Json list = Json::array();
      for (int t = c.lo; t <= c.hi; ++t) {
        Ideal a = ext_exact_oracle(*c.m, *c.n, t);
        list.push_back({{"t", t}, {"ann_gens", detail::gens(a)}});
        rec.text.push_back("  ann Ext^" + std::to_string(t) + "(" + c.name + ", " + c.second_name +
                           ") = " + a.to_string());
      }
      res["annihilators"] = list;
    } else if (v == "oracle lcmax") {
      Json list = Json::array();
      for (int t = c.lo; t <= c.hi; ++t) {
        Ideal a = lc_max_exact_oracle(*c.m, t);
        list.push_back({{"t", t}, {"ann_gens", detail::gens(a)}});
        rec.text.push_back("  ann H^" + std::to_string(t) + "_m(" + c.name + ") = " + a.to_string());
      }
      res["annihilators"] = list;
    } else if (v == "bounds ext") {
      const auto& cert = certificate(c, rec);
      Json list = Json::array();
      for (int t = c.lo; t <= c.hi; ++t) {
        auto rep = ext_bounds(*c.m, *c.n, cert, t, c.flag);
        list.push_back(report_json(rep));
        auto lines = report_text(rep, "ann Ext^" + std::to_string(t) + "(" + c.name + ", " + c.second_name + ")");
        rec.text.insert(rec.text.end(), lines.begin(), lines.end());
        oracle_checks(rec, rep, options_.check ? std::optional<Ideal>(ext_exact_oracle(*c.m, *c.n, t)) : std::nullopt,
                      "");
      }
      res["reports"] = list;
    } else if (v == "bounds lcmax") {
      const auto& cert = certificate(c, rec);
      Json list = Json::array();
      for (int t = c.lo; t <= c.hi; ++t) {
        auto rep = lc_max_bounds(*c.m, cert, t);
        list.push_back(report_json(rep));
        auto lines = report_text(rep, "ann H^" + std::to_string(t) + "_m(" + c.name + ")");
        rec.text.insert(rec.text.end(), lines.begin(), lines.end());
        std::optional<Ideal> oracle;
        if (options_.check && c.m->is_graded()) oracle = lc_max_exact_oracle(*c.m, t);
        oracle_checks(rec, rep, oracle, "no duality oracle for ungraded input");
      }
      res["reports"] = list;
    } else if (v == "bounds lctop") {
      const auto& cert = certificate(c, rec);
      auto rep = top_lc_bounds(*c.m, cert, *c.ideal, c.cd);
      res["reports"] = Json::array({report_json(rep)});
      rec.text = report_text(rep, "ann H^" + std::to_string(rep.t) + "_" + c.ideal_label + "(" + c.name + ")");
      std::optional<Ideal> oracle;
      if (options_.check && c.m->is_graded() && m_primary(*c.ideal)) oracle = lc_max_exact_oracle(*c.m, rep.t);
      oracle_checks(rec, rep, oracle, "an oracle exists only for m-primary ideals on graded modules");
    } else if (v == "bounds lccm") {
      const auto& cert = certificate(c, rec);
      Json list = Json::array();
      for (int t = c.lo; t <= c.hi; ++t) {
        auto rep = cm_grade_bounds(*c.m, cert, *c.ideal, t, c.flag);
        list.push_back(report_json(rep));
        auto lines = report_text(rep, "ann H^" + std::to_string(t) + "_" + c.ideal_label + "(" + c.name + ")");
        rec.text.insert(rec.text.end(), lines.begin(), lines.end());
        std::optional<Ideal> oracle;
        if (options_.check && c.m->is_graded() && m_primary(*c.ideal)) oracle = lc_max_exact_oracle(*c.m, t);
        oracle_checks(rec, rep, oracle, "an oracle exists only for m-primary ideals on graded modules");
      }
      res["reports"] = list;
    } else {
      throw InvalidArgument("unknown statement '" + v + "'");
    }
  }

  void record_certificate(const Command& c, Record& rec, const DecompositionCertificate& cert) {
    Json comps = Json::array();
    for (const auto& pc : cert.components) {
      Json j;
      j["component_gens"] = detail::gens(pc.component);
      j["prime"] = pc.prime.to_string();
      comps.push_back(j);
      rec.text.push_back("  " + detail::submodule_string(pc.component) + "  @  " + pc.prime.to_string());
    }
    rec.result["components"] = comps;
    rec.result["verified"] = cert.verified();
    add_checks(rec, cert.checks);
    if (cert.verified()) certs_.insert_or_assign(c.name, cert);
    else certs_.erase(c.name);
  }

  Script script_;
  Options options_;
  std::vector<Record> records_;
  std::map<std::string, DecompositionCertificate> certs_;
};

} // namespace annibounds::session
