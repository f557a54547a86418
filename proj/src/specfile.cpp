#include "hklab/specfile.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <utility>

#include "hklab/errors.hpp"

namespace hklab {
namespace {

enum class TokKind { Ident, Int, Punct, End };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void fail_at(const Token& at, const std::string& msg,
                          ErrorCode code = ErrorCode::ParseError) {
  std::ostringstream os;
  os << "line " << at.line << ", column " << at.col << ": " << msg;
  throw Error(code, os.str());
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const char c = text[i];
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
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    const Token start{TokKind::Punct, std::string(1, c), line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(text[j])) ++j;
      toks.push_back({TokKind::Ident, text.substr(i, j - i), line, col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      toks.push_back({TokKind::Int, text.substr(i, j - i), line, col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    static const std::string punct = "()[],;=/*^+-";
    if (punct.find(c) == std::string::npos)
      fail_at(start, std::string("unexpected character '") + c + "'");
    toks.push_back(start);
    ++col;
    ++i;
  }
  toks.push_back({TokKind::End, "", line, col});
  return toks;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  SpecDeclarations parse() {
    while (peek().kind != TokKind::End) {
      const Token& kw = expect_ident("declaration keyword");
      if (kw.text == "ring") {
        parse_ring_decl();
      } else if (kw.text == "ideal") {
        parse_ideal_decl();
      } else if (kw.text == "module") {
        parse_module_decl();
      } else {
        fail_at(kw, "expected 'ring', 'ideal' or 'module', got '" + kw.text + "'");
      }
    }
    return std::move(out_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool accept_punct(char c) {
    if (peek().kind == TokKind::Punct && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect_punct(char c) {
    const Token& t = next();
    if (t.kind != TokKind::Punct || t.text[0] != c)
      fail_at(t, std::string("expected '") + c + "', got '" +
                     (t.kind == TokKind::End ? "end of input" : t.text) + "'");
    return t;
  }

  const Token& expect_ident(const char* what) {
    const Token& t = next();
    if (t.kind != TokKind::Ident)
      fail_at(t, std::string("expected ") + what + ", got '" +
                     (t.kind == TokKind::End ? "end of input" : t.text) + "'");
    return t;
  }

  std::uint64_t expect_int(const char* what) {
    const Token& t = next();
    if (t.kind != TokKind::Int)
      fail_at(t, std::string("expected ") + what + ", got '" +
                     (t.kind == TokKind::End ? "end of input" : t.text) + "'");
    return int_value(t);
  }

  static std::uint64_t int_value(const Token& t) {
    std::uint64_t v = 0;
    for (char c : t.text) {
      if (v > (UINT64_MAX - 9) / 10) fail_at(t, "integer literal out of range");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  }

  std::string declared_name() {
    const Token& t = expect_ident("a name");
    if (out_.has_name(t.text)) fail_at(t, "name '" + t.text + "' already declared");
    return t.text;
  }

  RingPtr ring_by_name(const Token& t) const {
    for (const auto& [name, ring] : out_.rings)
      if (name == t.text) return ring;
    fail_at(t, "unknown ring '" + t.text + "'", ErrorCode::UnknownName);
  }

  // poly := ['+'|'-'] term { ('+'|'-') term }
  Polynomial parse_poly(const RingContextPtr& ctx) {
    bool negate = false;
    if (accept_punct('-'))
      negate = true;
    else
      accept_punct('+');
    Polynomial acc = parse_term(ctx);
    if (negate) acc = -acc;
    for (;;) {
      if (accept_punct('+')) {
        acc += parse_term(ctx);
      } else if (accept_punct('-')) {
        acc -= parse_term(ctx);
      } else {
        return acc;
      }
    }
  }

  // term := factor { '*' factor }
  Polynomial parse_term(const RingContextPtr& ctx) {
    Polynomial acc = parse_factor(ctx);
    while (accept_punct('*')) acc = acc * parse_factor(ctx);
    return acc;
  }

  // factor := base [ '^' INT ]
  Polynomial parse_factor(const RingContextPtr& ctx) {
    Polynomial base = parse_base(ctx);
    if (!accept_punct('^')) return base;
    const Token& et = toks_[pos_];
    const std::uint64_t e = expect_int("an exponent");
    if (e > 65535) fail_at(et, "exponent too large", ErrorCode::ExponentOverflow);
    Polynomial acc = Polynomial::constant(ctx, 1);
    Polynomial sq = base;
    for (std::uint64_t k = e; k > 0; k >>= 1) {
      if (k & 1) acc = acc * sq;
      if (k > 1) sq = sq * sq;
    }
    return acc;
  }

  // base := INT | VAR | '(' poly ')'
  Polynomial parse_base(const RingContextPtr& ctx) {
    const Token& t = next();
    if (t.kind == TokKind::Int) {
      const std::uint64_t v = int_value(t);
      return Polynomial::constant(ctx, static_cast<std::int64_t>(v % ctx->p));
    }
    if (t.kind == TokKind::Ident) {
      const std::size_t idx = ctx->var_index(t.text);
      if (idx == ctx->nvars()) fail_at(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(ctx, idx);
    }
    if (t.kind == TokKind::Punct && t.text[0] == '(') {
      Polynomial inner = parse_poly(ctx);
      expect_punct(')');
      return inner;
    }
    fail_at(t, "expected a coefficient, variable or '(', got '" +
                   (t.kind == TokKind::End ? "end of input" : t.text) + "'");
  }

  std::vector<Polynomial> parse_poly_list(const RingContextPtr& ctx, const char* role) {
    std::vector<Polynomial> out;
    expect_punct('(');
    if (!accept_punct(')')) {
      for (;;) {
        const Token& at = peek();
        Polynomial f = parse_poly(ctx);
        if (!f.is_zero() && !f.constant_coefficient().is_zero())
          fail_at(at, std::string(role) + " has a nonzero constant term",
                  ErrorCode::NotLocalInput);
        out.push_back(std::move(f));
        if (accept_punct(')')) break;
        expect_punct(',');
      }
    }
    return out;
  }

  // ring NAME = GF(P)[v1,...,vk] [/ (f1, ..., fs)] ;
  void parse_ring_decl() {
    const std::string name = declared_name();
    expect_punct('=');
    const Token& gf = expect_ident("'GF'");
    if (gf.text != "GF") fail_at(gf, "expected 'GF', got '" + gf.text + "'");
    expect_punct('(');
    const Token& pt = toks_[pos_];
    const std::uint64_t p = expect_int("a characteristic");
    expect_punct(')');
    expect_punct('[');
    std::vector<std::string> vars;
    if (!accept_punct(']')) {
      for (;;) {
        vars.push_back(expect_ident("a variable name").text);
        if (accept_punct(']')) break;
        expect_punct(',');
      }
    }
    RingContextPtr ctx;
    try {
      ctx = make_context(static_cast<std::uint32_t>(p > UINT32_MAX ? 0 : p), std::move(vars));
    } catch (const Error& e) {
      fail_at(pt, e.what(), e.code());
    }
    std::vector<Polynomial> gens;
    if (accept_punct('/')) gens = parse_poly_list(ctx, "defining generator");
    expect_punct(';');
    out_.rings.emplace_back(name, RingPresentation::make(ctx, std::move(gens)));
  }

  // ideal NAME = (f1, ..., fs) in RING ;
  void parse_ideal_decl() {
    const std::string name = declared_name();
    expect_punct('=');
    const std::size_t list_pos = pos_;
    expect_punct('(');
    // Scan past the list to find the ring name, then rewind and parse.
    int depth = 1;
    while (depth > 0) {
      const Token& t = next();
      if (t.kind == TokKind::End) fail_at(t, "unterminated ideal generator list");
      if (t.kind == TokKind::Punct && t.text[0] == '(') ++depth;
      if (t.kind == TokKind::Punct && t.text[0] == ')') --depth;
    }
    const Token& kw = expect_ident("'in'");
    if (kw.text != "in") fail_at(kw, "expected 'in', got '" + kw.text + "'");
    const Token& rt = expect_ident("a ring name");
    RingPtr ring = ring_by_name(rt);
    const std::size_t after = pos_;
    pos_ = list_pos;
    std::vector<Polynomial> gens = parse_poly_list(ring->context(), "ideal generator");
    pos_ = after;
    expect_punct(';');
    out_.ideals.emplace_back(name, rt.text, std::move(gens));
  }

  // module NAME = coker RING [[a11,...],[a21,...],...] ;
  // module NAME = free RING n ;
  void parse_module_decl() {
    const std::string name = declared_name();
    expect_punct('=');
    const Token& kw = expect_ident("'coker' or 'free'");
    if (kw.text == "free") {
      const Token& rt = expect_ident("a ring name");
      RingPtr ring = ring_by_name(rt);
      const std::uint64_t rank = expect_int("a rank");
      if (rank > 4096) fail_at(toks_[pos_ - 1], "rank too large", ErrorCode::ResourceLimit);
      expect_punct(';');
      out_.modules.emplace_back(name, rt.text,
                                ModulePresentation::free_module(std::move(ring),
                                                                static_cast<std::size_t>(rank)));
      return;
    }
    if (kw.text != "coker") fail_at(kw, "expected 'coker' or 'free', got '" + kw.text + "'");
    const Token& rt = expect_ident("a ring name");
    RingPtr ring = ring_by_name(rt);
    const Token& open = expect_punct('[');
    std::vector<std::vector<Polynomial>> columns;
    if (!accept_punct(']')) {
      for (;;) {
        const Token& col_open = expect_punct('[');
        std::vector<Polynomial> column;
        if (!accept_punct(']')) {
          for (;;) {
            column.push_back(parse_poly(ring->context()));
            if (accept_punct(']')) break;
            expect_punct(',');
          }
        }
        if (!columns.empty() && column.size() != columns.front().size())
          fail_at(col_open, "relation column length mismatch", ErrorCode::BadDims);
        columns.push_back(std::move(column));
        if (accept_punct(']')) break;
        expect_punct(',');
      }
    }
    expect_punct(';');
    if (columns.empty()) fail_at(open, "cokernel matrix needs at least one column");
    const std::size_t n = columns.front().size();
    out_.modules.emplace_back(name, rt.text,
                              ModulePresentation(std::move(ring), n, std::move(columns)));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SpecDeclarations out_;
};

template <typename Seq>
const typename Seq::value_type* find_entry(const Seq& seq, const std::string& name) {
  for (const auto& entry : seq)
    if (std::get<0>(entry) == name) return &entry;
  return nullptr;
}

}  // namespace

const RingPtr& SpecDeclarations::find_ring(const std::string& name) const {
  if (const auto* e = find_entry(rings, name)) return e->second;
  throw Error(ErrorCode::UnknownName, "unknown ring '" + name + "'");
}

const std::vector<Polynomial>& SpecDeclarations::find_ideal(const std::string& name) const {
  if (const auto* e = find_entry(ideals, name)) return std::get<2>(*e);
  throw Error(ErrorCode::UnknownName, "unknown ideal '" + name + "'");
}

const ModulePresentation& SpecDeclarations::find_module(const std::string& name) const {
  if (const auto* e = find_entry(modules, name)) return std::get<2>(*e);
  throw Error(ErrorCode::UnknownName, "unknown module '" + name + "'");
}

const std::string& SpecDeclarations::ideal_ring(const std::string& name) const {
  if (const auto* e = find_entry(ideals, name)) return std::get<1>(*e);
  throw Error(ErrorCode::UnknownName, "unknown ideal '" + name + "'");
}

const std::string& SpecDeclarations::module_ring(const std::string& name) const {
  if (const auto* e = find_entry(modules, name)) return std::get<1>(*e);
  throw Error(ErrorCode::UnknownName, "unknown module '" + name + "'");
}

bool SpecDeclarations::has_name(const std::string& name) const {
  return find_entry(rings, name) || find_entry(ideals, name) || find_entry(modules, name);
}

SpecDeclarations parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string substitute_parameter(const std::string& text, const std::string& name,
                                 long value) {
  std::string out;
  out.reserve(text.size());
  const std::string repl = std::to_string(value);
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') out.push_back(text[i++]);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(text[j])) ++j;
      const std::string word = text.substr(i, j - i);
      out += (word == name) ? repl : word;
      i = j;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

std::string pretty_print_spec(const SpecDeclarations& decls) {
  std::ostringstream os;
  for (const auto& [name, ring] : decls.rings) {
    os << "ring " << name << " = GF(" << ring->characteristic() << ")[";
    const auto& vars = ring->context()->vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) os << ",";
      os << vars[i];
    }
    os << "]";
    if (!ring->is_ambient()) {
      os << " / (";
      const auto& gens = ring->generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i].str();
      }
      os << ")";
    }
    os << ";\n";
  }
  for (const auto& [name, ring_name, gens] : decls.ideals) {
    os << "ideal " << name << " = (";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) os << ", ";
      os << gens[i].str();
    }
    os << ") in " << ring_name << ";\n";
  }
  for (const auto& [name, ring_name, mod] : decls.modules) {
    if (mod.relation_count() == 0) {
      os << "module " << name << " = free " << ring_name << " " << mod.generator_count()
         << ";\n";
      continue;
    }
    os << "module " << name << " = coker " << ring_name << " [";
    const auto& cols = mod.columns();
    for (std::size_t s = 0; s < cols.size(); ++s) {
      if (s) os << ",";
      os << "[";
      for (std::size_t i = 0; i < cols[s].size(); ++i) {
        if (i) os << ",";
        os << cols[s][i].str();
      }
      os << "]";
    }
    os << "];\n";
  }
  return os.str();
}

}  // namespace hklab
