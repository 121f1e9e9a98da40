#pragma once

// Scenario language: AST, recursive-descent parser and canonical printer.
//
//   document   := { scenario }
//   scenario   := "scenario" STRING "{" { statement } "}"
//   statement  := profile | center | grass | assert | note | let
//   profile    := "profile" IDENT "h4" INT "index" INT
//                 ("c2h2" INT | "ambient" IDENT "codim" INT) "chi" INT "euler" INT
//   center     := "center" ( "curve" "genus" INT "hc" INT
//                          | "surface" "hhc" INT "hkc" INT "kc2" INT "euler" INT "c2xc" INT ["rational"]
//                          | "plane" sigma )
//   grass      := "grassmannian" INT INT
//   assert     := "assert" [STRING] expr ("==" | "!=") expr "cite" STRING
//   note       := "note" STRING
//   let        := "let" IDENT "=" expr
//
//   expr       := product { ("+" | "-") product }
//   product    := unary { "*" unary }
//   unary      := "-" unary | power
//   power      := primary [ "^" unary ]
//   primary    := INT | "true" | "false" | "H" | "E" | sigma | IDENT | IDENT "(" [args] ")"
//               | "(" expr ")" | "[" row { "," row } "]"
//   sigma      := "sigma" "[" INT { "," INT } "]"
//   row        := "[" expr { "," expr } "]"
//
// Statement integers are signed; expression literals are not (use unary minus).

#include "fano/core.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fano::dsl {

inline constexpr int kMaxDepth = 200;

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct Expr;

/// Shared immutable expression node; compares by value.
struct ExprRef {
  std::shared_ptr<const Expr> ptr;
  const Expr& operator*() const { return *ptr; }
  const Expr* operator->() const { return ptr.get(); }
  friend bool operator==(const ExprRef& a, const ExprRef& b);
};

enum class ExprKind { integer, boolean, divisor_h, divisor_e, name, sigma, matrix, call, negate, add, subtract, multiply, power };

struct Expr {
  ExprKind kind = ExprKind::integer;
  Integer value = 0;
  bool flag = false;
  std::string name;
  std::vector<int> parts;
  /// Call arguments, or operands of an operator node.
  std::vector<ExprRef> args;
  std::vector<std::vector<ExprRef>> rows;

  friend bool operator==(const Expr&, const Expr&) = default;
};

inline bool operator==(const ExprRef& a, const ExprRef& b) {
  if (a.ptr == b.ptr) return true;
  if (!a.ptr || !b.ptr) return false;
  return *a.ptr == *b.ptr;
}

inline ExprRef make_expr(Expr e) { return {std::make_shared<const Expr>(std::move(e))}; }

struct AmbientRef {
  std::string name;
  Integer codim;
  friend bool operator==(const AmbientRef&, const AmbientRef&) = default;
};

struct ProfileStmt {
  std::string name;
  Integer h4, index;
  std::optional<Integer> c2h2;
  std::optional<AmbientRef> ambient;
  Integer chi, euler;
  friend bool operator==(const ProfileStmt&, const ProfileStmt&) = default;
};

struct CurveStmt {
  Integer genus, hc;
  friend bool operator==(const CurveStmt&, const CurveStmt&) = default;
};

struct SurfaceStmt {
  Integer hhc, hkc, kc2, euler, c2xc;
  bool rational = false;
  friend bool operator==(const SurfaceStmt&, const SurfaceStmt&) = default;
};

struct PlaneStmt {
  std::vector<int> parts;
  friend bool operator==(const PlaneStmt&, const PlaneStmt&) = default;
};

struct GrassStmt {
  Integer k, n;
  friend bool operator==(const GrassStmt&, const GrassStmt&) = default;
};

struct AssertStmt {
  std::optional<std::string> label;
  ExprRef lhs;
  bool equal = true;
  ExprRef rhs;
  std::string cite;
  friend bool operator==(const AssertStmt&, const AssertStmt&) = default;
};

struct NoteStmt {
  std::string text;
  friend bool operator==(const NoteStmt&, const NoteStmt&) = default;
};

struct LetStmt {
  std::string name;
  ExprRef value;
  friend bool operator==(const LetStmt&, const LetStmt&) = default;
};

using Statement =
    std::variant<ProfileStmt, CurveStmt, SurfaceStmt, PlaneStmt, GrassStmt, AssertStmt, NoteStmt, LetStmt>;

struct Scenario {
  std::string name;
  std::vector<Statement> statements;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct Document {
  std::vector<Scenario> scenarios;
  friend bool operator==(const Document&, const Document&) = default;
};

// ---------------------------------------------------------------- lexer

enum class Tok { end, ident, integer, string, lbrace, rbrace, lparen, rparen, lbracket, rbracket, comma, plus, minus, star, caret, eqeq, neq, assign };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int col = 1;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::end: return "end of input";
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::string: return "string";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::eqeq: return "'=='";
    case Tok::neq: return "'!='";
    case Tok::assign: return "'='";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
        t.kind = Tok::ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
        if (t.text.size() > 200) throw ParseError(t.line, t.col, "integer literal too long");
        t.kind = Tok::integer;
      } else if (c == '"') {
        advance();
        t.kind = Tok::string;
        for (;;) {
          if (pos_ >= src_.size() || src_[pos_] == '\n') throw ParseError(t.line, t.col, "unterminated string");
          const char ch = advance();
          if (ch == '"') break;
          if (ch == '\\') {
            if (pos_ >= src_.size()) throw ParseError(t.line, t.col, "unterminated string");
            const char esc = advance();
            switch (esc) {
              case '"': t.text += '"'; break;
              case '\\': t.text += '\\'; break;
              case 'n': t.text += '\n'; break;
              case 't': t.text += '\t'; break;
              default: throw ParseError(line_, col_ - 1, std::string("unknown escape '\\") + esc + "'");
            }
          } else {
            t.text += ch;
          }
        }
      } else {
        advance();
        switch (c) {
          case '{': t.kind = Tok::lbrace; break;
          case '}': t.kind = Tok::rbrace; break;
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          case '[': t.kind = Tok::lbracket; break;
          case ']': t.kind = Tok::rbracket; break;
          case ',': t.kind = Tok::comma; break;
          case '+': t.kind = Tok::plus; break;
          case '-': t.kind = Tok::minus; break;
          case '*': t.kind = Tok::star; break;
          case '^': t.kind = Tok::caret; break;
          case '=':
            if (pos_ < src_.size() && src_[pos_] == '=') {
              advance();
              t.kind = Tok::eqeq;
            } else {
              t.kind = Tok::assign;
            }
            break;
          case '!':
            if (pos_ < src_.size() && src_[pos_] == '=') {
              advance();
              t.kind = Tok::neq;
              break;
            }
            [[fallthrough]];
          default: {
            const auto byte = static_cast<unsigned char>(c);
            std::string shown = std::isprint(byte) ? std::string("'") + c + "'" : "byte " + std::to_string(byte);
            throw ParseError(t.line, t.col, "unexpected character " + shown);
          }
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------- parser

/// Decimal digits to Integer; leading zeros must not trigger octal parsing.
inline Integer decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

inline bool is_reserved(std::string_view s) {
  return s == "H" || s == "E" || s == "true" || s == "false" || s == "sigma";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::end) {
      const Token start = peek();
      Scenario s = scenario();
      for (const auto& other : doc.scenarios)
        if (other.name == s.name) throw ParseError(start.line, start.col, "duplicate scenario name \"" + s.name + "\"");
      doc.scenarios.push_back(std::move(s));
    }
    return doc;
  }

  ExprRef standalone_expr() {
    ExprRef e = expr();
    expect(Tok::end, "after expression");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  Token take() {
    Token t = peek();
    if (index_ < tokens_.size() - 1) ++index_;
    return t;
  }
  [[noreturn]] void fail(const Token& at, const std::string& msg) const { throw ParseError(at.line, at.col, msg); }

  std::string found(const Token& t) const {
    if (t.kind == Tok::ident || t.kind == Tok::integer) return std::string(describe(t.kind)) + " '" + t.text + "'";
    return describe(t.kind);
  }

  Token expect(Tok kind, const std::string& context) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + describe(kind) + " " + context + ", found " + found(peek()));
    return take();
  }

  void keyword(std::string_view word) {
    const Token& t = peek();
    if (t.kind != Tok::ident || t.text != word) fail(t, "expected '" + std::string(word) + "', found " + found(t));
    take();
  }

  bool accept_keyword(std::string_view word) {
    if (peek().kind == Tok::ident && peek().text == word) {
      take();
      return true;
    }
    return false;
  }

  Integer signed_int(const std::string& what) {
    bool negative = false;
    if (peek().kind == Tok::minus) {
      take();
      negative = true;
    }
    const Token t = expect(Tok::integer, "for " + what);
    const Integer v = decimal(t.text);
    return negative ? Integer(-v) : v;
  }

  int small_int(const Token& t, int limit) {
    if (t.text.size() > 6 || std::stol(t.text) > limit) fail(t, "integer " + t.text + " is too large here");
    return static_cast<int>(std::stol(t.text));
  }

  Scenario scenario() {
    keyword("scenario");
    Scenario s;
    s.name = expect(Tok::string, "for the scenario name").text;
    if (s.name.empty()) fail(peek(), "scenario name must not be empty");
    const Token open = expect(Tok::lbrace, "after the scenario name");
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::rbrace) {
        take();
        return s;
      }
      if (t.kind == Tok::end) fail(open, "unclosed '{' of scenario \"" + s.name + "\"");
      s.statements.push_back(statement());
    }
  }

  Statement statement() {
    const Token t = peek();
    if (t.kind != Tok::ident) fail(t, "expected a statement, found " + found(t));
    if (t.text == "profile") return profile();
    if (t.text == "center") return center();
    if (t.text == "grassmannian") {
      take();
      GrassStmt g;
      g.k = signed_int("grassmannian k");
      g.n = signed_int("grassmannian n");
      return g;
    }
    if (t.text == "assert") return assertion();
    if (t.text == "note") {
      take();
      return NoteStmt{expect(Tok::string, "after 'note'").text};
    }
    if (t.text == "let") {
      take();
      const Token name = expect(Tok::ident, "after 'let'");
      if (is_reserved(name.text)) fail(name, "'" + name.text + "' is reserved");
      expect(Tok::assign, "after the let name");
      return LetStmt{name.text, expr()};
    }
    fail(t, "unknown statement '" + t.text + "'");
  }

  ProfileStmt profile() {
    keyword("profile");
    ProfileStmt p;
    p.name = expect(Tok::ident, "for the profile name").text;
    keyword("h4");
    p.h4 = signed_int("h4");
    keyword("index");
    p.index = signed_int("index");
    if (accept_keyword("c2h2")) {
      p.c2h2 = signed_int("c2h2");
    } else if (accept_keyword("ambient")) {
      AmbientRef a;
      a.name = expect(Tok::ident, "for the ambient name").text;
      keyword("codim");
      a.codim = signed_int("codim");
      p.ambient = std::move(a);
    } else {
      fail(peek(), "expected 'c2h2' or 'ambient', found " + found(peek()));
    }
    keyword("chi");
    p.chi = signed_int("chi");
    keyword("euler");
    p.euler = signed_int("euler");
    return p;
  }

  Statement center() {
    keyword("center");
    if (accept_keyword("curve")) {
      CurveStmt c;
      keyword("genus");
      c.genus = signed_int("genus");
      keyword("hc");
      c.hc = signed_int("hc");
      return c;
    }
    if (accept_keyword("surface")) {
      SurfaceStmt s;
      keyword("hhc");
      s.hhc = signed_int("hhc");
      keyword("hkc");
      s.hkc = signed_int("hkc");
      keyword("kc2");
      s.kc2 = signed_int("kc2");
      keyword("euler");
      s.euler = signed_int("euler");
      keyword("c2xc");
      s.c2xc = signed_int("c2xc");
      s.rational = accept_keyword("rational");
      return s;
    }
    if (accept_keyword("plane")) {
      keyword("sigma");
      return PlaneStmt{sigma_parts()};
    }
    fail(peek(), "expected 'curve', 'surface' or 'plane', found " + found(peek()));
  }

  AssertStmt assertion() {
    keyword("assert");
    AssertStmt a;
    if (peek().kind == Tok::string) a.label = take().text;
    a.lhs = expr();
    const Token cmp = take();
    if (cmp.kind == Tok::eqeq) a.equal = true;
    else if (cmp.kind == Tok::neq) a.equal = false;
    else fail(cmp, "expected '==' or '!=', found " + found(cmp));
    a.rhs = expr();
    keyword("cite");
    a.cite = expect(Tok::string, "after 'cite'").text;
    return a;
  }

  std::vector<int> sigma_parts() {
    expect(Tok::lbracket, "after 'sigma'");
    std::vector<int> parts;
    for (;;) {
      const Token t = expect(Tok::integer, "in a partition");
      parts.push_back(small_int(t, 1000));
      if (peek().kind == Tok::comma) {
        take();
        continue;
      }
      expect(Tok::rbracket, "to close the partition");
      break;
    }
    if (parts.size() > 64) fail(peek(), "partition has too many parts");
    return parts;
  }

  struct DepthGuard {
    Parser& p;
    DepthGuard(Parser& parser, const Token& at) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail(at, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  static ExprRef binary(ExprKind kind, ExprRef a, ExprRef b) {
    Expr e;
    e.kind = kind;
    e.args = {std::move(a), std::move(b)};
    return make_expr(std::move(e));
  }

  ExprRef expr() {
    DepthGuard guard(*this, peek());
    ExprRef left = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const ExprKind kind = take().kind == Tok::plus ? ExprKind::add : ExprKind::subtract;
      left = binary(kind, std::move(left), product());
    }
    return left;
  }

  ExprRef product() {
    ExprRef left = unary();
    while (peek().kind == Tok::star) {
      take();
      left = binary(ExprKind::multiply, std::move(left), unary());
    }
    return left;
  }

  ExprRef unary() {
    DepthGuard guard(*this, peek());
    if (peek().kind == Tok::minus) {
      take();
      Expr e;
      e.kind = ExprKind::negate;
      e.args = {unary()};
      return make_expr(std::move(e));
    }
    ExprRef base = primary();
    if (peek().kind == Tok::caret) {
      take();
      return binary(ExprKind::power, std::move(base), unary());
    }
    return base;
  }

  ExprRef primary() {
    DepthGuard guard(*this, peek());
    const Token t = take();
    Expr e;
    switch (t.kind) {
      case Tok::integer:
        e.kind = ExprKind::integer;
        e.value = decimal(t.text);
        return make_expr(std::move(e));
      case Tok::lparen: {
        ExprRef inner = expr();
        expect(Tok::rparen, "to close '('");
        return inner;
      }
      case Tok::lbracket: {
        e.kind = ExprKind::matrix;
        for (;;) {
          expect(Tok::lbracket, "to open a matrix row");
          std::vector<ExprRef> row;
          for (;;) {
            row.push_back(expr());
            if (peek().kind == Tok::comma) {
              take();
              continue;
            }
            expect(Tok::rbracket, "to close a matrix row");
            break;
          }
          e.rows.push_back(std::move(row));
          if (peek().kind == Tok::comma) {
            take();
            continue;
          }
          expect(Tok::rbracket, "to close the matrix");
          break;
        }
        return make_expr(std::move(e));
      }
      case Tok::ident: {
        if (t.text == "H") e.kind = ExprKind::divisor_h;
        else if (t.text == "E") e.kind = ExprKind::divisor_e;
        else if (t.text == "true" || t.text == "false") {
          e.kind = ExprKind::boolean;
          e.flag = t.text == "true";
        } else if (t.text == "sigma") {
          e.kind = ExprKind::sigma;
          e.parts = sigma_parts();
        } else if (peek().kind == Tok::lparen) {
          take();
          e.kind = ExprKind::call;
          e.name = t.text;
          if (peek().kind != Tok::rparen) {
            for (;;) {
              e.args.push_back(expr());
              if (peek().kind == Tok::comma) {
                take();
                continue;
              }
              break;
            }
          }
          expect(Tok::rparen, "to close the argument list of " + t.text);
        } else {
          e.kind = ExprKind::name;
          e.name = t.text;
        }
        return make_expr(std::move(e));
      }
      default: fail(t, "expected an expression, found " + found(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  int depth_ = 0;
};

inline Document parse(std::string_view source) { return Parser(source).document(); }

inline ExprRef parse_expression(std::string_view source) { return Parser(source).standalone_expr(); }

// ---------------------------------------------------------------- printer

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::add:
    case ExprKind::subtract: return 1;
    case ExprKind::multiply: return 2;
    case ExprKind::negate: return 3;
    case ExprKind::power: return 4;
    default: return 5;
  }
}

inline void print_expr(const Expr& e, int min_prec, std::string& out);

inline void print_child(const ExprRef& e, int min_prec, std::string& out) {
  if (precedence(*e) < min_prec) {
    out += '(';
    print_expr(*e, 0, out);
    out += ')';
  } else {
    print_expr(*e, min_prec, out);
  }
}

inline void print_parts(const std::vector<int>& parts, std::string& out) {
  out += "sigma[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ']';
}

inline void print_expr(const Expr& e, int, std::string& out) {
  switch (e.kind) {
    case ExprKind::integer: out += e.value.str(); return;
    case ExprKind::boolean: out += e.flag ? "true" : "false"; return;
    case ExprKind::divisor_h: out += 'H'; return;
    case ExprKind::divisor_e: out += 'E'; return;
    case ExprKind::name: out += e.name; return;
    case ExprKind::sigma: print_parts(e.parts, out); return;
    case ExprKind::matrix:
      out += '[';
      for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (r) out += ", ";
        out += '[';
        for (std::size_t c = 0; c < e.rows[r].size(); ++c) {
          if (c) out += ", ";
          print_expr(*e.rows[r][c], 0, out);
        }
        out += ']';
      }
      out += ']';
      return;
    case ExprKind::call:
      out += e.name;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        print_expr(*e.args[i], 0, out);
      }
      out += ')';
      return;
    case ExprKind::negate:
      out += '-';
      print_child(e.args[0], 3, out);
      return;
    case ExprKind::add:
    case ExprKind::subtract:
      print_child(e.args[0], 1, out);
      out += e.kind == ExprKind::add ? " + " : " - ";
      print_child(e.args[1], 2, out);
      return;
    case ExprKind::multiply:
      print_child(e.args[0], 2, out);
      out += '*';
      print_child(e.args[1], 3, out);
      return;
    case ExprKind::power:
      print_child(e.args[0], 5, out);
      out += '^';
      print_child(e.args[1], 3, out);
      return;
  }
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + '"';
}

}  // namespace detail

inline std::string print(const Expr& e) {
  std::string out;
  detail::print_expr(e, 0, out);
  return out;
}

inline std::string print(const ExprRef& e) { return print(*e); }

inline std::string print(const Statement& statement) {
  using detail::quote;
  struct Visitor {
    std::string operator()(const ProfileStmt& p) const {
      std::string s = "profile " + p.name + " h4 " + p.h4.str() + " index " + p.index.str();
      if (p.c2h2) s += " c2h2 " + p.c2h2->str();
      if (p.ambient) s += " ambient " + p.ambient->name + " codim " + p.ambient->codim.str();
      return s + " chi " + p.chi.str() + " euler " + p.euler.str();
    }
    std::string operator()(const CurveStmt& c) const {
      return "center curve genus " + c.genus.str() + " hc " + c.hc.str();
    }
    std::string operator()(const SurfaceStmt& c) const {
      return "center surface hhc " + c.hhc.str() + " hkc " + c.hkc.str() + " kc2 " + c.kc2.str() + " euler " +
             c.euler.str() + " c2xc " + c.c2xc.str() + (c.rational ? " rational" : "");
    }
    std::string operator()(const PlaneStmt& p) const {
      std::string s = "center plane ";
      detail::print_parts(p.parts, s);
      return s;
    }
    std::string operator()(const GrassStmt& g) const { return "grassmannian " + g.k.str() + " " + g.n.str(); }
    std::string operator()(const AssertStmt& a) const {
      std::string s = "assert ";
      if (a.label) s += quote(*a.label) + " ";
      return s + print(a.lhs) + (a.equal ? " == " : " != ") + print(a.rhs) + " cite " + quote(a.cite);
    }
    std::string operator()(const NoteStmt& n) const { return "note " + quote(n.text); }
    std::string operator()(const LetStmt& l) const { return "let " + l.name + " = " + print(l.value); }
  };
  return std::visit(Visitor{}, statement);
}

inline std::string print(const Scenario& s) {
  std::string out = "scenario " + detail::quote(s.name) + " {\n";
  for (const auto& st : s.statements) out += "  " + print(st) + "\n";
  return out + "}\n";
}

inline std::string print(const Document& d) {
  std::string out;
  for (std::size_t i = 0; i < d.scenarios.size(); ++i) {
    if (i) out += "\n";
    out += print(d.scenarios[i]);
  }
  return out;
}

}  // namespace fano::dsl
