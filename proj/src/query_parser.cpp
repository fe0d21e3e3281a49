// Copyright 2026-present the rankdb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <set>

#include "rankdb/query.hpp"

namespace rankdb {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

EvalError::EvalError(const std::string& node, const std::string& message,
                     std::optional<OpErrorKind> kind)
    : Error("in '" + node + "': " + message), node_(node), kind_(kind) {}

Value Literal::value() const {
  if (kind == ValueKind::text) return Value::text(text);
  auto v = parse_number(text);
  if (!v) throw Error("bad numeral '" + text + "'");
  return *v;
}

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

bool operator==(const QueryExpr& a, const QueryExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, TableRef>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, Shift>) {
          return x.degree == y.degree && same(x.child, y.child);
        } else if constexpr (std::is_same_v<T, Project>) {
          return x.attributes == y.attributes && same(x.child, y.child);
        } else if constexpr (std::is_same_v<T, SelectVal> ||
                             std::is_same_v<T, SelectClosure>) {
          return x.attribute == y.attribute && x.literal == y.literal &&
                 same(x.child, y.child);
        } else if constexpr (std::is_same_v<T, SelectAttr>) {
          return x.p == y.p && x.q == y.q && same(x.child, y.child);
        } else {
          return x.p == y.p && x.q == y.q && same(x.lhs, y.lhs) &&
                 same(x.rhs, y.rhs);
        }
      },
      a.node);
}

namespace expr {

namespace {
ExprPtr wrap(auto node) {
  return std::make_shared<const QueryExpr>(QueryExpr{std::move(node)});
}
}  // namespace

ExprPtr table(std::string name) { return wrap(TableRef{std::move(name)}); }
ExprPtr binary(BinaryKind op, ExprPtr lhs, ExprPtr rhs) {
  return wrap(Binary{op, std::move(lhs), std::move(rhs)});
}
ExprPtr shift(std::string degree, ExprPtr child) {
  return wrap(Shift{DegreeLiteral{std::move(degree)}, std::move(child)});
}
ExprPtr project(std::vector<std::string> attributes, ExprPtr child) {
  return wrap(Project{std::move(attributes), std::move(child)});
}
ExprPtr select(ExprPtr child, std::string attribute, Literal literal) {
  return wrap(SelectVal{std::move(child), std::move(attribute), std::move(literal)});
}
ExprPtr select_attr(ExprPtr child, std::string p, std::string q) {
  return wrap(SelectAttr{std::move(child), std::move(p), std::move(q)});
}
ExprPtr select_closure(ExprPtr child, std::string attribute, Literal literal) {
  return wrap(
      SelectClosure{std::move(child), std::move(attribute), std::move(literal)});
}
ExprPtr join(ExprPtr lhs, ExprPtr rhs, std::string p, std::string q) {
  return wrap(Join{std::move(lhs), std::move(rhs), std::move(p), std::move(q)});
}
Literal text(std::string s) { return Literal{ValueKind::text, std::move(s)}; }
Literal number(std::string numeral) {
  return Literal{ValueKind::number, std::move(numeral)};
}

}  // namespace expr

namespace {

enum class Tok { ident, number, string, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string, std::less<>> kKeywords = {
    "shift", "project", "union",  "meet",    "otimes", "residuum",
    "cross", "join",    "on",     "select",  "selectc", "where"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    int l = line;
    int cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_')) {
        s += src[i];
        advance();
      }
      out.push_back({Tok::ident, s, l, cl});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
               c == '.') {
      std::string s;
      if (c == '-') {
        s += c;
        advance();
      }
      while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) ||
                                src[i] == '.')) {
        s += src[i];
        advance();
      }
      if (!parse_number(s)) throw ParseError("malformed number '" + s + "'", l, cl);
      out.push_back({Tok::number, s, l, cl});
    } else if (c == '\'') {
      advance();
      std::string s;
      for (;;) {
        if (i >= src.size()) throw ParseError("unterminated string", l, cl);
        if (src[i] == '\'') {
          if (i + 1 < src.size() && src[i + 1] == '\'') {
            s += '\'';
            advance();
            advance();
            continue;
          }
          advance();
          break;
        }
        s += src[i];
        advance();
      }
      out.push_back({Tok::string, s, l, cl});
    } else if (std::string_view("()[],~").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), l, cl});
      advance();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const ResiduatedLattice* lattice)
      : toks_(lex(src)), lattice_(lattice) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.column);
  }

  bool at_punct(char c) const {
    return peek().kind == Tok::punct && peek().text[0] == c;
  }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::ident && peek().text == kw;
  }
  void expect_punct(char c) {
    if (!at_punct(c)) {
      fail(std::string("expected '") + c + "' but found " + describe(peek()));
    }
    ++pos_;
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) {
      fail("expected '" + std::string(kw) + "' but found " + describe(peek()));
    }
    ++pos_;
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
  }

  std::string ident() {
    const Token& t = peek();
    if (t.kind != Tok::ident || kKeywords.contains(t.text)) {
      fail("expected a name but found " + describe(t));
    }
    ++pos_;
    return t.text;
  }

  ExprPtr parse_expr() {
    const Token& t = peek();
    if (at_punct('(')) {
      ++pos_;
      ExprPtr e = parse_expr();
      expect_punct(')');
      return e;
    }
    if (t.kind != Tok::ident) fail("expected an expression but found " + describe(t));
    const std::string& w = t.text;
    if (w == "shift") {
      ++pos_;
      return parse_shift();
    }
    if (w == "project") {
      ++pos_;
      expect_punct('[');
      std::vector<std::string> attrs{ident()};
      while (at_punct(',')) {
        ++pos_;
        attrs.push_back(ident());
      }
      expect_punct(']');
      return expr::project(std::move(attrs), parse_expr());
    }
    if (w == "union" || w == "meet" || w == "otimes" || w == "residuum" ||
        w == "cross") {
      ++pos_;
      BinaryKind op = w == "union"    ? BinaryKind::union_
                      : w == "meet"   ? BinaryKind::meet
                      : w == "otimes" ? BinaryKind::otimes
                      : w == "cross"  ? BinaryKind::cross
                                      : BinaryKind::residuum;
      auto [lhs, rhs] = parse_pair();
      return expr::binary(op, std::move(lhs), std::move(rhs));
    }
    if (w == "join") {
      ++pos_;
      auto [lhs, rhs] = parse_pair();
      expect_keyword("on");
      std::string p = ident();
      expect_punct('~');
      std::string q = ident();
      return expr::join(std::move(lhs), std::move(rhs), std::move(p), std::move(q));
    }
    if (w == "select" || w == "selectc") {
      bool closure = w == "selectc";
      ++pos_;
      ExprPtr child = parse_expr();
      expect_keyword("where");
      std::string y = ident();
      expect_punct('~');
      const Token& rhs = peek();
      if (rhs.kind == Tok::string || rhs.kind == Tok::number) {
        ++pos_;
        Literal lit = rhs.kind == Tok::string ? expr::text(rhs.text)
                                              : expr::number(rhs.text);
        return closure ? expr::select_closure(std::move(child), std::move(y), lit)
                       : expr::select(std::move(child), std::move(y), lit);
      }
      if (closure) fail("selectc compares an attribute with a literal");
      std::string q = ident();
      return expr::select_attr(std::move(child), std::move(y), std::move(q));
    }
    if (kKeywords.contains(w)) fail("unexpected keyword '" + w + "'");
    ++pos_;
    if (at_punct('(') || at_punct('[')) {
      fail_at(t, "unknown operator keyword '" + w + "'");
    }
    return expr::table(w);
  }

  ExprPtr parse_shift() {
    const Token& t = peek();
    if (t.kind != Tok::number) fail("expected a degree but found " + describe(t));
    ++pos_;
    double v = parse_number(t.text)->as_number();
    if (t.text[0] == '-' || v < 0.0 || v > 1.0) {
      fail_at(t, "degree literal " + t.text + " out of [0,1]");
    }
    if (lattice_) {
      try {
        lattice_->parse(t.text);
      } catch (const LatticeError& e) {
        fail_at(t, e.what());
      }
    }
    return expr::shift(t.text, parse_expr());
  }

  std::pair<ExprPtr, ExprPtr> parse_pair() {
    expect_punct('(');
    ExprPtr lhs = parse_expr();
    expect_punct(',');
    ExprPtr rhs = parse_expr();
    expect_punct(')');
    return {std::move(lhs), std::move(rhs)};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ResiduatedLattice* lattice_;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string print_literal(const Literal& l) {
  return l.kind == ValueKind::text ? quote(l.text) : l.text;
}

std::string print_child(const ExprPtr& e) { return print_query(*e); }

const char* binary_keyword(BinaryKind op) {
  switch (op) {
    case BinaryKind::union_:
      return "union";
    case BinaryKind::meet:
      return "meet";
    case BinaryKind::otimes:
      return "otimes";
    case BinaryKind::residuum:
      return "residuum";
    case BinaryKind::cross:
      return "cross";
  }
  return "?";
}

}  // namespace

ExprPtr parse_query(std::string_view text) {
  return Parser(text, nullptr).parse_all();
}

ExprPtr parse_query(std::string_view text, const ResiduatedLattice& lattice) {
  return Parser(text, &lattice).parse_all();
}

std::string print_query(const QueryExpr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TableRef>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return std::string(binary_keyword(x.op)) + " (" + print_query(*x.lhs) +
                 ", " + print_query(*x.rhs) + ")";
        } else if constexpr (std::is_same_v<T, Shift>) {
          return "shift " + x.degree.text + " " + print_child(x.child);
        } else if constexpr (std::is_same_v<T, Project>) {
          std::string attrs;
          for (std::size_t i = 0; i < x.attributes.size(); ++i) {
            if (i) attrs += ", ";
            attrs += x.attributes[i];
          }
          return "project [" + attrs + "] " + print_child(x.child);
        } else if constexpr (std::is_same_v<T, SelectVal>) {
          return "select " + print_child(x.child) + " where " + x.attribute +
                 " ~ " + print_literal(x.literal);
        } else if constexpr (std::is_same_v<T, SelectClosure>) {
          return "selectc " + print_child(x.child) + " where " + x.attribute +
                 " ~ " + print_literal(x.literal);
        } else if constexpr (std::is_same_v<T, SelectAttr>) {
          return "select " + print_child(x.child) + " where " + x.p + " ~ " + x.q;
        } else {
          return "join (" + print_query(*x.lhs) + ", " + print_query(*x.rhs) +
                 ") on " + x.p + " ~ " + x.q;
        }
      },
      e.node);
}

}  // namespace rankdb
