// Copyright 2026 The fdr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdr/parser.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <utility>

namespace fdr {

ParseError::ParseError(const std::string& message, SourceSpan span,
                       std::vector<std::string> expected)
    : std::runtime_error(message), span_(span), expected_(std::move(expected)) {}

bool isReservedWord(std::string_view word) {
  static constexpr std::array<std::string_view, 12> kWords = {
      "fun", "tfun", "forall", "Top", "Bot", "B", "c", "Dom", "Range", "Fst", "Snd", "let"};
  return std::find(kWords.begin(), kWords.end(), word) != kWords.end();
}

namespace {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Lt,
  Gt,
  Comma,
  Colon,
  Dot,
  FatArrow,
  Arrow,
  Subtype,
  Equals,
  Semi,
  Eof,
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::Subtype: return "'<:'";
    case Tok::Equals: return "'='";
    case Tok::Semi: return "';'";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipTrivia();
      if (pos_ >= src_.size()) {
        out.push_back(Token{Tok::Eof, {}, eofSpan()});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipTrivia() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  // Points at the last character of the input so the span stays inside it.
  SourceSpan eofSpan() const {
    if (lastLine_ == 0) return SourceSpan{1, 1, 1, 1};
    return SourceSpan{lastLine_, lastCol_, lastLine_, lastCol_};
  }

  Token next() {
    int line = line_;
    int col = col_;
    std::size_t start = pos_;
    char ch = src_[pos_];
    auto finish = [&](Tok kind) {
      lastLine_ = line_;
      lastCol_ = col_ - 1;
      return Token{kind, std::string(src_.substr(start, pos_ - start)),
                   SourceSpan{line, col, line_, col_ - 1}};
    };
    auto two = [&](char second) {
      return pos_ + 1 < src_.size() && src_[pos_ + 1] == second;
    };
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '\'')) {
        advance();
      }
      return finish(Tok::Ident);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      }
      return finish(Tok::Int);
    }
    Tok kind;
    int width = 1;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '>': kind = Tok::Gt; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '.': kind = Tok::Dot; break;
      case ';': kind = Tok::Semi; break;
      case '<':
        kind = two(':') ? Tok::Subtype : Tok::Lt;
        width = kind == Tok::Subtype ? 2 : 1;
        break;
      case '=':
        kind = two('>') ? Tok::FatArrow : Tok::Equals;
        width = kind == Tok::FatArrow ? 2 : 1;
        break;
      case '-':
        if (two('>')) {
          kind = Tok::Arrow;
          width = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(fmt::format("unexpected character '{}'", ch),
                         SourceSpan{line, col, line, col});
    }
    for (int i = 0; i < width; ++i) advance();
    return finish(kind);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int lastLine_ = 0;
  int lastCol_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, std::vector<std::string> scope)
      : toks_(Lexer(src).run()), types_(std::move(scope)) {}

  TypePtr wholeType() {
    TypePtr t = type();
    expect(Tok::Eof);
    return t;
  }

  TermPtr wholeTerm() {
    TermPtr t = term();
    expect(Tok::Eof);
    return t;
  }

  TermPtr program() {
    if (!isWord("let")) return wholeTerm();
    SourceSpan start = peek().span;
    ++pos_;
    Token name = expectName();
    expect(Tok::Colon);
    TypePtr annotation = type();
    expect(Tok::Equals);
    TermPtr value = term();
    expect(Tok::Semi);
    TermPtr rest = program();
    SourceSpan span = SourceSpan::merge(start, rest->span());
    return Term::app(Term::abs(name.text, annotation, rest, span), value, span);
  }

  Context context() {
    Context ctx;
    if (peek().kind == Tok::Eof) return ctx;
    for (;;) {
      Token name = expectName();
      if (peek().kind == Tok::Subtype) {
        ++pos_;
        ctx = ctx.extendType(name.text, type());
        types_.push_back(name.text);
      } else if (peek().kind == Tok::Colon) {
        ++pos_;
        ctx = ctx.extendTerm(name.text, type());
      } else {
        fail({std::string(describe(Tok::Subtype)), std::string(describe(Tok::Colon))});
      }
      if (peek().kind != Tok::Comma) break;
      ++pos_;
    }
    expect(Tok::Eof);
    return ctx;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  bool isWord(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == w;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::Eof ? "end of input" : "'" + t.text + "'";
    std::string message = fmt::format("unexpected {}", found);
    if (!expected.empty()) {
      message += fmt::format(", expected {}", fmt::join(expected, " or "));
    }
    throw ParseError(message, t.span, std::move(expected));
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail({std::string(describe(kind))});
    return toks_[pos_++];
  }

  void expectWord(std::string_view w) {
    if (!isWord(w)) fail({fmt::format("'{}'", w)});
    ++pos_;
  }

  Token expectName() {
    if (peek().kind != Tok::Ident || isReservedWord(peek().text)) fail({"identifier"});
    return toks_[pos_++];
  }

  // type := 'forall' X '<:' type '.' type | atom ('->' type)?
  TypePtr type() {
    if (isWord("forall")) {
      ++pos_;
      Token name = expectName();
      expect(Tok::Subtype);
      TypePtr bound = type();
      expect(Tok::Dot);
      types_.push_back(name.text);
      TypePtr body = type();
      types_.pop_back();
      return Type::all(name.text, bound, body);
    }
    TypePtr left = typeAtom();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      return Type::arrow(left, type());
    }
    return left;
  }

  TypePtr typeAtom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++pos_;
        TypePtr inner = type();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::LBracket: {
        ++pos_;
        TypePtr first = type();
        expect(Tok::Comma);
        TypePtr second = type();
        expect(Tok::RBracket);
        return Type::pair(first, second);
      }
      case Tok::Ident: {
        if (t.text == "B") return ++pos_, Type::base();
        if (t.text == "Top") return ++pos_, Type::top();
        if (t.text == "Bot") return ++pos_, Type::bot();
        static constexpr std::array<std::pair<std::string_view, TypeKind>, 4> kProjections = {{
            {"Dom", TypeKind::Dom},
            {"Range", TypeKind::Range},
            {"Fst", TypeKind::Fst},
            {"Snd", TypeKind::Snd},
        }};
        for (const auto& [word, kind] : kProjections) {
          if (t.text != word) continue;
          ++pos_;
          expect(Tok::Lt);
          TypePtr inner = type();
          expect(Tok::Gt);
          return Type::projection(kind, inner);
        }
        if (isReservedWord(t.text)) break;
        for (int i = static_cast<int>(types_.size()) - 1; i >= 0; --i) {
          if (types_[i] == t.text) {
            ++pos_;
            return Type::var(static_cast<int>(types_.size()) - 1 - i, t.text);
          }
        }
        throw ParseError(fmt::format("unbound type variable '{}'", t.text), t.span,
                         {"type"});
      }
      default:
        break;
    }
    fail({"type"});
  }

  bool startsAtom() const {
    const Token& t = peek();
    if (t.kind == Tok::LParen) return true;
    if (t.kind != Tok::Ident) return false;
    return t.text == "c" || !isReservedWord(t.text);
  }

  TermPtr term() {
    if (isWord("fun")) {
      SourceSpan start = peek().span;
      ++pos_;
      expect(Tok::LParen);
      Token name = expectName();
      expect(Tok::Colon);
      TypePtr annotation = type();
      expect(Tok::RParen);
      expect(Tok::FatArrow);
      TermPtr body = term();
      return Term::abs(name.text, annotation, body, SourceSpan::merge(start, body->span()));
    }
    if (isWord("tfun")) {
      SourceSpan start = peek().span;
      ++pos_;
      expect(Tok::LParen);
      Token name = expectName();
      expect(Tok::Subtype);
      TypePtr bound = type();
      expect(Tok::RParen);
      expect(Tok::FatArrow);
      types_.push_back(name.text);
      TermPtr body = term();
      types_.pop_back();
      return Term::tabs(name.text, bound, body, SourceSpan::merge(start, body->span()));
    }
    return application();
  }

  TermPtr application() {
    TermPtr fn = postfix();
    for (;;) {
      if (peek().kind == Tok::LBracket) {
        ++pos_;
        TypePtr arg = type();
        Token close = expect(Tok::RBracket);
        fn = Term::tapp(fn, arg, SourceSpan::merge(fn->span(), close.span));
      } else if (startsAtom()) {
        TermPtr arg = postfix();
        fn = Term::app(fn, arg, SourceSpan::merge(fn->span(), arg->span()));
      } else {
        return fn;
      }
    }
  }

  TermPtr postfix() {
    TermPtr t = termAtom();
    while (peek().kind == Tok::Dot) {
      ++pos_;
      Token index = expect(Tok::Int);
      SourceSpan span = SourceSpan::merge(t->span(), index.span);
      if (index.text == "1") {
        t = Term::fst(t, span);
      } else if (index.text == "2") {
        t = Term::snd(t, span);
      } else {
        throw ParseError("projection index must be 1 or 2", index.span, {"'1'", "'2'"});
      }
    }
    return t;
  }

  TermPtr termAtom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "c") {
      ++pos_;
      return Term::constant(t.span);
    }
    if (t.kind == Tok::Ident && !isReservedWord(t.text)) {
      ++pos_;
      return Term::var(t.text, t.span);
    }
    if (t.kind == Tok::LParen) {
      SourceSpan start = t.span;
      ++pos_;
      TermPtr first = term();
      if (peek().kind == Tok::Comma) {
        ++pos_;
        TermPtr second = term();
        Token close = expect(Tok::RParen);
        return Term::pair(first, second, SourceSpan::merge(start, close.span));
      }
      expect(Tok::RParen);
      return first;
    }
    fail({"term"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> types_;
};

}  // namespace

TypePtr parseType(std::string_view src, const std::vector<std::string>& scope) {
  return Parser(src, scope).wholeType();
}

TypePtr parseType(std::string_view src, const Context& ctx) {
  return parseType(src, ctx.typeVarNames());
}

TermPtr parseTerm(std::string_view src, const std::vector<std::string>& scope) {
  return Parser(src, scope).wholeTerm();
}

TermPtr parseProgram(std::string_view src, const std::vector<std::string>& scope) {
  return Parser(src, scope).program();
}

Context parseContext(std::string_view src) { return Parser(src, {}).context(); }

}  // namespace fdr
