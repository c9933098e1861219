#include "rltl/parser.hpp"

#include <cctype>
#include <optional>

#include "rltl/error.hpp"

namespace rltl {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

enum class Tok { Ident, True, False, Not, Next, Always, Eventually, And, Or, Implies, Until, Release, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const std::vector<std::string> kOperandStart = {"(", "!", "X", "G", "F", "true", "false", "identifier"};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  NodePtr parse() {
    NodePtr f = implication();
    if (cur_.kind != Tok::End) fail({"&", "|", "=>", "U", "R", "end of input"});
    return f;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at offset " + std::to_string(cur_.offset) + ": expected one of";
    for (const auto& e : expected) msg += " '" + e + "'";
    msg += cur_.kind == Tok::End ? ", found end of input" : ", found '" + cur_.text + "'";
    throw SyntaxError(cur_.offset, std::move(expected), msg);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    char c = src_[pos_];
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      std::string word(src_.substr(start, pos_ - start));
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (word == "X") kind = Tok::Next;
      else if (word == "G") kind = Tok::Always;
      else if (word == "F") kind = Tok::Eventually;
      else if (word == "U") kind = Tok::Until;
      else if (word == "R") kind = Tok::Release;
      cur_ = {kind, word, start};
      return;
    }
    if (src_.substr(pos_, 2) == "=>") {
      pos_ += 2;
      cur_ = {Tok::Implies, "=>", start};
      return;
    }
    ++pos_;
    switch (c) {
      case '!': cur_ = {Tok::Not, "!", start}; return;
      case '&': cur_ = {Tok::And, "&", start}; return;
      case '|': cur_ = {Tok::Or, "|", start}; return;
      case '(': cur_ = {Tok::LParen, "(", start}; return;
      case ')': cur_ = {Tok::RParen, ")", start}; return;
      default: break;
    }
    cur_ = {Tok::End, std::string(1, c), start};
    throw SyntaxError(start, {}, "syntax error at offset " + std::to_string(start) + ": unexpected character '" +
                                     std::string(1, c) + "'");
  }

  NodePtr implication() {
    NodePtr lhs = disjunction();
    if (cur_.kind == Tok::Implies) {
      advance();
      return binary(Op::Implies, lhs, implication());
    }
    return lhs;
  }

  NodePtr disjunction() {
    NodePtr f = conjunction();
    while (cur_.kind == Tok::Or) {
      advance();
      f = binary(Op::Or, f, conjunction());
    }
    return f;
  }

  NodePtr conjunction() {
    NodePtr f = temporal();
    while (cur_.kind == Tok::And) {
      advance();
      f = binary(Op::And, f, temporal());
    }
    return f;
  }

  NodePtr temporal() {
    NodePtr lhs = prefix();
    if (cur_.kind == Tok::Until || cur_.kind == Tok::Release) {
      Op op = cur_.kind == Tok::Until ? Op::Until : Op::Release;
      advance();
      return binary(op, lhs, temporal());
    }
    return lhs;
  }

  NodePtr prefix() {
    std::optional<Op> op;
    switch (cur_.kind) {
      case Tok::Not: op = Op::Not; break;
      case Tok::Next: op = Op::Next; break;
      case Tok::Always: op = Op::Always; break;
      case Tok::Eventually: op = Op::Eventually; break;
      default: break;
    }
    if (op) {
      advance();
      return unary(*op, prefix());
    }
    return primary();
  }

  NodePtr primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        NodePtr f = atom(cur_.text);
        advance();
        return f;
      }
      case Tok::True: advance(); return constant(true);
      case Tok::False: advance(); return constant(false);
      case Tok::LParen: {
        advance();
        NodePtr f = implication();
        if (cur_.kind != Tok::RParen) fail({")", "&", "|", "=>", "U", "R"});
        advance();
        return f;
      }
      default: fail(kOperandStart);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

NodePtr parse_formula(std::string_view text) {
  Parser p(text);
  return p.parse();
}

RobustFormula parse_robust(std::string_view text) { return RobustFormula{parse_formula(text)}; }
LtlFormula parse_ltl(std::string_view text) { return LtlFormula{parse_formula(text)}; }

LassoWord parse_lasso(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto error = [&](std::vector<std::string> expected) {
    std::string msg = "lasso syntax error at offset " + std::to_string(pos);
    throw SyntaxError(pos, std::move(expected), msg);
  };
  auto letters = [&](bool until_bar) {
    std::vector<Letter> out;
    for (;;) {
      skip();
      if (pos >= text.size() || text[pos] == '|') break;
      if (text[pos] != '{') error({"{", until_bar ? "|" : "end of input"});
      ++pos;
      Letter letter;
      skip();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        out.push_back(letter);
        continue;
      }
      for (;;) {
        skip();
        std::size_t start = pos;
        if (pos >= text.size() || !ident_start(text[pos])) error({"identifier"});
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        letter.insert(std::string(text.substr(start, pos - start)));
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == '}') {
          ++pos;
          break;
        }
        error({",", "}"});
      }
      out.push_back(std::move(letter));
    }
    return out;
  };
  LassoWord w;
  w.stem = letters(true);
  skip();
  if (pos >= text.size() || text[pos] != '|') error({"|"});
  ++pos;
  w.loop = letters(false);
  skip();
  if (pos < text.size()) error({"{", "end of input"});
  if (w.loop.empty()) error({"{"});
  return w;
}

}  // namespace rltl
