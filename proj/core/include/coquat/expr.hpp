#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coquat/error.hpp"
#include "coquat/mat4.hpp"
#include "coquat/polar.hpp"
#include "coquat/split_quaternion.hpp"

namespace coquat::expr {

/// Half-open byte range [begin, end) into the source line.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind {
  Number,
  UnitI,
  UnitJ,
  UnitK,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  Comma,
  Ident,
  End,
};

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
  TokenKind kind = TokenKind::End;
  Span span;
  /// Source text for Number and Ident tokens.
  std::string text;
};

class LexError : public std::runtime_error {
 public:
  LexError(std::size_t position, unsigned char byte, const std::string& what)
      : std::runtime_error(what), position_(position), byte_(byte) {}
  std::size_t position() const noexcept { return position_; }
  unsigned char byte() const noexcept { return byte_; }

 private:
  std::size_t position_;
  unsigned char byte_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& what)
      : std::runtime_error(what), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// A library or type error raised while evaluating, tied to a source span.
class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorCode code, Span span, const std::string& what)
      : std::runtime_error(what), code_(code), span_(span) {}
  ErrorCode code() const noexcept { return code_; }
  Span span() const noexcept { return span_; }

 private:
  ErrorCode code_;
  Span span_;
};

/// Longest-match lexer. `i`, `j` and `k` are unit tokens unless they are part
/// of a longer identifier. Always ends with an End token.
std::vector<Token> tokenize(std::string_view src);

struct Expr {
  enum class Kind { Literal, Neg, Add, Sub, Mul, Pow, Call };

  Kind kind = Kind::Literal;
  Span span;
  SplitQuaternion literal;      // Literal
  std::int64_t exponent = 0;    // Pow
  std::string name;             // Call
  std::vector<Expr> args;       // operands, or call arguments
};

/// Names accepted in call position.
const std::vector<std::string>& function_names();

/// Recursive descent over
///
///   expr   := term (("+"|"-") term)*
///   term   := unary ("*" unary)*
///   unary  := "-" unary | power
///   power  := atom ("^" signed-integer)?
///   atom   := number unit? | unit | "(" expr ")" | ident "(" expr ("," expr)* ")"
///
/// `^` is non-associative and takes only a literal integer exponent.
Expr parse(const std::vector<Token>& tokens);
Expr parse(std::string_view src);

/// S-expression view of the tree, e.g. "Pow(Add(Add(1, 2i), j), 3)".
std::string to_string(const Expr& e);

struct Value {
  std::variant<SplitQuaternion, Mat4, double, CausalCharacter, PolarForm> v;
};

Value eval(const Expr& e, const ClassifyConfig& cfg = {});

std::string render_text(const Value& value);
/// Compact JSON with integral numbers written without a fraction.
std::string render_json(const Value& value);

/// Outcome of evaluating one source line.
struct LineResult {
  bool ok = false;
  Value value;
  /// "LexError", "ParseError" or "EvalError" when !ok.
  std::string category;
  /// Error code name for EvalError, empty otherwise.
  std::string code;
  std::string message;
  Span span;
};

LineResult evaluate_line(std::string_view src, const ClassifyConfig& cfg = {});

/// Single-line summary: the rendered value, or "<category>[(<code>)]@<begin>".
std::string summarize(const LineResult& r);

/// Error JSON: {"type":"error","category":...,"code":...,"message":...,"span":[b,e]}.
std::string render_error_json(const LineResult& r);

/// Error message followed by the source line and a caret under the span.
std::string format_diagnostic(std::string_view src, const LineResult& r);

}  // namespace coquat::expr
