#include "coquat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "coquat/demoivre.hpp"
#include "json.hpp"

namespace coquat::expr {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::string describe_byte(unsigned char b) {
  if (b >= 0x20 && b < 0x7f) return std::string("'") + static_cast<char>(b) + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[b >> 4] + kHex[b & 15];
}

// ---- parser -----------------------------------------------------------------

const std::vector<std::string> kAtomStart = {"number", "i", "j", "k", "'('", "function name"};
const std::vector<std::string> kAfterOperand = {"'+'", "'-'", "'*'", "'^'"};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::End) {
      throw ParseError(0, {"end of input"}, "token stream must end with End");
    }
  }

  Expr parse_line() {
    Expr e = parse_expr();
    if (peek().kind != TokenKind::End) {
      auto expected = kAfterOperand;
      expected.push_back("end of input");
      fail(expected);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::vector<std::string>& expected, const std::string& detail = {}) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input"
                        : t.text.empty()          ? std::string(to_string(t.kind))
                                                  : "'" + t.text + "'";
    std::string msg = detail;
    if (msg.empty()) {
      msg = "expected ";
      if (expected.size() > 1) msg += "one of ";
      for (std::size_t n = 0; n < expected.size(); ++n) msg += (n ? ", " : "") + expected[n];
      msg += "; found " + found;
    }
    throw ParseError(t.span.begin, expected, msg);
  }

  const Token& expect(TokenKind kind, const std::string& label) {
    if (peek().kind != kind) fail({label});
    return advance();
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.span = {lhs.span.begin, rhs.span.end};
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const auto kind = advance().kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      Expr rhs = parse_term();
      lhs = binary(kind, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (peek().kind == TokenKind::Star) {
      advance();
      Expr rhs = parse_unary();
      lhs = binary(Expr::Kind::Mul, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr parse_unary() {
    if (peek().kind == TokenKind::Minus) {
      const std::size_t begin = advance().span.begin;
      Expr operand = parse_unary();
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.span = {begin, operand.span.end};
      e.args.push_back(std::move(operand));
      return e;
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (peek().kind != TokenKind::Caret) return base;
    advance();
    bool negative = false;
    if (peek().kind == TokenKind::Minus) {
      advance();
      negative = true;
    }
    const Token& num = peek();
    const bool integral = num.kind == TokenKind::Number &&
                          std::all_of(num.text.begin(), num.text.end(), is_digit);
    if (!integral) fail({"integer exponent"});
    std::int64_t value = 0;
    const auto res = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
    if (res.ec != std::errc()) fail({"integer exponent"}, "exponent " + num.text + " is out of range");
    advance();

    Expr e;
    e.kind = Expr::Kind::Pow;
    e.span = {base.span.begin, num.span.end};
    e.exponent = negative ? -value : value;
    e.args.push_back(std::move(base));
    if (peek().kind == TokenKind::Caret) {
      fail({"'+'", "'-'", "'*'", "end of input"}, "'^' is non-associative; add parentheses");
    }
    return e;
  }

  static SplitQuaternion unit_of(TokenKind kind) {
    switch (kind) {
      case TokenKind::UnitI: return SplitQuaternion::unit_i();
      case TokenKind::UnitJ: return SplitQuaternion::unit_j();
      default: return SplitQuaternion::unit_k();
    }
  }

  static bool is_unit(TokenKind kind) {
    return kind == TokenKind::UnitI || kind == TokenKind::UnitJ || kind == TokenKind::UnitK;
  }

  Expr parse_atom() {
    const Token& t = peek();
    Expr e;
    switch (t.kind) {
      case TokenKind::Number: {
        advance();
        double value = 0.0;
        const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (res.ec != std::errc() || !std::isfinite(value)) {
          throw ParseError(t.span.begin, {"finite number"}, "number " + t.text + " is out of range");
        }
        e.kind = Expr::Kind::Literal;
        e.span = t.span;
        e.literal = SplitQuaternion(value);
        if (is_unit(peek().kind)) {
          const Token& u = advance();
          e.literal = value * unit_of(u.kind);
          e.span.end = u.span.end;
        }
        return e;
      }
      case TokenKind::UnitI:
      case TokenKind::UnitJ:
      case TokenKind::UnitK:
        advance();
        e.kind = Expr::Kind::Literal;
        e.span = t.span;
        e.literal = unit_of(t.kind);
        return e;
      case TokenKind::LParen: {
        const std::size_t begin = advance().span.begin;
        e = parse_expr();
        if (peek().kind != TokenKind::RParen) {
          auto expected = kAfterOperand;
          expected.push_back("')'");
          fail(expected);
        }
        // Parentheses widen the span so diagnostics cover them.
        e.span = {begin, advance().span.end};
        return e;
      }
      case TokenKind::Ident: {
        const auto& names = function_names();
        if (std::find(names.begin(), names.end(), t.text) == names.end()) {
          fail(names, "unknown function '" + t.text + "'");
        }
        advance();
        e.kind = Expr::Kind::Call;
        e.name = t.text;
        e.span.begin = t.span.begin;
        expect(TokenKind::LParen, "'('");
        e.args.push_back(parse_expr());
        while (peek().kind == TokenKind::Comma) {
          advance();
          e.args.push_back(parse_expr());
        }
        if (peek().kind != TokenKind::RParen) {
          auto expected = kAfterOperand;
          expected.push_back("','");
          expected.push_back("')'");
          fail(expected);
        }
        e.span.end = advance().span.end;
        return e;
      }
      default:
        break;
    }
    auto expected = kAtomStart;
    expected.push_back("'-'");
    fail(expected);
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

// ---- evaluator --------------------------------------------------------------

std::string_view value_type_name(const Value& v) {
  static constexpr std::string_view kNames[] = {"quaternion", "matrix", "scalar", "character", "polar form"};
  return kNames[v.v.index()];
}

SplitQuaternion as_quat(const Value& v, Span span) {
  if (const auto* q = std::get_if<SplitQuaternion>(&v.v)) return *q;
  if (const auto* x = std::get_if<double>(&v.v)) return SplitQuaternion(*x);
  throw EvalError(ErrorCode::TypeMismatch, span,
                  "expected a quaternion, got a " + std::string(value_type_name(v)));
}

double as_real(const Value& v, Span span) {
  const SplitQuaternion q = as_quat(v, span);
  if (q.q1() != 0.0 || q.q2() != 0.0 || q.q3() != 0.0) {
    throw EvalError(ErrorCode::TypeMismatch, span, "expected a real number, got " + format(q));
  }
  return q.q0();
}

std::int64_t as_integer(const Value& v, Span span) {
  const double x = as_real(v, span);
  // 2^63 is exactly representable; anything at or beyond it does not fit.
  if (x != std::trunc(x) || std::abs(x) >= 9223372036854775808.0) {
    throw EvalError(ErrorCode::NonIntegerExponent, span, "exponent must be an integer, got " + format_number(x));
  }
  return static_cast<std::int64_t>(x);
}

Vector3M as_pure(const Value& v, Span span) {
  const SplitQuaternion q = as_quat(v, span);
  if (q.q0() != 0.0) throw EvalError(ErrorCode::NotPure, span, "expected a pure quaternion, got " + format(q));
  return q.vector();
}

struct Function {
  std::size_t arity;
  std::function<Value(const std::vector<Value>&, const std::vector<Span>&, const ClassifyConfig&)> fn;
};

const std::map<std::string, Function>& registry() {
  using Args = std::vector<Value>;
  using Spans = std::vector<Span>;
  using Cfg = ClassifyConfig;
  static const std::map<std::string, Function> kFunctions = {
      {"conj", {1, [](const Args& a, const Spans& s, const Cfg&) { return Value{conjugate(as_quat(a[0], s[0]))}; }}},
      {"norm", {1, [](const Args& a, const Spans& s, const Cfg&) { return Value{norm(as_quat(a[0], s[0]))}; }}},
      {"iq", {1, [](const Args& a, const Spans& s, const Cfg&) { return Value{iq_form(as_quat(a[0], s[0]))}; }}},
      {"classify",
       {1, [](const Args& a, const Spans& s, const Cfg& c) { return Value{classify(as_quat(a[0], s[0]), c)}; }}},
      {"polar",
       {1, [](const Args& a, const Spans& s, const Cfg& c) { return Value{decompose(as_quat(a[0], s[0]), c)}; }}},
      {"normalize",
       {1, [](const Args& a, const Spans& s, const Cfg& c) { return Value{normalize(as_quat(a[0], s[0]), c)}; }}},
      {"inv", {1, [](const Args& a, const Spans& s, const Cfg& c) { return Value{inverse(as_quat(a[0], s[0]), c)}; }}},
      {"exp", {1, [](const Args& a, const Spans& s, const Cfg&) { return Value{exp_quaternion(as_quat(a[0], s[0]))}; }}},
      {"matl", {1, [](const Args& a, const Spans& s, const Cfg&) { return Value{left_matrix(as_quat(a[0], s[0]))}; }}},
      {"matr", {1, [](const Args& a, const Spans& s, const Cfg&) { return Value{right_matrix(as_quat(a[0], s[0]))}; }}},
      {"pow",
       {2,
        [](const Args& a, const Spans& s, const Cfg& c) {
          return Value{pow_by_squaring(as_quat(a[0], s[0]), as_integer(a[1], s[1]), c)};
        }}},
      {"powc",
       {2,
        [](const Args& a, const Spans& s, const Cfg& c) {
          return Value{pow_closed(as_quat(a[0], s[0]), as_integer(a[1], s[1]), c)};
        }}},
      {"lpow",
       {2,
        [](const Args& a, const Spans& s, const Cfg& c) {
          return Value{left_pow_closed(as_quat(a[0], s[0]), as_integer(a[1], s[1]), c)};
        }}},
      {"rpow",
       {2,
        [](const Args& a, const Spans& s, const Cfg& c) {
          return Value{right_pow_closed(as_quat(a[0], s[0]), as_integer(a[1], s[1]), c)};
        }}},
      {"lexp",
       {2,
        [](const Args& a, const Spans& s, const Cfg&) {
          return Value{exp_left_closed(as_pure(a[0], s[0]), as_real(a[1], s[1]))};
        }}},
      {"rexp",
       {2,
        [](const Args& a, const Spans& s, const Cfg&) {
          return Value{exp_right_closed(as_pure(a[0], s[0]), as_real(a[1], s[1]))};
        }}},
  };
  return kFunctions;
}

Value eval_node(const Expr& e, const ClassifyConfig& cfg) {
  try {
    switch (e.kind) {
      case Expr::Kind::Literal:
        return Value{e.literal};
      case Expr::Kind::Neg:
        return Value{-as_quat(eval_node(e.args[0], cfg), e.args[0].span)};
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul: {
        const SplitQuaternion lhs = as_quat(eval_node(e.args[0], cfg), e.args[0].span);
        const SplitQuaternion rhs = as_quat(eval_node(e.args[1], cfg), e.args[1].span);
        if (e.kind == Expr::Kind::Add) return Value{lhs + rhs};
        if (e.kind == Expr::Kind::Sub) return Value{lhs - rhs};
        return Value{mul(lhs, rhs)};
      }
      case Expr::Kind::Pow:
        return Value{pow_by_squaring(as_quat(eval_node(e.args[0], cfg), e.args[0].span), e.exponent, cfg)};
      case Expr::Kind::Call: {
        const auto it = registry().find(e.name);
        if (it == registry().end()) {
          throw EvalError(ErrorCode::InvalidArgument, e.span, "unregistered function '" + e.name + "'");
        }
        if (e.args.size() != it->second.arity) {
          throw EvalError(ErrorCode::ArityMismatch, e.span,
                          e.name + " takes " + std::to_string(it->second.arity) + " argument(s), got " +
                              std::to_string(e.args.size()));
        }
        std::vector<Value> args;
        std::vector<Span> spans;
        for (const Expr& a : e.args) {
          args.push_back(eval_node(a, cfg));
          spans.push_back(a.span);
        }
        return it->second.fn(args, spans, cfg);
      }
    }
  } catch (const Error& err) {
    throw EvalError(err.code(), e.span, err.what());
  }
  throw EvalError(ErrorCode::InvalidArgument, e.span, "malformed expression");
}

// ---- rendering --------------------------------------------------------------

using Json = nlohmann::ordered_json;

Json number(double x) {
  // Integral doubles below 2^53 are written as JSON integers.
  if (x == std::trunc(x) && std::abs(x) < 9007199254740992.0) return Json(static_cast<std::int64_t>(x));
  return Json(x);
}

Json to_json(const Value& value) {
  Json j;
  std::visit(
      [&j](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SplitQuaternion>) {
          j["type"] = "quat";
          j["q"] = Json::array({number(v.q0()), number(v.q1()), number(v.q2()), number(v.q3())});
        } else if constexpr (std::is_same_v<T, Mat4>) {
          j["type"] = "matrix";
          j["rows"] = Json::array();
          for (std::size_t r = 0; r < 4; ++r) {
            j["rows"].push_back(Json::array({number(v(r, 0)), number(v(r, 1)), number(v(r, 2)), number(v(r, 3))}));
          }
        } else if constexpr (std::is_same_v<T, double>) {
          j["type"] = "scalar";
          j["value"] = number(v);
        } else if constexpr (std::is_same_v<T, CausalCharacter>) {
          j["type"] = "character";
          j["value"] = std::string(to_string(v));
        } else {
          j["type"] = "polar";
          j["kind"] = std::string(to_string(v.kind));
          j["n"] = number(v.n);
          j["theta"] = number(v.theta);
          j["eps"] = Json::array({number(v.eps.u1()), number(v.eps.u2()), number(v.eps.u3())});
          j["sign"] = v.sign;
        }
      },
      value.v);
  return j;
}

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Number: return "number";
    case TokenKind::UnitI: return "'i'";
    case TokenKind::UnitJ: return "'j'";
    case TokenKind::UnitK: return "'k'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Ident: return "identifier";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  const std::size_t size = src.size();
  while (pos < size) {
    const char c = src[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
      continue;
    }
    const std::size_t begin = pos;
    if (is_digit(c) || (c == '.' && pos + 1 < size && is_digit(src[pos + 1]))) {
      while (pos < size && is_digit(src[pos])) ++pos;
      if (pos < size && src[pos] == '.') {
        ++pos;
        while (pos < size && is_digit(src[pos])) ++pos;
      }
      // An exponent needs at least one digit; otherwise 'e' starts an identifier.
      if (pos < size && (src[pos] == 'e' || src[pos] == 'E')) {
        std::size_t look = pos + 1;
        if (look < size && (src[look] == '+' || src[look] == '-')) ++look;
        if (look < size && is_digit(src[look])) {
          pos = look;
          while (pos < size && is_digit(src[pos])) ++pos;
        }
      }
      out.push_back({TokenKind::Number, {begin, pos}, std::string(src.substr(begin, pos - begin))});
      continue;
    }
    if (is_ident_start(c)) {
      while (pos < size && is_ident_char(src[pos])) ++pos;
      std::string text(src.substr(begin, pos - begin));
      TokenKind kind = TokenKind::Ident;
      if (text == "i") kind = TokenKind::UnitI;
      else if (text == "j") kind = TokenKind::UnitJ;
      else if (text == "k") kind = TokenKind::UnitK;
      if (kind != TokenKind::Ident) text.clear();
      out.push_back({kind, {begin, pos}, std::move(text)});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      default: {
        const auto byte = static_cast<unsigned char>(c);
        throw LexError(pos, byte, "unexpected " + describe_byte(byte));
      }
    }
    ++pos;
    out.push_back({kind, {begin, pos}, {}});
  }
  out.push_back({TokenKind::End, {size, size}, {}});
  return out;
}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
  }();
  return kNames;
}

Expr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_line(); }

Expr parse(std::string_view src) { return parse(tokenize(src)); }

std::string to_string(const Expr& e) {
  static constexpr std::string_view kNames[] = {"Literal", "Neg", "Add", "Sub", "Mul", "Pow", "Call"};
  if (e.kind == Expr::Kind::Literal) return format(e.literal);
  std::string out(kNames[static_cast<int>(e.kind)]);
  out += '(';
  if (e.kind == Expr::Kind::Call) out += e.name + ", ";
  for (std::size_t n = 0; n < e.args.size(); ++n) out += (n ? ", " : "") + to_string(e.args[n]);
  if (e.kind == Expr::Kind::Pow) out += ", " + std::to_string(e.exponent);
  return out + ')';
}

Value eval(const Expr& e, const ClassifyConfig& cfg) { return eval_node(e, cfg); }

std::string render_text(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SplitQuaternion> || std::is_same_v<T, Mat4>) {
          return format(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, CausalCharacter>) {
          return std::string(to_string(v));
        } else {
          std::ostringstream os;
          os << v;
          return os.str();
        }
      },
      value.v);
}

std::string render_json(const Value& value) { return to_json(value).dump(); }

LineResult evaluate_line(std::string_view src, const ClassifyConfig& cfg) {
  LineResult r;
  try {
    r.value = eval(parse(src), cfg);
    r.ok = true;
  } catch (const LexError& e) {
    r.category = "LexError";
    r.message = e.what();
    r.span = {e.position(), e.position() + 1};
  } catch (const ParseError& e) {
    r.category = "ParseError";
    r.message = e.what();
    r.span = {e.position(), std::min(src.size(), e.position() + 1)};
  } catch (const EvalError& e) {
    r.category = "EvalError";
    r.code = std::string(to_string(e.code()));
    r.message = e.what();
    r.span = e.span();
  }
  return r;
}

std::string summarize(const LineResult& r) {
  if (r.ok) return render_text(r.value);
  std::string out = r.category;
  if (!r.code.empty()) out += "(" + r.code + ")";
  return out + "@" + std::to_string(r.span.begin);
}

std::string render_error_json(const LineResult& r) {
  Json j;
  j["type"] = "error";
  j["category"] = r.category;
  j["code"] = r.code;
  j["message"] = r.message;
  j["span"] = Json::array({r.span.begin, r.span.end});
  return j.dump();
}

std::string format_diagnostic(std::string_view src, const LineResult& r) {
  std::string out = "error: " + r.category;
  if (!r.code.empty()) out += "(" + r.code + ")";
  out += ": " + r.message + "\n  ";
  out += src;
  out += "\n  ";
  const std::size_t begin = std::min(r.span.begin, src.size());
  const std::size_t width = std::max<std::size_t>(1, r.span.end > begin ? r.span.end - begin : 1);
  out += std::string(begin, ' ') + '^' + std::string(width - 1, '~') + '\n';
  return out;
}

}  // namespace coquat::expr
