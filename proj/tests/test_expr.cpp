#include <string>

#include "coquat_tools/acceptance.hpp"
#include "coquat_tools/sampling.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace coquat;
using namespace coquat::expr;

namespace {

std::vector<TokenKind> kinds(std::string_view src) {
  std::vector<TokenKind> out;
  for (const Token& t : tokenize(src)) out.push_back(t.kind);
  return out;
}

SplitQuaternion quat(std::string_view src) { return std::get<SplitQuaternion>(eval(parse(src)).v); }

}  // namespace

TEST_CASE("tokenize") {
  using K = TokenKind;
  CHECK(kinds("1+2i") == std::vector{K::Number, K::Plus, K::Number, K::UnitI, K::End});
  CHECK(kinds("ijk") == std::vector{K::Ident, K::End});
  CHECK(kinds("i j") == std::vector{K::UnitI, K::UnitJ, K::End});
  CHECK(kinds("pow(i,2)") == std::vector{K::Ident, K::LParen, K::UnitI, K::Comma, K::Number, K::RParen, K::End});
  CHECK(kinds("1e5k") == std::vector{K::Number, K::UnitK, K::End});
  // An exponent needs digits, so "2e" is 2 followed by an identifier.
  CHECK(kinds("2e") == std::vector{K::Number, K::Ident, K::End});

  const auto toks = tokenize("  1.5e-3*k");
  CHECK(toks[0].text == "1.5e-3");
  CHECK(toks[0].span == Span{2, 8});
  CHECK(toks[2].span == Span{9, 10});
  CHECK(toks[3].span == Span{10, 10});
}

TEST_CASE("lex errors carry the byte position") {
  try {
    tokenize("1 @ 2");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.position() == 2);
    CHECK(e.byte() == '@');
  }
}

TEST_CASE("parse trees") {
  CHECK(to_string(parse("(1+2i+j)^3")) == "Pow(Add(Add(1, 2i), j), 3)");
  CHECK(to_string(parse("-j^2")) == "Neg(Pow(j, 2))");
  CHECK(to_string(parse("1-2*k")) == "Sub(1, Mul(2, k))");
  CHECK(to_string(parse("pow(i, -3)")) == "Call(pow, i, Neg(3))");
  CHECK(to_string(parse("i^-1")) == "Pow(i, -1)");
}

TEST_CASE("spans lie inside the source") {
  const std::string src = "conj(1+2i) * (j - k)^2";
  const Expr e = parse(src);
  CHECK(e.span == Span{0, src.size()});
  CHECK(e.args[0].span == Span{0, 10});
  CHECK(e.args[1].span == Span{13, src.size()});
  CHECK(e.args[1].args[0].span == Span{13, 20});
}

TEST_CASE("parse errors") {
  const auto pos = [](std::string_view s) -> std::size_t {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(pos("1++j") == 2);
  CHECK(pos("i^2^3") == 3);
  CHECK(pos("i^0.5") == 2);
  CHECK(pos("foo(1)") == 0);
  CHECK(pos("(1+i") == 4);
  CHECK(pos("") == 0);
  CHECK(pos("norm()") == 5);
}

TEST_CASE("evaluation") {
  CHECK(quat("i*j") == SplitQuaternion::unit_k());
  CHECK(quat("j*k") == -SplitQuaternion::unit_i());
  CHECK(quat("(1+2i+j)^3") == SplitQuaternion(-8));
  CHECK(quat("-j^2") == SplitQuaternion(-1));
  CHECK(quat("(i+j)^2") == SplitQuaternion());
  CHECK(std::get<double>(eval(parse("iq(1+2i+3j+k)")).v) == -5.0);
  CHECK(std::get<CausalCharacter>(eval(parse("classify(1+j)")).v) == CausalCharacter::Lightlike);
  CHECK(std::get<Mat4>(eval(parse("matl(i)")).v) == left_matrix(SplitQuaternion::unit_i()));
  CHECK(std::get<PolarForm>(eval(parse("polar(2)")).v).n == 2.0);
}

TEST_CASE("evaluation errors point at the failing node") {
  const LineResult r = evaluate_line("1 + inv(i+j)");
  CHECK_FALSE(r.ok);
  CHECK(r.category == "EvalError");
  CHECK(r.code == "LightlikeInverse");
  CHECK(r.span == Span{4, 12});
  CHECK(summarize(r) == "EvalError(LightlikeInverse)@4");

  const std::string diag = format_diagnostic("1 + inv(i+j)", r);
  CHECK(diag.find("  1 + inv(i+j)\n      ^~~~~~~~\n") != std::string::npos);
}

TEST_CASE("golden expressions") {
  const auto cases = nlohmann::json::parse(acceptance::golden_json());
  REQUIRE(cases.size() >= 30);
  for (const auto& c : cases) {
    const std::string src = c.at("expr");
    CAPTURE(src);
    const LineResult r = evaluate_line(src);
    if (c.contains("text")) {
      CHECK(summarize(r) == c.at("text").get<std::string>());
    } else {
      const std::string got = r.ok ? render_json(r.value) : render_error_json(r);
      CHECK(nlohmann::json::parse(got) == nlohmann::json::parse(c.at("json").get<std::string>()));
    }
  }
}

TEST_CASE("printed quaternions parse back exactly") {
  sampling::Sampler s(41);
  for (int t = 0; t < 1000; ++t) {
    SplitQuaternion q = s.box(100.0);
    if (t % 5 == 0) q = SplitQuaternion(q.q0(), 0.0, q.q2(), t % 2 ? 1.0 : -1.0);
    const std::string text = format(q);
    CAPTURE(text);
    CHECK(quat(text) == q);
  }
}
