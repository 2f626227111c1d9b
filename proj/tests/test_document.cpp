#include "compatlie/document.hpp"

#include "doctest.h"
#include "examples.hpp"

using namespace compatlie;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal document is the abelian pair") {
  const AlgebraDocument d = parse_document("[algebra]\ndim 2\n");
  CHECK(d.dim == 2);
  const CompatiblePair p = document_pair(d);
  CHECK(p.first() == LieBracket(2));
  CHECK(p.second() == LieBracket(2));
}

TEST_CASE("N2 document") {
  const AlgebraDocument d = parse_document("# N2\n[algebra]\ndim 2\n[pi1]\n1 2 2 1\n[pi2]\n");
  CHECK(document_pair(d).first() == ex::n2());
  CHECK(document_pair(d).second() == LieBracket(2));
}

TEST_CASE("full document and round trip") {
  const char* text = R"(
[algebra]
dim 2   # two generators
[pi1]
1 2 2 1
[rep]
dim 1
rho 1
1: 1
mu 2
1: -1/2
[op N]
1: 1 0
2: 0 2
[op xi]
1: 1 0
[cochain w1]
source 2
target 1
1 2 1 3/4
)";
  const AlgebraDocument d = parse_document(text);
  REQUIRE(d.rep);
  CHECK(d.rep->module_dim == 1);
  const RepPair rep = to_rep(2, *d.rep);
  CHECK(rep.rho[0](0, 0) == 1);
  CHECK(rep.rho[1](0, 0) == 0);
  CHECK(rep.mu[1](0, 0) == Rational(-1, 2));
  CHECK(to_matrix(d.ops.at("N"), 2) == (Mat(2, 2) << 1, 0, 0, 2).finished());
  CHECK(d.ops.at("xi").size() == 1);
  const Cochain w = to_cochain(d.cochains.at("w1"));
  CHECK(w.eval({1, 0}) == Vec::Constant(1, Rational(-3, 4)));

  const std::string rendered = render_document(d);
  CHECK(parse_document(rendered) == d);
  CHECK(render_document(parse_document(rendered)) == rendered);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error("[algebra]\ndim 2\n[pi1]\n1 2 2 1/0\n") == "zero denominator at line 4, column 7");
  CHECK(parse_error("[algebra]\ndim 2\n[pi1]\n1 2 2 x\n") == "malformed rational at line 4, column 7");
  CHECK(parse_error("[algebra]\ndim 2\n[pi1]\n1 3 2 1\n") == "second index 3 out of range 1..2 at line 4, column 3");
  CHECK(parse_error("[algebra]\ndim 2\n[pi1]\n2 1 2 1\n") == "entries need i < j at line 4, column 3");
  CHECK(parse_error("[algebra]\ndim 2\n[pi1]\n1 2 2 1\n1 2 2 3\n") == "duplicate entry for the same (i,j,k) at line 5, column 1");
  CHECK(parse_error("[pi1]\n") == "the [algebra] section must come first at line 1, column 1");
  CHECK(parse_error("[algebra]\ndim 2\n[bogus]\n") == "unknown section [bogus] at line 3, column 1");
  CHECK(parse_error("[algebra]\ndim 2\n[rep]\ndim 2\nrho 1\n1: 1 0\n") == "incomplete matrix: 1 of 2 rows at line 5, column 1");
  CHECK(parse_error("[algebra]\ndim 2\n[op N]\n1: 1 0\n2: 1\n") == "row length 1, expected 2 at line 5, column 1");
  CHECK(parse_error("[algebra]\ndim 2\n[op N]\n2: 1 0\n") == "expected row 1 at line 4, column 1");
  CHECK(parse_error("dim 2\n") == "content outside a section at line 1, column 1");
  CHECK(parse_error("[algebra]\ndim 2\n[pi1]\n[pi1]\n") == "duplicate section [pi1] at line 4, column 1");
}
