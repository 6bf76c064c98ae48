#include <doctest.h>

#include <string>

#include "grw/error.hpp"
#include "grw/spec.hpp"

using namespace grw;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

ErrorKind error_kind(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("zero ideal of Z_8[i]") {
  auto doc = parse_spec("ring: gaussian(8); grading: gaussian; ideal P: gens []");
  CHECK(doc.ring->order() == 64);
  CHECK(doc.ring->group().order() == 2);
  REQUIRE(doc.ideals.size() == 1);
  CHECK(doc.ideals[0].name == "P");
  CHECK(doc.ideals[0].ideal.is_zero());
  CHECK(doc.ideals[0].ideal.graded());
}

TEST_CASE("zero times 2T in a product of gaussian rings") {
  auto doc = parse_spec(
      "ring: product(gaussian(2), gaussian(4))\n"
      "grading: product\n"
      "ideal P: gens [(0,2), (0,2i)]\n");
  const auto& p = doc.ideals.at(0).ideal;
  // Oracle: {(0, 2a + 2bi)} has index a*4 + b with a, b in {0, 2}.
  ElementSet expect(64);
  for (int a : {0, 2})
    for (int b : {0, 2}) expect.insert(static_cast<std::size_t>(a * 4 + b));
  CHECK(p.members() == expect);
  CHECK(p.graded());
}

TEST_CASE("non-homogeneous generator reports its components") {
  const auto msg = parse_error("ring: gaussian(8)\ngrading: gaussian\nideal P: gens [2, 1+i]");
  CHECK(msg.find("not homogeneous: components 1 and i") != std::string::npos);
  CHECK(msg.rfind("3:19:", 0) == 0);
}

TEST_CASE("syntax and construction errors carry positions") {
  CHECK(parse_error("ring: frob(3)").rfind("1:7: unknown constructor 'frob'", 0) == 0);
  CHECK(parse_error("ring: zn(4\n").find("expected ')'") != std::string::npos);
  CHECK(parse_error("ring: zn(4); grading: gaussian").find("does not apply") != std::string::npos);
  CHECK(parse_error("grading: trivial").find("missing ring") != std::string::npos);
  CHECK(parse_error("ring: zn(4); option colour: 3").find("unknown option") != std::string::npos);
  CHECK(parse_error("ring: zn(4)\nring: zn(5)").rfind("2:", 0) == 0);
  CHECK(error_kind("ring: zn(4); ideal P: gens [x]") == ErrorKind::Parse);
  CHECK(error_kind("ring: matrix(zn(8), 3)") == ErrorKind::SizeLimit);
  CHECK(error_kind("ring: table(add [[0,1],[1,1]], mul [[0,0],[0,0]])") == ErrorKind::Validation);
  CHECK(error_kind("ring: quotient(gaussian(4), gens [1+i])") == ErrorKind::Precondition);
}

TEST_CASE("ring cap from options and from the caller") {
  CHECK(error_kind("option ring-cap: 10\nring: gaussian(4)") == ErrorKind::SizeLimit);
  ParseOptions o;
  o.ring_cap = 100;
  CHECK_NOTHROW(parse_spec("option ring-cap: 10\nring: gaussian(4)", o));
  auto doc = parse_spec("ring: zn(4) # comment\noption degrees: 0,1\noption ideal-cap: 7");
  CHECK(doc.option_size("ideal-cap") == 7u);
  CHECK(doc.options.at("degrees") == "0,1");
}

TEST_CASE("element names re-parse to the same element") {
  for (const char* text :
       {"zn(6)", "gaussian(4)", "matrix(gaussian(2), 2)", "matrix(zn(2), 3)",
        "product(zn(2), gaussian(3))", "quotient(gaussian(8), gens [4])",
        "quotient(matrix(zn(4),2), gens [[[2,0],[0,0]]])", "idealization(zn(4))",
        "idealization(zn(4), quotient gens [2])", "idealization(gaussian(2))",
        "table(add [[0,1],[1,0]], mul [[0,0],[0,1]])"}) {
    CAPTURE(text);
    auto e = parse_ring_expr(text);
    const auto& r = e->ring->ring();
    for (std::size_t a = 0; a < r.order(); ++a)
      CHECK(parse_element(*e, r.name(static_cast<Elem>(a))) == a);
    // Canonical text rebuilds the same ring.
    auto again = parse_ring_expr(e->text);
    CHECK(again->text == e->text);
    CHECK(again->ring->ring().mul_table() == r.mul_table());
  }
}

TEST_CASE("literal grammar") {
  auto g = parse_ring_expr("gaussian(8)");
  CHECK(parse_element(*g, "3+5i") == 3 * 8 + 5);
  CHECK(parse_element(*g, "-1") == 7 * 8);
  CHECK(parse_element(*g, "-i") == 7);
  CHECK(parse_element(*g, "2 - 3i") == 2 * 8 + 5);
  CHECK_THROWS_AS(parse_element(*g, "2+"), Error);
  auto m = parse_ring_expr("matrix(zn(8),2)");
  CHECK(parse_element(*m, "[[3,0],[0,2]]") == 3 * 512 + 2);
  CHECK(parse_element(*m, "0") == 0);
  CHECK_THROWS_AS(parse_element(*m, "[[3,0]]"), Error);
  auto q = parse_ring_expr("quotient(zn(8), gens [6])");
  CHECK(q->ring->order() == 2);
  CHECK(parse_element(*q, "5") == 1);
}

TEST_CASE("grading selectors") {
  auto doc = parse_spec("ring: gaussian(3); grading: trivial(4)");
  CHECK(doc.ring->group().order() == 4);
  CHECK(doc.ring->component(0).count() == 9);
  auto left = parse_spec("ring: matrix(zn(2),2); ideal L: gens [[[1,0],[0,0]]] left");
  CHECK(left.ideals[0].ideal.side() == Sidedness::Left);
  CHECK(left.ideals[0].ideal.size() == 4);
  CHECK_NOTHROW(parse_spec("ring: quotient(zn(8), gens [4]); grading: inherited"));
}
