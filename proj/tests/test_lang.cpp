#include "gppl/parser.hpp"
#include "gppl/termgen.hpp"
#include "gppl/typecheck.hpp"

#include <doctest.h>

using namespace gppl;
using namespace gppl::lang;

namespace {

const char* kTriangle =
    "let a = new() in let b = new() in let c = new() in "
    "edge(a,b) & edge(b,c) & edge(a,c)";

int count_bool_leaves(const Type& ty) {
  if (ty.is_bool()) return 1;
  if (ty.kind() == Type::Kind::Prod)
    return count_bool_leaves(ty.left()) + count_bool_leaves(ty.right());
  return 0;
}

int count_edge_queries(const TermPtr& t) {
  int n = t->kind == Term::Kind::Const && t->cst == ConstKind::Edge ? 1 : 0;
  for (auto sel : {&Term::t0, &Term::t1, &Term::t2})
    if ((*t).*sel) n += count_edge_queries((*t).*sel);
  return n;
}

}  // namespace

TEST_CASE("parse desugars the boolean sugar") {
  CHECK(term_equal(parse("true"), inj1(unit_intro())));
  CHECK(term_equal(parse("false"), inj2(unit_intro())));

  TermPtr t = parse("let a = new() in edge(a,a)");
  CHECK(term_equal(t, let("a", const_app(ConstKind::New, unit_intro()),
                          const_app(ConstKind::Edge, pair(var("a"), var("a"))))));

  TermPtr conj = parse("bernoulli(1/2) & bernoulli(1/2)");
  REQUIRE(conj->kind == Term::Kind::Case);
  CHECK(conj->t0->kind == Term::Kind::Const);
  CHECK(conj->t0->cst == ConstKind::Bernoulli);
  CHECK(conj->t0->weight == Rat(1, 2));
  CHECK(conj->t1->kind == Term::Kind::Const);
  CHECK(term_equal(conj->t2, false_term()));
}

TEST_CASE("parse handles rationals, decimals and comments") {
  CHECK(parse("bernoulli(0.25)")->weight == Rat(1, 4));
  CHECK(parse("bernoulli(1)")->weight == Rat(1));
  CHECK(parse("-- a comment\ntrue -- trailing")->kind == Term::Kind::Inj1);
  CHECK_THROWS_AS(parse("bernoulli(3/2)"), ParseError);
}

TEST_CASE("parse reports line and column") {
  try {
    parse("let a = new() in\n  edge(a,");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
  CHECK_THROWS_AS(parse("let = 3"), ParseError);
  CHECK_THROWS_AS(parse("true true"), ParseError);
}

TEST_CASE("typecheck on the paper programs") {
  CHECK(typecheck(parse(kTriangle)) == Type::boolean());

  try {
    typecheck(const_app(ConstKind::Edge, unit_intro()));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("vertex*vertex") != std::string::npos);
  }

  Context ctx;
  ctx.push("x", Type::vertex());
  CHECK(typecheck(ctx, var("x")) == Type::vertex());
  CHECK_THROWS_AS(typecheck(var("y")), TypeError);
  CHECK_THROWS_AS(typecheck(parse("let x = true in let x = false in x")), TypeError);
}

TEST_CASE("gen_t_n builds the adjacency-matrix program") {
  TermPtr t1 = gen_t_n(1);
  CHECK(term_equal(t1, let("x1", new_vertex(), edge_query(var("x1"), var("x1")))));
  CHECK(typecheck(t1) == Type::boolean());

  CHECK(count_edge_queries(gen_t_n(2)) == 4);
  CHECK(count_bool_leaves(typecheck(gen_t_n(3))) == 9);
  CHECK_THROWS_AS(gen_t_n(0), std::invalid_argument);
}

TEST_CASE("enumerate_inhabitants order and size") {
  auto us = enumerate_inhabitants(Type::unit());
  REQUIRE(us.size() == 1);
  CHECK(us[0] == Value::unit());

  auto bs = enumerate_inhabitants(Type::boolean());
  REQUIRE(bs.size() == 2);
  CHECK(bs[0] == Value::boolean(true));
  CHECK(bs[1] == Value::boolean(false));

  auto ps = enumerate_inhabitants(Type::prod(Type::boolean(), Type::boolean()));
  REQUIRE(ps.size() == 4);
  CHECK(ps[0] == Value::pair(Value::boolean(true), Value::boolean(true)));
  CHECK(ps[1] == Value::pair(Value::boolean(true), Value::boolean(false)));
  CHECK(ps[2] == Value::pair(Value::boolean(false), Value::boolean(true)));
  CHECK(ps[3] == Value::pair(Value::boolean(false), Value::boolean(false)));

  CHECK(enumerate_inhabitants(Type::empty()).empty());
  CHECK(numeral_size(Type::sum(Type::empty(), Type::unit())) == 1);
  CHECK_THROWS_AS(enumerate_inhabitants(Type::vertex()), std::invalid_argument);
  CHECK_THROWS_AS(numeral_size(Type::prod(Type::unit(), Type::vertex())),
                  std::invalid_argument);
}

TEST_CASE("enumeration length matches numeral_size structurally") {
  gen::TermGen g(7);
  for (int i = 0; i < 200; ++i) {
    Type ty = g.random_type(3, false);
    CHECK(enumerate_inhabitants(ty).size() == numeral_size(ty));
    if (ty.kind() == Type::Kind::Prod)
      CHECK(numeral_size(ty) == numeral_size(ty.left()) * numeral_size(ty.right()));
    if (ty.kind() == Type::Kind::Sum)
      CHECK(numeral_size(ty) == numeral_size(ty.left()) + numeral_size(ty.right()));
  }
}

TEST_CASE("desugared sugar typechecks like the core form") {
  CHECK(typecheck(parse("if true then false else true")) == Type::boolean());
  CHECK(typecheck(parse("not bernoulli(1/3)")) == Type::boolean());
  CHECK(typecheck(parse("true | false")) == Type::boolean());
  CHECK(typecheck(parse("case inl () of { inl x -> x; inr y -> y }")) == Type::unit());
}

TEST_CASE("matrix literals flatten row-major and subm projects") {
  TermPtr m = parse("[[true, false], [false, true]]");
  CHECK(term_equal(
      m, nest_pairs({true_term(), false_term(), false_term(), true_term()})));
  CHECK(count_bool_leaves(typecheck(m)) == 4);

  TermPtr s = parse("subm([[true, false], [false, true]], 2, [1])");
  CHECK(typecheck(s) == Type::boolean());
  CHECK_THROWS_AS(parse("subm(x, 2, [3])"), ParseError);
  CHECK_THROWS_AS(parse("[[true],[true,false]]"), ParseError);
}

TEST_CASE("parse is a left inverse of pretty on generated programs") {
  gen::TermGen g(2024);
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = g.closed_term(8, true);
    TermPtr back = parse(pretty(t));
    CHECK(term_equal(back, t));
  }
}

TEST_CASE("type parser") {
  CHECK(parse_type("bool") == Type::boolean());
  CHECK(parse_type("unit + unit") == Type::boolean());
  CHECK(parse_type("vertex * vertex") == Type::prod(Type::vertex(), Type::vertex()));
  CHECK(parse_type("unit + bool * void") ==
        Type::sum(Type::unit(), Type::prod(Type::boolean(), Type::empty())));
  CHECK_THROWS_AS(parse_type("int"), ParseError);
}
