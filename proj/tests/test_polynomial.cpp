#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "core/kronecker.hpp"
#include "core/poly_parse.hpp"
#include "core/polynomial.hpp"

using namespace varembed;

namespace {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // in [lo, hi]
  long range(long lo, long hi) {
    return lo + long(next() % std::uint64_t(hi - lo + 1));
  }
};

Polynomial random_poly(Rng& rng, const VarContextPtr& ctx, int max_terms,
                       int max_exp) {
  std::vector<Polynomial::Term> terms;
  const int nterms = int(rng.range(0, max_terms));
  for (int i = 0; i < nterms; ++i) {
    Monomial::Factors fs;
    for (std::uint32_t v = 0; v < ctx->size(); ++v) {
      auto e = std::uint32_t(rng.range(0, max_exp));
      if (e) fs.push_back({v, e});
    }
    Rational c(rng.range(-9, 9), rng.range(1, 3));
    if (c != 0) terms.push_back({Monomial::from_sorted(std::move(fs)), c});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

const VarContextPtr kCtx = VarContext::make({"x", "y", "z"});

Polynomial P(const char* text) { return parse_polynomial(text, kCtx); }

}  // namespace

TEST_CASE("canonical term order is graded lex, descending") {
  // degree first; ties broken lexicographically with earlier variables
  // more significant
  CHECK(format_polynomial(P("x + y^2")) == "y^2 + x");
  CHECK(format_polynomial(P("z*x + y^2 + x^2")) == "x^2 + x*z + y^2");
  CHECK(format_polynomial(P("1 + x + x^2*y + y*x")) == "x^2*y + x*y + x + 1");
  CHECK(format_polynomial(P("y - x")) == "-x + y");
}

TEST_CASE("monomial compare is a strict total order") {
  Rng rng(7);
  auto ctx = VarContext::make({"a", "b"});
  std::vector<Monomial> ms;
  for (int i = 0; i < 40; ++i) {
    Monomial::Factors fs;
    for (std::uint32_t v = 0; v < 2; ++v) {
      auto e = std::uint32_t(rng.range(0, 4));
      if (e) fs.push_back({v, e});
    }
    ms.push_back(Monomial::from_sorted(std::move(fs)));
  }
  for (const auto& a : ms)
    for (const auto& b : ms) {
      int ab = Monomial::compare(a, b), ba = Monomial::compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      for (const auto& c : ms)
        if (ab > 0 && Monomial::compare(b, c) > 0)
          CHECK(Monomial::compare(a, c) > 0);
    }
}

TEST_CASE("ring axioms hold on random polynomials") {
  Rng rng(1234);
  for (int iter = 0; iter < 120; ++iter) {
    Polynomial a = random_poly(rng, kCtx, 6, 4);
    Polynomial b = random_poly(rng, kCtx, 6, 4);
    Polynomial c = random_poly(rng, kCtx, 6, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - b == -(b - a));
    CHECK(a + Polynomial::zero(kCtx) == a);
    CHECK(a * Polynomial::constant(kCtx, 1) == a);
    CHECK((a * Polynomial::zero(kCtx)).is_zero());
    CHECK(a - a == Polynomial::zero(kCtx));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  Polynomial a = P("x + y - 2");
  Polynomial acc = Polynomial::constant(kCtx, 1);
  for (unsigned e = 0; e <= 6; ++e) {
    CHECK(a.pow(e) == acc);
    acc = acc * a;
  }
}

TEST_CASE("division leaves no remainder exactly when divisible") {
  Rng rng(99);
  int exact_seen = 0;
  for (int iter = 0; iter < 150; ++iter) {
    Polynomial a = random_poly(rng, kCtx, 5, 3);
    Polynomial b = random_poly(rng, kCtx, 4, 3);
    if (b.is_zero()) {
      CHECK_THROWS_AS((void)divide(a, b), Error);
      continue;
    }
    auto [q, r] = divide(a, b);
    CHECK(q * b + r == a);
    Polynomial prod = a * b;
    CHECK(exact_div(prod, b) == a);
    ++exact_seen;
  }
  CHECK(exact_seen > 100);
  CHECK_THROWS_AS((void)exact_div(P("x + 1"), P("y")), NotDivisibleError);
  try {
    (void)exact_div(P("x^2 + y"), P("x"));
    CHECK(false);
  } catch (const NotDivisibleError& e) {
    CHECK(format_polynomial(e.remainder()) == "y");
  }
}

TEST_CASE("substitute agrees with evaluate on constant images") {
  Rng rng(555);
  for (int iter = 0; iter < 60; ++iter) {
    Polynomial a = random_poly(rng, kCtx, 6, 4);
    std::map<std::string, Rational> point{{"x", Rational(rng.range(-5, 5))},
                                          {"y", Rational(rng.range(-5, 5))},
                                          {"z", Rational(rng.range(-5, 5))}};
    std::map<std::string, Polynomial> images;
    for (const auto& [name, val] : point)
      images.emplace(name, Polynomial::constant(kCtx, val));
    Polynomial subbed = substitute(a, images);
    REQUIRE(subbed.term_count() <= 1);
    Rational lhs = subbed.is_zero() ? Rational(0) : subbed.constant_value();
    CHECK(lhs == evaluate(a, point));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Rng rng(31337);
  auto tctx = VarContext::make({"t"});
  std::map<std::string, Polynomial> images{
      {"x", parse_polynomial("t^2 - 1", tctx)},
      {"y", parse_polynomial("2*t", tctx)},
      {"z", parse_polynomial("t + 3", tctx)}};
  for (int iter = 0; iter < 40; ++iter) {
    Polynomial a = random_poly(rng, kCtx, 5, 3);
    Polynomial b = random_poly(rng, kCtx, 5, 3);
    CHECK(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
    CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
  }
}

TEST_CASE("derivative satisfies the product rule") {
  Rng rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    Polynomial a = random_poly(rng, kCtx, 5, 4);
    Polynomial b = random_poly(rng, kCtx, 5, 4);
    for (const char* v : {"x", "y", "z"}) {
      CHECK(derivative(a * b, v) ==
            derivative(a, v) * b + a * derivative(b, v));
      CHECK(derivative(a + b, v) == derivative(a, v) + derivative(b, v));
    }
  }
  CHECK(format_polynomial(derivative(P("x^3*y - 2*x + 7"), "x")) ==
        "3*x^2*y - 2");
}

TEST_CASE("degree helpers") {
  CHECK(!Polynomial::zero(kCtx).degree().has_value());
  CHECK(*P("5").degree() == 0);
  CHECK(*P("x^2*y + z").degree() == 3);
  CHECK(P("x^2*y + z").degree_in(0) == 2);
  CHECK(P("x^2*y + z").degree_in(1) == 1);
  CHECK(P("x^2*y + z").mentions(2));
  CHECK(!P("x^2*y").mentions(2));
}

TEST_CASE("embedded remaps by variable name") {
  auto big = VarContext::make({"w", "x", "y", "z"});
  Polynomial p = P("x*y - 3*z");
  Polynomial q = embedded(p, big);
  CHECK(q.context() == big);
  CHECK(format_polynomial(q) == "x*y - 3*z");
  std::map<std::string, Rational> pt{
      {"w", Rational(9)}, {"x", Rational(2)}, {"y", Rational(5)}, {"z", Rational(1)}};
  CHECK(evaluate(q, pt) == Rational(7));
  // a target missing a mentioned variable is rejected
  CHECK_THROWS_AS((void)embedded(q, VarContext::make({"x"})), Error);
}

TEST_CASE("context mismatch is rejected") {
  auto other = VarContext::make({"x", "y"});
  Polynomial a = P("x + y");
  Polynomial b = parse_polynomial("x + y", other);
  // same names embed transparently...
  auto same = VarContext::make({"x", "y", "z"});
  Polynomial c = parse_polynomial("x - y", same);
  CHECK(a + c == P("2*x"));
  // ...different names do not
  CHECK_THROWS_AS((void)(a + b), Error);
}

TEST_CASE("kronecker multiplication agrees with classic") {
  Rng rng(777);
  for (int iter = 0; iter < 80; ++iter) {
    Polynomial a = random_poly(rng, kCtx, 8, 5);
    Polynomial b = random_poly(rng, kCtx, 8, 5);
    auto kron = kronecker_mul(a, b, std::size_t(1) << 30);
    REQUIRE(kron.has_value());
    CHECK(*kron == a * b);
  }
}

TEST_CASE("kronecker handles large coefficients and lopsided degrees") {
  auto ctx = VarContext::make({"u", "v"});
  Polynomial a = parse_polynomial(
      "123456789123456789*u^40 - 987654321987654321*u^17*v^3 + 1/7", ctx);
  Polynomial b = parse_polynomial(
      "999999999999999999999*v^29 + 123*u - 5/3", ctx);
  auto kron = kronecker_mul(a, b, std::size_t(1) << 30);
  REQUIRE(kron.has_value());
  CHECK(*kron == a * b);
  // squares of dense univariates
  auto t = VarContext::make({"t"});
  std::vector<Polynomial::Term> dense;
  for (std::uint32_t e = 0; e <= 300; ++e)
    dense.push_back({Monomial::variable(0, e), Rational(long(e) - 150)});
  Polynomial d = Polynomial::from_terms(t, std::move(dense));
  auto sq = kronecker_mul(d, d, std::size_t(1) << 30);
  REQUIRE(sq.has_value());
  CHECK(*sq == d * d);
}

TEST_CASE("kronecker respects the memory cap") {
  auto ctx = VarContext::make({"a", "b", "c"});
  Polynomial p = parse_polynomial("a^50*b^50*c^50 + 1", ctx);
  CHECK(!kronecker_mul(p, p, 1024).has_value());
}
