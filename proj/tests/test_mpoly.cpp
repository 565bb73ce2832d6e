#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycbound/mpoly.hpp"

using namespace cycbound;

namespace {

MultiPoly random_poly(std::mt19937& rng, unsigned nvars, unsigned max_terms,
                      unsigned max_exp, int coef_span) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
    std::uniform_int_distribution<int> coefd(-coef_span, coef_span);
    MultiPoly p = MultiPoly::zero(nvars);
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
        MultiPoly::Exponents e(nvars);
        for (auto& x : e) x = expd(rng);
        int c = coefd(rng);
        if (c == 0) c = 1;
        p = p + MultiPoly::monomial(nvars, e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic fixtures") {
    auto x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    CHECK((x1 + x2) * (x1 - x2) == MultiPoly::parse("x1^2 - x2^2", 2));

    auto s = MultiPoly::parse("x1 + x2 + x3", 3);
    CHECK(s * s == MultiPoly::parse(
                       "x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3", 3));

    CHECK_THROWS_AS((void)(x1 + MultiPoly::variable(3, 0)), Error);
}

TEST_CASE("substitution fixtures") {
    auto curve = MultiPoly::parse("x1^2 + x2^2 + x3^2 + x2*x3 + x3*x1 + x1*x2", 3);
    auto minus12 = MultiPoly::parse("x1 + x2", 3).scalar_mul(-1);
    CHECK(curve.substitute(2, minus12) == MultiPoly::parse("x1^2 + x1*x2 + x2^2", 3));

    auto cubic = MultiPoly::parse(
        "x1^3 + x2^3 + x3^3 + x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + x1*x2*x3",
        3);
    auto sub = cubic.substitute(2, minus12);
    auto expect = MultiPoly::parse("x1*x2", 3) * MultiPoly::parse("x1 + x2", 3);
    bool matches = (sub == expect) || (sub == -expect);
    CHECK(matches);

    // identity substitution
    auto p = MultiPoly::parse("x1^2*x2 + 3*x2^2", 2);
    CHECK(p.substitute(1, MultiPoly::variable(2, 1)) == p);

    CHECK_THROWS_AS(p.substitute(5, p), Error);
}

TEST_CASE("evaluation fixtures") {
    auto F7 = make_field(7, 1);
    auto s = MultiPoly::parse("x1 + x2 + x3", 3);
    std::vector<FieldElement> point = {F7->element(1), F7->element(2), F7->element(4)};
    CHECK(s.evaluate(point).is_zero());  // 1 + 2 + 4 = 7

    auto F3 = make_field(3, 1);
    auto q = MultiPoly::parse("x1^2 + x1*x2 + x2^2", 2);
    std::vector<FieldElement> ones = {F3->element(1), F3->element(1)};
    CHECK(q.evaluate(ones).is_zero());

    CHECK_THROWS_AS((void)s.evaluate(ones), Error);
}

TEST_CASE("negative coefficients reduce into the field") {
    auto F7 = make_field(7, 1);
    auto p = MultiPoly::parse("x1 - 9", 1);
    CHECK(p.evaluate_packed(*F7, {2}) == 0);  // 2 - 9 = -7
}

TEST_CASE("exact division") {
    auto num = MultiPoly::parse("x1^2 - x2^2", 2);
    auto den = MultiPoly::parse("x1 - x2", 2);
    auto q = num.exact_divide(den);
    REQUIRE(q.has_value());
    CHECK(*q == MultiPoly::parse("x1 + x2", 2));

    CHECK_FALSE(MultiPoly::parse("x1^2 + x2^2", 2)
                    .exact_divide(MultiPoly::parse("x1 + x2", 2))
                    .has_value());

    // integer (not rational) divisibility
    CHECK_FALSE(MultiPoly::parse("x1", 1).exact_divide(MultiPoly::parse("2", 1)).has_value());
    CHECK(MultiPoly::parse("2*x1", 1).exact_divide(MultiPoly::parse("2", 1)).has_value());

    CHECK_THROWS_AS((void)num.exact_divide(MultiPoly::zero(2)), Error);
}

TEST_CASE("exact division round trip property") {
    std::mt19937 rng(777);
    for (int i = 0; i < 120; ++i) {
        unsigned nvars = 1 + i % 3;
        auto a = random_poly(rng, nvars, 5, 4, 6);
        auto b = random_poly(rng, nvars, 4, 3, 6);
        if (b.is_zero()) continue;
        auto q = (a * b).exact_divide(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("homogeneous degree") {
    CHECK(MultiPoly::parse("x1 + x2 + x3", 3).homogeneous_degree() == 1);
    CHECK_FALSE(MultiPoly::parse("x1 + x2^2", 2).homogeneous_degree().has_value());
    CHECK_THROWS_AS((void)MultiPoly::zero(2).homogeneous_degree(), Error);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(4242);
    auto F = make_field(13, 1);
    for (int i = 0; i < 100; ++i) {
        unsigned nvars = 1 + i % 3;
        auto a = random_poly(rng, nvars, 5, 4, 9);
        auto b = random_poly(rng, nvars, 5, 4, 9);
        std::uniform_int_distribution<std::uint64_t> d(0, 12);
        std::vector<std::uint64_t> pt(nvars);
        for (auto& x : pt) x = d(rng);
        auto ea = a.evaluate_packed(*F, pt), eb = b.evaluate_packed(*F, pt);
        CHECK((a * b).evaluate_packed(*F, pt) == F->mul(ea, eb));
        CHECK((a + b).evaluate_packed(*F, pt) == F->add(ea, eb));
    }
}

TEST_CASE("substitute and evaluate commute") {
    std::mt19937 rng(90210);
    auto F = make_field(11, 1);
    for (int i = 0; i < 100; ++i) {
        unsigned nvars = 2 + i % 2;
        auto p = random_poly(rng, nvars, 5, 4, 9);
        auto r = random_poly(rng, nvars, 3, 2, 5);
        unsigned v = i % nvars;
        std::uniform_int_distribution<std::uint64_t> d(0, 10);
        std::vector<std::uint64_t> pt(nvars);
        for (auto& x : pt) x = d(rng);
        auto substituted = p.substitute(v, r).evaluate_packed(*F, pt);
        auto pt2 = pt;
        pt2[v] = r.evaluate_packed(*F, pt);
        CHECK(substituted == p.evaluate_packed(*F, pt2));
    }
}

TEST_CASE("canonical text form") {
    auto p = MultiPoly::parse("x1^6 + 3*x1^5*x2 + 7*x1^4*x2^2 + 9*x1^3*x2^3 + 7*x1^2*x2^4 + 3*x1*x2^5 + x2^6", 2);
    CHECK(p.to_string() ==
          "x1^6 + 3*x1^5*x2 + 7*x1^4*x2^2 + 9*x1^3*x2^3 + 7*x1^2*x2^4 + 3*x1*x2^5 + x2^6");
    CHECK(MultiPoly::parse("x2 - x1", 2).to_string() == "-x1 + x2");
    CHECK(MultiPoly::zero(3).to_string() == "0");
    CHECK(MultiPoly::parse("-2", 1).to_string() == "-2");
}

TEST_CASE("parser round trip property") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 120; ++i) {
        unsigned nvars = 1 + i % 4;
        auto p = random_poly(rng, nvars, 6, 5, 12);
        CHECK(MultiPoly::parse(p.to_string(), nvars) == p);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS((void)MultiPoly::parse("x0", 2), Error);
    CHECK_THROWS_AS((void)MultiPoly::parse("x3", 2), Error);
    CHECK_THROWS_AS((void)MultiPoly::parse("3x1", 2), Error);
    CHECK_THROWS_AS((void)MultiPoly::parse("x1 + + x2", 2), Error);
}

TEST_CASE("content and normalization") {
    auto p = MultiPoly::parse("4*x1^2 - 6*x2^2", 2);
    CHECK(p.content() == 2);
    CHECK(p.normalized() == MultiPoly::parse("2*x1^2 - 3*x2^2", 2));
    auto neg = MultiPoly::parse("-3*x1 + 3*x2", 2);
    CHECK(neg.normalized() == MultiPoly::parse("x1 - x2", 2));
}

TEST_CASE("drop and permute variables") {
    auto p = MultiPoly::parse("x1^2 + x1*x3", 3);
    CHECK(p.drop_variable(1) == MultiPoly::parse("x1^2 + x1*x2", 2));
    CHECK_THROWS_AS((void)p.drop_variable(0), Error);

    auto sym = MultiPoly::parse("x1 + x2 + x3", 3);
    CHECK(sym.permute_variables({2, 0, 1}) == sym);
    auto asym = MultiPoly::parse("x1^2*x2", 2);
    CHECK(asym.permute_variables({1, 0}) == MultiPoly::parse("x1*x2^2", 2));
}
