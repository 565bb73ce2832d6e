#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycbound/gf.hpp"
#include "cycbound/util.hpp"

using namespace cycbound;

namespace {

// independent oracle: modular exponentiation on plain integers
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = (r * a) % p;
        a = (a * a) % p;
        e >>= 1;
    }
    return r;
}

// independent oracle: multiplicative order by naive stepping
std::uint64_t order_naive(std::uint64_t a, std::uint64_t p) {
    std::uint64_t cur = a % p, k = 1;
    while (cur != 1) {
        cur = (cur * a) % p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("field construction fixtures") {
    auto f2 = make_field(2, 1);
    CHECK(f2->size() == 2);
    CHECK(f2->modulus() == std::vector<std::uint32_t>{0, 1});

    auto f47 = make_field(47, 1);
    CHECK(f47->size() == 47);
    CHECK(f47->descriptor() == "47");

    auto f2048 = make_field(2, 11);
    CHECK(f2048->size() == 2048);
    CHECK((f2048->size() - 1) % 23 == 0);  // 23 | 2^11 - 1
    CHECK(f2048->descriptor() == "2^11");

    auto f4 = make_field(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(make_field(6, 1), Error);
    CHECK_THROWS_AS(make_field(4, 1), Error);
    CHECK_THROWS_AS(make_field(2, 40), Error);  // 2^40 over the default budget
    try {
        make_field(6, 1);
    } catch (const Error& e) {
        CHECK(e.code() == "not_prime");
    }
    try {
        make_field(2, 40);
    } catch (const Error& e) {
        CHECK(e.code() == "budget_exceeded");
    }
}

TEST_CASE("construction is deterministic") {
    auto a = make_field(3, 4);
    auto b = make_field(3, 4);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->root_of_unity(5) == b->root_of_unity(5));  // 5 | 80
}

TEST_CASE("prime field arithmetic") {
    auto F = make_field(47, 1);
    CHECK(F->inv(2) == 24);  // 2 * 24 = 48 = 1 (mod 47)
    CHECK(F->pow(2, 23) == powmod_u64(2, 23, 47));
    CHECK(F->pow(2, 23) == 1);
    CHECK(F->pow(5, -1) == F->inv(5));
    CHECK(F->mul(F->pow(3, -7), F->pow(3, 7)) == 1);
    CHECK_THROWS_AS(F->inv(0), Error);
    CHECK_THROWS_AS(F->div(3, 0), Error);
}

TEST_CASE("extension field arithmetic") {
    auto F4 = make_field(2, 2);
    // x * x = x + 1 under x^2 + x + 1; x is packed index 2, x+1 is 3
    CHECK(F4->mul(2, 2) == 3);
    CHECK(F4->add(2, 3) == 1);

    auto F8 = make_field(2, 3);
    for (std::uint64_t a = 1; a < 8; ++a) {
        CHECK(F8->mul(a, F8->inv(a)) == 1);
        CHECK(F8->pow_u(a, 7) == 1);
    }
}

TEST_CASE("element order") {
    auto F47 = make_field(47, 1);
    CHECK(F47->element_order(1) == 1);
    CHECK(F47->element_order(2) == 23);
    CHECK(order_naive(2, 47) == 23);
    CHECK_THROWS_AS(F47->element_order(0), Error);

    // in GF(2048), any root of the modulus has order dividing 2047 = 23 * 89
    auto F = make_field(2, 11);
    std::uint64_t x = 2;  // the class of x
    CHECK(2047 % F->element_order(x) == 0);
}

TEST_CASE("primitive roots of unity") {
    auto F47 = make_field(47, 1);
    CHECK(F47->root_of_unity(23) == 2);
    // oracle: 2 really is the smallest residue of order 23
    for (std::uint64_t g = 2; g < 47; ++g) {
        if (order_naive(g, 47) == 23) {
            CHECK(g == 2);
            break;
        }
    }

    auto F7 = make_field(7, 1);
    CHECK(F7->root_of_unity(3) == 2);

    auto F5 = make_field(5, 1);
    CHECK_THROWS_AS(F5->root_of_unity(3), Error);

    FieldElement w = primitive_root_of_unity(F7, 3);
    CHECK(w.pow(3) == F7->one());
    CHECK(w != F7->one());
}

TEST_CASE("root of unity properties") {
    std::vector<std::pair<std::uint64_t, unsigned>> fields = {{7, 1}, {47, 1}, {2, 11}, {3, 4}};
    for (auto [p, m] : fields) {
        auto F = make_field(p, m);
        std::uint64_t qm1 = F->size() - 1;
        for (auto [n, e] : factorize(qm1)) {
            std::uint64_t root = F->root_of_unity(n);
            CHECK(F->pow_u(root, n) == 1);
            for (std::uint64_t d = 1; d < n; ++d)
                if (n % d == 0) CHECK(F->pow_u(root, d) != 1);
        }
    }
}

TEST_CASE("extension degree") {
    CHECK(extension_degree(2, 23) == 11);
    CHECK(extension_degree(2, 7) == 3);
    CHECK(extension_degree(4, 3) == 1);
    CHECK(extension_degree(47, 46) == 1);
    CHECK(extension_degree(2, 9) == 6);
    CHECK_THROWS_AS(extension_degree(3, 9), Error);
}

TEST_CASE("random arithmetic properties") {
    std::mt19937 rng(12345);
    for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {47, 1}, {2, 11}, {3, 5}, {2, 20}, {7, 3}, {65521, 1}, {5, 9}}) {
        auto F = make_field(p, m);
        std::uniform_int_distribution<std::uint64_t> dist(1, F->size() - 1);
        for (int i = 0; i < 50; ++i) {
            std::uint64_t a = dist(rng), b = dist(rng);
            CHECK(F->pow_u(a, F->size() - 1) == 1);
            CHECK(F->mul(F->inv(a), a) == 1);
            CHECK(F->mul(F->mul(a, b), F->inv(b)) == a);
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->add(a, F->neg(a)) == 0);
            CHECK(F->sub(F->add(a, b), b) == a);
            // distributivity against a third element
            std::uint64_t c = dist(rng);
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
    }
}

TEST_CASE("element text forms") {
    auto F47 = make_field(47, 1);
    CHECK(F47->to_string(12) == "12");
    CHECK(F47->parse_element("12") == 12);

    auto F8 = make_field(2, 3);
    CHECK(F8->to_string(5) == "1,0,1");
    CHECK(F8->parse_element("1,0,1") == 5);
    CHECK(F8->parse_element("1") == 1);
    CHECK_THROWS_AS(F8->parse_element("1,0"), Error);
    CHECK_THROWS_AS(F47->parse_element("99"), Error);
}

TEST_CASE("lex order on coefficient vectors") {
    auto F8 = make_field(2, 3);
    // (0,0,1) = x^2 precedes (0,1,0) = x low-degree-first
    CHECK(F8->lex_less(4, 2));
    CHECK_FALSE(F8->lex_less(2, 4));
    CHECK(F8->lex_less(0, 1));
}

TEST_CASE("matrix rank and determinant") {
    auto F = make_field(7, 1);
    // Vandermonde determinant (b-a)(c-a)(c-b) at (1, 2, 4)
    std::vector<std::uint64_t> mat = {1, 1, 1, 1, 2, 4, 1, 4, 2 * 2 * 4 % 7};
    // rows (a^0,b^0,c^0), (a,b,c), (a^2,b^2,c^2) with a=1,b=2,c=4
    mat = {1, 1, 1, 1, 2, 4, 1, 4, 16 % 7};
    auto copy = mat;
    std::uint64_t det = matrix_det(*F, copy, 3);
    std::uint64_t expect = ((2 - 1) * (4 - 1) % 7) * (4 - 2) % 7;
    CHECK(det == expect);

    copy = mat;
    CHECK(matrix_rank(*F, copy, 3, 3, 3) == 3);

    // repeated rows drop the rank
    std::vector<std::uint64_t> sing = {1, 2, 3, 1, 2, 3, 0, 1, 1};
    CHECK(matrix_rank(*F, sing, 3, 3, 3) == 2);
    sing = {1, 2, 3, 1, 2, 3, 0, 1, 1};
    std::uint64_t dz = matrix_det(*F, sing, 3);
    CHECK(dz == 0);
}

TEST_CASE("field element value semantics") {
    auto F = make_field(7, 1);
    FieldElement a = F->element(3), b = F->element(5);
    CHECK((a + b).index() == 1);
    CHECK((a * b).index() == 1);
    CHECK((a - b).index() == 5);
    CHECK((a / b).index() == F->mul(3, F->inv(5)));
    CHECK(a.pow(6) == F->one());
    auto G = make_field(5, 1);
    CHECK_THROWS_AS((void)(a + G->element(1)), Error);
}
