#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/octonion.hpp"
#include "octo/sampler.hpp"

using namespace octo;

namespace {

Octonion random_oct(Sampler& rng, const FieldSpec& field) {
    return oct_from_coords(field, rng.vec(field, 8, 6, 4));
}

} // namespace

TEST_CASE("identity and squares of standard elements") {
    FieldSpec q = FieldSpec::rationals();
    Octonion e = oct_identity(q);
    CHECK(oct_norm(e) == q.one());

    Sampler rng(41);
    for (int i = 0; i < 100; ++i) {
        Octonion x = random_oct(rng, q);
        CHECK(oct_mul(e, x) == x);
        CHECK(oct_mul(x, e) == x);
    }

    // (0, diag(1,-1))^2 = -e and (0, offdiag(1,1))^2 = -e
    Octonion a = parse_octonion(q, "[[0,0],[0,0]];[[1,0],[0,-1]]");
    Octonion minus_e = oct_neg(e);
    CHECK(oct_mul(a, a) == minus_e);
    Octonion b = parse_octonion(q, "[[0,0],[0,0]];[[0,1],[1,0]]");
    CHECK(oct_mul(b, b) == minus_e);
    // ([[0,p],[1,0]], 0)^2 = p e
    for (long p : {3L, 7L, 11L}) {
        Octonion c = parse_octonion(q, "[[0," + std::to_string(p) + "],[1,0]];[[0,0],[0,0]]");
        CHECK(oct_mul(c, c) == oct_scale(q.scalar(p), e));
    }
}

TEST_CASE("norm, conjugation, bilinear form") {
    FieldSpec q = FieldSpec::rationals();
    Octonion e = oct_identity(q);
    CHECK(oct_norm(parse_octonion(q, "[[0,0],[0,0]];[[1,0],[0,1]]")) == q.scalar(-1));
    CHECK(oct_norm(parse_octonion(q, "[[1,2],[3,4]];[[0,1],[1,0]]")) == q.scalar(-1));

    CHECK(oct_conj(e) == e);
    CHECK(oct_conj(parse_octonion(q, "[[1,0],[0,0]];[[0,0],[0,0]]")) ==
          parse_octonion(q, "[[0,0],[0,1]];[[0,0],[0,0]]"));
    Sampler rng(43);
    for (int i = 0; i < 100; ++i) {
        Octonion x = random_oct(rng, q);
        CHECK(oct_conj(oct_conj(x)) == x);
    }

    CHECK(bilinear(e, e) == q.scalar(2));
    CHECK(bilinear(oct_basis_element(q, 0), oct_basis_element(q, 3)) == q.one());
    CHECK(bilinear(oct_basis_element(q, 1), oct_basis_element(q, 0)) == q.zero());
}

TEST_CASE("composition algebra laws at scale") {
    FieldSpec q = FieldSpec::rationals();
    Octonion e = oct_identity(q);
    Sampler rng(47);
    for (int i = 0; i < 1000; ++i) {
        Octonion x = random_oct(rng, q), y = random_oct(rng, q);
        CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
        if (i < 500) {
            CHECK(oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)));
            CHECK(oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y));
            CHECK(oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x)));
        }
        if (i < 200) {
            Octonion pure = oct_sub(x, oct_scale(bilinear(x, e) / q.scalar(2), e));
            CHECK(oct_mul(pure, pure) == oct_scale(-oct_norm(pure), e));
            CHECK(bilinear(pure, e).is_zero());
        }
    }
}

TEST_CASE("laws hold over prime fields too") {
    FieldSpec f11 = FieldSpec::prime_field(11);
    Sampler rng(53);
    for (int i = 0; i < 200; ++i) {
        Octonion x = random_oct(rng, f11), y = random_oct(rng, f11);
        CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
        CHECK(oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)));
    }
}

TEST_CASE("literals and coordinates") {
    FieldSpec q = FieldSpec::rationals();
    std::string text = "[[1,-2],[3/4,0]];[[0,1],[5,-1/3]]";
    Octonion x = parse_octonion(q, text);
    CHECK(octonion_to_string(x) == text);
    CHECK(oct_from_coords(q, oct_coords(x)) == x);
    CHECK_THROWS_AS(parse_octonion(q, "[[1,2],[3,4]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_octonion(q, "[[1,2],[3]];[[0,0],[0,0]]"), std::invalid_argument);

    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK_THROWS_AS(oct_mul(oct_identity(q), oct_identity(f5)), std::invalid_argument);
}
