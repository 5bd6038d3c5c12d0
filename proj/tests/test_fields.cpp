#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/forms.hpp"
#include "octo/sampler.hpp"
#include "octo/symbols.hpp"

using namespace octo;

namespace {

// independent oracle: strip factors of p one by one
long oracle_valuation(long num, long den, unsigned long p) {
    long v = 0;
    while (num % static_cast<long>(p) == 0) { num /= static_cast<long>(p); ++v; }
    while (den % static_cast<long>(p) == 0) { den /= static_cast<long>(p); --v; }
    return v;
}

// independent oracle: enumerate squares mod p
long oracle_nonresidue(unsigned long p) {
    std::vector<bool> is_square(p, false);
    for (unsigned long r = 1; r < p; ++r) is_square[(r * r) % p] = true;
    for (unsigned long n = 2; n < p; ++n)
        if (!is_square[n]) return static_cast<long>(n);
    return -1;
}

} // namespace

TEST_CASE("field spec grammar") {
    CHECK(FieldSpec::parse("Q").kind() == FieldKind::Rationals);
    CHECK(FieldSpec::parse("R").kind() == FieldKind::RealsFormal);
    CHECK(FieldSpec::parse("C").kind() == FieldKind::ComplexFormal);
    CHECK(FieldSpec::parse("Qp:7").prime() == 7);
    CHECK(FieldSpec::parse("Qp:2").prime() == 2);
    CHECK(FieldSpec::parse("Fp:11").prime() == 11);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:2"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("Qp:6"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("Zp:5"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse(""), std::invalid_argument);
}

TEST_CASE("scalar grammar and exact arithmetic") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(q.parse_scalar("3/4").to_string() == "3/4");
    CHECK(q.parse_scalar("-7").to_string() == "-7");
    CHECK(q.parse_scalar("+5").to_string() == "5");
    CHECK(q.parse_scalar("6/4").to_string() == "3/2");
    CHECK_THROWS(q.parse_scalar("1/0"));
    CHECK_THROWS(q.parse_scalar("abc"));
    CHECK_THROWS(q.parse_scalar(""));

    Sampler rng(7);
    for (int i = 0; i < 300; ++i) {
        Scalar a = rng.scalar(q, 50, 9, false), b = rng.scalar(q, 50, 9, true);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
    FieldSpec f7 = FieldSpec::prime_field(7);
    for (int i = 0; i < 100; ++i) {
        Scalar a = rng.scalar(f7, 0, 0, false), b = rng.scalar(f7, 0, 0, true);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
    CHECK(f7.scalar(1, 2) == f7.scalar(4)); // 2^-1 = 4 mod 7
    CHECK_THROWS_AS(f7.scalar(1, 7), std::domain_error);
    CHECK_THROWS_AS(q.one() + f7.one(), std::invalid_argument);
    CHECK_THROWS_AS(q.one() / q.zero(), std::domain_error);
}

TEST_CASE("exact square roots") {
    FieldSpec q = FieldSpec::rationals();
    Scalar root = q.zero();
    CHECK(q.scalar(9, 4).sqrt_exact(root));
    CHECK(root == q.scalar(3, 2));
    CHECK_FALSE(q.scalar(2).sqrt_exact(root));
    CHECK_FALSE(q.scalar(-4).sqrt_exact(root));

    FieldSpec f7 = FieldSpec::prime_field(7);
    Scalar r7 = f7.zero();
    CHECK(f7.scalar(2).sqrt_exact(r7)); // 2 = 3^2 mod 7
    CHECK(r7 * r7 == f7.scalar(2));
    CHECK_FALSE(f7.scalar(3).sqrt_exact(r7));
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(mpq_class(1), 5) == 0);
    CHECK(padic_valuation(mpq_class(50), 5) == 2);
    CHECK(padic_valuation(mpq_class(3, 25), 5) == -2);
    CHECK_THROWS_AS(padic_valuation(mpq_class(0), 5), std::domain_error);

    Sampler rng(11);
    for (int i = 0; i < 200; ++i) {
        long num = rng.range(-400, 400), den = rng.range(1, 400);
        if (num == 0) continue;
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            mpq_class x(num, den);
            x.canonicalize();
            CHECK(padic_valuation(x, p) == oracle_valuation(num, den, p));
        }
    }
}

TEST_CASE("quadratic non-residues") {
    CHECK(quadratic_nonresidue(3).to_string() == "2");
    CHECK(quadratic_nonresidue(5).to_string() == "2");
    CHECK(quadratic_nonresidue(7).to_string() == "3");
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul})
        CHECK(quadratic_nonresidue(p).value().get_num().get_si() == oracle_nonresidue(p));
    CHECK_THROWS_AS(quadratic_nonresidue(2), std::invalid_argument);
}

TEST_CASE("square classes") {
    FieldSpec r = FieldSpec::reals(), c = FieldSpec::complexes(), q = FieldSpec::rationals();
    CHECK(square_class(r.scalar(-7), r) == r.scalar(-1));
    CHECK(square_class(r.scalar(3, 2), r) == r.one());
    CHECK(square_class(c.scalar(-7), c) == c.one());
    // 18 = 3^2 * 2 and 2 is the non-residue mod 3
    FieldSpec q3 = FieldSpec::padic(3);
    CHECK(square_class(q3.scalar(18), q3) == q3.scalar(2));
    CHECK(square_class(q3.scalar(3), q3) == q3.scalar(3));
    CHECK(square_class(q3.scalar(12), q3) == q3.scalar(3)); // 4*3
    CHECK(square_class(q3.scalar(6), q3) == q3.scalar(6));  // 3 * N_3
    CHECK(square_class(q.scalar(12), q) == q.scalar(3));
    CHECK(square_class(q.scalar(-7), q) == q.scalar(-7));
    CHECK(square_class(q.scalar(8, 9), q) == q.scalar(2));
    CHECK_THROWS_AS(square_class(q.zero(), q), std::domain_error);

    FieldSpec q2 = FieldSpec::padic(2);
    CHECK(square_class(q2.scalar(2), q2) == q2.scalar(2));
    CHECK(square_class(q2.scalar(-6), q2) == q2.scalar(10)); // -6 = 2*(-3), -3 = 5 mod 8
    CHECK(square_class(q2.scalar(5), q2) == q2.scalar(5));
    CHECK(square_class(q2.scalar(7), q2) == q2.scalar(-1));
    CHECK(square_class(q2.scalar(1, 2), q2) == q2.scalar(2));
    CHECK(square_class(q2.scalar(9), q2) == q2.one());

    FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(square_class(f7.scalar(2), f7) == f7.one()); // 2 = 3^2 mod 7
    CHECK(square_class(f7.scalar(3), f7) == f7.scalar(3));

    // representative is always in the same square class: x * rep is a square
    Sampler rng(23);
    for (const FieldSpec& field :
         {q, r, q3, q2, FieldSpec::padic(5), FieldSpec::prime_field(11)}) {
        for (int i = 0; i < 60; ++i) {
            Scalar x = rng.scalar(field, 40, 7, true);
            Scalar rep = square_class(x, field);
            CHECK(square_class(x * rep, field) == square_class(x * x, field));
        }
    }
}

TEST_CASE("hilbert symbol spec values") {
    FieldSpec r = FieldSpec::reals();
    CHECK(hilbert_symbol(r.scalar(-1), r.scalar(-1), r) == -1);
    for (const FieldSpec& field : {r, FieldSpec::complexes(), FieldSpec::padic(3),
                                   FieldSpec::padic(2), FieldSpec::prime_field(5)}) {
        CHECK(hilbert_symbol(field.one(), field.scalar(-17), field) == 1);
        CHECK_THROWS_AS(hilbert_symbol(field.zero(), field.one(), field), std::domain_error);
    }
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        FieldSpec qp = FieldSpec::padic(p);
        Scalar np = qp.from_rational(quadratic_nonresidue(p).value());
        CHECK(hilbert_symbol(qp.scalar(static_cast<long>(p)), np, qp) == -1);
    }
    FieldSpec f7 = FieldSpec::prime_field(7);
    for (long a = 1; a < 7; ++a)
        for (long b = 1; b < 7; ++b) CHECK(hilbert_symbol(f7.scalar(a), f7.scalar(b), f7) == 1);
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(hilbert_symbol(q.one(), q.one(), q), std::invalid_argument);
}

TEST_CASE("hilbert symbol at places") {
    CHECK(hilbert_symbol_at_place(mpq_class(-1), mpq_class(3), Place::infinity()) == 1);
    CHECK(hilbert_symbol_at_place(mpq_class(-1), mpq_class(3), Place::prime(3)) == -1);
    CHECK(hilbert_symbol_at_place(mpq_class(-1), mpq_class(3), Place::prime(5)) == 1);
    // derived values cross-checked against the lifting search oracle
    CHECK_FALSE(padic_isotropy_search({mpq_class(-1), mpq_class(3), mpq_class(-1)}, 3));
    CHECK(padic_isotropy_search({mpq_class(-1), mpq_class(3), mpq_class(-1)}, 5));
    CHECK_THROWS_AS(hilbert_symbol_at_place(mpq_class(0), mpq_class(3), Place::infinity()),
                    std::domain_error);
}

TEST_CASE("hilbert symbol laws") {
    Sampler rng(31);
    for (const FieldSpec& field :
         {FieldSpec::reals(), FieldSpec::complexes(), FieldSpec::padic(2), FieldSpec::padic(3),
          FieldSpec::padic(7), FieldSpec::prime_field(11)}) {
        for (int i = 0; i < 120; ++i) {
            Scalar a = rng.scalar(field, 30, 5, true), b = rng.scalar(field, 30, 5, true);
            Scalar a2 = rng.scalar(field, 30, 5, true), c = rng.scalar(field, 12, 4, true);
            CHECK(hilbert_symbol(a, b, field) == hilbert_symbol(b, a, field));
            CHECK(hilbert_symbol(a * a2, b, field) ==
                  hilbert_symbol(a, b, field) * hilbert_symbol(a2, b, field));
            CHECK(hilbert_symbol(a * c * c, b, field) == hilbert_symbol(a, b, field));
        }
    }
}

TEST_CASE("product formula over Q") {
    Sampler rng(37);
    for (int i = 0; i < 500; ++i) {
        mpq_class a(rng.range(-60, 60), rng.range(1, 25));
        mpq_class b(rng.range(-60, 60), rng.range(1, 25));
        if (sgn(a) == 0 || sgn(b) == 0) continue;
        a.canonicalize();
        b.canonicalize();
        int prod = 1;
        for (const Place& v : candidate_places(a, b)) prod *= hilbert_symbol_at_place(a, b, v);
        CHECK(prod == 1);
    }
}
