#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/forms.hpp"
#include "octo/linalg.hpp"
#include "octo/sampler.hpp"
#include "octo/structure.hpp"

#include <set>

using namespace octo;

namespace {

// independent oracle: plain triple loop over F_p for ternary forms
bool oracle_fp_ternary_isotropic(long a, long b, long c, unsigned long p) {
    for (unsigned long x = 0; x < p; ++x)
        for (unsigned long y = 0; y < p; ++y)
            for (unsigned long z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                long long val = a * static_cast<long long>(x * x) +
                                b * static_cast<long long>(y * y) +
                                c * static_cast<long long>(z * z);
                long long m = static_cast<long long>(p);
                if (((val % m) + m) % m == 0) return true;
            }
    return false;
}

std::set<std::string> place_names(const QuaternionInvariant& inv) {
    std::set<std::string> out;
    for (const auto& v : inv.ramified_places) out.insert(v.to_string());
    return out;
}

} // namespace

TEST_CASE("quaternion norm forms") {
    FieldSpec q = FieldSpec::rationals();
    DiagonalForm f = quaternion_norm_form(q.scalar(-1), q.scalar(-1), q);
    for (const auto& c : f.coefficients) CHECK(c == q.one());

    DiagonalForm g = quaternion_norm_form(q.one(), q.scalar(5), q);
    CHECK(g.coefficients[1] == q.scalar(-1));
    CHECK(g.coefficients[2] == q.scalar(-5));
    CHECK(g.coefficients[3] == q.scalar(5));

    FieldSpec q5 = FieldSpec::padic(5);
    Scalar n5 = q5.from_rational(quadratic_nonresidue(5).value());
    DiagonalForm h = quaternion_norm_form(q5.scalar(5), n5, q5);
    CHECK(h.coefficients[0] == q5.one());
    CHECK(h.coefficients[1] == q5.scalar(-5));
    CHECK(h.coefficients[2] == -n5);
    CHECK(h.coefficients[3] == q5.scalar(5) * n5);

    CHECK_THROWS_AS(quaternion_norm_form(q.zero(), q.one(), q), std::invalid_argument);
}

TEST_CASE("isotropy decisions") {
    FieldSpec r = FieldSpec::reals(), q = FieldSpec::rationals();
    DiagonalForm sum_of_squares({r.one(), r.one(), r.one(), r.one()}, r);
    CHECK_FALSE(is_isotropic(sum_of_squares).isotropic);

    for (const FieldSpec& field : {r, q, FieldSpec::complexes(), FieldSpec::padic(2),
                                   FieldSpec::prime_field(7)}) {
        DiagonalForm hyp({field.one(), field.scalar(-1)}, field);
        IsotropyResult res = is_isotropic(hyp);
        CHECK(res.isotropic);
        if (res.witness) CHECK(hyp.evaluate(*res.witness).is_zero());
    }

    FieldSpec f5 = FieldSpec::prime_field(5);
    DiagonalForm spec_form({f5.one(), f5.scalar(-2), f5.scalar(-3), f5.scalar(6)}, f5);
    IsotropyResult res = is_isotropic(spec_form);
    CHECK(res.isotropic);
    REQUIRE(res.witness.has_value());
    CHECK(spec_form.evaluate(*res.witness).is_zero());
    CHECK_FALSE(vec_is_zero(*res.witness));

    CHECK_THROWS_AS(DiagonalForm({q.one(), q.zero()}, q), std::invalid_argument);

    // dimension edge cases
    CHECK_FALSE(is_isotropic(DiagonalForm({q.scalar(3)}, q)).isotropic);
    CHECK(is_isotropic(DiagonalForm({FieldSpec::complexes().one(),
                                     FieldSpec::complexes().scalar(7)},
                                    FieldSpec::complexes()))
              .isotropic);
    // Meyer: indefinite rank 5 over Q
    CHECK(is_isotropic(DiagonalForm({q.one(), q.one(), q.one(), q.one(), q.scalar(-7)}, q))
              .isotropic);
    CHECK_FALSE(
        is_isotropic(DiagonalForm({q.one(), q.one(), q.one(), q.one(), q.scalar(7)}, q))
            .isotropic);
}

TEST_CASE("F_p isotropy agrees with the plain triple-loop oracle") {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        FieldSpec fp = FieldSpec::prime_field(p);
        for (long a = 1; a < static_cast<long>(p); ++a)
            for (long b = 1; b < static_cast<long>(p); ++b) {
                DiagonalForm f({fp.scalar(a), fp.scalar(b), fp.scalar(-1)}, fp);
                CHECK(is_isotropic(f).isotropic == oracle_fp_ternary_isotropic(a, b, -1, p));
            }
    }
}

TEST_CASE("p-adic isotropy decisions agree with the lifting search oracle") {
    Sampler rng(61);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        FieldSpec qp = FieldSpec::padic(p);
        for (int i = 0; i < 80; ++i) {
            std::size_t dim = 2 + static_cast<std::size_t>(rng.range(0, 1));
            std::vector<Scalar> coeffs;
            std::vector<mpq_class> raw;
            for (std::size_t k = 0; k < dim; ++k) {
                Scalar c = rng.scalar(qp, 15, 4, true);
                coeffs.push_back(c);
                raw.push_back(c.value());
            }
            DiagonalForm f(coeffs, qp);
            CHECK(is_isotropic(f).isotropic == padic_isotropy_search(raw, p));
        }
    }

    // quaternary spot checks, including the anisotropic quaternion norm forms
    FieldSpec q2 = FieldSpec::padic(2);
    CHECK_FALSE(padic_isotropy_search({1, 1, 1, 1}, 2));
    CHECK_FALSE(is_isotropic(DiagonalForm({q2.one(), q2.one(), q2.one(), q2.one()}, q2))
                    .isotropic);
    FieldSpec q3 = FieldSpec::padic(3);
    CHECK_FALSE(padic_isotropy_search({1, -3, -2, 6}, 3)); // norm form of (3, N_3)
    CHECK_FALSE(is_isotropic(DiagonalForm({q3.one(), q3.scalar(-3), q3.scalar(-2),
                                           q3.scalar(6)},
                                          q3))
                    .isotropic);
    CHECK(padic_isotropy_search({1, 1, 1, 1}, 3)); // (-1,-1) splits over Q_3
    CHECK(is_isotropic(DiagonalForm({q3.one(), q3.one(), q3.one(), q3.one()}, q3)).isotropic);
}

TEST_CASE("isotropy of the reduced norm form matches the symbol everywhere") {
    // <1, -alpha, -beta> isotropic iff (alpha, beta) = +1
    std::vector<FieldSpec> fields = {FieldSpec::reals(),          FieldSpec::padic(2),
                                     FieldSpec::padic(3),         FieldSpec::padic(5),
                                     FieldSpec::padic(7),         FieldSpec::prime_field(3),
                                     FieldSpec::prime_field(5),   FieldSpec::prime_field(7),
                                     FieldSpec::prime_field(11),  FieldSpec::prime_field(13)};
    for (const FieldSpec& field : fields) {
        for (long a = -10; a <= 10; ++a)
            for (long b = -10; b <= 10; ++b) {
                Scalar alpha = field.scalar(a), beta = field.scalar(b);
                if (alpha.is_zero() || beta.is_zero()) continue;
                DiagonalForm f({field.one(), -alpha, -beta}, field);
                CHECK(is_isotropic(f).isotropic ==
                      (hilbert_symbol(alpha, beta, field) == 1));
            }
    }
}

TEST_CASE("doubling chain basis norms realize the Pfister forms") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a = q.scalar(2), b = q.scalar(-3), c = q.scalar(5);
    StructureAlgebra alg = ground_field_algebra(q);
    alg = double_algebra(alg, a);
    alg = double_algebra(alg, b);
    CHECK(Vec(alg.basis_norms) == quaternion_norm_form(a, b, q).coefficients);
    alg = double_algebra(alg, c);
    CHECK(Vec(alg.basis_norms) == octonion_norm_form(a, b, c, q).coefficients);
}

TEST_CASE("quaternion split verdicts") {
    FieldSpec q = FieldSpec::rationals();
    for (unsigned long p : {3ul, 7ul, 11ul}) {
        QuaternionInvariant inv =
            quaternion_is_split(q.scalar(-1), q.scalar(static_cast<long>(p)), q);
        CHECK_FALSE(inv.split);
        CHECK(place_names(inv) == std::set<std::string>{"2", std::to_string(p)});
    }
    QuaternionInvariant minus_ones = quaternion_is_split(q.scalar(-1), q.scalar(-1), q);
    CHECK_FALSE(minus_ones.split);
    CHECK(place_names(minus_ones) == std::set<std::string>{"infinity", "2"});

    FieldSpec q2 = FieldSpec::padic(2);
    CHECK_FALSE(quaternion_is_split(q2.scalar(-1), q2.scalar(-1), q2).split);

    FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(quaternion_is_split(f7.scalar(2), f7.scalar(3), f7).split);

    CHECK_THROWS_AS(quaternion_is_split(q.zero(), q.one(), q), std::invalid_argument);
}

TEST_CASE("quaternion isomorphy") {
    FieldSpec q = FieldSpec::rationals();
    QuaternionInvariant a = quaternion_is_split(q.scalar(-1), q.scalar(3), q);
    QuaternionInvariant b = quaternion_is_split(q.scalar(-1), q.scalar(7), q);
    CHECK_FALSE(quaternion_isomorphic(a, b));
    CHECK(quaternion_isomorphic(quaternion_is_split(q.one(), q.one(), q),
                                quaternion_is_split(q.one(), q.scalar(5), q)));

    FieldSpec q2 = FieldSpec::padic(2);
    // only one division class over Q_2
    CHECK(quaternion_isomorphic(quaternion_is_split(q2.scalar(-1), q2.scalar(-1), q2),
                                quaternion_is_split(q2.scalar(-1), q2.scalar(-5), q2)));

    FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK_THROWS_AS(quaternion_isomorphic(a, quaternion_is_split(f7.one(), f7.one(), f7)),
                    std::invalid_argument);
}

TEST_CASE("verdict invariances") {
    Sampler rng(67);
    FieldSpec q = FieldSpec::rationals();
    for (int i = 0; i < 500; ++i) {
        Scalar alpha = rng.scalar(q, 20, 6, true), beta = rng.scalar(q, 20, 6, true);
        QuaternionInvariant inv = quaternion_is_split(alpha, beta, q);
        CHECK(inv.ramified_places.size() % 2 == 0);
        if (i < 150) {
            Scalar c = rng.scalar(q, 8, 3, true), d = rng.scalar(q, 8, 3, true);
            QuaternionInvariant scaled = quaternion_is_split(alpha * c * c, beta * d * d, q);
            CHECK(scaled.split == inv.split);
            CHECK(scaled.ramified_places == inv.ramified_places);
        }
    }
    // exhaustive totality over small prime fields
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        FieldSpec fp = FieldSpec::prime_field(p);
        for (long a = 1; a < static_cast<long>(p); ++a)
            for (long b = 1; b < static_cast<long>(p); ++b)
                CHECK(quaternion_is_split(fp.scalar(a), fp.scalar(b), fp).split);
    }
}
