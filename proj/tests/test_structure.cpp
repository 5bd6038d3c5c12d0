#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octo/automorphism.hpp"
#include "octo/json_io.hpp"
#include "octo/linalg.hpp"
#include "octo/sampler.hpp"
#include "octo/structure.hpp"

using namespace octo;

namespace {

Vec coords(const FieldSpec& q, const std::string& literal) {
    return oct_coords(parse_octonion(q, literal));
}

} // namespace

TEST_CASE("doubling chain and Hurwitz flags") {
    FieldSpec q = FieldSpec::rationals();
    Scalar one = q.one();
    StructureAlgebra a1 = ground_field_algebra(q);
    StructureAlgebra a2 = double_algebra(a1, one);
    StructureAlgebra a4 = double_algebra(a2, one);
    StructureAlgebra a8 = double_algebra(a4, one);

    CHECK(a2.dim() == 2);
    CHECK(a8.dim() == 8);
    for (const StructureAlgebra* a : {&a1, &a2, &a4, &a8}) CHECK(is_composition_algebra(*a).ok);

    CHECK(a1.is_commutative());
    CHECK(a2.is_commutative());
    CHECK(a2.is_associative());
    std::pair<std::size_t, std::size_t> comm_witness;
    CHECK_FALSE(a4.is_commutative(&comm_witness));
    CHECK(a4.table[comm_witness.first][comm_witness.second] !=
          a4.table[comm_witness.second][comm_witness.first]);
    CHECK(a4.is_associative());
    CHECK_FALSE(a8.is_commutative());
    std::array<std::size_t, 3> assoc_witness{};
    CHECK_FALSE(a8.is_associative(&assoc_witness));

    CHECK_THROWS_AS(double_algebra(a8, one), std::invalid_argument);
    CHECK_THROWS_AS(double_algebra(a4, q.zero()), std::invalid_argument);
}

TEST_CASE("doubling norm identity on basis pairs") {
    FieldSpec q = FieldSpec::rationals();
    for (long av : {1L, 2L, -3L}) {
        Scalar alpha = q.scalar(av);
        StructureAlgebra d = double_algebra(ground_field_algebra(q), q.one());
        StructureAlgebra dd = double_algebra(d, alpha);
        std::size_t n = d.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec xy = zero_vec(q, 2 * n); // x = b_i plus y a with y = b_j
                xy[i] += q.one();
                xy[n + j] += q.one();
                Vec x = zero_vec(q, n), y = zero_vec(q, n);
                x[i] = q.one();
                y[j] = q.one();
                CHECK(dd.norm(xy) == d.norm(x) - alpha * d.norm(y));
            }
    }
}

TEST_CASE("doubled split quaternions match the concrete octonions as split composition algebras") {
    FieldSpec q = FieldSpec::rationals();
    StructureAlgebra m2 = split_quaternion_algebra(q);
    CHECK(is_composition_algebra(m2).ok);
    CHECK(m2.is_associative());
    CHECK_FALSE(m2.is_commutative());

    StructureAlgebra doubled = double_algebra(m2, q.one());
    StructureAlgebra oct = octonion_structure(q);
    CHECK(doubled.dim() == 8);
    CHECK(is_composition_algebra(doubled).ok);
    CHECK(is_composition_algebra(oct).ok);
    // both norm forms are isotropic (split), witnessed by null basis vectors
    bool doubled_null = false, oct_null = false;
    for (std::size_t i = 0; i < 8; ++i) {
        doubled_null = doubled_null || doubled.basis_norms[i].is_zero();
        oct_null = oct_null || oct.basis_norms[i].is_zero();
    }
    CHECK(doubled_null);
    CHECK(oct_null);
}

TEST_CASE("corrupting one product entry breaks the composition law with a witness") {
    FieldSpec q = FieldSpec::rationals();
    StructureAlgebra oct = octonion_structure(q);
    oct.table[1][2][0] += q.one();
    CompositionCertificate cert = is_composition_algebra(oct);
    CHECK_FALSE(cert.ok);
    CHECK(cert.witness.has_value());
}

TEST_CASE("orthogonal complements") {
    FieldSpec q = FieldSpec::rationals();
    // D = (M_2, 0): complement is the second factor
    SubalgebraBasis d{q, {}};
    for (std::size_t i = 0; i < 4; ++i) {
        Vec v = zero_vec(q, 8);
        v[i] = q.one();
        d.vectors.push_back(v);
    }
    std::vector<Vec> comp = orthogonal_complement(d);
    CHECK(comp.size() == 4);
    for (const Vec& v : comp) {
        for (std::size_t i = 0; i < 4; ++i) CHECK(v[i].is_zero());
        for (const Vec& w : d.vectors)
            CHECK(bilinear(oct_from_coords(q, v), oct_from_coords(q, w)).is_zero());
    }

    StructureAlgebra oct = octonion_structure(q);
    std::vector<Vec> whole;
    for (std::size_t i = 0; i < 8; ++i) {
        Vec v = zero_vec(q, 8);
        v[i] = q.one();
        whole.push_back(v);
    }
    CHECK(orthogonal_complement_in(oct, whole).empty());

    // fixed algebra of s * t(1,-1): complement vectors orthogonal to all of D
    LinearMap st = compose(s_element(q), torus_element(q, q.one(), q.scalar(-1)));
    SubalgebraBasis fixed = fixed_subalgebra(st);
    std::vector<Vec> fixed_comp = orthogonal_complement(fixed);
    CHECK(fixed_comp.size() == 4);
    for (const Vec& v : fixed_comp)
        for (const Vec& w : fixed.vectors)
            CHECK(bilinear(oct_from_coords(q, v), oct_from_coords(q, w)).is_zero());

    StructureAlgebra degenerate = oct;
    degenerate.gram = zero_mat(q, 8, 8);
    CHECK_THROWS_AS(orthogonal_complement_in(degenerate, {whole[0]}), std::domain_error);
}

TEST_CASE("explicit zero-divisor identities hold by direct multiplication") {
    FieldSpec q = FieldSpec::rationals();
    Octonion e = oct_identity(q);
    Octonion zero = oct_zero(q);

    // fixed algebra of t(1,-1): (b - a)(e + ab) = 0
    {
        Octonion a = parse_octonion(q, "[[0,0],[0,0]];[[0,1],[-1,0]]");
        Octonion b = parse_octonion(q, "[[0,0],[0,0]];[[0,1],[1,0]]");
        Octonion ab = oct_mul(a, b);
        CHECK(ab == parse_octonion(q, "[[1,0],[0,-1]];[[0,0],[0,0]]"));
        CHECK(oct_mul(oct_sub(b, a), oct_add(e, ab)) == zero);
    }
    // fixed algebra of t(-1,1): (ab + b)(e + a) = 0
    {
        Octonion a = parse_octonion(q, "[[1,0],[0,-1]];[[0,0],[0,0]]");
        Octonion b = parse_octonion(q, "[[0,0],[0,0]];[[1,0],[0,1]]");
        Octonion ab = oct_mul(a, b);
        CHECK(oct_mul(oct_add(ab, b), oct_add(e, a)) == zero);
    }
    // fixed algebra of s: (b + ab)(e + a + b + ab) = 0
    {
        Octonion a = parse_octonion(q, "[[0,1],[1,0]];[[0,0],[0,0]]");
        Octonion b = parse_octonion(q, "[[0,0],[0,0]];[[1,0],[0,1]]");
        Octonion ab = oct_mul(a, b);
        CHECK(oct_mul(oct_add(b, ab), oct_add(oct_add(e, a), oct_add(b, ab))) == zero);
    }
}

TEST_CASE("find_zero_divisor across fields") {
    for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime_field(5),
                                   FieldSpec::padic(3), FieldSpec::complexes()}) {
        LinearMap t = torus_element(field, field.one(), field.scalar(-1));
        SubalgebraBasis d = fixed_subalgebra(t);
        auto pair = find_zero_divisor(d);
        REQUIRE(pair.has_value());
        Octonion u = oct_from_coords(field, pair->first);
        Octonion w = oct_from_coords(field, pair->second);
        CHECK_FALSE(vec_is_zero(pair->first));
        CHECK_FALSE(vec_is_zero(pair->second));
        CHECK(oct_mul(u, w) == oct_zero(field));
    }

    // fixed algebra of s over F_7: split, witness by exhaustive search
    {
        FieldSpec f7 = FieldSpec::prime_field(7);
        SubalgebraBasis d = fixed_subalgebra(s_element(f7));
        auto pair = find_zero_divisor(d);
        REQUIRE(pair.has_value());
        CHECK(oct_mul(oct_from_coords(f7, pair->first), oct_from_coords(f7, pair->second)) ==
              oct_zero(f7));
    }

    // fixed algebra of s*t(1,-1) over formal R: a division algebra, no zero divisors
    {
        FieldSpec r = FieldSpec::reals();
        LinearMap st = compose(s_element(r), torus_element(r, r.one(), r.scalar(-1)));
        CHECK_FALSE(find_zero_divisor(fixed_subalgebra(st)).has_value());
    }

    // same algebra over Q_5 is split (symbols say so) but its rational points
    // form a division algebra: the witness search reports the obstruction
    {
        FieldSpec q5 = FieldSpec::padic(5);
        LinearMap st = compose(s_element(q5), torus_element(q5, q5.one(), q5.scalar(-1)));
        SubalgebraBasis d = fixed_subalgebra(st);
        CHECK(quaternion_is_split(q5.scalar(-1), q5.scalar(-1), q5).split);
        CHECK_THROWS_AS(find_zero_divisor(d), std::runtime_error);
    }

    SubalgebraBasis not_quaternion{FieldSpec::rationals(),
                                   {oct_coords(oct_identity(FieldSpec::rationals()))}};
    CHECK_THROWS_AS(find_zero_divisor(not_quaternion), std::invalid_argument);
}

TEST_CASE("structure algebra JSON round trip") {
    FieldSpec q = FieldSpec::rationals();
    StructureAlgebra m2 = split_quaternion_algebra(q);
    Json j = structure_to_json(m2);
    StructureAlgebra back = structure_from_json(j, q);
    CHECK(back.basis == m2.basis);
    CHECK(structure_to_json(back) == j);
    CHECK(is_composition_algebra(back).ok);

    // doubled algebra round trips too
    StructureAlgebra d8 = double_algebra(split_quaternion_algebra(q), q.scalar(-2));
    CHECK(structure_to_json(structure_from_json(structure_to_json(d8), q)) ==
          structure_to_json(d8));
}

TEST_CASE("extracted subalgebras carry a full structure table") {
    FieldSpec q = FieldSpec::rationals();
    SubalgebraBasis d = fixed_subalgebra(s_element(q));
    StructureAlgebra alg = subalgebra_structure(d);
    CHECK(alg.dim() == 4);
    CHECK(is_composition_algebra(alg).ok);
    CHECK(alg.is_associative());
    CHECK_FALSE(alg.is_commutative());
    // table entries reproduce the ambient products
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Octonion prod = oct_mul(oct_from_coords(q, d.vectors[i]),
                                    oct_from_coords(q, d.vectors[j]));
            Vec rebuilt = zero_vec(q, 8);
            for (std::size_t t = 0; t < 4; ++t)
                rebuilt = vec_add(rebuilt, vec_scale(alg.table[i][j][t], d.vectors[t]));
            CHECK(oct_coords(prod) == rebuilt);
        }
}

TEST_CASE("subalgebra closure detection") {
    FieldSpec q = FieldSpec::rationals();
    SubalgebraBasis bad{q, {coords(q, "[[1,0],[0,1]];[[0,0],[0,0]]"),
                            coords(q, "[[0,1],[0,0]];[[0,0],[0,0]]"),
                            coords(q, "[[0,0],[0,0]];[[0,1],[0,0]]"),
                            coords(q, "[[0,0],[0,0]];[[0,0],[1,0]]")}};
    std::pair<std::size_t, std::size_t> witness;
    CHECK_FALSE(subalgebra_is_closed(bad, &witness));
}
