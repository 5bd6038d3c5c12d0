#include "octo/automorphism.hpp"

namespace octo {

LinearMap LinearMap::from_matrix(const FieldSpec& field, Mat m) {
    if (m.size() != 8) throw std::invalid_argument("linear map needs an 8x8 matrix");
    for (const auto& row : m)
        if (row.size() != 8) throw std::invalid_argument("linear map needs an 8x8 matrix");
    return LinearMap{field, std::move(m), false};
}

LinearMap identity_map(const FieldSpec& field) {
    return LinearMap{field, mat_identity(field, 8), true};
}

LinearMap torus_element(const FieldSpec& field, const Scalar& beta, const Scalar& gamma) {
    if (beta.is_zero() || gamma.is_zero())
        throw std::invalid_argument("torus parameters must be nonzero");
    Mat m = zero_mat(field, 8, 8);
    Scalar one = field.one();
    Vec diag = {one,           beta * gamma, (beta * gamma).inverse(), one,
                gamma.inverse(), beta,        beta.inverse(),           gamma};
    for (std::size_t i = 0; i < 8; ++i) m[i][i] = diag[i];
    return verify_automorphism(LinearMap{field, std::move(m), false});
}

LinearMap s_element(const FieldSpec& field) {
    // two anti-diagonal identity blocks: swaps 0<->3, 1<->2, 4<->7, 5<->6
    Mat m = zero_mat(field, 8, 8);
    const std::size_t image[8] = {3, 2, 1, 0, 7, 6, 5, 4};
    for (std::size_t j = 0; j < 8; ++j) m[image[j]][j] = field.one();
    return verify_automorphism(LinearMap{field, std::move(m), false});
}

LinearMap sp_element(const FieldSpec& field, unsigned long p) {
    Scalar ps = field.scalar(static_cast<long>(p));
    if (ps.is_zero()) throw std::invalid_argument("p vanishes in this field");
    return verify_automorphism(
        compose(s_element(field), torus_element(field, field.one(), ps.inverse())));
}

AutomorphismCheck is_automorphism(const LinearMap& m) {
    const FieldSpec& field = m.field;
    try {
        (void)mat_inverse(m.matrix, field);
    } catch (const std::domain_error&) {
        return {false, "matrix is singular", std::nullopt};
    }
    Vec e = oct_coords(oct_identity(field));
    if (m.apply(e) != e) return {false, "does not fix the identity", std::nullopt};
    std::vector<Octonion> images;
    for (std::size_t i = 0; i < 8; ++i)
        images.push_back(oct_from_coords(field, m.apply(oct_coords(oct_basis_element(field, i)))));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Octonion lhs = oct_from_coords(
                field,
                m.apply(oct_coords(oct_mul(oct_basis_element(field, i), oct_basis_element(field, j)))));
            if (lhs != oct_mul(images[i], images[j]))
                return {false, "multiplicativity fails on a basis pair", std::make_pair(i, j)};
        }
    return {true, "", std::nullopt};
}

LinearMap verify_automorphism(LinearMap m) {
    AutomorphismCheck check = is_automorphism(m);
    if (!check.ok) throw std::invalid_argument("not an automorphism: " + check.reason);
    m.verified_automorphism = true;
    return m;
}

LinearMap compose(const LinearMap& m1, const LinearMap& m2) {
    if (m1.field != m2.field) throw std::invalid_argument("field mismatch");
    return LinearMap{m1.field, mat_mul(m1.matrix, m2.matrix),
                     m1.verified_automorphism && m2.verified_automorphism};
}

LinearMap inverse(const LinearMap& m) {
    return LinearMap{m.field, mat_inverse(m.matrix, m.field), m.verified_automorphism};
}

std::optional<int> order(const LinearMap& m, int cap) {
    Mat id = mat_identity(m.field, 8);
    Mat acc = m.matrix;
    for (int n = 1; n <= cap; ++n) {
        if (mat_equal(acc, id)) return n;
        acc = mat_mul(acc, m.matrix);
    }
    return std::nullopt;
}

std::vector<TorusElement> involutive_torus_elements(const FieldSpec& field) {
    // beta^2 = gamma^2 = (beta gamma)^2 = 1 and (beta, gamma) != (1, 1);
    // char != 2, so the square roots of 1 are exactly +-1
    std::vector<TorusElement> out;
    for (long b : {1L, -1L})
        for (long g : {1L, -1L}) {
            if (b == 1 && g == 1) continue;
            TorusElement t{field.scalar(b), field.scalar(g)};
            LinearMap m = torus_element(field, t.beta, t.gamma);
            if (order(m, 2) != std::optional<int>(2))
                throw std::logic_error("involutive torus candidate has wrong order");
            out.push_back(t);
        }
    return out;
}

SubalgebraBasis fixed_subalgebra(const LinearMap& t) {
    if (!t.verified_automorphism && !is_automorphism(t).ok)
        throw std::invalid_argument("fixed_subalgebra needs a verified automorphism");
    auto ord = order(t, 2);
    if (!ord) throw std::invalid_argument("fixed_subalgebra needs an element of order <= 2");
    Mat diff = t.matrix;
    for (std::size_t i = 0; i < 8; ++i) diff[i][i] -= t.field.one();
    SubalgebraBasis d{t.field, kernel_basis(diff, t.field)};
    std::size_t expected = (*ord == 1) ? 8 : 4;
    if (d.vectors.size() != expected)
        throw std::logic_error("fixed subspace has unexpected dimension " +
                               std::to_string(d.vectors.size()));
    std::pair<std::size_t, std::size_t> w;
    if (!subalgebra_is_closed(d, &w))
        throw std::logic_error("fixed eigenspace is not multiplicatively closed");
    if (!subalgebra_contains_identity(d))
        throw std::logic_error("fixed eigenspace does not contain the identity");
    return d;
}

std::vector<Vec> eigenspace(const LinearMap& m, const Scalar& lambda) {
    Mat diff = m.matrix;
    for (std::size_t i = 0; i < 8; ++i) diff[i][i] -= lambda;
    return kernel_basis(diff, m.field);
}

QuaternionPresentation quaternion_presentation(const SubalgebraBasis& d) {
    const FieldSpec& field = d.field;
    if (d.dim() != 4 || !subalgebra_is_closed(d) || !subalgebra_contains_identity(d))
        throw std::invalid_argument("presentation needs a quaternion subalgebra");
    PureFrame f = pure_anisotropic_frame(d);
    Octonion a = oct_from_coords(field, f.a), b = oct_from_coords(field, f.b);
    Octonion e = oct_identity(field);
    QuaternionPresentation pres{oct_coords(e), f.a, f.b, oct_coords(oct_mul(a, b)),
                                f.alpha, f.beta};
    // invariant scan: orthogonality, squares, anticommutation, span
    auto expect = [](bool cond, const char* what) {
        if (!cond) throw std::logic_error(std::string("presentation invariant failed: ") + what);
    };
    expect(bilinear(a, e).is_zero(), "a not orthogonal to e");
    expect(bilinear(b, e).is_zero(), "b not orthogonal to e");
    expect(bilinear(a, b).is_zero(), "a not orthogonal to b");
    expect(oct_mul(a, a) == oct_scale(pres.alpha, e), "a^2 != alpha e");
    expect(oct_mul(b, b) == oct_scale(pres.beta, e), "b^2 != beta e");
    expect(oct_mul(a, b) == oct_neg(oct_mul(b, a)), "ab != -ba");
    std::vector<Vec> frame = {pres.e, pres.a, pres.b, pres.ab};
    for (const auto& v : d.vectors)
        expect(in_span(frame, v, field), "frame does not span the subalgebra");
    return pres;
}

LinearMap aut_fixing_subalgebra(const Vec& d_elem, const Vec& p_elem,
                                const SubalgebraBasis& D, const Vec& a) {
    const FieldSpec& field = D.field;
    if (D.dim() != 4) throw std::invalid_argument("quaternion subalgebra expected");
    if (!in_span(D.vectors, d_elem, field) || !in_span(D.vectors, p_elem, field))
        throw std::invalid_argument("d and p must lie in the subalgebra");
    Octonion od = oct_from_coords(field, d_elem), op = oct_from_coords(field, p_elem);
    Octonion oa = oct_from_coords(field, a), e = oct_identity(field);
    if (oct_norm(od).is_zero()) throw std::invalid_argument("d must be invertible (N(d) != 0)");
    if (oct_norm(op) != field.one()) throw std::invalid_argument("p must have norm 1");
    if (oct_norm(oa).is_zero()) throw std::invalid_argument("a must satisfy N(a) != 0");
    for (const auto& v : D.vectors)
        if (!bilinear(oa, oct_from_coords(field, v)).is_zero())
            throw std::invalid_argument("a must lie in the orthogonal complement of D");

    // d^-1 = conj(d) / N(d); D is associative so products below are unambiguous
    Octonion dinv = oct_scale(oct_norm(od).inverse(),
                              oct_sub(oct_scale(bilinear(od, e), e), od));
    // decomposition basis d_i, d_i * a of C = D + Da
    std::vector<Vec> split_basis = D.vectors;
    for (const auto& v : D.vectors)
        split_basis.push_back(oct_coords(oct_mul(oct_from_coords(field, v), oa)));

    Mat out = zero_mat(field, 8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
        auto coords = coordinates_in_span(split_basis, oct_coords(oct_basis_element(field, j)),
                                          field);
        if (!coords) throw std::logic_error("C = D + Da decomposition failed");
        Octonion x = oct_zero(field), y = oct_zero(field);
        for (std::size_t i = 0; i < 4; ++i) {
            x = oct_add(x, oct_scale((*coords)[i], oct_from_coords(field, D.vectors[i])));
            y = oct_add(y, oct_scale((*coords)[4 + i], oct_from_coords(field, D.vectors[i])));
        }
        Octonion x_img = oct_mul(oct_mul(od, x), dinv);
        Octonion y_img = oct_mul(op, oct_mul(oct_mul(od, y), dinv));
        Vec img = oct_coords(oct_add(x_img, oct_mul(y_img, oa)));
        for (std::size_t i = 0; i < 8; ++i) out[i][j] = img[i];
    }
    return verify_automorphism(LinearMap{field, std::move(out), false});
}

bool commutes_with(const LinearMap& f, const LinearMap& t) {
    if (f.field != t.field) throw std::invalid_argument("field mismatch");
    return mat_equal(mat_mul(f.matrix, t.matrix), mat_mul(t.matrix, f.matrix));
}

bool leaves_invariant(const LinearMap& f, const SubalgebraBasis& D) {
    for (const auto& v : D.vectors)
        if (!in_span(D.vectors, f.apply(v), f.field)) return false;
    return true;
}

} // namespace octo
