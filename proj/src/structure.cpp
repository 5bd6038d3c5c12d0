#include "octo/structure.hpp"

#include "octo/linalg.hpp"
#include "octo/sampler.hpp"

#include <array>

namespace octo {

Vec StructureAlgebra::mul(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("dimension mismatch");
    Vec out = zero_vec(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t t = 0; t < n; ++t) out[t] += c * table[i][j][t];
        }
    }
    return out;
}

Scalar StructureAlgebra::norm(const Vec& x) const {
    std::size_t n = dim();
    Scalar acc = field.zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        acc += x[i] * x[i] * basis_norms[i];
        for (std::size_t j = i + 1; j < n; ++j) acc += x[i] * x[j] * gram[i][j];
    }
    return acc;
}

Scalar StructureAlgebra::bilinear_form(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    Scalar acc = field.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += x[i] * y[j] * gram[i][j];
    return acc;
}

Vec StructureAlgebra::conj(const Vec& x) const {
    Scalar t = bilinear_form(x, unit);
    return vec_sub(vec_scale(t, unit), x);
}

bool StructureAlgebra::is_commutative(std::pair<std::size_t, std::size_t>* witness) const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (table[i][j] != table[j][i]) {
                if (witness) *witness = {i, j};
                return false;
            }
    return true;
}

bool StructureAlgebra::is_associative(std::array<std::size_t, 3>* witness) const {
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec bi = zero_vec(field, n), bj = zero_vec(field, n), bk = zero_vec(field, n);
                bi[i] = field.one();
                bj[j] = field.one();
                bk[k] = field.one();
                if (mul(mul(bi, bj), bk) != mul(bi, mul(bj, bk))) {
                    if (witness) *witness = {i, j, k};
                    return false;
                }
            }
    return true;
}

StructureAlgebra ground_field_algebra(const FieldSpec& field) {
    StructureAlgebra a;
    a.field = field;
    a.basis = {"e"};
    a.table = {{Vec{field.one()}}};
    a.basis_norms = {field.one()};
    a.gram = {{field.scalar(2)}};
    a.unit = {field.one()};
    return a;
}

namespace {

StructureAlgebra structure_from_octonion_span(const FieldSpec& field,
                                              const std::vector<std::string>& labels,
                                              const std::vector<Vec>& vectors) {
    StructureAlgebra a;
    a.field = field;
    a.basis = labels;
    std::size_t n = vectors.size();
    a.table.assign(n, std::vector<Vec>(n));
    a.basis_norms.resize(n, field.zero());
    a.gram = zero_mat(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Octonion oi = oct_from_coords(field, vectors[i]);
        a.basis_norms[i] = oct_norm(oi);
        for (std::size_t j = 0; j < n; ++j) {
            Octonion oj = oct_from_coords(field, vectors[j]);
            a.gram[i][j] = bilinear(oi, oj);
            Vec prod = oct_coords(oct_mul(oi, oj));
            auto coords = coordinates_in_span(vectors, prod, field);
            if (!coords)
                throw std::runtime_error("span is not multiplicatively closed");
            a.table[i][j] = *coords;
        }
    }
    auto e = coordinates_in_span(vectors, oct_coords(oct_identity(field)), field);
    if (!e) throw std::runtime_error("span does not contain the identity");
    a.unit = *e;
    return a;
}

} // namespace

StructureAlgebra split_quaternion_algebra(const FieldSpec& field) {
    // (M_2(k), 0) sitting inside the octonion pair algebra
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < 4; ++i) {
        Vec v = zero_vec(field, 8);
        v[i] = field.one();
        vectors.push_back(v);
    }
    return structure_from_octonion_span(field, {"E11", "E12", "E21", "E22"}, vectors);
}

StructureAlgebra octonion_structure(const FieldSpec& field) {
    std::vector<Vec> vectors;
    std::vector<std::string> labels = {"(E11,0)", "(E12,0)", "(E21,0)", "(E22,0)",
                                       "(0,E11)", "(0,E12)", "(0,E21)", "(0,E22)"};
    for (std::size_t i = 0; i < 8; ++i) {
        Vec v = zero_vec(field, 8);
        v[i] = field.one();
        vectors.push_back(v);
    }
    return structure_from_octonion_span(field, labels, vectors);
}

StructureAlgebra double_algebra(const StructureAlgebra& d, const Scalar& alpha) {
    std::size_t n = d.dim();
    if (n != 1 && n != 2 && n != 4)
        throw std::invalid_argument("doubling needs dimension 1, 2 or 4 (Hurwitz bound)");
    if (alpha.is_zero()) throw std::invalid_argument("doubling parameter must be nonzero");
    if (!d.is_associative())
        throw std::invalid_argument("doubling needs an associative input algebra");

    const FieldSpec& field = d.field;
    StructureAlgebra out;
    out.field = field;
    const char* gen = n == 1 ? "a" : n == 2 ? "b" : "c";
    out.basis = d.basis;
    for (const auto& l : d.basis) {
        if (l == "e")
            out.basis.push_back(gen);
        else
            out.basis.push_back(l.size() > 1 ? "(" + l + ")" + gen : l + gen);
    }
    std::size_t m = 2 * n;
    out.table.assign(m, std::vector<Vec>(m));
    auto embed = [&](const Vec& x, bool second_half) {
        Vec v = zero_vec(field, m);
        for (std::size_t i = 0; i < n; ++i) v[(second_half ? n : 0) + i] = x[i];
        return v;
    };
    // (x + ya)(u + va) = (xu + alpha conj(v) y) + (vx + y conj(u)) a
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec x = zero_vec(field, n), y = zero_vec(field, n);
            Vec u = zero_vec(field, n), v = zero_vec(field, n);
            (i < n ? x : y)[i % n] = field.one();
            (j < n ? u : v)[j % n] = field.one();
            Vec first = vec_add(d.mul(x, u), vec_scale(alpha, d.mul(d.conj(v), y)));
            Vec second = vec_add(d.mul(v, x), d.mul(y, d.conj(u)));
            out.table[i][j] = vec_add(embed(first, false), embed(second, true));
        }
    out.basis_norms.resize(m, field.zero());
    out.gram = zero_mat(field, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Scalar sign_i = i < n ? field.one() : -alpha;
        out.basis_norms[i] = sign_i * d.basis_norms[i % n];
        for (std::size_t j = 0; j < m; ++j) {
            if ((i < n) != (j < n)) continue; // D and Da are orthogonal
            out.gram[i][j] = sign_i * d.gram[i % n][j % n];
        }
    }
    out.unit = embed(d.unit, false);
    return out;
}

CompositionCertificate is_composition_algebra(const StructureAlgebra& a) {
    std::size_t n = a.dim();
    auto fail = [&](const std::string& law, const Vec& x, const Vec& y) {
        return CompositionCertificate{false, law, std::make_pair(x, y)};
    };
    // unit laws
    for (std::size_t i = 0; i < n; ++i) {
        Vec bi = zero_vec(a.field, n);
        bi[i] = a.field.one();
        if (a.mul(a.unit, bi) != bi || a.mul(bi, a.unit) != bi)
            return fail("unit", a.unit, bi);
    }
    // Gram consistency: symmetry and diagonal = 2N (polarization at x = y)
    for (std::size_t i = 0; i < n; ++i) {
        if (a.gram[i][i] != a.field.scalar(2) * a.basis_norms[i])
            return fail("polarization", a.unit, a.unit);
        for (std::size_t j = 0; j < n; ++j)
            if (a.gram[i][j] != a.gram[j][i]) return fail("polarization", a.unit, a.unit);
    }
    if (mat_det(a.gram, a.field).is_zero())
        return CompositionCertificate{false, "nondegenerate", std::nullopt};
    // composition law on basis pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec bi = zero_vec(a.field, n), bj = zero_vec(a.field, n);
            bi[i] = a.field.one();
            bj[j] = a.field.one();
            if (a.norm(a.mul(bi, bj)) != a.norm(bi) * a.norm(bj))
                return fail("composition", bi, bj);
        }
    // and on 50 pseudo-random combinations (fixed seed: reproducible)
    Sampler rng(0x0c70);
    for (int t = 0; t < 50; ++t) {
        Vec x = rng.vec(a.field, n, 3, 2), y = rng.vec(a.field, n, 3, 2);
        if (a.norm(a.mul(x, y)) != a.norm(x) * a.norm(y)) return fail("composition", x, y);
    }
    return {};
}

bool subalgebra_is_closed(const SubalgebraBasis& d,
                          std::pair<std::size_t, std::size_t>* witness) {
    for (std::size_t i = 0; i < d.vectors.size(); ++i)
        for (std::size_t j = 0; j < d.vectors.size(); ++j) {
            Octonion p = oct_mul(oct_from_coords(d.field, d.vectors[i]),
                                 oct_from_coords(d.field, d.vectors[j]));
            if (!in_span(d.vectors, oct_coords(p), d.field)) {
                if (witness) *witness = {i, j};
                return false;
            }
        }
    return true;
}

bool subalgebra_contains_identity(const SubalgebraBasis& d) {
    return in_span(d.vectors, oct_coords(oct_identity(d.field)), d.field);
}

StructureAlgebra subalgebra_structure(const SubalgebraBasis& d) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d.vectors.size(); ++i) labels.push_back("d" + std::to_string(i));
    return structure_from_octonion_span(d.field, labels, d.vectors);
}

std::vector<Vec> orthogonal_complement(const SubalgebraBasis& d) {
    // rows: v -> <v, d_i> as linear functionals on ambient coordinates
    Mat rows = zero_mat(d.field, d.vectors.size(), 8);
    for (std::size_t i = 0; i < d.vectors.size(); ++i) {
        Octonion di = oct_from_coords(d.field, d.vectors[i]);
        for (std::size_t j = 0; j < 8; ++j)
            rows[i][j] = bilinear(di, oct_basis_element(d.field, j));
    }
    return kernel_basis(rows, d.field);
}

std::vector<Vec> orthogonal_complement_in(const StructureAlgebra& ambient,
                                          const std::vector<Vec>& vectors) {
    if (mat_det(ambient.gram, ambient.field).is_zero())
        throw std::domain_error("ambient bilinear form is degenerate");
    Mat rows = zero_mat(ambient.field, vectors.size(), ambient.dim());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        rows[i] = mat_apply(ambient.gram, vectors[i]);
    return kernel_basis(rows, ambient.field);
}

namespace {

Scalar oct_norm_of(const FieldSpec& field, const Vec& v) {
    return oct_norm(oct_from_coords(field, v));
}

// Candidate combinations: singles, pairwise sums, then the full sum.
std::vector<Vec> search_family(const FieldSpec& field, const std::vector<Vec>& basis) {
    std::vector<Vec> out = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            out.push_back(vec_add(basis[i], basis[j]));
    if (basis.size() > 2) {
        Vec all = zero_vec(field, basis[0].size());
        for (const auto& v : basis) all = vec_add(all, v);
        out.push_back(all);
    }
    return out;
}

} // namespace

std::optional<Vec> first_anisotropic_combination(const FieldSpec& field,
                                                 const std::vector<Vec>& vectors) {
    for (const Vec& cand : search_family(field, vectors))
        if (!oct_norm(oct_from_coords(field, cand)).is_zero()) return cand;
    return std::nullopt;
}

PureFrame pure_anisotropic_frame(const SubalgebraBasis& d) {
    const FieldSpec& field = d.field;
    if (d.dim() != 4) throw std::invalid_argument("quaternion subalgebra expected");
    Octonion e = oct_identity(field);

    // coefficients c with sum c_i d_i orthogonal to e
    auto constrained_vectors = [&](const std::vector<Vec>& orth_to) {
        Mat rows = zero_mat(field, orth_to.size(), d.dim());
        for (std::size_t r = 0; r < orth_to.size(); ++r) {
            Octonion target = oct_from_coords(field, orth_to[r]);
            for (std::size_t j = 0; j < d.dim(); ++j)
                rows[r][j] = bilinear(oct_from_coords(field, d.vectors[j]), target);
        }
        std::vector<Vec> coeffs = kernel_basis(rows, field);
        std::vector<Vec> out;
        for (const auto& c : coeffs) {
            Vec v = zero_vec(field, 8);
            for (std::size_t j = 0; j < d.dim(); ++j)
                v = vec_add(v, vec_scale(c[j], d.vectors[j]));
            out.push_back(v);
        }
        return out;
    };

    std::vector<Vec> pure = constrained_vectors({oct_coords(e)});
    PureFrame frame{zero_vec(field, 8), zero_vec(field, 8), field.zero(), field.zero()};
    auto a = first_anisotropic_combination(field, pure);
    if (!a) throw std::runtime_error("presentation search exhausted (no anisotropic a)");
    frame.a = *a;

    auto b = first_anisotropic_combination(field, constrained_vectors({oct_coords(e), frame.a}));
    if (!b) throw std::runtime_error("presentation search exhausted (no anisotropic b)");
    frame.b = *b;
    frame.alpha = -oct_norm_of(field, frame.a);
    frame.beta = -oct_norm_of(field, frame.b);
    return frame;
}

namespace {

std::optional<std::pair<Vec, Vec>> zero_divisor_from_isotropic(const FieldSpec& field,
                                                               const Vec& x) {
    Octonion q = oct_from_coords(field, x);
    Octonion qbar = oct_conj(q);
    Vec u = oct_coords(q), w = oct_coords(qbar);
    if (vec_is_zero(u) || vec_is_zero(w)) return std::nullopt;
    if (!vec_is_zero(oct_coords(oct_mul(q, qbar))))
        throw std::logic_error("zero-divisor construction failed");
    return std::make_pair(u, w);
}

// u, w from a pure vector v with v^2 = s^2 e: (v - s e)(v + s e) = 0.
std::optional<std::pair<Vec, Vec>> split_root_pair(const FieldSpec& field, const Vec& v,
                                                   const Scalar& square) {
    Scalar root = field.zero();
    if (!square.sqrt_exact(root)) return std::nullopt;
    Octonion ov = oct_from_coords(field, v);
    Octonion e = oct_identity(field);
    Octonion u = oct_sub(ov, oct_scale(root, e));
    Octonion w = oct_add(ov, oct_scale(root, e));
    if (vec_is_zero(oct_coords(u)) || vec_is_zero(oct_coords(w))) return std::nullopt;
    if (!vec_is_zero(oct_coords(oct_mul(u, w))))
        throw std::logic_error("zero-divisor construction failed");
    return std::make_pair(oct_coords(u), oct_coords(w));
}

} // namespace

std::optional<std::pair<Vec, Vec>> find_zero_divisor(const SubalgebraBasis& d) {
    const FieldSpec& field = d.field;
    if (d.dim() != 4 || !subalgebra_is_closed(d) || !subalgebra_contains_identity(d))
        throw std::invalid_argument("zero-divisor search needs a quaternion subalgebra");

    if (field.kind() == FieldKind::PrimeField) {
        // exhaustive projective scan of the restricted norm form
        unsigned long p = field.prime();
        for (std::size_t lead = 0; lead < 4; ++lead) {
            unsigned long count = 1;
            for (std::size_t i = lead + 1; i < 4; ++i) count *= p;
            for (unsigned long code = 0; code < count; ++code) {
                Vec coeff = zero_vec(field, 4);
                coeff[lead] = field.one();
                unsigned long rest = code;
                for (std::size_t i = lead + 1; i < 4; ++i) {
                    coeff[i] = field.scalar(static_cast<long>(rest % p));
                    rest /= p;
                }
                Vec x = zero_vec(field, 8);
                for (std::size_t i = 0; i < 4; ++i)
                    x = vec_add(x, vec_scale(coeff[i], d.vectors[i]));
                if (oct_norm(oct_from_coords(field, x)).is_zero())
                    if (auto pair = zero_divisor_from_isotropic(field, x)) return pair;
            }
        }
        return std::nullopt;
    }

    PureFrame f = pure_anisotropic_frame(d);
    QuaternionInvariant inv = quaternion_is_split(f.alpha, f.beta, field);
    if (!inv.split) return std::nullopt;

    Octonion a = oct_from_coords(field, f.a), b = oct_from_coords(field, f.b);
    Vec ab = oct_coords(oct_mul(a, b));
    if (auto pair = split_root_pair(field, f.a, f.alpha)) return pair;
    if (auto pair = split_root_pair(field, f.b, f.beta)) return pair;
    if (auto pair = split_root_pair(field, ab, -(f.alpha * f.beta))) return pair;

    // bounded rational conic search: x^2 - alpha y^2 = beta (and swapped)
    const long H = 40;
    for (int swap = 0; swap < 2; ++swap) {
        Scalar al = swap ? f.beta : f.alpha, be = swap ? f.alpha : f.beta;
        const Vec& av = swap ? f.b : f.a;
        const Vec& bv = swap ? f.a : f.b;
        for (long den = 1; den <= H; ++den)
            for (long xn = -H; xn <= H; ++xn)
                for (long yn = -H; yn <= H; ++yn) {
                    Scalar x = field.scalar(xn, den), y = field.scalar(yn, den);
                    if (x * x - al * y * y != be) continue;
                    Octonion q = oct_add(
                        oct_add(oct_scale(x, oct_identity(field)),
                                oct_scale(y, oct_from_coords(field, av))),
                        oct_from_coords(field, bv));
                    if (auto pair = zero_divisor_from_isotropic(field, oct_coords(q)))
                        return pair;
                }
    }
    throw std::runtime_error(
        "zero-divisor witness search exhausted: split algebra admits no rational-coordinate "
        "zero divisor in the searched range");
}

} // namespace octo
