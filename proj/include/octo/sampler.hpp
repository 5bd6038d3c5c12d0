#pragma once

#include "octo/field.hpp"

#include <random>

namespace octo {

/// Deterministic sampler.  mt19937_64 is fully pinned by the standard and we
/// avoid std distributions, so identical seeds give identical streams on
/// every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small exact scalar; nonzero on request.  Characteristic 0: numerator
    /// in [-bound, bound], denominator in [1, den_bound].  F_p: residue.
    Scalar scalar(const FieldSpec& field, long bound, long den_bound, bool nonzero) {
        for (;;) {
            Scalar s = field.zero();
            if (field.modulus() != 0) {
                s = field.scalar(range(0, static_cast<long>(field.modulus()) - 1));
            } else {
                s = field.scalar(range(-bound, bound), range(1, den_bound));
            }
            if (!nonzero || !s.is_zero()) return s;
        }
    }

    Vec vec(const FieldSpec& field, std::size_t n, long bound, long den_bound) {
        Vec v = zero_vec(field, n);
        for (auto& x : v) x = scalar(field, bound, den_bound, false);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace octo
