#pragma once

#include "octo/automorphism.hpp"

namespace octo {

/// Expected class counts disagree with the classification theorem: the
/// regression gate for the expected classification.  Not a plain invalid_argument.
struct ClassCountMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NamedAutomorphism {
    std::string label;
    LinearMap map;
};

/// An isomorphy class of involutions, fingerprinted by the split/division
/// invariant of its fixed quaternion subalgebra.
struct InvolutionClass {
    std::string label;
    LinearMap representative;
    QuaternionInvariant invariant;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ClassificationReport {
    FieldSpec field = FieldSpec::rationals();
    std::vector<InvolutionClass> classes;
    std::vector<std::vector<std::string>> class_members; // labels merged per class
    bool q_non_exhaustive = false; // over Q the list is provably incomplete
    std::vector<CheckResult> checks;

    std::size_t count() const { return classes.size(); }
    bool all_checks_pass() const;
};

struct ClassifyOptions {
    std::vector<unsigned long> q_primes{3, 7, 11}; // 3 mod 4, used over Q only
    int probe_samples = 0;                         // fixed-point-group probes per class
    std::uint64_t seed = 0;
};

/// fixed_subalgebra -> quaternion_presentation -> quaternion_is_split.
InvolutionClass classify_involution(const LinearMap& m, const std::string& label);

bool same_class(const InvolutionClass& c1, const InvolutionClass& c2);

/// t(1,-1), t(-1,1), t(-1,-1), s everywhere; s*t(1,-1) over R, Q, Q2;
/// s*t(-Np, -p/Np) over Q_p (p odd); one s_p per configured
/// prime over Q.
std::vector<NamedAutomorphism> standard_representatives(
    const FieldSpec& field, const std::vector<unsigned long>& q_primes);

/// Classify every representative, merge by isomorphy, and gate the counts
/// against the classification theorem (throws ClassCountMismatch on
/// mismatch).  Probes run when options.probe_samples > 0.
ClassificationReport classify_field(const FieldSpec& field, const ClassifyOptions& options);

struct ProbeReport {
    std::string label;
    std::string kind; // "split" or "division"
    int samples = 0;
    bool automorphisms_pass = false;
    bool commutation_pass = false;
    bool homomorphism_pass = false;
    bool kernel_pass = false;
    std::string detail;
    bool pass() const {
        return automorphisms_pass && commutation_pass && homomorphism_pass && kernel_pass;
    }
};

/// Samples stabilizer elements s_dp of the fixed subalgebra: each must be a
/// verified automorphism commuting with the representative; composites must
/// match the directly constructed product parameters; the kernel hits must
/// be exactly the scalar pairs (alpha e, e).
ProbeReport fixed_group_probe(const InvolutionClass& c, int samples, std::uint64_t seed);

struct VerifyPaperReport {
    std::vector<ClassificationReport> field_reports;
    std::vector<CheckResult> suites;
    bool pass = false;
};

/// The full field matrix {R, C, Q, Qp:2,3,5,7, Fp:3,5,7,11} plus the
/// cross-cutting invariant suites.
VerifyPaperReport run_verify_paper(const ClassifyOptions& options);

} // namespace octo
