#ifndef HOPFSEQ_CLASSIFY_HPP
#define HOPFSEQ_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfseq/sequence.hpp"

namespace hopfseq {

// Outcome of a sequence-level decision procedure. Answers about infinite
// sequences are necessarily truncated: "yes" means the defining condition
// holds for all n up to effective_degree.
struct Certificate {
    bool yes = false;
    int effective_degree = 0;
    std::vector<std::pair<std::string, Sequence>> witnesses;
    std::optional<int> failing_index;
    std::string reason;

    const Sequence& witness(const std::string& name) const;
    // One-line JSON rendering: {answer, effective_degree, witnesses, failing_index, reason}.
    std::string json() const;
    std::string text() const;
};

// Is h the dimension sequence of a free graded connected cocommutative Hopf
// algebra? Yes iff a = inverti(h) is nonnegative-integral; a is then the
// generator-count sequence of the canonical representative U(L(a)).
// Non-integral h raises InvalidDimensionSequence.
Certificate realizable(const Sequence& h);

// Is p the primitive-dimension sequence of such a Hopf algebra?
// Yes iff a = p_to_a(p) is nonnegative-integral.
Certificate primitive_realizable(const Sequence& p);

// Does a surjective homomorphism H -> K exist, given dimension sequences?
// Yes iff inverti(hH) >= inverti(hK) componentwise on the common prefix.
// Unrealizable inputs raise NotAnFGCCHA naming the offending argument.
Certificate surjection_exists(const Sequence& hH, const Sequence& hK);

// Does H contain a Hopf subalgebra with dimension sequence hK?
// Yes iff b = inverti(hK) is nonnegative-integral and a_to_p(b) <= euleri(hH)
// on the common prefix.
Certificate subalgebra_exists(const Sequence& hH, const Sequence& hK);

struct SubalgebraEnumeration {
    std::vector<Sequence> sequences; // generator-count sequences b, lexicographic
    bool exhausted = false;          // false when cut off by the limit
};

// All b in N^max_degree with a_to_p(b) <= euleri(hH) up to max_degree, in
// lexicographic order, truncated at limit items. The search is pruned using
// coordinatewise monotonicity of a_to_p on nonnegative sequences (adding a
// generator only adds Lyndon words).
SubalgebraEnumeration enumerate_subalgebra_sequences(const Sequence& hH, int max_degree,
                                                     long limit);

} // namespace hopfseq

#endif
