#ifndef HOPFSEQ_EMBED_HPP
#define HOPFSEQ_EMBED_HPP

#include "hopfseq/freealg.hpp"
#include "hopfseq/sequence.hpp"

namespace hopfseq {

struct Embedding {
    GradedAlphabet host_alphabet;
    // generators[n-1]: the chosen degree-n primitive generators, b_n of them.
    std::vector<std::vector<NcPoly>> generators;
    // Graded dimensions of the subalgebra they generate, equal to
    // invert(target_b) up to max_degree.
    std::vector<long> subalgebra_dims;
};

// Constructs a copy of U(L(target_b)) inside U(L(host_a)) up to max_degree,
// building a tower of free Lie subalgebras degree by degree: at degree n the
// derived subalgebra of everything chosen so far is spanned inside H_n, and
// b_n primitives independent of it are selected (first elimination pivots
// win, so the output is reproducible). Requires the primitive-count
// domination a_to_p(target_b) <= a_to_p(host_a); otherwise NoEmbeddingExists
// reports the first failing degree.
Embedding embed_subalgebra(const Sequence& host_a, const Sequence& target_b, int max_degree);

} // namespace hopfseq

#endif
