#ifndef HOPFSEQ_FORMULA_ORACLE_HPP
#define HOPFSEQ_FORMULA_ORACLE_HPP

#include "hopfseq/sequence.hpp"

namespace hopfseq {

// Literal enumeration formulas behind the four transforms, evaluated by full
// composition/partition sums. Exponential in n and intended for n <= 12; the
// production transforms are the O(N^2) recurrences in transforms.hpp and are
// tested against these.
enum class OracleKind {
    h_from_a, // h_n = sum over compositions b of n of prod a_{b_i}
    a_from_h, // a_n = sum over compositions b of (-1)^{len(b)-1} prod h_{b_i}
    p_from_h, // p_n = sum_{d|n} sum over compositions b of d of
              //       d mu(n/d) (-1)^{len(b)-1} prod h_{b_i} / (n len(b))
    h_from_p, // h_n = sum over partitions l of n of
              //       prod_d binom(p_d + m_d(l) - 1, m_d(l))
};

Rat direct_formula_oracle(OracleKind kind, const Sequence& input, int n);

} // namespace hopfseq

#endif
