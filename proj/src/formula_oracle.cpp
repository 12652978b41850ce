#include "hopfseq/formula_oracle.hpp"

#include "hopfseq/compositions.hpp"
#include "hopfseq/errors.hpp"

namespace hopfseq {

namespace {

Rat product_over_parts(const Sequence& c, const Composition& beta) {
    Rat prod(1);
    for (int part : beta.parts) prod *= c.at(part);
    return prod;
}

Rat composition_sum(const Sequence& c, int n, bool alternating) {
    Rat sum(0);
    for (const Composition& beta : enumerate_compositions(n)) {
        Rat term = product_over_parts(c, beta);
        if (alternating && beta.length() % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

} // namespace

Rat direct_formula_oracle(OracleKind kind, const Sequence& input, int n) {
    if (n < 1 || n > input.degree())
        throw Error(Errc::invalid_argument,
                    "oracle degree " + std::to_string(n) + " exceeds the input prefix");
    switch (kind) {
        case OracleKind::h_from_a:
            return composition_sum(input, n, /*alternating=*/false);
        case OracleKind::a_from_h:
            return composition_sum(input, n, /*alternating=*/true);
        case OracleKind::p_from_h: {
            Rat sum(0);
            for (int d : divisors(n)) {
                int mu = mobius(n / d);
                if (mu == 0) continue;
                for (const Composition& beta : enumerate_compositions(d)) {
                    Rat term = product_over_parts(input, beta);
                    if (beta.length() % 2 == 0) term = -term;
                    sum += Rat(d * mu) * term / Rat(n * beta.length());
                }
            }
            return sum;
        }
        case OracleKind::h_from_p: {
            Rat sum(0);
            for (const Partition& lambda : enumerate_partitions(n)) {
                Rat prod(1);
                for (int d = 1; d <= n && prod != 0; ++d) {
                    int m = lambda.multiplicity(d);
                    if (m == 0) continue;
                    prod *= binomial(input.at(d) + Rat(m - 1), static_cast<unsigned long>(m));
                }
                sum += prod;
            }
            return sum;
        }
    }
    throw Error(Errc::invalid_argument, "unknown oracle kind");
}

} // namespace hopfseq
