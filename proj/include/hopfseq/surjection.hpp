#ifndef HOPFSEQ_SURJECTION_HPP
#define HOPFSEQ_SURJECTION_HPP

#include <map>

#include "hopfseq/freealg.hpp"

namespace hopfseq {

// The surjective Hopf algebra homomorphism H -> K determined by ordered
// primitive generating sets A of H and B of K with |A^(n)| >= |B^(n)|:
//
//   A^(n)_i  |->  B^(n)_i  for i <= |B^(n)|,   0 otherwise,
//
// extended as an algebra morphism. Inputs in the word basis of H are first
// rewritten in the A-monomial basis by exact elimination, then mapped.
class Surjection {
  public:
    // Throws NoSurjectionExists when the counts condition fails, and
    // NotAGeneratingSet when A-monomials do not span some needed degree.
    Surjection(OrderedPrimGenSet host, OrderedPrimGenSet target);

    NcPoly apply(const NcPoly& f) const;

    const OrderedPrimGenSet& host() const { return host_; }
    const OrderedPrimGenSet& target() const { return target_; }
    int working_degree() const { return working_degree_; }

  private:
    struct DegreeTable {
        WordBasis basis;          // word basis of H_n
        QMat monomial_inverse;    // inverse of the A-monomial expansion matrix
        std::vector<NcPoly> images; // image in K of each A-monomial
    };

    const DegreeTable& table(int n) const;

    OrderedPrimGenSet host_;
    OrderedPrimGenSet target_;
    int working_degree_;
    mutable std::map<int, DegreeTable> tables_;
};

// One-shot form: builds the map from A and B and applies it to f_input.
NcPoly build_surjection(const OrderedPrimGenSet& A, const OrderedPrimGenSet& B,
                        const NcPoly& f_input);

} // namespace hopfseq

#endif
