#ifndef HOPFSEQ_FREEALG_HPP
#define HOPFSEQ_FREEALG_HPP

#include <string>
#include <vector>

#include "hopfseq/linalg.hpp"
#include "hopfseq/ncpoly.hpp"

namespace hopfseq {

// Coordinates of degree-n elements in the lexicographic word basis of H_n.
class WordBasis {
  public:
    WordBasis(const GradedAlphabet& alphabet, int degree);

    int degree() const { return degree_; }
    const std::vector<Word>& words() const { return words_; }
    size_t dim() const { return words_.size(); }

    QVec coordinates(const NcPoly& f) const; // f must be 0 or homogeneous of this degree
    NcPoly element(const GradedAlphabet& alphabet, const QVec& coords) const;

  private:
    int degree_;
    std::vector<Word> words_;
    std::map<Word, size_t> index_;
};

// Exact basis of the primitive subspace P(H)_n = ker(Delta_+|_{H_n}),
// computed by rational elimination over the word basis. Its size equals
// a_to_p(counts)[n].
std::vector<NcPoly> primitive_space_basis(const GradedAlphabet& alphabet, int n);

// Expands each degree-n Lyndon word's bracketing into a commutator
// polynomial, in lexicographic order of the underlying Lyndon words. These
// form a basis of the degree-n part of the free Lie algebra on the alphabet.
std::vector<NcPoly> lyndon_lie_basis(const GradedAlphabet& alphabet, int n);

// The sublist of lyndon_lie_basis coming from words of length >= 2: the
// pinned homogeneous basis of the derived subalgebra [P(H), P(H)]_n.
std::vector<NcPoly> derived_subalgebra_basis(const GradedAlphabet& alphabet, int n);

// A graded tuple of candidate generators: tuples[n-1] lists the degree-n
// elements in order. For an ordered primitive generating set of U(L(a)) the
// degree-n tuple has a_n primitive elements descending to a basis of
// H_n / (H_+^2)_n.
struct OrderedPrimGenSet {
    GradedAlphabet alphabet;
    std::vector<std::vector<NcPoly>> tuples;

    int max_degree() const { return static_cast<int>(tuples.size()); }
    const std::vector<NcPoly>& degree(int n) const;
};

// The letters themselves, which are primitive in U(L(a)).
OrderedPrimGenSet canonical_opg(const GradedAlphabet& alphabet, int max_degree);

// Per degree n, an a_n x p_n rational matrix.
struct MatrixSeq {
    std::vector<QMat> mats;
};

// Builds the generating set with rows
//   beta_i = sum_j M[i][j] alpha_j + sum_j M[i][a_n + j] v_j
// where alpha are the canonical degree-n letters and v the
// derived_subalgebra_basis elements. The leading a_n x a_n block must be
// nonsingular at every degree; otherwise NotAGeneratingSet is raised naming
// the degree.
OrderedPrimGenSet opg_from_matrices(const GradedAlphabet& alphabet, const MatrixSeq& matrices,
                                    int max_degree);

struct OpgCheck {
    bool ok = true;
    int degree = 0; // first failing degree when !ok
    std::string message;
};

// Checks, for each n <= max_degree, that the degree-n tuple consists of
// primitive homogeneous elements, has exactly a_n entries, and descends to a
// basis of H_n / (H_+^2)_n (rank of the single-letter coefficient block).
OpgCheck verify_opg(const OrderedPrimGenSet& candidate, int max_degree);

} // namespace hopfseq

#endif
