#include "hopfseq/freealg.hpp"

#include "hopfseq/coalgebra.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/lyndon.hpp"
#include "hopfseq/transforms.hpp"

namespace hopfseq {

WordBasis::WordBasis(const GradedAlphabet& alphabet, int degree)
    : degree_(degree), words_(enumerate_words(alphabet, degree)) {
    for (size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
}

QVec WordBasis::coordinates(const NcPoly& f) const {
    QVec coords(words_.size(), Rat(0));
    for (const auto& [w, c] : f.terms()) {
        auto it = index_.find(w);
        if (it == index_.end())
            throw Error(Errc::invalid_argument, "term " + word_str(w) + " is not of degree " +
                                                    std::to_string(degree_));
        coords[it->second] = c;
    }
    return coords;
}

NcPoly WordBasis::element(const GradedAlphabet& alphabet, const QVec& coords) const {
    if (coords.size() != words_.size())
        throw Error(Errc::invalid_argument, "coordinate vector has the wrong length");
    NcPoly f(alphabet);
    for (size_t i = 0; i < coords.size(); ++i) f.add_term(words_[i], coords[i]);
    return f;
}

std::vector<NcPoly> primitive_space_basis(const GradedAlphabet& alphabet, int n) {
    WordBasis basis(alphabet, n);

    // Column-index the tensor pairs appearing in any Delta_+ image.
    std::map<std::pair<Word, Word>, size_t> pair_index;
    std::vector<TensorElement> images;
    images.reserve(basis.dim());
    for (const Word& w : basis.words()) {
        images.push_back(reduced_coproduct(NcPoly::from_word(alphabet, w)));
        for (const auto& [pair, c] : images.back().terms())
            pair_index.emplace(pair, pair_index.size());
    }

    // Rows = pair coordinates, columns = words; kernel vectors are the
    // primitive elements.
    QMat m(pair_index.size(), QVec(basis.dim(), Rat(0)));
    for (size_t col = 0; col < basis.dim(); ++col)
        for (const auto& [pair, c] : images[col].terms()) m[pair_index[pair]][col] = c;

    std::vector<NcPoly> out;
    for (const QVec& v : kernel_basis(std::move(m), basis.dim()))
        out.push_back(basis.element(alphabet, v));
    return out;
}

namespace {

NcPoly bracket_to_poly(const GradedAlphabet& alphabet, const LyndonBracket& node) {
    if (node.is_leaf()) return NcPoly::from_letter(alphabet, node.letter);
    return commutator(bracket_to_poly(alphabet, *node.left), bracket_to_poly(alphabet, *node.right));
}

} // namespace

std::vector<NcPoly> lyndon_lie_basis(const GradedAlphabet& alphabet, int n) {
    std::vector<NcPoly> out;
    for (const Word& w : enumerate_lyndon(alphabet, n))
        out.push_back(bracket_to_poly(alphabet, lyndon_bracketing(w)));
    return out;
}

std::vector<NcPoly> derived_subalgebra_basis(const GradedAlphabet& alphabet, int n) {
    std::vector<NcPoly> out;
    for (const Word& w : enumerate_lyndon(alphabet, n))
        if (w.size() >= 2) out.push_back(bracket_to_poly(alphabet, lyndon_bracketing(w)));
    return out;
}

const std::vector<NcPoly>& OrderedPrimGenSet::degree(int n) const {
    static const std::vector<NcPoly> empty;
    if (n < 1 || n > max_degree()) return empty;
    return tuples[static_cast<size_t>(n - 1)];
}

OrderedPrimGenSet canonical_opg(const GradedAlphabet& alphabet, int max_degree) {
    OrderedPrimGenSet opg{alphabet, {}};
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<NcPoly> tuple;
        for (int i = 1; i <= alphabet.count(n); ++i)
            tuple.push_back(NcPoly::from_letter(alphabet, Letter{n, i}));
        opg.tuples.push_back(std::move(tuple));
    }
    return opg;
}

OrderedPrimGenSet opg_from_matrices(const GradedAlphabet& alphabet, const MatrixSeq& matrices,
                                    int max_degree) {
    if (max_degree < 1 || max_degree > alphabet.max_degree())
        throw Error(Errc::invalid_argument, "max_degree must be in [1, alphabet degree]");
    if (static_cast<int>(matrices.mats.size()) < max_degree)
        throw Error(Errc::invalid_argument, "need one matrix per degree up to max_degree");
    Sequence p = a_to_p(alphabet.counts_sequence().prefix(max_degree));

    OrderedPrimGenSet opg{alphabet, {}};
    for (int n = 1; n <= max_degree; ++n) {
        size_t a_n = static_cast<size_t>(alphabet.count(n));
        size_t p_n = static_cast<size_t>(p.at(n).get_num().get_si());
        const QMat& m = matrices.mats[static_cast<size_t>(n - 1)];
        if (m.size() != a_n)
            throw Error(Errc::invalid_argument, "matrix at degree " + std::to_string(n) +
                                                    " must have " + std::to_string(a_n) + " rows");
        QMat leading(a_n, QVec(a_n, Rat(0)));
        for (size_t i = 0; i < a_n; ++i) {
            if (m[i].size() != p_n)
                throw Error(Errc::invalid_argument, "matrix at degree " + std::to_string(n) +
                                                        " must have " + std::to_string(p_n) +
                                                        " columns");
            for (size_t j = 0; j < a_n; ++j) leading[i][j] = m[i][j];
        }
        if (a_n > 0 && determinant(leading) == 0)
            throw Error(Errc::not_a_generating_set,
                        "singular leading block at degree " + std::to_string(n));

        std::vector<NcPoly> bracket_basis = derived_subalgebra_basis(alphabet, n);
        if (bracket_basis.size() != p_n - a_n)
            throw Error(Errc::internal_error, "derived basis size mismatch at degree " +
                                                  std::to_string(n));
        std::vector<NcPoly> tuple;
        for (size_t i = 0; i < a_n; ++i) {
            NcPoly beta(alphabet);
            for (size_t j = 0; j < a_n; ++j)
                beta = beta +
                       m[i][j] * NcPoly::from_letter(alphabet, Letter{n, static_cast<int>(j) + 1});
            for (size_t j = 0; j + a_n < p_n; ++j) beta = beta + m[i][a_n + j] * bracket_basis[j];
            tuple.push_back(std::move(beta));
        }
        opg.tuples.push_back(std::move(tuple));
    }
    return opg;
}

OpgCheck verify_opg(const OrderedPrimGenSet& candidate, int max_degree) {
    const GradedAlphabet& alphabet = candidate.alphabet;
    for (int n = 1; n <= max_degree; ++n) {
        const std::vector<NcPoly>& tuple = candidate.degree(n);
        size_t a_n = static_cast<size_t>(alphabet.count(n));
        if (tuple.size() != a_n)
            return {false, n,
                    "degree " + std::to_string(n) + " tuple has " + std::to_string(tuple.size()) +
                        " elements, expected " + std::to_string(a_n)};
        // Coefficients on single-letter words represent the class modulo
        // (H_+^2)_n, which is spanned by the words of length >= 2.
        QMat letter_block(tuple.size(), QVec(a_n, Rat(0)));
        for (size_t i = 0; i < tuple.size(); ++i) {
            const NcPoly& g = tuple[i];
            auto degree = g.homogeneous_degree();
            if (!degree || *degree != n)
                return {false, n,
                        "element " + std::to_string(i + 1) + " of degree-" + std::to_string(n) +
                            " tuple is not homogeneous of degree " + std::to_string(n)};
            if (!is_primitive(g))
                return {false, n,
                        "element " + std::to_string(i + 1) + " of degree-" + std::to_string(n) +
                            " tuple is not primitive: " + g.str()};
            for (size_t j = 0; j < a_n; ++j)
                letter_block[i][j] = g.coefficient(Word{Letter{n, static_cast<int>(j) + 1}});
        }
        if (rank(letter_block) != a_n)
            return {false, n,
                    "degree-" + std::to_string(n) +
                        " tuple does not span H_n modulo products (rank < " + std::to_string(a_n) +
                        ")"};
    }
    return {};
}

} // namespace hopfseq
