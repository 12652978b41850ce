#include "hopfseq/surjection.hpp"

#include "hopfseq/errors.hpp"
#include "hopfseq/lyndon.hpp"

namespace hopfseq {

Surjection::Surjection(OrderedPrimGenSet host, OrderedPrimGenSet target)
    : host_(std::move(host)), target_(std::move(target)) {
    working_degree_ = std::min(host_.max_degree(), target_.max_degree());
    for (int n = 1; n <= working_degree_; ++n) {
        size_t a_n = host_.degree(n).size();
        size_t b_n = target_.degree(n).size();
        if (a_n != static_cast<size_t>(host_.alphabet.count(n)))
            throw Error(Errc::invalid_argument,
                        "host tuple at degree " + std::to_string(n) + " has the wrong size");
        if (b_n != static_cast<size_t>(target_.alphabet.count(n)))
            throw Error(Errc::invalid_argument,
                        "target tuple at degree " + std::to_string(n) + " has the wrong size");
        if (a_n < b_n)
            throw Error(Errc::no_surjection_exists,
                        "generator counts fail a >= b at degree " + std::to_string(n) + " (" +
                            std::to_string(a_n) + " < " + std::to_string(b_n) + ")");
    }
}

const Surjection::DegreeTable& Surjection::table(int n) const {
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;

    WordBasis basis(host_.alphabet, n);
    // A-monomials of degree n correspond to the degree-n words: the word
    // letter (d, i) stands for the i-th degree-d element of A.
    size_t dim = basis.dim();
    QMat expansion(dim, QVec(dim, Rat(0)));
    std::vector<NcPoly> images;
    images.reserve(dim);
    for (size_t col = 0; col < dim; ++col) {
        const Word& monomial = basis.words()[col];
        NcPoly expanded = NcPoly::unit(host_.alphabet);
        NcPoly image = NcPoly::unit(target_.alphabet);
        for (const Letter& letter : monomial) {
            expanded = expanded * host_.degree(letter.degree)[static_cast<size_t>(letter.index - 1)];
            if (image.is_zero()) continue;
            const std::vector<NcPoly>& targets = target_.degree(letter.degree);
            if (static_cast<size_t>(letter.index) <= targets.size())
                image = image * targets[static_cast<size_t>(letter.index - 1)];
            else
                image = NcPoly(target_.alphabet); // generator maps to zero
        }
        QVec coords = basis.coordinates(expanded);
        for (size_t row = 0; row < dim; ++row) expansion[row][col] = coords[row];
        images.push_back(std::move(image));
    }
    std::optional<QMat> inv = inverse(std::move(expansion));
    if (!inv)
        throw Error(Errc::not_a_generating_set,
                    "host generators do not freely span degree " + std::to_string(n));
    auto [pos, inserted] =
        tables_.emplace(n, DegreeTable{std::move(basis), std::move(*inv), std::move(images)});
    return pos->second;
}

NcPoly Surjection::apply(const NcPoly& f) const {
    if (!(f.alphabet() == host_.alphabet))
        throw Error(Errc::alphabet_mismatch, "input does not live over the host alphabet");
    NcPoly out(target_.alphabet);
    // Degree-0 part maps identically (unital morphism).
    out.add_term(Word{}, f.coefficient(Word{}));
    for (int n = 1; n <= f.max_degree(); ++n) {
        NcPoly component = f.component(n);
        if (component.is_zero()) continue;
        if (n > working_degree_)
            throw Error(Errc::invalid_argument,
                        "input degree " + std::to_string(n) +
                            " exceeds the degrees covered by the generating sets");
        const DegreeTable& t = table(n);
        QVec coords = matvec(t.monomial_inverse, t.basis.coordinates(component));
        for (size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != 0) out = out + coords[i] * t.images[i];
    }
    return out;
}

NcPoly build_surjection(const OrderedPrimGenSet& A, const OrderedPrimGenSet& B,
                        const NcPoly& f_input) {
    return Surjection(A, B).apply(f_input);
}

} // namespace hopfseq
