#include "hopfseq/coalgebra.hpp"

#include "hopfseq/errors.hpp"

namespace hopfseq {

namespace {

std::pair<Word, Word> split_by_mask(const Word& w, unsigned mask) {
    Word left, right;
    for (size_t i = 0; i < w.size(); ++i)
        (mask >> i & 1u ? left : right).push_back(w[i]);
    return {std::move(left), std::move(right)};
}

} // namespace

TensorElement coproduct(const NcPoly& f) {
    TensorElement out(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        if (w.size() > 20) throw Error(Errc::invalid_argument, "word too long for coproduct");
        for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
            auto [left, right] = split_by_mask(w, mask);
            out.add_term(left, right, c);
        }
    }
    return out;
}

TensorElement reduced_coproduct(const NcPoly& f) {
    if (f.coefficient(Word{}) != 0)
        throw Error(Errc::invalid_argument, "reduced coproduct of an element with constant term");
    TensorElement out(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        if (w.size() > 20) throw Error(Errc::invalid_argument, "word too long for coproduct");
        unsigned full = (1u << w.size()) - 1u;
        for (unsigned mask = 1; mask < full; ++mask) {
            auto [left, right] = split_by_mask(w, mask);
            out.add_term(left, right, c);
        }
    }
    return out;
}

bool is_primitive(const NcPoly& f) { return reduced_coproduct(f).is_zero(); }

namespace {

// mu^(k) . Delta_+^(k) on a single word: the sum over ordered partitions of
// the position set into k+1 nonempty blocks of the concatenated subwords.
// Evaluated by peeling the first block and recursing on the rest, which is
// the reduced-coproduct-on-the-last-factor iteration flattened out.
NcPoly convolution_power_term(const GradedAlphabet& alphabet, const Word& w, int k) {
    if (k == 0) return NcPoly::from_word(alphabet, w);
    NcPoly out(alphabet);
    unsigned full = (1u << w.size()) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        auto [first, rest] = split_by_mask(w, mask);
        NcPoly tail = convolution_power_term(alphabet, rest, k - 1);
        for (const auto& [v, c] : tail.terms()) {
            Word joined = first;
            joined.insert(joined.end(), v.begin(), v.end());
            out.add_term(joined, c);
        }
    }
    return out;
}

} // namespace

NcPoly eulerian_idempotent(const NcPoly& f) {
    if (f.coefficient(Word{}) != 0)
        throw Error(Errc::invalid_argument,
                    "Eulerian idempotent rejects elements with a degree-0 component");
    NcPoly out(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        for (int k = 0; k < static_cast<int>(w.size()); ++k) {
            Rat coeff = Rat(k % 2 == 0 ? 1 : -1, k + 1);
            out = out + (c * coeff) * convolution_power_term(f.alphabet(), w, k);
        }
    }
    return out;
}

} // namespace hopfseq
