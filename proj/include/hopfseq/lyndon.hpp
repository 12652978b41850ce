#ifndef HOPFSEQ_LYNDON_HPP
#define HOPFSEQ_LYNDON_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfseq/alphabet.hpp"
#include "hopfseq/rational.hpp"

namespace hopfseq {

// Number of degree-n words over the alphabet; equals invert(counts)[n].
Int count_words(const GradedAlphabet& alphabet, int n);

// All degree-n words in lexicographic order. Grows like count_words(n);
// callers budget accordingly.
std::vector<Word> enumerate_words(const GradedAlphabet& alphabet, int n);

// True iff w is strictly smaller than each of its nontrivial rotations.
// Empty words are rejected.
bool is_lyndon(const Word& w);

// All degree-n Lyndon words in lexicographic order; the count equals
// a_to_p(counts)[n]. Uses prenecklace-pruned generation (Duval / FKM style)
// adapted to letter degrees; the filter-all-words route is the test oracle.
std::vector<Word> enumerate_lyndon(const GradedAlphabet& alphabet, int n);

// Lyndon words of length 2n over a two-letter alphabet with exactly n of each
// letter, counted by filtered enumeration.
Int count_balanced_binary_lyndon(int n);

// Splits a Lyndon word of length >= 2 as w = uv with v the longest proper
// Lyndon suffix (equivalently the lexicographically least proper suffix);
// u is then Lyndon as well. Non-Lyndon input is rejected.
std::pair<Word, Word> standard_factorization(const Word& w);

// Binary bracketing tree of a Lyndon word, built by recursive standard
// factorization. Reading the leaves left to right reproduces the word.
struct LyndonBracket {
    Letter letter{};
    std::unique_ptr<LyndonBracket> left, right;

    bool is_leaf() const { return left == nullptr; }
    Word frontier() const;
    std::string str() const; // e.g. "[g1_1,[g1_1,g1_2]]"
};

LyndonBracket lyndon_bracketing(const Word& w);

} // namespace hopfseq

#endif
