#ifndef HOPFSEQ_ALPHABET_HPP
#define HOPFSEQ_ALPHABET_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hopfseq/sequence.hpp"

namespace hopfseq {

// A generator of degree `degree`, the index-th of its degree (1-based).
// Letters are totally ordered by (degree, index); this order is fixed and
// used for every lexicographic comparison in the project.
struct Letter {
    int degree = 0;
    int index = 0;

    auto operator<=>(const Letter&) const = default;
    std::string str() const; // "g<degree>_<index>"
};

using Word = std::vector<Letter>; // compares lexicographically via vector<>

int word_degree(const Word& w);
std::string word_str(const Word& w); // letters joined by '.'; empty word is "1"
Word rotate(const Word& w);          // w_2 ... w_l w_1

// A graded set of letters: counts[n] letters in degree n, canonically named
// g<n>_1 ... g<n>_counts[n].
class GradedAlphabet {
  public:
    GradedAlphabet() = default;
    explicit GradedAlphabet(std::vector<long> counts);
    explicit GradedAlphabet(const Sequence& counts); // must be nonnegative-integral

    int max_degree() const { return static_cast<int>(counts_.size()); }
    long count(int degree) const; // 0 beyond max_degree
    const std::vector<long>& counts() const { return counts_; }
    Sequence counts_sequence() const { return Sequence::from_longs(counts_); }

    bool contains(const Letter& letter) const;
    // All letters of degree <= degree_bound, in the canonical order.
    std::vector<Letter> letters_up_to(int degree_bound) const;

    Word parse_word(std::string_view text) const;

    friend bool operator==(const GradedAlphabet&, const GradedAlphabet&) = default;

  private:
    std::vector<long> counts_;
};

} // namespace hopfseq

#endif
