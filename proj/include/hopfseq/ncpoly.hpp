#ifndef HOPFSEQ_NCPOLY_HPP
#define HOPFSEQ_NCPOLY_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "hopfseq/alphabet.hpp"
#include "hopfseq/rational.hpp"

namespace hopfseq {

// An element of the free associative algebra on a graded alphabet: a finite
// rational linear combination of words. Zero coefficients are never stored.
// Values are immutable in spirit: all operations return new polynomials.
class NcPoly {
  public:
    explicit NcPoly(GradedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}
    static NcPoly unit(const GradedAlphabet& alphabet); // the empty word
    static NcPoly from_word(const GradedAlphabet& alphabet, Word w, Rat coeff = Rat(1));
    static NcPoly from_letter(const GradedAlphabet& alphabet, const Letter& letter);

    // Text format: "<coeff>*<word>" terms joined by " + " / " - ",
    // e.g. "1*g2_1 - 1/2*g1_1.g1_2". The empty word renders as "1".
    static NcPoly parse(const GradedAlphabet& alphabet, std::string_view text);
    std::string str() const;

    const GradedAlphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Word& w) const;

    // Degree bookkeeping. A zero polynomial is homogeneous of every degree.
    bool is_homogeneous() const;
    std::optional<int> homogeneous_degree() const; // nullopt when zero or mixed
    int max_degree() const;                        // 0 for the zero polynomial
    NcPoly component(int degree) const;

    NcPoly& add_term(const Word& w, const Rat& coeff); // in-place helper for builders

    friend bool operator==(const NcPoly& f, const NcPoly& g) = default;

  private:
    GradedAlphabet alphabet_;
    std::map<Word, Rat> terms_;
};

NcPoly operator+(const NcPoly& f, const NcPoly& g);
NcPoly operator-(const NcPoly& f, const NcPoly& g);
NcPoly operator-(const NcPoly& f);
NcPoly operator*(const NcPoly& f, const NcPoly& g); // concatenation product
NcPoly operator*(const Rat& c, const NcPoly& f);
NcPoly commutator(const NcPoly& f, const NcPoly& g); // fg - gf
std::ostream& operator<<(std::ostream& os, const NcPoly& f);

// An element of the tensor square: a finite rational linear combination of
// pairs of words (left factor, right factor).
class TensorElement {
  public:
    explicit TensorElement(GradedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const GradedAlphabet& alphabet() const { return alphabet_; }
    const std::map<std::pair<Word, Word>, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(const Word& left, const Word& right) const;
    TensorElement swapped() const; // the flip u (x) v -> v (x) u

    TensorElement& add_term(const Word& left, const Word& right, const Rat& coeff);

    std::string str() const;

    friend bool operator==(const TensorElement& s, const TensorElement& t) = default;

  private:
    GradedAlphabet alphabet_;
    std::map<std::pair<Word, Word>, Rat> terms_;
};

TensorElement operator+(const TensorElement& s, const TensorElement& t);
TensorElement operator-(const TensorElement& s, const TensorElement& t);
TensorElement operator*(const TensorElement& s, const TensorElement& t); // componentwise
TensorElement operator*(const Rat& c, const TensorElement& t);
std::ostream& operator<<(std::ostream& os, const TensorElement& t);

// f (x) g as a TensorElement.
TensorElement tensor(const NcPoly& f, const NcPoly& g);

} // namespace hopfseq

#endif
