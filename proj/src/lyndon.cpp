#include "hopfseq/lyndon.hpp"

#include <algorithm>

#include "hopfseq/errors.hpp"

namespace hopfseq {

namespace {

void require_degree_in_range(const GradedAlphabet& alphabet, int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "degree must be positive");
    if (n > alphabet.max_degree())
        throw Error(Errc::invalid_argument,
                    "degree " + std::to_string(n) + " exceeds the alphabet truncation degree " +
                        std::to_string(alphabet.max_degree()));
}

} // namespace

Int count_words(const GradedAlphabet& alphabet, int n) {
    require_degree_in_range(alphabet, n);
    std::vector<Int> words_of_degree(static_cast<size_t>(n) + 1);
    words_of_degree[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int d = 1; d <= m; ++d)
            words_of_degree[static_cast<size_t>(m)] +=
                Int(alphabet.count(d)) * words_of_degree[static_cast<size_t>(m - d)];
    return words_of_degree[static_cast<size_t>(n)];
}

namespace {

void words_rec(const std::vector<Letter>& letters, int remaining, Word& prefix,
               std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (const Letter& letter : letters) {
        if (letter.degree > remaining) break; // letters are sorted by degree first
        prefix.push_back(letter);
        words_rec(letters, remaining - letter.degree, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_words(const GradedAlphabet& alphabet, int n) {
    require_degree_in_range(alphabet, n);
    std::vector<Word> out;
    std::vector<Letter> letters = alphabet.letters_up_to(n);
    Word prefix;
    words_rec(letters, n, prefix, out);
    return out;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) throw Error(Errc::invalid_argument, "the empty word is neither Lyndon nor not");
    Word r = w;
    for (size_t k = 1; k < w.size(); ++k) {
        r = rotate(r);
        if (!(w < r)) return false;
    }
    return true;
}

namespace {

// Prenecklace extension in the Duval / Fredricksen-Kessler-Maiorana style,
// with target total degree instead of target length. The state is the word of
// letter ordinals plus p, the length of its longest Lyndon prefix; the next
// ordinal must be >= word[t - p], equality keeps p, strict growth makes the
// whole prefix Lyndon (p = t + 1). A completed word is Lyndon iff p equals
// its length.
struct LyndonGen {
    const std::vector<Letter>& letters; // sorted, so ordinal order = letter order
    int target;
    std::vector<int> ordinals;
    std::vector<Word> out;

    void rec(int degree_so_far, int p) {
        if (degree_so_far == target) {
            if (p == static_cast<int>(ordinals.size())) {
                Word w;
                w.reserve(ordinals.size());
                for (int ord : ordinals) w.push_back(letters[static_cast<size_t>(ord)]);
                out.push_back(std::move(w));
            }
            return;
        }
        int t = static_cast<int>(ordinals.size());
        int min_ord = t == 0 ? 0 : ordinals[static_cast<size_t>(t - p)];
        for (int ord = min_ord; ord < static_cast<int>(letters.size()); ++ord) {
            int d = letters[static_cast<size_t>(ord)].degree;
            if (degree_so_far + d > target) break; // degrees weakly increase with ordinal
            ordinals.push_back(ord);
            rec(degree_so_far + d, ord == min_ord && t > 0 ? p : t + 1);
            ordinals.pop_back();
        }
    }
};

} // namespace

std::vector<Word> enumerate_lyndon(const GradedAlphabet& alphabet, int n) {
    require_degree_in_range(alphabet, n);
    std::vector<Letter> letters = alphabet.letters_up_to(n);
    LyndonGen gen{letters, n, {}, {}};
    gen.rec(0, 0);
    return std::move(gen.out);
}

namespace {

void balanced_rec(Word& w, int zeros_left, int ones_left, Int& count) {
    if (zeros_left == 0 && ones_left == 0) {
        if (is_lyndon(w)) ++count;
        return;
    }
    if (zeros_left > 0) {
        w.push_back(Letter{1, 1});
        balanced_rec(w, zeros_left - 1, ones_left, count);
        w.pop_back();
    }
    if (ones_left > 0) {
        w.push_back(Letter{1, 2});
        balanced_rec(w, zeros_left, ones_left - 1, count);
        w.pop_back();
    }
}

} // namespace

Int count_balanced_binary_lyndon(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "need n >= 1");
    Int count = 0;
    Word w;
    // A Lyndon word over {0 < 1} with both letters present starts with 0.
    w.push_back(Letter{1, 1});
    balanced_rec(w, n - 1, n, count);
    return count;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2 || !is_lyndon(w))
        throw Error(Errc::invalid_argument,
                    "standard factorization needs a Lyndon word of length >= 2, got " +
                        word_str(w));
    for (size_t split = 1; split < w.size(); ++split) {
        Word suffix(w.begin() + static_cast<long>(split), w.end());
        if (is_lyndon(suffix)) {
            Word prefix(w.begin(), w.begin() + static_cast<long>(split));
            if (!is_lyndon(prefix))
                throw Error(Errc::internal_error, "left factor of " + word_str(w) + " not Lyndon");
            return {std::move(prefix), std::move(suffix)};
        }
    }
    throw Error(Errc::internal_error, "no Lyndon suffix found in " + word_str(w));
}

Word LyndonBracket::frontier() const {
    if (is_leaf()) return Word{letter};
    Word out = left->frontier();
    Word r = right->frontier();
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::string LyndonBracket::str() const {
    if (is_leaf()) return letter.str();
    return "[" + left->str() + "," + right->str() + "]";
}

LyndonBracket lyndon_bracketing(const Word& w) {
    if (w.empty() || !is_lyndon(w))
        throw Error(Errc::invalid_argument, "bracketing needs a Lyndon word, got " + word_str(w));
    LyndonBracket node;
    if (w.size() == 1) {
        node.letter = w.front();
        return node;
    }
    auto [u, v] = standard_factorization(w);
    node.left = std::make_unique<LyndonBracket>(lyndon_bracketing(u));
    node.right = std::make_unique<LyndonBracket>(lyndon_bracketing(v));
    return node;
}

} // namespace hopfseq
