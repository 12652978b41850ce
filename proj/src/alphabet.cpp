#include "hopfseq/alphabet.hpp"

#include <charconv>

#include "hopfseq/errors.hpp"

namespace hopfseq {

std::string Letter::str() const {
    return "g" + std::to_string(degree) + "_" + std::to_string(index);
}

int word_degree(const Word& w) {
    int degree = 0;
    for (const Letter& letter : w) degree += letter.degree;
    return degree;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += '.';
        out += w[i].str();
    }
    return out;
}

Word rotate(const Word& w) {
    if (w.empty()) return w;
    Word out(w.begin() + 1, w.end());
    out.push_back(w.front());
    return out;
}

GradedAlphabet::GradedAlphabet(std::vector<long> counts) : counts_(std::move(counts)) {
    for (long c : counts_)
        if (c < 0) throw Error(Errc::invalid_argument, "negative letter count");
}

GradedAlphabet::GradedAlphabet(const Sequence& counts) {
    if (!counts.is_nonnegative_integral())
        throw Error(Errc::invalid_argument,
                    "alphabet counts must be nonnegative integers, got " + counts.str());
    counts_ = counts.as_longs();
}

long GradedAlphabet::count(int degree) const {
    if (degree < 1 || degree > max_degree()) return 0;
    return counts_[static_cast<size_t>(degree - 1)];
}

bool GradedAlphabet::contains(const Letter& letter) const {
    return letter.index >= 1 && letter.index <= count(letter.degree);
}

std::vector<Letter> GradedAlphabet::letters_up_to(int degree_bound) const {
    std::vector<Letter> out;
    for (int d = 1; d <= std::min(degree_bound, max_degree()); ++d)
        for (int i = 1; i <= count(d); ++i) out.push_back(Letter{d, i});
    return out;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(Errc::parse_error, "bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

} // namespace

Word GradedAlphabet::parse_word(std::string_view text) const {
    if (text == "1") return Word{};
    Word word;
    size_t start = 0;
    while (start <= text.size()) {
        size_t dot = text.find('.', start);
        std::string_view token =
            text.substr(start, dot == std::string_view::npos ? text.size() - start : dot - start);
        size_t underscore = token.find('_');
        if (token.size() < 4 || token[0] != 'g' || underscore == std::string_view::npos)
            throw Error(Errc::parse_error, "bad letter '" + std::string(token) +
                                               "', expected g<degree>_<index>");
        Letter letter{parse_int(token.substr(1, underscore - 1), "letter degree"),
                      parse_int(token.substr(underscore + 1), "letter index")};
        if (!contains(letter))
            throw Error(Errc::invalid_argument,
                        "letter " + letter.str() + " does not exist in the alphabet");
        word.push_back(letter);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return word;
}

} // namespace hopfseq
