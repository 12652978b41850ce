#include "hopfseq/ncpoly.hpp"

#include <algorithm>

#include "hopfseq/errors.hpp"

namespace hopfseq {

namespace {

void require_same_alphabet(const GradedAlphabet& a, const GradedAlphabet& b) {
    if (!(a == b)) throw Error(Errc::alphabet_mismatch, "operands live over different alphabets");
}

} // namespace

NcPoly NcPoly::unit(const GradedAlphabet& alphabet) {
    return from_word(alphabet, Word{}, Rat(1));
}

NcPoly NcPoly::from_word(const GradedAlphabet& alphabet, Word w, Rat coeff) {
    for (const Letter& letter : w)
        if (!alphabet.contains(letter))
            throw Error(Errc::invalid_argument,
                        "letter " + letter.str() + " does not exist in the alphabet");
    NcPoly f(alphabet);
    f.add_term(w, coeff);
    return f;
}

NcPoly NcPoly::from_letter(const GradedAlphabet& alphabet, const Letter& letter) {
    return from_word(alphabet, Word{letter});
}

Rat NcPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool NcPoly::is_homogeneous() const {
    std::optional<int> degree;
    for (const auto& [w, c] : terms_) {
        int d = word_degree(w);
        if (degree && *degree != d) return false;
        degree = d;
    }
    return true;
}

std::optional<int> NcPoly::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return word_degree(terms_.begin()->first);
}

int NcPoly::max_degree() const {
    int degree = 0;
    for (const auto& [w, c] : terms_) degree = std::max(degree, word_degree(w));
    return degree;
}

NcPoly NcPoly::component(int degree) const {
    NcPoly out(alphabet_);
    for (const auto& [w, c] : terms_)
        if (word_degree(w) == degree) out.add_term(w, c);
    return out;
}

NcPoly& NcPoly::add_term(const Word& w, const Rat& coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

NcPoly operator+(const NcPoly& f, const NcPoly& g) {
    require_same_alphabet(f.alphabet(), g.alphabet());
    NcPoly out = f;
    for (const auto& [w, c] : g.terms()) out.add_term(w, c);
    return out;
}

NcPoly operator-(const NcPoly& f, const NcPoly& g) { return f + (-g); }

NcPoly operator-(const NcPoly& f) { return Rat(-1) * f; }

NcPoly operator*(const NcPoly& f, const NcPoly& g) {
    require_same_alphabet(f.alphabet(), g.alphabet());
    NcPoly out(f.alphabet());
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, cu * cv);
        }
    }
    return out;
}

NcPoly operator*(const Rat& c, const NcPoly& f) {
    NcPoly out(f.alphabet());
    for (const auto& [w, coeff] : f.terms()) out.add_term(w, c * coeff);
    return out;
}

NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
            first = false;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        out += to_string(a) + "*" + word_str(w);
    }
    return out;
}

namespace {

struct TermText {
    int sign;
    std::string body;
};

// Splits "a - b + c" into signed term bodies; whitespace-insensitive.
std::vector<TermText> split_terms(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw Error(Errc::parse_error, "empty polynomial text");
    std::vector<TermText> terms;
    int sign = 1;
    size_t pos = 0;
    if (compact[0] == '+' || compact[0] == '-') {
        sign = compact[0] == '-' ? -1 : 1;
        pos = 1;
    }
    std::string body;
    for (; pos < compact.size(); ++pos) {
        char c = compact[pos];
        if (c == '+' || c == '-') {
            if (body.empty()) throw Error(Errc::parse_error, "dangling sign in polynomial text");
            terms.push_back({sign, body});
            body.clear();
            sign = c == '-' ? -1 : 1;
        } else {
            body.push_back(c);
        }
    }
    if (body.empty()) throw Error(Errc::parse_error, "dangling sign in polynomial text");
    terms.push_back({sign, body});
    return terms;
}

} // namespace

NcPoly NcPoly::parse(const GradedAlphabet& alphabet, std::string_view text) {
    NcPoly out(alphabet);
    for (const TermText& term : split_terms(text)) {
        Rat coeff(term.sign);
        std::string_view body = term.body;
        size_t star = body.find('*');
        if (star != std::string_view::npos) {
            coeff *= parse_rational(body.substr(0, star));
            body = body.substr(star + 1);
        }
        Word w;
        if (!body.empty() && body[0] == 'g') {
            w = alphabet.parse_word(body);
        } else {
            coeff *= parse_rational(body); // a bare constant, times the empty word
        }
        out.add_term(w, coeff);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const NcPoly& f) { return os << f.str(); }

Rat TensorElement::coefficient(const Word& left, const Word& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rat(0) : it->second;
}

TensorElement TensorElement::swapped() const {
    TensorElement out(alphabet_);
    for (const auto& [pair, c] : terms_) out.add_term(pair.second, pair.first, c);
    return out;
}

TensorElement& TensorElement::add_term(const Word& left, const Word& right, const Rat& coeff) {
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.emplace(std::make_pair(left, right), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [pair, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
            first = false;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        out += to_string(a) + "*" + word_str(pair.first) + "(x)" + word_str(pair.second);
    }
    return out;
}

TensorElement operator+(const TensorElement& s, const TensorElement& t) {
    require_same_alphabet(s.alphabet(), t.alphabet());
    TensorElement out = s;
    for (const auto& [pair, c] : t.terms()) out.add_term(pair.first, pair.second, c);
    return out;
}

TensorElement operator-(const TensorElement& s, const TensorElement& t) {
    return s + Rat(-1) * t;
}

TensorElement operator*(const TensorElement& s, const TensorElement& t) {
    require_same_alphabet(s.alphabet(), t.alphabet());
    TensorElement out(s.alphabet());
    for (const auto& [p, cp] : s.terms()) {
        for (const auto& [q, cq] : t.terms()) {
            Word left = p.first;
            left.insert(left.end(), q.first.begin(), q.first.end());
            Word right = p.second;
            right.insert(right.end(), q.second.begin(), q.second.end());
            out.add_term(left, right, cp * cq);
        }
    }
    return out;
}

TensorElement operator*(const Rat& c, const TensorElement& t) {
    TensorElement out(t.alphabet());
    for (const auto& [pair, coeff] : t.terms()) out.add_term(pair.first, pair.second, c * coeff);
    return out;
}

std::ostream& operator<<(std::ostream& os, const TensorElement& t) { return os << t.str(); }

TensorElement tensor(const NcPoly& f, const NcPoly& g) {
    require_same_alphabet(f.alphabet(), g.alphabet());
    TensorElement out(f.alphabet());
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) out.add_term(u, v, cu * cv);
    return out;
}

} // namespace hopfseq
