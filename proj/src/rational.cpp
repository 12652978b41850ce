#include "hopfseq/rational.hpp"

#include "hopfseq/errors.hpp"

namespace hopfseq {

bool is_integer(const Rat& q) { return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0; }

bool is_nonnegative(const Rat& q) { return sgn(q) >= 0; }

namespace {

// Strips whitespace and maps U+2212 (minus sign) to '-'.
std::string clean_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (size_t i = 0; i < token.size(); ++i) {
        unsigned char c = token[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == 0xE2 && i + 2 < token.size() && (unsigned char)token[i + 1] == 0x88 &&
            (unsigned char)token[i + 2] == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

} // namespace

Rat parse_rational(std::string_view token) {
    std::string s = clean_token(token);
    if (s.empty()) throw Error(Errc::invalid_argument, "empty rational literal");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error(Errc::invalid_argument, "bad rational literal '" + std::string(token) + "'");
    if (mpz_sgn(q.get_den_mpz_t()) == 0)
        throw Error(Errc::invalid_argument, "zero denominator in '" + std::string(token) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

Rat binomial(const Rat& x, unsigned long m) {
    Rat num(1);
    for (unsigned long i = 0; i < m; ++i) num *= x - Rat(static_cast<long>(i));
    return num / Rat(factorial(m));
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace hopfseq
