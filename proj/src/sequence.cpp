#include "hopfseq/sequence.hpp"

#include <algorithm>

#include "hopfseq/errors.hpp"

namespace hopfseq {

Sequence Sequence::zeros(int degree) {
    return Sequence(std::vector<Rat>(static_cast<size_t>(std::max(degree, 0))));
}

Sequence Sequence::from_longs(const std::vector<long>& values) {
    std::vector<Rat> entries;
    entries.reserve(values.size());
    for (long v : values) entries.emplace_back(v);
    return Sequence(std::move(entries));
}

Sequence Sequence::parse(std::string_view csv) {
    std::vector<Rat> entries;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string_view token =
            csv.substr(start, comma == std::string_view::npos ? csv.size() - start : comma - start);
        entries.push_back(parse_rational(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Sequence(std::move(entries));
}

std::string Sequence::str() const {
    std::string out;
    for (int n = 1; n <= degree(); ++n) {
        if (n > 1) out += ',';
        out += to_string(at(n));
    }
    return out;
}

const Rat& Sequence::at(int n) const {
    if (n < 1 || n > degree())
        throw Error(Errc::invalid_argument,
                    "sequence index " + std::to_string(n) + " outside [1, " +
                        std::to_string(degree()) + "]");
    return entries_[static_cast<size_t>(n - 1)];
}

Rat& Sequence::at(int n) {
    return const_cast<Rat&>(static_cast<const Sequence&>(*this).at(n));
}

bool Sequence::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& q) { return is_integer(q); });
}

bool Sequence::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rat& q) { return hopfseq::is_nonnegative(q); });
}

bool Sequence::is_nonnegative_integral() const { return is_integral() && is_nonnegative(); }

Sequence Sequence::prefix(int n) const {
    if (n < 0 || n > degree())
        throw Error(Errc::invalid_argument, "prefix length " + std::to_string(n) + " out of range");
    return Sequence(std::vector<Rat>(entries_.begin(), entries_.begin() + n));
}

std::vector<long> Sequence::as_longs() const {
    std::vector<long> out;
    out.reserve(entries_.size());
    for (const Rat& q : entries_) {
        if (!is_integer(q) || !q.get_num().fits_slong_p())
            throw Error(Errc::invalid_argument, "entry " + to_string(q) + " is not a small integer");
        out.push_back(q.get_num().get_si());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Sequence& s) { return os << s.str(); }

bool componentwise_leq(const Sequence& a, const Sequence& b) {
    if (a.degree() != b.degree())
        throw Error(Errc::invalid_argument, "componentwise comparison needs equal degrees");
    return !first_violation(a, b).has_value();
}

std::optional<int> first_violation(const Sequence& a, const Sequence& b) {
    int n_max = std::min(a.degree(), b.degree());
    for (int n = 1; n <= n_max; ++n)
        if (a.at(n) > b.at(n)) return n;
    return std::nullopt;
}

std::optional<int> first_non_natural(const Sequence& a) {
    for (int n = 1; n <= a.degree(); ++n)
        if (!is_integer(a.at(n)) || sgn(a.at(n)) < 0) return n;
    return std::nullopt;
}

Sequence operator+(const Sequence& a, const Sequence& b) {
    if (a.degree() != b.degree())
        throw Error(Errc::invalid_argument, "sequence addition needs equal degrees");
    std::vector<Rat> out(a.entries());
    for (int n = 1; n <= b.degree(); ++n) out[static_cast<size_t>(n - 1)] += b.at(n);
    return Sequence(std::move(out));
}

Sequence operator-(const Sequence& a, const Sequence& b) {
    if (a.degree() != b.degree())
        throw Error(Errc::invalid_argument, "sequence subtraction needs equal degrees");
    std::vector<Rat> out(a.entries());
    for (int n = 1; n <= b.degree(); ++n) out[static_cast<size_t>(n - 1)] -= b.at(n);
    return Sequence(std::move(out));
}

} // namespace hopfseq
