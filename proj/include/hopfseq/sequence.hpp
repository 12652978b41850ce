#ifndef HOPFSEQ_SEQUENCE_HPP
#define HOPFSEQ_SEQUENCE_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hopfseq/rational.hpp"

namespace hopfseq {

// A finite prefix (c_1, ..., c_N) of an infinite sequence of exact rationals,
// truncated at degree N. Entries are 1-indexed; the constant term of the
// associated power series is always an implicit 1 and never stored.
class Sequence {
  public:
    Sequence() = default;
    explicit Sequence(std::vector<Rat> entries) : entries_(std::move(entries)) {}
    static Sequence zeros(int degree);
    static Sequence from_longs(const std::vector<long>& values);

    // Comma-separated exact rationals: "1,2,5,14" or "1/2,3,-7/3".
    static Sequence parse(std::string_view csv);
    std::string str() const;

    int degree() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 1-indexed access; n in [1, degree()].
    const Rat& at(int n) const;
    Rat& at(int n);

    const std::vector<Rat>& entries() const { return entries_; }

    bool is_integral() const;
    bool is_nonnegative() const;
    bool is_nonnegative_integral() const;

    Sequence prefix(int n) const;

    // Entrywise long values; requires integral entries that fit in long.
    std::vector<long> as_longs() const;

    friend bool operator==(const Sequence& a, const Sequence& b) = default;

  private:
    std::vector<Rat> entries_;
};

std::ostream& operator<<(std::ostream& os, const Sequence& s);

// The partial order of sequences: a <= b iff a_n <= b_n for all n.
// Both arguments must have the same degree; callers truncate first.
bool componentwise_leq(const Sequence& a, const Sequence& b);

// First n with a_n > b_n over the common prefix, if any.
std::optional<int> first_violation(const Sequence& a, const Sequence& b);

// First n with a_n not a nonnegative integer, if any.
std::optional<int> first_non_natural(const Sequence& a);

Sequence operator+(const Sequence& a, const Sequence& b);
Sequence operator-(const Sequence& a, const Sequence& b);

} // namespace hopfseq

#endif
