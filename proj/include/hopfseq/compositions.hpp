#ifndef HOPFSEQ_COMPOSITIONS_HPP
#define HOPFSEQ_COMPOSITIONS_HPP

#include <vector>

namespace hopfseq {

// A composition of n: an ordered list of positive parts summing to n.
struct Composition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const;
};

// A partition of n: parts weakly decreasing.
struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const;
    // Multiplicity of d as a part.
    int multiplicity(int d) const;
};

// All compositions of n in lexicographic order of the part lists.
std::vector<Composition> enumerate_compositions(int n);

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

std::vector<int> divisors(int n);

// Mobius function, memoized by trial division.
int mobius(int n);

} // namespace hopfseq

#endif
