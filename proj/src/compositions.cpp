#include "hopfseq/compositions.hpp"

#include <mutex>
#include <numeric>

#include "hopfseq/errors.hpp"

namespace hopfseq {

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int d) const {
    int m = 0;
    for (int part : parts)
        if (part == d) ++m;
    return m;
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition{prefix});
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        compositions_rec(remaining - part, prefix, out);
        prefix.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "compositions need n >= 1");
    std::vector<Composition> out;
    std::vector<int> prefix;
    compositions_rec(n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "partitions need n >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<int> divisors(int n) {
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "mobius needs n >= 1");
    static std::mutex mu;
    static std::vector<int> cache{0, 1}; // cache[n] for n >= 1; cache[0] unused
    std::lock_guard<std::mutex> lock(mu);
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        int rest = m, result = 1;
        for (int p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                rest /= p;
                if (rest % p == 0) {
                    result = 0;
                    break;
                }
                result = -result;
            }
        }
        if (result != 0 && rest > 1) result = -result;
        cache.push_back(result);
    }
    return cache[static_cast<size_t>(n)];
}

} // namespace hopfseq
