#ifndef HOPFSEQ_OEIS_HPP
#define HOPFSEQ_OEIS_HPP

#include <ctime>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hopfseq/sequence.hpp"

namespace hopfseq {

// Canonicalizes "A108" / "a000108" to "A000108"; anything else is rejected.
std::string canonical_a_number(const std::string& id);

// Parses b-file text: lines of "index value", with '#' comments and blank
// lines ignored. Indices must be consecutive. Throws ParseError with the
// offending 1-based line number.
struct BFile {
    long long first_index = 0;
    std::vector<Int> values; // in file order
};
BFile parse_bfile(const std::string& text);

struct OeisEntry {
    std::string a_number;
    long long first_index = 0;
    std::vector<Int> values; // in file order, truncated to the requested count
    enum class Source { network, cache, fixture } source = Source::cache;
    std::time_t fetched_at = 0;

    // The values in file order, re-1-indexed.
    Sequence raw_terms() const;
    // Only the values with b-file index >= 1, re-1-indexed. OEIS entries for
    // power series with constant term 1 list that constant at index 0; this
    // view drops it, matching the h/a/p indexing used everywhere else here.
    Sequence aligned_terms() const;
};

struct OeisConfig {
    std::string cache_dir;           // "" disables the disk cache
    std::string fixture_dir;         // read-only bundled b-files, may be ""
    bool offline = false;            // never touch the network
    long freshness_seconds = 30l * 24 * 3600;
    std::string base_url = "https://oeis.org";
};

class OeisClient {
  public:
    explicit OeisClient(OeisConfig config);

    // Resolution order: fresh cache, bundled fixture, network (unless
    // offline), stale cache. HTTP 404 raises NotFound; running out of
    // options raises Unavailable.
    OeisEntry fetch(const std::string& a_number, int max_terms);

    // Scans the cache and fixture directories for entries containing s as a
    // contiguous run of values; never touches the network. Returns
    // (a_number, offset) pairs, sorted, where s_n equals the entry value at
    // b-file index n + offset; for multiple runs the smallest offset wins.
    // Requires s integral with at least 4 terms.
    std::vector<std::pair<std::string, long long>> identify(const Sequence& s) const;

  private:
    std::string bfile_name(const std::string& a_number) const;
    std::mutex& entry_mutex(const std::string& a_number);

    OeisConfig config_;
    std::mutex map_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> entry_mutexes_;
};

} // namespace hopfseq

#endif
