#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "hopfseq/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hopfseq/errors.hpp"

namespace fs = std::filesystem;

namespace hopfseq {

std::string canonical_a_number(const std::string& id) {
    if (id.size() < 2 || id.size() > 7 || (id[0] != 'A' && id[0] != 'a'))
        throw Error(Errc::invalid_argument, "bad OEIS identifier '" + id + "'");
    std::string digits = id.substr(1);
    for (char c : digits)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw Error(Errc::invalid_argument, "bad OEIS identifier '" + id + "'");
    return "A" + std::string(6 - digits.size(), '0') + digits;
}

BFile parse_bfile(const std::string& text) {
    BFile out;
    std::istringstream in(text);
    std::string line;
    long long line_number = 0;
    bool have_first = false;
    while (std::getline(in, line)) {
        ++line_number;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        long long index = 0;
        std::string value_text;
        std::string extra;
        if (!(fields >> index >> value_text) || (fields >> extra))
            throw Error(Errc::parse_error, "malformed b-file line " + std::to_string(line_number) +
                                               ": '" + line + "'");
        Int value;
        if (mpz_set_str(value.get_mpz_t(), value_text.c_str(), 10) != 0)
            throw Error(Errc::parse_error, "malformed b-file line " + std::to_string(line_number) +
                                               ": '" + line + "'");
        if (!have_first) {
            out.first_index = index;
            have_first = true;
        } else if (index != out.first_index + static_cast<long long>(out.values.size())) {
            throw Error(Errc::parse_error, "non-consecutive index at b-file line " +
                                               std::to_string(line_number));
        }
        out.values.push_back(std::move(value));
    }
    if (!have_first) throw Error(Errc::parse_error, "b-file contains no terms");
    return out;
}

Sequence OeisEntry::raw_terms() const {
    std::vector<Rat> entries;
    entries.reserve(values.size());
    for (const Int& v : values) entries.emplace_back(v);
    return Sequence(std::move(entries));
}

Sequence OeisEntry::aligned_terms() const {
    std::vector<Rat> entries;
    for (size_t i = 0; i < values.size(); ++i) {
        long long index = first_index + static_cast<long long>(i);
        if (index >= 1) entries.emplace_back(values[i]);
    }
    return Sequence(std::move(entries));
}

OeisClient::OeisClient(OeisConfig config) : config_(std::move(config)) {}

std::string OeisClient::bfile_name(const std::string& a_number) const {
    return "b" + a_number.substr(1) + ".txt";
}

std::mutex& OeisClient::entry_mutex(const std::string& a_number) {
    std::lock_guard<std::mutex> lock(map_mutex_);
    auto& slot = entry_mutexes_[a_number];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

namespace {

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json load_index(const fs::path& path) {
    auto text = read_file(path);
    if (!text) return nlohmann::json::object();
    nlohmann::json doc = nlohmann::json::parse(*text, nullptr, /*allow_exceptions=*/false);
    return doc.is_object() ? doc : nlohmann::json::object();
}

OeisEntry make_entry(const std::string& a_number, const BFile& bfile, int max_terms,
                     OeisEntry::Source source, std::time_t fetched_at) {
    OeisEntry entry;
    entry.a_number = a_number;
    entry.first_index = bfile.first_index;
    entry.values = bfile.values;
    if (max_terms >= 0 && entry.values.size() > static_cast<size_t>(max_terms))
        entry.values.resize(static_cast<size_t>(max_terms));
    entry.source = source;
    entry.fetched_at = fetched_at;
    return entry;
}

} // namespace

OeisEntry OeisClient::fetch(const std::string& id, int max_terms) {
    if (max_terms < 1) throw Error(Errc::invalid_argument, "max_terms must be positive");
    std::string a_number = canonical_a_number(id);
    std::lock_guard<std::mutex> lock(entry_mutex(a_number));

    fs::path cache_file;
    std::time_t cached_at = 0;
    std::optional<BFile> cached;
    if (!config_.cache_dir.empty()) {
        cache_file = fs::path(config_.cache_dir) / bfile_name(a_number);
        if (auto text = read_file(cache_file)) {
            cached = parse_bfile(*text);
            nlohmann::json index = load_index(fs::path(config_.cache_dir) / "index.json");
            if (index.contains(a_number) && index[a_number].contains("fetched_at"))
                cached_at = index[a_number]["fetched_at"].get<std::time_t>();
        }
    }
    std::time_t now = std::time(nullptr);
    if (cached && now - cached_at < config_.freshness_seconds)
        return make_entry(a_number, *cached, max_terms, OeisEntry::Source::cache, cached_at);

    if (!config_.fixture_dir.empty()) {
        if (auto text = read_file(fs::path(config_.fixture_dir) / bfile_name(a_number)))
            return make_entry(a_number, parse_bfile(*text), max_terms, OeisEntry::Source::fixture,
                              now);
    }

    if (!config_.offline) {
        httplib::Client client(config_.base_url);
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        std::string path = "/" + a_number + "/" + bfile_name(a_number);
        httplib::Result res = client.Get(path);
        if (res && res->status == 404)
            throw Error(Errc::not_found, "no b-file for " + a_number + " (HTTP 404)");
        if (res && res->status == 200) {
            BFile bfile = parse_bfile(res->body);
            if (!config_.cache_dir.empty()) {
                fs::create_directories(config_.cache_dir);
                std::ofstream out(cache_file, std::ios::binary);
                out << res->body;
                fs::path index_path = fs::path(config_.cache_dir) / "index.json";
                nlohmann::json index = load_index(index_path);
                index[a_number] = {{"fetched_at", now}, {"source", "network"}};
                std::ofstream(index_path) << index.dump(2);
            }
            return make_entry(a_number, bfile, max_terms, OeisEntry::Source::network, now);
        }
        // Fall through on transport errors and non-404 statuses.
    }

    if (cached) // stale copy beats nothing
        return make_entry(a_number, *cached, max_terms, OeisEntry::Source::cache, cached_at);
    throw Error(Errc::unavailable,
                "cannot fetch " + a_number + ": network unavailable and nothing cached");
}

std::vector<std::pair<std::string, long long>> OeisClient::identify(const Sequence& s) const {
    if (s.degree() < 4)
        throw Error(Errc::invalid_argument, "identify needs at least 4 terms");
    if (!s.is_integral())
        throw Error(Errc::invalid_argument, "identify needs an integral sequence");
    std::vector<Int> needle;
    for (int n = 1; n <= s.degree(); ++n) needle.push_back(s.at(n).get_num());

    std::map<std::string, long long> matches;
    auto scan_dir = [&](const std::string& dir) {
        if (dir.empty() || !fs::is_directory(dir)) return;
        for (const auto& item : fs::directory_iterator(dir)) {
            std::string name = item.path().filename().string();
            if (name.size() != 11 || name.substr(0, 1) != "b" || name.substr(7) != ".txt") continue;
            std::string a_number = "A" + name.substr(1, 6);
            if (matches.count(a_number)) continue;
            auto text = read_file(item.path());
            if (!text) continue;
            BFile bfile;
            try {
                bfile = parse_bfile(*text);
            } catch (const Error&) {
                continue; // identify never fails on a corrupt neighbor
            }
            if (bfile.values.size() < needle.size()) continue;
            auto hit = std::search(bfile.values.begin(), bfile.values.end(), needle.begin(),
                                   needle.end());
            if (hit != bfile.values.end()) {
                long long start = hit - bfile.values.begin();
                matches[a_number] = bfile.first_index + start - 1;
            }
        }
    };
    scan_dir(config_.cache_dir);
    scan_dir(config_.fixture_dir);
    return {matches.begin(), matches.end()};
}

} // namespace hopfseq
