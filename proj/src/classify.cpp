#include "hopfseq/classify.hpp"

#include <nlohmann/json.hpp>

#include "hopfseq/errors.hpp"
#include "hopfseq/transforms.hpp"

namespace hopfseq {

using ordered_json = nlohmann::ordered_json;

const Sequence& Certificate::witness(const std::string& name) const {
    for (const auto& [key, seq] : witnesses)
        if (key == name) return seq;
    throw Error(Errc::invalid_argument, "no witness named '" + name + "'");
}

std::string Certificate::json() const {
    ordered_json doc;
    doc["answer"] = yes ? "YES" : "NO";
    doc["effective_degree"] = effective_degree;
    ordered_json w = ordered_json::object();
    for (const auto& [key, seq] : witnesses) {
        ordered_json arr = ordered_json::array();
        for (int n = 1; n <= seq.degree(); ++n) arr.push_back(to_string(seq.at(n)));
        w[key] = arr;
    }
    doc["witnesses"] = w;
    if (failing_index)
        doc["failing_index"] = *failing_index;
    else
        doc["failing_index"] = nullptr;
    doc["reason"] = reason;
    return doc.dump();
}

std::string Certificate::text() const {
    std::string out = yes ? "YES" : "NO";
    out += " (up to degree " + std::to_string(effective_degree) + ")";
    if (!reason.empty()) out += ": " + reason;
    for (const auto& [key, seq] : witnesses) out += "\n  " + key + " = " + seq.str();
    return out;
}

namespace {

void require_integral(const Sequence& s, const std::string& name) {
    if (!s.is_integral())
        throw Error(Errc::invalid_dimension_sequence,
                    name + " must have integer entries, got " + s.str());
}

Certificate realizability(const Sequence& input, const Sequence& witness_a,
                          const std::string& witness_name) {
    Certificate cert;
    cert.effective_degree = input.degree();
    cert.witnesses.emplace_back(witness_name, witness_a);
    if (auto bad = first_non_natural(witness_a)) {
        cert.yes = false;
        cert.failing_index = *bad;
        cert.reason = witness_name + "_" + std::to_string(*bad) + " = " +
                      to_string(witness_a.at(*bad)) + " is not a nonnegative integer";
    } else {
        cert.yes = true;
    }
    return cert;
}

} // namespace

Certificate realizable(const Sequence& h) {
    require_integral(h, "h");
    return realizability(h, inverti(h), "a");
}

Certificate primitive_realizable(const Sequence& p) {
    require_integral(p, "p");
    return realizability(p, p_to_a(p), "a");
}

Certificate surjection_exists(const Sequence& hH, const Sequence& hK) {
    int degree = std::min(hH.degree(), hK.degree());
    Sequence host = hH.prefix(degree);
    Sequence target = hK.prefix(degree);
    for (auto [seq, name] : {std::pair{&host, "hH"}, std::pair{&target, "hK"}}) {
        require_integral(*seq, name);
        Certificate r = realizable(*seq);
        if (!r.yes)
            throw Error(Errc::not_an_fgccha,
                        std::string(name) + " is not a dimension sequence: " + r.reason);
    }
    Sequence a = inverti(host);
    Sequence b = inverti(target);

    Certificate cert;
    cert.effective_degree = degree;
    cert.witnesses.emplace_back("a", a);
    cert.witnesses.emplace_back("b", b);
    if (auto bad = first_violation(b, a)) {
        cert.yes = false;
        cert.failing_index = *bad;
        cert.reason = "a_" + std::to_string(*bad) + " = " + to_string(a.at(*bad)) + " < b_" +
                      std::to_string(*bad) + " = " + to_string(b.at(*bad));
    } else {
        cert.yes = true;
        cert.reason = "a >= b";
    }
    return cert;
}

Certificate subalgebra_exists(const Sequence& hH, const Sequence& hK) {
    int degree = std::min(hH.degree(), hK.degree());
    Sequence host = hH.prefix(degree);
    Sequence target = hK.prefix(degree);
    require_integral(host, "hH");
    {
        Certificate r = realizable(host);
        if (!r.yes) throw Error(Errc::not_an_fgccha, "hH is not a dimension sequence: " + r.reason);
    }
    require_integral(target, "hK");

    Sequence b = inverti(target);
    Sequence p = euleri(host);

    Certificate cert;
    cert.effective_degree = degree;
    cert.witnesses.emplace_back("b", b);
    if (auto bad = first_non_natural(b)) {
        cert.yes = false;
        cert.failing_index = *bad;
        cert.reason = "hK is not a dimension sequence: b_" + std::to_string(*bad) + " = " +
                      to_string(b.at(*bad));
        cert.witnesses.emplace_back("p", p);
        return cert;
    }
    Sequence q = a_to_p(b);
    cert.witnesses.emplace_back("q", q);
    cert.witnesses.emplace_back("p", p);
    if (auto bad = first_violation(q, p)) {
        cert.yes = false;
        cert.failing_index = *bad;
        cert.reason = "q_" + std::to_string(*bad) + " = " + to_string(q.at(*bad)) + " > p_" +
                      std::to_string(*bad) + " = " + to_string(p.at(*bad));
    } else {
        cert.yes = true;
        cert.reason = "q <= p";
    }
    return cert;
}

namespace {

// DFS over b_1, ..., b_max in lexicographic order. For a fixed prefix the
// zero-padded a_to_p value is the coordinatewise minimum over all extensions,
// so a violated bound prunes the whole subtree; bumping the current entry only
// raises a_to_p further, so the loop over values can stop at the first
// violation as well.
struct SubalgebraSearch {
    Sequence p_bound;
    int max_degree;
    long limit;
    SubalgebraEnumeration result;
    std::vector<Rat> current;

    bool dfs(int position) {
        if (position > max_degree) {
            if (static_cast<long>(result.sequences.size()) >= limit) return false;
            result.sequences.push_back(Sequence(current));
            return true;
        }
        for (long value = 0;; ++value) {
            current[static_cast<size_t>(position - 1)] = Rat(value);
            Sequence q = a_to_p(Sequence(current));
            if (first_violation(q, p_bound)) break;
            if (!dfs(position + 1)) {
                current[static_cast<size_t>(position - 1)] = 0;
                return false;
            }
        }
        current[static_cast<size_t>(position - 1)] = 0;
        return true;
    }
};

} // namespace

SubalgebraEnumeration enumerate_subalgebra_sequences(const Sequence& hH, int max_degree,
                                                     long limit) {
    if (max_degree < 1 || max_degree > hH.degree())
        throw Error(Errc::invalid_argument, "max_degree must be in [1, degree(hH)]");
    if (limit < 1) throw Error(Errc::invalid_argument, "limit must be positive");
    require_integral(hH, "hH");
    {
        Certificate r = realizable(hH);
        if (!r.yes) throw Error(Errc::not_an_fgccha, "hH is not a dimension sequence: " + r.reason);
    }
    SubalgebraSearch search{euleri(hH).prefix(max_degree), max_degree, limit,
                            SubalgebraEnumeration{}, std::vector<Rat>(static_cast<size_t>(max_degree))};
    search.result.exhausted = search.dfs(1);
    return search.result;
}

} // namespace hopfseq
