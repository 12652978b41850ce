#include "hopfseq/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <nlohmann/json.hpp>

#include "hopfseq/classify.hpp"
#include "hopfseq/coalgebra.hpp"
#include "hopfseq/embed.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/lyndon.hpp"
#include "hopfseq/oeis.hpp"
#include "hopfseq/surjection.hpp"
#include "hopfseq/transforms.hpp"

namespace hopfseq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json sequence_json(const Sequence& s) {
    ordered_json arr = ordered_json::array();
    for (int n = 1; n <= s.degree(); ++n) arr.push_back(to_string(s.at(n)));
    return arr;
}

int emit_certificate(const Certificate& cert, bool json, std::ostream& out) {
    out << (json ? cert.json() : cert.text()) << "\n";
    return cert.yes ? 0 : 1;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("HOPFSEQ_OEIS_CACHE")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/hopfseq/oeis";
    return "hopfseq-oeis-cache";
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("HOPFSEQ_OEIS_FIXTURES")) return env;
    return "";
}

// Groups homogeneous generator polynomials by degree, preserving the order
// they were given in.
std::vector<std::vector<NcPoly>> group_by_degree(const GradedAlphabet& alphabet,
                                                 const std::vector<std::string>& texts,
                                                 int max_degree) {
    std::vector<std::vector<NcPoly>> tuples(static_cast<size_t>(max_degree));
    for (const std::string& text : texts) {
        NcPoly g = NcPoly::parse(alphabet, text);
        auto degree = g.homogeneous_degree();
        if (!degree)
            throw Error(Errc::invalid_argument,
                        "generator '" + text + "' must be homogeneous of positive degree");
        if (*degree < 1 || *degree > max_degree)
            throw Error(Errc::invalid_argument, "generator '" + text + "' has degree " +
                                                    std::to_string(*degree) + ", outside 1.." +
                                                    std::to_string(max_degree));
        tuples[static_cast<size_t>(*degree - 1)].push_back(std::move(g));
    }
    return tuples;
}

struct CliOptions {
    bool json = false;
    bool offline = false;
    std::string cache_dir = default_cache_dir();
    std::string fixture_dir = default_fixture_dir();

    OeisConfig oeis_config() const {
        OeisConfig config;
        config.cache_dir = cache_dir;
        config.fixture_dir = fixture_dir;
        config.offline = offline;
        return config;
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for free graded connected cocommutative Hopf algebras,\n"
                 "seen through their dimension / generator / primitive sequences."};
    app.require_subcommand(1);
    CliOptions options;
    app.add_flag("--json", options.json, "structured JSON output");
    app.add_flag("--offline", options.offline, "never touch the network");
    app.add_option("--cache-dir", options.cache_dir, "OEIS b-file cache directory");
    app.add_option("--fixtures", options.fixture_dir, "bundled OEIS b-file directory");

    // transform
    std::string transform_kind, transform_seq;
    CLI::App* transform = app.add_subcommand("transform", "apply a sequence transfer map");
    transform->add_option("--kind", transform_kind, "invert|inverti|euler|euleri|a2p|p2a")
        ->required();
    transform->add_option("--seq", transform_seq, "comma-separated exact rationals")->required();

    // realize
    std::string realize_seq;
    bool realize_primitive = false;
    CLI::App* realize = app.add_subcommand("realize", "decide realizability of a sequence");
    realize->add_option("--seq", realize_seq, "candidate dimension sequence")->required();
    realize->add_flag("--primitive", realize_primitive,
                      "treat the input as a primitive-dimension sequence");

    // surjects
    std::string surj_from, surj_to;
    CLI::App* surjects = app.add_subcommand("surjects", "decide existence of a surjection");
    surjects->add_option("--from", surj_from, "dimension sequence of the source")->required();
    surjects->add_option("--to", surj_to, "dimension sequence of the target")->required();

    // embeds
    std::string embeds_host, embeds_sub;
    CLI::App* embeds = app.add_subcommand("embeds", "decide existence of a Hopf subalgebra");
    embeds->add_option("--host", embeds_host, "dimension sequence of the host")->required();
    embeds->add_option("--sub", embeds_sub, "dimension sequence of the candidate subalgebra")
        ->required();

    // enumerate-subs
    std::string enum_host;
    int enum_max_degree = 0;
    long enum_limit = 0;
    CLI::App* enum_subs =
        app.add_subcommand("enumerate-subs", "enumerate subalgebra generator sequences");
    enum_subs->add_option("--host", enum_host, "dimension sequence of the host")->required();
    enum_subs->add_option("--max-degree", enum_max_degree, "truncation degree")->required();
    enum_subs->add_option("--limit", enum_limit, "maximum number of sequences")->required();

    // lyndon
    CLI::App* lyndon = app.add_subcommand("lyndon", "word and Lyndon word combinatorics");
    lyndon->require_subcommand(1);
    std::string lyndon_alphabet;
    int lyndon_degree = 0;
    bool lyndon_count_lyndon = false;
    CLI::App* lyndon_count = lyndon->add_subcommand("count", "count degree-n words");
    lyndon_count->add_option("--alphabet", lyndon_alphabet, "letter counts per degree")->required();
    lyndon_count->add_option("--degree", lyndon_degree, "degree n")->required();
    lyndon_count->add_flag("--lyndon", lyndon_count_lyndon, "count Lyndon words instead");
    CLI::App* lyndon_list = lyndon->add_subcommand("list", "list degree-n Lyndon words");
    lyndon_list->add_option("--alphabet", lyndon_alphabet, "letter counts per degree")->required();
    lyndon_list->add_option("--degree", lyndon_degree, "degree n")->required();
    CLI::App* lyndon_balanced =
        lyndon->add_subcommand("balanced", "count balanced binary Lyndon words of length 2n");
    lyndon_balanced->add_option("--degree", lyndon_degree, "half-length n")->required();

    // kernel
    CLI::App* kernel = app.add_subcommand("kernel", "symbolic free-algebra kernel");
    kernel->require_subcommand(1);
    std::string kernel_alphabet, kernel_poly, kernel_host, kernel_target, kernel_input;
    int kernel_max_degree = 0;
    std::vector<std::string> kernel_gens, kernel_host_gens, kernel_target_gens;
    CLI::App* prim_dims =
        kernel->add_subcommand("primitive-dims", "graded dimensions of the primitive subspace");
    prim_dims->add_option("--alphabet", kernel_alphabet, "letter counts per degree")->required();
    prim_dims->add_option("--max-degree", kernel_max_degree, "compute degrees 1..N")->required();
    CLI::App* euler_idem = kernel->add_subcommand("euler-idempotent",
                                                  "project an element onto the primitives");
    euler_idem->add_option("--alphabet", kernel_alphabet, "letter counts per degree")->required();
    euler_idem->add_option("--poly", kernel_poly, "element in the word basis")->required();
    CLI::App* verify = kernel->add_subcommand("verify-opg",
                                              "check an ordered primitive generating set");
    verify->add_option("--alphabet", kernel_alphabet, "letter counts per degree")->required();
    verify->add_option("--max-degree", kernel_max_degree, "verify degrees 1..N")->required();
    verify->add_option("--gen", kernel_gens, "candidate generator (repeatable)")->required();
    CLI::App* surjection = kernel->add_subcommand("surjection", "apply the canonical surjection");
    surjection->add_option("--host", kernel_host, "host generator counts per degree")->required();
    surjection->add_option("--target", kernel_target, "target generator counts per degree")
        ->required();
    surjection->add_option("--input", kernel_input, "element of the host algebra")->required();
    surjection->add_option("--host-gen", kernel_host_gens,
                           "override the host generating set (repeatable)");
    surjection->add_option("--target-gen", kernel_target_gens,
                           "override the target generating set (repeatable)");
    CLI::App* embed = kernel->add_subcommand("embed", "construct a Hopf subalgebra copy");
    embed->add_option("--host", kernel_host, "host generator counts per degree")->required();
    embed->add_option("--sub", kernel_target, "subalgebra generator counts per degree")->required();
    embed->add_option("--max-degree", kernel_max_degree, "construct degrees 1..N")->required();

    // oeis
    CLI::App* oeis = app.add_subcommand("oeis", "OEIS b-file retrieval and lookup");
    oeis->require_subcommand(1);
    std::string oeis_id, oeis_seq;
    int oeis_max_terms = 12;
    bool oeis_aligned = false;
    CLI::App* oeis_fetch = oeis->add_subcommand("fetch", "fetch a b-file");
    oeis_fetch->add_option("--id", oeis_id, "A-number, e.g. A000108")->required();
    oeis_fetch->add_option("--max-terms", oeis_max_terms, "terms to return (default 12)");
    oeis_fetch->add_flag("--aligned", oeis_aligned, "drop terms with b-file index < 1");
    CLI::App* oeis_identify = oeis->add_subcommand("identify", "match a sequence offline");
    oeis_identify->add_option("--seq", oeis_seq, "integer sequence, at least 4 terms")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (transform->parsed()) {
            Sequence input = Sequence::parse(transform_seq);
            Sequence result;
            if (transform_kind == "invert") result = invert(input);
            else if (transform_kind == "inverti") result = inverti(input);
            else if (transform_kind == "euler") result = euler(input);
            else if (transform_kind == "euleri") result = euleri(input);
            else if (transform_kind == "a2p") result = a_to_p(input);
            else if (transform_kind == "p2a") result = p_to_a(input);
            else throw Error(Errc::invalid_argument, "unknown transform kind '" + transform_kind + "'");
            if (options.json) {
                ordered_json doc;
                doc["kind"] = transform_kind;
                doc["result"] = sequence_json(result);
                out << doc.dump() << "\n";
            } else {
                out << result.str() << "\n";
            }
            return 0;
        }
        if (realize->parsed()) {
            Sequence input = Sequence::parse(realize_seq);
            Certificate cert = realize_primitive ? primitive_realizable(input) : realizable(input);
            return emit_certificate(cert, options.json, out);
        }
        if (surjects->parsed())
            return emit_certificate(
                surjection_exists(Sequence::parse(surj_from), Sequence::parse(surj_to)),
                options.json, out);
        if (embeds->parsed())
            return emit_certificate(
                subalgebra_exists(Sequence::parse(embeds_host), Sequence::parse(embeds_sub)),
                options.json, out);
        if (enum_subs->parsed()) {
            SubalgebraEnumeration enumeration = enumerate_subalgebra_sequences(
                Sequence::parse(enum_host), enum_max_degree, enum_limit);
            if (options.json) {
                ordered_json doc;
                ordered_json arr = ordered_json::array();
                for (const Sequence& b : enumeration.sequences) arr.push_back(sequence_json(b));
                doc["sequences"] = arr;
                doc["exhausted"] = enumeration.exhausted;
                out << doc.dump() << "\n";
            } else {
                for (const Sequence& b : enumeration.sequences) out << b.str() << "\n";
                out << "exhausted: " << (enumeration.exhausted ? "true" : "false") << "\n";
            }
            return 0;
        }
        if (lyndon->parsed()) {
            if (lyndon_balanced->parsed()) {
                Int count = count_balanced_binary_lyndon(lyndon_degree);
                if (options.json)
                    out << ordered_json{{"count", to_string(count)}}.dump() << "\n";
                else
                    out << to_string(count) << "\n";
                return 0;
            }
            GradedAlphabet alphabet(Sequence::parse(lyndon_alphabet));
            if (lyndon_count->parsed()) {
                Int count = lyndon_count_lyndon
                                ? Int(enumerate_lyndon(alphabet, lyndon_degree).size())
                                : count_words(alphabet, lyndon_degree);
                if (options.json)
                    out << ordered_json{{"count", to_string(count)}}.dump() << "\n";
                else
                    out << to_string(count) << "\n";
                return 0;
            }
            ordered_json arr = ordered_json::array();
            for (const Word& w : enumerate_lyndon(alphabet, lyndon_degree)) {
                if (options.json)
                    arr.push_back(word_str(w));
                else
                    out << word_str(w) << "\n";
            }
            if (options.json) out << ordered_json{{"words", arr}}.dump() << "\n";
            return 0;
        }
        if (kernel->parsed()) {
            if (prim_dims->parsed()) {
                GradedAlphabet alphabet(Sequence::parse(kernel_alphabet));
                std::vector<long> dims;
                for (int n = 1; n <= kernel_max_degree; ++n)
                    dims.push_back(static_cast<long>(primitive_space_basis(alphabet, n).size()));
                Sequence result = Sequence::from_longs(dims);
                if (options.json)
                    out << ordered_json{{"dims", sequence_json(result)}}.dump() << "\n";
                else
                    out << result.str() << "\n";
                return 0;
            }
            if (euler_idem->parsed()) {
                GradedAlphabet alphabet(Sequence::parse(kernel_alphabet));
                NcPoly result = eulerian_idempotent(NcPoly::parse(alphabet, kernel_poly));
                if (options.json)
                    out << ordered_json{{"result", result.str()}}.dump() << "\n";
                else
                    out << result.str() << "\n";
                return 0;
            }
            if (verify->parsed()) {
                GradedAlphabet alphabet(Sequence::parse(kernel_alphabet));
                OrderedPrimGenSet candidate{
                    alphabet, group_by_degree(alphabet, kernel_gens, kernel_max_degree)};
                OpgCheck check = verify_opg(candidate, kernel_max_degree);
                if (options.json) {
                    ordered_json doc;
                    doc["answer"] = check.ok ? "YES" : "NO";
                    doc["failing_degree"] = check.ok ? ordered_json(nullptr) : ordered_json(check.degree);
                    doc["reason"] = check.message;
                    out << doc.dump() << "\n";
                } else {
                    out << (check.ok ? "YES" : "NO: " + check.message) << "\n";
                }
                return check.ok ? 0 : 1;
            }
            if (surjection->parsed()) {
                GradedAlphabet host_alphabet(Sequence::parse(kernel_host));
                GradedAlphabet target_alphabet(Sequence::parse(kernel_target));
                int host_degree = host_alphabet.max_degree();
                int target_degree = target_alphabet.max_degree();
                OrderedPrimGenSet A = canonical_opg(host_alphabet, host_degree);
                OrderedPrimGenSet B = canonical_opg(target_alphabet, target_degree);
                if (!kernel_host_gens.empty())
                    A.tuples = group_by_degree(host_alphabet, kernel_host_gens, host_degree);
                if (!kernel_target_gens.empty())
                    B.tuples = group_by_degree(target_alphabet, kernel_target_gens, target_degree);
                NcPoly input = NcPoly::parse(host_alphabet, kernel_input);
                NcPoly result = build_surjection(A, B, input);
                if (options.json)
                    out << ordered_json{{"result", result.str()}}.dump() << "\n";
                else
                    out << result.str() << "\n";
                return 0;
            }
            // kernel embed
            Embedding embedding = embed_subalgebra(Sequence::parse(kernel_host),
                                                   Sequence::parse(kernel_target),
                                                   kernel_max_degree);
            if (options.json) {
                ordered_json doc;
                ordered_json gens = ordered_json::array();
                for (const auto& tuple : embedding.generators) {
                    ordered_json level = ordered_json::array();
                    for (const NcPoly& g : tuple) level.push_back(g.str());
                    gens.push_back(level);
                }
                doc["generators"] = gens;
                doc["subalgebra_dims"] = sequence_json(Sequence::from_longs(embedding.subalgebra_dims));
                out << doc.dump() << "\n";
            } else {
                for (size_t n = 0; n < embedding.generators.size(); ++n)
                    for (const NcPoly& g : embedding.generators[n])
                        out << "degree " << (n + 1) << ": " << g.str() << "\n";
                out << "dims: " << Sequence::from_longs(embedding.subalgebra_dims).str() << "\n";
            }
            return 0;
        }
        if (oeis->parsed()) {
            OeisClient client(options.oeis_config());
            if (oeis_fetch->parsed()) {
                OeisEntry entry = client.fetch(oeis_id, oeis_max_terms);
                if (options.json) {
                    ordered_json doc;
                    doc["a_number"] = entry.a_number;
                    doc["first_index"] = entry.first_index;
                    doc["source"] = entry.source == OeisEntry::Source::network ? "network"
                                    : entry.source == OeisEntry::Source::cache ? "cache"
                                                                               : "fixture";
                    doc["raw"] = sequence_json(entry.raw_terms());
                    doc["aligned"] = sequence_json(entry.aligned_terms());
                    out << doc.dump() << "\n";
                } else {
                    out << (oeis_aligned ? entry.aligned_terms() : entry.raw_terms()).str() << "\n";
                }
                return 0;
            }
            auto matches = client.identify(Sequence::parse(oeis_seq));
            if (options.json) {
                ordered_json arr = ordered_json::array();
                for (const auto& [a_number, offset] : matches)
                    arr.push_back({{"a_number", a_number}, {"offset", offset}});
                out << ordered_json{{"matches", arr}}.dump() << "\n";
            } else {
                for (const auto& [a_number, offset] : matches)
                    out << a_number << " offset " << offset << "\n";
            }
            return 0;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        switch (e.code()) {
            case Errc::no_surjection_exists:
            case Errc::no_embedding_exists:
                return 1;
            case Errc::unavailable:
                return 3;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hopfseq
