#include "hopfseq/embed.hpp"

#include "hopfseq/errors.hpp"
#include "hopfseq/transforms.hpp"

namespace hopfseq {

Embedding embed_subalgebra(const Sequence& host_a, const Sequence& target_b, int max_degree) {
    if (max_degree < 1) throw Error(Errc::invalid_argument, "max_degree must be positive");
    if (host_a.degree() < max_degree || target_b.degree() < max_degree)
        throw Error(Errc::invalid_argument,
                    "generator-count sequences must cover degrees 1.." + std::to_string(max_degree));
    Sequence a = host_a.prefix(max_degree);
    Sequence b = target_b.prefix(max_degree);
    GradedAlphabet alphabet(a);    // validates nonnegative-integral counts
    GradedAlphabet target_check(b); // same validation for the target
    (void)target_check;
    Sequence p = a_to_p(a);
    Sequence q = a_to_p(b);
    if (auto bad = first_violation(q, p))
        throw Error(Errc::no_embedding_exists,
                    "primitive counts fail q <= p at degree " + std::to_string(*bad) + " (q_" +
                        std::to_string(*bad) + " = " + to_string(q.at(*bad)) + " > p_" +
                        std::to_string(*bad) + " = " + to_string(p.at(*bad)) + ")");

    Embedding result{alphabet, {}, {}};
    std::vector<std::vector<NcPoly>> lie_basis(static_cast<size_t>(max_degree) + 1);

    for (int n = 1; n <= max_degree; ++n) {
        WordBasis basis(alphabet, n);
        long b_n = b.at(n).get_num().get_si();

        // Span the degree-n derived subalgebra of the tower built so far.
        RowSpan derived_span(basis.dim());
        std::vector<NcPoly> degree_basis; // basis of L_n = span(new gens) + [L, L]_n
        for (int i = 1; i < n; ++i) {
            for (const NcPoly& u : lie_basis[static_cast<size_t>(i)]) {
                for (const NcPoly& v : lie_basis[static_cast<size_t>(n - i)]) {
                    NcPoly w = commutator(u, v);
                    if (!w.is_zero() && derived_span.insert(basis.coordinates(w)))
                        degree_basis.push_back(std::move(w));
                }
            }
        }
        long expected_derived = q.at(n).get_num().get_si() - b_n;
        if (static_cast<long>(derived_span.rank()) != expected_derived)
            throw Error(Errc::internal_error,
                        "derived subalgebra at degree " + std::to_string(n) + " has dimension " +
                            std::to_string(derived_span.rank()) + ", expected " +
                            std::to_string(expected_derived));

        // Pick the first b_n primitives independent modulo the derived part.
        std::vector<NcPoly> chosen;
        for (const NcPoly& candidate : primitive_space_basis(alphabet, n)) {
            if (static_cast<long>(chosen.size()) == b_n) break;
            if (derived_span.insert(basis.coordinates(candidate))) chosen.push_back(candidate);
        }
        if (static_cast<long>(chosen.size()) != b_n)
            throw Error(Errc::internal_error,
                        "could not find " + std::to_string(b_n) +
                            " independent primitives at degree " + std::to_string(n));
        degree_basis.insert(degree_basis.end(), chosen.begin(), chosen.end());
        lie_basis[static_cast<size_t>(n)] = std::move(degree_basis);
        result.generators.push_back(std::move(chosen));
    }

    // The generated associative subalgebra must have the dimensions of
    // U(L(target_b)); anything else is a bug, not a property of the inputs.
    Sequence expected_dims = invert(b);
    std::vector<std::vector<NcPoly>> assoc_basis(static_cast<size_t>(max_degree) + 1);
    for (int n = 1; n <= max_degree; ++n) {
        WordBasis basis(alphabet, n);
        RowSpan span(basis.dim());
        std::vector<NcPoly> kept;
        auto offer = [&](const NcPoly& f) {
            if (!f.is_zero() && span.insert(basis.coordinates(f))) kept.push_back(f);
        };
        for (const NcPoly& g : result.generators[static_cast<size_t>(n - 1)]) offer(g);
        for (int i = 1; i < n; ++i)
            for (const NcPoly& u : assoc_basis[static_cast<size_t>(i)])
                for (const NcPoly& v : assoc_basis[static_cast<size_t>(n - i)]) offer(u * v);
        result.subalgebra_dims.push_back(static_cast<long>(span.rank()));
        if (Rat(static_cast<long>(span.rank())) != expected_dims.at(n))
            throw Error(Errc::internal_error,
                        "embedded subalgebra has dimension " + std::to_string(span.rank()) +
                            " at degree " + std::to_string(n) + ", expected " +
                            to_string(expected_dims.at(n)));
        assoc_basis[static_cast<size_t>(n)] = std::move(kept);
    }
    return result;
}

} // namespace hopfseq
