#include <doctest.h>

#include "hopfseq/classify.hpp"
#include "hopfseq/coalgebra.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/lyndon.hpp"
#include "hopfseq/surjection.hpp"
#include "hopfseq/transforms.hpp"
#include "testutil.hpp"

using namespace hopfseq;
using testutil::seq;

namespace {

// Checks Delta_K . f = (f (x) f) . Delta_H on one element.
bool is_coalgebra_morphism_at(const Surjection& f, const NcPoly& input) {
    TensorElement lhs = coproduct(f.apply(input));
    TensorElement rhs(f.target().alphabet);
    TensorElement dinput = coproduct(input);
    for (const auto& [pair, c] : dinput.terms()) {
        NcPoly left = f.apply(NcPoly::from_word(f.host().alphabet, pair.first));
        NcPoly right = f.apply(NcPoly::from_word(f.host().alphabet, pair.second));
        rhs = rhs + c * tensor(left, right);
    }
    return lhs == rhs;
}

} // namespace

TEST_CASE("the quotient map killing the shifted degree-2 generator") {
    // H = free on x, y (degree 1) and z (degree 2); K = free on u, v (degree 1).
    GradedAlphabet host_alphabet(seq("2,1,0"));
    GradedAlphabet target_alphabet(seq("2,0,0"));
    NcPoly x = NcPoly::from_letter(host_alphabet, {1, 1});
    NcPoly y = NcPoly::from_letter(host_alphabet, {1, 2});
    NcPoly z = NcPoly::from_letter(host_alphabet, {2, 1});
    NcPoly u = NcPoly::from_letter(target_alphabet, {1, 1});
    NcPoly v = NcPoly::from_letter(target_alphabet, {1, 2});

    OrderedPrimGenSet A{host_alphabet, {{x, y}, {z - x * y + y * x}, {}}};
    OrderedPrimGenSet B{target_alphabet, {{u, v}, {}, {}}};
    Surjection f(A, B);

    CHECK(f.apply(x) == u);
    CHECK(f.apply(y) == v);
    CHECK(f.apply(z) == commutator(u, v)); // z = (z - xy + yx) + xy - yx maps to uv - vu
    CHECK(f.apply(z - x * y + y * x).is_zero());
    CHECK(f.apply(commutator(x, y)) == commutator(u, v));

    // algebra and coalgebra morphism on everything of degree <= 3
    for (int n = 1; n <= 3; ++n)
        for (const Word& w : enumerate_words(host_alphabet, n))
            CHECK(is_coalgebra_morphism_at(f, NcPoly::from_word(host_alphabet, w)));
    CHECK(f.apply(x * z) == f.apply(x) * f.apply(z));
}

TEST_CASE("identity surjection") {
    GradedAlphabet alphabet(seq("2,1,0,0"));
    OrderedPrimGenSet A = canonical_opg(alphabet, 4);
    Surjection f(A, A);
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : enumerate_words(alphabet, n)) {
            NcPoly element = NcPoly::from_word(alphabet, w);
            CHECK(f.apply(element) == element);
        }
}

TEST_CASE("count violations are rejected") {
    GradedAlphabet small(seq("1,0"));
    GradedAlphabet big(seq("2,0"));
    CHECK_THROWS_WITH_AS(Surjection(canonical_opg(small, 2), canonical_opg(big, 2)),
                         doctest::Contains("NoSurjectionExists"), Error);
}

TEST_CASE("surjection existence agrees with constructibility on a small grid") {
    // every generator-count vector over degrees <= 3 with entries <= 2
    std::vector<Sequence> grid;
    for (long a1 = 0; a1 <= 2; ++a1)
        for (long a2 = 0; a2 <= 2; ++a2)
            for (long a3 = 0; a3 <= 2; ++a3) grid.push_back(Sequence::from_longs({a1, a2, a3}));

    for (const Sequence& a : grid) {
        for (const Sequence& b : grid) {
            bool decision = surjection_exists(invert(a), invert(b)).yes;
            bool constructed = false;
            try {
                Surjection f(canonical_opg(GradedAlphabet(a), 3), canonical_opg(GradedAlphabet(b), 3));
                constructed = true;
                // spot-check the morphism property on low degrees
                GradedAlphabet host_alphabet(a);
                for (int n = 1; n <= 2; ++n)
                    for (const Word& w : enumerate_words(host_alphabet, n))
                        CHECK(is_coalgebra_morphism_at(f, NcPoly::from_word(host_alphabet, w)));
            } catch (const Error& e) {
                CHECK(e.code() == Errc::no_surjection_exists);
            }
            CHECK(decision == constructed);
        }
    }
}
