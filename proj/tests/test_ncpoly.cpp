#include <doctest.h>

#include <random>

#include "hopfseq/coalgebra.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/freealg.hpp"
#include "hopfseq/lyndon.hpp"
#include "testutil.hpp"

using namespace hopfseq;
using testutil::seq;

namespace {

const GradedAlphabet kXYZ(seq("2,1")); // x = g1_1, y = g1_2, z = g2_1

NcPoly poly(const std::string& text) { return NcPoly::parse(kXYZ, text); }

NcPoly x() { return poly("1*g1_1"); }
NcPoly y() { return poly("1*g1_2"); }
NcPoly z() { return poly("1*g2_1"); }

NcPoly random_poly(std::mt19937& rng, const GradedAlphabet& alphabet, int max_degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> degree(1, max_degree);
    NcPoly f(alphabet);
    for (int t = 0; t < 4; ++t) {
        auto words = enumerate_words(alphabet, degree(rng));
        f = f + NcPoly::from_word(alphabet, words[rng() % words.size()], Rat(coeff(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("ring operations") {
    CHECK((x() * y()).str() == "1*g1_1.g1_2");
    CHECK(((x() + y()) * x()) == poly("1*g1_1.g1_1 + 1*g1_2.g1_1"));
    CHECK((x() * z()).homogeneous_degree() == 3);
    CHECK((Rat(2) * x() - x() - x()).is_zero());
    CHECK((x() * NcPoly::unit(kXYZ)) == x());

    NcPoly mixed = x() + z();
    CHECK(!mixed.is_homogeneous());
    CHECK(mixed.component(2) == z());
    CHECK(mixed.max_degree() == 2);

    GradedAlphabet other(seq("1"));
    CHECK_THROWS_WITH_AS(x() + NcPoly::from_letter(other, Letter{1, 1}),
                         doctest::Contains("AlphabetMismatch"), Error);
}

TEST_CASE("polynomial text round trip") {
    NcPoly f = poly("1*g2_1 - 1/2*g1_1.g1_2 + 3*1");
    CHECK(f.coefficient(Word{}) == 3);
    CHECK(f.coefficient(kXYZ.parse_word("g1_1.g1_2")) == Rat(-1, 2));
    CHECK(NcPoly::parse(kXYZ, f.str()) == f);
    CHECK(poly("g1_1 + g1_2") == x() + y()); // bare words get coefficient 1
    CHECK(poly("-2") == Rat(-2) * NcPoly::unit(kXYZ));
    CHECK_THROWS_AS(poly("1*g1_7"), Error);
    CHECK_THROWS_AS(poly("1*"), Error);
    CHECK_THROWS_AS(poly("+"), Error);
    CHECK_THROWS_AS(poly(""), Error);
}

TEST_CASE("coproduct on generators and words") {
    TensorElement dx = coproduct(x());
    CHECK(dx.coefficient(kXYZ.parse_word("g1_1"), Word{}) == 1);
    CHECK(dx.coefficient(Word{}, kXYZ.parse_word("g1_1")) == 1);
    CHECK(dx.terms().size() == 2);

    TensorElement dxy = coproduct(x() * y());
    CHECK(dxy.terms().size() == 4);
    CHECK(dxy.coefficient(kXYZ.parse_word("g1_1"), kXYZ.parse_word("g1_2")) == 1);
    CHECK(dxy.coefficient(kXYZ.parse_word("g1_2"), kXYZ.parse_word("g1_1")) == 1);

    CHECK(is_primitive(commutator(x(), y())));
    CHECK(is_primitive(x()));
    CHECK(!is_primitive(x() * y()));
}

TEST_CASE("coproduct is coassociative, cocommutative, and multiplicative") {
    std::mt19937 rng(37);
    GradedAlphabet alphabet(seq("2,1,0,0,0,0"));
    for (int trial = 0; trial < 15; ++trial) {
        NcPoly f = random_poly(rng, alphabet, 3);
        NcPoly g = random_poly(rng, alphabet, 3);

        TensorElement df = coproduct(f);
        CHECK(df.swapped() == df); // cocommutativity

        CHECK(coproduct(f * g) == coproduct(f) * coproduct(g)); // algebra morphism

        // coassociativity via the coefficient of every (u, v, w) triple:
        // applying Delta to the left factor must match applying it to the right
        std::map<std::tuple<Word, Word, Word>, Rat> left, right;
        for (const auto& [pair, c] : df.terms()) {
            TensorElement dleft = coproduct(NcPoly::from_word(alphabet, pair.first));
            for (const auto& [inner, ci] : dleft.terms())
                left[{inner.first, inner.second, pair.second}] += c * ci;
            TensorElement dright = coproduct(NcPoly::from_word(alphabet, pair.second));
            for (const auto& [inner, ci] : dright.terms())
                right[{pair.first, inner.first, inner.second}] += c * ci;
        }
        std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
        CHECK(left == right);
    }
}

TEST_CASE("eulerian idempotent on the worked examples") {
    CHECK(eulerian_idempotent(x()) == x());
    CHECK(eulerian_idempotent(x() * y()) == Rat(1, 2) * commutator(x(), y()));
    CHECK(eulerian_idempotent(z() + x() * y()) == z() + Rat(1, 2) * commutator(x(), y()));
    CHECK_THROWS_AS(eulerian_idempotent(poly("1 + 1*g1_1")), Error);
}

TEST_CASE("eulerian idempotent is an idempotent projection onto primitives") {
    std::mt19937 rng(41);
    GradedAlphabet alphabet(seq("2,1,0,0,0"));
    for (int trial = 0; trial < 12; ++trial) {
        NcPoly f = random_poly(rng, alphabet, 5);
        NcPoly e = eulerian_idempotent(f);
        CHECK(is_primitive(e));
        CHECK(eulerian_idempotent(e) == e);
    }
    // fixed on an actual basis of the primitives
    for (int n = 1; n <= 5; ++n)
        for (const NcPoly& prim : primitive_space_basis(alphabet, n))
            CHECK(eulerian_idempotent(prim) == prim);
}
