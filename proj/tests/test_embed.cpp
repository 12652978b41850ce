#include <doctest.h>

#include "hopfseq/coalgebra.hpp"
#include "hopfseq/embed.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/transforms.hpp"
#include "testutil.hpp"

using namespace hopfseq;
using testutil::seq;

TEST_CASE("a degree-2 generator embeds into two degree-1 generators") {
    Embedding e = embed_subalgebra(seq("2,0,0,0"), seq("0,1,0,0"), 4);
    CHECK(e.subalgebra_dims == std::vector<long>{0, 1, 0, 1});
    REQUIRE(e.generators[1].size() == 1);
    const NcPoly& g = e.generators[1][0];
    CHECK(is_primitive(g));
    CHECK(g.homogeneous_degree() == 2);
    // the only degree-2 primitive up to scale is xy - yx
    NcPoly bracket = commutator(NcPoly::from_letter(e.host_alphabet, {1, 1}),
                                NcPoly::from_letter(e.host_alphabet, {1, 2}));
    bool scalar_multiple = false;
    for (const Rat& c : {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2), Rat(-2)})
        if (g == c * bracket) scalar_multiple = true;
    CHECK(scalar_multiple);
}

TEST_CASE("no degree-2 generator fits inside one degree-1 generator") {
    CHECK_THROWS_WITH_AS(embed_subalgebra(seq("1,0,0,0"), seq("0,1,0,0"), 4),
                         doctest::Contains("degree 2"), Error);
}

TEST_CASE("one generator per degree embeds into two degree-1 generators") {
    Embedding e = embed_subalgebra(seq("2,0,0,0"), seq("1,1,1,1"), 4);
    CHECK(e.subalgebra_dims == std::vector<long>{1, 2, 4, 8});
    Sequence expected = invert(seq("1,1,1,1"));
    for (int n = 1; n <= 4; ++n) CHECK(Rat(e.subalgebra_dims[n - 1]) == expected.at(n));
    for (size_t n = 0; n < 4; ++n) {
        CHECK(e.generators[n].size() == 1);
        CHECK(is_primitive(e.generators[n][0]));
    }
}

TEST_CASE("reconstructing the host inside itself") {
    Embedding e = embed_subalgebra(seq("2,1,0,0"), seq("2,1,0,0"), 4);
    Sequence expected = invert(seq("2,1,0,0"));
    for (int n = 1; n <= 4; ++n) CHECK(Rat(e.subalgebra_dims[n - 1]) == expected.at(n));
}

TEST_CASE("a richer host accepts several target shapes") {
    for (const std::string target : {"2,0,0,0", "0,1,0,1", "1,1,1,0", "0,0,2,0"}) {
        Embedding e = embed_subalgebra(seq("2,0,0,0"), seq(target), 4);
        Sequence expected = invert(seq(target));
        for (int n = 1; n <= 4; ++n) CHECK(Rat(e.subalgebra_dims[n - 1]) == expected.at(n));
    }
    // q = a_to_p(0,3,0,0) has q_2 = 3 > p_2 = 1
    CHECK_THROWS_AS(embed_subalgebra(seq("2,0,0,0"), seq("0,3,0,0"), 4), Error);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(embed_subalgebra(seq("2,0"), seq("0,1,0"), 3), Error);
    CHECK_THROWS_AS(embed_subalgebra(seq("-1,0"), seq("0,1"), 2), Error);
    CHECK_THROWS_AS(embed_subalgebra(seq("2,0"), seq("1,1"), 0), Error);
}
