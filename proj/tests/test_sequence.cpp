#include <doctest.h>

#include "hopfseq/compositions.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/sequence.hpp"
#include "testutil.hpp"

using namespace hopfseq;
using testutil::seq;

TEST_CASE("sequence csv parsing and printing") {
    Sequence s = seq("1,2,5,14");
    CHECK(s.degree() == 4);
    CHECK(s.at(1) == 1);
    CHECK(s.at(4) == 14);
    CHECK(s.str() == "1,2,5,14");

    Sequence rats = seq(" 1/2 , 3 ,-7/3 ");
    CHECK(rats.at(1) == Rat(1, 2));
    CHECK(rats.at(3) == Rat(-7, 3));
    CHECK(rats.str() == "1/2,3,-7/3");
    CHECK(!rats.is_integral());

    // unicode minus sign, as pasted from typeset text
    CHECK(seq("2,−3").at(2) == -3);

    CHECK_THROWS_AS(seq("1,,2"), Error);
    CHECK_THROWS_AS(seq("1,x"), Error);
    CHECK_THROWS_AS(seq("1/0"), Error);
    CHECK_THROWS_AS(s.at(0), Error);
    CHECK_THROWS_AS(s.at(5), Error);
}

TEST_CASE("componentwise order") {
    Sequence a = seq("1,1,3,8");
    Sequence b = seq("1,1,3,9");
    CHECK(componentwise_leq(a, b));
    CHECK(!componentwise_leq(b, a));
    CHECK(first_violation(b, a) == 4);
    CHECK(!first_violation(a, b).has_value());
    CHECK(first_non_natural(seq("1,0,2")) == std::nullopt);
    CHECK(first_non_natural(seq("1,-1,2")) == 2);
    CHECK(first_non_natural(seq("1,1/2")) == 2);
}

TEST_CASE("compositions enumerate in lexicographic order") {
    auto comps = enumerate_compositions(3);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].parts == std::vector<int>{1, 1, 1});
    CHECK(comps[1].parts == std::vector<int>{1, 2});
    CHECK(comps[2].parts == std::vector<int>{2, 1});
    CHECK(comps[3].parts == std::vector<int>{3});

    CHECK(enumerate_compositions(1).size() == 1);
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_compositions(n).size() == (1u << (n - 1)));
}

TEST_CASE("partitions enumerate in reverse-lexicographic order") {
    auto parts = enumerate_partitions(4);
    REQUIRE(parts.size() == 5);
    CHECK(parts[0].parts == std::vector<int>{4});
    CHECK(parts[1].parts == std::vector<int>{3, 1});
    CHECK(parts[2].parts == std::vector<int>{2, 2});
    CHECK(parts[3].parts == std::vector<int>{2, 1, 1});
    CHECK(parts[4].parts == std::vector<int>{1, 1, 1, 1});
    CHECK(parts[3].multiplicity(1) == 2);
    CHECK(parts[3].multiplicity(2) == 1);

    // p(1..10) = 1,2,3,5,7,11,15,22,30,42
    std::vector<size_t> expected{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_partitions(n).size() == expected[n - 1]);
}

TEST_CASE("mobius and divisors") {
    std::vector<int> mu{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) CHECK(mobius(n) == mu[n - 1]);
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<int>{1});
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(Rat(5), 2) == 10);
    CHECK(binomial(Rat(0), 0) == 1);
    CHECK(binomial(Rat(0), 1) == 0);
    CHECK(binomial(Rat(-2), 2) == 3);
    CHECK(binomial(Rat(1, 2), 2) == Rat(-1, 8));
}
