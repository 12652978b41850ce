#include <doctest.h>

#include <random>

#include "hopfseq/coalgebra.hpp"
#include "hopfseq/errors.hpp"
#include "hopfseq/freealg.hpp"
#include "hopfseq/lyndon.hpp"
#include "hopfseq/transforms.hpp"
#include "testutil.hpp"

using namespace hopfseq;
using testutil::seq;

namespace {

size_t span_dimension(const GradedAlphabet& alphabet, int n, const std::vector<NcPoly>& polys) {
    WordBasis basis(alphabet, n);
    RowSpan span(basis.dim());
    for (const NcPoly& f : polys) span.insert(basis.coordinates(f));
    return span.rank();
}

} // namespace

TEST_CASE("primitive space dimensions match the inverse Euler transform") {
    GradedAlphabet two(seq("2,0,0"));
    auto basis2 = primitive_space_basis(two, 2);
    REQUIRE(basis2.size() == 1);
    // spanned by xy - yx up to scale
    NcPoly xy_yx = commutator(NcPoly::from_letter(two, {1, 1}), NcPoly::from_letter(two, {1, 2}));
    WordBasis wb(two, 2);
    RowSpan span(wb.dim());
    span.insert(wb.coordinates(basis2[0]));
    CHECK(span.contains(wb.coordinates(xy_yx)));

    CHECK(primitive_space_basis(GradedAlphabet(seq("1,0")), 2).empty());
    CHECK(primitive_space_basis(two, 3).size() == 2);

    for (const Sequence& counts : {seq("2,0,0,0,0,0"), seq("1,1,0,0,0,0"), seq("3,0,0,0,0,0"),
                                   seq("1,0,1,0,0,0"), seq("0,1,1,0,0,0")}) {
        GradedAlphabet alphabet(counts);
        Sequence p = a_to_p(counts);
        for (int n = 1; n <= 6; ++n) {
            auto basis = primitive_space_basis(alphabet, n);
            CHECK(Rat(static_cast<long>(basis.size())) == p.at(n));
            for (const NcPoly& f : basis) CHECK(is_primitive(f));
        }
    }
}

TEST_CASE("lyndon lie basis") {
    GradedAlphabet two(seq("2,0,0"));
    auto deg2 = lyndon_lie_basis(two, 2);
    REQUIRE(deg2.size() == 1);
    CHECK(deg2[0] ==
          commutator(NcPoly::from_letter(two, {1, 1}), NcPoly::from_letter(two, {1, 2})));

    auto deg3 = lyndon_lie_basis(two, 3);
    REQUIRE(deg3.size() == 2); // [x,[x,y]] and [[x,y],y], from xxy and xyy
    NcPoly x = NcPoly::from_letter(two, {1, 1}), y = NcPoly::from_letter(two, {1, 2});
    CHECK(deg3[0] == commutator(x, commutator(x, y)));
    CHECK(deg3[1] == commutator(commutator(x, y), y));
    CHECK(span_dimension(two, 3, deg3) == 2);

    CHECK(lyndon_lie_basis(GradedAlphabet(seq("1,0")), 2).empty());

    // every element is primitive, i.e. lies in the free Lie algebra
    GradedAlphabet mixed(seq("2,1,0,0"));
    for (int n = 1; n <= 4; ++n)
        for (const NcPoly& f : lyndon_lie_basis(mixed, n)) CHECK(is_primitive(f));
}

TEST_CASE("derived subalgebra dimensions") {
    // dim [L,L]_n = a_to_p(a)[n] - a_n, via the bracketed Lyndon words
    for (const Sequence& counts : {seq("2,0,0,0,0,0"), seq("1,1,0,0,0,0"), seq("2,1,0,0,0,0")}) {
        GradedAlphabet alphabet(counts);
        Sequence p = a_to_p(counts);
        for (int n = 1; n <= 6; ++n) {
            auto basis = derived_subalgebra_basis(alphabet, n);
            CHECK(Rat(static_cast<long>(basis.size())) == p.at(n) - counts.at(n));
            CHECK(span_dimension(alphabet, n, basis) == basis.size());
        }
    }
}

TEST_CASE("products of positive-degree elements have codimension a_n") {
    // (H_+^2)_n is spanned by the words of length >= 2
    for (const Sequence& counts : {seq("2,0,0,0,0,0"), seq("1,1,1,0,0,0")}) {
        GradedAlphabet alphabet(counts);
        Sequence h = invert(counts);
        for (int n = 1; n <= 6; ++n) {
            long length_ge2 = 0;
            for (const Word& w : enumerate_words(alphabet, n))
                if (w.size() >= 2) ++length_ge2;
            CHECK(Rat(length_ge2) == h.at(n) - counts.at(n));
        }
    }
}

TEST_CASE("verify_opg accepts the canonical generators") {
    GradedAlphabet alphabet(seq("2,1,0,0"));
    OpgCheck check = verify_opg(canonical_opg(alphabet, 4), 4);
    CHECK(check.ok);
}

TEST_CASE("verify_opg rejects dependent or imprimitive tuples") {
    GradedAlphabet alphabet(seq("2,0,0,0"));
    NcPoly x = NcPoly::from_letter(alphabet, {1, 1});
    NcPoly y = NcPoly::from_letter(alphabet, {1, 2});

    OrderedPrimGenSet dependent{alphabet, {{x, Rat(2) * x}}};
    OpgCheck check = verify_opg(dependent, 1);
    CHECK(!check.ok);
    CHECK(check.degree == 1);

    GradedAlphabet with_z(seq("2,1,0,0"));
    NcPoly xz = NcPoly::from_letter(with_z, {1, 1});
    NcPoly yz = NcPoly::from_letter(with_z, {1, 2});
    NcPoly zz = NcPoly::from_letter(with_z, {2, 1});
    OrderedPrimGenSet not_primitive{with_z, {{xz, yz}, {xz * yz}}};
    OpgCheck check2 = verify_opg(not_primitive, 2);
    CHECK(!check2.ok);
    CHECK(check2.degree == 2);
    CHECK(check2.message.find("primitive") != std::string::npos);

    // the z - xy + yx completion is a valid second-degree generator
    OrderedPrimGenSet shifted{with_z, {{xz, yz}, {zz - xz * yz + yz * xz}}};
    CHECK(verify_opg(shifted, 2).ok);

    OrderedPrimGenSet short_tuple{with_z, {{xz, yz}, {}}};
    OpgCheck check3 = verify_opg(short_tuple, 2);
    CHECK(!check3.ok);
    CHECK(check3.degree == 2);
}

TEST_CASE("opg_from_matrices") {
    GradedAlphabet alphabet(seq("2,1,0,0"));
    NcPoly x = NcPoly::from_letter(alphabet, {1, 1});
    NcPoly y = NcPoly::from_letter(alphabet, {1, 2});
    NcPoly z = NcPoly::from_letter(alphabet, {2, 1});

    SUBCASE("generic invertible data reproduces the worked example") {
        // a = (2,1), p = (2,2): M1 is 2x2, M2 is 1x2
        MatrixSeq m;
        m.mats.push_back({{Rat(1), Rat(2)}, {Rat(0), Rat(1)}});
        m.mats.push_back({{Rat(3), Rat(5)}});
        OrderedPrimGenSet opg = opg_from_matrices(alphabet, m, 2);
        REQUIRE(opg.degree(1).size() == 2);
        REQUIRE(opg.degree(2).size() == 1);
        CHECK(opg.degree(1)[0] == x + Rat(2) * y);
        CHECK(opg.degree(1)[1] == y);
        CHECK(opg.degree(2)[0] == Rat(3) * z + Rat(5) * commutator(x, y));
        CHECK(verify_opg(opg, 2).ok);
    }

    SUBCASE("identity matrices give back the canonical tuple") {
        MatrixSeq m;
        m.mats.push_back({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
        m.mats.push_back({{Rat(1), Rat(0)}});
        m.mats.push_back(QMat{});
        m.mats.push_back(QMat{});
        OrderedPrimGenSet opg = opg_from_matrices(alphabet, m, 4);
        OrderedPrimGenSet canonical = canonical_opg(alphabet, 4);
        for (int n = 1; n <= 4; ++n) CHECK(opg.degree(n) == canonical.degree(n));
    }

    SUBCASE("singular leading blocks are rejected with the degree") {
        MatrixSeq singular1;
        singular1.mats.push_back({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
        singular1.mats.push_back({{Rat(1), Rat(0)}});
        CHECK_THROWS_WITH_AS(opg_from_matrices(alphabet, singular1, 2),
                             doctest::Contains("degree 1"), Error);

        MatrixSeq singular2;
        singular2.mats.push_back({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
        singular2.mats.push_back({{Rat(0), Rat(1)}}); // e = 0
        CHECK_THROWS_WITH_AS(opg_from_matrices(alphabet, singular2, 2),
                             doctest::Contains("degree 2"), Error);
    }

    SUBCASE("shape errors") {
        MatrixSeq wrong;
        wrong.mats.push_back({{Rat(1)}, {Rat(0)}}); // needs 2 columns
        CHECK_THROWS_AS(opg_from_matrices(alphabet, wrong, 1), Error);
    }
}

TEST_CASE("eulerian idempotent turns any perturbed generating set into an OPG") {
    // generators plus decomposable tails still generate; e() makes them
    // primitive without moving them modulo products
    std::mt19937 rng(43);
    GradedAlphabet alphabet(seq("2,1,0,0"));
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        OrderedPrimGenSet perturbed{alphabet, {}};
        for (int n = 1; n <= 4; ++n) {
            std::vector<NcPoly> tuple;
            for (int i = 1; i <= alphabet.count(n); ++i) {
                NcPoly tail(alphabet);
                for (const Word& w : enumerate_words(alphabet, n))
                    if (w.size() >= 2) tail = tail + NcPoly::from_word(alphabet, w, Rat(coeff(rng)));
                tuple.push_back(NcPoly::from_letter(alphabet, {n, i}) + tail);
            }
            perturbed.tuples.push_back(std::move(tuple));
        }
        OrderedPrimGenSet projected{alphabet, {}};
        for (const auto& tuple : perturbed.tuples) {
            std::vector<NcPoly> projected_tuple;
            for (const NcPoly& g : tuple) projected_tuple.push_back(eulerian_idempotent(g));
            projected.tuples.push_back(std::move(projected_tuple));
        }
        CHECK(verify_opg(projected, 4).ok);
    }
}
