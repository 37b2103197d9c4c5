#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjalg/group.hpp"
#include "adjalg/hopf.hpp"

using namespace adjalg;

TEST_CASE("group construction and factories") {
    Group s3 = symmetric3();
    CHECK(s3.order() == 6);
    CHECK(s3.names[s3.identity()] == "e");
    CHECK(dihedral_group(4).order() == 8);
    CHECK(quaternion8().order() == 8);
    CHECK(alternating4().order() == 12);

    std::vector<int> a3 = s3.elements_by_name({"e", "(123)", "(132)"});
    CHECK(s3.is_normal(a3));
    CHECK_FALSE(s3.is_normal(s3.elements_by_name({"e", "(12)"})));
    CHECK(s3.quotient(a3).group.order() == 2);

    std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(Group({"e", "a"}, bad), error);
}

TEST_CASE("group algebra of S3 passes the axioms, antipode is inversion") {
    Group g = symmetric3();
    HopfPtr h = group_algebra(g);
    REQUIRE(check_axioms(*h).all_pass());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(h->antipode.at(i, j) ==
                  (static_cast<int>(i) == g.inverse(static_cast<int>(j)) ? Rat(1) : Rat(0)));
}

TEST_CASE("function algebra axioms") {
    HopfPtr h = function_algebra(symmetric3());
    CHECK(check_axioms(*h).all_pass());
    // commutative by construction, noncocommutative comultiplication
    CHECK(h->mul(h->unit, h->unit) == h->unit);
}

TEST_CASE("sweedler algebra: axioms pass and S^2 is not the identity") {
    HopfPtr h = sweedler();
    REQUIRE(check_axioms(*h).all_pass());
    Mat s2 = h->antipode * h->antipode;
    CHECK(s2 != Mat::identity(4));
    // S^2 = conjugation by g: +1 on {1,g}, -1 on {x,gx}
    CHECK(s2.at(0, 0) == Rat(1));
    CHECK(s2.at(1, 1) == Rat(1));
    CHECK(s2.at(2, 2) == Rat(-1));
    CHECK(s2.at(3, 3) == Rat(-1));
}

TEST_CASE("tensor Hopf algebra") {
    HopfPtr t = tensor_hopf(group_algebra(cyclic_group(2)), group_algebra(cyclic_group(2)));
    CHECK(t->dim == 4);
    CHECK(check_axioms(*t).all_pass());
}

TEST_CASE("broken associativity is caught by name") {
    HopfAlgebra h = *group_algebra(cyclic_group(2));
    h.mult.at(0, 2) = 1;  // redefine a * e := e, which is not associative
    h.mult.at(1, 2) = 0;
    AxiomReport rep = check_axioms(h);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.first_failure() == "associativity");
    CHECK_THROWS_AS(make_hopf(h), error);
}

TEST_CASE("Hopf maps") {
    Group s3 = symmetric3();
    HopfMap p = quotient_by_normal_subgroup(s3, s3.elements_by_name({"e", "(123)", "(132)"}));
    CHECK(p.surjective());
    CHECK(p.target->dim == 2);

    HopfPtr h = group_algebra(s3);
    CHECK(identity_map(h).matrix == Mat::identity(6));
    CHECK(counit_map(h).target->dim == 1);

    // a non-map: swap two basis images in the quotient map
    Mat bad = p.matrix;
    Mat tmp = bad.col(0);
    bad.set_col(0, bad.col(1));
    bad.set_col(1, tmp);
    CHECK_THROWS_AS(HopfMap(p.source, p.target, bad), error);
}

TEST_CASE("coinvariants of sweedler onto kC2 are spanned by 1 and x") {
    HopfPtr sw = sweedler();
    Mat m(2, 4);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    HopfMap p(sw, group_algebra(cyclic_group(2)), m);
    Mat c = coinvariants(p);
    REQUIRE(c.cols() == 2);
    Mat expected(4, 2);
    expected.at(0, 0) = 1;  // 1
    expected.at(2, 1) = 1;  // x
    CHECK(subspace_equal(c, expected));
    CHECK(c.cols() * p.target->dim == sw->dim);
}

TEST_CASE("coinvariants of kS3 onto k[S3/A3] are the A3 span") {
    Group s3 = symmetric3();
    HopfMap p = quotient_by_normal_subgroup(s3, s3.elements_by_name({"e", "(123)", "(132)"}));
    Mat c = coinvariants(p);
    REQUIRE(c.cols() == 3);
    Mat expected(6, 3);
    std::vector<int> a3 = s3.elements_by_name({"e", "(123)", "(132)"});
    for (std::size_t j = 0; j < 3; ++j) expected.at(static_cast<std::size_t>(a3[j]), j) = 1;
    CHECK(subspace_equal(c, expected));
}

TEST_CASE("coinvariants along the counit are everything") {
    HopfPtr h = group_algebra(cyclic_group(4));
    CHECK(coinvariants(counit_map(h)).cols() == 4);
}
