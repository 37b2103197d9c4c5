#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjalg/ends.hpp"
#include "adjalg/registry.hpp"

using namespace adjalg;

TEST_CASE("ordinary end dimension equals dim H") {
    CHECK(end_at_generator(builtin_hopf("c2")).dim() == 2);
    CHECK(end_at_generator(builtin_hopf("s3")).dim() == 6);
    CHECK(end_at_generator(builtin_hopf("sweedler")).dim() == 4);
    CHECK(end_at_generator(builtin_hopf("k")).dim() == 1);
}

TEST_CASE("pi at the generator is the inclusion itself") {
    EndObject e = end_at_generator(builtin_hopf("s3"));
    CHECK(induce_pi(e, e.regular) == e.basis);
}

TEST_CASE("pi at the trivial module has rank one for group algebras") {
    EndObject e = end_at_generator(builtin_hopf("c2"));
    Mat pi = induce_pi(e, trivial_module(e.alg));
    CHECK(pi.rows() == 1);
    CHECK(pi.rank() == 1);
}

TEST_CASE("dinaturality square commutes for every f in Hom(P, M)") {
    for (const char* name : {"c3", "sweedler"}) {
        EndObject e = end_at_generator(builtin_hopf(name));
        const HModule& p = e.regular;
        for (const HModule& m : {trivial_module(e.alg), regular_module(e.alg)}) {
            Mat pi_m = induce_pi(e, m);
            for (const HModMap& f : hom_basis(p, m)) {
                // S(id, f) pi_P == S(f, id) pi_M, i.e.
                // (f (x) id_{P*}) pi_P == (id_M (x) f^T) pi_M
                Mat lhs = kron(f.matrix, Mat::identity(p.dim)) * e.basis;
                Mat rhs = kron(Mat::identity(m.dim), f.matrix.transpose()) * pi_m;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("relative end dimensions: dim E = dim coinvariants") {
    EndObject s3rel = relative_end(builtin_hopf("s3"), builtin_quotient("s3"));
    CHECK(s3rel.dim() == 3);
    CHECK_FALSE(s3rel.validations.empty());
    for (const EndValidation& v : s3rel.validations) CHECK(v.pass);

    EndObject swrel = relative_end(builtin_hopf("sweedler"), builtin_quotient("sweedler"));
    CHECK(swrel.dim() == 2);
}

TEST_CASE("relative end along the counit is the ordinary end") {
    HopfPtr h = builtin_hopf("c4");
    EndObject ord = end_at_generator(h);
    EndObject rel = relative_end(h, counit_map(h));
    CHECK(rel.dim() == ord.dim());
    CHECK(subspace_equal(rel.basis, ord.basis));
}

TEST_CASE("validation depth can be turned off") {
    EndObject rel = relative_end(builtin_hopf("c4"), builtin_quotient("c4"), 0);
    CHECK(rel.validations.empty());
    CHECK(rel.dim() == 2);
}

TEST_CASE("factor_through recovers coordinates and rejects outsiders") {
    EndObject e = end_at_generator(builtin_hopf("s3"));
    // the inclusion itself factors as the identity
    CHECK(factor_through(e, e.basis) == Mat::identity(e.dim()));
    // a single basis column factors as the coordinate vector
    Mat h = factor_through(e, e.basis.col(1));
    Mat expect(e.dim(), 1);
    expect.at(1, 0) = 1;
    CHECK(h == expect);
    // perturb outside the end: violates the generator constraints
    Mat bad = e.basis.col(1);
    bad.at(0, 0) += 1;
    CHECK_THROWS_AS(factor_through(e, bad), error);
}

TEST_CASE("restriction_mono embeds the relative end into the ordinary one") {
    HopfPtr h = builtin_hopf("s3");
    EndObject ord = end_at_generator(h);
    EndObject rel = relative_end(h, builtin_quotient("s3"));
    Mat inc = restriction_mono(rel, ord);
    CHECK(inc.rows() == ord.dim());
    CHECK(inc.cols() == rel.dim());
    CHECK(inc.rank() == rel.dim());
    CHECK(ord.basis * inc == rel.basis);

    // the ordinary end does not embed into the smaller relative one
    CHECK_THROWS_AS(restriction_mono(ord, rel), error);
}
