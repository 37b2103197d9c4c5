#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjalg/matrix.hpp"

using namespace adjalg;

TEST_CASE("kernel of a rank-one 2x2 matrix") {
    Mat m{{1, 2}, {2, 4}};
    Mat k = kernel_basis_mat(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == Rat(-2));
    CHECK(k.at(1, 0) == Rat(1));
    CHECK((m * k).is_zero());
}

TEST_CASE("rref is idempotent and deterministic") {
    Mat m{{0, 2, 4}, {1, 1, 1}, {1, 3, 5}};
    Mat a = m, b = m;
    a.rref();
    Mat c = a;
    c.rref();
    CHECK(a == c);
    b.rref();
    CHECK(a == b);
    CHECK(m.rank() == 2);
}

TEST_CASE("solve_unique") {
    Mat a{{1, 1}, {0, 1}, {1, 0}};
    Mat b{{3}, {1}, {2}};
    Mat x = solve_unique(a, b);
    CHECK(a * x == b);

    Mat inconsistent{{3}, {1}, {3}};
    CHECK_THROWS_WITH_AS(solve_unique(a, inconsistent), doctest::Contains("inconsistent"), error);

    Mat wide{{1, 2}, {2, 4}};
    Mat rhs{{1}, {2}};
    CHECK_THROWS_AS(solve_unique(wide, rhs), error);  // nonzero kernel
}

TEST_CASE("kron follows the flat-index convention and is associative") {
    Mat a{{1, 2}, {3, 4}};
    Mat b{{0, 1}, {1, 0}};
    Mat c{{2, 0}, {0, 3}};
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    // (i,j) |-> i*dim_b + j on column vectors
    Mat u{{5}, {7}};
    Mat v{{1}, {2}};
    Mat w = kron(u, v);
    CHECK(w.at(0, 0) == Rat(5));
    CHECK(w.at(1, 0) == Rat(10));
    CHECK(w.at(2, 0) == Rat(7));
    CHECK(w.at(3, 0) == Rat(14));
}

TEST_CASE("reshape and flatten are mutually inverse") {
    Mat m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.flatten().reshape(2, 3) == m);
}

TEST_CASE("subspace predicates") {
    Mat big{{1, 0}, {0, 1}, {0, 0}};
    Mat small{{1}, {1}, {0}};
    CHECK(subspace_contains(big, small));
    CHECK_FALSE(subspace_contains(small, big));
    Mat other{{2, 1}, {0, 3}, {0, 0}};
    CHECK(subspace_equal(big, other));
    CHECK(canonical_span(other) == canonical_span(big));
}

TEST_CASE("rational round trip") {
    CHECK(rat_to_string(rat(-6, 4)) == "-3/2");
    CHECK(rat_from_string("-3/2") == rat(-3, 2));
    CHECK(rat_from_string("7") == Rat(7));
}
