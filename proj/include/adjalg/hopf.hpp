#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adjalg/group.hpp"
#include "adjalg/matrix.hpp"

namespace adjalg {

struct ComultTerm {
    int left, right;
    Rat coeff;
};

// Finite-dimensional Hopf algebra by structure constants over Q.
// Multiplication is dense (dim x dim^2 with the global flat-index
// convention); comultiplication is kept sparse since the shipped examples
// have few terms per basis element.
struct HopfAlgebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Mat mult;     // dim x dim^2, column flat(i,j) = coordinates of b_i * b_j
    Mat unit;     // dim x 1
    std::vector<std::vector<ComultTerm>> comult;
    Mat counit;   // 1 x dim
    Mat antipode; // dim x dim, S(b_i) = column i

    // product of two coordinate vectors
    Mat mul(const Mat& x, const Mat& y) const;
    Mat product_column(std::size_t i, std::size_t j) const { return mult.col(i * dim + j); }

    // Delta as a dense dim^2 x dim matrix (flat convention)
    Mat comult_matrix() const;

    // coordinates of Delta(x) for a coordinate vector x, as a dim^2 column
    Mat comult_apply(const Mat& x) const;

    // matrix of left multiplication by the element with coordinates x
    Mat left_mult_matrix(const Mat& x) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomReport {
    std::vector<std::pair<std::string, bool>> axioms;
    bool all_pass() const;
    std::string first_failure() const;
};

// Verifies every Hopf axiom on raw structure constants; report-valued.
AxiomReport check_axioms(const HopfAlgebra& h);

// Wraps raw data after a full axiom check; throws NotHopf on failure.
HopfPtr make_hopf(HopfAlgebra h);

HopfPtr group_algebra(const Group& g, const std::string& name = "");
HopfPtr function_algebra(const Group& g, const std::string& name = "");
HopfPtr sweedler();
HopfPtr base_field();  // k as the one-dimensional Hopf algebra
HopfPtr tensor_hopf(const HopfPtr& h1, const HopfPtr& h2);

// Verified morphism of Hopf algebras. The constructor checks preservation
// of mult, unit, comult, counit and antipode; no unchecked map exists.
struct HopfMap {
    HopfPtr source;
    HopfPtr target;
    Mat matrix;  // target.dim x source.dim

    HopfMap(HopfPtr source, HopfPtr target, Mat matrix);

    bool surjective() const { return matrix.rank() == target->dim; }
    Mat apply(const Mat& x) const { return matrix * x; }
};

HopfMap identity_map(const HopfPtr& h);
HopfMap counit_map(const HopfPtr& h);

// kG -> k(G/N) for a normal subgroup N (indices into g).
HopfMap quotient_by_normal_subgroup(const Group& g, const std::vector<int>& normal_subgroup,
                                    const std::string& name = "");

// H1 (x) H2 -> H1, h1 (x) h2 -> eps(h2) h1. Requires the tensor algebra to
// have been built by tensor_hopf from these factors.
HopfMap projection_first_factor(const HopfPtr& tensor, const HopfPtr& h1, const HopfPtr& h2);

// k^G -> k^H, restriction of functions to a subgroup H <= G.
HopfMap function_restriction(const Group& g, const std::vector<int>& subgroup,
                             const std::string& name = "");

// Basis (as columns) of H^{co pi} = ker(h -> (id (x) pi) Delta(h) - h (x) 1_Q),
// canonical echelon form. Always contains the unit of H.
Mat coinvariants(const HopfMap& p);

}  // namespace adjalg
