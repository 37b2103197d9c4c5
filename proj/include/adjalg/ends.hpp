#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adjalg/hopf.hpp"
#include "adjalg/rep.hpp"

namespace adjalg {

struct EndValidation {
    std::string description;
    bool pass = false;
};

// An (ordinary or relative) end of S(X,Y) = Y (x) X* computed at the
// projective generator P = regular module. `basis` spans the end subspace
// E inside P (x) P* and doubles as the inclusion pi_P.
struct EndObject {
    HopfPtr alg;
    HModule regular;              // P
    HModule ambient;              // P (x) P*
    Mat basis;                    // dim(P)^2 x dim(E), canonical echelon
    Mat constraints;              // stacked generator constraints (kernel = ordinary end)
    std::optional<HopfMap> relative_to;
    std::optional<HModule> relative_generator;  // X = pullback of the Q-regular module
    std::vector<EndValidation> validations;

    std::size_t dim() const { return basis.cols(); }
    const Mat& pi_at_P() const { return basis; }
};

// Ordinary end over Rep(H): E = {e : S(a,id)e = S(id,a)e for all a in a
// basis of End_H(P)}, computed as one stacked kernel.
EndObject end_at_generator(const HopfPtr& h);

// Relative end for D = Rep(Q) along a surjective quotient p: H -> Q.
// The relative constraint is imposed at X = pullback of the Q-regular
// module and then re-verified on `validation_depth` further objects of D
// (default: RELEND_VALIDATION_DEPTH or 3). Throws ValidationFailed if a
// validation object violates the constraint.
EndObject relative_end(const HopfPtr& h, const HopfMap& p, int validation_depth = -1);

// Dinatural component pi_M: E -> M (x) M* as a (dim M)^2 x dim(E) matrix,
// determined by the dinaturality system against the spanning frame
// f_m: P -> M, h |-> h.m; solved in closed form and then verified against
// the full frame (throws NoSolution on any violation).
Mat induce_pi(const EndObject& e, const HModule& m);

// Relative-constraint defect columns at (P, x) for the given basis of
// candidate vectors in P (x) P*: zero columns mean eq. dinat-case1 holds.
Mat relative_defect(const HopfPtr& h, const HModule& p, const HModule& x, const Mat& basis);

// Universal property: a candidate family is given by its component at P.
// Verifies the generator (and relative) constraints, then returns the
// unique h with pi_P . h = lambda_P. Throws ConstraintViolation.
Mat factor_through(const EndObject& e, const Mat& lambda_at_p);

// Inclusion E_fine -> E_coarse for nested subcategories (finer D = more
// constraints = smaller end). Throws NotNested on containment failure.
Mat restriction_mono(const EndObject& fine, const EndObject& coarse);

}  // namespace adjalg
