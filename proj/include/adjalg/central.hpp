#pragma once

#include "adjalg/ends.hpp"

namespace adjalg {

struct CentralChecks {
    bool associative = false;
    bool unital = false;
    bool commutative = false;
};

// A computed (relative) adjoint algebra: the end upgraded with the
// multiplication and unit solved from eq. mult-din1, plus its own
// H-module structure in end coordinates.
struct CentralAlgebra {
    EndObject carrier;
    HModule carrier_module;  // action on end coordinates
    Mat mult;                // dim(E) x dim(E)^2
    Mat unit;                // dim(E) x 1
    CentralChecks checks;

    std::size_t dim() const { return carrier.dim(); }
};

// Solves pi_P . m = comp . (pi_P (x) pi_P) and pi_P . u = coev_P; verifies
// associativity, unitality and m . sigma = m. Throws NotClosed if the end
// is not closed under composition.
CentralAlgebra build_algebra(const EndObject& e);

// Half-braiding component sigma_X: E (x) X -> X (x) E solved from
// eq. half-braidig-ch at M = P; invertibility is asserted.
Mat half_braiding(const EndObject& e, const HModule& x);
Mat half_braiding(const CentralAlgebra& a, const HModule& x);

// dim Hom(1, E) taken in the center: invariant vectors f with
// sigma_P . (f (x) id_P) = id_P (x) f. The carrier action and the
// half-braiding at the regular module fully determine it.
std::size_t central_hom_dim(const HModule& e_module, const Mat& sigma_at_regular,
                            std::size_t regular_dim);
bool check_connected(const CentralAlgebra& a);

// Optional etale evidence: irreducibility of E over the operator algebra
// generated by the H-action and the right multiplications. field_caveat is
// set when the commutant is larger than the scalars (Q is not closed).
struct SimplicityReport {
    bool simple = false;
    bool field_caveat = false;
};
SimplicityReport check_simple_over_self(const CentralAlgebra& a);

// The maps of Prop. exact-seq-adj: A(D) -i-> A_C -q-> A_Q with
// q . i = u . alpha_1.
struct ComparisonMaps {
    CentralAlgebra relative;   // A(D) over H
    CentralAlgebra ordinary;   // A_C over H
    CentralAlgebra quotient;   // A_Q over Q
    Mat iota;                  // dim A_C x dim A(D)
    Mat q;                     // dim A_Q x dim A_C
    Mat alpha1;                // 1 x dim A(D)
    bool identity_holds = false;
    bool iota_algebra_map = false;
    bool q_algebra_map = false;
};
ComparisonMaps comparison_maps(const HopfPtr& h, const HopfMap& p);

// Change of basis realizing an algebra isomorphism with the expected model.
struct ModelIso {
    Mat change_of_basis;
    std::size_t dim = 0;
};

// Relative end along p equals the left-multiplication tensors of the
// coinvariants H^{co pi}, as subalgebras of End(P). Throws ModelMismatch.
ModelIso verify_coinvariant_model(const HopfPtr& h, const HopfMap& p);

// Relative end of H1 (x) H2 along the first-factor projection is
// isomorphic to the ordinary adjoint algebra of H2. Throws ModelMismatch.
ModelIso verify_deligne(const HopfPtr& h1, const HopfPtr& h2);

}  // namespace adjalg
