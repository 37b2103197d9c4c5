#pragma once

#include <vector>

#include "adjalg/hopf.hpp"
#include "adjalg/matrix.hpp"

namespace adjalg {

enum class DualSide { left, right };

// A finite-dimensional left H-module given by one action matrix per Hopf
// basis element. The constructor verifies unitality and multiplicativity.
struct HModule {
    HopfPtr alg;
    std::size_t dim = 0;
    std::vector<Mat> action;  // action[i] = rho(b_i), dim x dim

    HModule(HopfPtr alg, std::vector<Mat> action);

    // rho applied to an element with coordinate vector h
    Mat act(const Mat& h) const;
};

// Equivariant linear map; the constructor verifies equivariance on every
// Hopf basis element.
struct HModMap {
    HModule source;
    HModule target;
    Mat matrix;

    HModMap(HModule source, HModule target, Mat matrix);
};

HModule regular_module(const HopfPtr& h);
HModule trivial_module(const HopfPtr& h);
HModule tensor_module(const HModule& a, const HModule& b);  // action via Delta
HModule dual_module(const HModule& m, DualSide side);       // S for right, S^{-1} for left

// Pairings for the matched side:
//   right: ev: M* (x) M -> 1,  coev: 1 -> M (x) M*
//   left:  ev: M (x) *M -> 1,  coev: 1 -> *M (x) M
HModMap ev_map(const HModule& m, DualSide side);
HModMap coev_map(const HModule& m, DualSide side);

// Basis of Hom_H(m, n), canonical echelon order.
std::vector<HModMap> hom_basis(const HModule& m, const HModule& n);

// hom(X, Y) = Y (x) X* of the regular module category.
HModule internal_hom(const HModule& x, const HModule& y);

// Adjunction isomorphisms of the internal Hom:
//   phi: Hom(Z, Y (x) X*) -> Hom(Z (x) X, Y),  f |-> (id_Y (x) ev_X)(f (x) id_X)
//   psi: Hom(Z (x) X, Y) -> Hom(Z, Y (x) X*),  g |-> (g (x) id_X*)(id_Z (x) coev_X)
HModMap phi_adj(const HModMap& f, const HModule& x, const HModule& y);
HModMap psi_adj(const HModMap& g, const HModule& z, const HModule& x, const HModule& y);

// Composition morphism hom(M,M) (x) hom(M,M) -> hom(M,M). Under the
// identification M (x) M* = End(M), comp(T (x) S) = T after S.
HModMap comp_map(const HModule& m);

// Canonical (M (x) X)* -> X* (x) M*, a coordinate permutation.
HModMap dual_tensor_swap(const HModule& m, const HModule& x);

// frak_a: hom(M, X (x) N) -> X (x) hom(M, N). With the strictly associative
// flat-index convention the two sides have identical coordinates; the map
// is the identity matrix (asserted equivariant between the two objects).
HModMap frak_a(const HModule& x, const HModule& m, const HModule& n);

// frak_b: hom(X (x) M, N) (x) X -> hom(M, N), built from the canonical
// (X (x) M)* = M* (x) X* and ev_X.
HModMap frak_b(const HModule& x, const HModule& m, const HModule& n);

// beta^D_{M,N}: (N (x) D) (x) M* -> N (x) (M (x) *D)*, the prebalancing of
// S(M, N) = N (x) M* for the reversed action D |> X = X (x) D.
HModMap prebalancing(const HModule& d, const HModule& m, const HModule& n);

// Restriction of a Q-module to H along a verified quotient p: H -> Q.
HModule pullback_module(const HopfMap& p, const HModule& m);

}  // namespace adjalg
