#include "adjalg/ends.hpp"

#include <cstdlib>
#include <utility>

namespace adjalg {

namespace {

// Per-Hopf-basis action matrices of a tensor product, without running the
// HModule constructor checks (used for large throwaway validation objects).
std::vector<Mat> tensor_actions(const HModule& a, const HModule& b) {
    std::vector<Mat> out;
    out.reserve(a.alg->dim);
    for (std::size_t i = 0; i < a.alg->dim; ++i) {
        Mat m(a.dim * b.dim, a.dim * b.dim);
        for (const auto& t : a.alg->comult[i])
            m = m + kron(a.action[static_cast<std::size_t>(t.left)],
                         b.action[static_cast<std::size_t>(t.right)]) *
                        t.coeff;
        out.push_back(std::move(m));
    }
    return out;
}

Mat act_of(const std::vector<Mat>& action, std::size_t dim, const Mat& h) {
    Mat r(dim, dim);
    for (std::size_t i = 0; i < action.size(); ++i)
        if (!is_zero(h.at(i, 0))) r = r + action[i] * h.at(i, 0);
    return r;
}

// pi_M for one end-basis vector e (as T = reshape(e)): the operator
// rho_M(T(1)), verified against the frame f_m(h) = h.m which spans
// Hom_H(P, M). The frame condition F_m T = rho_M(T(1)) F_m for all basis
// m is equivalent to rho_M(T b_h) = rho_M(T(1)) rho_M(b_h) for all h.
Mat induced_operator(const HopfPtr& alg, const std::vector<Mat>& action, std::size_t dim,
                     const Mat& t) {
    Mat r = act_of(action, dim, t * alg->unit);
    for (std::size_t i = 0; i < alg->dim; ++i)
        if (act_of(action, dim, t.col(i)) != r * action[i])
            fail(errc::no_solution, "dinaturality system for the induced component is inconsistent");
    return r;
}

}  // namespace

Mat induce_pi(const EndObject& e, const HModule& m) {
    const std::size_t n = e.regular.dim;
    Mat pi(m.dim * m.dim, e.dim());
    for (std::size_t k = 0; k < e.dim(); ++k) {
        Mat t = e.basis.col(k).reshape(n, n);
        pi.set_col(k, induced_operator(e.alg, m.action, m.dim, t).flatten());
    }
    return pi;
}

Mat relative_defect(const HopfPtr& h, const HModule& p, const HModule& x, const Mat& basis) {
    const std::size_t n = p.dim, nx = x.dim;
    std::vector<Mat> tact = tensor_actions(p, x);
    Mat defect(n * nx * nx * n, basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        Mat t = basis.col(k).reshape(n, n);
        Mat r = induced_operator(h, tact, n * nx, t);
        // eq. dinat-case1: (id (x) phi_{P,X}) pi_{P (x) X}  vs
        //                  (id_P (x) coev_X (x) id_{P*}) pi_P
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < nx; ++j)
                for (std::size_t jp = 0; jp < nx; ++jp)
                    for (std::size_t ip = 0; ip < n; ++ip) {
                        Rat v = r.at(i * nx + j, ip * nx + jp);
                        if (j == jp) v -= t.at(i, ip);
                        if (!is_zero(v))
                            defect.at(((i * nx + j) * nx + jp) * n + ip, k) = v;
                    }
    }
    return defect;
}

EndObject end_at_generator(const HopfPtr& h) {
    HModule p = regular_module(h);
    HModule ambient = tensor_module(p, dual_module(p, DualSide::right));
    const std::size_t n = p.dim;

    std::vector<HModMap> endos = hom_basis(p, p);
    Mat stacked(0, n * n);
    for (const HModMap& a : endos)
        stacked = stacked.vcat(kron(a.matrix, Mat::identity(n)) -
                               kron(Mat::identity(n), a.matrix.transpose()));
    Mat basis = kernel_basis_mat(stacked);

    for (std::size_t i = 0; i < h->dim; ++i)
        if (!subspace_contains(basis, ambient.action[i] * basis))
            fail(errc::validation_failed, "end subspace is not an H-submodule");

    EndObject e{h, std::move(p), std::move(ambient), std::move(basis), std::move(stacked),
                std::nullopt, std::nullopt, {}};
    return e;
}

EndObject relative_end(const HopfPtr& h, const HopfMap& p, int validation_depth) {
    if (p.source != h && p.source->name != h->name)
        fail(errc::bad_input, "quotient map does not start at the given Hopf algebra");
    if (!p.surjective()) fail(errc::not_surjective, "quotient map is not surjective");

    EndObject e = end_at_generator(h);
    HModule qreg = regular_module(p.target);
    HModule x0 = pullback_module(p, qreg);

    Mat coeffs = kernel_basis_mat(relative_defect(h, e.regular, x0, e.basis));
    e.basis = canonical_span(e.basis * coeffs);
    e.relative_to = p;
    e.relative_generator = x0;

    if (validation_depth < 0) {
        validation_depth = 3;
        if (const char* env = std::getenv("RELEND_VALIDATION_DEPTH")) validation_depth = std::atoi(env);
    }
    std::vector<std::pair<std::string, HModule>> candidates;
    candidates.emplace_back("trivial Q-module", trivial_module(p.target));
    candidates.emplace_back("dual of Q-regular", dual_module(qreg, DualSide::right));
    candidates.emplace_back("Q-regular (x) Q-regular", tensor_module(qreg, qreg));
    candidates.emplace_back("Q-regular (x) dual of Q-regular",
                            tensor_module(qreg, dual_module(qreg, DualSide::right)));
    for (std::size_t i = 0; i < candidates.size() && i < static_cast<std::size_t>(validation_depth);
         ++i) {
        HModule x = pullback_module(p, candidates[i].second);
        bool pass = relative_defect(h, e.regular, x, e.basis).is_zero();
        e.validations.push_back({candidates[i].first, pass});
        if (!pass)
            fail(errc::validation_failed,
                 "relative constraint violated at validation object: " + candidates[i].first);
    }
    return e;
}

Mat factor_through(const EndObject& e, const Mat& lambda_at_p) {
    if (lambda_at_p.rows() != e.ambient.dim) fail(errc::bad_input, "candidate component shape");
    if (!(e.constraints * lambda_at_p).is_zero())
        fail(errc::constraint_violation, "candidate family fails generator dinaturality");
    if (e.relative_generator &&
        !relative_defect(e.alg, e.regular, *e.relative_generator, lambda_at_p).is_zero())
        fail(errc::constraint_violation, "candidate family fails the relative constraint");
    return solve_unique(e.basis, lambda_at_p);
}

Mat restriction_mono(const EndObject& fine, const EndObject& coarse) {
    if (fine.alg != coarse.alg && fine.alg->name != coarse.alg->name)
        fail(errc::bad_input, "ends over different Hopf algebras");
    if (!subspace_contains(coarse.basis, fine.basis))
        fail(errc::not_nested, "finer end is not contained in the coarser end");
    return solve_unique(coarse.basis, fine.basis);
}

}  // namespace adjalg
