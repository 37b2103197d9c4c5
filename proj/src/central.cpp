#include "adjalg/central.hpp"

#include <utility>

namespace adjalg {

namespace {

HModule coordinate_module(const EndObject& e) {
    std::vector<Mat> action;
    action.reserve(e.alg->dim);
    for (std::size_t i = 0; i < e.alg->dim; ++i)
        action.push_back(solve_unique(e.basis, e.ambient.action[i] * e.basis));
    return HModule(e.alg, std::move(action));
}

}  // namespace

CentralAlgebra build_algebra(const EndObject& e) {
    const std::size_t n = e.regular.dim, k = e.dim();

    // pi_P . m = comp . (pi_P (x) pi_P): under the End(P) identification the
    // right hand side column for the basis pair (a, b) is the operator T_a T_b.
    Mat rhs(n * n, k * k);
    for (std::size_t a = 0; a < k; ++a) {
        Mat ta = e.basis.col(a).reshape(n, n);
        for (std::size_t b = 0; b < k; ++b)
            rhs.set_col(a * k + b, (ta * e.basis.col(b).reshape(n, n)).flatten());
    }
    Mat mult;
    try {
        mult = solve_unique(e.basis, rhs);
    } catch (const error& err) {
        if (err.code() == errc::no_solution)
            fail(errc::not_closed, "end subspace is not closed under composition");
        throw;
    }
    Mat unit = solve_unique(e.basis, Mat::identity(n).flatten());

    CentralAlgebra a{e, coordinate_module(e), std::move(mult), std::move(unit), {}};
    const Mat id = Mat::identity(k);
    a.checks.associative =
        a.mult * kron(a.mult, id) == a.mult * kron(id, a.mult);
    a.checks.unital =
        a.mult * kron(a.unit, id) == id && a.mult * kron(id, a.unit) == id;
    a.checks.commutative = a.mult * half_braiding(e, a.carrier_module) == a.mult;
    return a;
}

Mat half_braiding(const EndObject& e, const HModule& x) {
    const std::size_t n = e.regular.dim, k = e.dim(), nx = x.dim;
    HModule xp = tensor_module(x, e.regular);
    Mat pi_xp = induce_pi(e, xp);

    // rhs column for (a, i): the frak_a . frak_b contraction of pi_{X (x) P}(a)
    // paired with the i-th X coordinate, landing in X (x) P (x) P*.
    Mat rhs(nx * n * n, k * nx);
    for (std::size_t a = 0; a < k; ++a) {
        Mat r = pi_xp.col(a).reshape(nx * n, nx * n);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < nx; ++j)
                for (std::size_t q = 0; q < n; ++q)
                    for (std::size_t qp = 0; qp < n; ++qp) {
                        const Rat& v = r.at(j * n + q, i * n + qp);
                        if (!is_zero(v)) rhs.at((j * n + q) * n + qp, a * nx + i) = v;
                    }
    }
    Mat sigma = solve_unique(kron(Mat::identity(nx), e.basis), rhs);
    if (sigma.rank() != nx * k) fail(errc::not_invertible, "half-braiding is not invertible");
    return sigma;
}

Mat half_braiding(const CentralAlgebra& a, const HModule& x) { return half_braiding(a.carrier, x); }

std::size_t central_hom_dim(const HModule& e_module, const Mat& sigma_at_regular,
                            std::size_t regular_dim) {
    const std::size_t k = e_module.dim;
    const std::size_t n = regular_dim;
    const HModule triv = trivial_module(e_module.alg);
    // unknown f in E: invariance rows plus the flattened central condition
    // sigma . (f (x) id) - (id (x) f) = 0, both linear in f.
    Mat rows(e_module.alg->dim * k + n * k * n, k);
    for (std::size_t i = 0; i < e_module.alg->dim; ++i) {
        const Rat eps = triv.action[i].at(0, 0);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                rows.at(i * k + r, c) = e_module.action[i].at(r, c) - (r == c ? eps : Rat(0));
    }
    const std::size_t off = e_module.alg->dim * k;
    for (std::size_t a = 0; a < k; ++a) {
        Mat ea(k, 1);
        ea.at(a, 0) = 1;
        Mat col = sigma_at_regular * kron(ea, Mat::identity(n)) - kron(Mat::identity(n), ea);
        for (std::size_t r = 0; r < n * k; ++r)
            for (std::size_t c = 0; c < n; ++c) rows.at(off + r * n + c, a) = col.at(r, c);
    }
    return kernel_basis_mat(rows).cols();
}

bool check_connected(const CentralAlgebra& a) {
    const HModule p = regular_module(a.carrier.alg);
    return central_hom_dim(a.carrier_module, half_braiding(a.carrier, p), p.dim) == 1;
}

SimplicityReport check_simple_over_self(const CentralAlgebra& a) {
    const std::size_t k = a.dim();
    std::vector<Mat> gens = a.carrier_module.action;
    for (std::size_t b = 0; b < k; ++b) {
        Mat rb(k, k);
        for (std::size_t w = 0; w < k; ++w) rb.set_col(w, a.mult.col(w * k + b));
        gens.push_back(std::move(rb));
    }

    SimplicityReport rep;
    rep.simple = true;
    for (std::size_t j = 0; j < k && rep.simple; ++j) {
        Mat span(k, 1);
        span.at(j, 0) = 1;
        for (;;) {
            Mat grown = span;
            for (const Mat& g : gens) grown = grown.hcat(g * span);
            grown = canonical_span(grown);
            if (grown.cols() == span.cols()) break;
            span = std::move(grown);
        }
        rep.simple = span.cols() == k;
    }

    Mat comm(0, k * k);
    for (const Mat& g : gens)
        comm = comm.vcat(kron(Mat::identity(k), g.transpose()) - kron(g, Mat::identity(k)));
    rep.field_caveat = kernel_basis_mat(comm).cols() > 1;
    return rep;
}

ComparisonMaps comparison_maps(const HopfPtr& h, const HopfMap& p) {
    EndObject rel = relative_end(h, p);
    EndObject ordC = end_at_generator(h);
    EndObject ordQ = end_at_generator(p.target);

    Mat iota = restriction_mono(rel, ordC);
    Mat pi_y = induce_pi(ordC, pullback_module(p, regular_module(p.target)));
    Mat q = solve_unique(ordQ.basis, pi_y);
    Mat alpha1 = induce_pi(rel, trivial_module(h));

    ComparisonMaps cm{build_algebra(rel), build_algebra(ordC), build_algebra(ordQ),
                      iota,               q,                   alpha1,
                      false,              false,               false};
    cm.identity_holds = q * iota == cm.quotient.unit * alpha1;
    cm.iota_algebra_map = iota * cm.relative.mult == cm.ordinary.mult * kron(iota, iota) &&
                          iota * cm.relative.unit == cm.ordinary.unit;
    cm.q_algebra_map = q * cm.ordinary.mult == cm.quotient.mult * kron(q, q) &&
                       q * cm.ordinary.unit == cm.quotient.unit;
    return cm;
}

ModelIso verify_coinvariant_model(const HopfPtr& h, const HopfMap& p) {
    CentralAlgebra a = build_algebra(relative_end(h, p));
    Mat coinv = coinvariants(p);

    Mat images(h->dim * h->dim, coinv.cols());
    for (std::size_t j = 0; j < coinv.cols(); ++j)
        images.set_col(j, h->left_mult_matrix(coinv.col(j)).flatten());
    if (!subspace_equal(a.carrier.basis, images))
        fail(errc::model_mismatch,
             "relative end differs from the left-multiplication tensors of the coinvariants");

    Mat b = solve_unique(a.carrier.basis, images);
    for (std::size_t j1 = 0; j1 < coinv.cols(); ++j1)
        for (std::size_t j2 = 0; j2 < coinv.cols(); ++j2) {
            Mat prod = h->mul(coinv.col(j1), coinv.col(j2));
            Mat lhs = solve_unique(a.carrier.basis, h->left_mult_matrix(prod).flatten());
            if (lhs != a.mult * kron(b.col(j1), b.col(j2)))
                fail(errc::model_mismatch, "coinvariant model does not intertwine multiplication");
        }
    if (b * solve_unique(coinv, h->unit) != a.unit)
        fail(errc::model_mismatch, "coinvariant model does not intertwine units");
    return {std::move(b), a.dim()};
}

ModelIso verify_deligne(const HopfPtr& h1, const HopfPtr& h2) {
    HopfPtr t = tensor_hopf(h1, h2);
    HopfMap p = projection_first_factor(t, h1, h2);
    CentralAlgebra rel = build_algebra(relative_end(t, p));
    CentralAlgebra ab = build_algebra(end_at_generator(h2));

    if (rel.dim() != ab.dim())
        fail(errc::model_mismatch, "relative end and second-factor adjoint have different dims");

    // Embed the A_B basis operator T_e as left multiplication by 1 (x) T_e(1).
    const std::size_t n2 = h2->dim;
    Mat images(t->dim * t->dim, ab.dim());
    for (std::size_t k = 0; k < ab.dim(); ++k) {
        Mat a2 = ab.carrier.basis.col(k).reshape(n2, n2) * h2->unit;
        images.set_col(k, t->left_mult_matrix(kron(h1->unit, a2)).flatten());
    }
    if (!subspace_equal(rel.carrier.basis, images))
        fail(errc::model_mismatch, "relative end does not match the embedded second factor");

    Mat b = solve_unique(rel.carrier.basis, images);
    if (b * ab.mult != rel.mult * kron(b, b) || b * ab.unit != rel.unit)
        fail(errc::model_mismatch, "structure constants differ under the canonical identification");
    return {std::move(b), rel.dim()};
}

}  // namespace adjalg
