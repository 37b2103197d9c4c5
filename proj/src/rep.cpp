#include "adjalg/rep.hpp"

#include <utility>

namespace adjalg {

HModule::HModule(HopfPtr alg_in, std::vector<Mat> action_in)
    : alg(std::move(alg_in)), action(std::move(action_in)) {
    const std::size_t n = alg->dim;
    if (action.size() != n) fail(errc::bad_input, "one action matrix per Hopf basis element required");
    dim = action.empty() ? 0 : action[0].rows();
    for (const Mat& a : action)
        if (a.rows() != dim || a.cols() != dim) fail(errc::bad_input, "action matrix shape");

    if (act(alg->unit) != Mat::identity(dim)) fail(errc::bad_input, "unit does not act as identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (act(alg->product_column(i, j)) != action[i] * action[j])
                fail(errc::bad_input, "action is not multiplicative");
}

Mat HModule::act(const Mat& h) const {
    Mat r(dim, dim);
    for (std::size_t i = 0; i < alg->dim; ++i)
        if (!is_zero(h.at(i, 0))) r = r + action[i] * h.at(i, 0);
    return r;
}

HModMap::HModMap(HModule source_in, HModule target_in, Mat matrix_in)
    : source(std::move(source_in)), target(std::move(target_in)), matrix(std::move(matrix_in)) {
    if (source.alg != target.alg && source.alg->name != target.alg->name)
        fail(errc::algebra_mismatch, "map between modules over different algebras");
    if (matrix.rows() != target.dim || matrix.cols() != source.dim)
        fail(errc::bad_input, "map matrix shape");
    for (std::size_t i = 0; i < source.alg->dim; ++i)
        if (matrix * source.action[i] != target.action[i] * matrix)
            fail(errc::not_equivariant, "map does not commute with the action");
}

HModule regular_module(const HopfPtr& h) {
    std::vector<Mat> action;
    action.reserve(h->dim);
    for (std::size_t i = 0; i < h->dim; ++i) {
        Mat e(h->dim, 1);
        e.at(i, 0) = 1;
        action.push_back(h->left_mult_matrix(e));
    }
    return HModule(h, std::move(action));
}

HModule trivial_module(const HopfPtr& h) {
    std::vector<Mat> action;
    action.reserve(h->dim);
    for (std::size_t i = 0; i < h->dim; ++i) {
        Mat a(1, 1);
        a.at(0, 0) = h->counit.at(0, i);
        action.push_back(std::move(a));
    }
    return HModule(h, std::move(action));
}

HModule tensor_module(const HModule& a, const HModule& b) {
    if (a.alg != b.alg && a.alg->name != b.alg->name)
        fail(errc::algebra_mismatch, "tensor of modules over different algebras");
    const HopfPtr& h = a.alg;
    std::vector<Mat> action;
    action.reserve(h->dim);
    for (std::size_t i = 0; i < h->dim; ++i) {
        Mat m(a.dim * b.dim, a.dim * b.dim);
        for (const auto& t : h->comult[i])
            m = m + kron(a.action[static_cast<std::size_t>(t.left)],
                         b.action[static_cast<std::size_t>(t.right)]) *
                        t.coeff;
        action.push_back(std::move(m));
    }
    return HModule(h, std::move(action));
}

HModule dual_module(const HModule& m, DualSide side) {
    const HopfPtr& h = m.alg;
    Mat s = side == DualSide::right ? h->antipode
                                    : solve_unique(h->antipode, Mat::identity(h->dim));
    std::vector<Mat> action;
    action.reserve(h->dim);
    for (std::size_t i = 0; i < h->dim; ++i) action.push_back(m.act(s.col(i)).transpose());
    return HModule(h, std::move(action));
}

HModMap ev_map(const HModule& m, DualSide side) {
    Mat e(1, m.dim * m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) e.at(0, i * m.dim + i) = 1;
    HModule src = side == DualSide::right ? tensor_module(dual_module(m, side), m)
                                          : tensor_module(m, dual_module(m, side));
    return HModMap(std::move(src), trivial_module(m.alg), std::move(e));
}

HModMap coev_map(const HModule& m, DualSide side) {
    Mat c(m.dim * m.dim, 1);
    for (std::size_t i = 0; i < m.dim; ++i) c.at(i * m.dim + i, 0) = 1;
    HModule tgt = side == DualSide::right ? tensor_module(m, dual_module(m, side))
                                          : tensor_module(dual_module(m, side), m);
    return HModMap(trivial_module(m.alg), std::move(tgt), std::move(c));
}

std::vector<HModMap> hom_basis(const HModule& m, const HModule& n) {
    if (m.alg != n.alg && m.alg->name != n.alg->name)
        fail(errc::algebra_mismatch, "hom between modules over different algebras");
    const std::size_t nh = m.alg->dim, unknowns = n.dim * m.dim;
    // flat(T)[(r,c)] with T: m -> n; T rho_m(b) = rho_n(b) T becomes
    // (I (x) rho_m^t - rho_n (x) I) flat(T) = 0
    Mat stacked(0, unknowns);
    for (std::size_t i = 0; i < nh; ++i)
        stacked = stacked.vcat(kron(Mat::identity(n.dim), m.action[i].transpose()) -
                               kron(n.action[i], Mat::identity(m.dim)));
    Mat sols = kernel_basis_mat(stacked);
    std::vector<HModMap> out;
    out.reserve(sols.cols());
    for (std::size_t c = 0; c < sols.cols(); ++c)
        out.emplace_back(m, n, sols.col(c).reshape(n.dim, m.dim));
    return out;
}

HModule internal_hom(const HModule& x, const HModule& y) {
    return tensor_module(y, dual_module(x, DualSide::right));
}

HModMap phi_adj(const HModMap& f, const HModule& x, const HModule& y) {
    Mat ev(1, x.dim * x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) ev.at(0, i * x.dim + i) = 1;
    Mat mat = kron(Mat::identity(y.dim), ev) * kron(f.matrix, Mat::identity(x.dim));
    return HModMap(tensor_module(f.source, x), y, std::move(mat));
}

HModMap psi_adj(const HModMap& g, const HModule& z, const HModule& x, const HModule& y) {
    Mat coev(x.dim * x.dim, 1);
    for (std::size_t i = 0; i < x.dim; ++i) coev.at(i * x.dim + i, 0) = 1;
    Mat mat = kron(g.matrix, Mat::identity(x.dim)) * kron(Mat::identity(z.dim), coev);
    return HModMap(z, internal_hom(x, y), std::move(mat));
}

HModMap comp_map(const HModule& m) {
    const std::size_t d = m.dim, hd = d * d;
    Mat c(hd, hd * hd);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l)
                c.at(i * d + l, (i * d + j) * hd + (j * d + l)) = 1;
    HModule hom = internal_hom(m, m);
    return HModMap(tensor_module(hom, hom), hom, std::move(c));
}

HModMap dual_tensor_swap(const HModule& m, const HModule& x) {
    Mat p(x.dim * m.dim, m.dim * x.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j) p.at(j * m.dim + i, i * x.dim + j) = 1;
    return HModMap(dual_module(tensor_module(m, x), DualSide::right),
                   tensor_module(dual_module(x, DualSide::right), dual_module(m, DualSide::right)),
                   std::move(p));
}

HModMap frak_a(const HModule& x, const HModule& m, const HModule& n) {
    HModule src = internal_hom(m, tensor_module(x, n));
    HModule tgt = tensor_module(x, internal_hom(m, n));
    return HModMap(std::move(src), std::move(tgt), Mat::identity(x.dim * n.dim * m.dim));
}

HModMap frak_b(const HModule& x, const HModule& m, const HModule& n) {
    const std::size_t nx = x.dim, nm = m.dim, nn = n.dim;
    HModule src = tensor_module(internal_hom(tensor_module(x, m), n), x);
    HModule tgt = internal_hom(m, n);
    Mat b(nn * nm, nn * nx * nm * nx);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < nm; ++j)
                b.at(a * nm + j, (a * nx * nm + i * nm + j) * nx + i) = 1;
    return HModMap(std::move(src), std::move(tgt), std::move(b));
}

HModMap prebalancing(const HModule& d, const HModule& m, const HModule& n) {
    const std::size_t nd = d.dim, nm = m.dim, nn = n.dim;
    HModule src = tensor_module(tensor_module(n, d), dual_module(m, DualSide::right));
    HModule tgt =
        tensor_module(n, dual_module(tensor_module(m, dual_module(d, DualSide::left)),
                                     DualSide::right));
    Mat b(nn * nm * nd, nn * nd * nm);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t dd = 0; dd < nd; ++dd)
            for (std::size_t j = 0; j < nm; ++j)
                b.at(a * nm * nd + j * nd + dd, (a * nd + dd) * nm + j) = 1;
    return HModMap(std::move(src), std::move(tgt), std::move(b));
}

HModule pullback_module(const HopfMap& p, const HModule& m) {
    if (m.alg != p.target && m.alg->name != p.target->name)
        fail(errc::algebra_mismatch, "module is not over the quotient algebra");
    std::vector<Mat> action;
    action.reserve(p.source->dim);
    for (std::size_t i = 0; i < p.source->dim; ++i) action.push_back(m.act(p.matrix.col(i)));
    return HModule(p.source, std::move(action));
}

}  // namespace adjalg
