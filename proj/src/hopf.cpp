#include "adjalg/hopf.hpp"

#include <utility>

namespace adjalg {

Mat HopfAlgebra::mul(const Mat& x, const Mat& y) const { return mult * kron(x, y); }

Mat HopfAlgebra::comult_matrix() const {
    Mat c(dim * dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (const auto& t : comult[i])
            c.at(static_cast<std::size_t>(t.left) * dim + static_cast<std::size_t>(t.right), i) += t.coeff;
    return c;
}

Mat HopfAlgebra::comult_apply(const Mat& x) const {
    Mat out(dim * dim, 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (is_zero(x.at(i, 0))) continue;
        for (const auto& t : comult[i])
            out.at(static_cast<std::size_t>(t.left) * dim + static_cast<std::size_t>(t.right), 0) +=
                x.at(i, 0) * t.coeff;
    }
    return out;
}

Mat HopfAlgebra::left_mult_matrix(const Mat& x) const {
    Mat l(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (is_zero(x.at(i, 0))) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Rat& m = mult.at(k, i * dim + j);
                if (!is_zero(m)) l.at(k, j) += x.at(i, 0) * m;
            }
    }
    return l;
}

bool AxiomReport::all_pass() const {
    for (const auto& [name, ok] : axioms)
        if (!ok) return false;
    return true;
}

std::string AxiomReport::first_failure() const {
    for (const auto& [name, ok] : axioms)
        if (!ok) return name;
    return "";
}

AxiomReport check_axioms(const HopfAlgebra& h) {
    AxiomReport rep;
    auto add = [&rep](const std::string& name, bool ok) { rep.axioms.emplace_back(name, ok); };

    const std::size_t n = h.dim;
    bool shapes = n > 0 && h.mult.rows() == n && h.mult.cols() == n * n && h.unit.rows() == n &&
                  h.unit.cols() == 1 && h.comult.size() == n && h.counit.rows() == 1 &&
                  h.counit.cols() == n && h.antipode.rows() == n && h.antipode.cols() == n;
    add("shapes", shapes);
    if (!shapes) return rep;

    const Mat id = Mat::identity(n);
    const Mat c = h.comult_matrix();

    add("associativity", h.mult * kron(h.mult, id) == h.mult * kron(id, h.mult));
    add("unit", h.mult * kron(h.unit, id) == id && h.mult * kron(id, h.unit) == id);
    add("coassociativity", kron(c, id) * c == kron(id, c) * c);
    add("counit", kron(h.counit, id) * c == id && kron(id, h.counit) * c == id);

    // Delta is an algebra map: checked column by column through the sparse
    // comultiplication, the dense formulation would need dim^4 x dim^4 maps.
    bool bialg = h.comult_apply(h.unit) == kron(h.unit, h.unit);
    for (std::size_t i = 0; i < n && bialg; ++i)
        for (std::size_t j = 0; j < n && bialg; ++j) {
            Mat lhs = h.comult_apply(h.product_column(i, j));
            Mat rhs(n * n, 1);
            for (const auto& t1 : h.comult[i])
                for (const auto& t2 : h.comult[j]) {
                    Rat coeff = t1.coeff * t2.coeff;
                    rhs = rhs + kron(h.product_column(static_cast<std::size_t>(t1.left),
                                                      static_cast<std::size_t>(t2.left)),
                                     h.product_column(static_cast<std::size_t>(t1.right),
                                                      static_cast<std::size_t>(t2.right))) *
                                    coeff;
                }
            bialg = lhs == rhs;
        }
    add("bialgebra", bialg);
    add("counit-algebra-map",
        h.counit * h.mult == kron(h.counit, h.counit) && (h.counit * h.unit).at(0, 0) == 1);

    bool antipode = true;
    for (std::size_t i = 0; i < n && antipode; ++i) {
        Mat lhs1(n, 1), lhs2(n, 1);
        for (const auto& t : h.comult[i]) {
            Mat eb(n, 1), ea(n, 1);
            eb.at(static_cast<std::size_t>(t.right), 0) = 1;
            ea.at(static_cast<std::size_t>(t.left), 0) = 1;
            lhs1 = lhs1 + h.mul(h.antipode.col(static_cast<std::size_t>(t.left)), eb) * t.coeff;
            lhs2 = lhs2 + h.mul(ea, h.antipode.col(static_cast<std::size_t>(t.right))) * t.coeff;
        }
        Mat rhs = h.unit * h.counit.at(0, i);
        antipode = lhs1 == rhs && lhs2 == rhs;
    }
    add("antipode", antipode);
    add("antipode-invertible", h.antipode.rank() == n);

    return rep;
}

HopfPtr make_hopf(HopfAlgebra h) {
    AxiomReport rep = check_axioms(h);
    if (!rep.all_pass())
        fail(errc::not_hopf, "axiom '" + rep.first_failure() + "' fails for '" + h.name + "'");
    return std::make_shared<const HopfAlgebra>(std::move(h));
}

HopfPtr group_algebra(const Group& g, const std::string& name) {
    const std::size_t n = g.order();
    HopfAlgebra h;
    h.name = name.empty() ? "k[G]" : name;
    h.dim = n;
    h.basis_names = g.names;
    h.mult = Mat(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.mult.at(static_cast<std::size_t>(g.mul(static_cast<int>(i), static_cast<int>(j))),
                      i * n + j) = 1;
    h.unit = Mat(n, 1);
    h.unit.at(static_cast<std::size_t>(g.identity()), 0) = 1;
    h.comult.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        h.comult[i] = {{static_cast<int>(i), static_cast<int>(i), Rat(1)}};
    h.counit = Mat(1, n);
    for (std::size_t i = 0; i < n; ++i) h.counit.at(0, i) = 1;
    h.antipode = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        h.antipode.at(static_cast<std::size_t>(g.inverse(static_cast<int>(i))), i) = 1;
    return make_hopf(std::move(h));
}

HopfPtr function_algebra(const Group& g, const std::string& name) {
    const std::size_t n = g.order();
    HopfAlgebra h;
    h.name = name.empty() ? "k^G" : name;
    h.dim = n;
    h.basis_names.reserve(n);
    for (const auto& s : g.names) h.basis_names.push_back("d_" + s);
    h.mult = Mat(n, n * n);
    for (std::size_t i = 0; i < n; ++i) h.mult.at(i, i * n + i) = 1;
    h.unit = Mat(n, 1);
    for (std::size_t i = 0; i < n; ++i) h.unit.at(i, 0) = 1;
    h.comult.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            h.comult[static_cast<std::size_t>(g.mul(static_cast<int>(a), static_cast<int>(b)))]
                .push_back({static_cast<int>(a), static_cast<int>(b), Rat(1)});
    h.counit = Mat(1, n);
    h.counit.at(0, static_cast<std::size_t>(g.identity())) = 1;
    h.antipode = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        h.antipode.at(static_cast<std::size_t>(g.inverse(static_cast<int>(i))), i) = 1;
    return make_hopf(std::move(h));
}

HopfPtr sweedler() {
    // basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx
    HopfAlgebra h;
    h.name = "sweedler";
    h.dim = 4;
    h.basis_names = {"1", "g", "x", "gx"};
    h.mult = Mat(4, 16);
    auto set = [&h](std::size_t i, std::size_t j, std::size_t k, long c) {
        h.mult.at(k, i * 4 + j) = Rat(c);
    };
    for (std::size_t j = 0; j < 4; ++j) set(0, j, j, 1);  // 1 * b = b
    set(1, 0, 1, 1); set(1, 1, 0, 1); set(1, 2, 3, 1); set(1, 3, 2, 1);
    set(2, 0, 2, 1); set(2, 1, 3, -1);   // x g = -gx
    set(3, 0, 3, 1); set(3, 1, 2, -1);   // gx g = -x
    h.unit = Mat(4, 1);
    h.unit.at(0, 0) = 1;
    h.comult = {
        {{0, 0, Rat(1)}},
        {{1, 1, Rat(1)}},
        {{2, 0, Rat(1)}, {1, 2, Rat(1)}},  // x (x) 1 + g (x) x
        {{3, 1, Rat(1)}, {0, 3, Rat(1)}},  // gx (x) g + 1 (x) gx
    };
    h.counit = Mat(1, 4);
    h.counit.at(0, 0) = 1;
    h.counit.at(0, 1) = 1;
    h.antipode = Mat(4, 4);
    h.antipode.at(0, 0) = 1;
    h.antipode.at(1, 1) = 1;
    h.antipode.at(3, 2) = -1;  // S(x) = -gx
    h.antipode.at(2, 3) = 1;   // S(gx) = x
    return make_hopf(std::move(h));
}

HopfPtr base_field() {
    HopfAlgebra h;
    h.name = "k";
    h.dim = 1;
    h.basis_names = {"1"};
    h.mult = Mat(1, 1);
    h.mult.at(0, 0) = 1;
    h.unit = Mat(1, 1);
    h.unit.at(0, 0) = 1;
    h.comult = {{{0, 0, Rat(1)}}};
    h.counit = Mat(1, 1);
    h.counit.at(0, 0) = 1;
    h.antipode = Mat(1, 1);
    h.antipode.at(0, 0) = 1;
    return make_hopf(std::move(h));
}

HopfPtr tensor_hopf(const HopfPtr& h1, const HopfPtr& h2) {
    const std::size_t n1 = h1->dim, n2 = h2->dim, n = n1 * n2;
    HopfAlgebra h;
    h.name = h1->name + "(x)" + h2->name;
    h.dim = n;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            h.basis_names.push_back(h1->basis_names[i] + "(x)" + h2->basis_names[j]);
    h.mult = Mat(n, n * n);
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t j1 = 0; j1 < n2; ++j1)
            for (std::size_t i2 = 0; i2 < n1; ++i2)
                for (std::size_t j2 = 0; j2 < n2; ++j2)
                    h.mult.set_col((i1 * n2 + j1) * n + (i2 * n2 + j2),
                                   kron(h1->product_column(i1, i2), h2->product_column(j1, j2)));
    h.unit = kron(h1->unit, h2->unit);
    h.comult.resize(n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (const auto& t1 : h1->comult[i])
                for (const auto& t2 : h2->comult[j])
                    h.comult[i * n2 + j].push_back(
                        {static_cast<int>(static_cast<std::size_t>(t1.left) * n2 +
                                          static_cast<std::size_t>(t2.left)),
                         static_cast<int>(static_cast<std::size_t>(t1.right) * n2 +
                                          static_cast<std::size_t>(t2.right)),
                         t1.coeff * t2.coeff});
    h.counit = kron(h1->counit, h2->counit);
    h.antipode = kron(h1->antipode, h2->antipode);
    return make_hopf(std::move(h));
}

HopfMap::HopfMap(HopfPtr source_in, HopfPtr target_in, Mat matrix_in)
    : source(std::move(source_in)), target(std::move(target_in)), matrix(std::move(matrix_in)) {
    const std::size_t ns = source->dim, nt = target->dim;
    if (matrix.rows() != nt || matrix.cols() != ns) fail(errc::not_hopf_map, "matrix shape");
    if (matrix * source->mult != target->mult * kron(matrix, matrix))
        fail(errc::not_hopf_map, "does not preserve multiplication");
    if (matrix * source->unit != target->unit) fail(errc::not_hopf_map, "does not preserve unit");
    if (target->comult_matrix() * matrix != kron(matrix, matrix) * source->comult_matrix())
        fail(errc::not_hopf_map, "does not preserve comultiplication");
    if (target->counit * matrix != source->counit)
        fail(errc::not_hopf_map, "does not preserve counit");
    if (matrix * source->antipode != target->antipode * matrix)
        fail(errc::not_hopf_map, "does not preserve antipode");
}

HopfMap identity_map(const HopfPtr& h) { return HopfMap(h, h, Mat::identity(h->dim)); }

HopfMap counit_map(const HopfPtr& h) { return HopfMap(h, base_field(), h->counit); }

HopfMap quotient_by_normal_subgroup(const Group& g, const std::vector<int>& normal_subgroup,
                                    const std::string& name) {
    Group::Quotient q = g.quotient(normal_subgroup);
    HopfPtr src = group_algebra(g, name);
    HopfPtr tgt = group_algebra(q.group, name.empty() ? "" : name + "/N");
    Mat m(q.group.order(), g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        m.at(static_cast<std::size_t>(q.coset_of[i]), i) = 1;
    return HopfMap(std::move(src), std::move(tgt), std::move(m));
}

HopfMap projection_first_factor(const HopfPtr& tensor, const HopfPtr& h1, const HopfPtr& h2) {
    const std::size_t n1 = h1->dim, n2 = h2->dim;
    if (tensor->dim != n1 * n2) fail(errc::bad_input, "tensor algebra dimension mismatch");
    Mat m(n1, n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) m.at(i, i * n2 + j) = h2->counit.at(0, j);
    return HopfMap(tensor, h1, std::move(m));
}

HopfMap function_restriction(const Group& g, const std::vector<int>& subgroup,
                             const std::string& name) {
    if (!g.is_subgroup(subgroup)) fail(errc::not_subgroup, "subset is not a subgroup");
    const std::size_t k = subgroup.size();
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < k; ++i) pos[static_cast<std::size_t>(subgroup[i])] = static_cast<int>(i);
    std::vector<std::string> names;
    for (int s : subgroup) names.push_back(g.names[static_cast<std::size_t>(s)]);
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table[i][j] = pos[static_cast<std::size_t>(g.mul(subgroup[i], subgroup[j]))];
    Group sub(std::move(names), std::move(table));

    HopfPtr src = function_algebra(g, name);
    HopfPtr tgt = function_algebra(sub, name.empty() ? "" : name + "|H");
    Mat m(k, g.order());
    for (std::size_t i = 0; i < k; ++i) m.at(i, static_cast<std::size_t>(subgroup[i])) = 1;
    return HopfMap(std::move(src), std::move(tgt), std::move(m));
}

Mat coinvariants(const HopfMap& p) {
    const std::size_t n = p.source->dim, q = p.target->dim;
    Mat constraint(n * q, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : p.source->comult[i]) {
            Mat pb = p.matrix.col(static_cast<std::size_t>(t.right));
            for (std::size_t r = 0; r < q; ++r)
                if (!is_zero(pb.at(r, 0)))
                    constraint.at(static_cast<std::size_t>(t.left) * q + r, i) += t.coeff * pb.at(r, 0);
        }
        for (std::size_t r = 0; r < q; ++r)
            constraint.at(i * q + r, i) -= p.target->unit.at(r, 0);
    }
    return kernel_basis_mat(constraint);
}

}  // namespace adjalg
