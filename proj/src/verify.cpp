#include "adjalg/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "adjalg/central.hpp"
#include "adjalg/registry.hpp"

namespace adjalg {

namespace {

struct Suite {
    bool fast;
    std::vector<CheckResult> results;
    std::map<std::string, EndObject> ordinary_ends;
    std::map<std::string, CentralAlgebra> ordinary_algebras;

    std::vector<std::string> builtins() const {
        if (fast) return {"c2", "c3", "c4", "s3", "sweedler", "k"};
        return builtin_names();
    }
    std::vector<std::string> quotient_builtins() const {
        if (fast) return {"c4", "s3", "sweedler"};
        return {"c2", "c3", "c4", "c6", "c2c2", "s3", "d4", "q8", "a4", "d6", "sweedler", "fn-s3"};
    }

    const EndObject& ordinary(const std::string& name) {
        auto it = ordinary_ends.find(name);
        if (it == ordinary_ends.end())
            it = ordinary_ends.emplace(name, end_at_generator(builtin_hopf(name))).first;
        return it->second;
    }
    const CentralAlgebra& algebra(const std::string& name) {
        auto it = ordinary_algebras.find(name);
        if (it == ordinary_algebras.end())
            it = ordinary_algebras.emplace(name, build_algebra(ordinary(name))).first;
        return it->second;
    }

    void run(const std::string& name, bool (Suite::*fn)(std::string&)) {
        CheckResult r{name, false, ""};
        try {
            r.pass = (this->*fn)(r.detail);
        } catch (const error& e) {
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }

    bool coinvariant_theorem(std::string& detail) {
        std::ostringstream os;
        for (const std::string& name : {"s3", "c4", "sweedler"}) {
            ModelIso iso = verify_coinvariant_model(builtin_hopf(name), builtin_quotient(name));
            os << name << ": dim " << iso.dim << "  ";
        }
        detail = os.str();
        return true;
    }

    bool dimension_formula(std::string& detail) {
        std::ostringstream os;
        bool ok = true;
        for (const std::string& name : quotient_builtins()) {
            HopfMap p = builtin_quotient(name);
            EndObject e = relative_end(p.source, p);
            bool here = e.dim() * p.target->dim == p.source->dim;
            ok = ok && here;
            os << name << ":" << e.dim() << "x" << p.target->dim << (here ? " " : "! ");
        }
        for (auto [d, b] : {std::pair{"c2", "c2"}, {"s3", "c2"}}) {
            if (fast && std::string(d) == "s3") continue;
            HopfPtr t = tensor_hopf(builtin_hopf(d), builtin_hopf(b));
            HopfMap p = projection_first_factor(t, builtin_hopf(d), builtin_hopf(b));
            EndObject e = relative_end(t, p);
            bool here = e.dim() * builtin_hopf(d)->dim == t->dim;
            ok = ok && here;
            os << d << "(x)" << b << ":" << e.dim() << (here ? " " : "! ");
        }
        detail = os.str();
        return ok;
    }

    bool ordinary_dimension(std::string& detail) {
        std::ostringstream os;
        bool ok = true;
        for (const std::string& name : builtins()) {
            const EndObject& e = ordinary(name);
            bool here = e.dim() == e.alg->dim;
            ok = ok && here;
            os << name << ":" << e.dim() << (here ? " " : "! ");
        }
        detail = os.str();
        return ok;
    }

    bool algebra_structure(std::string& detail) {
        bool ok = true;
        std::ostringstream os;
        for (const std::string& name : builtins()) {
            const CentralAlgebra& a = algebra(name);
            bool here = a.checks.associative && a.checks.unital && a.checks.commutative;
            ok = ok && here;
            if (!here) os << name << " fails structure; ";
        }
        for (const std::string& name : quotient_builtins()) {
            HopfMap p = builtin_quotient(name);
            CentralAlgebra a = build_algebra(relative_end(p.source, p));
            bool here = a.checks.associative && a.checks.unital && a.checks.commutative;
            ok = ok && here;
            if (!here) os << name << " (relative) fails structure; ";
        }
        // hexagon and naturality on the documented sample set
        for (const std::string& name : std::vector<std::string>{fast ? "c2" : "s3", "c2"}) {
            const CentralAlgebra& a = algebra(name);
            HModule reg = regular_module(a.carrier.alg);
            HModule triv = trivial_module(a.carrier.alg);
            std::vector<HModule> objs = {triv, reg};
            if (name == "c2") objs.push_back(tensor_module(reg, reg));
            std::map<std::size_t, Mat> sig;
            for (std::size_t i = 0; i < objs.size(); ++i)
                sig.emplace(i, half_braiding(a.carrier, objs[i]));
            const std::size_t k = a.dim();
            for (std::size_t i = 0; i < objs.size(); ++i)
                for (std::size_t j = 0; j < objs.size(); ++j) {
                    Mat both = half_braiding(a.carrier, tensor_module(objs[i], objs[j]));
                    bool hex = both == kron(Mat::identity(objs[i].dim), sig.at(j)) *
                                           kron(sig.at(i), Mat::identity(objs[j].dim));
                    ok = ok && hex;
                    if (!hex) os << name << " hexagon(" << i << "," << j << ") fails; ";
                    for (const HModMap& f : hom_basis(objs[i], objs[j])) {
                        bool nat = kron(f.matrix, Mat::identity(k)) * sig.at(i) ==
                                   sig.at(j) * kron(Mat::identity(k), f.matrix);
                        ok = ok && nat;
                        if (!nat) os << name << " naturality fails; ";
                    }
                }
        }
        detail = os.str().empty() ? "all built algebras pass" : os.str();
        return ok;
    }

    bool comparison_identity(std::string& detail) {
        bool ok = true;
        std::ostringstream os;
        for (const std::string& name : {"s3", "sweedler"}) {
            ComparisonMaps cm = comparison_maps(builtin_hopf(name), builtin_quotient(name));
            bool here = cm.identity_holds && cm.iota_algebra_map && cm.q_algebra_map;
            ok = ok && here;
            os << name << ":" << (here ? "ok " : "FAIL ");
        }
        detail = os.str();
        return ok;
    }

    bool deligne(std::string& detail) {
        std::ostringstream os;
        for (auto [d, b] : {std::pair{"c2", "c2"}, {"s3", "c2"}}) {
            if (fast && std::string(d) == "s3") continue;
            ModelIso iso = verify_deligne(builtin_hopf(d), builtin_hopf(b));
            os << d << "(x)" << b << ": dim " << iso.dim << "  ";
        }
        detail = os.str();
        return true;
    }

    bool nesting(std::string& detail) {
        HopfPtr h = builtin_hopf("s3");
        Group g = builtin_group("s3");
        const EndObject& e_all = ordinary("s3");
        EndObject e_mid = relative_end(h, builtin_quotient("s3"));

        Group::Quotient q = g.quotient(g.elements_by_name({"e"}));
        Mat m(q.group.order(), g.order());
        for (std::size_t i = 0; i < g.order(); ++i)
            m.at(static_cast<std::size_t>(q.coset_of[i]), i) = 1;
        EndObject e_top = relative_end(h, HopfMap(h, group_algebra(q.group, "k[s3/e]"), m));

        bool dims = e_all.dim() == 6 && e_mid.dim() == 3 && e_top.dim() == 1;
        CentralAlgebra a_all = build_algebra(e_all), a_mid = build_algebra(e_mid),
                       a_top = build_algebra(e_top);
        bool algmaps = true;
        auto check_inclusion = [&](const CentralAlgebra& fine, const CentralAlgebra& coarse) {
            Mat i = restriction_mono(fine.carrier, coarse.carrier);
            return i * fine.mult == coarse.mult * kron(i, i) && i * fine.unit == coarse.unit;
        };
        algmaps = check_inclusion(a_top, a_mid) && check_inclusion(a_mid, a_all) &&
                  check_inclusion(a_top, a_all);
        detail = "dims 6 >= 3 >= 1, inclusions are algebra maps";
        return dims && algmaps;
    }

    bool universal_property(std::string& detail) {
        HopfMap p = builtin_quotient("s3");
        EndObject e = relative_end(p.source, p);
        std::mt19937 rng(20260823);
        std::uniform_int_distribution<int> num(-3, 3), den(1, 3);

        int accepted = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Mat c(e.dim(), 2);
            for (std::size_t i = 0; i < c.rows(); ++i)
                for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j) = rat(num(rng), den(rng));
            if (factor_through(e, e.basis * c) == c) ++accepted;
        }

        // a coordinate direction outside the end subspace for perturbations
        Mat outside(e.ambient.dim, 1);
        for (std::size_t j = 0; j < e.ambient.dim; ++j) {
            Mat probe(e.ambient.dim, 1);
            probe.at(j, 0) = 1;
            if (!subspace_contains(e.basis, probe)) {
                outside = probe;
                break;
            }
        }
        int rejected = 0;
        for (int trial = 0; trial < 5; ++trial) {
            Mat c(e.dim(), 1);
            for (std::size_t i = 0; i < c.rows(); ++i) c.at(i, 0) = rat(num(rng), den(rng));
            try {
                factor_through(e, e.basis * c + outside * rat(trial + 1, 1));
            } catch (const error& err) {
                if (err.code() == errc::constraint_violation) ++rejected;
            }
        }
        std::ostringstream os;
        os << accepted << "/20 factored, " << rejected << "/5 rejected";
        detail = os.str();
        return accepted == 20 && rejected == 5;
    }

    bool degeneration(std::string& detail) {
        bool ok = true;
        std::ostringstream os;
        for (const std::string& name : builtins()) {
            HopfPtr h = builtin_hopf(name);
            EndObject rel = relative_end(h, counit_map(h));
            const EndObject& ord = ordinary(name);
            bool here = rel.dim() == ord.dim() && subspace_equal(rel.basis, ord.basis);
            ok = ok && here;
            os << name << (here ? " " : "! ");
        }
        detail = os.str();
        return ok;
    }

    bool appendix_compatibility(std::string& detail) {
        bool ok = true;
        std::size_t samples = 0;
        for (const std::string& name : {"sweedler", "s3"}) {
            if (fast && name == std::string("s3")) continue;
            HopfPtr h = builtin_hopf(name);
            HopfMap p = builtin_quotient(name);
            HModule reg = regular_module(h), triv = trivial_module(h);
            std::vector<HModule> ds = {pullback_module(p, regular_module(p.target)),
                                       pullback_module(p, trivial_module(p.target))};
            for (const HModule& d : ds)
                for (const HModule& m : {triv, reg})
                    for (const HModule& n : {triv, reg})
                        for (const HModule& x : {triv, reg}) {
                            // documented sample cap: keeps the stacked
                            // hom_basis solves at desk scale
                            if (m.dim * n.dim * x.dim > 72) continue;
                            Mat beta = prebalancing(d, m, n).matrix;
                            HModule nd = tensor_module(n, d);
                            HModule md =
                                tensor_module(m, dual_module(d, DualSide::left));
                            Mat ev_m(1, m.dim * m.dim), ev_d(1, d.dim * d.dim),
                                ev_md(1, md.dim * md.dim);
                            for (std::size_t i = 0; i < m.dim; ++i) ev_m.at(0, i * m.dim + i) = 1;
                            for (std::size_t i = 0; i < d.dim; ++i) ev_d.at(0, i * d.dim + i) = 1;
                            for (std::size_t i = 0; i < md.dim; ++i)
                                ev_md.at(0, i * md.dim + i) = 1;
                            for (const HModMap& f : hom_basis(x, internal_hom(m, nd))) {
                                // beta^X(phi(f)) vs phi(beta^D . f)
                                Mat g = kron(Mat::identity(nd.dim), ev_m) *
                                        kron(f.matrix, Mat::identity(m.dim));
                                Mat lhs = kron(Mat::identity(n.dim), ev_d) *
                                          kron(g, Mat::identity(d.dim));
                                Mat rhs = kron(Mat::identity(n.dim), ev_md) *
                                          kron(beta * f.matrix, Mat::identity(md.dim));
                                ok = ok && lhs == rhs;
                                ++samples;
                            }
                        }
        }
        std::ostringstream os;
        os << samples << " sampled morphisms";
        detail = os.str();
        return ok;
    }

    bool connectedness(std::string& detail) {
        bool ok = true;
        std::ostringstream os;
        for (const std::string& name : builtins()) {
            bool here = check_connected(algebra(name));
            ok = ok && here;
            os << name << (here ? " " : "! ");
        }
        for (const std::string& name : quotient_builtins()) {
            HopfMap p = builtin_quotient(name);
            bool here = check_connected(build_algebra(relative_end(p.source, p)));
            ok = ok && here;
            os << name << "(rel)" << (here ? " " : "! ");
        }
        detail = os.str();
        return ok;
    }
};

}  // namespace

std::vector<CheckResult> acceptance_suite(bool fast) {
    Suite s{fast, {}, {}, {}};
    s.run("1 coinvariant theorem", &Suite::coinvariant_theorem);
    s.run("2 dimension formula", &Suite::dimension_formula);
    s.run("3 ordinary adjoint dimension", &Suite::ordinary_dimension);
    s.run("4 commutativity and algebra structure", &Suite::algebra_structure);
    s.run("5 comparison identity", &Suite::comparison_identity);
    s.run("6 deligne factorization", &Suite::deligne);
    s.run("7 nesting", &Suite::nesting);
    s.run("8 universal property", &Suite::universal_property);
    s.run("9 degeneration", &Suite::degeneration);
    s.run("10 appendix compatibility", &Suite::appendix_compatibility);
    s.run("11 connectedness", &Suite::connectedness);
    return s.results;
}

}  // namespace adjalg
