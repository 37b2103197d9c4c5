#include "adjalg/json_io.hpp"

#include <fstream>

#include "adjalg/registry.hpp"

namespace adjalg {

namespace {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from(const json& j) {
    if (!j.is_string()) fail(errc::bad_input, "rational must be a \"num/den\" string");
    return rat_from_string(j.get<std::string>());
}

void require(bool ok, const std::string& what) {
    if (!ok) fail(errc::bad_input, "malformed input: " + what);
}

}  // namespace

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    require(j.is_array() && !j.empty() && j[0].is_array(), "matrix must be an array of rows");
    Mat m(j.size(), j[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        require(j[i].is_array() && j[i].size() == m.cols(), "ragged matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = rat_from(j[i][c]);
    }
    return m;
}

json group_to_json(const Group& g) {
    return json{{"schema", "group-v1"}, {"elements", g.names}, {"table", g.table}};
}

Group group_from_json(const json& j) {
    require(j.contains("elements") && j.contains("table"), "group-v1 needs elements and table");
    return Group(j["elements"].get<std::vector<std::string>>(),
                 j["table"].get<std::vector<std::vector<int>>>());
}

json hopf_to_json(const HopfAlgebra& h) {
    json mult = json::array();
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j)
            for (std::size_t k = 0; k < h.dim; ++k)
                if (!is_zero(h.mult.at(k, i * h.dim + j)))
                    mult.push_back(json::array({i, j, k, rat_json(h.mult.at(k, i * h.dim + j))}));
    json comult = json::array();
    for (std::size_t i = 0; i < h.dim; ++i)
        for (const auto& t : h.comult[i])
            comult.push_back(json::array({i, t.left, t.right, rat_json(t.coeff)}));
    json unit = json::array(), counit = json::array();
    for (std::size_t i = 0; i < h.dim; ++i) {
        unit.push_back(rat_json(h.unit.at(i, 0)));
        counit.push_back(rat_json(h.counit.at(0, i)));
    }
    return json{{"schema", "hopf-v1"}, {"name", h.name},       {"dim", h.dim},
                {"basis", h.basis_names}, {"mult", mult},      {"unit", unit},
                {"comult", comult},    {"counit", counit},     {"antipode", mat_to_json(h.antipode)}};
}

HopfAlgebra hopf_raw_from_json(const json& j) {
    require(j.is_object() && j.contains("dim"), "hopf-v1 needs dim");
    HopfAlgebra h;
    h.dim = j["dim"].get<std::size_t>();
    require(h.dim > 0, "dim must be positive");
    h.name = j.value("name", "hopf");
    if (j.contains("basis"))
        h.basis_names = j["basis"].get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < h.dim; ++i) h.basis_names.push_back("b" + std::to_string(i));
    require(h.basis_names.size() == h.dim, "basis name count");

    h.mult = Mat(h.dim, h.dim * h.dim);
    require(j.contains("mult") && j["mult"].is_array(), "hopf-v1 needs mult");
    for (const auto& e : j["mult"]) {
        require(e.is_array() && e.size() == 4, "mult entry must be [i,j,k,coeff]");
        std::size_t i = e[0], jj = e[1], k = e[2];
        require(i < h.dim && jj < h.dim && k < h.dim, "mult index out of range");
        h.mult.at(k, i * h.dim + jj) = rat_from(e[3]);
    }
    h.unit = Mat(h.dim, 1);
    require(j.contains("unit") && j["unit"].size() == h.dim, "hopf-v1 needs unit of length dim");
    for (std::size_t i = 0; i < h.dim; ++i) h.unit.at(i, 0) = rat_from(j["unit"][i]);

    h.comult.resize(h.dim);
    require(j.contains("comult") && j["comult"].is_array(), "hopf-v1 needs comult");
    for (const auto& e : j["comult"]) {
        require(e.is_array() && e.size() == 4, "comult entry must be [i,left,right,coeff]");
        std::size_t i = e[0];
        int l = e[1], r = e[2];
        require(i < h.dim && l >= 0 && r >= 0 && static_cast<std::size_t>(l) < h.dim &&
                    static_cast<std::size_t>(r) < h.dim,
                "comult index out of range");
        h.comult[i].push_back({l, r, rat_from(e[3])});
    }
    h.counit = Mat(1, h.dim);
    require(j.contains("counit") && j["counit"].size() == h.dim, "hopf-v1 needs counit");
    for (std::size_t i = 0; i < h.dim; ++i) h.counit.at(0, i) = rat_from(j["counit"][i]);

    require(j.contains("antipode"), "hopf-v1 needs antipode");
    h.antipode = mat_from_json(j["antipode"]);
    return h;
}

HopfPtr hopf_from_json(const json& j) { return make_hopf(hopf_raw_from_json(j)); }

namespace {

HopfPtr hopf_ref_from_json(const json& j) {
    if (j.is_string()) return builtin_hopf(j.get<std::string>());
    if (j.is_object() && j.contains("builtin")) return builtin_hopf(j["builtin"].get<std::string>());
    return hopf_from_json(j);
}

}  // namespace

HopfMap hopfmap_from_json(const json& j) {
    require(j.contains("source") && j.contains("target") && j.contains("matrix"),
            "hopfmap-v1 needs source, target and matrix");
    return HopfMap(hopf_ref_from_json(j["source"]), hopf_ref_from_json(j["target"]),
                   mat_from_json(j["matrix"]));
}

json end_to_json(const EndObject& e) {
    json validations = json::array();
    for (const auto& v : e.validations) validations.push_back({{"X", v.description}, {"pass", v.pass}});
    json out{{"schema", "end-v1"},
             {"dim_ambient", e.ambient.dim},
             {"dim_end", e.dim()},
             {"basis", mat_to_json(e.basis)},
             {"validations", validations}};
    if (e.relative_to) out["relative_to"] = e.relative_to->target->name;
    return out;
}

json algebra_to_json(const CentralAlgebra& a, bool connected) {
    const std::size_t k = a.dim();
    json constants = json::array();
    for (std::size_t i = 0; i < k; ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < k; ++j) {
            json row = json::array();
            for (std::size_t l = 0; l < k; ++l) row.push_back(rat_json(a.mult.at(l, i * k + j)));
            plane.push_back(std::move(row));
        }
        constants.push_back(std::move(plane));
    }
    json unit = json::array();
    for (std::size_t i = 0; i < k; ++i) unit.push_back(rat_json(a.unit.at(i, 0)));
    return json{{"schema", "algebra-v1"},
                {"dim", k},
                {"mult_constants", constants},
                {"unit", unit},
                {"checks",
                 {{"associative", a.checks.associative},
                  {"unital", a.checks.unital},
                  {"commutative", a.checks.commutative},
                  {"connected", connected}}}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail(errc::bad_input, std::string("JSON parse error: ") + ex.what());
    }
    return j;
}

}  // namespace adjalg
