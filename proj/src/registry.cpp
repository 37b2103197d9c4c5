#include "adjalg/registry.hpp"

#include <map>

namespace adjalg {

namespace {

const std::vector<std::string> kNames = {"c2", "c3", "c4",  "c6",       "c2c2",  "s3",   "d4",
                                         "q8", "a4", "d6",  "sweedler", "fn-s3", "fn-c2", "k"};

HopfPtr make_builtin(const std::string& name) {
    if (name == "sweedler") return sweedler();
    if (name == "k") return base_field();
    if (name == "fn-s3") return function_algebra(symmetric3(), "k^S3");
    if (name == "fn-c2") return function_algebra(cyclic_group(2), "k^C2");
    return group_algebra(builtin_group(name), "k[" + name + "]");
}

// Elements (by name) generating the canonical normal subgroup per builtin.
const std::map<std::string, std::vector<std::string>> kCanonicalSubgroup = {
    {"c2", {"e", "a"}},
    {"c3", {"e", "a", "a2"}},
    {"c4", {"e", "a2"}},
    {"c6", {"e", "a2", "a4"}},
    {"c2c2", {"(e,e)", "(a,e)"}},
    {"s3", {"e", "(123)", "(132)"}},
    {"d4", {"e", "r2"}},
    {"q8", {"1", "-1"}},
    {"a4", {"e", "(12)(34)", "(13)(24)", "(14)(23)"}},
    {"d6", {"e", "r2", "r4"}},
};

}  // namespace

HopfPtr builtin_hopf(const std::string& name) {
    static std::map<std::string, HopfPtr> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& n : kNames)
        if (n == name) return cache[name] = make_builtin(name);
    fail(errc::bad_input, "unknown builtin Hopf algebra '" + name + "'");
}

std::vector<std::string> builtin_names() { return kNames; }

Group builtin_group(const std::string& name) {
    if (name == "c2") return cyclic_group(2);
    if (name == "c3") return cyclic_group(3);
    if (name == "c4") return cyclic_group(4);
    if (name == "c6") return cyclic_group(6);
    if (name == "c2c2") return product_group(cyclic_group(2), cyclic_group(2));
    if (name == "s3" || name == "fn-s3") return symmetric3();
    if (name == "fn-c2") return cyclic_group(2);
    if (name == "d4") return dihedral_group(4);
    if (name == "d6") return dihedral_group(6);
    if (name == "q8") return quaternion8();
    if (name == "a4") return alternating4();
    fail(errc::bad_input, "builtin '" + name + "' has no underlying group");
}

HopfMap builtin_quotient(const std::string& name) {
    if (name == "sweedler") {
        Mat m(2, 4);
        m.at(0, 0) = 1;  // 1 -> e
        m.at(1, 1) = 1;  // g -> a
        return HopfMap(builtin_hopf("sweedler"), group_algebra(cyclic_group(2), "k[c2]"), m);
    }
    if (name == "fn-s3") {
        Group g = symmetric3();
        std::vector<int> sub = g.elements_by_name({"e", "(12)"});
        Mat m(sub.size(), g.order());
        for (std::size_t i = 0; i < sub.size(); ++i) m.at(i, static_cast<std::size_t>(sub[i])) = 1;
        // restriction of functions to the subgroup {e, (12)}
        std::vector<std::vector<int>> table = {{0, 1}, {1, 0}};
        Group h({"e", "(12)"}, table);
        return HopfMap(builtin_hopf("fn-s3"), function_algebra(h, "k^C2"), m);
    }
    auto it = kCanonicalSubgroup.find(name);
    if (it == kCanonicalSubgroup.end())
        fail(errc::bad_input, "builtin '" + name + "' has no canonical quotient");
    Group g = builtin_group(name);
    Group::Quotient q = g.quotient(g.elements_by_name(it->second));
    Mat m(q.group.order(), g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        m.at(static_cast<std::size_t>(q.coset_of[i]), i) = 1;
    return HopfMap(builtin_hopf(name), group_algebra(q.group, "k[" + name + "/N]"), std::move(m));
}

std::vector<NamedQuotient> registry_quotients() {
    std::vector<NamedQuotient> out;
    for (const auto& [name, sub] : kCanonicalSubgroup)
        out.push_back({name, name + " / canonical normal subgroup", builtin_quotient(name)});
    out.push_back({"sweedler", "sweedler -> k[c2]", builtin_quotient("sweedler")});
    out.push_back({"fn-s3", "k^S3 -> k^C2 (restriction)", builtin_quotient("fn-s3")});
    for (const auto& name : kNames)
        out.push_back({name, name + " / counit", counit_map(builtin_hopf(name))});
    return out;
}

}  // namespace adjalg
