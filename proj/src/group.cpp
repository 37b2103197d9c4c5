#include "adjalg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace adjalg {

Group::Group(std::vector<std::string> names_in, std::vector<std::vector<int>> table_in)
    : names(std::move(names_in)), table(std::move(table_in)) {
    const std::size_t n = names.size();
    if (n == 0) fail(errc::not_a_group, "empty element set");
    if (table.size() != n) fail(errc::not_a_group, "table row count != element count");
    for (const auto& row : table) {
        if (row.size() != n) fail(errc::not_a_group, "table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                fail(errc::not_a_group, "table entry out of range");
    }

    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = table[e][i] == static_cast<int>(i) && table[i][e] == static_cast<int>(i);
        if (ok) {
            identity_ = static_cast<int>(e);
            break;
        }
    }
    if (identity_ < 0) fail(errc::not_a_group, "no identity element");

    inverse_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] == identity_ && table[j][i] == identity_) {
                inverse_[i] = static_cast<int>(j);
                break;
            }
        if (inverse_[i] < 0) fail(errc::not_a_group, "element '" + names[i] + "' has no inverse");
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    fail(errc::not_a_group, "multiplication table is not associative");
}

bool Group::is_subgroup(const std::vector<int>& subset) const {
    std::vector<bool> in(order(), false);
    for (int s : subset) {
        if (s < 0 || static_cast<std::size_t>(s) >= order()) return false;
        in[s] = true;
    }
    if (!in[identity_]) return false;
    for (int a : subset) {
        if (!in[inverse_[a]]) return false;
        for (int b : subset)
            if (!in[table[a][b]]) return false;
    }
    return true;
}

bool Group::is_normal(const std::vector<int>& subset) const {
    if (!is_subgroup(subset)) return false;
    std::vector<bool> in(order(), false);
    for (int s : subset) in[s] = true;
    for (std::size_t g = 0; g < order(); ++g)
        for (int s : subset)
            if (!in[table[table[g][s]][inverse_[g]]]) return false;
    return true;
}

Group::Quotient Group::quotient(const std::vector<int>& normal_subgroup) const {
    if (!is_subgroup(normal_subgroup)) fail(errc::not_subgroup, "subset is not a subgroup");
    if (!is_normal(normal_subgroup)) fail(errc::not_normal, "subgroup is not normal");

    std::vector<int> coset_of(order(), -1);
    std::vector<int> reps;
    for (std::size_t g = 0; g < order(); ++g) {
        if (coset_of[g] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(g));
        for (int s : normal_subgroup) coset_of[table[g][s]] = id;
    }

    std::size_t q = reps.size();
    std::vector<std::string> qnames(q);
    for (std::size_t i = 0; i < q; ++i) qnames[i] = names[reps[i]] + "N";
    std::vector<std::vector<int>> qtable(q, std::vector<int>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) qtable[i][j] = coset_of[table[reps[i]][reps[j]]];

    return Quotient{Group(std::move(qnames), std::move(qtable)), std::move(coset_of)};
}

std::vector<int> Group::elements_by_name(const std::vector<std::string>& query) const {
    std::vector<int> out;
    for (const auto& q : query) {
        auto it = std::find(names.begin(), names.end(), q);
        if (it == names.end()) fail(errc::bad_input, "unknown group element '" + q + "'");
        out.push_back(static_cast<int>(it - names.begin()));
    }
    return out;
}

namespace {

// Group of permutation arrays under composition (p*q)(x) = p(q(x)).
Group from_permutations(std::vector<std::vector<int>> perms, std::vector<std::string> names) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::size_t n = perms.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> comp(perms[i].size());
            for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = perms[i][perms[j][x]];
            auto it = index.find(comp);
            if (it == index.end()) fail(errc::not_a_group, "permutation set not closed");
            table[i][j] = it->second;
        }
    return Group(std::move(names), std::move(table));
}

std::string cycle_name(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        s += "(";
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            s += std::to_string(j + 1);
            j = static_cast<std::size_t>(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

}  // namespace

Group cyclic_group(int n) {
    if (n < 1) fail(errc::bad_input, "cyclic_group order must be positive");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a" + std::to_string(i)));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return Group(std::move(names), std::move(table));
}

Group symmetric3() {
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> names;
    for (const auto& p : perms) names.push_back(cycle_name(p));
    return from_permutations(std::move(perms), std::move(names));
}

Group dihedral_group(int n) {
    if (n < 1) fail(errc::bad_input, "dihedral_group parameter must be positive");
    // element (k, s): x -> (-1)^s x + k mod n
    auto idx = [n](int k, int s) { return s * n + ((k % n) + n) % n; };
    std::vector<std::string> names;
    for (int s = 0; s < 2; ++s)
        for (int k = 0; k < n; ++k) {
            std::string base = s ? "s" : "";
            if (k == 0)
                names.push_back(s ? "s" : "e");
            else
                names.push_back(base + "r" + std::to_string(k));
        }
    int order = 2 * n;
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int s1 = 0; s1 < 2; ++s1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int k2 = 0; k2 < n; ++k2) {
                    int s = (s1 + s2) % 2;
                    int k = (s1 ? -k2 : k2) + k1;
                    table[idx(k1, s1)][idx(k2, s2)] = idx(k, s);
                }
    return Group(std::move(names), std::move(table));
}

Group quaternion8() {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto enc = [](int unit, int sign) { return unit == 0 ? (sign > 0 ? 0 : 1) : 2 * unit + (sign > 0 ? 0 : 1); };
    auto unit_of = [](int x) { return x < 2 ? 0 : x / 2; };
    auto sign_of = [](int x) { return x % 2 == 0 ? 1 : -1; };
    // unit products: u1*u2 = (sign, unit), table over {1,i,j,k}
    static const int uprod[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = unit_of(a), ub = unit_of(b);
            int sign = sign_of(a) * sign_of(b) * uprod[ua][ub][0];
            table[a][b] = enc(uprod[ua][ub][1], sign);
        }
    return Group(std::move(names), std::move(table));
}

Group alternating4() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p = {0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> names;
    for (const auto& q : perms) names.push_back(cycle_name(q));
    return from_permutations(std::move(perms), std::move(names));
}

Group product_group(const Group& a, const Group& b) {
    std::size_t n = a.order(), m = b.order();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
    std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < m; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < m; ++j2)
                    table[i1 * m + j1][i2 * m + j2] =
                        a.mul(static_cast<int>(i1), static_cast<int>(i2)) * static_cast<int>(m) +
                        b.mul(static_cast<int>(j1), static_cast<int>(j2));
    return Group(std::move(names), std::move(table));
}

}  // namespace adjalg
