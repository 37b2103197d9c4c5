#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adjalg/error.hpp"

namespace adjalg {

struct GroupQuotient;

// A finite group as a Cayley table. The constructor verifies the group
// axioms exhaustively (desk scale, |G| <= 24 or so).
struct Group {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;  // table[i][j] = index of g_i * g_j

    Group(std::vector<std::string> names, std::vector<std::vector<int>> table);

    std::size_t order() const { return names.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const { return inverse_[a]; }

    bool is_subgroup(const std::vector<int>& subset) const;
    bool is_normal(const std::vector<int>& subset) const;

    // Coset decomposition by a normal subgroup: returns the quotient group
    // and, per element, the index of its coset.
    using Quotient = GroupQuotient;
    Quotient quotient(const std::vector<int>& normal_subgroup) const;

    // Looks up element indices by name; throws BadInput on unknown names.
    std::vector<int> elements_by_name(const std::vector<std::string>& names) const;

private:
    int identity_ = -1;
    std::vector<int> inverse_;
};

struct GroupQuotient {
    Group group;
    std::vector<int> coset_of;
};

Group cyclic_group(int n);
Group symmetric3();           // S3, elements named by cycle notation
Group dihedral_group(int n);  // order 2n
Group quaternion8();
Group alternating4();
Group product_group(const Group& a, const Group& b);

}  // namespace adjalg
