#include "tropvol/scan.hpp"

#include <algorithm>
#include <numeric>

namespace tropvol::detail {

std::vector<std::uint8_t> all_permutations(std::size_t d) {
    std::vector<std::uint8_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> table;
    table.reserve(static_cast<std::size_t>(permutation_count(d)) * d);
    do {
        table.insert(table.end(), perm.begin(), perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table;
}

}  // namespace tropvol::detail
