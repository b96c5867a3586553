#pragma once

// Parameter-substitution rows: substituting the parent parameters as a row
// prescribes must give |W:W'| times the matching child Schur element.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rouquier/dataset.hpp"
#include "rouquier/specialization.hpp"

namespace rouquier {

/// Parent specialization obtained by composing the row's substitution with
/// the child specialization v'_k -> y^{child.nvec[k]}.
Specialization parent_specialization(const AppendixRow& row, const Specialization& child);

/// Bound on |exponent| of any single variable in the expanded model:
/// sum over slots of |b_j| plus sum over factors of mult * deg * sum_j |a_j|.
std::int64_t exponent_bound(const SchurModel& model);

/// v'_k -> y^{base^k} with base = 2 * bound + 1. Distinct Laurent monomials
/// whose exponents all lie in [-bound, bound] map to distinct powers of y, so
/// an identity between such polynomials holds iff it holds after this
/// specialization.
Specialization separating_specialization(std::size_t slots, std::int64_t bound);

struct IndexCheck {
    std::size_t parent_character;
    std::size_t child_character;
    bool holds;
};

struct IndexReport {
    std::vector<IndexCheck> checks;
    bool ok() const;
};

/// Checks expand(parent, composed spec) = index * expand(child, spec) for each
/// paired character with models on both sides. Without child_spec the
/// separating specialization for the largest exponent bound of the paired
/// models is used, which makes the check exact. Pairs come from the row's
/// restrictions, or from equal character ids. Throws std::invalid_argument if
/// the row does not target the child group or does not cover every parent
/// slot, and std::out_of_range for a bad row index.
IndexReport check_index(const GroupDataset& parent, const GroupDataset& child, std::size_t row,
                        const std::optional<Specialization>& child_spec = std::nullopt);

}  // namespace rouquier
