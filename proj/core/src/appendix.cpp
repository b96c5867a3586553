#include "rouquier/appendix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace rouquier {

Specialization parent_specialization(const AppendixRow& row, const Specialization& child) {
    Specialization s;
    s.nvec.reserve(row.substitutions.size());
    s.twists.reserve(row.substitutions.size());
    for (const auto& sub : row.substitutions) {
        if (sub.child_slot) {
            if (*sub.child_slot >= child.size()) {
                throw std::invalid_argument("substitution refers to child slot " +
                                            std::to_string(*sub.child_slot) + " beyond the specialization");
            }
            s.nvec.push_back(child.nvec[*sub.child_slot]);
        } else {
            s.nvec.push_back(0);
        }
        s.twists.push_back(sub.root);
    }
    return s;
}

std::int64_t exponent_bound(const SchurModel& model) {
    std::int64_t bound = 0;
    for (auto e : model.leading.exps) bound += std::abs(e);
    for (const auto& f : model.factors) {
        std::int64_t sum = 0;
        for (auto e : f.monomial.exps) sum += std::abs(e);
        bound += f.mult * static_cast<std::int64_t>(f.psi.degree()) * sum;
    }
    return bound;
}

Specialization separating_specialization(std::size_t slots, std::int64_t bound) {
    const std::int64_t base = 2 * std::max<std::int64_t>(bound, 1) + 1;
    constexpr std::int64_t limit = std::int64_t{1} << 48;
    Specialization s;
    std::int64_t power = 1;
    for (std::size_t k = 0; k < slots; ++k) {
        if (k > 0) {
            if (power > limit / base) throw std::overflow_error("separating specialization exceeds 2^48");
            power *= base;
        }
        s.nvec.push_back(power);
    }
    return s;
}

bool IndexReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const IndexCheck& c) { return c.holds; });
}

IndexReport check_index(const GroupDataset& parent, const GroupDataset& child, std::size_t row_index,
                        const std::optional<Specialization>& child_spec) {
    if (row_index >= parent.appendix_rows.size()) {
        throw std::out_of_range("row " + std::to_string(row_index) + " does not exist; the dataset has " +
                                std::to_string(parent.appendix_rows.size()) + " rows");
    }
    const AppendixRow& row = parent.appendix_rows[row_index];
    if (row.target != child.group) {
        throw std::invalid_argument("row targets " + row.target + " but the child dataset is " + child.group);
    }
    if (row.substitutions.size() != parent.vars.total()) {
        throw std::invalid_argument("row has " + std::to_string(row.substitutions.size()) +
                                    " substitutions for " + std::to_string(parent.vars.total()) + " parent slots");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (row.restrictions.empty()) {
        for (std::size_t i = 0; i < parent.characters.size(); ++i) {
            if (auto j = child.character_index(parent.characters[i].id)) pairs.emplace_back(i, *j);
        }
    } else {
        for (const auto& r : row.restrictions) {
            auto i = parent.character_index(r.parent);
            auto j = child.character_index(r.child);
            if (!i || !j) throw std::invalid_argument("unknown character in restriction " + r.parent + " -> " + r.child);
            pairs.emplace_back(*i, *j);
        }
    }

    Specialization cs;
    if (child_spec) {
        cs = *child_spec;
    } else {
        std::int64_t bound = 0;
        for (auto [i, j] : pairs) {
            if (const SchurModel* pm = parent.model_for(i)) bound = std::max(bound, exponent_bound(*pm));
            if (const SchurModel* cm = child.model_for(j)) bound = std::max(bound, exponent_bound(*cm));
        }
        cs = separating_specialization(child.vars.total(), bound);
    }
    cs.validate(child.vars.total());
    const Specialization ps = parent_specialization(row, cs);

    IndexReport report;
    for (auto [i, j] : pairs) {
        const SchurModel* pm = parent.model_for(i);
        const SchurModel* cm = child.model_for(j);
        if (pm == nullptr || cm == nullptr) continue;
        const bool holds = check_index_relation(expand(*pm, ps), expand(*cm, cs), row.index);
        report.checks.push_back({i, j, holds});
    }
    return report;
}

}  // namespace rouquier
