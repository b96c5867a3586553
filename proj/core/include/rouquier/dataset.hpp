#pragma once

// Group datasets: variables, characters, Schur models, block data and
// parameter-substitution rows, stored as JSON text.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rouquier/partition.hpp"
#include "rouquier/schur_model.hpp"

namespace rouquier {

struct FieldInfo {
    std::uint64_t conductor = 1;  // K is contained in Q(zeta_conductor)
    std::uint64_t mu_order = 2;   // |mu(K)|

    friend bool operator==(const FieldInfo&, const FieldInfo&) = default;
};

struct Character {
    std::string id;
    std::string name;
    std::int64_t degree = 1;

    friend bool operator==(const Character&, const Character&) = default;
};

/// Image of one parent slot: root * (child variable), or the constant root.
struct Substitution {
    CycNum root{1L};
    std::optional<std::size_t> child_slot;

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct Restriction {
    std::string parent;  // character id in this dataset
    std::string child;   // character id in the target dataset

    friend bool operator==(const Restriction&, const Restriction&) = default;
};

/// One row of a parameter-specialization table: substituting the parent
/// parameters gives the Hecke algebra of `target`, an index-`index` subgroup.
struct AppendixRow {
    std::string target;
    std::uint64_t index = 1;
    std::vector<Substitution> substitutions;  // one per parent slot
    std::vector<Restriction> restrictions;    // empty: pair characters by equal id

    friend bool operator==(const AppendixRow&, const AppendixRow&) = default;
};

struct GroupDataset {
    std::string group;
    FieldInfo field;
    VarIndex vars;
    std::vector<Character> characters;
    std::vector<SchurModel> models;  // at most one per character; may be partial
    BlockData blocks;
    std::vector<AppendixRow> appendix_rows;

    /// Lookup by id, then by display name.
    std::optional<std::size_t> character_index(std::string_view id_or_name) const;
    /// nullptr when the character has no model.
    const SchurModel* model_for(std::size_t character) const;
    /// Throws IncompleteDataError when the character has no model.
    const SchurModel& require_model(std::size_t character) const;
    /// Stored block hyperplanes followed by any further essential hyperplanes of the models.
    std::vector<Hyperplane> hyperplanes() const;
    bool is_partial() const { return models.size() < characters.size(); }

    friend bool operator==(const GroupDataset&, const GroupDataset&) = default;
};

class DatasetSyntaxError : public std::runtime_error {
public:
    DatasetSyntaxError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A well-formed document that violates a schema rule or a model invariant.
class DatasetSemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strict parse and full validation; unknown keys are rejected.
GroupDataset parse_dataset(std::string_view text);
GroupDataset load_dataset(const std::filesystem::path& path);
std::string serialize_dataset(const GroupDataset& ds);

}  // namespace rouquier
