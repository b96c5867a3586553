#pragma once

// The factored generic Schur element
//   s_chi(v) = xi_chi * N_chi * prod_i Psi_i(M_i)^{n_i}
// over the variables v_{C,j}, 0 <= j < e_C, one group per hyperplane orbit C.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rouquier/cyclotomic.hpp"

namespace rouquier {

struct Orbit {
    std::string name;
    std::size_t order;  // e_C

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// Flat ordering of the variable slots (C, j): orbit by orbit, j ascending.
class VarIndex {
public:
    VarIndex() = default;
    explicit VarIndex(std::vector<Orbit> orbits);

    const std::vector<Orbit>& orbits() const { return orbits_; }
    std::size_t total() const { return total_; }
    std::size_t offset(std::size_t orbit) const { return offsets_.at(orbit); }
    std::size_t slot(std::size_t orbit, std::size_t j) const;

    /// "t_1" for a single orbit, "t_{x,1}" when there are several.
    std::string slot_label(std::size_t slot, std::string_view letter = "t") const;

    friend bool operator==(const VarIndex& a, const VarIndex& b) { return a.orbits_ == b.orbits_; }

private:
    std::vector<Orbit> orbits_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

/// Exponent vector of a monomial in the v_{C,j}, in flat slot order.
struct Monomial {
    std::vector<std::int64_t> exps;

    std::size_t size() const { return exps.size(); }
    bool is_zero() const;
    Monomial operator-() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// gcd of the absolute values of the entries (0 for the zero vector).
std::int64_t content(const Monomial& m);

struct CanonicalMonomial {
    Monomial monomial;
    int sign;  // +1 if unchanged, -1 if negated
};

/// Orients m so that its first nonzero entry is positive. Throws on zero.
CanonicalMonomial canonical_monomial(const Monomial& m);

struct SchurFactor {
    CycPoly psi;
    Monomial monomial;
    std::int64_t mult = 1;

    friend bool operator==(const SchurFactor&, const SchurFactor&) = default;
};

struct SchurModel {
    std::string character;
    CycNum coefficient{1L};
    Monomial leading;
    std::vector<SchurFactor> factors;

    friend bool operator==(const SchurModel&, const SchurModel&) = default;
};

enum class ModelRule {
    factor_gcd,
    factor_orbit_sum,
    leading_orbit_sum,
    multiplicity,
    zero_coefficient,
};

std::string_view rule_name(ModelRule rule);

struct ModelViolation {
    ModelRule rule;
    std::optional<std::size_t> factor;  // index into SchurModel::factors
    std::string message;
};

/// All violated invariants of the generic Schur element form; empty when valid.
/// Throws std::invalid_argument if a vector does not have vars.total() entries.
std::vector<ModelViolation> validate_model(const SchurModel& model, const VarIndex& vars);

}  // namespace rouquier
