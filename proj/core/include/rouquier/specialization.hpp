#pragma once

// Cyclotomic specializations v_{C,j} -> zeta_{C,j} * y^{n_{C,j}} of a Schur
// model: the closed-form valuation/degree and the full expansion oracle.

#include <cstdint>
#include <span>
#include <vector>

#include "rouquier/laurent.hpp"
#include "rouquier/schur_model.hpp"

namespace rouquier {

/// Exponent vector n_{C,j}, optionally with per-slot root-of-unity twists.
///
/// The Galois-invariance condition on Gamma_C is not checked: any integer
/// vector is accepted.
struct Specialization {
    std::vector<std::int64_t> nvec;
    std::vector<CycNum> twists;  // empty, or one root of unity per slot

    Specialization() = default;
    explicit Specialization(std::vector<std::int64_t> n) : nvec(std::move(n)) {}
    Specialization(std::vector<std::int64_t> n, std::vector<CycNum> t)
        : nvec(std::move(n)), twists(std::move(t)) {}

    std::size_t size() const { return nvec.size(); }
    bool is_twisted() const;
    /// Throws std::invalid_argument on a length mismatch or a twist that is
    /// not a root of unity.
    void validate(std::size_t total) const;
    Specialization negated() const;
};

struct AAResult {
    std::int64_t a;  // valuation
    std::int64_t A;  // degree

    friend bool operator==(const AAResult&, const AAResult&) = default;
};

using ExpandedSchur = LaurentPoly;

inline std::int64_t pos_part(std::int64_t n) { return n > 0 ? n : 0; }
inline std::int64_t neg_part(std::int64_t n) { return n < 0 ? n : 0; }

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// sum_j a_j n_j: the exponent of y in phi(M).
std::int64_t monomial_exponent(const Monomial& m, const Specialization& s);

/// a = b.n + sum_i n_i deg(Psi_i) (M_i.n)^-,  A = b.n + sum_i n_i deg(Psi_i) (M_i.n)^+.
/// Rejects twisted specializations.
AAResult compute_aA(const SchurModel& model, const Specialization& s);

/// xi * phi(N) * prod_i Psi_i(zeta_i y^{m_i})^{n_i}, exactly.
/// Throws std::domain_error when the result is identically zero.
ExpandedSchur expand(const SchurModel& model, const Specialization& s);

/// (lowest exponent, highest exponent); throws on the zero polynomial.
AAResult val_deg(const ExpandedSchur& e);

/// parent == index * child.
bool check_index_relation(const ExpandedSchur& parent, const ExpandedSchur& child,
                          std::uint64_t index);

/// Valuation and degree in v = v_0 v_1^{-1} of a model over a single orbit
/// of order 2, where every factor monomial is v or v^{-1}.
struct OneVariableValDeg {
    std::int64_t val;
    std::int64_t deg;

    friend bool operator==(const OneVariableValDeg&, const OneVariableValDeg&) = default;
};

/// Throws std::invalid_argument unless the model has exactly two slots and
/// every factor monomial is +-(1,-1).
OneVariableValDeg one_variable_val_deg(const SchurModel& model);

/// a and A under v -> y^n from the generic valuation/degree in v.
AAResult aA_from_one_variable(const OneVariableValDeg& vd, std::int64_t n);

}  // namespace rouquier
