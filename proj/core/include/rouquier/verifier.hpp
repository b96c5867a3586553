#pragma once

// Checks that the valuation a and degree A of specialized Schur elements are
// constant on Rouquier blocks, by comparing generic valuations and degrees
// (linear forms in the t_{C,j}) under every good sign map.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rouquier/dataset.hpp"
#include "rouquier/specialization.hpp"

namespace rouquier {

/// sum_j coeffs[j] t_j with exact rational coefficients.
struct LinearForm {
    std::vector<Rational> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::size_t n) : coeffs(n) {}
    explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}
    static LinearForm from_monomial(const Monomial& m, const Rational& scale = 1);

    std::size_t size() const { return coeffs.size(); }
    bool is_zero() const;
    Rational evaluate(std::span<const std::int64_t> point) const;

    LinearForm& operator+=(const LinearForm& rhs);
    LinearForm& operator-=(const LinearForm& rhs);
    LinearForm operator-() const;
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& q, LinearForm f);

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    /// Lexicographic on coefficients; gives multisets a deterministic order.
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs < b.coeffs; }

    std::string to_string() const;
};

struct FactorDegree {
    LinearForm form;    // deg(Psi) * (sum_j a_j t_j)
    std::int64_t mult;  // c(f), summed over factors with the same form

    friend bool operator==(const FactorDegree&, const FactorDegree&) = default;
};

struct FactorDegreeSet {
    LinearForm constant;  // sum_j b_j t_j from the leading monomial
    std::vector<FactorDegree> degrees;
};

FactorDegreeSet factor_degrees(const SchurModel& model);

/// +1 if g = q f with q > 0, -1 if q < 0, 0 otherwise. Two zero forms give +1.
int is_multiple(const LinearForm& g, const LinearForm& f);

/// Eliminates the first nonzero coordinate of h's normal using sum_j h_j t_j = 0.
/// A null h leaves f unchanged.
LinearForm reduce_mod_hyperplane(const LinearForm& f, const Hyperplane* h);

using FormMultiset = std::map<LinearForm, std::int64_t>;

/// An element whose multiplicities differ between the two sides.
struct TaggedForm {
    LinearForm form;
    std::int64_t left;   // multiplicity in l1 (0 if absent)
    std::int64_t right;  // multiplicity in l2 (0 if absent)

    friend bool operator==(const TaggedForm&, const TaggedForm&) = default;
};

std::vector<TaggedForm> sym_diff_with_mult(const FormMultiset& l1, const FormMultiset& l2);

/// Factor degrees reduced modulo a hyperplane, zero forms dropped.
struct ReducedDegrees {
    LinearForm constant;
    FormMultiset forms;
};

ReducedDegrees reduce_degrees(const FactorDegreeSet& fd, const Hyperplane* h);

/// Representatives of the forms up to nonzero rational multiples.
struct FormClasses {
    std::vector<LinearForm> reps;
    std::vector<std::size_t> class_of;  // per input form
};

FormClasses classify(std::span<const LinearForm> forms);

/// One sign per class of FormClasses::reps.
using SignAssignment = std::vector<int>;

/// epsilon(f) = is_multiple(f, rep) * assignment[class]. Throws if f is in no class.
int sign_of(const LinearForm& f, const FormClasses& classes, const SignAssignment& signs);

/// constant + sum over forms with epsilon = -1 of c(f) f.
LinearForm generic_valuation(const ReducedDegrees& d, const FormClasses& classes,
                             const SignAssignment& signs);
/// constant + sum over forms with epsilon = +1 of c(f) f.
LinearForm generic_degree(const ReducedDegrees& d, const FormClasses& classes,
                          const SignAssignment& signs);

inline constexpr std::size_t max_sign_classes = 30;

/// True iff the generic valuations and degrees of the two characters agree,
/// on h (or everywhere when h is null), for every good sign map. Only forms
/// whose multiplicities differ enter the enumeration. Throws std::length_error
/// when more than max_sign_classes classes would have to be enumerated.
bool compare(const FactorDegreeSet& a, const FactorDegreeSet& b, const Hyperplane* h);

/// compare() without the symmetric-difference pruning: enumerates sign maps
/// over every form of both sides.
bool compare_unpruned(const FactorDegreeSet& a, const FactorDegreeSet& b, const Hyperplane* h);

/// True for singletons; otherwise compares the first member with each other member.
bool compare_block(const Hyperplane* h, std::span<const std::size_t> block, const GroupDataset& ds);

struct TheoremEntry {
    std::optional<Hyperplane> hyperplane;  // nullopt: no essential hyperplane
    std::vector<std::size_t> block;
    bool verdict;
};

struct TheoremReport {
    std::vector<TheoremEntry> entries;
    bool ok() const;
};

struct TheoremFilter {
    bool only_no_hyperplane = false;
    std::optional<Hyperplane> hyperplane;
    std::optional<std::size_t> block;  // position in the partition's block list
};

/// compare_block over every block of B^0 and of every stored B^H. Throws
/// IncompleteDataError if an essential hyperplane of the models has no stored
/// partition, or a multi-member block has a character without a model.
TheoremReport check_theorem(const GroupDataset& ds, const TheoremFilter& filter = {});

struct SumEntry {
    std::vector<std::size_t> block;
    std::vector<std::optional<AAResult>> values;  // nullopt: no model (singleton only)
    bool constant_sum;
};

struct SumReport {
    RouquierBlocks blocks;
    std::vector<SumEntry> entries;
    bool ok() const;
};

/// a + A per Rouquier block of s, which must be constant on each block.
SumReport check_aA_sum(const GroupDataset& ds, const Specialization& s);

}  // namespace rouquier
