#pragma once

// Essential monomials of a family of Schur models and the hyperplanes
// sum_j a_j t_j = 0 they define.

#include <set>
#include <span>
#include <string>
#include <vector>

#include "rouquier/schur_model.hpp"
#include "rouquier/specialization.hpp"

namespace rouquier {

/// Primitive, canonically oriented integer normal vector of a hyperplane in
/// the t_{C,j} coordinates.
struct Hyperplane {
    Monomial normal;
    std::string label;  // e.g. "2t_0-t_1-t_2=0"

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.normal == b.normal; }
};

/// Divides by the content and orients; throws on the zero vector.
Hyperplane make_hyperplane(const Monomial& normal, const VarIndex& vars);

std::string hyperplane_label(const Monomial& normal, const VarIndex& vars);

struct Witness {
    std::size_t model;   // index into the model list
    std::size_t factor;  // index into SchurModel::factors
};

/// A monomial M that is p-essential for some model, where p ranges over the
/// rational primes below the prime ideals containing Psi(1).
struct EssentialMonomial {
    Monomial monomial;  // canonical, content 1
    std::set<unsigned long> primes;
    bool every_prime = false;  // some witness has Psi(1) = 0
    std::vector<Witness> witnesses;
};

/// Scans every factor of every model; factors with a unit Psi(1) are ignored.
/// Entries appear in order of first occurrence.
std::vector<EssentialMonomial> essential_monomials(std::span<const SchurModel> models);

/// Deduplicated canonical hyperplanes of the essential monomials.
std::vector<Hyperplane> essential_hyperplanes(std::span<const SchurModel> models,
                                              const VarIndex& vars);

/// The hyperplanes whose normal is orthogonal to s.nvec. Rejects twists.
std::vector<Hyperplane> hyperplanes_containing(const Specialization& s,
                                               std::span<const Hyperplane> hs);

}  // namespace rouquier
