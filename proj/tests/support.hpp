#pragma once

// Shared fixtures, generators and brute-force oracles for the test programs.

#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rouquier/dataset.hpp"
#include "rouquier/essential.hpp"
#include "rouquier/partition.hpp"
#include "rouquier/schur_model.hpp"
#include "rouquier/specialization.hpp"

namespace testing_support {

using namespace rouquier;
using Rng = std::mt19937_64;

inline std::filesystem::path data_file(const std::string& name) {
    return std::filesystem::path(ROUQUIER_DATA_DIR) / name;
}

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline CycNum zeta3(std::int64_t k) { return CycNum::root_of_unity(3, k); }

/// q^2 + zeta_3^2 and q^2 + zeta_3.
inline CycPoly phi12_prime() { return CycPoly::explicit_poly({zeta3(2), CycNum(0L), CycNum(1L)}); }
inline CycPoly phi12_second() { return CycPoly::explicit_poly({zeta3(1), CycNum(0L), CycNum(1L)}); }

/// The degree-3 character of G4, written out independently of the fixture file.
inline SchurModel g4_theta_model() {
    SchurModel m;
    m.character = "theta";
    m.leading = Monomial{{0, 0, 0}};
    for (const auto& exps : {std::vector<std::int64_t>{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}) {
        for (const auto& psi : {CycPoly::named(4), phi12_prime(), phi12_second()}) {
            m.factors.push_back({psi, Monomial{exps}, 1});
        }
    }
    return m;
}

inline VarIndex g4_vars() { return VarIndex({{"C", 3}}); }

inline std::vector<Hyperplane> g4_six_hyperplanes() {
    const VarIndex vars = g4_vars();
    std::vector<Hyperplane> hs;
    for (const auto& n : {std::vector<std::int64_t>{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {2, -1, -1},
                          {-1, 2, -1}, {-1, -1, 2}}) {
        hs.push_back(make_hyperplane(Monomial{n}, vars));
    }
    return hs;
}

inline std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

/// A vector whose entries sum to zero over each orbit.
inline Monomial random_balanced(Rng& rng, const VarIndex& vars, std::int64_t bound) {
    Monomial m{std::vector<std::int64_t>(vars.total(), 0)};
    for (std::size_t o = 0; o < vars.orbits().size(); ++o) {
        const std::size_t e = vars.orbits()[o].order;
        std::int64_t sum = 0;
        for (std::size_t j = 0; j + 1 < e; ++j) {
            const auto x = uniform(rng, -bound, bound);
            m.exps[vars.slot(o, j)] = x;
            sum += x;
        }
        m.exps[vars.slot(o, e - 1)] = -sum;
    }
    return m;
}

/// A nonzero balanced vector with content 1.
inline Monomial random_factor_monomial(Rng& rng, const VarIndex& vars, std::int64_t bound = 2) {
    for (;;) {
        Monomial m = random_balanced(rng, vars, bound);
        const auto g = gcd_all(m.exps);
        if (g == 0) continue;
        for (auto& x : m.exps) x /= g;
        return m;
    }
}

inline CycPoly random_psi(Rng& rng) {
    static const std::uint64_t names[] = {1, 2, 3, 4, 5, 6, 8, 10, 12};
    const auto k = uniform(rng, 0, 10);
    if (k == 9) return phi12_prime();
    if (k == 10) return phi12_second();
    return CycPoly::named(names[k]);
}

inline SchurModel random_model(Rng& rng, const VarIndex& vars, std::size_t max_factors = 5,
                               const std::string& name = "chi") {
    SchurModel m;
    m.character = name;
    const auto c = uniform(rng, 1, 3);
    m.coefficient = uniform(rng, 0, 1) ? CycNum(static_cast<long>(c)) : CycNum(static_cast<long>(c)) * zeta3(1);
    m.leading = random_balanced(rng, vars, 3);
    const auto nf = uniform(rng, 0, static_cast<std::int64_t>(max_factors));
    for (std::int64_t i = 0; i < nf; ++i) {
        m.factors.push_back({random_psi(rng), random_factor_monomial(rng, vars), uniform(rng, 1, 3)});
    }
    return m;
}

inline Specialization random_spec(Rng& rng, std::size_t total, std::int64_t bound = 5) {
    std::vector<std::int64_t> n(total);
    for (auto& x : n) x = uniform(rng, -bound, bound);
    return Specialization(std::move(n));
}

/// n = h_p r - (h.r) e_p lies on h for any r, p being the first nonzero slot of h.
inline Specialization random_point_on(Rng& rng, const Monomial& normal, std::int64_t bound = 6) {
    std::size_t p = 0;
    while (normal.exps[p] == 0) ++p;
    std::vector<std::int64_t> r(normal.size());
    for (auto& x : r) x = uniform(rng, -bound, bound);
    const std::int64_t hr = std::inner_product(normal.exps.begin(), normal.exps.end(), r.begin(), std::int64_t{0});
    std::vector<std::int64_t> n(normal.size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = normal.exps[p] * r[i];
    n[p] -= hr;
    return Specialization(std::move(n));
}

// Equal modulo h by construction: shift the leading monomial by a multiple of
// h, add factors on h itself, swap Phi's of equal degree, and move factor
// monomials along h.
inline SchurModel equivalent_on(Rng& rng, const SchurModel& a, const Hyperplane& h, const VarIndex& vars) {
    SchurModel b = a;
    const auto k = uniform(rng, -2, 2);
    for (std::size_t i = 0; i < vars.total(); ++i) b.leading.exps[i] += k * h.normal.exps[i];
    for (auto& f : b.factors) {
        if (f.psi.is_named() && (f.psi.index() == 3 || f.psi.index() == 4 || f.psi.index() == 6) && uniform(rng, 0, 1)) {
            static const std::uint64_t deg2[] = {3, 4, 6};
            f.psi = phi_n(deg2[uniform(rng, 0, 2)]);
        }
        const auto shift = uniform(rng, -1, 1);
        Monomial moved = f.monomial;
        for (std::size_t i = 0; i < vars.total(); ++i) moved.exps[i] += shift * h.normal.exps[i];
        if (!moved.is_zero() && content(moved) == 1) f.monomial = moved;
    }
    const auto extra = uniform(rng, 0, 2);
    for (std::int64_t i = 0; i < extra; ++i) b.factors.push_back({random_psi(rng), h.normal, uniform(rng, 1, 2)});
    return b;
}

inline Partition random_partition(Rng& rng, std::size_t n) {
    const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n)));
    std::vector<std::vector<std::size_t>> blocks(k);
    for (std::size_t i = 0; i < n; ++i) blocks[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(k) - 1))].push_back(i);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    return Partition(n, blocks);
}

// Transitive closure of the union of the relations, by repeated relaxation.
inline Partition closure_oracle(const std::vector<Partition>& ps) {
    const std::size_t n = ps.front().universe();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (const auto& p : ps)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p.same_block(i, j)) rel[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = true;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        blocks.emplace_back();
        for (std::size_t j = 0; j < n; ++j)
            if (rel[i][j]) {
                blocks.back().push_back(j);
                seen[j] = true;
            }
    }
    return Partition(n, blocks);
}

}  // namespace testing_support
