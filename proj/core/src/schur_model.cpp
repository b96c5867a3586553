#include "rouquier/schur_model.hpp"

#include <numeric>
#include <stdexcept>

namespace rouquier {

VarIndex::VarIndex(std::vector<Orbit> orbits) : orbits_(std::move(orbits)) {
    for (const auto& o : orbits_) {
        if (o.order == 0) throw std::invalid_argument("orbit " + o.name + " has order 0");
        offsets_.push_back(total_);
        total_ += o.order;
    }
}

std::size_t VarIndex::slot(std::size_t orbit, std::size_t j) const {
    if (j >= orbits_.at(orbit).order) throw std::out_of_range("VarIndex::slot: j out of range");
    return offsets_[orbit] + j;
}

std::string VarIndex::slot_label(std::size_t slot, std::string_view letter) const {
    if (slot >= total_) throw std::out_of_range("VarIndex::slot_label: slot out of range");
    std::size_t orbit = 0;
    while (orbit + 1 < orbits_.size() && offsets_[orbit + 1] <= slot) ++orbit;
    const std::size_t j = slot - offsets_[orbit];
    std::string label(letter);
    if (orbits_.size() == 1) return label + "_" + std::to_string(j);
    return label + "_{" + orbits_[orbit].name + "," + std::to_string(j) + "}";
}

bool Monomial::is_zero() const {
    for (auto e : exps) {
        if (e != 0) return false;
    }
    return true;
}

Monomial Monomial::operator-() const {
    Monomial r = *this;
    for (auto& e : r.exps) e = -e;
    return r;
}

std::int64_t content(const Monomial& m) {
    std::int64_t g = 0;
    for (auto e : m.exps) g = std::gcd(g, e < 0 ? -e : e);
    return g;
}

CanonicalMonomial canonical_monomial(const Monomial& m) {
    for (auto e : m.exps) {
        if (e > 0) return {m, 1};
        if (e < 0) return {-m, -1};
    }
    throw std::invalid_argument("canonical_monomial: zero exponent vector");
}

std::string_view rule_name(ModelRule rule) {
    switch (rule) {
        case ModelRule::factor_gcd: return "gcd violation";
        case ModelRule::factor_orbit_sum: return "orbit-sum violation";
        case ModelRule::leading_orbit_sum: return "leading orbit-sum violation";
        case ModelRule::multiplicity: return "multiplicity violation";
        case ModelRule::zero_coefficient: return "zero coefficient";
    }
    return "unknown";
}

namespace {

// Index of the first orbit whose exponents do not sum to zero.
std::optional<std::size_t> bad_orbit(const Monomial& m, const VarIndex& vars) {
    for (std::size_t o = 0; o < vars.orbits().size(); ++o) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < vars.orbits()[o].order; ++j) sum += m.exps[vars.slot(o, j)];
        if (sum != 0) return o;
    }
    return std::nullopt;
}

void check_dimension(const Monomial& m, const VarIndex& vars, std::string_view what) {
    if (m.size() != vars.total()) {
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(m.size()) +
                                    " entries, expected " + std::to_string(vars.total()));
    }
}

}  // namespace

std::vector<ModelViolation> validate_model(const SchurModel& model, const VarIndex& vars) {
    check_dimension(model.leading, vars, "leading monomial of " + model.character);
    for (std::size_t i = 0; i < model.factors.size(); ++i) {
        check_dimension(model.factors[i].monomial, vars,
                        "factor " + std::to_string(i) + " of " + model.character);
    }

    std::vector<ModelViolation> out;
    auto report = [&](ModelRule rule, std::optional<std::size_t> factor, std::string detail) {
        std::string msg = model.character;
        if (factor) msg += " factor " + std::to_string(*factor);
        msg += ": " + std::string(rule_name(rule)) + " (" + detail + ")";
        out.push_back({rule, factor, std::move(msg)});
    };

    if (model.coefficient.is_zero()) report(ModelRule::zero_coefficient, std::nullopt, "xi = 0");
    if (auto o = bad_orbit(model.leading, vars)) {
        report(ModelRule::leading_orbit_sum, std::nullopt, "orbit " + vars.orbits()[*o].name);
    }
    for (std::size_t i = 0; i < model.factors.size(); ++i) {
        const auto& f = model.factors[i];
        if (const auto g = content(f.monomial); g != 1) {
            report(ModelRule::factor_gcd, i, "gcd " + std::to_string(g));
        }
        if (auto o = bad_orbit(f.monomial, vars)) {
            report(ModelRule::factor_orbit_sum, i, "orbit " + vars.orbits()[*o].name);
        }
        if (f.mult < 1) report(ModelRule::multiplicity, i, "mult " + std::to_string(f.mult));
    }
    return out;
}

}  // namespace rouquier
