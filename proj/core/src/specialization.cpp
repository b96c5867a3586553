#include "rouquier/specialization.hpp"

#include <stdexcept>
#include <string>

namespace rouquier {

bool Specialization::is_twisted() const {
    for (const auto& t : twists) {
        if (!t.is_one()) return true;
    }
    return false;
}

void Specialization::validate(std::size_t total) const {
    if (nvec.size() != total) {
        throw std::invalid_argument("specialization has " + std::to_string(nvec.size()) +
                                    " entries, expected " + std::to_string(total));
    }
    if (!twists.empty() && twists.size() != total) {
        throw std::invalid_argument("twist vector length does not match the specialization");
    }
    for (const auto& t : twists) {
        if (!t.is_root_of_unity()) {
            throw std::invalid_argument("twist " + t.to_string() + " is not a root of unity");
        }
    }
}

Specialization Specialization::negated() const {
    Specialization r = *this;
    for (auto& n : r.nvec) n = -n;
    return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

std::int64_t monomial_exponent(const Monomial& m, const Specialization& s) {
    return dot(m.exps, s.nvec);
}

AAResult compute_aA(const SchurModel& model, const Specialization& s) {
    if (s.is_twisted()) throw std::invalid_argument("compute_aA: twisted specializations are not allowed");
    const std::int64_t lead = monomial_exponent(model.leading, s);
    AAResult r{lead, lead};
    for (const auto& f : model.factors) {
        const auto m = monomial_exponent(f.monomial, s);
        const auto weight = f.mult * static_cast<std::int64_t>(f.psi.degree());
        r.a += weight * neg_part(m);
        r.A += weight * pos_part(m);
    }
    return r;
}

namespace {

// prod_j twist_j^{exps_j}
CycNum twist_value(const Monomial& m, const Specialization& s) {
    CycNum z(1L);
    if (s.twists.empty()) return z;
    for (std::size_t j = 0; j < m.exps.size(); ++j) {
        if (m.exps[j] != 0 && !s.twists[j].is_one()) z *= s.twists[j].pow(m.exps[j]);
    }
    return z;
}

}  // namespace

ExpandedSchur expand(const SchurModel& model, const Specialization& s) {
    s.validate(model.leading.size());
    ExpandedSchur result = ExpandedSchur::monomial(
        model.coefficient * twist_value(model.leading, s), monomial_exponent(model.leading, s));
    for (const auto& f : model.factors) {
        const auto m = monomial_exponent(f.monomial, s);
        const CycNum zeta = twist_value(f.monomial, s);
        const auto coeffs = f.psi.coefficients();
        ExpandedSchur factor;
        CycNum zeta_k(1L);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            factor.add_term(m * static_cast<std::int64_t>(k), coeffs[k] * zeta_k);
            zeta_k *= zeta;
        }
        result *= factor.pow(static_cast<std::uint64_t>(f.mult));
    }
    if (result.is_zero()) {
        throw std::domain_error("expand: specialization of " + model.character +
                                " vanishes identically");
    }
    return result;
}

AAResult val_deg(const ExpandedSchur& e) {
    if (e.is_zero()) throw std::domain_error("val_deg: empty polynomial");
    return {e.valuation(), e.degree()};
}

bool check_index_relation(const ExpandedSchur& parent, const ExpandedSchur& child,
                          std::uint64_t index) {
    return parent == child * CycNum(static_cast<long>(index));
}

OneVariableValDeg one_variable_val_deg(const SchurModel& model) {
    if (model.leading.size() != 2) {
        throw std::invalid_argument("one_variable_val_deg: model must have exactly two slots");
    }
    const std::int64_t b = model.leading.exps[0];
    OneVariableValDeg r{b, b};
    for (const auto& f : model.factors) {
        const auto& e = f.monomial.exps;
        const auto weight = f.mult * static_cast<std::int64_t>(f.psi.degree());
        if (e[0] == 1 && e[1] == -1) {
            r.deg += weight;
        } else if (e[0] == -1 && e[1] == 1) {
            r.val -= weight;
        } else {
            throw std::invalid_argument("one_variable_val_deg: factor monomial is not v^{+-1}");
        }
    }
    return r;
}

AAResult aA_from_one_variable(const OneVariableValDeg& vd, std::int64_t n) {
    if (n >= 0) return {n * vd.val, n * vd.deg};
    return {n * vd.deg, n * vd.val};
}

}  // namespace rouquier
