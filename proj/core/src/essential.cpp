#include "rouquier/essential.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rouquier {

std::string hyperplane_label(const Monomial& normal, const VarIndex& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < normal.exps.size(); ++j) {
        const auto a = normal.exps[j];
        if (a == 0) continue;
        if (a < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        const auto mag = a < 0 ? -a : a;
        if (mag != 1) os << mag;
        os << vars.slot_label(j);
        first = false;
    }
    os << "=0";
    return os.str();
}

Hyperplane make_hyperplane(const Monomial& normal, const VarIndex& vars) {
    if (normal.size() != vars.total()) {
        throw std::invalid_argument("hyperplane normal has the wrong dimension");
    }
    const auto g = content(normal);
    if (g == 0) throw std::invalid_argument("hyperplane normal is zero");
    Monomial primitive = normal;
    for (auto& e : primitive.exps) e /= g;
    Monomial oriented = canonical_monomial(primitive).monomial;
    std::string label = hyperplane_label(oriented, vars);
    return {std::move(oriented), std::move(label)};
}

std::vector<EssentialMonomial> essential_monomials(std::span<const SchurModel> models) {
    std::vector<EssentialMonomial> out;
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        const auto& model = models[mi];
        for (std::size_t fi = 0; fi < model.factors.size(); ++fi) {
            const auto& f = model.factors[fi];
            const CycNum at_one = eval_at_one(f.psi);
            const bool zero = at_one.is_zero();
            std::set<unsigned long> primes;
            if (!zero) {
                primes = norm_primes(at_one);
                if (primes.empty()) continue;
            }
            Monomial canon = canonical_monomial(f.monomial).monomial;
            auto it = std::find_if(out.begin(), out.end(),
                                   [&](const EssentialMonomial& e) { return e.monomial == canon; });
            if (it == out.end()) {
                out.push_back({std::move(canon), {}, false, {}});
                it = std::prev(out.end());
            }
            it->primes.insert(primes.begin(), primes.end());
            it->every_prime = it->every_prime || zero;
            it->witnesses.push_back({mi, fi});
        }
    }
    return out;
}

std::vector<Hyperplane> essential_hyperplanes(std::span<const SchurModel> models,
                                              const VarIndex& vars) {
    std::vector<Hyperplane> out;
    for (const auto& e : essential_monomials(models)) {
        Hyperplane h = make_hyperplane(e.monomial, vars);
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
    return out;
}

std::vector<Hyperplane> hyperplanes_containing(const Specialization& s,
                                               std::span<const Hyperplane> hs) {
    if (s.is_twisted()) throw std::invalid_argument("hyperplanes_containing: twisted specialization");
    std::vector<Hyperplane> out;
    for (const auto& h : hs) {
        if (dot(h.normal.exps, s.nvec) == 0) out.push_back(h);
    }
    return out;
}

}  // namespace rouquier
