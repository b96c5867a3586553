#include "rouquier/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rouquier {

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::from_monomial(const Monomial& m, const Rational& scale) {
    LinearForm f(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) f.coeffs[i] = scale * Rational(static_cast<long>(m.exps[i]));
    return f;
}

bool LinearForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
}

Rational LinearForm::evaluate(std::span<const std::int64_t> point) const {
    if (point.size() != coeffs.size()) throw std::invalid_argument("LinearForm::evaluate: dimension mismatch");
    Rational sum;
    for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * Rational(static_cast<long>(point[i]));
    return sum;
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
    if (rhs.size() != size()) throw std::invalid_argument("LinearForm: dimension mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& rhs) {
    if (rhs.size() != size()) throw std::invalid_argument("LinearForm: dimension mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
    return *this;
}

LinearForm LinearForm::operator-() const {
    LinearForm r = *this;
    for (auto& q : r.coeffs) q = -q;
    return r;
}

LinearForm operator*(const Rational& q, LinearForm f) {
    for (auto& c : f.coeffs) c *= q;
    return f;
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& q = coeffs[i];
        if (q == 0) continue;
        if (q < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        const Rational mag = abs(q);
        if (mag != 1) os << mag.get_str() << '*';
        os << "t_" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Factor degrees and their manipulation

FactorDegreeSet factor_degrees(const SchurModel& model) {
    FactorDegreeSet out{LinearForm::from_monomial(model.leading), {}};
    for (const auto& f : model.factors) {
        LinearForm form = LinearForm::from_monomial(f.monomial, Rational(static_cast<long>(f.psi.degree())));
        auto it = std::find_if(out.degrees.begin(), out.degrees.end(),
                               [&](const FactorDegree& d) { return d.form == form; });
        if (it == out.degrees.end()) {
            out.degrees.push_back({std::move(form), f.mult});
        } else {
            it->mult += f.mult;
        }
    }
    return out;
}

int is_multiple(const LinearForm& g, const LinearForm& f) {
    if (g.size() != f.size()) throw std::invalid_argument("is_multiple: dimension mismatch");
    const bool gz = g.is_zero();
    const bool fz = f.is_zero();
    if (gz && fz) return 1;
    if (gz || fz) return 0;
    std::size_t pivot = 0;
    while (f.coeffs[pivot] == 0) ++pivot;
    const Rational q = g.coeffs[pivot] / f.coeffs[pivot];
    if (q == 0) return 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (g.coeffs[i] != q * f.coeffs[i]) return 0;
    }
    return q > 0 ? 1 : -1;
}

LinearForm reduce_mod_hyperplane(const LinearForm& f, const Hyperplane* h) {
    if (h == nullptr) return f;
    const auto& n = h->normal.exps;
    if (n.size() != f.size()) throw std::invalid_argument("reduce_mod_hyperplane: dimension mismatch");
    std::size_t pivot = 0;
    while (pivot < n.size() && n[pivot] == 0) ++pivot;
    if (pivot == n.size()) throw std::invalid_argument("reduce_mod_hyperplane: zero normal");
    if (f.coeffs[pivot] == 0) return f;
    const Rational ratio = f.coeffs[pivot] / Rational(static_cast<long>(n[pivot]));
    return f - LinearForm::from_monomial(h->normal, ratio);
}

std::vector<TaggedForm> sym_diff_with_mult(const FormMultiset& l1, const FormMultiset& l2) {
    std::vector<TaggedForm> out;
    auto a = l1.begin();
    auto b = l2.begin();
    while (a != l1.end() || b != l2.end()) {
        if (b == l2.end() || (a != l1.end() && a->first < b->first)) {
            out.push_back({a->first, a->second, 0});
            ++a;
        } else if (a == l1.end() || b->first < a->first) {
            out.push_back({b->first, 0, b->second});
            ++b;
        } else {
            if (a->second != b->second) out.push_back({a->first, a->second, b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

ReducedDegrees reduce_degrees(const FactorDegreeSet& fd, const Hyperplane* h) {
    ReducedDegrees r{reduce_mod_hyperplane(fd.constant, h), {}};
    for (const auto& d : fd.degrees) {
        LinearForm f = reduce_mod_hyperplane(d.form, h);
        if (!f.is_zero()) r.forms[std::move(f)] += d.mult;
    }
    return r;
}

FormClasses classify(std::span<const LinearForm> forms) {
    FormClasses out;
    for (const auto& f : forms) {
        std::size_t p = 0;
        while (p < out.reps.size() && is_multiple(f, out.reps[p]) == 0) ++p;
        if (p == out.reps.size()) out.reps.push_back(f);
        out.class_of.push_back(p);
    }
    return out;
}

int sign_of(const LinearForm& f, const FormClasses& classes, const SignAssignment& signs) {
    for (std::size_t p = 0; p < classes.reps.size(); ++p) {
        if (const int m = is_multiple(f, classes.reps[p]); m != 0) return m * signs.at(p);
    }
    throw std::invalid_argument("sign_of: form " + f.to_string() + " belongs to no class");
}

namespace {

LinearForm generic_sum(const ReducedDegrees& d, const FormClasses& classes,
                       const SignAssignment& signs, int wanted) {
    LinearForm sum = d.constant;
    for (const auto& [f, c] : d.forms) {
        if (sign_of(f, classes, signs) == wanted) sum += Rational(static_cast<long>(c)) * f;
    }
    return sum;
}

// Both generic differences must vanish for every assignment of signs to the
// classes of the tagged forms.
bool all_sign_maps_agree(const LinearForm& constant_diff, const std::vector<TaggedForm>& l) {
    if (l.empty()) return constant_diff.is_zero();
    std::vector<LinearForm> forms;
    forms.reserve(l.size());
    for (const auto& t : l) forms.push_back(t.form);
    const FormClasses classes = classify(forms);
    const std::size_t k = classes.reps.size();
    if (k > max_sign_classes) {
        throw std::length_error("compare: " + std::to_string(k) + " sign classes exceed the limit of " +
                                std::to_string(max_sign_classes));
    }

    // Each tagged form contributes (left - right) * f with a fixed orientation
    // relative to its class representative.
    std::vector<int> orientation(l.size());
    std::vector<LinearForm> weighted(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        orientation[i] = is_multiple(l[i].form, classes.reps[classes.class_of[i]]);
        weighted[i] = Rational(static_cast<long>(l[i].left - l[i].right)) * l[i].form;
    }

    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        LinearForm da = constant_diff;
        LinearForm dA = constant_diff;
        for (std::size_t i = 0; i < l.size(); ++i) {
            const int class_sign = (mask >> classes.class_of[i]) & 1U ? 1 : -1;
            if (orientation[i] * class_sign < 0) {
                da += weighted[i];
            } else {
                dA += weighted[i];
            }
        }
        if (!da.is_zero() || !dA.is_zero()) return false;
    }
    return true;
}

void check_dimensions(const FactorDegreeSet& a, const FactorDegreeSet& b, const Hyperplane* h) {
    const auto n = a.constant.size();
    if (b.constant.size() != n || (h != nullptr && h->normal.size() != n)) {
        throw std::invalid_argument("compare: dimension mismatch");
    }
}

}  // namespace

LinearForm generic_valuation(const ReducedDegrees& d, const FormClasses& classes,
                             const SignAssignment& signs) {
    return generic_sum(d, classes, signs, -1);
}

LinearForm generic_degree(const ReducedDegrees& d, const FormClasses& classes,
                          const SignAssignment& signs) {
    return generic_sum(d, classes, signs, 1);
}

bool compare(const FactorDegreeSet& a, const FactorDegreeSet& b, const Hyperplane* h) {
    check_dimensions(a, b, h);
    const ReducedDegrees ra = reduce_degrees(a, h);
    const ReducedDegrees rb = reduce_degrees(b, h);
    return all_sign_maps_agree(ra.constant - rb.constant, sym_diff_with_mult(ra.forms, rb.forms));
}

bool compare_unpruned(const FactorDegreeSet& a, const FactorDegreeSet& b, const Hyperplane* h) {
    check_dimensions(a, b, h);
    const ReducedDegrees ra = reduce_degrees(a, h);
    const ReducedDegrees rb = reduce_degrees(b, h);
    std::map<LinearForm, TaggedForm> all;
    for (const auto& [f, c] : ra.forms) all.emplace(f, TaggedForm{f, c, 0});
    for (const auto& [f, c] : rb.forms) {
        auto [it, inserted] = all.emplace(f, TaggedForm{f, 0, c});
        if (!inserted) it->second.right = c;
    }
    std::vector<TaggedForm> l;
    for (auto& [f, t] : all) l.push_back(std::move(t));
    return all_sign_maps_agree(ra.constant - rb.constant, l);
}

bool compare_block(const Hyperplane* h, std::span<const std::size_t> block, const GroupDataset& ds) {
    if (block.size() <= 1) return true;
    const FactorDegreeSet first = factor_degrees(ds.require_model(block[0]));
    for (std::size_t j = 1; j < block.size(); ++j) {
        if (!compare(first, factor_degrees(ds.require_model(block[j])), h)) return false;
    }
    return true;
}

bool TheoremReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.verdict; });
}

TheoremReport check_theorem(const GroupDataset& ds, const TheoremFilter& filter) {
    for (const auto& h : essential_hyperplanes(ds.models, ds.vars)) {
        if (ds.blocks.find(h) == nullptr) {
            throw IncompleteDataError("no stored blocks for essential hyperplane " + h.label);
        }
    }

    TheoremReport report;
    auto run = [&](const Hyperplane* h, const Partition& partition) {
        const auto& blocks = partition.blocks();
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (filter.block && *filter.block != i) continue;
            std::optional<Hyperplane> tag;
            if (h != nullptr) tag = *h;
            report.entries.push_back({std::move(tag), blocks[i], compare_block(h, blocks[i], ds)});
        }
    };

    const bool want_none = !filter.hyperplane;
    if (want_none) run(nullptr, ds.blocks.no_hyperplane());
    if (filter.only_no_hyperplane) return report;
    for (const auto& hb : ds.blocks.per_hyperplane()) {
        if (filter.hyperplane && !(*filter.hyperplane == hb.hyperplane)) continue;
        run(&hb.hyperplane, hb.partition);
    }
    return report;
}

bool SumReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const SumEntry& e) { return e.constant_sum; });
}

SumReport check_aA_sum(const GroupDataset& ds, const Specialization& s) {
    s.validate(ds.vars.total());
    const auto hs = ds.hyperplanes();
    SumReport report{rouquier_blocks(s, ds.blocks, hs), {}};
    for (const auto& block : report.blocks.partition.blocks()) {
        SumEntry entry{block, {}, true};
        std::optional<std::int64_t> sum;
        for (auto c : block) {
            const SchurModel* model = block.size() == 1 ? ds.model_for(c) : &ds.require_model(c);
            if (model == nullptr) {
                entry.values.emplace_back();
                continue;
            }
            const AAResult r = compute_aA(*model, s);
            entry.values.emplace_back(r);
            if (sum && *sum != r.a + r.A) entry.constant_sum = false;
            if (!sum) sum = r.a + r.A;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace rouquier
