#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <map>

#include "rouquier/specialization.hpp"
#include "support.hpp"

using namespace rouquier;
using namespace testing_support;

namespace {

using Complex = std::complex<double>;
using DensePoly = std::map<std::int64_t, Complex>;

Complex embed(const CycNum& x) {
    Complex z = 0;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        z += x.coeffs()[i].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(i) / static_cast<double>(x.conductor()));
    }
    return z;
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    return r;
}

// Floating-point expansion used only to locate the extreme exponents; the
// coefficients are small integers combinations of roots of unity, so a
// cancellation is recognized with a generous tolerance.
AAResult float_val_deg(const SchurModel& model, const std::vector<std::int64_t>& n) {
    auto dot_n = [&](const Monomial& m) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n.size(); ++i) s += m.exps[i] * n[i];
        return s;
    };
    DensePoly p{{dot_n(model.leading), embed(model.coefficient)}};
    for (const auto& f : model.factors) {
        const std::int64_t m = dot_n(f.monomial);
        DensePoly psi;
        const auto coeffs = f.psi.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k) psi[static_cast<std::int64_t>(k) * m] += embed(coeffs[k]);
        for (std::int64_t r = 0; r < f.mult; ++r) p = dense_mul(p, psi);
    }
    std::vector<std::int64_t> exps;
    for (const auto& [e, c] : p) {
        if (std::abs(c) > 1e-6) exps.push_back(e);
    }
    if (exps.empty()) throw std::domain_error("vanishes");
    return {exps.front(), exps.back()};
}

SchurModel two_slot_model(std::vector<SchurFactor> factors) {
    SchurModel m;
    m.character = "x";
    m.leading = Monomial{{0, 0}};
    m.factors = std::move(factors);
    return m;
}

LaurentPoly poly(std::initializer_list<std::pair<const std::int64_t, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, CycNum(c));
    return p;
}

}  // namespace

TEST(Specialization, PosNegParts) {
    EXPECT_EQ(pos_part(3), 3);
    EXPECT_EQ(neg_part(3), 0);
    EXPECT_EQ(pos_part(0), 0);
    EXPECT_EQ(neg_part(0), 0);
    EXPECT_EQ(pos_part(-2), 0);
    EXPECT_EQ(neg_part(-2), -2);
}

TEST(Specialization, MonomialExponent) {
    const Specialization s({1, 0, 0});
    EXPECT_EQ(monomial_exponent(Monomial{{2, -1, -1}}, s), 2);
    EXPECT_EQ(monomial_exponent(Monomial{{-1, 2, -1}}, s), -1);
    EXPECT_THROW(monomial_exponent(Monomial{{1, -1}}, s), std::invalid_argument);
}

TEST(Specialization, G4Spetsial) {
    EXPECT_EQ(compute_aA(g4_theta_model(), Specialization({1, 0, 0})), (AAResult{-12, 12}));
    EXPECT_EQ(compute_aA(g4_theta_model(), Specialization({0, 0, 0})), (AAResult{0, 0}));
    // Frozen after checking against both expansions below.
    EXPECT_EQ(float_val_deg(g4_theta_model(), {-1, 0, 0}), (AAResult{-12, 12}));
    EXPECT_EQ(val_deg(expand(g4_theta_model(), Specialization({-1, 0, 0}))), (AAResult{-12, 12}));
    EXPECT_EQ(compute_aA(g4_theta_model(), Specialization({-1, 0, 0})), (AAResult{-12, 12}));
    const auto e = expand(g4_theta_model(), Specialization({1, 0, 0}));
    EXPECT_EQ(val_deg(e), (AAResult{-12, 12}));
}

TEST(Specialization, ExpandExamples) {
    const Specialization s({1, 0});
    EXPECT_EQ(expand(two_slot_model({{phi_n(4), Monomial{{1, -1}}, 1}}), s), poly({{2, 1}, {0, 1}}));
    EXPECT_EQ(expand(two_slot_model({{phi_n(2), Monomial{{1, -1}}, 2}}), s), poly({{2, 1}, {1, 2}, {0, 1}}));
    // Phi_1 on a monomial sent to 1 kills the element.
    EXPECT_THROW(expand(two_slot_model({{phi_n(1), Monomial{{1, -1}}, 1}}), Specialization({0, 0})),
                 std::domain_error);
}

TEST(Specialization, TwistsAreExpandedAndRejectedByFormula) {
    // Phi_1(-y) = -(y + 1)
    const Specialization twisted({1, 0}, {CycNum(1L), CycNum(-1L)});
    EXPECT_EQ(expand(two_slot_model({{phi_n(1), Monomial{{1, -1}}, 1}}), twisted), poly({{1, -1}, {0, -1}}));
    EXPECT_THROW(compute_aA(two_slot_model({}), twisted), std::invalid_argument);
    EXPECT_THROW(Specialization({1, 0}, {CycNum(1L), CycNum(2L)}).validate(2), std::invalid_argument);
    EXPECT_THROW(Specialization({1, 0}).validate(3), std::invalid_argument);
}

TEST(Specialization, ValDegExamples) {
    EXPECT_EQ(val_deg(poly({{-12, 1}, {12, 3}})), (AAResult{-12, 12}));
    EXPECT_EQ(val_deg(poly({{0, 1}})), (AAResult{0, 0}));
    EXPECT_EQ(val_deg(poly({{2, 1}, {1, 2}})), (AAResult{1, 2}));
    EXPECT_THROW(val_deg(LaurentPoly()), std::domain_error);
}

TEST(Specialization, IndexRelationExamples) {
    EXPECT_TRUE(check_index_relation(poly({{1, 2}, {0, 2}}), poly({{1, 1}, {0, 1}}), 2));
    EXPECT_FALSE(check_index_relation(poly({{1, 1}, {0, 1}}), poly({{1, 1}, {0, 1}}), 2));
}

TEST(SpecializationProperty, OracleAgreement) {
    Rng rng(101);
    const VarIndex vars({{"a", 2}, {"b", 3}});
    for (int trial = 0; trial < 300; ++trial) {
        const SchurModel m = random_model(rng, vars, 4);
        const Specialization s = random_spec(rng, vars.total());
        AAResult expected;
        try {
            expected = val_deg(expand(m, s));
        } catch (const std::domain_error&) {
            continue;  // a Phi_1 factor on a monomial sent to 1
        }
        EXPECT_EQ(compute_aA(m, s), expected);
        EXPECT_EQ(float_val_deg(m, s.nvec), expected);
    }
}

TEST(SpecializationProperty, DualitySumAndOrder) {
    Rng rng(202);
    const VarIndex vars({{"a", 3}, {"b", 2}});
    for (int trial = 0; trial < 500; ++trial) {
        const SchurModel m = random_model(rng, vars, 5);
        const Specialization s = random_spec(rng, vars.total());
        const AAResult r = compute_aA(m, s);
        const AAResult d = compute_aA(m, s.negated());
        EXPECT_EQ(d.a, -r.A);
        EXPECT_EQ(d.A, -r.a);
        EXPECT_LE(r.a, r.A);
        std::int64_t sum = 2 * monomial_exponent(m.leading, s);
        for (const auto& f : m.factors) {
            sum += f.mult * static_cast<std::int64_t>(f.psi.degree()) * monomial_exponent(f.monomial, s);
        }
        EXPECT_EQ(r.a + r.A, sum);
    }
}

TEST(OneVariable, MatchesGeneralFormula) {
    Rng rng(303);
    const VarIndex vars({{"s", 2}});
    for (int trial = 0; trial < 200; ++trial) {
        SchurModel m = random_model(rng, vars, 5);
        const auto vd = one_variable_val_deg(m);
        const std::int64_t n0 = uniform(rng, -5, 5);
        const std::int64_t n1 = uniform(rng, -5, 5);
        EXPECT_EQ(aA_from_one_variable(vd, n0 - n1), compute_aA(m, Specialization({n0, n1})));
    }
}

TEST(OneVariable, Examples) {
    SchurModel m = two_slot_model({{phi_n(2), Monomial{{1, -1}}, 1}, {phi_n(4), Monomial{{-1, 1}}, 2}});
    m.leading = Monomial{{2, -2}};
    // 2 + (0..1) + 2*(-2..0)
    EXPECT_EQ(one_variable_val_deg(m), (OneVariableValDeg{-2, 3}));
    EXPECT_EQ(aA_from_one_variable({-2, 3}, 2), (AAResult{-4, 6}));
    EXPECT_EQ(aA_from_one_variable({-2, 3}, -1), (AAResult{-3, 2}));
    EXPECT_THROW(one_variable_val_deg(g4_theta_model()), std::invalid_argument);
}
