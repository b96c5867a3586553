#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_c) and over cyclotomic
// polynomials with coefficients in such fields.

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace rouquier {

using Integer = mpz_class;
using Rational = mpq_class;

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, low to high degree.
/// Obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
std::vector<Integer> cyclotomic_coefficients(std::uint64_t n);

/// An element sum_i coeffs[i] * zeta_c^i of Q(zeta_c), where zeta_c = exp(2 pi i / c).
///
/// The coefficient vector always has exactly phi(c) entries: it is the
/// remainder of the defining power sum modulo Phi_c. Numbers with different
/// conductors compare and combine after lifting both to the lcm conductor.
class CycNum {
public:
    CycNum();
    CycNum(long value);  // NOLINT(google-explicit-constructor)
    CycNum(Rational value);  // NOLINT(google-explicit-constructor)

    /// Reduces sum_i power_coeffs[i] zeta_c^i; power_coeffs may have any length.
    CycNum(std::uint64_t conductor, std::vector<Rational> power_coeffs);

    /// zeta_order^k, with k taken modulo order (negative k allowed).
    static CycNum root_of_unity(std::uint64_t order, std::int64_t k = 1);

    std::uint64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Throws std::domain_error unless is_rational().
    Rational rational_value() const;
    /// True iff every coefficient is an integer in the power basis.
    bool has_integer_coeffs() const;

    /// The same number written over conductor `multiple` (a multiple of conductor()).
    CycNum lift(std::uint64_t multiple) const;
    /// The Galois conjugate zeta_c -> zeta_c^k; k must be coprime to the conductor.
    CycNum galois(std::uint64_t k) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
    friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
    friend CycNum operator*(CycNum lhs, const CycNum& rhs) { return lhs *= rhs; }
    friend bool operator==(const CycNum& lhs, const CycNum& rhs);

    /// Multiplicative inverse via the conjugate product; throws on zero.
    CycNum inverse() const;
    /// Integer power; negative exponents go through inverse().
    CycNum pow(std::int64_t e) const;

    /// True iff some positive power equals 1.
    bool is_root_of_unity() const;

    /// GAP-like text, e.g. "1+E(3)^2" or "-1/2*E(4)".
    std::string to_string() const;

private:
    std::uint64_t conductor_;
    std::vector<Rational> coeffs_;
};

std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b);

/// Absolute norm N_{Q(zeta_c)/Q}(x): product of all conjugates.
Rational norm(const CycNum& x);

/// |N(x)| == 1. Throws std::domain_error on zero.
bool is_unit(const CycNum& x);

/// Rational primes dividing |N(x)|; empty iff x is a unit.
/// Throws std::domain_error on zero or when N(x) is not an integer.
std::set<unsigned long> norm_primes(const CycNum& x);

/// A monic cyclotomic polynomial over some Q(zeta_c): either the rational
/// Phi_n, or an explicit coefficient list for a K-cyclotomic factor such as
/// q^2 + zeta_3^2.
class CycPoly {
public:
    static CycPoly named(std::uint64_t n);
    /// Coefficients low to high; must have degree >= 1 and leading coefficient 1.
    static CycPoly explicit_poly(std::vector<CycNum> coeffs);

    bool is_named() const { return std::holds_alternative<std::uint64_t>(kind_); }
    /// Index n of Phi_n; only for named polynomials.
    std::uint64_t index() const;
    std::size_t degree() const { return degree_; }
    /// Coefficients low to high (integers for named polynomials).
    std::vector<CycNum> coefficients() const;

    CycNum evaluate(const CycNum& x) const;

    std::string to_string() const;
    friend bool operator==(const CycPoly& lhs, const CycPoly& rhs);

private:
    using Kind = std::variant<std::uint64_t, std::vector<CycNum>>;
    CycPoly(Kind kind, std::size_t degree) : kind_(std::move(kind)), degree_(degree) {}

    Kind kind_;
    std::size_t degree_;
};

/// The rational cyclotomic polynomial Phi_n.
inline CycPoly phi_n(std::uint64_t n) { return CycPoly::named(n); }

/// Psi(1): the sum of the coefficients.
CycNum eval_at_one(const CycPoly& p);

}  // namespace rouquier
