#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "rouquier/cyclotomic.hpp"

namespace rouquier {

/// A Laurent polynomial in one variable y with exact cyclotomic coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, CycNum>;

    LaurentPoly() = default;
    explicit LaurentPoly(Terms terms);
    static LaurentPoly constant(const CycNum& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const CycNum& c, std::int64_t exponent);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Lowest exponent; throws std::domain_error on the zero polynomial.
    std::int64_t valuation() const;
    /// Highest exponent; throws std::domain_error on the zero polynomial.
    std::int64_t degree() const;
    CycNum coefficient(std::int64_t exponent) const;

    void add_term(std::int64_t exponent, const CycNum& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const CycNum& scalar);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs *= rhs; }
    friend LaurentPoly operator*(LaurentPoly lhs, const CycNum& rhs) { return lhs *= rhs; }
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    LaurentPoly pow(std::uint64_t e) const;

    /// e.g. "y^2+2*y+1", coefficients in GAP E(n) notation.
    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace rouquier
