#include "rouquier/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace rouquier {

LaurentPoly::LaurentPoly(Terms terms) {
    for (auto& [e, c] : terms) {
        if (!c.is_zero()) terms_.emplace(e, std::move(c));
    }
}

LaurentPoly LaurentPoly::monomial(const CycNum& c, std::int64_t exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

std::int64_t LaurentPoly::valuation() const {
    if (terms_.empty()) throw std::domain_error("valuation of the zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

CycNum LaurentPoly::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? CycNum() : it->second;
}

void LaurentPoly::add_term(std::int64_t exponent, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    LaurentPoly product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) product.add_term(ea + eb, ca * cb);
    }
    *this = std::move(product);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycNum& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
    LaurentPoly result = constant(CycNum(1L));
    for (std::uint64_t i = 0; i < e; ++i) result *= *this;
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        const bool simple = c.is_rational();
        if (!first && !(simple && cs[0] == '-')) os << '+';
        if (e == 0) {
            os << (simple ? cs : "(" + cs + ")");
        } else {
            if (c == CycNum(-1L)) {
                os << '-';
            } else if (!c.is_one()) {
                os << (simple ? cs : "(" + cs + ")") << '*';
            }
            os << 'y';
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace rouquier
