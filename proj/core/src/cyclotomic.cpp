#include "rouquier/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rouquier {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Exact quotient of num by a monic divisor, both low to high.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("divide_monic: degree too small");
    std::vector<Integer> quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const Integer c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    for (std::size_t k = 0; k < dd; ++k) {
        if (num[k] != 0) throw std::logic_error("divide_monic: non-zero remainder");
    }
    return quot;
}

// Per-thread cache of Phi_c used by reduction; no state is shared between threads.
const std::vector<Integer>& cached_cyclotomic(std::uint64_t n) {
    thread_local std::unordered_map<std::uint64_t, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_coefficients(n)).first;
    return it->second;
}

// Folds exponents modulo c and reduces modulo Phi_c.
std::vector<Rational> reduce(std::uint64_t c, const std::vector<Rational>& power_coeffs) {
    std::vector<Rational> folded(c);
    for (std::size_t i = 0; i < power_coeffs.size(); ++i) folded[i % c] += power_coeffs[i];
    const auto& phi = cached_cyclotomic(c);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = c; i-- > d;) {
        if (folded[i] == 0) continue;
        const Rational lead = folded[i];
        for (std::size_t k = 0; k <= d; ++k) {
            if (phi[k] != 0) folded[i - d + k] -= lead * phi[k];
        }
    }
    folded.resize(d);
    return folded;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Integer> cyclotomic_coefficients(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_coefficients: n must be positive");
    const auto divs = divisors(n);
    std::unordered_map<std::uint64_t, std::vector<Integer>> phis;
    for (std::uint64_t d : divs) {
        std::vector<Integer> poly(d + 1);
        poly[0] = -1;
        poly[d] = 1;
        for (std::uint64_t e : divs) {
            if (e >= d) break;
            if (d % e == 0) poly = divide_monic(std::move(poly), phis.at(e));
        }
        phis.emplace(d, std::move(poly));
    }
    return phis.at(n);
}

std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : conductor_(1), coeffs_(1) {}

CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(Rational value) : conductor_(1), coeffs_{std::move(value)} {
    coeffs_[0].canonicalize();
}

CycNum::CycNum(std::uint64_t conductor, std::vector<Rational> power_coeffs) : conductor_(conductor) {
    if (conductor == 0) throw std::invalid_argument("CycNum: conductor must be positive");
    for (auto& q : power_coeffs) q.canonicalize();
    coeffs_ = reduce(conductor, power_coeffs);
}

CycNum CycNum::root_of_unity(std::uint64_t order, std::int64_t k) {
    if (order == 0) throw std::invalid_argument("root_of_unity: order must be positive");
    const auto n = static_cast<std::int64_t>(order);
    const auto e = static_cast<std::size_t>(((k % n) + n) % n);
    std::vector<Rational> p(e + 1);
    p[e] = 1;
    return CycNum(order, std::move(p));
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum is not rational: " + to_string());
    return coeffs_[0];
}

bool CycNum::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
}

CycNum CycNum::lift(std::uint64_t multiple) const {
    if (multiple == conductor_) return *this;
    if (multiple == 0 || multiple % conductor_ != 0) {
        throw std::invalid_argument("CycNum::lift: target is not a multiple of the conductor");
    }
    const std::uint64_t step = multiple / conductor_;
    std::vector<Rational> p(multiple);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    return CycNum(multiple, std::move(p));
}

CycNum CycNum::galois(std::uint64_t k) const {
    if (gcd_u(k % conductor_, conductor_) != 1 && conductor_ != 1) {
        throw std::invalid_argument("CycNum::galois: exponent not coprime to the conductor");
    }
    std::vector<Rational> p(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[(i * k) % conductor_] += coeffs_[i];
    return CycNum(conductor_, std::move(p));
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& q : r.coeffs_) q = -q;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    const auto l = lcm_conductor(conductor_, rhs.conductor_);
    if (l != conductor_) *this = lift(l);
    if (rhs.conductor_ == l) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    } else {
        const CycNum lifted = rhs.lift(l);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += lifted.coeffs_[i];
    }
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
    const auto l = lcm_conductor(conductor_, rhs.conductor_);
    const CycNum a = lift(l);
    const CycNum b = rhs.lift(l);
    std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] != 0) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    *this = CycNum(l, std::move(p));
    return *this;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
    if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
    const auto l = lcm_conductor(lhs.conductor_, rhs.conductor_);
    return lhs.lift(l).coeffs_ == rhs.lift(l).coeffs_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum::inverse: zero has no inverse");
    CycNum others(1L);
    for (std::uint64_t k = 2; k < conductor_; ++k) {
        if (gcd_u(k, conductor_) == 1) others *= galois(k);
    }
    const Rational n = (*this * others).rational_value();
    return others * CycNum(Rational(1) / n);
}

CycNum CycNum::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(1L);
    CycNum base = *this;
    auto k = static_cast<std::uint64_t>(e);
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

bool CycNum::is_root_of_unity() const {
    if (is_zero()) return false;
    return pow(static_cast<std::int64_t>(lcm_conductor(2, conductor_))).is_one();
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& q = coeffs_[i];
        if (q == 0) continue;
        const bool negative = q < 0;
        const Rational mag = abs(q);
        if (negative) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << "E(" << conductor_ << ')';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Norms

Rational norm(const CycNum& x) {
    const auto c = x.conductor();
    CycNum prod = x;
    for (std::uint64_t k = 2; k < c; ++k) {
        if (gcd_u(k, c) == 1) prod *= x.galois(k);
    }
    return prod.rational_value();
}

bool is_unit(const CycNum& x) {
    if (x.is_zero()) throw std::domain_error("is_unit: zero is not a valid argument");
    return abs(norm(x)) == 1;
}

std::set<unsigned long> norm_primes(const CycNum& x) {
    if (x.is_zero()) throw std::domain_error("norm_primes: zero is not a valid argument");
    const Rational n = abs(norm(x));
    if (n.get_den() != 1) {
        throw std::domain_error("norm_primes: norm " + n.get_str() + " is not an integer");
    }
    Integer m = n.get_num();
    std::set<unsigned long> primes;
    for (unsigned long p = 2; m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
            if (!m.fits_ulong_p()) throw std::overflow_error("norm_primes: prime factor too large");
            primes.insert(m.get_ui());
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            primes.insert(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) m /= p;
        }
    }
    return primes;
}

// ---------------------------------------------------------------------------
// CycPoly

CycPoly CycPoly::named(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("CycPoly::named: n must be positive");
    return CycPoly(Kind(n), euler_phi(n));
}

CycPoly CycPoly::explicit_poly(std::vector<CycNum> coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("CycPoly: degree must be at least 1");
    if (coeffs.back().is_zero()) throw std::invalid_argument("CycPoly: leading coefficient is zero");
    if (!coeffs.back().is_one()) throw std::invalid_argument("CycPoly: polynomial is not monic");
    const std::size_t degree = coeffs.size() - 1;
    return CycPoly(Kind(std::move(coeffs)), degree);
}

std::uint64_t CycPoly::index() const {
    if (!is_named()) throw std::logic_error("CycPoly::index: explicit polynomial");
    return std::get<std::uint64_t>(kind_);
}

std::vector<CycNum> CycPoly::coefficients() const {
    if (!is_named()) return std::get<std::vector<CycNum>>(kind_);
    std::vector<CycNum> out;
    for (const auto& c : cyclotomic_coefficients(index())) out.emplace_back(Rational(c));
    return out;
}

CycNum CycPoly::evaluate(const CycNum& x) const {
    const auto cs = coefficients();
    CycNum acc;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
    return acc;
}

std::string CycPoly::to_string() const {
    if (is_named()) return "Phi_" + std::to_string(index());
    const auto& cs = std::get<std::vector<CycNum>>(kind_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) continue;
        if (!first) os << '+';
        const std::string c = cs[i].to_string();
        if (i == 0) {
            os << c;
        } else {
            if (!cs[i].is_one()) os << '(' << c << ")*";
            os << 'q';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

bool operator==(const CycPoly& lhs, const CycPoly& rhs) {
    if (lhs.is_named() && rhs.is_named()) return lhs.index() == rhs.index();
    return lhs.coefficients() == rhs.coefficients();
}

CycNum eval_at_one(const CycPoly& p) {
    CycNum sum;
    for (const auto& c : p.coefficients()) sum += c;
    return sum;
}

}  // namespace rouquier
