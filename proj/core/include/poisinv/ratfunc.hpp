#pragma once

#include <string>
#include <vector>

#include "poisinv/unipoly.hpp"

namespace poisinv {

// rational functions in one variable, always reduced: gcd(num, den) = 1 and
// den(0) = 1 (or den monic when it vanishes at 0), so equality is structural
class RatFunc {
public:
    RatFunc() : num_(), den_(Cyclo(1)) {}
    RatFunc(const Cyclo& c) : num_(c), den_(Cyclo(1)) {}
    RatFunc(UniPoly num, UniPoly den);  // DivisionByZero when den == 0

    static RatFunc one_over(UniPoly den) { return RatFunc(UniPoly(Cyclo(1)), std::move(den)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);  // DivisionByZero
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc& operator*=(const Cyclo& s);

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // power series coefficients 0..dmax; PoleAtZero when den(0) = 0
    std::vector<Cyclo> taylor_coeffs(unsigned dmax) const;

    // "num / den" with both sides expanded
    std::string str(const std::string& var = "t") const;
    // denominator greedily split into (1 - t^k) factors for readability,
    // e.g. "1/((1-t)^2*(1-t^2))"; falls back to expanded leftovers
    std::string factored_str(const std::string& var = "t") const;

private:
    UniPoly num_, den_;

    void normalize();
};

}  // namespace poisinv
