#pragma once

#include <string>
#include <vector>

#include "poisinv/cyclo.hpp"

namespace poisinv {

// dense univariate polynomials over the cyclotomic scalars, ascending
// coefficients, trailing zeros trimmed
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Cyclo& c);
    explicit UniPoly(std::vector<Cyclo> coeffs);

    static UniPoly t();  // the variable

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    Cyclo coeff(size_t k) const { return k < c_.size() ? c_[k] : Cyclo(); }
    const Cyclo& leading() const;
    const std::vector<Cyclo>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Cyclo& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Cyclo& s) { return a *= s; }
    friend UniPoly operator*(const Cyclo& s, UniPoly a) { return a *= s; }
    UniPoly pow(unsigned e) const;

    Cyclo eval(const Cyclo& x) const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Cyclo> c_;

    void trim();
};

// quotient and remainder; DivisionByZero when b == 0
std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b);
// monic gcd (zero when both inputs are zero)
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace poisinv
