#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poisinv/rational.hpp"

namespace poisinv {

/*
 * Elements of the cyclotomic fields Q(zeta_N).
 *
 * A value is stored as a coefficient vector of length phi(N) over the power
 * basis 1, z, ..., z^{phi(N)-1} of Q(zeta_N) = Q[z]/Phi_N(z).  Every value is
 * normalized on construction to the smallest divisor d of its modulus with
 * the element inside Q(zeta_d); in particular rationals always sit at
 * modulus 1, so equality and ordering are plain representation comparisons.
 * Mixed-modulus arithmetic lifts both operands into Q(zeta_lcm) through the
 * canonical embedding zeta_N = zeta_M^(M/N).
 */
class Cyclo {
public:
    Cyclo() : modulus_(1), coords_(1) {}
    Cyclo(const Rational& r) : modulus_(1), coords_{r} {}
    Cyclo(long v) : Cyclo(Rational(v)) {}
    Cyclo(int v) : Cyclo(Rational(v)) {}

    // zeta_N^k for any integer k (reduced mod N)
    static Cyclo root_of_unity(long k, unsigned N);
    static Cyclo zeta(unsigned N) { return root_of_unity(1, N); }

    unsigned modulus() const { return modulus_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const { return modulus_ == 1 && coords_[0] == 0; }
    bool is_one() const { return modulus_ == 1 && coords_[0] == 1; }
    bool is_rational() const { return modulus_ == 1; }
    const Rational& rational_value() const;  // requires is_rational()

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);  // DivisionByZero

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    Cyclo inverse() const;      // DivisionByZero on zero
    Cyclo pow(long e) const;    // negative exponents take the inverse

    bool operator==(const Cyclo& o) const {
        return modulus_ == o.modulus_ && coords_ == o.coords_;
    }
    // lexicographic on (modulus, coords); any total order good for map keys
    std::strong_ordering operator<=>(const Cyclo& o) const;

    // canonical text form, e.g. "1/2*zeta(12)^2 - 1" or "-2/3"
    std::string str() const;

    // coefficients of this element on the power basis of Q(zeta_M); modulus
    // must divide M
    std::vector<Rational> lifted_coords(unsigned M) const;

private:
    unsigned modulus_;
    std::vector<Rational> coords_;

    Cyclo(unsigned modulus, std::vector<Rational> coords);
    void normalize();

    friend Cyclo cyclo_from_poly(unsigned modulus, std::vector<Rational> polycoeffs);
};

// constructs the class of a polynomial in zeta_modulus (coefficients ascending)
Cyclo cyclo_from_poly(unsigned modulus, std::vector<Rational> polycoeffs);

unsigned euler_phi(unsigned n);

// coefficients of the N-th cyclotomic polynomial, ascending, cached
const std::vector<BigInt>& cyclotomic_poly(unsigned N);

// smallest m <= bound with z^m == 1, if any
std::optional<unsigned> order_as_root_of_unity(const Cyclo& z, unsigned bound = 360);

inline Cyclo root_of_unity(long k, unsigned N) { return Cyclo::root_of_unity(k, N); }

}  // namespace poisinv
