#pragma once

#include <string>
#include <vector>

#include "poisinv/cyclo.hpp"
#include "poisinv/matrix.hpp"
#include "poisinv/multipoly.hpp"

namespace poisinv {

/*
 * Text format for polynomials, scalars, and matrices.
 *
 * Grammar, tightest first: ^ (integer exponent), unary -, * (explicit, or a
 * number written directly before a variable, as in "3x1"), then + and -.
 * There is no division operator; rational literals are written whole, "1/2".
 * zeta(N) denotes the root of unity e^(2*pi*i/N).
 *
 * Every zeta order appearing in a source must divide `zeta_modulus`, so all
 * scalars of a session live in one fixed cyclotomic field.  Pass 0 to lift
 * the restriction.
 *
 * Matrices are bracketed, comma-separated entries with ';' between rows:
 * "[1, 0; 0, -1]".
 *
 * The str() renderings of Cyclo, MultiPoly, and Matrix parse back to equal
 * values.
 */

inline constexpr unsigned kDefaultZetaModulus = 12;

MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& vars,
                     unsigned zeta_modulus = kDefaultZetaModulus);

// variables named x1..x<nvars>
MultiPoly parse_poly(const std::string& src, unsigned nvars,
                     unsigned zeta_modulus = kDefaultZetaModulus);

Cyclo parse_scalar(const std::string& src, unsigned zeta_modulus = kDefaultZetaModulus);

Matrix parse_matrix(const std::string& src, unsigned zeta_modulus = kDefaultZetaModulus);

}  // namespace poisinv
