#pragma once

#include <optional>
#include <vector>

#include "poisinv/autgrp.hpp"
#include "poisinv/multipoly.hpp"
#include "poisinv/poisson.hpp"

namespace poisinv {

/*
 * Invariant subalgebras of a polynomial Poisson algebra under a finite
 * matrix group: degree-wise fixed spaces, algebra generators, and the
 * bracket table induced on the generators.
 */

// average of f over the group orbit; the result is fixed by every element
MultiPoly reynolds(const MatrixGroup& g, const MultiPoly& f);

struct InvariantBasis {
    unsigned degree = 0;
    std::vector<MultiPoly> basis;
};

// basis of the fixed subspace of homogeneous degree-d polynomials, computed
// as the joint kernel of (action - identity) over the group generators.
// Elements are normalized to leading coefficient 1 and ordered by their
// trailing monomial, so the output is deterministic.
InvariantBasis invariant_basis(const MatrixGroup& g, unsigned degree);

struct GeneratorSet {
    std::vector<MultiPoly> gens;
    std::vector<unsigned> degrees;
    // true when the number of generators equals the number of variables and
    // their Jacobian determinant is nonzero
    bool jacobian_independent = false;
};

// degree-ascending greedy search for algebra generators of the invariant
// subalgebra: at each degree keep the fixed vectors that escape the span of
// products of the generators found so far
GeneratorSet find_generators(const MatrixGroup& g, unsigned dmax);

// write the homogeneous f as a polynomial in the generators, matching total
// degree against the generator degrees; absent when no combination exists.
// The result lives in gens.size() fresh variables.
std::optional<MultiPoly> express_in_generators(const MultiPoly& f, const GeneratorSet& gens);

struct InducedStructure {
    // bracket table rewritten in the generator variables
    PoissonStructure structure;
    // the same brackets as elements of the original algebra, pair order
    std::vector<MultiPoly> expressions;
};

// Poisson structure induced on the generators: every pairwise bracket is
// re-expressed in the generators; throws NotClosedUnderBracket with the
// offending pair when one is not expressible
InducedStructure induced_bracket_table(const PoissonStructure& p, const GeneratorSet& gens);

}  // namespace poisinv
