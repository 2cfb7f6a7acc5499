#pragma once

#include <optional>
#include <vector>

#include "poisinv/multipoly.hpp"

namespace poisinv {

// first triple (lex order, 0-based, i < j < k) whose cyclic Jacobi sum is
// nonzero, together with that sum
struct JacobiFailure {
    unsigned i, j, k;
    MultiPoly residual;
};

// polynomial Poisson bracket on k[x1..xn], determined by the pairwise
// brackets {x_i, x_j}; no Jacobi check is performed on construction
class PoissonStructure {
public:
    // table lists {x_i, x_j} for i < j in lex pair order:
    // (1,2), (1,3), ..., (1,n), (2,3), ...
    PoissonStructure(unsigned nvars, std::vector<MultiPoly> table);

    static PoissonStructure zero(unsigned nvars);

    // bracket of the Jacobian structure of a cubic: {x1,x2} = dW/dx3,
    // {x2,x3} = dW/dx1, {x3,x1} = dW/dx2; requires three variables and a
    // homogeneous cubic (the zero potential is allowed and gives the zero
    // bracket)
    static PoissonStructure from_superpotential(const MultiPoly& potential);

    unsigned nvars() const { return nvars_; }
    const std::vector<MultiPoly>& table() const { return table_; }

    // {x_i, x_j} for any pair, antisymmetry applied; i == j gives 0
    MultiPoly generator_bracket(unsigned i, unsigned j) const;

    // every table entry zero or homogeneous of degree 2
    bool is_quadratic() const;

    MultiPoly bracket(const MultiPoly& f, const MultiPoly& g) const;

    // std::nullopt when the Jacobi identity holds on all generator triples
    std::optional<JacobiFailure> verify_jacobi() const;

    // f -> sum_i d{x_i, f}/dx_i
    MultiPoly modular_derivation(const MultiPoly& f) const;

    // modular derivation vanishes on every generator
    bool is_unimodular() const;

private:
    unsigned nvars_;
    std::vector<MultiPoly> table_;

    unsigned pair_index(unsigned i, unsigned j) const;
};

// exact potential W with {x1,x2} = dW/dx3, {x2,x3} = dW/dx1,
// {x3,x1} = dW/dx2, found by degree-wise integration; std::nullopt when the
// table is not of that form; requires three variables
std::optional<MultiPoly> solve_superpotential(const PoissonStructure& p);

// dimensions, in degrees 0..dmax, of the quotient of k[x1..xn] by the ideal
// generated by the pairwise brackets; every table entry must be homogeneous
std::vector<unsigned> bracket_quotient_hilbert(const PoissonStructure& p, unsigned dmax);

}  // namespace poisinv
