#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "poisinv/autgrp.hpp"
#include "poisinv/multipoly.hpp"
#include "poisinv/poisson.hpp"
#include "poisinv/ratfunc.hpp"

namespace poisinv {

/*
 * The enveloping algebra of a quadratic Poisson structure on n variables:
 * the free algebra on x_1..x_n, y_1..y_n modulo
 *
 *   [x_i, x_j] = 0
 *   [y_i, x_j] = {x_i, x_j}
 *   [y_i, y_j] = sum_k d{x_i,x_j}/dx_k y_k
 *
 * Words use letters 0..n-1 for the x's and n..2n-1 for the y's.  Normal
 * forms land in the commutative polynomial ring on 2n slots (x's first),
 * realizing the ordered-monomial basis x^p y^q.
 */

using Word = std::vector<unsigned>;
using WordCombo = std::vector<std::pair<Cyclo, Word>>;

// variable names x1..xn, y1..yn for printing normal forms
std::vector<std::string> envelope_names(unsigned n);

struct PbwReport {
    bool pass = true;
    std::optional<Word> word;  // offending overlap word or non-homogeneous input
    MultiPoly left, right;     // the two conflicting normal forms
};

class Envelope {
public:
    explicit Envelope(PoissonStructure p);  // NotQuadratic

    unsigned nvars() const { return p_.nvars(); }
    const PoissonStructure& structure() const { return p_; }

    MultiPoly normal_form(const Word& w) const;
    MultiPoly normal_form(const WordCombo& combo) const;

    // the word spelling a PBW monomial (letters ascending); already normal
    static Word monomial_word(const ExpVec& exps);

    // defining relations as word combinations that rewrite to zero
    std::vector<WordCombo> relations() const;

    // letter-wise application of a block map on the 2n letters, then rewrite
    MultiPoly apply_induced(const GradedMap& block, const WordCombo& combo) const;

    // confluence of overlapping rewrites on all length-3 words plus
    // degree-preservation and basis counts up to dmax
    PbwReport verify_pbw_consistency(unsigned dmax) const;

private:
    PoissonStructure p_;
    mutable std::map<Word, MultiPoly> cache_;

    std::optional<WordCombo> rewrite_at(const Word& w, size_t t) const;
};

struct InducedMap {
    GradedMap map;      // 2n x 2n, both diagonal blocks equal to the source
    unsigned half = 0;  // n
};

// the automorphism of the enveloping algebra determined by a graded map:
// x_i and y_i transform by the same matrix
InducedMap induce(const GradedMap& phi);

// the induced map of a product is the product of induced maps, and both
// factors preserve every defining relation of the envelope
bool check_induced_hom(const PoissonStructure& p, const GradedMap& a, const GradedMap& b);

// characteristic polynomial of the induced map is the square of the source's
bool eigen_profile_doubling(const GradedMap& phi);

enum class QuasiReflectionKind { none, classical, mystic };

// screen a 2n-dimensional map for the two quasi-reflection shapes: all
// eigenvalues 1 except a single root of unity, or order 4 with eigenvalues
// 1, ..., 1, i, -i
QuasiReflectionKind quasi_reflection_screen(const InducedMap& psi, unsigned bound = 360);

// graded trace of the induced map on the envelope: 1/det(1 - t*phi)^2
RatFunc trace_series_env(const GradedMap& phi);

// homological determinant of the induced map: det(phi)^2, cross-checked
// against the top Laurent coefficient of the trace series; InfiniteOrder
// when phi has no finite order within the bound
Cyclo hdet_env(const GradedMap& phi, unsigned bound = 360);

// dimensions of the degree-0..dmax fixed subspaces of the envelope under
// the induced action of a finite automorphism group
std::vector<unsigned> env_invariant_dims(const PoissonStructure& p, const MatrixGroup& g,
                                         unsigned dmax);

}  // namespace poisinv
