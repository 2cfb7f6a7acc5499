#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poisinv/matrix.hpp"
#include "poisinv/poisson.hpp"
#include "poisinv/ratfunc.hpp"

namespace poisinv {

// graded algebra map determined by an invertible action on the degree-1
// generators; row i holds the coefficients of the image of x_{i+1}
class GradedMap {
public:
    explicit GradedMap(Matrix m);

    unsigned nvars() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }

    // generator images as linear polynomials
    std::vector<MultiPoly> images() const;
    // substitution action on a polynomial
    MultiPoly apply(const MultiPoly& f) const;

    GradedMap operator*(const GradedMap& o) const { return GradedMap(mat_ * o.mat_); }
    bool operator==(const GradedMap& o) const { return mat_ == o.mat_; }
    bool operator<(const GradedMap& o) const { return mat_ < o.mat_; }

private:
    Matrix mat_;
};

struct AutomorphismCheck {
    bool pass;
    // first generator pair (0-based, i < j) whose bracket is not preserved
    unsigned i = 0, j = 0;
    explicit operator bool() const { return pass; }
};

// does the map preserve every pairwise bracket
AutomorphismCheck is_poisson_automorphism(const PoissonStructure& p, const GradedMap& phi);

// names for the entries of a symbolic n x n matrix, row-major: a11, a12, ...
std::vector<std::string> constraint_symbols(unsigned nvars);

// coefficient-matching equations, over the n^2 symbols of
// constraint_symbols(n), for an unknown matrix to preserve every pairwise
// bracket; each equation is monic under grlex, zeros dropped, duplicates
// removed; requires a quadratic table
std::vector<MultiPoly> emit_constraint_system(const PoissonStructure& p);

// least m <= bound with phi^m = identity
std::optional<unsigned> order_of(const GradedMap& phi, unsigned bound);

struct ReflectionReport {
    bool is_reflection = false;
    std::optional<unsigned> order;  // finite order when found within the bound
    std::optional<Cyclo> xi;        // the non-unit eigenvalue of a reflection
    // (eigenvalue, multiplicity) pairs, filled when the order is finite
    std::vector<std::pair<Cyclo, unsigned>> eigen_profile;
};

// a reflection fixes a hyperplane: eigenvalues 1 (n-1 times) and a root of
// unity xi != 1; detected without eigenvectors through lambda := tr - (n-1),
// the identity (phi - I)(phi - lambda I) = 0, and bracket preservation
ReflectionReport classify_reflection(const PoissonStructure& p, const GradedMap& phi,
                                     unsigned bound = 360);

inline constexpr unsigned kDefaultClosureCap = 10000;

struct MatrixGroup {
    std::vector<GradedMap> elements;  // deduplicated, identity first
    std::vector<GradedMap> generators;
    std::size_t size() const { return elements.size(); }
};

// breadth-first closure under multiplication starting from the identity
MatrixGroup group_closure(const std::vector<GradedMap>& gens,
                          unsigned cap = kDefaultClosureCap);

// graded trace of the substitution action on the polynomial ring:
// 1/det(I - t*phi)
RatFunc trace_series(const GradedMap& phi);

// group average of the trace series; its Taylor coefficients count invariants
// degree by degree
RatFunc molien(const MatrixGroup& g);

}  // namespace poisinv
