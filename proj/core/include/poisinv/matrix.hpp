#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poisinv/cyclo.hpp"
#include "poisinv/unipoly.hpp"

namespace poisinv {

// dense matrices over the cyclotomic scalars; row i of a graded map holds
// the coefficients of the image of the i-th variable
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(unsigned n);
    static Matrix from_rows(const std::vector<std::vector<Cyclo>>& rows);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Cyclo& at(unsigned i, unsigned j);
    const Cyclo& at(unsigned i, unsigned j) const;
    Cyclo& operator()(unsigned i, unsigned j) { return at(i, j); }
    const Cyclo& operator()(unsigned i, unsigned j) const { return at(i, j); }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Cyclo& s, Matrix a);
    Matrix pow(unsigned e) const;

    Matrix transpose() const;
    Cyclo trace() const;     // NotSquare
    Cyclo det() const;       // NotSquare
    Matrix inverse() const;  // SingularMatrix
    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const = default;
    // total order for use as map keys in closure computations
    bool operator<(const Matrix& o) const;

    // "[a, b; c, d]"
    std::string str() const;

private:
    unsigned rows_, cols_;
    std::vector<Cyclo> a_;
};

// monic characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
// recurrence (exact over characteristic zero)
UniPoly charpoly(const Matrix& m);

// det(I - t*M): the characteristic polynomial with coefficients reversed
UniPoly det_one_minus_t(const Matrix& m);

unsigned rank(Matrix m);

struct LinearSolution {
    std::optional<std::vector<Cyclo>> particular;  // free variables set to zero
    std::vector<std::vector<Cyclo>> kernel;        // basis of the null space
};

// full solution set of A x = b
LinearSolution solve_linear(const Matrix& a, const std::vector<Cyclo>& b);

}  // namespace poisinv
