#include "poisinv/matrix.hpp"

#include <utility>

#include "poisinv/errors.hpp"

namespace poisinv {

Matrix Matrix::identity(unsigned n) {
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclo>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
        for (unsigned j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Cyclo& Matrix::at(unsigned i, unsigned j) {
    if (i >= rows_ || j >= cols_)
        throw IndexOutOfRange("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return a_[size_t(i) * cols_ + j];
}

const Cyclo& Matrix::at(unsigned i, unsigned j) const {
    return const_cast<Matrix*>(this)->at(i, j);
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix r(a.rows_, b.cols_);
    for (unsigned i = 0; i < a.rows_; ++i)
        for (unsigned k = 0; k < a.cols_; ++k) {
            const Cyclo& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (unsigned j = 0; j < b.cols_; ++j) {
                const Cyclo& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Cyclo& s, Matrix a) {
    for (auto& c : a.a_) c *= s;
    return a;
}

Matrix Matrix::pow(unsigned e) const {
    if (!is_square()) throw NotSquare();
    Matrix acc = identity(rows_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Cyclo Matrix::trace() const {
    if (!is_square()) throw NotSquare();
    Cyclo t;
    for (unsigned i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Cyclo Matrix::det() const {
    if (!is_square()) throw NotSquare();
    Matrix m = *this;
    Cyclo d(1);
    for (unsigned col = 0; col < cols_; ++col) {
        unsigned p = col;
        while (p < rows_ && m.at(p, col).is_zero()) ++p;
        if (p == rows_) return Cyclo(0);
        if (p != col) {
            for (unsigned j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Cyclo inv = m.at(col, col).inverse();
        for (unsigned i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Cyclo f = m.at(i, col) * inv;
            for (unsigned j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw NotSquare();
    const unsigned n = rows_;
    Matrix m = *this, inv = identity(n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned p = col;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) throw SingularMatrix();
        if (p != col)
            for (unsigned j = 0; j < n; ++j) {
                std::swap(m.at(p, j), m.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        Cyclo s = m.at(col, col).inverse();
        for (unsigned j = 0; j < n; ++j) {
            m.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Cyclo f = m.at(i, col);
            for (unsigned j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

bool Matrix::operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < o.a_[i]) return true;
        if (o.a_[i] < a_[i]) return false;
    }
    return false;
}

std::string Matrix::str() const {
    std::string out = "[";
    for (unsigned i = 0; i < rows_; ++i) {
        if (i) out += "; ";
        for (unsigned j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
    }
    return out + "]";
}

UniPoly charpoly(const Matrix& m) {
    if (!m.is_square()) throw NotSquare();
    const unsigned n = m.rows();
    std::vector<Cyclo> c(n + 1);
    c[n] = Cyclo(1);
    Matrix mk(n, n);
    for (unsigned k = 1; k <= n; ++k) {
        Matrix shift = mk;
        for (unsigned i = 0; i < n; ++i) shift.at(i, i) += c[n - k + 1];
        mk = m * shift;
        c[n - k] = -(mk.trace() / Cyclo(static_cast<long>(k)));
    }
    return UniPoly(std::move(c));
}

UniPoly det_one_minus_t(const Matrix& m) {
    UniPoly p = charpoly(m);
    const unsigned n = m.rows();
    std::vector<Cyclo> rev(n + 1);
    for (unsigned i = 0; i <= n; ++i) rev[n - i] = p.coeff(i);
    return UniPoly(std::move(rev));
}

namespace {

struct Echelon {
    Matrix m;                    // reduced row echelon form of the augmented input
    std::vector<unsigned> lead;  // pivot column of each nonzero row
};

Echelon rref(Matrix m) {
    const unsigned rows = m.rows(), cols = m.cols();
    Echelon e{std::move(m), {}};
    unsigned row = 0;
    for (unsigned col = 0; col < cols && row < rows; ++col) {
        unsigned p = row;
        while (p < rows && e.m.at(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != row)
            for (unsigned j = 0; j < cols; ++j) std::swap(e.m.at(p, j), e.m.at(row, j));
        Cyclo s = e.m.at(row, col).inverse();
        for (unsigned j = col; j < cols; ++j) e.m.at(row, j) *= s;
        for (unsigned i = 0; i < rows; ++i) {
            if (i == row || e.m.at(i, col).is_zero()) continue;
            Cyclo f = e.m.at(i, col);
            for (unsigned j = col; j < cols; ++j) e.m.at(i, j) -= f * e.m.at(row, j);
        }
        e.lead.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

unsigned rank(Matrix m) { return static_cast<unsigned>(rref(std::move(m)).lead.size()); }

LinearSolution solve_linear(const Matrix& a, const std::vector<Cyclo>& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length");
    const unsigned rows = a.rows(), cols = a.cols();
    Matrix aug(rows, cols + 1);
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cols) = b[i];
    }
    Echelon e = rref(std::move(aug));

    LinearSolution sol;
    std::vector<long> pivot_of_col(cols, -1);
    bool consistent = true;
    for (size_t r = 0; r < e.lead.size(); ++r) {
        if (e.lead[r] == cols) consistent = false;  // pivot in the rhs column
        else pivot_of_col[e.lead[r]] = static_cast<long>(r);
    }

    if (consistent) {
        std::vector<Cyclo> x(cols);
        for (unsigned c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) x[c] = e.m.at(static_cast<unsigned>(pivot_of_col[c]), cols);
        sol.particular = std::move(x);
    }

    for (unsigned fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<Cyclo> v(cols);
        v[fc] = Cyclo(1);
        for (unsigned c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = -e.m.at(static_cast<unsigned>(pivot_of_col[c]), fc);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace poisinv
