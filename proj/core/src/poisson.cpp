#include "poisinv/poisson.hpp"

#include <map>
#include <set>
#include <string>

#include "poisinv/errors.hpp"
#include "poisinv/matrix.hpp"

namespace poisinv {

PoissonStructure::PoissonStructure(unsigned nvars, std::vector<MultiPoly> table)
    : nvars_(nvars), table_(std::move(table)) {
    const std::size_t want = std::size_t(nvars) * (nvars ? nvars - 1 : 0) / 2;
    if (table_.size() != want)
        throw DimensionMismatch("bracket table needs " + std::to_string(want) + " entries, got " +
                                std::to_string(table_.size()));
    for (const auto& f : table_)
        if (f.nvars() != nvars_)
            throw VariableCountMismatch("bracket table entry uses " + std::to_string(f.nvars()) +
                                        " variables, structure has " + std::to_string(nvars_));
}

PoissonStructure PoissonStructure::zero(unsigned nvars) {
    std::vector<MultiPoly> tab(std::size_t(nvars) * (nvars ? nvars - 1 : 0) / 2,
                               MultiPoly(nvars));
    return PoissonStructure(nvars, std::move(tab));
}

PoissonStructure PoissonStructure::from_superpotential(const MultiPoly& potential) {
    if (potential.nvars() != 3)
        throw WrongVariableCount("superpotential must use exactly 3 variables, got " +
                                 std::to_string(potential.nvars()));
    if (!potential.is_zero() && potential.homogeneous_degree() != std::optional<unsigned>(3))
        throw NotHomogeneousDegree3();
    std::vector<MultiPoly> tab(3, MultiPoly(3));
    tab[0] = potential.derivative(2);   // {x1,x2}
    tab[1] = -potential.derivative(1);  // {x1,x3} = -{x3,x1}
    tab[2] = potential.derivative(0);   // {x2,x3}
    return PoissonStructure(3, std::move(tab));
}

unsigned PoissonStructure::pair_index(unsigned i, unsigned j) const {
    // i < j assumed; pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return i * (2 * nvars_ - i - 1) / 2 + (j - i - 1);
}

MultiPoly PoissonStructure::generator_bracket(unsigned i, unsigned j) const {
    if (i >= nvars_ || j >= nvars_)
        throw IndexOutOfRange("generator index " + std::to_string(std::max(i, j) + 1) +
                              " of " + std::to_string(nvars_));
    if (i == j) return MultiPoly(nvars_);
    if (i < j) return table_[pair_index(i, j)];
    return -table_[pair_index(j, i)];
}

bool PoissonStructure::is_quadratic() const {
    for (const auto& f : table_)
        if (!f.is_zero() && f.homogeneous_degree() != std::optional<unsigned>(2)) return false;
    return true;
}

MultiPoly PoissonStructure::bracket(const MultiPoly& f, const MultiPoly& g) const {
    if (f.nvars() != nvars_ || g.nvars() != nvars_)
        throw VariableCountMismatch("bracket arguments must use " + std::to_string(nvars_) +
                                    " variables");
    MultiPoly out(nvars_);
    for (unsigned i = 0; i < nvars_; ++i)
        for (unsigned j = i + 1; j < nvars_; ++j) {
            const MultiPoly& tij = table_[pair_index(i, j)];
            if (tij.is_zero()) continue;
            out += (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i)) * tij;
        }
    return out;
}

std::optional<JacobiFailure> PoissonStructure::verify_jacobi() const {
    for (unsigned i = 0; i < nvars_; ++i)
        for (unsigned j = i + 1; j < nvars_; ++j)
            for (unsigned k = j + 1; k < nvars_; ++k) {
                MultiPoly sum = bracket(MultiPoly::variable(nvars_, i), generator_bracket(j, k));
                sum += bracket(MultiPoly::variable(nvars_, j), generator_bracket(k, i));
                sum += bracket(MultiPoly::variable(nvars_, k), generator_bracket(i, j));
                if (!sum.is_zero()) return JacobiFailure{i, j, k, sum};
            }
    return std::nullopt;
}

MultiPoly PoissonStructure::modular_derivation(const MultiPoly& f) const {
    if (f.nvars() != nvars_)
        throw VariableCountMismatch("modular derivation argument must use " +
                                    std::to_string(nvars_) + " variables");
    MultiPoly out(nvars_);
    for (unsigned i = 0; i < nvars_; ++i)
        out += bracket(MultiPoly::variable(nvars_, i), f).derivative(i);
    return out;
}

bool PoissonStructure::is_unimodular() const {
    for (unsigned j = 0; j < nvars_; ++j)
        if (!modular_derivation(MultiPoly::variable(nvars_, j)).is_zero()) return false;
    return true;
}

std::optional<MultiPoly> solve_superpotential(const PoissonStructure& p) {
    if (p.nvars() != 3)
        throw WrongVariableCount("superpotential recovery needs exactly 3 variables, got " +
                                 std::to_string(p.nvars()));
    const MultiPoly g1 = p.generator_bracket(1, 2);  // dW/dx1 candidate
    const MultiPoly g2 = p.generator_bracket(2, 0);  // dW/dx2 candidate
    const MultiPoly g3 = p.generator_bracket(0, 1);  // dW/dx3 candidate

    // Euler's identity fixes each homogeneous piece:
    // (d+1) W_{d+1} = x1 g1_d + x2 g2_d + x3 g3_d
    std::set<unsigned> degrees;
    for (const MultiPoly* g : {&g1, &g2, &g3})
        for (const auto& [e, c] : g->terms()) degrees.insert(total_degree(e));

    MultiPoly w(3);
    for (unsigned d : degrees) {
        MultiPoly piece = MultiPoly::variable(3, 0) * g1.homogeneous_part(d) +
                          MultiPoly::variable(3, 1) * g2.homogeneous_part(d) +
                          MultiPoly::variable(3, 2) * g3.homogeneous_part(d);
        w += piece * Cyclo(make_rational(1, d + 1));
    }
    if (w.derivative(0) == g1 && w.derivative(1) == g2 && w.derivative(2) == g3) return w;
    return std::nullopt;
}

std::vector<unsigned> bracket_quotient_hilbert(const PoissonStructure& p, unsigned dmax) {
    const unsigned n = p.nvars();
    std::vector<const MultiPoly*> gens;
    for (const auto& f : p.table()) {
        if (f.is_zero()) continue;
        if (!f.homogeneous_degree())
            throw PoisError("bracket ideal dimensions need a homogeneous table");
        gens.push_back(&f);
    }

    std::vector<unsigned> dims;
    for (unsigned d = 0; d <= dmax; ++d) {
        const auto basis = monomials_of_degree(n, d);
        std::map<ExpVec, unsigned, GrlexDesc> col;
        for (unsigned c = 0; c < basis.size(); ++c) col[basis[c]] = c;

        std::vector<std::vector<Cyclo>> rows;
        for (const MultiPoly* g : gens) {
            unsigned e = *g->homogeneous_degree();
            if (e > d) continue;
            for (const auto& m : monomials_of_degree(n, d - e)) {
                MultiPoly prod = MultiPoly::monomial(n, m, Cyclo(1)) * *g;
                std::vector<Cyclo> row(basis.size(), Cyclo(0));
                for (const auto& [exp, coef] : prod.terms()) row[col.at(exp)] = coef;
                rows.push_back(std::move(row));
            }
        }
        unsigned span = rows.empty() ? 0 : rank(Matrix::from_rows(rows));
        dims.push_back(static_cast<unsigned>(basis.size()) - span);
    }
    return dims;
}

}  // namespace poisinv
