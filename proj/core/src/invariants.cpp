#include "poisinv/invariants.hpp"

#include <map>

#include "poisinv/errors.hpp"
#include "poisinv/matrix.hpp"
#include "poisinv/rational.hpp"

namespace poisinv {

namespace {

unsigned group_nvars(const MatrixGroup& g) {
    if (g.elements.empty()) throw PoisError("empty matrix group");
    return g.elements.front().nvars();
}

// the maps whose fixed spaces cut out the invariants; generators suffice
// when recorded, otherwise fall back to the full element list
const std::vector<GradedMap>& cutting_maps(const MatrixGroup& g) {
    return g.generators.empty() ? g.elements : g.generators;
}

std::vector<Cyclo> coeff_row(const MultiPoly& f, const std::vector<ExpVec>& basis) {
    std::vector<Cyclo> row;
    row.reserve(basis.size());
    for (const auto& e : basis) row.push_back(f.coeff(e));
    return row;
}

MultiPoly monic(MultiPoly f) {
    if (f.is_zero()) return f;
    return f * f.terms().begin()->second.inverse();
}

MultiPoly generator_product(const GeneratorSet& gens, const ExpVec& alpha, unsigned nvars) {
    MultiPoly prod = MultiPoly::constant(nvars, Cyclo(1));
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 0) prod *= gens.gens[i].pow(alpha[i]);
    return prod;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, unsigned nvars) {
    const size_t k = m.size();
    if (k == 0) return MultiPoly::constant(nvars, Cyclo(1));
    if (k == 1) return m[0][0];
    MultiPoly out(nvars);
    for (size_t c = 0; c < k; ++c) {
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(k - 1);
        for (size_t r = 1; r < k; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(k - 1);
            for (size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][c] * poly_det(minor, nvars);
        if (c % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

}  // namespace

MultiPoly reynolds(const MatrixGroup& g, const MultiPoly& f) {
    const unsigned n = group_nvars(g);
    if (f.nvars() != n)
        throw VariableCountMismatch("averaging needs the group's variable count");
    MultiPoly sum(n);
    for (const auto& e : g.elements) sum += e.apply(f);
    sum *= Cyclo(make_rational(1, static_cast<long>(g.elements.size())));
    return sum;
}

InvariantBasis invariant_basis(const MatrixGroup& g, unsigned degree) {
    const unsigned n = group_nvars(g);
    const std::vector<ExpVec> monos = monomials_of_degree(n, degree);
    const unsigned dim = static_cast<unsigned>(monos.size());
    std::map<ExpVec, unsigned, GrlexDesc> index;
    for (unsigned c = 0; c < dim; ++c) index.emplace(monos[c], c);

    const auto& maps = cutting_maps(g);
    Matrix eqs(static_cast<unsigned>(maps.size()) * dim, dim);
    for (unsigned mi = 0; mi < maps.size(); ++mi) {
        const auto images = maps[mi].images();
        for (unsigned c = 0; c < dim; ++c) {
            MultiPoly img = MultiPoly::monomial(n, monos[c], Cyclo(1)).substitute(images);
            for (const auto& [e, coef] : img.terms())
                eqs.at(mi * dim + index.at(e), c) += coef;
            eqs.at(mi * dim + c, c) -= Cyclo(1);
        }
    }

    InvariantBasis out;
    out.degree = degree;
    for (const auto& v : solve_linear(eqs, std::vector<Cyclo>(eqs.rows())).kernel) {
        MultiPoly f(n);
        for (unsigned c = 0; c < dim; ++c)
            if (!v[c].is_zero()) f += MultiPoly::monomial(n, monos[c], v[c]);
        out.basis.push_back(monic(std::move(f)));
    }
    return out;
}

GeneratorSet find_generators(const MatrixGroup& g, unsigned dmax) {
    const unsigned n = group_nvars(g);
    GeneratorSet out;
    for (unsigned d = 1; d <= dmax; ++d) {
        const auto fixed = invariant_basis(g, d);
        if (fixed.basis.empty()) continue;
        const std::vector<ExpVec> monos = monomials_of_degree(n, d);

        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Cyclo>> span;
            for (const auto& alpha : monomials_of_weighted_degree(out.degrees, d))
                span.push_back(coeff_row(generator_product(out, alpha, n), monos));
            const unsigned base_rank =
                span.empty() ? 0 : rank(Matrix::from_rows(span));
            for (const auto& b : fixed.basis) {
                auto trial = span;
                trial.push_back(coeff_row(b, monos));
                if (rank(Matrix::from_rows(trial)) > base_rank) {
                    out.gens.push_back(b);
                    out.degrees.push_back(d);
                    grew = true;
                    break;
                }
            }
        }
    }

    if (out.gens.size() == n && n > 0) {
        std::vector<std::vector<MultiPoly>> jac(n, std::vector<MultiPoly>(n, MultiPoly(n)));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) jac[i][j] = out.gens[i].derivative(j);
        out.jacobian_independent = !poly_det(jac, n).is_zero();
    }
    return out;
}

std::optional<MultiPoly> express_in_generators(const MultiPoly& f, const GeneratorSet& gens) {
    const unsigned k = static_cast<unsigned>(gens.gens.size());
    if (gens.degrees.size() != gens.gens.size())
        throw DimensionMismatch("one degree per generator");
    for (size_t i = 0; i < gens.gens.size(); ++i) {
        if (gens.gens[i].nvars() != f.nvars())
            throw VariableCountMismatch("generators and argument share variables");
        if (gens.gens[i].homogeneous_degree() != gens.degrees[i])
            throw PoisError("generator is not homogeneous of its recorded degree");
    }
    if (f.is_zero()) return MultiPoly(k);
    const auto fd = f.homogeneous_degree();
    if (!fd) throw PoisError("expression in generators needs a homogeneous input");

    const auto alphas = monomials_of_weighted_degree(gens.degrees, *fd);
    if (alphas.empty()) return std::nullopt;
    const auto monos = monomials_of_degree(f.nvars(), *fd);

    Matrix a(static_cast<unsigned>(monos.size()), static_cast<unsigned>(alphas.size()));
    for (unsigned c = 0; c < alphas.size(); ++c) {
        const MultiPoly prod = generator_product(gens, alphas[c], f.nvars());
        for (unsigned r = 0; r < monos.size(); ++r) a.at(r, c) = prod.coeff(monos[r]);
    }
    std::vector<Cyclo> rhs;
    rhs.reserve(monos.size());
    for (const auto& m : monos) rhs.push_back(f.coeff(m));

    const auto sol = solve_linear(a, rhs);
    if (!sol.particular) return std::nullopt;
    MultiPoly out(k);
    for (unsigned c = 0; c < alphas.size(); ++c)
        if (!(*sol.particular)[c].is_zero())
            out += MultiPoly::monomial(k, alphas[c], (*sol.particular)[c]);
    return out;
}

InducedStructure induced_bracket_table(const PoissonStructure& p, const GeneratorSet& gens) {
    const unsigned k = static_cast<unsigned>(gens.gens.size());
    for (const auto& y : gens.gens)
        if (y.nvars() != p.nvars())
            throw VariableCountMismatch("generators live in the structure's variables");

    std::vector<MultiPoly> table;
    std::vector<MultiPoly> raw;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = i + 1; j < k; ++j) {
            MultiPoly b = p.bracket(gens.gens[i], gens.gens[j]);
            auto expr = express_in_generators(b, gens);
            if (!expr) throw NotClosedUnderBracket(i, j);
            table.push_back(std::move(*expr));
            raw.push_back(std::move(b));
        }
    }
    return InducedStructure{PoissonStructure(k, std::move(table)), std::move(raw)};
}

}  // namespace poisinv
