#include "poisinv/autgrp.hpp"

#include <deque>
#include <map>
#include <set>

#include "poisinv/errors.hpp"

namespace poisinv {

GradedMap::GradedMap(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) throw NotSquare();
    if (mat_.det().is_zero()) throw SingularMatrix();
}

std::vector<MultiPoly> GradedMap::images() const {
    const unsigned n = nvars();
    std::vector<MultiPoly> out(n, MultiPoly(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            const Cyclo& c = mat_.at(i, j);
            if (!c.is_zero()) out[i] += MultiPoly::variable(n, j) * c;
        }
    return out;
}

MultiPoly GradedMap::apply(const MultiPoly& f) const {
    return f.substitute(images());
}

AutomorphismCheck is_poisson_automorphism(const PoissonStructure& p, const GradedMap& phi) {
    if (phi.nvars() != p.nvars())
        throw VariableCountMismatch("map acts on " + std::to_string(phi.nvars()) +
                                    " variables, structure has " + std::to_string(p.nvars()));
    const auto imgs = phi.images();
    for (unsigned i = 0; i < p.nvars(); ++i)
        for (unsigned j = i + 1; j < p.nvars(); ++j) {
            MultiPoly lhs = p.generator_bracket(i, j).substitute(imgs);
            MultiPoly rhs = p.bracket(imgs[i], imgs[j]);
            if (lhs != rhs) return {false, i, j};
        }
    return {true, 0, 0};
}

std::vector<std::string> constraint_symbols(unsigned nvars) {
    std::vector<std::string> names;
    names.reserve(std::size_t(nvars) * nvars);
    for (unsigned i = 1; i <= nvars; ++i)
        for (unsigned j = 1; j <= nvars; ++j)
            names.push_back("a" + std::to_string(i) + std::to_string(j));
    return names;
}

std::vector<MultiPoly> emit_constraint_system(const PoissonStructure& p) {
    if (!p.is_quadratic()) throw NotQuadratic();
    const unsigned n = p.nvars();
    const unsigned na = n * n;      // symbolic entries first
    const unsigned big = na + n;    // then the ring variables

    auto avar = [&](unsigned r, unsigned c) { return MultiPoly::variable(big, r * n + c); };

    // embed a table entry into the combined ring
    auto embed = [&](const MultiPoly& f) {
        MultiPoly out(big);
        for (const auto& [e, c] : f.terms()) {
            ExpVec be(big, 0);
            for (unsigned v = 0; v < n; ++v) be[na + v] = e[v];
            out += MultiPoly::monomial(big, be, c);
        }
        return out;
    };

    // substitution images: symbols stay put, x_r maps to sum_c a_rc x_c
    std::vector<MultiPoly> images;
    images.reserve(big);
    for (unsigned s = 0; s < na; ++s) images.push_back(MultiPoly::variable(big, s));
    for (unsigned r = 0; r < n; ++r) {
        MultiPoly img(big);
        for (unsigned c = 0; c < n; ++c) img += avar(r, c) * MultiPoly::variable(big, na + c);
        images.push_back(img);
    }

    std::set<MultiPoly> eqs;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            MultiPoly lhs = embed(p.generator_bracket(i, j)).substitute(images);
            MultiPoly rhs(big);
            for (unsigned k = 0; k < n; ++k)
                for (unsigned l = k + 1; l < n; ++l) {
                    MultiPoly coef = avar(i, k) * avar(j, l) - avar(i, l) * avar(j, k);
                    rhs += coef * embed(p.generator_bracket(k, l));
                }
            MultiPoly diff = lhs - rhs;

            // bucket by ring monomial, keep the symbol part
            std::map<ExpVec, MultiPoly, GrlexDesc> buckets;
            for (const auto& [e, c] : diff.terms()) {
                ExpVec xpart(e.begin() + na, e.end());
                ExpVec apart(na, 0);
                for (unsigned s = 0; s < na; ++s) apart[s] = e[s];
                auto it = buckets.try_emplace(std::move(xpart), MultiPoly(na)).first;
                it->second += MultiPoly::monomial(na, apart, c);
            }
            for (auto& [xe, eq] : buckets) {
                if (eq.is_zero()) continue;
                eqs.insert(eq * eq.terms().begin()->second.inverse());
            }
        }
    return {eqs.begin(), eqs.end()};
}

std::optional<unsigned> order_of(const GradedMap& phi, unsigned bound) {
    const Matrix& m = phi.matrix();
    Matrix cur = m;
    for (unsigned k = 1; k <= bound; ++k) {
        if (cur.is_identity()) return k;
        cur = cur * m;
    }
    return std::nullopt;
}

ReflectionReport classify_reflection(const PoissonStructure& p, const GradedMap& phi,
                                     unsigned bound) {
    ReflectionReport rep;
    const Matrix& m = phi.matrix();
    const unsigned n = m.rows();
    rep.order = order_of(phi, bound);

    if (rep.order) {
        // finite order makes the map diagonalizable with eigenvalues among
        // the roots of unity of dividing order
        UniPoly rem = charpoly(m);
        for (unsigned k = 0; k < *rep.order; ++k) {
            Cyclo lam = Cyclo::root_of_unity(k, *rep.order);
            unsigned mult = 0;
            while (rem.degree() >= 1 && rem.eval(lam).is_zero()) {
                rem = divmod(rem, UniPoly(std::vector<Cyclo>{-lam, Cyclo(1)})).first;
                ++mult;
            }
            if (mult) rep.eigen_profile.emplace_back(lam, mult);
        }
    }

    Cyclo lambda = m.trace() - Cyclo(static_cast<long>(n) - 1);
    auto rou = order_as_root_of_unity(lambda, bound);
    if (!rou || *rou == 1) return rep;
    Matrix id = Matrix::identity(n);
    if (!((m - id) * (m - lambda * id)).is_zero()) return rep;
    if (!is_poisson_automorphism(p, phi).pass) return rep;
    rep.is_reflection = true;
    rep.xi = lambda;
    if (!rep.order) rep.order = rou;
    return rep;
}

MatrixGroup group_closure(const std::vector<GradedMap>& gens, unsigned cap) {
    if (gens.empty()) throw PoisError("group closure needs at least one generator");
    const unsigned n = gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != n) throw DimensionMismatch("group generators of mixed sizes");

    GradedMap id{Matrix::identity(n)};
    std::set<Matrix> seen{id.matrix()};
    std::vector<GradedMap> elements{id};
    std::deque<GradedMap> frontier{id};
    while (!frontier.empty()) {
        GradedMap cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            GradedMap next = cur * g;
            if (!seen.insert(next.matrix()).second) continue;
            if (elements.size() >= cap) throw ClosureCapExceeded(cap);
            elements.push_back(next);
            frontier.push_back(next);
        }
    }
    return MatrixGroup{std::move(elements), gens};
}

RatFunc trace_series(const GradedMap& phi) {
    return RatFunc::one_over(det_one_minus_t(phi.matrix()));
}

RatFunc molien(const MatrixGroup& g) {
    RatFunc sum;
    for (const auto& e : g.elements) sum += trace_series(e);
    sum *= Cyclo(make_rational(1, static_cast<long>(g.size())));
    return sum;
}

}  // namespace poisinv
