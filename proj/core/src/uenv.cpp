#include "poisinv/uenv.hpp"

#include <set>

#include "poisinv/errors.hpp"
#include "poisinv/invariants.hpp"
#include "poisinv/matrix.hpp"

namespace poisinv {

namespace {

// letters of an x-monomial, ascending
Word x_letters(const ExpVec& e) {
    Word w;
    for (unsigned v = 0; v < e.size(); ++v)
        for (unsigned rep = 0; rep < e[v]; ++rep) w.push_back(v);
    return w;
}

// the single variable of a linear term
unsigned linear_letter(const ExpVec& e) {
    for (unsigned v = 0; v < e.size(); ++v)
        if (e[v]) return v;
    throw PoisError("expected a linear term");
}

unsigned long long choose(unsigned n, unsigned k) {
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<std::string> envelope_names(unsigned n) {
    std::vector<std::string> names = default_names("x", n);
    const auto ys = default_names("y", n);
    names.insert(names.end(), ys.begin(), ys.end());
    return names;
}

Envelope::Envelope(PoissonStructure p) : p_(std::move(p)) {
    if (!p_.is_quadratic()) throw NotQuadratic();
}

std::optional<WordCombo> Envelope::rewrite_at(const Word& w, size_t t) const {
    const unsigned n = nvars();
    const unsigned a = w[t], b = w[t + 1];
    auto with_pair = [&](unsigned u, unsigned v) {
        Word out(w);
        out[t] = u;
        out[t + 1] = v;
        return out;
    };
    if (a < n && b < n) {
        if (a <= b) return std::nullopt;
        return WordCombo{{Cyclo(1), with_pair(b, a)}};
    }
    if (a < n) return std::nullopt;  // x before y is ordered
    if (b < n) {
        // y_i x_j -> x_j y_i + {x_i, x_j}
        WordCombo out{{Cyclo(1), with_pair(b, a)}};
        const MultiPoly br = p_.generator_bracket(a - n, b);
        for (const auto& [e, c] : br.terms()) {
            Word xw(w.begin(), w.begin() + static_cast<long>(t));
            const Word mid = x_letters(e);
            xw.insert(xw.end(), mid.begin(), mid.end());
            xw.insert(xw.end(), w.begin() + static_cast<long>(t) + 2, w.end());
            out.emplace_back(c, std::move(xw));
        }
        return out;
    }
    if (a <= b) return std::nullopt;
    // y_j y_i -> y_i y_j - sum_k d{x_i,x_j}/dx_k y_k
    const unsigned j = a - n, i = b - n;
    WordCombo out{{Cyclo(1), with_pair(b, a)}};
    const MultiPoly br = p_.generator_bracket(i, j);
    for (unsigned k = 0; k < n; ++k) {
        const MultiPoly dk = br.derivative(k);
        for (const auto& [e, c] : dk.terms())
            out.emplace_back(-c, with_pair(linear_letter(e), n + k));
    }
    return out;
}

MultiPoly Envelope::normal_form(const Word& w) const {
    const unsigned n2 = 2 * nvars();
    for (unsigned letter : w)
        if (letter >= n2) throw IndexOutOfRange("letter " + std::to_string(letter + 1));
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;

    std::optional<WordCombo> expansion;
    for (size_t t = 0; t + 1 < w.size() && !expansion; ++t) expansion = rewrite_at(w, t);

    MultiPoly out(n2);
    if (!expansion) {
        ExpVec e(n2, 0);
        for (unsigned letter : w) ++e[letter];
        out = MultiPoly::monomial(n2, e, Cyclo(1));
    } else {
        for (const auto& [c, w2] : *expansion) out += c * normal_form(w2);
    }
    cache_.emplace(w, out);
    return out;
}

MultiPoly Envelope::normal_form(const WordCombo& combo) const {
    MultiPoly out(2 * nvars());
    for (const auto& [c, w] : combo) out += c * normal_form(w);
    return out;
}

Word Envelope::monomial_word(const ExpVec& exps) { return x_letters(exps); }

std::vector<WordCombo> Envelope::relations() const {
    const unsigned n = nvars();
    std::vector<WordCombo> rels;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            rels.push_back({{Cyclo(1), {i, j}}, {Cyclo(-1), {j, i}}});
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            WordCombo r{{Cyclo(1), {n + i, j}}, {Cyclo(-1), {j, n + i}}};
            const MultiPoly br = p_.generator_bracket(i, j);
            for (const auto& [e, c] : br.terms()) r.emplace_back(-c, x_letters(e));
            rels.push_back(std::move(r));
        }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            WordCombo r{{Cyclo(1), {n + i, n + j}}, {Cyclo(-1), {n + j, n + i}}};
            const MultiPoly br = p_.generator_bracket(i, j);
            for (unsigned k = 0; k < n; ++k) {
                const MultiPoly dk = br.derivative(k);
                for (const auto& [e, c] : dk.terms())
                    r.push_back({-c, {linear_letter(e), n + k}});
            }
            rels.push_back(std::move(r));
        }
    return rels;
}

MultiPoly Envelope::apply_induced(const GradedMap& block, const WordCombo& combo) const {
    const unsigned n2 = 2 * nvars();
    if (block.nvars() != n2)
        throw VariableCountMismatch("induced maps act on " + std::to_string(n2) + " letters");
    const Matrix& m = block.matrix();
    MultiPoly out(n2);
    for (const auto& [c, w] : combo) {
        std::map<Word, Cyclo> terms{{Word{}, c}};
        for (unsigned letter : w) {
            std::map<Word, Cyclo> next;
            for (const auto& [prefix, pc] : terms)
                for (unsigned l2 = 0; l2 < n2; ++l2) {
                    const Cyclo& coef = m.at(letter, l2);
                    if (coef.is_zero()) continue;
                    Word nw = prefix;
                    nw.push_back(l2);
                    next[std::move(nw)] += pc * coef;
                }
            terms = std::move(next);
        }
        for (const auto& [word, coef] : terms)
            if (!coef.is_zero()) out += coef * normal_form(word);
    }
    return out;
}

PbwReport Envelope::verify_pbw_consistency(unsigned dmax) const {
    const unsigned n2 = 2 * nvars();

    // every doubly reducible length-3 word must close its rewriting diamond
    Word w(3);
    for (w[0] = 0; w[0] < n2; ++w[0])
        for (w[1] = 0; w[1] < n2; ++w[1])
            for (w[2] = 0; w[2] < n2; ++w[2]) {
                const auto left = rewrite_at(w, 0);
                const auto right = rewrite_at(w, 1);
                if (!left || !right) continue;
                const MultiPoly lnf = normal_form(*left);
                const MultiPoly rnf = normal_form(*right);
                if (!(lnf == rnf)) return {false, w, lnf, rnf};
            }

    // rewriting preserves degree and reaches exactly the ordered monomials
    for (unsigned d = 0; d <= dmax; ++d) {
        std::set<ExpVec> seen;
        Word cur(d, 0);
        for (;;) {
            const MultiPoly nf = normal_form(cur);
            if (nf.homogeneous_degree() != d || (d > 0 && nf.is_zero()))
                return {false, cur, nf, MultiPoly(n2)};
            for (const auto& [e, c] : nf.terms()) seen.insert(e);
            // next word in the odometer
            size_t t = d;
            while (t > 0 && cur[t - 1] + 1 == n2) cur[--t] = 0;
            if (t == 0) break;
            ++cur[t - 1];
        }
        if (seen.size() != choose(n2 - 1 + d, d))
            return {false, Word{}, MultiPoly(n2), MultiPoly(n2)};
    }
    PbwReport ok;
    return ok;
}

InducedMap induce(const GradedMap& phi) {
    const unsigned n = phi.nvars();
    Matrix big(2 * n, 2 * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            big.at(i, j) = phi.matrix().at(i, j);
            big.at(n + i, n + j) = phi.matrix().at(i, j);
        }
    return InducedMap{GradedMap{big}, n};
}

bool check_induced_hom(const PoissonStructure& p, const GradedMap& a, const GradedMap& b) {
    if (a.nvars() != p.nvars() || b.nvars() != p.nvars())
        throw VariableCountMismatch("maps must act on the structure's variables");
    if (!(induce(a).map * induce(b).map == induce(a * b).map)) return false;
    const Envelope env(p);
    const auto rels = env.relations();
    for (const GradedMap& phi : {a, b})
        for (const auto& rel : rels)
            if (!env.apply_induced(induce(phi).map, rel).is_zero()) return false;
    return true;
}

bool eigen_profile_doubling(const GradedMap& phi) {
    const UniPoly cp = charpoly(phi.matrix());
    return charpoly(induce(phi).map.matrix()) == cp * cp;
}

QuasiReflectionKind quasi_reflection_screen(const InducedMap& psi, unsigned bound) {
    const Matrix& m = psi.map.matrix();
    const unsigned dim = m.rows();

    const Cyclo lambda = m.trace() - Cyclo(static_cast<long>(dim) - 1);
    if (!lambda.is_one()) {
        const auto ord = order_as_root_of_unity(lambda, bound);
        if (ord && *ord != 1) {
            const Matrix id = Matrix::identity(dim);
            if (((m - id) * (m - lambda * id)).is_zero())
                return QuasiReflectionKind::classical;
        }
    }

    if (order_of(psi.map, bound) == 4u) {
        const UniPoly want =
            UniPoly(std::vector<Cyclo>{Cyclo(-1), Cyclo(1)}).pow(dim - 2) *
            UniPoly(std::vector<Cyclo>{Cyclo(1), Cyclo(0), Cyclo(1)});
        if (charpoly(m) == want) return QuasiReflectionKind::mystic;
    }
    return QuasiReflectionKind::none;
}

RatFunc trace_series_env(const GradedMap& phi) {
    const UniPoly den = det_one_minus_t(phi.matrix());
    return RatFunc::one_over(den * den);
}

Cyclo hdet_env(const GradedMap& phi, unsigned bound) {
    if (!order_of(phi, bound)) throw InfiniteOrder();
    const Cyclo hd = phi.matrix().det() * phi.matrix().det();
    if (!(trace_series_env(phi).den().leading() == hd))
        throw PoisError("trace series denominator contradicts the determinant");
    return hd;
}

std::vector<unsigned> env_invariant_dims(const PoissonStructure& p, const MatrixGroup& g,
                                         unsigned dmax) {
    for (const auto& e : g.elements)
        if (!is_poisson_automorphism(p, e))
            throw PoisError("group element does not preserve the bracket");
    MatrixGroup lifted;
    for (const auto& e : g.elements) lifted.elements.push_back(induce(e).map);
    for (const auto& e : g.generators) lifted.generators.push_back(induce(e).map);
    std::vector<unsigned> dims;
    dims.reserve(dmax + 1);
    for (unsigned d = 0; d <= dmax; ++d)
        dims.push_back(static_cast<unsigned>(invariant_basis(lifted, d).basis.size()));
    return dims;
}

}  // namespace poisinv
