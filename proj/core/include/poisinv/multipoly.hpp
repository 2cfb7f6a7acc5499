#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poisinv/cyclo.hpp"

namespace poisinv {

using ExpVec = std::vector<unsigned>;

inline unsigned total_degree(const ExpVec& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

// graded lexicographic with x1 > x2 > ..., highest term first; this is the
// iteration, printing, and tie-breaking order used everywhere
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Cyclo, GrlexDesc>;

    explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Cyclo& c);
    static MultiPoly variable(unsigned nvars, unsigned i);  // x_{i+1}, 0-based
    static MultiPoly monomial(unsigned nvars, ExpVec e, const Cyclo& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Cyclo coeff(const ExpVec& e) const;

    // -1 for the zero polynomial
    long degree() const;
    bool is_constant() const;
    const Cyclo& constant_value() const;  // requires is_constant()
    // degree if every term has the same total degree (zero counts as any)
    std::optional<unsigned> homogeneous_degree() const;
    // terms of exact total degree d
    MultiPoly homogeneous_part(unsigned d) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Cyclo& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Cyclo& c) { return a *= c; }
    friend MultiPoly operator*(const Cyclo& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(unsigned e) const;

    MultiPoly derivative(unsigned var) const;
    // substitute images[i] for x_{i+1}; all images share a variable count,
    // which becomes the variable count of the result
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    Cyclo eval(const std::vector<Cyclo>& point) const;

    // true if any term uses x_{var+1}
    bool involves(unsigned var) const;

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    // any total order; used to deduplicate equation sets
    bool operator<(const MultiPoly& o) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str(const std::string& prefix = "x") const;

private:
    unsigned nvars_;
    TermMap terms_;

    void add_term(const ExpVec& e, const Cyclo& c);
};

std::vector<std::string> default_names(const std::string& prefix, unsigned nvars);

// all exponent vectors of total degree d, listed in GrlexDesc order
std::vector<ExpVec> monomials_of_degree(unsigned nvars, unsigned degree);

// all exponent vectors e with sum e[i]*weights[i] == degree, GrlexDesc order;
// every weight must be positive
std::vector<ExpVec> monomials_of_weighted_degree(const std::vector<unsigned>& weights,
                                                 unsigned degree);

}  // namespace poisinv
