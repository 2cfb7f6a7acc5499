#include "poisinv/multipoly.hpp"

#include <utility>

#include "poisinv/errors.hpp"

namespace poisinv {

MultiPoly MultiPoly::constant(unsigned nvars, const Cyclo& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw IndexOutOfRange("variable index " + std::to_string(i + 1));
    ExpVec e(nvars);
    e[i] = 1;
    MultiPoly p(nvars);
    p.terms_.emplace(std::move(e), Cyclo(1));
    return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, ExpVec e, const Cyclo& c) {
    if (e.size() != nvars) throw VariableCountMismatch("monomial exponent length");
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

Cyclo MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclo() : it->second;
}

long MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(total_degree(terms_.begin()->first));
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

const Cyclo& MultiPoly::constant_value() const {
    static const Cyclo zero;
    if (terms_.empty()) return zero;
    if (!is_constant()) throw PoisError("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

MultiPoly MultiPoly::homogeneous_part(unsigned d) const {
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) p.terms_.emplace(e, c);
    return p;
}

void MultiPoly::add_term(const ExpVec& e, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw VariableCountMismatch("polynomial addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw VariableCountMismatch("polynomial subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw VariableCountMismatch("polynomial multiplication");
    MultiPoly prod(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            prod.add_term(e, ca * cb);
        }
    return *this = std::move(prod);
}

MultiPoly& MultiPoly::operator*=(const Cyclo& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(nvars_, Cyclo(1));
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
    if (var >= nvars_) throw IndexOutOfRange("derivative variable " + std::to_string(var + 1));
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        --d[var];
        p.add_term(d, c * Cyclo(static_cast<long>(e[var])));
    }
    return p;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw VariableCountMismatch("substitution image count");
    unsigned m = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != m) throw VariableCountMismatch("substitution images disagree");
    MultiPoly acc(m);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(m, c);
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= images[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

Cyclo MultiPoly::eval(const std::vector<Cyclo>& point) const {
    if (point.size() != nvars_) throw VariableCountMismatch("evaluation point length");
    Cyclo acc;
    for (const auto& [e, c] : terms_) {
        Cyclo t = c;
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

bool MultiPoly::involves(unsigned var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto a = terms_.begin(), b = o.terms_.begin();
    GrlexDesc before;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (before(a->first, b->first)) return true;
        if (before(b->first, a->first)) return false;
        if (a->second < b->second) return true;
        if (b->second < a->second) return false;
    }
    return a == terms_.end() && b != o.terms_.end();
}

std::vector<std::string> default_names(const std::string& prefix, unsigned nvars) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= nvars; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

namespace {

std::string monomial_str(const ExpVec& e, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

// one rendered term plus whether it should be glued with " - "
std::pair<std::string, bool> term_str(const ExpVec& e, const Cyclo& c,
                                      const std::vector<std::string>& names) {
    std::string mono = monomial_str(e, names);
    if (mono.empty()) {
        std::string s = c.str();
        if (c.is_rational()) {
            bool neg = c.rational_value() < 0;
            return {neg ? s.substr(1) : s, neg};
        }
        return {"(" + s + ")", false};
    }
    if (c.is_one()) return {mono, false};
    if (c == Cyclo(-1)) return {mono, true};
    if (c.is_rational()) {
        bool neg = c.rational_value() < 0;
        std::string s = rat_str(neg ? Rational(-c.rational_value()) : c.rational_value());
        return {s + "*" + mono, neg};
    }
    std::string s = c.str();
    bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
    if (multi) return {"(" + s + ")*" + mono, false};
    if (s[0] == '-') return {s.substr(1) + "*" + mono, true};
    return {s + "*" + mono, false};
}

}  // namespace

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw VariableCountMismatch("name list length");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        auto [body, neg] = term_str(e, c, names);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::string MultiPoly::str(const std::string& prefix) const {
    return str(default_names(prefix, nvars_));
}

std::vector<ExpVec> monomials_of_degree(unsigned nvars, unsigned degree) {
    std::vector<ExpVec> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    ExpVec cur(nvars, 0);
    auto rec = [&](auto&& self, unsigned i, unsigned rem) -> void {
        if (i + 1 == nvars) {
            cur[i] = rem;
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        // descending first exponent gives GrlexDesc order within a fixed degree
        for (unsigned e = rem + 1; e-- > 0;) {
            cur[i] = e;
            self(self, i + 1, rem - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<ExpVec> monomials_of_weighted_degree(const std::vector<unsigned>& weights,
                                                 unsigned degree) {
    for (unsigned w : weights)
        if (w == 0) throw PoisError("weighted monomial enumeration needs positive weights");
    std::vector<ExpVec> out;
    unsigned n = static_cast<unsigned>(weights.size());
    if (n == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    ExpVec cur(n, 0);
    auto rec = [&](auto&& self, unsigned i, unsigned rem) -> void {
        if (i == n) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e * weights[i] <= rem; ++e) {
            cur[i] = e;
            self(self, i + 1, rem - e * weights[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrlexDesc{});
    return out;
}

}  // namespace poisinv
