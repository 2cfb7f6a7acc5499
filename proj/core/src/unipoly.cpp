#include "poisinv/unipoly.hpp"

#include <utility>

#include "poisinv/errors.hpp"

namespace poisinv {

UniPoly::UniPoly(const Cyclo& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::t() { return UniPoly(std::vector<Cyclo>{Cyclo(0), Cyclo(1)}); }

const Cyclo& UniPoly::leading() const {
    if (c_.empty()) throw PoisError("zero polynomial has no leading coefficient");
    return c_.back();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Cyclo> prod(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Cyclo& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc{Cyclo(1)};
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

Cyclo UniPoly::eval(const Cyclo& x) const {
    Cyclo acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        const Cyclo& c = c_[k];
        std::string body;
        bool neg = false;
        std::string s = c.str();
        bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
        if (k == 0) {
            if (multi)
                body = "(" + s + ")";
            else if (s[0] == '-') {
                neg = true;
                body = s.substr(1);
            } else
                body = s;
        } else {
            std::string tv = var;
            if (k > 1) tv += "^" + std::to_string(k);
            if (c.is_one())
                body = tv;
            else if (c == Cyclo(-1)) {
                neg = true;
                body = tv;
            } else if (multi)
                body = "(" + s + ")*" + tv;
            else if (s[0] == '-') {
                neg = true;
                body = s.substr(1) + "*" + tv;
            } else
                body = s + "*" + tv;
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(UniPoly a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<Cyclo> q;
    if (a.degree() >= b.degree()) q.resize(a.degree() - b.degree() + 1);
    while (!a.is_zero() && a.degree() >= b.degree()) {
        size_t shift = a.degree() - b.degree();
        Cyclo c = a.leading() / b.leading();
        q[shift] = c;
        std::vector<Cyclo> sub(shift + b.degree() + 1);
        for (long j = 0; j <= b.degree(); ++j) sub[shift + j] = c * b.coeff(j);
        a -= UniPoly(std::move(sub));
    }
    return {UniPoly(std::move(q)), std::move(a)};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a *= a.leading().inverse();
    return a;
}

}  // namespace poisinv
