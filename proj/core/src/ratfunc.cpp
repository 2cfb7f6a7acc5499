#include "poisinv/ratfunc.hpp"

#include <map>
#include <utility>

#include "poisinv/errors.hpp"

namespace poisinv {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly(Cyclo(1));
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(std::move(num_), g).first;
        den_ = divmod(std::move(den_), g).first;
    }
    Cyclo c0 = den_.coeff(0);
    Cyclo scale = c0.is_zero() ? den_.leading().inverse() : c0.inverse();
    num_ *= scale;
    den_ *= scale;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.num_.is_zero()) throw DivisionByZero();
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const Cyclo& s) {
    num_ *= s;
    normalize();
    return *this;
}

std::vector<Cyclo> RatFunc::taylor_coeffs(unsigned dmax) const {
    Cyclo d0 = den_.coeff(0);
    if (d0.is_zero()) throw PoleAtZero();
    Cyclo inv = d0.inverse();
    std::vector<Cyclo> s(dmax + 1);
    for (unsigned k = 0; k <= dmax; ++k) {
        Cyclo acc = num_.coeff(k);
        for (unsigned j = 1; j <= k; ++j) acc -= den_.coeff(j) * s[k - j];
        s[k] = acc * inv;
    }
    return s;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    std::string n = num_.str(var);
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + " / (" + den_.str(var) + ")";
}

namespace {

// 1 - t^k
UniPoly one_minus_tk(unsigned k) {
    std::vector<Cyclo> c(k + 1);
    c[0] = Cyclo(1);
    c[k] = Cyclo(-1);
    return UniPoly(std::move(c));
}

}  // namespace

std::string RatFunc::factored_str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);

    std::map<unsigned, unsigned> factors;
    UniPoly rem = den_;
    for (unsigned k = static_cast<unsigned>(rem.degree()); k >= 1 && rem.degree() > 0; --k) {
        while (rem.degree() >= static_cast<long>(k)) {
            auto [q, r] = divmod(rem, one_minus_tk(k));
            if (!r.is_zero()) break;
            ++factors[k];
            rem = std::move(q);
        }
    }

    std::string den;
    for (const auto& [k, e] : factors) {
        if (!den.empty()) den += "*";
        den += "(1-" + var;
        if (k > 1) den += "^" + std::to_string(k);
        den += ")";
        if (e > 1) den += "^" + std::to_string(e);
    }
    if (!rem.is_one()) {
        std::string r = rem.str(var);
        if (!den.empty()) den += "*";
        den += "(" + r + ")";
    }

    std::string n = num_.str(var);
    if (num_.degree() > 0 || n.find(' ') != std::string::npos) n = "(" + n + ")";
    return n + "/(" + den + ")";
}

}  // namespace poisinv
