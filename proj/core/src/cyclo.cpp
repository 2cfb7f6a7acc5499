#include "poisinv/cyclo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "poisinv/errors.hpp"

namespace poisinv {

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// quotient a / b in Z[x], b monic; callers only divide exactly
std::vector<BigInt> exact_div(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const size_t db = b.size() - 1;
    std::vector<BigInt> q(a.size() - db);
    for (size_t k = a.size(); k-- > db;) {
        BigInt c = a[k];
        if (c == 0) continue;
        q[k - db] = c;
        for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    return q;
}

// residue of a polynomial (ascending coefficients) modulo Phi_N, length phi(N)
std::vector<Rational> reduce_mod_phi(std::vector<Rational> c, unsigned N) {
    const auto& phi = cyclotomic_poly(N);
    const size_t m = phi.size() - 1;
    if (c.size() > m) {
        for (size_t k = c.size(); k-- > m;) {
            Rational q = c[k];
            if (q == 0) continue;
            for (size_t j = 0; j < m; ++j) c[k - m + j] -= q * Rational(phi[j]);
            c[k] = 0;
        }
    }
    c.resize(m);
    return c;
}

// coefficients of an element of Q(zeta_d) rewritten in Q(zeta_N), d | N
std::vector<Rational> embed_coords(const std::vector<Rational>& c, unsigned d, unsigned N) {
    if (d == N) return c;
    const unsigned s = N / d;
    std::vector<Rational> p((c.size() - 1) * s + 1);
    for (size_t i = 0; i < c.size(); ++i) p[i * s] = c[i];
    return reduce_mod_phi(std::move(p), N);
}

// power-basis images of 1, zeta_d, ..., zeta_d^{phi(d)-1} inside Q(zeta_N)
const std::vector<std::vector<Rational>>& embedding_cols(unsigned d, unsigned N) {
    static std::map<std::pair<unsigned, unsigned>, std::vector<std::vector<Rational>>> cache;
    auto key = std::make_pair(d, N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Rational>> cols;
    for (unsigned i = 0; i < euler_phi(d); ++i) {
        std::vector<Rational> unit(i + 1);
        unit[i] = 1;
        cols.push_back(embed_coords(unit, d, N));
    }
    return cache.emplace(std::move(key), std::move(cols)).first->second;
}

// unique solution of (columns | b), or nullopt when inconsistent; the columns
// fed in here are always linearly independent
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
    const size_t rows = b.size(), k = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
        m[i][k] = b[i];
    }
    size_t row = 0;
    std::vector<size_t> pivot_row(k, rows);
    for (size_t col = 0; col < k && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t j = col; j <= k; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_row[col] = row++;
    }
    for (size_t i = row; i < rows; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> sol(k);
    for (size_t col = 0; col < k; ++col)
        if (pivot_row[col] < rows) sol[col] = m[pivot_row[col]][k];
    return sol;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_poly(unsigned N) {
    static std::map<unsigned, std::vector<BigInt>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> p(N + 1);
    p[0] = -1;
    p[N] = 1;
    for (unsigned d = 1; d < N; ++d)
        if (N % d == 0) p = exact_div(std::move(p), cyclotomic_poly(d));
    return cache.emplace(N, std::move(p)).first->second;
}

Cyclo::Cyclo(unsigned modulus, std::vector<Rational> coords)
    : modulus_(modulus), coords_(std::move(coords)) {}

Cyclo cyclo_from_poly(unsigned modulus, std::vector<Rational> polycoeffs) {
    if (modulus == 0) throw IndexOutOfRange("cyclotomic modulus must be positive");
    Cyclo z(modulus, reduce_mod_phi(std::move(polycoeffs), modulus));
    z.normalize();
    return z;
}

Cyclo Cyclo::root_of_unity(long k, unsigned N) {
    if (N == 0) throw IndexOutOfRange("cyclotomic modulus must be positive");
    long r = k % static_cast<long>(N);
    if (r < 0) r += N;
    std::vector<Rational> p(static_cast<size_t>(r) + 1);
    p[static_cast<size_t>(r)] = 1;
    return cyclo_from_poly(N, std::move(p));
}

const Rational& Cyclo::rational_value() const {
    if (!is_rational()) throw PoisError("cyclotomic value is not rational: " + str());
    return coords_[0];
}

std::vector<Rational> Cyclo::lifted_coords(unsigned M) const {
    if (M % modulus_ != 0)
        throw DimensionMismatch("modulus " + std::to_string(modulus_) +
                                " does not divide lift target " + std::to_string(M));
    return embed_coords(coords_, modulus_, M);
}

void Cyclo::normalize() {
    if (modulus_ == 1) return;
    bool rational = true;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) { rational = false; break; }
    if (rational) {
        Rational c0 = coords_[0];
        modulus_ = 1;
        coords_.assign(1, std::move(c0));
        return;
    }
    for (unsigned d = 2; d < modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        if (auto down = solve_columns(embedding_cols(d, modulus_), coords_)) {
            modulus_ = d;
            coords_ = std::move(*down);
            return;
        }
    }
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    const unsigned L = std::lcm(modulus_, o.modulus_);
    auto a = lifted_coords(L);
    auto b = o.lifted_coords(L);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return *this = cyclo_from_poly(L, std::move(a));
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (modulus_ == 1 && o.modulus_ == 1) {
        coords_[0] *= o.coords_[0];
        return *this;
    }
    const unsigned L = std::lcm(modulus_, o.modulus_);
    auto a = lifted_coords(L);
    auto b = o.lifted_coords(L);
    std::vector<Rational> prod(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    return *this = cyclo_from_poly(L, std::move(prod));
}

namespace {

// dense Q[x] helpers for the extended Euclid below
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void sub_assign(QPoly& a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    trim(a);
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    return {std::move(q), std::move(a)};
}

}  // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (modulus_ == 1) {
        Cyclo r = *this;
        r.coords_[0] = Rational(1) / r.coords_[0];
        return r;
    }
    // extended Euclid against Phi_N: Phi irreducible, so gcd is a nonzero constant
    QPoly r0;
    for (const BigInt& c : cyclotomic_poly(modulus_)) r0.push_back(Rational(c));
    QPoly r1 = coords_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s = s0;
        sub_assign(s, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational lead = r0[0];  // gcd normalized to its constant value; deg r0 == 0
    for (auto& c : s0) c /= lead;
    return cyclo_from_poly(modulus_, std::move(s0));
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc(Rational(1)), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::strong_ordering Cyclo::operator<=>(const Cyclo& o) const {
    if (modulus_ != o.modulus_) return modulus_ <=> o.modulus_;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] < o.coords_[i]) return std::strong_ordering::less;
        if (o.coords_[i] < coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyclo::str() const {
    if (modulus_ == 1) return rat_str(coords_[0]);
    std::string out;
    for (size_t k = coords_.size(); k-- > 0;) {
        const Rational& c = coords_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string term;
        if (k == 0) {
            term = rat_str(a);
        } else {
            std::string base = "zeta(" + std::to_string(modulus_) + ")";
            if (k > 1) base += "^" + std::to_string(k);
            term = (a == 1) ? base : rat_str(a) + "*" + base;
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::optional<unsigned> order_as_root_of_unity(const Cyclo& z, unsigned bound) {
    if (z.is_zero()) return std::nullopt;
    Cyclo acc = z;
    for (unsigned m = 1; m <= bound; ++m) {
        if (acc.is_one()) return m;
        acc *= z;
    }
    return std::nullopt;
}

}  // namespace poisinv
