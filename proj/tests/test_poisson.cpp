#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "poisinv/errors.hpp"
#include "poisinv/expr.hpp"
#include "poisinv/multipoly.hpp"
#include "poisinv/poisson.hpp"

using namespace poisinv;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(20260816);
    return r;
}

Rational rand_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return Rational(num(rng()), den(rng()));
}

// structure on three variables from the cyclic bracket strings
// {x1,x2}, {x2,x3}, {x3,x1}
PoissonStructure from_cyclic(const std::string& b12, const std::string& b23,
                             const std::string& b31,
                             const std::vector<std::string>& vars = {"x1", "x2", "x3"}) {
    std::vector<MultiPoly> tab(3);
    tab[0] = parse_poly(b12, vars);
    tab[1] = -parse_poly(b31, vars);
    tab[2] = parse_poly(b23, vars);
    return PoissonStructure(3, std::move(tab));
}

struct CubicCase {
    std::string potential;
    std::string b12, b23, b31;
};

// the nine bundled cubic potentials with their bracket tables
const std::vector<CubicCase>& cubic_cases() {
    static const std::vector<CubicCase> cases = {
        {"x1^3", "0", "3*x1^2", "0"},
        {"x1^2*x2", "0", "2*x1*x2", "x1^2"},
        {"2*x1*x2*x3", "2*x1*x2", "2*x2*x3", "2*x1*x3"},
        {"x1^2*x2 + x1*x2^2", "0", "2*x1*x2 + x2^2", "x1^2 + 2*x1*x2"},
        {"x1^3 + x2^2*x3", "x2^2", "3*x1^2", "2*x2*x3"},
        {"x1^3 + x1^2*x3 + x2^2*x3", "x1^2 + x2^2", "3*x1^2 + 2*x1*x3", "2*x2*x3"},
        {"1/3*x1^3 + 1/3*x2^3 + 1/3*x3^3 + 2*x1*x2*x3", "x3^2 + 2*x1*x2", "x1^2 + 2*x2*x3",
         "x2^2 + 2*x1*x3"},
        {"x1^3 + x1^2*x2 + x1*x2*x3", "x1*x2", "3*x1^2 + 2*x1*x2 + x2*x3", "x1^2 + x1*x3"},
        {"x1^2*x3 + x1*x2^2", "x1^2", "2*x1*x3 + x2^2", "2*x1*x2"},
    };
    return cases;
}

}  // namespace

TEST_CASE("jacobian structures of the bundled cubics") {
    for (const auto& c : cubic_cases()) {
        CAPTURE(c.potential);
        MultiPoly w = parse_poly(c.potential, 3);
        PoissonStructure p = PoissonStructure::from_superpotential(w);
        PoissonStructure expect = from_cyclic(c.b12, c.b23, c.b31);
        CHECK(p.table() == expect.table());
        CHECK(p.is_quadratic());
        CHECK(!p.verify_jacobi().has_value());
        CHECK(p.is_unimodular());
        auto back = solve_superpotential(p);
        REQUIRE(back.has_value());
        CHECK(*back == w);
    }
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(PoissonStructure::from_superpotential(parse_poly("x1^2*x2", 2)),
                    WrongVariableCount);
    CHECK_THROWS_AS(PoissonStructure::from_superpotential(parse_poly("x1^3 + x1^2", 3)),
                    NotHomogeneousDegree3);
    CHECK_THROWS_AS(PoissonStructure::from_superpotential(parse_poly("x1^2", 3)),
                    NotHomogeneousDegree3);

    std::vector<MultiPoly> short_table(2, MultiPoly(3));
    CHECK_THROWS_AS(PoissonStructure(3, short_table), DimensionMismatch);
    std::vector<MultiPoly> alien(3, MultiPoly(2));
    CHECK_THROWS_AS(PoissonStructure(3, alien), VariableCountMismatch);

    PoissonStructure triv = PoissonStructure::from_superpotential(MultiPoly(3));
    for (const auto& f : triv.table()) CHECK(f.is_zero());
    CHECK(triv.is_quadratic());
    CHECK(!triv.verify_jacobi().has_value());
    auto w0 = solve_superpotential(triv);
    REQUIRE(w0.has_value());
    CHECK(w0->is_zero());
}

TEST_CASE("jacobi identity violations are reported with a witness") {
    PoissonStructure bad = from_cyclic("x3^2", "x2^2", "0");
    auto fail = bad.verify_jacobi();
    REQUIRE(fail.has_value());
    CHECK(fail->i == 0);
    CHECK(fail->j == 1);
    CHECK(fail->k == 2);
    CHECK(fail->residual == parse_poly("2*x2*x3^2", 3));

    // same shape with the middle entry changed is a jacobian structure
    PoissonStructure good = from_cyclic("x3^2", "x1^2", "0");
    CHECK(!good.verify_jacobi().has_value());
    auto w = solve_superpotential(good);
    REQUIRE(w.has_value());
    CHECK(*w == parse_poly("1/3*x1^3 + 1/3*x3^3", 3));
}

TEST_CASE("random cubic potentials give unimodular poisson structures") {
    const auto cubics = monomials_of_degree(3, 3);
    REQUIRE(cubics.size() == 10);
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly w(3);
        for (const auto& e : cubics) w += MultiPoly::monomial(3, e, Cyclo(rand_rat()));
        PoissonStructure p = PoissonStructure::from_superpotential(w);
        CHECK(!p.verify_jacobi().has_value());
        CHECK(p.is_unimodular());
        CHECK(p.is_quadratic());
        auto back = solve_superpotential(p);
        REQUIRE(back.has_value());
        CHECK(*back == w);
    }
}

TEST_CASE("bracket evaluation and derivation laws") {
    PoissonStructure p3 = PoissonStructure::from_superpotential(parse_poly("2*x1*x2*x3", 3));
    MultiPoly x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1),
              x3 = MultiPoly::variable(3, 2);
    CHECK(p3.bracket(x1, x2) == parse_poly("2*x1*x2", 3));
    CHECK(p3.bracket(x2, x3) == parse_poly("2*x2*x3", 3));
    CHECK(p3.bracket(x3, x1) == parse_poly("2*x1*x3", 3));
    CHECK(p3.generator_bracket(2, 0) == parse_poly("2*x1*x3", 3));
    CHECK(p3.generator_bracket(1, 1).is_zero());

    PoissonStructure p1 = PoissonStructure::from_superpotential(parse_poly("x1^3", 3));
    CHECK(p1.bracket(parse_poly("x2^2", 3), x3) == parse_poly("6*x1^2*x2", 3));

    PoissonStructure p8 =
        PoissonStructure::from_superpotential(parse_poly("x1^3 + x1^2*x2 + x1*x2*x3", 3));
    std::uniform_int_distribution<unsigned> exp(0, 2);
    auto rand_poly3 = [&] {
        MultiPoly f(3);
        for (int t = 0; t < 4; ++t) {
            ExpVec e(3);
            for (auto& x : e) x = exp(rng());
            f += MultiPoly::monomial(3, e, Cyclo(rand_rat()));
        }
        return f;
    };
    for (int rep = 0; rep < 8; ++rep) {
        MultiPoly f = rand_poly3(), g = rand_poly3(), h = rand_poly3();
        CHECK(p8.bracket(f, f).is_zero());
        CHECK(p8.bracket(f, g) == -p8.bracket(g, f));
        CHECK(p8.bracket(f, g * h) == p8.bracket(f, g) * h + g * p8.bracket(f, h));
        CHECK(p8.bracket(f + g, h) == p8.bracket(f, h) + p8.bracket(g, h));
        CHECK(p8.modular_derivation(f + g) ==
              p8.modular_derivation(f) + p8.modular_derivation(g));
    }
    CHECK(p8.modular_derivation(MultiPoly::constant(3, Cyclo(7))).is_zero());
    CHECK_THROWS_AS(p8.bracket(MultiPoly::variable(2, 0), MultiPoly::variable(2, 1)),
                    VariableCountMismatch);
}

TEST_CASE("modular derivation detects non-unimodular tables") {
    std::vector<std::string> ys = {"y1", "y2", "y3"};

    PoissonStructure inv8 = from_cyclic("y1*y2 + 3*y3", "2*y2*y3", "2*y1*y3", ys);
    CHECK(!inv8.verify_jacobi().has_value());
    CHECK(!inv8.is_unimodular());
    CHECK(inv8.modular_derivation(parse_poly("y2", ys)) == parse_poly("-y2", ys));

    PoissonStructure inv2 = from_cyclic("(zeta(3) - 1)*y1^2", "6*(zeta(3) - 1)*y1*y3", "0", ys);
    CHECK(!inv2.verify_jacobi().has_value());
    CHECK(!inv2.is_unimodular());
    CHECK(inv2.modular_derivation(parse_poly("y2", ys)) ==
          parse_poly("-4*(zeta(3) - 1)*y1", ys));
}

TEST_CASE("potential recovery succeeds exactly on jacobian tables") {
    std::vector<std::string> ys = {"y1", "y2", "y3"};

    auto w1 = solve_superpotential(from_cyclic("0", "3*y1", "0", ys));
    REQUIRE(w1.has_value());
    CHECK(*w1 == parse_poly("3/2*y1^2", ys));

    auto w4 = solve_superpotential(from_cyclic("y3", "0", "-6*y2^2", ys));
    REQUIRE(w4.has_value());
    CHECK(*w4 == parse_poly("-2*y2^3 + 1/2*y3^2", ys));

    CHECK(!solve_superpotential(from_cyclic("-2*y1^2", "-8*y1*y3", "0", ys)).has_value());
    CHECK(!solve_superpotential(
               from_cyclic("(zeta(3) - 1)*y1^2", "6*(zeta(3) - 1)*y1*y3", "0", ys))
               .has_value());
    CHECK(!solve_superpotential(from_cyclic("0", "6*y1 + y2^2", "y1*y2", ys)).has_value());
    CHECK(!solve_superpotential(from_cyclic("-4*y1*y3", "3/4*y1 - y3^2", "0", ys)).has_value());
    CHECK(!solve_superpotential(from_cyclic("2*y1*y3", "-3/2*y1 + 1/2*y3^2", "0", ys))
               .has_value());
    CHECK(!solve_superpotential(from_cyclic("y1*y2 + 3*y3", "2*y2*y3", "2*y1*y3", ys))
               .has_value());

    CHECK_THROWS_AS(solve_superpotential(PoissonStructure::zero(2)), WrongVariableCount);
}

TEST_CASE("bracket ideal quotient dimensions") {
    // pairwise brackets generate (x1^2): degree d leaves monomials with
    // x1-exponent 0 or 1
    PoissonStructure p1 = PoissonStructure::from_superpotential(parse_poly("x1^3", 3));
    auto dims1 = bracket_quotient_hilbert(p1, 3);
    CHECK(dims1 == std::vector<unsigned>{1, 3, 5, 7});
    for (unsigned d = 0; d <= 3; ++d) {
        unsigned count = 0;
        for (const auto& e : monomials_of_degree(3, d))
            if (e[0] < 2) ++count;
        CHECK(dims1[d] == count);
    }

    auto dims0 = bracket_quotient_hilbert(PoissonStructure::zero(3), 2);
    CHECK(dims0 == std::vector<unsigned>{1, 3, 6});

    // ideal (x1*x2, x2*x3, x1*x3): only pure powers survive
    PoissonStructure p3 = PoissonStructure::from_superpotential(parse_poly("2*x1*x2*x3", 3));
    auto dims3 = bracket_quotient_hilbert(p3, 3);
    CHECK(dims3 == std::vector<unsigned>{1, 3, 3, 3});
    for (unsigned d = 0; d <= 3; ++d) {
        unsigned count = 0;
        for (const auto& e : monomials_of_degree(3, d)) {
            unsigned nonzero = 0;
            for (unsigned x : e) nonzero += (x > 0);
            if (nonzero <= 1) ++count;
        }
        CHECK(dims3[d] == count);
    }

    // linear entries are allowed: ideal (y1) leaves a polynomial ring in two
    // variables
    PoissonStructure lin = from_cyclic("0", "3*y1", "0", {"y1", "y2", "y3"});
    CHECK(bracket_quotient_hilbert(lin, 3) == std::vector<unsigned>{1, 2, 3, 4});

    PoissonStructure mixed = from_cyclic("0", "x1 + x1^2", "0");
    CHECK_THROWS_AS(bracket_quotient_hilbert(mixed, 2), PoisError);
}

TEST_CASE("generator bracket indexing on four variables") {
    std::vector<MultiPoly> tab;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i + 1; j < 4; ++j)
            tab.push_back(MultiPoly::constant(4, Cyclo(int(10 * (i + 1) + (j + 1)))));
    PoissonStructure p(4, tab);
    CHECK(p.generator_bracket(0, 3) == MultiPoly::constant(4, Cyclo(14)));
    CHECK(p.generator_bracket(2, 3) == MultiPoly::constant(4, Cyclo(34)));
    CHECK(p.generator_bracket(3, 1) == MultiPoly::constant(4, Cyclo(-24)));
    CHECK(p.generator_bracket(2, 2).is_zero());
    CHECK_THROWS_AS(p.generator_bracket(0, 4), IndexOutOfRange);
    // constant table: every jacobi summand differentiates a constant
    CHECK(!p.verify_jacobi().has_value());
}
