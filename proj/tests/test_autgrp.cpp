#include <doctest.h>

#include <algorithm>
#include <random>

#include "families.hpp"
#include "poisinv/autgrp.hpp"
#include "poisinv/errors.hpp"
#include "poisinv/expr.hpp"

using namespace poisinv;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(20260816);
    return r;
}

MultiPoly monic(MultiPoly f) {
    return f * f.terms().begin()->second.inverse();
}

bool system_contains(const std::vector<MultiPoly>& sys, const std::string& eq) {
    MultiPoly want = monic(parse_poly(eq, constraint_symbols(3)));
    return std::find(sys.begin(), sys.end(), want) != sys.end();
}

UniPoly one_minus_t_pow(unsigned k) {
    std::vector<Cyclo> c(k + 1);
    c[0] = Cyclo(1);
    c[k] = Cyclo(-1);
    return UniPoly(std::move(c));
}

std::vector<Cyclo> entries_of(const Matrix& m) {
    std::vector<Cyclo> out;
    for (unsigned i = 0; i < m.rows(); ++i)
        for (unsigned j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

}  // namespace

TEST_CASE("pairwise bracket preservation") {
    PoissonStructure p1 = cases::structure(1);
    GradedMap refl{parse_matrix("[-1,0,0; 2,1,0; 3,0,1]")};
    CHECK(is_poisson_automorphism(p1, refl).pass);

    for (unsigned idx = 1; idx <= 9; ++idx)
        CHECK(is_poisson_automorphism(cases::structure(idx), GradedMap{Matrix::identity(3)})
                  .pass);

    PoissonStructure p5 = cases::structure(5);
    auto bad = is_poisson_automorphism(p5, GradedMap{parse_matrix("[1,0,0; 0,2,0; 0,0,1]")});
    CHECK(!bad.pass);
    CHECK(bad.i == 0);
    CHECK(bad.j == 1);

    CHECK_THROWS_AS(GradedMap{parse_matrix("[1,1; 1,1]")}, SingularMatrix);
    CHECK_THROWS_AS(is_poisson_automorphism(p5, GradedMap{Matrix::identity(2)}),
                    VariableCountMismatch);
}

TEST_CASE("automorphism families hold at random instantiations") {
    for (unsigned idx = 1; idx <= 9; ++idx) {
        PoissonStructure p = cases::structure(idx);
        for (int rep = 0; rep < 5; ++rep) {
            Matrix m = cases::family_sample(idx, rng());
            CAPTURE(idx);
            CAPTURE(m.str());
            CHECK(is_poisson_automorphism(p, GradedMap{m}).pass);
        }
    }
}

TEST_CASE("constraint systems match the published items") {
    auto sys1 = emit_constraint_system(cases::structure(1));
    CHECK(system_contains(sys1, "a11^2 - a22*a33 + a23*a32"));
    CHECK(system_contains(sys1, "a12^2"));
    CHECK(system_contains(sys1, "a13^2"));

    auto sys2 = emit_constraint_system(cases::structure(2));
    CHECK(system_contains(sys2, "a13*a21 - a11*a23"));
    CHECK(system_contains(sys2, "2*a11*a21 - a23*a31 + a21*a33"));
    CHECK(system_contains(sys2, "a11^2 - a11*a33 + a13*a31"));
    CHECK(system_contains(sys2, "a12^2"));
    CHECK(system_contains(sys2, "a13^2"));

    auto sys4 = emit_constraint_system(cases::structure(4));
    CHECK(system_contains(sys4, "2*a13*a23 + a23^2"));
    CHECK(system_contains(sys4, "a13^2 + 2*a13*a23"));

    auto sys5 = emit_constraint_system(cases::structure(5));
    CHECK(system_contains(sys5, "a21^2 - 3*a12*a23 + 3*a13*a22"));
    CHECK(system_contains(sys5, "a23^2"));
    CHECK(system_contains(sys5, "a11^2 - a22*a33 + a23*a32"));
    CHECK(system_contains(sys5, "a13^2"));
    CHECK(system_contains(sys5, "a11*a12"));
    CHECK(system_contains(sys5, "2*a22*a32 - a12*a31 + a11*a32"));
    CHECK(system_contains(sys5, "a21*a32 + a22*a31"));
    CHECK(system_contains(sys5, "a22*a33 + a23*a32 - a11*a33 + a13*a31"));

    auto sys6 = emit_constraint_system(cases::structure(6));
    CHECK(system_contains(sys6, "a13^2 + a23^2"));
    CHECK(system_contains(sys6, "a23*a33"));
    CHECK(system_contains(sys6, "a21*a32 + a22*a31"));

    auto sys9 = emit_constraint_system(cases::structure(9));
    CHECK(system_contains(sys9, "a13^2"));
    CHECK(system_contains(sys9, "a23^2 + 2*a13*a33"));

    CHECK(emit_constraint_system(PoissonStructure::zero(3)).empty());
    // linear table entries are outside the quadratic calculus
    std::vector<MultiPoly> lin(3, MultiPoly(3));
    lin[0] = MultiPoly::variable(3, 0);
    CHECK_THROWS_AS(emit_constraint_system(PoissonStructure(3, lin)), NotQuadratic);
}

TEST_CASE("emitted constraints vanish along the families") {
    for (unsigned idx = 1; idx <= 9; ++idx) {
        auto sys = emit_constraint_system(cases::structure(idx));
        CHECK(!sys.empty());
        for (int rep = 0; rep < 3; ++rep) {
            auto point = entries_of(cases::family_sample(idx, rng()));
            for (const auto& eq : sys) {
                CAPTURE(idx);
                CAPTURE(eq.str("a"));
                CHECK(eq.eval(point).is_zero());
            }
        }
    }
}

TEST_CASE("finite order detection") {
    CHECK(order_of(GradedMap{parse_matrix("[-1,0,0; 2,1,0; 3,0,1]")}, 360) == 2u);
    CHECK(!order_of(GradedMap{parse_matrix("[1,0,0; 0,1,0; 1,0,1]")}, 360).has_value());
    CHECK(order_of(GradedMap{parse_matrix("[zeta(3),0,0; 0,1,0; 0,0,1]")}, 360) == 3u);
    CHECK(order_of(GradedMap{Matrix::identity(3)}, 360) == 1u);
}

TEST_CASE("reflection classification across the bundled cases") {
    for (unsigned idx = 1; idx <= 9; ++idx) {
        PoissonStructure p = cases::structure(idx);
        for (const auto& inst : cases::reflection_instances(idx)) {
            CAPTURE(idx);
            CAPTURE(inst.m.str());
            GradedMap phi{inst.m};
            auto rep = classify_reflection(p, phi);
            CHECK(rep.is_reflection);
            REQUIRE(rep.xi.has_value());
            CHECK(*rep.xi == inst.xi);
            CHECK(rep.order == inst.order);
            CHECK(order_of(phi, 360) == inst.order);
            // characteristic polynomial must be (t-1)^2 (t-xi)
            UniPoly want = UniPoly(std::vector<Cyclo>{Cyclo(-1), Cyclo(1)}).pow(2) *
                           UniPoly(std::vector<Cyclo>{-inst.xi, Cyclo(1)});
            CHECK(charpoly(inst.m) == want);
            // profile: eigenvalue 1 twice, xi once
            unsigned ones = 0, xis = 0;
            for (const auto& [lam, mult] : rep.eigen_profile) {
                if (lam.is_one()) ones += mult;
                if (lam == inst.xi) xis += mult;
            }
            CHECK(ones == 2);
            CHECK(xis == 1);
        }
        for (const auto& m : cases::nonreflection_members(idx)) {
            CAPTURE(idx);
            CAPTURE(m.str());
            CHECK(!classify_reflection(p, GradedMap{m}).is_reflection);
        }
        CHECK(!classify_reflection(p, GradedMap{Matrix::identity(3)}).is_reflection);
    }

    // spec of the shape: one non-unit eigenvalue which is a primitive root
    auto rep = classify_reflection(cases::structure(2),
                                   GradedMap{parse_matrix("[1,0,0; 0,zeta(3),0; 0,5,1]")});
    CHECK(rep.is_reflection);
    CHECK(*rep.xi == Cyclo::zeta(3));
    CHECK(rep.order == 3u);
}

TEST_CASE("group closure") {
    GradedMap r1{parse_matrix("[-1,0,0; 2,1,0; 3,0,1]")};
    auto z2 = group_closure({r1});
    CHECK(z2.size() == 2);
    CHECK(z2.elements[0].matrix().is_identity());

    GradedMap f1{parse_matrix("[0,-1,0; -1,0,0; 2,2,1]")};
    GradedMap f2{parse_matrix("[-1,0,0; 1,1,0; 1,0,1]")};
    auto s3 = group_closure({f1, f2});
    CHECK(s3.size() == 6);
    CHECK((f1 * f1).matrix().is_identity());
    CHECK((f2 * f2).matrix().is_identity());
    CHECK((f1 * f2).matrix().pow(3).is_identity());
    Matrix f3 = (f1 * f2 * f1).matrix();
    CHECK(f3 == parse_matrix("[1,1,0; 0,-1,0; 0,1,1]"));
    CHECK((f2 * GradedMap{f3} * f2).matrix() == f1.matrix());
    bool found = false;
    for (const auto& e : s3.elements) found = found || e.matrix() == f3;
    CHECK(found);

    auto trivial = group_closure({GradedMap{Matrix::identity(3)}});
    CHECK(trivial.size() == 1);

    CHECK_THROWS_AS(group_closure({GradedMap{parse_matrix("[1,0,0; 0,1,0; 1,0,1]")}}, 50),
                    ClosureCapExceeded);
}

TEST_CASE("graded trace series") {
    auto id3 = trace_series(GradedMap{Matrix::identity(3)});
    CHECK(id3 == RatFunc::one_over(one_minus_t_pow(1).pow(3)));
    CHECK(id3.factored_str() == "1/((1-t)^3)");

    auto refl = trace_series(GradedMap{parse_matrix("[-1,0,0; 0,1,0; 0,0,1]")});
    CHECK(refl == RatFunc::one_over(one_minus_t_pow(1) * one_minus_t_pow(2)));
    CHECK(refl.factored_str() == "1/((1-t)*(1-t^2))");

    // Taylor coefficients against the substitution action on each monomial
    // basis
    for (int rep = 0; rep < 6; ++rep) {
        Matrix m(2, 2);
        do {
            for (unsigned i = 0; i < 2; ++i)
                for (unsigned j = 0; j < 2; ++j) m.at(i, j) = Cyclo(cases::rand_rat(rng()));
        } while (m.det().is_zero());
        GradedMap phi{m};
        auto coeffs = trace_series(phi).taylor_coeffs(4);
        auto imgs = phi.images();
        for (unsigned d = 0; d <= 4; ++d) {
            Cyclo tr(0);
            for (const auto& e : monomials_of_degree(2, d))
                tr += MultiPoly::monomial(2, e, Cyclo(1)).substitute(imgs).coeff(e);
            CHECK(coeffs[d] == tr);
        }
    }
}

TEST_CASE("molien series of the bundled reflection groups") {
    RatFunc z2_expect = RatFunc::one_over(one_minus_t_pow(1).pow(2) * one_minus_t_pow(2));

    auto g1 = group_closure({GradedMap{parse_matrix("[-1,0,0; 2,1,0; 3,0,1]")}});
    CHECK(molien(g1) == z2_expect);
    CHECK(molien(g1).factored_str() == "1/((1-t)^2*(1-t^2))");

    auto g8 = group_closure({GradedMap{parse_matrix("[-1,0,0; 0,1,0; 2,0,1]")}});
    CHECK(molien(g8) == z2_expect);

    auto c2l2 = group_closure({GradedMap{parse_matrix("[1,0,0; 0,-1,0; 0,1,1]")}});
    CHECK(c2l2.size() == 2);
    CHECK(molien(c2l2) == z2_expect);

    auto c2l3 = group_closure({GradedMap{parse_matrix("[1,0,0; 0,zeta(3),0; 0,1,1]")}});
    CHECK(c2l3.size() == 3);
    CHECK(molien(c2l3) ==
          RatFunc::one_over(one_minus_t_pow(1).pow(2) * one_minus_t_pow(3)));

    auto s3 = group_closure({GradedMap{parse_matrix("[0,-1,0; -1,0,0; 2,2,1]")},
                             GradedMap{parse_matrix("[-1,0,0; 1,1,0; 1,0,1]")}});
    RatFunc s3_molien = molien(s3);
    CHECK(s3_molien ==
          RatFunc::one_over(one_minus_t_pow(1) * one_minus_t_pow(2) * one_minus_t_pow(3)));
    CHECK(s3_molien.factored_str() == "1/((1-t)*(1-t^2)*(1-t^3))");

    auto trivial = group_closure({GradedMap{Matrix::identity(3)}});
    CHECK(molien(trivial) == RatFunc::one_over(one_minus_t_pow(1).pow(3)));

    for (const auto* g : {&g1, &g8, &c2l2, &c2l3, &s3, &trivial}) {
        auto coeffs = molien(*g).taylor_coeffs(8);
        CHECK(coeffs[0].is_one());
        for (const auto& c : coeffs) {
            REQUIRE(c.is_rational());
            CHECK(rat_den(c.rational_value()) == 1);
            CHECK(c.rational_value() >= 0);
        }
    }
}
