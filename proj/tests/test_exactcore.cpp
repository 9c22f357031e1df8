// test_exactcore.cpp
// Dyadic intervals, polynomial rings, resultants, factorization and
// certified root isolation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smallzeros/evaluate.hpp"
#include "smallzeros/factorization.hpp"
#include "smallzeros/parser.hpp"
#include "smallzeros/resultant.hpp"
#include "smallzeros/roots.hpp"

#include <random>

using namespace smallzeros;

namespace {

MultiPoly P(const std::string& s, unsigned min_vars = 1) { return parse_poly(s, min_vars); }

MultiPoly random_poly(std::mt19937_64& rng, unsigned nvars, unsigned maxdeg, int terms) {
    MultiPoly f(nvars);
    std::uniform_int_distribution<int> cdist(-9, 9);
    std::uniform_int_distribution<unsigned> edist(0, maxdeg);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (unsigned i = 0; i < nvars; ++i) m[i] = edist(rng);
        f.add_term(m, Rat(cdist(rng)));
    }
    return f;
}

UniPoly random_unipoly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> cdist(-9, 9);
    std::uniform_int_distribution<int> ddist(0, maxdeg);
    int d = ddist(rng);
    std::vector<Rat> c(static_cast<size_t>(d + 1));
    for (auto& v : c) v = Rat(cdist(rng));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and rounding is outward") {
    Dyadic a(mpz_class(3), -1);  // 1.5
    Dyadic b(mpz_class(1), -2);  // 0.25
    CHECK((a + b).to_mpq() == make_rat(7, 4));
    CHECK((a * b).to_mpq() == make_rat(3, 8));
    CHECK((a - b).to_mpq() == make_rat(5, 4));

    Rat third = make_rat(1, 3);
    Dyadic lo = Dyadic::from_mpq_down(third, 30);
    Dyadic hi = Dyadic::from_mpq_up(third, 30);
    CHECK(lo.to_mpq() < third);
    CHECK(hi.to_mpq() > third);
    CHECK((hi - lo).to_mpq() <= make_rat(1, 1 << 28));

    // exact power-of-two denominators stay exact
    CHECK(Dyadic::from_mpq_down(make_rat(3, 2), 5).to_mpq() == make_rat(3, 2));

    DyInterval s = DyInterval::point(Dyadic(2)).sqrt_outward(40);
    CHECK(s.lo.to_mpq() < 2);
    CHECK(s.lo * s.lo <= Dyadic(2));
    CHECK(s.hi * s.hi >= Dyadic(2));

    // interval multiplication covers sign cases
    DyInterval x(Dyadic(-2), Dyadic(3));
    DyInterval y(Dyadic(-5), Dyadic(1));
    DyInterval p = x * y;
    CHECK(p.lo <= Dyadic(-15));
    CHECK(p.hi >= Dyadic(10));
    CHECK(x.sq().lo == Dyadic(0));
}

TEST_CASE("complex enclosure arithmetic") {
    Enclosure i = Enclosure::point(Dyadic(0), Dyadic(1));
    Enclosure sq = i * i;
    CHECK(sq.re.lo == Dyadic(-1));
    CHECK(sq.im.lo == Dyadic(0));
    CHECK(sq.im.hi == Dyadic(0));
    Enclosure z(DyInterval(Dyadic(1), Dyadic(2)), DyInterval(Dyadic(1), Dyadic(1)));
    auto q = Enclosure::div(z, z, 64);
    REQUIRE(q.has_value());
    CHECK(q->re.contains(Dyadic(1)));
    CHECK(q->im.contains(Dyadic(0)));
}

TEST_CASE("unipoly ring and division") {
    UniPoly f = UniPoly::from_int_coeffs({-2, 0, 1});  // x^2 - 2
    UniPoly g = UniPoly::from_int_coeffs({-3, 1});     // x - 3
    auto [q, r] = UniPoly::divrem(f, g);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(0) == 7);
    CHECK((q * g + r) == f);
    CHECK(f.eval(Rat(3)) == 7);
    CHECK(UniPoly::gcd(f, f.derivative()).degree() == 0);
}

TEST_CASE("multipoly ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        MultiPoly a = random_poly(rng, 3, 3, 4);
        MultiPoly b = random_poly(rng, 3, 3, 4);
        MultiPoly c = random_poly(rng, 3, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("poly_eval over Q and over Q[x]/(f)") {
    // (X1 + X2)(1/2, 1/3) = 5/6
    CHECK(P("x1 + x2").eval({make_rat(1, 2), make_rat(1, 3)}) == make_rat(5, 6));
    // (X1 X2 - X3)(2, 3, 6) = 0
    CHECK(P("x1*x2 - x3").eval({Rat(2), Rat(3), Rat(6)}) == 0);
    // X1^2 - 2 X2^2 at (sqrt2, 1) vanishes in Q[x]/(x^2-2)
    FieldPtr f = NumberField::make(IntPoly{Int(-2), Int(0), Int(2) / 2 + 0});
    FieldPtr field = NumberField::make(IntPoly{Int(-2), Int(0), Int(1)});
    NFElement sqrt2(field, UniPoly::x());
    NFElement one = NFElement::from_rat(field, Rat(1));
    NFElement v = eval_poly(P("x1^2 - 2*x2^2"), {sqrt2, one});
    CHECK(v.is_zero());
    // mixed fields must be rejected
    FieldPtr other = NumberField::make(IntPoly{Int(-3), Int(0), Int(1)});
    NFElement sqrt3(other, UniPoly::x());
    CHECK_THROWS_AS(eval_poly(P("x1 + x2"), {sqrt2, sqrt3}), incompatible_fields_error);
}

TEST_CASE("resultants: worked values and PRS/Sylvester agreement") {
    UniPoly f = UniPoly::from_int_coeffs({-2, 0, 1});
    UniPoly g = UniPoly::from_int_coeffs({-3, 1});
    CHECK(resultant_q(f, g) == 7);
    CHECK(resultant_q(f, UniPoly::constant(Rat(1))) == 1);

    // Res_x(x^2 - 2, t1 x + t2) = t2^2 - 2 t1^2
    MPolyRing R{2};
    RPoly<MPolyRing> A{MultiPoly::constant(2, Rat(-2)), MultiPoly(2), MultiPoly::constant(2, Rat(1))};
    RPoly<MPolyRing> B{MultiPoly::variable(2, 1), MultiPoly::variable(2, 0)};
    MultiPoly res = resultant(R, A, B);
    CHECK(res == P("x2^2 - 2*x1^2", 2));

    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        UniPoly a = random_unipoly(rng, 5);
        UniPoly b = random_unipoly(rng, 5);
        if (a.is_zero() || b.is_zero()) continue;
        RatRing Q;
        RPoly<RatRing> av(a.coeffs().begin(), a.coeffs().end());
        RPoly<RatRing> bv(b.coeffs().begin(), b.coeffs().end());
        Rat r1 = resultant_q(a, b);
        Rat r2 = sylvester_resultant(Q, av, bv);
        CHECK(r1 == r2);
        // antisymmetry
        Rat r3 = resultant_q(b, a);
        int sgn = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? -1 : 1;
        CHECK(r1 == Rat(sgn) * r3);
    }

    CHECK_THROWS(resultant_q(UniPoly(), UniPoly()));
}

TEST_CASE("factor_over_q: worked examples") {
    Factorization f1 = factor_over_q(UniPoly::from_int_coeffs({-1, 0, 1}));  // x^2-1
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == UniPoly::from_int_coeffs({-1, 1}));
    CHECK(f1.factors[1].first == UniPoly::from_int_coeffs({1, 1}));

    Factorization f2 = factor_over_q(UniPoly::from_int_coeffs({-4, 0, 0, 0, 1}));  // x^4-4
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].first == UniPoly::from_int_coeffs({-2, 0, 1}));
    CHECK(f2.factors[1].first == UniPoly::from_int_coeffs({2, 0, 1}));

    Factorization f3 = factor_over_q(UniPoly::from_int_coeffs({-12, 0, 6}));  // 6x^2-12
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == UniPoly::from_int_coeffs({-2, 0, 1}));
    CHECK(f3.constant == 6);

    CHECK_THROWS(factor_over_q(UniPoly()));
}

TEST_CASE("factor_over_q: re-expansion on random products and multiplicities") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 25; ++iter) {
        UniPoly f = random_unipoly(rng, 4);
        UniPoly g = random_unipoly(rng, 3);
        if (f.degree() < 1 || g.degree() < 1) continue;
        UniPoly prod = f * f * g;  // forced square factor
        Factorization fac = factor_over_q(prod);
        UniPoly re = UniPoly::constant(fac.constant);
        for (const auto& [p, mult] : fac.factors)
            for (unsigned i = 0; i < mult; ++i) re = re * p;
        CHECK(re == prod);
        // every reported factor is irreducible at small scale
        for (const auto& [p, mult] : fac.factors) {
            auto [ip, scale] = p.integer_primitive();
            if (ip_degree(ip) <= 4) CHECK_FALSE(has_small_factor(ip, ip_degree(ip) / 2, 40));
        }
    }
}

TEST_CASE("isolate_roots: real, complex and rational-point cases") {
    Dyadic w(mpz_class(1), -20);
    auto r1 = isolate_roots(UniPoly::from_int_coeffs({-2, 0, 1}), w);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].real);
    CHECK(r1[1].real);
    // boxes straddle +-sqrt(2), sorted by real part
    CHECK(r1[0].box.re.lo.to_mpq() < make_rat(-14142, 10000));
    CHECK(r1[1].box.re.hi.to_mpq() > make_rat(14142, 10000));
    CHECK(r1[0].box.width() <= w);

    auto r2 = isolate_roots(UniPoly::from_int_coeffs({2, 0, 1}), w);  // x^2 + 2
    REQUIRE(r2.size() == 2);
    CHECK_FALSE(r2[0].real);
    CHECK(r2[0].box.im.hi.sign() < 0);   // -i sqrt2 first
    CHECK(r2[1].box.im.lo.sign() > 0);
    // conjugate symmetry is exact
    CHECK(r2[0].box.re.lo == r2[1].box.re.lo);
    CHECK(r2[0].box.im.lo == -r2[1].box.im.hi);

    auto r3 = isolate_roots(UniPoly(std::vector<Rat>{make_rat(-3, 2), Rat(1)}), w);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].box.is_point());
    CHECK(r3[0].box.re.lo.to_mpq() == make_rat(3, 2));

    // multiplicities via the squarefree part: (x^2-2)^2 (x-1)
    UniPoly f = UniPoly::from_int_coeffs({-2, 0, 1});
    UniPoly g = f * f * UniPoly::from_int_coeffs({-1, 1});
    auto r4 = isolate_roots(g, w);
    unsigned total = 0;
    for (const auto& rb : r4) total += rb.multiplicity;
    CHECK(total == 5);
    REQUIRE(r4.size() == 3);
    for (size_t i = 0; i < r4.size(); ++i)
        for (size_t j = i + 1; j < r4.size(); ++j) CHECK(r4[i].box.disjoint(r4[j].box));
}

TEST_CASE("root refinement is nested") {
    IntPoly f{Int(-2), Int(0), Int(1)};
    auto roots = isolate_irreducible_roots(f, Dyadic(mpz_class(1), -10));
    Enclosure base = roots[1].box;
    Enclosure fine = refine_root(f, base, roots[1].real, Dyadic(mpz_class(1), -60));
    CHECK(base.contains(fine));
    CHECK(fine.width() <= Dyadic(mpz_class(1), -60));
    Enclosure finer = refine_root(f, fine, roots[1].real, Dyadic(mpz_class(1), -120));
    CHECK(fine.contains(finer));

    // complex refinement
    IntPoly g{Int(2), Int(0), Int(1)};
    auto groots = isolate_irreducible_roots(g, Dyadic(mpz_class(1), -10));
    Enclosure cbase = groots[1].box;
    Enclosure cfine = refine_root(g, cbase, groots[1].real, Dyadic(mpz_class(1), -80));
    CHECK(cbase.contains(cfine));
    CHECK(cfine.width() <= Dyadic(mpz_class(1), -80));
}

TEST_CASE("substitute_linear: worked examples and the representation property") {
    QMatrix I2 = QMatrix::identity(2);
    CHECK(P("x1^2 + x2^2", 2).substitute_linear(I2) == P("x1^2 + x2^2", 2));
    QMatrix swap;
    swap.rows = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(P("x1*x2", 2).substitute_linear(swap) == P("x1*x2", 2));
    QMatrix shear;
    shear.rows = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    CHECK(P("x1^2", 2).substitute_linear(shear) == P("x1^2 + 2*x1*x2 + x2^2", 2));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> cdist(-3, 3);
    for (int iter = 0; iter < 20; ++iter) {
        MultiPoly f = random_poly(rng, 2, 3, 4);
        QMatrix A, B;
        A.rows = {{Rat(cdist(rng)), Rat(cdist(rng))}, {Rat(cdist(rng)), Rat(cdist(rng))}};
        B.rows = {{Rat(cdist(rng)), Rat(cdist(rng))}, {Rat(cdist(rng)), Rat(cdist(rng))}};
        // F((AB) X) = (F(A .))(B X)
        QMatrix AB;
        AB.rows.assign(2, std::vector<Rat>(2, Rat(0)));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                for (int k = 0; k < 2; ++k) AB.rows[r][c] += A.rows[r][k] * B.rows[k][c];
        CHECK(f.substitute_linear(A).substitute_linear(B) == f.substitute_linear(AB));
    }
    CHECK_THROWS(P("x1 + x2 + x3").substitute_linear(I2));
}

TEST_CASE("specialize and merge") {
    // X3 := 1*X2 in X1^2+X2^2+X3^2 -> X1^2 + 2 X2^2
    CHECK(P("x1^2 + x2^2 + x3^2").substitute_scaled_var(2, 1, Rat(1)) == P("x1^2 + 2*x2^2", 2));
    // -3X0 + X1 + X2 with X2 := X1 (vars shifted by one here: x3 := x2)
    CHECK(P("-3*x1 + x2 + x3").substitute_scaled_var(2, 1, Rat(1)) == P("-3*x1 + 2*x2", 2));
    // cancellation must be representable
    MultiPoly zero = P("x1*x2 - x2^2", 2).substitute_scaled_var(0, 1, Rat(1));
    CHECK(zero.is_zero());
    CHECK(zero.nvars() == 1);
    // X_i := constant
    CHECK(P("x1^2*x2 + x2", 2).substitute_const(1, Rat(3)) == P("3*x1^2 + 3", 1));
}

TEST_CASE("homogenize") {
    MultiPoly f = P("x1 + x2 - 3", 2);
    MultiPoly fh = f.homogenize();
    CHECK(fh == P("x2 + x3 - 3*x1", 3));
    CHECK(fh.is_homogeneous());
    // evaluating the new variable at 1 recovers the input
    CHECK(fh.substitute_const(0, Rat(1)) == f);
    CHECK(P("x1^2 - x2", 2).homogenize() == P("x2^2 - x3*x1", 3));
    // already homogeneous: X0 is absent
    MultiPoly g = P("x1*x2", 2).homogenize();
    CHECK(g.degree_in(0) == 0);
    CHECK(g.substitute_const(0, Rat(1)) == P("x1*x2", 2));

    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        MultiPoly f2 = random_poly(rng, 3, 3, 5);
        if (f2.is_zero()) continue;
        MultiPoly h = f2.homogenize();
        CHECK(h.is_homogeneous());
        CHECK(h.substitute_const(0, Rat(1)) == f2);
    }
    CHECK_THROWS(MultiPoly(2).homogenize());
}

TEST_CASE("element arithmetic in Q[x]/(f) and minimal polynomials") {
    FieldPtr field = NumberField::make(IntPoly{Int(-2), Int(0), Int(1)});
    NFElement a(field, UniPoly::x());            // sqrt 2
    NFElement b = a * a;
    CHECK(b.is_rational());
    CHECK(b.rational_value() == 2);
    NFElement inv = a.inverse();
    CHECK((a * inv).rational_value() == 1);
    // minpoly of 1 + sqrt2 is x^2 - 2x - 1
    NFElement c = a + NFElement::from_rat(field, Rat(1));
    UniPoly m = element_minpoly(*field, c.repr());
    CHECK(m == UniPoly::from_int_coeffs({-1, -2, 1}));
    // minpoly of a rational element collapses to degree 1
    UniPoly m2 = element_minpoly(*field, UniPoly::constant(make_rat(3, 4)));
    CHECK(m2 == UniPoly(std::vector<Rat>{make_rat(-3, 4), Rat(1)}));
}
