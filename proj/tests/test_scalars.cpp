#include "doctest.h"

#include "weylhom/intpoly.hpp"
#include "weylhom/scalars.hpp"

#include <stdexcept>

using namespace weylhom;

TEST_CASE("IntPoly arithmetic and utilities") {
    IntPoly x = IntPoly::monomial(1, 1);
    IntPoly one = IntPoly::constant(1);

    IntPoly p = x * x - one;          // x^2 - 1
    IntPoly q = x - one;              // x - 1
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(7) == 0);

    IntPoly quot = IntPoly::div_exact(p, q);
    CHECK(quot == x + one);
    CHECK_THROWS_AS(IntPoly::div_exact(p + one, q), std::invalid_argument);

    IntPoly g = IntPoly::gcd(p, q);
    // gcd is primitive with positive leading coefficient
    CHECK(g == q);

    CHECK((p * q).degree() == 3);
    CHECK((-p) + p == IntPoly());
    CHECK(IntPoly().is_zero());
    CHECK(p.shifted(2) == x * x * x * x - x * x);
    CHECK(p.eval_at_one() == 0);
    CHECK((p + one).eval_at_one() == 1);

    // content: gcd of coefficients, positive
    IntPoly h = IntPoly::constant(6) * x - IntPoly::constant(9);
    CHECK(h.content() == 3);
}

TEST_CASE("cyclotomic polynomials") {
    IntPoly x = IntPoly::monomial(1, 1);
    IntPoly one = IntPoly::constant(1);

    CHECK(cyclotomic_polynomial(1) == x - one);
    CHECK(cyclotomic_polynomial(2) == x + one);
    CHECK(cyclotomic_polynomial(3) == x * x + x + one);
    CHECK(cyclotomic_polynomial(4) == x * x + one);
    CHECK(cyclotomic_polynomial(6) == x * x - x + one);
    IntPoly x2 = x * x;
    CHECK(cyclotomic_polynomial(12) == x2 * x2 - x2 + one);

    // product of Phi_d over d | n equals x^n - 1
    for (int n : {1, 2, 3, 4, 6, 8, 12}) {
        IntPoly prod = one;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        CHECK(prod == IntPoly::monomial(1, n) - one);
    }
}

TEST_CASE("Gaussian binomial polynomials") {
    IntPoly one = IntPoly::constant(1);
    IntPoly x = IntPoly::monomial(1, 1);

    CHECK(gauss_polynomial(0, 0) == one);
    CHECK(gauss_polynomial(1, 0) == one);
    CHECK(gauss_polynomial(1, 1) == one);
    CHECK(gauss_polynomial(2, 1) == one + x);
    CHECK(gauss_polynomial(4, 2) == one + x + IntPoly::constant(2) * x * x
                                        + x * x * x + x * x * x * x);
    CHECK(gauss_polynomial(3, 5).is_zero());
    CHECK(gauss_polynomial(-1, 0).is_zero());
    CHECK(gauss_polynomial(5, -1).is_zero());

    // symmetry and specialization at q = 1 (ordinary binomials)
    CHECK(gauss_polynomial(7, 3) == gauss_polynomial(7, 4));
    CHECK(gauss_polynomial(7, 3).eval_at_one() == 35);
    CHECK(gauss_polynomial(10, 5).eval_at_one() == 252);

    CHECK(quantum_int_polynomial(0).is_zero());
    CHECK(quantum_int_polynomial(1) == one);
    CHECK(quantum_int_polynomial(3) == one + x + x * x);
}

TEST_CASE("RatFunc reduction and queries") {
    IntPoly x = IntPoly::monomial(1, 1);
    IntPoly one = IntPoly::constant(1);

    RatFunc r = RatFunc::from_poly(x * x - one) / RatFunc::from_poly(x - one);
    CHECK(r == RatFunc::from_poly(x + one));

    RatFunc qm3 = RatFunc::q_power(-3);
    long long k = 0;
    Int c = 0;
    CHECK(qm3.denominator_is_monomial(&k, &c));
    CHECK(k == 3);
    CHECK(c == 1);
    CHECK(qm3 * RatFunc::q_power(3) == RatFunc::integer(1));

    RatFunc s = RatFunc::from_poly(x + one) / RatFunc::from_poly(x);
    CHECK(s.denominator_is_monomial(&k, &c));
    CHECK(k == 1);

    RatFunc t = RatFunc::integer(1) / RatFunc::from_poly(x + one);
    CHECK_FALSE(t.denominator_is_monomial(&k, &c));

    CHECK((r - r).num().is_zero());
    CHECK_THROWS_AS(r / RatFunc::integer(0), std::invalid_argument);
}

TEST_CASE("rational polynomial parsing and printing") {
    // round trips in the printed format: descending powers, a/b*q^k
    for (const char* text : {"q^2+1", "2*q^3-1/2*q+3", "-q+5", "0", "7",
                             "1/3*q^4-2/3"}) {
        auto coeffs = parse_rational_poly(text);
        CHECK(rational_poly_to_string(coeffs) == text);
    }
    // parser accepts optional '*' and surrounding spaces
    CHECK(rational_poly_to_string(parse_rational_poly(" 3 q^2 - q ")) ==
          "3*q^2-q");
    CHECK(rational_poly_to_string(parse_rational_poly("q")) == "q");
    CHECK_THROWS_AS(parse_rational_poly("q^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_poly("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_poly("x+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_poly(""), std::invalid_argument);
}

TEST_CASE("FieldSpec parsing and printing") {
    FieldSpec fs = FieldSpec::parse("p=7,q=2");
    CHECK(fs.kind == FieldSpec::Kind::prime);
    CHECK(fs.p == 7);
    CHECK(fs.q == 2);
    CHECK(FieldSpec::parse("prime,p=7,q=2") == fs);
    CHECK(FieldSpec::parse(" p = 7 , q = 2 ") == fs);

    FieldSpec cy = FieldSpec::parse("cyclotomic,e=4");
    CHECK(cy.kind == FieldSpec::Kind::cyclotomic);
    CHECK(cy.e == 4);
    CHECK(FieldSpec::parse(cy.to_string()) == cy);
    CHECK(FieldSpec::parse(fs.to_string()) == fs);

    CHECK_THROWS_AS(FieldSpec::parse("p=4,q=2"), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(FieldSpec::parse("p=7,q=0"), std::invalid_argument);  // q out of range
    CHECK_THROWS_AS(FieldSpec::parse("p=7,q=7"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("cyclotomic,e=1"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("gibberish"), std::invalid_argument);
}

TEST_CASE("quantum characteristic") {
    CHECK(Field::make("p=3,q=1")->quantum_char() == 3);
    CHECK(Field::make("p=3,q=2")->quantum_char() == 2);
    CHECK(Field::make("p=2,q=1")->quantum_char() == 2);
    CHECK(Field::make("p=5,q=4")->quantum_char() == 2);
    CHECK(Field::make("p=7,q=2")->quantum_char() == 3);

    for (int e : {2, 3, 4, 5, 6, 7}) {
        FieldPtr F = Field::make(FieldSpec::cyclotomic(e));
        CHECK(F->quantum_char() == e);
        for (int f = 1; f < e; ++f)
            CHECK_FALSE(F->quantum_integer(f).is_zero());
        CHECK(F->quantum_integer(e).is_zero());
    }
}

TEST_CASE("field arithmetic fixtures") {
    FieldPtr F2 = Field::make(FieldSpec::cyclotomic(2));
    FieldPtr F3 = Field::make(FieldSpec::cyclotomic(3));
    FieldPtr F4 = Field::make(FieldSpec::cyclotomic(4));
    FieldPtr P32 = Field::make("p=3,q=2");
    FieldPtr P21 = Field::make("p=2,q=1");

    // q powers
    CHECK(F3->q_power(0) == F3->one());
    CHECK(F2->q_power(3) == F2->from_integer(-1));
    CHECK(P32->q_power(-1) == P32->from_integer(2));
    for (long long k : {-5LL, -1LL, 0LL, 1LL, 9LL}) {
        CHECK(F4->q_power(k) * F4->q_power(-k) == F4->one());
        CHECK(P32->q_power(k) * P32->q_power(-k) == P32->one());
    }

    // quantum integers
    CHECK(F3->quantum_integer(0).is_zero());
    CHECK(F3->quantum_integer(3).is_zero());
    CHECK(P21->quantum_integer(3) == P21->one());  // 1+1+1 = 1 mod 2

    // Gaussian binomials in the field
    CHECK(F2->gauss(2, 1).is_zero());             // [2] = 0 at e = 2
    CHECK(F3->gauss(5, 2) == F3->one());          // frozen fixture
    CHECK(F3->gauss(3, 5).is_zero());
    CHECK(F3->gauss(-1, 0).is_zero());
    CHECK(F4->gauss(9, 2) == F4->gauss(9, 7));    // symmetry
    CHECK(P32->gauss(4, 2) == P32->eval(gauss_polynomial(4, 2)));

    // inverses and division
    Scalar a = F3->q() + F3->one();
    CHECK(a * a.inverse() == F3->one());
    CHECK((a / a) == F3->one());
    CHECK_THROWS_AS(F3->zero().inverse(), std::invalid_argument);

    Scalar half = P32->from_rational(Rational(1, 2));
    CHECK(half == P32->from_integer(2));           // 1/2 = 2 mod 3
    CHECK_THROWS_AS(P32->from_rational(Rational(1, 3)), SpecializationError);

    // eval of a RatFunc whose denominator dies in the field
    RatFunc bad = RatFunc::integer(1) /
                  RatFunc::from_poly(quantum_int_polynomial(2));
    CHECK_THROWS_AS(F2->eval(bad), SpecializationError);
    CHECK(F3->eval(bad) * F3->quantum_integer(2) == F3->one());
}

TEST_CASE("scalar printing and parsing round trips") {
    FieldPtr F4 = Field::make(FieldSpec::cyclotomic(4));
    FieldPtr P73 = Field::make("p=7,q=2");

    // prime scalars print as decimal residues
    CHECK(P73->from_integer(12).to_string() == "5");
    CHECK(P73->parse_scalar("5") == P73->from_integer(5));
    CHECK(P73->parse_scalar("q^2+1") == P73->from_integer(5));

    // cyclotomic scalars print as polynomials in q, descending powers,
    // reduced mod the cyclotomic polynomial (q^3 = -q at e = 4)
    Scalar s = F4->q_power(3) * F4->from_integer(2) + F4->one();
    CHECK(s.to_string() == "-2*q+1");
    CHECK(F4->parse_scalar(s.to_string()) == s);
    CHECK(F4->parse_scalar("q^2+1").is_zero());   // q^2 = -1 at e = 4
    CHECK(F4->parse_scalar("q^5") == F4->q());    // Horner reduction
    Scalar r = F4->from_rational(Rational(1, 2)) * F4->q();
    CHECK(r.to_string() == "1/2*q");
    CHECK(F4->parse_scalar(r.to_string()) == r);
    CHECK(F4->zero().to_string() == "0");

    // mixed-field operations are rejected
    CHECK_THROWS_AS(F4->one() + P73->one(), std::invalid_argument);
}
