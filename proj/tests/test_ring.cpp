#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "valdim/ring.hpp"

using namespace valdim;
using valdim::testing::qp;
using valdim::testing::random_poly;

namespace {

const Field Q = Field::rationals();

RingPtr make_xy_mod_xy() {
    std::vector<std::string> v = {"x", "y"};
    return RingPresentation::make(Q, v, {qp("x*y", v)}, true, false);
}

RingPtr make_qt() { return RingPresentation::make(Q, {"t"}, {}, true, true); }

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("presentation basics") {
    RingPtr r = make_xy_mod_xy();
    CHECK(r->nvars() == 2);
    CHECK(r->var_index("y") == 1);
    CHECK(r->var_index("zz") == -1);
    CHECK_FALSE(r->is_trivial());
    CHECK(r->assume_reduced);
    CHECK_FALSE(r->assume_integral);

    RingPtr triv = RingPresentation::make(Q, {"x"}, {qp("1", {"x"})});
    CHECK(triv->is_trivial());
    CHECK(RingElement::one(triv).is_zero());

    CHECK_THROWS_AS(RingPresentation::make(Q, {"x", "x"}, {}), std::invalid_argument);
}

TEST_CASE("normal form representatives") {
    RingPtr r = make_xy_mod_xy();
    std::vector<std::string> v = {"x", "y"};
    RingElement e = RingElement::from_poly(r, qp("x*y + x", v));
    CHECK(equal(e.repr, qp("x", v)));
    CHECK(e.to_string() == "x");
    RingElement x = RingElement::variable(r, 0);
    RingElement y = RingElement::variable(r, 1);
    CHECK(mul(x, y).is_zero());
    CHECK(equal(pow(add(x, y), 2), add(mul(x, x), mul(y, y))));
}

TEST_CASE("element equality is a congruence") {
    RingPtr r = make_xy_mod_xy();
    std::vector<std::string> v = {"x", "y"};
    std::mt19937 rng(612200);
    GroebnerBasis gb = r->basis();
    for (int i = 0; i < 50; ++i) {
        Poly pa = random_poly(rng, Q, 2, 3, 4);
        Poly pb = random_poly(rng, Q, 2, 3, 4);
        Poly noise_a = mul(random_poly(rng, Q, 2, 2, 2), qp("x*y", v));
        Poly noise_b = mul(random_poly(rng, Q, 2, 2, 2), qp("x*y", v));
        RingElement a = RingElement::from_poly(r, pa);
        RingElement a2 = RingElement::from_poly(r, add(pa, noise_a));
        RingElement b = RingElement::from_poly(r, pb);
        RingElement b2 = RingElement::from_poly(r, add(pb, noise_b));
        REQUIRE(equal(a, a2));
        REQUIRE(equal(b, b2));
        CHECK(equal(add(a, b), add(a2, b2)));
        CHECK(equal(mul(a, b), mul(a2, b2)));
    }
}

TEST_CASE("different presentations do not mix") {
    RingPtr r1 = make_xy_mod_xy();
    RingPtr r2 = make_xy_mod_xy();
    CHECK_THROWS_AS(add(RingElement::one(r1), RingElement::one(r2)), std::invalid_argument);
}

TEST_CASE("fractions over an integral ring") {
    RingPtr r = make_qt();
    RingElement t = RingElement::variable(r, 0);
    FracElement inv_t = FracElement::of(RingElement::one(r), t);
    CHECK(equal(mul(FracElement::whole(t), inv_t), FracElement::whole(RingElement::one(r))));

    // (t, 1/t) product-minus-one vanishes
    FracElement prod = mul(FracElement::whole(t), inv_t);
    CHECK(sub(prod, FracElement::whole(RingElement::one(r))).is_zero());

    FracElement a = FracElement::of(add(t, RingElement::one(r)), t);          // (t+1)/t
    FracElement b = FracElement::of(mul(add(t, RingElement::one(r)), t), mul(t, t));
    CHECK(equal(a, b));

    CHECK_THROWS_AS(FracElement::of(t, RingElement::zero(r)), std::invalid_argument);
    CHECK_THROWS_AS(inverse(FracElement::whole(RingElement::zero(r))), std::invalid_argument);

    CHECK(equal(pow(FracElement::whole(t), -2), FracElement::of(RingElement::one(r), mul(t, t))));
}

TEST_CASE("fraction equality is an equivalence on samples") {
    RingPtr r = make_qt();
    std::mt19937 rng(88111);
    std::vector<FracElement> fracs;
    for (int i = 0; i < 12; ++i) {
        Poly n = random_poly(rng, Q, 1, 3, 3);
        Poly d = random_poly(rng, Q, 1, 2, 2);
        if (d.is_zero()) d = qp("t", {"t"});
        fracs.push_back(
            FracElement::of(RingElement::from_poly(r, n), RingElement::from_poly(r, d)));
    }
    for (const auto& a : fracs) CHECK(equal(a, a));
    for (const auto& a : fracs)
        for (const auto& b : fracs)
            if (equal(a, b)) CHECK(equal(b, a));
    for (const auto& a : fracs)
        for (const auto& b : fracs)
            for (const auto& c : fracs)
                if (equal(a, b) && equal(b, c)) CHECK(equal(a, c));
}

TEST_CASE("denominators stay monic") {
    RingPtr r = make_qt();
    RingElement t = RingElement::variable(r, 0);
    FracElement f = FracElement::of(RingElement::one(r), scale(t, Rat(3)));  // 1/(3t)
    CHECK(equal(f.den, t));
    CHECK(equal(f.num, RingElement::constant(r, Rat(1, 3))));
    FracElement z = FracElement::of(RingElement::zero(r), scale(t, Rat(5)));
    CHECK(z.is_zero());
    CHECK(equal(z.den, RingElement::one(r)));
}

TEST_CASE("zero-variable presentation") {
    RingPtr k = RingPresentation::make(Q, {}, {});
    CHECK_FALSE(k->is_trivial());
    RingElement c = RingElement::constant(k, Rat(5, 3));
    CHECK(equal(add(c, c), RingElement::constant(k, Rat(10, 3))));
}

}  // TEST_SUITE
