#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slopestab/hs_model.hpp"
#include "slopestab/interval_sign.hpp"
#include "test_support.hpp"

using namespace slopestab;
using testing::Rng;

namespace {
HSModel empty_subscheme(long d, long g) {
    // a_i(x) identically a_i: the empty Z on a degree-d genus-g curve
    HSModel h;
    h.n = 1;
    h.a0 = Poly::constant(Rat(d));
    h.a1 = Poly::constant(Rat(1 - g));
    h.a0_const = Rat(d);
    h.a1_const = Rat(1 - g);
    h.eps = Rat(d);
    h.validate();
    return h;
}
}  // namespace

TEST_CASE("hs_point_on_smooth: P^2, curve, quartic K3") {
    HSModel p2 = hs_point_on_smooth(2, Rat(1), Rat(-3), Rat(1), true);
    CHECK(p2.a0 == Poly{Rat(1, 2), Rat(0), Rat(-1, 2)});
    CHECK(p2.a1 == Poly{Rat(3, 2), Rat(-1, 2)});
    CHECK(p2.a0_const == Rat(1, 2));
    CHECK(p2.a1_const == Rat(3, 2));

    // n = 1 kills the (n-1) term: a_0(x) = d - x, a~_1 = 0
    HSModel line = hs_point_on_smooth(1, Rat(4), Rat(-2), Rat(1), false);
    CHECK(line.a0 == Poly{Rat(4), Rat(-1)});
    CHECK(line.a1 == Poly::constant(Rat(1)));

    HSModel k3 = hs_point_on_smooth(2, Rat(4), Rat(0), Rat(1), true);
    CHECK(k3.a0 == Poly{Rat(2), Rat(0), Rat(-1, 2)});
    CHECK(k3.a1 == Poly{Rat(0), Rat(-1, 2)});

    CHECK_THROWS_AS(hs_point_on_smooth(2, Rat(0), Rat(1), Rat(1), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(hs_point_on_smooth(2, Rat(1), Rat(1), Rat(0), false),
                    std::invalid_argument);
}

TEST_CASE("hs_divisor_on_curve") {
    HSModel g0 = hs_divisor_on_curve(0, 1, 1);
    CHECK(g0.a0_const == Rat(1));
    CHECK(g0.a1_const == Rat(1));
    CHECK(g0.eps == Rat(1));
    CHECK(g0.saturates_at_eps);

    HSModel g2 = hs_divisor_on_curve(2, 5, 1);
    CHECK(g2.a0 == Poly{Rat(5), Rat(-1)});
    CHECK(g2.a1_const == Rat(-1));

    CHECK(hs_divisor_on_curve(1, 3, 3).eps == Rat(1));
    CHECK_THROWS_AS(hs_divisor_on_curve(1, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(hs_divisor_on_curve(1, 0, 1), std::invalid_argument);
}

TEST_CASE("hs_curve_subscheme") {
    HSModel node = hs_curve_subscheme(2, 5, Rat(2), Rat(1), Rat(5, 2));
    QuotientHS qn = quotient_of(node);
    CHECK(qn.t0 == Poly{Rat(0), Rat(2)});
    CHECK(qn.t1 == Poly::constant(Rat(-1)));

    // smooth point (e = 1, rho = 0) matches the divisor model
    HSModel pt = hs_curve_subscheme(2, 5, Rat(1), Rat(0), Rat(5));
    HSModel div = hs_divisor_on_curve(2, 5, 1);
    CHECK(pt.a0 == div.a0);
    CHECK(pt.a1 == div.a1);
    CHECK(pt.a0_const == div.a0_const);
    CHECK(pt.a1_const == div.a1_const);

    HSModel e3 = hs_curve_subscheme(2, 7, Rat(3), Rat(2), Rat(2));
    QuotientHS q3 = quotient_of(e3);
    CHECK(q3.t0 == Poly{Rat(0), Rat(3)});
    CHECK(q3.t1 == Poly::constant(Rat(-2)));

    CHECK_THROWS_AS(hs_curve_subscheme(2, 5, Rat(0), Rat(0), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("hs_p2_fat_point carries full coefficients") {
    HSModel h = hs_p2_fat_point(2, 1);
    CHECK(h.a0 == Poly{Rat(2), Rat(0), Rat(-1, 2)});
    CHECK(h.a1 == Poly{Rat(3), Rat(-1, 2)});
    REQUIRE(h.higher.has_value());
    CHECK((*h.higher)[0] == Poly::constant(Rat(1)));
    CHECK(h.eps == Rat(2));
    CHECK(h.has_full_coefficients());
    CHECK(h.hilbert_polynomial().eval(Rat(3)) == Rat(28));  // chi(O(6)) on P^2
}

TEST_CASE("combine_disjoint") {
    HSModel p1 = hs_curve_subscheme(3, 7, Rat(1), Rat(0), Rat(7));
    HSModel p2 = hs_curve_subscheme(3, 7, Rat(1), Rat(0), Rat(4));
    HSModel both = combine_disjoint(p1, p2);
    QuotientHS q = quotient_of(both);
    CHECK(q.t0 == Poly{Rat(0), Rat(2)});
    CHECK(q.t1 == Poly());
    // min(7, 4) = 4 exceeds the positivity range of 7 - 2x; eps caps at 7/2
    CHECK(both.eps == Rat(7, 2));
    CHECK_FALSE(both.saturates_at_eps);

    // union with the empty subscheme changes nothing
    HSModel empty = empty_subscheme(7, 3);
    HSModel same = combine_disjoint(p1, empty);
    CHECK(same.a0 == p1.a0);
    CHECK(same.a1 == p1.a1);

    // node + smooth point on a genus-3 curve: a~_0 = 3x, a~_1 = -1
    HSModel node = hs_curve_subscheme(3, 7, Rat(2), Rat(1), Rat(7, 2));
    HSModel mix = combine_disjoint(node, p1);
    QuotientHS qm = quotient_of(mix);
    CHECK(qm.t0 == Poly{Rat(0), Rat(3)});
    CHECK(qm.t1 == Poly::constant(Rat(-1)));

    HSModel other = hs_curve_subscheme(3, 8, Rat(1), Rat(0), Rat(8));
    CHECK_THROWS_AS(combine_disjoint(p1, other), std::invalid_argument);
}

TEST_CASE("thicken") {
    HSModel pt = hs_curve_subscheme(1, 6, Rat(1), Rat(0), Rat(6));
    HSModel same = thicken(pt, 1);
    CHECK(same.a0 == pt.a0);
    CHECK(same.eps == pt.eps);

    HSModel twice = thicken(pt, 2);
    CHECK(quotient_of(twice).t0 == Poly{Rat(0), Rat(2)});
    CHECK(twice.eps == Rat(3));

    HSModel p2 = hs_point_on_smooth(2, Rat(1), Rat(-3), Rat(1), true);
    HSModel p2x3 = thicken(p2, 3);
    CHECK(p2x3.a0 == Poly{Rat(1, 2), Rat(0), Rat(-9, 2)});
    CHECK(p2x3.eps == Rat(1, 3));

    CHECK_THROWS_AS(thicken(pt, 0), std::invalid_argument);
}

TEST_CASE("constructor outputs satisfy the defining inequalities") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        HSModel h = testing::random_model(rng);
        CHECK(h.a0.eval(Rat(0)) == h.a0_const);
        CHECK(sign_on_interval(h.a0, Rat(0), h.eps, false).verdict ==
              SignVerdict::strictly_positive);
        Poly d = h.a0.derivative();
        if (!d.is_zero()) {
            auto v = sign_on_interval(-d, Rat(0), h.eps, false).verdict;
            CHECK((v == SignVerdict::strictly_positive ||
                   v == SignVerdict::nonnegative_with_zero ||
                   v == SignVerdict::identically_zero));
        }
    }
}

TEST_CASE("thicken composes multiplicatively") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        HSModel h = testing::random_model(rng);
        long a = rng.uniform(1, 3), b = rng.uniform(1, 3);
        HSModel lhs = thicken(thicken(h, a), b);
        HSModel rhs = thicken(h, a * b);
        CHECK(lhs.a0 == rhs.a0);
        CHECK(lhs.a1 == rhs.a1);
        CHECK(lhs.eps == rhs.eps);
    }
}

TEST_CASE("combine_disjoint is commutative and associative") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        long g = rng.uniform(0, 3), d = rng.uniform(2, 9);
        auto sub = [&](void) {
            Rat e = Rat(rng.uniform(1, 2 * d), 2);
            Rat eps = (Rat(d) / e) * rng.unit_rat();
            return hs_curve_subscheme(g, d, e, rng.rat(-3, 3, 2), eps);
        };
        HSModel a = sub(), b = sub(), c = sub();

        HSModel ab = combine_disjoint(a, b), ba = combine_disjoint(b, a);
        CHECK(ab.a0 == ba.a0);
        CHECK(ab.a1 == ba.a1);
        CHECK(ab.eps == ba.eps);

        HSModel abc1 = combine_disjoint(combine_disjoint(a, b), c);
        HSModel abc2 = combine_disjoint(a, combine_disjoint(b, c));
        CHECK(abc1.a0 == abc2.a0);
        CHECK(abc1.a1 == abc2.a1);
        CHECK(abc1.eps == abc2.eps);
    }
}

TEST_CASE("quotient of a thickening rescales the argument") {
    Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        HSModel h = testing::random_model(rng);
        long m = rng.uniform(1, 4);
        CHECK(quotient_of(thicken(h, m)).t0 == quotient_of(h).t0.scale_arg(Rat(m)));
        CHECK(quotient_of(thicken(h, m)).t1 == quotient_of(h).t1.scale_arg(Rat(m)));
    }
}

TEST_CASE("scale_polarisation transforms constants and eps") {
    HSModel h = hs_divisor_on_curve(2, 5, 1);
    HSModel s = scale_polarisation(h, 3);
    CHECK(s.a0_const == Rat(15));
    CHECK(s.a1_const == Rat(-1));
    CHECK(s.eps == Rat(15));
    CHECK(s.a0.eval(Rat(3)) == Rat(3) * h.a0.eval(Rat(1)));

    HSModel p2 = hs_p2_fat_point(1, 1);
    HSModel sp2 = scale_polarisation(p2, 2);
    CHECK(sp2.a0_const == Rat(2));
    CHECK(sp2.hilbert_polynomial().eval(Rat(1)) ==
          p2.hilbert_polynomial().eval(Rat(2)));  // chi(L^2)
}

TEST_CASE("validation rejects malformed models") {
    HSModel bad;
    bad.n = 1;
    bad.a0 = Poly{Rat(1), Rat(-1)};
    bad.a0_const = Rat(2);  // a0(0) != a0_const
    bad.a1 = Poly::constant(Rat(0));
    bad.a1_const = Rat(0);
    bad.eps = Rat(1);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad.a0_const = Rat(1);
    bad.eps = Rat(0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad.eps = Rat(2);  // a0 negative beyond x = 1
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    // increasing a0 is rejected
    HSModel inc;
    inc.n = 1;
    inc.a0 = Poly{Rat(1), Rat(1)};
    inc.a0_const = Rat(1);
    inc.a1 = Poly::constant(Rat(0));
    inc.a1_const = Rat(0);
    inc.eps = Rat(1);
    CHECK_THROWS_AS(inc.validate(), std::invalid_argument);
}
