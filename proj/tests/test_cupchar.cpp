#include <catch2/catch_amalgamated.hpp>

#include "cyclochar/cupchar.hpp"

using namespace cyclochar;

namespace {

const HnGenerator X1 = Xgen(1);
const HnGenerator Y1 = Ygen(1, 1);
const HnGenerator D1 = Dgen(1, {1, 1});

Elementary el(std::initializer_list<GenWord> legs, Rational c = 1) {
    Elementary t;
    t.add(TensorWord(legs), c);
    return t;
}

Twisted codim1_phi() {
    Twisted phi;
    phi.add({{}, {{X1}}}, 1);   // 1* (x) 1 (x) X
    phi.add({{0}, {{D1}}}, -1); // - S (x) 1 (x) d1
    return phi;
}

}  // namespace

TEST_CASE("reduce_to_elementary on the displayed expressions") {
    // tau(Y(a0) d1(a1)) -> -d1 Y
    TensorElement raw;
    raw.add({{Y1}, {D1}}, 1);
    CHECK(reduce_to_elementary(1, raw) == el({{D1, Y1}}, -1));

    // tau(a0 d1(a1)) is already elementary
    raw = TensorElement{};
    raw.add({{}, {D1}}, 1);
    CHECK(reduce_to_elementary(1, raw) == el({{D1}}));

    // tau(X(a0) a1) -> legs from S_delta(X) = -X + d1 Y over one slot
    raw = TensorElement{};
    raw.add({{X1}, {}}, 1);
    Elementary expect = el({{X1}}, -1) + el({{D1, Y1}});
    CHECK(reduce_to_elementary(1, raw) == expect);
}

TEST_CASE("slot-0 elimination is order independent") {
    std::vector<TensorElement> samples;
    {
        TensorElement a;
        a.add({{Y1, X1}, {D1}, {Y1}}, 1);
        samples.push_back(a);
        TensorElement b;
        b.add({{D1, Y1, Y1}, {Y1}, {X1}}, rat(1, 2));
        samples.push_back(b);
        TensorElement c;
        c.add({{X1, X1}, {D1, Y1}}, 1);
        c.add({{Y1}, {X1}}, -2);
        samples.push_back(c);
        TensorElement d;  // an n = 2 expression in the shape of the ansatz
        d.add({{Dgen(1, {2, 1}), Ygen(2, 1)}, {Xgen(2)}, {Ygen(1, 2)}}, 1);
        samples.push_back(d);
    }
    for (std::size_t t = 0; t < samples.size(); ++t) {
        int n = (t == 3) ? 2 : 1;
        CHECK(reduce_to_elementary(n, samples[t], true) ==
              reduce_to_elementary(n, samples[t], false));
    }
}

TEST_CASE("elementary b and t") {
    // b(d1) = 1 (x) d1 - coproduct(d1) + d1 (x) 1 = 0 (primitive)
    CHECK(elementary_b(1, el({{D1}})).is_zero());
    // t(d1) = -d1
    CHECK(elementary_t(1, el({{D1}})) == el({{D1}}, -1));
}

TEST_CASE("raw trace expressions rotate to slot order") {
    RawTraceExpression e;
    e.append(hn_gen(D1), 1);
    e.append(hn_gen(Y1), 2);
    e.append(hn_one(), 0);
    TensorElement t = e.to_tensor();
    TensorElement expect;
    expect.add({{}, {D1}, {Y1}}, 1);
    CHECK(t == expect);

    // (2,0,1) is a legitimate rotation; (0,2,1) is not
    RawTraceExpression rot;
    rot.append(hn_gen(Y1), 2);
    rot.append(hn_one(), 0);
    rot.append(hn_gen(D1), 1);
    TensorElement t2 = rot.to_tensor();
    TensorElement expect2;
    expect2.add({{}, {D1}, {Y1}}, 1);
    CHECK(t2 == expect2);

    RawTraceExpression bad;
    bad.append(hn_one(), 0);
    bad.append(hn_one(), 2);
    bad.append(hn_one(), 1);
    CHECK_THROWS_AS(bad.to_tensor(), std::invalid_argument);
}

TEST_CASE("chi_phi of the theta class is -GV") {
    Cochain theta = Cochain::basis({{0}, {}});  // R in C^0(K, V)
    Elementary got = shuffle_cup(1, theta, codim1_phi());
    CHECK(got == el({{D1}}, -1));
}

TEST_CASE("chi_phi of 1 (x) Y + 1/2 theta (x) Y^2 matches the display") {
    Cochain x = Cochain::basis({{}, {{Y1}}}) +
                Cochain::basis({{0}, {{Y1, Y1}}}, rat(1, 2));
    Elementary got = shuffle_cup(1, x, codim1_phi());
    Elementary expect = el({{X1}, {Y1}}) + el({{Y1}, {X1}}, -1) +
                        el({{Y1, Y1}, {D1}}, rat(1, 2)) + el({{D1}, {Y1, Y1}}, rat(1, 2)) +
                        el({{Y1}, {D1, Y1}});
    CHECK(got == expect);
}

TEST_CASE("degree additivity and zero inputs") {
    Cochain theta = Cochain::basis({{0}, {}});
    Elementary got = shuffle_cup(1, theta, codim1_phi());
    CHECK(got.terms().begin()->first.size() == 1);  // 0 + 1

    CHECK(shuffle_cup(1, Cochain{}, codim1_phi()).is_zero());
    CHECK(shuffle_cup(1, theta, Twisted{}).is_zero());

    Cochain x = Cochain::basis({{}, {{Y1}}}) +
                Cochain::basis({{0}, {{Y1, Y1}}}, rat(1, 2));
    CHECK(shuffle_cup(1, x, codim1_phi()).terms().begin()->first.size() == 2);
}

TEST_CASE("cup output of the codim-1 cocycle pair is b-closed and t-eigen") {
    Twisted phi = codim1_phi();
    Cochain theta = Cochain::basis({{0}, {}});
    Cochain x = Cochain::basis({{}, {{Y1}}}) +
                Cochain::basis({{0}, {{Y1, Y1}}}, rat(1, 2));
    for (const Cochain& gen : {theta, x}) {
        Elementary img = shuffle_cup(1, gen, phi);
        int deg = static_cast<int>(img.terms().begin()->first.size());
        CHECK(elementary_b(1, img).is_zero());
        Rational eig(deg % 2 == 0 ? 1 : -1);
        CHECK(elementary_t(1, img) == eig * img);
    }
}
