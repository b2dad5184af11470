#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclochar/affine.hpp"
#include "cyclochar/free_vector.hpp"
#include "cyclochar/linear_system.hpp"
#include "cyclochar/rational.hpp"

using namespace cyclochar;

namespace {

using Vec = FreeVector<std::string>;

// deterministic small rationals, independent of distribution internals
Rational rand_rat(std::mt19937& rng) {
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 3);
    return Rational(num, den);
}

Vec rand_vec(std::mt19937& rng) {
    static const std::vector<std::string> keys{"a", "b", "c", "d", "e"};
    Vec v;
    std::size_t terms = rng() % 4;
    for (std::size_t t = 0; t < terms; ++t)
        v.add(keys[rng() % keys.size()], rand_rat(rng));
    return v;
}

}  // namespace

TEST_CASE("rational io") {
    CHECK(to_string(rat(1, 2)) == "1/2");
    CHECK(to_string(rat(-4, 2)) == "-2");
    CHECK(parse_rational("7/21") == rat(1, 3));
    CHECK(parse_rational("-5") == rat(-5));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("linear_combine examples") {
    Vec x = Vec::basis("k", 1), y = Vec::basis("k", -1);
    CHECK(linear_combine(Rational(1), x, Rational(1), y).is_zero());

    Vec half = Vec::basis("k", rat(1, 2));
    CHECK(linear_combine(Rational(2), half, Rational(0), Vec{}) == Vec::basis("k", 1));

    Vec k1 = Vec::basis("k1", 1), k2 = Vec::basis("k2", 1);
    Vec sum = linear_combine(Rational(1), k1, Rational(1), k2);
    CHECK(sum.coeff("k1") == 1);
    CHECK(sum.coeff("k2") == 1);
    CHECK(sum.size() == 2);
}

TEST_CASE("canonical form properties under random combinations") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Vec x = rand_vec(rng), y = rand_vec(rng), z = rand_vec(rng);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        Rational a = rand_rat(rng);
        CHECK(a * (x + y) == linear_combine(a, x, a, y));
        Vec sum = x + y;
        for (const auto& [k, c] : sum.terms())
            CHECK_FALSE(c.is_zero());
    }
}

TEST_CASE("tensor product on words") {
    using WVec = FreeVector<std::vector<std::string>>;
    WVec x = WVec::basis({"X"}, 1);
    WVec y = WVec::basis({"Y"}, 1);
    CHECK(tensor_product(x, y) == WVec::basis({"X", "Y"}, 1));

    WVec xy = linear_combine(Rational(1), x, Rational(-1), y);
    WVec one = WVec::basis({"1"}, 1);
    WVec r = tensor_product(xy, one);
    CHECK(r.coeff({"X", "1"}) == 1);
    CHECK(r.coeff({"Y", "1"}) == -1);

    CHECK(tensor_product(WVec{}, y).is_zero());
}

TEST_CASE("solve_linear_system basic") {
    LinearSystem sys;
    sys.unknowns = {"x", "y"};
    sys.add_row({1, -1}, 0);
    sys.add_row({1, 1}, 2);
    auto sol = solve_linear_system(sys);
    REQUIRE(sol.consistent);
    CHECK(sol.particular == Row{1, 1});
    CHECK(sol.nullspace.empty());

    LinearSystem bad;
    bad.unknowns = {"x"};
    bad.add_row({1}, 1);
    bad.add_row({1}, 2);
    CHECK_FALSE(solve_linear_system(bad).consistent);
}

TEST_CASE("solver reproduces rhs by substitution on random systems") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t nu = 1 + rng() % 4, nr = 1 + rng() % 5;
        LinearSystem sys;
        for (std::size_t u = 0; u < nu; ++u)
            sys.unknowns.push_back("u" + std::to_string(u));
        Row chosen(nu);
        for (auto& c : chosen)
            c = rand_rat(rng);
        for (std::size_t r = 0; r < nr; ++r) {
            Row row(nu);
            Rational rhs(0);
            for (std::size_t u = 0; u < nu; ++u) {
                row[u] = rand_rat(rng);
                rhs += row[u] * chosen[u];
            }
            sys.add_row(std::move(row), rhs);
        }
        auto sol = solve_linear_system(sys);
        REQUIRE(sol.consistent);  // built from a known solution
    }
}

TEST_CASE("kernel_and_rank basics") {
    Matrix eye{{1, 0}, {0, 1}};
    auto k = kernel_and_rank(eye);
    CHECK(k.rank == 2);
    CHECK(k.kernel.empty());

    Matrix zero(3, Row(3, Rational(0)));
    k = kernel_and_rank(zero);
    CHECK(k.rank == 0);
    CHECK(k.kernel.size() == 3);
}

TEST_CASE("row equivalence via rref") {
    Matrix a{{1, 1, 0}, {0, 1, 1}};
    Matrix b{{1, 0, -1}, {0, 2, 2}};
    CHECK(row_equivalent(a, b));
    Matrix c{{1, 0, 0}, {0, 1, 1}};
    CHECK_FALSE(row_equivalent(a, c));
}

TEST_CASE("affine coefficients") {
    Affine r = Affine::unknown("r"), s = Affine::unknown("s");
    Affine e = Affine(2) * r + s - r;
    CHECK(e.coeff_of("r") == 1);
    CHECK(e.coeff_of("s") == 1);
    CHECK((r - r).is_zero());
    CHECK_THROWS_AS(r *= s, std::domain_error);
    Affine sub = e.substitute({{"r", Affine(3)}});
    CHECK(sub.coeff_of("r") == 0);
    CHECK(sub.constant() == 3);
    CHECK(sub.coeff_of("s") == 1);
}
