#include <moduli/arrangement.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <sstream>

using namespace moduli;

namespace {

std::vector<Rational> covector(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (long long x : c) v.emplace_back(x);
    return v;
}

/// k lines in P^2 on the moment curve (1, t, t^2): every 3x3 minor is a
/// Vandermonde determinant, so the arrangement is generic.
HyperplaneArrangement moment_lines(int k) {
    std::vector<std::vector<Rational>> hp;
    for (int t = 0; t < k; ++t)
        hp.push_back(covector({1, t, static_cast<long long>(t) * t}));
    return HyperplaneArrangement(2, std::move(hp));
}

HyperplaneArrangement pencil_3() {
    // all through (0:0:1)
    return HyperplaneArrangement(
        2, {covector({1, 0, 0}), covector({0, 1, 0}), covector({1, 1, 0})});
}

const Flat* find_flat(const IntersectionLattice& l, const std::vector<int>& label) {
    for (const auto& f : l.flats)
        if (f.hyperplanes == label) return &f;
    return nullptr;
}

} // namespace

TEST_CASE("arrangement validation") {
    CHECK_THROWS_AS(HyperplaneArrangement(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(HyperplaneArrangement(2, {covector({0, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(HyperplaneArrangement(2, {covector({1, 0})}), std::invalid_argument);
    CHECK_NOTHROW(HyperplaneArrangement(2, {covector({1, 0, 0}), covector({1, 0, 0})}));
}

TEST_CASE("lattice of three generic lines") {
    auto lattice = lattice_from_arrangement(moment_lines(3));
    REQUIRE(lattice.flats.size() == 7); // empty + 3 singletons + 3 pairs
    CHECK(lattice.flats[0].hyperplanes.empty());
    CHECK(lattice.flats[0].rank == 0);
    int singletons = 0, pairs = 0;
    for (const auto& f : lattice.flats) {
        if (f.rank == 1) { CHECK(f.hyperplanes.size() == 1); ++singletons; }
        if (f.rank == 2) { CHECK(f.hyperplanes.size() == 2); ++pairs; }
    }
    CHECK(singletons == 3);
    CHECK(pairs == 3);
}

TEST_CASE("lattice of a pencil collapses the pairs") {
    auto lattice = lattice_from_arrangement(pencil_3());
    REQUIRE(lattice.flats.size() == 5); // empty + 3 singletons + one triple
    const Flat* top = find_flat(lattice, {0, 1, 2});
    REQUIRE(top != nullptr);
    CHECK(top->rank == 2);
}

TEST_CASE("lattice of four generic hyperplanes in P^3") {
    std::vector<std::vector<Rational>> hp;
    for (int t = 1; t <= 4; ++t)
        hp.push_back(covector({1, t, static_cast<long long>(t) * t,
                               static_cast<long long>(t) * t * t}));
    auto lattice = lattice_from_arrangement(HyperplaneArrangement(3, std::move(hp)));
    std::map<int, int> by_rank;
    for (const auto& f : lattice.flats) by_rank[f.rank]++;
    CHECK(by_rank[0] == 1);
    CHECK(by_rank[1] == 4);
    CHECK(by_rank[2] == 6);
    CHECK(by_rank[3] == 4);
    CHECK(lattice.flats.size() == 15);
}

TEST_CASE("lattice size bound") {
    CHECK_THROWS_AS(lattice_from_arrangement(moment_lines(13)), std::invalid_argument);
}

TEST_CASE("genericity") {
    CHECK(is_generic(moment_lines(3)));
    CHECK(is_generic(moment_lines(6)));
    CHECK_FALSE(is_generic(pencil_3()));
    // k = n hyperplanes are never generic
    CHECK_FALSE(is_generic(HyperplaneArrangement(2, {covector({1, 0, 0}), covector({0, 1, 0})})));
}

TEST_CASE("generic iff every flat label has exactly rank-many hyperplanes") {
    auto check_flats = [](const HyperplaneArrangement& a) {
        auto lattice = lattice_from_arrangement(a);
        for (const auto& f : lattice.flats)
            if (f.rank <= a.n && static_cast<int>(f.hyperplanes.size()) != f.rank) return false;
        return a.size() > a.n;
    };
    CHECK(check_flats(moment_lines(4)) == is_generic(moment_lines(4)));
    CHECK(check_flats(pencil_3()) == is_generic(pencil_3()));
}

TEST_CASE("flat ranks are monotone and bounded") {
    for (const auto& a : {moment_lines(4), pencil_3()}) {
        auto lattice = lattice_from_arrangement(a);
        for (const auto& f : lattice.flats) {
            CHECK(f.rank <= a.n);
            for (const auto& g : lattice.flats) {
                if (std::includes(g.hyperplanes.begin(), g.hyperplanes.end(),
                                  f.hyperplanes.begin(), f.hyperplanes.end()))
                    CHECK(f.rank <= g.rank);
            }
        }
    }
}

TEST_CASE("tutte evaluation examples") {
    auto l3 = lattice_from_arrangement(moment_lines(3));
    CHECK(tutte_eval(l3, 1, {0, 2, 4}) == 15);
    CHECK(tutte_eval(l3, 1, {0, 0, 0}) == 1);

    auto l4 = lattice_from_arrangement(moment_lines(4));
    CHECK(tutte_eval(l4, 1, {0, 2, 4, 6}) == 105);

    CHECK_THROWS_AS(tutte_eval(l3, 0, {1, 1, 1}), std::invalid_argument); // pole at q = 0
    CHECK_THROWS_AS(tutte_eval(l3, 1, {1, 1}), std::invalid_argument);    // arity
}

TEST_CASE("tutte at q=1 factors as prod(1+x_i) for generic arrangements") {
    std::mt19937 rng(20240812);
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 5);
    for (int k = 3; k <= 5; ++k) {
        auto lattice = lattice_from_arrangement(moment_lines(k));
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<Rational> xs;
            Rational expected = 1;
            for (int i = 0; i < k; ++i) {
                xs.emplace_back(num(rng), den(rng));
                expected *= 1 + xs.back();
            }
            CHECK(tutte_eval(lattice, 1, xs) == expected);
        }
    }
}

TEST_CASE("tutte pole detection at q=0 honors nonzero ranks only through values") {
    // q appears only through q^(-rank); with every x zero the value is 1,
    // but q = 0 is still rejected as a pole.
    auto l3 = lattice_from_arrangement(moment_lines(3));
    CHECK_THROWS_AS(tutte_eval(l3, 0, {0, 0, 0}), std::invalid_argument);
    // a non-trivial q exercises the rational powers
    CHECK(tutte_eval(l3, Rational(1, 2), {0, 0, 0}) == 1);
}

TEST_CASE("arrangement file parsing") {
    std::istringstream good(
        "# three lines\n"
        "2\n"
        "1/1 0/1 0/1\n"
        "0 1 0\n"
        "1 1 -1\n");
    auto a = parse_arrangement(good);
    CHECK(a.n == 2);
    CHECK(a.size() == 3);
    CHECK(a.hyperplanes[2][2] == -1);

    std::istringstream short_row("2\n1 0\n");
    CHECK_THROWS_WITH(parse_arrangement(short_row),
                      Catch::Matchers::ContainsSubstring("line 2"));

    std::istringstream bad_token("2\n1 x 0\n");
    CHECK_THROWS_WITH(parse_arrangement(bad_token),
                      Catch::Matchers::ContainsSubstring("malformed rational"));

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_arrangement(empty), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2") == -2);
    CHECK(rational_to_string(Rational(1, 2)) == "1/2");
    CHECK(rational_to_string(Rational(-3)) == "-3/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
