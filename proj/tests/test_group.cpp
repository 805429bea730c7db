#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igt/group.hpp"

#include <random>
#include <set>

using namespace igt;

namespace {

FiniteGroup s3() {
    return FiniteGroup::permutation_closure({{2, 1, 3}, {2, 3, 1}});
}

Mat diag(std::initializer_list<Cyc> d, long n) {
    Mat m(static_cast<long>(d.size()), static_cast<long>(d.size()), n);
    long i = 0;
    for (const Cyc& c : d) {
        m.at(i, i) = c;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("S3 structure") {
    FiniteGroup g = s3();
    CHECK(g.order() == 6);
    const auto& cc = g.classes();
    REQUIRE(cc.reps.size() == 3);
    // identity class first, then by (rep order, size)
    CHECK(cc.sizes[0] == 1);
    std::multiset<std::size_t> sizes(cc.sizes.begin(), cc.sizes.end());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
    CHECK(g.exponent() == 6);

    // class equation
    std::size_t total = 0;
    for (auto s : cc.sizes) {
        total += s;
        CHECK(g.order() % s == 0);
    }
    CHECK(total == g.order());
}

TEST_CASE("abelian group classes are singletons") {
    FiniteGroup c6 = FiniteGroup::permutation_closure({{2, 3, 4, 5, 6, 1}});
    CHECK(c6.order() == 6);
    CHECK(c6.classes().reps.size() == 6);
    for (auto s : c6.classes().sizes) CHECK(s == 1);
}

TEST_CASE("scalar matrix closure") {
    Cyc i = Cyc::zeta_power(24, 6);
    FiniteGroup g = FiniteGroup::matrix_closure({diag({i, i}, 24)}, FiniteGroup::Realization::Linear);
    CHECK(g.order() == 4);
    for (std::size_t e = 0; e < g.order(); ++e) CHECK(g.element_matrix(e).is_scalar());

    FiniteGroup pg = FiniteGroup::matrix_closure({diag({i, i}, 24)}, FiniteGroup::Realization::Projective);
    CHECK(pg.order() == 1);
}

TEST_CASE("projective normalization identifies scalar multiples") {
    Cyc i = Cyc::zeta_power(24, 6);
    Mat m(2, 2, 24);
    m.at(0, 1) = Cyc(-1, 24);
    m.at(1, 0) = Cyc::one(24);
    FiniteGroup pg = FiniteGroup::matrix_closure({m}, FiniteGroup::Realization::Projective);
    CHECK(pg.order() == 2); // rotation of order 4 in GL, order 2 in PGL
    CHECK(pg.index_of_matrix(m) == pg.index_of_matrix(m.scaled(i)));

    FiniteGroup lg = FiniteGroup::matrix_closure({m}, FiniteGroup::Realization::Linear);
    CHECK(lg.order() == 4);
    CHECK(lg.index_of_matrix(m.scaled(i)) == std::nullopt);
}

TEST_CASE("words evaluate to their elements") {
    FiniteGroup g = s3();
    for (std::size_t e = 0; e < g.order(); ++e) {
        std::size_t acc = 0;
        for (int w : g.word(e)) acc = g.mul(acc, g.generator_element(static_cast<std::size_t>(w)));
        CHECK(acc == e);
    }
}

TEST_CASE("index arithmetic is consistent") {
    FiniteGroup g = s3();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int it = 0; it < 50; ++it) {
        std::size_t a = pick(rng), b = pick(rng);
        std::size_t ab = g.mul(a, b);
        // permutation oracle
        auto pa = g.element_permutation(a);
        auto pb = g.element_permutation(b);
        std::vector<long> expect(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) expect[i] = pb[static_cast<std::size_t>(pa[i])];
        CHECK(g.element_permutation(ab) == expect);
        CHECK(g.mul(a, g.inverse(a)) == 0);
        CHECK(g.mul(g.inverse(a), a) == 0);
    }
}

TEST_CASE("power map") {
    FiniteGroup g = s3();
    for (std::size_t e = 0; e < g.order(); ++e) {
        CHECK(g.power(e, 1) == e);
        CHECK(g.power(e, static_cast<long>(g.exponent())) == 0);
        CHECK(g.power(e, g.element_order(e)) == 0);
    }
}

TEST_CASE("subgroup_where") {
    FiniteGroup g = s3();
    // even permutations form A3
    auto sgn = [&](std::size_t e) {
        auto p = g.element_permutation(e);
        int s = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) s = -s;
        return s == 1;
    };
    auto a3 = g.subgroup_where(sgn);
    CHECK(a3.order() == 3);

    auto whole = g.subgroup_where([](std::size_t) { return true; });
    CHECK(whole.order() == 6);

    // a non-subgroup: identity plus a single transposition's conjugates
    CHECK_THROWS_AS(g.subgroup_where([&](std::size_t e) {
        return e == 0 || g.classes().class_of[e] == g.classes().class_of[g.generator_element(0)];
    }), precondition_error);
}

TEST_CASE("derived subgroup of S3 is A3") {
    FiniteGroup g = s3();
    CHECK(g.derived_subgroup().order() == 3);
}

TEST_CASE("closure is closed under multiplication") {
    FiniteGroup g = s3();
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) CHECK(g.mul(a, b) < g.order());
}

TEST_CASE("cap exceeded") {
    CHECK_THROWS_AS(FiniteGroup::permutation_closure({{2, 3, 4, 5, 6, 1}}, 3), cap_exceeded);
}

TEST_CASE("streaming matrices matches element_matrix") {
    Cyc i = Cyc::zeta_power(4, 1);
    Mat a = diag({i, -i}, 4);
    Mat b(2, 2, 4);
    b.at(0, 1) = Cyc(-1, 4);
    b.at(1, 0) = Cyc::one(4);
    FiniteGroup q8 = FiniteGroup::matrix_closure({a, b}, FiniteGroup::Realization::Linear);
    CHECK(q8.order() == 8);
    std::size_t seen = 0;
    q8.for_each_element_matrix([&](std::size_t e, const Mat& m) {
        CHECK(m == q8.element_matrix(e));
        ++seen;
    });
    CHECK(seen == 8);
}
