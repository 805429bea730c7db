#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igt/linalg.hpp"

#include <random>

using namespace igt;

namespace {

Mat random_mat(std::mt19937_64& rng, long r, long c, long n) {
    std::uniform_int_distribution<long> num(-5, 5);
    Mat m(r, c, n);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m.at(i, j) = Cyc(num(rng), n);
    return m;
}

Mat from_longs(std::initializer_list<std::initializer_list<long>> rows, long n) {
    Mat m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()), n);
    long i = 0;
    for (auto& r : rows) {
        long j = 0;
        for (long v : r) m.at(i, j++) = Cyc(v, n);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("rref basics") {
    Mat id = Mat::identity(3, 24);
    auto r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.rank == 3);

    Mat z(4, 3, 24);
    CHECK(rref(z).rank == 0);

    // [[1, i], [i, -1]] has rank 1: second row is i * first
    Mat m(2, 2, 24);
    Cyc i = Cyc::zeta_power(24, 6);
    m.at(0, 0) = Cyc::one(24);
    m.at(0, 1) = i;
    m.at(1, 0) = i;
    m.at(1, 1) = Cyc(-1, 24);
    CHECK(rref(m).rank == 1);
}

TEST_CASE("rref idempotence on random matrices") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 25; ++it) {
        Mat m = random_mat(rng, 4, 6, 12);
        auto r1 = rref(m);
        auto r2 = rref(r1.mat);
        CHECK(r1.mat == r2.mat);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("nullspace") {
    Mat m(1, 2, 24);
    m.at(0, 0) = Cyc::one(24);
    m.at(0, 1) = Cyc::one(24);
    Subspace s = nullspace(m);
    CHECK(s.dim() == 1);
    std::vector<Cyc> v{Cyc::one(24), Cyc(-1, 24)};
    CHECK(s.contains(v));

    CHECK(nullspace(Mat::identity(4, 24)).dim() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 25; ++it) {
        Mat m = random_mat(rng, 3, 5, 8);
        CHECK(nullspace(m).dim() + rref(m).rank == m.cols());
    }
}

TEST_CASE("det, trace, inverse") {
    CHECK(trace(Mat::identity(6, 24)).rational_value() == 6);

    Mat d(2, 2, 24);
    d.at(0, 0) = Cyc::zeta_power(24, 1);
    d.at(1, 1) = Cyc::zeta_power(24, 23);
    CHECK(det(d) == Cyc::one(24));

    std::mt19937_64 rng(5);
    for (int it = 0; it < 15; ++it) {
        Mat m = random_mat(rng, 4, 4, 8);
        Cyc dm = det(m);
        if (dm.is_zero()) {
            CHECK_THROWS_AS(matinv(m), precondition_error);
        } else {
            CHECK(matinv(m) * m == Mat::identity(4, 8));
        }
    }
}

TEST_CASE("eigenprojection") {
    // diag(1,-1), order 2, lambda=-1 -> diag(0,1)
    Mat m = from_longs({{1, 0}, {0, -1}}, 24);
    Mat p = eigenprojection(m, 2, Cyc(-1, 24));
    CHECK(p == from_longs({{0, 0}, {0, 1}}, 24));

    // identity, lambda = -1 -> zero projector
    CHECK(eigenprojection(Mat::identity(3, 24), 2, Cyc(-1, 24)).is_zero());

    // swap, lambda = 1 -> 1/2 [[1,1],[1,1]]
    Mat sw = from_longs({{0, 1}, {1, 0}}, 24);
    Mat q = eigenprojection(sw, 2, Cyc::one(24));
    Mat expect(2, 2, 24);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) expect.at(i, j) = Cyc(QQ(1) / 2, 24);
    CHECK(q == expect);

    CHECK_THROWS_AS(eigenprojection(sw, 3, Cyc::one(24)), precondition_error);
}

TEST_CASE("eigenprojection properties") {
    // projectors of a finite-order matrix: idempotent, commute with m, sum to I
    Mat m = from_longs({{0, -1}, {1, 0}}, 24); // order 4 rotation
    Mat sum(2, 2, 24);
    for (long j = 0; j < 4; ++j) {
        Cyc lam = Cyc::root_of_unity(24, 4, j);
        Mat p = eigenprojection(m, 4, lam);
        CHECK(p * p == p);
        CHECK(m * p == p * m);
        CHECK(m * p == p.scaled(lam));
        sum = sum + p;
    }
    CHECK(sum.is_identity());
}

TEST_CASE("intersection of subspaces") {
    // xy-plane cap yz-plane = y-axis
    Mat xy = from_longs({{1, 0, 0}, {0, 1, 0}}, 24);
    Mat yz = from_longs({{0, 1, 0}, {0, 0, 1}}, 24);
    std::vector<Subspace> spaces{Subspace::from_rows(xy), Subspace::from_rows(yz)};
    Subspace got = intersect(spaces);
    CHECK(got.dim() == 1);
    std::vector<Cyc> y{Cyc::zero(24), Cyc::one(24), Cyc::zero(24)};
    CHECK(got.contains(y));

    std::vector<Subspace> same{spaces[0], spaces[0]};
    CHECK(intersect(same) == spaces[0]);
}

TEST_CASE("subspace canonical equality") {
    Mat a = from_longs({{1, 1, 0}, {0, 0, 1}}, 24);
    Mat b = from_longs({{2, 2, 2}, {0, 0, -5}}, 24);
    CHECK(Subspace::from_rows(a) == Subspace::from_rows(b));
    CHECK(Subspace::from_rows(a).contains(Subspace::from_rows(b)));
}
