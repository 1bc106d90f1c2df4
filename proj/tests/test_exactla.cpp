#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace singcat;

namespace {

Mat random_mat(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 2)
{
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const long v = static_cast<long>(rng() % 9) - 4;
            m(i, j) = (rng() % 5 < static_cast<unsigned>(zero_bias)) ? Scalar(f, 0L) : Scalar(f, v);
        }
    return m;
}

}  // namespace

TEST_SUITE("exactla") {

TEST_CASE("rref examples")
{
    const Field q;
    auto id = rref(Mat::identity(q, 2));
    CHECK(id.rank == 2);
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto z = rref(Mat(q, 2, 3));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());

    auto r = rref(Mat::from_rows(q, {{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples")
{
    const Field q;
    CHECK(kernel_basis(Mat::identity(q, 3)).cols() == 0);
    CHECK(kernel_basis(Mat(q, 2, 2)).cols() == 2);
    const Mat k = kernel_basis(Mat::from_rows(q, {{1, 2}, {2, 4}}));
    REQUIRE(k.cols() == 1);
    // proportional to (-2, 1)
    CHECK(k(0, 0) == Scalar(q, -2L) * k(1, 0));
    CHECK_FALSE(k(1, 0).is_zero());
}

TEST_CASE("solve examples")
{
    const Field q;
    const Mat b = Mat::from_rows(q, {{3, -1}, {0, 7}});
    auto x = solve(Mat::identity(q, 2), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK_FALSE(solve(Mat(q, 2, 2), Mat::from_rows(q, {{1}, {0}})));
    const Mat a = Mat::from_rows(q, {{1, 2}, {2, 4}});
    const Mat rhs = Mat::from_rows(q, {{1}, {2}});
    auto y = solve(a, rhs);
    REQUIRE(y);
    CHECK(a * *y == rhs);
}

TEST_CASE("scalars are exact and reduced")
{
    const Field q;
    CHECK(Scalar::parse(q, "3/6").to_string() == "1/2");
    CHECK(Scalar::parse(q, "-4/2").to_string() == "-2");
    CHECK((Scalar::parse(q, "1/3") + Scalar::parse(q, "2/3")).is_one());
    CHECK_THROWS_AS(Scalar(q, 0L).inverse(), Error);
    const Field p = Field::prime(7);
    CHECK((Scalar(p, 3L) * Scalar(p, 5L)).to_string() == "1");
    CHECK(Scalar::parse(p, "1/2").to_string() == "4");
    CHECK((Scalar(p, 3L).inverse() * Scalar(p, 3L)).is_one());
    CHECK_THROWS_AS((void)(Scalar(q, 1L) + Scalar(p, 1L)), Error);
    CHECK_THROWS_AS(Field::prime(4), InputError);
    CHECK_THROWS_AS(Field::prime(1), InputError);
    CHECK(Field::prime(101).name() == "GF(101)");
    CHECK(q.name() == "QQ");
}

TEST_CASE("random matrices: rref idempotent, rank-nullity, solve and inverse")
{
    for (Field f : {Field::rationals(), Field::prime(101), Field::prime(2)}) {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            const Mat m = random_mat(f, r, c, rng);
            const auto once = rref(m);
            CHECK(rref(once.reduced).reduced == once.reduced);
            CHECK(once.rank == rank(m));
            const Mat k = kernel_basis(m);
            CHECK(once.rank + k.cols() == c);
            CHECK((m * k).is_zero());

            const Mat x0 = random_mat(f, c, 2, rng);
            const Mat b = m * x0;
            auto x = solve(m, b);
            REQUIRE(x);
            CHECK(m * *x == b);

            const Mat sq = random_mat(f, 4, 4, rng, 1);
            if (auto inv = inverse(sq)) {
                CHECK((sq * *inv).is_identity());
                CHECK(rank(sq) == 4);
            } else {
                CHECK(rank(sq) < 4);
            }
            const Mat cs = column_space(m);
            CHECK(cs.cols() == once.rank);
        }
    }
}

TEST_CASE("incremental elimination agrees with the dense kernel")
{
    const Field f = Field::prime(101);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat m = random_mat(f, 6, 5, rng);
        RowEchelon re(f, 5);
        for (std::size_t i = 0; i < m.rows(); ++i)
            re.add(m.row(i));
        CHECK(re.rank() == rank(m));
        const Mat k = re.kernel_basis();
        CHECK(k.cols() == 5 - rank(m));
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("extend_basis completes a span")
{
    const Field q;
    const Mat span = Mat::from_rows(q, {{1}, {1}, {0}});
    const Mat added = extend_basis(span, Mat::identity(q, 3));
    CHECK(added.cols() == 2);
    const Mat both[] = {span, added};
    CHECK(rank(hstack(q, 3, both)) == 3);
}

}
