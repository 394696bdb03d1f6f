#include "leibniz/matrix.hpp"
#include "leibniz/rng.hpp"
#include "leibniz/subspace.hpp"

#include <doctest.h>

using namespace leibniz;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows, std::size_t cols) {
    std::vector<Vec> vs;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(Rational(x));
        vs.push_back(std::move(v));
    }
    return Matrix::from_rows(vs, cols);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
    return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("rref of dependent rows") {
    auto [r, pivots] = rref(mat({{2, 4}, {1, 2}}, 2));
    CHECK(r == mat({{1, 2}}, 2));
    CHECK(pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref of the identity") {
    auto [r, pivots] = rref(Matrix::identity(3));
    CHECK(r == Matrix::identity(3));
    CHECK(pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of a zero row") {
    auto [r, pivots] = rref(mat({{0, 0}}, 2));
    CHECK(r.rows() == 0);
    CHECK(r.cols() == 2);
    CHECK(pivots.empty());
}

TEST_CASE("rref is idempotent and preserves the row space") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.int_in(0, 5));
        std::size_t cols = static_cast<std::size_t>(rng.int_in(1, 5));
        Matrix m = random_matrix(rng, rows, cols);
        auto [r, pivots] = rref(m);
        CHECK(rref(r).reduced == r);
        // Row spaces equal by mutual membership.
        Subspace sm = Subspace::from_rows(cols, m);
        Subspace sr = Subspace::from_rows(cols, r);
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(contains(sr, m.row(i)));
        for (std::size_t i = 0; i < r.rows(); ++i) CHECK(contains(sm, r.row(i)));
    }
}

TEST_CASE("nullspace basis and rank-nullity") {
    Subspace n = nullspace(mat({{1, 2}}, 2));
    CHECK(n.dim() == 1);
    CHECK(n.basis() == Matrix::from_rows({{Rational(1), Rational(-1, 2)}}, 2));

    CHECK(nullspace(Matrix::identity(4)).dim() == 0);
    CHECK(nullspace(Matrix(2, 3)).dim() == 3);

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.int_in(0, 5));
        std::size_t cols = static_cast<std::size_t>(rng.int_in(1, 5));
        Matrix m = random_matrix(rng, rows, cols);
        Subspace ns = nullspace(m);
        CHECK(rank(m) + ns.dim() == cols);
        for (std::size_t i = 0; i < ns.dim(); ++i) CHECK(is_zero(m.apply(ns.basis().row(i))));
    }
}

TEST_CASE("nilpotency by powers") {
    Matrix strict(3, 3);
    strict(0, 1) = Rational(1);
    strict(0, 2) = Rational(5);
    strict(1, 2) = Rational(-2);
    CHECK(is_nilpotent_matrix(strict));
    CHECK_FALSE(is_nilpotent_matrix(Matrix::identity(2)));
    CHECK(is_nilpotent_matrix(mat({{0, 1}, {0, 0}}, 2)));
    CHECK(is_nilpotent_matrix(Matrix(0, 0)));
    CHECK_THROWS_AS(is_nilpotent_matrix(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("matrix arithmetic shape errors") {
    CHECK_THROWS_AS(mat({{1}}, 1) * mat({{1, 2}, {3, 4}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(mat({{1}}, 1) + mat({{1, 2}}, 2), std::invalid_argument);
}

}
