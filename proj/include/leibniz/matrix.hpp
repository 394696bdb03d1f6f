#pragma once

#include "leibniz/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibniz {

/// Coordinate tuple over the rationals.
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);
std::string str(const Vec& v);

/// Dense row-major matrix of rationals. Degenerate shapes (0 x n, n x 0)
/// are legal everywhere.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    /// This matrix applied to a coordinate tuple (times column vector).
    Vec apply(const Vec& v) const;

    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

Matrix operator*(const Rational& c, const Matrix& m);

/// Stacks the rows of a on top of the rows of b (equal column counts).
Matrix stack(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;                    // zero rows dropped
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Unique reduced row echelon form; row space is preserved.
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// True iff m^k = 0 where k is the side length (Cayley-Hamilton bound).
/// Throws std::invalid_argument on non-square input.
bool is_nilpotent_matrix(const Matrix& m);

std::string str(const Matrix& m);

}  // namespace leibniz
