#include "leibniz/matrix.hpp"

#include <stdexcept>

namespace leibniz {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Rational(1);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::string str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("apply: length mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("stack: column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

Rref rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(lead, j));
        Rational inv = Rational(1) / r(lead, col);
        for (std::size_t j = 0; j < r.cols(); ++j) r(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col).is_zero()) continue;
            Rational f = r(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= f * r(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    Matrix reduced(pivots.size(), r.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) reduced(i, j) = r(i, j);
    return {reduced, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

bool is_nilpotent_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_nilpotent_matrix: non-square input");
    std::size_t k = m.rows();
    if (k == 0) return true;
    // m^k = 0 iff m^(2^ceil(log2 k)) = 0; square up to the bound.
    Matrix p = m;
    for (std::size_t pow = 1; pow < k; pow *= 2) {
        if (p.is_zero()) return true;
        p = p * p;
    }
    return p.is_zero();
}

std::string str(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ", ";
        s += str(m.row(i));
    }
    return s + "]";
}

}  // namespace leibniz
