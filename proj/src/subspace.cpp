#include "leibniz/subspace.hpp"

#include <stdexcept>

namespace leibniz {

Subspace Subspace::from_rows(std::size_t ambient, const Matrix& rows) {
    if (rows.cols() != ambient) throw std::invalid_argument("Subspace: ambient-dimension mismatch");
    auto [reduced, pivots] = rref(rows);
    return Subspace(ambient, std::move(reduced), std::move(pivots));
}

Subspace Subspace::from_rows(std::size_t ambient, const std::vector<Vec>& rows) {
    return from_rows(ambient, Matrix::from_rows(rows, ambient));
}

Subspace Subspace::zero(std::size_t ambient) {
    return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient) {
    return from_rows(ambient, Matrix::identity(ambient));
}

Subspace nullspace(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, f);
        rows.push_back(std::move(x));
    }
    return Subspace::from_rows(m.cols(), rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("sum: ambient-dimension mismatch");
    return Subspace::from_rows(a.ambient_dim(), stack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient-dimension mismatch");
    Matrix ca = nullspace(a.basis()).basis();
    Matrix cb = nullspace(b.basis()).basis();
    return nullspace(stack(ca, cb));
}

namespace {

// Reduces v against the RREF basis of s; what remains is the residual.
Vec reduce_against(const Subspace& s, const Vec& v) {
    Vec r = v;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Rational& c = r[s.pivots()[i]];
        if (c.is_zero()) continue;
        Rational f = c;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * s.basis()(i, j);
    }
    return r;
}

}  // namespace

bool contains(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient_dim()) throw std::invalid_argument("contains: ambient-dimension mismatch");
    return is_zero(reduce_against(s, v));
}

bool contains(const Subspace& outer, const Subspace& inner) {
    if (outer.ambient_dim() != inner.ambient_dim())
        throw std::invalid_argument("contains: ambient-dimension mismatch");
    for (std::size_t i = 0; i < inner.dim(); ++i) {
        if (!contains(outer, inner.basis().row(i))) return false;
    }
    return true;
}

std::optional<Vec> coords_in_basis(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient_dim()) throw std::invalid_argument("coords_in_basis: ambient-dimension mismatch");
    Vec coords(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) coords[i] = v[s.pivots()[i]];
    if (!is_zero(reduce_against(s, v))) return std::nullopt;
    return coords;
}

QuotientMap quotient_map(std::size_t ambient, const Subspace& d) {
    if (d.ambient_dim() != ambient) throw std::invalid_argument("quotient_map: ambient-dimension mismatch");
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : d.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ambient; ++j) {
        if (!is_pivot[j]) free_cols.push_back(j);
    }
    std::size_t q = free_cols.size();
    Matrix projection(q, ambient);
    Matrix section(ambient, q);
    for (std::size_t t = 0; t < q; ++t) {
        projection(t, free_cols[t]) = Rational(1);
        section(free_cols[t], t) = Rational(1);
    }
    // A pivot coordinate e_p of row i satisfies e_p = -sum_f d(i,f) e_f mod d.
    for (std::size_t i = 0; i < d.dim(); ++i) {
        std::size_t p = d.pivots()[i];
        for (std::size_t t = 0; t < q; ++t) projection(t, p) = -d.basis()(i, free_cols[t]);
    }
    return {std::move(projection), std::move(section)};
}

}  // namespace leibniz
