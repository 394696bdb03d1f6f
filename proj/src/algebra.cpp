#include "leibniz/algebra.hpp"

#include <stdexcept>

namespace leibniz {

Vec AlgebraMorphism::apply(const Vec& v) const {
    if (v.size() != source_dim) throw std::invalid_argument("morphism apply: length mismatch");
    return matrix.apply(v);
}

bool is_injective(const AlgebraMorphism& f) {
    return rank(f.matrix) == f.source_dim;
}

bool is_multiplicative(const AlgebraMorphism& f, const LeibnizAlgebra& source,
                       const LeibnizAlgebra& target) {
    if (f.source_dim != source.dim || f.target_dim != target.dim) return false;
    if (f.matrix.rows() != f.target_dim || f.matrix.cols() != f.source_dim) return false;
    for (std::size_t i = 0; i < source.dim; ++i)
        for (std::size_t j = 0; j < source.dim; ++j) {
            Vec lhs = f.apply(source.c[i][j]);
            Vec rhs = multiply(target, f.matrix.col(i), f.matrix.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

Vec multiply(const LeibnizAlgebra& alg, const Vec& u, const Vec& v) {
    if (u.size() != alg.dim || v.size() != alg.dim)
        throw std::invalid_argument("multiply: length mismatch");
    Vec r(alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (v[j].is_zero()) continue;
            Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < alg.dim; ++k) r[k] += f * alg.c[i][j][k];
        }
    }
    return r;
}

std::vector<LeibnizViolation> check_leibniz(const LeibnizAlgebra& alg) {
    std::vector<LeibnizViolation> violations;
    std::size_t n = alg.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = multiply(alg, unit_vec(n, i), alg.c[j][k]);
                Vec rhs = add(multiply(alg, alg.c[i][j], unit_vec(n, k)),
                              multiply(alg, unit_vec(n, j), alg.c[i][k]));
                Vec residual = sub(lhs, rhs);
                if (!is_zero(residual)) violations.push_back({i, j, k, std::move(residual)});
            }
    return violations;
}

Matrix left_mult(const LeibnizAlgebra& alg, std::size_t i) {
    if (i >= alg.dim) throw std::invalid_argument("left_mult: index out of range");
    Matrix m(alg.dim, alg.dim);
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t k = 0; k < alg.dim; ++k) m(k, j) = alg.c[i][j][k];
    return m;
}

Matrix right_mult(const LeibnizAlgebra& alg, std::size_t i) {
    if (i >= alg.dim) throw std::invalid_argument("right_mult: index out of range");
    Matrix m(alg.dim, alg.dim);
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t k = 0; k < alg.dim; ++k) m(k, j) = alg.c[j][i][k];
    return m;
}

Subspace leibniz_kernel(const LeibnizAlgebra& alg) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < alg.dim; ++i) gens.push_back(alg.c[i][i]);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = i + 1; j < alg.dim; ++j) gens.push_back(add(alg.c[i][j], alg.c[j][i]));
    return Subspace::from_rows(alg.dim, gens);
}

namespace {

// Rows constraining x by x e_j = 0 for all j, in the coefficients of x.
std::vector<Vec> left_annihilator_constraints(const LeibnizAlgebra& alg) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t k = 0; k < alg.dim; ++k) {
            Vec row(alg.dim);
            for (std::size_t i = 0; i < alg.dim; ++i) row[i] = alg.c[i][j][k];
            rows.push_back(std::move(row));
        }
    return rows;
}

std::vector<Vec> right_annihilator_constraints(const LeibnizAlgebra& alg) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < alg.dim; ++j)
        for (std::size_t k = 0; k < alg.dim; ++k) {
            Vec row(alg.dim);
            for (std::size_t i = 0; i < alg.dim; ++i) row[i] = alg.c[j][i][k];
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace

Subspace centre(const LeibnizAlgebra& alg) {
    std::vector<Vec> rows = left_annihilator_constraints(alg);
    for (auto& r : right_annihilator_constraints(alg)) rows.push_back(std::move(r));
    return nullspace(Matrix::from_rows(rows, alg.dim));
}

Subspace left_annihilator(const LeibnizAlgebra& alg) {
    return nullspace(Matrix::from_rows(left_annihilator_constraints(alg), alg.dim));
}

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& s) {
    if (s.ambient_dim() != alg.dim) throw std::invalid_argument("is_ideal: ambient-dimension mismatch");
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec b = s.basis().row(r);
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Vec ej = unit_vec(alg.dim, j);
            if (!contains(s, multiply(alg, ej, b))) return false;
            if (!contains(s, multiply(alg, b, ej))) return false;
        }
    }
    return true;
}

bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& s) {
    if (s.ambient_dim() != alg.dim)
        throw std::invalid_argument("is_subalgebra: ambient-dimension mismatch");
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t t = 0; t < s.dim(); ++t) {
            if (!contains(s, multiply(alg, s.basis().row(r), s.basis().row(t)))) return false;
        }
    return true;
}

std::pair<LeibnizAlgebra, AlgebraMorphism> quotient_algebra(const LeibnizAlgebra& alg,
                                                            const Subspace& ideal) {
    if (!is_ideal(alg, ideal)) throw std::invalid_argument("quotient_algebra: input not an ideal");
    auto [projection, section] = quotient_map(alg.dim, ideal);
    std::size_t q = projection.rows();
    LeibnizAlgebra quot(q);
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t)
            quot.c[s][t] = projection.apply(multiply(alg, section.col(s), section.col(t)));
    AlgebraMorphism pi{alg.dim, q, projection};
    if (!is_multiplicative(pi, alg, quot))
        throw InternalError("quotient_algebra: projection is not multiplicative");
    return {std::move(quot), std::move(pi)};
}

std::pair<LeibnizAlgebra, AlgebraMorphism> subalgebra_on(const LeibnizAlgebra& alg,
                                                         const Subspace& s) {
    if (!is_subalgebra(alg, s))
        throw std::invalid_argument("subalgebra_on: subspace not closed under product");
    std::size_t r = s.dim();
    LeibnizAlgebra sub(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto coords = coords_in_basis(s, multiply(alg, s.basis().row(i), s.basis().row(j)));
            if (!coords) throw InternalError("subalgebra_on: product left the subspace");
            sub.c[i][j] = std::move(*coords);
        }
    AlgebraMorphism inclusion{r, alg.dim, s.basis().transpose()};
    return {std::move(sub), std::move(inclusion)};
}

Subspace ideal_closure(const LeibnizAlgebra& alg, const Subspace& s) {
    if (s.ambient_dim() != alg.dim)
        throw std::invalid_argument("ideal_closure: ambient-dimension mismatch");
    Subspace cur = Subspace::from_rows(alg.dim, s.basis());
    for (;;) {
        std::vector<Vec> gens;
        for (std::size_t r = 0; r < cur.dim(); ++r) {
            Vec b = cur.basis().row(r);
            gens.push_back(b);
            for (std::size_t j = 0; j < alg.dim; ++j) {
                Vec ej = unit_vec(alg.dim, j);
                gens.push_back(multiply(alg, ej, b));
                gens.push_back(multiply(alg, b, ej));
            }
        }
        Subspace next = Subspace::from_rows(alg.dim, gens);
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

std::pair<bool, std::vector<Subspace>> is_subnormal(const LeibnizAlgebra& alg, const Subspace& u) {
    if (!is_subalgebra(alg, u)) throw std::invalid_argument("is_subnormal: u is not a subalgebra");
    std::vector<Subspace> descending{Subspace::full(alg.dim)};
    Subspace cur = Subspace::full(alg.dim);
    for (;;) {
        if (cur == u) {
            std::vector<Subspace> chain(descending.rbegin(), descending.rend());
            return {true, std::move(chain)};
        }
        auto [sub, inclusion] = subalgebra_on(alg, cur);
        std::vector<Vec> u_rows;
        for (std::size_t r = 0; r < u.dim(); ++r) {
            auto coords = coords_in_basis(cur, u.basis().row(r));
            if (!coords) throw InternalError("is_subnormal: u escaped the series");
            u_rows.push_back(std::move(*coords));
        }
        Subspace closure = ideal_closure(sub, Subspace::from_rows(sub.dim, u_rows));
        std::vector<Vec> ambient_rows;
        for (std::size_t r = 0; r < closure.dim(); ++r)
            ambient_rows.push_back(inclusion.apply(closure.basis().row(r)));
        Subspace next = Subspace::from_rows(alg.dim, ambient_rows);
        if (next == cur) {
            std::vector<Subspace> chain(descending.rbegin(), descending.rend());
            return {false, std::move(chain)};
        }
        descending.push_back(next);
        cur = std::move(next);
    }
}

std::vector<Subspace> lower_central_series(const LeibnizAlgebra& alg) {
    std::vector<Subspace> terms{Subspace::full(alg.dim)};
    for (;;) {
        const Subspace& cur = terms.back();
        std::vector<Vec> gens;
        for (std::size_t r = 0; r < cur.dim(); ++r) {
            Vec b = cur.basis().row(r);
            for (std::size_t j = 0; j < alg.dim; ++j) {
                Vec ej = unit_vec(alg.dim, j);
                gens.push_back(multiply(alg, ej, b));
                gens.push_back(multiply(alg, b, ej));
            }
        }
        Subspace next = Subspace::from_rows(alg.dim, gens);
        if (next == cur) break;
        terms.push_back(std::move(next));
    }
    return terms;
}

bool is_nilpotent_algebra(const LeibnizAlgebra& alg) {
    return lower_central_series(alg).back().dim() == 0;
}

}  // namespace leibniz
