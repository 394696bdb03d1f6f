#include "leibniz/splitting.hpp"

#include <stdexcept>

namespace leibniz {

LeibnizModule trivial_right_module(const LeibnizAlgebra& alg) {
    LeibnizModule mod{alg.dim, alg.dim, {}, {}};
    for (std::size_t i = 0; i < alg.dim; ++i) {
        mod.lambda.push_back(left_mult(alg, i));
        mod.rho.emplace_back(alg.dim, alg.dim);
    }
    return mod;
}

SplitExtension split_extension(const LeibnizAlgebra& alg, const LeibnizModule& mod) {
    if (!check_module_axioms(alg, mod).empty())
        throw std::invalid_argument("split_extension: module fails the axioms");
    std::size_t n = alg.dim;
    std::size_t m = mod.mod_dim;
    LeibnizAlgebra x(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) x.c[i][j][k] = alg.c[i][j][k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) x.c[i][n + j][n + k] = mod.lambda[i](k, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) x.c[n + i][j][n + k] = mod.rho[j](k, i);

    Matrix incl(n + m, n);
    for (std::size_t i = 0; i < n; ++i) incl(i, i) = Rational(1);
    std::vector<Vec> ideal_rows;
    for (std::size_t j = 0; j < m; ++j) ideal_rows.push_back(unit_vec(n + m, n + j));
    return {std::move(x), AlgebraMorphism{n, n + m, std::move(incl)},
            Subspace::from_rows(n + m, ideal_rows)};
}

SplittingAlgebra construct_splitting(const LeibnizAlgebra& alg, const Subspace& a) {
    if (!check_leibniz(alg).empty())
        throw std::invalid_argument("construct_splitting: algebra fails the Leibniz identity");
    if (!is_ideal(alg, a)) throw std::invalid_argument("construct_splitting: a is not an ideal");
    std::size_t n = alg.dim;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero(multiply(alg, a.basis().row(r), unit_vec(n, j))))
                throw std::invalid_argument("construct_splitting: a L != 0");
        }

    SplitExtension se = split_extension(alg, trivial_right_module(alg));
    const LeibnizAlgebra& x = se.algebra;

    // D = {a_hat - pi(a_hat)} over the RREF basis of a; pi is the coordinate
    // identity L -> W, so each row is [a_hat | -a_hat].
    std::vector<Vec> d_rows;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        Vec row(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = a.basis()(r, j);
            row[n + j] = -a.basis()(r, j);
        }
        d_rows.push_back(std::move(row));
    }
    Subspace d = Subspace::from_rows(2 * n, d_rows);

    // X D lands in D and D X vanishes (the latter needs a L = 0).
    for (std::size_t r = 0; r < d.dim(); ++r) {
        Vec drow = d.basis().row(r);
        for (std::size_t t = 0; t < 2 * n; ++t) {
            Vec et = unit_vec(2 * n, t);
            if (!contains(d, multiply(x, et, drow)))
                throw InternalError("construct_splitting: D is not a left ideal of X");
            if (!is_zero(multiply(x, drow, et)))
                throw InternalError("construct_splitting: D X != 0");
        }
    }

    auto [m, projection] = quotient_algebra(x, d);

    std::vector<Vec> b_rows;
    for (std::size_t j = 0; j < n; ++j) b_rows.push_back(projection.apply(unit_vec(2 * n, n + j)));
    Subspace b = Subspace::from_rows(m.dim, b_rows);

    std::vector<Vec> u_rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e_minus_w(2 * n);
        e_minus_w[i] = Rational(1);
        e_minus_w[n + i] = Rational(-1);
        u_rows.push_back(projection.apply(e_minus_w));
    }
    Subspace u = Subspace::from_rows(m.dim, u_rows);

    Matrix emb_matrix(m.dim, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec img = projection.apply(unit_vec(2 * n, i));
        for (std::size_t r = 0; r < m.dim; ++r) emb_matrix(r, i) = img[r];
    }
    AlgebraMorphism emb{n, m.dim, std::move(emb_matrix)};

    std::vector<Vec> a_bar_rows;
    for (std::size_t r = 0; r < a.dim(); ++r) a_bar_rows.push_back(emb.apply(a.basis().row(r)));
    Subspace a_bar = Subspace::from_rows(m.dim, a_bar_rows);

    SplittingAlgebra result{std::move(m), std::move(b), std::move(u), std::move(emb),
                            std::move(a_bar)};
    auto violations = verify_splitting(alg, a, result);
    if (!violations.empty())
        throw InternalError("construct_splitting: self-verification failed: " + violations.front());
    return result;
}

std::vector<std::string> verify_splitting(const LeibnizAlgebra& alg, const Subspace& a,
                                          const SplittingAlgebra& s) {
    std::vector<std::string> violations;
    const LeibnizAlgebra& m = s.m;
    std::size_t md = m.dim;

    if (s.b.ambient_dim() != md || s.u.ambient_dim() != md || s.a_bar.ambient_dim() != md) {
        violations.push_back("subspaces do not live in M");
        return violations;
    }
    if (s.emb.source_dim != alg.dim || s.emb.target_dim != md ||
        s.emb.matrix.rows() != md || s.emb.matrix.cols() != alg.dim) {
        violations.push_back("embedding has the wrong shape");
        return violations;
    }

    if (!check_leibniz(m).empty()) violations.push_back("M fails the Leibniz identity");

    // B is an abelian ideal with B M = 0.
    bool bm_zero = true;
    for (std::size_t r = 0; r < s.b.dim() && bm_zero; ++r)
        for (std::size_t j = 0; j < md && bm_zero; ++j) {
            if (!is_zero(multiply(m, s.b.basis().row(r), unit_vec(md, j)))) bm_zero = false;
        }
    if (!bm_zero) violations.push_back("B M != 0");
    bool b_abelian = true;
    for (std::size_t r = 0; r < s.b.dim() && b_abelian; ++r)
        for (std::size_t t = 0; t < s.b.dim() && b_abelian; ++t) {
            if (!is_zero(multiply(m, s.b.basis().row(r), s.b.basis().row(t)))) b_abelian = false;
        }
    if (!b_abelian) violations.push_back("B is not abelian");
    bool mb_in_b = true;
    for (std::size_t j = 0; j < md && mb_in_b; ++j)
        for (std::size_t r = 0; r < s.b.dim() && mb_in_b; ++r) {
            if (!contains(s.b, multiply(m, unit_vec(md, j), s.b.basis().row(r)))) mb_in_b = false;
        }
    if (!mb_in_b) violations.push_back("M B is not contained in B");

    if (!is_injective(s.emb)) violations.push_back("embedding is not injective");
    if (!is_multiplicative(s.emb, alg, m)) violations.push_back("embedding is not multiplicative");

    std::vector<Vec> image_rows;
    for (std::size_t i = 0; i < alg.dim; ++i) image_rows.push_back(s.emb.matrix.col(i));
    Subspace image = Subspace::from_rows(md, image_rows);
    if (sum(image, s.b).dim() != md) violations.push_back("image(emb) + B != M");
    if (intersect(image, s.b) != s.a_bar) violations.push_back("L intersect B != A");

    std::vector<Vec> emb_a_rows;
    for (std::size_t r = 0; r < a.dim(); ++r) emb_a_rows.push_back(s.emb.apply(a.basis().row(r)));
    if (Subspace::from_rows(md, emb_a_rows) != s.a_bar) violations.push_back("emb(a) != a_bar");

    if (!is_subalgebra(m, s.u)) violations.push_back("U is not a subalgebra");
    if (sum(s.u, s.b).dim() != md) violations.push_back("U + B != M");
    if (intersect(s.u, s.b).dim() != 0) violations.push_back("U intersect B != 0");

    if (s.b.dim() != alg.dim) violations.push_back("dim B != dim L");
    return violations;
}

}  // namespace leibniz
