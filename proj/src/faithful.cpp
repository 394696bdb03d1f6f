#include "leibniz/faithful.hpp"

#include "leibniz/rng.hpp"

#include <stdexcept>

namespace leibniz {

namespace {

// Inverse via row reduction of the augmented system; the input must be
// square and invertible.
Matrix inverse(const Matrix& m) {
    std::size_t n = m.rows();
    auto [reduced, pivots] = rref(stack(m.transpose(), Matrix::identity(n)).transpose());
    // reduced is [I | m^-1] when m is invertible
    if (pivots.size() != n) throw InternalError("inverse: singular matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (pivots[i] != i) throw InternalError("inverse: singular matrix");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
    return inv;
}

}  // namespace

LeibnizModule construct_v_module(const SplittingAlgebra& s) {
    const LeibnizAlgebra& m = s.m;
    std::size_t md = m.dim;
    std::size_t du = s.u.dim();
    std::size_t k = s.b.dim();
    if (du + k != md) throw InternalError("construct_v_module: U + B does not fill M");

    // Decomposition m_i = u + b, solved once against the stacked bases.
    Matrix basis_cols = stack(s.u.basis(), s.b.basis()).transpose();  // md x md
    Matrix decompose = inverse(basis_cols);

    LeibnizModule v{md, 1 + k, {}, {}};
    for (std::size_t i = 0; i < md; ++i) {
        Vec coef = decompose.apply(unit_vec(md, i));
        Vec u_part(md), b_part(md);
        for (std::size_t t = 0; t < du; ++t)
            u_part = add(u_part, scale(coef[t], s.u.basis().row(t)));
        for (std::size_t t = 0; t < k; ++t)
            b_part = add(b_part, scale(coef[du + t], s.b.basis().row(t)));

        Matrix lam(1 + k, 1 + k), rho(1 + k, 1 + k);
        for (std::size_t j = 0; j < k; ++j) {
            auto coords = coords_in_basis(s.b, multiply(m, u_part, s.b.basis().row(j)));
            if (!coords) throw InternalError("construct_v_module: U B left B");
            for (std::size_t r = 0; r < k; ++r) lam(1 + r, 1 + j) = (*coords)[r];
        }
        auto b_coords = coords_in_basis(s.b, b_part);
        if (!b_coords) throw InternalError("construct_v_module: decomposition left B");
        for (std::size_t r = 0; r < k; ++r) rho(1 + r, 0) = (*b_coords)[r];

        v.lambda.push_back(std::move(lam));
        v.rho.push_back(std::move(rho));
    }
    if (!check_module_axioms(m, v).empty())
        throw InternalError("construct_v_module: module axioms fail over M");
    return v;
}

FaithfulResult faithful_representation(const LeibnizAlgebra& alg, const FaithfulOptions& opts) {
    if (!check_leibniz(alg).empty())
        throw std::invalid_argument("faithful_representation: algebra fails the Leibniz identity");
    std::size_t n = alg.dim;

    FaithfulResult result;
    if (centre(alg).dim() == 0 && !opts.force_construction) {
        result.module = adjoint_module(alg);
        result.dim_v = n;
        result.branch = Branch::adjoint;
    } else {
        Subspace a = left_annihilator(alg);
        SplittingAlgebra s = construct_splitting(alg, a);
        LeibnizModule vm = construct_v_module(s);
        result.module = restrict_module(vm, s.emb, alg, s.m);
        result.dim_v = result.module.mod_dim;
        result.branch = Branch::construction;
    }

    Certificate cert;
    cert.axioms_ok = check_module_axioms(alg, result.module).empty();
    cert.kernel_dim = rep_kernel(alg, result.module).dim();
    cert.dim_bound_ok = result.dim_v <= n + 1;
    cert.leftnil_ok = check_left_nilpotency_transfer(alg, result, opts.samples, opts.seed);
    cert.rightnil_ok = check_right_nilpotency(result) != RightNilpotency::fails;
    result.certificate = cert;
    if (!cert.all_pass())
        throw InternalError("faithful_representation: certificate failure on " + alg.name);
    return result;
}

bool check_left_nilpotency_transfer(const LeibnizAlgebra& alg, const FaithfulResult& result,
                                    std::size_t samples, std::uint64_t seed) {
    if (result.module.alg_dim != alg.dim)
        throw std::invalid_argument("check_left_nilpotency_transfer: dimension mismatch");
    std::vector<Vec> elements;
    for (std::size_t i = 0; i < alg.dim; ++i) elements.push_back(unit_vec(alg.dim, i));
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) elements.push_back(rng.tuple(alg.dim));
    for (const Vec& x : elements) {
        Matrix d(alg.dim, alg.dim);
        for (std::size_t i = 0; i < alg.dim; ++i) {
            if (x[i].is_zero()) continue;
            d = d + x[i] * left_mult(alg, i);
        }
        if (!is_nilpotent_matrix(d)) continue;
        if (!left_action_nilpotent(result.module, x)) return false;
    }
    return true;
}

RightNilpotency check_right_nilpotency(const FaithfulResult& result) {
    if (result.branch != Branch::construction) return RightNilpotency::not_applicable;
    for (const Matrix& ri : result.module.rho)
        for (const Matrix& rj : result.module.rho) {
            if (!(ri * rj).is_zero()) return RightNilpotency::fails;
        }
    return RightNilpotency::holds;
}

bool check_hypercentral_nilpotent_proxy(const LeibnizAlgebra& alg, const Subspace& u,
                                        const LeibnizModule& mod) {
    if (mod.alg_dim != alg.dim)
        throw std::invalid_argument("check_hypercentral_nilpotent_proxy: dimension mismatch");
    if (!is_subalgebra(alg, u))
        throw std::invalid_argument("check_hypercentral_nilpotent_proxy: u is not a subalgebra");
    if (!is_subnormal(alg, u).first)
        throw std::invalid_argument("check_hypercentral_nilpotent_proxy: u is not subnormal");
    if (!is_nilpotent_algebra(subalgebra_on(alg, u).first))
        throw std::invalid_argument("check_hypercentral_nilpotent_proxy: u is not nilpotent");

    Subspace cur = Subspace::full(mod.mod_dim);
    for (std::size_t step = 0; step <= mod.mod_dim; ++step) {
        if (cur.dim() == 0) return true;
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < u.dim(); ++r) {
            Matrix lam = left_action(mod, u.basis().row(r));
            Matrix rho = right_action(mod, u.basis().row(r));
            for (std::size_t t = 0; t < cur.dim(); ++t) {
                rows.push_back(lam.apply(cur.basis().row(t)));
                rows.push_back(rho.apply(cur.basis().row(t)));
            }
        }
        Subspace next = Subspace::from_rows(mod.mod_dim, rows);
        if (next == cur) return false;
        cur = std::move(next);
    }
    return cur.dim() == 0;
}

}  // namespace leibniz
