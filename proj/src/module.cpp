#include "leibniz/module.hpp"

#include "leibniz/rng.hpp"

#include <stdexcept>

namespace leibniz {

namespace {

Matrix combination(const std::vector<Matrix>& family, const Vec& coeffs, std::size_t mod_dim) {
    Matrix r(mod_dim, mod_dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        r = r + coeffs[i] * family[i];
    }
    return r;
}

}  // namespace

std::vector<ModuleAxiomViolation> check_module_axioms(const LeibnizAlgebra& alg,
                                                      const LeibnizModule& mod) {
    if (alg.dim != mod.alg_dim) throw std::invalid_argument("check_module_axioms: dimension mismatch");
    std::vector<ModuleAxiomViolation> violations;
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Matrix lam_ij = combination(mod.lambda, alg.c[i][j], mod.mod_dim);
            Matrix rho_ij = combination(mod.rho, alg.c[i][j], mod.mod_dim);
            Matrix r1 = mod.lambda[i] * mod.lambda[j] - lam_ij - mod.lambda[j] * mod.lambda[i];
            Matrix r2 = mod.lambda[i] * mod.rho[j] - mod.rho[j] * mod.lambda[i] - rho_ij;
            Matrix r3 = rho_ij - mod.rho[j] * mod.rho[i] - mod.lambda[i] * mod.rho[j];
            if (!r1.is_zero()) violations.push_back({1, i, j, std::move(r1)});
            if (!r2.is_zero()) violations.push_back({2, i, j, std::move(r2)});
            if (!r3.is_zero()) violations.push_back({3, i, j, std::move(r3)});
        }
    return violations;
}

LeibnizModule adjoint_module(const LeibnizAlgebra& alg) {
    LeibnizModule mod{alg.dim, alg.dim, {}, {}};
    for (std::size_t i = 0; i < alg.dim; ++i) {
        mod.lambda.push_back(left_mult(alg, i));
        mod.rho.push_back(right_mult(alg, i));
    }
    return mod;
}

Matrix left_action(const LeibnizModule& mod, const Vec& x) {
    if (x.size() != mod.alg_dim) throw std::invalid_argument("left_action: length mismatch");
    return combination(mod.lambda, x, mod.mod_dim);
}

Matrix right_action(const LeibnizModule& mod, const Vec& x) {
    if (x.size() != mod.alg_dim) throw std::invalid_argument("right_action: length mismatch");
    return combination(mod.rho, x, mod.mod_dim);
}

Subspace rep_kernel(const LeibnizAlgebra& alg, const LeibnizModule& mod) {
    if (alg.dim != mod.alg_dim) throw std::invalid_argument("rep_kernel: dimension mismatch");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < mod.mod_dim; ++r)
        for (std::size_t c = 0; c < mod.mod_dim; ++c) {
            Vec lrow(mod.alg_dim), rrow(mod.alg_dim);
            for (std::size_t i = 0; i < mod.alg_dim; ++i) {
                lrow[i] = mod.lambda[i](r, c);
                rrow[i] = mod.rho[i](r, c);
            }
            rows.push_back(std::move(lrow));
            rows.push_back(std::move(rrow));
        }
    return nullspace(Matrix::from_rows(rows, mod.alg_dim));
}

bool is_faithful(const LeibnizAlgebra& alg, const LeibnizModule& mod) {
    return rep_kernel(alg, mod).dim() == 0;
}

LeibnizModule restrict_module(const LeibnizModule& mod, const AlgebraMorphism& emb,
                              const LeibnizAlgebra& source, const LeibnizAlgebra& target) {
    if (mod.alg_dim != target.dim) throw std::invalid_argument("restrict_module: dimension mismatch");
    if (!is_injective(emb) || !is_multiplicative(emb, source, target))
        throw std::invalid_argument("restrict_module: embedding is not a multiplicative injection");
    LeibnizModule r{source.dim, mod.mod_dim, {}, {}};
    for (std::size_t i = 0; i < source.dim; ++i) {
        Vec image = emb.matrix.col(i);
        r.lambda.push_back(left_action(mod, image));
        r.rho.push_back(right_action(mod, image));
    }
    return r;
}

bool check_patsourakos(const LeibnizModule& mod, std::size_t max_n, std::size_t samples,
                       std::uint64_t seed) {
    std::vector<Vec> elements;
    for (std::size_t i = 0; i < mod.alg_dim; ++i) elements.push_back(unit_vec(mod.alg_dim, i));
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) elements.push_back(rng.tuple(mod.alg_dim));
    for (const Vec& x : elements) {
        Matrix lam = left_action(mod, x);
        Matrix rho = right_action(mod, x);
        Matrix rho_pow = rho;       // rho^(k-1) entering iteration k
        Matrix lam_pow = Matrix::identity(mod.mod_dim);
        Rational sign(1);           // (-1)^(k-1) entering iteration k
        for (std::size_t k = 2; k <= max_n; ++k) {
            rho_pow = rho_pow * rho;
            lam_pow = lam_pow * lam;
            sign = -sign;
            if (rho_pow != sign * (rho * lam_pow)) return false;
        }
    }
    return true;
}

bool left_action_nilpotent(const LeibnizModule& mod, const Vec& x) {
    return is_nilpotent_matrix(left_action(mod, x));
}

bool right_action_nilpotent(const LeibnizModule& mod, const Vec& x) {
    return is_nilpotent_matrix(right_action(mod, x));
}

}  // namespace leibniz
