#pragma once

#include "leibniz/algebra.hpp"

#include <cstdint>
#include <vector>

namespace leibniz {

/// Bimodule stored as matrix families indexed by the algebra basis:
/// lambda[i] is the left action of e_i, rho[i] the right action, both
/// mod_dim x mod_dim. Actions of arbitrary elements are linear combinations.
struct LeibnizModule {
    std::size_t alg_dim = 0;
    std::size_t mod_dim = 0;
    std::vector<Matrix> lambda;
    std::vector<Matrix> rho;
};

/// One failed operator identity on a basis pair. Axioms:
///   1: lambda_i lambda_j = lambda_{e_i e_j} + lambda_j lambda_i
///   2: lambda_i rho_j    = rho_j lambda_i + rho_{e_i e_j}
///   3: rho_{e_i e_j}     = rho_j rho_i + lambda_i rho_j
/// Residual is left side minus right side, kept as a full matrix for
/// diagnostics.
struct ModuleAxiomViolation {
    int axiom;
    std::size_t i, j;
    Matrix residual;
};

std::vector<ModuleAxiomViolation> check_module_axioms(const LeibnizAlgebra& alg,
                                                      const LeibnizModule& mod);

/// The algebra acting on itself: lambda_i = left_mult(i), rho_i = right_mult(i).
LeibnizModule adjoint_module(const LeibnizAlgebra& alg);

Matrix left_action(const LeibnizModule& mod, const Vec& x);
Matrix right_action(const LeibnizModule& mod, const Vec& x);

/// {x | lambda_x = rho_x = 0}, via one stacked nullspace computation.
Subspace rep_kernel(const LeibnizAlgebra& alg, const LeibnizModule& mod);

bool is_faithful(const LeibnizAlgebra& alg, const LeibnizModule& mod);

/// Pulls a module over the target algebra back along an embedding, which
/// must be injective and multiplicative.
LeibnizModule restrict_module(const LeibnizModule& mod, const AlgebraMorphism& emb,
                              const LeibnizAlgebra& source, const LeibnizAlgebra& target);

/// rho_x^k = (-1)^(k-1) rho_x lambda_x^(k-1) for k = 2..max_n, on all basis
/// elements plus seeded random combinations.
bool check_patsourakos(const LeibnizModule& mod, std::size_t max_n, std::size_t samples = 100,
                       std::uint64_t seed = 42);

bool left_action_nilpotent(const LeibnizModule& mod, const Vec& x);
bool right_action_nilpotent(const LeibnizModule& mod, const Vec& x);

}  // namespace leibniz
