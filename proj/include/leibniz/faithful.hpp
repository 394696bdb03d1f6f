#pragma once

#include "leibniz/splitting.hpp"

namespace leibniz {

enum class Branch { adjoint, construction };

/// Populated by actually running the checkers, never assumed.
struct Certificate {
    bool axioms_ok = false;
    std::size_t kernel_dim = 0;
    bool dim_bound_ok = false;
    bool leftnil_ok = false;
    bool rightnil_ok = false;

    bool all_pass() const {
        return axioms_ok && kernel_dim == 0 && dim_bound_ok && leftnil_ok && rightnil_ok;
    }
};

struct FaithfulResult {
    LeibnizModule module;  // over the input algebra
    std::size_t dim_v = 0;
    Branch branch = Branch::adjoint;
    Certificate certificate;
};

struct FaithfulOptions {
    bool force_construction = false;
    std::size_t samples = 200;
    std::uint64_t seed = 42;
};

/// The module on e plus B. For m = u + b (unique, U complements B):
/// lambda_m e = 0, rho_m e = b, lambda_m b' = u b', rho_m b' = 0.
LeibnizModule construct_v_module(const SplittingAlgebra& s);

/// Whole pipeline. Centre zero takes the algebra acting on itself;
/// otherwise A = left annihilator, build the splitting algebra, its module
/// V, and restrict along the embedding. Throws InternalError if any
/// certificate field fails.
FaithfulResult faithful_representation(const LeibnizAlgebra& alg, const FaithfulOptions& opts = {});

/// d_x nilpotent implies lambda_x nilpotent on V, over all basis elements
/// plus seeded random combinations.
bool check_left_nilpotency_transfer(const LeibnizAlgebra& alg, const FaithfulResult& result,
                                    std::size_t samples = 200, std::uint64_t seed = 42);

enum class RightNilpotency { holds, fails, not_applicable };

/// On the construction branch, rho_i rho_j = 0 for all basis pairs
/// (stronger than nilpotency). Not applicable on the adjoint branch.
RightNilpotency check_right_nilpotency(const FaithfulResult& result);

/// Nilpotent-case hypercentrality: the descending chain V_0 = V,
/// V_{i+1} = u-action image of V_i, must vanish within dim V steps.
/// Requires u subnormal with nilpotent restricted algebra.
bool check_hypercentral_nilpotent_proxy(const LeibnizAlgebra& alg, const Subspace& u,
                                        const LeibnizModule& mod);

}  // namespace leibniz
