#pragma once

#include "leibniz/module.hpp"

#include <string>
#include <vector>

namespace leibniz {

/// Ambient algebra M with abelian ideal B, complement subalgebra U, the
/// embedding of the original algebra into M, and the image a_bar of the
/// ideal the construction started from. Invariants:
///   - b is an abelian ideal of m with B M = 0
///   - image(emb) + b = m and image(emb) intersect b = a_bar
///   - u is a subalgebra with u directly complementing b
///   - dim b = dim of the original algebra
struct SplittingAlgebra {
    LeibnizAlgebra m;
    Subspace b;
    Subspace u;
    AlgebraMorphism emb;
    Subspace a_bar;
};

/// W isomorphic to L as a left module, with zero right action.
LeibnizModule trivial_right_module(const LeibnizAlgebra& alg);

struct SplitExtension {
    LeibnizAlgebra algebra;     // basis: algebra block then module block
    AlgebraMorphism inclusion;  // of the acting algebra
    Subspace module_ideal;      // span of the module block
};

/// Algebra on L + V with product (x+v)(x'+v') = xx' + lambda_x v' + rho_{x'} v.
SplitExtension split_extension(const LeibnizAlgebra& alg, const LeibnizModule& mod);

/// Builds the splitting algebra for (alg, a): split extension X of the
/// trivial-right module, diagonal ideal D = {a - pi(a)}, quotient M = X/D,
/// B the image of the module block, U the image of E = {x - pi(x)}.
/// Requires a to be a two-sided ideal with a L = 0. Every invariant of the
/// result is re-verified; a failure raises InternalError.
SplittingAlgebra construct_splitting(const LeibnizAlgebra& alg, const Subspace& a);

/// Independent re-check of all SplittingAlgebra invariants plus
/// multiplicativity/injectivity of emb and emb(a) = a_bar. Violations are
/// data, not errors.
std::vector<std::string> verify_splitting(const LeibnizAlgebra& alg, const Subspace& a,
                                          const SplittingAlgebra& s);

}  // namespace leibniz
