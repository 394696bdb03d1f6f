#pragma once

#include "leibniz/algebra.hpp"

#include <vector>

namespace leibniz {

/// Built-in corpus. Every table passes check_leibniz; the unit tests pin
/// that down.
std::vector<LeibnizAlgebra> builtin_corpus();

LeibnizAlgebra abelian_algebra(std::size_t dim, std::string name = "");

/// dim 2, e0 e0 = e1.
LeibnizAlgebra leib2();

/// dim 2, e0 e1 = e1, e1 e0 = -e1 (non-nilpotent solvable Lie algebra).
LeibnizAlgebra lie_r2();

/// dim 3 Heisenberg: e0 e1 = e2, e1 e0 = -e2.
LeibnizAlgebra heis3();

/// Standard 3-dimensional simple Lie algebra: basis (e, f, h) with
/// ef = h, he = 2e, hf = -2f and antisymmetric counterparts.
LeibnizAlgebra sl2();

/// dim 3 null-filiform Leibniz: e0 e0 = e1, e0 e1 = e2.
LeibnizAlgebra nullfil3();

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b, std::string name = "");

}  // namespace leibniz
