#pragma once

#include "leibniz/faithful.hpp"

#include <stdexcept>
#include <string>

namespace leibniz {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Algebra document: {"name": str, "dim": n, "products": [[i, j, k, coeff]...]}
/// with 0-based indices and coefficients as "p/q" / "p" literals (bare JSON
/// integers also accepted). Omitted entries are zero; duplicate (i,j,k) keys
/// are rejected.
LeibnizAlgebra parse_algebra(const std::string& text);

/// Canonical emission: product keys sorted by (i, j, k), canonical rational
/// literals, two-space indentation. parse(emit(x)) = x bit-exactly.
std::string emit_algebra(const LeibnizAlgebra& alg);

/// Module document: {"alg_dim": n, "mod_dim": m, "lambda": [...], "rho": [...]}
/// where each action list holds alg_dim matrices as mod_dim x mod_dim grids
/// of literals. Unknown keys (e.g. an embedded certificate) are ignored.
LeibnizModule parse_module(const std::string& text);

std::string emit_module(const LeibnizModule& mod);

/// Module document with the embedded certificate block, so a single
/// artifact is self-validating.
std::string emit_faithful_document(const FaithfulResult& result);

std::string branch_name(Branch b);

}  // namespace leibniz
