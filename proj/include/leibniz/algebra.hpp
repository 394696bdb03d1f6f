#pragma once

#include "leibniz/subspace.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Left Leibniz algebra given by its structure constants: c[i][j] is the
/// coordinate vector of the basis product e_i e_j.
struct LeibnizAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<Vec>> c;
    std::string name;

    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(std::size_t n, std::string label = "")
        : dim(n), c(n, std::vector<Vec>(n, Vec(n))), name(std::move(label)) {}
};

/// Linear map between algebras in coordinates; matrix is target_dim x
/// source_dim. Multiplicativity is checked where asserted, never assumed.
struct AlgebraMorphism {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    Matrix matrix;

    Vec apply(const Vec& v) const;
};

bool is_injective(const AlgebraMorphism& f);
bool is_multiplicative(const AlgebraMorphism& f, const LeibnizAlgebra& source,
                       const LeibnizAlgebra& target);

/// Bilinear extension of the structure constants.
Vec multiply(const LeibnizAlgebra& alg, const Vec& u, const Vec& v);

/// One failed instance of e_i (e_j e_k) = (e_i e_j) e_k + e_j (e_i e_k);
/// residual is left side minus right side.
struct LeibnizViolation {
    std::size_t i, j, k;
    Vec residual;
};

std::vector<LeibnizViolation> check_leibniz(const LeibnizAlgebra& alg);

/// Matrix of x -> e_i x on coordinates; column j is e_i e_j.
Matrix left_mult(const LeibnizAlgebra& alg, std::size_t i);
/// Matrix of x -> x e_i on coordinates; column j is e_j e_i.
Matrix right_mult(const LeibnizAlgebra& alg, std::size_t i);

/// Span of the squares, generated by e_i e_i and the polarizations
/// e_i e_j + e_j e_i.
Subspace leibniz_kernel(const LeibnizAlgebra& alg);

/// Two-sided annihilator {x | xL = 0 and Lx = 0}.
Subspace centre(const LeibnizAlgebra& alg);

/// {x | xL = 0}.
Subspace left_annihilator(const LeibnizAlgebra& alg);

/// Two-sided: L s and s L both land in s.
bool is_ideal(const LeibnizAlgebra& alg, const Subspace& s);
bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& s);

/// Quotient algebra on the deterministic quotient basis, with the
/// projection morphism (verified multiplicative on all basis pairs).
std::pair<LeibnizAlgebra, AlgebraMorphism> quotient_algebra(const LeibnizAlgebra& alg,
                                                            const Subspace& ideal);

/// Restriction of the product to a subalgebra in its RREF basis, with the
/// inclusion morphism.
std::pair<LeibnizAlgebra, AlgebraMorphism> subalgebra_on(const LeibnizAlgebra& alg,
                                                         const Subspace& s);

/// Smallest two-sided ideal containing s: iterate s <- s + L s + s L to a
/// fixed point.
Subspace ideal_closure(const LeibnizAlgebra& alg, const Subspace& s);

/// Decides subnormality by the fastest-descending ideal-closure series
/// L_0 = L, L_{i+1} = closure of u inside L_i. On success the chain runs
/// from u up to L.
std::pair<bool, std::vector<Subspace>> is_subnormal(const LeibnizAlgebra& alg, const Subspace& u);

/// L^1 = L, L^{k+1} = L L^k + L^k L, listed until stable.
std::vector<Subspace> lower_central_series(const LeibnizAlgebra& alg);

bool is_nilpotent_algebra(const LeibnizAlgebra& alg);

/// Raised when a construction's own re-verification fails; this signals an
/// implementation bug, never a legitimate runtime state.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace leibniz
