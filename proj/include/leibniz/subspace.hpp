#pragma once

#include "leibniz/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leibniz {

/// Coordinate subspace held by its unique reduced-row-echelon basis, so
/// equality of subspaces is equality of representations.
class Subspace {
public:
    static Subspace from_rows(std::size_t ambient, const Matrix& rows);
    static Subspace from_rows(std::size_t ambient, const std::vector<Vec>& rows);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Solution space of m x = 0; ambient dimension is cols(m).
Subspace nullspace(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);

/// Intersection via the nullspace of the stacked constraint systems of the
/// two row spaces.
Subspace intersect(const Subspace& a, const Subspace& b);

bool contains(const Subspace& s, const Vec& v);
bool contains(const Subspace& outer, const Subspace& inner);

/// Coefficients of v in the RREF basis of s, or nullopt when v is outside s.
std::optional<Vec> coords_in_basis(const Subspace& s, const Vec& v);

struct QuotientMap {
    Matrix projection;  // (ambient - dim d) x ambient
    Matrix section;     // ambient x (ambient - dim d), right inverse of projection
};

/// Deterministic quotient by d: the quotient basis is the classes of the
/// non-pivot coordinates of d in increasing index order.
QuotientMap quotient_map(std::size_t ambient, const Subspace& d);

}  // namespace leibniz
