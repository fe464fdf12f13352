#pragma once

#include "ortho/rational.hpp"

#include <cstddef>
#include <vector>

namespace ortho {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t matrix_rank(RatMatrix m);

/// Affine rank of a point set minus one, i.e. the dimension of its affine
/// hull (-1 for an empty set, 0 for a single point).
long affine_dimension(const RatMatrix& points);

Rat dot(const RatVector& a, const RatVector& b);

/// Scales a rational vector (and optional attached scalar) by the unique
/// positive factor making all entries coprime integers.
void scale_to_coprime_integers(RatVector& v, Rat* attached = nullptr);

}  // namespace ortho
