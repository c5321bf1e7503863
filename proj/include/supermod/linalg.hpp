#pragma once

// Exact linear algebra over the integers and rationals.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "supermod/rational.hpp"

namespace supermod::linalg {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination. Rows may have any common length.
std::size_t rank(IntMatrix rows);
/// Rank of a rational matrix (rows are scaled to integers first).
std::size_t rank(const RatMatrix& rows);

/// Solves the square system A x = b; nullopt if A is singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

/// Inverse of a square matrix; nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (positive multiple, gcd of entries 1). The zero vector maps to zeros.
std::vector<mpz_class> primitive_integer(const std::vector<Rational>& v);
/// Divides an integer vector by the gcd of its entries.
void make_primitive(std::vector<mpz_class>& v);

}  // namespace supermod::linalg
