#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qbundle/presentation.hpp"

namespace qb {

using ScalarMatrix = std::vector<std::vector<QRat>>;
/// Matrix with entries in a presented algebra (row-major).
using PolyMatrix = std::vector<std::vector<NCPoly>>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
/// Exact inverse; throws MismatchError("singular matrix") when not invertible.
ScalarMatrix inverse(const ScalarMatrix& m);
/// Kronecker product a ⊗ b.
ScalarMatrix kronecker(const ScalarMatrix& a, const ScalarMatrix& b);

PolyMatrix zero_matrix(std::size_t rows, std::size_t cols);
PolyMatrix to_poly_matrix(const ScalarMatrix& m);
PolyMatrix multiply(const Presentation& p, const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b);
/// Entries of a that differ from b, as "(i,j)" labels.
std::vector<std::string> differing_entries(const Presentation& p, const PolyMatrix& a, const PolyMatrix& b);
NCPoly trace(const PolyMatrix& m);
PolyMatrix map_entries(const PolyMatrix& m, const std::function<NCPoly(const NCPoly&)>& f);

/// Nested bracket list of quoted expression strings, e.g. [["1", "alpha"], ["0", "1"]].
std::string format_matrix(const Presentation& p, const PolyMatrix& m);
PolyMatrix parse_matrix(const Presentation& p, std::string_view text);
std::string format_scalar_matrix(const ScalarMatrix& m);

}  // namespace qb
