#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "qbundle/tensor.hpp"

namespace qb {

/// Polynomial in the central variable t with tensor coefficients, keyed by t-degree.
using TTensor = std::map<int, TensorElem>;

/// Expression grammar shared by presentation files and the CLI:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := leg ('(x)' leg)*             one leg per tensor factor
///   leg    := factor (('*' | '/' | juxtaposition) factor)*
///   factor := atom ['^' ['-'] INT]
///   atom   := INT | 'q' | 't' | GENERATOR | '(' sum-within-leg ')'
///
/// Division and negative exponents require a scalar operand. Results are
/// normalized in each leg's presentation.
NCPoly parse_expression(const Presentation& p, std::string_view text);
TensorElem parse_tensor(const std::vector<const Presentation*>& legs, std::string_view text);
/// Same grammar with the central symbol `t` enabled.
TTensor parse_t_tensor(const std::vector<const Presentation*>& legs, std::string_view text);

}  // namespace qb
