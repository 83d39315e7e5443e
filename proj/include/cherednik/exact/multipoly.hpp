// Copyright 2026 The cherednik-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHEREDNIK_EXACT_MULTIPOLY_HPP
#define CHEREDNIK_EXACT_MULTIPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cherednik/exact/param_scalar.hpp"
#include "cherednik/exact/sparse_poly.hpp"

namespace cherednik::exact {

/// Polynomial in x_1..x_l (or y_1..y_l) with parameter-valued coefficients.
using MultiPoly = SparsePoly<ParamScalar>;

/// Returns q with p == divisor * q. Throws InternalInconsistency when the
/// division is not exact.
MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& divisor);

/// Partial derivative in variable var.
MultiPoly derivative(const MultiPoly& p, std::size_t var);

/// Directional derivative sum_i direction[i] * d/dx_i.
MultiPoly directional_derivative(const MultiPoly& p, const std::vector<Cyclotomic>& direction);

/// Linear form sum_i coeffs[i] * x_i.
MultiPoly linear_form(const std::vector<Cyclotomic>& coeffs);

/// Substitution x_i -> sum_k images[i][k] x_k applied to a polynomial.
/// images must have one row per variable occurring in p.
MultiPoly linear_substitution(const MultiPoly& p, const std::vector<std::vector<Cyclotomic>>& images);

/// All exponent vectors in `vars` variables with total degree <= max_degree,
/// ordered by degree and then lexicographically.
std::vector<Monomial> monomials_up_to(std::size_t vars, int max_degree);

/// Prints with variable names prefix1, prefix2, ...
std::string to_string(const MultiPoly& p, const std::string& prefix = "x");

/// Monomial exponent vector padded to exactly `vars` entries.
std::vector<int> padded(const Monomial& m, std::size_t vars);

}  // namespace cherednik::exact

#endif  // CHEREDNIK_EXACT_MULTIPOLY_HPP
