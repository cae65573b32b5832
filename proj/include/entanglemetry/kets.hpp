// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entanglemetry/state.hpp"

namespace entanglemetry {

// Syntax tree of a Dirac ket expression. Grammar (whitespace insignificant):
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff? atom
//   atom   := ket | '(' expr ')' | '[' expr ']'
//   ket    := '|' [01]+ ('>' | U+27E9)
//   coeff  := factor ('*'? factor)*
//   factor := decimal ['/' (int | 'sqrt(' int ')')] | 'i' | 'w' ['^' int]
//           | 'sqrt(' int ')' | '(' scalar-expr ')'
//
// `w` is exp(2 pi i / 3). A parenthesized group with no ket inside is a
// scalar coefficient, which is how complex literals like (0.5-0.3i) print.
struct KetExpr {
  enum class Kind { kSum, kScaled, kKet, kGroup };

  Kind kind = Kind::kSum;
  std::vector<KetExpr> children;  // kSum terms; single child for kScaled, kGroup
  Complex coefficient{1.0, 0.0};  // kScaled
  std::string bits;               // kKet
  std::size_t position = 0;       // byte offset of the node in the source
};

KetExpr parse_ket_expression(std::string_view text);

// Accumulates amplitudes per basis index (leftmost ket character is party A)
// and normalizes under `policy`.
StateVector evaluate(const KetExpr& expr, NormPolicy policy = NormPolicy::kRenormalize);

StateVector parse_ket(std::string_view text, NormPolicy policy = NormPolicy::kRenormalize);

// A coefficient-only expression such as "0.5-2i", "-i", "w^2" or "1/sqrt(2)".
Complex parse_scalar(std::string_view text);

// Terms with |amplitude| > threshold in basis-index order, coefficients with
// 12 significant digits: "0.707106781187|0000> + 0.707106781187|1111>".
std::string print_ket(const StateVector& state, double threshold = 0.0);

}  // namespace entanglemetry
