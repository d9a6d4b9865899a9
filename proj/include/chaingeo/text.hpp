// Copyright 2026 The chaingeo Authors.
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

#pragma once

#include <string>
#include <string_view>

#include "chaingeo/spread.hpp"

namespace chaingeo {

// Text forms. Scalars of Z use "p/q" or "t^3+t+1/t+1"; elements of K are
// "<Z>+a<Z>" with compound F2T scalars wrapped in parentheses; elements of L
// are "(<K>)+i(<K>)"; matrices list rows separated by ';' with entries
// separated by ','. Parsers also accept a bare Z (resp. K) where a K (resp. L)
// is expected.

KMatrix parse_k_matrix(const AlgebraContext& ctx, std::string_view text, std::size_t cols);

}  // namespace chaingeo
