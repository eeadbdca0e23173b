// Copyright 2026 The dwa-verify Authors
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

#include <vector>

#include "core/context.hpp"
#include "fock/fock.hpp"
#include "relations/relation_engine.hpp"
#include "report/report.hpp"

namespace dwa {

using GenericWeight = HighestWeight<AlgNum>;

/// Quadratic relation with i = 1 against its explicit right-hand side.
CheckRecord verify_w1wj(const GenericCtx& c, int j, const RelationWindow& w, const GenericWeight& hw);

/// Quadratic relation with i = 2, explicit right-hand side.
CheckRecord verify_w2wj(const GenericCtx& c, int j, const RelationWindow& w, const GenericWeight& hw);

/// General quadratic relation with f^{a,b} W^a W^b products on the right.
CheckRecord verify_wiwj(const GenericCtx& c, int i, int j, const RelationWindow& w, const GenericWeight& hw);

/// i = 2: the explicit right-hand side, the general one, and the general one
/// rewritten through the normal ordering formula must all equal the left.
CheckRecord verify_cross_engine(const GenericCtx& c, int j, const RelationWindow& w, const GenericWeight& hw);

/// Normal ordering formula for f^{i,j}(r^{-1}) W^i(rz) W^j(z), r = s^r_exp,
/// one mode n at a time.
CheckRecord verify_nowwj(const GenericCtx& c, int i, int j, int r_exp, const RelationWindow& w,
                         const GenericWeight& hw);

enum class FusionKind { W1Wj, WiWj };

/// Fusion of currents at the poles of the structure function, both as an
/// operator identity on modes and on the vacuum two-point function.
/// sign = +1 or -1 selects the pole.
CheckRecord verify_fusion(const GenericCtx& c, FusionKind kind, int i, int j, int sign, const RelationWindow& w,
                          const GenericWeight& hw);

/// Pole set of f^{i,j}(z2/z1) <W^i(z1) W^j(z2)> from a rebuilt rational
/// function, compared with {p^{+-((j-i)/2+k)}}.
CheckRecord verify_poles(const GenericCtx& c, int i, int j, int order, const GenericWeight& hw);

/// The relation suites over their default grids for one N and one point.
Report relation_suite_w1wj(const GenericCtx& c, const RelationWindow& w);
Report relation_suite_w2wj(const GenericCtx& c, const RelationWindow& w);
Report relation_suite_wiwj(const GenericCtx& c, const RelationWindow& w);

}  // namespace dwa
