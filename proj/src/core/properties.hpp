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

#include "report/report.hpp"

namespace dwa {

/// Window rule for products: on random sparse operands cut from longer
/// "true" series, every retained product coefficient equals the brute-force
/// convolution of the true series, so unknown terms never leak in.
CheckRecord check_window_products(int samples, unsigned seed);

}  // namespace dwa
