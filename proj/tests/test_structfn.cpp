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

#include <doctest.h>

#include "core/context.hpp"
#include "structfn/regular_product.hpp"
#include "structfn/structfn.hpp"

using namespace dwa;

TEST_CASE("f-identities at the default generic points") {
  for (int N = 2; N <= 5; ++N)
    for (auto [q, t] : default_generic_points()) {
      auto c = make_generic_ctx(N, q, t);
      auto r = check_f_identities(c, 12);
      INFO(r.to_json(false).dump());
      CHECK(r.all_pass());
    }
}
