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

#include "cli/dump.hpp"

#include <map>
#include <sstream>

#include "characters/characters.hpp"
#include "core/context.hpp"
#include "structfn/structfn.hpp"
#include "zeta/zeta.hpp"

namespace dwa {

namespace {

struct ParsedId {
  std::string kind;
  std::map<std::string, std::string> args;
};

ParsedId parse_id(const std::string& id) {
  ParsedId p;
  std::stringstream ss(id);
  std::string part;
  std::getline(ss, p.kind, ':');
  while (std::getline(ss, part, ':')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UnknownIdError("malformed id component '" + part + "' in " + id);
    p.args[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return p;
}

int int_arg(const ParsedId& p, const std::string& name, const std::string& id) {
  auto it = p.args.find(name);
  if (it == p.args.end()) throw UnknownIdError(id + ": missing " + name);
  try {
    return std::stoi(it->second);
  } catch (const std::logic_error&) {
    throw UnknownIdError(id + ": " + name + " is not an integer");
  }
}

Rat rat_arg(const ParsedId& p, const std::string& name, const std::string& id) {
  auto it = p.args.find(name);
  if (it == p.args.end()) throw UnknownIdError(id + ": missing " + name);
  try {
    Rat r(it->second);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UnknownIdError(id + ": " + name + " is not rational");
  }
}

void expect_args(const ParsedId& p, std::initializer_list<const char*> names, const std::string& id) {
  if (p.args.size() != names.size()) throw UnknownIdError(id + ": unexpected arguments");
  for (const char* n : names)
    if (!p.args.count(n)) throw UnknownIdError(id + ": missing " + std::string(n));
}

template <class K>
Json window_coeffs(const LaurentWindow<K>& w, int order) {
  Json c = Json::array();
  for (int n = 0; n <= order; ++n) c.push_back(scalar_json(w.coeff({n})));
  return c;
}

Json rat_list(const std::vector<Rat>& v) {
  Json c = Json::array();
  for (const auto& x : v) c.push_back(x.get_str());
  return c;
}

}  // namespace

Json dump_ids() {
  return {{"f:N=<n>:i=<i>:j=<j>", "structure function f^{i,j}(x) at the generic point (q, t)"},
          {"g:N=<n>:k=<k>:mu=<mu>:nu=<nu>", "root-of-unity structure function g^{mu,nu}(x) over Q(eta), eta^{2N} = 1"},
          {"a:N=<n>:i=<i>:beta=<b>", "a^i_{2m} coefficients, m = 1..order"},
          {"bernoulli", "B_1..B_order, all positive"},
          {"zeta", "zeta(1-2m), m = 1..order"},
          {"partitions", "1/(y;y)_inf to y^order"},
          {"char:k=<k>:j=<j>", "character series to y^order, rational exponents"}};
}

Json dump_series(const std::string& id, int order, const Rat& q, const Rat& t) {
  if (order < 0) throw std::invalid_argument("dump order must be >= 0");
  ParsedId p = parse_id(id);
  Json out = {{"id", id}, {"order", order}};
  if (p.kind == "f") {
    expect_args(p, {"N", "i", "j"}, id);
    int N = int_arg(p, "N", id), i = int_arg(p, "i", id), j = int_arg(p, "j", id);
    if (N < 2 || i < 0 || j < 0 || i > N || j > N) throw std::invalid_argument(id + ": need N >= 2 and 0 <= i, j <= N");
    auto c = make_generic_ctx(N, q, t);
    out["point"] = {{"q", q.get_str()}, {"t", t.get_str()}};
    out["field"] = c.field->describe();
    out["coeffs"] = window_coeffs(f_series(c, i, j, order), order);
  } else if (p.kind == "g") {
    expect_args(p, {"N", "k", "mu", "nu"}, id);
    int N = int_arg(p, "N", id), k = int_arg(p, "k", id), mu = int_arg(p, "mu", id), nu = int_arg(p, "nu", id);
    if (N < 2 || k < 1) throw std::invalid_argument(id + ": need N >= 2 and k >= 1");
    out["root_of_unity_order"] = 2 * N;
    out["coeffs"] = window_coeffs(g_series(N, k, mu, nu, order), order);
  } else if (p.kind == "a") {
    expect_args(p, {"N", "i", "beta"}, id);
    out["coeffs"] = rat_list(a_coefficients(int_arg(p, "N", id), int_arg(p, "i", id), rat_arg(p, "beta", id), std::max(order, 1)));
  } else if (p.kind == "bernoulli" || p.kind == "zeta") {
    expect_args(p, {}, id);
    std::vector<Rat> v;
    for (int m = 1; m <= order; ++m) v.push_back(p.kind == "zeta" ? zeta_negative_odd(m) : bernoulli(m));
    out["coeffs"] = rat_list(v);
  } else if (p.kind == "partitions") {
    expect_args(p, {}, id);
    QSeries e = euler_inverse(Rat(order));
    Json c = Json::array();
    for (int n = 0; n <= order; ++n) c.push_back(e.coeff(Rat(n)).get_str());
    out["coeffs"] = c;
  } else if (p.kind == "char") {
    expect_args(p, {"k", "j"}, id);
    out["series"] = dza_character(int_arg(p, "k", id), rat_arg(p, "j", id), Rat(order)).to_json();
  } else {
    throw UnknownIdError("unknown id: " + id);
  }
  return out;
}

}  // namespace dwa
