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

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/scalar.hpp"

namespace dwa {

/// Truncated multivariate Laurent series with a per-variable window.
///
/// For every variable v the window [lo(v), hi(v)] means: the support lies
/// at or above lo(v), and every coefficient with exponent up to hi(v) is
/// known exactly. Coefficients are stored densely in row-major order.
template <class K>
class LaurentWindow {
 public:
  using Exps = std::vector<int>;

  LaurentWindow() = default;
  LaurentWindow(std::vector<std::string> vars, Exps lo, Exps hi)
      : vars_(std::move(vars)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (vars_.size() != lo_.size() || vars_.size() != hi_.size())
      throw std::invalid_argument("window dimension mismatch");
    std::size_t n = 1;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (hi_[v] < lo_[v]) throw std::invalid_argument("empty window for variable " + vars_[v]);
      n *= static_cast<std::size_t>(hi_[v] - lo_[v] + 1);
    }
    data_.assign(n, K(0));
  }

  static LaurentWindow univariate(const std::string& var, int lo, int hi) {
    return LaurentWindow({var}, {lo}, {hi});
  }
  static LaurentWindow constant(const std::vector<std::string>& vars, const K& c, int order) {
    LaurentWindow w(vars, Exps(vars.size(), 0), Exps(vars.size(), order));
    if (!w.data_.empty()) w.data_[0] = c;
    return w;
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  int lo(std::size_t v) const { return lo_[v]; }
  int hi(std::size_t v) const { return hi_[v]; }
  const Exps& lo() const { return lo_; }
  const Exps& hi() const { return hi_; }
  std::size_t size() const { return data_.size(); }

  bool in_window(const Exps& e) const {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] < lo_[v] || e[v] > hi_[v]) return false;
    return true;
  }

  /// Coefficient at e. Zero below the support bound; throws
  /// std::out_of_range above the known window.
  K coeff(const Exps& e) const {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] > hi_[v]) throw std::out_of_range("coefficient outside the known window of " + vars_[v]);
    }
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] < lo_[v]) return K(0);
    return data_[index(e)];
  }
  K coeff(int e) const { return coeff(Exps{e}); }

  void set(const Exps& e, K value) {
    if (!in_window(e)) throw std::out_of_range("set outside window");
    data_[index(e)] = std::move(value);
  }
  void set(int e, K value) { set(Exps{e}, std::move(value)); }
  void add_to(const Exps& e, const K& value) {
    if (!in_window(e)) throw std::out_of_range("add outside window");
    auto& slot = data_[index(e)];
    slot = slot + value;
  }

  /// Calls f(exps, coeff) for every stored entry in row-major order.
  template <class F>
  void for_each(F&& f) const {
    Exps e = lo_;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      f(static_cast<const Exps&>(e), data_[k]);
      advance(e);
    }
  }
  const std::vector<K>& raw() const { return data_; }

  /// Restricts the known window to hi (componentwise no larger).
  LaurentWindow truncated(const Exps& hi) const {
    Exps h(hi_.size());
    for (std::size_t v = 0; v < h.size(); ++v) h[v] = std::min(hi[v], hi_[v]);
    LaurentWindow r(vars_, lo_, h);
    r.for_each_index([&](const Exps& e, K& slot) { slot = data_[index(e)]; });
    return r;
  }

  LaurentWindow renamed(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw std::invalid_argument("rename arity mismatch");
    LaurentWindow r(*this);
    r.vars_ = std::move(vars);
    return r;
  }

  LaurentWindow scaled(const K& s) const {
    LaurentWindow r(*this);
    for (auto& x : r.data_) x = s * x;
    return r;
  }

  friend LaurentWindow operator+(const LaurentWindow& a, const LaurentWindow& b) {
    return combine(a, b, false);
  }
  friend LaurentWindow operator-(const LaurentWindow& a, const LaurentWindow& b) {
    return combine(a, b, true);
  }

  /// Product; the result window is lo_a+lo_b .. min(hi_a+lo_b, hi_b+lo_a).
  friend LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b) {
    a.check_vars(b);
    std::size_t nv = a.vars_.size();
    Exps lo(nv), hi(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      lo[v] = a.lo_[v] + b.lo_[v];
      hi[v] = std::min(a.hi_[v] + b.lo_[v], b.hi_[v] + a.lo_[v]);
    }
    LaurentWindow r(a.vars_, lo, hi);
    std::vector<std::pair<Exps, const K*>> bn;
    b.for_each([&](const Exps& e, const K& x) {
      if (!dwa::is_zero(x)) bn.emplace_back(e, &x);
    });
    Exps t(nv);
    a.for_each([&](const Exps& ea, const K& xa) {
      if (dwa::is_zero(xa)) return;
      for (const auto& [eb, xb] : bn) {
        bool ok = true;
        for (std::size_t v = 0; v < nv && ok; ++v) {
          t[v] = ea[v] + eb[v];
          ok = t[v] <= hi[v];
        }
        if (ok) r.add_to(t, xa * *xb);
      }
    });
    return r;
  }

  /// True when all known coefficients vanish.
  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return dwa::is_zero(x); });
  }

  /// Coefficientwise equality on the common known window.
  friend bool operator==(const LaurentWindow& a, const LaurentWindow& b) { return (a - b).is_zero(); }

 private:
  static LaurentWindow combine(const LaurentWindow& a, const LaurentWindow& b, bool subtract) {
    a.check_vars(b);
    std::size_t nv = a.vars_.size();
    Exps lo(nv), hi(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      lo[v] = std::min(a.lo_[v], b.lo_[v]);
      hi[v] = std::min(a.hi_[v], b.hi_[v]);
      if (hi[v] < lo[v]) hi[v] = lo[v];
    }
    LaurentWindow r(a.vars_, lo, hi);
    r.for_each_index([&](const Exps& e, K& slot) {
      K x = a.in_window(e) ? a.data_[a.index(e)] : K(0);
      K y = b.in_window(e) ? b.data_[b.index(e)] : K(0);
      slot = subtract ? x - y : x + y;
    });
    return r;
  }

  void check_vars(const LaurentWindow& b) const {
    if (vars_ != b.vars_) throw std::invalid_argument("series over different variables");
  }

  template <class F>
  void for_each_index(F&& f) {
    Exps e = lo_;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      f(static_cast<const Exps&>(e), data_[k]);
      advance(e);
    }
  }

  void advance(Exps& e) const {
    for (std::size_t v = e.size(); v-- > 0;) {
      if (++e[v] <= hi_[v]) return;
      e[v] = lo_[v];
    }
  }

  std::size_t index(const Exps& e) const {
    std::size_t k = 0;
    for (std::size_t v = 0; v < e.size(); ++v)
      k = k * static_cast<std::size_t>(hi_[v] - lo_[v] + 1) + static_cast<std::size_t>(e[v] - lo_[v]);
    return k;
  }

  std::vector<std::string> vars_;
  Exps lo_, hi_;
  std::vector<K> data_;
};

namespace detail {

template <class K>
void require_power_series(const LaurentWindow<K>& f, const char* what) {
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (f.lo(v) < 0) throw std::domain_error(std::string(what) + " of a series with negative exponents");
}

inline int total_degree(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace detail

/// exp of a power series with zero constant term, via the Euler-operator
/// recursion |e| E_e = sum_{e1} |e1| L_{e1} E_{e-e1}.
template <class K>
LaurentWindow<K> series_exp(const LaurentWindow<K>& log_series) {
  detail::require_power_series(log_series, "exp");
  std::size_t nv = log_series.nvars();
  std::vector<int> zero(nv, 0);
  LaurentWindow<K> L(log_series.vars(), zero, log_series.hi());
  log_series.for_each([&](const std::vector<int>& e, const K& x) {
    if (L.in_window(e)) L.set(e, x);
  });
  if (!dwa::is_zero(L.coeff(zero))) throw std::domain_error("exp of a series with nonzero constant term");
  std::vector<std::pair<std::vector<int>, K>> terms;
  L.for_each([&](const std::vector<int>& e, const K& x) {
    if (!dwa::is_zero(x)) terms.emplace_back(e, K(detail::total_degree(e)) * x);
  });
  LaurentWindow<K> E(L.vars(), zero, L.hi());
  E.set(zero, K(1));
  std::vector<int> rest(nv);
  E.for_each([&](const std::vector<int>& e, const K&) {
    int deg = detail::total_degree(e);
    if (deg == 0) return;
    K acc(0);
    for (const auto& [e1, w] : terms) {
      bool ok = true;
      for (std::size_t v = 0; v < nv && ok; ++v) {
        rest[v] = e[v] - e1[v];
        ok = rest[v] >= 0;
      }
      if (ok) acc = acc + w * E.coeff(rest);
    }
    if (!dwa::is_zero(acc)) E.set(e, acc / K(deg));
  });
  return E;
}

/// log of a power series with constant term 1.
template <class K>
LaurentWindow<K> series_log(const LaurentWindow<K>& f) {
  detail::require_power_series(f, "log");
  std::size_t nv = f.nvars();
  std::vector<int> zero(nv, 0);
  LaurentWindow<K> F(f.vars(), zero, f.hi());
  f.for_each([&](const std::vector<int>& e, const K& x) {
    if (F.in_window(e)) F.set(e, x);
  });
  if (!(F.coeff(zero) == K(1))) throw std::domain_error("log of a series with constant term != 1");
  LaurentWindow<K> L(F.vars(), zero, F.hi());
  // |e| L_e = |e| F_e - sum_{0 < e1 < e} |e1| L_{e1} F_{e-e1}
  std::vector<std::pair<std::vector<int>, K>> done;
  std::vector<int> rest(nv);
  L.for_each([&](const std::vector<int>& e, const K&) {
    int deg = detail::total_degree(e);
    if (deg == 0) return;
    K acc = K(deg) * F.coeff(e);
    for (const auto& [e1, w] : done) {
      bool ok = true;
      for (std::size_t v = 0; v < nv && ok; ++v) {
        rest[v] = e[v] - e1[v];
        ok = rest[v] >= 0;
      }
      if (ok) acc = acc - w * F.coeff(rest);
    }
    if (!dwa::is_zero(acc)) {
      K le = acc / K(deg);
      L.set(e, le);
      done.emplace_back(e, K(deg) * le);
    }
  });
  return L;
}

/// Coefficients of a univariate window as a vector indexed from lo.
/// 1/f for a univariate power series with invertible constant term.
template <class K>
LaurentWindow<K> series_inverse(const LaurentWindow<K>& f) {
  if (f.nvars() != 1) throw std::invalid_argument("series_inverse needs a univariate series");
  detail::require_power_series(f, "inverse");
  const int hi = f.hi(0);
  K c0 = f.coeff({0});
  if (dwa::is_zero(c0)) throw std::domain_error("inverse of a series with zero constant term");
  K inv0 = K(1) / c0;
  LaurentWindow<K> g = LaurentWindow<K>::univariate(f.vars()[0], 0, hi);
  g.set(0, inv0);
  for (int n = 1; n <= hi; ++n) {
    K acc(0);
    for (int k = 1; k <= n; ++k) acc = acc + f.coeff({k}) * g.coeff({n - k});
    g.set(n, K(0) - acc * inv0);
  }
  return g;
}

template <class K>
std::vector<K> univariate_coeffs(const LaurentWindow<K>& f) {
  if (f.nvars() != 1) throw std::invalid_argument("expected a univariate series");
  return f.raw();
}

}  // namespace dwa
