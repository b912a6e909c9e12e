#include <mutex>
#include <set>

#include "wmk/toroidal.hpp"

namespace wmk {

std::string route_name(Route r) {
  switch (r) {
    case Route::NMinus: return "N-";
    case Route::MMinus: return "M-";
    case Route::NPlus: return "N+";
    case Route::MPlus: return "M+";
  }
  return "?";
}

RatFunc pieri_constant(Route route, int n, int ell) {
  RatFunc q = RatFunc::var(Q), t = RatFunc::var(T), qq = RatFunc::var(QQ);
  RatFunc qt = q * t;
  bool minus = route == Route::NMinus || route == Route::MMinus;
  RatFunc c(1);
  for (int r = 1; r <= n; ++r) c /= RatFunc(1) - qt.pow(minus ? -r : r);
  if (minus) {
    c *= (RatFunc(1) - qt).pow(n * ell);
    if (route == Route::MMinus) c *= qt.pow(-n);
  } else {
    c *= (qq - qq.inverse()).pow(n * ell);
    if (n % 2) c = -c;
    if (route == Route::NPlus) c *= qt.pow(n);
  }
  return c.substitute(matching_map(minus ? Matching::Minus : Matching::Plus));
}

RatFunc normalization(const Partition& lam, int ell, Route route, UpsilonMode mode) {
  if (ell < 3) throw UnsupportedRank("the shuffle route needs ell >= 3");
  static std::mutex mu;
  static std::map<std::tuple<Partition, int, Route, UpsilonMode>, RatFunc> cache;
  auto key = std::make_tuple(lam, ell, route, mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFunc value(1);
  if (!is_core(lam, ell)) {
    bool by_column = route == Route::NMinus || route == Route::NPlus;
    Peel peel = by_column ? peel_last_column(lam, ell) : peel_last_row(lam, ell);
    ShuffleKernel k;
    Rep rep = Rep::Minus;
    switch (route) {
      case Route::NMinus: k = kernel_E(peel.p, peel.n, ell); break;
      case Route::MMinus: k = kernel_H(peel.p, peel.n, ell); break;
      case Route::NPlus: k = kernel_H(peel.p, peel.n, ell); rep = Rep::Plus; break;
      case Route::MPlus: k = kernel_E(peel.p, peel.n, ell); rep = Rep::Plus; break;
    }
    value = normalization(peel.rest, ell, route, mode) * pieri_constant(route, peel.n, ell) *
            sym_matrix_element(k, peel.rest, lam, rep, mode);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, value);
  return value;
}

NormScalars norm_scalars(const Partition& lam, int ell) {
  return {lam, normalization(lam, ell, Route::NMinus), normalization(lam, ell, Route::MMinus),
          normalization(lam, ell, Route::NPlus), normalization(lam, ell, Route::MPlus)};
}

namespace {

RatFunc qt_or_throw(const RatFunc& f, Matching m, const std::string& what) {
  auto r = to_qt(f, m);
  if (!r) throw NotExpressible(what + " is not a function of q, t: " + f.to_string());
  return *r;
}

}  // namespace

RatFunc norm_toroidal(const Partition& lam, int ell, Rep side) {
  if (side == Rep::Minus) {
    RatFunc r = normalization(lam, ell, Route::NMinus) / normalization(lam, ell, Route::MMinus);
    return qt_or_throw(r, Matching::Minus, "N-/M-").substitute(make_subst({{T, Mono::var(T, -1)}}));
  }
  Partition tl = transpose(lam);
  RatFunc r = normalization(tl, ell, Route::NPlus) / normalization(tl, ell, Route::MPlus);
  // g(q, t) = N+/M+ at (q, 1/t); the norm is g(t, 1/q)
  return qt_or_throw(r, Matching::Plus, "N+/M+").substitute(make_subst({{Q, Mono::var(T)}, {T, Mono::var(Q, -1)}}));
}

std::vector<Partition> color_balanced_extensions(const Partition& mu, int n, int ell) {
  std::set<Partition> layer{mu};
  for (int step = 0; step < n * ell; ++step) {
    std::set<Partition> next;
    for (const auto& p : layer)
      for (const Node& b : addable(p)) next.insert(add_node(p, b));
    layer = std::move(next);
  }
  std::vector<Partition> out;
  for (const auto& lam : layer) {
    bool ok = true;
    for (int i = 0; i < ell && ok; ++i) ok = color_count(lam, i, ell) == color_count(mu, i, ell) + n;
    if (ok) out.push_back(lam);
  }
  return out;
}

std::map<Partition, RatFunc> wreath_pieri_toroidal(const Partition& mu, int p, int n, int ell, KernelKind kind,
                                                   DualBasis basis) {
  if (ell < 3) throw UnsupportedRank("the shuffle route needs ell >= 3");
  ShuffleKernel k = kind == KernelKind::E ? kernel_E(p, n, ell) : kernel_H(p, n, ell);
  RatFunc c = pieri_constant(kind == KernelKind::E ? Route::NMinus : Route::MMinus, n, ell);
  // tilde P at (q, 1/t) is sent to N-|lambda>, tilde Q to M-|lambda>
  Route scal = basis == DualBasis::P ? Route::NMinus : Route::MMinus;
  RatFunc s_mu = normalization(mu, ell, scal);
  std::map<Partition, RatFunc> out;
  for (const auto& lam : color_balanced_extensions(mu, n, ell)) {
    RatFunc m = sym_matrix_element(k, mu, lam, Rep::Minus);
    if (m.is_zero()) continue;
    RatFunc v = c * m * s_mu / normalization(lam, ell, scal);
    out.emplace(lam, qt_or_throw(v, Matching::Minus, "Pieri coefficient").substitute(make_subst({{T, Mono::var(T, -1)}})));
  }
  return out;
}

}  // namespace wmk
