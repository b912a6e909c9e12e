#include <algorithm>
#include <numeric>

#include "wmk/toroidal.hpp"

namespace wmk {

Mono character_qd(const Node& n, Rep rep) {
  int s = rep == Rep::Minus ? 1 : -1;
  return Mono::var(QQ, s * (n.a + n.b - 2)) * Mono::var(DD, n.a - n.b);
}

namespace {

LaurentPoly mono(const Mono& m, const mpq_class& c = 1) { return LaurentPoly::monomial(m, c); }
LaurentPoly qq(int k) { return LaurentPoly::var(QQ, k); }

const std::vector<int> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

struct Setup {
  std::vector<Node> added;  // in content-then-row order
  std::vector<std::vector<int>> by_color;  // indices into added
};

std::optional<Setup> setup(const ShuffleKernel& k, const Partition& lam, const Partition& mu) {
  if (lam.size() > mu.size()) return std::nullopt;
  for (size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > mu[i]) return std::nullopt;
  Setup s;
  s.added = skew_nodes(mu, lam);
  std::sort(s.added.begin(), s.added.end(), [](const Node& x, const Node& y) {
    return content(x) != content(y) ? content(x) < content(y) : x.b < y.b;
  });
  s.by_color.assign(k.ell, {});
  for (size_t idx = 0; idx < s.added.size(); ++idx) s.by_color[color(s.added[idx], k.ell)].push_back(idx);
  for (int i = 0; i < k.ell; ++i)
    if (static_cast<int>(s.by_color[i].size()) != k.counts[i]) return std::nullopt;
  return s;
}

// Prefactors and the products over lam, with the added characters deformed.
std::vector<std::pair<LaurentPoly, int>> outer_factors(const Setup& s, const Partition& lam, int ell, Rep rep,
                                                       const std::vector<Mono>& chi) {
  std::vector<std::pair<LaurentPoly, int>> out;
  std::vector<Node> old = nodes(lam);
  for (size_t idx = 0; idx < s.added.size(); ++idx) {
    const Node& box = s.added[idx];
    LaurentPoly x = mono(chi[idx]);
    bool zero = color(box, ell) == 0;
    if (rep == Rep::Minus) {
      if (zero) out.emplace_back(x * qq(1) - qq(-1), 1);
      out.emplace_back(x * (qq(1) - qq(-1)), -1);
    } else {
      if (zero) out.emplace_back(x - qq(2), 1);
      out.emplace_back(x * (LaurentPoly(1) - qq(2)), -1);
    }
    for (const Node& b : old) {
      LaurentPoly y = mono(character_qd(b, rep));
      auto [n, d] = rep == Rep::Minus ? omega(color(b, ell), color(box, ell), ell, y, x)
                                      : omega(color(box, ell), color(b, ell), ell, x, y);
      out.emplace_back(std::move(n), 1);
      if (d != LaurentPoly(1)) out.emplace_back(std::move(d), -1);
    }
  }
  return out;
}

// Value at U = 1 when no factor vanishes there.
std::optional<RatFunc> regular_value(const std::vector<std::pair<LaurentPoly, int>>& fs) {
  RatFunc out(1);
  for (const auto& [v, p] : fs) {
    LaurentPoly w = v.eval_var(U, 1);
    if (w.is_zero()) return std::nullopt;
    out = out * (p > 0 ? RatFunc(w).pow(p) : RatFunc::make(LaurentPoly(1), w.pow(-p)));
  }
  return out;
}

MatrixElement attempt(const ShuffleKernel& k, const Setup& s, const Partition& lam, Rep rep, UpsilonMode mode,
                      Deformation def, bool count) {
  size_t m = s.added.size();
  if (def == Deformation::Primes && m > kPrimes.size()) throw TooLarge("too many added nodes");
  std::vector<Mono> chi(m);
  std::vector<XValue> node_val(m);
  for (size_t idx = 0; idx < m; ++idx) {
    int e = def == Deformation::ContentOrder ? static_cast<int>(idx) + 1 : kPrimes[idx];
    chi[idx] = character_qd(s.added[idx], rep) * Mono::var(U, e);
    node_val[idx].m = chi[idx];
    if (mode == UpsilonMode::Symbolic) node_val[idx].m = node_val[idx].m * Mono::var(UPS);
  }
  // x_{i,r} -> the r-th node of color i; Sym runs over the remaining assignments
  std::vector<XValue> x(k.num_vars());
  for (int i = 0; i < k.ell; ++i)
    for (int r = 0; r < k.counts[i]; ++r) x[k.var(i, r + 1)] = node_val[s.by_color[i][r]];

  auto outer = outer_factors(s, lam, k.ell, rep, chi);
  auto outer_val = regular_value(outer);

  MatrixElement out;
  std::map<int, std::vector<FactoredFrac>> by_power;
  for_each_assignment(k, x, [&](const std::vector<XValue>& y) {
    auto fs = factor_values(k, y);
    ++out.summands;
    if (count) {
      UExpansion own = expand_at_u_one(fs);
      if (std::any_of(own.coeffs.begin(), own.coeffs.end(), [](const FactoredFrac& f) { return !f.num.is_zero(); }))
        ++out.nonzero_summands;
    }
    if (!outer_val) fs.insert(fs.end(), outer.begin(), outer.end());
    UExpansion e = expand_at_u_one(fs);
    for (size_t r = 0; r < e.coeffs.size(); ++r)
      if (!e.coeffs[r].num.is_zero()) by_power[e.lo + static_cast<int>(r)].push_back(std::move(e.coeffs[r]));
  });
  RatFunc value;
  for (const auto& [p, parts] : by_power) {
    FactoredFrac total = sum(parts);
    if (p < 0 && !total.num.is_zero()) throw IrregularPoint("pole at u = 1 of order " + std::to_string(-p));
    if (p == 0) value = total.to_ratfunc();
  }
  if (outer_val) value = value * *outer_val;
  out.value = value * k.scalar;
  return out;
}

}  // namespace

MatrixElement sym_matrix_element_detail(const ShuffleKernel& k, const Partition& lam, const Partition& mu, Rep rep,
                                        UpsilonMode mode, Deformation def, bool count_summands) {
  if (k.ell < 3) throw UnsupportedRank("the shuffle route needs ell >= 3");
  auto s = setup(k, lam, mu);
  if (!s) return MatrixElement{};
  try {
    return attempt(k, *s, lam, rep, mode, def, count_summands);
  } catch (const IrregularPoint&) {
    if (def == Deformation::Primes) throw;
  }
  MatrixElement out = attempt(k, *s, lam, rep, mode, Deformation::Primes, count_summands);
  out.retried = true;
  return out;
}

RatFunc sym_matrix_element(const ShuffleKernel& k, const Partition& lam, const Partition& mu, Rep rep,
                           UpsilonMode mode) {
  return sym_matrix_element_detail(k, lam, mu, rep, mode).value;
}

namespace {

RatFunc minus_d_power(int e) {
  RatFunc r = RatFunc::var(DD, e);
  return e % 2 ? -r : r;
}

}  // namespace

std::map<Partition, RatFunc> fock_single_current(const Partition& lam, int i, int k, int ell, Current c,
                                                 UpsilonMode mode) {
  Rep rep = c == Current::FMinus ? Rep::Minus : Rep::Plus;
  i = mod(i, ell);
  auto add = addable(lam, i, ell);
  auto rem = removable(lam, i, ell);
  RatFunc sign = minus_d_power(-color_count(lam, mod(i + 1, ell), ell));
  LaurentPoly ups = mode == UpsilonMode::Symbolic ? LaurentPoly::var(UPS) : LaurentPoly(1);
  std::map<Partition, RatFunc> out;
  for (const Node& box : add) {
    LaurentPoly x = mono(character_qd(box, rep));
    LaurentPoly num(1), den(1);
    for (const Node& b : add) {
      if (b == box) continue;
      LaurentPoly y = mono(character_qd(b, rep));
      num *= rep == Rep::Minus ? x * qq(1) - y * qq(-1) : x - y * qq(2);
    }
    for (const Node& b : rem) {
      LaurentPoly y = mono(character_qd(b, rep));
      den *= rep == Rep::Minus ? (x - y) * qq(1) : x - y;
    }
    RatFunc v = sign * RatFunc::make(num, den) * RatFunc(x * ups).pow(k);
    out.emplace(add_node(lam, box), v);
  }
  return out;
}

std::vector<PsiFactor> fock_psi_eigenvalue(const Partition& lam, int i, int ell, Rep rep, UpsilonMode mode) {
  i = mod(i, ell);
  LaurentPoly ups = mode == UpsilonMode::Symbolic ? LaurentPoly::var(UPS) : LaurentPoly(1);
  std::vector<PsiFactor> out;
  // tau^+ swaps the roles of addable and removable nodes
  int sa = rep == Rep::Minus ? 1 : -1;
  for (const Node& b : addable(lam, i, ell)) {
    LaurentPoly y = mono(character_qd(b, rep)) * ups;
    out.push_back({qq(sa), y * qq(-sa), 1, y});
  }
  for (const Node& b : removable(lam, i, ell)) {
    LaurentPoly y = mono(character_qd(b, rep)) * ups;
    out.push_back({qq(-sa), y * qq(sa), 1, y});
  }
  return out;
}

bool adjacency_allowed(const Partition& lam, const Partition& mu, int p, int ell, KernelKind kind, Rep rep) {
  if (lam.size() > mu.size()) return false;
  for (size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > mu[i]) return false;
  auto added = skew_nodes(mu, lam);
  if (added.size() % ell) return false;
  int n = static_cast<int>(added.size()) / ell;
  for (int i = 0; i < ell; ++i)
    if (std::count_if(added.begin(), added.end(), [&](const Node& b) { return color(b, ell) == i; }) != n) return false;
  bool horizontal = (kind == KernelKind::E) == (rep == Rep::Minus);
  int lo = mod(p, ell), hi = mod(p + 1, ell);
  for (const Node& x : added)
    for (const Node& y : added) {
      bool adjacent = horizontal ? (y.a == x.a + 1 && y.b == x.b) : (y.b == x.b + 1 && y.a == x.a);
      if (!adjacent) continue;
      int cx = color(x, ell), cy = color(y, ell);
      if ((cx == lo && cy == hi) || (cx == hi && cy == lo)) return false;
    }
  return true;
}

}  // namespace wmk
