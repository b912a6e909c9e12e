#include <algorithm>
#include <numeric>
#include <random>

#include "wmk/toroidal.hpp"

namespace wmk {

int ShuffleKernel::num_vars() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int ShuffleKernel::var(int color, int r) const {
  int v = 0;
  for (int c = 0; c < color; ++c) v += counts[c];
  return v + r - 1;
}

int ShuffleKernel::color_of(int v) const {
  for (int c = 0; c < ell; ++c) {
    if (v < counts[c]) return c;
    v -= counts[c];
  }
  throw std::out_of_range("variable index");
}

size_t ShuffleKernel::count_blocks(BlockKind k) const {
  return std::count_if(blocks.begin(), blocks.end(), [k](const Block& b) { return b.kind == k; });
}

namespace {

LaurentPoly qd(int a, int b, long c = 1) { return LaurentPoly::monomial(Mono::var(QQ, a) * Mono::var(DD, b), c); }

XTerm term(LaurentPoly c, std::vector<std::pair<int, int>> vars) {
  std::map<int, int> merged;
  for (auto [v, e] : vars) merged[v] += e;
  XTerm t{std::move(c), {}};
  for (auto [v, e] : merged)
    if (e != 0) t.vars.emplace_back(v, e);
  return t;
}

// c1 z + c2 w
Factor lin(const LaurentPoly& c1, int z, const LaurentPoly& c2, int w, int power) {
  return Factor{{term(c1, {{z, 1}}), term(c2, {{w, 1}})}, power};
}

void check_rank(int ell) {
  if (ell < 3) throw UnsupportedRank("the shuffle route needs ell >= 3, got " + std::to_string(ell));
}

std::vector<Factor> omega_factors(int i, int j, int ell, int z, int w) {
  if (i == j) return {lin(1, z, -qd(2, 0), w, -1), lin(1, z, -1, w, -1)};
  if (mod(i + 1, ell) == j) return {lin(-qd(0, -1), z, qd(1, 0), w, 1)};
  if (mod(i - 1, ell) == j) return {lin(1, z, -qd(1, -1), w, 1)};
  return {};
}

enum class Which { E, H };

ShuffleKernel pieri_kernel(Which which, int p, int n, int ell) {
  check_rank(ell);
  if (p < 0 || p >= ell) throw std::invalid_argument("color p out of range");
  ShuffleKernel k;
  k.ell = ell;
  k.counts.assign(ell, n);
  int p1 = mod(p + 1, ell);
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      Block b{BlockKind::Pair, {}};
      if (which == Which::E) {
        b.factors.push_back(lin(1, k.var(p1, r), -qd(-1, -1), k.var(p, s), 1));
        b.factors.push_back(lin(1, k.var(p1, r), -qd(1, -1), k.var(p, s), -1));
      } else {
        b.factors.push_back(lin(qd(-1, 1), k.var(p1, s), -1, k.var(p, r), 1));
        b.factors.push_back(lin(qd(1, 1), k.var(p1, s), -1, k.var(p, r), -1));
      }
      for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
          for (auto& f : omega_factors(i, j, ell, k.var(i, r), k.var(j, s))) b.factors.push_back(std::move(f));
      k.blocks.push_back(std::move(b));
    }
  for (int r = 1; r <= n; ++r) {
    Block b{BlockKind::PerVar, {}};
    int x0 = k.var(0, r), xp = k.var(p, r), xp1 = k.var(p1, r);
    LaurentPoly c = which == Which::E ? qd(-1, -1) : qd(1, -1);
    b.factors.push_back(Factor{{term(c, {{x0, 1}, {xp1, -1}}), term(-1, {{x0, 1}, {xp, -1}})}, 1});
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < ell; ++i) all.emplace_back(k.var(i, r), 1);
    b.factors.push_back(Factor{{term(1, all)}, 1});
    k.blocks.push_back(std::move(b));
  }
  return k;
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> omega(int i, int j, int ell, const LaurentPoly& z, const LaurentPoly& w) {
  if (i == j) return {1, (z - w * qd(2, 0)) * (z - w)};
  if (mod(i + 1, ell) == j) return {w * qd(1, 0) - z * qd(0, -1), 1};
  if (mod(i - 1, ell) == j) return {z - w * qd(1, -1), 1};
  return {1, 1};
}

ShuffleKernel kernel_E(int p, int n, int ell) { return pieri_kernel(Which::E, p, n, ell); }
ShuffleKernel kernel_H(int p, int n, int ell) { return pieri_kernel(Which::H, p, n, ell); }

ShuffleKernel kernel_monomial(int i, int k, int ell) {
  check_rank(ell);
  ShuffleKernel K;
  K.ell = ell;
  K.counts.assign(ell, 0);
  K.counts[mod(i, ell)] = 1;
  if (k != 0) K.blocks.push_back(Block{BlockKind::Monomial, {Factor{{term(1, {{0, k}})}, 1}}});
  return K;
}

ShuffleKernel star_product(const ShuffleKernel& f, const ShuffleKernel& g) {
  if (f.ell != g.ell) throw std::invalid_argument("star_product: different ell");
  ShuffleKernel k;
  k.ell = f.ell;
  k.counts.resize(f.ell);
  for (int i = 0; i < f.ell; ++i) k.counts[i] = f.counts[i] + g.counts[i];
  if (k.num_vars() > 8) throw TooLarge("star_product: more than 8 variables");
  k.scalar = f.scalar * g.scalar;
  auto remap = [&](const ShuffleKernel& src, bool second) {
    for (Block b : src.blocks) {
      for (auto& fac : b.factors)
        for (auto& t : fac.terms)
          for (auto& [v, e] : t.vars) {
            int c = src.color_of(v);
            int r = v - src.var(c, 1) + 1;
            v = k.var(c, second ? f.counts[c] + r : r);
          }
      k.blocks.push_back(std::move(b));
    }
  };
  remap(f, false);
  remap(g, true);
  Block mix{BlockKind::Mixing, {}};
  for (int i = 0; i < k.ell; ++i)
    for (int j = 0; j < k.ell; ++j)
      for (int r = 1; r <= f.counts[i]; ++r)
        for (int s = f.counts[j] + 1; s <= k.counts[j]; ++s)
          for (auto& fac : omega_factors(i, j, k.ell, k.var(i, r), k.var(j, s))) mix.factors.push_back(std::move(fac));
  if (!mix.factors.empty()) k.blocks.push_back(std::move(mix));
  return k;
}

ShuffleKernel drop_factor(const ShuffleKernel& k, size_t block, size_t factor) {
  ShuffleKernel out = k;
  auto& fs = out.blocks.at(block).factors;
  fs.erase(fs.begin() + static_cast<long>(factor));
  return out;
}

namespace {

mpq_class qpow(const mpq_class& c, int e) {
  mpq_class r = 1;
  mpq_class b = e < 0 ? mpq_class(1 / c) : c;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

LaurentPoly factor_value(const Factor& f, const std::vector<XValue>& x) {
  std::vector<LaurentPoly::Term> ts;
  for (const auto& t : f.terms) {
    mpq_class c = 1;
    Mono m;
    for (auto [v, e] : t.vars) {
      c *= qpow(x[v].c, e);
      m = m * x[v].m.pow(e);
    }
    for (const auto& ct : t.coeff.terms()) ts.push_back({ct.m * m, ct.c * c});
  }
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace

void FactoredFrac::divide_by(const LaurentPoly& f, int mult) {
  const auto& lead = f.leading();
  Mono inv = Mono{} / lead.m;
  LaurentPoly g = f.times_mono(inv, 1 / lead.c);
  for (int k = 0; k < mult; ++k) num = num.times_mono(inv, 1 / lead.c);
  if (g.is_monomial()) return;
  auto& slot = den[g.to_string()];
  if (slot.second == 0) slot.first = g;
  slot.second += mult;
}

void FactoredFrac::multiply_by(const FactoredFrac& o) {
  num *= o.num;
  for (const auto& [key, fm] : o.den) {
    auto& slot = den[key];
    if (slot.second == 0) slot.first = fm.first;
    slot.second += fm.second;
  }
}

LaurentPoly FactoredFrac::den_product() const {
  LaurentPoly d(1);
  for (const auto& [key, fm] : den) d *= fm.first.pow(fm.second);
  return d;
}

RatFunc FactoredFrac::to_ratfunc() const { return RatFunc::make(num, den_product()); }

FactoredFrac sum(const std::vector<FactoredFrac>& parts) {
  FactoredFrac out;
  out.num = LaurentPoly();
  for (const auto& p : parts)
    for (const auto& [key, fm] : p.den) {
      auto& slot = out.den[key];
      if (slot.second < fm.second) slot = fm;
    }
  for (const auto& p : parts) {
    if (p.num.is_zero()) continue;
    LaurentPoly t = p.num;
    for (const auto& [key, fm] : out.den) {
      auto it = p.den.find(key);
      int have = it == p.den.end() ? 0 : it->second.second;
      if (fm.second > have) t *= fm.first.pow(fm.second - have);
    }
    out.num += t;
  }
  return out;
}

namespace {

// Generalized binomial coefficient C(j, r) for integer j.
mpq_class binom(int j, int r) {
  mpq_class c = 1;
  for (int i = 0; i < r; ++i) c = c * (j - i) / (i + 1);
  return c;
}

// Taylor coefficient of order r of p at U = 1.
LaurentPoly taylor_at_one(const std::map<int, LaurentPoly>& coeffs, int r) {
  LaurentPoly out;
  for (const auto& [j, c] : coeffs) {
    mpq_class b = binom(j, r);
    if (b != 0) out += c.scaled(b);
  }
  return out;
}

}  // namespace

RatFunc limit_u_at_one(const FactoredFrac& f) {
  if (f.num.is_zero()) return RatFunc();
  int order = 0;
  LaurentPoly dval(1);
  for (const auto& [key, fm] : f.den) {
    auto cs = fm.first.coeffs_in(U);
    int o = 0;
    LaurentPoly v = taylor_at_one(cs, 0);
    while (v.is_zero()) v = taylor_at_one(cs, ++o);
    order += o * fm.second;
    dval *= v.pow(fm.second);
  }
  auto cs = f.num.coeffs_in(U);
  for (int r = 0; r < order; ++r)
    if (!taylor_at_one(cs, r).is_zero()) throw IrregularPoint("pole at u = 1 of order " + std::to_string(order - r));
  return RatFunc::make(taylor_at_one(cs, order), dval);
}

namespace {

using Series = std::vector<LaurentPoly>;

void mul_truncated(Series& a, const Series& b) {
  Series out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  a = std::move(out);
}

}  // namespace

UExpansion expand_at_u_one(const std::vector<std::pair<LaurentPoly, int>>& factors, int upto) {
  struct Item {
    std::map<int, LaurentPoly> cs;
    int order;
    int power;
  };
  std::vector<Item> items;
  int lo = 0;
  for (const auto& [v, power] : factors) {
    if (power == 0) continue;
    if (v.is_zero()) {
      if (power < 0) throw IrregularPoint("denominator vanishes identically");
      return {};
    }
    Item it{v.coeffs_in(U), 0, power};
    while (taylor_at_one(it.cs, it.order).is_zero()) ++it.order;
    lo += power * it.order;
    items.push_back(std::move(it));
  }
  UExpansion out;
  out.lo = lo;
  if (lo > upto) return out;
  size_t len = static_cast<size_t>(upto - lo) + 1;
  Series num(len);
  num[0] = LaurentPoly(1);
  FactoredFrac base;
  base.num = LaurentPoly(1);
  for (const auto& it : items) {
    Series s(len);
    for (size_t r = 0; r < len; ++r) s[r] = taylor_at_one(it.cs, it.order + static_cast<int>(r));
    if (it.power > 0) {
      for (int k = 0; k < it.power; ++k) mul_truncated(num, s);
      continue;
    }
    // 1/s = sum_r B_r / s0^{r+1} eps^r, rescaled to the common denominator s0^len
    Series b(len);
    b[0] = LaurentPoly(1);
    for (size_t r = 1; r < len; ++r) {
      LaurentPoly acc, s0pow(1);
      for (size_t j = 1; j <= r; ++j) {
        if (!s[j].is_zero()) acc += s[j] * b[r - j] * s0pow;
        s0pow *= s[0];
      }
      b[r] = -acc;
    }
    LaurentPoly s0pow(1);
    for (size_t r = len; r-- > 0;) {
      b[r] *= s0pow;
      s0pow *= s[0];
    }
    for (int k = 0; k < -it.power; ++k) mul_truncated(num, b);
    base.divide_by(s[0], -it.power * static_cast<int>(len));
  }
  for (auto& c : num) {
    FactoredFrac f = base;
    f.num = c * base.num;
    out.coeffs.push_back(std::move(f));
  }
  return out;
}

std::optional<FactoredFrac> evaluate_factored(const ShuffleKernel& k, const std::vector<XValue>& x) {
  FactoredFrac out;
  out.num = LaurentPoly(1);
  for (const auto& b : k.blocks)
    for (const auto& f : b.factors) {
      LaurentPoly v = factor_value(f, x);
      if (v.is_zero()) {
        if (f.power < 0) return std::nullopt;
        out.num = LaurentPoly();
        out.den.clear();
        return out;
      }
      if (f.power > 0) out.num *= v.pow(f.power);
      else out.divide_by(v, -f.power);
    }
  return out;
}

std::vector<std::pair<LaurentPoly, int>> factor_values(const ShuffleKernel& k, const std::vector<XValue>& x) {
  std::vector<std::pair<LaurentPoly, int>> out;
  for (const auto& b : k.blocks)
    for (const auto& f : b.factors) out.emplace_back(factor_value(f, x), f.power);
  return out;
}

std::optional<RatFunc> evaluate(const ShuffleKernel& k, const std::vector<XValue>& x) {
  auto f = evaluate_factored(k, x);
  if (!f) return std::nullopt;
  return f->to_ratfunc() * k.scalar;
}

void for_each_assignment(const ShuffleKernel& k, const std::vector<XValue>& x,
                         const std::function<void(const std::vector<XValue>&)>& fn) {
  std::vector<std::vector<int>> perms(k.ell);
  for (int i = 0; i < k.ell; ++i) {
    perms[i].resize(k.counts[i]);
    std::iota(perms[i].begin(), perms[i].end(), 0);
  }
  std::vector<XValue> y(x.size());
  while (true) {
    for (int i = 0; i < k.ell; ++i)
      for (int r = 0; r < k.counts[i]; ++r) y[k.var(i, r + 1)] = x[k.var(i, perms[i][r] + 1)];
    fn(y);
    int i = 0;
    while (i < k.ell && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
    if (i == k.ell) break;
  }
}

FactoredFrac evaluate_sym_factored(const ShuffleKernel& k, const std::vector<XValue>& x) {
  std::vector<FactoredFrac> parts;
  for_each_assignment(k, x, [&](const std::vector<XValue>& y) {
    auto v = evaluate_factored(k, y);
    if (!v) throw IrregularPoint("a factor of the kernel vanishes identically at this point");
    parts.push_back(std::move(*v));
  });
  return sum(parts);
}

RatFunc evaluate_sym(const ShuffleKernel& k, const std::vector<XValue>& x) {
  return evaluate_sym_factored(k, x).to_ratfunc() * k.scalar;
}

namespace {

// prod_i prod_{r != r'} (x_{i,r} - qq^2 x_{i,r'})
LaurentPoly pole_denominator(const ShuffleKernel& k, const std::vector<XValue>& x) {
  LaurentPoly d(1);
  for (int i = 0; i < k.ell; ++i)
    for (int r = 1; r <= k.counts[i]; ++r)
      for (int s = 1; s <= k.counts[i]; ++s)
        if (r != s) d *= factor_value(lin(1, k.var(i, r), -qd(2, 0), k.var(i, s), 1), x);
  return d;
}

// F times the pole denominator as a Laurent polynomial, or nullopt if a pole remains.
LaurentPoly specialize(const LaurentPoly& p, const mpq_class& q0, const mpq_class& d0) {
  return p.eval_var(QQ, q0).eval_var(DD, d0);
}

// The kernel with qq and dd replaced by numbers.
ShuffleKernel specialize(const ShuffleKernel& k, const mpq_class& q0, const mpq_class& d0) {
  ShuffleKernel out = k;
  for (auto& b : out.blocks)
    for (auto& f : b.factors)
      for (auto& t : f.terms) t.coeff = specialize(t.coeff, q0, d0);
  return out;
}

std::optional<LaurentPoly> cleared(const ShuffleKernel& k, const std::vector<XValue>& x, const mpq_class& q0,
                                   const mpq_class& d0, std::string* witness) {
  FactoredFrac f = evaluate_sym_factored(k, x);
  LaurentPoly g = f.num * specialize(pole_denominator(k, x), q0, d0);
  for (const auto& [key, fm] : f.den)
    for (int m = 0; m < fm.second; ++m) {
      auto q = g.divide_exact(fm.first);
      if (!q) {
        if (witness) *witness = fm.first.to_string();
        return std::nullopt;
      }
      g = std::move(*q);
    }
  return g;
}

}  // namespace

MembershipReport check_membership(const ShuffleKernel& kernel, unsigned seed) {
  MembershipReport rep;
  int nv = kernel.num_vars();
  if (nv > 8) throw TooLarge("check_membership: more than 8 variables");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(2, 19);
  auto ratio = [&] {
    int a = coef(rng), b = coef(rng);
    while (b == a) b = coef(rng);
    mpq_class r(a, b);
    r.canonicalize();
    return r;
  };
  mpq_class q0 = ratio(), d0 = ratio();
  ShuffleKernel k = specialize(kernel, q0, d0);
  std::vector<int> exps(nv);
  std::iota(exps.begin(), exps.end(), 1);
  std::shuffle(exps.begin(), exps.end(), rng);
  std::vector<XValue> x(nv);
  for (int v = 0; v < nv; ++v) x[v] = {coef(rng), Mono::var(U, exps[v])};

  std::string witness;
  if (!cleared(k, x, q0, d0, &witness)) {
    rep.ok = false;
    rep.violations.push_back("pole: factor " + witness + " remains after clearing");
    return rep;
  }
  for (int i = 0; i < k.ell; ++i)
    for (int eps : {1, -1}) {
      int j = mod(i + eps, k.ell);
      for (int r1 = 1; r1 <= k.counts[i]; ++r1)
        for (int r2 = 1; r2 <= k.counts[i]; ++r2)
          for (int s = 1; s <= k.counts[j]; ++s) {
            if (r1 == r2) continue;
            std::vector<XValue> y = x;
            mpq_class w = y[k.var(j, s)].c;
            mpq_class de = eps > 0 ? d0 : mpq_class(1 / d0);
            y[k.var(i, r1)] = {w * q0 * de, Mono::var(U, exps[k.var(i, r1)])};
            y[k.var(i, r2)] = {w / q0 * de, Mono::var(U, exps[k.var(i, r2)])};
            std::string where = "wheel: color " + std::to_string(i) + ", eps " + std::to_string(eps) + ", r1 " +
                                std::to_string(r1) + ", r2 " + std::to_string(r2) + ", s " + std::to_string(s);
            auto g = cleared(k, y, q0, d0, nullptr);
            if (!g) {
              rep.ok = false;
              rep.violations.push_back(where + ": pole along the curve");
              continue;
            }
            LaurentPoly at = g->eval_var(U, 1);
            if (!at.is_zero()) {
              rep.ok = false;
              rep.violations.push_back(where + " gives " + at.to_string());
            }
          }
    }
  return rep;
}

}  // namespace wmk
