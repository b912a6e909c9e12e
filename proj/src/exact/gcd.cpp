#include <random>

#include "wmk/exact.hpp"

namespace wmk {

UnitSplit unit_split(const LaurentPoly& p) {
  UnitSplit s{mpq_class(0), Mono{}, LaurentPoly()};
  if (p.is_zero()) return s;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
  }
  s.c = mpq_class(num_gcd, den_lcm);
  s.c.canonicalize();
  if (sgn(p.leading().c) < 0) s.c = -s.c;
  s.m = p.min_mono();
  s.r = p.times_mono(Mono{} / s.m, 1 / s.c);
  return s;
}

namespace {

using u64 = uint64_t;
constexpr u64 kPrime = (1ULL << 61) - 1;

u64 mulmod(u64 a, u64 b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  u64 lo = static_cast<u64>(r & kPrime), hi = static_cast<u64>(r >> 61);
  u64 s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

u64 addmod(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }

u64 powmod(u64 b, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

u64 to_mod(const mpz_class& z) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kPrime);
  return r.get_ui();
}

using ModPoly = std::vector<u64>;  // dense, index = exponent

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b) {
  u64 inv = invmod(b.back());
  while (a.size() >= b.size()) {
    u64 f = mulmod(a.back(), inv);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(f, b[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

// Image of p in Z_p[v] with the other variables set to pts. Exponents must be >= 0.
ModPoly image(const LaurentPoly& p, Var v, const std::array<u64, kNumVars>& pts) {
  ModPoly out(static_cast<size_t>(std::max(0, p.max_deg(v))) + 1, 0);
  for (const auto& t : p.terms()) {
    u64 c = to_mod(t.c.get_num());
    for (int i = 0; i < kNumVars; ++i)
      if (i != v && t.m.e[i] != 0) c = mulmod(c, powmod(pts[i], static_cast<u64>(t.m.e[i])));
    out[t.m.e[v]] = addmod(out[t.m.e[v]], c);
  }
  return out;
}

std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234abcdULL);
  return g;
}

// Upper bound on deg_v gcd(a, b) from one modular image, or -1 if the
// evaluation point was unlucky for the leading coefficients.
int image_degree_bound(const LaurentPoly& a, const LaurentPoly& b, Var v) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::array<u64, kNumVars> pts{};
    for (auto& x : pts) x = 2 + rng()() % (kPrime - 3);
    ModPoly ia = image(a, v, pts), ib = image(b, v, pts);
    if (ia.back() == 0 || ib.back() == 0) continue;
    return mod_gcd_degree(std::move(ia), std::move(ib));
  }
  return -1;
}

LaurentPoly lead_coeff(const LaurentPoly& p, Var v) { return p.coeffs_in(v).rbegin()->second; }

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: inexact division");
  return *q;
}

// Pseudo-remainder of a by b with respect to v.
LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, Var v) {
  int db = b.max_deg(v);
  LaurentPoly lb = lead_coeff(b, v);
  int steps = a.max_deg(v) - db + 1;
  while (!a.is_zero() && a.max_deg(v) >= db) {
    int da = a.max_deg(v);
    LaurentPoly la = lead_coeff(a, v);
    a = a * lb - (la * b).times_mono(Mono::var(v, da - db));
    --steps;
  }
  if (steps > 0) a *= lb.pow(static_cast<unsigned>(steps));
  return a;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, Var v) {
  LaurentPoly g;
  for (const auto& [k, c] : p.coeffs_in(v)) {
    g = g.is_zero() ? unit_split(c).r : poly_gcd(g, c);
    if (g.is_constant()) return LaurentPoly(1);
  }
  return g;
}

// Integer primitive, monomial free inputs; result normalized the same way.
LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero()) return unit_split(b0).r;
  if (b0.is_zero()) return unit_split(a0).r;
  LaurentPoly a = unit_split(a0).r, b = unit_split(b0).r;
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  if (a == b) return a;
  if (a.size() > b.size() || (a.size() == b.size() && grlex_greater(a.leading().m, b.leading().m)))
    std::swap(a, b);
  if (b.divide_exact(a)) return a;

  // Variables shared by both; the gcd can only involve these.
  std::vector<Var> shared;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    bool ua = a.uses(v), ub = b.uses(v);
    if (ua && !ub) return poly_gcd(content_in(a, v), b);
    if (ub && !ua) return poly_gcd(a, content_in(b, v));
    if (ua) shared.push_back(v);
  }

  Var main = shared.front();
  int best = -1;
  bool all_trivial = true;
  for (Var v : shared) {
    int d = image_degree_bound(a, b, v);
    if (d != 0) all_trivial = false;
    int cost = std::min(a.max_deg(v), b.max_deg(v));
    if (d > 0 && (best < 0 || cost < best)) {
      best = cost;
      main = v;
    }
  }
  if (all_trivial) return LaurentPoly(1);

  LaurentPoly ca = content_in(a, main), cb = content_in(b, main);
  LaurentPoly g = poly_gcd(ca, cb);
  LaurentPoly A = exact_div(a, ca), B = exact_div(b, cb);
  if (A.max_deg(main) < B.max_deg(main)) std::swap(A, B);

  // Subresultant PRS.
  LaurentPoly gg(1), h(1);
  while (true) {
    int delta = A.max_deg(main) - B.max_deg(main);
    LaurentPoly R = prem(A, B, main);
    if (R.is_zero()) break;
    if (!R.uses(main)) return g;
    A = B;
    B = exact_div(R, gg * h.pow(static_cast<unsigned>(delta)));
    gg = lead_coeff(A, main);
    if (delta > 0) h = exact_div(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  LaurentPoly pb = exact_div(B, content_in(B, main));
  return unit_split(pb * g).r;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  return poly_gcd(a, b);
}

}  // namespace wmk
