#include <mutex>

#include "wmk/linalg.hpp"
#include "wmk/macdonald.hpp"

namespace wmk {

const MacdonaldEntry& MacdonaldFamily::at(const Partition& lambda) const {
  auto it = table.find(lambda);
  if (it == table.end()) throw BasisIncomplete(to_string(lambda) + " is not in the computed family");
  return it->second;
}

std::vector<Partition> family_members(const Partition& core, int n, int ell) {
  std::vector<Partition> out;
  for (const auto& q : multipartitions(n, ell)) out.push_back(from_core_quotient(core, q, ell));
  return out;
}

RatFunc schur_coeff(const SymFunc& f, const Multipartition& quot) {
  // coefficient of s_quot = sum_rho f_rho prod_i chi^{quot_i}(rho_i)
  RatFunc r;
  for (const auto& [rho, c] : f.terms()) {
    mpz_class w = 1;
    for (size_t i = 0; i < rho.size() && w != 0; ++i) w *= chi(quot[i], rho[i]);
    if (w != 0) r += c * RatFunc(mpq_class(w));
  }
  return r;
}

SymFunc t_to_inverse(const SymFunc& f) { return f.substitute({{T, {1, Mono::var(T, -1)}}}); }

SymFunc swap_qt(const SymFunc& f) { return f.substitute({{Q, {1, Mono::var(T)}}, {T, {1, Mono::var(Q)}}}); }

SymFunc invert_swap_qt(const SymFunc& f) {
  return f.substitute({{Q, {1, Mono::var(T, -1)}}, {T, {1, Mono::var(Q, -1)}}});
}

namespace {

// Matrix of a plethysm in the Schur basis of degree n: a[mu][nu] = coeff of s_mu in s_nu[T X].
RatMatrix schur_matrix(const Pleth& t, const std::vector<Multipartition>& basis) {
  size_t n = basis.size();
  RatMatrix a(n, RatVector(n));
  std::map<Multipartition, size_t> index;
  for (size_t k = 0; k < n; ++k) index[basis[k]] = k;
  for (size_t nu = 0; nu < n; ++nu) {
    Expansion ex = t.apply(SymFunc::basis(Basis::S, basis[nu])).to_basis(Basis::S);
    for (const auto& [mp, c] : ex) a[index.at(mp)][nu] = c;
  }
  return a;
}

}  // namespace

MacdonaldFamily compute_H(const Partition& core, int n, int ell) {
  MacdonaldFamily fam;
  fam.ell = ell;
  fam.core = core;
  fam.n = n;
  CoreQuotient ccq = core_quotient(core, ell);
  if (size(ccq.quotient) != 0) throw InvalidPartition(to_string(core) + " is not a core");
  fam.charges = ccq.charges;
  auto basis = multipartitions(n, ell);
  fam.members = family_members(core, n, ell);

  RatMatrix aq = schur_matrix(Pleth::one_minus(ell, RatFunc::var(Q), -1), basis);
  RatMatrix at = schur_matrix(Pleth::one_minus(ell, RatFunc::var(T, -1), -1), basis);

  Multipartition trivial(ell);
  if (n > 0) trivial[0] = {n};
  size_t trivial_idx = 0;
  while (basis[trivial_idx] != trivial) ++trivial_idx;

  for (const auto& lam : fam.members) {
    RatMatrix rows;
    for (size_t m = 0; m < basis.size(); ++m) {
      const Partition& mu = fam.members[m];
      if (!dominates(mu, lam)) rows.push_back(aq[m]);
      if (!dominates(lam, mu)) rows.push_back(at[m]);
    }
    auto ns = nullspace(rows, basis.size());
    if (ns.empty()) throw NoSolution("no H for " + to_string(lam));
    if (ns.size() > 1) throw NonUniqueSolution("solution space of dimension " + std::to_string(ns.size()) + " for " + to_string(lam));
    RatVector x = ns[0];
    if (x[trivial_idx].is_zero()) throw ZeroLeadingCoefficient("trivial coefficient vanishes for " + to_string(lam));
    RatFunc inv = x[trivial_idx].inverse();
    Expansion coeffs;
    for (size_t k = 0; k < basis.size(); ++k)
      if (!x[k].is_zero()) coeffs[basis[k]] = x[k] * inv;
    MacdonaldEntry e;
    e.lambda = lam;
    e.quot = core_quotient(lam, ell).quotient;
    e.H = SymFunc::from_basis(ell, Basis::S, coeffs);
    e.H.set_sector(fam.charges);
    e.solution_dim = ns.size();
    fam.table.emplace(lam, std::move(e));
  }
  return fam;
}

void derive_variants(MacdonaldFamily& fam) {
  int l = fam.ell;
  RatFunc q = RatFunc::var(Q), t = RatFunc::var(T);
  Pleth one_minus_t = Pleth::one_minus(l, t, -1);
  Pleth q_over_t = Pleth::one_minus(l, q, -1) * Pleth::one_minus_inv(l, t, -1);
  Pleth tilde = Pleth::one_minus_inv(l, t, -1);
  Pleth neg = Pleth::negate(l);
  RatFunc sign(fam.n % 2 ? -1 : 1);
  for (auto& [lam, e] : fam.table) {
    SymFunc g = one_minus_t.apply(t_to_inverse(e.H));
    RatFunc cp = schur_coeff(g, e.quot);
    if (cp.is_zero()) throw ZeroLeadingCoefficient("leading coefficient of P vanishes for " + to_string(lam));
    e.P = g.scaled(cp.inverse());
    RatFunc cq = schur_coeff(q_over_t.apply(g), e.quot);
    if (cq.is_zero()) throw ZeroLeadingCoefficient("leading coefficient of Q vanishes for " + to_string(lam));
    e.Q = g.scaled(cq.inverse());
    e.Hstar = neg.apply(invert_swap_qt(e.H));
    // duals are taken from f[(1 - q s^-1)/(1 - t s^-1) X] at (-X; t, q)
    e.Pstar = neg.apply(swap_qt(q_over_t.apply(e.Q))).scaled(sign);
    e.Qstar = neg.apply(swap_qt(q_over_t.apply(e.P))).scaled(sign);
    e.Ptilde = tilde.apply(e.P);
    e.Qtilde = tilde.apply(e.Q);
  }
}

const MacdonaldFamily& macdonald_family(const Partition& core, int n, int ell) {
  static std::mutex mu;
  static std::map<std::tuple<Partition, int, int>, std::unique_ptr<MacdonaldFamily>> cache;
  auto key = std::make_tuple(core, n, ell);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto fam = std::make_unique<MacdonaldFamily>(compute_H(core, n, ell));
  derive_variants(*fam);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(fam));
  return *it->second;
}

const MacdonaldEntry& macdonald(const Partition& lambda, int ell) {
  CoreQuotient cq = core_quotient(lambda, ell);
  return macdonald_family(cq.core, size(cq.quotient), ell).at(lambda);
}

}  // namespace wmk
