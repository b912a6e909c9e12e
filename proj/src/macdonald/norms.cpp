#include "wmk/linalg.hpp"
#include "wmk/macdonald.hpp"

namespace wmk {

namespace {

RatFunc qt_mono(int a, int b) { return RatFunc(LaurentPoly::monomial(Mono::var(Q, a) * Mono::var(T, b))); }

// (x; q)_k
RatFunc qpoch(const RatFunc& x, int k) {
  RatFunc r(1), qk(1), q = RatFunc::var(Q);
  for (int i = 0; i < k; ++i) {
    r *= RatFunc(1) - x * qk;
    qk *= q;
  }
  return r;
}

int part(const Partition& p, size_t i) { return i < p.size() ? p[i] : 0; }

RatFunc node_factor(const Partition& lambda, const Node& n) {
  int a = arm(lambda, n), l = leg(lambda, n);
  return (RatFunc(1) - qt_mono(a + 1, l)) / (RatFunc(1) - qt_mono(a, l + 1));
}

bool is_strip(const Partition& lam, const Partition& mu, bool vertical) {
  if (lam.size() < mu.size()) return false;
  for (size_t i = 0; i < lam.size(); ++i) {
    int d = lam[i] - part(mu, i);
    if (d < 0 || (vertical && d > 1)) return false;
    if (!vertical && part(lam, i + 1) > part(mu, i)) return false;
  }
  return true;
}

}  // namespace

RatFunc conjectured_norm(const Partition& lambda, int ell) {
  RatFunc r(1);
  for (const Node& n : nodes(lambda))
    if ((arm(lambda, n) + leg(lambda, n) + 1) % ell == 0) r *= node_factor(lambda, n);
  return r;
}

RatFunc classical_norm(const Partition& lambda) { return conjectured_norm(lambda, 1); }

RatFunc norm_oracle(const Partition& lambda, int ell) {
  const MacdonaldEntry& e = macdonald(lambda, ell);
  const MacdonaldEntry& d = macdonald(transpose(lambda), ell);
  return pairing_qt(d.Pstar, e.P);
}

std::map<Partition, RatFunc> classical_pieri(const Partition& mu, int n, PieriKind kind) {
  bool vertical = kind == PieriKind::E;
  std::map<Partition, RatFunc> out;
  for (const auto& lam : partitions(size(mu) + n)) {
    if (!is_strip(lam, mu, vertical)) continue;
    RatFunc c(1);
    int len = lam.size();
    if (vertical) {
      for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
          int li = part(lam, i), lj = part(lam, j), mi = part(mu, i), mj = part(mu, j);
          if (li != mi || lj != mj + 1) continue;
          c *= (RatFunc(1) - qt_mono(mi - mj, j - i - 1)) * (RatFunc(1) - qt_mono(li - lj, j - i + 1)) /
               ((RatFunc(1) - qt_mono(mi - mj, j - i)) * (RatFunc(1) - qt_mono(li - lj, j - i)));
        }
    } else {
      for (int i = 0; i < len; ++i) {
        int k = part(lam, i) - part(mu, i);
        if (k == 0) continue;
        for (int j = i + 1; j < len; ++j)
          c *= qpoch(qt_mono(part(mu, i) - part(lam, j) + 1, j - i - 1), k) /
               qpoch(qt_mono(part(mu, i) - part(lam, j), j - i), k);
        for (int j = i; j < (int)mu.size(); ++j)
          c *= qpoch(qt_mono(part(mu, i) - part(mu, j), j - i + 1), k) /
               qpoch(qt_mono(part(mu, i) - part(mu, j) + 1, j - i), k);
      }
    }
    out.emplace(lam, c);
  }
  return out;
}

std::map<Partition, RatFunc> expand_in(const SymFunc& f, const std::vector<Partition>& members,
                                       const std::vector<const SymFunc*>& vectors) {
  std::map<Multipartition, size_t> rows;
  std::vector<Expansion> cols;
  for (const SymFunc* v : vectors) {
    cols.push_back(v->to_basis(Basis::S));
    for (const auto& [mp, c] : cols.back()) rows.emplace(mp, 0);
  }
  Expansion target = f.to_basis(Basis::S);
  for (const auto& [mp, c] : target) rows.emplace(mp, 0);
  size_t r = 0;
  for (auto& [mp, idx] : rows) idx = r++;
  RatMatrix a(rows.size(), RatVector(vectors.size()));
  RatVector b(rows.size());
  for (size_t k = 0; k < cols.size(); ++k)
    for (const auto& [mp, c] : cols[k]) a[rows.at(mp)][k] = c;
  for (const auto& [mp, c] : target) b[rows.at(mp)] = c;
  auto x = solve(a, b);
  if (!x) throw BasisIncomplete("function is not in the span of the given family");
  std::map<Partition, RatFunc> out;
  for (size_t k = 0; k < members.size(); ++k)
    if (!(*x)[k].is_zero()) out.emplace(members[k], (*x)[k]);
  return out;
}

namespace {

// P_lambda / Q_lambda
RatFunc p_over_q(const MacdonaldEntry& e) { return schur_coeff(e.P, e.quot) / schur_coeff(e.Q, e.quot); }

// Expansion is always done in the P basis; Q coefficients follow by rescaling.
std::map<Partition, RatFunc> expand_product(const SymFunc& g, const Partition& mu, int ell, DualBasis basis) {
  CoreQuotient cq = core_quotient(mu, ell);
  const MacdonaldEntry& m = macdonald(mu, ell);
  int deg = size(cq.quotient);
  int gdeg = 0;
  for (const auto& [rho, c] : g.terms()) gdeg = size(rho);
  const MacdonaldFamily& fam = macdonald_family(cq.core, deg + gdeg, ell);
  std::vector<const SymFunc*> vecs;
  for (const auto& lam : fam.members) vecs.push_back(&fam.at(lam).P);
  auto out = expand_in(g * m.P, fam.members, vecs);
  if (basis == DualBasis::Q) {
    RatFunc r = p_over_q(m).inverse();
    for (auto& [lam, c] : out) c *= r * p_over_q(fam.at(lam));
  }
  return out;
}

}  // namespace

std::map<Partition, RatFunc> wreath_pieri_oracle(const Partition& mu, int p, int n, int ell) {
  return expand_product(SymFunc::e(ell, n, p), mu, ell, DualBasis::P);
}

std::map<Partition, RatFunc> wreath_dual_pieri_oracle(const Partition& mu, int p, int n, int ell, DualBasis basis) {
  RatFunc q = RatFunc::var(Q), t = RatFunc::var(T);
  Pleth k = Pleth::one_minus(ell, t, -1) * Pleth::one_minus_inv(ell, q, -1);
  return expand_product(k.apply(SymFunc::h(ell, n, p)), mu, ell, basis);
}

}  // namespace wmk
