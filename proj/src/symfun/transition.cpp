#include <algorithm>
#include <mutex>
#include <functional>

#include "wmk/symfun.hpp"

namespace wmk {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::P: return "p";
    case Basis::S: return "s";
    case Basis::E: return "e";
    case Basis::H: return "h";
    case Basis::M: return "m";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  for (Basis b : {Basis::P, Basis::S, Basis::E, Basis::H, Basis::M})
    if (s == basis_name(b)) return b;
  throw ParseError("unknown basis '" + s + "'");
}

mpz_class zee(const Partition& p) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int k : p) ++mult[k];
  for (auto [k, m] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_class kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= f * kp;
  }
  return z;
}

mpz_class zee(const Multipartition& mp) {
  mpz_class z = 1;
  for (const auto& p : mp) z *= zee(p);
  return z;
}

namespace {

std::recursive_mutex& cache_mutex() {
  static std::recursive_mutex m;
  return m;
}

// Beta numbers with a fixed number of beads.
std::vector<int> beta(const Partition& p, int beads) {
  std::vector<int> b;
  for (int k = 0; k < beads; ++k) b.push_back((k < static_cast<int>(p.size()) ? p[k] : 0) + beads - 1 - k);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int beads = static_cast<int>(b.size());
  Partition p;
  for (int k = 0; k < beads; ++k)
    if (b[k] - (beads - 1 - k) > 0) p.push_back(b[k] - (beads - 1 - k));
  return p;
}

mpz_class chi_rec(const Partition& lambda, const Partition& rho, size_t from,
                  std::map<std::pair<Partition, size_t>, mpz_class>& memo) {
  if (from == rho.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, from);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = rho[from];
  int beads = static_cast<int>(lambda.size());
  std::vector<int> b = beta(lambda, beads);
  mpz_class total = 0;
  for (int k = 0; k < beads; ++k) {
    int to = b[k] - r;
    if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
    int between = 0;
    for (int x : b)
      if (x > to && x < b[k]) ++between;
    std::vector<int> nb = b;
    nb[k] = to;
    mpz_class v = chi_rec(from_beta(nb), rho, from + 1, memo);
    total += between % 2 ? mpz_class(-v) : v;
  }
  memo[key] = total;
  return total;
}

using Row = std::map<Partition, mpq_class>;

Row product(const Row& a, const Row& b) {
  Row out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      Partition m = pa;
      m.insert(m.end(), pb.begin(), pb.end());
      std::sort(m.rbegin(), m.rend());
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

Row one_part(Basis b, int n) {
  Row r;
  for (const auto& rho : partitions(n)) {
    mpq_class c(1, 1);
    c /= mpq_class(zee(rho));
    if (b == Basis::E && (n - static_cast<int>(rho.size())) % 2) c = -c;
    r[rho] = c;
  }
  return r;
}

// Coefficient of the monomial x^lambda in p_rho.
mpz_class power_in_monomial(const Partition& rho, const Partition& lambda) {
  std::vector<int> fill(lambda.size(), 0);
  mpz_class count = 0;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == rho.size()) {
      if (std::equal(fill.begin(), fill.end(), lambda.begin())) ++count;
      return;
    }
    for (size_t j = 0; j < lambda.size(); ++j) {
      if (fill[j] + rho[k] > lambda[j]) continue;
      fill[j] += rho[k];
      rec(k + 1);
      fill[j] -= rho[k];
    }
  };
  rec(0);
  return count;
}

// Inverse of a square matrix over Q indexed by partitions of n.
std::map<Partition, Row> invert(const std::vector<Partition>& idx, const std::map<Partition, Row>& a) {
  size_t n = idx.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
  for (size_t r = 0; r < n; ++r) {
    const Row& row = a.at(idx[r]);
    for (size_t c = 0; c < n; ++c) {
      auto it = row.find(idx[c]);
      if (it != row.end()) m[r][c] = it->second;
    }
    m[r][n + r] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (sgn(m[piv][c]) == 0) ++piv;
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c];
      for (size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::map<Partition, Row> out;
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      if (sgn(m[r][n + c]) != 0) out[idx[r]][idx[c]] = m[r][n + c];
  for (const auto& p : idx) out[p];
  return out;
}

}  // namespace

mpz_class chi(const Partition& lambda, const Partition& rho) {
  if (size(lambda) != size(rho)) return 0;
  static std::map<std::pair<Partition, Partition>, mpz_class> cache;
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  auto key = std::make_pair(lambda, rho);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<std::pair<Partition, size_t>, mpz_class> memo;
  mpz_class v = chi_rec(lambda, rho, 0, memo);
  cache[key] = v;
  return v;
}

namespace {

Row compute_to_power(Basis b, const Partition& lambda) {
  Row r;
  switch (b) {
    case Basis::P:
      r[lambda] = 1;
      break;
    case Basis::S:
      for (const auto& rho : partitions(size(lambda))) {
        mpq_class c(chi(lambda, rho));
        if (sgn(c) != 0) r[rho] = c / mpq_class(zee(rho));
      }
      break;
    case Basis::H:
    case Basis::E: {
      r[Partition{}] = 1;
      Partition parts = b == Basis::E ? transpose(lambda) : lambda;
      for (int k : parts) r = product(r, one_part(b, k));
      break;
    }
    case Basis::M:
      break;
  }
  return r;
}

}  // namespace

namespace {

struct Tables {
  std::map<std::pair<Basis, Partition>, Row> to_p, from_p;
};

Tables& tables() {
  static Tables t;
  return t;
}

void fill_degree(Basis b, int n) {
  auto idx = partitions(n);
  std::map<Partition, Row> a;
  if (b == Basis::M) {
    // p_rho = sum L[rho][lambda] m_lambda
    std::map<Partition, Row> l;
    for (const auto& rho : idx)
      for (const auto& lam : idx) {
        mpz_class c = power_in_monomial(rho, lam);
        if (c != 0) l[rho][lam] = c;
      }
    for (const auto& p : idx) l[p];
    auto inv = invert(idx, l);
    for (const auto& p : idx) {
      tables().from_p[{b, p}] = l[p];
      tables().to_p[{b, p}] = inv[p];
    }
    return;
  }
  for (const auto& lam : idx) a[lam] = compute_to_power(b, lam);
  auto inv = invert(idx, a);
  for (const auto& p : idx) {
    tables().to_p[{b, p}] = a[p];
    tables().from_p[{b, p}] = inv[p];
  }
}

}  // namespace

const std::map<Partition, mpq_class>& to_power(Basis b, const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  if (!tables().to_p.count({b, lambda})) fill_degree(b, size(lambda));
  return tables().to_p.at({b, lambda});
}

const std::map<Partition, mpq_class>& power_to(Basis b, const Partition& rho) {
  to_power(b, rho);
  std::lock_guard<std::recursive_mutex> lock(cache_mutex());
  return tables().from_p.at({b, rho});
}

}  // namespace wmk
