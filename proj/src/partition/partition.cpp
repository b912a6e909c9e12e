#include <algorithm>
#include <functional>
#include <numeric>

#include "wmk/partition.hpp"

namespace wmk {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int size(const Multipartition& p) {
  int s = 0;
  for (const auto& x : p) s += size(x);
  return s;
}

bool is_partition(const Partition& p) {
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0) return false;
    if (k + 1 < p.size() && p[k] < p[k + 1]) return false;
  }
  return true;
}

Partition make_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!is_partition(parts)) throw InvalidPartition("not a partition: " + to_string(parts));
  return parts;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p[k]);
  }
  return s + ")";
}

std::string to_string(const Multipartition& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) s += ", ";
    s += p[k].empty() ? "∅" : to_string(p[k]);
  }
  return s + ")";
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.assign(p[0], 0);
  for (int r : p)
    for (int a = 0; a < r; ++a) ++t[a];
  return t;
}

std::vector<int> transpose_charge(const std::vector<int>& a) {
  std::vector<int> r(a.rbegin(), a.rend());
  for (auto& x : r) x = -x;
  return r;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Multipartition> multipartitions(int n, int ell) {
  std::vector<Multipartition> out;
  Multipartition cur(ell);
  std::function<void(int, int)> rec = [&](int comp, int left) {
    if (comp == ell - 1) {
      for (const auto& p : partitions(left)) {
        cur[comp] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (const auto& p : partitions(k)) {
        cur[comp] = p;
        rec(comp + 1, left - k);
      }
  };
  rec(0, n);
  return out;
}

int mod(int x, int ell) { return ((x % ell) + ell) % ell; }

LaurentPoly character(const Node& n) {
  Mono m;
  m.e[Q] = n.a - 1;
  m.e[T] = n.b - 1;
  return LaurentPoly::monomial(m);
}

bool contains(const Partition& p, const Node& n) {
  return n.a >= 1 && n.b >= 1 && n.b <= static_cast<int>(p.size()) && n.a <= p[n.b - 1];
}

std::vector<Node> nodes(const Partition& p) {
  std::vector<Node> out;
  for (int b = 1; b <= static_cast<int>(p.size()); ++b)
    for (int a = 1; a <= p[b - 1]; ++a) out.push_back({a, b});
  return out;
}

std::vector<Node> skew_nodes(const Partition& outer, const Partition& inner) {
  std::vector<Node> out;
  for (const auto& n : nodes(outer))
    if (!contains(inner, n)) out.push_back(n);
  return out;
}

Partition add_node(const Partition& p, const Node& n) {
  Partition r = p;
  if (n.b == static_cast<int>(r.size()) + 1) r.push_back(0);
  if (n.b > static_cast<int>(r.size()) || r[n.b - 1] != n.a - 1)
    throw NodeOutside("node not addable");
  ++r[n.b - 1];
  if (!is_partition(r)) throw NodeOutside("node not addable");
  return r;
}

Partition remove_node(const Partition& p, const Node& n) {
  if (!contains(p, n) || p[n.b - 1] != n.a) throw NodeOutside("node not removable");
  Partition r = p;
  --r[n.b - 1];
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (!is_partition(r)) throw NodeOutside("node not removable");
  return r;
}

int arm(const Partition& p, const Node& n) {
  if (!contains(p, n)) throw NodeOutside("node outside the diagram");
  return p[n.b - 1] - n.a;
}

int leg(const Partition& p, const Node& n) {
  if (!contains(p, n)) throw NodeOutside("node outside the diagram");
  int l = 0;
  while (n.b + l < static_cast<int>(p.size()) && p[n.b + l] >= n.a) ++l;
  return l;
}

NodeStats node_stats(const Partition& p, const Node& n, int ell) {
  int a = arm(p, n), l = leg(p, n);
  return {content(n), color(n, ell), a, l, a + l + 1, character(n)};
}

std::vector<Node> addable(const Partition& p) {
  std::vector<Node> out;
  int len = static_cast<int>(p.size());
  for (int b = 1; b <= len + 1; ++b) {
    int cur = b <= len ? p[b - 1] : 0;
    int above = b == 1 ? INT32_MAX : p[b - 2];
    if (cur < above) out.push_back({cur + 1, b});
  }
  std::sort(out.begin(), out.end(), [](const Node& x, const Node& y) { return content(x) < content(y); });
  return out;
}

std::vector<Node> removable(const Partition& p) {
  std::vector<Node> out;
  int len = static_cast<int>(p.size());
  for (int b = 1; b <= len; ++b) {
    int below = b < len ? p[b] : 0;
    if (p[b - 1] > below) out.push_back({p[b - 1], b});
  }
  std::sort(out.begin(), out.end(), [](const Node& x, const Node& y) { return content(x) < content(y); });
  return out;
}

std::vector<Node> addable(const Partition& p, int i, int ell) {
  std::vector<Node> out;
  for (const auto& n : addable(p))
    if (color(n, ell) == i) out.push_back(n);
  return out;
}

std::vector<Node> removable(const Partition& p, int i, int ell) {
  std::vector<Node> out;
  for (const auto& n : removable(p))
    if (color(n, ell) == i) out.push_back(n);
  return out;
}

int color_count(const Partition& p, int i, int ell) {
  int c = 0;
  for (const auto& n : nodes(p))
    if (color(n, ell) == i) ++c;
  return c;
}

bool dominates(const Partition& lam, const Partition& mu) {
  if (size(lam) != size(mu)) throw SizeMismatch(to_string(lam) + " vs " + to_string(mu));
  int sl = 0, sm = 0;
  for (size_t k = 0; k < std::max(lam.size(), mu.size()); ++k) {
    sl += k < lam.size() ? lam[k] : 0;
    sm += k < mu.size() ? mu[k] : 0;
    if (sl < sm) return false;
  }
  return true;
}

Comparison compare(const Partition& lam, const Partition& mu, int ell) {
  bool ge = dominates(lam, mu), le = dominates(mu, lam);
  Order o = ge && le ? Order::Equal : ge ? Order::Greater : le ? Order::Less : Order::Incomparable;
  return {o, core_quotient(lam, ell).core == core_quotient(mu, ell).core};
}

bool geq_ell(const Partition& lam, const Partition& mu, int ell) {
  if (size(lam) != size(mu)) return false;
  return dominates(lam, mu) && core_quotient(lam, ell).core == core_quotient(mu, ell).core;
}

}  // namespace wmk
