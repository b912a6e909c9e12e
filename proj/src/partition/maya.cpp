#include <algorithm>

#include "wmk/partition.hpp"

namespace wmk {

MayaDiagram MayaDiagram::from_black(const std::vector<int>& finite_black, int sea_below) {
  MayaDiagram m;
  int lo = sea_below, hi = sea_below;
  for (int x : finite_black) {
    lo = std::min(lo, x);
    hi = std::max(hi, x + 1);
  }
  m.offset_ = lo;
  m.cells_.assign(hi - lo, 0);
  for (int n = lo; n < sea_below; ++n) m.cells_[n - lo] = 1;
  for (int x : finite_black) m.cells_[x - lo] = 1;
  m.trim();
  return m;
}

bool MayaDiagram::black(int n) const {
  if (n < offset_) return true;
  if (n >= hi()) return false;
  return cells_[n - offset_] != 0;
}

void MayaDiagram::set(int n, bool b) {
  if (black(n) == b) return;
  if (n < offset_) {
    cells_.insert(cells_.begin(), offset_ - n, 1);
    offset_ = n;
  } else if (n >= hi()) {
    cells_.resize(n - offset_ + 1, 0);
  }
  cells_[n - offset_] = b ? 1 : 0;
  trim();
}

void MayaDiagram::trim() {
  size_t k = 0;
  while (k < cells_.size() && cells_[k]) ++k;
  cells_.erase(cells_.begin(), cells_.begin() + static_cast<long>(k));
  offset_ += static_cast<int>(k);
  while (!cells_.empty() && !cells_.back()) cells_.pop_back();
}

int MayaDiagram::charge() const {
  int c = 0;
  for (int n = std::min(lo(), 0); n < std::max(hi(), 0); ++n) {
    if (n < 0 && !black(n)) ++c;
    if (n >= 0 && black(n)) --c;
  }
  return c;
}

std::string MayaDiagram::dump(int from, int to) const {
  std::string s;
  for (int n = to; n >= from; --n) {
    s += black(n) ? '@' : 'o';
    if (n == 0) s += '|';
  }
  return s;
}

MayaDiagram young_to_maya(const Partition& p) {
  Partition t = transpose(p);
  std::vector<int> black;
  for (int a = 1; a <= static_cast<int>(t.size()); ++a) black.push_back(t[a - 1] - a);
  return MayaDiagram::from_black(black, -static_cast<int>(t.size()));
}

Partition maya_to_young(const MayaDiagram& m) {
  if (m.charge() != 0) throw ChargeError("Maya diagram has charge " + std::to_string(m.charge()));
  // Black beads in decreasing order b_1 > b_2 > ...; the transpose has parts b_a + a.
  Partition t;
  int a = 0;
  for (int n = m.hi() - 1; n >= std::min(m.lo(), 0) - 1; --n) {
    if (!m.black(n)) continue;
    ++a;
    int part = n + a;
    if (part <= 0) break;
    t.push_back(part);
  }
  return transpose(t);
}

namespace {

int floor_div(int x, int d) { return (x - mod(x, d)) / d; }

MayaDiagram component(const MayaDiagram& m, int i, int ell) {
  std::vector<int> black;
  int nlo = floor_div(m.lo() - i, ell) - 1;
  int nhi = floor_div(m.hi() - i, ell) + 1;
  for (int n = nlo; n <= nhi; ++n)
    if (m.black(i + n * ell)) black.push_back(n);
  return MayaDiagram::from_black(black, nlo);
}

MayaDiagram shifted(const MayaDiagram& m, int s) {
  // result(n) = m(n - s)
  std::vector<int> black;
  for (int n = m.lo(); n < m.hi(); ++n)
    if (m.black(n)) black.push_back(n + s);
  return MayaDiagram::from_black(black, m.lo() + s);
}

}  // namespace

CoreQuotient core_quotient(const Partition& p, int ell) {
  CoreQuotient cq;
  cq.ell = ell;
  MayaDiagram m = young_to_maya(p);
  for (int i = 0; i < ell; ++i) {
    MayaDiagram mi = component(m, i, ell);
    int c = mi.charge();
    cq.charges.push_back(c);
    cq.quotient.push_back(maya_to_young(shifted(mi, c)));
  }
  cq.core = core_from_charges(cq.charges);
  return cq;
}

namespace {

MayaDiagram assemble(const std::vector<MayaDiagram>& comps, int ell) {
  int lo = 0, hi = 0;
  for (int i = 0; i < ell; ++i) {
    lo = std::min(lo, i + comps[i].lo() * ell);
    hi = std::max(hi, i + comps[i].hi() * ell);
  }
  lo -= ell;
  std::vector<int> black;
  for (int n = lo; n <= hi; ++n) {
    int i = mod(n, ell);
    if (comps[i].black((n - i) / ell)) black.push_back(n);
  }
  return MayaDiagram::from_black(black, lo);
}

}  // namespace

Partition core_from_charges(const std::vector<int>& charges) {
  int ell = static_cast<int>(charges.size());
  int sum = 0;
  for (int c : charges) sum += c;
  if (sum != 0) throw ChargeError("charges do not sum to zero");
  std::vector<MayaDiagram> comps;
  for (int i = 0; i < ell; ++i) comps.push_back(MayaDiagram::from_black({}, -charges[i]));
  return maya_to_young(assemble(comps, ell));
}

Partition from_core_quotient(const CoreQuotient& cq) {
  std::vector<MayaDiagram> comps;
  for (int i = 0; i < cq.ell; ++i) comps.push_back(shifted(young_to_maya(cq.quotient[i]), -cq.charges[i]));
  return maya_to_young(assemble(comps, cq.ell));
}

Partition from_core_quotient(const Partition& core, const Multipartition& quot, int ell) {
  CoreQuotient cq = core_quotient(core, ell);
  if (size(cq.quotient) != 0) throw InvalidPartition(to_string(core) + " is not an " + std::to_string(ell) + "-core");
  cq.quotient = quot;
  return from_core_quotient(cq);
}

bool is_core(const Partition& p, int ell) { return size(core_quotient(p, ell).quotient) == 0; }

nlohmann::json to_json(const CoreQuotient& cq) {
  return {{"ell", cq.ell}, {"core", cq.core}, {"charges", cq.charges}, {"quotient", cq.quotient}};
}

std::vector<QuotLine> column_order(const Partition& p, int ell) {
  CoreQuotient cq = core_quotient(p, ell);
  std::vector<QuotLine> out;
  for (int i = 0; i < ell; ++i) {
    Partition t = transpose(cq.quotient[i]);
    for (int a = 1; a <= static_cast<int>(t.size()); ++a) {
      long n = t[a - 1] - a - cq.charges[i];
      out.push_back({i, a, t[a - 1], i + n * ell});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuotLine& x, const QuotLine& y) { return x.position > y.position; });
  return out;
}

std::vector<QuotLine> row_order(const Partition& p, int ell) {
  CoreQuotient cq = core_quotient(p, ell);
  std::vector<QuotLine> out;
  for (int i = 0; i < ell; ++i) {
    const Partition& q = cq.quotient[i];
    for (int b = 1; b <= static_cast<int>(q.size()); ++b) {
      long n = b - 1 - q[b - 1] - cq.charges[i];
      out.push_back({i, b, q[b - 1], i + n * ell});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuotLine& x, const QuotLine& y) { return x.position < y.position; });
  return out;
}

Peel peel_last_column(const Partition& p, int ell) {
  auto cols = column_order(p, ell);
  if (cols.empty()) throw EmptyQuotient(to_string(p) + " is an " + std::to_string(ell) + "-core");
  const QuotLine& last = cols.back();
  CoreQuotient cq = core_quotient(p, ell);
  Partition& comp = cq.quotient[last.component];
  for (int b = 1; b <= last.length; ++b) --comp[b - 1];
  while (!comp.empty() && comp.back() == 0) comp.pop_back();
  Partition rest = from_core_quotient(cq);
  return {rest, last.component, last.length, skew_nodes(p, rest)};
}

Peel peel_last_row(const Partition& p, int ell) {
  auto rows = row_order(p, ell);
  if (rows.empty()) throw EmptyQuotient(to_string(p) + " is an " + std::to_string(ell) + "-core");
  const QuotLine& last = rows.back();
  CoreQuotient cq = core_quotient(p, ell);
  cq.quotient[last.component].pop_back();
  Partition rest = from_core_quotient(cq);
  return {rest, last.component, last.length, skew_nodes(p, rest)};
}

}  // namespace wmk
