#include <algorithm>
#include <limits>
#include <sstream>

#include "wmk/exact.hpp"

namespace wmk {

const std::array<std::string, kNumVars>& var_names() {
  static const std::array<std::string, kNumVars> names = {"qq", "dd", "ups", "u", "q", "t"};
  return names;
}

std::optional<Var> var_from_name(const std::string& name) {
  const auto& names = var_names();
  for (int i = 0; i < kNumVars; ++i)
    if (names[i] == name) return static_cast<Var>(i);
  if (name == "𝔮") return QQ;
  if (name == "𝔡") return DD;
  if (name == "υ") return UPS;
  return std::nullopt;
}

int64_t Mono::degree() const {
  int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Mono::is_one() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Mono Mono::pow(int k) const {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] * k;
  return r;
}

Mono Mono::var(Var v, int k) {
  Mono r;
  r.e[v] = k;
  return r;
}

bool grlex_greater(const Mono& a, const Mono& b) {
  int64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

size_t MonoHash::operator()(const Mono& m) const {
  uint64_t h = 1469598103934665603ULL;
  for (auto x : m.e) {
    h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
    h *= 1099511628211ULL;
  }
  return h;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Mono{}, mpq_class(c)});
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (sgn(c) != 0) terms_.push_back({Mono{}, c});
}

LaurentPoly LaurentPoly::monomial(const Mono& m, const mpq_class& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::var(Var v, int k) { return monomial(Mono::var(v, k)); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  terms_ = std::move(out);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

mpq_class LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.m.is_one()) return t.c;
  return 0;
}

namespace {

using Term = LaurentPoly::Term;

std::vector<Term> merge_two(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].m == b[j].m) {
      mpq_class c = negate_b ? mpq_class(a[i].c - b[j].c) : mpq_class(a[i].c + b[j].c);
      if (sgn(c) != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    } else if (grlex_greater(a[i].m, b[j].m)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(negate_b ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].m, -b[j].c} : b[j]);
  return out;
}

}  // namespace

LaurentPoly merge_sorted(std::vector<std::vector<Term>>& rows) {
  // Balanced pairwise merging of sorted rows.
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (size_t k = 0; k + 1 < rows.size(); k += 2) next.push_back(merge_two(rows[k], rows[k + 1], false));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  LaurentPoly p;
  if (!rows.empty()) p.terms_ = std::move(rows[0]);
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p;
  p.terms_ = merge_two(terms_, o.terms_, false);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly p;
  p.terms_ = merge_two(terms_, o.terms_, true);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  const LaurentPoly& a = size() <= o.size() ? *this : o;
  const LaurentPoly& b = size() <= o.size() ? o : *this;
  if (a.size() == 1) return b.times_mono(a.terms_[0].m, a.terms_[0].c);
  std::vector<std::vector<Term>> rows;
  rows.reserve(a.size());
  for (const auto& t : a.terms_) {
    std::vector<Term> row;
    row.reserve(b.size());
    for (const auto& s : b.terms_) row.push_back({t.m * s.m, t.c * s.c});
    rows.push_back(std::move(row));
  }
  return merge_sorted(rows);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return LaurentPoly();
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.c *= c;
  return p;
}

LaurentPoly LaurentPoly::times_mono(const Mono& m, const mpq_class& c) const {
  if (sgn(c) == 0) return LaurentPoly();
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& b) const {
  if (b.is_zero()) throw DivisionByZero(to_string(), "0");
  if (is_zero()) return LaurentPoly();
  if (b.is_monomial()) return times_mono(Mono{} / b.terms_[0].m, 1 / b.terms_[0].c);
  // Exponents of an exact quotient lie in the box [min a - min b, max a - max b].
  Mono lo, hi;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    lo.e[i] = min_deg(v) - b.min_deg(v);
    hi.e[i] = max_deg(v) - b.max_deg(v);
    if (lo.e[i] > hi.e[i]) return std::nullopt;
  }
  const mpq_class lc_inv = 1 / b.leading().c;
  const Mono& lb = b.leading().m;
  std::vector<Term> qterms;
  LaurentPoly r = *this;
  while (!r.is_zero()) {
    Mono qm = r.leading().m / lb;
    for (int i = 0; i < kNumVars; ++i)
      if (qm.e[i] < lo.e[i] || qm.e[i] > hi.e[i]) return std::nullopt;
    mpq_class qc = r.leading().c * lc_inv;
    r -= b.times_mono(qm, qc);
    qterms.push_back({qm, qc});
  }
  LaurentPoly q;
  q.terms_ = std::move(qterms);  // produced in decreasing order
  return q;
}

bool LaurentPoly::uses(Var v) const {
  for (const auto& t : terms_)
    if (t.m.e[v] != 0) return true;
  return false;
}

int LaurentPoly::max_deg(Var v) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.m.e[v]);
  return d;
}

int LaurentPoly::min_deg(Var v) const {
  int d = std::numeric_limits<int>::max();
  for (const auto& t : terms_) d = std::min(d, t.m.e[v]);
  return d;
}

Mono LaurentPoly::min_mono() const {
  Mono m;
  if (terms_.empty()) return m;
  m = terms_[0].m;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
  return m;
}

std::map<int, LaurentPoly> LaurentPoly::coeffs_in(Var v) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : terms_) {
    Term s = t;
    s.m.e[v] = 0;
    parts[t.m.e[v]].push_back(std::move(s));
  }
  std::map<int, LaurentPoly> out;
  for (auto& [k, ts] : parts) {
    LaurentPoly p;
    p.terms_ = std::move(ts);  // removing one variable keeps grlex order within a slice only up to degree shift
    p.normalize();
    out.emplace(k, std::move(p));
  }
  return out;
}

LaurentPoly LaurentPoly::eval_var(Var v, const mpq_class& x) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    int k = s.m.e[v];
    s.m.e[v] = 0;
    if (k != 0) {
      if (sgn(x) == 0) {
        if (k < 0) throw DivisionByZero(to_string(), "0");
        continue;
      }
      mpq_class p = 1;
      mpq_class b = k > 0 ? x : mpq_class(1 / x);
      for (int i = 0; i < std::abs(k); ++i) p *= b;
      s.c *= p;
    }
    ts.push_back(std::move(s));
  }
  return from_terms(std::move(ts));
}

LaurentPoly LaurentPoly::substitute(const std::map<Var, std::pair<mpq_class, Mono>>& map) const {
  if (map.empty()) return *this;
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s{Mono{}, t.c};
    for (int i = 0; i < kNumVars; ++i) {
      int k = t.m.e[i];
      if (k == 0) continue;
      auto it = map.find(static_cast<Var>(i));
      if (it == map.end()) {
        s.m.e[i] += k;
        continue;
      }
      s.m = s.m * it->second.second.pow(k);
      const mpq_class& c = it->second.first;
      if (c != 1) {
        mpq_class p = 1;
        mpq_class b = k > 0 ? c : mpq_class(1 / c);
        for (int j = 0; j < std::abs(k); ++j) p *= b;
        s.c *= p;
      }
    }
    ts.push_back(std::move(s));
  }
  return from_terms(std::move(ts));
}

namespace {

std::string coeff_string(const mpq_class& c) {
  if (sgn(c) < 0) return "(" + c.get_str() + ")";
  return c.get_str();
}

std::string mono_string(const Mono& m) {
  std::string s;
  const auto& names = var_names();
  for (int i = 0; i < kNumVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += " + ";
    const auto& t = terms_[i];
    std::string ms = mono_string(t.m);
    if (ms.empty()) {
      s += coeff_string(t.c);
    } else if (t.c == 1) {
      s += ms;
    } else {
      s += coeff_string(t.c) + "*" + ms;
    }
  }
  return s;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json e = nlohmann::json::array();
    for (auto x : t.m.e) e.push_back(x);
    arr.push_back(nlohmann::json::array({t.c.get_str(), e}));
  }
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  std::vector<Term> ts;
  for (const auto& item : j) {
    Term t;
    t.c = mpq_class(item.at(0).get<std::string>());
    t.c.canonicalize();
    const auto& e = item.at(1);
    if (e.size() != kNumVars) throw ParseError("exponent vector of wrong length");
    for (int i = 0; i < kNumVars; ++i) t.m.e[i] = e.at(i).get<int32_t>();
    ts.push_back(std::move(t));
  }
  return from_terms(std::move(ts));
}

size_t LaurentPoly::hash() const {
  size_t h = terms_.size();
  MonoHash mh;
  std::hash<std::string> sh;
  for (const auto& t : terms_) {
    h = h * 1000003u ^ mh(t.m);
    h = h * 1000003u ^ sh(t.c.get_str());
  }
  return h;
}

LaurentPoly qint(int n, Var v) {
  if (n < 0) return -qint(-n, v);
  std::vector<LaurentPoly::Term> ts;
  for (int k = 0; k < n; ++k) ts.push_back({Mono::var(v, n - 1 - 2 * k), 1});
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace wmk
