#include <algorithm>

#include "wmk/symfun.hpp"

namespace wmk {

Multipartition merge(const Multipartition& a, const Multipartition& b) {
  Multipartition r = a;
  for (size_t i = 0; i < r.size(); ++i) {
    r[i].insert(r[i].end(), b[i].begin(), b[i].end());
    std::sort(r[i].rbegin(), r[i].rend());
  }
  return r;
}

SymFunc::SymFunc(int ell) : ell_(ell), sector_(ell, 0) {}

SymFunc::SymFunc(int ell, const RatFunc& c) : SymFunc(ell) {
  if (!c.is_zero()) terms_[Multipartition(ell)] = c;
}

SymFunc SymFunc::power(const Multipartition& mp) {
  SymFunc f(static_cast<int>(mp.size()));
  Multipartition m = mp;
  for (auto& p : m) std::sort(p.rbegin(), p.rend());
  f.terms_[m] = RatFunc(1);
  return f;
}

SymFunc SymFunc::basis(Basis b, const Multipartition& mp) {
  int ell = static_cast<int>(mp.size());
  SymFunc f(ell, RatFunc(1));
  for (int i = 0; i < ell; ++i) {
    SymFunc g(ell);
    for (const auto& [rho, c] : to_power(b, mp[i])) {
      Multipartition m(ell);
      m[i] = rho;
      g.terms_[m] = RatFunc(c);
    }
    f = f * g;
  }
  return f;
}

SymFunc SymFunc::p(int ell, int k, int i) {
  Multipartition m(ell);
  m[mod(i, ell)] = {k};
  return power(m);
}

SymFunc SymFunc::e(int ell, int k, int i) {
  Multipartition m(ell);
  m[mod(i, ell)] = Partition(k, 1);  // e_{(1^k)} = e_k under the transposed indexing
  return basis(Basis::E, m);
}

SymFunc SymFunc::h(int ell, int k, int i) {
  Multipartition m(ell);
  if (k > 0) m[mod(i, ell)] = {k};
  return basis(Basis::H, m);
}

RatFunc SymFunc::coeff(const Multipartition& mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? RatFunc() : it->second;
}

void SymFunc::add_term(const Multipartition& mp, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mp);
  if (it == terms_.end()) {
    terms_.emplace(mp, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void SymFunc::check(const SymFunc& o) const {
  if (ell_ != o.ell_) throw EllMismatch("ell " + std::to_string(ell_) + " vs " + std::to_string(o.ell_));
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  check(o);
  SymFunc r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
  check(o);
  SymFunc r(ell_);
  for (int i = 0; i < ell_; ++i) r.sector_[i] = sector_[i] + o.sector_[i];
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(merge(ma, mb), ca * cb);
  return r;
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
  if (c.is_zero()) {
    SymFunc z(ell_);
    z.sector_ = sector_;
    return z;
  }
  SymFunc r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (ell_ != o.ell_ || terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && sector_ != o.sector_) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

SymFunc SymFunc::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
  SymFunc r(ell_);
  r.sector_ = sector_;
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

SymFunc SymFunc::substitute(const SubstMap& m) const {
  return map_coeffs([&](const RatFunc& c) { return c.substitute(m); });
}

Expansion SymFunc::to_basis(Basis b) const {
  if (b == Basis::P) return terms_;
  Expansion out;
  for (const auto& [rho, c] : terms_) {
    // Cartesian product of the per-color rows.
    std::vector<std::pair<Multipartition, mpq_class>> acc{{Multipartition(), mpq_class(1)}};
    for (int i = 0; i < ell_; ++i) {
      std::vector<std::pair<Multipartition, mpq_class>> next;
      for (const auto& [lam, x] : power_to(b, rho[i]))
        for (const auto& [mp, y] : acc) {
          Multipartition m = mp;
          m.push_back(lam);
          next.push_back({m, x * y});
        }
      acc = std::move(next);
    }
    for (const auto& [mp, x] : acc) {
      auto it = out.find(mp);
      RatFunc v = c * RatFunc(x);
      if (it == out.end()) out.emplace(mp, v);
      else it->second += v;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SymFunc SymFunc::from_basis(int ell, Basis b, const Expansion& coeffs) {
  SymFunc f(ell);
  for (const auto& [mp, c] : coeffs) f += basis(b, mp).scaled(c);
  return f;
}

nlohmann::json SymFunc::to_json(Basis b) const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mp, c] : to_basis(b)) terms.push_back({{"mpart", mp}, {"coeff", c.to_json()}});
  return {{"ell", ell_}, {"sector", sector_}, {"basis", basis_name(b)}, {"terms", terms}};
}

SymFunc SymFunc::from_json(const nlohmann::json& j) {
  int ell = j.at("ell").get<int>();
  Basis b = basis_from_name(j.value("basis", std::string("p")));
  Expansion coeffs;
  for (const auto& t : j.at("terms")) coeffs[t.at("mpart").get<Multipartition>()] = RatFunc::from_json(t.at("coeff"));
  SymFunc f = from_basis(ell, b, coeffs);
  if (j.contains("sector")) f.sector_ = j.at("sector").get<std::vector<int>>();
  return f;
}

}  // namespace wmk
