#include "wmk/symfun.hpp"

namespace wmk {

namespace {

using Mat = std::vector<std::vector<RatFunc>>;

Mat zero_mat(int n) { return Mat(n, std::vector<RatFunc>(n)); }

Mat ident(int n) {
  Mat m = zero_mat(n);
  for (int i = 0; i < n; ++i) m[i][i] = RatFunc(1);
  return m;
}

Mat shift(int n, int e) {
  Mat m = zero_mat(n);
  for (int i = 0; i < n; ++i) m[mod(i + e, n)][i] = RatFunc(1);
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat r = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

Pleth Pleth::sigma(int ell, int e) {
  Pleth p(ell);
  p.factors_.push_back({Kind::Shift, RatFunc(1), e});
  return p;
}

Pleth Pleth::negate(int ell) {
  Pleth p(ell);
  p.factors_.push_back({Kind::Negate, RatFunc(1), 0});
  return p;
}

Pleth Pleth::iota(int ell) {
  Pleth p(ell);
  p.factors_.push_back({Kind::Iota, RatFunc(1), 0});
  return p;
}

Pleth Pleth::scale(int ell, const RatFunc& s) {
  Pleth p(ell);
  p.factors_.push_back({Kind::Scale, s, 0});
  return p;
}

Pleth Pleth::one_minus(int ell, const RatFunc& s, int e) {
  Pleth p(ell);
  p.factors_.push_back({Kind::OneMinus, s, e});
  return p;
}

Pleth Pleth::one_minus_inv(int ell, const RatFunc& s, int e) {
  Pleth p(ell);
  p.factors_.push_back({Kind::OneMinusInv, s, e});
  return p;
}

Pleth Pleth::operator*(const Pleth& o) const {
  if (ell_ != o.ell_) throw EllMismatch("plethysm of different ell");
  Pleth r = *this;
  r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
  return r;
}

std::vector<std::vector<RatFunc>> Pleth::factor_matrix(const Factor& f, int k) const {
  int n = ell_;
  switch (f.kind) {
    case Kind::Shift: return shift(n, f.e);
    case Kind::Negate: {
      Mat m = ident(n);
      for (int i = 0; i < n; ++i) m[i][i] = RatFunc(-1);
      return m;
    }
    case Kind::Iota: {
      Mat m = zero_mat(n);
      for (int i = 0; i < n; ++i) m[mod(-i, n)][i] = RatFunc(1);
      return m;
    }
    case Kind::Scale: {
      Mat m = zero_mat(n);
      RatFunc sk = f.s.pow(k);
      for (int i = 0; i < n; ++i) m[i][i] = sk;
      return m;
    }
    case Kind::OneMinus: {
      Mat m = ident(n);
      RatFunc sk = f.s.pow(k);
      for (int i = 0; i < n; ++i) m[mod(i + f.e, n)][i] -= sk;
      return m;
    }
    case Kind::OneMinusInv: {
      Mat m = zero_mat(n);
      RatFunc sk = f.s.pow(k);
      RatFunc denom = RatFunc(1) - sk.pow(n);
      RatFunc w(1);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[mod(i + f.e * j, n)][i] += w / denom;
        w *= sk;
      }
      return m;
    }
  }
  return ident(n);
}

std::vector<std::vector<RatFunc>> Pleth::matrix(int k) const {
  Mat m = ident(ell_);
  for (const auto& f : factors_) m = mul(m, factor_matrix(f, k));
  return m;
}

SymFunc Pleth::apply(const SymFunc& f) const {
  if (f.ell() != ell_) throw EllMismatch("plethysm of different ell");
  std::map<int, Mat> mats;
  std::map<std::pair<int, int>, SymFunc> images;
  auto image = [&](int k, int i) -> const SymFunc& {
    auto key = std::make_pair(k, i);
    auto it = images.find(key);
    if (it != images.end()) return it->second;
    if (!mats.count(k)) mats[k] = matrix(k);
    SymFunc g(ell_);
    for (int j = 0; j < ell_; ++j)
      if (!mats[k][j][i].is_zero()) g += SymFunc::p(ell_, k, j).scaled(mats[k][j][i]);
    return images.emplace(key, g).first->second;
  };
  SymFunc out(ell_);
  for (const auto& [mp, c] : f.terms()) {
    SymFunc term(ell_, c);
    for (int i = 0; i < ell_; ++i)
      for (int k : mp[i]) term = term * image(k, i);
    out += term;
  }
  out.set_sector(f.sector());
  return out;
}

RatFunc hall_pairing(const SymFunc& f, const SymFunc& g) {
  if (f.ell() != g.ell()) throw EllMismatch("pairing of different ell");
  RatFunc r;
  const auto& small = f.terms().size() <= g.terms().size() ? f.terms() : g.terms();
  const auto& big = f.terms().size() <= g.terms().size() ? g.terms() : f.terms();
  for (const auto& [mp, c] : small) {
    auto it = big.find(mp);
    if (it != big.end()) r += c * it->second * RatFunc(mpq_class(zee(mp)));
  }
  return r;
}

RatFunc star_pairing(const SymFunc& f, const SymFunc& g) {
  return hall_pairing(Pleth::iota(f.ell()).apply(f), g);
}

namespace {

bool sectors_match(const SymFunc& f, const SymFunc& g) {
  return f.sector() == transpose_charge(g.sector());
}

}  // namespace

RatFunc pairing_prime_qt(const SymFunc& f, const SymFunc& g) {
  if (!sectors_match(f, g)) return RatFunc();
  int l = f.ell();
  Pleth t = Pleth::sigma(l, 1) * Pleth::one_minus(l, RatFunc::var(T, -1), -1) *
            Pleth::one_minus(l, RatFunc::var(Q), -1);
  return star_pairing(f, t.apply(g));
}

RatFunc pairing_qt(const SymFunc& f, const SymFunc& g) {
  if (!sectors_match(f, g)) return RatFunc();
  int l = f.ell();
  Pleth t = Pleth::sigma(l, 1) * Pleth::one_minus(l, RatFunc::var(Q), -1) *
            Pleth::one_minus_inv(l, RatFunc::var(T), -1);
  return star_pairing(f, t.apply(g));
}

}  // namespace wmk
