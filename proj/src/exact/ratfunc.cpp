#include "wmk/exact.hpp"

namespace wmk {

DivisionByZero::DivisionByZero(const std::string& l, const std::string& r)
    : std::runtime_error("division by zero: (" + l + ") / (" + r + ")"), lhs(l), rhs(r) {}

namespace {

LaurentPoly div_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division in rational function arithmetic");
  return *q;
}

}  // namespace

RatFunc RatFunc::raw(LaurentPoly num, LaurentPoly den) {
  RatFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFunc RatFunc::make(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero(num.to_string(), "0");
  if (num.is_zero()) return RatFunc();
  LaurentPoly n = num, d = den;
  if (!d.is_monomial()) {
    LaurentPoly g = gcd(n, d);
    if (!g.is_constant()) {
      n = div_or_throw(n, g);
      d = div_or_throw(d, g);
    }
  }
  UnitSplit s = unit_split(d);
  return raw(n.times_mono(Mono{} / s.m, 1 / s.c), s.r);
}

bool RatFunc::is_one() const { return den_.is_constant() && num_ == den_; }

RatFunc arith(const RatFunc& a, const RatFunc& b, Op op) {
  switch (op) {
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::Mul: return a * b;
    case Op::Div: return a / b;
  }
  return RatFunc();
}

RatFunc canonical(const RatFunc& f) { return RatFunc::make(f.num(), f.den()); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_constant() && o.den_.is_constant()) return raw(num_ + o.num_, LaurentPoly(1));
  if (den_ == o.den_) {
    LaurentPoly n = num_ + o.num_;
    if (n.is_zero()) return RatFunc();
    return make(n, den_);
  }
  if (o.den_.is_constant()) return raw(num_ + o.num_ * den_, den_);
  if (den_.is_constant()) return raw(num_ * o.den_ + o.num_, o.den_);
  LaurentPoly g = gcd(den_, o.den_);
  if (g.is_constant()) return raw(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  LaurentPoly b1 = div_or_throw(den_, g), d1 = div_or_throw(o.den_, g);
  LaurentPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return RatFunc();
  LaurentPoly g2 = gcd(n, g);
  if (!g2.is_constant()) {
    n = div_or_throw(n, g2);
    g = div_or_throw(g, g2);
  }
  return raw(n, b1 * d1 * g);
}

RatFunc RatFunc::operator-() const { return raw(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) return raw(num_ * o.num_, LaurentPoly(1));
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant() && !a.is_monomial()) {
    LaurentPoly g = gcd(a, d);
    if (!g.is_constant()) {
      a = div_or_throw(a, g);
      d = div_or_throw(d, g);
    }
  }
  if (!b.is_constant() && !c.is_monomial()) {
    LaurentPoly g = gcd(c, b);
    if (!g.is_constant()) {
      c = div_or_throw(c, g);
      b = div_or_throw(b, g);
    }
  }
  return raw(a * c, b * d);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("1", "0");
  UnitSplit s = unit_split(num_);
  // num = c m r, so den/num = (den / (c m)) / r.
  return raw(den_.times_mono(Mono{} / s.m, 1 / s.c), s.r);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero(to_string(), "0");
  return *this * o.inverse();
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return raw(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFunc RatFunc::substitute(const SubstMap& map) const {
  return make(num_.substitute(map), den_.substitute(map));
}

std::string RatFunc::to_string() const {
  auto wrap = [](const LaurentPoly& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); };
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

std::string latex_poly(const LaurentPoly& p) {
  static const std::array<std::string, kNumVars> names = {"\\mathfrak{q}", "\\mathfrak{d}", "\\upsilon",
                                                          "u",            "q",            "t"};
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string ms;
    for (int i = 0; i < kNumVars; ++i) {
      int k = t.m.e[i];
      if (k == 0) continue;
      ms += names[i];
      if (k != 1) ms += "^{" + std::to_string(k) + "}";
    }
    std::string cs = c.get_den() == 1 ? c.get_num().get_str()
                                      : "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    if (ms.empty()) {
      s += cs;
    } else {
      if (c != 1) s += cs;
      s += ms;
    }
  }
  return s;
}

}  // namespace

std::string RatFunc::to_latex() const {
  if (den_.is_constant() && den_.constant_term() == 1) return latex_poly(num_);
  return "\\frac{" + latex_poly(num_) + "}{" + latex_poly(den_) + "}";
}

nlohmann::json RatFunc::to_json() const {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& n : var_names()) vars.push_back(n);
  return {{"num", num_.to_json()}, {"den", den_.to_json()}, {"vars", vars}};
}

RatFunc RatFunc::from_json(const nlohmann::json& j) {
  if (j.contains("vars")) {
    const auto& names = var_names();
    const auto& vars = j.at("vars");
    if (vars.size() != kNumVars) throw ParseError("unexpected variable list");
    for (int i = 0; i < kNumVars; ++i)
      if (vars.at(i).get<std::string>() != names[i]) throw ParseError("unexpected variable order");
  }
  return make(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
}

size_t RatFunc::hash() const { return num_.hash() * 31u + den_.hash(); }

SubstMap make_subst(std::initializer_list<std::pair<Var, Mono>> items) {
  SubstMap m;
  for (const auto& [v, mono] : items) m[v] = {mpq_class(1), mono};
  return m;
}

SubstMap matching_map(Matching m) {
  Mono qq = Mono::var(QQ), dd = Mono::var(DD);
  if (m == Matching::Minus) return make_subst({{Q, qq * dd}, {T, qq / dd}});
  return make_subst({{Q, dd / qq}, {T, Mono{} / (qq * dd)}});
}

namespace {

// Parity of a + b for the (qq, dd) exponents; -1 when mixed.
int poly_parity(const LaurentPoly& p) {
  int par = -1;
  for (const auto& t : p.terms()) {
    int x = ((t.m.e[QQ] + t.m.e[DD]) % 2 + 2) % 2;
    if (par < 0) par = x;
    else if (par != x) return -2;
  }
  return par;
}

std::optional<LaurentPoly> poly_to_qt(const LaurentPoly& p, Matching m) {
  std::vector<LaurentPoly::Term> ts;
  for (const auto& t : p.terms()) {
    int a = t.m.e[QQ], b = t.m.e[DD];
    if ((a + b) % 2 != 0) return std::nullopt;
    LaurentPoly::Term s = t;
    s.m.e[QQ] = 0;
    s.m.e[DD] = 0;
    if (m == Matching::Minus) {
      s.m.e[Q] += (a + b) / 2;
      s.m.e[T] += (a - b) / 2;
    } else {
      s.m.e[Q] += (b - a) / 2;
      s.m.e[T] += (-a - b) / 2;
    }
    ts.push_back(std::move(s));
  }
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace

std::optional<RatFunc> to_qt(const RatFunc& f, Matching m) {
  if (f.uses(Q) || f.uses(T)) return std::nullopt;
  LaurentPoly num = f.num(), den = f.den();
  int pn = poly_parity(num), pd = poly_parity(den);
  if (num.is_zero()) return RatFunc();
  if (pn < 0 || pd < 0 || pn != pd) return std::nullopt;
  if (pn == 1) {
    num = num.times_mono(Mono::var(QQ, -1));
    den = den.times_mono(Mono::var(QQ, -1));
  }
  auto n = poly_to_qt(num, m), d = poly_to_qt(den, m);
  if (!n || !d) return std::nullopt;
  return RatFunc::make(*n, *d);
}

RatFunc limit_at_one(const RatFunc& f, Var v) {
  LaurentPoly num = f.num(), den = f.den();
  LaurentPoly vm1 = LaurentPoly::var(v) - LaurentPoly(1);
  while (den.eval_var(v, 1).is_zero()) {
    if (!num.eval_var(v, 1).is_zero())
      throw IrregularPoint("pole at " + var_names()[v] + " = 1 in " + f.to_string());
    num = div_or_throw(num, vm1);
    den = div_or_throw(den, vm1);
  }
  return RatFunc::make(num.eval_var(v, 1), den.eval_var(v, 1));
}

}  // namespace wmk
