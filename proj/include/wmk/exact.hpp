// Sparse exact Laurent polynomials and rational functions over Q.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace wmk {

// Fixed variable order. The term order is graded lex over this list.
enum Var : int { QQ = 0, DD = 1, UPS = 2, U = 3, Q = 4, T = 5 };
constexpr int kNumVars = 6;

// ASCII names used by the string and JSON forms.
const std::array<std::string, kNumVars>& var_names();
std::optional<Var> var_from_name(const std::string& name);

struct Mono {
  std::array<int32_t, kNumVars> e{};

  int64_t degree() const;
  bool is_one() const;
  Mono operator*(const Mono& o) const;
  Mono operator/(const Mono& o) const;
  Mono pow(int k) const;
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
  static Mono var(Var v, int k = 1);
};

// Graded lex: true when a is strictly larger than b.
bool grlex_greater(const Mono& a, const Mono& b);

struct MonoHash {
  size_t operator()(const Mono& m) const;
};

class LaurentPoly {
 public:
  struct Term {
    Mono m;
    mpq_class c;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT
  LaurentPoly(const mpq_class& c);  // NOLINT
  static LaurentPoly monomial(const Mono& m, const mpq_class& c = 1);
  static LaurentPoly var(Var v, int k = 1);
  // Terms need not be sorted or merged.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }
  mpq_class constant_term() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly times_mono(const Mono& m, const mpq_class& c = 1) const;
  LaurentPoly pow(unsigned k) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact quotient in the Laurent ring, or nullopt when b does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& b) const;

  bool uses(Var v) const;
  int max_deg(Var v) const;
  int min_deg(Var v) const;
  // Componentwise minimum exponent over all terms.
  Mono min_mono() const;
  // Coefficients with respect to v: exponent -> coefficient free of v.
  std::map<int, LaurentPoly> coeffs_in(Var v) const;
  LaurentPoly eval_var(Var v, const mpq_class& x) const;

  // Monomial substitution: each mapped variable goes to c * monomial.
  LaurentPoly substitute(const std::map<Var, std::pair<mpq_class, Mono>>& map) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);
  size_t hash() const;

 private:
  std::vector<Term> terms_;  // strictly decreasing in grlex, nonzero coefficients
  void normalize();
  friend LaurentPoly merge_sorted(std::vector<std::vector<Term>>& rows);
};

// Quantum integer [n] in the variable v: (v^n - v^-n)/(v - v^-1).
LaurentPoly qint(int n, Var v = QQ);

// Laurent gcd: monomials are units. Result is an integer primitive
// polynomial with no monomial factor and positive leading coefficient.
// gcd(f, 0) is the normalized associate of f.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Split p = c * m * r with c rational, m a monomial and r integer primitive,
// free of monomial factors, with positive leading coefficient.
struct UnitSplit {
  mpq_class c;
  Mono m;
  LaurentPoly r;
};
UnitSplit unit_split(const LaurentPoly& p);

class DivisionByZero : public std::runtime_error {
 public:
  DivisionByZero(const std::string& lhs, const std::string& rhs);
  std::string lhs, rhs;
};

class IrregularPoint : public std::runtime_error {
 public:
  explicit IrregularPoint(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  // Canonicalizes; throws DivisionByZero on a zero denominator.
  static RatFunc make(const LaurentPoly& num, const LaurentPoly& den);
  static RatFunc var(Var v, int k = 1) { return RatFunc(LaurentPoly::var(v, k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  // Exact test ad - bc = 0.
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // Structural equality of canonical forms.
  bool same_form(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }
  RatFunc substitute(const std::map<Var, std::pair<mpq_class, Mono>>& map) const;

  std::string to_string() const;
  std::string to_latex() const;
  nlohmann::json to_json() const;
  static RatFunc from_json(const nlohmann::json& j);
  size_t hash() const;

 private:
  LaurentPoly num_, den_;
  static RatFunc raw(LaurentPoly num, LaurentPoly den);
};

enum class Op { Add, Sub, Mul, Div };
RatFunc arith(const RatFunc& a, const RatFunc& b, Op op);

RatFunc canonical(const RatFunc& f);

// Substitution map shorthands.
using SubstMap = std::map<Var, std::pair<mpq_class, Mono>>;
SubstMap make_subst(std::initializer_list<std::pair<Var, Mono>> items);

// Parameter matchings between (q, t) and (qq, dd).
enum class Matching { Minus, Plus };
// q = qq*dd, t = qq/dd (Minus); q = dd/qq, t = 1/(qq*dd) (Plus).
SubstMap matching_map(Matching m);
// Inverse of the matching; nullopt when f is not in Q(q,t).
std::optional<RatFunc> to_qt(const RatFunc& f, Matching m);

// Cancel powers of (v - 1), then set v = 1. Throws IrregularPoint on a pole.
RatFunc limit_at_one(const RatFunc& f, Var v);

// Expression parser for the ASCII form, e.g. "(1-q^2*t)/(1-q*t^2)".
RatFunc parse_ratfunc(const std::string& s);
LaurentPoly parse_poly(const std::string& s);

}  // namespace wmk
