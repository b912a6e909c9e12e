// Colored symmetric functions: the tensor power of Lambda over Q(q,t) with a
// root lattice sector, stored in the power sum basis.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "wmk/exact.hpp"
#include "wmk/partition.hpp"

namespace wmk {

class EllMismatch : public std::runtime_error {
 public:
  explicit EllMismatch(const std::string& w) : std::runtime_error(w) {}
};

enum class Basis { P, S, E, H, M };
const char* basis_name(Basis b);
Basis basis_from_name(const std::string& s);

using Expansion = std::map<Multipartition, RatFunc>;

class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(int ell);
  SymFunc(int ell, const RatFunc& c);
  // p_{mp}, or the basis element b_{mp} = prod_i b_{mp[i]}(i).
  static SymFunc power(const Multipartition& mp);
  static SymFunc basis(Basis b, const Multipartition& mp);
  // p_k(i), e_k(i), h_k(i)
  static SymFunc p(int ell, int k, int i);
  static SymFunc e(int ell, int k, int i);
  static SymFunc h(int ell, int k, int i);

  int ell() const { return ell_; }
  const std::vector<int>& sector() const { return sector_; }
  void set_sector(std::vector<int> s) { sector_ = std::move(s); }
  const Expansion& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const Multipartition& mp) const;
  void add_term(const Multipartition& mp, const RatFunc& c);

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator-() const;
  SymFunc operator*(const SymFunc& o) const;
  SymFunc scaled(const RatFunc& c) const;
  SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
  bool operator==(const SymFunc& o) const;
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  SymFunc map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;
  SymFunc substitute(const SubstMap& m) const;
  // Coordinates in another basis.
  Expansion to_basis(Basis b) const;
  static SymFunc from_basis(int ell, Basis b, const Expansion& coeffs);

  nlohmann::json to_json(Basis b = Basis::P) const;
  static SymFunc from_json(const nlohmann::json& j);

 private:
  int ell_ = 1;
  std::vector<int> sector_;
  Expansion terms_;
  void check(const SymFunc& o) const;
};

// Canonical multipartition product of power sums: union of parts per color.
Multipartition merge(const Multipartition& a, const Multipartition& b);
// z for a multipartition, as an integer.
mpz_class zee(const Multipartition& mp);
mpz_class zee(const Partition& p);

// Classical transition data for one color.
// chi(lambda, rho): irreducible character value, via Murnaghan-Nakayama.
mpz_class chi(const Partition& lambda, const Partition& rho);
// Expansion of b_lambda in power sums, for a single color.
const std::map<Partition, mpq_class>& to_power(Basis b, const Partition& lambda);
// Coefficient of b_lambda in p_rho, for a single color.
const std::map<Partition, mpq_class>& power_to(Basis b, const Partition& rho);

// Plethystic transforms as composites of color matrices.
class Pleth {
 public:
  enum class Kind { Shift, Negate, Iota, Scale, OneMinus, OneMinusInv };
  struct Factor {
    Kind kind;
    RatFunc s;  // scalar for Scale / OneMinus / OneMinusInv
    int e = 1;  // power of sigma
  };

  explicit Pleth(int ell) : ell_(ell) {}
  static Pleth identity(int ell) { return Pleth(ell); }
  static Pleth sigma(int ell, int e = 1);
  static Pleth negate(int ell);
  static Pleth iota(int ell);
  static Pleth scale(int ell, const RatFunc& s);
  // (1 - s sigma^e) and its inverse
  static Pleth one_minus(int ell, const RatFunc& s, int e);
  static Pleth one_minus_inv(int ell, const RatFunc& s, int e);

  int ell() const { return ell_; }
  // Written product: (A * B) has matrix M_A M_B.
  Pleth operator*(const Pleth& o) const;
  // m[j][i] = coefficient of p_k(j) in p_k[T X^(i)].
  std::vector<std::vector<RatFunc>> matrix(int k) const;
  SymFunc apply(const SymFunc& f) const;

 private:
  int ell_;
  std::vector<Factor> factors_;
  std::vector<std::vector<RatFunc>> factor_matrix(const Factor& f, int k) const;
};

// <p_a, p_b> = delta z_a
RatFunc hall_pairing(const SymFunc& f, const SymFunc& g);
// <f[iota X], g>
RatFunc star_pairing(const SymFunc& f, const SymFunc& g);
// <f, g[sigma (1 - t^-1 sigma^-1)(1 - q sigma^-1) X]>*, with sector delta
RatFunc pairing_prime_qt(const SymFunc& f, const SymFunc& g);
// <f, g[sigma (1 - q sigma^-1)/(1 - t sigma^-1) X]>*, with sector delta
RatFunc pairing_qt(const SymFunc& f, const SymFunc& g);

}  // namespace wmk
