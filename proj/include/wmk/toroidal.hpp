// Shuffle-algebra route: Fock matrix elements of the Pieri kernels E_{p,n}, H_{p,n}
// and the normalization scalars N, M built from them.
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmk/macdonald.hpp"

namespace wmk {

class UnsupportedRank : public std::runtime_error {
 public:
  explicit UnsupportedRank(const std::string& w) : std::runtime_error(w) {}
};
class NotExpressible : public std::runtime_error {
 public:
  explicit NotExpressible(const std::string& w) : std::runtime_error(w) {}
};
class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& w) : std::runtime_error(w) {}
};

// c * prod_v x_v^{e_v}
struct XTerm {
  LaurentPoly coeff;
  std::vector<std::pair<int, int>> vars;  // (variable index, exponent)
};
// (sum of terms)^power
struct Factor {
  std::vector<XTerm> terms;
  int power = 1;
};
enum class BlockKind { Pair, PerVar, Mixing, Monomial };
struct Block {
  BlockKind kind;
  std::vector<Factor> factors;
};

// An unsymmetrized representative K; the shuffle element is Sym(K).
struct ShuffleKernel {
  int ell = 3;
  std::vector<int> counts;  // k_i
  RatFunc scalar = RatFunc(1);
  std::vector<Block> blocks;

  int num_vars() const;
  int var(int color, int r) const;  // r counts from 1
  int color_of(int v) const;
  size_t count_blocks(BlockKind k) const;
};

ShuffleKernel kernel_E(int p, int n, int ell);
ShuffleKernel kernel_H(int p, int n, int ell);
ShuffleKernel kernel_monomial(int i, int k, int ell);
// F * G with F in the first variables of each color; Sym of the result is the shuffle product.
ShuffleKernel star_product(const ShuffleKernel& f, const ShuffleKernel& g);
// Copy with one factor removed (for mutation tests).
ShuffleKernel drop_factor(const ShuffleKernel& k, size_t block, size_t factor);

// Mixing term omega_{i,j}(z, w) as numerator and denominator.
std::pair<LaurentPoly, LaurentPoly> omega(int i, int j, int ell, const LaurentPoly& z, const LaurentPoly& w);

// A value for each variable: c * monomial.
struct XValue {
  mpq_class c = 1;
  Mono m;
};

// num / prod_f f^m with each f normalized to leading term 1; keeps sums free of gcd work.
struct FactoredFrac {
  LaurentPoly num;
  std::map<std::string, std::pair<LaurentPoly, int>> den;

  void divide_by(const LaurentPoly& f, int mult = 1);  // f must be nonzero
  void multiply_by(const FactoredFrac& o);
  LaurentPoly den_product() const;
  RatFunc to_ratfunc() const;
};
// Sum over a common denominator.
FactoredFrac sum(const std::vector<FactoredFrac>& parts);
// Exact limit at U = 1 from Taylor coefficients; throws IrregularPoint on a pole.
RatFunc limit_u_at_one(const FactoredFrac& f);

// Laurent expansion in eps = U - 1 of prod_f v_f^{power_f}: coefficients of eps^lo .. eps^upto.
// Empty when the product vanishes to order > upto; throws IrregularPoint if a denominator is identically 0.
struct UExpansion {
  int lo = 0;
  std::vector<FactoredFrac> coeffs;
};
UExpansion expand_at_u_one(const std::vector<std::pair<LaurentPoly, int>>& factors, int upto = 0);

// K at one point, without the scalar; nullopt when a denominator factor vanishes identically.
std::optional<FactoredFrac> evaluate_factored(const ShuffleKernel& k, const std::vector<XValue>& x);
std::optional<RatFunc> evaluate(const ShuffleKernel& k, const std::vector<XValue>& x);
// The factor values of K at a point, with their powers.
std::vector<std::pair<LaurentPoly, int>> factor_values(const ShuffleKernel& k, const std::vector<XValue>& x);
// Sym(K) at one point.
RatFunc evaluate_sym(const ShuffleKernel& k, const std::vector<XValue>& x);
// Sym(K) without the scalar, over a common denominator.
FactoredFrac evaluate_sym_factored(const ShuffleKernel& k, const std::vector<XValue>& x);
// Calls fn(y) for every color-preserving permutation y of x.
void for_each_assignment(const ShuffleKernel& k, const std::vector<XValue>& x,
                         const std::function<void(const std::vector<XValue>&)>& fn);

struct MembershipReport {
  bool ok = true;
  std::vector<std::string> violations;
};
// Pole and wheel conditions, tested along generic monomial curves in U at random rational qq, dd.
MembershipReport check_membership(const ShuffleKernel& k, unsigned seed = 1);

// tau^- with the (q, d) matching q = qq*dd, t = qq/dd; tau^+ with q = dd/qq, t = 1/(qq*dd).
enum class Rep { Minus, Plus };
enum class UpsilonMode { One, Symbolic };
enum class Deformation { ContentOrder, Primes };

// chi = q^(a-1) t^(b-1) in the matching of the representation.
Mono character_qd(const Node& n, Rep rep);

struct MatrixElement {
  RatFunc value;
  size_t summands = 0;
  size_t nonzero_summands = 0;  // counted only when requested
  bool retried = false;
};
// <mu| Psi(K) |lam> for mu containing lam; 0 unless the color counts match.
MatrixElement sym_matrix_element_detail(const ShuffleKernel& k, const Partition& lam, const Partition& mu, Rep rep,
                                        UpsilonMode mode = UpsilonMode::One,
                                        Deformation def = Deformation::ContentOrder, bool count_summands = false);
RatFunc sym_matrix_element(const ShuffleKernel& k, const Partition& lam, const Partition& mu, Rep rep,
                           UpsilonMode mode = UpsilonMode::One);

enum class Current { FMinus, EPlus };
// Coefficients of the mode z^{-k} of f_i(z) under tau^- (resp. e_i(z) under tau^+): lam + node -> value.
std::map<Partition, RatFunc> fock_single_current(const Partition& lam, int i, int k, int ell, Current c,
                                                 UpsilonMode mode = UpsilonMode::One);
// (a z - b) / (c z - d)
struct PsiFactor {
  LaurentPoly a, b, c, d;
};
std::vector<PsiFactor> fock_psi_eigenvalue(const Partition& lam, int i, int ell, Rep rep,
                                           UpsilonMode mode = UpsilonMode::One);

enum class KernelKind { E, H };
// Equal color counts and no forbidden p/(p+1) neighbours among the added nodes.
bool adjacency_allowed(const Partition& lam, const Partition& mu, int p, int ell, KernelKind kind, Rep rep);

enum class Route { NMinus, MMinus, NPlus, MPlus };
std::string route_name(Route r);
// Scalar in front of the matrix element, in the (qq, dd) variables of the route.
RatFunc pieri_constant(Route route, int n, int ell);

// N or M at (q, 1/t) in the (qq, dd) variables; 1 on cores.
RatFunc normalization(const Partition& lam, int ell, Route route, UpsilonMode mode = UpsilonMode::One);
struct NormScalars {
  Partition lambda;
  RatFunc N_minus, M_minus, N_plus, M_plus;
};
NormScalars norm_scalars(const Partition& lam, int ell);

// <P*_{t lambda}, P_lambda> in (q, t) from N-/M- (Minus) or N+/M+ of the transpose (Plus).
RatFunc norm_toroidal(const Partition& lam, int ell, Rep side = Rep::Minus);

// Coefficients of e_n[X^(p)] P_mu (kind E) or h_n[(1 - t s^-1)/(1 - q s^-1) X^(p)] P_mu (kind H)
// in the P or Q basis, from the tau^- matrix elements.
std::map<Partition, RatFunc> wreath_pieri_toroidal(const Partition& mu, int p, int n, int ell, KernelKind kind,
                                                   DualBasis basis = DualBasis::P);

// Partitions containing mu with n added nodes of each color.
std::vector<Partition> color_balanced_extensions(const Partition& mu, int n, int ell);

}  // namespace wmk
