// Wreath Macdonald polynomials from their triangularity conditions.
#pragma once

#include <map>
#include <memory>
#include <stdexcept>

#include "wmk/symfun.hpp"

namespace wmk {

class NonUniqueSolution : public std::runtime_error {
 public:
  explicit NonUniqueSolution(const std::string& w) : std::runtime_error(w) {}
};
class NoSolution : public std::runtime_error {
 public:
  explicit NoSolution(const std::string& w) : std::runtime_error(w) {}
};
class ZeroLeadingCoefficient : public std::runtime_error {
 public:
  explicit ZeroLeadingCoefficient(const std::string& w) : std::runtime_error(w) {}
};
class BasisIncomplete : public std::runtime_error {
 public:
  explicit BasisIncomplete(const std::string& w) : std::runtime_error(w) {}
};

struct MacdonaldEntry {
  Partition lambda;
  Multipartition quot;
  SymFunc H, Hstar, P, Q, Pstar, Qstar, Ptilde, Qtilde;
  // Dimension of the solution space before normalization (always 1).
  size_t solution_dim = 0;
};

struct MacdonaldFamily {
  int ell = 1;
  Partition core;
  std::vector<int> charges;
  int n = 0;
  std::vector<Partition> members;  // indexed like multipartitions(n, ell)
  std::map<Partition, MacdonaldEntry> table;

  const MacdonaldEntry& at(const Partition& lambda) const;
};

// The same-core family with quotient size n, in multipartitions(n, ell) order.
std::vector<Partition> family_members(const Partition& core, int n, int ell);

// H only.
MacdonaldFamily compute_H(const Partition& core, int n, int ell);
// Fills in all variants.
void derive_variants(MacdonaldFamily& fam);
// Cached compute_H + derive_variants.
const MacdonaldFamily& macdonald_family(const Partition& core, int n, int ell);
const MacdonaldEntry& macdonald(const Partition& lambda, int ell);

// Coefficient of s_{quot} in f.
RatFunc schur_coeff(const SymFunc& f, const Multipartition& quot);

// Plethysms used by the definitions.
SymFunc t_to_inverse(const SymFunc& f);  // t -> 1/t in the coefficients
SymFunc swap_qt(const SymFunc& f);       // (q, t) -> (t, q)
SymFunc invert_swap_qt(const SymFunc& f);  // (q, t) -> (1/t, 1/q)

RatFunc norm_oracle(const Partition& lambda, int ell);
RatFunc conjectured_norm(const Partition& lambda, int ell);
// Norm formula for ell = 1 over all nodes.
RatFunc classical_norm(const Partition& lambda);

enum class PieriKind { E, G };
// Evaluated from the classical product formulas; ell = 1 only.
std::map<Partition, RatFunc> classical_pieri(const Partition& mu, int n, PieriKind kind);

enum class DualBasis { P, Q };
// Expansion of e_n[X^(p)] P_mu in the P basis.
std::map<Partition, RatFunc> wreath_pieri_oracle(const Partition& mu, int p, int n, int ell);
// Expansion of h_n[(1 - t s^-1)/(1 - q s^-1) X^(p)] P_mu in the chosen basis.
std::map<Partition, RatFunc> wreath_dual_pieri_oracle(const Partition& mu, int p, int n, int ell,
                                                      DualBasis basis = DualBasis::P);

// Expand f in the given family members; throws BasisIncomplete if f is outside their span.
std::map<Partition, RatFunc> expand_in(const SymFunc& f, const std::vector<Partition>& members,
                                       const std::vector<const SymFunc*>& vectors);

}  // namespace wmk
