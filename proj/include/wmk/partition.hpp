// Partitions, Maya diagrams, cores and quotients.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmk/exact.hpp"

namespace wmk {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;

class ChargeError : public std::runtime_error {
 public:
  explicit ChargeError(const std::string& w) : std::runtime_error(w) {}
};
class NodeOutside : public std::runtime_error {
 public:
  explicit NodeOutside(const std::string& w) : std::runtime_error(w) {}
};
class EmptyQuotient : public std::runtime_error {
 public:
  explicit EmptyQuotient(const std::string& w) : std::runtime_error(w) {}
};
class SizeMismatch : public std::runtime_error {
 public:
  explicit SizeMismatch(const std::string& w) : std::runtime_error(w) {}
};
class InvalidPartition : public std::runtime_error {
 public:
  explicit InvalidPartition(const std::string& w) : std::runtime_error(w) {}
};

int size(const Partition& p);
int size(const Multipartition& p);
bool is_partition(const Partition& p);
// Throws InvalidPartition; zeros at the end are dropped.
Partition make_partition(std::vector<int> parts);
std::string to_string(const Partition& p);
std::string to_string(const Multipartition& p);
Partition transpose(const Partition& p);
// (a_0, ..., a_{l-1}) -> (-a_{l-1}, ..., -a_0)
std::vector<int> transpose_charge(const std::vector<int>& a);

// All partitions of n in reverse lex order.
std::vector<Partition> partitions(int n);
// All l-multipartitions of total size n.
std::vector<Multipartition> multipartitions(int n, int ell);

// Node (a, b): column a, row b, both starting at 1.
struct Node {
  int a = 1, b = 1;
  bool operator==(const Node& o) const { return a == o.a && b == o.b; }
  bool operator<(const Node& o) const { return a != o.a ? a < o.a : b < o.b; }
};

int mod(int x, int ell);
inline int content(const Node& n) { return n.b - n.a; }
inline int color(const Node& n, int ell) { return mod(content(n), ell); }
// q^(a-1) t^(b-1)
LaurentPoly character(const Node& n);
bool contains(const Partition& p, const Node& n);
std::vector<Node> nodes(const Partition& p);
// Nodes of outer not in inner.
std::vector<Node> skew_nodes(const Partition& outer, const Partition& inner);
Partition add_node(const Partition& p, const Node& n);
Partition remove_node(const Partition& p, const Node& n);

struct NodeStats {
  int content, color, arm, leg, hook;
  LaurentPoly character;
};
NodeStats node_stats(const Partition& p, const Node& n, int ell);
int arm(const Partition& p, const Node& n);
int leg(const Partition& p, const Node& n);

// Addable and removable nodes of color i, in increasing content.
std::vector<Node> addable(const Partition& p, int i, int ell);
std::vector<Node> removable(const Partition& p, int i, int ell);
std::vector<Node> addable(const Partition& p);
std::vector<Node> removable(const Partition& p);
// Number of nodes of color i.
int color_count(const Partition& p, int i, int ell);

// Maya diagram with index increasing to the left. Cells below `offset` are
// black, cells at or above offset + cells.size() are white.
class MayaDiagram {
 public:
  MayaDiagram() = default;
  static MayaDiagram from_black(const std::vector<int>& finite_black, int sea_below);
  bool black(int n) const;
  int charge() const;
  int lo() const { return offset_; }
  int hi() const { return offset_ + static_cast<int>(cells_.size()); }
  void set(int n, bool b);
  // ASCII picture of the window [from, to], highest index first.
  std::string dump(int from, int to) const;
  bool operator==(const MayaDiagram& o) const { return offset_ == o.offset_ && cells_ == o.cells_; }

 private:
  int offset_ = 0;
  std::vector<char> cells_;
  void trim();
};

MayaDiagram young_to_maya(const Partition& p);
// Throws ChargeError for nonzero charge.
Partition maya_to_young(const MayaDiagram& m);

struct CoreQuotient {
  int ell = 1;
  std::vector<int> charges;
  Multipartition quotient;
  Partition core;
  bool operator==(const CoreQuotient& o) const {
    return ell == o.ell && charges == o.charges && quotient == o.quotient && core == o.core;
  }
};
CoreQuotient core_quotient(const Partition& p, int ell);
// Uses charges and quotient; core is recomputed from the charges.
Partition from_core_quotient(const CoreQuotient& cq);
Partition from_core_quotient(const Partition& core, const Multipartition& quot, int ell);
Partition core_from_charges(const std::vector<int>& charges);
nlohmann::json to_json(const CoreQuotient& cq);
bool is_core(const Partition& p, int ell);

// A column or row of a quotient component, with its bead position in m(lambda).
struct QuotLine {
  int component;
  int index;   // column index a or row index b inside the component
  int length;
  long position;
};
// Columns in left-to-right order and rows in right-to-left order.
std::vector<QuotLine> column_order(const Partition& p, int ell);
std::vector<QuotLine> row_order(const Partition& p, int ell);

struct Peel {
  Partition rest;
  int p;
  int n;
  std::vector<Node> removed;
};
// Remove the final quotient column (resp. row); throws EmptyQuotient.
Peel peel_last_column(const Partition& p, int ell);
Peel peel_last_row(const Partition& p, int ell);

// Dominance; throws SizeMismatch on different sizes.
bool dominates(const Partition& lam, const Partition& mu);
enum class Order { Equal, Greater, Less, Incomparable };
struct Comparison {
  Order dominance;
  bool same_core;
};
Comparison compare(const Partition& lam, const Partition& mu, int ell);
// lam >=_ell mu: dominance plus equal cores.
bool geq_ell(const Partition& lam, const Partition& mu, int ell);

}  // namespace wmk
