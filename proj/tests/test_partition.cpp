#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "wmk/partition.hpp"

using namespace wmk;

namespace {

// Independent core: repeatedly strip rim hooks of length ell, found by hook length.
Partition strip_core(Partition p, int ell) {
  while (true) {
    bool found = false;
    for (const auto& n : nodes(p)) {
      int l = leg(p, n);
      if (arm(p, n) + l + 1 != ell) continue;
      Partition r = p;
      for (int row = n.b; row < n.b + l; ++row) r[row - 1] = p[row] - 1;
      r[n.b + l - 1] = n.a - 1;
      while (!r.empty() && r.back() == 0) r.pop_back();
      p = r;
      found = true;
      break;
    }
    if (!found) return p;
  }
}

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : partitions(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("Maya diagram of (5,4,1)") {
  MayaDiagram m = young_to_maya({5, 4, 1});
  for (int n : {2, 0, -1, -2, -4, -6, -7, -10}) CHECK(m.black(n));
  for (int n : {3, 1, -3, -5, 4, 5, 9}) CHECK_FALSE(m.black(n));
  CHECK(m.charge() == 0);
  CHECK(young_to_maya({}) == MayaDiagram::from_black({}, 0));
}

TEST_CASE("Maya round trip and charge error") {
  for (const auto& p : all_up_to(8)) {
    MayaDiagram m = young_to_maya(p);
    CHECK(m.charge() == 0);
    CHECK(maya_to_young(m) == p);
  }
  CHECK_THROWS_AS(maya_to_young(MayaDiagram::from_black({}, 1)), ChargeError);
  CHECK(MayaDiagram::from_black({}, 2).charge() == -2);
  CHECK(MayaDiagram::from_black({}, -1).charge() == 1);
}

TEST_CASE("core and quotient examples") {
  CoreQuotient a = core_quotient({4, 3, 1}, 3);
  CHECK(a.core == Partition{2});
  CHECK(a.quotient == Multipartition{{}, {}, {2}});
  CHECK(a.charges == std::vector<int>{-1, 1, 0});
  CoreQuotient b = core_quotient({5, 4, 1}, 3);
  CHECK(b.quotient == Multipartition{{1}, {1}, {}});
  CHECK(b.charges == std::vector<int>{0, 1, -1});
  CHECK(size(b.core) == 4);
  CHECK(b.core == strip_core({5, 4, 1}, 3));
  CHECK(b.core == Partition{2, 1, 1});
  CHECK(to_json(a).dump() == R"({"charges":[-1,1,0],"core":[2],"ell":3,"quotient":[[],[],[2]]})");
}

TEST_CASE("core agrees with rim hook stripping") {
  for (int ell = 1; ell <= 5; ++ell)
    for (const auto& p : all_up_to(9)) {
      CoreQuotient cq = core_quotient(p, ell);
      CHECK(cq.core == strip_core(p, ell));
      CHECK(size(cq.core) + ell * size(cq.quotient) == size(p));
      int s = 0;
      for (int c : cq.charges) s += c;
      CHECK(s == 0);
    }
}

TEST_CASE("core quotient bijection") {
  for (int ell = 1; ell <= 5; ++ell) {
    std::set<std::pair<Partition, Multipartition>> seen;
    for (const auto& p : all_up_to(10)) {
      CoreQuotient cq = core_quotient(p, ell);
      REQUIRE(from_core_quotient(cq) == p);
      seen.insert({cq.core, cq.quotient});
    }
    // reverse composition: every (core, quotient) pair within size 10 is hit
    for (const auto& core : all_up_to(10)) {
      if (!is_core(core, ell)) continue;
      for (int w = 0; size(core) + ell * w <= 10; ++w)
        for (const auto& quot : multipartitions(w, ell)) {
          Partition p = from_core_quotient(core, quot, ell);
          CoreQuotient back = core_quotient(p, ell);
          CHECK(back.core == core);
          CHECK(back.quotient == quot);
          CHECK(seen.count({core, quot}) == 1);
        }
    }
  }
}

TEST_CASE("ell = 1 degenerates") {
  for (const auto& p : all_up_to(7)) {
    CoreQuotient cq = core_quotient(p, 1);
    CHECK(cq.core.empty());
    CHECK(cq.quotient == Multipartition{p});
    auto cols = column_order(p, 1);
    for (size_t k = 0; k < cols.size(); ++k) CHECK(cols[k].index == static_cast<int>(k) + 1);
    auto rows = row_order(p, 1);
    for (size_t k = 0; k < rows.size(); ++k) CHECK(rows[k].index == static_cast<int>(k) + 1);
  }
}

TEST_CASE("node statistics") {
  Partition p{4, 3, 1};
  NodeStats s = node_stats(p, {2, 2}, 3);
  CHECK(s.character == parse_poly("q*t"));
  CHECK(node_stats(p, {1, 1}, 3).hook == 6);
  CHECK(node_stats(p, {3, 1}, 3).hook == 3);
  int div3 = 0;
  for (const auto& n : nodes(p))
    if (node_stats(p, n, 3).hook % 3 == 0) ++div3;
  CHECK(div3 == 2);
  NodeStats one = node_stats({1}, {1, 1}, 1);
  CHECK(one.arm == 0);
  CHECK(one.leg == 0);
  CHECK(one.hook == 1);
  CHECK(one.character == LaurentPoly(1));
  CHECK_THROWS_AS(node_stats(p, {5, 1}, 3), NodeOutside);
  CHECK(character({5, 1}) == parse_poly("q^4"));
}

TEST_CASE("addable and removable nodes") {
  CHECK(addable({}, 0, 3) == std::vector<Node>{{1, 1}});
  CHECK(removable({}, 0, 3).empty());
  Partition p{2, 2, 1};
  CHECK(removable(p, 0, 3) == std::vector<Node>{{2, 2}});
  CHECK(removable(p, 2, 3) == std::vector<Node>{{1, 3}});
  CHECK(removable(p, 1, 3).empty());
  CHECK(color_count({4, 3, 1}, 2, 3) == 3);
  for (int ell = 2; ell <= 4; ++ell)
    for (const auto& q : all_up_to(7))
      for (const auto& n : addable(q)) {
        Partition r = add_node(q, n);
        for (int i = 0; i < ell; ++i)
          CHECK(color_count(r, i, ell) == color_count(q, i, ell) + (i == color(n, ell) ? 1 : 0));
        // Maya flip at the node content
        MayaDiagram mq = young_to_maya(q), mr = young_to_maya(r);
        CHECK(!mq.black(content(n)));
        CHECK(mq.black(content(n) - 1));
        CHECK(mr.black(content(n)));
        CHECK(!mr.black(content(n) - 1));
      }
}

TEST_CASE("column and row orders") {
  auto cols = column_order({5, 4, 1}, 3);
  REQUIRE(cols.size() == 2);
  CHECK(cols[0].component == 0);
  CHECK(cols[1].component == 1);
  CHECK(column_order({2}, 3).empty());
  CHECK(row_order({2}, 3).empty());
  auto c2 = column_order({4, 3, 1}, 3);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].component == 2);
  CHECK(c2[0].index == 1);
  CHECK(c2[1].index == 2);
  for (int ell = 1; ell <= 4; ++ell)
    for (const auto& p : all_up_to(8)) {
      auto cs = column_order(p, ell);
      for (size_t k = 1; k < cs.size(); ++k) CHECK(cs[k - 1].position > cs[k].position);
      auto rs = row_order(p, ell);
      for (size_t k = 1; k < rs.size(); ++k) CHECK(rs[k - 1].position < rs[k].position);
    }
}

TEST_CASE("peeling") {
  Peel a = peel_last_column({4, 3, 1}, 3);
  CHECK(a.rest == Partition{2, 2, 1});
  CHECK(a.p == 2);
  CHECK(a.n == 1);
  std::set<std::string> chars;
  for (const auto& n : a.removed) chars.insert(character(n).to_string());
  CHECK(chars == std::set<std::string>{"q^2", "q^2*t", "q^3"});
  Peel b = peel_last_column({2, 2, 1}, 3);
  CHECK(b.rest == Partition{2});
  CHECK(b.p == 2);
  CHECK(b.n == 1);
  chars.clear();
  for (const auto& n : b.removed) chars.insert(character(n).to_string());
  CHECK(chars == std::set<std::string>{"t", "t^2", "q*t"});
  Peel r = peel_last_row({4, 3, 1}, 3);
  CHECK(r.rest == Partition{2});
  CHECK(r.p == 2);
  CHECK(r.n == 2);
  CHECK_THROWS_AS(peel_last_column({2}, 3), EmptyQuotient);
  for (int ell = 1; ell <= 4; ++ell)
    for (const auto& p : all_up_to(8)) {
      if (is_core(p, ell)) continue;
      for (const Peel& pe : {peel_last_column(p, ell), peel_last_row(p, ell)}) {
        CHECK(static_cast<int>(pe.removed.size()) == pe.n * ell);
        CHECK(core_quotient(pe.rest, ell).core == core_quotient(p, ell).core);
        for (const auto& n : nodes(pe.rest)) CHECK(contains(p, n));
      }
    }
}

TEST_CASE("dominance") {
  CHECK(dominates({2}, {1, 1}));
  CHECK_FALSE(dominates({1, 1}, {2}));
  CHECK_THROWS_AS(dominates({4, 3, 1}, {2, 2, 1}), SizeMismatch);
  CHECK(compare({3, 1, 1, 1}, {2, 2, 2}, 3).dominance == Order::Incomparable);
  // comparability table for 3-core (2), quotient size 2, against a partial-sum oracle
  std::vector<Partition> fam;
  for (const auto& q : multipartitions(2, 3)) fam.push_back(from_core_quotient({2}, q, 3));
  CHECK(fam.size() == 9);
  for (const auto& x : fam)
    for (const auto& y : fam) {
      std::vector<int> sx(9, 0), sy(9, 0);
      for (size_t k = 0; k < 8; ++k) {
        sx[k + 1] = sx[k] + (k < x.size() ? x[k] : 0);
        sy[k + 1] = sy[k] + (k < y.size() ? y[k] : 0);
      }
      bool ge = true;
      for (int k = 0; k < 9; ++k) ge = ge && sx[k] >= sy[k];
      CHECK(geq_ell(x, y, 3) == ge);
    }
}

TEST_CASE("transpose") {
  CHECK(transpose({4, 3, 1}) == Partition{3, 2, 2, 1});
  CHECK(transpose_charge({0, 0, 0}) == std::vector<int>{0, 0, 0});
  CHECK(transpose_charge({-1, 1, 0}) == std::vector<int>{0, -1, 1});
  for (const auto& p : all_up_to(8)) {
    CoreQuotient a = core_quotient(p, 3), b = core_quotient(transpose(p), 3);
    CHECK(b.core == transpose(a.core));
    CHECK(b.charges == transpose_charge(a.charges));
  }
}
