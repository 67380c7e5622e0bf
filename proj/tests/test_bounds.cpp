#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "flashbow/bounds.hpp"

using namespace flashbow;

TEST_CASE("the trivial lower bound is an exact power") {
  CHECK(lower_bound(2, 3) == 4);
  CHECK(lower_bound(7, 1) == 1);
  CHECK(lower_bound(3, 4) == 27);
  CHECK(lower_bound(10, 20) == BigInt("10000000000000000000"));
  CHECK_THROWS_AS(lower_bound(0, 2), DomainError);
  CHECK_THROWS_AS(lower_bound(2, 0), DomainError);
}

TEST_CASE("closed-form bounds hit their frozen values") {
  CHECK(direct_bound(4, 2) == 16);
  CHECK(direct_bound(2, 2) == 12);
  CHECK(direct_bound(100, 3) == 17280);
  for (int k = 1; k <= 6; ++k) {
    BigInt three_k = 1;
    for (int i = 0; i < k; ++i) three_k *= 3;
    CHECK(direct_bound(1, k) == three_k);
  }

  CHECK(refined_bound(4, 4) == 64);
  CHECK(refined_bound(1, 5) == 2);
  CHECK(refined_bound(9, 6) == 104976);
  CHECK_THROWS_AS(refined_bound(4, 3), DomainError);

  CHECK(window_bound(6, 4, 2, 2) == 24);   // ceil(6*16/4)
  CHECK(window_bound(7, 3, 2, 3) == 24);   // ceil(7*27/8) = ceil(23.625)
  CHECK(window_bound(5, 3, 3, 4) == 5);    // m = l leaves the threshold alone
  CHECK_THROWS_AS(window_bound(0, 2, 2, 1), DomainError);
  CHECK_THROWS_AS(window_bound(5, 2, 0, 1), DomainError);
}

TEST_CASE("certified ceilings never round inward") {
  using Float = boost::multiprecision::cpp_bin_float_100;
  struct Pair { int l, k; };
  for (Pair p : {Pair{2, 2}, Pair{3, 3}, Pair{5, 4}, Pair{7, 5}, Pair{10, 6},
                 Pair{13, 4}, Pair{17, 7}, Pair{23, 5}, Pair{50, 3}, Pair{99, 8}}) {
    CAPTURE(p.l, p.k);
    Float sq = sqrt(Float(p.l));
    Float lk1 = pow(Float(p.l), p.k - 1);
    Float target = pow(Float(1) + 2 / sq, p.k) * lk1;
    CHECK(BigInt(static_cast<BigInt>(ceil(target))) <= direct_bound(p.l, p.k));
    CHECK(BigInt(static_cast<BigInt>(floor(target))) < direct_bound(p.l, p.k) + 1);
    if (p.k >= 4) {
      Float refined = pow(Float(1) + 1 / sq, p.k - 4) * lk1;
      CHECK(BigInt(static_cast<BigInt>(ceil(refined))) <= refined_bound(p.l, p.k));
      CHECK(BigInt(static_cast<BigInt>(floor(refined))) < refined_bound(p.l, p.k) + 1);
    }
  }
}

TEST_CASE("the l=2 table matches its frozen rows") {
  BoundTable t = build_table(2, 4);
  REQUIRE(t.k_max == 4);

  const BoundCell& k1 = t.cell(1);
  CHECK(k1.lower == 1);
  CHECK(k1.best == 1);
  CHECK(k1.best_source == "base");
  CHECK_FALSE(k1.direct.has_value());

  const BoundCell& k2 = t.cell(2);
  CHECK(k2.lower == 2);
  CHECK(k2.direct == BigInt(12));
  CHECK(k2.doubling == BigInt(7));
  CHECK(k2.split == BigInt(6));
  CHECK_FALSE(k2.refined.has_value());
  CHECK_FALSE(k2.hybrid.has_value());
  CHECK(k2.best == 6);
  CHECK(k2.best_source == "split");

  const BoundCell& k3 = t.cell(3);
  CHECK(k3.lower == 4);
  CHECK(k3.direct == BigInt(57));
  CHECK(k3.doubling == BigInt(36));
  CHECK(k3.split == BigInt(32));
  CHECK(k3.hybrid == BigInt(72));
  CHECK(k3.best == 32);
  CHECK(k3.best_source == "split");
  CHECK(t.g_value(3, 0) == 0);
  CHECK(t.g_value(3, 1) == 9);
  CHECK(t.g_value(3, 2) == 106);

  const BoundCell& k4 = t.cell(4);
  CHECK(k4.direct == BigInt(272));
  CHECK(k4.refined == BigInt(8));
  CHECK(k4.doubling == BigInt(177));
  CHECK(k4.split == BigInt(190));
  CHECK(k4.hybrid == BigInt(815));
  CHECK(k4.best == 8);
  CHECK(k4.best_source == "refined");
}

TEST_CASE("the l=4 table matches its frozen rows") {
  BoundTable t = build_table(4, 3);
  CHECK(t.cell(2).doubling == BigInt(10));
  CHECK(t.cell(2).split == BigInt(10));
  CHECK(t.cell(2).best == 10);
  CHECK(t.cell(2).best_source == "doubling");  // earliest column wins the tie
  CHECK(t.cell(3).direct == BigInt(128));
  CHECK(t.cell(3).doubling == BigInt(84));
  CHECK(t.cell(3).split == BigInt(92));
  CHECK(t.cell(3).hybrid == BigInt(132));
  CHECK(t.cell(3).best == 84);
  CHECK(t.cell(3).best_source == "doubling");
}

TEST_CASE("the f-variant substitutes the exact transitive l=2 threshold") {
  // Plain tables take t2(k) from a genuine l=2 run (32 at k=3); the
  // f-variant uses 2^(k-1) = 4.  At l=100 the second branch dominates, so
  // the two modes separate cleanly: 32*50^2 vs 4*50^2.
  BoundTable plain = build_table(100, 3, false);
  BoundTable fvar = build_table(100, 3, true);
  CHECK(plain.cell(3).hybrid == BigInt(80000));
  CHECK(fvar.cell(3).hybrid == BigInt(10000));

  // At l=4 the threshold branch dominates either way.
  BoundTable f43 = build_table(4, 3, true);
  CHECK(f43.cell(3).hybrid == BigInt(132));
  CHECK(hybrid_bound(4, 3, f43) == 132);
  CHECK_THROWS_AS(hybrid_bound(4, 2, f43), DomainError);
}

TEST_CASE("split minimization is no worse than any fixed split") {
  for (int l : {2, 3, 5}) {
    BoundTable t = build_table(l, 6);
    for (int k = 2; k <= 6; ++k) {
      const BoundCell& cell = t.cell(k);
      for (int r = 1; r <= k - 1; ++r) {
        BigInt at_r = t.best(k - 1) + t.g_value(k, r - 1) + 1 +
                      BigInt(2) * (k - 1) * detail::big_pow(l, r) * t.best(k - r);
        CHECK(*cell.split <= at_r);
      }
    }
  }
}

TEST_CASE("tables are sane and monotone where the formulas allow") {
  std::vector<BoundTable> tables;
  for (int l = 1; l <= 10; ++l) tables.push_back(build_table(l, 8));

  auto source = [](const BoundCell& c, int i) -> const std::optional<BigInt>& {
    switch (i) {
      case 0: return c.direct;
      case 1: return c.refined;
      case 2: return c.doubling;
      case 3: return c.split;
      default: return c.hybrid;
    }
  };

  for (int li = 0; li < 10; ++li) {
    for (int k = 1; k <= 8; ++k) {
      const BoundCell& c = tables[static_cast<std::size_t>(li)].cell(k);
      CAPTURE(li + 1, k);
      CHECK(c.best >= c.lower);
      CHECK(c.g[0] == 0);
      if (k < 4) CHECK_FALSE(c.refined.has_value());
      if (k < 3) CHECK_FALSE(c.hybrid.has_value());
      if (k >= 2) CHECK(c.best_source != "base");

      // Everything grows with l at fixed k.
      if (li >= 1) {
        const BoundCell& prev = tables[static_cast<std::size_t>(li - 1)].cell(k);
        CHECK(c.best >= prev.best);
        CHECK(c.lower >= prev.lower);
        for (int i = 0; i < 5; ++i)
          if (source(c, i) && source(prev, i))
            CHECK(*source(c, i) >= *source(prev, i));
      }
      // The pure closed forms grow with k; table-fed recursions and the
      // best column can legitimately dip where the k>=4 source switches on.
      if (k >= 2 && c.direct && tables[static_cast<std::size_t>(li)].cell(k - 1).direct)
        CHECK(*c.direct >= *tables[static_cast<std::size_t>(li)].cell(k - 1).direct);
      if (k >= 5)
        CHECK(*c.refined >= *tables[static_cast<std::size_t>(li)].cell(k - 1).refined);
    }
  }

  // The k = 4 seam, frozen: the late-starting source undercuts every k = 3
  // candidate, so the best column steps down across the seam.
  CHECK(tables[1].cell(3).best == 32);
  CHECK(tables[1].cell(4).best == 8);
  CHECK(tables[3].cell(4).best == 64);
}

TEST_CASE("CSV emission round-trips and flags no invalid source") {
  BoundTable one = build_table(5, 1);
  CHECK(emit_table(one) ==
        "l,k,lower,direct,refined,doubling,split,hybrid,best,best_source\n"
        "5,1,1,,,,,,1,base\n");

  for (int l : {1, 2, 4, 9}) {
    BoundTable t = build_table(l, 6);
    std::string csv = emit_table(t);
    BoundTable back = parse_table(csv);
    CHECK(back.l == t.l);
    CHECK(back.k_max == t.k_max);
    REQUIRE(back.cells.size() == t.cells.size());
    for (std::size_t i = 0; i < t.cells.size(); ++i) CHECK(back.cells[i] == t.cells[i]);
    CHECK(emit_table(back) == csv);

    for (const BoundCell& c : t.cells) {
      if (c.k < 4) CHECK(c.best_source != "refined");
      if (c.k < 3) CHECK(c.best_source != "hybrid");
    }
  }

  CHECK_THROWS_AS(parse_table("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_table("l,k,lower,direct,refined,doubling,split,hybrid,best,best_source\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_table("l,k,lower,direct,refined,doubling,split,hybrid,best,best_source\n"
                              "2,1,1,,,,,,1\n"),
                  ParseError);
}
