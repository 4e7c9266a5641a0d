#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fqloop/corpus.hpp"
#include "oracles.hpp"

using namespace fqloop;

TEST_CASE("group tables are groups") {
  const auto groups = group_tables();
  CHECK(groups.size() == 17);
  for (const auto& g : groups) {
    CHECK_MESSAGE(is_associative(g.loop.base()).holds, g.name);
    CHECK(is_nk_loop(g.loop).holds);
  }
  CHECK(groups[1].loop.base() == QuasigroupTable::from_rows({{0, 1}, {1, 0}}));
  std::set<std::size_t> orders;
  for (const auto& g : groups) orders.insert(g.loop.order());
  CHECK(orders == std::set<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 18});
}

TEST_CASE("quaternion and dihedral groups differ") {
  const auto q8 = quaternion_group();
  const auto d4 = permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}});
  auto involutions = [](const LoopTable& l) {
    std::size_t k = 0;
    for (Element x = 0; x < l.order(); ++x)
      if (x != l.zero() && l.add(x, x) == l.zero()) ++k;
    return k;
  };
  CHECK(involutions(q8) == 1);
  CHECK(involutions(d4) == 5);
  CHECK(q8.center().size() == 2);
  CHECK(d4.center().size() == 2);
}

TEST_CASE("Latin square counts") {
  const std::size_t expected[] = {1, 2, 12, 576};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t count = 0;
    for_each_latin_square(n, [&](const QuasigroupTable&) {
      ++count;
      return true;
    });
    CHECK(count == expected[n - 1]);
    CHECK(scan_f_quasigroups(n).latin_squares == expected[n - 1]);
  }
}

TEST_CASE("F-quasigroup search") {
  CHECK(search_f_quasigroups(1).size() == 1);
  const auto two = scan_f_quasigroups(2);
  CHECK(two.f_quasigroups.size() == 2);
  CHECK(two.pointed().size() == 4);
  // Regression fixture from the first verified full scan.
  CHECK(scan_f_quasigroups(4).f_quasigroups.size() == 120);
  CHECK(scan_f_quasigroups(4, 3).f_quasigroups == scan_f_quasigroups(4, 1).f_quasigroups);
  CHECK_THROWS_AS(scan_f_quasigroups(6), AlgebraError);
}

TEST_CASE("search output contains every built form") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Element>> found;
    for (const auto& q : scan_f_quasigroups(n).f_quasigroups) found.emplace(q.cells().begin(), q.cells().end());
    for (const auto& g : group_tables()) {
      if (g.loop.order() != n) continue;
      for (const auto& f : enumerate_forms(g.loop, 500)) {
        const auto q = build_fq(f);
        CHECK(found.count({q.cells().begin(), q.cells().end()}) == 1);
      }
    }
  }
}

TEST_CASE("enumerate_forms counts") {
  CHECK(enumerate_forms(cyclic(1), 500).size() == 1);
  CHECK(enumerate_forms(cyclic(5), 500).size() == 80);
  CHECK(enumerate_forms(cyclic(5), 20).size() == 20);
  const auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  const auto forms = enumerate_forms(s3, 500);
  CHECK(forms.size() == 6);
  for (const auto& f : forms) {
    CHECK(f.f == identity_endo(6));
    CHECK(f.g == identity_endo(6));
  }
  const auto chein = chein_loop(s3);
  CHECK_THROWS_AS(enumerate_forms(chein, 10), AlgebraError);
}

TEST_CASE("CML81 construction") {
  const auto c = cml81();
  CHECK(c.order() == 81);
  CHECK(is_commutative(c.base()));
  CHECK(is_moufang(c).holds);
  CHECK(!is_associative(c.base()).holds);
  CHECK(exponent(c) == 3);
  CHECK(is_nk_loop(c).holds);
}

TEST_CASE("Chein loop") {
  const auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  const auto m = chein_loop(s3);
  CHECK(m.order() == 12);
  CHECK(is_moufang(m).holds);
  CHECK(!is_associative(m.base()).holds);
  CHECK(!is_nk_loop(m).holds);
  CHECK(is_associative(chein_loop(cyclic(3)).base()).holds);
}

TEST_CASE("linear quasigroups") {
  CHECK(is_f_quasigroup(linear_fq(5, 2, 3, 0)).holds);
  CHECK(is_f_quasigroup(linear_fq(8, 3, 5, 1)).holds);
  CHECK_THROWS_AS(linear_fq(6, 2, 1, 0), AlgebraError);
  for (const auto& nq : f_quasigroup_corpus(false)) {
    oracle::Table t{nq.table.order(), {nq.table.cells().begin(), nq.table.cells().end()}};
    CHECK_MESSAGE(oracle::literal_f_quasigroup(t), nq.name);
  }
}

TEST_CASE("first_loop_where") {
  const auto l = first_loop_where(5, [](const LoopTable& l) { return !is_associative(l.base()).holds; });
  REQUIRE(l);
  CHECK(l->zero() == 0);
  CHECK(!first_loop_where(4, [](const LoopTable& l) { return !is_associative(l.base()).holds; }));
}

TEST_CASE("write_corpus") {
  const auto dir = std::filesystem::temp_directory_path() / "fqloop-corpus-test";
  std::filesystem::remove_all(dir);
  const auto paths = write_corpus(dir);
  CHECK(std::filesystem::exists(dir / "z5.tbl"));
  CHECK(std::filesystem::exists(dir / "s3.tbl"));
  CHECK(std::filesystem::exists(dir / "cml81.tbl"));
  std::ifstream is(dir / "z5-2x3y.tbl");
  std::stringstream ss;
  ss << is.rdbuf();
  const auto tf = parse_table_file(ss.str());
  CHECK(tf.table == linear_fq(5, 2, 3, 0));
  CHECK(tf.point == Element{0});
  std::filesystem::remove_all(dir);
}
