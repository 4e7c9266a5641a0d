#include "doctest.h"
#include "fqloop/cayley.hpp"
#include "fqloop/corpus.hpp"
#include "oracles.hpp"

using namespace fqloop;

namespace {

oracle::Table raw(const QuasigroupTable& q) { return {q.order(), {q.cells().begin(), q.cells().end()}}; }

}  // namespace

TEST_CASE("parse and serialize tables") {
  const auto tf = parse_table_file("# z3\n3\n0 1 2\n1 2 0\n2 0 1\npoint 2\n");
  CHECK(tf.comments.size() == 1);
  CHECK(tf.table.order() == 3);
  CHECK(tf.point == Element{2});
  CHECK(tf.table.op(2, 2) == 1);
  const auto again = parse_table_file(serialize_table(tf.table, tf.point));
  CHECK(again.table == tf.table);
  CHECK(again.point == tf.point);
}

TEST_CASE("malformed and non-Latin input") {
  auto kind_of = [](std::string_view text) {
    try {
      (void)parse_table(text);
    } catch (const AlgebraError& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  CHECK(kind_of("2\n0 0\n1 1\n") == ErrorKind::NotLatin);
  CHECK(kind_of("2\n0 1\n1 0 1\n") == ErrorKind::Malformed);
  CHECK(kind_of("2\n0 1\n1 2\n") == ErrorKind::Malformed);
  CHECK(kind_of("x\n") == ErrorKind::Malformed);
  CHECK_THROWS_AS(LoopTable(linear_fq(5, 2, 3, 0)), AlgebraError);
}

TEST_CASE("alpha and beta of 2x + 3y over Z5") {
  const auto q = linear_fq(5, 2, 3, 0);
  for (Element x = 0; x < 5; ++x) {
    CHECK(q.op(x, q.alpha(x)) == x);
    CHECK(q.op(q.beta(x), x) == x);
    CHECK(q.alpha(x) == (3 * x) % 5);
    CHECK(q.beta(x) == (4 * x) % 5);
  }
  CHECK(q.left_div(1, q.op(1, 4)) == 4);
  CHECK(q.right_div(q.op(4, 1), 1) == 4);
}

TEST_CASE("is_f_quasigroup agrees with the literal laws on order <= 3") {
  for (std::size_t n = 1; n <= 3; ++n)
    for_each_latin_square(n, [](const QuasigroupTable& q) {
      CHECK(is_f_quasigroup(q).holds == oracle::literal_f_quasigroup(raw(q)));
      return true;
    });
}

TEST_CASE("F-law witness on a non-F quasigroup") {
  // A loop is an F-quasigroup only when it is a group.
  const auto q = first_loop_where(5, [](const LoopTable& l) { return !is_associative(l.base()).holds; })->base();
  const auto res = is_f_quasigroup(q);
  CHECK(!oracle::literal_f_quasigroup(raw(q)));
  REQUIRE(!res.holds);
  REQUIRE(res.witness);
  const auto [x, y, z] = *res.witness;
  const bool left_fails = q.op(x, q.op(y, z)) != q.op(q.op(x, y), q.op(q.alpha(x), z));
  const bool right_fails = q.op(q.op(z, y), x) != q.op(q.op(z, q.beta(x)), q.op(y, x));
  CHECK((res.failed_law == FLaw::Left ? left_fails : right_fails));
}

TEST_CASE("identities on groups and CML81") {
  const auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  CHECK(is_associative(s3.base()).holds);
  CHECK(!is_commutative(s3.base()));
  CHECK(is_moufang(s3).holds);
  CHECK(is_diassociative(s3));
  CHECK(exponent(s3) == 6);

  const auto c = cml81();
  CHECK(is_commutative(c.base()));
  CHECK(is_moufang(c).holds);
  CHECK(!is_associative(c.base()).holds);
  CHECK(is_diassociative(c));
  for (Element x = 0; x < 81; ++x) CHECK(power(c, x, 3) == c.zero());
  CHECK(exponent(c) == 3);
}

TEST_CASE("a non-diassociative loop of order 6") {
  const auto l = first_loop_where(6, [](const LoopTable& l) { return !is_diassociative(l, DiassocMode::Direct); });
  REQUIRE(l);
  CHECK(!is_moufang(*l).holds);
  // Exhibit a triple from the subloop generated by two elements that fails to associate.
  bool found = false;
  for (Element a = 0; a < 6 && !found; ++a)
    for (Element b = 0; b < 6 && !found; ++b) {
      std::vector<Element> sub{l->zero(), a, b};
      for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < sub.size(); ++j) {
          const Element s = l->add(sub[i], sub[j]);
          if (std::find(sub.begin(), sub.end(), s) == sub.end()) sub.push_back(s);
        }
      for (Element x : sub)
        for (Element y : sub)
          for (Element z : sub)
            if (l->add(l->add(x, y), z) != l->add(x, l->add(y, z))) found = true;
    }
  CHECK(found);
}

TEST_CASE("loop zero, neg and element orders") {
  const auto z6 = cyclic(6);
  CHECK(z6.zero() == 0);
  CHECK(z6.neg(1) == 5);
  CHECK(element_order(z6, 2) == 3);
  CHECK(power(z6, 1, -2) == 4);
  const auto q8 = quaternion_group();
  CHECK(exponent(q8) == 4);
  CHECK(is_associative(q8.base()).holds);
}
