#include "doctest.h"
#include "fqloop/corpus.hpp"
#include "fqloop/equivalence.hpp"

using namespace fqloop;

TEST_CASE("rho on 2x + 3y over Z5") {
  const PointedFQ p{linear_fq(5, 2, 3, 0), 0};
  const auto pm = rho(p);
  CHECK(pm.point == 0);
  CHECK(pm.module.loop() == cyclic(5));
  CHECK(pm.module.phi() == identity_endo(5));
  CHECK(pm.module.psi() == Endo{{0, 2, 4, 1, 3}});
  CHECK(pm.module.mu() == Endo{{0, 2, 4, 1, 3}});
  CHECK(pm.module.nu() == identity_endo(5));
  const auto back = sigma(pm);
  CHECK(back.q == p.q);
  CHECK(back.point == 0);
}

TEST_CASE("recovered forms rebuild the table") {
  const PointedFQ p{linear_fq(7, 3, 5, 2), 4};
  const auto forms = recover_form(p);
  CHECK(forms.size() == 7);
  for (const auto& rf : forms) {
    CHECK(rf.form.loop.zero() == 4);
    CHECK(p.q.op(rf.v, rf.u) == 4);
    CHECK(verify_form(rf.form).all_pass());
    CHECK(build_fq(rf.form) == p.q);
    CHECK(rf.form.loop.in_nucleus(rf.form.e));
  }
}

TEST_CASE("non-F quasigroups have no form") {
  const auto loop = first_loop_where(5, [](const LoopTable& l) { return !is_associative(l.base()).holds; });
  const PointedFQ p{loop->base(), 0};
  try {
    (void)recover_form(p);
    FAIL("expected NoneFound");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::NoneFound);
  }
}

TEST_CASE("build_fq rejects invalid forms") {
  const auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  const auto autos = enumerate_automorphisms(s3);
  const ArithmeticForm bad{s3, autos.back(), identity_endo(6), 0};
  REQUIRE(autos.back() != identity_endo(6));
  const auto r = verify_form(bad);
  CHECK(!r.all_pass());
  CHECK(!r.find("minus_x_plus_f_in_moufang_center")->pass);
  try {
    (void)build_fq(bad);
    FAIL("expected InvalidForm");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::InvalidForm);
  }
  const auto chein = chein_loop(s3);
  CHECK(!verify_form(ArithmeticForm{chein, identity_endo(12), identity_endo(12), 0}).find("loop_is_nk")->pass);
}

TEST_CASE("sigma requires a nuclear point") {
  const auto c = cml81();
  const Endo neg = endo_neg(c, identity_endo(81));
  const ArithmeticForm form{c, neg, neg, 0};
  const auto pm = rho(PointedFQ{build_fq(form), c.zero()}, form);
  CHECK(verify_class_m(pm.module).all_pass());
  Element outside = 0;
  while (c.in_nucleus(outside)) ++outside;
  try {
    (void)sigma(PointedGenModule{pm.module, outside});
    FAIL("expected NotNuclearlyPointed");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::NotNuclearlyPointed);
  }
}

TEST_CASE("round trips over a nonassociative loop") {
  const auto c = cml81();
  const Endo neg = endo_neg(c, identity_endo(81));
  for (Element e : c.nucleus()) {
    const ArithmeticForm form{c, neg, neg, e};
    const QuasigroupTable q = build_fq(form);
    CHECK(is_f_quasigroup(q).holds);
    const auto pm = rho(PointedFQ{q, c.zero()}, form);
    CHECK(roundtrip_module(pm).identical);
    for (Element p : {Element{0}, Element{40}, Element{80}}) {
      const auto rt = roundtrip_fq(PointedFQ{q, p});
      CHECK_MESSAGE(rt.identical, rt.first_difference.dump());
    }
  }
}

TEST_CASE("roundtrip reports the first difference") {
  const PointedFQ p{linear_fq(5, 2, 3, 0), 0};
  const auto pm = rho(p);
  CHECK(roundtrip_fq(p).identical);
  CHECK(roundtrip_fq(p).first_difference.is_null());
  CHECK(roundtrip_module(pm).identical);
}

TEST_CASE("M(Q) membership of the point matches centrality of e") {
  for (const auto& nq : f_quasigroup_corpus(false))
    for (Element p = 0; p < nq.table.order(); ++p) {
      const auto r = check_fm_mc(PointedFQ{nq.table, p});
      CHECK_MESSAGE(r.all_pass(), nq.name);
    }
  // In S3 shifted by a non-central element the point lies outside M(Q).
  const auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}});
  const QuasigroupTable q = build_fq(ArithmeticForm{s3, identity_endo(6), identity_endo(6), 3});
  const auto rows = check_fm_mc(PointedFQ{q, 0}).rows;
  REQUIRE(!rows.empty());
  CHECK(rows.front().witness["point_in_m"] == false);
  CHECK(rows.front().witness["e_in_center"] == false);
}

TEST_CASE("forms of affine quasigroups over Z5") {
  const auto forms = recover_form(PointedFQ{linear_fq(5, 2, 3, 0), 0});
  const auto& first = forms.front().form;
  CHECK(first.loop == cyclic(5));
  CHECK(first.e == 0);
  CHECK(first.f == Endo{{0, 2, 4, 1, 3}});
  CHECK(first.g == Endo{{0, 3, 1, 4, 2}});

  const auto shifted = recover_form(PointedFQ{linear_fq(5, 2, 3, 1), 0});
  for (const auto& rf : shifted) CHECK(rf.form.e == 1);
  CHECK(build_fq(ArithmeticForm{cyclic(5), first.f, first.g, 1}) == linear_fq(5, 2, 3, 1));
}

TEST_CASE("sigma of the Z5 module at another point") {
  const auto pm = rho(PointedFQ{linear_fq(5, 2, 3, 0), 0});
  const auto moved = sigma(PointedGenModule{pm.module, 2});
  CHECK(moved.q == linear_fq(5, 2, 3, 2));
  CHECK(moved.point == 0);
}

TEST_CASE("groups pointed at the identity give the zero action") {
  for (const auto& g : group_tables()) {
    const auto pm = rho(PointedFQ{g.loop.base(), g.loop.zero()});
    const Endo zero = zero_endo(pm.module.loop());
    CHECK(pm.point == g.loop.zero());
    for (const auto& a : pm.module.action()) CHECK(a == zero);
    CHECK(sigma(pm).q == g.loop.base());
  }
}
