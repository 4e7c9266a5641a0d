#include "fqloop/equivalence.hpp"

#include "fqloop/structure.hpp"

namespace fqloop {

Report verify_form(const ArithmeticForm& form) {
  Report r;
  const LoopTable& l = form.loop;
  const std::size_t n = l.order();
  const bool sizes = form.f.carrier_order() == n && form.g.carrier_order() == n && form.e < n;
  r.add("shapes", sizes);
  if (!sizes) return r;

  r.add("loop_is_nk", is_nk_loop(l).holds);
  r.add("f_automorphism", is_automorphism(l, form.f.map));
  r.add("g_automorphism", is_automorphism(l, form.g.map));
  r.add("f_g_commute", endo_compose(form.f, form.g) == endo_compose(form.g, form.f));
  r.add("e_in_nucleus", l.in_nucleus(form.e), Json{{"e", form.e}});

  const auto scan = [&](const char* name, auto&& pred) {
    Json w = nullptr;
    for (Element x = 0; x < n; ++x)
      if (!pred(x)) {
        w = {{"x", x}};
        break;
      }
    r.add(name, w.is_null(), w);
  };
  scan("x_plus_f_in_nucleus", [&](Element x) { return l.in_nucleus(l.add(x, form.f(x))); });
  scan("x_plus_g_in_nucleus", [&](Element x) { return l.in_nucleus(l.add(x, form.g(x))); });
  scan("minus_x_plus_f_in_moufang_center",
       [&](Element x) { return l.has_neg(x) && l.in_moufang_center(l.add(l.neg(x), form.f(x))); });
  scan("minus_x_plus_g_in_moufang_center",
       [&](Element x) { return l.has_neg(x) && l.in_moufang_center(l.add(l.neg(x), form.g(x))); });
  return r;
}

namespace {

QuasigroupTable table_of(const ArithmeticForm& form) {
  const LoopTable& l = form.loop;
  return QuasigroupTable::from_operation(l.order(), [&](Element x, Element y) {
    return l.add(l.add(form.f(x), form.e), form.g(y));
  });
}

}  // namespace

QuasigroupTable build_fq(const ArithmeticForm& form) {
  const Report r = verify_form(form);
  for (const auto& row : r.rows)
    if (!row.pass) throw AlgebraError(ErrorKind::InvalidForm, "arithmetic form violates " + row.name);
  return table_of(form);
}

std::vector<RecoveredForm> recover_form(const PointedFQ& p) {
  const QuasigroupTable& q = p.q;
  const std::size_t n = q.order();
  const Element a = p.point;
  if (a >= n) throw AlgebraError(ErrorKind::Malformed, "point out of range");

  std::vector<RecoveredForm> out;
  for (Element u = 0; u < n; ++u) {
    const Element v = q.right_div(a, u);
    auto iso = QuasigroupTable::from_operation(n, [&](Element x, Element y) {
      return q.op(q.right_div(x, u), q.left_div(v, y));
    });
    LoopTable loop(std::move(iso));
    if (loop.zero() != a) throw AlgebraError(ErrorKind::InvariantViolation, "principal isotope has the wrong neutral");
    if (!is_nk_loop(loop).holds) continue;

    const Element e = q.op(a, a);
    Endo f{std::vector<Element>(n)}, g{std::vector<Element>(n)};
    for (Element x = 0; x < n; ++x) {
      f.map[x] = loop.right_sub(q.op(x, a), e);
      g.map[x] = loop.left_sub(e, q.op(a, x));
    }
    ArithmeticForm form{std::move(loop), std::move(f), std::move(g), e};
    if (!verify_form(form).all_pass() || !(table_of(form) == q)) continue;
    out.push_back(RecoveredForm{std::move(form), u, v});
  }
  if (out.empty())
    throw AlgebraError(ErrorKind::NoneFound, "no principal isotope at point " + std::to_string(a) +
                                                 " yields an arithmetic form");
  return out;
}

namespace {

Endo minus_x_plus(const LoopTable& l, const Endo& f) {
  Endo h{std::vector<Element>(l.order())};
  for (Element x = 0; x < l.order(); ++x) h.map[x] = l.add(l.neg(x), f(x));
  return h;
}

Endo x_plus(const LoopTable& l, const Endo& a) {
  Endo h{std::vector<Element>(l.order())};
  for (Element x = 0; x < l.order(); ++x) h.map[x] = l.add(x, a(x));
  return h;
}

}  // namespace

PointedGenModule rho(const PointedFQ& p, const std::optional<ArithmeticForm>& form) {
  ArithmeticForm chosen = [&] {
    if (!form) return recover_form(p).front().form;
    if (form->loop.zero() != p.point)
      throw AlgebraError(ErrorKind::InvalidForm, "form loop is not pointed at the quasigroup's point");
    if (!(build_fq(*form) == p.q)) throw AlgebraError(ErrorKind::InvalidForm, "form does not rebuild the table");
    return *form;
  }();
  const LoopTable& l = chosen.loop;
  ActionImages action{minus_x_plus(l, chosen.f), minus_x_plus(l, chosen.g),
                      minus_x_plus(l, endo_inverse(chosen.f)), minus_x_plus(l, endo_inverse(chosen.g))};
  const Element e = chosen.e;
  return PointedGenModule{GenModule(std::move(chosen.loop), std::move(action)), e};
}

SigmaResult sigma_with_form(const PointedGenModule& pm) {
  const GenModule& m = pm.module;
  if (!verify_module_axioms(m).all_pass() || !verify_class_m(m).all_pass())
    throw AlgebraError(ErrorKind::NotInClassM, "module is not in class M");
  if (!is_nuclearly_pointed(pm))
    throw AlgebraError(ErrorKind::NotNuclearlyPointed, "point " + std::to_string(pm.point) + " is not in the nucleus");

  const LoopTable& l = m.loop();
  const std::size_t n = l.order();
  const Endo f = x_plus(l, m.phi());
  const Endo g = x_plus(l, m.psi());
  const Endo f_inv = x_plus(l, m.mu());
  const Endo g_inv = x_plus(l, m.nu());
  const Endo id = identity_endo(n);
  if (endo_compose(f, f_inv) != id || endo_compose(f_inv, f) != id)
    throw AlgebraError(ErrorKind::InvariantViolation, "z + uz does not invert z + xz");
  if (endo_compose(g, g_inv) != id || endo_compose(g_inv, g) != id)
    throw AlgebraError(ErrorKind::InvariantViolation, "z + vz does not invert z + yz");

  ArithmeticForm form{l, f, g, pm.point};
  QuasigroupTable table = build_fq(form);
  return SigmaResult{PointedFQ{std::move(table), l.zero()}, std::move(form)};
}

PointedFQ sigma(const PointedGenModule& pm) { return sigma_with_form(pm).fq; }

namespace {

std::optional<Json> first_table_difference(const QuasigroupTable& expected, const QuasigroupTable& got) {
  if (expected.order() != got.order())
    return Json{{"what", "order"}, {"expected", expected.order()}, {"got", got.order()}};
  for (Element x = 0; x < expected.order(); ++x)
    for (Element y = 0; y < expected.order(); ++y)
      if (expected.op(x, y) != got.op(x, y))
        return Json{{"what", "table"}, {"x", x}, {"y", y}, {"expected", expected.op(x, y)}, {"got", got.op(x, y)}};
  return std::nullopt;
}

}  // namespace

RoundTrip roundtrip_fq(const PointedFQ& p) {
  const PointedFQ back = sigma(rho(p));
  if (auto d = first_table_difference(p.q, back.q)) return {false, *d};
  if (back.point != p.point) return {false, Json{{"what", "point"}, {"expected", p.point}, {"got", back.point}}};
  return {};
}

RoundTrip roundtrip_module(const PointedGenModule& pm) {
  const SigmaResult s = sigma_with_form(pm);
  const PointedGenModule back = rho(s.fq, s.form);
  if (auto d = first_table_difference(pm.module.loop().base(), back.module.loop().base())) {
    (*d)["what"] = "loop";
    return {false, *d};
  }
  constexpr const char* names[4] = {"phi", "psi", "mu", "nu"};
  for (int i = 0; i < 4; ++i) {
    const auto& a = pm.module.action()[i].map;
    const auto& b = back.module.action()[i].map;
    for (Element x = 0; x < a.size(); ++x)
      if (a[x] != b[x]) return {false, Json{{"what", names[i]}, {"x", x}, {"expected", a[x]}, {"got", b[x]}}};
  }
  if (back.point != pm.point) return {false, Json{{"what", "point"}, {"expected", pm.point}, {"got", back.point}}};
  return {};
}

Report check_fm_mc(const PointedFQ& p) {
  Report r;
  const bool in_m = m_set(p.q).contains(p.point);
  for (const auto& rf : recover_form(p)) {
    const bool e_central = rf.form.loop.in_center(rf.form.e);
    r.add("form_u" + std::to_string(rf.u), in_m == e_central,
          Json{{"point_in_m", in_m}, {"e", rf.form.e}, {"e_in_center", e_central}});
  }
  return r;
}

Json to_json(const ArithmeticForm& form) {
  return Json{{"f", to_json(form.f)}, {"g", to_json(form.g)}, {"e", form.e}, {"zero", form.loop.zero()}};
}

}  // namespace fqloop
