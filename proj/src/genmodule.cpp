#include "fqloop/genmodule.hpp"

#include <random>
#include <sstream>

namespace fqloop {

namespace {

constexpr const char* kActionNames[4] = {"phi", "psi", "mu", "nu"};

}  // namespace

GenModule::GenModule(LoopTable loop, ActionImages action)
    : ctx_(std::make_shared<const EndoContext>(loop)), action_(std::move(action)) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (action_[i].carrier_order() != ctx_->loop().order())
      throw AlgebraError(ErrorKind::CarrierMismatch, std::string(kActionNames[i]) + " has the wrong length");
    for (Element v : action_[i].map)
      if (v >= ctx_->loop().order())
        throw AlgebraError(ErrorKind::Malformed, std::string(kActionNames[i]) + " has an out-of-range image");
  }
}

GenModule make_module(LoopTable loop, ActionImages action) {
  GenModule m(std::move(loop), std::move(action));
  if (!m.context().is_nk()) throw AlgebraError(ErrorKind::NotNKLoop, "module loop is not an NK-loop");
  // evaluate() performs the speciality and commutation checks.
  (void)evaluate(Poly{}, m.action(), m.context());
  return m;
}

Element scalar_mul(const GenModule& m, const Poly& p, Element x) { return m.act(p)(x); }

bool annihilator_contains(const GenModule& m, const Poly& p) { return m.act(p) == zero_endo(m.loop()); }

bool is_nuclearly_pointed(const PointedGenModule& pm) { return pm.module.loop().in_nucleus(pm.point); }
bool is_centrally_pointed(const PointedGenModule& pm) { return pm.module.loop().in_center(pm.point); }

namespace {

std::vector<Poly> sample_polys(std::uint64_t seed) {
  const auto gens = generators();
  std::vector<Poly> out{gens.x, gens.y, gens.u, gens.v};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> var(0, 3);
  std::uniform_int_distribution<int> deg(1, 2);
  for (int k = 0; k < 8; ++k) {
    Poly p;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      Monomial m;
      const int d = deg(rng);
      for (int j = 0; j < d; ++j) ++m.exps[var(rng)];
      p = p + Poly::term(coeff(rng), m);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Report verify_module_axioms(const GenModule& m, std::uint64_t seed) {
  Report r;
  const LoopTable& l = m.loop();
  const EndoContext& ctx = m.context();
  const std::size_t n = l.order();
  r.add("nk_loop", ctx.is_nk());

  const auto polys = sample_polys(seed);
  std::vector<Endo> acts;
  for (const auto& p : polys) acts.push_back(m.act(p));

  {
    bool ok = true;
    Json w = nullptr;
    for (std::size_t i = 0; i < 4 && ok; ++i)
      for (std::size_t j = i + 1; j < 4 && ok; ++j)
        if (endo_compose(m.action()[i], m.action()[j]) != endo_compose(m.action()[j], m.action()[i])) {
          ok = false;
          w = {{"a", kActionNames[i]}, {"b", kActionNames[j]}};
        }
    r.add("generator_images_commute", ok, w);
  }

  // 1. a(x + y) = ax + ay
  {
    Json w = nullptr;
    for (std::size_t i = 0; i < polys.size() && w.is_null(); ++i)
      for (Element x = 0; x < n && w.is_null(); ++x)
        for (Element y = 0; y < n; ++y)
          if (acts[i](l.add(x, y)) != l.add(acts[i](x), acts[i](y))) {
            w = {{"a", to_string(polys[i])}, {"x", x}, {"y", y}};
            break;
          }
    r.add("axiom1_additive", w.is_null(), w);
  }
  // 2. (a + b)x = ax + bx and 3. a(bx) = (ab)x
  {
    Json w2 = nullptr, w3 = nullptr;
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (w2.is_null() && m.act(polys[i] + polys[j]) != endo_add(l, acts[i], acts[j]))
          w2 = {{"a", to_string(polys[i])}, {"b", to_string(polys[j])}};
        if (w3.is_null() && m.act(polys[i] * polys[j]) != endo_compose(acts[i], acts[j]))
          w3 = {{"a", to_string(polys[i])}, {"b", to_string(polys[j])}};
      }
    r.add("axiom2_sum", w2.is_null(), w2);
    r.add("axiom3_product", w3.is_null(), w3);
  }
  // 4. ax ∈ K, 5. az ∈ N for z ∈ N, 6. mw + aw ∈ Z on K for some m.
  {
    Json w4 = nullptr, w5 = nullptr, w6 = nullptr;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const Endo& a = acts[i];
      for (Element x = 0; x < n && w4.is_null(); ++x)
        if (!l.in_moufang_center(a(x))) w4 = {{"a", to_string(polys[i])}, {"x", x}};
      for (Element z : l.nucleus())
        if (w5.is_null() && !l.in_nucleus(a(z))) w5 = {{"a", to_string(polys[i])}, {"z", z}};
      if (w6.is_null()) {
        bool found = false;
        for (long long k = 0; k < static_cast<long long>(ctx.exponent()) && !found; ++k) {
          bool all = true;
          for (Element w : l.moufang_center())
            if (!l.in_center(l.add(ctx.multiple(w, k), a(w)))) {
              all = false;
              break;
            }
          found = all;
        }
        if (!found) w6 = {{"a", to_string(polys[i])}};
      }
    }
    r.add("axiom4_image_in_moufang_center", w4.is_null(), w4);
    r.add("axiom5_nucleus_into_nucleus", w5.is_null(), w5);
    r.add("axiom6_quasicentral_on_moufang_center", w6.is_null(), w6);
  }
  return r;
}

Report verify_class_m(const GenModule& m) {
  Report r;
  const LoopTable& l = m.loop();
  const auto check1 = [&](const char* name, const Endo& a) {
    Json w = nullptr;
    for (Element z = 0; z < l.order(); ++z)
      if (!l.in_nucleus(l.add(l.add(z, z), a(z)))) {
        w = {{"z", z}};
        break;
      }
    r.add(name, w.is_null(), w);
  };
  check1("condition1_2z_plus_xz_in_nucleus", m.phi());
  check1("condition1_2z_plus_yz_in_nucleus", m.psi());

  const auto g = generators();
  const auto check_ann = [&](const char* name, const Poly& p) {
    const Endo a = m.act(p);
    Json w = nullptr;
    for (Element z = 0; z < l.order(); ++z)
      if (a(z) != l.zero()) {
        w = {{"polynomial", to_string(p)}, {"z", z}, {"image", a(z)}};
        break;
      }
    r.add(name, w.is_null(), w);
  };
  check_ann("condition2_x_plus_u_plus_xu_annihilates", g.x + g.u + g.x * g.u);
  check_ann("condition3_y_plus_v_plus_yv_annihilates", g.y + g.v + g.y * g.v);
  return r;
}

// ---------------------------------------------------------------------------

ModuleFile parse_module_file(std::string_view text) {
  std::string table_text;
  std::vector<std::string> comments;
  ActionImages images;
  bool seen[4] = {false, false, false, false};
  std::optional<Element> point;
  bool in_table = true;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    pos = nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string::npos) continue;
    line = line.substr(lead);
    if (line.front() == '#') {
      comments.push_back(line);
      continue;
    }
    const auto colon = line.find(':');
    int which = -1;
    if (colon != std::string::npos)
      for (int i = 0; i < 4; ++i)
        if (line.substr(0, colon) == kActionNames[i]) which = i;
    if (which >= 0) {
      in_table = false;
      if (seen[which]) throw AlgebraError(ErrorKind::Malformed, std::string("duplicate ") + kActionNames[which]);
      seen[which] = true;
      std::istringstream ss(line.substr(colon + 1));
      long long v;
      while (ss >> v) {
        if (v < 0) throw AlgebraError(ErrorKind::Malformed, "negative image");
        images[which].map.push_back(static_cast<Element>(v));
      }
      if (!ss.eof()) throw AlgebraError(ErrorKind::Malformed, std::string("bad entry in ") + kActionNames[which]);
      continue;
    }
    if (line.rfind("point", 0) == 0) {
      std::istringstream ss(line.substr(5));
      long long k;
      if (!(ss >> k) || k < 0) throw AlgebraError(ErrorKind::Malformed, "bad point line");
      point = static_cast<Element>(k);
      in_table = false;
      continue;
    }
    if (!in_table) throw AlgebraError(ErrorKind::Malformed, "unexpected line after action: " + line);
    table_text += line;
    table_text += '\n';
  }
  for (int i = 0; i < 4; ++i)
    if (!seen[i]) throw AlgebraError(ErrorKind::Malformed, std::string("missing ") + kActionNames[i] + " line");

  LoopTable loop(parse_table(table_text));
  if (point && *point >= loop.order()) throw AlgebraError(ErrorKind::Malformed, "point out of range");
  return ModuleFile{std::move(comments), GenModule(std::move(loop), std::move(images)), point};
}

std::string serialize_module(const GenModule& m, std::optional<Element> point) {
  std::string out;
  write_table_rows(out, m.loop().base());
  for (int i = 0; i < 4; ++i) {
    out += kActionNames[i];
    out += ':';
    for (Element v : m.action()[i].map) out += " " + std::to_string(v);
    out += '\n';
  }
  if (point) out += "point " + std::to_string(*point) + "\n";
  return out;
}

}  // namespace fqloop
