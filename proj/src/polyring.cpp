#include "fqloop/polyring.hpp"

#include <cctype>

namespace fqloop {

namespace {

constexpr char kVarNames[4] = {'x', 'y', 'u', 'v'};

[[noreturn]] void parse_fail(const std::string& msg) { throw AlgebraError(ErrorKind::PolyParse, msg); }

}  // namespace

Poly Poly::generator(Var v) {
  Monomial m;
  m.exps[static_cast<int>(v)] = 1;
  return term(1, m);
}

Poly Poly::term(Coefficient c, Monomial m) {
  if (m.degree() > kMaxPolyDegree)
    throw AlgebraError(ErrorKind::DegreeOverflow, "monomial degree " + std::to_string(m.degree()) + " exceeds " +
                                                      std::to_string(kMaxPolyDegree));
  Poly p;
  if (c == 0) return p;
  if (m.degree() == 0) parse_fail("constant terms are not in the ring");
  p.terms_.emplace(m, std::move(c));
  return p;
}

void Poly::accumulate(const Monomial& m, const Coefficient& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.accumulate(m, c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < 4; ++i) {
        const unsigned e = unsigned{ma.exps[i]} + mb.exps[i];
        if (e > kMaxPolyDegree) throw AlgebraError(ErrorKind::DegreeOverflow, "exponent overflow in product");
        m.exps[i] = static_cast<std::uint8_t>(e);
      }
      if (m.degree() > kMaxPolyDegree)
        throw AlgebraError(ErrorKind::DegreeOverflow, "product degree exceeds " + std::to_string(kMaxPolyDegree));
      out.accumulate(m, ca * cb);
    }
  return out;
}

PolyGenerators generators() {
  return {Poly::generator(Var::X), Poly::generator(Var::Y), Poly::generator(Var::U), Poly::generator(Var::V)};
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_neg(const Poly& p) { return -p; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

// ---------------------------------------------------------------------------

Poly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_fail("empty polynomial");
  if (s == "0") return {};

  std::size_t i = 0;
  auto digits = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  Poly out;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      parse_fail("expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;

    Coefficient c = 1;
    const std::string num = digits();
    if (!num.empty()) {
      c = Coefficient(num);
      if (i < s.size() && s[i] == '*') ++i;
    }

    Monomial m;
    unsigned total = 0;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      const char* hit = nullptr;
      for (const char& v : kVarNames)
        if (s[i] == v) hit = &v;
      if (!hit) parse_fail(std::string("unexpected character '") + s[i] + "'");
      const int var = static_cast<int>(hit - kVarNames);
      ++i;
      unsigned e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::string ds = digits();
        if (ds.empty() || ds.size() > 3) parse_fail("bad exponent");
        e = static_cast<unsigned>(std::stoul(ds));
      }
      total += e;
      if (total > kMaxPolyDegree)
        throw AlgebraError(ErrorKind::DegreeOverflow, "monomial degree exceeds " + std::to_string(kMaxPolyDegree));
      m.exps[var] = static_cast<std::uint8_t>(m.exps[var] + e);
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] == '+' || s[i] == '-') parse_fail("dangling '*'");
      }
    }
    if (m.degree() == 0) parse_fail("constant terms are not in the ring");
    if (negative) c = -c;
    out = out + Poly::term(c, m);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Coefficient mag = negative ? Coefficient(-c) : c;
    bool need_star = false;
    if (mag != 1) {
      out += mag.str();
      need_star = true;
    }
    for (int v = 0; v < 4; ++v) {
      if (m.exps[v] == 0) continue;
      if (need_star) out += '*';
      out += kVarNames[v];
      if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
      need_star = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Endo evaluate_unchecked(const Poly& p, const ActionImages& images, const EndoContext& ctx) {
  const LoopTable& l = ctx.loop();
  const std::size_t n = l.order();
  for (const auto& img : images)
    if (img.carrier_order() != n) throw AlgebraError(ErrorKind::CarrierMismatch, "action image size mismatch");

  const auto e = static_cast<long long>(ctx.exponent());
  Endo acc = zero_endo(l);
  for (const auto& [m, c] : p.terms()) {
    Endo mono = identity_endo(n);
    for (int v = 0; v < 4; ++v)
      for (unsigned k = 0; k < m.exps[v]; ++k) mono = endo_compose(images[v], mono);
    const Coefficient r = ((c % e) + e) % e;
    const long long times = r.convert_to<long long>();
    Endo term{std::vector<Element>(n)};
    for (Element x = 0; x < n; ++x) term.map[x] = ctx.multiple(mono(x), times);
    acc = endo_add(l, acc, term);
  }
  return acc;
}

Endo evaluate(const Poly& p, const ActionImages& images, const EndoContext& ctx) {
  for (std::size_t i = 0; i < 4; ++i)
    if (images[i].carrier_order() != ctx.loop().order() || !ctx.is_special(images[i]))
      throw AlgebraError(ErrorKind::ImagesNotSpecial,
                         std::string("image of ") + kVarNames[i] + " is not a special endomorphism");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (endo_compose(images[i], images[j]) != endo_compose(images[j], images[i]))
        throw AlgebraError(ErrorKind::ImagesNotCommuting,
                           std::string("images of ") + kVarNames[i] + " and " + kVarNames[j] + " do not commute");
  return evaluate_unchecked(p, images, ctx);
}

Endo evaluate(const Poly& p, const ActionImages& images, const LoopTable& l) {
  return evaluate(p, images, EndoContext(l));
}

}  // namespace fqloop
