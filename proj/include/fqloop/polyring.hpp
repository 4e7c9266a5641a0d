#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqloop/endo.hpp"

namespace fqloop {

using Coefficient = boost::multiprecision::cpp_int;

enum class Var : std::uint8_t { X = 0, Y = 1, U = 2, V = 3 };

inline constexpr unsigned kMaxPolyDegree = 12;

/// Exponents of x, y, u, v.
struct Monomial {
  std::array<std::uint8_t, 4> exps{};

  unsigned degree() const noexcept { return exps[0] + exps[1] + exps[2] + exps[3]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic, largest first: higher total degree, then x > y > u > v.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exps > b.exps;
  }
};

/// Element of the ideal of Z[x,y,u,v] generated by the indeterminates: a
/// sparse integer polynomial without constant term. Terms are kept canonical
/// (no zero coefficients) after every operation.
class Poly {
 public:
  using Terms = std::map<Monomial, Coefficient, GrlexDescending>;

  Poly() = default;

  static Poly generator(Var v);
  /// Throws DegreeOverflow past kMaxPolyDegree and PolyParse for a nonzero
  /// constant term.
  static Poly term(Coefficient c, Monomial m);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void accumulate(const Monomial& m, const Coefficient& c);

  Terms terms_;
};

struct PolyGenerators {
  Poly x, y, u, v;
};

PolyGenerators generators();

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_neg(const Poly& p);
Poly poly_mul(const Poly& p, const Poly& q);

/// "2*x^2*u - y*v + 3*x"; whitespace-insensitive. The lone literal "0" is the
/// zero polynomial; any other constant term is rejected with PolyParse.
Poly parse_poly(std::string_view text);
std::string to_string(const Poly& p);

/// Images of x, y, u, v.
using ActionImages = std::array<Endo, 4>;

/// λ(p): monomials become compositions of images, integer coefficients act
/// as repeated sums. Throws ImagesNotSpecial / ImagesNotCommuting.
Endo evaluate(const Poly& p, const ActionImages& images, const LoopTable& l);
Endo evaluate(const Poly& p, const ActionImages& images, const EndoContext& ctx);

/// Same substitution without the image checks; terms are summed in grlex
/// order so the result is deterministic even for invalid images.
Endo evaluate_unchecked(const Poly& p, const ActionImages& images, const EndoContext& ctx);

}  // namespace fqloop
