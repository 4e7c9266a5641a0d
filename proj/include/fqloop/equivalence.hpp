#pragma once

#include <optional>
#include <vector>

#include "fqloop/cayley.hpp"
#include "fqloop/endo.hpp"
#include "fqloop/genmodule.hpp"
#include "fqloop/report.hpp"

namespace fqloop {

/// x·y = (f(x) + e) + g(y) over an NK-loop.
struct ArithmeticForm {
  LoopTable loop;
  Endo f;
  Endo g;
  Element e;

  friend bool operator==(const ArithmeticForm&, const ArithmeticForm&) = default;
};

struct PointedFQ {
  QuasigroupTable q;
  Element point;

  friend bool operator==(const PointedFQ&, const PointedFQ&) = default;
};

/// One row per condition: NK loop, f and g automorphisms, fg = gf, e ∈ N,
/// x + f(x), x + g(x) ∈ N and -x + f(x), -x + g(x) ∈ K.
Report verify_form(const ArithmeticForm& form);

/// Throws InvalidForm naming the first violated condition.
QuasigroupTable build_fq(const ArithmeticForm& form);

struct RecoveredForm {
  ArithmeticForm form;
  /// The principal isotope x∘y = (x/u)·(v\y) with v·u = point.
  Element u;
  Element v;
};

/// Every verified form obtained from a principal isotope with neutral
/// element at the point, ordered by u. Throws NoneFound when empty.
std::vector<RecoveredForm> recover_form(const PointedFQ& p);

/// Uses the first recovered form unless `form` is given; a supplied form must
/// have its zero at the point and rebuild the table (InvalidForm otherwise).
PointedGenModule rho(const PointedFQ& p, const std::optional<ArithmeticForm>& form = std::nullopt);

struct SigmaResult {
  PointedFQ fq;
  ArithmeticForm form;
};

/// Throws NotInClassM or NotNuclearlyPointed on inputs outside the class.
SigmaResult sigma_with_form(const PointedGenModule& pm);
PointedFQ sigma(const PointedGenModule& pm);

struct RoundTrip {
  bool identical = true;
  Json first_difference;  // null when identical
};

RoundTrip roundtrip_fq(const PointedFQ& p);
RoundTrip roundtrip_module(const PointedGenModule& pm);

/// For each recovered form: point ∈ M(Q) iff e ∈ Z(loop).
Report check_fm_mc(const PointedFQ& p);

Json to_json(const ArithmeticForm& form);

}  // namespace fqloop
