#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqloop/error.hpp"

namespace fqloop {

using Element = std::uint32_t;
inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// Ascending list of carrier indices.
using Subset = std::vector<Element>;

/// A finite quasigroup stored as a dense row-major Cayley table over 0..n-1.
/// Division tables and the alpha/beta maps are derived once at construction,
/// after which the object is immutable.
class QuasigroupTable {
 public:
  /// Validates the table; throws AlgebraError(Malformed | NotLatin).
  QuasigroupTable(std::size_t order, std::vector<Element> cells);

  static QuasigroupTable from_rows(const std::vector<std::vector<Element>>& rows);

  template <class Op>
  static QuasigroupTable from_operation(std::size_t order, Op&& op) {
    std::vector<Element> cells(order * order);
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y)
        cells[x * order + y] = static_cast<Element>(op(static_cast<Element>(x), static_cast<Element>(y)));
    return QuasigroupTable(order, std::move(cells));
  }

  std::size_t order() const noexcept { return n_; }
  Element op(Element x, Element y) const noexcept { return cells_[x * n_ + y]; }
  /// The unique x with a·x = b.
  Element left_div(Element a, Element b) const noexcept { return ldiv_[a * n_ + b]; }
  /// The unique y with y·a = b.
  Element right_div(Element b, Element a) const noexcept { return rdiv_[b * n_ + a]; }
  Element alpha(Element x) const noexcept { return alpha_[x]; }
  Element beta(Element x) const noexcept { return beta_[x]; }

  std::span<const Element> cells() const noexcept { return cells_; }
  std::span<const Element> row(Element x) const noexcept { return {cells_.data() + x * n_, n_}; }
  const std::vector<Element>& alpha_map() const noexcept { return alpha_; }
  const std::vector<Element>& beta_map() const noexcept { return beta_; }

  friend bool operator==(const QuasigroupTable& a, const QuasigroupTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  std::vector<Element> alpha_;
  std::vector<Element> beta_;
};

/// A quasigroup with a two-sided neutral element, written additively.
/// Nucleus, Moufang center and center are computed eagerly.
class LoopTable {
 public:
  /// Throws AlgebraError(NotLoop) when no neutral element exists.
  explicit LoopTable(QuasigroupTable base);

  const QuasigroupTable& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return base_.order(); }
  Element zero() const noexcept { return zero_; }
  Element add(Element x, Element y) const noexcept { return base_.op(x, y); }
  /// a \ b, the unique x with a + x = b.
  Element left_sub(Element a, Element b) const noexcept { return base_.left_div(a, b); }
  /// b / a, the unique y with y + a = b.
  Element right_sub(Element b, Element a) const noexcept { return base_.right_div(b, a); }

  bool has_neg(Element x) const noexcept { return neg_[x] != kNoElement; }
  /// Two-sided inverse; throws NotDiassociative when left and right inverses differ.
  Element neg(Element x) const;

  const Subset& nucleus() const noexcept { return nucleus_; }
  const Subset& moufang_center() const noexcept { return moufang_center_; }
  const Subset& center() const noexcept { return center_; }
  bool in_nucleus(Element x) const noexcept { return in_n_[x] != 0; }
  bool in_moufang_center(Element x) const noexcept { return in_k_[x] != 0; }
  bool in_center(Element x) const noexcept { return in_n_[x] != 0 && in_k_[x] != 0; }

  friend bool operator==(const LoopTable& a, const LoopTable& b) { return a.base_ == b.base_; }

 private:
  QuasigroupTable base_;
  Element zero_ = 0;
  std::vector<Element> neg_;
  Subset nucleus_, moufang_center_, center_;
  std::vector<std::uint8_t> in_n_, in_k_;
};

/// Contents of a table file: leading comment lines, the table and an optional point.
struct TableFile {
  std::vector<std::string> comments;
  QuasigroupTable table;
  std::optional<Element> point;
};

QuasigroupTable parse_table(std::string_view text);
TableFile parse_table_file(std::string_view text);
std::string serialize_table(const QuasigroupTable& q, std::optional<Element> point = std::nullopt);
std::string serialize_table_file(const TableFile& file);

/// Writes just the "n" line and n rows, no trailing point line.
void write_table_rows(std::string& out, const QuasigroupTable& q);

struct AlphaBeta {
  std::vector<Element> alpha;
  std::vector<Element> beta;
};
AlphaBeta alpha_beta(const QuasigroupTable& q);

enum class FLaw { Left, Right };

struct TripleWitness {
  Element x, y, z;
};

struct FLawResult {
  bool holds = true;
  std::optional<TripleWitness> witness;
  FLaw failed_law = FLaw::Left;
};

/// Left law x·yz = xy·α(x)z and right law zy·x = zβ(x)·yx, scanned over all
/// triples in lexicographic (x, y, z) order; the witness is the least failure.
FLawResult is_f_quasigroup(const QuasigroupTable& q);

std::optional<Element> find_neutral(const QuasigroupTable& q);
bool is_commutative(const QuasigroupTable& q);

struct IdentityResult {
  bool holds = true;
  std::optional<TripleWitness> witness;
};

IdentityResult is_associative(const QuasigroupTable& q);
/// ((x + y) + x) + z = x + (y + (x + z)) over all triples.
IdentityResult is_moufang(const LoopTable& l);

enum class DiassocMode {
  Auto,    ///< Moufang scan first; fall back to the direct pair scan.
  Direct,  ///< Always run the pair scan.
};

bool is_diassociative(const LoopTable& l, DiassocMode mode = DiassocMode::Auto);

/// m-fold sum of x (of neg(x) when m < 0). Left and right bracketings are both
/// evaluated; a mismatch throws NotDiassociative.
Element power(const LoopTable& l, Element x, long long m);

/// Length of the cycle of R_x through zero; the additive order of x in a
/// power-associative loop.
std::size_t element_order(const LoopTable& l, Element x);
/// lcm of all element orders.
std::size_t exponent(const LoopTable& l);

}  // namespace fqloop
