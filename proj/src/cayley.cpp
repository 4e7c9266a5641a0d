#include "fqloop/cayley.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace fqloop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NotLoop: return "NotLoop";
    case ErrorKind::NotDiassociative: return "NotDiassociative";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::NotNKLoop: return "NotNKLoop";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::ConditionFViolated: return "ConditionFViolated";
    case ErrorKind::ImagesNotCommuting: return "ImagesNotCommuting";
    case ErrorKind::ImagesNotSpecial: return "ImagesNotSpecial";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::PolyParse: return "PolyParse";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::NotInClassM: return "NotInClassM";
    case ErrorKind::NotNuclearlyPointed: return "NotNuclearlyPointed";
    case ErrorKind::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

QuasigroupTable::QuasigroupTable(std::size_t order, std::vector<Element> cells)
    : n_(order), cells_(std::move(cells)) {
  if (n_ == 0) throw AlgebraError(ErrorKind::Malformed, "order must be positive");
  if (cells_.size() != n_ * n_)
    throw AlgebraError(ErrorKind::Malformed, "table has " + std::to_string(cells_.size()) +
                                                 " cells, expected " + std::to_string(n_ * n_));
  for (Element c : cells_)
    if (c >= n_) throw AlgebraError(ErrorKind::Malformed, "entry " + std::to_string(c) + " out of range");

  ldiv_.assign(n_ * n_, kNoElement);
  rdiv_.assign(n_ * n_, kNoElement);
  for (Element a = 0; a < n_; ++a) {
    for (Element x = 0; x < n_; ++x) {
      const Element b = op(a, x);
      if (ldiv_[a * n_ + b] != kNoElement)
        throw AlgebraError(ErrorKind::NotLatin, "row " + std::to_string(a) + " repeats entry " + std::to_string(b));
      ldiv_[a * n_ + b] = x;
      // Row index a is the left factor; here x plays the right factor for rdiv.
      const Element c = op(x, a);
      if (rdiv_[c * n_ + a] != kNoElement)
        throw AlgebraError(ErrorKind::NotLatin,
                           "column " + std::to_string(a) + " repeats entry " + std::to_string(c));
      rdiv_[c * n_ + a] = x;
    }
  }
  alpha_.resize(n_);
  beta_.resize(n_);
  for (Element x = 0; x < n_; ++x) {
    alpha_[x] = left_div(x, x);
    beta_[x] = right_div(x, x);
  }
}

QuasigroupTable QuasigroupTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> cells;
  cells.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw AlgebraError(ErrorKind::Malformed, "table is not square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return QuasigroupTable(rows.size(), std::move(cells));
}

namespace {

std::vector<Element> compute_subset(std::size_t n, auto&& member) {
  std::vector<Element> out;
  for (Element a = 0; a < n; ++a)
    if (member(a)) out.push_back(a);
  return out;
}

}  // namespace

LoopTable::LoopTable(QuasigroupTable base) : base_(std::move(base)) {
  const auto z = find_neutral(base_);
  if (!z) throw AlgebraError(ErrorKind::NotLoop, "no neutral element");
  zero_ = *z;
  const std::size_t n = order();

  neg_.assign(n, kNoElement);
  for (Element x = 0; x < n; ++x) {
    const Element r = left_sub(x, zero_);
    if (right_sub(zero_, x) == r) neg_[x] = r;
  }

  nucleus_ = compute_subset(n, [&](Element a) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (add(add(a, x), y) != add(a, add(x, y))) return false;
        if (add(add(x, a), y) != add(x, add(a, y))) return false;
        if (add(add(x, y), a) != add(x, add(y, a))) return false;
      }
    return true;
  });
  moufang_center_ = compute_subset(n, [&](Element a) {
    const Element aa = add(a, a);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (add(aa, add(x, y)) != add(add(a, x), add(a, y))) return false;
    return true;
  });
  in_n_.assign(n, 0);
  in_k_.assign(n, 0);
  for (Element a : nucleus_) in_n_[a] = 1;
  for (Element a : moufang_center_) in_k_[a] = 1;
  std::set_intersection(nucleus_.begin(), nucleus_.end(), moufang_center_.begin(), moufang_center_.end(),
                        std::back_inserter(center_));
}

Element LoopTable::neg(Element x) const {
  if (neg_[x] == kNoElement)
    throw AlgebraError(ErrorKind::NotDiassociative,
                       "element " + std::to_string(x) + " has distinct left and right inverses");
  return neg_[x];
}

// ---------------------------------------------------------------------------
// Table file format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view tok) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw AlgebraError(ErrorKind::Malformed, "bad integer '" + std::string(tok) + "'");
  return v;
}

}  // namespace

TableFile parse_table_file(std::string_view text) {
  std::vector<std::string> comments;
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    const std::string_view line = trim(raw);
    if (!line.empty()) {
      if (line.front() == '#')
        comments.emplace_back(line);
      else
        lines.push_back(line);
    }
    pos = nl + 1;
  }
  if (lines.empty()) throw AlgebraError(ErrorKind::Malformed, "missing order line");
  const std::size_t n = parse_index(lines[0]);
  if (n == 0) throw AlgebraError(ErrorKind::Malformed, "order must be positive");
  if (lines.size() < n + 1) throw AlgebraError(ErrorKind::Malformed, "expected " + std::to_string(n) + " rows");

  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto toks = split_ws(lines[r + 1]);
    if (toks.size() != n)
      throw AlgebraError(ErrorKind::Malformed, "row " + std::to_string(r) + " has " + std::to_string(toks.size()) +
                                                   " entries, expected " + std::to_string(n));
    for (auto t : toks) {
      const std::size_t v = parse_index(t);
      if (v >= n) throw AlgebraError(ErrorKind::Malformed, "entry " + std::to_string(v) + " out of range");
      cells.push_back(static_cast<Element>(v));
    }
  }

  std::optional<Element> point;
  std::size_t next = n + 1;
  if (next < lines.size()) {
    const auto toks = split_ws(lines[next]);
    if (toks.size() == 2 && toks[0] == "point") {
      const std::size_t k = parse_index(toks[1]);
      if (k >= n) throw AlgebraError(ErrorKind::Malformed, "point out of range");
      point = static_cast<Element>(k);
      ++next;
    }
  }
  if (next != lines.size()) throw AlgebraError(ErrorKind::Malformed, "trailing content after table");

  return TableFile{std::move(comments), QuasigroupTable(n, std::move(cells)), point};
}

QuasigroupTable parse_table(std::string_view text) { return parse_table_file(text).table; }

void write_table_rows(std::string& out, const QuasigroupTable& q) {
  const std::size_t n = q.order();
  out += std::to_string(n);
  out += '\n';
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y) out += ' ';
      out += std::to_string(q.op(x, y));
    }
    out += '\n';
  }
}

std::string serialize_table(const QuasigroupTable& q, std::optional<Element> point) {
  std::string out;
  write_table_rows(out, q);
  if (point) out += "point " + std::to_string(*point) + "\n";
  return out;
}

std::string serialize_table_file(const TableFile& file) {
  std::string out;
  for (const auto& c : file.comments) out += c + "\n";
  out += serialize_table(file.table, file.point);
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

AlphaBeta alpha_beta(const QuasigroupTable& q) { return {q.alpha_map(), q.beta_map()}; }

FLawResult is_f_quasigroup(const QuasigroupTable& q) {
  const std::size_t n = q.order();
  for (Element x = 0; x < n; ++x) {
    const Element ax = q.alpha(x);
    const Element bx = q.beta(x);
    for (Element y = 0; y < n; ++y) {
      const Element xy = q.op(x, y);
      for (Element z = 0; z < n; ++z) {
        if (q.op(x, q.op(y, z)) != q.op(xy, q.op(ax, z))) return {false, TripleWitness{x, y, z}, FLaw::Left};
        // right law with the roles (z, y, x): zy·x = zβ(x)·yx
        if (q.op(q.op(z, y), x) != q.op(q.op(z, bx), q.op(y, x)))
          return {false, TripleWitness{x, y, z}, FLaw::Right};
      }
    }
  }
  return {};
}

std::optional<Element> find_neutral(const QuasigroupTable& q) {
  const std::size_t n = q.order();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = q.op(e, x) == x && q.op(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_commutative(const QuasigroupTable& q) {
  const std::size_t n = q.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (q.op(x, y) != q.op(y, x)) return false;
  return true;
}

IdentityResult is_associative(const QuasigroupTable& q) {
  const std::size_t n = q.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = q.op(x, y);
      for (Element z = 0; z < n; ++z)
        if (q.op(xy, z) != q.op(x, q.op(y, z))) return {false, TripleWitness{x, y, z}};
    }
  return {};
}

IdentityResult is_moufang(const LoopTable& l) {
  const std::size_t n = l.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xyx = l.add(l.add(x, y), x);
      for (Element z = 0; z < n; ++z)
        if (l.add(xyx, z) != l.add(x, l.add(y, l.add(x, z)))) return {false, TripleWitness{x, y, z}};
    }
  return {};
}

namespace {

std::vector<Element> close_pair(const LoopTable& l, Element a, Element b) {
  const std::size_t n = l.order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Element> members{l.zero()};
  in[l.zero()] = 1;
  for (Element g : {a, b})
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  // Finite: closure under + is a subloop.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element s : {l.add(members[i], members[j]), l.add(members[j], members[i])})
        if (!in[s]) {
          in[s] = 1;
          members.push_back(s);
        }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

bool is_diassociative(const LoopTable& l, DiassocMode mode) {
  if (mode == DiassocMode::Auto && is_moufang(l).holds) return true;
  const std::size_t n = l.order();
  std::set<std::vector<Element>> verified;
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) {
      auto sub = close_pair(l, a, b);
      if (verified.contains(sub)) continue;
      for (Element x : sub)
        for (Element y : sub) {
          const Element xy = l.add(x, y);
          for (Element z : sub)
            if (l.add(xy, z) != l.add(x, l.add(y, z))) return false;
        }
      verified.insert(std::move(sub));
    }
  return true;
}

Element power(const LoopTable& l, Element x, long long m) {
  Element base = x;
  if (m < 0) {
    base = l.neg(x);
    m = -m;
  }
  Element left = l.zero();
  Element right = l.zero();
  for (long long i = 0; i < m; ++i) {
    left = l.add(left, base);
    right = l.add(base, right);
  }
  if (left != right)
    throw AlgebraError(ErrorKind::NotDiassociative,
                       "bracketings of " + std::to_string(m) + "*" + std::to_string(x) + " disagree");
  return left;
}

std::size_t element_order(const LoopTable& l, Element x) {
  std::size_t k = 1;
  for (Element s = x; s != l.zero(); s = l.add(s, x)) ++k;
  return k;
}

std::size_t exponent(const LoopTable& l) {
  std::size_t e = 1;
  for (Element x = 0; x < l.order(); ++x) e = std::lcm(e, element_order(l, x));
  return e;
}

}  // namespace fqloop
