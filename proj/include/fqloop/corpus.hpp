#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fqloop/cayley.hpp"
#include "fqloop/equivalence.hpp"
#include "fqloop/structure.hpp"

namespace fqloop {

struct NamedLoop {
  std::string name;
  LoopTable loop;
};

struct NamedQuasigroup {
  std::string name;
  QuasigroupTable table;
};

LoopTable cyclic(std::size_t n);
/// (a, b) is encoded as a * |B| + b.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);
/// Closure of the generators under composition; the identity is element 0.
LoopTable permutation_group(const std::vector<Permutation>& generators);
LoopTable quaternion_group();

/// z1..z9, z2xz2, z2xz2xz2, z4xz2, z3xz3, s3, d4, q8, s3xz3. Throws
/// ConstructionInvalid if any table fails to be a group.
std::vector<NamedLoop> group_tables();

/// Z3^4 with (a,b,c,d) + (a',b',c',d') = (a+a', b+b', c+c', d+d' + (a-a')(bc'-b'c)).
/// Verifies commutative, Moufang, nonassociative, exponent 3 and NK before
/// returning; throws ConstructionInvalid otherwise.
LoopTable cml81();

/// The Chein extension M(G, 2) of a group G; Moufang, and nonassociative
/// whenever G is nonabelian. (g, b) is encoded as g + b * |G|.
LoopTable chein_loop(const LoopTable& group);

/// x·y = a x + b y + c over Z_n. Throws NotLatin unless a, b are units.
QuasigroupTable linear_fq(std::size_t n, long long a, long long b, long long c);

/// All (f, g, e) with f, g ∈ Aut(L) commuting and satisfying condition (F),
/// e ∈ N(L); ordered by f, then g, then e, and truncated at `cap`.
std::vector<ArithmeticForm> enumerate_forms(const LoopTable& l, std::size_t cap,
                                            std::size_t node_cap = kDefaultNodeCap);

/// Every Latin square of order n in lexicographic order of the cell vector.
/// Returning false from the callback stops the scan.
void for_each_latin_square(std::size_t n, const std::function<bool(const QuasigroupTable&)>& visit);

struct FSearchResult {
  std::size_t latin_squares = 0;
  std::vector<QuasigroupTable> f_quasigroups;

  std::vector<PointedFQ> pointed() const;
};

/// Full scan of the order-n Latin squares (n <= 5). The work is split over
/// first-two-row prefixes; results do not depend on `jobs`.
FSearchResult scan_f_quasigroups(std::size_t n, unsigned jobs = 1);
std::vector<PointedFQ> search_f_quasigroups(std::size_t n, unsigned jobs = 1);

/// First loop of order n, over reduced Latin squares in lexicographic order,
/// satisfying `pred`.
std::optional<LoopTable> first_loop_where(std::size_t n, const std::function<bool(const LoopTable&)>& pred);

/// Groups, linear quasigroups over Z_n and an F-quasigroup over a nonabelian
/// group; with `include_slow`, also one built over CML81.
std::vector<NamedQuasigroup> f_quasigroup_corpus(bool include_slow);

/// Writes <name>.tbl for every group, cml81, chein-s3 and the linear examples
/// (z5-2x3y.tbl carries "point 0"). Returns the written paths.
std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir);

}  // namespace fqloop
