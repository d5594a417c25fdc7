#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acg/exec.hpp"
#include "acg/group.hpp"

namespace acg {

using Rational = boost::multiprecision::cpp_rational;

/// Subgroup of an enumerated group, held as a sorted index set.
class Subgroup
{
public:
  /// `members` must be a subgroup of `ambient`; normality is computed.
  Subgroup(GroupPtr ambient, std::vector<Index> members);

  static Subgroup whole(GroupPtr ambient);
  static Subgroup trivial(GroupPtr ambient);

  const GroupPtr& ambient() const { return ambient_; }
  std::span<const Index> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index g) const { return mask_[g] != 0; }
  bool is_normal() const { return normal_; }
  bool is_whole() const { return members_.size() == ambient_->order(); }
  bool is_trivial() const { return members_.size() == 1; }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

private:
  GroupPtr ambient_;
  std::vector<Index> members_;
  std::vector<std::uint8_t> mask_;
  bool normal_ = false;
};

/// Smallest subgroup containing `seed`; the empty seed gives {1}.
Subgroup closure(const GroupPtr& g, std::span<const Index> seed);
/// Smallest normal subgroup containing `seed`.
Subgroup normal_closure(const GroupPtr& g, std::span<const Index> seed);
inline Subgroup normal_closure(const GroupPtr& g, const Tuple& t) { return normal_closure(g, t.idx); }

/// [G,G], the closure of all commutators a^-1 b^-1 a b.
Subgroup derived_subgroup(const GroupPtr& g);
/// Terms of the derived series down to the point where it stabilizes.
std::vector<Subgroup> derived_series(const GroupPtr& g);
/// Derived series reaches {1}.
bool is_soluble(const GroupPtr& g);

/// G/M realized as the permutation action of G on the cosets of M, so the
/// quotient is a concrete permutation group of degree |G:M|.
struct Quotient
{
  GroupPtr group;
  /// Index in `group` of the image of each element of the ambient group.
  std::vector<Index> projection;
};

/// Throws PreconditionError if M is not normal and ResourceError if |G:M|
/// exceeds the maximum permutation degree.
Quotient quotient(const GroupPtr& g, const Subgroup& m, const Limits& limits = {});

/// Ab(G) = G/[G,G] in invariant-factor form e1 | e2 | ... | er.
struct AbelianStructure
{
  std::vector<std::uint32_t> invariant_factors;
  /// Image of each element of G in Z_e1 x ... x Z_er.
  std::vector<AbelianTuple> projection;
  /// The abelian group itself (`abelian:e1,...` or the trivial group).
  GroupPtr group;
  /// projection[i] as an index into `group`.
  std::vector<Index> projection_index;
};

AbelianStructure abelianization(const GroupPtr& g, const Limits& limits = {});

/// Conjugacy classes, each sorted, ordered by smallest member. The class of
/// the identity comes first.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);

/// cn(G): least n with C^n = G for every nontrivial class; or(G): least n
/// with C^n = G for some class. Empty when no such n exists (for instance
/// when some class lies in a proper normal subgroup).
struct CoveringNumbers
{
  std::optional<int> cn;
  std::optional<int> ore;
  /// Per nontrivial class: least n with C^n = G, or empty.
  std::vector<std::optional<int>> per_class;
};

CoveringNumbers covering_numbers(const FiniteGroup& g);

/// All normal subgroups, ordered by size then members.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

/// nd(G): fewest normal generators. nd_m(G): largest size of a minimal
/// normal generating set. The trivial group gives (0, 0).
struct NdPair
{
  int nd = 0;
  int nd_m = 0;
};

/// Exhaustive over minimal normal generating sets. A minimal set never holds
/// two elements with the same normal closure, so the search runs over the
/// distinct normal closures of single elements. Throws ResourceError when
/// |G| > limits.max_nd_order.
NdPair nd_pair(const GroupPtr& g, const Limits& limits = {});

/// Exact |V_k(G,G)| / |G|^k by exhaustive census.
Rational psi_k(const GroupPtr& g, int k, const Limits& limits = {}, Exec exec = Exec::parallel);
/// |V_k(G,G)|, the number of k-tuples normally generating G.
std::uint64_t normal_generating_tuple_count(const GroupPtr& g, int k, const Limits& limits = {},
                                            Exec exec = Exec::parallel);

/// Searches M^k for (g1 m1, ..., gk mk) normally generating G. Returns
/// nullopt only if the search is exhausted. Throws PreconditionError when M
/// is not normal, when the images of g do not normally generate G/M, or when
/// G is not normally generated by k elements.
std::optional<Tuple> mazurov_lift(const GroupPtr& g, const Subgroup& m, const Tuple& t,
                                  const Limits& limits = {});

} // namespace acg
