#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acg/element.hpp"
#include "acg/limits.hpp"
#include "acg/rng.hpp"

namespace acg {

using Index = std::uint32_t;

/// Parsed form of a group spec string, before any enumeration.
struct GroupSpec
{
  enum class Kind
  {
    sym,
    alt,
    sl2,
    abelian,
    dihedral,
    cyclic
  };

  Kind kind = Kind::cyclic;
  /// Degree for sym/alt/dihedral, prime for sl2, n for cyclic.
  std::uint32_t n = 1;
  /// Moduli for abelian.
  std::vector<std::uint32_t> moduli;
  /// Canonical text form, e.g. "sym:5" or "abelian:2,4".
  std::string text;

  /// Grammar: sym:n | alt:n | sl2:p | abelian:e1,e2,... | dihedral:n |
  /// cyclic:n. Throws SpecError.
  static GroupSpec parse(std::string_view spec);

  /// Exact group order, computed from the parameters.
  std::uint64_t expected_order() const;
  /// Default generating set S.
  std::vector<GroupElement> default_generators() const;
  GroupElement identity() const;
};

/// Fully enumerated finite group with canonical element indexing.
///
/// The identity has index 0; the other elements follow in lexicographic
/// payload order. Immutable after construction.
class FiniteGroup
{
public:
  /// Enumerates the closure of `generators` and keeps them as the group's
  /// generating set. Throws ResourceError past limits.max_group_order.
  static FiniteGroup generated_by(std::string name, std::vector<GroupElement> generators,
                                  const Limits& limits = {});

  /// Builds from a complete element list (any order, no duplicates). The
  /// list is verified closed under right multiplication by every generator
  /// and the generators are verified to generate all of it.
  static FiniteGroup from_elements(std::string name, std::vector<GroupElement> elements,
                                   std::vector<GroupElement> generators, const Limits& limits = {});

  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(Index i) const { return elements_[i]; }
  std::span<const GroupElement> elements() const { return elements_; }
  std::span<const Index> generators() const { return generators_; }
  bool has_table() const { return !table_.empty(); }

  /// Throws PreconditionError if `g` is not in the group.
  Index index_of(const GroupElement& g) const;
  std::optional<Index> find(const GroupElement& g) const;

  Index mul(Index a, Index b) const
  {
    if (!table_.empty())
      return table_[std::size_t{a} * elements_.size() + b];
    return mul_slow(a, b);
  }
  Index inv(Index a) const { return inverse_[a]; }
  /// a^w = w^-1 a w.
  Index conj(Index a, Index w) const { return mul(mul(inverse_[w], a), w); }
  Index commutator(Index a, Index b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }

  /// Degree if every element is a permutation, else 0.
  std::size_t permutation_degree() const;

private:
  FiniteGroup() = default;
  void finish(std::vector<GroupElement> generators, const Limits& limits);
  Index mul_slow(Index a, Index b) const;

  std::string name_;
  std::vector<GroupElement> elements_;
  std::vector<Index> generators_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  // Indices in payload order, for binary-search lookup.
  std::vector<Index> lookup_order_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// k-tuple of element indices; the vertex type of every graph.
struct Tuple
{
  std::vector<Index> idx;

  std::size_t size() const { return idx.size(); }
  Index operator[](std::size_t i) const { return idx[i]; }
  bool operator==(const Tuple&) const = default;
  auto operator<=>(const Tuple&) const = default;
};

/// Parses and enumerates. `cyclic:1` is the trivial group.
FiniteGroup parse_group(std::string_view spec, const Limits& limits = {});
GroupPtr make_group(std::string_view spec, const Limits& limits = {});

/// Uniform over element indices.
Index random_index(const FiniteGroup& g, Rng& rng);
GroupElement random_element(const FiniteGroup& g, Rng& rng);

/// Parses "(0 1 2)" for permutation groups or a bracketed entry list
/// "[1,0,2,1]" (matrices) / "[r1,r2]" (abelian residues). Result must lie
/// in `g`.
Index parse_element(const FiniteGroup& g, std::string_view text);

} // namespace acg
