#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "acg/exec.hpp"
#include "acg/group.hpp"

namespace acg {

/// Memoized closures of tuples, built level by level.
///
/// Each id names a subgroup (kind = subgroup) or a normal subgroup (kind =
/// normal) reachable from {1} by adjoining at most `depth` letters of the
/// alphabet. step(id, letter) is the closure of the id's subgroup together
/// with the letter. Read-only after construction, so lookups are safe from
/// any thread.
class ClosureLattice
{
public:
  using Id = std::uint32_t;

  enum class Kind
  {
    subgroup,
    normal
  };

  ClosureLattice(GroupPtr group, Kind kind, std::vector<Index> alphabet, int depth);

  Kind kind() const { return kind_; }
  int depth() const { return depth_; }
  std::span<const Index> alphabet() const { return alphabet_; }
  std::size_t size() const { return members_.size(); }

  static constexpr Id trivial() { return 0; }
  /// Valid for ids reached in fewer than `depth` steps.
  Id step(Id id, std::size_t letter) const { return transitions_[std::size_t{id} * alphabet_.size() + letter]; }
  std::span<const Index> members(Id id) const { return members_[id]; }
  /// Id whose member set equals `sorted_members`, if reached.
  std::optional<Id> find(const std::vector<Index>& sorted_members) const;

  /// Folds a tuple given as alphabet positions.
  Id fold(std::span<const std::uint32_t> letters) const;

private:
  Id intern(std::vector<Index> sorted_members, std::vector<Index> gens);
  Id compute_step(Id id, std::size_t letter);

  GroupPtr group_;
  Kind kind_;
  std::vector<Index> alphabet_;
  int depth_;
  std::vector<std::vector<Index>> members_;
  std::vector<std::vector<std::uint8_t>> masks_;
  std::vector<std::vector<Index>> gens_;
  std::map<std::vector<Index>, Id> by_members_;
  std::vector<Id> letter_closure_;
  std::map<std::pair<Id, Id>, Id> joins_;
  std::vector<Id> transitions_;
};

/// Marks every code of the mixed-radix space alphabet^k whose fold equals
/// `target` (component i has weight |alphabet|^i). Returns the number of
/// marked codes. The serial and parallel paths fill identical masks.
std::uint64_t census(const ClosureLattice& lattice, int k, ClosureLattice::Id target,
                     std::vector<std::uint8_t>* mask, Exec exec);

} // namespace acg
