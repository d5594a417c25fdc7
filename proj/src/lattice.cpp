#include "acg/lattice.hpp"

#include <algorithm>
#include <limits>

#include "acg/errors.hpp"

namespace acg {

namespace detail {
std::vector<Index> close_set(const FiniteGroup& g, std::span<const Index> gens);
std::vector<Index> normal_close_set(const FiniteGroup& g, std::span<const Index> seed);
} // namespace detail

namespace {
constexpr ClosureLattice::Id kUnset = std::numeric_limits<ClosureLattice::Id>::max();
}

ClosureLattice::ClosureLattice(GroupPtr group, Kind kind, std::vector<Index> alphabet, int depth)
  : group_(std::move(group)), kind_(kind), alphabet_(std::move(alphabet)), depth_(depth)
{
  if (depth < 0)
    throw PreconditionError("lattice depth must be non-negative");
  letter_closure_.assign(alphabet_.size(), kUnset);
  intern({0}, {});

  std::vector<Id> frontier{trivial()};
  for (int d = 0; d < depth_; ++d) {
    std::vector<Id> next;
    for (Id id : frontier) {
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        const std::size_t before = members_.size();
        const Id to = compute_step(id, l);
        transitions_[std::size_t{id} * alphabet_.size() + l] = to;
        if (members_.size() > before) {
          // compute_step may intern helper closures too; everything new is
          // at most one level deeper.
          for (std::size_t fresh = before; fresh < members_.size(); ++fresh)
            next.push_back(static_cast<Id>(fresh));
        }
      }
    }
    frontier = std::move(next);
  }
}

ClosureLattice::Id ClosureLattice::intern(std::vector<Index> sorted_members, std::vector<Index> gens)
{
  auto [it, inserted] = by_members_.try_emplace(sorted_members, static_cast<Id>(members_.size()));
  if (!inserted)
    return it->second;
  std::vector<std::uint8_t> mask(group_->order(), 0);
  for (Index x : sorted_members)
    mask[x] = 1;
  masks_.push_back(std::move(mask));
  members_.push_back(std::move(sorted_members));
  gens_.push_back(std::move(gens));
  transitions_.resize(members_.size() * alphabet_.size(), kUnset);
  return it->second;
}

ClosureLattice::Id ClosureLattice::compute_step(Id id, std::size_t letter)
{
  const Index x = alphabet_[letter];
  if (masks_[id][x])
    return id;

  std::vector<Index> gens = gens_[id];
  gens.push_back(x);
  if (kind_ == Kind::subgroup) {
    std::vector<Index> closed = detail::close_set(*group_, gens);
    return intern(std::move(closed), std::move(gens));
  }

  Id single = letter_closure_[letter];
  if (single == kUnset) {
    const Index seed[] = {x};
    single = intern(detail::normal_close_set(*group_, seed), {x});
    letter_closure_[letter] = single;
  }
  if (id == trivial())
    return single;
  const auto key = std::minmax(id, single);
  if (auto it = joins_.find(key); it != joins_.end())
    return it->second;

  // Join of two normal subgroups is their product set.
  std::vector<std::uint8_t> mark(group_->order(), 0);
  std::vector<Index> product;
  for (Index a : members_[id])
    for (Index b : members_[single]) {
      const Index c = group_->mul(a, b);
      if (!mark[c]) {
        mark[c] = 1;
        product.push_back(c);
      }
    }
  std::sort(product.begin(), product.end());
  const Id joined = intern(std::move(product), std::move(gens));
  joins_.emplace(key, joined);
  return joined;
}

std::optional<ClosureLattice::Id> ClosureLattice::find(const std::vector<Index>& sorted_members) const
{
  if (auto it = by_members_.find(sorted_members); it != by_members_.end())
    return it->second;
  return std::nullopt;
}

ClosureLattice::Id ClosureLattice::fold(std::span<const std::uint32_t> letters) const
{
  if (static_cast<int>(letters.size()) > depth_)
    throw PreconditionError("tuple longer than lattice depth");
  Id id = trivial();
  for (auto l : letters)
    id = step(id, l);
  return id;
}

namespace {

std::uint64_t census_from(const ClosureLattice& lat, int k, ClosureLattice::Id target, int pos,
                          ClosureLattice::Id id, std::uint64_t code, const std::vector<std::uint64_t>& weight,
                          std::vector<std::uint8_t>* mask)
{
  if (pos == k) {
    if (id != target)
      return 0;
    if (mask)
      (*mask)[code] = 1;
    return 1;
  }
  std::uint64_t count = 0;
  const std::size_t a = lat.alphabet().size();
  for (std::size_t l = 0; l < a; ++l)
    count += census_from(lat, k, target, pos + 1, lat.step(id, l), code + l * weight[pos], weight, mask);
  return count;
}

} // namespace

std::uint64_t census(const ClosureLattice& lattice, int k, ClosureLattice::Id target,
                     std::vector<std::uint8_t>* mask, Exec exec)
{
  if (k > lattice.depth())
    throw PreconditionError("census length exceeds lattice depth");
  const std::size_t a = lattice.alphabet().size();
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(k) + 1, 1);
  for (int i = 1; i <= k; ++i)
    weight[i] = weight[i - 1] * a;
  if (mask)
    mask->assign(weight[k], 0);
  if (k == 0)
    return census_from(lattice, 0, target, 0, ClosureLattice::trivial(), 0, weight, mask);

  if (exec == Exec::serial)
    return census_from(lattice, k, target, 0, ClosureLattice::trivial(), 0, weight, mask);

  std::uint64_t total = 0;
  const long long n = static_cast<long long>(a);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long long l = 0; l < n; ++l)
    total += census_from(lattice, k, target, 1, lattice.step(ClosureLattice::trivial(), static_cast<std::size_t>(l)),
                         static_cast<std::uint64_t>(l), weight, mask);
  return total;
}

} // namespace acg
