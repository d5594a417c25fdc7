#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "acg/exec.hpp"
#include "acg/group.hpp"
#include "acg/subgroup.hpp"

namespace acg {

/// The ambient group as seen by a sampler: arithmetic on payloads plus a
/// uniform element source. Enumerated groups draw by index; sym:n and alt:n
/// are sampled structurally so they need not be enumerated.
class WalkGroup
{
public:
  enum class Source
  {
    enumerated,
    symmetric,
    alternating
  };

  static WalkGroup enumerated(GroupPtr g);
  static WalkGroup symmetric(std::size_t degree);
  static WalkGroup alternating(std::size_t degree);
  /// Structural for sym/alt, enumerated otherwise.
  static WalkGroup from_spec(const GroupSpec& spec, const Limits& limits = {});

  Source source() const { return source_; }
  const GroupPtr& group() const { return group_; }
  const std::string& name() const { return name_; }
  const GroupElement& identity() const { return identity_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Permutation degree, 0 for other realizations.
  std::size_t degree() const { return degree_; }
  /// |G| as a decimal string (n! can exceed 64 bits).
  std::string order_text() const;
  bool contains(const GroupElement& x) const;

  GroupElement random(Rng& rng) const;
  /// Parses an element in the notation of parse_element.
  GroupElement parse(std::string_view text) const;

private:
  Source source_ = Source::enumerated;
  GroupPtr group_;
  std::string name_;
  GroupElement identity_;
  std::vector<GroupElement> generators_;
  std::size_t degree_ = 0;
};

/// Membership test for the target subgroup N of a walk.
using Membership = std::function<bool(const GroupElement&)>;

enum class WalkKind
{
  acr, ///< AC replacement on Delta_k(G,N)
  pra  ///< product replacement on Gamma_k(G)
};

struct ConjugatorSource
{
  enum class Kind
  {
    uniform,
    random_word
  };
  Kind kind = Kind::uniform;
  /// Word length L over S u S^-1 when kind = random_word.
  int length = 10;
};

struct WalkConfig
{
  WalkKind kind = WalkKind::acr;
  int k = 2;
  std::uint64_t budget = 0;
  bool cumulative = false;
  ConjugatorSource conjugators;
  /// ACR only: probability of the conjugated branch.
  double conjugated_probability = 0.5;
  /// ACR only: also take inversion and pure conjugation steps.
  bool full_move_set = false;
};

struct WalkState
{
  std::vector<GroupElement> tuple;
  GroupElement cumulative;
  std::uint64_t steps = 0;
  Rng rng;
};

WalkState start_walk(const WalkGroup& g, std::vector<GroupElement> init, std::uint64_t seed);

/// One step of the AC-replacement walk. Picks i != j uniformly. With
/// probability 1 - conjugated_probability applies x_i -> x_i x_j^+-1 or
/// x_j^+-1 x_i, otherwise the same with x_j replaced by x_j^w for a fresh w.
/// With full_move_set, a quarter of the steps each are plain, conjugated,
/// x_i -> x_i^-1 and x_i -> x_i^w. Throws PreconditionError if k < 2.
void acr_step(WalkState& state, const WalkConfig& cfg, const WalkGroup& g);
/// Nielsen moves only.
void pra_step(WalkState& state, const WalkConfig& cfg, const WalkGroup& g);

/// Runs cfg.budget steps and returns a uniformly chosen component, or the
/// cumulative product when cfg.cumulative. `in_n` checks the init.
GroupElement acr_sample(const WalkGroup& g, const Membership& in_n, const std::vector<GroupElement>& init,
                        const WalkConfig& cfg, Rng& rng);
GroupElement pra_sample(const WalkGroup& g, const std::vector<GroupElement>& init, const WalkConfig& cfg, Rng& rng);

/// Enumerated-group overloads that validate the init tuple exactly:
/// acr needs ncl(init) = N, pra needs <init> = G.
GroupElement acr_sample(const GroupPtr& g, const Subgroup& n, const Tuple& init, const WalkConfig& cfg, Rng& rng);
GroupElement pra_sample(const GroupPtr& g, const Tuple& init, const WalkConfig& cfg, Rng& rng);

/// Nearest-neighbour walk on Cay(N, y_1^G u ... u y_k^G) from the identity;
/// each step multiplies by a uniform element of the union.
GroupElement cayley_class_walk(const GroupPtr& g, const Subgroup& n, const Tuple& seeds, std::uint64_t budget,
                               Rng& rng);

/// k*n*ceil(log2 n) for degree-n permutation groups, otherwise
/// 4*k*ceil(log2 |N|).
std::uint64_t default_budget(int k, std::size_t degree, std::uint64_t normal_order);

/// Independent walks from the same init, one per sample. Sample i uses
/// Rng(seed).split(i), so the output does not depend on the thread count.
std::vector<GroupElement> sample_batch(const WalkGroup& g, const std::vector<GroupElement>& init,
                                       const WalkConfig& cfg, std::uint64_t count, std::uint64_t seed,
                                       Exec exec = Exec::parallel);

struct MixingReport
{
  std::uint64_t samples = 0;
  std::uint64_t support = 0;
  Rational tv_distance;
  double chi_squared = 0;
  int dof = 0;
  double critical95 = 0;
  bool pass95 = false;
  /// Samples outside the subgroup (always 0 for a correct walker).
  std::uint64_t outside = 0;
};

/// Histogram of samples over the members of N against the uniform
/// distribution. Throws PreconditionError on an empty sample.
MixingReport mixing_diagnostic(const std::vector<GroupElement>& samples, const Subgroup& n);

} // namespace acg
