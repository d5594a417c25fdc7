#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acg/exec.hpp"
#include "acg/lattice.hpp"
#include "acg/subgroup.hpp"

namespace acg {

enum class GraphKind
{
  full_ac,          ///< Delta_k(G,N): conjugators range over all of G
  restricted_ac,    ///< restricted Delta_k(G,S,N): conjugators from S
  nielsen,          ///< Gamma_k(G)
  extended_nielsen  ///< Gamma~_k(G): Nielsen moves plus inversions
};

std::string to_string(GraphKind kind);
/// Accepts full-ac, restricted-ac, nielsen, extended-nielsen.
GraphKind parse_graph_kind(std::string_view text);

struct GraphMode
{
  GraphKind kind = GraphKind::full_ac;
  /// Conjugator set S for restricted_ac (indices into G).
  std::vector<Index> conjugators;
  /// Restricted mode only: also emit conjugation by s^-1, making every
  /// conjugation edge two-way. Off gives the directed reading.
  bool symmetric_conjugators = true;

  static GraphMode full() { return {GraphKind::full_ac, {}, true}; }
  static GraphMode restricted(std::vector<Index> s, bool symmetric = true)
  {
    return {GraphKind::restricted_ac, std::move(s), symmetric};
  }
  static GraphMode nielsen() { return {GraphKind::nielsen, {}, true}; }
  static GraphMode extended_nielsen() { return {GraphKind::extended_nielsen, {}, true}; }
};

/// One elementary move applied to component i.
struct Move
{
  enum class Kind : std::uint8_t
  {
    right_mul, ///< x_i -> x_i x_j^sign
    left_mul,  ///< x_i -> x_j^sign x_i
    invert,    ///< x_i -> x_i^-1
    conjugate  ///< x_i -> x_i^w
  };
  Kind kind = Kind::invert;
  std::uint8_t i = 0;
  std::uint8_t j = 0;
  std::int8_t sign = 1;
  Index conjugator = 0;

  /// 1-based human form, e.g. "x1 -> x1*x2^-1" or "x2 -> x2^w".
  std::string to_string(const FiniteGroup& g) const;
};

using Code = std::uint64_t;

/// An implicit graph over k-tuples of N. Vertices are encoded mixed-radix
/// over the element indices of N (component i has weight |N|^i). Edges are
/// generated on demand; only the vertex bitmap is stored.
class GraphHandle
{
public:
  GraphHandle(GroupPtr group, Subgroup normal, int k, GraphMode mode, const Limits& limits = {},
              Exec exec = Exec::parallel);

  /// Delta_k(G,N).
  static GraphHandle delta(GroupPtr g, Subgroup n, int k, const Limits& limits = {});
  /// Delta_k(G,G).
  static GraphHandle delta(GroupPtr g, int k, const Limits& limits = {});
  /// Restricted Delta_k(G,S,N) with S = the generators of G.
  static GraphHandle restricted(GroupPtr g, Subgroup n, int k, bool symmetric = true, const Limits& limits = {});
  static GraphHandle gamma(GroupPtr g, int k, const Limits& limits = {});
  static GraphHandle gamma_extended(GroupPtr g, int k, const Limits& limits = {});

  const GroupPtr& group() const { return group_; }
  const Subgroup& normal() const { return normal_; }
  int k() const { return k_; }
  const GraphMode& mode() const { return mode_; }

  Code code_space() const { return code_space_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  bool is_vertex(Code c) const { return c < code_space_ && vertex_mask_[c] != 0; }

  Code encode(const Tuple& t) const;
  Tuple decode(Code c) const;
  bool is_vertex(const Tuple& t) const;

  /// Calls f(neighbor_code, move) for every move of vertex `c` that is not
  /// a self-loop. Duplicates are possible; neighbors() removes them.
  template <class F>
  void for_each_move(Code c, F&& f) const;

  /// Deduplicated neighbor list without self-loops. Throws
  /// PreconditionError if `v` is not a vertex.
  std::vector<Tuple> neighbors(const Tuple& v) const;
  std::vector<Code> neighbor_codes(Code c) const;

  /// All vertex codes in increasing order.
  std::vector<Code> vertex_codes() const;

  /// Local element index in N for a group index, or -1.
  std::int64_t local_of(Index g) const { return local_[g]; }
  Index global_of(std::uint32_t local) const { return normal_.members()[local]; }

  /// Tuple predicate evaluated directly (normal closure or generated
  /// subgroup), independent of the cached bitmap.
  bool vertex_predicate(const Tuple& t) const;

private:
  GroupPtr group_;
  Subgroup normal_;
  int k_;
  GraphMode mode_;
  std::size_t n_ = 0; // |N|
  Code code_space_ = 0;
  std::vector<Code> weight_;
  std::vector<std::int64_t> local_;
  std::vector<std::uint32_t> mul_;  // local product table
  std::vector<std::uint32_t> inv_;
  std::vector<Index> conj_list_;    // global conjugator indices
  std::vector<std::uint32_t> conj_; // conj_[c * n + x] = x^(conj_list_[c])
  bool inversions_ = false;
  std::vector<std::uint8_t> vertex_mask_;
  std::uint64_t vertex_count_ = 0;
};

template <class F>
void GraphHandle::for_each_move(Code c, F&& f) const
{
  std::uint32_t digit[16];
  {
    Code rest = c;
    for (int i = 0; i < k_; ++i) {
      digit[i] = static_cast<std::uint32_t>(rest % n_);
      rest /= n_;
    }
  }
  auto emit = [&](int i, std::uint32_t to, const Move& m) {
    if (to == digit[i])
      return;
    f(c + (static_cast<Code>(to) - static_cast<Code>(digit[i])) * weight_[i], m);
  };
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t xi = digit[i];
    for (int j = 0; j < k_; ++j) {
      if (i == j)
        continue;
      const std::uint32_t xj = digit[j];
      const std::uint32_t xj_inv = inv_[xj];
      const auto ii = static_cast<std::uint8_t>(i);
      const auto jj = static_cast<std::uint8_t>(j);
      emit(i, mul_[xi * n_ + xj], Move{Move::Kind::right_mul, ii, jj, 1, 0});
      emit(i, mul_[xi * n_ + xj_inv], Move{Move::Kind::right_mul, ii, jj, -1, 0});
      emit(i, mul_[xj * n_ + xi], Move{Move::Kind::left_mul, ii, jj, 1, 0});
      emit(i, mul_[xj_inv * n_ + xi], Move{Move::Kind::left_mul, ii, jj, -1, 0});
    }
    if (inversions_)
      emit(i, inv_[xi], Move{Move::Kind::invert, static_cast<std::uint8_t>(i), 0, 1, 0});
    for (std::size_t w = 0; w < conj_list_.size(); ++w)
      emit(i, conj_[w * n_ + xi], Move{Move::Kind::conjugate, static_cast<std::uint8_t>(i), 0, 1, conj_list_[w]});
  }
}

// ------------------------------------------------------------------ kernels

/// Component labelling of the whole vertex set.
struct ComponentPartition
{
  /// labels[code] = component id, or -1 for non-vertices.
  std::vector<std::int32_t> labels;
  std::vector<std::uint64_t> sizes;
  /// Smallest code in each component; components are numbered in
  /// increasing order of this code.
  std::vector<Code> representatives;

  std::size_t count() const { return sizes.size(); }
};

/// Serial path: queue BFS. Parallel path: level-synchronous BFS with an
/// atomic visited map. Both return identical partitions.
ComponentPartition components(const GraphHandle& h, Exec exec = Exec::parallel);

/// BFS distances from `source`; -1 for unreached codes.
std::vector<std::int32_t> bfs_distances(const GraphHandle& h, Code source);

/// Eccentricity of every listed source within its component.
std::vector<std::int32_t> eccentricities(const GraphHandle& h, const std::vector<Code>& sources,
                                         Exec exec = Exec::parallel);

struct DiameterOptions
{
  /// false: double-sweep lower bound only.
  bool exact = true;
  Exec exec = Exec::parallel;
};

struct DiameterResult
{
  std::int32_t value = 0;
  bool exact = true;
  /// Number of BFS runs performed.
  std::uint64_t sweeps = 0;
};

/// Diameter of the component containing `member`. Exact mode runs BFS from
/// every vertex in code order and stops once the largest eccentricity seen
/// equals the upper bound min over sources of 2*ecc.
DiameterResult diameter(const GraphHandle& h, Code member, const DiameterOptions& opts = {});

struct PathStep
{
  Move move;
  Code to;
};

struct DistanceResult
{
  std::optional<std::int32_t> distance;
  /// Moves from u to v when the distance is finite.
  std::vector<PathStep> path;
};

/// BFS shortest path; empty distance when u and v lie in different
/// components. Throws PreconditionError if either is not a vertex.
DistanceResult distance(const GraphHandle& h, const Tuple& u, const Tuple& v, bool with_path = false);

// ------------------------------------------------------- structural checks

/// Surjectivity of Delta_k(G,G) -> Delta_k(G/M,G/M) and the component
/// correspondence between the two graphs.
struct CoverReport
{
  std::uint64_t source_vertices = 0;
  std::uint64_t quotient_vertices = 0;
  std::uint64_t quotient_vertices_hit = 0;
  bool images_are_vertices = true;
  bool surjective = false;
  /// Every component of the source maps into a single quotient component.
  bool components_respected = true;
  /// For each quotient component, the source components mapping into it.
  std::vector<std::vector<std::size_t>> preimage_components;
  std::size_t source_components = 0;
  std::size_t quotient_components = 0;
};

/// Throws PreconditionError unless M is normal and G is normally generated
/// by k elements.
CoverReport cover_check(const GroupPtr& g, const Subgroup& m, int k, const Limits& limits = {},
                        Exec exec = Exec::parallel);

/// Components of Delta_k(G,G) against components of Gamma~_k(Ab(G)).
struct SolubleComponentReport
{
  std::size_t group_components = 0;
  std::size_t abelian_components = 0;
  /// Projection of every vertex is a generating tuple of Ab(G).
  bool projection_lands_in_vertices = true;
  /// Each component maps into one abelian component.
  bool components_respected = true;
  /// Distinct components map to distinct abelian components and every
  /// abelian component is hit.
  bool bijective = false;
  std::vector<std::size_t> component_map;
};

/// Throws PreconditionError if G is not soluble or not k-generated.
SolubleComponentReport soluble_component_check(const GroupPtr& g, int k, const Limits& limits = {},
                                               Exec exec = Exec::parallel);

/// Diameter of the undirected Cayley graph Cay(G, S u S^-1).
std::int32_t cayley_diameter(const FiniteGroup& g, std::span<const Index> generators);

} // namespace acg
