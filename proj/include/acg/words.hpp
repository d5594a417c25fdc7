#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acg/graph.hpp"

namespace acg {

/// Word in a free group. Letter g+1 is generator g, -(g+1) its inverse.
struct Word
{
  std::vector<int> letters;
  bool reduced = true;

  /// Lowercase letters are generators (positions in `alphabet`), uppercase
  /// their inverses, and `^n` raises the preceding letter to the power n:
  /// "xxxYYYY" and "x^3 y^-4" are the same word. "1" or "" is the empty
  /// word. Throws SpecError.
  static Word parse(std::string_view text, std::string_view alphabet = "xy", bool reduce = true);

  Word reduce() const;
  bool is_reduced() const;
  std::size_t length() const { return letters.size(); }
  std::int64_t exponent_sum(int generator) const;
  /// Compact form with exponents, e.g. "x^3 y^-4"; "1" for the empty word.
  std::string to_string(std::string_view alphabet = "xy") const;

  /// Concatenation, reduced when both factors are.
  Word operator*(const Word& o) const;
  bool operator==(const Word&) const = default;
};

struct WordPair
{
  Word u;
  Word v;
  std::string to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }
};

/// The Akbulut-Kirby pair (x^3 y^-4, x y x y^-1 x^-1 y^-1). Its exponent
/// matrix is checked on first use.
const WordPair& ak_pair();
/// (x, y).
WordPair identity_pair();

/// Product of images (inverted for negative letters); identity for the
/// empty word. Throws PreconditionError when a letter has no image.
GroupElement eval_word(const Word& w, std::span<const GroupElement> images);
Index eval_word(const FiniteGroup& g, const Word& w, std::span<const Index> images);

struct ExponentMatrix
{
  /// rows[i] = exponent sums of (x, y) in word i.
  std::array<std::array<std::int64_t, 2>, 2> rows{};
  std::int64_t det = 0;
  bool unimodular() const { return det == 1 || det == -1; }
};

/// Throws PreconditionError if either word uses a letter beyond y.
ExponentMatrix exponent_matrix(const WordPair& p);

/// (u(t), v(t)). Throws PreconditionError unless t has length 2.
Tuple apply_pair_map(const WordPair& p, const Tuple& t, const FiniteGroup& g);

struct ScanReport
{
  Tuple base;
  Tuple image;
  bool image_is_vertex = false;
  bool same_component = false;
  std::optional<std::int32_t> distance;
  std::size_t component_count = 0;
  std::uint64_t base_component_size = 0;
  std::uint64_t image_component_size = 0;
  std::vector<PathStep> geodesic;
  ExponentMatrix exponents;
};

/// Pushes the base vertex through the pair map and locates the image.
/// Throws PreconditionError if t is not a vertex or det != +-1. On a full
/// AC graph Delta_2(G,G) the image must be a vertex; a violation throws
/// Error.
ScanReport scan_quotient(const GraphHandle& h, const Tuple& t, const WordPair& p, bool with_geodesic = true,
                         Exec exec = Exec::parallel);

struct SeriesRow
{
  std::string spec;
  std::uint64_t order = 0;
  std::optional<ScanReport> scan;
  /// Non-empty when the row failed (resource cap, bad base tuple).
  std::string error;
};

/// One scan per spec with the base tuple (x, y) = the default generators,
/// padded with identities to length 2. Rows fail independently.
std::vector<SeriesRow> distance_series(const std::vector<std::string>& specs, const WordPair& p, GraphKind mode,
                                       bool symmetric_conjugators = true, const Limits& limits = {},
                                       Exec exec = Exec::parallel);

/// Builds the graph used by scans and series rows: Delta_2(G,G),
/// restricted Delta_2(G,S,G) with S the generators, Gamma_2 or Gamma~_2.
GraphHandle scan_graph(const GroupPtr& g, GraphKind mode, int k, bool symmetric_conjugators, const Limits& limits);

/// Generators of g padded with identities to length k.
Tuple base_tuple(const FiniteGroup& g, int k);

} // namespace acg
