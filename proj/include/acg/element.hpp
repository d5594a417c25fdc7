#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace acg {

inline constexpr std::size_t kMaxDegree = 64;
inline constexpr std::size_t kMaxRank = 8;

/// Permutation of {0, ..., degree-1} stored as point images.
///
/// Products act left to right: (a*b)(x) = b(a(x)). Conjugation is
/// a^w = w^-1 * a * w, so (0 1 2)^(0 1) = (0 2 1).
struct Permutation
{
  std::uint8_t degree = 0;
  std::array<std::uint8_t, kMaxDegree> images{};

  static Permutation identity(std::size_t degree);
  /// Throws SpecError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::span<const int> images);
  /// Cycle notation with 0-based points, e.g. "(0 1)(2 3)"; "()" is the
  /// identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::uint8_t operator[](std::size_t x) const { return images[x]; }
  std::span<const std::uint8_t> view() const { return {images.data(), degree}; }
  std::string to_cycles() const;

  bool operator==(const Permutation& o) const;
  std::strong_ordering operator<=>(const Permutation& o) const;
};

/// 2x2 matrix [[a, b], [c, d]] over the prime field F_p, stored row-major.
struct MatrixGF
{
  std::uint32_t p = 2;
  std::array<std::uint32_t, 4> m{1, 0, 0, 1};

  static MatrixGF identity(std::uint32_t p) { return MatrixGF{p, {1, 0, 0, 1}}; }
  /// Entries are reduced mod p; throws SpecError if det != 1.
  static MatrixGF from_entries(std::uint32_t p, std::array<std::int64_t, 4> entries);

  std::uint32_t det() const;

  bool operator==(const MatrixGF&) const = default;
  std::strong_ordering operator<=>(const MatrixGF& o) const;
};

/// Element of Z_{e1} x ... x Z_{er}. rank 0 is the trivial group.
struct AbelianTuple
{
  std::uint8_t rank = 0;
  std::array<std::uint32_t, kMaxRank> moduli{};
  std::array<std::uint32_t, kMaxRank> residues{};

  static AbelianTuple zero(std::span<const std::uint32_t> moduli);
  static AbelianTuple unit(std::span<const std::uint32_t> moduli, std::size_t i);
  static AbelianTuple from_residues(std::span<const std::uint32_t> moduli,
                                    std::span<const std::int64_t> residues);

  bool operator==(const AbelianTuple& o) const;
  std::strong_ordering operator<=>(const AbelianTuple& o) const;
};

using GroupElement = std::variant<Permutation, MatrixGF, AbelianTuple>;

/// Throws TypeError on mixed variants or mismatched degree/modulus.
GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& a);
/// a^w = w^-1 a w.
GroupElement conj(const GroupElement& a, const GroupElement& w);
/// Identity of the same realization as `a`.
GroupElement identity_like(const GroupElement& a);
bool is_identity(const GroupElement& a);
/// Element raised to an integer power (negative allowed).
GroupElement power(const GroupElement& a, std::int64_t e);
std::uint64_t element_order(const GroupElement& a);

/// Number of cycles including fixed points. Throws TypeError for
/// non-permutations.
int cycle_count(const GroupElement& a);
int cycle_count(const Permutation& a);
bool is_even(const Permutation& a);

std::string to_string(const GroupElement& a);

/// Raw payload comparison used for canonical ordering. Elements of different
/// variants order by variant index.
std::strong_ordering payload_compare(const GroupElement& a, const GroupElement& b);

} // namespace acg
