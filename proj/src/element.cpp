#include "acg/element.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "acg/errors.hpp"

namespace acg {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};

const char* variant_name(const GroupElement& a)
{
  switch (a.index()) {
  case 0:
    return "permutation";
  case 1:
    return "matrix";
  default:
    return "abelian";
  }
}

void check_same_kind(const GroupElement& a, const GroupElement& b)
{
  if (a.index() != b.index())
    throw TypeError(std::string("mixed group realizations: ") + variant_name(a) + " and " +
                    variant_name(b));
}

Permutation perm_mul(const Permutation& a, const Permutation& b)
{
  if (a.degree != b.degree)
    throw TypeError("permutation degrees differ: " + std::to_string(a.degree) + " vs " +
                    std::to_string(b.degree));
  Permutation r;
  r.degree = a.degree;
  for (std::size_t x = 0; x < a.degree; ++x)
    r.images[x] = b.images[a.images[x]];
  return r;
}

Permutation perm_inv(const Permutation& a)
{
  Permutation r;
  r.degree = a.degree;
  for (std::size_t x = 0; x < a.degree; ++x)
    r.images[a.images[x]] = static_cast<std::uint8_t>(x);
  return r;
}

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b)
{
  if (a.p != b.p)
    throw TypeError("matrix moduli differ: " + std::to_string(a.p) + " vs " + std::to_string(b.p));
  const std::uint64_t p = a.p;
  const auto& x = a.m;
  const auto& y = b.m;
  MatrixGF r;
  r.p = a.p;
  r.m[0] = static_cast<std::uint32_t>((std::uint64_t{x[0]} * y[0] + std::uint64_t{x[1]} * y[2]) % p);
  r.m[1] = static_cast<std::uint32_t>((std::uint64_t{x[0]} * y[1] + std::uint64_t{x[1]} * y[3]) % p);
  r.m[2] = static_cast<std::uint32_t>((std::uint64_t{x[2]} * y[0] + std::uint64_t{x[3]} * y[2]) % p);
  r.m[3] = static_cast<std::uint32_t>((std::uint64_t{x[2]} * y[1] + std::uint64_t{x[3]} * y[3]) % p);
  return r;
}

// det = 1, so the inverse is the adjugate.
MatrixGF mat_inv(const MatrixGF& a)
{
  MatrixGF r;
  r.p = a.p;
  r.m = {a.m[3], (a.p - a.m[1]) % a.p, (a.p - a.m[2]) % a.p, a.m[0]};
  return r;
}

AbelianTuple ab_add(const AbelianTuple& a, const AbelianTuple& b)
{
  if (a.rank != b.rank || !std::equal(a.moduli.begin(), a.moduli.begin() + a.rank, b.moduli.begin()))
    throw TypeError("abelian moduli differ");
  AbelianTuple r = a;
  for (std::size_t i = 0; i < a.rank; ++i)
    r.residues[i] = (a.residues[i] + b.residues[i]) % a.moduli[i];
  return r;
}

AbelianTuple ab_neg(const AbelianTuple& a)
{
  AbelianTuple r = a;
  for (std::size_t i = 0; i < a.rank; ++i)
    r.residues[i] = (a.moduli[i] - a.residues[i]) % a.moduli[i];
  return r;
}

} // namespace

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(std::size_t degree)
{
  if (degree > kMaxDegree)
    throw SpecError("permutation degree " + std::to_string(degree) + " exceeds " +
                    std::to_string(kMaxDegree));
  Permutation p;
  p.degree = static_cast<std::uint8_t>(degree);
  for (std::size_t x = 0; x < degree; ++x)
    p.images[x] = static_cast<std::uint8_t>(x);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images)
{
  if (images.size() > kMaxDegree)
    throw SpecError("permutation degree " + std::to_string(images.size()) + " exceeds " +
                    std::to_string(kMaxDegree));
  std::vector<bool> seen(images.size(), false);
  Permutation p;
  p.degree = static_cast<std::uint8_t>(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    const int y = images[x];
    if (y < 0 || static_cast<std::size_t>(y) >= images.size() || seen[y])
      throw SpecError("image array is not a permutation");
    seen[y] = true;
    p.images[x] = static_cast<std::uint8_t>(y);
  }
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree)
{
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw SpecError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        throw SpecError("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw SpecError("bad character in cycle notation: " + std::string(text));
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (static_cast<std::size_t>(v) >= degree)
        throw SpecError("point " + std::to_string(v) + " out of range for degree " +
                        std::to_string(degree));
      if (used[v])
        throw SpecError("point " + std::to_string(v) + " repeated in cycle notation");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

std::string Permutation::to_cycles() const
{
  std::string out;
  std::vector<bool> seen(degree, false);
  for (std::size_t x = 0; x < degree; ++x) {
    if (seen[x] || images[x] == x)
      continue;
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first)
        out += ' ';
      out += std::to_string(y);
      first = false;
      y = images[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool Permutation::operator==(const Permutation& o) const
{
  return degree == o.degree && std::equal(images.begin(), images.begin() + degree, o.images.begin());
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const
{
  if (auto c = degree <=> o.degree; c != 0)
    return c;
  return std::lexicographical_compare_three_way(images.begin(), images.begin() + degree,
                                                o.images.begin(), o.images.begin() + degree);
}

// -------------------------------------------------------------------- MatrixGF

MatrixGF MatrixGF::from_entries(std::uint32_t p, std::array<std::int64_t, 4> entries)
{
  MatrixGF r;
  r.p = p;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::int64_t v = entries[i] % static_cast<std::int64_t>(p);
    r.m[i] = static_cast<std::uint32_t>(v < 0 ? v + p : v);
  }
  if (r.det() != 1 % p)
    throw SpecError("matrix determinant is not 1 mod " + std::to_string(p));
  return r;
}

std::uint32_t MatrixGF::det() const
{
  const std::uint64_t ad = std::uint64_t{m[0]} * m[3] % p;
  const std::uint64_t bc = std::uint64_t{m[1]} * m[2] % p;
  return static_cast<std::uint32_t>((ad + p - bc) % p);
}

std::strong_ordering MatrixGF::operator<=>(const MatrixGF& o) const
{
  if (auto c = p <=> o.p; c != 0)
    return c;
  return m <=> o.m;
}

// ---------------------------------------------------------------- AbelianTuple

AbelianTuple AbelianTuple::zero(std::span<const std::uint32_t> moduli)
{
  if (moduli.size() > kMaxRank)
    throw SpecError("abelian rank " + std::to_string(moduli.size()) + " exceeds " +
                    std::to_string(kMaxRank));
  AbelianTuple r;
  r.rank = static_cast<std::uint8_t>(moduli.size());
  std::copy(moduli.begin(), moduli.end(), r.moduli.begin());
  return r;
}

AbelianTuple AbelianTuple::unit(std::span<const std::uint32_t> moduli, std::size_t i)
{
  AbelianTuple r = zero(moduli);
  r.residues[i] = 1 % moduli[i];
  return r;
}

AbelianTuple AbelianTuple::from_residues(std::span<const std::uint32_t> moduli,
                                         std::span<const std::int64_t> residues)
{
  if (residues.size() != moduli.size())
    throw SpecError("residue count does not match rank");
  AbelianTuple r = zero(moduli);
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const std::int64_t e = moduli[i];
    r.residues[i] = static_cast<std::uint32_t>(((residues[i] % e) + e) % e);
  }
  return r;
}

bool AbelianTuple::operator==(const AbelianTuple& o) const
{
  return rank == o.rank && std::equal(moduli.begin(), moduli.begin() + rank, o.moduli.begin()) &&
         std::equal(residues.begin(), residues.begin() + rank, o.residues.begin());
}

std::strong_ordering AbelianTuple::operator<=>(const AbelianTuple& o) const
{
  if (auto c = rank <=> o.rank; c != 0)
    return c;
  if (auto c = std::lexicographical_compare_three_way(moduli.begin(), moduli.begin() + rank,
                                                      o.moduli.begin(), o.moduli.begin() + rank);
      c != 0)
    return c;
  return std::lexicographical_compare_three_way(residues.begin(), residues.begin() + rank,
                                                o.residues.begin(), o.residues.begin() + rank);
}

// ------------------------------------------------------------------ operations

GroupElement mul(const GroupElement& a, const GroupElement& b)
{
  check_same_kind(a, b);
  switch (a.index()) {
  case 0:
    return perm_mul(std::get<0>(a), std::get<0>(b));
  case 1:
    return mat_mul(std::get<1>(a), std::get<1>(b));
  default:
    return ab_add(std::get<2>(a), std::get<2>(b));
  }
}

GroupElement inv(const GroupElement& a)
{
  return std::visit(overloaded{[](const Permutation& p) -> GroupElement { return perm_inv(p); },
                               [](const MatrixGF& m) -> GroupElement { return mat_inv(m); },
                               [](const AbelianTuple& t) -> GroupElement { return ab_neg(t); }},
                    a);
}

GroupElement conj(const GroupElement& a, const GroupElement& w)
{
  return mul(mul(inv(w), a), w);
}

GroupElement identity_like(const GroupElement& a)
{
  return std::visit(
    overloaded{[](const Permutation& p) -> GroupElement { return Permutation::identity(p.degree); },
               [](const MatrixGF& m) -> GroupElement { return MatrixGF::identity(m.p); },
               [](const AbelianTuple& t) -> GroupElement {
                 return AbelianTuple::zero({t.moduli.data(), t.rank});
               }},
    a);
}

bool is_identity(const GroupElement& a)
{
  return a == identity_like(a);
}

GroupElement power(const GroupElement& a, std::int64_t e)
{
  GroupElement base = e < 0 ? inv(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  GroupElement result = identity_like(a);
  while (n > 0) {
    if (n & 1u)
      result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint64_t element_order(const GroupElement& a)
{
  std::uint64_t n = 1;
  GroupElement x = a;
  while (!is_identity(x)) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

int cycle_count(const Permutation& a)
{
  std::array<bool, kMaxDegree> seen{};
  int cycles = 0;
  for (std::size_t x = 0; x < a.degree; ++x) {
    if (seen[x])
      continue;
    ++cycles;
    for (std::size_t y = x; !seen[y]; y = a.images[y])
      seen[y] = true;
  }
  return cycles;
}

int cycle_count(const GroupElement& a)
{
  if (const auto* p = std::get_if<Permutation>(&a))
    return cycle_count(*p);
  throw TypeError(std::string("cycle_count needs a permutation, got ") + variant_name(a));
}

bool is_even(const Permutation& a)
{
  return (a.degree - cycle_count(a)) % 2 == 0;
}

std::string to_string(const GroupElement& a)
{
  return std::visit(overloaded{[](const Permutation& p) { return p.to_cycles(); },
                               [](const MatrixGF& m) {
                                 std::ostringstream os;
                                 os << "[[" << m.m[0] << "," << m.m[1] << "],[" << m.m[2] << ","
                                    << m.m[3] << "]] mod " << m.p;
                                 return os.str();
                               },
                               [](const AbelianTuple& t) {
                                 std::string s = "(";
                                 for (std::size_t i = 0; i < t.rank; ++i) {
                                   if (i)
                                     s += ",";
                                   s += std::to_string(t.residues[i]);
                                 }
                                 return s + ")";
                               }},
                    a);
}

std::strong_ordering payload_compare(const GroupElement& a, const GroupElement& b)
{
  if (a.index() != b.index())
    return a.index() <=> b.index();
  switch (a.index()) {
  case 0:
    return std::get<0>(a) <=> std::get<0>(b);
  case 1:
    return std::get<1>(a) <=> std::get<1>(b);
  default:
    return std::get<2>(a) <=> std::get<2>(b);
  }
}

} // namespace acg
