#include "acg/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "acg/errors.hpp"

namespace acg {

namespace {

bool is_prime(std::uint32_t p)
{
  if (p < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::uint32_t parse_uint(std::string_view s, std::string_view whole)
{
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw SpecError("malformed group spec '" + std::string(whole) + "'");
  return v;
}

std::uint64_t factorial(std::uint32_t n)
{
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i)
      return UINT64_MAX;
    f *= i;
  }
  return f;
}

struct PayloadLess
{
  bool operator()(const GroupElement& a, const GroupElement& b) const { return payload_compare(a, b) < 0; }
};

} // namespace

// ------------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::parse(std::string_view spec)
{
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw SpecError("malformed group spec '" + std::string(spec) + "': expected family:parameters");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view params = spec.substr(colon + 1);

  GroupSpec g;
  if (family == "abelian") {
    g.kind = Kind::abelian;
    std::size_t start = 0;
    while (start <= params.size()) {
      const auto comma = params.find(',', start);
      const auto piece = params.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - start);
      const auto e = parse_uint(piece, spec);
      if (e < 2)
        throw SpecError("abelian moduli must be >= 2 in '" + std::string(spec) + "'");
      g.moduli.push_back(e);
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    if (g.moduli.size() > kMaxRank)
      throw SpecError("abelian rank exceeds " + std::to_string(kMaxRank));
    g.text = "abelian:";
    for (std::size_t i = 0; i < g.moduli.size(); ++i)
      g.text += (i ? "," : "") + std::to_string(g.moduli[i]);
    return g;
  }

  g.n = parse_uint(params, spec);
  if (family == "sym")
    g.kind = Kind::sym;
  else if (family == "alt")
    g.kind = Kind::alt;
  else if (family == "sl2")
    g.kind = Kind::sl2;
  else if (family == "dihedral")
    g.kind = Kind::dihedral;
  else if (family == "cyclic")
    g.kind = Kind::cyclic;
  else
    throw SpecError("unknown group family '" + std::string(family) + "'");

  switch (g.kind) {
  case Kind::sym:
  case Kind::alt:
    if (g.n < 1 || g.n > kMaxDegree)
      throw SpecError("degree out of range in '" + std::string(spec) + "'");
    break;
  case Kind::sl2:
    if (!is_prime(g.n))
      throw SpecError("sl2 needs a prime modulus, got " + std::to_string(g.n));
    break;
  case Kind::dihedral:
    if (g.n < 3 || g.n > kMaxDegree)
      throw SpecError("dihedral:n needs 3 <= n <= " + std::to_string(kMaxDegree));
    break;
  case Kind::cyclic:
    if (g.n < 1)
      throw SpecError("cyclic:n needs n >= 1");
    if (g.n > 1)
      g.moduli = {g.n};
    break;
  default:
    break;
  }
  g.text = std::string(family) + ":" + std::to_string(g.n);
  return g;
}

std::uint64_t GroupSpec::expected_order() const
{
  switch (kind) {
  case Kind::sym:
    return factorial(n);
  case Kind::alt:
    return n < 2 ? 1 : factorial(n) / 2;
  case Kind::sl2:
    return std::uint64_t{n} * (std::uint64_t{n} * n - 1);
  case Kind::dihedral:
    return 2 * std::uint64_t{n};
  case Kind::cyclic:
  case Kind::abelian: {
    std::uint64_t o = 1;
    for (auto e : moduli)
      o *= e;
    return o;
  }
  }
  return 0;
}

GroupElement GroupSpec::identity() const
{
  switch (kind) {
  case Kind::sym:
  case Kind::alt:
  case Kind::dihedral:
    return Permutation::identity(n);
  case Kind::sl2:
    return MatrixGF::identity(n);
  default:
    return AbelianTuple::zero(moduli);
  }
}

std::vector<GroupElement> GroupSpec::default_generators() const
{
  std::vector<GroupElement> gens;
  switch (kind) {
  case Kind::sym:
    if (n >= 2) {
      gens.push_back(Permutation::from_cycles("(0 1)", n));
      if (n >= 3) {
        std::vector<int> rot(n);
        for (std::uint32_t i = 0; i < n; ++i)
          rot[i] = static_cast<int>((i + 1) % n);
        gens.push_back(Permutation::from_images(rot));
      }
    }
    break;
  case Kind::alt:
    if (n >= 3) {
      gens.push_back(Permutation::from_cycles("(0 1 2)", n));
      if (n >= 4) {
        // (0 1 ... n-1) for odd n, (1 2 ... n-1) for even n: both even.
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        const std::uint32_t first = n % 2 == 1 ? 0 : 1;
        for (std::uint32_t i = first; i < n; ++i)
          img[i] = static_cast<int>(i + 1 < n ? i + 1 : first);
        gens.push_back(Permutation::from_images(img));
      }
    }
    break;
  case Kind::sl2: {
    // Transvections with off-diagonal entry 2; over F_2 that entry would
    // vanish, so use 1 there.
    const std::int64_t t = n == 2 ? 1 : 2;
    gens.push_back(MatrixGF::from_entries(n, {1, 0, t, 1}));
    gens.push_back(MatrixGF::from_entries(n, {1, t, 0, 1}));
    break;
  }
  case Kind::dihedral: {
    std::vector<int> rot(n), refl(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      rot[i] = static_cast<int>((i + 1) % n);
      refl[i] = static_cast<int>((n - i) % n);
    }
    gens.push_back(Permutation::from_images(rot));
    gens.push_back(Permutation::from_images(refl));
    break;
  }
  case Kind::cyclic:
  case Kind::abelian:
    for (std::size_t i = 0; i < moduli.size(); ++i)
      gens.push_back(AbelianTuple::unit(moduli, i));
    break;
  }
  return gens;
}

// ----------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::generated_by(std::string name, std::vector<GroupElement> generators,
                                      const Limits& limits)
{
  if (generators.empty())
    throw PreconditionError("generated_by needs at least one generator to fix the realization");
  std::vector<GroupElement> elems{identity_like(generators.front())};
  std::vector<GroupElement> sorted = elems;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      GroupElement y = acg::mul(elems[head], s);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), y, PayloadLess{});
      if (it != sorted.end() && *it == y)
        continue;
      sorted.insert(it, y);
      elems.push_back(std::move(y));
      if (elems.size() > limits.max_group_order)
        throw ResourceError("max_group_order", limits.max_group_order, elems.size());
    }
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.elements_ = std::move(sorted);
  g.finish(std::move(generators), limits);
  return g;
}

FiniteGroup FiniteGroup::from_elements(std::string name, std::vector<GroupElement> elements,
                                       std::vector<GroupElement> generators, const Limits& limits)
{
  if (elements.empty())
    throw PreconditionError("empty element list");
  if (elements.size() > limits.max_group_order)
    throw ResourceError("max_group_order", limits.max_group_order, elements.size());
  std::sort(elements.begin(), elements.end(), PayloadLess{});
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw PreconditionError("duplicate elements in group '" + name + "'");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.elements_ = std::move(elements);
  g.finish(std::move(generators), limits);
  return g;
}

void FiniteGroup::finish(std::vector<GroupElement> generators, const Limits& limits)
{
  // Canonical order: identity first, then the rest lexicographically.
  const GroupElement e = identity_like(elements_.front());
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e, PayloadLess{});
  if (it == elements_.end() || *it != e)
    throw PreconditionError("group '" + name_ + "' does not contain the identity");
  std::rotate(elements_.begin(), it, std::next(it));

  const std::size_t n = elements_.size();
  lookup_order_.resize(n);
  std::iota(lookup_order_.begin(), lookup_order_.end(), Index{0});
  std::sort(lookup_order_.begin(), lookup_order_.end(),
            [this](Index a, Index b) { return payload_compare(elements_[a], elements_[b]) < 0; });

  generators_.clear();
  for (const auto& s : generators)
    generators_.push_back(index_of(s));

  if (n <= limits.table_threshold) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_of(acg::mul(elements_[a], elements_[b]));
  }

  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    inverse_[a] = index_of(acg::inv(elements_[a]));

  // Closed under right multiplication by each generator, and the generators
  // reach every element from the identity.
  std::vector<bool> reached(n, false);
  std::vector<Index> queue{0};
  reached[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Index s : generators_) {
      const Index y = mul(queue[head], s);
      if (!reached[y]) {
        reached[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != n)
    throw PreconditionError("generators of '" + name_ + "' generate " + std::to_string(queue.size()) +
                            " of " + std::to_string(n) + " elements");
}

std::optional<Index> FiniteGroup::find(const GroupElement& g) const
{
  auto it = std::lower_bound(lookup_order_.begin(), lookup_order_.end(), g,
                             [this](Index i, const GroupElement& x) { return payload_compare(elements_[i], x) < 0; });
  if (it == lookup_order_.end() || !(elements_[*it] == g))
    return std::nullopt;
  return *it;
}

Index FiniteGroup::index_of(const GroupElement& g) const
{
  if (auto i = find(g))
    return *i;
  throw PreconditionError("element " + to_string(g) + " is not in group '" + name_ + "'");
}

Index FiniteGroup::mul_slow(Index a, Index b) const
{
  return index_of(acg::mul(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::permutation_degree() const
{
  if (const auto* p = std::get_if<Permutation>(&elements_.front()))
    return p->degree;
  return 0;
}

// ------------------------------------------------------------------ parse etc.

FiniteGroup parse_group(std::string_view text, const Limits& limits)
{
  const GroupSpec spec = GroupSpec::parse(text);
  const std::uint64_t order = spec.expected_order();
  if (order > limits.max_group_order)
    throw ResourceError("max_group_order", limits.max_group_order, order);

  std::vector<GroupElement> elems;
  elems.reserve(order);
  switch (spec.kind) {
  case GroupSpec::Kind::sym:
  case GroupSpec::Kind::alt: {
    std::vector<int> img(spec.n);
    std::iota(img.begin(), img.end(), 0);
    do {
      Permutation p = Permutation::from_images(img);
      if (spec.kind == GroupSpec::Kind::sym || is_even(p))
        elems.emplace_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    break;
  }
  case GroupSpec::Kind::sl2: {
    const std::uint32_t p = spec.n;
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c)
          for (std::uint32_t d = 0; d < p; ++d) {
            MatrixGF m{p, {a, b, c, d}};
            if (m.det() == 1 % p)
              elems.emplace_back(m);
          }
    break;
  }
  case GroupSpec::Kind::dihedral:
    return FiniteGroup::generated_by(spec.text, spec.default_generators(), limits);
  case GroupSpec::Kind::cyclic:
  case GroupSpec::Kind::abelian: {
    const auto& mod = spec.moduli;
    std::vector<std::int64_t> digits(mod.size(), 0);
    for (std::uint64_t code = 0; code < order; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = mod.size(); i-- > 0;) {
        digits[i] = static_cast<std::int64_t>(c % mod[i]);
        c /= mod[i];
      }
      elems.emplace_back(AbelianTuple::from_residues(mod, digits));
    }
    break;
  }
  }
  FiniteGroup g = FiniteGroup::from_elements(spec.text, std::move(elems), spec.default_generators(), limits);
  if (g.order() != order)
    throw PreconditionError("enumeration of '" + spec.text + "' produced the wrong order");
  return g;
}

GroupPtr make_group(std::string_view spec, const Limits& limits)
{
  return std::make_shared<const FiniteGroup>(parse_group(spec, limits));
}

Index random_index(const FiniteGroup& g, Rng& rng)
{
  return static_cast<Index>(rng.below(g.order()));
}

GroupElement random_element(const FiniteGroup& g, Rng& rng)
{
  return g.element(random_index(g, rng));
}

Index parse_element(const FiniteGroup& g, std::string_view text)
{
  const GroupElement& e = g.element(0);
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
    t.remove_prefix(1);
  if (const auto* p = std::get_if<Permutation>(&e)) {
    if (t.empty() || t == "()" || t == "id")
      return 0;
    return g.index_of(Permutation::from_cycles(t, p->degree));
  }
  if (t == "id" || t == "1")
    return 0;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw SpecError("expected a bracketed entry list, got '" + std::string(text) + "'");
  std::vector<std::int64_t> vals;
  std::string_view body = t.substr(1, t.size() - 2);
  std::size_t start = 0;
  while (start < body.size()) {
    auto comma = body.find(',', start);
    auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      throw SpecError("bad entry in '" + std::string(text) + "'");
    vals.push_back(v);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  if (const auto* m = std::get_if<MatrixGF>(&e)) {
    if (vals.size() != 4)
      throw SpecError("matrix needs 4 entries");
    return g.index_of(MatrixGF::from_entries(m->p, {vals[0], vals[1], vals[2], vals[3]}));
  }
  const auto& a = std::get<AbelianTuple>(e);
  return g.index_of(AbelianTuple::from_residues({a.moduli.data(), a.rank}, vals));
}

} // namespace acg
