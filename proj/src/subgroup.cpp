#include "acg/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "acg/errors.hpp"
#include "acg/lattice.hpp"

namespace acg {

namespace detail {

// Saturation under right multiplication by the generators; in a finite
// group this is the generated subgroup.
std::vector<Index> close_set(const FiniteGroup& g, std::span<const Index> gens)
{
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Index> out{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Index s : gens) {
      const Index y = g.mul(out[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Conjugates of the seed, saturated under conjugation by the generators of
// g, then closed.
std::vector<Index> normal_close_set(const FiniteGroup& g, std::span<const Index> seed)
{
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<Index> conjugates;
  for (Index x : seed)
    if (x != 0 && !seen[x]) {
      seen[x] = 1;
      conjugates.push_back(x);
    }
  for (std::size_t head = 0; head < conjugates.size(); ++head)
    for (Index s : g.generators()) {
      const Index y = g.conj(conjugates[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        conjugates.push_back(y);
      }
    }
  return close_set(g, conjugates);
}

} // namespace detail

// -------------------------------------------------------------------- Subgroup

Subgroup::Subgroup(GroupPtr ambient, std::vector<Index> members)
  : ambient_(std::move(ambient)), members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  mask_.assign(ambient_->order(), 0);
  for (Index x : members_)
    mask_[x] = 1;
  if (members_.empty() || members_.front() != 0)
    throw PreconditionError("subgroup must contain the identity");
  normal_ = true;
  for (Index x : members_) {
    for (Index s : ambient_->generators())
      if (!mask_[ambient_->conj(x, s)]) {
        normal_ = false;
        break;
      }
    if (!normal_)
      break;
  }
}

Subgroup Subgroup::whole(GroupPtr ambient)
{
  std::vector<Index> all(ambient->order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(std::move(ambient), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr ambient)
{
  return Subgroup(std::move(ambient), {0});
}

Subgroup closure(const GroupPtr& g, std::span<const Index> seed)
{
  return Subgroup(g, detail::close_set(*g, seed));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Index> seed)
{
  return Subgroup(g, detail::normal_close_set(*g, seed));
}

Subgroup derived_subgroup(const GroupPtr& g)
{
  // Normal closure of commutators of generator pairs equals [G,G].
  std::vector<Index> comms;
  const auto gens = g->generators();
  for (Index a : gens)
    for (Index b : gens)
      comms.push_back(g->commutator(a, b));
  return normal_closure(g, comms);
}

std::vector<Subgroup> derived_series(const GroupPtr& g)
{
  std::vector<Subgroup> series{Subgroup::whole(g)};
  for (;;) {
    const Subgroup& last = series.back();
    std::vector<Index> comms;
    for (Index a : last.members())
      for (Index b : last.members())
        comms.push_back(g->commutator(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Subgroup next = closure(g, comms);
    if (next == last)
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_soluble(const GroupPtr& g)
{
  return derived_series(g).back().is_trivial();
}

// -------------------------------------------------------------------- Quotient

Quotient quotient(const GroupPtr& g, const Subgroup& m, const Limits& limits)
{
  if (!m.is_normal())
    throw PreconditionError("quotient needs a normal subgroup");
  const std::size_t n = g->order();
  std::vector<std::uint32_t> coset(n, UINT32_MAX);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (coset[x] != UINT32_MAX)
      continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Index y : m.members())
      coset[g->mul(x, y)] = id;
  }
  const std::size_t degree = reps.size();
  if (degree > kMaxDegree)
    throw ResourceError("quotient_degree", kMaxDegree, degree);

  auto action = [&](Index x) {
    std::vector<int> img(degree);
    for (std::size_t c = 0; c < degree; ++c)
      img[c] = static_cast<int>(coset[g->mul(reps[c], x)]);
    return Permutation::from_images(img);
  };

  std::vector<GroupElement> elems;
  for (Index r : reps)
    elems.emplace_back(action(r));
  std::vector<GroupElement> gens;
  for (Index s : g->generators())
    gens.emplace_back(action(s));

  std::string name = g->name() + "/N" + std::to_string(m.size());
  Quotient q;
  q.group = std::make_shared<const FiniteGroup>(
    FiniteGroup::from_elements(std::move(name), std::move(elems), std::move(gens), limits));
  q.projection.resize(n);
  std::vector<Index> rep_image(degree);
  for (std::size_t c = 0; c < degree; ++c)
    rep_image[c] = q.group->index_of(action(reps[c]));
  for (Index x = 0; x < n; ++x)
    q.projection[x] = rep_image[coset[x]];
  return q;
}

// ------------------------------------------------------------- abelianization

namespace {

std::vector<std::uint32_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    ps.push_back(static_cast<std::uint32_t>(n));
  return ps;
}

std::uint64_t order_in(const FiniteGroup& g, Index x)
{
  std::uint64_t k = 1;
  for (Index y = x; y != 0; y = g.mul(y, x))
    ++k;
  return k;
}

// Invariant factors of an abelian group from its element-order census:
// the number of x with x^(p^j) = 1 is p^(sum_i min(a_i, j)).
std::vector<std::uint32_t> invariant_factors_of(const FiniteGroup& q)
{
  const std::size_t n = q.order();
  std::vector<std::uint64_t> orders(n);
  for (Index x = 0; x < n; ++x)
    orders[x] = order_in(q, x);

  std::vector<std::vector<std::uint32_t>> primary; // per prime, descending prime powers
  for (std::uint32_t p : prime_factors(n)) {
    std::vector<int> log_count{0};
    for (std::uint64_t pj = p;; pj *= p) {
      std::uint64_t c = 0;
      for (auto o : orders)
        if (pj % o == 0)
          ++c;
      int s = 0;
      for (std::uint64_t v = c; v > 1; v /= p)
        ++s;
      log_count.push_back(s);
      if (s == log_count[log_count.size() - 2])
        break;
    }
    // at_least[j] = number of cyclic p-factors of exponent >= j
    std::vector<std::uint32_t> powers;
    const int top = static_cast<int>(log_count.size()) - 1;
    for (int j = 1; j <= top; ++j) {
      const int at_least_j = log_count[j] - log_count[j - 1];
      const int at_least_next = j + 1 <= top ? log_count[j + 1] - log_count[j] : 0;
      std::uint32_t pw = 1;
      for (int t = 0; t < j; ++t)
        pw *= p;
      for (int c = 0; c < at_least_j - at_least_next; ++c)
        powers.push_back(pw);
    }
    std::sort(powers.rbegin(), powers.rend());
    primary.push_back(std::move(powers));
  }
  std::size_t r = 0;
  for (const auto& v : primary)
    r = std::max(r, v.size());
  // Largest factor takes the largest power of every prime (CRT merge).
  std::vector<std::uint32_t> factors(r, 1);
  for (const auto& v : primary)
    for (std::size_t i = 0; i < v.size(); ++i)
      factors[r - 1 - i] *= v[i];
  return factors;
}

// Finds b_1..b_r with ord(b_i) = e_i and Q the internal direct sum of the
// <b_i>. Backtracking from the largest factor down.
bool find_basis(const FiniteGroup& q, const std::vector<std::uint32_t>& e, std::vector<Index>& basis,
                std::vector<Index>& span, int pos)
{
  if (pos < 0)
    return true;
  const std::size_t target = span.size() * e[pos];
  for (Index x = 1; x < q.order(); ++x) {
    if (order_in(q, x) != e[pos])
      continue;
    std::vector<Index> gens = basis;
    gens.push_back(x);
    std::vector<Index> next = detail::close_set(q, gens);
    if (next.size() != target)
      continue;
    basis.push_back(x);
    std::swap(span, next);
    if (find_basis(q, e, basis, span, pos - 1))
      return true;
    std::swap(span, next);
    basis.pop_back();
  }
  return false;
}

} // namespace

AbelianStructure abelianization(const GroupPtr& g, const Limits& limits)
{
  const Subgroup derived = derived_subgroup(g);
  const Quotient q = quotient(g, derived, limits);
  AbelianStructure out;
  out.invariant_factors = invariant_factors_of(*q.group);
  const auto& e = out.invariant_factors;
  const std::size_t r = e.size();

  std::vector<Index> basis; // basis[0] has order e[r-1]
  std::vector<Index> span{0};
  if (!find_basis(*q.group, e, basis, span, static_cast<int>(r) - 1))
    throw PreconditionError("no cyclic decomposition found for the abelianization");

  // coords of each quotient element
  std::vector<AbelianTuple> coord(q.group->order());
  std::vector<std::int64_t> digits(r, 0);
  std::uint64_t total = 1;
  for (auto f : e)
    total *= f;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    Index x = 0;
    for (std::size_t i = 0; i < r; ++i) {
      digits[i] = static_cast<std::int64_t>(c % e[i]);
      c /= e[i];
      const Index b = basis[r - 1 - i];
      for (std::int64_t t = 0; t < digits[i]; ++t)
        x = q.group->mul(x, b);
    }
    coord[x] = AbelianTuple::from_residues(e, digits);
  }

  if (r == 0)
    out.group = make_group("cyclic:1", limits);
  else {
    std::string spec = "abelian:";
    for (std::size_t i = 0; i < r; ++i)
      spec += (i ? "," : "") + std::to_string(e[i]);
    out.group = make_group(spec, limits);
  }
  out.projection.resize(g->order());
  out.projection_index.resize(g->order());
  for (Index x = 0; x < g->order(); ++x) {
    out.projection[x] = coord[q.projection[x]];
    out.projection_index[x] = out.group->index_of(out.projection[x]);
  }
  return out;
}

// ------------------------------------------------------- classes / covering

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g)
{
  std::vector<std::uint8_t> seen(g.order(), 0);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<Index> cls{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (Index s : g.generators()) {
        const Index y = g.conj(cls[head], s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

CoveringNumbers covering_numbers(const FiniteGroup& g)
{
  CoveringNumbers out;
  const auto classes = conjugacy_classes(g);
  const std::size_t n = g.order();
  bool all_cover = classes.size() > 1;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    std::vector<std::uint8_t> power(n, 0);
    for (Index x : cls)
      power[x] = 1;
    std::vector<std::vector<std::uint8_t>> history{power};
    std::optional<int> hit;
    for (int e = 1;; ++e) {
      if (std::all_of(power.begin(), power.end(), [](auto b) { return b != 0; })) {
        hit = e;
        break;
      }
      std::vector<std::uint8_t> next(n, 0);
      for (Index a = 0; a < n; ++a)
        if (power[a])
          for (Index x : cls)
            next[g.mul(a, x)] = 1;
      // C^e is eventually periodic; a repeat without covering never covers.
      if (std::find(history.begin(), history.end(), next) != history.end())
        break;
      history.push_back(next);
      power = std::move(next);
    }
    out.per_class.push_back(hit);
    if (hit) {
      if (!out.ore || *hit < *out.ore)
        out.ore = hit;
      if (all_cover && (!out.cn || *hit > *out.cn))
        out.cn = hit;
    } else {
      all_cover = false;
      out.cn.reset();
    }
  }
  if (!all_cover)
    out.cn.reset();
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g)
{
  std::map<std::vector<Index>, bool> found;
  std::vector<std::vector<Index>> list;
  auto add = [&](std::vector<Index> m) {
    if (found.emplace(m, true).second)
      list.push_back(std::move(m));
  };
  add({0});
  for (const auto& cls : conjugacy_classes(*g)) {
    const Index seed[] = {cls.front()};
    add(detail::normal_close_set(*g, seed));
  }
  // Close under joins (products of normal subgroups).
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Index> gens = list[i];
      gens.insert(gens.end(), list[j].begin(), list[j].end());
      add(detail::close_set(*g, gens));
    }
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  for (auto& m : list)
    out.emplace_back(g, std::move(m));
  return out;
}

// ------------------------------------------------------------------------- nd

NdPair nd_pair(const GroupPtr& g, const Limits& limits)
{
  if (g->order() > limits.max_nd_order)
    throw ResourceError("max_nd_order", limits.max_nd_order, g->order());
  if (g->order() == 1)
    return {0, 0};

  // Distinct normal closures of single nontrivial elements.
  std::map<std::vector<Index>, bool> seen;
  std::vector<std::vector<std::uint8_t>> principal;
  std::vector<std::vector<Index>> principal_members;
  for (const auto& cls : conjugacy_classes(*g)) {
    if (cls.front() == 0)
      continue;
    const Index seed[] = {cls.front()};
    auto m = detail::normal_close_set(*g, seed);
    if (seen.emplace(m, true).second) {
      std::vector<std::uint8_t> mask(g->order(), 0);
      for (Index x : m)
        mask[x] = 1;
      principal.push_back(std::move(mask));
      principal_members.push_back(std::move(m));
    }
  }

  std::map<std::vector<std::size_t>, std::size_t> join_size_cache;
  auto join_size = [&](std::vector<std::size_t> set) {
    std::sort(set.begin(), set.end());
    if (auto it = join_size_cache.find(set); it != join_size_cache.end())
      return it->second;
    std::vector<Index> gens;
    for (auto i : set)
      gens.insert(gens.end(), principal_members[i].begin(), principal_members[i].end());
    const std::size_t s = detail::close_set(*g, gens).size();
    join_size_cache.emplace(set, s);
    return s;
  };

  const std::size_t full = g->order();
  NdPair out{std::numeric_limits<int>::max(), 0};
  std::vector<std::size_t> chosen;
  // Each added closure must strictly enlarge the join; any minimal set
  // satisfies this in every order.
  auto search = [&](auto&& self, std::size_t start, std::size_t current) -> void {
    if (current == full) {
      for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < chosen.size(); ++t)
          if (t != drop)
            rest.push_back(chosen[t]);
        if (join_size(rest) == full)
          return;
      }
      const int sz = static_cast<int>(chosen.size());
      out.nd = std::min(out.nd, sz);
      out.nd_m = std::max(out.nd_m, sz);
      return;
    }
    for (std::size_t i = start; i < principal.size(); ++i) {
      chosen.push_back(i);
      const std::size_t next = join_size(chosen);
      if (next > current)
        self(self, i + 1, next);
      chosen.pop_back();
    }
  };
  search(search, 0, 1);
  return out;
}

// ------------------------------------------------------------------------ psi

std::uint64_t normal_generating_tuple_count(const GroupPtr& g, int k, const Limits& limits, Exec exec)
{
  if (k < 0)
    throw PreconditionError("k must be non-negative");
  long double space = 1;
  for (int i = 0; i < k; ++i)
    space *= static_cast<long double>(g->order());
  if (space > static_cast<long double>(limits.max_tuple_census))
    throw ResourceError("max_tuple_census", limits.max_tuple_census,
                        static_cast<std::uint64_t>(std::min<long double>(space, 1.8e19L)));
  std::vector<Index> all(g->order());
  std::iota(all.begin(), all.end(), Index{0});
  ClosureLattice lattice(g, ClosureLattice::Kind::normal, all, k);
  const auto whole = lattice.find(all);
  if (!whole)
    return 0;
  return census(lattice, k, *whole, nullptr, exec);
}

Rational psi_k(const GroupPtr& g, int k, const Limits& limits, Exec exec)
{
  const std::uint64_t count = normal_generating_tuple_count(g, k, limits, exec);
  boost::multiprecision::cpp_int denom = 1;
  for (int i = 0; i < k; ++i)
    denom *= g->order();
  return Rational(boost::multiprecision::cpp_int(count), denom);
}

// ----------------------------------------------------------------- Mazurov

std::optional<Tuple> mazurov_lift(const GroupPtr& g, const Subgroup& m, const Tuple& t, const Limits& limits)
{
  const int k = static_cast<int>(t.size());
  if (!m.is_normal())
    throw PreconditionError("mazurov_lift: M is not normal");
  if (k < 1)
    throw PreconditionError("mazurov_lift: empty tuple");
  // Images normally generate G/M  <=>  ncl(t) M = G.
  {
    std::vector<Index> seed(t.idx.begin(), t.idx.end());
    seed.insert(seed.end(), m.members().begin(), m.members().end());
    if (detail::normal_close_set(*g, seed).size() != g->order())
      throw PreconditionError("mazurov_lift: images do not normally generate G/M");
  }
  if (g->order() <= limits.max_nd_order) {
    if (nd_pair(g, limits).nd > k)
      throw PreconditionError("mazurov_lift: G is not normally generated by k elements");
  } else if (normal_generating_tuple_count(g, k, limits) == 0) {
    throw PreconditionError("mazurov_lift: G is not normally generated by k elements");
  }

  long double space = 1;
  for (int i = 0; i < k; ++i)
    space *= static_cast<long double>(m.size());
  if (space > static_cast<long double>(limits.max_lift_search))
    throw ResourceError("max_lift_search", limits.max_lift_search,
                        static_cast<std::uint64_t>(std::min<long double>(space, 1.8e19L)));

  const std::uint64_t total = static_cast<std::uint64_t>(space);
  const auto members = m.members();
  Tuple candidate = t;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      candidate.idx[i] = g->mul(t.idx[i], members[c % members.size()]);
      c /= members.size();
    }
    if (detail::normal_close_set(*g, candidate.idx).size() == g->order())
      return candidate;
  }
  return std::nullopt;
}

} // namespace acg
