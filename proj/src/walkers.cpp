#include "acg/walkers.hpp"

#include <algorithm>
#include <bit>

#include "acg/errors.hpp"
#include "acg/stats.hpp"

namespace acg {

namespace {

constexpr std::size_t kLehmerMaxDegree = 20;

// Uniform permutation of {0..n-1}: Lehmer unranking of one draw below n!
// while n! fits in 64 bits, Fisher-Yates beyond that.
Permutation random_permutation(std::size_t n, Rng& rng)
{
  Permutation p = Permutation::identity(n);
  if (n < 2)
    return p;
  if (n <= kLehmerMaxDegree) {
    std::uint64_t fact[kLehmerMaxDegree + 1];
    fact[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
      fact[i] = fact[i - 1] * i;
    std::uint64_t r = rng.below(fact[n]);
    std::array<std::uint8_t, kLehmerMaxDegree> avail{};
    for (std::size_t i = 0; i < n; ++i)
      avail[i] = static_cast<std::uint8_t>(i);
    std::size_t left = n;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t f = fact[n - 1 - i];
      const auto d = static_cast<std::size_t>(r / f);
      r %= f;
      p.images[i] = avail[d];
      std::copy(avail.begin() + static_cast<std::ptrdiff_t>(d) + 1, avail.begin() + static_cast<std::ptrdiff_t>(left),
                avail.begin() + static_cast<std::ptrdiff_t>(d));
      --left;
    }
    return p;
  }
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(p.images[i], p.images[rng.below(i + 1)]);
  return p;
}

std::uint64_t ceil_log2(std::uint64_t x)
{
  return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

GroupElement conjugator(const WalkGroup& g, const WalkConfig& cfg, Rng& rng)
{
  if (cfg.conjugators.kind == ConjugatorSource::Kind::uniform)
    return g.random(rng);
  const auto& s = g.generators();
  GroupElement w = g.identity();
  if (s.empty())
    return w;
  for (int t = 0; t < cfg.conjugators.length; ++t) {
    const auto pick = rng.below(2 * s.size());
    const GroupElement& x = s[pick / 2];
    w = mul(w, pick % 2 ? inv(x) : x);
  }
  return w;
}

void pick_pair(std::size_t k, Rng& rng, std::size_t& i, std::size_t& j)
{
  i = static_cast<std::size_t>(rng.below(k));
  j = static_cast<std::size_t>(rng.below(k - 1));
  if (j >= i)
    ++j;
}

// x_i -> x_i y^+-1 or y^+-1 x_i, one of four variants uniformly.
void nielsen_variant(WalkState& st, std::size_t i, const GroupElement& y)
{
  const auto v = st.rng.below(4);
  const GroupElement z = (v & 2) ? inv(y) : y;
  st.tuple[i] = (v & 1) ? mul(z, st.tuple[i]) : mul(st.tuple[i], z);
}

void finish_step(WalkState& st, const WalkConfig& cfg, std::size_t i)
{
  if (cfg.cumulative)
    st.cumulative = mul(st.cumulative, st.tuple[i]);
  ++st.steps;
}

GroupElement run_walk(const WalkGroup& g, const std::vector<GroupElement>& init, const WalkConfig& cfg, Rng& rng)
{
  WalkState st{init, g.identity(), 0, rng};
  for (std::uint64_t s = 0; s < cfg.budget; ++s) {
    if (cfg.kind == WalkKind::acr)
      acr_step(st, cfg, g);
    else
      pra_step(st, cfg, g);
  }
  GroupElement out = cfg.cumulative ? st.cumulative : st.tuple[st.rng.below(st.tuple.size())];
  rng = st.rng;
  return out;
}

void check_init(const WalkGroup& g, const std::vector<GroupElement>& init, const WalkConfig& cfg)
{
  if (init.empty())
    throw PreconditionError("walk needs a nonempty initial tuple");
  if (static_cast<int>(init.size()) != cfg.k)
    throw PreconditionError("initial tuple has length " + std::to_string(init.size()) + " but k = " +
                            std::to_string(cfg.k));
  for (const auto& x : init)
    if (!g.contains(x))
      throw PreconditionError("initial tuple component " + to_string(x) + " is not in " + g.name());
  if (cfg.budget > 0 && cfg.k < 2)
    throw PreconditionError("walk steps need k >= 2");
}

std::vector<GroupElement> payloads(const FiniteGroup& g, const Tuple& t)
{
  std::vector<GroupElement> out;
  for (Index x : t.idx) {
    if (x >= g.order())
      throw PreconditionError("tuple index out of range");
    out.push_back(g.element(x));
  }
  return out;
}

} // namespace

// ------------------------------------------------------------------ WalkGroup

WalkGroup WalkGroup::enumerated(GroupPtr g)
{
  WalkGroup w;
  w.source_ = Source::enumerated;
  w.name_ = g->name();
  w.identity_ = g->element(0);
  for (Index s : g->generators())
    w.generators_.push_back(g->element(s));
  w.degree_ = g->permutation_degree();
  w.group_ = std::move(g);
  return w;
}

WalkGroup WalkGroup::symmetric(std::size_t degree)
{
  if (degree < 1 || degree > kMaxDegree)
    throw SpecError("symmetric group degree out of range");
  const GroupSpec spec = GroupSpec::parse("sym:" + std::to_string(degree));
  WalkGroup w;
  w.source_ = Source::symmetric;
  w.name_ = spec.text;
  w.identity_ = spec.identity();
  w.generators_ = spec.default_generators();
  w.degree_ = degree;
  return w;
}

WalkGroup WalkGroup::alternating(std::size_t degree)
{
  if (degree < 1 || degree > kMaxDegree)
    throw SpecError("alternating group degree out of range");
  const GroupSpec spec = GroupSpec::parse("alt:" + std::to_string(degree));
  WalkGroup w;
  w.source_ = Source::alternating;
  w.name_ = spec.text;
  w.identity_ = spec.identity();
  w.generators_ = spec.default_generators();
  w.degree_ = degree;
  return w;
}

WalkGroup WalkGroup::from_spec(const GroupSpec& spec, const Limits& limits)
{
  if (spec.kind == GroupSpec::Kind::sym)
    return symmetric(spec.n);
  if (spec.kind == GroupSpec::Kind::alt)
    return alternating(spec.n);
  return enumerated(make_group(spec.text, limits));
}

std::string WalkGroup::order_text() const
{
  if (source_ == Source::enumerated)
    return std::to_string(group_->order());
  BigInt f = 1;
  for (std::size_t i = 2; i <= degree_; ++i)
    f *= i;
  if (source_ == Source::alternating && degree_ >= 2)
    f /= 2;
  return f.str();
}

bool WalkGroup::contains(const GroupElement& x) const
{
  if (source_ == Source::enumerated)
    return group_->find(x).has_value();
  const auto* p = std::get_if<Permutation>(&x);
  if (!p || p->degree != degree_)
    return false;
  return source_ == Source::symmetric || is_even(*p);
}

GroupElement WalkGroup::random(Rng& rng) const
{
  if (source_ == Source::enumerated)
    return random_element(*group_, rng);
  Permutation p = random_permutation(degree_, rng);
  if (source_ == Source::alternating && !is_even(p))
    std::swap(p.images[0], p.images[1]);
  return p;
}

GroupElement WalkGroup::parse(std::string_view text) const
{
  if (source_ == Source::enumerated)
    return group_->element(parse_element(*group_, text));
  GroupElement x = Permutation::from_cycles(text, degree_);
  if (!contains(x))
    throw PreconditionError("element " + std::string(text) + " is not in " + name_);
  return x;
}

// ---------------------------------------------------------------------- steps

WalkState start_walk(const WalkGroup& g, std::vector<GroupElement> init, std::uint64_t seed)
{
  return WalkState{std::move(init), g.identity(), 0, Rng(seed)};
}

void acr_step(WalkState& st, const WalkConfig& cfg, const WalkGroup& g)
{
  const std::size_t k = st.tuple.size();
  if (k < 2)
    throw PreconditionError("acr_step needs k >= 2");
  std::size_t i = 0;
  std::size_t j = 0;
  pick_pair(k, st.rng, i, j);
  int branch;
  if (cfg.full_move_set)
    branch = static_cast<int>(st.rng.below(4));
  else
    branch = st.rng.uniform01() < cfg.conjugated_probability ? 1 : 0;
  switch (branch) {
  case 0:
    nielsen_variant(st, i, st.tuple[j]);
    break;
  case 1: {
    const GroupElement w = conjugator(g, cfg, st.rng);
    nielsen_variant(st, i, conj(st.tuple[j], w));
    break;
  }
  case 2:
    st.tuple[i] = inv(st.tuple[i]);
    break;
  default:
    st.tuple[i] = conj(st.tuple[i], conjugator(g, cfg, st.rng));
    break;
  }
  finish_step(st, cfg, i);
}

void pra_step(WalkState& st, const WalkConfig& cfg, const WalkGroup&)
{
  const std::size_t k = st.tuple.size();
  if (k < 2)
    throw PreconditionError("pra_step needs k >= 2");
  std::size_t i = 0;
  std::size_t j = 0;
  pick_pair(k, st.rng, i, j);
  nielsen_variant(st, i, st.tuple[j]);
  finish_step(st, cfg, i);
}

// -------------------------------------------------------------------- samples

GroupElement acr_sample(const WalkGroup& g, const Membership& in_n, const std::vector<GroupElement>& init,
                        const WalkConfig& cfg, Rng& rng)
{
  check_init(g, init, cfg);
  if (in_n)
    for (const auto& x : init)
      if (!in_n(x))
        throw PreconditionError("initial tuple component " + to_string(x) + " is not in N");
  WalkConfig c = cfg;
  c.kind = WalkKind::acr;
  return run_walk(g, init, c, rng);
}

GroupElement pra_sample(const WalkGroup& g, const std::vector<GroupElement>& init, const WalkConfig& cfg, Rng& rng)
{
  check_init(g, init, cfg);
  WalkConfig c = cfg;
  c.kind = WalkKind::pra;
  return run_walk(g, init, c, rng);
}

GroupElement acr_sample(const GroupPtr& g, const Subgroup& n, const Tuple& init, const WalkConfig& cfg, Rng& rng)
{
  if (!n.is_normal())
    throw PreconditionError("acr_sample: N is not normal");
  if (!(normal_closure(g, init) == n))
    throw PreconditionError("acr_sample: initial tuple does not normally generate N");
  const WalkGroup wg = WalkGroup::enumerated(g);
  return acr_sample(wg, nullptr, payloads(*g, init), cfg, rng);
}

GroupElement pra_sample(const GroupPtr& g, const Tuple& init, const WalkConfig& cfg, Rng& rng)
{
  if (!closure(g, init.idx).is_whole())
    throw PreconditionError("pra_sample: initial tuple does not generate G");
  return pra_sample(WalkGroup::enumerated(g), payloads(*g, init), cfg, rng);
}

GroupElement cayley_class_walk(const GroupPtr& g, const Subgroup& n, const Tuple& seeds, std::uint64_t budget,
                               Rng& rng)
{
  if (seeds.size() == 0)
    throw PreconditionError("cayley_class_walk needs at least one seed");
  if (!(normal_closure(g, seeds) == n))
    throw PreconditionError("cayley_class_walk: seeds do not normally generate N");
  std::vector<std::uint8_t> in_union(g->order(), 0);
  for (const auto& cls : conjugacy_classes(*g))
    for (Index y : seeds.idx)
      if (std::binary_search(cls.begin(), cls.end(), y))
        for (Index x : cls)
          in_union[x] = 1;
  std::vector<Index> steps;
  for (Index x = 0; x < g->order(); ++x)
    if (in_union[x])
      steps.push_back(x);
  Index pos = 0;
  for (std::uint64_t s = 0; s < budget; ++s)
    pos = g->mul(pos, steps[rng.below(steps.size())]);
  return g->element(pos);
}

std::uint64_t default_budget(int k, std::size_t degree, std::uint64_t normal_order)
{
  const auto kk = static_cast<std::uint64_t>(std::max(k, 0));
  if (degree > 0)
    return kk * degree * ceil_log2(degree);
  return 4 * kk * ceil_log2(normal_order);
}

std::vector<GroupElement> sample_batch(const WalkGroup& g, const std::vector<GroupElement>& init,
                                       const WalkConfig& cfg, std::uint64_t count, std::uint64_t seed, Exec exec)
{
  check_init(g, init, cfg);
  const Rng root(seed);
  std::vector<GroupElement> out(count, g.identity());
  const auto n = static_cast<long long>(count);
  if (exec == Exec::serial) {
    for (long long s = 0; s < n; ++s) {
      Rng r = root.split(static_cast<std::uint64_t>(s));
      out[s] = run_walk(g, init, cfg, r);
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long long s = 0; s < n; ++s) {
    Rng r = root.split(static_cast<std::uint64_t>(s));
    out[s] = run_walk(g, init, cfg, r);
  }
  return out;
}

// ------------------------------------------------------------------ diagnostic

MixingReport mixing_diagnostic(const std::vector<GroupElement>& samples, const Subgroup& n)
{
  if (samples.empty())
    throw PreconditionError("mixing_diagnostic on an empty sample");
  const FiniteGroup& g = *n.ambient();
  const auto members = n.members();
  std::vector<std::uint64_t> counts(members.size(), 0);
  MixingReport r;
  r.samples = samples.size();
  r.support = members.size();
  for (const auto& s : samples) {
    const auto idx = g.find(s);
    if (!idx || !n.contains(*idx)) {
      ++r.outside;
      continue;
    }
    const auto local = std::lower_bound(members.begin(), members.end(), *idx) - members.begin();
    ++counts[static_cast<std::size_t>(local)];
  }
  const BigInt total = r.samples;
  const BigInt m = r.support;
  BigInt sum = m * r.outside;
  for (auto c : counts) {
    BigInt d = m * c - total;
    sum += d < 0 ? BigInt(-d) : d;
  }
  r.tv_distance = Rational(sum, 2 * total * m);

  if (r.outside > 0) {
    r.pass95 = false;
    return r;
  }
  std::map<std::int64_t, std::uint64_t> observed;
  std::map<std::int64_t, Rational> uniform;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v])
      observed[static_cast<std::int64_t>(v)] = counts[v];
    uniform[static_cast<std::int64_t>(v)] = Rational(1, static_cast<long long>(members.size()));
  }
  const ChiSquaredReport chi = chi_squared_test(observed, uniform);
  r.chi_squared = chi.statistic;
  r.dof = chi.dof;
  r.critical95 = chi.critical;
  r.pass95 = chi.pass;
  return r;
}

} // namespace acg
