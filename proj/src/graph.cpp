#include "acg/graph.hpp"

#include <algorithm>
#include <numeric>

#include "acg/errors.hpp"

namespace acg {

namespace {
constexpr std::size_t kMaxLocalOrder = 4096;
constexpr int kMaxTupleLength = 16;
} // namespace

std::string to_string(GraphKind kind)
{
  switch (kind) {
  case GraphKind::full_ac:
    return "full-ac";
  case GraphKind::restricted_ac:
    return "restricted-ac";
  case GraphKind::nielsen:
    return "nielsen";
  case GraphKind::extended_nielsen:
    return "extended-nielsen";
  }
  return "?";
}

GraphKind parse_graph_kind(std::string_view text)
{
  if (text == "full-ac")
    return GraphKind::full_ac;
  if (text == "restricted-ac")
    return GraphKind::restricted_ac;
  if (text == "nielsen")
    return GraphKind::nielsen;
  if (text == "extended-nielsen")
    return GraphKind::extended_nielsen;
  throw SpecError("unknown graph mode '" + std::string(text) +
                  "' (expected full-ac, restricted-ac, nielsen or extended-nielsen)");
}

std::string Move::to_string(const FiniteGroup& g) const
{
  const std::string xi = "x" + std::to_string(i + 1);
  const std::string xj = "x" + std::to_string(j + 1) + (sign < 0 ? "^-1" : "");
  switch (kind) {
  case Kind::right_mul:
    return xi + " -> " + xi + "*" + xj;
  case Kind::left_mul:
    return xi + " -> " + xj + "*" + xi;
  case Kind::invert:
    return xi + " -> " + xi + "^-1";
  case Kind::conjugate:
    return xi + " -> " + xi + "^w, w = " + acg::to_string(g.element(conjugator));
  }
  return "?";
}

// ----------------------------------------------------------------- GraphHandle

GraphHandle::GraphHandle(GroupPtr group, Subgroup normal, int k, GraphMode mode, const Limits& limits, Exec exec)
  : group_(std::move(group)), normal_(std::move(normal)), k_(k), mode_(std::move(mode))
{
  if (k_ < 1 || k_ > kMaxTupleLength)
    throw PreconditionError("tuple length k must be in [1, " + std::to_string(kMaxTupleLength) + "]");
  const bool ac = mode_.kind == GraphKind::full_ac || mode_.kind == GraphKind::restricted_ac;
  if (ac && !normal_.is_normal())
    throw PreconditionError("Andrews-Curtis graphs need a normal subgroup N");
  if (!ac && !normal_.is_whole())
    throw PreconditionError("product replacement graphs are defined over the whole group");
  if (mode_.kind == GraphKind::restricted_ac && mode_.conjugators.empty())
    throw PreconditionError("restricted mode needs a nonempty conjugator set S");

  n_ = normal_.size();
  if (n_ > kMaxLocalOrder)
    throw ResourceError("graph_local_order", kMaxLocalOrder, n_);
  weight_.assign(static_cast<std::size_t>(k_) + 1, 1);
  for (int i = 1; i <= k_; ++i) {
    if (weight_[i - 1] > limits.max_vertex_codes / n_ + 1)
      throw ResourceError("max_vertex_codes", limits.max_vertex_codes, UINT64_MAX);
    weight_[i] = weight_[i - 1] * n_;
  }
  code_space_ = weight_[k_];
  if (code_space_ > limits.max_vertex_codes)
    throw ResourceError("max_vertex_codes", limits.max_vertex_codes, code_space_);

  const auto members = normal_.members();
  local_.assign(group_->order(), -1);
  for (std::size_t l = 0; l < n_; ++l)
    local_[members[l]] = static_cast<std::int64_t>(l);

  mul_.resize(n_ * n_);
  inv_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    inv_[a] = static_cast<std::uint32_t>(local_[group_->inv(members[a])]);
    for (std::size_t b = 0; b < n_; ++b)
      mul_[a * n_ + b] = static_cast<std::uint32_t>(local_[group_->mul(members[a], members[b])]);
  }

  std::vector<Index> candidates;
  if (mode_.kind == GraphKind::full_ac) {
    candidates.resize(group_->order());
    std::iota(candidates.begin(), candidates.end(), Index{0});
  } else if (mode_.kind == GraphKind::restricted_ac) {
    for (Index s : mode_.conjugators) {
      if (s >= group_->order())
        throw PreconditionError("conjugator index out of range");
      candidates.push_back(s);
      if (mode_.symmetric_conjugators)
        candidates.push_back(group_->inv(s));
    }
  }
  // One conjugator per distinct action on N; the trivial action adds only
  // self-loops.
  std::vector<std::vector<std::uint32_t>> seen_rows;
  for (Index w : candidates) {
    std::vector<std::uint32_t> row(n_);
    bool trivial = true;
    for (std::size_t x = 0; x < n_; ++x) {
      row[x] = static_cast<std::uint32_t>(local_[group_->conj(members[x], w)]);
      trivial = trivial && row[x] == x;
    }
    if (trivial || std::find(seen_rows.begin(), seen_rows.end(), row) != seen_rows.end())
      continue;
    conj_list_.push_back(w);
    conj_.insert(conj_.end(), row.begin(), row.end());
    seen_rows.push_back(std::move(row));
  }
  inversions_ = mode_.kind != GraphKind::nielsen;

  std::vector<Index> alphabet(members.begin(), members.end());
  ClosureLattice lattice(group_, ac ? ClosureLattice::Kind::normal : ClosureLattice::Kind::subgroup, alphabet, k_);
  if (auto target = lattice.find(alphabet))
    vertex_count_ = census(lattice, k_, *target, &vertex_mask_, exec);
  else
    vertex_mask_.assign(code_space_, 0);
}

GraphHandle GraphHandle::delta(GroupPtr g, Subgroup n, int k, const Limits& limits)
{
  return GraphHandle(std::move(g), std::move(n), k, GraphMode::full(), limits);
}

GraphHandle GraphHandle::delta(GroupPtr g, int k, const Limits& limits)
{
  Subgroup whole = Subgroup::whole(g);
  return GraphHandle(std::move(g), std::move(whole), k, GraphMode::full(), limits);
}

GraphHandle GraphHandle::restricted(GroupPtr g, Subgroup n, int k, bool symmetric, const Limits& limits)
{
  std::vector<Index> s(g->generators().begin(), g->generators().end());
  return GraphHandle(std::move(g), std::move(n), k, GraphMode::restricted(std::move(s), symmetric), limits);
}

GraphHandle GraphHandle::gamma(GroupPtr g, int k, const Limits& limits)
{
  Subgroup whole = Subgroup::whole(g);
  return GraphHandle(std::move(g), std::move(whole), k, GraphMode::nielsen(), limits);
}

GraphHandle GraphHandle::gamma_extended(GroupPtr g, int k, const Limits& limits)
{
  Subgroup whole = Subgroup::whole(g);
  return GraphHandle(std::move(g), std::move(whole), k, GraphMode::extended_nielsen(), limits);
}

Code GraphHandle::encode(const Tuple& t) const
{
  if (static_cast<int>(t.size()) != k_)
    throw PreconditionError("tuple length " + std::to_string(t.size()) + " does not match k = " +
                            std::to_string(k_));
  Code c = 0;
  for (int i = 0; i < k_; ++i) {
    if (t.idx[i] >= group_->order() || local_[t.idx[i]] < 0)
      throw PreconditionError("tuple component " + std::to_string(i + 1) + " is not in N");
    c += static_cast<Code>(local_[t.idx[i]]) * weight_[i];
  }
  return c;
}

Tuple GraphHandle::decode(Code c) const
{
  Tuple t;
  t.idx.resize(k_);
  for (int i = 0; i < k_; ++i) {
    t.idx[i] = normal_.members()[c % n_];
    c /= n_;
  }
  return t;
}

bool GraphHandle::is_vertex(const Tuple& t) const
{
  if (static_cast<int>(t.size()) != k_)
    return false;
  for (Index x : t.idx)
    if (x >= group_->order() || local_[x] < 0)
      return false;
  return is_vertex(encode(t));
}

bool GraphHandle::vertex_predicate(const Tuple& t) const
{
  const bool ac = mode_.kind == GraphKind::full_ac || mode_.kind == GraphKind::restricted_ac;
  for (Index x : t.idx)
    if (x >= group_->order() || local_[x] < 0)
      return false;
  if (ac)
    return normal_closure(group_, t) == normal_;
  return closure(group_, t.idx).is_whole();
}

std::vector<Code> GraphHandle::neighbor_codes(Code c) const
{
  std::vector<Code> out;
  for_each_move(c, [&](Code to, const Move&) { out.push_back(to); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Tuple> GraphHandle::neighbors(const Tuple& v) const
{
  if (!is_vertex(v))
    throw PreconditionError("neighbors: tuple is not a vertex of the graph");
  std::vector<Tuple> out;
  for (Code c : neighbor_codes(encode(v)))
    out.push_back(decode(c));
  return out;
}

std::vector<Code> GraphHandle::vertex_codes() const
{
  std::vector<Code> out;
  out.reserve(vertex_count_);
  for (Code c = 0; c < code_space_; ++c)
    if (vertex_mask_[c])
      out.push_back(c);
  return out;
}

// ------------------------------------------------------------- cover check

CoverReport cover_check(const GroupPtr& g, const Subgroup& m, int k, const Limits& limits, Exec exec)
{
  if (!m.is_normal())
    throw PreconditionError("cover_check: M is not normal");
  const GraphHandle source = GraphHandle::delta(g, k, limits);
  if (source.vertex_count() == 0)
    throw PreconditionError("cover_check: G is not normally generated by " + std::to_string(k) + " elements");
  const Quotient q = quotient(g, m, limits);
  const GraphHandle target = GraphHandle::delta(q.group, k, limits);

  const ComponentPartition pg = components(source, exec);
  const ComponentPartition pq = components(target, exec);

  CoverReport r;
  r.source_vertices = source.vertex_count();
  r.quotient_vertices = target.vertex_count();
  r.source_components = pg.count();
  r.quotient_components = pq.count();
  r.preimage_components.assign(pq.count(), {});

  std::vector<std::uint8_t> hit(target.code_space(), 0);
  std::vector<std::int64_t> image_component(pg.count(), -1);
  for (Code c : source.vertex_codes()) {
    Tuple t = source.decode(c);
    for (auto& x : t.idx)
      x = q.projection[x];
    if (!target.is_vertex(t)) {
      r.images_are_vertices = false;
      continue;
    }
    const Code tc = target.encode(t);
    hit[tc] = 1;
    const auto from = static_cast<std::size_t>(pg.labels[c]);
    const auto to = static_cast<std::int64_t>(pq.labels[tc]);
    if (image_component[from] < 0)
      image_component[from] = to;
    else if (image_component[from] != to)
      r.components_respected = false;
  }
  r.quotient_vertices_hit = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1));
  r.surjective = r.images_are_vertices && r.quotient_vertices_hit == r.quotient_vertices;
  for (std::size_t c = 0; c < image_component.size(); ++c)
    if (image_component[c] >= 0)
      r.preimage_components[static_cast<std::size_t>(image_component[c])].push_back(c);
  return r;
}

SolubleComponentReport soluble_component_check(const GroupPtr& g, int k, const Limits& limits, Exec exec)
{
  if (!is_soluble(g))
    throw PreconditionError("soluble_component_check: group is not soluble");
  if (GraphHandle::gamma(g, k, limits).vertex_count() == 0)
    throw PreconditionError("soluble_component_check: group is not generated by " + std::to_string(k) +
                            " elements");
  const AbelianStructure ab = abelianization(g, limits);
  const GraphHandle hg = GraphHandle::delta(g, k, limits);
  const GraphHandle ha = GraphHandle::gamma_extended(ab.group, k, limits);
  const ComponentPartition pg = components(hg, exec);
  const ComponentPartition pa = components(ha, exec);

  SolubleComponentReport r;
  r.group_components = pg.count();
  r.abelian_components = pa.count();
  std::vector<std::int64_t> map(pg.count(), -1);
  for (Code c : hg.vertex_codes()) {
    Tuple t = hg.decode(c);
    for (auto& x : t.idx)
      x = ab.projection_index[x];
    if (!ha.is_vertex(t)) {
      r.projection_lands_in_vertices = false;
      continue;
    }
    const auto from = static_cast<std::size_t>(pg.labels[c]);
    const std::int64_t to = pa.labels[ha.encode(t)];
    if (map[from] < 0)
      map[from] = to;
    else if (map[from] != to)
      r.components_respected = false;
  }
  std::vector<int> hits(pa.count(), 0);
  bool all_mapped = true;
  for (auto m : map) {
    if (m < 0) {
      all_mapped = false;
      continue;
    }
    ++hits[static_cast<std::size_t>(m)];
    r.component_map.push_back(static_cast<std::size_t>(m));
  }
  r.bijective = r.projection_lands_in_vertices && r.components_respected && all_mapped &&
                std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  return r;
}

std::int32_t cayley_diameter(const FiniteGroup& g, std::span<const Index> generators)
{
  std::vector<Index> moves;
  for (Index s : generators) {
    moves.push_back(s);
    moves.push_back(g.inv(s));
  }
  std::vector<std::int32_t> dist(g.order(), -1);
  std::vector<Index> queue{0};
  dist[0] = 0;
  std::int32_t far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index x = queue[head];
    for (Index s : moves) {
      const Index y = g.mul(x, s);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        far = std::max(far, dist[y]);
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != g.order())
    throw PreconditionError("cayley_diameter: the set does not generate the group");
  return far;
}

} // namespace acg
