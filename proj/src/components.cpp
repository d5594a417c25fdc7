#include <algorithm>
#include <atomic>

#include <omp.h>

#include "acg/errors.hpp"
#include "acg/graph.hpp"

namespace acg {

namespace {

void label_serial(const GraphHandle& h, ComponentPartition& p)
{
  std::vector<Code> queue;
  for (Code c = 0; c < h.code_space(); ++c) {
    if (!h.is_vertex(c) || p.labels[c] >= 0)
      continue;
    const auto id = static_cast<std::int32_t>(p.sizes.size());
    queue.assign(1, c);
    p.labels[c] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      h.for_each_move(queue[head], [&](Code to, const Move&) {
        if (p.labels[to] < 0) {
          p.labels[to] = id;
          queue.push_back(to);
        }
      });
    p.sizes.push_back(queue.size());
    p.representatives.push_back(c);
  }
}

void label_parallel(const GraphHandle& h, ComponentPartition& p)
{
  std::vector<Code> frontier;
  for (Code c = 0; c < h.code_space(); ++c) {
    if (!h.is_vertex(c) || p.labels[c] >= 0)
      continue;
    const auto id = static_cast<std::int32_t>(p.sizes.size());
    p.labels[c] = id;
    frontier.assign(1, c);
    std::uint64_t size = 1;
    while (!frontier.empty()) {
      std::vector<Code> next;
#pragma omp parallel
      {
        std::vector<Code> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long f = 0; f < static_cast<long long>(frontier.size()); ++f)
          h.for_each_move(frontier[static_cast<std::size_t>(f)], [&](Code to, const Move&) {
            std::atomic_ref<std::int32_t> slot(p.labels[to]);
            std::int32_t expected = -1;
            if (slot.load(std::memory_order_relaxed) < 0 &&
                slot.compare_exchange_strong(expected, id, std::memory_order_relaxed))
              local.push_back(to);
          });
#pragma omp critical
        next.insert(next.end(), local.begin(), local.end());
      }
      size += next.size();
      frontier = std::move(next);
    }
    p.sizes.push_back(size);
    p.representatives.push_back(c);
  }
}

// BFS from `source` using caller-owned scratch; returns the eccentricity and
// resets the scratch before returning.
std::int32_t eccentricity(const GraphHandle& h, Code source, std::vector<std::int32_t>& dist,
                          std::vector<Code>& queue)
{
  queue.assign(1, source);
  dist[source] = 0;
  std::int32_t far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Code x = queue[head];
    const std::int32_t d = dist[x] + 1;
    h.for_each_move(x, [&](Code to, const Move&) {
      if (dist[to] < 0) {
        dist[to] = d;
        far = d;
        queue.push_back(to);
      }
    });
  }
  for (Code x : queue)
    dist[x] = -1;
  return far;
}

void require_vertex(const GraphHandle& h, Code c, const char* what)
{
  if (!h.is_vertex(c))
    throw PreconditionError(std::string(what) + " is not a vertex of the graph");
}

} // namespace

ComponentPartition components(const GraphHandle& h, Exec exec)
{
  ComponentPartition p;
  p.labels.assign(h.code_space(), -1);
  if (exec == Exec::serial)
    label_serial(h, p);
  else
    label_parallel(h, p);
  return p;
}

std::vector<std::int32_t> bfs_distances(const GraphHandle& h, Code source)
{
  require_vertex(h, source, "source");
  std::vector<std::int32_t> dist(h.code_space(), -1);
  std::vector<Code> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Code x = queue[head];
    h.for_each_move(x, [&](Code to, const Move&) {
      if (dist[to] < 0) {
        dist[to] = dist[x] + 1;
        queue.push_back(to);
      }
    });
  }
  return dist;
}

std::vector<std::int32_t> eccentricities(const GraphHandle& h, const std::vector<Code>& sources, Exec exec)
{
  for (Code s : sources)
    require_vertex(h, s, "source");
  std::vector<std::int32_t> out(sources.size(), 0);
  const auto n = static_cast<long long>(sources.size());
  if (exec == Exec::serial) {
    std::vector<std::int32_t> dist(h.code_space(), -1);
    std::vector<Code> queue;
    for (long long i = 0; i < n; ++i)
      out[i] = eccentricity(h, sources[i], dist, queue);
    return out;
  }
#pragma omp parallel
  {
    std::vector<std::int32_t> dist(h.code_space(), -1);
    std::vector<Code> queue;
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i)
      out[i] = eccentricity(h, sources[i], dist, queue);
  }
  return out;
}

DiameterResult diameter(const GraphHandle& h, Code member, const DiameterOptions& opts)
{
  require_vertex(h, member, "member");
  const auto dist = bfs_distances(h, member);
  DiameterResult r;
  r.sweeps = 1;
  std::int32_t lower = 0;
  Code far = member;
  std::vector<Code> comp;
  for (Code c = 0; c < h.code_space(); ++c)
    if (dist[c] >= 0) {
      comp.push_back(c);
      if (dist[c] > lower) {
        lower = dist[c];
        far = c;
      }
    }
  std::int32_t upper = 2 * lower;

  if (!opts.exact) {
    lower = std::max(lower, eccentricities(h, {far}, Exec::serial)[0]);
    ++r.sweeps;
    r.value = lower;
    r.exact = lower == upper;
    return r;
  }

  constexpr std::size_t kBatch = 64;
  for (std::size_t start = 0; start < comp.size() && lower < upper; start += kBatch) {
    const std::vector<Code> batch(comp.begin() + static_cast<std::ptrdiff_t>(start),
                                  comp.begin() + static_cast<std::ptrdiff_t>(std::min(comp.size(), start + kBatch)));
    const auto ecc = eccentricities(h, batch, opts.exec);
    r.sweeps += batch.size();
    for (auto e : ecc) {
      lower = std::max(lower, e);
      upper = std::min(upper, 2 * e);
    }
  }
  r.value = lower;
  r.exact = true;
  return r;
}

DistanceResult distance(const GraphHandle& h, const Tuple& u, const Tuple& v, bool with_path)
{
  if (!h.is_vertex(u))
    throw PreconditionError("distance: u is not a vertex of the graph");
  if (!h.is_vertex(v))
    throw PreconditionError("distance: v is not a vertex of the graph");
  const Code src = h.encode(u);
  const Code dst = h.encode(v);
  DistanceResult r;
  if (src == dst) {
    r.distance = 0;
    return r;
  }
  std::vector<std::int32_t> dist(h.code_space(), -1);
  std::vector<Code> parent;
  std::vector<Move> via;
  if (with_path) {
    parent.assign(h.code_space(), 0);
    via.assign(h.code_space(), Move{});
  }
  std::vector<Code> queue{src};
  dist[src] = 0;
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const Code x = queue[head];
    h.for_each_move(x, [&](Code to, const Move& m) {
      if (dist[to] >= 0)
        return;
      dist[to] = dist[x] + 1;
      if (with_path) {
        parent[to] = x;
        via[to] = m;
      }
      if (to == dst)
        found = true;
      queue.push_back(to);
    });
  }
  if (!found)
    return r;
  r.distance = dist[dst];
  if (with_path) {
    for (Code c = dst; c != src; c = parent[c])
      r.path.push_back({via[c], c});
    std::reverse(r.path.begin(), r.path.end());
  }
  return r;
}

} // namespace acg
