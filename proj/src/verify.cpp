#include "acg/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "acg/errors.hpp"
#include "acg/graph.hpp"
#include "acg/stats.hpp"
#include "acg/walkers.hpp"
#include "acg/words.hpp"

namespace acg {

namespace {

class Recorder
{
public:
  void run(const std::string& module, const std::string& name, const std::function<std::string()>& body,
           bool informational = false)
  {
    CheckResult r{module, name, true, informational, ""};
    try {
      r.detail = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

// Throws with a message; the recorder turns it into a failed check.
void expect(bool ok, const std::string& what)
{
  if (!ok)
    throw Error(what);
}

Word random_word(Rng& rng, std::size_t max_len, int letters)
{
  Word w;
  const auto len = rng.below(max_len + 1);
  for (std::uint64_t i = 0; i < len; ++i) {
    const int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(letters))) + 1;
    w.letters.push_back(rng.coin() ? l : -l);
  }
  w.reduced = w.is_reduced();
  return w;
}

std::string group_list(const std::vector<std::string>& names)
{
  std::string s;
  for (const auto& n : names)
    s += (s.empty() ? "" : " ") + n;
  return s;
}

} // namespace

std::vector<std::string> default_corpus()
{
  return {"cyclic:1", "cyclic:5", "abelian:2,2", "abelian:3,3", "abelian:2,4", "sym:3", "sym:4",
          "dihedral:4", "dihedral:6", "alt:4", "alt:5", "sl2:3", "sl2:5"};
}

bool all_passed(const std::vector<CheckResult>& results)
{
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.informational; });
}

std::vector<CheckResult> verify_corpus(const std::vector<std::string>& corpus, const Limits& limits, Exec exec)
{
  Recorder rec;
  std::vector<GroupPtr> groups;
  rec.run("group-core", "parse and order formulas", [&] {
    for (const auto& spec : corpus) {
      const GroupPtr g = make_group(spec, limits);
      expect(g->order() == GroupSpec::parse(spec).expected_order(), spec + ": wrong order");
      groups.push_back(g);
    }
    return std::to_string(groups.size()) + " groups: " + group_list(corpus);
  });

  // ------------------------------------------------------------- group-core
  rec.run("group-core", "inverses", [&] {
    for (const auto& g : groups)
      for (Index a = 0; a < g->order(); ++a) {
        expect(g->mul(a, g->inv(a)) == 0, g->name() + ": a * a^-1 != 1");
        expect(g->inv(g->inv(a)) == a, g->name() + ": inverse table is not an involution");
        expect(is_identity(mul(g->element(a), inv(g->element(a)))), g->name() + ": payload inverse");
      }
    return "all elements";
  });
  rec.run("group-core", "conjugation is an automorphism", [&] {
    std::uint64_t checked = 0;
    Rng rng(0xc0ffee);
    for (const auto& g : groups) {
      const std::uint64_t n = g->order();
      auto check = [&](Index a, Index b, Index w) {
        expect(g->conj(g->mul(a, b), w) == g->mul(g->conj(a, w), g->conj(b, w)),
               g->name() + ": (ab)^w != a^w b^w");
        ++checked;
      };
      if (n * n * n <= 2'000'000) {
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b)
            for (Index w = 0; w < n; ++w)
              check(a, b, w);
      } else {
        for (int t = 0; t < 20000; ++t)
          check(random_index(*g, rng), random_index(*g, rng), random_index(*g, rng));
      }
    }
    return std::to_string(checked) + " triples (exhaustive below 2e6 per group, else 20000 seeded)";
  });
  rec.run("group-core", "closure of the element list", [&] {
    for (const auto& g : groups)
      if (g->order() <= 2048)
        for (Index a = 0; a < g->order(); ++a)
          for (Index b = 0; b < g->order(); ++b)
            expect(g->find(mul(g->element(a), g->element(b))).has_value(), g->name() + ": product not listed");
    return "all products of groups up to order 2048";
  });

  // -------------------------------------------------------- subgroup-lattice
  rec.run("subgroup-lattice", "normal closures are normal", [&] {
    std::uint64_t checked = 0;
    for (const auto& g : groups) {
      if (g->order() > 120)
        continue;
      for (Index x = 0; x < g->order(); ++x) {
        const Index seed[] = {x};
        const Subgroup n = normal_closure(g, seed);
        for (Index m : n.members())
          for (Index w = 0; w < g->order(); ++w)
            expect(n.contains(g->conj(m, w)), g->name() + ": normal closure not closed under conjugation");
        ++checked;
      }
    }
    return std::to_string(checked) + " singleton closures, conjugated by every element";
  });
  rec.run("subgroup-lattice", "nd <= nd_m", [&] {
    std::ostringstream out;
    for (const auto& g : groups) {
      if (g->order() > limits.max_nd_order)
        continue;
      const NdPair p = nd_pair(g, limits);
      expect(p.nd <= p.nd_m, g->name() + ": nd > nd_m");
      out << g->name() << "=(" << p.nd << "," << p.nd_m << ") ";
    }
    return out.str();
  });
  rec.run("subgroup-lattice", "soluble normal generation mod [G,G]", [&] {
    std::uint64_t checked = 0;
    for (const auto& g : groups) {
      if (g->order() > 120 || !is_soluble(g))
        continue;
      const AbelianStructure ab = abelianization(g, limits);
      const std::uint64_t n = g->order();
      for (int k = 1; k <= 2; ++k) {
        const std::uint64_t total = k == 1 ? n : n * n;
        for (std::uint64_t code = 0; code < total; ++code) {
          std::vector<Index> t{static_cast<Index>(code % n)};
          if (k == 2)
            t.push_back(static_cast<Index>(code / n));
          const bool lhs = normal_closure(g, t).is_whole();
          std::vector<Index> proj;
          for (Index x : t)
            proj.push_back(ab.projection_index[x]);
          const bool rhs = closure(ab.group, proj).is_whole();
          expect(lhs == rhs, g->name() + ": lemma fails");
          ++checked;
        }
      }
    }
    return std::to_string(checked) + " tuples (k <= 2)";
  });
  rec.run("subgroup-lattice", "psi_k(G) = psi_k(Ab(G)) for soluble G", [&] {
    std::ostringstream out;
    for (const auto& g : groups) {
      if (!is_soluble(g))
        continue;
      const AbelianStructure ab = abelianization(g, limits);
      for (int k = 1; k <= 2; ++k) {
        const Rational a = psi_k(g, k, limits, exec);
        const Rational b = psi_k(ab.group, k, limits, exec);
        expect(a == b, g->name() + ": psi_" + std::to_string(k) + " " + to_string(a) + " != " + to_string(b));
        out << g->name() << ":psi" << k << "=" << to_string(a) << " ";
      }
    }
    return out.str();
  });
  rec.run("subgroup-lattice", "Mazurov lift always exists", [&] {
    std::uint64_t lifts = 0;
    for (const auto& g : groups) {
      if (g->order() > 48 || g->order() == 1)
        continue;
      const auto normals = normal_subgroups(g);
      const NdPair nd = nd_pair(g, limits);
      const std::uint64_t n = g->order();
      for (int k = 1; k <= 2; ++k) {
        if (nd.nd > k)
          continue;
        for (const auto& m : normals) {
          const std::uint64_t total = k == 1 ? n : n * n;
          for (std::uint64_t code = 0; code < total; ++code) {
            Tuple t{{static_cast<Index>(code % n)}};
            if (k == 2)
              t.idx.push_back(static_cast<Index>(code / n));
            std::vector<Index> seed = t.idx;
            seed.insert(seed.end(), m.members().begin(), m.members().end());
            if (!normal_closure(g, seed).is_whole())
              continue;
            const auto lift = mazurov_lift(g, m, t, limits);
            expect(lift.has_value(), g->name() + ": no lift found");
            expect(normal_closure(g, *lift).is_whole(), g->name() + ": lift does not normally generate");
            for (std::size_t i = 0; i < t.size(); ++i)
              expect(m.contains(g->mul(g->inv(t.idx[i]), lift->idx[i])), g->name() + ": lift leaves the coset");
            ++lifts;
          }
        }
      }
    }
    return std::to_string(lifts) + " lifts over every normal subgroup, k <= 2, |G| <= 48";
  });

  // ---------------------------------------------------------------- ac-graph
  rec.run("ac-graph", "move closure, undirected edges, bitmap = predicate", [&] {
    std::uint64_t edges = 0;
    for (const auto& g : groups) {
      if (g->order() > 24)
        continue;
      std::vector<GraphHandle> graphs;
      graphs.push_back(GraphHandle::delta(g, 2, limits));
      if (!g->generators().empty())
        graphs.push_back(GraphHandle::restricted(g, Subgroup::whole(g), 2, true, limits));
      graphs.push_back(GraphHandle::gamma(g, 2, limits));
      graphs.push_back(GraphHandle::gamma_extended(g, 2, limits));
      const Subgroup derived = derived_subgroup(g);
      if (!derived.is_trivial())
        graphs.push_back(GraphHandle::delta(g, derived, 2, limits));
      for (const auto& h : graphs) {
        for (Code c = 0; c < h.code_space(); ++c) {
          const Tuple t = h.decode(c);
          expect(h.is_vertex(c) == h.vertex_predicate(t), g->name() + " " + to_string(h.mode().kind) +
                                                                ": bitmap disagrees with the predicate");
          if (!h.is_vertex(c))
            continue;
          for (Code u : h.neighbor_codes(c)) {
            expect(h.vertex_predicate(h.decode(u)), g->name() + ": move left the vertex set");
            const auto back = h.neighbor_codes(u);
            expect(std::binary_search(back.begin(), back.end(), c), g->name() + ": edge is not symmetric");
            ++edges;
          }
        }
      }
    }
    return std::to_string(edges) + " directed edge checks over Delta, restricted Delta, Gamma, Gamma~ (|G| <= 24)";
  });
  rec.run("ac-graph", "connected at k = nd + nd_m", [&] {
    std::ostringstream out;
    for (const auto& g : groups) {
      if (g->order() > 60)
        continue;
      const NdPair nd = nd_pair(g, limits);
      const int k = std::max(1, nd.nd + nd.nd_m);
      long double space = 1;
      for (int i = 0; i < k; ++i)
        space *= static_cast<long double>(g->order());
      if (space > static_cast<long double>(limits.max_vertex_codes)) {
        out << g->name() << ":skipped(k=" << k << ") ";
        continue;
      }
      const GraphHandle h = GraphHandle::delta(g, k, limits);
      const auto parts = components(h, exec);
      expect(parts.count() == 1, g->name() + ": " + std::to_string(parts.count()) + " components at k = " +
                                   std::to_string(k));
      out << g->name() << ":k=" << k << " ";
    }
    return out.str();
  });
  rec.run("ac-graph", "restricted and full graphs share components", [&] {
    std::ostringstream out;
    for (const auto& g : groups) {
      if (g->order() > 120 || g->generators().empty())
        continue;
      const auto full = components(GraphHandle::delta(g, 2, limits), exec);
      for (bool sym : {true, false}) {
        const auto restricted = components(GraphHandle::restricted(g, Subgroup::whole(g), 2, sym, limits), exec);
        expect(full.labels == restricted.labels, g->name() + ": partitions differ");
      }
      out << g->name() << ":" << full.count() << " ";
    }
    return out.str();
  });
  rec.run("ac-graph", "restricted diameter <= diameter * Cayley diameter", [&] {
    std::ostringstream out;
    for (const auto& g : groups) {
      if (g->order() > 24 || g->generators().empty())
        continue;
      const GraphHandle full = GraphHandle::delta(g, 2, limits);
      const GraphHandle restricted = GraphHandle::restricted(g, Subgroup::whole(g), 2, true, limits);
      const auto parts = components(full, exec);
      const std::int32_t cay = cayley_diameter(*g, g->generators());
      for (Code rep : parts.representatives) {
        const auto d = diameter(full, rep, {true, exec}).value;
        const auto dr = diameter(restricted, rep, {true, exec}).value;
        expect(dr <= d * cay, g->name() + ": restricted diameter bound fails");
      }
      out << g->name() << ":cay=" << cay << " ";
    }
    return out.str();
  });
  rec.run("ac-graph", "simple groups give connected Delta_2", [&] {
    std::ostringstream out;
    for (const char* spec : {"alt:5", "alt:6", "sl2:5", "sl2:7"}) {
      const GroupPtr g = make_group(spec, limits);
      const GraphHandle h = GraphHandle::delta(g, 2, limits);
      const auto parts = components(h, exec);
      expect(parts.count() == 1, std::string(spec) + ": not connected");
      out << spec << ":" << h.vertex_count() << " ";
    }
    return out.str();
  });

  // ----------------------------------------------------------------- walkers
  rec.run("walkers", "trajectories stay in the vertex set", [&] {
    std::uint64_t steps = 0;
    for (const auto& g : groups) {
      std::vector<Subgroup> targets{Subgroup::whole(g)};
      const Subgroup derived = derived_subgroup(g);
      if (!derived.is_trivial() && !derived.is_whole())
        targets.push_back(derived);
      const WalkGroup wg = WalkGroup::enumerated(g);
      for (const auto& n : targets) {
        if (n.size() * n.size() > 10000)
          continue;
        const GraphHandle h = GraphHandle::delta(g, n, 2, limits);
        if (h.vertex_count() == 0)
          continue;
        const Tuple start = h.decode(h.vertex_codes().front());
        for (int variant = 0; variant < 3; ++variant) {
          WalkConfig cfg;
          cfg.k = 2;
          cfg.cumulative = true;
          cfg.full_move_set = variant == 1;
          if (variant == 2)
            cfg.conjugators = {ConjugatorSource::Kind::random_word, 5};
          std::vector<GroupElement> init;
          for (Index x : start.idx)
            init.push_back(g->element(x));
          WalkState st = start_walk(wg, init, 17 + static_cast<std::uint64_t>(variant));
          for (int s = 0; s < 200; ++s) {
            acr_step(st, cfg, wg);
            Tuple t;
            for (const auto& x : st.tuple)
              t.idx.push_back(g->index_of(x));
            expect(normal_closure(g, t) == n, g->name() + ": acr step changed the normal closure");
            expect(n.contains(g->index_of(st.cumulative)), g->name() + ": cumulative product left N");
            ++steps;
          }
        }
      }
      const GraphHandle gamma = GraphHandle::gamma(g, 2, limits);
      if (gamma.vertex_count() == 0)
        continue;
      const Tuple start = gamma.decode(gamma.vertex_codes().front());
      std::vector<GroupElement> init;
      for (Index x : start.idx)
        init.push_back(g->element(x));
      WalkConfig cfg;
      cfg.kind = WalkKind::pra;
      WalkState st = start_walk(wg, init, 99);
      for (int s = 0; s < 200; ++s) {
        pra_step(st, cfg, wg);
        Tuple t;
        for (const auto& x : st.tuple)
          t.idx.push_back(g->index_of(x));
        expect(closure(g, t.idx).is_whole(), g->name() + ": pra step changed the generated subgroup");
        ++steps;
      }
    }
    return std::to_string(steps) + " steps checked against the closure oracle";
  });
  rec.run("walkers", "outputs lie in N and are seed-deterministic", [&] {
    std::uint64_t samples = 0;
    for (const auto& g : groups) {
      const Subgroup derived = derived_subgroup(g);
      const Subgroup target = derived.is_trivial() ? Subgroup::whole(g) : derived;
      const GraphHandle h = GraphHandle::delta(g, target, 2, limits);
      if (h.vertex_count() == 0)
        continue;
      const Tuple start = h.decode(h.vertex_codes().front());
      WalkConfig cfg;
      cfg.k = 2;
      cfg.budget = 20;
      for (bool cumulative : {false, true}) {
        cfg.cumulative = cumulative;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
          Rng a(seed), b(seed);
          const GroupElement x = acr_sample(g, target, start, cfg, a);
          const GroupElement y = acr_sample(g, target, start, cfg, b);
          expect(x == y, g->name() + ": same seed, different output");
          expect(target.contains(g->index_of(x)), g->name() + ": output outside N");
          ++samples;
        }
      }
    }
    return std::to_string(samples) + " samples";
  });
  rec.run(
    "walkers", "cumulative vs plain TV on Sym_5/Alt_5",
    [&] {
      const GroupPtr g = make_group("sym:5", limits);
      const Subgroup n = derived_subgroup(g);
      const WalkGroup wg = WalkGroup::enumerated(g);
      const std::vector<GroupElement> init{Permutation::from_cycles("(0 1)(2 3)", 5), Permutation::identity(5)};
      WalkConfig cfg;
      cfg.k = 2;
      cfg.budget = default_budget(2, 5, n.size());
      std::ostringstream out;
      for (bool cumulative : {false, true}) {
        cfg.cumulative = cumulative;
        const auto samples = sample_batch(wg, init, cfg, 20000, 5, exec);
        const MixingReport r = mixing_diagnostic(samples, n);
        out << (cumulative ? "cumulative" : "plain") << " TV=" << r.tv_distance.convert_to<double>() << " ";
      }
      return out.str() + "(budget " + std::to_string(cfg.budget) + ", 20000 samples)";
    },
    true);

  // ------------------------------------------------------------------- stats
  rec.run("stats", "sum of Stirling numbers is n!", [&] {
    BigInt fact = 1;
    for (int n = 0; n <= 20; ++n) {
      if (n > 0)
        fact *= n;
      BigInt sum = 0;
      for (int c = 0; c <= n; ++c)
        sum += stirling_first(n, c);
      expect(sum == fact, "n = " + std::to_string(n));
    }
    return "n <= 20";
  });
  rec.run("stats", "cycle distributions match enumeration", [&] {
    for (int n = 1; n <= 8; ++n) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::map<int, std::uint64_t> all, even;
      std::uint64_t n_all = 0, n_even = 0;
      do {
        const Permutation p = Permutation::from_images(img);
        const int c = cycle_count(p);
        ++all[c];
        ++n_all;
        if (is_even(p)) {
          ++even[c];
          ++n_even;
        }
      } while (std::next_permutation(img.begin(), img.end()));
      const auto da = cycle_distribution(n, Parity::all);
      const auto de = cycle_distribution(n, Parity::even_only);
      expect(da.support.size() == all.size() && de.support.size() == even.size(), "support size, n = " +
                                                                                 std::to_string(n));
      for (const auto& [c, cnt] : all)
        expect(da.support.at(c) == Rational(cnt, n_all), "All, n = " + std::to_string(n));
      for (const auto& [c, cnt] : even)
        expect(de.support.at(c) == Rational(cnt, n_even), "EvenOnly, n = " + std::to_string(n));
    }
    return "n <= 8, both parities";
  });
  rec.run("stats", "TV distance range and zero set", [&] {
    Rng rng(4242);
    for (int t = 0; t < 2000; ++t) {
      const std::uint64_t m = 1 + rng.below(8);
      std::vector<std::uint64_t> counts(m);
      for (auto& c : counts)
        c = rng.below(4);
      if (std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == 0)
        counts[0] = 1;
      const Rational tv = tv_distance(counts, m);
      expect(tv >= 0 && tv <= Rational(1) - Rational(1, static_cast<long long>(m)), "TV out of range");
      const bool uniform = std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
      expect((tv == 0) == uniform, "TV zero set");
    }
    return "2000 seeded histograms";
  });
  rec.run("stats", "chi-squared is invariant under relabeling", [&] {
    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
      const int bins = 2 + static_cast<int>(rng.below(10));
      std::vector<std::uint64_t> weights(static_cast<std::size_t>(bins));
      std::uint64_t wsum = 0;
      for (auto& w : weights) {
        w = 1 + rng.below(20);
        wsum += w;
      }
      std::vector<std::uint64_t> obs(static_cast<std::size_t>(bins));
      for (auto& o : obs)
        o = rng.below(50);
      obs[0] += 1;
      std::vector<std::int64_t> relabel(static_cast<std::size_t>(bins));
      std::iota(relabel.begin(), relabel.end(), 100);
      for (std::size_t i = relabel.size(); i > 1; --i)
        std::swap(relabel[i - 1], relabel[rng.below(i)]);
      std::map<std::int64_t, std::uint64_t> o1, o2;
      std::map<std::int64_t, Rational> e1, e2;
      for (int b = 0; b < bins; ++b) {
        o1[b] = obs[b];
        o2[relabel[b]] = obs[b];
        e1[b] = Rational(static_cast<long long>(weights[b]), static_cast<long long>(wsum));
        e2[relabel[b]] = e1[b];
      }
      const auto r1 = chi_squared_test(o1, e1);
      const auto r2 = chi_squared_test(o2, e2);
      expect(r1.dof == r2.dof && std::abs(r1.statistic - r2.statistic) <= 1e-9 * (1 + r1.statistic),
             "statistic changed under relabeling");
    }
    return "200 seeded histograms";
  });

  // ---------------------------------------------------------- conjecture-lab
  rec.run("conjecture-lab", "free reduction is idempotent", [&] {
    Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
      const Word w = random_word(rng, 30, 2);
      expect(w.reduce().reduce() == w.reduce() && w.reduce().is_reduced(), "reduce(reduce(w)) != reduce(w)");
    }
    return "2000 seeded words";
  });
  rec.run("conjecture-lab", "evaluation is a homomorphism", [&] {
    Rng rng(6);
    std::uint64_t checked = 0;
    for (const auto& g : groups) {
      for (int t = 0; t < 200; ++t) {
        const Word a = random_word(rng, 12, 2);
        const Word b = random_word(rng, 12, 2);
        const Index images[] = {random_index(*g, rng), random_index(*g, rng)};
        expect(eval_word(*g, a * b, images) == g->mul(eval_word(*g, a, images), eval_word(*g, b, images)),
               g->name() + ": eval(w1 w2) != eval(w1) eval(w2)");
        const GroupElement payload[] = {g->element(images[0]), g->element(images[1])};
        expect(eval_word(a, payload) == g->element(eval_word(*g, a, images)), g->name() + ": payload evaluation");
        ++checked;
      }
    }
    return std::to_string(checked) + " seeded word pairs";
  });
  rec.run("conjecture-lab", "Akbulut-Kirby map preserves the vertex set", [&] {
    const ExponentMatrix m = exponent_matrix(ak_pair());
    expect(m.det == 1, "AK determinant is " + std::to_string(m.det));
    std::uint64_t checked = 0;
    for (const auto& g : groups) {
      if (g->order() * g->order() > 14400)
        continue;
      const GraphHandle h = GraphHandle::delta(g, 2, limits);
      for (Code c : h.vertex_codes()) {
        const Tuple image = apply_pair_map(ak_pair(), h.decode(c), *g);
        expect(h.is_vertex(image), g->name() + ": image is not a vertex");
        ++checked;
      }
    }
    return "det = 1; " + std::to_string(checked) + " vertices";
  });

  return rec.results;
}

} // namespace acg
