#include "acg/words.hpp"

#include <cctype>
#include <cstdlib>

#include "acg/errors.hpp"

namespace acg {

// ----------------------------------------------------------------------- Word

Word Word::parse(std::string_view text, std::string_view alphabet, bool reduce)
{
  Word w;
  std::size_t pos = 0;
  bool last_is_letter = false;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if (c == '1' && !last_is_letter) {
      ++pos;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      const auto g = alphabet.find(lower);
      if (g == std::string_view::npos)
        throw SpecError("letter '" + std::string(1, c) + "' is not in the alphabet '" + std::string(alphabet) + "'");
      const int letter = static_cast<int>(g) + 1;
      w.letters.push_back(std::islower(static_cast<unsigned char>(c)) ? letter : -letter);
      last_is_letter = true;
      ++pos;
      continue;
    }
    if (c == '^') {
      if (!last_is_letter)
        throw SpecError("'^' must follow a letter in '" + std::string(text) + "'");
      ++pos;
      int sign = 1;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      }
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start || pos - start > 6)
        throw SpecError("bad exponent in '" + std::string(text) + "'");
      const int e = std::atoi(std::string(text.substr(start, pos - start)).c_str());
      const int base = w.letters.back();
      w.letters.pop_back();
      for (int t = 0; t < e; ++t)
        w.letters.push_back(sign * base);
      last_is_letter = false;
      continue;
    }
    throw SpecError("unexpected character '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
  }
  w.reduced = w.is_reduced();
  return reduce ? w.reduce() : w;
}

Word Word::reduce() const
{
  Word out;
  for (int l : letters) {
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  out.reduced = true;
  return out;
}

bool Word::is_reduced() const
{
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == -letters[i - 1])
      return false;
  return true;
}

std::int64_t Word::exponent_sum(int generator) const
{
  std::int64_t s = 0;
  for (int l : letters) {
    if (l == generator + 1)
      ++s;
    else if (l == -(generator + 1))
      --s;
  }
  return s;
}

std::string Word::to_string(std::string_view alphabet) const
{
  if (letters.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i])
      ++j;
    const int l = letters[i];
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (!out.empty())
      out += ' ';
    out += g < alphabet.size() ? std::string(1, alphabet[g]) : "g" + std::to_string(g + 1);
    const auto run = static_cast<long>(j - i);
    const long e = l > 0 ? run : -run;
    if (e != 1)
      out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word Word::operator*(const Word& o) const
{
  Word w;
  w.letters = letters;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  if (reduced && o.reduced)
    return w.reduce();
  w.reduced = w.is_reduced();
  return w;
}

// ---------------------------------------------------------------------- pairs

const WordPair& ak_pair()
{
  static const WordPair pair = [] {
    WordPair p{Word::parse("x^3 y^-4"), Word::parse("x y x y^-1 x^-1 y^-1")};
    const ExponentMatrix m = exponent_matrix(p);
    if (m.rows[0] != std::array<std::int64_t, 2>{3, -4} || m.rows[1] != std::array<std::int64_t, 2>{1, -1} ||
        m.det != 1)
      throw Error("Akbulut-Kirby pair failed its exponent-matrix self-check");
    return p;
  }();
  return pair;
}

WordPair identity_pair()
{
  return {Word::parse("x"), Word::parse("y")};
}

GroupElement eval_word(const Word& w, std::span<const GroupElement> images)
{
  if (images.empty())
    throw PreconditionError("eval_word needs at least one image to fix the realization");
  GroupElement out = identity_like(images.front());
  for (int l : w.letters) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= images.size())
      throw PreconditionError("word uses generator " + std::to_string(g + 1) + " but only " +
                              std::to_string(images.size()) + " images were given");
    out = mul(out, l > 0 ? images[g] : inv(images[g]));
  }
  return out;
}

Index eval_word(const FiniteGroup& g, const Word& w, std::span<const Index> images)
{
  Index out = 0;
  for (int l : w.letters) {
    const auto x = static_cast<std::size_t>(std::abs(l) - 1);
    if (x >= images.size())
      throw PreconditionError("word uses generator " + std::to_string(x + 1) + " but only " +
                              std::to_string(images.size()) + " images were given");
    out = g.mul(out, l > 0 ? images[x] : g.inv(images[x]));
  }
  return out;
}

ExponentMatrix exponent_matrix(const WordPair& p)
{
  for (const Word* w : {&p.u, &p.v})
    for (int l : w->letters)
      if (std::abs(l) > 2)
        throw PreconditionError("exponent_matrix needs words over x and y");
  ExponentMatrix m;
  m.rows[0] = {p.u.exponent_sum(0), p.u.exponent_sum(1)};
  m.rows[1] = {p.v.exponent_sum(0), p.v.exponent_sum(1)};
  m.det = m.rows[0][0] * m.rows[1][1] - m.rows[0][1] * m.rows[1][0];
  return m;
}

Tuple apply_pair_map(const WordPair& p, const Tuple& t, const FiniteGroup& g)
{
  if (t.size() != 2)
    throw PreconditionError("pair map needs a 2-tuple");
  for (Index x : t.idx)
    if (x >= g.order())
      throw PreconditionError("tuple index out of range");
  return Tuple{{eval_word(g, p.u, t.idx), eval_word(g, p.v, t.idx)}};
}

// ----------------------------------------------------------------------- scan

ScanReport scan_quotient(const GraphHandle& h, const Tuple& t, const WordPair& p, bool with_geodesic, Exec exec)
{
  if (h.k() != 2)
    throw PreconditionError("scan needs a graph on pairs (k = 2)");
  if (!h.is_vertex(t))
    throw PreconditionError("scan: base tuple is not a vertex of the graph");
  ScanReport r;
  r.exponents = exponent_matrix(p);
  if (!r.exponents.unimodular())
    throw PreconditionError("scan: exponent matrix has determinant " + std::to_string(r.exponents.det) +
                            ", expected +-1");
  r.base = t;
  r.image = apply_pair_map(p, t, *h.group());
  r.image_is_vertex = h.is_vertex(r.image);
  if (!r.image_is_vertex && h.mode().kind == GraphKind::full_ac && h.normal().is_whole())
    throw Error("pair map sent a vertex of Delta_2(G,G) outside the vertex set");

  const ComponentPartition parts = components(h, exec);
  r.component_count = parts.count();
  const Code bc = h.encode(t);
  r.base_component_size = parts.sizes[static_cast<std::size_t>(parts.labels[bc])];
  if (!r.image_is_vertex)
    return r;
  const Code ic = h.encode(r.image);
  r.image_component_size = parts.sizes[static_cast<std::size_t>(parts.labels[ic])];
  r.same_component = parts.labels[bc] == parts.labels[ic];
  if (r.same_component) {
    DistanceResult d = distance(h, t, r.image, with_geodesic);
    r.distance = d.distance;
    r.geodesic = std::move(d.path);
  }
  return r;
}

Tuple base_tuple(const FiniteGroup& g, int k)
{
  const auto gens = g.generators();
  if (static_cast<int>(gens.size()) > k)
    throw PreconditionError(g.name() + " has " + std::to_string(gens.size()) + " default generators, more than k = " +
                            std::to_string(k));
  Tuple t{std::vector<Index>(gens.begin(), gens.end())};
  t.idx.resize(static_cast<std::size_t>(k), 0);
  return t;
}

GraphHandle scan_graph(const GroupPtr& g, GraphKind mode, int k, bool symmetric_conjugators, const Limits& limits)
{
  switch (mode) {
  case GraphKind::full_ac:
    return GraphHandle::delta(g, k, limits);
  case GraphKind::restricted_ac:
    return GraphHandle::restricted(g, Subgroup::whole(g), k, symmetric_conjugators, limits);
  case GraphKind::nielsen:
    return GraphHandle::gamma(g, k, limits);
  case GraphKind::extended_nielsen:
    return GraphHandle::gamma_extended(g, k, limits);
  }
  throw PreconditionError("unknown graph mode");
}

std::vector<SeriesRow> distance_series(const std::vector<std::string>& specs, const WordPair& p, GraphKind mode,
                                       bool symmetric_conjugators, const Limits& limits, Exec exec)
{
  std::vector<SeriesRow> rows(specs.size());
  const auto n = static_cast<long long>(specs.size());
  const Exec inner = exec == Exec::parallel && n > 1 ? Exec::serial : exec;
  auto run_row = [&](long long r) {
    SeriesRow& row = rows[static_cast<std::size_t>(r)];
    row.spec = specs[static_cast<std::size_t>(r)];
    try {
      const GroupPtr g = make_group(row.spec, limits);
      row.order = g->order();
      const GraphHandle h = scan_graph(g, mode, 2, symmetric_conjugators, limits);
      row.scan = scan_quotient(h, base_tuple(*g, 2), p, false, inner);
    } catch (const Error& e) {
      row.error = e.what();
    }
  };
  if (exec == Exec::serial) {
    for (long long r = 0; r < n; ++r)
      run_row(r);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long r = 0; r < n; ++r)
      run_row(r);
  }
  return rows;
}

} // namespace acg
