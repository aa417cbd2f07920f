#include "odiam/partition.hpp"

#include <algorithm>
#include <sstream>

#include "odiam/error.hpp"

namespace odiam {

namespace {

constexpr std::array<std::pair<int, int>, 8> kLegalClasses = {
    {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}, {3, 4}, {4, 3}, {4, 4}}};

template <std::size_t N>
VertexSet span_union(const std::array<VertexSet, N>& family, int first, int last) {
  VertexSet out(family[0].universe());
  for (int i = first; i <= last; ++i) out |= family[static_cast<std::size_t>(i - 1)];
  return out;
}

// Members of s that are adjacent to some vertex of x.
VertexSet touching(const Multigraph& g, const VertexSet& s, const VertexSet& x) {
  VertexSet out(s.universe());
  for (VertexId w : s.members()) {
    if (!isolated_in(g, w, x)) out.insert(w);
  }
  return out;
}

// Members of s that are isolated in G[s].
VertexSet isolated_part(const Multigraph& g, const VertexSet& s) {
  VertexSet out(s.universe());
  for (VertexId w : s.members()) {
    if (isolated_in(g, w, s)) out.insert(w);
  }
  return out;
}

void collect_paths(const Multigraph& g, const std::vector<int>& dist,
                   std::vector<VertexId>& prefix, std::vector<std::vector<VertexId>>& out) {
  VertexId x = prefix.back();
  int d = dist[static_cast<std::size_t>(x)];
  if (d == 0) {
    out.push_back(prefix);
    return;
  }
  for (VertexId y : g.neighbors(x)) {
    if (dist[static_cast<std::size_t>(y)] == d - 1) {
      prefix.push_back(y);
      collect_paths(g, dist, prefix, out);
      prefix.pop_back();
    }
  }
}

using Path = std::vector<VertexId>;

struct SidePaths {
  std::vector<int> dist;
  std::map<VertexId, std::vector<Path>> paths;
};

SidePaths paths_for(const Multigraph& g, const VertexSet& members, const VertexSet& target) {
  SidePaths sp;
  sp.dist = distances_to_set(g, target);
  for (VertexId w : members.members()) sp.paths[w] = shortest_paths_to_set(g, sp.dist, w);
  return sp;
}

// Every shortest path of the given length satisfies pred (and one exists).
template <class Pred>
bool all_paths(const SidePaths& sp, VertexId w, int length, Pred pred) {
  if (sp.dist[static_cast<std::size_t>(w)] != length) return false;
  const auto& ps = sp.paths.at(w);
  return !ps.empty() && std::all_of(ps.begin(), ps.end(), pred);
}

template <class Pred>
bool some_path(const SidePaths& sp, VertexId w, int length, Pred pred) {
  if (sp.dist[static_cast<std::size_t>(w)] != length) return false;
  const auto& ps = sp.paths.at(w);
  return std::any_of(ps.begin(), ps.end(), pred);
}

[[noreturn]] void unsatisfiable(const Multigraph& g, VertexId w, const std::string& what) {
  std::ostringstream os;
  os << "vertex " << w << " fits no class of " << what << "; N(w) = {";
  const auto& nb = g.neighbors(w);
  for (std::size_t i = 0; i < nb.size(); ++i) os << (i ? "," : "") << nb[i];
  os << "}";
  throw Error(ErrorCode::kDefinitionUnsatisfiable, os.str());
}

// The per-side refinement. `home` is the side being refined, `away` the
// opposite one; `away_fine` may be read only for stages already completed.
class SideBuilder {
 public:
  SideBuilder(const Multigraph& g, const CoarsePartition& c, int side, FineSide& home_fine,
              const FineSide& away_fine)
      : g_(g),
        c_(c),
        n_(g.vertex_count()),
        home_(c.side[static_cast<std::size_t>(side)]),
        away_(c.side[static_cast<std::size_t>(1 - side)]),
        f_(home_fine),
        o_(away_fine) {}

  void k_split() {
    f_.k[0] = home_.k & g_.neighborhood_of(c_.s33 | away_.k);
    f_.k[1] = home_.k - f_.k[0];
  }

  void i_split() {
    const VertexSet& I = home_.i;
    auto& fi = f_.i;
    fi[0] = touching(g_, I, away_.i);
    fi[1] = touching(g_, I, c_.s33) - fi[0];
    fi[2] = touching(g_, I, f_.k[0]) - fi[0] - fi[1];
    VertexSet rest = I - fi[0] - fi[1] - fi[2];
    fi[3] = touching(g_, rest, fi[0]);
    rest -= fi[3];
    fi[4] = touching(g_, rest, fi[1]);
    rest -= fi[4];
    fi[5] = touching(g_, rest, fi[3]);
    rest -= fi[5];
    fi[6] = touching(g_, rest, f_.k[1]);
    fi[7] = rest - fi[6];
  }

  void a_split() {
    VertexSet rest = home_.a;
    for (std::size_t j = 0; j < 8; ++j) {
      f_.a[j] = touching(g_, rest, f_.i[j]);
      rest -= f_.a[j];
    }
    f_.a[8] = touching(g_, rest, f_.a[0]);
    f_.a[9] = rest - f_.a[8];
  }

  void k_prime_top() {
    const VertexSet& B = away_.a;
    kpaths_ = paths_for(g_, home_.k_prime, B);
    f_.dist_to_opposite_a = kpaths_.dist;
    const VertexSet L1 = o_.k[0];
    const VertexSet J123 = span_union(o_.i, 1, 3);
    VertexSet rest = home_.k_prime;
    for (VertexId w : rest.members()) {
      const auto& ps = kpaths_.paths.at(w);
      if (!ps.empty()) f_.witness_path[w] = ps.front();
      if (all_paths(kpaths_, w, 4, [&](const Path& p) {
            return f_.k[1].contains(p[1]) && f_.i[0].contains(p[2]) && o_.i[0].contains(p[3]);
          })) {
        f_.kp[0].insert(w);
      } else if (some_path(kpaths_, w, 4, [&](const Path& p) {
                   return f_.k[0].contains(p[1]) && (c_.s33.contains(p[2]) || L1.contains(p[2])) &&
                          J123.contains(p[3]);
                 })) {
        f_.kp[1].insert(w);
      }
    }
    rest -= f_.kp[0] | f_.kp[1];
    f_.kp[2] = isolated_part(g_, rest);
    rest -= f_.kp[2];
    for (VertexId w : rest.members()) {
      int d = kpaths_.dist[static_cast<std::size_t>(w)];
      if (d == 3) {
        f_.kp[3].insert(w);
      } else if (d == 4) {
        f_.kp[4].insert(w);
      } else {
        unsatisfiable(g_, w, "K'_1..K'_5");
      }
    }
  }

  void i_prime_top() {
    const VertexSet& J = away_.i;
    ipaths_ = paths_for(g_, home_.i_prime, J);
    f_.dist_to_opposite_i = ipaths_.dist;
    const VertexSet& Ip = home_.i_prime;
    const VertexSet A1 = f_.a[0];
    const VertexSet A_rest = home_.a - A1;
    const VertexSet I1 = f_.i[0];
    const VertexSet I234 = span_union(f_.i, 2, 4);
    const VertexSet I3_5678 = f_.i[2] | span_union(f_.i, 5, 8);
    const VertexSet I78 = f_.i[6] | f_.i[7];
    const VertexSet L1 = o_.k[0];
    const VertexSet A1K2Kp = A1 | f_.k[1] | home_.k_prime;

    auto first_shape = [&](const Path& p) {
      return A_rest.contains(p[1]) && Ip.contains(p[2]) && I1.contains(p[3]);
    };
    VertexSet rest = Ip;
    for (VertexId w : Ip.members()) {
      const auto& ps = ipaths_.paths.at(w);
      if (!ps.empty()) f_.witness_path[w] = ps.front();
      if (all_paths(ipaths_, w, 4, first_shape)) {
        f_.ip[0].insert(w);
      } else if (some_path(ipaths_, w, 4, [&](const Path& p) {
                   return I3_5678.contains(p[1]) &&
                          (I234.contains(p[2]) || Ip.contains(p[2]) || f_.k[0].contains(p[2])) &&
                          (c_.s33.contains(p[3]) || I1.contains(p[3]) || L1.contains(p[3]));
                 })) {
        f_.ip[1].insert(w);
      } else if (all_paths(ipaths_, w, 4, [&](const Path& p) {
                   return (I78.contains(p[1]) && A1K2Kp.contains(p[2]) && I1.contains(p[3])) ||
                          first_shape(p);
                 })) {
        f_.ip[2].insert(w);
      } else if (some_path(ipaths_, w, 3, [&](const Path& p) {
                   return I234.contains(p[1]) && (I1.contains(p[2]) || c_.s33.contains(p[2]));
                 })) {
        f_.ip[3].insert(w);
      }
    }
    rest -= span_union(f_.ip, 1, 4);
    f_.ip[4] = isolated_part(g_, rest);
    rest -= f_.ip[4];
    for (VertexId w : rest.members()) {
      int d = ipaths_.dist[static_cast<std::size_t>(w)];
      if (d < 2 || d > 4) unsatisfiable(g_, w, "I'_1..I'_8");
      f_.ip[static_cast<std::size_t>(d + 3)].insert(w);
    }
  }

  void i8_split() {
    VertexSet candidates(n_);
    for (VertexId w : f_.ip[2].members()) {
      if (ipaths_.dist[static_cast<std::size_t>(w)] != 4) continue;
      for (const Path& p : ipaths_.paths.at(w)) {
        if (f_.i[7].contains(p[1]) && f_.a[0].contains(p[2]) && f_.i[0].contains(p[3])) {
          candidates.insert(p[1]);
        }
      }
    }
    f_.i8[0] = candidates - touching(g_, candidates, f_.kp[1]);
    f_.i8[1] = f_.i[7] - f_.i8[0];
  }

  void k_prime_sub() {
    const VertexSet I567 = span_union(f_.i, 5, 7);
    const VertexSet I_not_i81 = home_.i - f_.i8[0];
    const VertexSet strong = I567 | f_.i8[1] | home_.k;
    for (VertexId w : f_.kp[2].members()) {
      bool hit = !isolated_in(g_, w, strong);
      for (VertexId x : g_.neighbors(w)) {
        if (f_.kp[0].contains(x) && !isolated_in(g_, x, I_not_i81)) hit = true;
      }
      (hit ? f_.kp3[0] : f_.kp3[1]).insert(w);
    }

    f_.kp4[0] = touching(g_, f_.kp[3], f_.kp[4]);
    VertexSet rest4 = f_.kp[3] - f_.kp4[0];
    f_.kp4[1] = isolated_part(g_, rest4);
    f_.kp4[2] = rest4 - f_.kp4[1];

    f_.kp5[0] = touching(g_, f_.kp[4], f_.kp[3]);
    VertexSet rest5 = f_.kp[4] - f_.kp5[0];
    f_.kp5[1] = isolated_part(g_, rest5) | touching(g_, rest5, I567 | f_.i8[1]);
    VertexSet rest5b = rest5 - f_.kp5[1];
    f_.kp5[2] = isolated_part(g_, rest5b);
    f_.kp5[3] = rest5b - f_.kp5[2];
  }

  void a10_split() {
    VertexSet on_path(n_);
    for (VertexId w : f_.ip[0].members()) {
      for (const Path& p : ipaths_.paths.at(w)) {
        for (VertexId x : p) on_path.insert(x);
      }
    }
    f_.a10[0] = f_.a[9] & on_path;
    f_.a10[1] = f_.a[9] - f_.a10[0];
  }

  void i_prime_sub() {
    const auto& ip = f_.ip;
    f_.ip6[0] = touching(g_, ip[5], ip[6]);
    VertexSet r6 = ip[5] - f_.ip6[0];
    f_.ip6[1] = isolated_part(g_, r6);
    f_.ip6[2] = r6 - f_.ip6[1];

    f_.ip7[0] = touching(g_, ip[6], ip[5]);
    VertexSet r7 = ip[6] - f_.ip7[0];
    f_.ip7[1] = touching(g_, r7, ip[7]);
    r7 -= f_.ip7[1];
    f_.ip7[2] = isolated_part(g_, r7);
    f_.ip7[3] = r7 - f_.ip7[2];

    f_.ip8[0] = touching(g_, ip[7], ip[6]);
    VertexSet r8 = ip[7] - f_.ip8[0];
    f_.ip8[1] = isolated_part(g_, r8) | touching(g_, r8, f_.a[9]);
    r8 -= f_.ip8[1];
    f_.ip8[2] = isolated_part(g_, r8);
    f_.ip8[3] = r8 - f_.ip8[2];

    f_.ip1[0] = touching(g_, ip[0], f_.ip7[2]);
    VertexSet r1 = ip[0] - f_.ip1[0];
    f_.ip1[1] = isolated_part(g_, r1) | touching(g_, r1, f_.a10[1]);
    r1 -= f_.ip1[1];
    f_.ip1[2] = isolated_part(g_, r1);
    f_.ip1[3] = r1 - f_.ip1[2];
  }

 private:
  const Multigraph& g_;
  const CoarsePartition& c_;
  int n_;
  const CoarseSide& home_;
  const CoarseSide& away_;
  FineSide& f_;
  const FineSide& o_;
  SidePaths ipaths_;
  SidePaths kpaths_;
};

void init_side(FineSide& f, int n) {
  auto fill = [n](auto& arr) {
    for (auto& s : arr) s = VertexSet(n);
  };
  fill(f.k);
  fill(f.i);
  fill(f.a);
  fill(f.a10);
  fill(f.i8);
  fill(f.ip);
  fill(f.ip1);
  fill(f.ip6);
  fill(f.ip7);
  fill(f.ip8);
  fill(f.kp);
  fill(f.kp3);
  fill(f.kp4);
  fill(f.kp5);
}

struct Letters {
  char a, i, k;
};
constexpr std::array<Letters, 2> kLetters = {{{'A', 'I', 'K'}, {'B', 'J', 'L'}}};

template <std::size_t N>
void name_family(std::vector<std::string>& leaf, const std::array<VertexSet, N>& family,
                 const std::string& prefix, int base) {
  for (std::size_t j = 0; j < N; ++j) {
    for (VertexId w : family[j].members()) {
      leaf[static_cast<std::size_t>(w)] = prefix + std::to_string(base + static_cast<int>(j));
    }
  }
}

void name_set(std::vector<std::string>& leaf, const VertexSet& s, const std::string& name) {
  for (VertexId w : s.members()) leaf[static_cast<std::size_t>(w)] = name;
}

void name_leaves(FinePartition& fp) {
  const auto& c = fp.coarse;
  auto& leaf = fp.leaf;
  leaf[static_cast<std::size_t>(fp.u())] = "u";
  leaf[static_cast<std::size_t>(fp.v())] = "v";
  name_set(leaf, c.s33, "S33");
  for (int s = 0; s < 2; ++s) {
    const CoarseSide& cs = c.side[static_cast<std::size_t>(s)];
    const std::string A(1, kLetters[static_cast<std::size_t>(s)].a);
    const std::string I(1, kLetters[static_cast<std::size_t>(s)].i);
    const std::string K(1, kLetters[static_cast<std::size_t>(s)].k);
    if (fp.mode == PartitionMode::kGirth9) {
      name_set(leaf, cs.a, A);
      name_set(leaf, cs.i, I);
      name_set(leaf, cs.k, K);
      continue;
    }
    const FineSide& f = fp.side[static_cast<std::size_t>(s)];
    name_set(leaf, cs.a_prime, A + "'");
    name_family(leaf, f.a, A, 1);
    name_set(leaf, f.a10[0], A + "10(1)");
    name_set(leaf, f.a10[1], A + "10(2)");
    name_family(leaf, f.i, I, 1);
    name_set(leaf, f.i8[0], I + "8(1)");
    name_set(leaf, f.i8[1], I + "8(2)");
    name_family(leaf, f.k, K, 1);
    name_family(leaf, f.ip, I + "'", 1);
    name_family(leaf, f.ip1, I + "'", 11);
    name_family(leaf, f.ip6, I + "'", 61);
    name_family(leaf, f.ip7, I + "'", 71);
    name_family(leaf, f.ip8, I + "'", 81);
    name_family(leaf, f.kp, K + "'", 1);
    name_family(leaf, f.kp3, K + "'", 31);
    name_family(leaf, f.kp4, K + "'", 41);
    name_family(leaf, f.kp5, K + "'", 51);
  }
  if (fp.mode == PartitionMode::kGirth9) {
    name_set(leaf, c.m, "M");
  } else {
    name_set(leaf, c.m, "M");
    name_family(leaf, fp.m_prime, "M'", 1);
  }
}

}  // namespace

WitnessEdge select_witness_edge(const Multigraph& g) {
  if (!is_bridgeless(g) || g.edge_count() == 0) {
    throw Error(ErrorCode::kNotBridgeless, "graph has a bridge or no edges");
  }
  WitnessEdge best;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int l = edge_girth(g, e);
    if (l > best.gstar) {
      best.gstar = l;
      best.edge = e;
    }
  }
  const EdgeEnds& ends = g.ends(best.edge);
  best.u = std::min(ends.a, ends.b);
  best.v = std::max(ends.a, ends.b);
  return best;
}

std::vector<std::vector<VertexId>> shortest_paths_to_set(const Multigraph& g,
                                                         const std::vector<int>& dist,
                                                         VertexId w) {
  std::vector<std::vector<VertexId>> out;
  if (dist[static_cast<std::size_t>(w)] == kUnreachable) return out;
  std::vector<VertexId> prefix{w};
  collect_paths(g, dist, prefix, out);
  return out;
}

SijPartition compute_sij(const Multigraph& g, VertexId u, VertexId v) {
  const int n = g.vertex_count();
  if (!g.adjacent(u, v)) {
    throw Error(ErrorCode::kEmptyClassViolation, "witness endpoints are not adjacent");
  }
  SijPartition p;
  p.u = u;
  p.v = v;
  p.du = bfs_distances(g, u).dist;
  p.dv = bfs_distances(g, v).dist;
  std::array<VertexSet*, 8> slots = {&p.s12, &p.s21, &p.s23, &p.s32,
                                     &p.s33, &p.s34, &p.s43, &p.s44};
  for (auto* s : slots) *s = VertexSet(n);
  for (VertexId w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    std::pair<int, int> key{p.du[static_cast<std::size_t>(w)], p.dv[static_cast<std::size_t>(w)]};
    auto it = std::find(kLegalClasses.begin(), kLegalClasses.end(), key);
    if (it == kLegalClasses.end()) {
      std::ostringstream os;
      os << "vertex " << w << " has distances (" << key.first << "," << key.second
         << ") to the witness endpoints";
      throw Error(ErrorCode::kEmptyClassViolation, os.str());
    }
    slots[static_cast<std::size_t>(it - kLegalClasses.begin())]->insert(w);
  }
  return p;
}

CoarsePartition coarse_partition(const Multigraph& g, const SijPartition& sij) {
  const int n = g.vertex_count();
  CoarsePartition c;
  c.sij = sij;
  c.s33 = sij.s33;

  auto closed_in = [&](const VertexSet& pool, const VertexSet& allowed) {
    VertexSet out(n);
    for (VertexId w : pool.members()) {
      if (VertexSet::from(n, g.neighbors(w)).subset_of(allowed)) out.insert(w);
    }
    return out;
  };

  const std::array<VertexId, 2> anchors = {sij.u, sij.v};
  const std::array<const VertexSet*, 2> s1 = {&sij.s12, &sij.s21};
  const std::array<const VertexSet*, 2> s2 = {&sij.s23, &sij.s32};
  const std::array<const VertexSet*, 2> s3 = {&sij.s34, &sij.s43};
  for (std::size_t s = 0; s < 2; ++s) {
    CoarseSide& cs = c.side[s];
    cs.anchor = anchors[s];
    cs.a_prime = closed_in(*s1[s], *s1[s] | VertexSet::single(n, anchors[s]));
    cs.a = *s1[s] - cs.a_prime;
    cs.i_prime = closed_in(*s2[s], *s2[s] | cs.a);
    cs.i = *s2[s] - cs.i_prime;
    cs.k_prime = closed_in(*s3[s], *s3[s] | cs.i);
    cs.k = *s3[s] - cs.k_prime;
  }

  const VertexSet hub = c.s33 | c.side[0].k | c.side[1].k;
  c.m_prime = VertexSet(n);
  for (VertexId w : sij.s44.members()) {
    if (g.edges_to(w, hub) == 1) c.m_prime.insert(w);
  }
  c.m = sij.s44 - c.m_prime;
  return c;
}

FinePartition fine_partition(const Multigraph& g, const CoarsePartition& coarse, PartitionMode mode) {
  const int n = g.vertex_count();
  const VertexId u = coarse.sij.u;
  const VertexId v = coarse.sij.v;
  const int luv = edge_girth(g, g.edges_between(u, v).front());
  const bool g9 = mode == PartitionMode::kGirth9;
  if (g9 ? luv != 9 : (luv < 6 || luv > 8)) {
    throw Error(ErrorCode::kPreconditionGstar,
                "witness edge girth " + std::to_string(luv) + " does not match the partition mode");
  }

  FinePartition fp;
  fp.mode = mode;
  fp.coarse = coarse;
  fp.leaf.assign(static_cast<std::size_t>(n), "");
  for (auto& side : fp.side) init_side(side, n);
  for (auto& s : fp.m_prime) s = VertexSet(n);

  if (g9) {
    for (const CoarseSide& cs : coarse.side) {
      for (const VertexSet* s : {&cs.a_prime, &cs.i_prime, &cs.k_prime}) {
        if (!s->empty()) unsatisfiable(g, s->members().front(), "the girth-9 coarse classes");
      }
    }
    if (!coarse.s33.empty()) unsatisfiable(g, coarse.s33.members().front(), "S33 (must be empty)");
    if (!coarse.m_prime.empty()) unsatisfiable(g, coarse.m_prime.members().front(), "M (M' must be empty)");
    name_leaves(fp);
    return fp;
  }

  SideBuilder home(g, fp.coarse, 0, fp.side[0], fp.side[1]);
  SideBuilder away(g, fp.coarse, 1, fp.side[1], fp.side[0]);
  home.k_split();
  away.k_split();
  home.i_split();
  away.i_split();
  home.a_split();
  away.a_split();

  fp.m_prime[0] = touching(g, coarse.m_prime, coarse.m);
  VertexSet rest = coarse.m_prime - fp.m_prime[0];
  fp.m_prime[1] = isolated_part(g, rest);
  fp.m_prime[2] = rest - fp.m_prime[1];

  home.k_prime_top();
  away.k_prime_top();
  home.i_prime_top();
  away.i_prime_top();
  home.i8_split();
  away.i8_split();
  home.k_prime_sub();
  away.k_prime_sub();
  home.a10_split();
  away.a10_split();
  home.i_prime_sub();
  away.i_prime_sub();

  name_leaves(fp);
  for (VertexId w = 0; w < n; ++w) {
    if (fp.leaf[static_cast<std::size_t>(w)].empty()) unsatisfiable(g, w, "any leaf class");
  }

  if (!coarse.side[1].k_prime.empty()) {
    fp.notes.push_back("L' membership uses N(w) within S43 and J (mirror of the K' predicate)");
  }
  if (!fp.side[1].a[9].empty()) fp.notes.push_back("B10 taken as B minus B1..B9");
  for (int s = 0; s < 2; ++s) {
    const FineSide& f = fp.side[static_cast<std::size_t>(s)];
    const char K = kLetters[static_cast<std::size_t>(s)].k;
    const char I = kLetters[static_cast<std::size_t>(s)].i;
    if (!f.kp5[2].empty()) {
      fp.notes.push_back(std::string(1, K) + "'53 uses isolation in the residue after " + K + "'51 and " +
                         K + "'52");
    }
    if (!f.i[3].empty()) {
      fp.notes.push_back(std::string(1, I) + "4 drawn from " + I + " minus " + I + "1.." + I + "3");
    }
  }
  return fp;
}

FinePartition partition_graph(const Multigraph& g, PartitionMode mode) {
  WitnessEdge we = select_witness_edge(g);
  SijPartition sij = compute_sij(g, we.u, we.v);
  return fine_partition(g, coarse_partition(g, sij), mode);
}

std::string partition_dump(const FinePartition& fine) {
  std::ostringstream os;
  for (std::size_t w = 0; w < fine.leaf.size(); ++w) os << w << ' ' << fine.leaf[w] << '\n';
  return os.str();
}

std::string class_family(const std::string& leaf) {
  if (leaf.empty()) return leaf;
  if (leaf[0] == 'S' || leaf == "u" || leaf == "v") return leaf;
  std::string out(1, leaf[0]);
  if (leaf.size() > 1 && leaf[1] == '\'') out += '\'';
  return out;
}

}  // namespace odiam
