#include <functional>
#include <sstream>

#include "odiam/partition.hpp"

namespace odiam {

namespace {

using Pred = std::function<bool(VertexId)>;
using Path = std::vector<VertexId>;

class Checker {
 public:
  Checker(const Multigraph& g, const FinePartition& fp) : g_(g), fp_(fp), n_(g.vertex_count()) {}

  PartitionReport run() {
    check_sij();
    check_coarse();
    if (fp_.mode == PartitionMode::kGirth9) {
      check_girth9();
    } else {
      check_m_prime();
      for (int s = 0; s < 2; ++s) check_side(s);
      check_propositions();
    }
    check_leaves();
    return std::move(report_);
  }

 private:
  void add(VertexId w, const std::string& rule, const std::string& detail) {
    report_.violations.push_back({w, rule, detail});
  }

  bool hits(VertexId w, const VertexSet& s) const {
    for (VertexId x : g_.neighbors(w)) {
      if (s.contains(x)) return true;
    }
    return false;
  }
  bool isolated(VertexId w, const VertexSet& s) const { return !hits(w, s); }
  bool neighbors_within(VertexId w, const VertexSet& s) const {
    for (VertexId x : g_.neighbors(w)) {
      if (!s.contains(x)) return false;
    }
    return true;
  }

  template <std::size_t N>
  static VertexSet span(const std::array<VertexSet, N>& f, int first, int last) {
    VertexSet out(f[0].universe());
    for (int i = first; i <= last; ++i) out |= f[static_cast<std::size_t>(i - 1)];
    return out;
  }

  // The classes must partition `parent`; each member must land in the first
  // class whose predicate holds. With one predicate fewer than classes the
  // last class is the remainder.
  void ordered_family(const std::string& name, const VertexSet& parent,
                      const std::vector<const VertexSet*>& classes, const std::vector<Pred>& preds) {
    VertexSet seen(n_);
    for (const VertexSet* c : classes) {
      if (!c->subset_of(parent)) add(-1, name, "class leaves its parent set");
      if (c->intersects(seen)) add(-1, name, "classes overlap");
      seen |= *c;
    }
    if (!(seen == parent)) add(-1, name, "classes do not cover the parent set");
    for (VertexId w : parent.members()) {
      std::size_t expected = classes.size();
      for (std::size_t j = 0; j < preds.size(); ++j) {
        if (preds[j](w)) {
          expected = j;
          break;
        }
      }
      if (expected == classes.size() && preds.size() + 1 == classes.size()) expected = preds.size();
      std::size_t actual = classes.size();
      for (std::size_t j = 0; j < classes.size(); ++j) {
        if (classes[j]->contains(w)) actual = j;
      }
      if (expected != actual) {
        std::ostringstream os;
        os << "predicates place the vertex in class #" << expected + 1 << ", partition has #"
           << actual + 1;
        add(w, name, os.str());
      }
    }
  }

  void check_sij() {
    const auto& sij = fp_.coarse.sij;
    const auto du = bfs_distances(g_, sij.u);
    const auto dv = bfs_distances(g_, sij.v);
    if (du[sij.v] != 1) add(-1, "Sij", "witness endpoints are not adjacent");
    const std::array<std::pair<const VertexSet*, std::pair<int, int>>, 8> table = {{
        {&sij.s12, {1, 2}},
        {&sij.s21, {2, 1}},
        {&sij.s23, {2, 3}},
        {&sij.s32, {3, 2}},
        {&sij.s33, {3, 3}},
        {&sij.s34, {3, 4}},
        {&sij.s43, {4, 3}},
        {&sij.s44, {4, 4}},
    }};
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    count[static_cast<std::size_t>(sij.u)]++;
    count[static_cast<std::size_t>(sij.v)]++;
    for (const auto& [set, ij] : table) {
      for (VertexId w : set->members()) {
        count[static_cast<std::size_t>(w)]++;
        if (du[w] != ij.first || dv[w] != ij.second) {
          add(w, "Sij", "distances to u,v disagree with the class index");
        }
      }
    }
    for (VertexId w = 0; w < n_; ++w) {
      if (count[static_cast<std::size_t>(w)] != 1) add(w, "Sij", "not in exactly one class");
    }
  }

  void check_coarse() {
    const auto& c = fp_.coarse;
    const auto& sij = c.sij;
    const std::array<const VertexSet*, 2> s1 = {&sij.s12, &sij.s21};
    const std::array<const VertexSet*, 2> s2 = {&sij.s23, &sij.s32};
    const std::array<const VertexSet*, 2> s3 = {&sij.s34, &sij.s43};
    const std::array<std::string, 2> a = {"A'", "B'"}, i = {"I'", "J'"}, k = {"K'", "L'"};
    for (std::size_t s = 0; s < 2; ++s) {
      const CoarseSide& cs = c.side[s];
      const VertexSet anchor = VertexSet::single(n_, cs.anchor);
      ordered_family(a[s], *s1[s], {&cs.a_prime, &cs.a},
                     {[&, s](VertexId w) { return neighbors_within(w, *s1[s] | anchor); }});
      ordered_family(i[s], *s2[s], {&cs.i_prime, &cs.i},
                     {[&, s](VertexId w) { return neighbors_within(w, *s2[s] | cs.a); }});
      ordered_family(k[s], *s3[s], {&cs.k_prime, &cs.k},
                     {[&, s](VertexId w) { return neighbors_within(w, *s3[s] | cs.i); }});
    }
    const VertexSet hub = c.s33 | c.side[0].k | c.side[1].k;
    ordered_family("M'", sij.s44, {&c.m_prime, &c.m},
                   {[&](VertexId w) { return g_.edges_to(w, hub) == 1; }});
  }

  void check_girth9() {
    const auto& c = fp_.coarse;
    for (const CoarseSide& cs : c.side) {
      if (!cs.a_prime.empty() || !cs.i_prime.empty() || !cs.k_prime.empty()) {
        add(-1, "girth9", "a primed class is non-empty");
      }
    }
    if (!c.s33.empty()) add(-1, "girth9", "S33 is non-empty");
    if (!c.m_prime.empty()) add(-1, "girth9", "M' is non-empty");
    const std::array<std::pair<const VertexSet*, const VertexSet*>, 3> pairs = {{
        {&c.side[0].a, &c.side[1].a},
        {&c.side[0].i, &c.side[1].i},
        {&c.side[0].k, &c.side[1].k},
    }};
    for (const auto& [x, y] : pairs) {
      for (VertexId w : x->members()) {
        if (hits(w, *y)) add(w, "girth9", "edge between mirrored classes");
      }
    }
  }

  void check_m_prime() {
    const auto& c = fp_.coarse;
    const auto& mp = fp_.m_prime;
    const VertexSet rest = c.m_prime - mp[0];
    ordered_family("M'_i", c.m_prime, {&mp[0], &mp[1], &mp[2]},
                   {[&](VertexId w) { return hits(w, c.m); },
                    [&](VertexId w) { return isolated(w, rest); }});
  }

  void check_side(int side) {
    const auto& c = fp_.coarse;
    const CoarseSide& H = c.side[static_cast<std::size_t>(side)];
    const CoarseSide& O = c.side[static_cast<std::size_t>(1 - side)];
    const FineSide& f = fp_.side[static_cast<std::size_t>(side)];
    const FineSide& o = fp_.side[static_cast<std::size_t>(1 - side)];
    const std::string A = side == 0 ? "A" : "B";
    const std::string I = side == 0 ? "I" : "J";
    const std::string K = side == 0 ? "K" : "L";
    const VertexSet& S33 = c.s33;

    ordered_family(K + "_i", H.k, {&f.k[0], &f.k[1]},
                   {[&](VertexId w) { return hits(w, S33 | O.k); }});

    ordered_family(I + "_i", H.i,
                   {&f.i[0], &f.i[1], &f.i[2], &f.i[3], &f.i[4], &f.i[5], &f.i[6], &f.i[7]},
                   {[&](VertexId w) { return hits(w, O.i); },
                    [&](VertexId w) { return hits(w, S33); },
                    [&](VertexId w) { return hits(w, f.k[0]); },
                    [&](VertexId w) { return hits(w, f.i[0]); },
                    [&](VertexId w) { return hits(w, f.i[1]); },
                    [&](VertexId w) { return hits(w, f.i[3]); },
                    [&](VertexId w) { return hits(w, f.k[1]); }});

    std::vector<const VertexSet*> acls;
    std::vector<Pred> apreds;
    for (std::size_t j = 0; j < 10; ++j) acls.push_back(&f.a[j]);
    for (std::size_t j = 0; j < 8; ++j) apreds.push_back([&, j](VertexId w) { return hits(w, f.i[j]); });
    apreds.push_back([&](VertexId w) { return hits(w, f.a[0]); });
    ordered_family(A + "_i", H.a, acls, apreds);

    // Shortest paths to the opposite I-class and A-class, recomputed here.
    const auto distJ = distances_to_set(g_, O.i);
    const auto distB = distances_to_set(g_, O.a);
    auto paths = [&](const std::vector<int>& dist, VertexId w) {
      return shortest_paths_to_set(g_, dist, w);
    };
    auto forall = [&](const std::vector<int>& dist, VertexId w, int len,
                      const std::function<bool(const Path&)>& p) {
      if (dist[static_cast<std::size_t>(w)] != len) return false;
      for (const Path& q : paths(dist, w)) {
        if (!p(q)) return false;
      }
      return true;
    };
    auto exists = [&](const std::vector<int>& dist, VertexId w, int len,
                      const std::function<bool(const Path&)>& p) {
      if (dist[static_cast<std::size_t>(w)] != len) return false;
      for (const Path& q : paths(dist, w)) {
        if (p(q)) return true;
      }
      return false;
    };

    // K' top level.
    const VertexSet kp_rest12 = H.k_prime - f.kp[0] - f.kp[1];
    ordered_family(K + "'_i", H.k_prime, {&f.kp[0], &f.kp[1], &f.kp[2], &f.kp[3], &f.kp[4]},
                   {[&](VertexId w) {
                      return forall(distB, w, 4, [&](const Path& p) {
                        return f.k[1].contains(p[1]) && f.i[0].contains(p[2]) &&
                               o.i[0].contains(p[3]) && O.a.contains(p[4]);
                      });
                    },
                    [&](VertexId w) {
                      return exists(distB, w, 4, [&](const Path& p) {
                        return f.k[0].contains(p[1]) &&
                               (S33.contains(p[2]) || o.k[0].contains(p[2])) &&
                               span(o.i, 1, 3).contains(p[3]);
                      });
                    },
                    [&](VertexId w) { return isolated(w, kp_rest12); },
                    [&](VertexId w) { return distB[static_cast<std::size_t>(w)] == 3; },
                    [&](VertexId w) { return distB[static_cast<std::size_t>(w)] == 4; }});

    // I' top level.
    const VertexSet& Ip = H.i_prime;
    const VertexSet A1 = f.a[0];
    const VertexSet Arest = H.a - A1;
    const VertexSet I1 = f.i[0];
    auto shape1 = [&](const Path& p) {
      return Arest.contains(p[1]) && Ip.contains(p[2]) && I1.contains(p[3]) && O.i.contains(p[4]);
    };
    const VertexSet ip_rest4 = Ip - span(f.ip, 1, 4);
    ordered_family(
        I + "'_i", Ip, {&f.ip[0], &f.ip[1], &f.ip[2], &f.ip[3], &f.ip[4], &f.ip[5], &f.ip[6], &f.ip[7]},
        {[&](VertexId w) { return forall(distJ, w, 4, shape1); },
         [&](VertexId w) {
           return exists(distJ, w, 4, [&](const Path& p) {
             return (f.i[2] | span(f.i, 5, 8)).contains(p[1]) &&
                    (span(f.i, 2, 4) | Ip | f.k[0]).contains(p[2]) &&
                    (S33 | I1 | o.k[0]).contains(p[3]);
           });
         },
         [&](VertexId w) {
           return forall(distJ, w, 4, [&](const Path& p) {
             return ((f.i[6] | f.i[7]).contains(p[1]) && (A1 | f.k[1] | H.k_prime).contains(p[2]) &&
                     I1.contains(p[3])) ||
                    shape1(p);
           });
         },
         [&](VertexId w) {
           return exists(distJ, w, 3, [&](const Path& p) {
             return span(f.i, 2, 4).contains(p[1]) && (I1 | S33).contains(p[2]);
           });
         },
         [&](VertexId w) { return isolated(w, ip_rest4); },
         [&](VertexId w) { return distJ[static_cast<std::size_t>(w)] == 2; },
         [&](VertexId w) { return distJ[static_cast<std::size_t>(w)] == 3; },
         [&](VertexId w) { return distJ[static_cast<std::size_t>(w)] == 4; }});

    // I_8 split.
    ordered_family(I + "_8^(i)", f.i[7], {&f.i8[0], &f.i8[1]}, {[&](VertexId x) {
                     if (hits(x, f.kp[1])) return false;
                     for (VertexId w : f.ip[2].members()) {
                       if (exists(distJ, w, 4, [&](const Path& p) {
                             return p[1] == x && A1.contains(p[2]) && I1.contains(p[3]);
                           })) {
                         return true;
                       }
                     }
                     return false;
                   }});

    // K' sub-classes.
    const VertexSet I567 = span(f.i, 5, 7);
    ordered_family(K + "'_3i", f.kp[2], {&f.kp3[0], &f.kp3[1]}, {[&](VertexId w) {
                     if (hits(w, I567 | f.i8[1] | H.k)) return true;
                     for (VertexId x : g_.neighbors(w)) {
                       if (f.kp[0].contains(x) && hits(x, H.i - f.i8[0])) return true;
                     }
                     return false;
                   }});
    const VertexSet kp4_rest = f.kp[3] - f.kp4[0];
    ordered_family(K + "'_4i", f.kp[3], {&f.kp4[0], &f.kp4[1], &f.kp4[2]},
                   {[&](VertexId w) { return hits(w, f.kp[4]); },
                    [&](VertexId w) { return isolated(w, kp4_rest); }});
    const VertexSet kp5_rest = f.kp[4] - f.kp5[0];
    const VertexSet kp5_rest2 = kp5_rest - f.kp5[1];
    ordered_family(K + "'_5i", f.kp[4], {&f.kp5[0], &f.kp5[1], &f.kp5[2], &f.kp5[3]},
                   {[&](VertexId w) { return hits(w, f.kp[3]); },
                    [&](VertexId w) { return isolated(w, kp5_rest) || hits(w, I567 | f.i8[1]); },
                    [&](VertexId w) { return isolated(w, kp5_rest2); }});

    // A_10 split.
    ordered_family(A + "_10^(i)", f.a[9], {&f.a10[0], &f.a10[1]}, {[&](VertexId a) {
                     for (VertexId w : f.ip[0].members()) {
                       for (const Path& p : paths(distJ, w)) {
                         for (VertexId x : p) {
                           if (x == a) return true;
                         }
                       }
                     }
                     return false;
                   }});

    // I' sub-classes.
    const VertexSet r6 = f.ip[5] - f.ip6[0];
    ordered_family(I + "'_6i", f.ip[5], {&f.ip6[0], &f.ip6[1], &f.ip6[2]},
                   {[&](VertexId w) { return hits(w, f.ip[6]); },
                    [&](VertexId w) { return isolated(w, r6); }});
    const VertexSet r7 = f.ip[6] - f.ip7[0] - f.ip7[1];
    ordered_family(I + "'_7i", f.ip[6], {&f.ip7[0], &f.ip7[1], &f.ip7[2], &f.ip7[3]},
                   {[&](VertexId w) { return hits(w, f.ip[5]); },
                    [&](VertexId w) { return hits(w, f.ip[7]); },
                    [&](VertexId w) { return isolated(w, r7); }});
    const VertexSet r8 = f.ip[7] - f.ip8[0];
    const VertexSet r8b = r8 - f.ip8[1];
    ordered_family(I + "'_8i", f.ip[7], {&f.ip8[0], &f.ip8[1], &f.ip8[2], &f.ip8[3]},
                   {[&](VertexId w) { return hits(w, f.ip[6]); },
                    [&](VertexId w) { return isolated(w, r8) || hits(w, f.a[9]); },
                    [&](VertexId w) { return isolated(w, r8b); }});
    const VertexSet r1 = f.ip[0] - f.ip1[0];
    const VertexSet r1b = r1 - f.ip1[1];
    ordered_family(I + "'_1i", f.ip[0], {&f.ip1[0], &f.ip1[1], &f.ip1[2], &f.ip1[3]},
                   {[&](VertexId w) { return hits(w, f.ip7[2]); },
                    [&](VertexId w) { return isolated(w, r1) || hits(w, f.a10[1]); },
                    [&](VertexId w) { return isolated(w, r1b); }});

    // Retained witnesses are genuine shortest paths.
    for (const auto& [w, p] : f.witness_path) {
      const bool to_j = Ip.contains(w);
      const auto& dist = to_j ? distJ : distB;
      bool ok = !p.empty() && p.front() == w &&
                static_cast<int>(p.size()) == dist[static_cast<std::size_t>(w)] + 1 &&
                (to_j ? O.i : O.a).contains(p.back());
      for (std::size_t t = 1; ok && t < p.size(); ++t) ok = g_.adjacent(p[t - 1], p[t]);
      if (!ok) add(w, "PathWitness", "retained path is not a shortest path to the opposite class");
    }
  }

  void check_propositions() {
    const auto& c = fp_.coarse;
    const VertexSet K = c.side[0].k, L = c.side[1].k;
    for (VertexId w : c.m_prime.members()) {
      for (VertexId x : g_.neighbors(w)) {
        if (K.contains(x) || L.contains(x)) add(w, "m-prime-avoids-k-l", "M' vertex adjacent to K or L");
      }
    }
    for (VertexId w : c.m.members()) {
      if (isolated(w, c.s33) && (isolated(w, K) || isolated(w, L))) {
        add(w, "m-meets-k-and-l", "M vertex without S33 neighbour misses K or L");
      }
    }
    for (int s = 0; s < 2; ++s) {
      const FineSide& f = fp_.side[static_cast<std::size_t>(s)];
      const FineSide& o = fp_.side[static_cast<std::size_t>(1 - s)];
      const CoarseSide& O = c.side[static_cast<std::size_t>(1 - s)];
      const bool j_split = !(o.i[0] == O.i);
      const bool b_split = !(o.a[0] == O.a);
      if ((j_split || b_split) && (!f.ip[0].empty() || !f.ip[2].empty())) {
        add(-1, "i-prime-1-3-need-unsplit-opposite", "opposite I or A class is not its first refinement yet I'_1 or I'_3 is non-empty");
      }
      if (b_split && !f.kp[0].empty()) add(-1, "opposite-a-split-empties-k-prime-1", "opposite A class split yet K'_1 non-empty");
      for (VertexId w : c.side[static_cast<std::size_t>(s)].i_prime.members()) {
        if (f.dist_to_opposite_i[static_cast<std::size_t>(w)] == 2 && !f.ip[4].contains(w) &&
            !f.ip[5].contains(w)) {
          add(w, "i-prime-near-opposite-i-in-5-or-6", "I' vertex at distance 2 from the opposite I class outside I'_5 and I'_6");
        }
      }
    }
  }

  void check_leaves() {
    for (VertexId w = 0; w < n_; ++w) {
      if (fp_.leaf[static_cast<std::size_t>(w)].empty()) add(w, "leaf", "vertex has no leaf class");
    }
  }

  const Multigraph& g_;
  const FinePartition& fp_;
  int n_;
  PartitionReport report_;
};

}  // namespace

PartitionReport verify_partition(const Multigraph& g, const FinePartition& fine) {
  return Checker(g, fine).run();
}

}  // namespace odiam
