#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "odiam/acceptance.hpp"
#include "odiam/constructor.hpp"
#include "odiam/driver.hpp"
#include "odiam/error.hpp"

namespace odiam {

namespace {

ManifestEntry measured_entry(const FamilySpec& spec, const Multigraph& g) {
  return {spec, diameter(g), max_edge_girth(g)};
}

template <typename Sizes, typename Targets>
std::vector<ManifestEntry> random_manifest(int count, const Sizes& sizes, const Targets& targets) {
  std::vector<ManifestEntry> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    int n = sizes[seed % sizes.size()];
    int t = targets[(seed / sizes.size()) % targets.size()];
    FamilySpec spec{"random", {n, t}, seed};
    auto g = gen_random_with_targets(n, seed, 4, {t});
    if (g) out.push_back(measured_entry(spec, *g));
  }
  return out;
}

}  // namespace

std::vector<ManifestEntry> g9_corpus_manifest(int random_count) {
  std::vector<ManifestEntry> out{measured_entry({"cycle", {9}, 0}, cycle_graph(9))};
  static constexpr std::array<int, 7> kSizes{10, 11, 12, 13, 14, 15, 16};
  static constexpr std::array<int, 1> kTargets{9};
  auto rest = random_manifest(random_count, kSizes, kTargets);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<ManifestEntry> g678_corpus_manifest(int random_count) {
  static constexpr std::array<int, 5> kSizes{14, 17, 20, 23, 26};
  static constexpr std::array<int, 3> kTargets{6, 7, 8};
  return random_manifest(random_count, kSizes, kTargets);
}

std::vector<Multigraph> load_corpus(const std::vector<ManifestEntry>& manifest) {
  std::vector<Multigraph> out;
  out.reserve(manifest.size());
  for (const ManifestEntry& e : manifest) {
    Multigraph g = generate(e.spec);
    int d = diameter(g);
    int gs = max_edge_girth(g);
    if (d != e.expected_d || gs != e.expected_gstar)
      throw Error(ErrorCode::kInvalidSpec, family_spec_to_string(e.spec) + " seed " + std::to_string(e.spec.seed) +
                                               " regenerated with d=" + std::to_string(d) + " g*=" + std::to_string(gs));
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  std::string name;
  Multigraph g;
};

struct Tally {
  int total = 0;
  int failed = 0;
  std::vector<std::string> examples;
  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) return;
    ++failed;
    if (examples.size() < 3) examples.push_back(what);
  }
  std::string text(const std::string& unit) const {
    std::ostringstream out;
    out << (total - failed) << "/" << total << " " << unit;
    for (const auto& e : examples) out << "; " << e;
    return out.str();
  }
};

// Outcome of one diameter-4 pipeline run; `status` is empty on success.
struct RunOutcome {
  std::string status;
  int diameter = -1;
};

RunOutcome run_d4(const Multigraph& g, bool nine, std::optional<std::uint64_t> seed, bool corrupt) {
  RunOutcome out;
  try {
    FinePartition fine = partition_graph(g, nine ? PartitionMode::kGirth9 : PartitionMode::kGirth678);
    PartitionReport pr = verify_partition(g, fine);
    if (!pr.ok()) {
      out.status = "partition check " + pr.violations.front().rule;
      return out;
    }
    PipelineOptions opts;
    opts.completion_seed = seed;
    PipelineResult res = nine ? orient_g9(g, fine, opts) : orient_g678(g, fine, opts);
    Digraph d = res.digraph;
    if (corrupt && d.arc_count() > 0) {
      std::vector<Arc> arcs = d.arcs();
      std::swap(arcs[0].tail, arcs[0].head);
      d = Digraph(d.vertex_count(), std::move(arcs));
    }
    if (!is_strong(d)) {
      out.status = "not strong";
      return out;
    }
    out.diameter = directed_diameter(d);
    const int bound = nine ? 12 : 13;
    if (out.diameter > bound) {
      out.status = "diameter " + std::to_string(out.diameter);
      return out;
    }
    AuditReport table = audit_class_bounds(d, fine, nine ? girth9_class_bounds() : girth678_class_bounds());
    if (!table.ok()) {
      const auto& v = table.violations.front();
      out.status = "table " + v.cls + " [" + v.rule + "] " + std::to_string(v.measured) + ">" + std::to_string(v.bound);
      return out;
    }
    AuditReport claims = verify_construction_claims(g, d, fine);
    if (!claims.ok()) {
      const auto& v = claims.violations.front();
      out.status = "claim " + v.cls + " [" + v.rule + "] " + std::to_string(v.measured) + ">" + std::to_string(v.bound);
    }
  } catch (const Error& e) {
    out.status = e.what();
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const AcceptanceOptions& o) : opt_(o) {}

  std::vector<CriterionResult> run() {
    std::vector<CriterionResult> out;
    auto wanted = [&](int id) {
      return opt_.only.empty() || std::find(opt_.only.begin(), opt_.only.end(), id) != opt_.only.end();
    };
    using Fn = CriterionResult (Runner::*)();
    static constexpr std::array<Fn, 10> kCriteria{&Runner::c1, &Runner::c2, &Runner::c3, &Runner::c4, &Runner::c5,
                                                  &Runner::c6, &Runner::c7, &Runner::c8, &Runner::c9, &Runner::c10};
    for (int id = 1; id <= 10; ++id) {
      if (!wanted(id)) continue;
      auto start = Clock::now();
      CriterionResult r = (this->*kCriteria[static_cast<std::size_t>(id - 1)])();
      r.id = id;
      r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      log((r.pass ? "PASS " : "FAIL ") + std::to_string(id) + " " + r.title);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  void log(const std::string& s) const {
    if (opt_.log) opt_.log(s);
  }

  const std::vector<Instance>& g2_instances() {
    if (g2_.empty()) {
      for (int d = 1; d <= 6; ++d) {
        g2_.push_back({"doubled_path:" + std::to_string(d + 1), doubled_path(d + 1)});
        for (int n : {2 * d, 2 * d + 1})
          if (n >= 3) g2_.push_back({"doubled_cycle:" + std::to_string(n), doubled_cycle(n)});
      }
    }
    return g2_;
  }

  const std::vector<Instance>& g3_instances() {
    if (g3_.empty()) {
      g3_.push_back({"complete:4", complete_graph(4)});
      for (int k = 3; k <= 10; ++k) g3_.push_back({"wheel:" + std::to_string(k), wheel_graph(k)});
      int found = 0;
      for (std::uint64_t seed = 0; found < opt_.g3_random; ++seed) {
        int n = 5 + static_cast<int>(seed % 16);
        Multigraph g = gen_random_triangle_graph(n, seed);
        if (max_edge_girth(g) != 3) continue;
        g3_.push_back({"triangles:" + std::to_string(n) + " seed " + std::to_string(seed), std::move(g)});
        ++found;
      }
    }
    return g3_;
  }

  std::vector<ManifestEntry> manifest(const std::string& file, const std::function<std::vector<ManifestEntry>()>& make) {
    namespace fs = std::filesystem;
    if (!opt_.corpus_dir.empty()) {
      fs::path p = fs::path(opt_.corpus_dir) / file;
      if (fs::exists(p)) {
        std::ifstream in(p);
        std::stringstream buf;
        buf << in.rdbuf();
        log("corpus: loaded " + p.string());
        return parse_manifest(buf.str());
      }
      auto m = make();
      fs::create_directories(opt_.corpus_dir);
      std::ofstream(p) << write_manifest(m);
      log("corpus: wrote " + p.string());
      return m;
    }
    return make();
  }

  const std::vector<Instance>& d4_instances(bool nine) {
    std::vector<Instance>& cache = nine ? g9_ : g678_;
    if (cache.empty()) {
      auto m = nine ? manifest("g9.manifest", [&] { return g9_corpus_manifest(opt_.g9_random); })
                    : manifest("g678.manifest", [&] { return g678_corpus_manifest(opt_.g678_random); });
      auto graphs = load_corpus(m);
      for (std::size_t i = 0; i < m.size(); ++i)
        cache.push_back({family_spec_to_string(m[i].spec) + " seed " + std::to_string(m[i].spec.seed), graphs[i]});
    }
    return cache;
  }

  CriterionResult c1() {
    CriterionResult r{0, "g*=2 pipeline attains the undirected diameter", true, "", 0};
    Tally t;
    for (const Instance& in : g2_instances()) {
      try {
        Digraph d = orient_g2(in.g).digraph;
        bool ok = is_strong(d) && directed_diameter(d) == diameter(in.g);
        t.record(ok, in.name);
      } catch (const Error& e) {
        t.record(false, in.name + ": " + e.what());
      }
    }
    r.pass = t.failed == 0 && t.total > 0;
    r.detail = t.text("graphs with directed diameter = d");
    return r;
  }

  CriterionResult c2() {
    CriterionResult r{0, "g*=3 pipeline: theta <= 3 per edge, diameter <= 3d", true, "", 0};
    Tally t;
    for (const Instance& in : g3_instances()) {
      try {
        Digraph d = orient_g3(in.g).digraph;
        bool ok = is_strong(d);
        for (EdgeId e = 0; ok && e < in.g.edge_count(); ++e)
          ok = theta(d, in.g.ends(e).a, in.g.ends(e).b) <= 3;
        ok = ok && directed_diameter(d) <= 3 * diameter(in.g);
        t.record(ok, in.name);
      } catch (const Error& e) {
        t.record(false, in.name + ": " + e.what());
      }
    }
    r.pass = t.failed == 0 && t.total >= 50;
    r.detail = t.text("graphs");
    return r;
  }

  CriterionResult c3() {
    CriterionResult r{0, "triangle edges lie on directed cycles of length <= 4", true, "", 0};
    Tally t;
    int edges = 0;
    for (const Instance& in : g3_instances()) {
      Multigraph h = simple_skeleton(in.g);
      Digraph d = ct_cycle_orientation(h);
      bool ok = true;
      for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const EdgeEnds& en = h.ends(e);
        bool in_triangle = false;
        for (VertexId z : h.neighbors(en.a))
          if (z != en.b && h.adjacent(z, en.b)) in_triangle = true;
        if (!in_triangle) continue;
        ++edges;
        if (shortest_cycle_through(d, e) > 4) ok = false;
      }
      t.record(ok, in.name);
    }
    r.pass = t.failed == 0 && t.total > 0;
    r.detail = t.text("skeletons") + ", " + std::to_string(edges) + " triangle edges";
    return r;
  }

  CriterionResult d4_criterion(bool nine, const std::string& title) {
    CriterionResult r{0, title, true, "", 0};
    Tally t;
    int worst = 0;
    for (const Instance& in : d4_instances(nine)) {
      RunOutcome o = run_d4(in.g, nine, std::nullopt, opt_.corrupt_constructions);
      worst = std::max(worst, o.diameter);
      t.record(o.status.empty(), in.name + ": " + o.status);
    }
    r.pass = t.failed == 0 && t.total >= 100;
    r.detail = t.text("instances") + ", worst directed diameter " + std::to_string(worst);
    return r;
  }

  CriterionResult c4() { return d4_criterion(true, "g*=9 pipeline: diameter <= 12 and per-vertex bounds"); }
  CriterionResult c5() {
    return d4_criterion(false, "g*=6,7,8 pipeline: diameter <= 13, per-vertex bounds and claims");
  }

  CriterionResult c6() {
    CriterionResult r{0, "subdivided K4 witness with oriented diameter >= 12", false, "", 0};
    HSearchResult h = search_h_witness(opt_.budget, false);
    std::ostringstream out;
    out << h.candidates << " candidates, " << h.filtered << " with d=4 g*=9";
    if (h.budget_failures) out << ", " << h.budget_failures << " over budget";
    if (h.witnesses.empty()) {
      out << ", no certified witness";
      r.detail = out.str();
      return r;
    }
    const HWitness& w = h.witnesses.front();
    out << ", witness counts";
    for (int c : w.counts) out << ' ' << c;
    out << " (" << w.graph.vertex_count() << " vertices, " << w.graph.edge_count() << " edges)";
    bool ok = diameter(w.graph) == 4 && max_edge_girth(w.graph) == 9 && w.certified;
    try {
      FinePartition fine = partition_graph(w.graph, PartitionMode::kGirth9);
      int upper = directed_diameter(orient_g9(w.graph, fine).digraph);
      out << ", certified >= 12, g*=9 pipeline gives " << upper;
      ok = ok && upper <= 12 && upper >= 12;
    } catch (const Error& e) {
      out << ", pipeline error " << e.what();
      ok = false;
    }
    r.pass = ok;
    r.detail = out.str();
    return r;
  }

  CriterionResult c7() {
    CriterionResult r{0, "exact oracle agrees with unpruned enumeration", true, "", 0};
    std::ostringstream out;
    bool ok = true;
    struct Fixed {
      const char* name;
      Multigraph g;
      int expected;
    };
    // No 4-vertex tournament has diameter 2, so K4 sits at 3.
    std::vector<Fixed> fixed{{"C3", cycle_graph(3), 2}, {"K4", complete_graph(4), 3}, {"C9", cycle_graph(9), 8}};
    for (const Fixed& f : fixed) {
      int exact = exact_oriented_diameter(f.g, opt_.budget).optimal;
      int brute = exhaustive_oriented_diameter(f.g);
      out << f.name << "=" << exact << " (enumeration " << brute << ") ";
      ok = ok && exact == f.expected && brute == f.expected;
    }
    Tally t;
    for (const Instance& in : small_graphs(12, opt_.oracle_random)) {
      SearchReport rep = exact_oriented_diameter(in.g, opt_.budget);
      int brute = exhaustive_oriented_diameter(in.g);
      t.record(!rep.budget_exceeded && rep.optimal == brute, in.name);
    }
    r.pass = ok && t.failed == 0;
    r.detail = out.str() + "; " + t.text("small graphs agree");
    return r;
  }

  // Bridgeless graphs with at most `max_edges` edges from several families.
  std::vector<Instance> small_graphs(int max_edges, int count) {
    std::vector<Instance> out;
    std::set<std::string> seen;
    auto add = [&](const std::string& name, Multigraph g) {
      if (g.edge_count() > max_edges || !is_connected(g) || !is_bridgeless(g)) return;
      if (!seen.insert(write_edge_list(g)).second) return;
      out.push_back({name, std::move(g)});
    };
    for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count && seed < 20000; ++seed) {
      switch (seed % 4) {
        case 0:
          add("triangles seed " + std::to_string(seed), gen_random_triangle_graph(4 + static_cast<int>(seed % 5), seed));
          break;
        case 1:
        case 2: {
          int target_d = 2 + static_cast<int>(seed % 3);
          int n = 5 + static_cast<int>(seed % 6);
          std::vector<int> targets{3, 4, 5, 6, 7, 8, 9};
          if (auto g = gen_random_with_targets(n, seed, target_d, targets))
            add("ears seed " + std::to_string(seed), std::move(*g));
          break;
        }
        default: {
          std::mt19937_64 rng(seed);
          std::array<int, 6> c{};
          for (int& x : c) x = static_cast<int>(rng() % 2);
          add("subdivided_k4 seed " + std::to_string(seed), subdivided_k4(c));
          break;
        }
      }
    }
    return out;
  }

  CriterionResult c8() {
    CriterionResult r{0, "R-S orientation: theta(w,R) <= 2 and one-step layers", true, "", 0};
    Tally t;
    for (std::uint64_t seed = 0; t.total < opt_.rs_triples; ++seed) {
      std::mt19937_64 rng(seed);
      Multigraph g;
      if (seed % 2 == 0) {
        g = gen_random_triangle_graph(6 + static_cast<int>(rng() % 10), seed);
      } else {
        auto maybe = gen_random_with_targets(8 + static_cast<int>(rng() % 8), seed, 4, {6, 7, 8});
        if (!maybe) continue;
        g = std::move(*maybe);
      }
      const int n = g.vertex_count();
      VertexSet R(n);
      for (VertexId x = 0; x < n; ++x)
        if (rng() % 3 == 0) R.insert(x);
      if (R.empty()) R.insert(static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n)));
      VertexSet S(n);
      for (VertexId x = 0; x < n; ++x)
        if (!R.contains(x) && !isolated_in(g, x, R) && rng() % 3 != 0) S.insert(x);
      for (bool changed = true; changed;) {
        changed = false;
        for (VertexId x : S.members())
          if (isolated_in(g, x, S)) {
            S.erase(x);
            changed = true;
          }
      }
      if (S.empty()) continue;
      PartialOrientation p(g);
      RSResult rs = rs_orientation(g, p, R, S);
      Digraph d = complete_arbitrarily(p);
      std::vector<int> from_r(static_cast<std::size_t>(n), kUnreachable), to_r(static_cast<std::size_t>(n), kUnreachable);
      for (VertexId x : R.members()) {
        auto f = directed_distances_from(d, x);
        auto b = directed_distances_to(d, x);
        for (std::size_t i = 0; i < f.size(); ++i) {
          from_r[i] = std::min(from_r[i], f[i]);
          to_r[i] = std::min(to_r[i], b[i]);
        }
      }
      bool ok = (rs.v1 | rs.v2) == S && !rs.v1.intersects(rs.v2);
      for (VertexId w : S.members()) {
        auto i = static_cast<std::size_t>(w);
        ok = ok && std::max(from_r[i], to_r[i]) <= 2;
        if (rs.v1.contains(w)) ok = ok && from_r[i] == 1;
        if (rs.v2.contains(w)) ok = ok && to_r[i] == 1;
      }
      t.record(ok, "seed " + std::to_string(seed));
    }
    r.pass = t.failed == 0;
    r.detail = t.text("triples");
    return r;
  }

  CriterionResult c9() {
    CriterionResult r{0, "bounds do not depend on the completion of free edges", true, "", 0};
    int runs = 0;
    int mismatches = 0;
    std::string example;
    for (bool nine : {true, false}) {
      for (const Instance& in : d4_instances(nine)) {
        bool base = run_d4(in.g, nine, std::nullopt, opt_.corrupt_constructions).status.empty();
        for (int s = 1; s <= opt_.completion_seeds; ++s) {
          ++runs;
          bool seeded = run_d4(in.g, nine, static_cast<std::uint64_t>(s), opt_.corrupt_constructions).status.empty();
          if (seeded != base) {
            ++mismatches;
            if (example.empty()) example = in.name + " completion seed " + std::to_string(s);
          }
        }
      }
    }
    r.pass = mismatches == 0;
    r.detail = std::to_string(runs) + " seeded runs, " + std::to_string(mismatches) + " differ from the default completion";
    if (!example.empty()) r.detail += "; " + example;
    return r;
  }

  CriterionResult c10() {
    CriterionResult r{0, "pipeline output never beats the optimum", true, "", 0};
    Tally t;
    std::vector<const std::vector<Instance>*> pools{&g2_instances(), &g3_instances(), &d4_instances(true),
                                                    &d4_instances(false)};
    for (const auto* pool : pools)
      for (const Instance& in : *pool) {
        if (in.g.edge_count() > opt_.never_below_max_edges) continue;
        try {
          DispatchResult dr = orient_dispatch(in.g);
          int got = directed_diameter(dr.result.digraph);
          SearchReport exact = exact_oriented_diameter(in.g, opt_.budget);
          bool ok = !exact.budget_exceeded && got >= exact.optimal && got >= diameter(in.g);
          t.record(ok, in.name);
        } catch (const Error& e) {
          t.record(false, in.name + ": " + e.what());
        }
      }
    r.pass = t.failed == 0 && t.total > 0;
    r.detail = t.text("instances with <= " + std::to_string(opt_.never_below_max_edges) + " edges");
    return r;
  }

  const AcceptanceOptions& opt_;
  std::vector<Instance> g2_, g3_, g9_, g678_;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) { return Runner(options).run(); }

std::string acceptance_summary(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  for (const CriterionResult& r : results)
    out << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": " << r.detail << " (" << r.seconds << " s)\n";
  return out.str();
}

}  // namespace odiam
