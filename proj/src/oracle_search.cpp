#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "odiam/error.hpp"
#include "odiam/oracle.hpp"

namespace odiam {

namespace {

void require_bridgeless(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  if (!is_bridgeless(g)) throw Error(ErrorCode::kNotBridgeless, "graph has a bridge");
}

}  // namespace

Digraph robbins_orientation(const Multigraph& g) {
  require_bridgeless(g);
  const int n = g.vertex_count();
  std::vector<Arc> arcs(static_cast<std::size_t>(g.edge_count()), Arc{-1, -1});
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  int clock = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    // (vertex, next incidence slot)
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    order[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      auto& [x, slot] = stack.back();
      auto inc = g.incident(x);
      if (slot == inc.size()) {
        stack.pop_back();
        continue;
      }
      EdgeId e = inc[slot++];
      if (used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = true;
      VertexId y = g.ends(e).other(x);
      if (order[static_cast<std::size_t>(y)] < 0) {
        arcs[static_cast<std::size_t>(e)] = Arc{x, y};
        order[static_cast<std::size_t>(y)] = clock++;
        stack.emplace_back(y, 0);
      } else {
        // back edge: from the later (descendant) to the earlier vertex
        arcs[static_cast<std::size_t>(e)] = Arc{x, y};
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

namespace {

// dir: -1 free, 0 = ends.a -> ends.b, 1 = ends.b -> ends.a
class Searcher {
 public:
  Searcher(const Multigraph& g, std::vector<EdgeId> order, std::int64_t budget)
      : g_(g), order_(std::move(order)), budget_(budget) {
    n_ = g.vertex_count();
    dir_.assign(static_cast<std::size_t>(g.edge_count()), -1);
    free_deg_.assign(static_cast<std::size_t>(n_), 0);
    in_.assign(static_cast<std::size_t>(n_), 0);
    out_.assign(static_cast<std::size_t>(n_), 0);
    for (VertexId x = 0; x < n_; ++x) free_deg_[static_cast<std::size_t>(x)] = static_cast<int>(g.incident(x).size());
    dist_.assign(static_cast<std::size_t>(n_), 0);
    queue_.reserve(static_cast<std::size_t>(n_));
  }

  void set(EdgeId e, int d) {
    dir_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(d);
    auto [t, h] = tail_head(e);
    --free_deg_[static_cast<std::size_t>(t)];
    --free_deg_[static_cast<std::size_t>(h)];
    ++out_[static_cast<std::size_t>(t)];
    ++in_[static_cast<std::size_t>(h)];
  }
  void unset(EdgeId e) {
    auto [t, h] = tail_head(e);
    ++free_deg_[static_cast<std::size_t>(t)];
    ++free_deg_[static_cast<std::size_t>(h)];
    --out_[static_cast<std::size_t>(t)];
    --in_[static_cast<std::size_t>(h)];
    dir_[static_cast<std::size_t>(e)] = -1;
  }

  // Looks for an orientation of diameter < limit. With stop_at_first the
  // search ends at the first one found.
  void run(int limit, bool stop_at_first) {
    limit_ = limit;
    stop_at_first_ = stop_at_first;
    recurse(0);
  }

  int best() const { return limit_; }
  bool found() const { return found_; }
  const std::vector<std::int8_t>& best_dirs() const { return best_dirs_; }
  std::int64_t nodes() const { return nodes_; }
  std::int64_t pruned() const { return pruned_; }
  bool exhausted() const { return exhausted_; }

 private:
  std::pair<VertexId, VertexId> tail_head(EdgeId e) const {
    const EdgeEnds& en = g_.ends(e);
    return dir_[static_cast<std::size_t>(e)] == 0 ? std::pair{en.a, en.b} : std::pair{en.b, en.a};
  }

  bool can_go(EdgeId e, VertexId from) const {
    std::int8_t d = dir_[static_cast<std::size_t>(e)];
    if (d < 0) return true;
    return (d == 0) == (g_.ends(e).a == from);
  }

  // Max mixed distance, or kUnreachable; stops early once >= limit_.
  int mixed_eccentricity_bound() {
    int worst = 0;
    for (VertexId s = 0; s < n_; ++s) {
      std::fill(dist_.begin(), dist_.end(), -1);
      queue_.clear();
      queue_.push_back(s);
      dist_[static_cast<std::size_t>(s)] = 0;
      int seen = 1;
      for (std::size_t h = 0; h < queue_.size(); ++h) {
        VertexId x = queue_[h];
        int dx = dist_[static_cast<std::size_t>(x)];
        for (EdgeId e : g_.incident(x)) {
          if (!can_go(e, x)) continue;
          VertexId y = g_.ends(e).other(x);
          if (dist_[static_cast<std::size_t>(y)] >= 0) continue;
          dist_[static_cast<std::size_t>(y)] = dx + 1;
          if (dx + 1 >= limit_) return dx + 1;
          worst = std::max(worst, dx + 1);
          ++seen;
          queue_.push_back(y);
        }
      }
      if (seen < n_) return kUnreachable;
    }
    return worst;
  }

  bool dead_vertex(EdgeId e) const {
    const EdgeEnds& en = g_.ends(e);
    for (VertexId x : {en.a, en.b}) {
      auto i = static_cast<std::size_t>(x);
      if (free_deg_[i] == 0 && (in_[i] == 0 || out_[i] == 0)) return true;
    }
    return false;
  }

  void recurse(std::size_t depth) {
    if (done_) return;
    if (nodes_ >= budget_) {
      exhausted_ = true;
      done_ = true;
      return;
    }
    ++nodes_;
    int bound = mixed_eccentricity_bound();
    if (bound >= limit_) {
      ++pruned_;
      return;
    }
    if (depth == order_.size()) {
      limit_ = bound;
      best_dirs_ = dir_;
      found_ = true;
      if (stop_at_first_) done_ = true;
      return;
    }
    EdgeId e = order_[depth];
    for (int d = 0; d < 2 && !done_; ++d) {
      set(e, d);
      if (dead_vertex(e)) {
        ++pruned_;
      } else {
        recurse(depth + 1);
      }
      unset(e);
    }
  }

  const Multigraph& g_;
  std::vector<EdgeId> order_;
  std::int64_t budget_;
  int n_ = 0;
  std::vector<std::int8_t> dir_;
  std::vector<int> free_deg_, in_, out_;
  std::vector<int> dist_;
  std::vector<VertexId> queue_;
  int limit_ = kUnreachable;
  bool stop_at_first_ = false;
  bool done_ = false;
  bool found_ = false;
  bool exhausted_ = false;
  std::vector<std::int8_t> best_dirs_;
  std::int64_t nodes_ = 0;
  std::int64_t pruned_ = 0;
};

Digraph dirs_to_digraph(const Multigraph& g, const std::vector<std::int8_t>& dirs) {
  std::vector<Arc> arcs;
  arcs.reserve(dirs.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeEnds& en = g.ends(e);
    arcs.push_back(dirs[static_cast<std::size_t>(e)] == 0 ? Arc{en.a, en.b} : Arc{en.b, en.a});
  }
  return Digraph(g.vertex_count(), std::move(arcs));
}

// Fixed assignments (parallel classes alternate, first free edge fixed) and
// the branching order of the remaining edges.
struct SearchPlan {
  std::vector<std::pair<EdgeId, int>> fixed;
  std::vector<EdgeId> order;
};

SearchPlan plan_search(const Multigraph& g) {
  SearchPlan plan;
  std::vector<bool> done(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (done[static_cast<std::size_t>(e)]) continue;
    const EdgeEnds& en = g.ends(e);
    auto twins = g.edges_between(en.a, en.b);
    if (twins.size() < 2) continue;
    // Two arcs in opposite directions already give both distances 1; the
    // remaining copies cannot matter, so one direction each is enough.
    for (std::size_t k = 0; k < twins.size(); ++k) {
      EdgeId t = twins[k];
      done[static_cast<std::size_t>(t)] = true;
      const EdgeEnds& te = g.ends(t);
      VertexId tail = (k % 2 == 0) ? en.a : en.b;
      plan.fixed.emplace_back(t, te.a == tail ? 0 : 1);
    }
  }
  std::vector<EdgeId> free_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!done[static_cast<std::size_t>(e)]) free_edges.push_back(e);
  if (!free_edges.empty()) {
    // Reversing a whole orientation keeps its diameter, so one edge may be fixed.
    plan.fixed.emplace_back(free_edges.front(), 0);
    free_edges.erase(free_edges.begin());
  }
  auto deg = [&](EdgeId e) {
    const EdgeEnds& en = g.ends(e);
    return g.incident(en.a).size() + g.incident(en.b).size();
  };
  std::stable_sort(free_edges.begin(), free_edges.end(),
                   [&](EdgeId x, EdgeId y) { return deg(x) > deg(y); });
  plan.order = std::move(free_edges);
  return plan;
}

constexpr int kSplitDepth = 3;

struct SubResult {
  bool found = false;
  int best = kUnreachable;
  std::vector<std::int8_t> dirs;
  std::int64_t nodes = 0;
  std::int64_t pruned = 0;
  bool exhausted = false;
};

// Runs the search below every prefix of the first few branching edges. The
// split does not depend on the job count, so reports are identical for any
// number of threads.
std::vector<SubResult> run_split(const Multigraph& g, const SearchPlan& plan, int limit, bool stop_at_first,
                                 const SearchBudget& budget) {
  std::size_t split = std::min<std::size_t>(kSplitDepth, plan.order.size());
  std::size_t prefixes = std::size_t{1} << split;
  std::vector<EdgeId> rest(plan.order.begin() + static_cast<std::ptrdiff_t>(split), plan.order.end());
  std::int64_t per = std::max<std::int64_t>(1, budget.max_nodes / static_cast<std::int64_t>(prefixes));
  std::vector<SubResult> results(prefixes);

  auto work = [&](std::size_t idx) {
    Searcher s(g, rest, per);
    for (auto [e, d] : plan.fixed) s.set(e, d);
    for (std::size_t k = 0; k < split; ++k) s.set(plan.order[k], static_cast<int>((idx >> k) & 1U));
    s.run(limit, stop_at_first);
    SubResult& r = results[idx];
    r.found = s.found();
    r.best = s.best();
    r.dirs = s.best_dirs();
    r.nodes = s.nodes();
    r.pruned = s.pruned();
    r.exhausted = s.exhausted();
  };

  int jobs = std::max(1, budget.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < prefixes; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < prefixes; i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace

SearchReport exact_oriented_diameter(const Multigraph& g, const SearchBudget& budget) {
  require_bridgeless(g);
  SearchReport report;
  Digraph start = robbins_orientation(g);
  report.optimal = directed_diameter(start);
  report.witness = start;
  if (g.vertex_count() <= 1) return report;

  SearchPlan plan = plan_search(g);
  auto results = run_split(g, plan, report.optimal, false, budget);
  for (const SubResult& r : results) {
    report.nodes += r.nodes;
    report.pruned += r.pruned;
    report.budget_exceeded = report.budget_exceeded || r.exhausted;
    if (r.found && r.best < report.optimal) {
      report.optimal = r.best;
      report.witness = dirs_to_digraph(g, r.dirs);
    }
  }
  return report;
}

bool certify_lower_bound(const Multigraph& g, int k, const SearchBudget& budget) {
  require_bridgeless(g);
  if (k <= 0 || g.vertex_count() <= 1) return k <= 0;
  SearchPlan plan = plan_search(g);
  auto results = run_split(g, plan, k, true, budget);
  bool exhausted = false;
  for (const SubResult& r : results) {
    if (r.found) return false;
    exhausted = exhausted || r.exhausted;
  }
  if (exhausted) throw Error(ErrorCode::kBudgetExceeded, "node budget exhausted before certification");
  return true;
}

int exhaustive_oriented_diameter(const Multigraph& g) {
  require_bridgeless(g);
  const int m = g.edge_count();
  if (m > 24) throw Error(ErrorCode::kUnsupported, "exhaustive search limited to 24 edges");
  int best = kUnreachable;
  std::vector<Arc> arcs(static_cast<std::size_t>(m));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    for (EdgeId e = 0; e < m; ++e) {
      const EdgeEnds& en = g.ends(e);
      arcs[static_cast<std::size_t>(e)] = ((mask >> e) & 1U) ? Arc{en.b, en.a} : Arc{en.a, en.b};
    }
    Digraph d(g.vertex_count(), arcs);
    if (!is_strong(d)) continue;
    best = std::min(best, directed_diameter(d));
  }
  return best;
}

std::string search_report_to_text(const SearchReport& report) {
  std::ostringstream out;
  out << "optimal " << report.optimal << '\n'
      << "proven " << (report.budget_exceeded ? "no" : "yes") << '\n'
      << "nodes " << report.nodes << '\n'
      << "pruned " << report.pruned << '\n'
      << "witness";
  for (const Arc& a : report.witness.arcs()) out << ' ' << a.tail << '>' << a.head;
  out << '\n';
  return out.str();
}

}  // namespace odiam
