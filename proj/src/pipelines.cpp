#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "odiam/constructor.hpp"
#include "odiam/error.hpp"
#include "pipeline_common.hpp"

namespace odiam {

namespace detail {

void complete_in_place(PartialOrientation& p, const PipelineOptions& options) {
  const Multigraph& g = p.graph();
  p.begin_step("completion");
  std::mt19937_64 rng(options.completion_seed.value_or(0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p.assigned(e)) continue;
    const EdgeEnds& ends = g.ends(e);
    bool low_first = ends.a < ends.b;
    if (options.completion_seed) low_first = (rng() & 1U) != 0;
    VertexId lo = std::min(ends.a, ends.b), hi = std::max(ends.a, ends.b);
    p.assign(e, low_first ? Arc{lo, hi} : Arc{hi, lo});
  }
}

}  // namespace detail

namespace {

void require_gstar(const Multigraph& g, int lo, int hi) {
  const int gs = max_edge_girth(g);
  if (gs < lo || gs > hi) {
    throw Error(ErrorCode::kPreconditionGstar, "g* = " + std::to_string(gs));
  }
}

}  // namespace

PipelineResult orient_g2(const Multigraph& g) {
  require_gstar(g, 2, 2);
  PartialOrientation p(g);
  p.begin_step("parallel-pairs");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeEnds& ends = g.ends(e);
    VertexId lo = std::min(ends.a, ends.b), hi = std::max(ends.a, ends.b);
    const auto twins = g.edges_between(lo, hi);
    const auto rank = std::find(twins.begin(), twins.end(), e) - twins.begin();
    p.assign(e, rank % 2 == 0 ? Arc{lo, hi} : Arc{hi, lo});
  }
  return {to_digraph(p), p.trace()};
}

Multigraph simple_skeleton(const Multigraph& g, std::vector<EdgeId>* representative) {
  std::vector<std::pair<VertexId, VertexId>> skeleton_edges;
  std::map<std::pair<VertexId, VertexId>, EdgeId> skeleton_id;
  if (representative) representative->assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeEnds& ends = g.ends(e);
    std::pair<VertexId, VertexId> key{std::min(ends.a, ends.b), std::max(ends.a, ends.b)};
    auto [it, fresh] = skeleton_id.emplace(key, static_cast<EdgeId>(skeleton_edges.size()));
    if (fresh) skeleton_edges.push_back(key);
    if (representative) (*representative)[static_cast<std::size_t>(e)] = it->second;
  }
  return build_graph(g.vertex_count(), skeleton_edges);
}

PipelineResult orient_g3(const Multigraph& g) {
  require_gstar(g, 3, 3);
  std::vector<EdgeId> representative;
  const Multigraph h = simple_skeleton(g, &representative);
  const Digraph dh = ct_cycle_orientation(h);

  PartialOrientation p(g);
  p.begin_step("skeleton");
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto r = static_cast<std::size_t>(representative[static_cast<std::size_t>(e)]);
    if (!used[r]) {
      used[r] = 1;
      p.assign(e, dh.arc(static_cast<EdgeId>(r)));
    }
  }
  p.begin_step("parallel-reversed");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p.assigned(e)) continue;
    const Arc& a = dh.arc(representative[static_cast<std::size_t>(e)]);
    p.assign(e, {a.head, a.tail});
  }
  return {to_digraph(p), p.trace()};
}

PipelineResult orient_g9(const Multigraph& g, const FinePartition& fine, const PipelineOptions& options) {
  if (fine.mode != PartitionMode::kGirth9) {
    throw Error(ErrorCode::kPreconditionGstar, "girth-9 pipeline needs a girth-9 partition");
  }
  PartialOrientation p(g);
  Orienter o(g, p, fine, 0);
  p.begin_step("cycle");
  o.arc(o.M(), o.K());
  o.arc(o.K(), o.I());
  o.arc(o.I(), o.A());
  o.arc(o.A(), o.u());
  o.arc(o.u(), o.v());
  o.arc(o.v(), o.B());
  o.arc(o.B(), o.J());
  o.arc(o.J(), o.L());
  o.arc(o.L(), o.M());
  detail::complete_in_place(p, options);
  return {to_digraph(p), p.trace()};
}

std::string trace_to_text(const ConstructionTrace& trace) {
  std::ostringstream os;
  for (const TraceRecord& rec : trace) {
    for (const auto& [e, a] : rec.arcs) os << rec.label << ' ' << e << ' ' << a.tail << ' ' << a.head << '\n';
  }
  return os.str();
}

}  // namespace odiam
