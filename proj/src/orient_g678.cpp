#include <algorithm>

#include "odiam/constructor.hpp"
#include "odiam/error.hpp"
#include "pipeline_common.hpp"

namespace odiam {

namespace {

template <std::size_t N>
VertexSet family_span(const std::array<VertexSet, N>& f, int first, int last) {
  VertexSet out(f[0].universe());
  for (int i = first; i <= last; ++i) out |= f[static_cast<std::size_t>(i - 1)];
  return out;
}

[[noreturn]] void unsatisfiable(VertexId w, const std::string& what) {
  throw Error(ErrorCode::kDefinitionUnsatisfiable, "vertex " + std::to_string(w) + ": " + what);
}

// Edges from w into s, ascending EdgeId.
std::vector<EdgeId> edges_into(const Multigraph& g, VertexId w, const VertexSet& s) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.incident(w)) {
    if (s.contains(g.ends(e).other(w))) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool hits(const Multigraph& g, VertexId w, const VertexSet& s) { return !isolated_in(g, w, s); }

// Lowest edge joining w to `entry` runs entry -> w; every other edge of
// [w, pool] leaves w.
void enter_once(Orienter& o, VertexId w, VertexId entry, const VertexSet& pool) {
  const Multigraph& g = o.graph();
  const EdgeId in = g.edges_between(w, entry).front();
  o.edge(in, entry, w);
  for (EdgeId e : edges_into(g, w, pool)) {
    if (e != in) o.edge(e, w, g.ends(e).other(w));
  }
}

void orient_layers(Orienter& o) {
  o.arc(o.Ap(), o.A());
  o.arc(o.A(), o.u());
  o.arc(o.u(), o.v());
  o.arc(o.J(), o.I());
  o.arc(o.S33(), o.I());
  o.arc(o.K(), o.I());
  o.arc(o.L(), o.K());
  o.arc(o.M(), o.K());
  o.arc(o.S33(), o.K());
  o.arc(o.I() - o.I(8), o.A());
  for (int i = 1; i <= 10; ++i) {
    for (int j = i + 1; j <= 10; ++j) o.arc(o.A(i), o.A(j));
  }
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) o.arc(o.I(i), o.I(j));
  }
  o.arc(o.K(1), o.K(2));
}

void orient_a_prime(Orienter& o) {
  const Multigraph& g = o.graph();
  const VertexSet ap = o.Ap();
  VertexSet linked = o.none();
  for (VertexId w : ap.members()) {
    if (hits(g, w, ap)) linked.insert(w);
  }
  if (!linked.empty()) o.rs(o.u(), linked);
  const VertexId anchor = o.u().members().front();
  for (VertexId w : (ap - linked).members()) {
    const auto edges = g.edges_between(w, anchor);
    if (edges.size() >= 2) {
      for (std::size_t t = 0; t < edges.size(); ++t) {
        t % 2 == 0 ? o.edge(edges[t], anchor, w) : o.edge(edges[t], w, anchor);
      }
    } else {
      o.edge(edges.front(), anchor, w);
    }
  }
}

void orient_i_to_a(Orienter& o) {
  o.arc(o.A(1), o.I8(1));
  o.fill(o.I(), o.A());
}

RSResult orient_i_prime(Orienter& o) {
  const Multigraph& g = o.graph();
  const VertexSet A29 = o.A(2, 9);
  const VertexSet A29_a101 = A29 | o.A10(1);

  o.arc(o.Ip() - o.Ip(1), o.A(10));
  o.arc(o.Ip(1), o.A10(2));
  o.arc(o.Ip(73), o.Ip(11));
  o.arc(o.Ip(11), o.A());
  const VertexSet ip234 = o.Ip(2) | o.Ip(3) | o.Ip(4);
  o.arc(o.I(), ip234);
  o.arc(ip234, o.A());
  o.arc(o.I(1), o.Ip(61));
  o.arc(o.Ip(61), o.Ip(71) | o.A());
  o.arc(o.Ip(71), o.A());
  o.arc(o.Ip(61) | o.I(1), o.Ip(62));
  o.arc(o.Ip(62), o.A());
  o.arc(o.I(1), o.Ip(63));
  o.arc(o.Ip(63), o.A());
  o.arc(o.Ip(6), o.I(7) | o.I(8));
  o.arc(o.A(1), o.Ip(72) | o.Ip(73));
  o.arc(o.Ip(73), o.Ip(71) | o.Ip(72));
  o.arc(o.Ip(71) | o.Ip(72), o.Ip(81));
  o.arc(o.Ip(81), o.A());
  o.arc(A29, o.Ip(82));
  o.arc(o.Ip(82), o.Ip(81));
  o.arc(A29, o.Ip(83));
  o.arc(o.Ip(83), o.Ip(82));
  o.arc(A29_a101, o.Ip(13));
  o.arc(o.Ip(13), o.Ip(12));

  const VertexSet i_ip = o.I() | o.Ip();
  for (VertexId w : o.Ip(12).members()) {
    const VertexSet self = o.one(w);
    if (hits(g, w, i_ip)) {
      o.arc(A29_a101, self);
      o.arc(self, o.Ip(11) | o.I() | (o.Ip() - o.Ip(1)));
    } else {
      const auto& p = o.witness(w);
      enter_once(o, w, p.at(1), o.A());
    }
  }

  RSResult ip14 = o.rs(A29_a101, o.Ip(14));
  o.rs(o.A(1), o.Ip(74));
  o.rs(A29, o.Ip(84));
  return ip14;
}

// The I'_5 decision list.
void orient_i_prime5(Orienter& o, const RSResult& ip14) {
  const Multigraph& g = o.graph();
  const VertexSet A = o.A();
  const VertexSet A29 = o.A(2, 9);
  const VertexSet A10 = o.A(10);
  const VertexSet ip234 = o.Ip(2) | o.Ip(3) | o.Ip(4);

  for (VertexId w : o.Ip(5).members()) {
    const VertexSet self = o.one(w);
    const int ell = o.dist_to_J(w);
    const auto paths = shortest_paths_to_set(g, o.fine_side().dist_to_opposite_i, w);
    auto first_hop_in = [&](const VertexSet& s) {
      for (const auto& p : paths) {
        if (s.contains(p[1])) return p[1];
      }
      return VertexId{-1};
    };

    if (hits(g, w, o.Ip())) {
      if (ell == 2 || ell == 3) {
        o.arc(o.I(1) | o.A(1), self);
        o.arc(self, ip234 | (A - o.A(1)) | o.I(7) | o.I(8));
      } else if (ell == 4 && first_hop_in(A29) >= 0) {
        const VertexSet ip11 = ip234 | o.Ip(11);
        const VertexSet ip1213 = o.Ip(12) | o.Ip(13);
        if (hits(g, w, A10)) {
          o.arc(A29, self);
          o.arc(self, A10);
        } else if (hits(g, w, ip11)) {
          o.arc(A29, self);
          o.arc(self, ip11);
        } else if (hits(g, w, ip1213)) {
          o.arc(ip1213, self);
          o.arc(self, A);
        } else if (hits(g, w, ip14.v1)) {
          o.arc(ip14.v1, self);
          o.arc(self, A);
        } else if (hits(g, w, ip14.v2)) {
          o.arc(A29, self);
          o.arc(self, ip14.v2);
        } else {
          unsatisfiable(w, "I'_5 with a path through A_2..A_9 matches no guard");
        }
      } else if (ell == 4 && first_hop_in(o.Ip(4)) >= 0) {
        o.arc(o.Ip(4), self);
        o.arc(self, A);
      } else {
        unsatisfiable(w, "I'_5 has no qualifying shortest path");
      }
    } else if (isolated_in(g, w, o.I())) {
      // A_10 is excluded: its edges to I' already point away from w.
      VertexId i1 = first_hop_in(A29);
      if (i1 < 0) i1 = first_hop_in(o.A(1));
      if (i1 < 0) unsatisfiable(w, "isolated I'_5 vertex whose shortest paths leave through A_10 only");
      if (edges_into(g, w, A).size() < 2) unsatisfiable(w, "isolated I'_5 vertex with a single edge to A");
      enter_once(o, w, i1, A);
    } else {
      const VertexSet I81 = o.I8(1);
      if ((ell == 3 || ell == 4) && hits(g, w, A10)) {
        o.arc(o.A(1, 9), self);
        o.arc(self, A10);
      } else if ((ell == 3 || ell == 4) && hits(g, w, I81)) {
        o.arc(I81, self);
        o.arc(self, A);
      } else if (ell == 3 || ell == 4) {
        o.arc(o.A(1, 9), self);
        o.arc(self, o.I() - I81);
      } else {
        o.arc(o.I(1), self);
        o.arc(self, A | o.I(7) | o.I(8));
      }
    }
  }
  o.fill(o.I(), o.Ip());
}

void orient_k_prime(Orienter& o) {
  const VertexSet I14 = o.I(1, 4);
  o.arc(o.Kp(), o.I(5, 8));
  o.arc(o.K(), o.Kp(1) | o.Kp(2));
  o.arc(o.Kp(1) | o.Kp(2), o.I());
  o.arc(I14, o.Kp(41) | o.Kp(52));
  o.arc(o.Kp(41) | o.Kp(52), o.Kp(42) | o.Kp(51));
  o.arc(o.Kp(42) | o.Kp(51), o.I());
  o.arc(I14, o.Kp(53));
  o.arc(o.Kp(53), o.Kp(52));
  o.rs(o.I(1), o.Kp(43));
  o.rs(o.I(2, 4), o.Kp(54));
}

void orient_m_s33(Orienter& o) {
  const Multigraph& g = o.graph();
  const VertexSet s33 = o.S33();
  for (VertexId w : o.M().members()) {
    const auto edges = edges_into(g, w, s33);
    if (edges.size() >= 2) {
      for (std::size_t t = 0; t < edges.size(); ++t) {
        const VertexId x = g.ends(edges[t]).other(w);
        t % 2 == 0 ? o.edge(edges[t], x, w) : o.edge(edges[t], w, x);
      }
    } else if (edges.size() == 1) {
      const VertexId x = g.ends(edges[0]).other(w);
      if (hits(g, w, o.K())) {
        o.edge(edges[0], x, w);
      } else if (hits(g, w, o.L())) {
        o.edge(edges[0], w, x);
      }
    }
  }
}

void orient_m_prime(Orienter& o) {
  const Multigraph& g = o.graph();
  o.arc(o.S33(), o.Mp(2));
  o.arc(o.Mp(2), o.Mp(1));
  o.arc(o.Mp(1), o.S33());
  for (VertexId w : o.Mp(1).members()) {
    if (hits(g, w, o.Mp(2))) {
      o.arc(o.one(w), o.M());
    } else {
      o.arc(o.M(), o.one(w));
    }
  }
  if (!o.Mp(3).empty()) o.rs(o.S33(), o.Mp(3));
}

void orient_k_prime3(Orienter& o) {
  const Multigraph& g = o.graph();
  const VertexSet I14 = o.I(1, 4);
  for (VertexId w : o.Kp(31).members()) {
    o.arc(I14, o.one(w));
    o.arc(o.one(w), o.I(5, 7) | o.I8(2) | o.K() | o.Kp(1));
  }
  for (VertexId w : o.Kp(32).members()) {
    const VertexSet self = o.one(w);
    if (hits(g, w, o.Kp())) {
      if (hits(g, w, o.Kp(2))) {
        o.arc(I14, self);
        o.arc(self, o.Kp(2));
      } else {
        o.arc(o.Kp(1), self);
        o.arc(self, I14);
      }
    } else {
      if (edges_into(g, w, o.I()).size() < 2) unsatisfiable(w, "K'_32 vertex isolated in G[K'] with one edge to I");
      const auto& q = o.witness(w);
      if (!o.I().contains(q.at(1))) unsatisfiable(w, "K'_32 witness path does not start into I");
      enter_once(o, w, q.at(1), o.I());
    }
  }
  o.fill(o.K(), o.Kp());
}

void run_both(const ConstructionStep& step, const std::string& label, const Multigraph& g,
                  const FinePartition& fine, PartialOrientation& p) {
  p.begin_step(label);
  Orienter home(g, p, fine, 0);
  step(home);
  p.begin_step(label + "/sym");
  apply_symmetric(step, g, fine, p);
}

}  // namespace

Orienter::Orienter(const Multigraph& g, PartialOrientation& p, const FinePartition& fine, int side)
    : g_(g), p_(p), fine_(fine), side_(side) {}

VertexSet Orienter::u() const { return one(fine_.coarse.side[static_cast<std::size_t>(side_)].anchor); }
VertexSet Orienter::v() const { return one(fine_.coarse.side[static_cast<std::size_t>(1 - side_)].anchor); }
VertexSet Orienter::A() const { return fine_.coarse.side[static_cast<std::size_t>(side_)].a; }
VertexSet Orienter::A(int j) const { return fine_side().a[static_cast<std::size_t>(j - 1)]; }
VertexSet Orienter::A(int first, int last) const { return family_span(fine_side().a, first, last); }
VertexSet Orienter::A10(int k) const { return fine_side().a10[static_cast<std::size_t>(k - 1)]; }
VertexSet Orienter::Ap() const { return fine_.coarse.side[static_cast<std::size_t>(side_)].a_prime; }
VertexSet Orienter::I() const { return fine_.coarse.side[static_cast<std::size_t>(side_)].i; }
VertexSet Orienter::I(int j) const { return fine_side().i[static_cast<std::size_t>(j - 1)]; }
VertexSet Orienter::I(int first, int last) const { return family_span(fine_side().i, first, last); }
VertexSet Orienter::I8(int k) const { return fine_side().i8[static_cast<std::size_t>(k - 1)]; }
VertexSet Orienter::Ip() const { return fine_.coarse.side[static_cast<std::size_t>(side_)].i_prime; }
VertexSet Orienter::Ip(int code) const {
  const FineSide& f = fine_side();
  if (code >= 1 && code <= 8) return f.ip[static_cast<std::size_t>(code - 1)];
  const auto sub = static_cast<std::size_t>(code % 10 - 1);
  switch (code / 10) {
    case 1: return f.ip1.at(sub);
    case 6: return f.ip6.at(sub);
    case 7: return f.ip7.at(sub);
    case 8: return f.ip8.at(sub);
    default: throw Error(ErrorCode::kInvalidSpec, "no I' class " + std::to_string(code));
  }
}
VertexSet Orienter::K() const { return fine_.coarse.side[static_cast<std::size_t>(side_)].k; }
VertexSet Orienter::K(int j) const { return fine_side().k[static_cast<std::size_t>(j - 1)]; }
VertexSet Orienter::Kp() const { return fine_.coarse.side[static_cast<std::size_t>(side_)].k_prime; }
VertexSet Orienter::Kp(int code) const {
  const FineSide& f = fine_side();
  if (code >= 1 && code <= 5) return f.kp[static_cast<std::size_t>(code - 1)];
  const auto sub = static_cast<std::size_t>(code % 10 - 1);
  switch (code / 10) {
    case 3: return f.kp3.at(sub);
    case 4: return f.kp4.at(sub);
    case 5: return f.kp5.at(sub);
    default: throw Error(ErrorCode::kInvalidSpec, "no K' class " + std::to_string(code));
  }
}
VertexSet Orienter::B() const { return fine_.coarse.side[static_cast<std::size_t>(1 - side_)].a; }
VertexSet Orienter::J() const { return fine_.coarse.side[static_cast<std::size_t>(1 - side_)].i; }
VertexSet Orienter::L() const { return fine_.coarse.side[static_cast<std::size_t>(1 - side_)].k; }
VertexSet Orienter::S33() const { return fine_.coarse.s33; }
VertexSet Orienter::M() const { return fine_.coarse.m; }
VertexSet Orienter::Mp(int j) const { return fine_.m_prime[static_cast<std::size_t>(j - 1)]; }

int Orienter::dist_to_J(VertexId w) const {
  return fine_side().dist_to_opposite_i[static_cast<std::size_t>(w)];
}

const std::vector<VertexId>& Orienter::witness(VertexId w) const {
  auto it = fine_side().witness_path.find(w);
  if (it == fine_side().witness_path.end()) unsatisfiable(w, "no retained witness path");
  return it->second;
}

void Orienter::arc(const VertexSet& x, const VertexSet& y) {
  mirrored() ? p_.orient_between(y, x) : p_.orient_between(x, y);
}

void Orienter::fill(const VertexSet& x, const VertexSet& y) {
  mirrored() ? p_.orient_unassigned_between(y, x) : p_.orient_unassigned_between(x, y);
}

void Orienter::edge(EdgeId e, VertexId tail, VertexId head) {
  p_.assign(e, mirrored() ? Arc{head, tail} : Arc{tail, head});
}

RSResult Orienter::rs(const VertexSet& r, const VertexSet& s) {
  if (s.empty()) return {s, s, {}};
  return rs_orientation(g_, p_, r, s, mirrored());
}

void apply_symmetric(const ConstructionStep& step, const Multigraph& g, const FinePartition& fine,
                     PartialOrientation& p) {
  Orienter mirror(g, p, fine, 1);
  step(mirror);
}

PipelineResult orient_g678(const Multigraph& g, const FinePartition& fine, const PipelineOptions& options) {
  if (fine.mode != PartitionMode::kGirth678) {
    throw Error(ErrorCode::kPreconditionGstar, "girth 6-8 pipeline needs a girth 6-8 partition");
  }
  PartialOrientation p(g);
  run_both(orient_layers, "layers", g, fine, p);
  run_both(orient_a_prime, "a-prime", g, fine, p);
  run_both(orient_i_to_a, "i-to-a", g, fine, p);

  // The I'_5 step needs the I'_14 bipartition chosen by the I' step.
  std::array<RSResult, 2> ip14;
  for (int side = 0; side < 2; ++side) {
    p.begin_step(side == 0 ? "i-prime" : "i-prime/sym");
    Orienter o(g, p, fine, side);
    ip14[static_cast<std::size_t>(side)] = orient_i_prime(o);
  }
  for (int side = 0; side < 2; ++side) {
    p.begin_step(side == 0 ? "i-prime-5" : "i-prime-5/sym");
    Orienter o(g, p, fine, side);
    orient_i_prime5(o, ip14[static_cast<std::size_t>(side)]);
  }
  run_both(orient_k_prime, "k-prime", g, fine, p);
  p.begin_step("m-s33");
  {
    Orienter o(g, p, fine, 0);
    orient_m_s33(o);
  }
  p.begin_step("m-prime");
  {
    Orienter o(g, p, fine, 0);
    orient_m_prime(o);
  }
  run_both(orient_k_prime3, "k-prime-3", g, fine, p);
  detail::complete_in_place(p, options);
  return {to_digraph(p), p.trace()};
}

}  // namespace odiam
