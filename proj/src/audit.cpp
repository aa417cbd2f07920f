#include <algorithm>
#include <sstream>

#include "odiam/oracle.hpp"

namespace odiam {

const ClassBoundTable& girth9_class_bounds() {
  static const ClassBoundTable t{
      {"A", {1, 7}}, {"B", {7, 1}}, {"I", {2, 6}}, {"J", {6, 2}},
      {"K", {3, 5}}, {"L", {5, 3}}, {"M", {4, 4}},
  };
  return t;
}

const ClassBoundTable& girth678_class_bounds() {
  static const ClassBoundTable t{
      {"A", {1, 8}},   {"B", {8, 1}},   {"A'", {2, 10}}, {"B'", {10, 2}}, {"I", {3, 7}},
      {"J", {7, 3}},   {"I'", {4, 7}},  {"J'", {7, 4}},  {"K", {3, 5}},   {"L", {5, 3}},
      {"K'", {4, 7}},  {"L'", {7, 4}},  {"S33", {3, 3}}, {"M", {4, 4}},   {"M'", {5, 5}},
  };
  return t;
}

namespace {

class Auditor {
 public:
  Auditor(const Digraph& d, const FinePartition& fine) : fine_(fine), dist_(all_pairs_directed(d)) {
    for (VertexId x = 0; x < d.vertex_count(); ++x)
      for (VertexId y = 0; y < d.vertex_count(); ++y)
        if (at(x, y) > report_.worst) {
          report_.worst = at(x, y);
          report_.worst_from = x;
          report_.worst_to = y;
        }
  }

  int at(VertexId x, VertexId y) const { return dist_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  const FinePartition& fine() const { return fine_; }
  int n() const { return fine_.vertex_count(); }

  void fail(VertexId w, const std::string& rule, int measured, int bound) {
    report_.violations.push_back(
        {w, w >= 0 ? fine_.leaf[static_cast<std::size_t>(w)] : std::string(), rule, measured, bound});
  }
  void at_most(VertexId w, const std::string& rule, int measured, int bound) {
    if (measured > bound) fail(w, rule, measured, bound);
  }
  // At most `bound`, and equal to it only when `cond` holds.
  void at_most_eq(VertexId w, const std::string& rule, int measured, int bound, bool cond) {
    if (measured > bound) {
      fail(w, rule, measured, bound);
    } else if (measured == bound && !cond) {
      fail(w, rule + " (equality case)", measured, bound - 1);
    }
  }

  AuditReport take() { return std::move(report_); }

 private:
  const FinePartition& fine_;
  std::vector<std::vector<int>> dist_;
  AuditReport report_;
};

bool touches(const Multigraph& g, VertexId w, const VertexSet& s) { return !isolated_in(g, w, s); }

// Claims stated for the u side; side 1 is checked through the mirror, which
// swaps the roles of ∂(w,u) and ∂(v,w).
void side_claims(Auditor& au, const Multigraph& g, int s) {
  const FinePartition& fine = au.fine();
  const FineSide& fs = fine.side[static_cast<std::size_t>(s)];
  const CoarseSide& cs = fine.coarse.side[static_cast<std::size_t>(s)];
  const VertexId u = fine.u();
  const VertexId v = fine.v();
  auto to_anchor = [&](VertexId w) { return s == 0 ? au.at(w, u) : au.at(v, w); };
  auto from_other = [&](VertexId w) { return s == 0 ? au.at(v, w) : au.at(w, u); };
  auto rule = [&](const std::string& cls, const char* what) {
    std::string c = cls;
    if (s == 1) {
      for (char& ch : c) {
        if (ch == 'A') ch = 'B';
        else if (ch == 'I') ch = 'J';
        else if (ch == 'K') ch = 'L';
      }
    }
    return c + " " + what;
  };
  const char* kTo = s == 0 ? "d(w,u)" : "d(v,w)";
  const char* kFrom = s == 0 ? "d(v,w)" : "d(w,u)";

  for (VertexId a : cs.a.members()) au.at_most(a, rule("A", kTo), to_anchor(a), 1);
  for (VertexId a : cs.a_prime.members()) {
    au.at_most(a, rule("A'", "theta to anchor"), std::max(au.at(a, cs.anchor), au.at(cs.anchor, a)), 2);
    au.at_most(a, rule("A'", kFrom), from_other(a), 10);
  }

  for (VertexId w : cs.i.members()) au.at_most_eq(w, rule("I", kTo), to_anchor(w), 3, fs.i8[0].contains(w));

  for (int i = 0; i < 2; ++i)
    for (VertexId w : fs.k[static_cast<std::size_t>(i)].members()) {
      au.at_most(w, rule("K" + std::to_string(i + 1), kTo), to_anchor(w), 3);
      au.at_most(w, rule("K" + std::to_string(i + 1), kFrom), from_other(w), 4 + i);
    }

  // K'_2, K'_4, K'_5
  for (VertexId w : (fs.kp[1] | fs.kp[3] | fs.kp[4]).members()) {
    au.at_most_eq(w, rule("K'245", kTo), to_anchor(w), 4, fs.kp[3].contains(w) || fs.kp[4].contains(w));
    au.at_most(w, rule("K'245", kFrom), from_other(w), fs.kp5[3].contains(w) ? 6 : 5);
  }
  // K'_1, K'_3
  for (VertexId w : (fs.kp[0] | fs.kp[2]).members()) {
    au.at_most(w, rule("K'13", kTo), to_anchor(w), 4);
    if (fs.kp[0].contains(w)) {
      au.at_most(w, rule("K'1", kFrom), from_other(w), 6);
    } else {
      bool loose = fs.kp3[1].contains(w) && touches(g, w, cs.k_prime) && !touches(g, w, fs.kp[1]);
      au.at_most(w, rule("K'3", kFrom), from_other(w), loose ? 7 : 5);
    }
  }

  // I' other than I'_1, I'_3, I'_5
  const VertexSet ip135 = fs.ip[0] | fs.ip[2] | fs.ip[4];
  for (VertexId w : (cs.i_prime - ip135).members()) {
    au.at_most_eq(w, rule("I'", kTo), to_anchor(w), 4, fs.ip7[2].contains(w));
    au.at_most_eq(w, rule("I'", kFrom), from_other(w), 7, fs.ip8[3].contains(w));
    if (fs.ip7[2].contains(w)) au.at_most(w, rule("I'73", kFrom), from_other(w), 5);
  }
  const VertexSet i78 = fs.i[6] | fs.i[7];
  for (VertexId w : ip135.members()) {
    au.at_most_eq(w, rule("I'135", kTo), to_anchor(w), 4, fs.ip1[1].contains(w));
    if (fs.ip[0].contains(w)) {
      au.at_most_eq(w, rule("I'1", kFrom), from_other(w), 7, fs.ip1[3].contains(w));
    } else if (fs.ip[2].contains(w)) {
      bool cond = !touches(g, w, cs.i - i78);
      au.at_most_eq(w, rule("I'3", kFrom), from_other(w), 7, cond);
    } else {
      bool cond = !touches(g, w, fs.a[9]) && fs.dist_to_opposite_i[static_cast<std::size_t>(w)] == 4;
      au.at_most_eq(w, rule("I'5", kFrom), from_other(w), 7, cond);
    }
  }

  const bool k1_empty = fs.kp[0].empty();
  static constexpr int kIBound[8] = {3, 4, 5, 4, 5, 5, 6, 6};
  for (int i = 0; i < 8; ++i)
    for (VertexId w : fs.i[static_cast<std::size_t>(i)].members()) {
      int bound = kIBound[i];
      if (i == 7 && !k1_empty) bound = 7;
      if (fs.i8[0].contains(w)) bound = 5;
      au.at_most(w, rule("I" + std::to_string(i + 1), kFrom), from_other(w), bound);
    }

  const bool ip3_empty = fs.ip[2].empty();
  static constexpr int kABound[10] = {4, 5, 6, 5, 6, 6, 7, 7, 5, 7};
  for (int i = 0; i < 10; ++i)
    for (VertexId w : fs.a[static_cast<std::size_t>(i)].members()) {
      int bound = kABound[i];
      if (i == 7 && !k1_empty) bound = 8;
      if (i == 9 && !ip3_empty) bound = 8;
      if (fs.a10[0].contains(w)) bound = 5;
      au.at_most(w, rule("A" + std::to_string(i + 1), kFrom), from_other(w), bound);
    }
}

void pair_claims(Auditor& au, const VertexSet& core, const VertexSet& from_ok, const VertexSet& to_ok, int bound,
                 const std::string& label) {
  const int n = au.n();
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      bool applies = (core.contains(x) && core.contains(y)) || from_ok.contains(x) || to_ok.contains(y);
      if (applies && au.at(x, y) > bound) au.fail(x, label + " to " + std::to_string(y), au.at(x, y), bound);
    }
}

}  // namespace

AuditReport audit_class_bounds(const Digraph& d, const FinePartition& fine, const ClassBoundTable& table) {
  Auditor au(d, fine);
  const VertexId u = fine.u();
  const VertexId v = fine.v();
  for (VertexId w = 0; w < fine.vertex_count(); ++w) {
    auto it = table.find(class_family(fine.leaf[static_cast<std::size_t>(w)]));
    if (it == table.end()) continue;
    au.at_most(w, it->first + " d(w,u)", au.at(w, u), it->second.first);
    au.at_most(w, it->first + " d(v,w)", au.at(v, w), it->second.second);
  }
  return au.take();
}

AuditReport verify_construction_claims(const Multigraph& g, const Digraph& d, const FinePartition& fine) {
  Auditor au(d, fine);
  const int n = fine.vertex_count();
  const VertexId u = fine.u();
  const VertexId v = fine.v();
  const CoarsePartition& c = fine.coarse;
  const VertexSet uv(n, {u, v});

  au.at_most(u, "d(u,v)", au.at(u, v), 1);

  if (fine.mode == PartitionMode::kGirth9) {
    VertexSet from_ok = uv | c.side[0].a | c.side[0].i | c.side[0].k | c.m;
    VertexSet to_ok = uv | c.side[1].a | c.side[1].i | c.side[1].k | c.m;
    pair_claims(au, VertexSet(n), from_ok, to_ok, 12, "anchored pair");
    AuditReport r = au.take();
    if (r.worst > 12) r.violations.push_back({-1, "", "diameter", r.worst, 12});
    return r;
  }

  for (VertexId w : c.s33.members()) {
    au.at_most(w, "S33 d(v,w)", au.at(v, w), 3);
    au.at_most(w, "S33 d(w,u)", au.at(w, u), 3);
  }
  for (VertexId w : c.m.members()) {
    au.at_most(w, "M d(w,u)", au.at(w, u), 4);
    au.at_most(w, "M d(v,w)", au.at(v, w), 4);
  }
  for (VertexId w : c.m_prime.members()) {
    au.at_most_eq(w, "M' d(w,u)", au.at(w, u), 5, fine.m_prime[1].contains(w) || fine.m_prime[2].contains(w));
    au.at_most_eq(w, "M' d(v,w)", au.at(v, w), 5, fine.m_prime[0].contains(w) || fine.m_prime[2].contains(w));
  }
  side_claims(au, g, 0);
  side_claims(au, g, 1);

  VertexSet core = c.side[0].k | c.side[1].k | c.s33 | c.m | c.m_prime;
  pair_claims(au, core, uv, uv, 13, "core pair");
  AuditReport r = au.take();
  if (r.worst > 13) r.violations.push_back({-1, "", "diameter", r.worst, 13});
  return r;
}

std::string audit_report_to_text(const AuditReport& report) {
  std::ostringstream out;
  out << "worst " << report.worst << " from " << report.worst_from << " to " << report.worst_to << '\n';
  out << "violations " << report.violations.size() << '\n';
  for (const AuditViolation& v : report.violations)
    out << v.vertex << ' ' << (v.cls.empty() ? "-" : v.cls) << " [" << v.rule << "] " << v.measured << " > "
        << v.bound << '\n';
  return out.str();
}

}  // namespace odiam
