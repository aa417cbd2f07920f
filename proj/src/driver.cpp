#include <sstream>

#include "odiam/driver.hpp"
#include "odiam/error.hpp"

namespace odiam {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kG2: return "g2";
    case Regime::kG3: return "g3";
    case Regime::kG9: return "g9";
    case Regime::kG678: return "g678";
    case Regime::kUnsupported: return "unsupported";
  }
  return "unsupported";
}

RegimeInfo classify_regime(const Multigraph& g) {
  RegimeInfo info;
  info.diameter = diameter(g);
  info.gstar = max_edge_girth(g);
  const int d = info.diameter;
  const int gs = info.gstar;
  if (gs == 2) {
    info.regime = Regime::kG2;
    info.bound = d;
  } else if (gs == 3) {
    info.regime = Regime::kG3;
    info.bound = 3 * d;
  } else if (d == 4 && gs == 9) {
    info.regime = Regime::kG9;
    info.bound = 12;
  } else if (d == 4 && gs >= 6 && gs <= 8) {
    info.regime = Regime::kG678;
    info.bound = 13;
  } else if (d == 4) {
    info.reason = "d=4 with g*=" + std::to_string(gs) + " is an open regime with no construction";
  } else {
    info.reason = "no construction for d=" + std::to_string(d) + " and g*=" + std::to_string(gs);
  }
  return info;
}

DispatchResult orient_dispatch(const Multigraph& g, const PipelineOptions& options, std::optional<Regime> forced) {
  DispatchResult out;
  out.info = classify_regime(g);
  Regime r = forced.value_or(out.info.regime);
  switch (r) {
    case Regime::kG2:
      out.result = orient_g2(g);
      break;
    case Regime::kG3:
      out.result = orient_g3(g);
      break;
    case Regime::kG9:
      out.partition = partition_graph(g, PartitionMode::kGirth9);
      out.result = orient_g9(g, *out.partition, options);
      break;
    case Regime::kG678:
      out.partition = partition_graph(g, PartitionMode::kGirth678);
      out.result = orient_g678(g, *out.partition, options);
      break;
    case Regime::kUnsupported:
      throw Error(ErrorCode::kUnsupported, out.info.reason);
  }
  return out;
}

VerifyOutcome verify_orientation(const Multigraph& g, const Digraph& d) {
  VerifyOutcome v;
  v.info = classify_regime(g);
  v.strong = is_strong(d);
  if (!v.strong) return v;
  v.diameter = directed_diameter(d);
  v.within_bound = v.info.bound < 0 || v.diameter <= v.info.bound;
  if (v.info.regime == Regime::kG9 || v.info.regime == Regime::kG678) {
    const bool nine = v.info.regime == Regime::kG9;
    FinePartition fine = partition_graph(g, nine ? PartitionMode::kGirth9 : PartitionMode::kGirth678);
    v.table = audit_class_bounds(d, fine, nine ? girth9_class_bounds() : girth678_class_bounds());
    v.claims = verify_construction_claims(g, d, fine);
  }
  return v;
}

std::string verify_outcome_to_text(const VerifyOutcome& v) {
  std::ostringstream out;
  out << "regime " << regime_name(v.info.regime) << " d=" << v.info.diameter << " g*=" << v.info.gstar << '\n';
  if (!v.strong) {
    out << "NOT STRONG\n";
    return out.str();
  }
  out << "directed diameter " << v.diameter;
  if (v.info.bound >= 0) out << (v.within_bound ? " <= " : " > ") << "bound " << v.info.bound;
  out << '\n';
  if (v.table) out << "class bounds: " << (v.table->ok() ? "ok" : "VIOLATED") << '\n' << audit_report_to_text(*v.table);
  if (v.claims) out << "claims: " << (v.claims->ok() ? "ok" : "VIOLATED") << '\n' << audit_report_to_text(*v.claims);
  out << (v.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace odiam
