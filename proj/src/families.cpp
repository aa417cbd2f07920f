#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

#include "odiam/error.hpp"
#include "odiam/families.hpp"

namespace odiam {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidSpec, what);
}

// Appends a path of `length` edges from x to y through fresh vertices.
void add_path(int& n, EdgeList& edges, VertexId x, VertexId y, int length) {
  VertexId prev = x;
  for (int k = 1; k < length; ++k) {
    VertexId fresh = n++;
    edges.emplace_back(prev, fresh);
    prev = fresh;
  }
  edges.emplace_back(prev, y);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Multigraph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Multigraph doubled_path(int n) {
  require(n >= 2, "doubled_path needs n >= 2");
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(i, i + 1);
  }
  return build_graph(n, edges);
}

Multigraph doubled_cycle(int n) {
  require(n >= 3, "doubled_cycle needs n >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, (i + 1) % n);
  }
  return build_graph(n, edges);
}

Multigraph theta_graph(int a, int b, int c) {
  require(a >= 1 && b >= 1 && c >= 1, "theta path lengths must be positive");
  int n = 2;
  EdgeList edges;
  for (int len : {a, b, c}) add_path(n, edges, 0, 1, len);
  return build_graph(n, edges);
}

Multigraph subdivided_k4(const std::array<int, 6>& counts) {
  static constexpr std::array<std::pair<int, int>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  int n = 4;
  EdgeList edges;
  for (std::size_t i = 0; i < 6; ++i) {
    require(counts[i] >= 0, "subdivision counts must be non-negative");
    add_path(n, edges, kEdges[i].first, kEdges[i].second, counts[i] + 1);
  }
  return build_graph(n, edges);
}

Multigraph complete_graph(int n) {
  require(n >= 1, "complete needs n >= 1");
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Multigraph wheel_graph(int n) {
  require(n >= 3, "wheel needs a rim of at least 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(n, i);
    edges.emplace_back(i, (i + 1) % n);
  }
  return build_graph(n + 1, edges);
}

namespace {

Multigraph shuffled(int n, const EdgeList& edges, std::mt19937_64& rng) {
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  EdgeList out;
  out.reserve(edges.size());
  for (auto [x, y] : edges) out.emplace_back(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
  for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[draw(rng, i)]);
  return build_graph(n, out);
}

}  // namespace

std::optional<Multigraph> gen_random_with_targets(int n, std::uint64_t seed, int target_d,
                                                  const std::vector<int>& target_gstar) {
  if (target_gstar.empty() || n < 2) return std::nullopt;
  const int max_target = *std::max_element(target_gstar.begin(), target_gstar.end());
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 400;
  constexpr int kEarTries = 60;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    int k = target_gstar[draw(rng, target_gstar.size())];
    if (k > n) continue;
    int count = 0;
    EdgeList edges;
    if (k == 2) {
      count = 2;
      edges = {{0, 1}, {0, 1}};
    } else {
      count = k;
      for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    }

    for (int tries = 0; tries < kEarTries && count < n; ++tries) {
      int trial_count = count;
      EdgeList trial = edges;
      auto pick = [&] { return static_cast<VertexId>(draw(rng, static_cast<std::uint64_t>(count))); };
      switch (draw(rng, 6)) {
        case 0: {  // chord
          VertexId x = pick(), y = pick();
          if (x == y) continue;
          trial.emplace_back(x, y);
          break;
        }
        case 1: {  // parallel copy of an existing edge
          trial.push_back(edges[draw(rng, edges.size())]);
          break;
        }
        case 2:
        case 3:
        case 4: {  // open ear of length 2..4, biased to start at the witness edge
          VertexId x = draw(rng, 2) == 0 ? static_cast<VertexId>(draw(rng, 2)) : pick();
          VertexId y = pick();
          if (x == y) continue;
          add_path(trial_count, trial, x, y, 2 + static_cast<int>(draw(rng, 3)));
          break;
        }
        default: {  // pendant digon
          VertexId x = pick();
          VertexId fresh = trial_count++;
          trial.emplace_back(x, fresh);
          trial.emplace_back(x, fresh);
          break;
        }
      }
      if (trial_count > n) continue;
      Multigraph g = build_graph(trial_count, trial);
      if (diameter(g) > target_d) continue;
      if (max_edge_girth(g) > max_target) continue;
      edges = std::move(trial);
      count = trial_count;
    }

    Multigraph g = build_graph(count, edges);
    if (diameter(g) != target_d) continue;
    int gs = max_edge_girth(g);
    if (std::find(target_gstar.begin(), target_gstar.end(), gs) == target_gstar.end()) continue;
    return shuffled(count, edges, rng);
  }
  return std::nullopt;
}

Multigraph gen_random_triangle_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int count = 3;
  EdgeList edges{{0, 1}, {1, 2}, {2, 0}};
  while (count < n) {
    switch (draw(rng, 4)) {
      case 0: {  // new vertex over an existing edge
        auto [x, y] = edges[draw(rng, edges.size())];
        edges.emplace_back(x, count);
        edges.emplace_back(y, count);
        ++count;
        break;
      }
      case 1: {  // triangle hanging at a vertex
        VertexId x = static_cast<VertexId>(draw(rng, static_cast<std::uint64_t>(count)));
        edges.emplace_back(x, count);
        edges.emplace_back(count, count + 1);
        edges.emplace_back(count + 1, x);
        count += 2;
        break;
      }
      case 2:  // twin
        edges.push_back(edges[draw(rng, edges.size())]);
        break;
      default: {  // chord closing a path x-z-y
        auto [x, z] = edges[draw(rng, edges.size())];
        Multigraph g = build_graph(count, edges);
        const auto& nz = g.neighbors(z);
        VertexId y = nz[draw(rng, nz.size())];
        if (y != x) edges.emplace_back(x, y);
        break;
      }
    }
  }
  return shuffled(count, edges, rng);
}

FamilySpec parse_family_spec(std::string_view text, std::uint64_t seed) {
  FamilySpec spec;
  spec.seed = seed;
  auto colon = text.find(':');
  spec.tag = std::string(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      require(ec == std::errc() && ptr == item.data() + item.size(), "bad parameter '" + std::string(item) + "'");
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  static const std::vector<std::string> kTags{"cycle", "doubled_path", "doubled_cycle", "theta",
                                              "subdivided_k4", "complete", "wheel", "random"};
  require(std::find(kTags.begin(), kTags.end(), spec.tag) != kTags.end(), "unknown family '" + spec.tag + "'");
  return spec;
}

std::string family_spec_to_string(const FamilySpec& spec) {
  std::ostringstream out;
  out << spec.tag;
  for (std::size_t i = 0; i < spec.params.size(); ++i) out << (i == 0 ? ':' : ',') << spec.params[i];
  return out.str();
}

Multigraph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) { require(p.size() == k, spec.tag + " expects " + std::to_string(k) + " parameters"); };
  if (spec.tag == "cycle") return arity(1), cycle_graph(p[0]);
  if (spec.tag == "doubled_path") return arity(1), doubled_path(p[0]);
  if (spec.tag == "doubled_cycle") return arity(1), doubled_cycle(p[0]);
  if (spec.tag == "theta") return arity(3), theta_graph(p[0], p[1], p[2]);
  if (spec.tag == "complete") return arity(1), complete_graph(p[0]);
  if (spec.tag == "wheel") return arity(1), wheel_graph(p[0]);
  if (spec.tag == "subdivided_k4") {
    arity(6);
    return subdivided_k4({p[0], p[1], p[2], p[3], p[4], p[5]});
  }
  if (spec.tag == "random") {
    require(p.size() >= 2, "random expects n and at least one g* target");
    auto g = gen_random_with_targets(p[0], spec.seed, 4, std::vector<int>(p.begin() + 1, p.end()));
    require(g.has_value(), "no instance found for " + family_spec_to_string(spec) + " seed " + std::to_string(spec.seed));
    return *std::move(g);
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown family '" + spec.tag + "'");
}

namespace {

// Edge index of {a, b} in the order 01, 02, 03, 12, 13, 23.
int k4_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int kIndex[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return kIndex[a][b];
}

bool canonical_k4(const std::array<int, 6>& c) {
  static constexpr std::array<std::pair<int, int>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    std::array<int, 6> image{};
    for (std::size_t i = 0; i < 6; ++i)
      image[static_cast<std::size_t>(k4_edge(perm[static_cast<std::size_t>(kEdges[i].first)],
                                             perm[static_cast<std::size_t>(kEdges[i].second)]))] = c[i];
    if (image < c) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace

HSearchResult search_h_witness(const SearchBudget& budget, bool all) {
  HSearchResult result;
  std::array<int, 6> c{};
  for (int code = 0; code < 4096; ++code) {
    for (int i = 0, x = code; i < 6; ++i, x /= 4) c[static_cast<std::size_t>(5 - i)] = x % 4;
    if (!canonical_k4(c)) continue;
    ++result.candidates;
    Multigraph g = subdivided_k4(c);
    if (diameter(g) != 4 || max_edge_girth(g) != 9) continue;
    ++result.filtered;
    bool certified = false;
    try {
      certified = certify_lower_bound(g, 12, budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      ++result.budget_failures;
    }
    if (!certified) continue;
    result.witnesses.push_back({c, g, true});
    if (!all) break;
  }
  return result;
}

}  // namespace odiam
