#include "skel/diff_system.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

namespace skel {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct Arc {
  NodeId to;          // head u of constraint (u,v,b)
  long long weight;   // bound
};

}  // namespace

void validate(const DiffSystem& system) {
  if (system.node_count <= 0) throw std::invalid_argument("empty difference system");
  if (system.root < 0 || system.root >= system.node_count)
    throw std::invalid_argument("root out of range");
  for (const auto& c : system.constraints) {
    if (c.u < 0 || c.u >= system.node_count || c.v < 0 || c.v >= system.node_count)
      throw std::invalid_argument("constraint node out of range");
    if (c.u == c.v) throw std::invalid_argument("constraint relates a node to itself");
  }
}

std::variant<Valuation, NegativeCycle> solve_max(const DiffSystem& system) {
  validate(system);
  const int n = system.node_count;

  std::vector<std::vector<Arc>> adj(n);
  for (const auto& c : system.constraints) adj[c.v].push_back({c.u, c.bound});

  std::vector<long long> dist(n, kInf);
  std::vector<NodeId> pred(n, -1);
  std::vector<int> relax_count(n, 0);
  std::vector<char> in_queue(n, 0);
  std::deque<NodeId> queue;

  dist[system.root] = 0;
  queue.push_back(system.root);
  in_queue[system.root] = 1;

  auto extract_cycle = [&](NodeId start) {
    // After >n relaxations of one node the predecessor graph contains a
    // cycle; walk back n steps to land on it, then collect it.
    NodeId x = start;
    for (int i = 0; i < n; ++i) x = pred[x];
    std::vector<NodeId> walk;
    std::vector<char> seen(n, 0);
    NodeId y = x;
    while (!seen[y]) {
      seen[y] = 1;
      walk.push_back(y);
      y = pred[y];
    }
    // walk runs backwards along arcs from y; cut at the cycle entry point.
    std::vector<NodeId> cycle;
    auto it = std::find(walk.begin(), walk.end(), y);
    cycle.assign(it, walk.end());
    std::reverse(cycle.begin(), cycle.end());  // arc order v -> u
    NegativeCycle out;
    out.nodes = cycle;
    out.weight = cycle_weight(system, cycle);
    return out;
  };

  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    in_queue[v] = 0;
    for (const Arc& a : adj[v]) {
      if (dist[v] + a.weight < dist[a.to]) {
        dist[a.to] = dist[v] + a.weight;
        pred[a.to] = v;
        if (++relax_count[a.to] > n) return extract_cycle(a.to);
        if (!in_queue[a.to]) {
          queue.push_back(a.to);
          in_queue[a.to] = 1;
        }
      }
    }
  }

  for (int i = 0; i < n; ++i)
    if (dist[i] >= kInf)
      throw std::logic_error("solve_max: node " + std::to_string(i) +
                             " unreachable from root");
  return Valuation{std::move(dist)};
}

std::vector<ConstraintViolation> check_valuation(const DiffSystem& system,
                                                 const Valuation& valuation) {
  if (static_cast<int>(valuation.values.size()) != system.node_count)
    throw std::invalid_argument("valuation size mismatch");
  std::vector<ConstraintViolation> out;
  if (valuation.values[system.root] != 0)
    out.push_back({system.root, system.root, 0, valuation.values[system.root]});
  for (const auto& c : system.constraints) {
    long long actual = valuation.values[c.u] - valuation.values[c.v];
    if (actual > c.bound) out.push_back({c.u, c.v, c.bound, actual});
  }
  return out;
}

std::string dump(const DiffSystem& system) {
  std::ostringstream os;
  os << "nodes " << system.node_count << " root " << system.root << "\n";
  for (const auto& c : system.constraints)
    os << "le " << c.u << " " << c.v << " " << c.bound << "\n";
  return os.str();
}

long long cycle_weight(const DiffSystem& system, const std::vector<NodeId>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  // tightest bound per arc (v -> u)
  std::map<std::pair<NodeId, NodeId>, long long> best;
  for (const auto& c : system.constraints) {
    auto key = std::make_pair(c.v, c.u);
    auto it = best.find(key);
    if (it == best.end() || c.bound < it->second) best[key] = c.bound;
  }
  long long total = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    NodeId from = cycle[i];
    NodeId to = cycle[(i + 1) % cycle.size()];
    auto it = best.find({from, to});
    if (it == best.end())
      throw std::invalid_argument("cycle pair is not an arc of the system");
    total += it->second;
  }
  return total;
}

}  // namespace skel
