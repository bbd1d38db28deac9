#include "skel/min_cost_flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace skel {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct Residual {
  // paired arcs: 2i forward, 2i+1 reverse
  std::vector<NodeId> from, to;
  std::vector<long long> cap, cost;
  std::vector<std::vector<int>> out;  // arc indices by tail

  void add(NodeId u, NodeId v, long long c, long long capacity) {
    int idx = static_cast<int>(from.size());
    from.push_back(u); to.push_back(v); cap.push_back(capacity); cost.push_back(c);
    from.push_back(v); to.push_back(u); cap.push_back(0); cost.push_back(-c);
    out[u].push_back(idx);
    out[v].push_back(idx + 1);
  }
};

void validate(const FlowNetwork& net) {
  if (net.node_count <= 0) throw std::invalid_argument("empty flow network");
  if (static_cast<int>(net.excess.size()) != net.node_count)
    throw std::invalid_argument("excess size mismatch");
  long long total = std::accumulate(net.excess.begin(), net.excess.end(), 0LL);
  if (total != 0) throw std::invalid_argument("excesses do not sum to zero");
  for (const auto& a : net.arcs) {
    if (a.from < 0 || a.from >= net.node_count || a.to < 0 || a.to >= net.node_count)
      throw std::invalid_argument("arc node out of range");
    if (a.capacity && *a.capacity <= 0)
      throw std::invalid_argument("arc capacity must be positive");
  }
}

// Bellman-Ford from a virtual source (all distances start at 0) over the
// arcs with positive residual capacity.  Returns false and fills `cycle`
// (arc from -> to order) when a negative cycle exists.
bool potentials_or_cycle(const Residual& r, int n, std::vector<long long>& dist,
                         std::vector<NodeId>& cycle) {
  dist.assign(n, 0);
  std::vector<int> pred_arc(n, -1);
  NodeId touched = -1;
  for (int round = 0; round <= n; ++round) {
    touched = -1;
    for (int a = 0; a < static_cast<int>(r.from.size()); ++a) {
      if (r.cap[a] <= 0) continue;
      if (dist[r.from[a]] + r.cost[a] < dist[r.to[a]]) {
        dist[r.to[a]] = dist[r.from[a]] + r.cost[a];
        pred_arc[r.to[a]] = a;
        touched = r.to[a];
      }
    }
    if (touched < 0) return true;
  }
  // walk back n steps to land on the cycle, then collect it
  NodeId x = touched;
  for (int i = 0; i < n; ++i) x = r.from[pred_arc[x]];
  std::vector<NodeId> walk;
  std::vector<char> seen(n, 0);
  NodeId y = x;
  while (!seen[y]) {
    seen[y] = 1;
    walk.push_back(y);
    y = r.from[pred_arc[y]];
  }
  auto it = std::find(walk.begin(), walk.end(), y);
  cycle.assign(it, walk.end());
  std::reverse(cycle.begin(), cycle.end());  // from -> to order
  return false;
}

}  // namespace

FlowResult solve_min_cost_flow(const FlowNetwork& net) {
  validate(net);
  const int n = net.node_count;

  long long supply = 0;
  for (long long e : net.excess) supply += std::max(e, 0LL);

  Residual r;
  r.out.resize(n);
  for (const auto& a : net.arcs) {
    long long cap = a.capacity ? *a.capacity : std::max(supply, 1LL);
    r.add(a.from, a.to, a.cost, cap);
  }

  std::vector<long long> pi;
  std::vector<NodeId> cyc;
  if (!potentials_or_cycle(r, n, pi, cyc)) {
    // only uncapacitated negative cycles make the problem unbounded
    for (size_t i = 0; i < cyc.size(); ++i) {
      NodeId u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      bool uncap = false;
      for (const auto& a : net.arcs)
        if (a.from == u && a.to == v && !a.capacity) { uncap = true; break; }
      if (!uncap)
        throw std::logic_error("negative cycle through capacitated arcs is unsupported");
    }
    FlowResult res;
    res.outcome = FlowOutcome::unbounded;
    res.cycle.nodes = cyc;
    res.cycle.weight = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      NodeId u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      long long best = kInf;
      for (const auto& a : net.arcs)
        if (a.from == u && a.to == v) best = std::min(best, a.cost);
      res.cycle.weight += best;
    }
    return res;
  }

  std::vector<long long> ex = net.excess;
  std::vector<long long> dist(n);
  std::vector<int> pred_arc(n);

  while (true) {
    NodeId source = -1;
    for (int i = 0; i < n; ++i)
      if (ex[i] > 0) { source = i; break; }
    if (source < 0) break;

    // Dijkstra over reduced costs; ties broken towards lower node id.
    dist.assign(n, kInf);
    pred_arc.assign(n, -1);
    dist[source] = 0;
    using Entry = std::pair<long long, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({0, source});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (done[v]) continue;
      done[v] = 1;
      for (int a : r.out[v]) {
        if (r.cap[a] <= 0) continue;
        long long nd = d + r.cost[a] + pi[v] - pi[r.to[a]];
        if (nd < dist[r.to[a]]) {
          dist[r.to[a]] = nd;
          pred_arc[r.to[a]] = a;
          pq.push({nd, r.to[a]});
        }
      }
    }

    NodeId sink = -1;
    for (int i = 0; i < n; ++i)
      if (ex[i] < 0 && dist[i] < kInf &&
          (sink < 0 || dist[i] < dist[sink]))
        sink = i;
    if (sink < 0) return FlowResult{FlowOutcome::infeasible, {}, {}};

    long long delta = std::min(ex[source], -ex[sink]);
    for (NodeId v = sink; v != source; v = r.from[pred_arc[v]])
      delta = std::min(delta, r.cap[pred_arc[v]]);
    for (NodeId v = sink; v != source; v = r.from[pred_arc[v]]) {
      r.cap[pred_arc[v]] -= delta;
      r.cap[pred_arc[v] ^ 1] += delta;
    }
    ex[source] -= delta;
    ex[sink] += delta;

    for (int i = 0; i < n; ++i) pi[i] += std::min(dist[i], dist[sink]);
  }

  FlowResult res;
  res.outcome = FlowOutcome::optimal;
  res.flow.arc_flow.resize(net.arcs.size());
  res.flow.total_cost = 0;
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    res.flow.arc_flow[i] = r.cap[2 * i + 1];  // what flowed forward
    res.flow.total_cost += res.flow.arc_flow[i] * net.arcs[i].cost;
  }
  res.flow.potentials = pi;
  return res;
}

std::string dump(const FlowNetwork& net) {
  std::ostringstream os;
  os << "nodes " << net.node_count << "\n";
  for (int i = 0; i < net.node_count; ++i)
    if (net.excess[i] != 0) os << "excess " << i << " " << net.excess[i] << "\n";
  for (const auto& a : net.arcs) {
    os << "arc " << a.from << " " << a.to << " " << a.cost << " ";
    if (a.capacity) os << *a.capacity; else os << "inf";
    os << "\n";
  }
  return os.str();
}

DiffLpResult solve_difference_lp(const DiffSystem& system, const LinearObjective& obj) {
  validate(system);
  if (static_cast<int>(obj.coeffs.size()) != system.node_count)
    throw std::invalid_argument("objective size mismatch");
  if (obj.coeffs[system.root] != 0)
    throw std::invalid_argument("root objective coefficient must be zero");

  FlowNetwork net;
  net.node_count = system.node_count;
  net.excess.assign(system.node_count, 0);
  long long others = 0;
  for (int w = 0; w < system.node_count; ++w) {
    if (w == system.root) continue;
    net.excess[w] = -obj.coeffs[w];
    others += obj.coeffs[w];
  }
  net.excess[system.root] = others;
  net.arcs.reserve(system.constraints.size());
  for (const auto& c : system.constraints)
    net.arcs.push_back({c.u, c.v, c.bound, std::nullopt});

  FlowResult fr = solve_min_cost_flow(net);
  DiffLpResult out;
  if (fr.outcome == FlowOutcome::unbounded) {
    out.outcome = LpOutcome::infeasible;
    out.cycle.nodes.assign(fr.cycle.nodes.rbegin(), fr.cycle.nodes.rend());
    out.cycle.weight = cycle_weight(system, out.cycle.nodes);
    return out;
  }
  if (fr.outcome == FlowOutcome::infeasible) {
    out.outcome = LpOutcome::unbounded;
    return out;
  }

  // Primal recovery: shortest paths in the residual graph from a virtual
  // source, then shift so the root sits at 0.
  const int n = system.node_count;
  Residual r;
  r.out.resize(n);
  for (size_t i = 0; i < system.constraints.size(); ++i) {
    const auto& c = system.constraints[i];
    r.add(c.v, c.u, c.bound, 1);
    if (fr.flow.arc_flow[i] > 0) r.add(c.u, c.v, -c.bound, 1);
  }
  std::vector<long long> dist;
  std::vector<NodeId> cyc;
  if (!potentials_or_cycle(r, n, dist, cyc))
    throw std::logic_error("negative cycle in residual graph at optimality");

  out.outcome = LpOutcome::optimal;
  out.valuation.values.resize(n);
  long long shift = dist[system.root];
  for (int i = 0; i < n; ++i) out.valuation.values[i] = dist[i] - shift;
  out.objective = 0;
  for (int i = 0; i < n; ++i) out.objective += obj.coeffs[i] * out.valuation.values[i];
  if (out.objective != -fr.flow.total_cost)
    throw std::logic_error("difference LP: primal/dual objective mismatch");
  return out;
}

}  // namespace skel
