#ifndef SMOPT_FLOW_HPP
#define SMOPT_FLOW_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace smopt {

/// Nonnegative integer capacity that may be +infinity. Infinite values take
/// part in comparisons and saturate sums; they are never subtracted from.
struct Cap {
    bool inf = false;
    long long val = 0;

    static Cap infinite() { return Cap{true, 0}; }
    static Cap finite(long long v) { return Cap{false, v}; }

    bool is_inf() const { return inf; }
    long long finite_value() const;

    Cap operator+(const Cap& o) const {
        if (inf || o.inf) return infinite();
        return finite(val + o.val);
    }
    bool operator<(const Cap& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return val < o.val;
    }
    bool operator==(const Cap& o) const { return inf == o.inf && (inf || val == o.val); }
    std::string str() const;
};

struct Arc {
    int tail = 0;
    int head = 0;
    Cap capacity;
    long long cost = 0; // {0,1} for the unit-cost solver; >= 0 for Dijkstra
};

struct FlowNetwork {
    int node_count = 0;
    std::vector<Arc> arcs;
    int source = 0;
    int sink = 0;

    int add_arc(int tail, int head, Cap capacity, long long cost = 0);
};

/// Per-arc nonnegative integer flow values, conserved except at the ends.
struct Flow {
    std::vector<long long> value; // indexed by arc id

    long long amount(const FlowNetwork& net) const;
};

/// Per-node nonnegative integer potential with pi(source) = 0.
struct Potential {
    std::vector<long long> value;

    long long drop(const FlowNetwork& net, int arc) const {
        return value[net.arcs[arc].head] - value[net.arcs[arc].tail];
    }
};

struct DijkstraResult {
    std::vector<std::optional<long long>> dist; // nullopt = unreachable
    std::vector<int> parent_arc;                // -1 at roots/unreachable
};

// Single-source shortest paths; all arc costs must be >= 0. Deterministic
// tie-breaking by node index.
DijkstraResult shortest_path_dijkstra(const FlowNetwork& net);

struct MaxFlowResult {
    Flow flow;
    Cap amount;               // infinite iff no finite cut separates s from t
    std::set<int> min_shore;  // smallest minimizer out-shore (empty if unbounded)
};

// Dinic with exact infinite capacities. min_shore is the set of nodes
// reachable from the source in the final residual digraph.
MaxFlowResult max_flow_min_cut(const FlowNetwork& net);

struct UnitCostFlowResult {
    Flow flow;
    Potential potential; // potential.value[sink] == target
    long long amount = 0;
};

// Alternating potential/flow augmentation phases for {0,1} arc costs,
// starting from z = 0, pi = 0 and stopping when pi(sink) reaches target.
// The result satisfies
//   (F1) cost(a) > drop(a) => z(a) = 0
//   (F2) cost(a) < drop(a) => z(a) = capacity(a)
// and the flow is a cheapest one of its amount. Throws ErrorKind::infeasible
// when pi(sink) cannot reach the target.
UnitCostFlowResult min_cost_flow_unit_costs(const FlowNetwork& net, long long target);

struct BMatchingResult {
    std::vector<long long> z;   // per input edge
    std::vector<int> cover;     // node ids of a cover L0 with b(L0) = total
    long long total = 0;
};

struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::pair<int, int>> edges; // (left, right)
};

// Maximum b-matching via one max-flow; the z-positive edges form a forest
// (cycles are cancelled in a post-pass). cover holds left ids as-is and
// right ids offset by left_count.
BMatchingResult b_matching_max(const BipartiteGraph& g, const std::vector<long long>& b_left,
                               const std::vector<long long>& b_right);

struct PathFlow {
    std::vector<int> arcs; // arc ids along an s-t path
    long long multiplicity = 0;
};

// Greedy peeling of a conserved nonnegative flow into at most
// #positive-arcs s-t path flows (interior cycles are cancelled away).
std::vector<PathFlow> decompose_into_path_flows(const FlowNetwork& net, const Flow& z);

} // namespace smopt

#endif
