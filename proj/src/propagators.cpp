// Copyright 2026 The gaclab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaclab/propagators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>

namespace gaclab {

namespace {

std::vector<VarId> distinct_scope(const ConstraintSpec& spec,
                                  bool* repeats = nullptr) {
  std::vector<VarId> vars;
  std::set<VarId> seen;
  bool rep = false;
  for (const auto& id : spec.scope) {
    if (seen.insert(id).second) vars.push_back(id);
    else rep = true;
  }
  if (repeats) *repeats = rep;
  return vars;
}

PropagationOutcome start_outcome(const Instance& inst) {
  PropagationOutcome out;
  out.domains = inst.domain_map();
  return out;
}

void finish_removed(const Instance& inst, const std::vector<VarId>& scope_vars,
                    PropagationOutcome& out) {
  for (const auto& id : scope_vars) {
    const Domain& before = inst.domain(id);
    const Domain& after = out.domains.at(id);
    for (Value v : before) {
      if (!std::binary_search(after.begin(), after.end(), v)) {
        out.removed.emplace_back(id, v);
      }
    }
  }
  std::sort(out.removed.begin(), out.removed.end());
}

void wipe(const Instance& inst, const std::vector<VarId>& scope_vars,
          PropagationOutcome& out) {
  for (const auto& id : scope_vars) out.domains[id] = {};
  out.wipeout = true;
  finish_removed(inst, scope_vars, out);
}

bool any_empty(const Instance& inst, const std::vector<VarId>& scope_vars) {
  for (const auto& id : scope_vars) {
    if (inst.domain(id).empty()) return true;
  }
  return false;
}

// Tarjan strongly connected components over an adjacency-list digraph.
std::vector<int> scc_of(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n), num(n, -1), stack_;
  std::vector<std::pair<int, size_t>> call;
  int counter = 0, comps = 0;
  std::vector<char> on_stack(n, 0);
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [u, ei] = call.back();
      if (ei == 0) {
        num[u] = low[u] = counter++;
        stack_.push_back(u);
        on_stack[u] = 1;
      }
      if (ei < adj[u].size()) {
        int w = adj[u][ei++];
        if (num[w] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], num[w]);
        }
      } else {
        if (low[u] == num[u]) {
          while (true) {
            int w = stack_.back();
            stack_.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == u) break;
          }
          ++comps;
        }
        int fin = u;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().first] = std::min(low[call.back().first], low[fin]);
        }
      }
    }
  }
  return comp;
}

}  // namespace

// ---------------------------------------------------------------------------
// allDifferent
// ---------------------------------------------------------------------------

PropagationOutcome alldifferent_gac(const Instance& inst) {
  validate_instance(inst);
  if (inst.constraint.kind != Kind::AllDifferent) {
    throw UnsupportedInstanceError("alldifferent_gac expects allDifferent");
  }
  bool repeats = false;
  std::vector<VarId> vars = distinct_scope(inst.constraint, &repeats);
  PropagationOutcome out = start_outcome(inst);
  if ((repeats && inst.constraint.scope.size() >= 2) || any_empty(inst, vars)) {
    wipe(inst, vars, out);
    return out;
  }
  const int n = static_cast<int>(vars.size());

  std::map<Value, int> value_id;
  std::vector<Value> values;
  std::vector<std::vector<int>> var_vals(n);
  for (int x = 0; x < n; ++x) {
    for (Value v : inst.domain(vars[x])) {
      auto it = value_id.find(v);
      if (it == value_id.end()) {
        it = value_id.emplace(v, static_cast<int>(values.size())).first;
        values.push_back(v);
      }
      var_vals[x].push_back(it->second);
    }
  }
  const int m = static_cast<int>(values.size());

  // Hopcroft-Karp maximum matching, vars against values.
  std::vector<int> match_var(n, -1), match_val(m, -1), dist(n);
  const int INF = 1 << 30;
  auto bfs = [&]() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int x = 0; x < n; ++x) {
      if (match_var[x] < 0) {
        dist[x] = 0;
        q.push(x);
      } else {
        dist[x] = INF;
      }
    }
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int v : var_vals[x]) {
        int y = match_val[v];
        if (y < 0) {
          reachable_free = true;
        } else if (dist[y] == INF) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    return reachable_free;
  };
  std::function<bool(int)> dfs = [&](int x) {
    for (int v : var_vals[x]) {
      int y = match_val[v];
      if (y < 0 || (dist[y] == dist[x] + 1 && dfs(y))) {
        match_var[x] = v;
        match_val[v] = x;
        return true;
      }
    }
    dist[x] = INF;
    return false;
  };
  int matched = 0;
  while (bfs()) {
    for (int x = 0; x < n; ++x) {
      if (match_var[x] < 0 && dfs(x)) ++matched;
    }
  }
  if (matched < n) {
    wipe(inst, vars, out);
    return out;
  }

  // Digraph: value -> var on unmatched edges, var -> value on matched ones.
  // An unmatched edge (x, v) survives iff v lies with x in one strongly
  // connected component or v is reachable from a value no one matched.
  const int V = n + m;
  std::vector<std::vector<int>> adj(V);
  for (int x = 0; x < n; ++x) {
    for (int v : var_vals[x]) {
      if (match_var[x] == v) adj[x].push_back(n + v);
      else adj[n + v].push_back(x);
    }
  }
  std::vector<int> comp = scc_of(adj);

  std::vector<char> reach(V, 0);
  std::queue<int> q;
  for (int v = 0; v < m; ++v) {
    if (match_val[v] < 0) {
      reach[n + v] = 1;
      q.push(n + v);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (!reach[w]) {
        reach[w] = 1;
        q.push(w);
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    Domain kept;
    for (int v : var_vals[x]) {
      if (match_var[x] == v || comp[x] == comp[n + v] || reach[n + v]) {
        kept.push_back(values[v]);
      }
    }
    std::sort(kept.begin(), kept.end());
    out.domains[vars[x]] = std::move(kept);
  }
  finish_removed(inst, vars, out);
  return out;
}

// ---------------------------------------------------------------------------
// amongConst
// ---------------------------------------------------------------------------

PropagationOutcome among_const_gac(const Instance& inst) {
  validate_instance(inst);
  if (inst.constraint.kind != Kind::AmongConst) {
    throw UnsupportedInstanceError("among_const_gac expects amongConst");
  }
  bool repeats = false;
  std::vector<VarId> vars = distinct_scope(inst.constraint, &repeats);
  if (repeats) {
    throw UnsupportedInstanceError(
        "among_const_gac requires distinct scope variables");
  }
  PropagationOutcome out = start_outcome(inst);
  if (any_empty(inst, vars)) {
    wipe(inst, vars, out);
    return out;
  }

  const VarId& nvar = inst.constraint.scope[0];
  const int n = static_cast<int>(vars.size()) - 1;
  std::set<Value> sset(inst.constraint.value_set.begin(),
                       inst.constraint.value_set.end());

  // in_lb: variables whose whole domain sits in the set. in_ub: variables
  // whose domain touches it. Any count between the two is achievable.
  int lb = 0, ub = 0;
  std::vector<char> forced(n, 0), touches(n, 0);
  for (int i = 0; i < n; ++i) {
    const Domain& d = inst.domain(vars[i + 1]);
    bool all = true, any = false;
    for (Value v : d) {
      if (sset.count(v)) any = true;
      else all = false;
    }
    forced[i] = all;
    touches[i] = any;
    lb += all;
    ub += any;
  }

  const Domain& dn = inst.domain(nvar);
  auto n_in = [&](int lo, int hi) {
    for (Value v : dn) {
      if (v >= lo && v <= hi) return true;
    }
    return false;
  };

  Domain kept_n;
  for (Value v : dn) {
    if (v >= lb && v <= ub) kept_n.push_back(v);
  }
  bool dead = kept_n.empty();

  std::map<VarId, Domain> kept_x;
  for (int i = 0; i < n && !dead; ++i) {
    const VarId& xi = vars[i + 1];
    int lb_rest = lb - forced[i];
    int ub_rest = ub - touches[i];
    Domain kept;
    for (Value v : inst.domain(xi)) {
      bool in_set = sset.count(v) > 0;
      bool ok = in_set ? n_in(lb_rest + 1, ub_rest + 1)
                       : n_in(lb_rest, ub_rest);
      if (ok) kept.push_back(v);
    }
    if (kept.empty()) dead = true;
    kept_x[xi] = std::move(kept);
  }

  if (dead) {
    wipe(inst, vars, out);
    return out;
  }
  out.domains[nvar] = std::move(kept_n);
  for (auto& [id, d] : kept_x) out.domains[id] = std::move(d);
  finish_removed(inst, vars, out);
  return out;
}

// ---------------------------------------------------------------------------
// gcc with constant occurrence bounds
// ---------------------------------------------------------------------------

namespace {

// Plain BFS max-flow on small integer-capacity networks.
class FlowNet {
 public:
  explicit FlowNet(int n) : head_(n, -1) {}

  int add_edge(int a, int b, int cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(b);
    cap_.push_back(cap);
    next_.push_back(head_[a]);
    head_[a] = id;
    to_.push_back(a);
    cap_.push_back(0);
    next_.push_back(head_[b]);
    head_[b] = id + 1;
    return id;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<int> pre(head_.size(), -1);
      std::queue<int> q;
      q.push(s);
      std::vector<char> seen(head_.size(), 0);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop();
        for (int e = head_[u]; e >= 0; e = next_[e]) {
          if (cap_[e] > 0 && !seen[to_[e]]) {
            seen[to_[e]] = 1;
            pre[to_[e]] = e;
            q.push(to_[e]);
          }
        }
      }
      if (!seen[t]) return total;
      int bottleneck = 1 << 30;
      for (int u = t; u != s; u = to_[pre[u] ^ 1]) {
        bottleneck = std::min(bottleneck, cap_[pre[u]]);
      }
      for (int u = t; u != s; u = to_[pre[u] ^ 1]) {
        cap_[pre[u]] -= bottleneck;
        cap_[pre[u] ^ 1] += bottleneck;
      }
      total += bottleneck;
    }
  }

  int residual(int edge_id) const { return cap_[edge_id]; }
  int flow_through(int edge_id) const { return cap_[edge_id ^ 1]; }

  /// Residual digraph: every arc with spare capacity.
  std::vector<std::vector<int>> residual_graph() const {
    std::vector<std::vector<int>> adj(head_.size());
    for (size_t e = 0; e < to_.size(); ++e) {
      if (cap_[e] > 0) adj[to_[e ^ 1]].push_back(to_[e]);
    }
    return adj;
  }

 private:
  std::vector<int> head_, to_, cap_, next_;
};

}  // namespace

PropagationOutcome gcc_fixed_gac(const Instance& inst) {
  validate_instance(inst);
  if (inst.constraint.kind != Kind::Gcc) {
    throw UnsupportedInstanceError("gcc_fixed_gac expects gcc");
  }
  bool repeats = false;
  std::vector<VarId> vars = distinct_scope(inst.constraint, &repeats);
  if (repeats) {
    throw UnsupportedInstanceError(
        "gcc_fixed_gac requires distinct scope variables");
  }
  PropagationOutcome out = start_outcome(inst);
  const int n = static_cast<int>(vars.size());
  if (any_empty(inst, vars)) {
    wipe(inst, vars, out);
    return out;
  }

  std::map<Value, int> value_id;
  std::vector<Value> values;
  std::vector<std::vector<int>> var_vals(n);
  for (int x = 0; x < n; ++x) {
    for (Value v : inst.domain(vars[x])) {
      auto it = value_id.find(v);
      if (it == value_id.end()) {
        it = value_id.emplace(v, static_cast<int>(values.size())).first;
        values.push_back(v);
      }
      var_vals[x].push_back(it->second);
    }
  }
  auto bounds_of = [&](Value v) {
    auto it = inst.constraint.occ.find(v);
    if (it == inst.constraint.occ.end()) return Interval{0, n};
    return it->second;
  };
  // A required value no variable can reach is already a contradiction.
  for (const auto& [v, iv] : inst.constraint.occ) {
    if (iv.lo > 0 && !value_id.count(v)) {
      wipe(inst, vars, out);
      return out;
    }
  }
  const int m = static_cast<int>(values.size());

  // Nodes: s, t, vars, values, then the excess pair that turns lower bounds
  // into plain capacities.
  const int S = 0, T = 1;
  auto var_node = [&](int x) { return 2 + x; };
  auto val_node = [&](int v) { return 2 + n + v; };
  const int SS = 2 + n + m, TT = SS + 1;
  FlowNet net(TT + 1);

  // s -> var carries exactly one unit: lower bound 1, upper bound 1. The
  // lower bounds move onto excess arcs; saturating them all certifies a
  // feasible circulation.
  int need = n;
  for (int x = 0; x < n; ++x) {
    net.add_edge(SS, var_node(x), 1);
  }
  net.add_edge(S, TT, n);

  std::vector<std::vector<int>> var_edge(n);
  for (int x = 0; x < n; ++x) {
    for (int v : var_vals[x]) {
      var_edge[x].push_back(net.add_edge(var_node(x), val_node(v), 1));
    }
  }
  for (int v = 0; v < m; ++v) {
    Interval iv = bounds_of(values[v]);
    if (iv.lo > n) {
      wipe(inst, vars, out);
      return out;
    }
    int hi = std::min(iv.hi, n);
    int lo = iv.lo;
    if (lo > 0) {
      net.add_edge(SS, T, lo);
      net.add_edge(val_node(v), TT, lo);
      need += lo;
    }
    net.add_edge(val_node(v), T, hi - lo);
  }
  net.add_edge(T, S, n);

  int pushed = net.max_flow(SS, TT);
  if (pushed < need) {
    wipe(inst, vars, out);
    return out;
  }

  // With one feasible assignment in hand, an edge is usable iff it carries
  // flow or sits on a residual cycle.
  auto radj = net.residual_graph();
  std::vector<int> comp = scc_of(radj);
  for (int x = 0; x < n; ++x) {
    Domain kept;
    for (size_t i = 0; i < var_vals[x].size(); ++i) {
      int v = var_vals[x][i];
      int e = var_edge[x][i];
      if (net.flow_through(e) > 0 ||
          comp[var_node(x)] == comp[val_node(v)]) {
        kept.push_back(values[v]);
      }
    }
    std::sort(kept.begin(), kept.end());
    out.domains[vars[x]] = std::move(kept);
  }
  finish_removed(inst, vars, out);
  return out;
}

// ---------------------------------------------------------------------------
// cardpath by sliding-window DP
// ---------------------------------------------------------------------------

namespace {

// Set of achievable window counts, one bit per count.
class CountSet {
 public:
  explicit CountSet(int universe = 0)
      : bits_((universe + 64) / 64, 0), universe_(universe) {}

  void set(int i) { bits_[i >> 6] |= 1ULL << (i & 63); }
  bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (uint64_t w : bits_) {
      if (w) return true;
    }
    return false;
  }
  int universe() const { return universe_; }

  /// this |= other << shift
  void or_shifted(const CountSet& other, int shift) {
    const int word = shift >> 6, bit = shift & 63;
    for (size_t i = 0; i < other.bits_.size(); ++i) {
      uint64_t w = other.bits_[i];
      if (!w) continue;
      size_t j = i + word;
      if (j < bits_.size()) bits_[j] |= w << bit;
      if (bit && j + 1 < bits_.size()) bits_[j + 1] |= w >> (64 - bit);
    }
  }

  bool intersects(const CountSet& other) const {
    size_t n = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < n; ++i) {
      if (bits_[i] & other.bits_[i]) return true;
    }
    return false;
  }

 private:
  std::vector<uint64_t> bits_;
  int universe_;
};

using StateTable = std::map<std::vector<Value>, CountSet>;

}  // namespace

PropagationOutcome cardpath_dp_gac(const Instance& inst, long long dk_limit) {
  validate_instance(inst);
  if (inst.constraint.kind != Kind::Cardpath) {
    throw UnsupportedInstanceError("cardpath_dp_gac expects cardpath");
  }
  bool repeats = false;
  std::vector<VarId> vars = distinct_scope(inst.constraint, &repeats);
  if (repeats) {
    throw UnsupportedInstanceError(
        "cardpath_dp_gac requires distinct scope variables");
  }
  const Checker tpl(inst.constraint.children[0]);
  const int k = tpl.num_vars();
  if (k != static_cast<int>(inst.constraint.children[0].scope.size())) {
    throw UnsupportedInstanceError(
        "cardpath_dp_gac requires a template without repeated positions");
  }
  const int m = static_cast<int>(inst.constraint.scope.size()) - 1;
  const int W = m - k + 1;
  const VarId& nvar = inst.constraint.scope[0];

  long long dmax = 0;
  for (int p = 1; p <= m; ++p) {
    dmax = std::max(dmax,
                    (long long)inst.domain(inst.constraint.scope[p]).size());
  }
  long long cost = 1;
  for (int i = 0; i < k; ++i) {
    cost *= std::max<long long>(dmax, 1);
    if (cost > dk_limit) {
      throw ScaleLimitError("cardpath window state space exceeds the limit");
    }
  }

  PropagationOutcome out = start_outcome(inst);
  if (any_empty(inst, vars)) {
    wipe(inst, vars, out);
    return out;
  }

  auto dom_at = [&](int p) -> const Domain& {
    return inst.domain(inst.constraint.scope[p]);
  };
  const Domain& dn = inst.domain(nvar);
  CountSet nset(W);
  for (Value v : dn) {
    if (v >= 0 && v <= W) nset.set(v);
  }

  auto window_sat = [&](const std::vector<Value>& win) {
    return tpl.complete(win) ? 1 : 0;
  };

  std::map<VarId, Domain> kept;

  if (k == 1) {
    // Independent positions: each contributes 0 or 1 freely within its
    // domain, so achievable totals form one interval.
    std::vector<int> cmin(m + 1), cmax(m + 1);
    int lo = 0, hi = 0;
    for (int p = 1; p <= m; ++p) {
      bool all = true, any = false;
      for (Value v : dom_at(p)) {
        if (window_sat({v})) any = true;
        else all = false;
      }
      cmin[p] = all ? 1 : 0;
      cmax[p] = any ? 1 : 0;
      lo += cmin[p];
      hi += cmax[p];
    }
    auto n_hits = [&](int a, int b) {
      for (Value v : dn) {
        if (v >= a && v <= b) return true;
      }
      return false;
    };
    Domain kn;
    for (Value v : dn) {
      if (v >= lo && v <= hi) kn.push_back(v);
    }
    bool dead = kn.empty();
    for (int p = 1; p <= m && !dead; ++p) {
      Domain kp;
      for (Value v : dom_at(p)) {
        int c = window_sat({v});
        if (n_hits(lo - cmin[p] + c, hi - cmax[p] + c)) kp.push_back(v);
      }
      if (kp.empty()) dead = true;
      kept[inst.constraint.scope[p]] = std::move(kp);
    }
    if (dead) {
      wipe(inst, vars, out);
      return out;
    }
    out.domains[nvar] = std::move(kn);
    for (auto& [id, d] : kept) out.domains[id] = std::move(d);
    finish_removed(inst, vars, out);
    return out;
  }

  // Boundary states carry the last k-1 values of the prefix (forward pass)
  // or the first k-1 values of the suffix (backward pass). A window either
  // completes inside the prefix or starts inside the state, never both.
  std::vector<StateTable> F(m + 1), B(m + 1);

  {
    StateTable init;
    std::vector<Value> s;
    std::function<void(int)> gen = [&](int p) {
      if (p == k) {
        init.emplace(s, CountSet(W));
        init.at(s).set(0);
        return;
      }
      for (Value v : dom_at(p)) {
        s.push_back(v);
        gen(p + 1);
        s.pop_back();
      }
    };
    gen(1);
    F[k - 1] = std::move(init);
  }
  for (int j = k - 1; j < m; ++j) {
    for (const auto& [s, cs] : F[j]) {
      for (Value v : dom_at(j + 1)) {
        std::vector<Value> win(s);
        win.push_back(v);
        int sat = window_sat(win);
        std::vector<Value> ns(win.begin() + 1, win.end());
        auto [it, fresh] = F[j + 1].try_emplace(ns, CountSet(W));
        it->second.or_shifted(cs, sat);
      }
    }
  }

  {
    StateTable init;
    std::vector<Value> s;
    std::function<void(int)> gen = [&](int p) {
      if (p > m) {
        init.emplace(s, CountSet(W));
        init.at(s).set(0);
        return;
      }
      for (Value v : dom_at(p)) {
        s.push_back(v);
        gen(p + 1);
        s.pop_back();
      }
    };
    gen(m - k + 2);
    B[m] = std::move(init);
  }
  for (int j = m; j > k - 1; --j) {
    // State at boundary j-1 covers positions j-k+1 .. j-1; the window that
    // starts at j-k+1 is decided by appending each value of position j.
    for (const auto& [s, cs] : B[j]) {
      for (Value v0 : dom_at(j - k + 1)) {
        std::vector<Value> win;
        win.push_back(v0);
        win.insert(win.end(), s.begin(), s.end());
        int sat = window_sat(win);
        std::vector<Value> ns(win.begin(), win.end() - 1);
        auto [it, fresh] = B[j - 1].try_emplace(ns, CountSet(W));
        it->second.or_shifted(cs, sat);
      }
    }
  }

  // N keeps the totals the whole sequence can realize.
  CountSet totals(W);
  for (const auto& [s, cs] : F[m]) totals.or_shifted(cs, 0);
  Domain kn;
  for (Value v : dn) {
    if (v >= 0 && v <= W && totals.test(v)) kn.push_back(v);
  }
  bool dead = kn.empty();

  for (int p = 1; p <= m && !dead; ++p) {
    int j0 = std::max(k - 1, p);
    int offset = p - (j0 - k + 2);  // slot of position p inside the state
    Domain kp;
    for (Value v : dom_at(p)) {
      bool ok = false;
      for (const auto& [s, fcs] : F[j0]) {
        if (s[offset] != v) continue;
        auto it = B[j0].find(s);
        if (it == B[j0].end()) continue;
        // Juxtapose prefix and suffix counts against D(N).
        CountSet joined(W);
        for (int a = 0; a <= W; ++a) {
          if (fcs.test(a)) joined.or_shifted(it->second, a);
        }
        if (joined.intersects(nset)) {
          ok = true;
          break;
        }
      }
      if (ok) kp.push_back(v);
    }
    if (kp.empty()) dead = true;
    kept[inst.constraint.scope[p]] = std::move(kp);
  }

  if (dead) {
    wipe(inst, vars, out);
    return out;
  }
  out.domains[nvar] = std::move(kn);
  for (auto& [id, d] : kept) out.domains[id] = std::move(d);
  finish_removed(inst, vars, out);
  return out;
}

}  // namespace gaclab
