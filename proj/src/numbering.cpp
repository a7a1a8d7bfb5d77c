#include "welded/numbering.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

namespace welded {

namespace {

long normalize(long v, Ring ring) { return ring == Ring::Z2 ? ((v % 2) + 2) % 2 : v; }

const char* kind_name(NumberingConstraint::Kind k) {
  switch (k) {
    case NumberingConstraint::Kind::over_in_under_out: return "over_in=under_out";
    case NumberingConstraint::Kind::over_out_under_in: return "over_out=under_in";
    case NumberingConstraint::Kind::under_step: return "under_out=under_in+sign";
  }
  return "";
}

NumberingConstraint reversed(NumberingConstraint c) {
  std::swap(c.from, c.to);
  c.diff = -c.diff;
  return c;
}

}  // namespace

std::vector<NumberingConstraint> numbering_constraints(const GaussCode& g, Ring ring) {
  auto semi = semi_arcs(g);
  std::vector<NumberingConstraint> out;
  using Kind = NumberingConstraint::Kind;
  for (const auto& [id, info] : g.crossings()) {
    std::size_t o_in = semi.before(g, info.over), o_out = semi.after(info.over);
    std::size_t u_in = semi.before(g, info.under), u_out = semi.after(info.under);
    out.push_back({o_in, u_out, 0, id, Kind::over_in_under_out});
    out.push_back({u_in, o_out, 0, id, Kind::over_out_under_in});
    out.push_back({u_in, u_out, ring == Ring::Z ? to_int(info.sign) : 1, id, Kind::under_step});
  }
  return out;
}

NumberingResult alexander_numbering(const GaussCode& g, Ring ring) {
  const auto semi = semi_arcs(g);
  const auto constraints = numbering_constraints(g, ring);
  const std::size_t n = semi.count;
  // Adjacency: (constraint index, forward?)
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(n);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    adj[constraints[i].from].emplace_back(i, true);
    adj[constraints[i].to].emplace_back(i, false);
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<long> value(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<NumberingConstraint> parent_edge(n);  // oriented parent -> child
  std::vector<std::size_t> parent(n, none);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> tree(constraints.size(), 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto [ci, forward] : adj[u]) {
        NumberingConstraint c = forward ? constraints[ci] : reversed(constraints[ci]);
        if (seen[c.to]) continue;
        seen[c.to] = 1;
        tree[ci] = 1;
        value[c.to] = normalize(value[u] + c.diff, ring);
        parent[c.to] = u;
        parent_edge[c.to] = c;
        depth[c.to] = depth[u] + 1;
        queue.push_back(c.to);
      }
    }
  }
  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    const auto& c = constraints[ci];
    if (normalize(value[c.from] + c.diff - value[c.to], ring) == 0) continue;
    // Cycle: from -> to along c, then back to `from` through the tree.
    std::vector<NumberingConstraint> up_from_to, up_from_from;
    std::size_t a = c.to, b = c.from;
    while (depth[a] > depth[b]) {
      up_from_to.push_back(reversed(parent_edge[a]));
      a = parent[a];
    }
    while (depth[b] > depth[a]) {
      up_from_from.push_back(parent_edge[b]);
      b = parent[b];
    }
    while (a != b) {
      up_from_to.push_back(reversed(parent_edge[a]));
      a = parent[a];
      up_from_from.push_back(parent_edge[b]);
      b = parent[b];
    }
    UnsatCertificate cert{ring, {c}};
    cert.cycle.insert(cert.cycle.end(), up_from_to.begin(), up_from_to.end());
    cert.cycle.insert(cert.cycle.end(), up_from_from.rbegin(), up_from_from.rend());
    return cert;
  }
  return Numbering{ring, std::move(value)};
}

bool is_numbering(const GaussCode& g, const Numbering& num) {
  if (num.values.size() != semi_arcs(g).count) return false;
  for (const auto& c : numbering_constraints(g, num.ring))
    if (normalize(num.values[c.from] + c.diff - num.values[c.to], num.ring) != 0) return false;
  return true;
}

bool is_unsat_certificate(const GaussCode& g, const UnsatCertificate& cert) {
  if (cert.cycle.empty()) return false;
  auto all = numbering_constraints(g, cert.ring);
  auto known = [&](const NumberingConstraint& c) {
    return std::any_of(all.begin(), all.end(), [&](const NumberingConstraint& k) {
      bool same = k.from == c.from && k.to == c.to && k.diff == c.diff;
      bool flipped = k.from == c.to && k.to == c.from && k.diff == -c.diff;
      return k.crossing == c.crossing && k.kind == c.kind && (same || flipped);
    });
  };
  long sum = 0;
  for (std::size_t i = 0; i < cert.cycle.size(); ++i) {
    const auto& c = cert.cycle[i];
    if (!known(c)) return false;
    if (c.to != cert.cycle[(i + 1) % cert.cycle.size()].from) return false;
    sum += c.diff;
  }
  return normalize(sum, cert.ring) != 0;
}

std::string numbering_to_json(const NumberingResult& r) {
  nlohmann::ordered_json j;
  if (const auto* num = std::get_if<Numbering>(&r)) {
    j["ring"] = num->ring == Ring::Z ? "Z" : "Z2";
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < num->values.size(); ++i) values[std::to_string(i)] = num->values[i];
    j["values"] = std::move(values);
  } else {
    const auto& cert = std::get<UnsatCertificate>(r);
    j["ring"] = cert.ring == Ring::Z ? "Z" : "Z2";
    j["unsat_cycle"] = nlohmann::ordered_json::array();
    for (const auto& c : cert.cycle)
      j["unsat_cycle"].push_back(
          {{"from", c.from}, {"to", c.to}, {"diff", c.diff}, {"crossing", c.crossing}, {"kind", kind_name(c.kind)}});
  }
  return j.dump();
}

}  // namespace welded
