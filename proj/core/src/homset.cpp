#include "qaq/homset.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace qaq {

Homset::Homset(Diagram diagram, Quandle quandle, std::vector<Coloring> sorted_colorings)
    : diagram_(std::move(diagram)),
      quandle_(std::move(quandle)),
      colorings_(std::move(sorted_colorings)) {
  index_.reserve(colorings_.size());
  for (std::size_t i = 0; i < colorings_.size(); ++i) index_.emplace(colorings_[i], i);
}

std::optional<std::size_t> Homset::index_of(const Coloring& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// One unit of the precomputed search schedule.
struct Step {
  enum Kind { Branch, Derive, Check } kind;
  int arc = 0;  // 0-based arc slot for Branch/Derive
  int rel = -1; // relation index for Derive/Check
};

// Plans a deterministic order of branch/derive/check steps: whenever a
// relation has its actor and exactly one under-arc assigned, the other
// under-arc is forced; otherwise the lowest-index unassigned arc adjacent
// to the assigned set is branched (BFS over the relation graph).
std::vector<Step> plan_schedule(const Diagram& d, const std::vector<Relation>& rels) {
  const int arcs = d.arc_count();
  std::vector<bool> assigned(arcs + 1, false);
  std::vector<bool> rel_done(rels.size(), false);
  std::vector<Step> steps;
  steps.reserve(arcs + rels.size());

  // Adjacency: arcs sharing a relation.
  std::vector<std::vector<int>> adjacent(arcs + 1);
  for (const Relation& r : rels) {
    for (Arc a : {r.lhs, r.rhs_base, r.rhs_actor})
      for (Arc b : {r.lhs, r.rhs_base, r.rhs_actor})
        if (a != b) adjacent[a].push_back(b);
  }

  int remaining = arcs;
  auto propagate = [&] {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rel_done[i]) continue;
        const Relation& r = rels[i];
        if (!assigned[r.rhs_actor]) continue;
        bool b_in = assigned[r.rhs_base], b_out = assigned[r.lhs];
        if (r.lhs == r.rhs_base) continue;  // kink-style constraint: check only
        if (b_in && !b_out) {
          steps.push_back({Step::Derive, r.lhs, static_cast<int>(i)});
          assigned[r.lhs] = true;
          rel_done[i] = true;
          --remaining;
          progress = true;
        } else if (!b_in && b_out) {
          steps.push_back({Step::Derive, r.rhs_base, static_cast<int>(i)});
          assigned[r.rhs_base] = true;
          rel_done[i] = true;
          --remaining;
          progress = true;
        }
      }
    }
  };

  propagate();
  while (remaining > 0) {
    int pick = 0;
    for (Arc a = 1; a <= arcs && pick == 0; ++a) {
      if (assigned[a]) continue;
      for (Arc nb : adjacent[a])
        if (assigned[nb]) { pick = a; break; }
    }
    if (pick == 0)
      for (Arc a = 1; a <= arcs; ++a)
        if (!assigned[a]) { pick = a; break; }
    steps.push_back({Step::Branch, pick, -1});
    assigned[pick] = true;
    --remaining;
    propagate();
  }

  // Remaining relations become checks at the earliest position where all
  // three arcs are known; with the schedule complete, just order them after
  // the last of their arcs.
  std::vector<int> assigned_at(arcs + 1, 0);
  int t = 0;
  for (const Step& s : steps)
    if (s.kind != Step::Check) assigned_at[s.arc] = t++;
  std::vector<Step> final_steps;
  std::vector<std::vector<int>> checks_after(steps.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rel_done[i]) continue;
    const Relation& r = rels[i];
    int when = std::max({assigned_at[r.lhs], assigned_at[r.rhs_base], assigned_at[r.rhs_actor]});
    checks_after[when].push_back(static_cast<int>(i));
  }
  t = 0;
  for (const Step& s : steps) {
    final_steps.push_back(s);
    for (int rel : checks_after[t]) final_steps.push_back({Step::Check, 0, rel});
    ++t;
  }
  return final_steps;
}

void search(const Diagram& d, const Quandle& q, const std::vector<Relation>& rels,
            const std::vector<Step>& steps, std::size_t step_idx, Coloring& values,
            std::vector<Coloring>& out, std::size_t cap) {
  if (step_idx == steps.size()) {
    if (out.size() >= cap)
      throw Error(ErrorKind::CapExceeded,
                  "homset exceeds cap of " + std::to_string(cap) + " colorings");
    out.push_back(values);
    return;
  }
  const Step& s = steps[step_idx];
  switch (s.kind) {
    case Step::Branch:
      for (Element v = 0; v < q.size(); ++v) {
        values[s.arc - 1] = v;
        search(d, q, rels, steps, step_idx + 1, values, out, cap);
      }
      break;
    case Step::Derive: {
      const Relation& r = rels[s.rel];
      Element actor = values[r.rhs_actor - 1];
      if (s.arc == r.lhs)
        values[r.lhs - 1] = q.apply(values[r.rhs_base - 1], actor, r.sign);
      else
        values[r.rhs_base - 1] = q.apply(values[r.lhs - 1], actor, -r.sign);
      search(d, q, rels, steps, step_idx + 1, values, out, cap);
      break;
    }
    case Step::Check: {
      const Relation& r = rels[s.rel];
      if (values[r.lhs - 1] ==
          q.apply(values[r.rhs_base - 1], values[r.rhs_actor - 1], r.sign))
        search(d, q, rels, steps, step_idx + 1, values, out, cap);
      break;
    }
  }
}

}  // namespace

Homset enumerate_colorings(const Diagram& d, const Quandle& q, std::size_t cap) {
  auto rels = d.relations();
  auto steps = plan_schedule(d, rels);
  Coloring values(d.arc_count(), 0);
  std::vector<Coloring> out;
  search(d, q, rels, steps, 0, values, out, cap);
  std::sort(out.begin(), out.end());
  return Homset(d, q, std::move(out));
}

Homset brute_force_colorings(const Diagram& d, const Quandle& q) {
  const double space = std::pow(static_cast<double>(q.size()), d.arc_count());
  if (space > 1e8)
    throw Error(ErrorKind::OracleTooLarge,
                "brute force space " + std::to_string(q.size()) + "^" +
                    std::to_string(d.arc_count()) + " exceeds 10^8");
  auto rels = d.relations();
  std::vector<Coloring> out;
  Coloring values(d.arc_count(), 0);
  while (true) {
    bool ok = true;
    for (const Relation& r : rels)
      if (values[r.lhs - 1] !=
          q.apply(values[r.rhs_base - 1], values[r.rhs_actor - 1], r.sign)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(values);
    // Odometer in lexicographic order.
    int pos = d.arc_count() - 1;
    while (pos >= 0 && values[pos] == q.size() - 1) values[pos--] = 0;
    if (pos < 0) break;
    ++values[pos];
  }
  return Homset(d, q, std::move(out));
}

std::size_t counting_invariant(const Diagram& d, const Quandle& q, std::size_t cap) {
  return enumerate_colorings(d, q, cap).size();
}

Coloring act(const Quandle& q, Element x, const Coloring& c) {
  Coloring result(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) result[i] = q.op(c[i], x);
  return result;
}

long loop_length(const Quandle& q, Element x, const Coloring& c) {
  Coloring cur = act(q, x, c);
  long len = 1;
  while (cur != c) {
    cur = act(q, x, cur);
    ++len;
  }
  return len;
}

std::string format_coloring(const Quandle& q, const Coloring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << q.label(c[i]);
  }
  return out.str();
}

}  // namespace qaq
