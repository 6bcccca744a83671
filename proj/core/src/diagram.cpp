#include "qaq/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <sstream>

namespace qaq {

namespace {

// Rotate a cycle so its smallest entry comes first.
std::vector<Arc> canonical_cycle(std::vector<Arc> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

std::vector<std::vector<Arc>> derive_components(int arc_count,
                                                const std::vector<Crossing>& crossings) {
  // successor[a] = arc following a along its component (through its
  // under-pass); 0 when a never goes under.
  std::vector<Arc> successor(arc_count + 1, 0);
  std::vector<int> in_count(arc_count + 1, 0), out_count(arc_count + 1, 0);
  for (const Crossing& c : crossings) {
    if (++in_count[c.under_in] > 1)
      throw Error(ErrorKind::ArcConsistency,
                  "arc " + std::to_string(c.under_in) + " goes under more than once");
    if (++out_count[c.under_out] > 1)
      throw Error(ErrorKind::ArcConsistency,
                  "arc " + std::to_string(c.under_out) + " leaves more than one under-pass");
    successor[c.under_in] = c.under_out;
  }
  for (Arc a = 1; a <= arc_count; ++a)
    if (in_count[a] != out_count[a])
      throw Error(ErrorKind::ArcConsistency,
                  "arc " + std::to_string(a) + " enters " + std::to_string(in_count[a]) +
                      " and leaves " + std::to_string(out_count[a]) + " under-passes");

  std::vector<bool> seen(arc_count + 1, false);
  std::vector<std::vector<Arc>> components;
  for (Arc a = 1; a <= arc_count; ++a) {
    if (seen[a]) continue;
    if (successor[a] == 0) {
      // Crossing-free arc (it may still pass over crossings): its own
      // single-arc component.
      seen[a] = true;
      components.push_back({a});
      continue;
    }
    std::vector<Arc> cycle;
    Arc cur = a;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = successor[cur];
      if (cur == 0)
        throw Error(ErrorKind::ArcConsistency,
                    "arc chain starting at " + std::to_string(a) + " is not closed");
    }
    if (cur != a)
      throw Error(ErrorKind::ArcConsistency,
                  "arc chain starting at " + std::to_string(a) + " does not close up");
    components.push_back(canonical_cycle(std::move(cycle)));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return components;
}

}  // namespace

Diagram::Diagram(int arc_count, std::vector<Crossing> crossings, int virtual_crossing_count,
                 std::string name)
    : arc_count_(arc_count),
      crossings_(std::move(crossings)),
      virtual_crossing_count_(virtual_crossing_count),
      name_(std::move(name)) {
  if (arc_count_ < 1)
    throw Error(ErrorKind::ArcConsistency, "diagram needs at least one arc");
  if (virtual_crossing_count_ < 0)
    throw Error(ErrorKind::ArcConsistency, "negative virtual crossing count");
  for (const Crossing& c : crossings_) {
    if (c.sign != 1 && c.sign != -1)
      throw Error(ErrorKind::ParseError, "crossing sign must be +1 or -1");
    for (Arc a : {c.over, c.under_in, c.under_out})
      if (a < 1 || a > arc_count_)
        throw Error(ErrorKind::ArcConsistency,
                    "arc " + std::to_string(a) + " out of range 1.." +
                        std::to_string(arc_count_));
  }
  components_ = derive_components(arc_count_, crossings_);
}

std::vector<Relation> Diagram::relations() const {
  std::vector<Relation> rels;
  rels.reserve(crossings_.size());
  for (const Crossing& c : crossings_)
    rels.push_back(Relation{c.under_out, c.under_in, c.over, c.sign});
  return rels;
}

// ---------------------------------------------------------------------------
// Native format
// ---------------------------------------------------------------------------

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (auto end = line.find_last_not_of(" \t\r"); end != std::string::npos)
      line = line.substr(pos, end - pos + 1);
    lines.push_back({number, line});
  }
  return lines;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Diagram parse_native(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty diagram file");

  long arc_count = -1;
  std::vector<Crossing> crossings;
  std::vector<std::vector<Arc>> declared_components;
  int virtual_count = 0;
  std::string name;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in(lines[i].text);
    std::string tok;
    in >> tok;
    if (tok == "arcs") {
      if (arc_count >= 0) parse_fail(lines[i].number, "duplicate 'arcs' line");
      if (!(in >> arc_count) || arc_count < 1)
        parse_fail(lines[i].number, "expected 'arcs N' with N >= 1");
    } else if (tok == "component") {
      std::vector<Arc> cyc;
      long a;
      while (in >> a) cyc.push_back(static_cast<Arc>(a));
      if (cyc.empty()) parse_fail(lines[i].number, "empty component line");
      declared_components.push_back(canonical_cycle(std::move(cyc)));
    } else if (tok == "virtual") {
      if (!(in >> virtual_count) || virtual_count < 0)
        parse_fail(lines[i].number, "expected 'virtual K' with K >= 0");
    } else if (tok == "name") {
      std::getline(in, name);
      if (auto pos = name.find_first_not_of(" \t"); pos != std::string::npos)
        name = name.substr(pos);
      else
        name.clear();
    } else if (tok == "+1" || tok == "-1") {
      long over, uin, uout;
      if (!(in >> over >> uin >> uout))
        parse_fail(lines[i].number, "expected '<sign> <over> <under_in> <under_out>'");
      std::string extra;
      if (in >> extra) parse_fail(lines[i].number, "trailing text after crossing");
      crossings.push_back(Crossing{tok == "+1" ? 1 : -1, static_cast<Arc>(over),
                                   static_cast<Arc>(uin), static_cast<Arc>(uout)});
    } else {
      parse_fail(lines[i].number, "unrecognized line '" + lines[i].text + "'");
    }
  }
  if (arc_count < 1) throw Error(ErrorKind::ParseError, "missing 'arcs N' line");

  Diagram d(static_cast<int>(arc_count), std::move(crossings), virtual_count, name);
  if (!declared_components.empty()) {
    auto sorted = declared_components;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    if (sorted != d.components())
      throw Error(ErrorKind::ArcConsistency,
                  "declared components do not match the crossing structure");
  }
  return d;
}

std::string to_native(const Diagram& d) {
  std::ostringstream out;
  if (!d.name().empty()) out << "name " << d.name() << "\n";
  out << "arcs " << d.arc_count() << "\n";
  if (d.virtual_crossing_count() > 0) out << "virtual " << d.virtual_crossing_count() << "\n";
  for (const Crossing& c : d.crossings())
    out << (c.sign > 0 ? "+1" : "-1") << ' ' << c.over << ' ' << c.under_in << ' '
        << c.under_out << "\n";
  for (const auto& comp : d.components()) {
    out << "component";
    for (Arc a : comp) out << ' ' << a;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// PD notation
// ---------------------------------------------------------------------------

namespace {

struct PdTuple {
  std::array<int, 4> edge;  // a,b,c,d: under enters a, exits c; b,d over
};

// Occurrence of an edge at a crossing: tuple index + position 0..3.
struct Occ {
  int tuple = -1;
  int pos = -1;
};

std::vector<PdTuple> tokenize_pd(std::string_view text) {
  std::vector<PdTuple> tuples;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto skip_separators = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_separators();
  while (i < text.size()) {
    if (text[i] != 'X') throw Error(ErrorKind::ParseError, "expected 'X[' in PD input");
    ++i;
    skip_space();
    if (i >= text.size() || text[i] != '[')
      throw Error(ErrorKind::ParseError, "expected '[' after X in PD input");
    ++i;
    PdTuple t{};
    for (int k = 0; k < 4; ++k) {
      skip_space();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error(ErrorKind::ParseError, "expected edge number in PD tuple");
      t.edge[k] = std::stoi(std::string(text.substr(start, i - start)));
      skip_space();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw Error(ErrorKind::ParseError, "expected ',' in PD tuple");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ']')
      throw Error(ErrorKind::ParseError, "expected ']' closing PD tuple");
    ++i;
    tuples.push_back(t);
    skip_separators();
  }
  if (tuples.empty()) throw Error(ErrorKind::ParseError, "empty PD input");
  return tuples;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  const std::vector<PdTuple> tuples = tokenize_pd(text);
  const int n_cross = static_cast<int>(tuples.size());
  const int n_edges = 2 * n_cross;

  // Each edge label 1..2N must occur exactly twice.
  std::vector<std::array<Occ, 2>> occs(n_edges + 1);
  std::vector<int> occ_count(n_edges + 1, 0);
  for (int t = 0; t < n_cross; ++t)
    for (int p = 0; p < 4; ++p) {
      int e = tuples[t].edge[p];
      if (e < 1 || e > n_edges)
        throw Error(ErrorKind::ParseError,
                    "PD edge " + std::to_string(e) + " out of range 1.." +
                        std::to_string(n_edges));
      if (occ_count[e] == 2)
        throw Error(ErrorKind::ParseError,
                    "PD edge " + std::to_string(e) + " occurs more than twice");
      occs[e][occ_count[e]++] = {t, p};
    }
  for (int e = 1; e <= n_edges; ++e)
    if (occ_count[e] != 2)
      throw Error(ErrorKind::ParseError, "PD edge " + std::to_string(e) + " occurs once");

  // Walk the 4-valent graph. At each crossing the strand pairing is a<->c
  // (under) and b<->d (over); moving along an edge to its other occurrence
  // and through the pairing traverses a component.
  auto paired_pos = [](int p) { return (p + 2) % 4; };
  auto other_occ = [&](int e, Occ at) {
    return (occs[e][0].tuple == at.tuple && occs[e][0].pos == at.pos) ? occs[e][1] : occs[e][0];
  };

  std::vector<bool> edge_seen(n_edges + 1, false);
  // For each edge, the occurrence at its head (the crossing it runs into),
  // fixed once the walk direction of its component is settled.
  std::vector<Occ> head(n_edges + 1);
  std::vector<std::vector<int>> cycles;  // edge sequences per component

  for (int e0 = 1; e0 <= n_edges; ++e0) {
    if (edge_seen[e0]) continue;
    // Tentatively walk with occs[e0][0] as the head of e0.
    std::vector<int> cycle;
    std::vector<Occ> cycle_heads;
    int e = e0;
    Occ h = occs[e0][0];
    while (!edge_seen[e]) {
      edge_seen[e] = true;
      cycle.push_back(e);
      cycle_heads.push_back(h);
      int next_pos = paired_pos(h.pos);
      int next_edge = tuples[h.tuple].edge[next_pos];
      Occ tail{h.tuple, next_pos};
      h = other_occ(next_edge, tail);
      e = next_edge;
    }
    if (e != e0)
      throw Error(ErrorKind::ParseError, "PD strand walk does not close up");

    // Orient the cycle. Under-strand occurrences force the direction: an
    // edge's head occurrence must sit at position a (0) or over (1,3), never
    // at position c (2), since c is where the under-strand exits.
    int forward_votes = 0, backward_votes = 0;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle_heads[k].pos == 0) ++forward_votes;
      if (cycle_heads[k].pos == 2) ++backward_votes;
    }
    if (forward_votes > 0 && backward_votes > 0)
      throw Error(ErrorKind::ParseError,
                  "inconsistent under-strand directions along a PD component");
    bool reversed = backward_votes > 0;
    if (forward_votes == 0 && backward_votes == 0) {
      // Component never goes under; fall back to ascending edge labels.
      if (cycle.size() <= 2)
        throw Error(ErrorKind::OrientationAmbiguous,
                    "cannot orient over-only PD component containing edge " +
                        std::to_string(cycle[0]));
      auto mn = std::min_element(cycle.begin(), cycle.end());
      std::size_t at = static_cast<std::size_t>(mn - cycle.begin());
      std::size_t after = (at + 1) % cycle.size();
      std::size_t before = (at + cycle.size() - 1) % cycle.size();
      reversed = cycle[before] < cycle[after];
    }
    if (reversed) {
      // Reverse the walk: edge k's head becomes the tail occurrence, i.e.
      // the occurrence recorded as head of the walk's next edge... recompute
      // by flipping: new head of edge = its other occurrence.
      std::reverse(cycle.begin(), cycle.end());
      for (std::size_t k = 0; k < cycle.size(); ++k)
        head[cycle[k]] = other_occ(cycle[k], cycle_heads[cycle.size() - 1 - k]);
    } else {
      for (std::size_t k = 0; k < cycle.size(); ++k) head[cycle[k]] = cycle_heads[k];
    }

    // Components must carry consecutive labels in order.
    {
      auto mn = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), mn, cycle.end());
      for (std::size_t k = 0; k < cycle.size(); ++k)
        if (cycle[k] != cycle[0] + static_cast<int>(k))
          throw Error(ErrorKind::ParseError,
                      "PD component labels are not consecutive along the strand");
    }
    cycles.push_back(cycle);
  }

  std::sort(cycles.begin(), cycles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  // Group consecutive edges into arcs: an arc ends where its last edge runs
  // into an under-pass (head position a). Arcs are numbered along each
  // component, starting from the arc that begins after the component's last
  // under-pass break, component by component.
  std::vector<int> arc_of_edge(n_edges + 1, 0);
  int arc_count = 0;
  for (const auto& cycle : cycles) {
    std::vector<std::size_t> breaks;  // indices whose edge ends under
    for (std::size_t k = 0; k < cycle.size(); ++k)
      if (head[cycle[k]].pos == 0) breaks.push_back(k);
    if (breaks.empty()) {
      ++arc_count;
      for (int e : cycle) arc_of_edge[e] = arc_count;
      continue;
    }
    std::size_t start = (breaks.back() + 1) % cycle.size();
    int arc = ++arc_count;
    for (std::size_t off = 0; off < cycle.size(); ++off) {
      std::size_t k = (start + off) % cycle.size();
      arc_of_edge[cycle[k]] = arc;
      bool is_break = head[cycle[k]].pos == 0;
      if (is_break && off + 1 < cycle.size()) arc = ++arc_count;
    }
  }

  // Emit crossings. Sign: over-strand runs d->b at positive crossings.
  std::vector<Crossing> crossings;
  crossings.reserve(n_cross);
  for (int t = 0; t < n_cross; ++t) {
    const auto& tup = tuples[t];
    int a = tup.edge[0], b = tup.edge[1], c = tup.edge[2], d = tup.edge[3];
    bool d_incoming = head[d].tuple == t && head[d].pos == 3;
    bool b_incoming = head[b].tuple == t && head[b].pos == 1;
    if (d_incoming == b_incoming)
      throw Error(ErrorKind::OrientationAmbiguous,
                  "over-strand direction unresolved at PD crossing " + std::to_string(t + 1));
    if (arc_of_edge[b] != arc_of_edge[d])
      throw Error(ErrorKind::ParseError,
                  "over-strand edges on different arcs at PD crossing " + std::to_string(t + 1));
    crossings.push_back(Crossing{d_incoming ? 1 : -1, arc_of_edge[b], arc_of_edge[a],
                                 arc_of_edge[c]});
  }
  return Diagram(arc_count, std::move(crossings));
}

// ---------------------------------------------------------------------------
// Signed Gauss codes
// ---------------------------------------------------------------------------

namespace {

struct GaussToken {
  char kind;  // 'O', 'U', 'V'
  int label;
  int sign;  // +1/-1; 0 for V tokens
};

std::vector<std::vector<GaussToken>> tokenize_gauss(std::string_view text) {
  std::vector<std::vector<GaussToken>> comps(1);
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (ch == '/') {
      comps.emplace_back();
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U' && ch != 'V')
      throw Error(ErrorKind::ParseError,
                  std::string("unexpected character '") + ch + "' in Gauss code");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error(ErrorKind::ParseError, "missing crossing label in Gauss code");
    int label = std::stoi(std::string(text.substr(start, i - start)));
    int sign = 0;
    if (ch != 'V') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw Error(ErrorKind::ParseError,
                    "missing sign on crossing " + std::to_string(label) + " in Gauss code");
      sign = text[i] == '+' ? 1 : -1;
      ++i;
    }
    comps.back().push_back({ch, label, sign});
  }
  while (!comps.empty() && comps.back().empty()) comps.pop_back();
  if (comps.empty()) throw Error(ErrorKind::ParseError, "empty Gauss code");
  for (const auto& c : comps)
    if (c.empty()) throw Error(ErrorKind::ParseError, "empty component in Gauss code");
  return comps;
}

}  // namespace

Diagram parse_gauss(std::string_view text) {
  auto comps = tokenize_gauss(text);

  // Rotate each component to start right after its last under-pass, so arcs
  // are simple runs with no wrap-around merge.
  for (auto& comp : comps) {
    int last_u = -1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      if (comp[k].kind == 'U') last_u = static_cast<int>(k);
    if (last_u >= 0)
      std::rotate(comp.begin(), comp.begin() + last_u + 1, comp.end());
  }

  struct Visit {
    int arc = 0;       // arc at an O visit; under_in at a U visit
    int arc_out = 0;   // under_out at a U visit
    int sign = 0;
    int count = 0;
  };
  std::map<int, Visit> overs, unders;
  std::map<int, int> virtual_visits;

  int arc_count = 0;
  for (auto& comp : comps) {
    int u_tokens = 0;
    for (const auto& t : comp)
      if (t.kind == 'U') ++u_tokens;
    int first_arc = arc_count + 1;
    int arcs_here = std::max(u_tokens, 1);
    int cur = first_arc;
    for (const auto& t : comp) {
      if (t.kind == 'V') {
        ++virtual_visits[t.label];
        continue;
      }
      auto& slot = (t.kind == 'O' ? overs : unders)[t.label];
      if (++slot.count > 1)
        throw Error(ErrorKind::UnbalancedCrossing,
                    "crossing " + std::to_string(t.label) + " visited " +
                        (t.kind == 'O' ? std::string("over") : std::string("under")) +
                        " more than once");
      slot.sign = t.sign;
      if (t.kind == 'O') {
        slot.arc = cur;
      } else {
        slot.arc = cur;
        // Wrap back to the component's first arc after the last under-pass.
        cur = (cur - first_arc + 1) % arcs_here + first_arc;
        slot.arc_out = cur;
      }
    }
    arc_count += arcs_here;
  }

  for (const auto& [label, count] : virtual_visits)
    if (count != 2)
      throw Error(ErrorKind::UnbalancedCrossing,
                  "virtual crossing " + std::to_string(label) + " visited " +
                      std::to_string(count) + " time(s)");

  std::vector<Crossing> crossings;
  for (const auto& [label, u] : unders) {
    auto it = overs.find(label);
    if (it == overs.end())
      throw Error(ErrorKind::UnbalancedCrossing,
                  "crossing " + std::to_string(label) + " has no over-pass");
    const Visit& o = it->second;
    if (o.sign != u.sign)
      throw Error(ErrorKind::ParseError,
                  "crossing " + std::to_string(label) + " has conflicting signs");
    crossings.push_back(Crossing{u.sign, o.arc, u.arc, u.arc_out});
  }
  for (const auto& [label, o] : overs)
    if (unders.find(label) == unders.end())
      throw Error(ErrorKind::UnbalancedCrossing,
                  "crossing " + std::to_string(label) + " has no under-pass");

  return Diagram(arc_count, std::move(crossings),
                 static_cast<int>(virtual_visits.size()));
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  for (const auto& line : significant_lines(text)) {
    std::istringstream ls(line.text);
    std::string tok;
    ls >> tok;
    if (tok == "arcs" || tok == "name") return parse_native(text);
    if (tok.rfind("X[", 0) == 0 || tok == "X") return parse_pd(text);
    return parse_gauss(text);
  }
  throw Error(ErrorKind::ParseError, "empty diagram file: " + path);
}

Diagram reverse_component(const Diagram& d, int component_index) {
  const auto& comps = d.components();
  if (component_index < 0 || component_index >= static_cast<int>(comps.size()))
    throw Error(ErrorKind::OutOfRange, "component index out of range");
  std::vector<bool> in_comp(d.arc_count() + 1, false);
  for (Arc a : comps[component_index]) in_comp[a] = true;

  std::vector<Crossing> crossings = d.crossings();
  for (Crossing& c : crossings) {
    bool rev_under = in_comp[c.under_in];
    bool rev_over = in_comp[c.over];
    if (rev_under) std::swap(c.under_in, c.under_out);
    if (rev_under != rev_over) c.sign = -c.sign;
  }
  return Diagram(d.arc_count(), std::move(crossings), d.virtual_crossing_count(), d.name());
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> crossings = d.crossings();
  for (Crossing& c : crossings) c.sign = -c.sign;
  return Diagram(d.arc_count(), std::move(crossings), d.virtual_crossing_count(), d.name());
}

}  // namespace qaq
