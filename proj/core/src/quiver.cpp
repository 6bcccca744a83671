#include "qaq/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace qaq {

long ActionPolynomial::evaluate_at_one() const {
  long sum = 0;
  for (const auto& [exp, coeff] : terms) sum += coeff;
  return sum;
}

std::string ActionPolynomial::str() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto [exp, coeff] = *it;
    if (!first) out << " + ";
    first = false;
    if (coeff != 1) out << coeff;
    out << 'u';
    if (exp != 1) out << '^' << exp;
  }
  return out.str();
}

ActionQuiver::ActionQuiver(int vertex_count, std::vector<Element> labels,
                           std::vector<std::vector<int>> targets,
                           std::vector<std::string> label_names)
    : vertex_count_(vertex_count),
      labels_(std::move(labels)),
      targets_(std::move(targets)),
      label_names_(std::move(label_names)) {
  assert(labels_.size() == targets_.size() && labels_.size() == label_names_.size());
}

int ActionQuiver::index_of_label(Element label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw Error(ErrorKind::LabelNotPresent,
              "element " + std::to_string(label + 1) + " is not a quiver label");
}

std::vector<QuiverEdge> ActionQuiver::edges() const {
  std::vector<QuiverEdge> result;
  result.reserve(labels_.size() * static_cast<std::size_t>(vertex_count_));
  for (std::size_t li = 0; li < labels_.size(); ++li)
    for (int v = 0; v < vertex_count_; ++v)
      result.push_back(QuiverEdge{v, targets_[li][v], labels_[li]});
  return result;
}

const std::vector<int>& ActionQuiver::targets(Element label) const {
  return targets_[index_of_label(label)];
}

const std::string& ActionQuiver::label_name(Element label) const {
  return label_names_[index_of_label(label)];
}

FullQuiver::FullQuiver(int vertex_count, std::vector<std::vector<Element>> endos,
                       std::vector<std::vector<int>> targets)
    : vertex_count_(vertex_count), endos_(std::move(endos)), targets_(std::move(targets)) {}

std::vector<QuiverEdge> FullQuiver::edges() const {
  std::vector<QuiverEdge> result;
  for (std::size_t fi = 0; fi < endos_.size(); ++fi)
    for (int v = 0; v < vertex_count_; ++v)
      result.push_back(QuiverEdge{v, targets_[fi][v], static_cast<Element>(fi)});
  return result;
}

namespace {

// Image vertices of the homset under coloring -> act(x, coloring).
std::vector<int> action_targets(const Homset& h, Element x) {
  std::vector<int> targets(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) {
    auto idx = h.index_of(act(h.quandle(), x, h[v]));
    // The action preserves colorings, so the image is always present.
    assert(idx.has_value());
    targets[v] = static_cast<int>(*idx);
  }
  return targets;
}

std::vector<long> permutation_cycle_lengths(const std::vector<int>& targets) {
  std::vector<bool> seen(targets.size(), false);
  std::vector<long> lengths;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(targets[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

ActionQuiver action_quiver(const Homset& h) {
  std::vector<Element> all(h.quandle().size());
  std::iota(all.begin(), all.end(), 0);
  return action_quiver(h, all);
}

ActionQuiver action_quiver(const Homset& h, const std::vector<Element>& labels) {
  const Quandle& q = h.quandle();
  std::vector<std::vector<int>> targets;
  std::vector<std::string> names;
  targets.reserve(labels.size());
  for (Element x : labels) {
    if (x < 0 || x >= q.size())
      throw Error(ErrorKind::OutOfRange, "acting element out of range");
    targets.push_back(action_targets(h, x));
    names.push_back(q.label(x));
  }
  return ActionQuiver(static_cast<int>(h.size()), labels, std::move(targets),
                      std::move(names));
}

ActionPolynomial action_polynomial(const Homset& h, Element x) {
  if (x < 0 || x >= h.quandle().size())
    throw Error(ErrorKind::OutOfRange, "acting element out of range");
  ActionPolynomial p;
  p.acting_element = x;
  for (long len : permutation_cycle_lengths(action_targets(h, x))) p.terms[len] += len;
  return p;
}

std::vector<ActionPolynomial> polynomial_for_all_elements(const Homset& h) {
  std::vector<ActionPolynomial> result;
  result.reserve(h.quandle().size());
  for (Element x = 0; x < h.quandle().size(); ++x)
    result.push_back(action_polynomial(h, x));
  return result;
}

std::vector<long> cycle_structure(const ActionQuiver& aq, Element x) {
  return permutation_cycle_lengths(aq.targets(x));
}

long CycleShape::vertex_count() const {
  return std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0L);
}

CycleShape reconstruct_from_polynomial(const ActionPolynomial& p) {
  CycleShape shape;
  for (const auto& [exp, coeff] : p.terms) {
    if (exp < 1 || coeff < 1)
      throw Error(ErrorKind::MalformedPolynomial,
                  "term " + std::to_string(coeff) + "u^" + std::to_string(exp) +
                      " is not admissible");
    if (coeff % exp != 0)
      throw Error(ErrorKind::MalformedPolynomial,
                  "coefficient " + std::to_string(coeff) + " of u^" + std::to_string(exp) +
                      " is not a multiple of " + std::to_string(exp));
    for (long k = 0; k < coeff / exp; ++k) shape.cycle_lengths.push_back(exp);
  }
  std::sort(shape.cycle_lengths.begin(), shape.cycle_lengths.end());
  return shape;
}

namespace {

// DFS over partial maps with propagation: assigning f on a and b forces
// f(a |> b); contradictions prune the branch.
void endo_search(const Quandle& q, std::vector<Element>& f,
                 std::vector<std::vector<Element>>& out) {
  const int n = q.size();
  int next = -1;
  for (int a = 0; a < n; ++a)
    if (f[a] < 0) { next = a; break; }
  if (next < 0) {
    out.push_back(f);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    // Assign f[next] = v, then close under the operation; log assignments
    // for rollback.
    std::vector<int> log;
    bool ok = true;
    f[next] = v;
    log.push_back(next);
    for (std::size_t qi = 0; qi < log.size() && ok; ++qi) {
      int a = log[qi];
      for (int b = 0; b < n && ok; ++b) {
        if (f[b] < 0) continue;
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          Element img = q.op(f[x], f[y]);
          Element src = q.op(x, y);
          if (f[src] < 0) {
            f[src] = img;
            log.push_back(src);
          } else if (f[src] != img) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) endo_search(q, f, out);
    for (int a : log) f[a] = -1;
  }
}

}  // namespace

std::vector<std::vector<Element>> enumerate_endomorphisms(const Quandle& q, int guard_max) {
  if (q.size() > guard_max)
    throw Error(ErrorKind::TooLarge,
                "endomorphism enumeration guarded at n <= " + std::to_string(guard_max));
  std::vector<Element> f(q.size(), -1);
  std::vector<std::vector<Element>> out;
  endo_search(q, f, out);
  std::sort(out.begin(), out.end());
  return out;
}

FullQuiver full_coloring_quiver(const Homset& h,
                                const std::vector<std::vector<Element>>& endos) {
  const Quandle& q = h.quandle();
  for (const auto& f : endos) {
    if (static_cast<int>(f.size()) != q.size())
      throw Error(ErrorKind::NotEndomorphism, "map has wrong domain size");
    for (Element a = 0; a < q.size(); ++a)
      for (Element b = 0; b < q.size(); ++b) {
        if (f[a] < 0 || f[a] >= q.size() || f[b] < 0 || f[b] >= q.size())
          throw Error(ErrorKind::NotEndomorphism, "map image out of range");
        if (f[q.op(a, b)] != q.op(f[a], f[b]))
          throw Error(ErrorKind::NotEndomorphism,
                      "not an endomorphism: fails at (" + std::to_string(a + 1) + "," +
                          std::to_string(b + 1) + ")");
      }
  }

  std::vector<std::vector<int>> targets;
  targets.reserve(endos.size());
  for (const auto& f : endos) {
    std::vector<int> t(h.size());
    for (std::size_t v = 0; v < h.size(); ++v) {
      Coloring image = h[v];
      for (Element& e : image) e = f[e];
      auto idx = h.index_of(image);
      assert(idx.has_value());  // endomorphisms preserve colorings
      t[v] = static_cast<int>(*idx);
    }
    targets.push_back(std::move(t));
  }
  return FullQuiver(static_cast<int>(h.size()), endos, std::move(targets));
}

std::string export_dot(const ActionQuiver& q) {
  std::ostringstream out;
  out << "digraph action_quiver {\n";
  for (int v = 0; v < q.vertex_count(); ++v) out << "  " << v << ";\n";
  for (Element x : q.labels()) {
    const auto& targets = q.targets(x);
    for (int v = 0; v < q.vertex_count(); ++v)
      out << "  " << v << " -> " << targets[v] << " [label=\"" << q.label_name(x)
          << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const FullQuiver& q) {
  std::ostringstream out;
  out << "digraph coloring_quiver {\n";
  for (int v = 0; v < q.vertex_count(); ++v) out << "  " << v << ";\n";
  for (std::size_t fi = 0; fi < q.endos().size(); ++fi) {
    const auto& targets = q.targets(static_cast<int>(fi));
    for (int v = 0; v < q.vertex_count(); ++v)
      out << "  " << v << " -> " << targets[v] << " [label=\"f" << fi << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qaq
