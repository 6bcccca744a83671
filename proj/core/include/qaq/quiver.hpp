#ifndef QAQ_QUIVER_HPP
#define QAQ_QUIVER_HPP

#include <map>
#include <string>
#include <vector>

#include "qaq/homset.hpp"

namespace qaq {

// Sum over homset vertices of u^(loop length); sparse exponent -> coefficient
// map. Coefficients satisfy: sum of coefficients = homset size, each c_j is a
// multiple of j, and every exponent divides the acting element's inner-map
// order.
struct ActionPolynomial {
  Element acting_element = 0;
  std::map<long, long> terms;  // ascending exponent -> positive coefficient

  long evaluate_at_one() const;
  // Canonical text form, descending exponents: "9u^3 + 4u". Coefficient 1 is
  // omitted, exponent 1 prints as "u".
  std::string str() const;

  bool operator==(const ActionPolynomial&) const = default;
};

struct QuiverEdge {
  int from;
  int to;
  Element label;

  bool operator==(const QuiverEdge&) const = default;
};

// Directed multigraph on homset indices: for each vertex v and acting
// element x in the label set, one edge v -> x.v. Value type; vertices are
// canonical homset indices.
class ActionQuiver {
public:
  ActionQuiver(int vertex_count, std::vector<Element> labels,
               std::vector<std::vector<int>> targets, std::vector<std::string> label_names);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Element>& labels() const noexcept { return labels_; }

  // All edges, ordered by (label position, source vertex).
  std::vector<QuiverEdge> edges() const;
  // Image vertices under the action of one label; throws LabelNotPresent.
  const std::vector<int>& targets(Element label) const;

  const std::string& label_name(Element label) const;

private:
  int index_of_label(Element label) const;

  int vertex_count_;
  std::vector<Element> labels_;
  std::vector<std::vector<int>> targets_;     // per label, size vertex_count
  std::vector<std::string> label_names_;
};

// Full quandle coloring quiver for a set of quandle endomorphisms: one edge
// per vertex per endomorphism.
class FullQuiver {
public:
  FullQuiver(int vertex_count, std::vector<std::vector<Element>> endos,
             std::vector<std::vector<int>> targets);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::vector<Element>>& endos() const noexcept { return endos_; }
  const std::vector<int>& targets(int endo_index) const { return targets_[endo_index]; }
  std::vector<QuiverEdge> edges() const;  // label = endomorphism index

private:
  int vertex_count_;
  std::vector<std::vector<Element>> endos_;
  std::vector<std::vector<int>> targets_;
};

// Builds the action quiver for the given acting elements (defaults to all of
// the quandle).
ActionQuiver action_quiver(const Homset& h);
ActionQuiver action_quiver(const Homset& h, const std::vector<Element>& labels);

// Cycle decomposition of the x-permutation of the homset.
ActionPolynomial action_polynomial(const Homset& h, Element x);

// One polynomial per quandle element, indexed by element.
std::vector<ActionPolynomial> polynomial_for_all_elements(const Homset& h);

// Multiset (ascending) of x-cycle lengths; throws Error(LabelNotPresent).
std::vector<long> cycle_structure(const ActionQuiver& aq, Element x);

// Abstract disjoint union of cycles recovered from a polynomial: c_j / j
// cycles of length j. Throws Error(MalformedPolynomial) if some c_j is not
// divisible by j.
struct CycleShape {
  std::vector<long> cycle_lengths;  // ascending

  long vertex_count() const;
  bool operator==(const CycleShape&) const = default;
};
CycleShape reconstruct_from_polynomial(const ActionPolynomial& p);

// All maps f: X -> X with f(a |> b) = f(a) |> f(b), by pruned search with
// image propagation. Guarded: throws Error(TooLarge) when q.size() >
// guard_max.
std::vector<std::vector<Element>> enumerate_endomorphisms(const Quandle& q,
                                                          int guard_max = 8);

// Verifies each map and applies it componentwise to every coloring.
// Throws Error(NotEndomorphism) with a witness.
FullQuiver full_coloring_quiver(const Homset& h,
                                const std::vector<std::vector<Element>>& endos);

// Deterministic DOT output; vertices named by canonical coloring index,
// edges annotated with quandle element labels (resp. endomorphism indices).
std::string export_dot(const ActionQuiver& q);
std::string export_dot(const FullQuiver& q);

}  // namespace qaq

#endif
