#ifndef QAQ_DIAGRAM_HPP
#define QAQ_DIAGRAM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qaq/error.hpp"

namespace qaq {

// Arc indices are 1-based, matching the file formats.
using Arc = int;

struct Crossing {
  int sign;       // +1 or -1
  Arc over;
  Arc under_in;   // arc entering under the over-strand
  Arc under_out;  // arc leaving; satisfies under_out = under_in |>^sign over

  bool operator==(const Crossing&) const = default;
};

// Coloring constraint read off a crossing: lhs = rhs_base |>^sign rhs_actor.
struct Relation {
  Arc lhs;        // under_out
  Arc rhs_base;   // under_in
  Arc rhs_actor;  // over
  int sign;       // +1 -> |>, -1 -> |>^-1
};

// Oriented link diagram as arcs plus signed classical crossings. Virtual
// crossings are recorded by count only; they impose no relations.
class Diagram {
public:
  Diagram(int arc_count, std::vector<Crossing> crossings, int virtual_crossing_count = 0,
          std::string name = {});

  int arc_count() const noexcept { return arc_count_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int virtual_crossing_count() const noexcept { return virtual_crossing_count_; }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Arcs partitioned into cyclic sequences, one per link component, each
  // rotated to start at its smallest arc; components sorted by first arc.
  const std::vector<std::vector<Arc>>& components() const noexcept { return components_; }

  // One relation per classical crossing, in crossing order.
  std::vector<Relation> relations() const;

  bool operator==(const Diagram& other) const = default;

private:
  int arc_count_ = 0;
  std::vector<Crossing> crossings_;
  int virtual_crossing_count_ = 0;
  std::string name_;
  std::vector<std::vector<Arc>> components_;
};

// Native crossing-list format:
//   arcs N
//   <sign> <over> <under_in> <under_out>     (one line per classical crossing,
//                                             sign is +1 or -1)
//   component a1 a2 ...                      (optional, checked against the
//                                             derived component cycles)
//   virtual K                                (optional, default 0)
//   name STR                                 (optional)
// '#' starts a comment line.
Diagram parse_native(std::string_view text);
std::string to_native(const Diagram& d);

// PD notation: tuples X[a,b,c,d] listing the four edges around each crossing
// counterclockwise starting from the incoming under-strand edge; edges are
// numbered 1..2N consecutively along each oriented component.
Diagram parse_pd(std::string_view text);

// Signed Gauss code: tokens O<k><s>, U<k><s>, V<k> with s in {+,-};
// components separated by '/'.
Diagram parse_gauss(std::string_view text);

// Reads a diagram file, sniffing the format from its first significant token
// ("arcs" -> native, "X[" -> PD, otherwise Gauss).
Diagram load_diagram_file(const std::string& path);

// Returns a copy of d with the orientation of one component reversed
// (components indexed by position in d.components()). Arc indices are kept;
// crossings on the reversed strand swap under_in/under_out, and crossings
// where exactly one strand belongs to the component flip sign.
Diagram reverse_component(const Diagram& d, int component_index);

// Mirror image: all crossing signs flipped.
Diagram mirror(const Diagram& d);

}  // namespace qaq

#endif
