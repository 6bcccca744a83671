#ifndef QAQ_HOMSET_HPP
#define QAQ_HOMSET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaq/diagram.hpp"
#include "qaq/quandle.hpp"

namespace qaq {

// A coloring assigns a quandle element to each arc; position i holds the
// color of arc i+1.
using Coloring = std::vector<Element>;

inline constexpr std::size_t kDefaultCap = 1'000'000;

// The homset Hom(Q(L), X) represented as the set of X-colorings of a
// diagram, kept in lexicographic order. Owns copies of the diagram and
// quandle; immutable and safe to share across threads.
class Homset {
public:
  Homset(Diagram diagram, Quandle quandle, std::vector<Coloring> sorted_colorings);

  const Diagram& diagram() const noexcept { return diagram_; }
  const Quandle& quandle() const noexcept { return quandle_; }

  std::size_t size() const noexcept { return colorings_.size(); }
  const Coloring& operator[](std::size_t i) const { return colorings_[i]; }
  const std::vector<Coloring>& colorings() const noexcept { return colorings_; }

  std::optional<std::size_t> index_of(const Coloring& c) const;

  bool operator==(const Homset& other) const {
    return diagram_ == other.diagram_ && quandle_ == other.quandle_ &&
           colorings_ == other.colorings_;
  }

private:
  struct ColoringHash {
    std::size_t operator()(const Coloring& c) const noexcept {
      std::size_t h = c.size();
      for (Element v : c) h = h * 1000003u + static_cast<std::size_t>(v) + 0x9e3779b9u;
      return h;
    }
  };

  Diagram diagram_;
  Quandle quandle_;
  std::vector<Coloring> colorings_;
  std::unordered_map<Coloring, std::size_t, ColoringHash> index_;
};

// Backtracking enumeration with forward propagation over a relation-aware
// arc order; output is lexicographically sorted and deterministic.
// Throws Error(CapExceeded) if more than cap colorings exist.
Homset enumerate_colorings(const Diagram& d, const Quandle& q, std::size_t cap = kDefaultCap);

// Exhaustive filter over all q.n^arc_count assignments; testing oracle.
// Throws Error(OracleTooLarge) when the search space exceeds 10^8.
Homset brute_force_colorings(const Diagram& d, const Quandle& q);

std::size_t counting_invariant(const Diagram& d, const Quandle& q,
                               std::size_t cap = kDefaultCap);

// The quandle action of x: componentwise |> x.
Coloring act(const Quandle& q, Element x, const Coloring& c);

// Smallest k > 0 with x acting k times on c returning c; divides
// q.inner_map(x).order.
long loop_length(const Quandle& q, Element x, const Coloring& c);

// Comma-separated 1-indexed labels, the serialized coloring format.
std::string format_coloring(const Quandle& q, const Coloring& c);

}  // namespace qaq

#endif
