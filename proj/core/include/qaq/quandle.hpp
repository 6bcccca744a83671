#ifndef QAQ_QUANDLE_HPP
#define QAQ_QUANDLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qaq/error.hpp"

namespace qaq {

// Quandle elements are 0-indexed internally; file formats and display
// labels are 1-indexed.
using Element = int;

// Permutation of 0..n-1 stored as an image vector.
class Permutation {
public:
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element a) const { return images_[a]; }
  const std::vector<Element>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Cycle lengths in ascending order (fixed points included as 1s).
  std::vector<long> cycle_lengths() const;
  // Order = lcm of the cycle lengths.
  long order() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<Element> images_;
};

// The map a -> a |> x together with its order.
struct InnerMap {
  Element element;
  Permutation perm;
  long order;
};

class Quandle {
public:
  // Validates all three axioms exhaustively (O(n^3)) and derives the
  // inverse operation by inverting each column permutation.
  // Throws AxiomViolation / Error(OutOfRange).
  static Quandle from_table(const std::vector<std::vector<Element>>& table);

  static Quandle trivial(int n);                  // a |> b = a
  static Quandle dihedral(int n);                 // a |> b = 2b - a mod n
  static Quandle alexander(int n, long t);        // a |> b = ta + (1-t)b mod n
  // Conjugation quandle of the group given by its multiplication table:
  // a |> b = b^-1 a b. Throws Error(NotAGroup) with a witness.
  static Quandle conjugation(const std::vector<std::vector<Element>>& group_table);

  int size() const noexcept { return n_; }
  Element op(Element a, Element b) const { return table_[a * n_ + b]; }      // a |> b
  Element inv_op(Element a, Element b) const { return inv_[a * n_ + b]; }    // a |>^-1 b
  // sign > 0 applies |>, sign < 0 applies |>^-1.
  Element apply(Element a, Element b, int sign) const {
    return sign > 0 ? op(a, b) : inv_op(a, b);
  }

  InnerMap inner_map(Element x) const;
  // True iff columns x and y of the operation table are identical.
  bool action_equivalent(Element x, Element y) const;

  std::vector<std::vector<Element>> table() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& label(Element a) const { return labels_[a]; }

  bool operator==(const Quandle& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

private:
  Quandle() = default;

  int n_ = 0;
  std::vector<Element> table_;  // flat n*n, table_[a*n+b] = a |> b
  std::vector<Element> inv_;    // flat n*n, inv_[a*n+b] = a |>^-1 b
  std::vector<std::string> labels_;
};

// Table file format, shared by quandles and groups: first significant line
// holds n, the next n lines hold n whitespace-separated 1-indexed entries
// (row a, column b = a |> b). Lines starting with '#' are comments.
std::vector<std::vector<Element>> parse_table(std::string_view text);
Quandle parse_quandle(std::string_view text);
std::string format_table(const Quandle& q);

Quandle load_quandle_file(const std::string& path);

// Builtin specs used by the CLI: "dihedral:n", "trivial:n", "alexander:n:t",
// "conj:<group file>", or a plain path to a quandle table file.
Quandle quandle_from_spec(const std::string& spec);

}  // namespace qaq

#endif
