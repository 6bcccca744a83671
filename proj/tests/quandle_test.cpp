#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "qaq/quandle.hpp"
#include "qaq/reference.hpp"

using namespace qaq;

namespace {

using Table = std::vector<std::vector<Element>>;

// Independent triple-loop axiom check, kept separate from the library path.
bool axioms_hold(const Table& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return false;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    for (Element v : row)
      if (v < 0 || v >= n) return false;
  }
  for (int a = 0; a < n; ++a)
    if (t[a][a] != a) return false;
  for (int b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
      if (seen[t[a][b]]) return false;
      seen[t[a][b]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return false;
  return true;
}

// Multiplication table of the symmetric group on three letters, built from
// permutation composition.
Table s3_table() {
  std::vector<std::array<int, 3>> elems;
  std::array<int, 3> p{0, 1, 2};
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& x) {
    return static_cast<int>(std::find(elems.begin(), elems.end(), x) - elems.begin());
  };
  Table t(6, std::vector<Element>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> prod{};
      for (int k = 0; k < 3; ++k) prod[k] = elems[i][elems[j][k]];
      t[i][j] = index_of(prod);
    }
  return t;
}

Table cyclic_table(int n) {
  Table t(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::vector<Quandle> sample_quandles() {
  std::vector<Quandle> qs;
  for (int n : {1, 2, 3, 4, 5, 6, 7, 10}) qs.push_back(Quandle::dihedral(n));
  qs.push_back(Quandle::trivial(4));
  qs.push_back(Quandle::alexander(5, 2));
  qs.push_back(Quandle::alexander(7, 3));
  qs.push_back(Quandle::conjugation(s3_table()));
  qs.push_back(reference_quandle("four-element"));
  qs.push_back(reference_quandle("five-element"));
  qs.push_back(reference_quandle("six-element"));
  return qs;
}

}  // namespace

TEST_CASE("dihedral-3 operation table matches the standard presentation") {
  Quandle q = Quandle::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(q == Quandle::dihedral(3));
}

TEST_CASE("one-element table is a quandle") {
  Quandle q = Quandle::from_table({{0}});
  CHECK(q.size() == 1);
  CHECK(q.op(0, 0) == 0);
}

TEST_CASE("right-invertibility failures are reported with the column") {
  try {
    Quandle::from_table({{0, 0}, {0, 1}});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == 2);
    CHECK(e.witness()[2] == 0);  // column 0
  }
}

TEST_CASE("idempotence failures are reported first") {
  try {
    Quandle::from_table({{1, 0}, {1, 0}});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == 1);
  }
}

TEST_CASE("out-of-range entries and bad shapes are rejected") {
  CHECK_THROWS_AS(Quandle::from_table({{0, 3}, {1, 1}}), Error);
  CHECK_THROWS_AS(Quandle::from_table({}), Error);
  CHECK_THROWS_AS(Quandle::from_table({{0, 1}}), Error);
}

TEST_CASE("trivial quandle") {
  CHECK(Quandle::trivial(2).table() == Table{{0, 0}, {1, 1}});
  CHECK(Quandle::trivial(1).table() == Table{{0}});
  Quandle q = Quandle::trivial(3);
  for (Element x = 0; x < 3; ++x) {
    InnerMap m = q.inner_map(x);
    CHECK(m.perm.is_identity());
    CHECK(m.order == 1);
  }
  CHECK_THROWS_AS(Quandle::trivial(0), Error);
}

TEST_CASE("dihedral quandles validate for a range of orders") {
  CHECK(Quandle::dihedral(1).table() == Table{{0}});
  for (int n = 1; n <= 12; ++n) {
    Quandle q = Quandle::dihedral(n);
    CHECK(axioms_hold(q.table()));
    CHECK_NOTHROW(Quandle::from_table(q.table()));
  }
}

TEST_CASE("alexander quandles") {
  CHECK(Quandle::alexander(3, 2) == Quandle::dihedral(3));
  CHECK_NOTHROW(Quandle::from_table(Quandle::alexander(5, 2).table()));
  try {
    Quandle::alexander(4, 2);
    FAIL("expected NonUnitParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitParameter);
  }
  // Negative t is reduced mod n.
  CHECK(Quandle::alexander(5, -1) == Quandle::alexander(5, 4));
}

TEST_CASE("alexander with t = n-1 is the dihedral quandle") {
  for (int n = 1; n <= 12; ++n)
    CHECK(Quandle::alexander(n, n - 1) == Quandle::dihedral(n));
}

TEST_CASE("conjugation quandle of abelian groups is trivial") {
  CHECK(Quandle::conjugation(cyclic_table(2)) == Quandle::trivial(2));
  CHECK(Quandle::conjugation(cyclic_table(6)) == Quandle::trivial(6));
}

TEST_CASE("conjugation quandle of S3") {
  Quandle q = Quandle::conjugation(s3_table());
  CHECK(q.size() == 6);
  CHECK(axioms_hold(q.table()));
  CHECK(!(q == Quandle::trivial(6)));
}

TEST_CASE("conjugation rejects non-groups") {
  Table bad = cyclic_table(3);
  bad[1][2] = 1;
  try {
    Quandle::conjugation(bad);
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
}

TEST_CASE("inner map of dihedral-3 at 0 swaps the other two elements") {
  InnerMap m = Quandle::dihedral(3).inner_map(0);
  CHECK(m.perm.images() == std::vector<Element>{0, 2, 1});
  CHECK(m.order == 2);
  CHECK(Quandle::dihedral(5).inner_map(0).order == 2);
}

TEST_CASE("action equivalence detects equal columns") {
  Quandle q5 = reference_quandle("five-element");
  CHECK(q5.action_equivalent(0, 2));  // elements 1 and 3 in table labels
  CHECK(q5.action_equivalent(1, 3));  // elements 2 and 4
  CHECK(q5.action_equivalent(3, 4));
  CHECK(!q5.action_equivalent(0, 1));
  CHECK(q5.action_equivalent(1, 1));
  CHECK(!Quandle::dihedral(3).action_equivalent(0, 1));
}

TEST_CASE("axiom round trips and homomorphism properties") {
  for (const Quandle& q : sample_quandles()) {
    const int n = q.size();
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        CHECK(q.inv_op(q.op(a, b), b) == a);
        CHECK(q.op(q.inv_op(a, b), b) == a);
      }
    for (Element x = 0; x < n; ++x) {
      InnerMap m = q.inner_map(x);
      CHECK(m.perm(x) == x);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          CHECK(m.perm(q.op(a, b)) == q.op(m.perm(a), m.perm(b)));
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (q.action_equivalent(x, y))
          CHECK(q.inner_map(x).perm == q.inner_map(y).perm);
  }
}

TEST_CASE("validation agrees with the independent axiom check on random tables") {
  std::mt19937 rng(20240817);
  int accepted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Table t(n, std::vector<Element>(n));
    // Mix raw random tables with mutated valid quandles so both outcomes
    // appear.
    if (trial % 2 == 0) {
      for (auto& row : t)
        for (auto& v : row) v = static_cast<Element>(rng() % n);
    } else {
      t = (rng() % 2 ? Quandle::dihedral(n) : Quandle::trivial(n)).table();
      int mutations = static_cast<int>(rng() % 2);
      for (int m = 0; m < mutations; ++m)
        t[rng() % n][rng() % n] = static_cast<Element>(rng() % n);
    }
    bool expected = axioms_hold(t);
    bool got = true;
    try {
      Quandle::from_table(t);
    } catch (const Error&) {
      got = false;
    }
    CHECK(got == expected);
    accepted += got;
  }
  CHECK(accepted > 0);
}

TEST_CASE("permutation cycle structure and order") {
  Permutation p({1, 0, 2, 4, 3});
  CHECK(p.cycle_lengths() == std::vector<long>{1, 2, 2});
  CHECK(p.order() == 2);
  CHECK(p.inverse() == p);
  CHECK(Permutation::identity(4).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("table file parsing and formatting") {
  Quandle q = parse_quandle("# dihedral 3\n3\n1 3 2\n3 2 1\n2 1 3\n");
  CHECK(q == Quandle::dihedral(3));
  CHECK(parse_quandle(format_table(q)) == q);

  CHECK_THROWS_AS(parse_table(""), Error);
  CHECK_THROWS_AS(parse_table("2\n1 2\n"), Error);         // missing row
  CHECK_THROWS_AS(parse_table("2\n1 2\n2 x\n"), Error);    // bad entry
  CHECK_THROWS_AS(parse_table("2\n1 2 1\n2 1\n"), Error);  // extra entry
  try {
    parse_table("2\n1 3\n2 1\n");
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
}

TEST_CASE("labels default to 1..n") {
  Quandle q = Quandle::dihedral(3);
  CHECK(q.labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(q.label(2) == "3");
  q.set_labels({"a", "b", "c"});
  CHECK(q.label(0) == "a");
  CHECK_THROWS_AS(q.set_labels({"a"}), Error);
}

TEST_CASE("shipped quandle files match the embedded reference tables") {
  // data/quandles mirrors the reference quandles; keep them in sync.
  const char* files[] = {QAQ_DATA_DIR "/quandles/four_element.txt",
                         QAQ_DATA_DIR "/quandles/five_element.txt",
                         QAQ_DATA_DIR "/quandles/six_element.txt"};
  const char* ids[] = {"four-element", "five-element", "six-element"};
  for (int i = 0; i < 3; ++i) CHECK(load_quandle_file(files[i]) == reference_quandle(ids[i]));
}

TEST_CASE("builtin quandle specs") {
  CHECK(quandle_from_spec("dihedral:3") == Quandle::dihedral(3));
  CHECK(quandle_from_spec("trivial:4") == Quandle::trivial(4));
  CHECK(quandle_from_spec("alexander:5:2") == Quandle::alexander(5, 2));
  CHECK_THROWS_AS(quandle_from_spec("dihedral:x"), Error);
  CHECK_THROWS_AS(quandle_from_spec("/nonexistent/path"), Error);
}
