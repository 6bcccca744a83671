#include <algorithm>
#include <set>

#include "doctest.h"
#include "qaq/corpus.hpp"
#include "qaq/homset.hpp"
#include "qaq/reference.hpp"

using namespace qaq;

namespace {

Diagram unknot() { return parse_native("arcs 1\n"); }

bool is_monochromatic(const Coloring& c) {
  return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
}

}  // namespace

TEST_CASE("trefoil with dihedral-3 has nine colorings") {
  Homset h = enumerate_colorings(load_corpus("3_1"), Quandle::dihedral(3));
  CHECK(h.size() == 9);
  int mono = 0, rainbow = 0;
  for (const Coloring& c : h.colorings()) {
    std::set<Element> used(c.begin(), c.end());
    if (used.size() == 1) ++mono;
    if (used.size() == 3) ++rainbow;
  }
  CHECK(mono == 3);
  CHECK(rainbow == 6);
}

TEST_CASE("unknot colorings are the monochromatic ones") {
  for (int n : {1, 2, 5}) {
    Homset h = enumerate_colorings(unknot(), Quandle::trivial(n));
    CHECK(h.size() == static_cast<std::size_t>(n));
  }
  CHECK(enumerate_colorings(unknot(), Quandle::dihedral(7)).size() == 7);
}

TEST_CASE("hopf link agrees with the brute-force oracle") {
  Diagram hopf = load_corpus("L2a1");
  Quandle d3 = Quandle::dihedral(3);
  CHECK(enumerate_colorings(hopf, d3).colorings() ==
        brute_force_colorings(hopf, d3).colorings());
}

TEST_CASE("colorings are sorted, unique, and indexed") {
  Homset h = enumerate_colorings(load_corpus("3_1"), Quandle::dihedral(3));
  CHECK(std::is_sorted(h.colorings().begin(), h.colorings().end()));
  CHECK(std::adjacent_find(h.colorings().begin(), h.colorings().end()) ==
        h.colorings().end());
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(h.index_of(h[i]) == i);
  CHECK(!h.index_of(Coloring{0, 0, 1}).has_value());
}

TEST_CASE("brute force oracle is guarded") {
  Diagram big = load_corpus("L7a1");
  try {
    brute_force_colorings(big, Quandle::dihedral(30));
    FAIL("expected OracleTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleTooLarge);
  }
}

TEST_CASE("trivial quandles force constant colors per component") {
  CHECK(enumerate_colorings(load_corpus("3_1"), Quandle::trivial(3)).size() == 3);
  CHECK(enumerate_colorings(load_corpus("L2a1"), Quandle::trivial(3)).size() == 9);
  CHECK(enumerate_colorings(load_corpus("L6a4"), Quandle::trivial(2)).size() == 8);
  Homset h = enumerate_colorings(load_corpus("3_1"), Quandle::trivial(3));
  for (const Coloring& c : h.colorings()) CHECK(is_monochromatic(c));
}

TEST_CASE("a kinked unknot still has only monochromatic colorings") {
  // One crossing whose under-strand closes on itself: a single arc that is
  // simultaneously over, under-in, and under-out.
  Diagram kink = parse_native("arcs 1\n+1 1 1 1\n");
  CHECK(kink.components() == std::vector<std::vector<Arc>>{{1}});
  for (int n : {2, 3, 5}) {
    Homset h = enumerate_colorings(kink, Quandle::dihedral(n));
    CHECK(h.size() == static_cast<std::size_t>(n));
    CHECK(h.colorings() == brute_force_colorings(kink, Quandle::dihedral(n)).colorings());
  }
}

TEST_CASE("counting invariant values from the corpus") {
  Quandle q5 = reference_quandle("five-element");
  CHECK(counting_invariant(load_corpus("3_1"), Quandle::dihedral(3)) == 9);
  CHECK(counting_invariant(load_corpus("L2a1"), q5) == 13);
  CHECK(counting_invariant(load_corpus("L6a4"), q5) == 125);
  Quandle q4 = reference_quandle("four-element");
  for (const char* name : {"L4a1", "L5a1", "L6a1", "L6a5", "L6n1", "L7a1", "L7a2",
                           "L7a3", "L7a4", "L7a7", "L7n1", "L7n2"})
    CHECK(counting_invariant(load_corpus(name), q4) == 16);
}

TEST_CASE("cap limits the homset size") {
  try {
    enumerate_colorings(load_corpus("L6a4"), Quandle::dihedral(4), 10);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK(enumerate_colorings(load_corpus("L6a4"), Quandle::dihedral(4), 64).size() == 64);
}

TEST_CASE("act applies the inner map componentwise") {
  Quandle d3 = Quandle::dihedral(3);
  CHECK(act(d3, 0, {0, 1, 2}) == Coloring{0, 2, 1});
  CHECK(act(d3, 1, {1, 1, 1}) == Coloring{1, 1, 1});
  Quandle t4 = Quandle::trivial(4);
  CHECK(act(t4, 2, {0, 3, 1}) == Coloring{0, 3, 1});
}

TEST_CASE("loop lengths") {
  Quandle d3 = Quandle::dihedral(3);
  CHECK(loop_length(d3, 0, {0, 1, 2}) == 2);
  CHECK(loop_length(d3, 1, {1, 1, 1}) == 1);
  CHECK(loop_length(Quandle::trivial(5), 3, {0, 1, 2, 4}) == 1);
}

TEST_CASE("oracle equivalence across corpus and small quandles") {
  std::vector<Quandle> qs = {Quandle::trivial(2), Quandle::dihedral(3),
                             reference_quandle("four-element")};
  for (const auto& name : corpus_names()) {
    Diagram d = load_corpus(name);
    for (const Quandle& q : qs) {
      CAPTURE(name);
      CHECK(enumerate_colorings(d, q).colorings() ==
            brute_force_colorings(d, q).colorings());
    }
  }
}

TEST_CASE("the action permutes every homset") {
  for (const char* name : {"3_1", "L2a1", "L5a1", "L6a4"}) {
    for (const Quandle& q : {Quandle::dihedral(3), reference_quandle("five-element")}) {
      Homset h = enumerate_colorings(load_corpus(name), q);
      for (Element x = 0; x < q.size(); ++x) {
        std::set<std::size_t> images;
        for (const Coloring& c : h.colorings()) {
          auto idx = h.index_of(act(q, x, c));
          REQUIRE(idx.has_value());  // action validity
          images.insert(*idx);
        }
        CHECK(images.size() == h.size());  // injective, hence a permutation
      }
    }
  }
}

TEST_CASE("loop length divides the inner map order") {
  Quandle q5 = reference_quandle("five-element");
  for (const char* name : {"L2a1", "L4a1", "L6a5"}) {
    Homset h = enumerate_colorings(load_corpus(name), q5);
    for (Element x = 0; x < q5.size(); ++x) {
      long order = q5.inner_map(x).order;
      for (const Coloring& c : h.colorings()) CHECK(order % loop_length(q5, x, c) == 0);
    }
  }
}

TEST_CASE("monochromatic floor") {
  for (const auto& name : corpus_names()) {
    Diagram d = load_corpus(name);
    for (const Quandle& q : {Quandle::dihedral(3), Quandle::dihedral(4)}) {
      Homset h = enumerate_colorings(d, q);
      CHECK(h.size() >= static_cast<std::size_t>(q.size()));
      // The monochromatic colorings are always present.
      for (Element a = 0; a < q.size(); ++a)
        CHECK(h.index_of(Coloring(d.arc_count(), a)).has_value());
    }
  }
  CHECK(enumerate_colorings(unknot(), Quandle::dihedral(5)).size() == 5);
}

TEST_CASE("diagram invariance of the counting invariant") {
  for (const Quandle& q : {Quandle::dihedral(3), Quandle::dihedral(4),
                           reference_quandle("five-element")}) {
    for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
             {"3_1", "3_1_v2"},
             {"3_1", "3_1_v3"},
             {"L2a1", "L2a1_v2"},
             {"L2a1_v2", "L2a1_v3"},
             {"L5a1", "L5a1_v2"},
             {"L5a1", "L5a1_v3"}})
      CHECK(counting_invariant(load_corpus(a), q) == counting_invariant(load_corpus(b), q));
  }
}

TEST_CASE("coloring serialization uses 1-indexed labels") {
  Quandle d3 = Quandle::dihedral(3);
  CHECK(format_coloring(d3, {0, 1, 2}) == "1,2,3");
  CHECK(format_coloring(d3, {2, 2, 2}) == "3,3,3");
}
