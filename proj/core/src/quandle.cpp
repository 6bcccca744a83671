#include "qaq/quandle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qaq {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (Element v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw Error(ErrorKind::OutOfRange, "image vector is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Element> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

std::vector<long> Permutation::cycle_lengths() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<long> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

long Permutation::order() const {
  long ord = 1;
  for (long len : cycle_lengths()) ord = std::lcm(ord, len);
  return ord;
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

std::vector<Element> flatten_checked(const std::vector<std::vector<Element>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0)
    throw Error(ErrorKind::OutOfRange, "operation table is empty");
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::OutOfRange,
                  "operation table is not square at row " + std::to_string(a + 1));
    for (int b = 0; b < n; ++b) {
      Element v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::OutOfRange,
                    "table entry out of range at (" + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + ")");
      flat.push_back(v);
    }
  }
  return flat;
}

}  // namespace

Quandle Quandle::from_table(const std::vector<std::vector<Element>>& table) {
  Quandle q;
  q.table_ = flatten_checked(table);
  const int n = static_cast<int>(table.size());
  q.n_ = n;

  // Axiom (i): a |> a = a.
  for (int a = 0; a < n; ++a)
    if (q.op(a, a) != a)
      throw AxiomViolation(1, {a, a, 0},
                           "idempotence fails at element " + std::to_string(a + 1));

  // Axiom (ii): each column a -> a |> b is a permutation.
  q.inv_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int b = 0; b < n; ++b) {
    std::vector<int> hit(n, -1);
    for (int a = 0; a < n; ++a) {
      Element v = q.op(a, b);
      if (hit[v] >= 0)
        throw AxiomViolation(2, {hit[v], a, b},
                             "right-invertibility fails: column " + std::to_string(b + 1) +
                                 " repeats value at rows " + std::to_string(hit[v] + 1) +
                                 " and " + std::to_string(a + 1));
      hit[v] = a;
      q.inv_[v * n + b] = a;
    }
  }

  // Axiom (iii): (a |> b) |> c = (a |> c) |> (b |> c).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c)))
          throw AxiomViolation(3, {a, b, c},
                               "self-distributivity fails at (" + std::to_string(a + 1) +
                                   "," + std::to_string(b + 1) + "," +
                                   std::to_string(c + 1) + ")");

  q.labels_ = default_labels(n);
  return q;
}

Quandle Quandle::trivial(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "quandle size must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a;
  return from_table(t);
}

Quandle Quandle::dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "quandle size must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
  return from_table(t);
}

Quandle Quandle::alexander(int n, long t) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "quandle size must be positive");
  long tm = ((t % n) + n) % n;
  if (std::gcd(tm, static_cast<long>(n)) != 1)
    throw Error(ErrorKind::NonUnitParameter,
                "t = " + std::to_string(t) + " is not a unit mod " + std::to_string(n));
  long s = ((1 - tm) % n + n) % n;
  std::vector<std::vector<Element>> tab(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      tab[a][b] = static_cast<Element>((tm * a + s * b) % n);
  return from_table(tab);
}

Quandle Quandle::conjugation(const std::vector<std::vector<Element>>& group_table) {
  std::vector<Element> m = flatten_checked(group_table);
  const int n = static_cast<int>(group_table.size());
  auto mul = [&](int a, int b) { return m[a * n + b]; };

  // Identity element.
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (mul(c, a) != a || mul(a, c) != a) { ok = false; break; }
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorKind::NotAGroup, "no identity element");

  // Two-sided inverses.
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == e && mul(b, a) == e) { inv[a] = b; break; }
    if (inv[a] < 0)
      throw Error(ErrorKind::NotAGroup,
                  "element " + std::to_string(a + 1) + " has no inverse");
  }

  // Associativity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::NotAGroup,
                      "associativity fails at (" + std::to_string(a + 1) + "," +
                          std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");

  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = mul(inv[b], mul(a, b));
  return from_table(t);
}

InnerMap Quandle::inner_map(Element x) const {
  std::vector<Element> images(n_);
  for (int a = 0; a < n_; ++a) images[a] = op(a, x);
  Permutation p(std::move(images));
  long ord = p.order();
  return InnerMap{x, std::move(p), ord};
}

bool Quandle::action_equivalent(Element x, Element y) const {
  for (int a = 0; a < n_; ++a)
    if (op(a, x) != op(a, y)) return false;
  return true;
}

std::vector<std::vector<Element>> Quandle::table() const {
  std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = op(a, b);
  return t;
}

void Quandle::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw Error(ErrorKind::OutOfRange, "label count does not match quandle size");
  labels_ = std::move(labels);
}

std::vector<std::vector<Element>> parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "empty table file");

  std::istringstream first(rows[0]);
  long n = 0;
  if (!(first >> n) || n < 1)
    throw Error(ErrorKind::ParseError, "expected positive element count on first line");
  std::string rest;
  if (first >> rest)
    throw Error(ErrorKind::ParseError, "unexpected text after element count");
  if (static_cast<long>(rows.size()) != n + 1)
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(n) + " table rows, found " +
                    std::to_string(rows.size() - 1));

  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (long a = 0; a < n; ++a) {
    std::istringstream row(rows[a + 1]);
    for (long b = 0; b < n; ++b) {
      long v;
      if (!(row >> v))
        throw Error(ErrorKind::ParseError, "bad entry in table row " + std::to_string(a + 1));
      if (v < 1 || v > n)
        throw Error(ErrorKind::OutOfRange,
                    "entry " + std::to_string(v) + " out of range 1.." + std::to_string(n) +
                        " in row " + std::to_string(a + 1));
      table[a][b] = static_cast<Element>(v - 1);
    }
    std::string extra;
    if (row >> extra)
      throw Error(ErrorKind::ParseError, "too many entries in table row " + std::to_string(a + 1));
  }
  return table;
}

Quandle parse_quandle(std::string_view text) { return Quandle::from_table(parse_table(text)); }

std::string format_table(const Quandle& q) {
  std::ostringstream out;
  out << q.size() << "\n";
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) {
      if (b) out << ' ';
      out << q.op(a, b) + 1;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Quandle load_quandle_file(const std::string& path) { return parse_quandle(read_file(path)); }

Quandle quandle_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string tail = spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad number '" + s + "' in quandle spec: " + spec);
      }
    };
    if (head == "dihedral") return Quandle::dihedral(static_cast<int>(parse_int(tail)));
    if (head == "trivial") return Quandle::trivial(static_cast<int>(parse_int(tail)));
    if (head == "alexander") {
      auto c2 = tail.find(':');
      if (c2 == std::string::npos)
        throw Error(ErrorKind::ParseError, "alexander spec needs n and t: " + spec);
      return Quandle::alexander(static_cast<int>(parse_int(tail.substr(0, c2))),
                                parse_int(tail.substr(c2 + 1)));
    }
    if (head == "conj")
      return Quandle::conjugation(parse_table(read_file(tail)));
    // Fall through: treat as a file path (e.g. Windows-style or odd names).
  }
  return load_quandle_file(spec);
}

}  // namespace qaq
