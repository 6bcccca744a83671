// Command line front end: validates quandles, computes coloring homsets,
// action quivers and action polynomials, and reproduces the bundled
// reference tables.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaq/corpus.hpp"
#include "qaq/homset.hpp"
#include "qaq/quiver.hpp"
#include "qaq/reference.hpp"

using namespace qaq;

namespace {

struct RunConfig {
  std::string command;
  std::string quandle_spec;
  std::string link;
  std::string links;           // table only
  std::string element = "all"; // 1-indexed or "all"
  std::string output = "-";
  std::string format = "text"; // text | csv | dot
  std::size_t cap = kDefaultCap;
  bool verbose = false;
};

std::size_t default_cap_from_env() {
  if (const char* env = std::getenv("QAQ_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

Diagram load_link(const std::string& source) {
  const auto& names = corpus_names();
  if (std::find(names.begin(), names.end(), source) != names.end())
    return load_corpus(source);
  return load_diagram_file(source);
}

// 1-indexed element or "all"; returns nullopt for "all".
std::optional<Element> parse_element(const std::string& text, const Quandle& q) {
  if (text == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    if (v < 1 || v > q.size())
      throw Error(ErrorKind::OutOfRange,
                  "element " + text + " out of range 1.." + std::to_string(q.size()));
    return static_cast<Element>(v - 1);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad element '" + text + "' (expected 1.." +
                                           std::to_string(q.size()) + " or 'all')");
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::ParseError, "bad element '" + text + "'");
  }
}

// Comma-separated corpus names; token A..B covers the inclusive range of
// primary (non-variant) corpus names.
std::vector<std::string> parse_link_list(const std::string& text) {
  std::vector<std::string> primary;
  for (const std::string& n : corpus_names())
    if (n.find("_v") == std::string::npos) primary.push_back(n);

  std::vector<std::string> result;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "all") {
      result.insert(result.end(), primary.begin(), primary.end());
      continue;
    }
    auto dots = token.find("..");
    if (dots == std::string::npos) {
      result.push_back(token);
      continue;
    }
    std::string from = token.substr(0, dots), to = token.substr(dots + 2);
    auto i = std::find(primary.begin(), primary.end(), from);
    auto j = std::find(primary.begin(), primary.end(), to);
    if (i == primary.end() || j == primary.end() || j < i)
      throw Error(ErrorKind::UnknownName, "bad link range '" + token + "'");
    result.insert(result.end(), i, j + 1);
  }
  if (result.empty()) throw Error(ErrorKind::UnknownName, "empty link list");
  return result;
}

void write_output(const RunConfig& config, const std::string& text) {
  if (config.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write to " + config.output);
  out << text;
}

int run(const RunConfig& config) {
  if (config.command == "report") {
    write_output(config, format_reference_report(run_reference_report()));
    return 0;
  }

  Quandle q = quandle_from_spec(config.quandle_spec);
  if (config.verbose)
    std::cerr << "quandle: n=" << q.size() << ", elements labeled 1.." << q.size()
              << " (acting elements are 1-indexed)\n";

  if (config.command == "validate") {
    std::ostringstream out;
    out << "valid quandle, n=" << q.size() << "\n";
    write_output(config, out.str());
    return 0;
  }

  if (config.command == "table") {
    auto links = parse_link_list(config.links);
    std::vector<Element> elements;
    if (auto e = parse_element(config.element, q)) {
      elements.push_back(*e);
    } else {
      for (Element x = 0; x < q.size(); ++x) elements.push_back(x);
    }
    // Cells are computed concurrently and emitted in fixed order.
    struct Cell {
      std::string polynomial;
      std::size_t counting;
    };
    std::vector<std::future<std::vector<Cell>>> futures;
    for (const std::string& name : links) {
      futures.push_back(std::async(std::launch::async, [&, name] {
        Homset h = enumerate_colorings(load_link(name), q, config.cap);
        std::vector<Cell> cells;
        for (Element x : elements)
          cells.push_back({action_polynomial(h, x).str(), h.size()});
        return cells;
      }));
    }
    std::ostringstream out;
    bool csv = config.format == "csv";
    if (csv) out << "link,quandle,element,polynomial,counting\n";
    for (std::size_t i = 0; i < links.size(); ++i) {
      auto cells = futures[i].get();
      for (std::size_t k = 0; k < elements.size(); ++k) {
        if (csv)
          out << links[i] << ',' << config.quandle_spec << ',' << q.label(elements[k])
              << ',' << cells[k].polynomial << ',' << cells[k].counting << "\n";
        else
          out << links[i] << " x=" << q.label(elements[k]) << ": " << cells[k].polynomial
              << " (counting " << cells[k].counting << ")\n";
      }
    }
    write_output(config, out.str());
    return 0;
  }

  Diagram d = load_link(config.link);
  std::ostringstream out;

  if (config.command == "colorings") {
    Homset h = enumerate_colorings(d, q, config.cap);
    for (const Coloring& c : h.colorings()) out << format_coloring(q, c) << "\n";
  } else if (config.command == "count") {
    out << counting_invariant(d, q, config.cap) << "\n";
  } else if (config.command == "quiver") {
    Homset h = enumerate_colorings(d, q, config.cap);
    std::vector<Element> labels;
    if (auto e = parse_element(config.element, q)) {
      labels.push_back(*e);
    } else {
      for (Element x = 0; x < q.size(); ++x) labels.push_back(x);
    }
    out << export_dot(action_quiver(h, labels));
  } else if (config.command == "poly") {
    Homset h = enumerate_colorings(d, q, config.cap);
    bool csv = config.format == "csv";
    if (csv) out << "element,polynomial\n";
    if (auto e = parse_element(config.element, q)) {
      if (csv)
        out << q.label(*e) << ',' << action_polynomial(h, *e).str() << "\n";
      else
        out << action_polynomial(h, *e).str() << "\n";
    } else {
      for (Element x = 0; x < q.size(); ++x) {
        if (csv)
          out << q.label(x) << ',' << action_polynomial(h, x).str() << "\n";
        else
          out << "x=" << q.label(x) << ": " << action_polynomial(h, x).str() << "\n";
      }
    }
  }
  write_output(config, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  config.cap = default_cap_from_env();

  CLI::App app{"quandle coloring homsets, action quivers, and action polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-v,--verbose", config.verbose, "print extra context to stderr");

  auto add_common = [&](CLI::App* cmd, bool needs_link) {
    cmd->add_option("-q,--quandle", config.quandle_spec,
                    "quandle file or builtin spec (dihedral:n, trivial:n, "
                    "alexander:n:t, conj:<group file>)")
        ->required();
    if (needs_link)
      cmd->add_option("-l,--link", config.link, "diagram file or corpus name")->required();
    cmd->add_option("-o,--output", config.output, "output path ('-' for stdout)");
    cmd->add_option("--cap", config.cap, "maximum homset size");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the quandle axioms");
  validate->add_option("-q,--quandle", config.quandle_spec, "quandle file or builtin spec")
      ->required();
  validate->add_option("-o,--output", config.output, "output path");

  CLI::App* colorings = app.add_subcommand("colorings", "list all colorings");
  add_common(colorings, true);

  CLI::App* count = app.add_subcommand("count", "counting invariant");
  add_common(count, true);

  CLI::App* quiver = app.add_subcommand("quiver", "action quiver as DOT");
  add_common(quiver, true);
  quiver->add_option("-e,--element", config.element, "acting element (1-indexed) or 'all'");
  quiver->add_option("-f,--format", config.format, "dot")
      ->check(CLI::IsMember({"dot"}));

  CLI::App* poly = app.add_subcommand("poly", "action polynomial");
  add_common(poly, true);
  poly->add_option("-e,--element", config.element, "acting element (1-indexed) or 'all'")
      ->required();
  poly->add_option("-f,--format", config.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* table = app.add_subcommand("table", "batch polynomials for several links");
  table->add_option("-q,--quandle", config.quandle_spec, "quandle file or builtin spec")
      ->required();
  table->add_option("--links", config.links,
                    "comma-separated corpus names; A..B ranges; 'all'")
      ->required();
  table->add_option("-e,--element", config.element, "acting element (1-indexed) or 'all'");
  table->add_option("-f,--format", config.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  table->add_option("-o,--output", config.output, "output path");
  table->add_option("--cap", config.cap, "maximum homset size");

  CLI::App* report =
      app.add_subcommand("report", "compare computed values with the bundled reference tables");
  report->add_option("-o,--output", config.output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (quiver->parsed()) config.format = "dot";
  for (CLI::App* cmd : {validate, colorings, count, quiver, poly, table, report})
    if (cmd->parsed()) config.command = cmd->get_name();

  try {
    return run(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.cls());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
