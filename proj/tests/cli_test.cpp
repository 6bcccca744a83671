#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qaq/reference.hpp"

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(QAQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/qaq_cli_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("poly for the trefoil with dihedral-3") {
  auto r = run_cli("poly --quandle dihedral:3 --link 3_1 --element 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "8u^2 + u\n");
}

TEST_CASE("count with the trivial quandle") {
  auto r = run_cli("count --quandle trivial:3 --link 3_1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");
}

TEST_CASE("validate builtin and file quandles") {
  CHECK(run_cli("validate --quandle dihedral:5").output == "valid quandle, n=5\n");
  std::string good = write_temp("q3.txt", "3\n1 3 2\n3 2 1\n2 1 3\n");
  CHECK(run_cli("validate --quandle " + good).exit_code == 0);
  std::string bad = write_temp("bad.txt", "2\n1 1\n1 2\n");
  CHECK(run_cli("validate --quandle " + bad).exit_code == 1);
}

TEST_CASE("colorings are emitted in canonical order") {
  auto r = run_cli("colorings --quandle trivial:2 --link L2a1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1,1\n1,2\n2,1\n2,2\n");
}

TEST_CASE("poly all elements") {
  auto r = run_cli("poly --quandle dihedral:3 --link 3_1 --element all");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x=1: 8u^2 + u\nx=2: 8u^2 + u\nx=3: 8u^2 + u\n");
  auto csv = run_cli("poly --quandle dihedral:3 --link 3_1 --element all --format csv");
  CHECK(csv.output ==
        "element,polynomial\n1,8u^2 + u\n2,8u^2 + u\n3,8u^2 + u\n");
}

TEST_CASE("quiver emits DOT") {
  auto r = run_cli("quiver --quandle trivial:2 --link 3_1 --element all");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "digraph action_quiver {\n"
        "  0;\n"
        "  1;\n"
        "  0 -> 0 [label=\"1\"];\n"
        "  1 -> 1 [label=\"1\"];\n"
        "  0 -> 0 [label=\"2\"];\n"
        "  1 -> 1 [label=\"2\"];\n"
        "}\n");
}

TEST_CASE("table over a corpus range in CSV") {
  auto r = run_cli("table --quandle dihedral:3 --links L2a1..L4a1 --element 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "link,quandle,element,polynomial,counting\n"
        "L2a1,dihedral:3,1,2u^2 + u,3\n"
        "L4a1,dihedral:3,1,2u^2 + u,3\n");
}

TEST_CASE("identical runs give byte-identical output") {
  const std::string args = "table --quandle dihedral:4 --links all --element all --format csv";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(!a.output.empty());
}

TEST_CASE("diagram files load in any supported format") {
  std::string native = write_temp("tref.txt", "arcs 3\n+1 2 1 3\n+1 3 2 1\n+1 1 3 2\n");
  CHECK(run_cli("count --quandle dihedral:3 --link " + native).output == "9\n");
  std::string pd = write_temp("tref_pd.txt", "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\n");
  CHECK(run_cli("count --quandle dihedral:3 --link " + pd).output == "9\n");
  std::string gauss = write_temp("tref_gauss.txt", "O1+ U2+ O3+ U1+ O2+ U3+\n");
  CHECK(run_cli("count --quandle dihedral:3 --link " + gauss).output == "9\n");
}

TEST_CASE("output can be written to a file") {
  std::string path = "/tmp/qaq_cli_test_out.txt";
  std::remove(path.c_str());
  auto r = run_cli("count --quandle dihedral:3 --link 3_1 --output " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "9\n");
}

TEST_CASE("exit codes distinguish input errors from limits") {
  CHECK(run_cli("count --quandle dihedral:3 --link nosuch_link").exit_code == 1);
  CHECK(run_cli("count --quandle dihedral:0 --link 3_1").exit_code == 1);
  CHECK(run_cli("poly --quandle dihedral:3 --link 3_1 --element 7").exit_code == 1);
  CHECK(run_cli("count --quandle dihedral:4 --link L6a4 --cap 10").exit_code == 2);
}

TEST_CASE("table output over the reference quandle matches the embedded table") {
  // Golden pin: the CLI's CSV rows for the five-element quandle file must
  // match the embedded reference cells (all columns except the counting,
  // which the reference table does not assert).
  std::string quandle_text;
  std::vector<std::pair<std::string, std::string>> expected[3];  // per element
  for (const auto& table : qaq::reference_tables()) {
    if (table.id != "five-element") continue;
    quandle_text = table.quandle_text;
    for (const auto& cell : table.cells)
      expected[cell.element].push_back({cell.link, cell.polynomial});
  }
  std::string qfile = write_temp("five.txt", quandle_text);
  for (int element : {1, 2}) {
    auto r = run_cli("table --quandle " + qfile + " --links L2a1..L7n2 --element " +
                     std::to_string(element) + " --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream got(r.output);
    std::string line;
    REQUIRE(std::getline(got, line));
    CHECK(line == "link,quandle,element,polynomial,counting");
    for (const auto& [link, poly] : expected[element]) {
      REQUIRE(std::getline(got, line));
      CHECK(line.substr(0, line.rfind(',')) ==
            link + "," + qfile + "," + std::to_string(element) + "," + poly);
    }
    CHECK(!std::getline(got, line));
  }
}

TEST_CASE("cap can come from the environment") {
  std::string cmd = std::string("QAQ_CAP=10 ") + QAQ_CLI_PATH +
                    " count --quandle dihedral:4 --link L6a4 2>/dev/null";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("report runs and prints a summary") {
  auto r = run_cli("report");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("report:") != std::string::npos);
  CHECK(r.output.find("unresolved") != std::string::npos);
}
