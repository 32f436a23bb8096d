#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "l3col/families.hpp"
#include "l3col/io.hpp"

using namespace l3col;
namespace fam = l3col::families;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "l3col");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string witness_section(const std::string& out) {
  const auto at = out.find("witness:\n");
  return at == std::string::npos ? "" : out.substr(at + 9);
}

}  // namespace

TEST_CASE("solve exit codes and witness") {
  write_file("cli_k4.txt", format_instance(fam::complete(4), full_lists(4)));
  const Run k4 = run({"solve", "cli_k4.txt"});
  CHECK(k4.code == 1);
  CHECK(k4.out.find("answer: no") != std::string::npos);
  CHECK(k4.out.find("route: c5-free") != std::string::npos);

  write_file("cli_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n0: 2\n");
  const Run c5 = run({"solve", "cli_c5.txt"});
  CHECK(c5.code == 0);
  const Instance inst = read_instance("cli_c5.txt");
  const std::string w = witness_section(c5.out);
  std::istringstream ws(w);
  Colouring c(5, 0);
  int v = 0, col = 0;
  int lines = 0;
  while (ws >> v >> col) {
    CHECK(v == lines);
    c[v] = col;
    ++lines;
  }
  CHECK(lines == 5);
  CHECK(respects(c, inst.graph, inst.lists));

  const Run j = run({"solve", "cli_c5.txt", "--json", "--jobs", "2"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"answer\":\"yes\"") != std::string::npos);
}

TEST_CASE("classify Petersen") {
  write_file("cli_petersen.txt", format_instance(fam::petersen(), full_lists(10)));
  const Run r = run({"classify", "cli_petersen.txt"});
  CHECK(r.code == 0);
  for (const char* part : {"diameter=2", "C3-free", "C4-free", "C7-free", "K4=absent"})
    CHECK(r.out.find(part) != std::string::npos);
  CHECK(r.out.find("C5-free") == std::string::npos);
  CHECK(r.out.find("C6-free") == std::string::npos);
}

TEST_CASE("propagate with a trace") {
  write_file("cli_path.txt", "3 2\n0 1\n1 2\n0: 1\n");
  const Run r = run({"propagate", "cli_path.txt", "--rules=3", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out.find("R3 site=0,1 vertex=1 123->23") != std::string::npos);
  CHECK(run({"propagate", "cli_path.txt", "--rules=9"}).code == 2);
}

TEST_CASE("oracle") {
  write_file("cli_k4b.txt", format_instance(fam::complete(4), full_lists(4)));
  CHECK(run({"oracle", "cli_k4b.txt"}).code == 1);
  write_file("cli_c5b.txt", format_instance(fam::cycle(5), full_lists(5)));
  CHECK(run({"oracle", "cli_c5b.txt"}).code == 0);
}

TEST_CASE("gadget emits the 10-vertex graph") {
  write_file("cli_f.cnf", "1 2 3 0\n");
  const Run r = run({"gadget", "cli_f.cnf", "-p", "0", "--roles", "cli_f.roles"});
  CHECK(r.code == 0);
  const Instance g = parse_instance(r.out);
  CHECK(g.graph.order() == 10);
  CHECK(g.graph.edge_count() == 15);
  CHECK(read_file("cli_f.roles").rfind("0 z\n", 0) == 0);
  const Run t = run({"gadget", "cli_f.cnf", "-t", "6"});
  CHECK(parse_instance(t.out).graph.order() == 10 + 3 * 6);
}

TEST_CASE("check-gadget") {
  write_file("cli_g.cnf", "1 2 3 0\n-1 2 -3 0\n");
  const Run ok = run({"check-gadget", "cli_g.cnf", "-t", "6"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verify: pass") != std::string::npos);
  CHECK(ok.out.find("equivalence: holds") != std::string::npos);
  write_file("cli_h.cnf", "1 2 3 0 1 2 -3 0\n");
  const Run bad = run({"check-gadget", "cli_h.cnf", "-p", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verify: fail") != std::string::npos);
}

TEST_CASE("gen writes an in-class instance") {
  const Run r = run({"gen", "--class", "c4c8", "--n", "10", "--seed", "7"});
  CHECK(r.code == 0);
  const Instance inst = parse_instance(r.out);
  CHECK(inst.graph.order() == 10);
  write_file("cli_gen.txt", r.out);
  const Run c = run({"classify", "cli_gen.txt"});
  CHECK(c.out.find("C4-free") != std::string::npos);
  CHECK(c.out.find("C8-free") != std::string::npos);
  CHECK(c.out.rfind("diameter=2", 0) == 0);
}

TEST_CASE("errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run flag = run({"solve", "--no-such-flag", "x"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("Usage") != std::string::npos);
  CHECK(run({"solve", "/nonexistent/file"}).code == 2);
  write_file("cli_bad.txt", "3 1\n0 3\n");
  const Run bad = run({"solve", "cli_bad.txt"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"gen", "--class", "c3free", "--n", "5", "--seed", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sample inputs") {
  const std::string dir = L3COL_TEST_DATA;
  const Run c5 = run({"solve", dir + "/c5.txt"});
  CHECK(c5.code == 0);
  CHECK(c5.out.find("route: c6-free") != std::string::npos);
  CHECK(witness_section(c5.out).rfind("0 1\n", 0) == 0);

  const Run p = run({"solve", dir + "/petersen.txt"});
  CHECK(p.code == 0);
  CHECK(run({"classify", dir + "/petersen.txt"}).out.find("C3-free, C4-free") != std::string::npos);

  const Run c = run({"solve", dir + "/c4c8_12.txt", "--stage1", "all"});
  CHECK(c.out.find("route: c4c8-free") != std::string::npos);
  CHECK(c.code == run({"oracle", dir + "/c4c8_12.txt"}).code);
  CHECK(c.code == run({"solve", dir + "/c4c8_12.txt"}).code);

  const Run g6 = run({"check-gadget", dir + "/nae.cnf", "-t", "6"});
  CHECK(g6.code == 0);
  CHECK(g6.out.find("equivalence: holds") != std::string::npos);
  const Run g8 = run({"check-gadget", dir + "/nae.cnf", "-t", "8"});
  CHECK(g8.code == 0);
  CHECK(g8.out.find("verify: pass") != std::string::npos);
  CHECK(g8.out.find("equivalence: skipped") != std::string::npos);
}
