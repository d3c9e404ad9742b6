// Exercises the CLI binary end to end: happy paths over the four named
// graphs, documented error exits, and output-format switches.
// argv[1] is the binary path.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;
std::string binary;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run(const std::string& args) {
  int rc = std::system((binary + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

void expect_exit(const std::string& args, int expected) {
  int got = run(args);
  if (got != expected) {
    std::printf("FAIL: '%s' exited %d, expected %d\n", args.c_str(), got,
                expected);
    ++failures;
  }
}

void expect_contains(const std::string& args, const std::string& needle) {
  const std::string path = "cli_tmp_out";
  int rc = std::system(
      (binary + " " + args + " --out " + path + " 2>/dev/null").c_str());
  std::string body = slurp(path);
  if (WEXITSTATUS(rc) != 0 || body.find(needle) == std::string::npos) {
    std::printf("FAIL: '%s' output missing '%s'\n", args.c_str(),
                needle.c_str());
    ++failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  binary = (argc > 1) ? argv[1] : "./treenv";

  const std::vector<std::string> sources = {
      "--name complete --params 4",
      "--name complete_bipartite --params 3",
      "--name petersen",
      "--name circular_ladder --params 24",
  };
  for (const auto& source : sources) {
    expect_exit("spectrum " + source, 0);
    expect_exit("diffraction " + source, 0);
    expect_exit("classify " + source, 0);
    expect_exit("nv " + source + " --rmax 10 --oracle", 0);
    expect_exit("scan " + source + " --rmax 1000", 0);
    expect_exit("cover-check " + source + " --rmax 6", 0);
  }
  {
    std::ofstream k4("cli_tmp_k4.txt");
    k4 << "# tetrahedron\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  }
  expect_exit("spectrum --graph cli_tmp_k4.txt", 0);
  expect_exit("nv --graph cli_tmp_k4.txt --rmax 5 --oracle", 0);
  expect_contains("classify --graph cli_tmp_k4.txt", "\"stealthy\": true");
  std::remove("cli_tmp_k4.txt");

  expect_exit("nv --name petersen --rmax 8 --oracle --root 7", 0);
  expect_exit("spectrum --name circular_ladder --params 6 --root 3", 0);
  expect_exit("nv --poisson --q 2 --rmax 5", 0);
  expect_exit("nv --poisson --q 3 --rmax 5", 0);
  expect_exit("diffraction --poisson --q 2", 0);
  expect_exit("classify --poisson --q 2", 0);
  expect_exit("atoms --q 2 --bmax 12", 0);
  expect_exit("atoms --q 3 --bmax 12 --format json", 0);
  expect_exit("plancherel-check --q 2 --rmax 5", 0);
  expect_exit("plancherel-check --q 3 --rmax 5", 0);

  // documented error paths: exit 2 with a message on stderr
  expect_exit("spectrum --name complete --params 3", 2);
  expect_exit("spectrum --name no_such_graph", 2);
  expect_exit("spectrum --graph /nonexistent/file", 2);
  expect_exit("nv --rmax 3", 2);
  expect_exit("nv --poisson --q 2 --rmax 3 --oracle", 2);
  expect_exit("scan --name petersen --rmax 100 --mod 4 --res 7", 2);

  expect_contains("nv --name complete --params 4 --rmax 3 --oracle",
                  "r,volume,nv,nv_star,ratio_star,oracle_nv");
  expect_contains("nv --name complete --params 4 --rmax 3 --oracle",
                  "# max_discrepancy");
  expect_contains("atoms --q 2 --bmax 12", "2,3,4,2,");
  expect_contains("classify --name complete_bipartite --params 3",
                  "\"stealthy\": true");
  expect_contains("classify --name circular_ladder --params 24",
                  "\"hyperfluctuating\": true");
  expect_contains("spectrum --name petersen --format csv",
                  "eigenvalue,multiplicity,branch,value,mass");
  expect_contains("scan --name complete --params 4 --rmax 1000 --format json",
                  "\"min_ratio\"");
  expect_contains("nv --poisson --q 2 --rmax 2 --format json", "\"rows\"");
  expect_exit("spectrum --name petersen --show-config", 0);

  std::remove("cli_tmp_out");
  if (failures > 0) {
    std::printf("%d CLI check(s) failed\n", failures);
    return 1;
  }
  std::printf("all CLI checks passed\n");
  return 0;
}
