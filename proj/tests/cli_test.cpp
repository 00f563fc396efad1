#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(BRAIDFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 256> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/braidforge_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("pinned command output") {
  const RunResult delta = run_cli("delta --n 3 --variant 1");
  CHECK(delta.exit_code == 0);
  CHECK(delta.output == "n=3\n1 2 1\n");

  const RunResult twist = run_cli("fulltwist --n 3 --variant D");
  CHECK(twist.exit_code == 0);
  CHECK(twist.output == "n=3\n1 2 1 2 1 2\n");

  const RunResult alpha = run_cli("expand-alpha --n 3 --i 1 --j 3");
  CHECK(alpha.output == "n=3\n2 1 1 -2\n");
}

TEST_CASE("equality of the two pure-braid full twist files") {
  const RunResult e_form = run_cli("fulltwist --n 4 --variant E");
  const RunResult f_form = run_cli("fulltwist --n 4 --variant F");
  const std::string a = temp_file("e.braid", e_form.output);
  const std::string b = temp_file("f.braid", f_form.output);
  const RunResult eq = run_cli("equal " + a + " " + b);
  CHECK(eq.exit_code == 0);
  CHECK(eq.output == "equal\n");
}

TEST_CASE("coset enumeration of the dicyclic stratum") {
  const RunResult r = run_cli("coset --family c-stratum --k 3 --i 1 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "order=12\n");
}

TEST_CASE("normalize and perm") {
  const std::string path = temp_file("w.braid", "n=3\n1 2 1\n");
  CHECK(run_cli("normalize " + path).output == "p=1; factors=\n");
  CHECK(run_cli("perm " + path).output == "3 2 1\n");
}

TEST_CASE("abelianize and eliminate") {
  const std::string path =
      temp_file("p.pres", "gens: a b c\nrel: a b c\nrel: a b a' b'\n");
  CHECK(run_cli("abelianize " + path).output == "free_rank=2; torsion=\n");
  const RunResult reduced = run_cli("eliminate --gen c --rel 1 " + path);
  CHECK(reduced.exit_code == 0);
  CHECK(reduced.output == "gens: a b\nrel: a b a' b'\n");
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("delta --n 4 --variant 2").exit_code == 0);  // success
  CHECK(run_cli("delta --n 1 --variant 2").exit_code == 1);  // domain error
  CHECK(run_cli("frobnicate").exit_code == 2);               // usage error
  CHECK(run_cli("delta --n 3 --variant nope").exit_code == 2);
  CHECK(run_cli("equal missing.braid also-missing.braid").exit_code == 1);
}

TEST_CASE("coset works from a presentation file with a subgroup") {
  const std::string path = temp_file(
      "s3.pres", "gens: a b\nrel: a a\nrel: b b\nrel: a b a b a b\n");
  CHECK(run_cli("coset " + path).output == "order=6\n");
  const RunResult sub = run_cli("coset --subgroup a --max 100 " + path);
  CHECK(sub.exit_code == 0);
  CHECK(sub.output == "index=3\n");
}

TEST_CASE("check-hom maps the braid group onto transpositions") {
  const std::string path = temp_file("artin.pres",
                                     "gens: s1 s2\nrel: s1 s2 s1 s2' s1' s2'\n");
  const RunResult good = run_cli("check-hom --sym 3 --images \"2 1 3,1 3 2\" " + path);
  CHECK(good.exit_code == 0);
  CHECK(good.output == "homomorphism\n");
  const RunResult bad = run_cli("check-hom --sym 3 --images \"2 1 3,2 1 3\" " + path);
  CHECK(bad.output == "homomorphism\n");  // both generators to the same transposition still works
  const RunResult off = run_cli("check-hom --sym 3 --images \"2 3 1,1 3 2\" " + path);
  CHECK(off.output == "not-a-homomorphism\n");
}

TEST_CASE("extract-braid consumes the trajectory format") {
  const std::string path = temp_file(
      "loop.csv",
      "k=2\n"
      "0.0, 1.0, 0.0, -1.0, 0.0\n"
      "0.25, 0.0, 1.0, 0.0, -1.0\n"
      "0.5, -1.0, 0.0, 1.0, 0.0\n"
      "0.75, 0.0, -1.0, 0.0, 1.0\n"
      "1.0, 1.0, 0.0, -1.0, 0.0\n");
  const RunResult r = run_cli("extract-braid " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "n=2\n1 1\n");
}
