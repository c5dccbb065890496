#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult res;
  std::string cmd = std::string(BCFW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  res.status = pclose(pipe);
  return res;
}

}  // namespace

TEST_CASE("enumerate is deterministic and counts match") {
  RunResult a = run("enumerate --n 8 --k 2");
  RunResult b = run("enumerate --n 8 --k 2");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  int lines = 0;
  for (char c : a.out)
    if (c == '\n') ++lines;
  CHECK(lines == 20);
}

TEST_CASE("convert to two-line permutation") {
  RunResult r = run("convert --to perm --diagram 'n=14; 1-11, 3-6, 8-10' --format text");
  CHECK(r.status == 0);
  CHECK(r.out.find("2 11 4 6 5 7 1 9 10 12 3 14 13 8") != std::string::npos);
}

TEST_CASE("sample is seed deterministic") {
  RunResult a = run("sample --diagram 'n=8; 1-6, 2-6, 4-6' --seed 7");
  RunResult b = run("sample --diagram 'n=8; 1-6, 2-6, 4-6' --seed 7");
  RunResult c = run("sample --diagram 'n=8; 1-6, 2-6, 4-6' --seed 8");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("separate prints the functionary with predicted signs") {
  RunResult r = run("separate --a 'n=6; 1-3' --b 'n=6; 2-4' --verify --samples 2 --zs 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"sign_a\"") != std::string::npos);
  CHECK(r.out.find("\"verified\":true") != std::string::npos);
}

TEST_CASE("boundaries tables are emitted per diagram") {
  RunResult r = run("boundaries --n 6 --k 1");
  CHECK(r.status == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);  // three cells at (6,1)
  CHECK(r.out.find("S_dA") != std::string::npos);
  CHECK(r.out.find("paired") != std::string::npos);
}

TEST_CASE("verify exits zero on a clean configuration") {
  RunResult r = run("verify --n 6 --seed 1 --samples 2 --zs 2 --points 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"ok\":false") == std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
  RunResult r = run("enumerate --k 2");
  CHECK(r.status != 0);
}
