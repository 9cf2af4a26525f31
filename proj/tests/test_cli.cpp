#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string command = std::string(METSTRUCT_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(METSTRUCT_SAMPLES) + "/" + name; }

}  // namespace

TEST(Cli, IsometryWithItselfIsTheIdentity) {
  const Outcome r = run("isometry " + sample("triangle.json") + " " + sample("triangle.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0 1 2\n");
}

TEST(Cli, IsometryWitnessAndOracle) {
  const std::string args = sample("triangle.json") + " " + sample("triangle_relabelled.json");
  EXPECT_EQ(run("isometry " + args).out, "2 0 1\n");
  EXPECT_EQ(run("isometry " + args + " --oracle").out, "2 0 1\n");
  EXPECT_EQ(run("--json isometry " + args).out, "[2,0,1]\n");
  const Outcome none = run("isometry " + sample("two_point.json") + " " + sample("two_point_scaled.json"));
  EXPECT_EQ(none.status, 2);
  EXPECT_EQ(none.out, "none\n");
}

TEST(Cli, ValidateReportsWitness) {
  const Outcome ok = run("validate " + sample("triangle.json"));
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "ok\n");
  const Outcome bad = run("validate " + sample("triangle_invalid.json"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(bad.out, "triangle 0 1 2\n");
  EXPECT_EQ(run("isometry " + sample("triangle_invalid.json") + " " + sample("triangle.json")).status, 1);
}

TEST(Cli, Distortion) {
  const Outcome r = run("distortion " + sample("two_point.json") + " " + sample("two_point_scaled.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run("distortion " + sample("equilateral.json") + " " + sample("isosceles.json")).out, "2\n");
}

TEST(Cli, Dominates) {
  const std::string pair = sample("two_point.json") + " " + sample("two_point_scaled.json");
  EXPECT_EQ(run("dominates " + pair + " --c 2 --patterns " + sample("patterns.json")).out, "true\n");
  const Outcome no = run("dominates " + pair + " --c 3/2 --canonical");
  EXPECT_EQ(no.status, 2);
  EXPECT_EQ(no.out, "false\n");
  EXPECT_EQ(run("dominates " + pair + " --c 2").status, 1);
  EXPECT_EQ(run("dominates " + pair + " --c 1/2 --canonical").status, 1);
}

TEST(Cli, Signature) {
  const Outcome r = run("signature " + sample("two_point.json"));
  EXPECT_EQ(r.out, "[[\"0\",\"1\"],[\"1\",\"0\"]] {\"R\":[[0]]}\n[[\"0\",\"1\"],[\"1\",\"0\"]] {\"R\":[[1]]}\n");
}

TEST(Cli, Groups) {
  EXPECT_EQ(run("group wordmetric " + sample("z5.json") + " --gens 1,4 --weights 2,2").out, "0 0\n1 2\n2 4\n3 4\n4 2\n");
  EXPECT_EQ(run("group translate " + sample("z5.json") + " --a 1 --b 2 --A 0,1 --B 2,3").out, "2\n");
  const Outcome none = run("group translate " + sample("z5.json") + " --a 1 --b 2 --A 0,1 --B 0,2");
  EXPECT_EQ(none.status, 2);
  EXPECT_EQ(none.out, "none\n");
  const Outcome roelcke = run("group roelcke " + sample("z3.json") + " --gens 1,2 --weights 1,1");
  EXPECT_EQ(roelcke.status, 0);
  EXPECT_NE(roelcke.out.find(R"("metric":[["0","1","1"],["1","0","1"],["1","1","0"]])"), std::string::npos);
  const Outcome ball = run("group alexandrov " + sample("integer_ball.json") + " --base 3");
  EXPECT_EQ(ball.status, 0);
  EXPECT_NE(ball.out.find(R"("Infinity":{"arity":1,"tuples":[[7]]})"), std::string::npos);
  EXPECT_EQ(run("group wordmetric " + sample("z4.json") + " --gens 2 --weights 1").status, 1);
}

TEST(Cli, Heaps) {
  const Outcome bad = run("heap validate " + sample("heap_bad.json"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(bad.out, "identity-law 0 1\nidentity-law 1 0\n");
  EXPECT_EQ(run("heap validate " + sample("heap_z3.json")).out, "ok\n");
  EXPECT_EQ(run("heap subheaps " + sample("heap_z3.json")).out, "0\n1\n2\n0 1 2\n");
  EXPECT_EQ(run("heap to-group " + sample("heap_z3.json") + " --e 1").out, "{\"order\":3,\"table\":[[2,0,1],[0,1,2],[1,2,0]]}\n");
  EXPECT_EQ(run("heap from-group " + sample("z3.json")).out,
            "{\"op\":[[[0,1,2],[2,0,1],[1,2,0]],[[1,2,0],[0,1,2],[2,0,1]],[[2,0,1],[1,2,0],[0,1,2]]],\"order\":3}\n");
  EXPECT_EQ(run("heap to-group " + sample("heap_bad.json") + " --e 0").status, 1);
}

TEST(Cli, StoneAndEmbed) {
  const Outcome enc = run("stone encode " + sample("two_point.json"));
  EXPECT_EQ(enc.status, 0);
  EXPECT_NE(enc.out.find(R"("relations":{"R":{"arity":1,"tuples":[[0],[2]]}})"), std::string::npos);
  EXPECT_EQ(run("embed " + sample("two_point.json") + " --dims 3").out, "0 1 0\n1 0 1\n");
  EXPECT_EQ(run("embed " + sample("two_point_scaled.json") + " --dims 3").status, 1);
}

TEST(Cli, GenerateIsDeterministic) {
  const Outcome a = run("generate --seed 7 --points 5 --relation R:2 --relation U:1");
  const Outcome b = run("generate --seed 7 --points 5 --relation R:2 --relation U:1");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("generate --seed 8 --points 5 --relation R:2 --relation U:1").out);
  EXPECT_EQ(run("generate --seed 1 --relation R").status, 1);
}

TEST(Cli, InvalidUsage) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("isometry").status, 1);
  EXPECT_EQ(run("isometry --frobnicate " + sample("triangle.json") + " " + sample("triangle.json")).status, 1);
  EXPECT_EQ(run("validate /nonexistent.json").status, 1);
  EXPECT_EQ(run("isometry " + sample("two_point.json") + " " + sample("triangle.json")).status, 1);
  EXPECT_EQ(run("validate " + sample("z3.json")).status, 1);
}

TEST(Cli, RoundTripThroughStone) {
  const std::string tmp = testing::TempDir() + "/metstruct_algebra.json";
  ASSERT_EQ(run("stone encode " + sample("triangle.json") + " > " + tmp).status, 0);
  const Outcome decoded = run("stone decode " + tmp);
  EXPECT_EQ(decoded.status, 0);
  EXPECT_NE(decoded.out.find(R"("E":{"arity":2,"tuples":[[0,1],[1,2]]})"), std::string::npos);
}
