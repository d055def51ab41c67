#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(BRES_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) { return std::string(BRES_TEST_TMP) + "/" + name; }

}  // namespace

TEST(Cli, ComputeAddressingIsEquivalent) {
  const CliRun a = run("compute --theorem 1.1 --m 2 --format json");
  const CliRun b = run("compute --n 6 --p1 1 --p2 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(doc["cases"].size(), 5u);
  EXPECT_FALSE(doc["L0"].is_null());
  EXPECT_EQ(doc.dump(2) + "\n", a.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("compute --n 6 --p1 2 --p2 2").code, 2);
  EXPECT_EQ(run("compute --frobnicate").code, 64);
  EXPECT_EQ(run("compute --n 6").code, 64);
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("verify --only trace-tables").code, 0);
  EXPECT_EQ(run("verify --m-max 1 --only symbols --strict").code, 1);
  EXPECT_EQ(run("verify --only bogus").code, 64);
}

TEST(Cli, OutputFileAndConfig) {
  const std::string out = temp_path("report.txt");
  EXPECT_EQ(run("compute --theorem 3.2 --m 1 --format text --no-oracle --out " + out).code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("Theorem 3.2, m = 1", 0), 0u);

  const std::string ini = temp_path("run.ini");
  std::ofstream(ini) << "[compute]\ntheorem = \"3.1\"\nm = 2\nformat = \"text\"\nno-oracle = true\n";
  EXPECT_EQ(run("--config " + ini + " compute").out.rfind("Theorem 3.1, m = 2", 0), 0u);
  // flags win over the file
  EXPECT_EQ(run("--config " + ini + " compute --m 3").out.rfind("Theorem 3.1, m = 3", 0), 0u);
}

TEST(Cli, Catalog) {
  const CliRun one = run("catalog --m 1");
  EXPECT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("sigma_-1_D-1  (3.3)"), std::string::npos);
  const CliRun entry = run("catalog --m 2 --entry sigma_-4_D-3");
  EXPECT_EQ(entry.out.rfind("sigma_-4_D-3  (3.37)", 0), 0u);
  EXPECT_EQ(entry.out.find("sigma_-1_D-1"), std::string::npos);
  EXPECT_EQ(run("catalog --m 9").code, 0);
  EXPECT_EQ(run("catalog --m 1 --entry nothing").code, 64);
}

TEST(Cli, OracleDocument) {
  const CliRun r = run("oracle --theorem 3.1 --m 1 --seed 7");
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_TRUE(doc["oracle"]["agreement"].get<bool>());
  EXPECT_EQ(doc["oracle"]["seed"], 7);
  EXPECT_EQ(r.out, run("oracle --theorem 3.1 --m 1 --seed 7").out);
}
