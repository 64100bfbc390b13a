/* Copyright 2026 The trikit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Runs the command-line tool end to end on the bundled fixture.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

const fs::path kFixture = fs::path(TRIKIT_FIXTURE_DIR) / "pipeline";

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("trikit_cli_" + std::string(
                                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult Run(const std::string& args) {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd =
        std::string(TRIKIT_CLI_PATH) + " " + args + " 2>" + err.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, Slurp(err)};
  }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  void Ingest() {
    std::string args = "ingest-tables --output " + P("tables.jsonl");
    for (const auto& e : fs::directory_iterator(kFixture / "tables")) {
      if (e.path().extension() == ".csv") args += " --input " + e.path().string();
    }
    ASSERT_EQ(Run(args).exit_code, 0);
  }

  std::string Ann() const { return (kFixture / "annotations.jsonl").string(); }

  fs::path dir_;
};

TEST_F(CliTest, GoldenPipeline) {
  Ingest();
  ASSERT_EQ(Run("validate-ontology --tables " + P("tables.jsonl") + " --annotations " + Ann())
                .exit_code,
            0);
  const RunResult ex = Run("extract --tables " + P("tables.jsonl") + " --annotations " + Ann() +
                           " --highlights " + (kFixture / "highlights.jsonl").string() +
                           " --sentences " + (kFixture / "sentences.jsonl").string() +
                           " --output " + P("corpus.jsonl") + " --pending " + P("pending.jsonl"));
  ASSERT_EQ(ex.exit_code, 0) << ex.err;
  const RunResult un = Run("unify --input " + P("corpus.jsonl") + " --map " +
                           (kFixture / "predicates.tsv").string() + " --output " +
                           P("unified.xml") + " --report-unmapped " + P("unmapped.txt"));
  ASSERT_EQ(un.exit_code, 0) << un.err;
  const RunResult st = Run("stats --input " + P("unified.xml") + " --json " + P("stats.json"));
  ASSERT_EQ(st.exit_code, 0) << st.err;
  EXPECT_NE(st.out.find("words/SR"), std::string::npos);
  const json got = json::parse(Slurp(P("stats.json")))["overall"];
  json golden = json::parse(Slurp(kFixture / "stats.golden.json"));
  golden.erase("pending");
  for (auto it = golden.begin(); it != golden.end(); ++it) {
    EXPECT_EQ(got[it.key()], it.value()) << it.key();
  }
  std::ifstream pending(P("pending.jsonl"));
  int lines = 0;
  for (std::string l; std::getline(pending, l);) ++lines;
  EXPECT_EQ(lines, 1);
}

TEST_F(CliTest, ExtractWithSeedIsByteIdentical) {
  Ingest();
  const std::string base = "extract --tables " + P("tables.jsonl") + " --annotations " + Ann() +
                           " --sentences " + (kFixture / "sentences.jsonl").string() +
                           " --samples-per-row 2";
  ASSERT_EQ(Run(base + " --seed 7 --output " + P("a.xml") + " --pending " + P("a.jsonl")).exit_code, 0);
  ASSERT_EQ(Run(base + " --seed 7 --jobs 4 --output " + P("b.xml") + " --pending " + P("b.jsonl"))
                .exit_code,
            0);
  EXPECT_EQ(Slurp(P("a.xml")), Slurp(P("b.xml")));
  EXPECT_EQ(Slurp(P("a.jsonl")), Slurp(P("b.jsonl")));
  EXPECT_FALSE(Slurp(P("a.jsonl")).empty());
  ASSERT_EQ(Run(base + " --seed 8 --output " + P("c.xml") + " --pending " + P("c.jsonl"))
                .exit_code,
            0);
  EXPECT_NE(Slurp(P("a.jsonl")), Slurp(P("c.jsonl")));
}

TEST_F(CliTest, CyclicAnnotationFailsValidation) {
  Ingest();
  const RunResult r =
      Run("validate-ontology --tables " + P("tables.jsonl") + " --annotations " +
          (kFixture / "annotations_cyclic.jsonl").string() + " --report " + P("report.json"));
  EXPECT_NE(r.exit_code, 0);
  const json report = json::parse(Slurp(P("report.json")));
  EXPECT_EQ(report["tables_invalid"], 1);
  bool named = false;
  for (const auto& t : report["tables"]) {
    if (!t["valid"].get<bool>()) named = t["table_id"] == "rivers";
  }
  EXPECT_TRUE(named);
}

TEST_F(CliTest, StochasticStagesRequireSeed) {
  Ingest();
  for (const std::string stage : {"sample", "extract"}) {
    const RunResult r = Run(stage + " --tables " + P("tables.jsonl") + " --annotations " + Ann() +
                            " --output " + P("x"));
    EXPECT_NE(r.exit_code, 0);
    const json err = json::parse(r.err);
    EXPECT_EQ(err["status"], "invalid_argument");
    EXPECT_NE(err["message"].get<std::string>().find("--seed"), std::string::npos);
  }
  const RunResult sp = Run("split --tables " + P("tables.jsonl"));
  EXPECT_NE(sp.exit_code, 0);
}

TEST_F(CliTest, ConfigOverridesFlags) {
  Ingest();
  std::ofstream(P("cfg.json")) << R"({"seed": 3, "sample": {"size-min": 1, "size-max": 1}})";
  const RunResult r = Run("sample --tables " + P("tables.jsonl") + " --annotations " + Ann() +
                          " --seed 99 --size-min 4 --size-max 5 --config " + P("cfg.json"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string l; std::getline(lines, l);) {
    const json j = json::parse(l);
    EXPECT_EQ(j["node_ids"].size(), 1u);
    EXPECT_EQ(j["target_size"], 1);
    ++n;
  }
  EXPECT_EQ(n, 23);
  const RunResult seeded = Run("sample --tables " + P("tables.jsonl") + " --annotations " +
                               Ann() + " --seed 3 --size-min 1 --size-max 1");
  EXPECT_EQ(seeded.out, r.out);
}

TEST_F(CliTest, HelpListsFlags) {
  const RunResult r = Run("sample --help");
  EXPECT_EQ(r.exit_code, 0);
  for (const char* flag : {"--size-min", "--size-max", "--p-min", "--p-max", "--seed",
                           "--config", "--jobs", "--output"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
  const RunResult top = Run("--help");
  for (const char* sub : {"ingest-tables", "validate-ontology", "sample", "extract",
                          "convert-e2e", "ingest-webnlg", "align-wikisql", "unify", "split",
                          "stats", "export-xml", "linearize"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
  }
}

TEST_F(CliTest, ErrorsAreMachineReadable) {
  const RunResult r = Run("stats --input " + P("missing.jsonl"));
  EXPECT_NE(r.exit_code, 0);
  const json err = json::parse(r.err);
  EXPECT_EQ(err["status"], "io_error");
  EXPECT_NE(err["location"].get<std::string>().find("missing.jsonl"), std::string::npos);
}

TEST_F(CliTest, ExternalCorporaAndExports) {
  std::ofstream(P("e2e.csv")) << "mr,ref\n"
                                 "\"name[Alimentum], area[city centre], familyFriendly[no]\","
                                 "Alimentum is in the city centre.\n"
                                 "area[riverside],By the river.\n";
  const RunResult e2e = Run("convert-e2e --input " + P("e2e.csv") + " --output " + P("e2e.jsonl"));
  ASSERT_EQ(e2e.exit_code, 0) << e2e.err;
  EXPECT_NE(e2e.err.find("dropped 1"), std::string::npos);

  ASSERT_EQ(Run("export-xml --input " + P("e2e.jsonl") + " --output " + P("e2e.xml")).exit_code,
            0);
  ASSERT_EQ(Run("ingest-webnlg --input " + P("e2e.xml") + " --output " + P("web.jsonl"))
                .exit_code,
            0);
  const RunResult lin = Run("linearize --input " + P("web.jsonl"));
  EXPECT_EQ(lin.out,
            "<H> Alimentum <R> area <T> city centre <H> Alimentum <R> familyFriendly <T> no\n");
  const RunResult st = Run("stats --by-partition --input " + P("e2e.jsonl") + " --input " +
                           P("web.jsonl"));
  EXPECT_NE(st.out.find("e2e"), std::string::npos);
}

TEST_F(CliTest, SplitWritesTsv) {
  Ingest();
  const RunResult r = Run("split --tables " + P("tables.jsonl") +
                          " --threshold 0.5 --test-seed-frac 0.2 --dev-seed-frac 0.1 --seed 4");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
  EXPECT_EQ(r.out, Run("split --tables " + P("tables.jsonl") +
                       " --threshold 0.5 --test-seed-frac 0.2 --dev-seed-frac 0.1 --seed 4")
                       .out);
}

}  // namespace
