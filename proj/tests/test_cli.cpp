#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "cli_runner.hpp"

namespace {

const std::string kCli = BTNORM_CLI_PATH;
const std::string kGolden = BTNORM_GOLDEN_DIR;
const std::string kCorpus = kGolden + "/corpus";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("documented invocations") {
  auto r = cli::run(kCli, kCorpus, "eval --vector 1,1 alpha0.norm");
  CHECK(r.status == 0);
  CHECK(r.output == "1/2\n");

  r = cli::run(kCli, kCorpus, "fiber alpha0.norm");
  CHECK(r.status == 0);
  CHECK(r.output == "levi=[1,1] unipotent=2 total=4\n");

  r = cli::run(kCli, kCorpus, "equals alpha0.norm alpha0.norm");
  CHECK(r.status == 0);
  CHECK(r.output == "true\n");

  r = cli::run(kCli, kCorpus, "--format machine eval --vector 1,1 alpha0.norm");
  CHECK(r.output == "{\"value\":\"1/2\"}\n");
}

TEST_CASE("verbs without documents") {
  auto r = cli::run(kCli, kCorpus, "apartment --prime 2 --coords 0,1/2");
  CHECK(r.status == 0);
  CHECK(r.output == slurp(kCorpus + "/alpha0.norm"));

  r = cli::run(kCli, kCorpus, "translate --prime 2 --matrix '4,0;0,1'");
  CHECK(r.output == "(2,0)\n");

  r = cli::run(kCli, kCorpus, "translate --prime 2 --matrix '4,1;0,1'");
  CHECK(r.status == 2);
}

TEST_CASE("verbs with flags") {
  auto r = cli::run(kCli, kCorpus, "stab-check --matrix '1,2;0,1' alpha0.norm");
  CHECK(r.output == "true\n");
  r = cli::run(kCli, kCorpus, "stab-check --matrix '2,0;0,1' alpha0.norm");
  CHECK(r.output == "false\n");
  r = cli::run(kCli, kCorpus, "level --matrix '1,1;0,1' --delta=-1/2 alpha0.norm");
  CHECK(r.output == "-1/2 member=true\n");
  r = cli::run(kCli, kCorpus, "level --matrix '1,1;0,1' --delta=-2/3 alpha0.norm");
  CHECK(r.output == "-1/2 member=false\n");
  r = cli::run(kCli, kCorpus, "level --matrix '1,1;0,1' --delta 1 alpha0.norm");
  CHECK(r.status == 2);
  r = cli::run(kCli, kCorpus, "cartan beta2.norm lattice_e1_2e2.norm");
  CHECK(r.output == "(1,0)\n");
  r = cli::run(kCli, kCorpus, "restrict --span 1,1 alpha0.norm");
  CHECK(r.status == 0);
  r = cli::run(kCli, kCorpus, "act --matrix '2,0;0,1' beta2.norm");
  CHECK(r.status == 0);
  r = cli::run(kCli, kCorpus, "quotient --span 1,0 alpha0.norm");
  CHECK(r.output.rfind("complement=(0,1)\n", 0) == 0);
  r = cli::run(kCli, kCorpus, "tensor alpha0.norm alpha0.norm");
  CHECK(r.status == 0);
  r = cli::run(kCli, kCorpus, "sum alpha0.norm beta2.norm");
  CHECK(r.status == 0);
  r = cli::run(kCli, kCorpus, "coords --frame '1,1;0,1' alpha0.norm");
  CHECK(r.output == "none\n");
  r = cli::run(kCli, kCorpus, "hom --matrix '0,0;1,0' alpha0.norm");
  CHECK(r.output == "1/2\n");
}

TEST_CASE("exit codes") {
  auto r = cli::run(kCli, kCorpus, "fiber missing.norm");
  CHECK(r.status == 1);
  r = cli::run(kCli, kCorpus, "frobnicate alpha0.norm");
  CHECK(r.status == 1);
  r = cli::run(kCli, kCorpus, "eval alpha0.norm");
  CHECK(r.status == 1);
  r = cli::run(kCli, kCorpus, "eval --vector 1,1 alpha0.norm beta2.norm");
  CHECK(r.status == 1);
  r = cli::run(kCli, kCorpus, "tree alpha0.norm");
  CHECK(r.status == 2);
  CHECK(r.output.find("precondition violated") != std::string::npos);
  r = cli::run(kCli, kCorpus, "equals alpha0.norm beta3_p3.norm");
  CHECK(r.status == 2);
  r = cli::run(kCli, kCorpus, "stab-check --matrix '1,1;1,1' alpha0.norm");
  CHECK(r.status == 2);
}

TEST_CASE("golden transcript over the corpus") {
  std::string first = cli::transcript(kCli, kCorpus);
  std::string second = cli::transcript(kCli, kCorpus);
  CHECK(first == second);
  if (std::getenv("BTNORM_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(kGolden + "/transcript.txt", std::ios::binary) << first;
  }
  CHECK(first == slurp(kGolden + "/transcript.txt"));
}

TEST_CASE("canonical corpus documents are reproduced byte for byte") {
  for (const auto& doc : cli::corpus(kCorpus)) {
    CAPTURE(doc);
    std::string text = slurp(kCorpus + "/" + doc);
    if (text.find("\"label\"") != std::string::npos) continue;
    size_t n = std::stoul(cli::read_dim(kCorpus + "/" + doc));
    std::string id;
    for (size_t i = 0; i < n; ++i) {
      if (i) id += ";";
      for (size_t j = 0; j < n; ++j) id += std::string(j ? "," : "") + (i == j ? "1" : "0");
    }
    auto r = cli::run(kCli, kCorpus, "act --matrix '" + id + "' " + doc);
    CHECK(r.status == 0);
    CHECK(r.output == text);
  }
}
