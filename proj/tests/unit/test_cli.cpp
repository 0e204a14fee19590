#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI through the shell with stderr folded into stdout.
Run cli(const std::string& args, const std::string& env = "AMLOWL_COLOR=0") {
  std::string cmd = env + " " + std::string(AMLOWL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("amlowl-cli-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
  fs::path path_;
};

std::string corpusPath(const std::string& name) {
  return std::string(AMLOWL_TEST_DATA) + "/corpus/" + name + ".owlx";
}
std::string goldenPath(const std::string& name) {
  return std::string(AMLOWL_TEST_DATA) + "/golden/" + name + ".aml";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("forward writes the golden file for every corpus class") {
  TempDir tmp;
  for (const char* name : {"classA", "classB", "classC", "classD"}) {
    auto out = tmp.file(std::string(name) + ".aml");
    auto r = cli("forward -i " + corpusPath(name) + " -o " + out);
    CHECK_MESSAGE(r.code == 0, r.out);
    CHECK(support::readText(out) == support::golden(name));
  }
}

TEST_CASE("forward of Thing is a single empty primary element") {
  TempDir tmp;
  auto r = cli("forward -i " + tmp.write("t.owlx", "Thing\n"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Name=\"Thing\""));
  CHECK(contains(r.out, "<Value>true</Value>"));
  CHECK_FALSE(contains(r.out, "RoleRequirements"));
}

TEST_CASE("forward reports violations with exit code 2") {
  TempDir tmp;
  auto r = cli("forward -i " + tmp.write("c2.owlx", "isIEOf min 3 Robot\n"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "C2"));
  r = cli("forward -i " + tmp.write("c1.owlx", "hasIE some (isIEOf some Robot)\n"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "C1 at filler"));
  r = cli("forward -i " + tmp.write("bot.owlx", "hasIE some Nothing\n"));
  CHECK(r.code == 2);
}

TEST_CASE("exit codes for syntax, I/O and usage errors") {
  TempDir tmp;
  CHECK(cli("forward -i " + tmp.write("bad.owlx", "Robot and (\n")).code == 1);
  CHECK(cli("forward -i " + tmp.file("missing.owlx")).code == 3);
  CHECK(cli("forward").code == 1);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("backward -i " + tmp.write("bad.aml", "<CAEXFile>")).code == 1);
  CHECK(cli("forward -i " + corpusPath("classA") + " -o /nonexistent-dir/x.aml").code == 3);
}

TEST_CASE("backward prints the class") {
  auto r = cli("backward -i " + goldenPath("classA"));
  CHECK(r.code == 0);
  CHECK(r.out == "Robot and (hasIE only IOController)\n");
}

TEST_CASE("backward rejects improper models with primary counts") {
  TempDir tmp;
  auto xml = support::golden("classA");
  auto pos = xml.find("<InternalElement ID=\"7242M3JYRXSPQG000000000001\" Name=\"IOController\">");
  REQUIRE(pos != std::string::npos);
  pos = xml.find('>', pos) + 1;
  xml.insert(pos,
             "\n        <Attribute Name=\"primary\" AttributeDataType=\"xs:boolean\"><Value>true</Value></Attribute>");
  auto r = cli("backward -i " + tmp.write("two.aml", xml));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "primary elements per model: 2"));
}

TEST_CASE("backward of a two-model document is a union") {
  TempDir tmp;
  auto fwd = cli("forward -i " + tmp.write("u.owlx", "Robot or IODevice\n") + " -o " + tmp.file("u.aml"));
  REQUIRE(fwd.code == 0);
  auto r = cli("backward -i " + tmp.file("u.aml"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, " or "));
}

TEST_CASE("roundtrip passes on the corpus") {
  TempDir tmp;
  for (const char* name : {"classA", "classB", "classC", "classD"}) {
    auto r = cli("roundtrip -i " + corpusPath(name));
    CHECK_MESSAGE(r.code == 0, r.out);
    CHECK(contains(r.out, "equivalent"));
  }
  CHECK(cli("roundtrip -i " + tmp.write("r.owlx", "Robot\n")).code == 0);
}

TEST_CASE("check") {
  TempDir tmp;
  auto ok = cli("check -i " + corpusPath("classD"));
  CHECK(ok.code == 0);
  CHECK(ok.out == "proper\n");
  auto bad = cli("check -i " + tmp.write("m.owlx", "(not A1) and A2\n"));
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "MixedSignAtomicConjunction"));
}

TEST_CASE("render formats") {
  auto tree = cli("render -i " + corpusPath("classA"));
  CHECK(tree.code == 0);
  CHECK(tree.out == "IE Robot [1,-1]*\n`- IE !IOController [0,0]\n");
  auto text = cli("render -i " + corpusPath("classA") + " --format text");
  CHECK(text.out == "Robot and (hasIE only IOController)\n");
  auto xml = cli("render -i " + corpusPath("classA") + " --format xml");
  CHECK(xml.out == support::golden("classA"));
  auto fromXml = cli("render -i " + goldenPath("classD"));
  CHECK(contains(fromXml.out, "EI IOInterface [1,-1]*"));
  auto trees = cli("render -i " + corpusPath("classD") + " --concept-trees");
  CHECK(contains(trees.out, "IOInterface *"));
  auto coloured = cli("render -i " + corpusPath("classA"), "AMLOWL_COLOR=1");
  CHECK(contains(coloured.out, "\033["));
  CHECK(cli("render -i " + corpusPath("classA") + " --format json").code == 1);
}

TEST_CASE("identical inputs give identical output") {
  auto a = cli("forward -i " + corpusPath("classC"));
  auto b = cli("forward -i " + corpusPath("classC"));
  CHECK(a.out == b.out);
}

TEST_CASE("fuzz") {
  auto r = cli("fuzz --cases 200 --seed 1 --threads 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "200 cases, 0 failures"));
}
