// Command-line front end: forward/backward translation, round-trip check,
// properness check, rendering and fuzzing.

#include "amlowl/caex_xml.hpp"
#include "amlowl/concept_tree.hpp"
#include "amlowl/errors.hpp"
#include "amlowl/nnf.hpp"
#include "amlowl/parser.hpp"
#include "amlowl/proper.hpp"
#include "amlowl/testkit.hpp"
#include "amlowl/translator.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace amlowl;

enum Exit : int { Ok = 0, Syntax = 1, Semantic = 2, Io = 3, Mismatch = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool useColor() {
  if (const char* env = std::getenv("AMLOWL_COLOR")) return std::string(env) == "1";
  return isatty(STDOUT_FILENO) != 0;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeOutput(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out || !(out << content)) throw IoError("cannot write '" + *path + "'");
}

bool looksLikeXml(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '<' &&
         (text.compare(pos, 5, "<?xml") == 0 || text.compare(pos, 9, "<CAEXFile") == 0);
}

ConceptModelDocument readDocument(const std::string& text) {
  auto result = readXmlWithWarnings(text);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(result.document);
}

int fail(int code, const std::string& message) {
  bool color = useColor();
  std::cerr << (color ? "\033[31merror:\033[0m " : "error: ") << message << '\n';
  return code;
}

// Runs `body` and maps library errors to exit codes.
template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    return fail(Syntax, e.what());
  } catch (const XmlSyntaxError& e) {
    return fail(Syntax, e.what());
  } catch (const ImproperModel& e) {
    std::string msg = e.what();
    msg += "\nprimary elements per model:";
    for (std::size_t i = 0; i < e.primaryCounts().size(); ++i)
      msg += " " + std::to_string(e.primaryCounts()[i]);
    return fail(Semantic, msg);
  } catch (const IoError& e) {
    return fail(Io, e.what());
  } catch (const Error& e) {
    return fail(Semantic, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(Semantic, e.what());
  }
}

int runForward(const std::string& input, const std::optional<std::string>& output) {
  auto ce = parse(readFile(input));
  auto violations = checkProper(nnf(ce));
  if (!violations.empty()) {
    std::string msg = "class is not a proper AML class:";
    for (const auto& v : violations) msg += "\n  " + describe(v);
    return fail(Semantic, msg);
  }
  writeOutput(output, writeXml(transF(ce)));
  return Ok;
}

int runBackward(const std::string& input, const std::optional<std::string>& output) {
  auto doc = readDocument(readFile(input));
  writeOutput(output, print(transB(doc)) + "\n");
  return Ok;
}

int runRoundtrip(const std::string& input) {
  auto ce = parse(readFile(input));
  auto back = transB(transF(ce));
  bool same = equivalent(ce, back);
  std::cout << "input:     " << print(nnf(ce)) << '\n';
  std::cout << "roundtrip: " << print(back) << '\n';
  std::cout << (same ? "equivalent" : "NOT equivalent") << '\n';
  return same ? Ok : Mismatch;
}

int runCheck(const std::string& input) {
  auto ce = parse(readFile(input));
  auto violations = checkProper(nnf(ce));
  if (violations.empty()) {
    std::cout << "proper\n";
    return Ok;
  }
  for (const auto& v : violations) std::cout << describe(v) << '\n';
  return Semantic;
}

int runRender(const std::string& input, const std::string& format, bool conceptTrees) {
  const std::string text = readFile(input);
  const bool color = useColor();
  if (looksLikeXml(text)) {
    auto doc = readDocument(text);
    if (format == "text") std::cout << print(transB(doc)) << '\n';
    else if (format == "xml") std::cout << writeXml(doc);
    else std::cout << renderDocument(doc, color);
    return Ok;
  }
  auto ce = parse(text);
  if (format == "text") {
    std::cout << print(nnf(ce)) << '\n';
    return Ok;
  }
  if (conceptTrees) {
    auto forest = constructD(nnf(ce));
    for (std::size_t i = 0; i < forest.trees.size(); ++i) {
      if (forest.trees.size() > 1) std::cout << "tree " << i + 1 << ":\n";
      std::cout << renderTree(removeInverseProperty(forest.trees[i]));
    }
    return Ok;
  }
  auto doc = transF(ce);
  if (format == "xml") std::cout << writeXml(doc);
  else std::cout << renderDocument(doc, color);
  return Ok;
}

// Returns an empty string on success, otherwise a description of the failure.
std::string fuzzCase(std::uint64_t seed) {
  testkit::GenConfig cfg;
  cfg.seed = seed;
  std::string stage = "class";
  try {
    auto ce = testkit::genProperClass(cfg);
    auto back = transB(transF(ce));
    if (canonicalKeys(back) != canonicalKeys(ce))
      return "class round trip differs for '" + print(ce) + "': got '" + print(back) + "'";
    stage = "document";
    auto doc = testkit::genProperDocument(cfg);
    auto expected = writeXml(normalize(doc));
    auto actual = writeXml(transF(transB(doc)));
    if (expected != actual) return "document round trip differs:\n" + writeXml(doc);
  } catch (const std::exception& e) {
    return stage + " round trip threw: " + e.what();
  }
  return {};
}

int runFuzz(std::size_t cases, std::uint64_t seed, unsigned threads) {
  std::vector<std::string> results(cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases; i = next++) results[i] = fuzzCase(seed + i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t failures = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    if (results[i].empty()) continue;
    ++failures;
    std::cout << "seed " << seed + i << ": " << results[i] << '\n';
  }
  std::cout << cases << " cases, " << failures << " failures\n";
  return failures == 0 ? Ok : Mismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate OWL class expressions to AutomationML concept models and back"};
  app.require_subcommand(1);

  std::string input;
  std::optional<std::string> output;
  std::string format = "tree";
  bool conceptTrees = false;
  std::size_t cases = 1000;
  std::uint64_t seed = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  auto* forward = app.add_subcommand("forward", "class expression file to CAEX XML");
  forward->add_option("-i,--input", input, "expression file")->required();
  forward->add_option("-o,--output", output, "XML file (default: stdout)");

  auto* backward = app.add_subcommand("backward", "CAEX XML to class expression");
  backward->add_option("-i,--input", input, "XML file")->required();
  backward->add_option("-o,--output", output, "expression file (default: stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "check that backward(forward(C)) is equivalent to C");
  roundtrip->add_option("-i,--input", input, "expression file")->required();

  auto* check = app.add_subcommand("check", "report properness violations");
  check->add_option("-i,--input", input, "expression file")->required();

  auto* render = app.add_subcommand("render", "print concept models of an expression or XML file");
  render->add_option("-i,--input", input, "expression or XML file")->required();
  render->add_option("--format", format, "tree, text or xml")
      ->check(CLI::IsMember({"tree", "text", "xml"}));
  render->add_flag("--concept-trees", conceptTrees, "print the concept trees instead of the models");

  auto* fuzz = app.add_subcommand("fuzz", "random round-trip testing");
  fuzz->add_option("--cases", cases, "number of cases");
  fuzz->add_option("--seed", seed, "first seed");
  fuzz->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Syntax;
  }

  return guarded([&] {
    if (*forward) return runForward(input, output);
    if (*backward) return runBackward(input, output);
    if (*roundtrip) return runRoundtrip(input);
    if (*check) return runCheck(input);
    if (*render) return runRender(input, format, conceptTrees);
    return runFuzz(cases, seed, threads);
  });
}
