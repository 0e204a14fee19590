// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include "amlowl/caex_xml.hpp"
#include "amlowl/concept_tree.hpp"
#include "amlowl/nnf.hpp"
#include "amlowl/parser.hpp"
#include "amlowl/proper.hpp"
#include "amlowl/testkit.hpp"
#include "amlowl/translator.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace amlowl;

namespace {

std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus(const std::string& name) {
  return readText(std::string(AMLOWL_TEST_DATA) + "/corpus/" + name + ".owlx");
}
std::string golden(const std::string& name) {
  return readText(std::string(AMLOWL_TEST_DATA) + "/golden/" + name + ".aml");
}

// Collects the first few reasons a criterion failed.
struct Outcome {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string window(const CaexElement& e) {
  const auto& c = e.conceptAttrs;
  return "[" + std::to_string(c.minCardinality) + "," +
         (c.maxCardinality ? std::to_string(*c.maxCardinality) : "-1") + "]";
}

bool sameClass(const ClassExpression& a, const ClassExpression& b) {
  return sortOperands(a) == sortOperands(b);
}

void goldenCorpus(Outcome& out) {
  for (const char* name : {"classA", "classB", "classC", "classD"}) {
    auto doc = transF(parse(corpus(name)));
    out.require(doc == readXml(golden(name)), std::string(name) + " differs from its golden model");
  }
  auto a = transF(parse(corpus("classA"))).models.at(0);
  out.require(a.conceptAttrs.primary && a.classRef && a.classRef->path == "Robot", "A: primary Robot root");
  const auto& ac = a.internalElements.at(0);
  out.require(ac.classRef->path == "IOController" && ac.conceptAttrs.negated && window(ac) == "[0,0]",
              "A: negated IOController [0,0]");

  auto b = transF(parse(corpus("classB"))).models.at(0);
  out.require(b.classRef->path == "Robot" && !b.conceptAttrs.primary && b.attributes.size() == 1,
              "B: Robot root with the manufacturer");
  out.require(b.internalElements.at(0).conceptAttrs.primary && !b.internalElements[0].classRef,
              "B: primary Thing child");

  auto c = transF(parse(corpus("classC"))).models.at(0);
  const auto& ctrl = c.internalElements.at(0);
  out.require(c.conceptAttrs.primary && ctrl.classRef->path == "IOController" && window(ctrl) == "[1,-1]",
              "C: primary Robot with IOController");
  const auto& ci = ctrl.externalInterfaces.at(0);
  out.require(ci.kind == ElementKind::ExternalInterface && ci.classRef->path == "IOInterface" &&
                  window(ci) == "[3,-1]",
              "C: IOInterface [3,-1]");

  auto d = transF(parse(corpus("classD"))).models.at(0);
  out.require(d.externalInterfaces.size() == 2, "D: two interfaces");
  out.require(d.externalInterfaces[0].conceptAttrs.primary && window(d.externalInterfaces[0]) == "[1,-1]",
              "D: primary IOInterface");
  out.require(!d.externalInterfaces[1].conceptAttrs.primary && window(d.externalInterfaces[1]) == "[3,-1]",
              "D: IOInterface [3,-1]");
}

void nnfCheck(Outcome& out) {
  auto printed = print(nnf(parse(corpus("classA"))));
  out.require(printed == "Robot and (hasIE only IOController)", "got '" + printed + "'");
}

void disjunctionMultiplexing(Outcome& out) {
  auto forest = constructD(nnf(parse("Robot and (hasIE some (IOController or IODevice))")));
  out.require(forest.trees.size() == 2, "expected 2 trees");
  if (forest.trees.size() == 2) {
    out.require(sameClass(forest.trees[0].expr, parse("Robot and (hasIE some IOController)")),
                "first root is " + print(forest.trees[0].expr));
    out.require(sameClass(forest.trees[1].expr, parse("Robot and (hasIE some IODevice)")),
                "second root is " + print(forest.trees[1].expr));
  }
  testkit::GenConfig cfg;
  cfg.allowDisjunction = true;
  cfg.maxDepth = 4;
  std::size_t multi = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    cfg.seed = seed;
    auto ce = nnf(testkit::genProperClass(cfg));
    auto size = constructD(ce).trees.size();
    if (size > 1) ++multi;
    out.require(size == testkit::dnfCount(ce), "seed " + std::to_string(seed) + ": forest size differs");
  }
  out.require(multi > 0, "no generated class had a disjunction");
}

void inverseElimination(Outcome& out) {
  auto t = removeInverseProperty(construct(nnf(parse(corpus("classD")))));
  out.require(t.kind == NodeKind::Intersection && t.size() == 5, "D: five-node intersection root");
  out.require(sameClass(t.expr, parse("(hasEI min 3 IOInterface) and (hasEI some IOInterface)")),
              "D: root is " + print(t.expr));
  bool primaryEi = false;
  for (const auto& c : t.children)
    if (c.restriction && c.restriction->property == hasEI() && c.restriction->flavor == Flavor::Some &&
        c.children.size() == 1 && c.children[0].primary)
      primaryEi = true;
  out.require(primaryEi, "D: primary interface child");

  testkit::GenConfig cfg;
  cfg.allowInverse = true;
  std::size_t tested = 0;
  for (std::uint64_t seed = 1; tested < 1000; ++seed) {
    cfg.seed = seed;
    auto ce = nnf(testkit::genProperClass(cfg));
    if (!containsInverse(ce)) continue;
    ++tested;
    for (const auto& tree : constructD(ce).trees)
      out.require(countPrimary(removeInverseProperty(tree)) == 1,
                  "seed " + std::to_string(seed) + ": primary count is not one");
  }
}

void roundTrips(Outcome& out) {
  for (const char* name : {"classA", "classB", "classC", "classD"}) {
    auto ce = parse(corpus(name));
    out.require(canonicalKeys(transB(transF(ce))) == canonicalKeys(ce), std::string(name) + " round trip");
  }
  testkit::GenConfig cfg;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    cfg.seed = seed;
    auto ce = testkit::genProperClass(cfg);
    out.require(canonicalKeys(transB(transF(ce))) == canonicalKeys(ce),
                "class seed " + std::to_string(seed) + ": " + print(ce));
  }
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    cfg.seed = seed;
    auto doc = testkit::genProperDocument(cfg);
    out.require(writeXml(transF(transB(doc))) == writeXml(normalize(doc)),
                "document seed " + std::to_string(seed));
  }
}

void propernessGate(Outcome& out) {
  auto firstTag = [](const std::string& text) -> std::string {
    auto v = checkProper(nnf(parse(text)));
    return v.empty() ? "none" : std::string(toString(v.front().tag));
  };
  out.require(firstTag("hasIE some (isIEOf some Robot)") == "C1", "C1 pattern");
  out.require(firstTag("isIEOf min 3 Robot") == "C2", "C2 pattern");
  out.require(firstTag("hasEI some (isIEOf some Robot)") == "C3", "C3 pattern");
  out.require(firstTag("isIEOf some (isEIOf some Robot)") == "C4", "C4 pattern");
  auto v = checkProper(nnf(parse("(not A1) and A2")));
  out.require(v.size() == 1 && v[0].tag == ViolationTag::MixedSignAtomicConjunction,
              "mixed-sign conjunction tag");
  out.require(!v.empty() && describe(v[0]).find("cannot be modeled") != std::string::npos,
              "mixed-sign message");
  out.require(checkProper(nnf(parse(corpus("classD")))).empty(), "class D must stay proper");
}

void semanticsOracle(Outcome& out) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    testkit::GenConfig cfg;
    cfg.seed = seed;
    testkit::WorldConfig wcfg;
    wcfg.seed = seed;
    auto ce = testkit::genArbitraryClass(cfg);
    auto w = testkit::genWorld(wcfg);
    out.require(testkit::modelCheck(ce, w) == testkit::modelCheck(nnf(ce), w),
                "nnf seed " + std::to_string(seed));
  }
  std::size_t members = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    testkit::GenConfig cfg;
    cfg.seed = seed;
    cfg.maxDepth = 2;
    testkit::WorldConfig wcfg;
    wcfg.seed = seed;
    auto ce = testkit::genProperClass(cfg);
    auto w = testkit::genWorld(wcfg);
    auto doc = transF(ce);
    auto ext = testkit::modelCheck(ce, w);
    members += ext.size();
    for (std::size_t x = 0; x < w.objects.size(); ++x)
      out.require(testkit::matchesDocument(doc, w, x) == (ext.count(x) > 0),
                  "matching seed " + std::to_string(seed) + " object " + std::to_string(x));
  }
  out.require(members > 0, "matching never saw a member");
}

struct Criterion {
  int number;
  std::string title;
  double limitSeconds;  // 0 means no limit
  std::function<void(Outcome&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden corpus", 1.0, goldenCorpus},
      {2, "nnf of class A", 0, nnfCheck},
      {3, "disjunction multiplexing", 30.0, disjunctionMultiplexing},
      {4, "inverse elimination", 0, inverseElimination},
      {5, "round-trip identities", 120.0, roundTrips},
      {6, "properness gate", 0, propernessGate},
      {7, "semantics oracle", 0, semanticsOracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limitSeconds > 0 && secs > c.limitSeconds)
      out.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limitSeconds) + " s");
    const bool pass = out.problems.empty();
    if (!pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << " ("
              << timing << ")\n";
    for (std::size_t i = 0; i < out.problems.size() && i < 5; ++i)
      std::cout << "    " << out.problems[i] << '\n';
    if (out.problems.size() > 5) std::cout << "    ... " << out.problems.size() - 5 << " more\n";
  }
  return failed;
}
