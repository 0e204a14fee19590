#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amlowl/concept_tree.hpp"
#include "amlowl/nnf.hpp"
#include "amlowl/parser.hpp"
#include "amlowl/proper.hpp"
#include "amlowl/testkit.hpp"
#include "amlowl/translator.hpp"
#include "support.hpp"

#include <map>

using namespace amlowl;
using testkit::World;
using testkit::WorldObject;

namespace {

std::size_t add(World& w, ElementKind kind, std::set<std::string> labels,
                std::optional<std::size_t> parent) {
  WorldObject o;
  o.kind = kind;
  o.labels = std::move(labels);
  o.parent = parent;
  w.objects.push_back(o);
  std::size_t id = w.objects.size() - 1;
  if (parent) w.objects[*parent].children.push_back(id);
  return id;
}

// A robot owning a controller with `interfaces` IOInterfaces.
World robotWorld(int interfaces) {
  World w;
  auto robot = add(w, ElementKind::InternalElement, {"Robot"}, std::nullopt);
  auto ctrl = add(w, ElementKind::InternalElement, {"IOController"}, robot);
  for (int i = 0; i < interfaces; ++i) add(w, ElementKind::ExternalInterface, {"IOInterface"}, ctrl);
  return w;
}

// Inverse restrictions may only sit under intersections and other inverse
// restrictions.
bool inversePrefixOnly(const ClassExpression& ce, bool belowOther) {
  if (auto p = restrictionProperty(ce)) {
    if (p->isInverse() && belowOther) return false;
    auto f = restrictionFiller(ce);
    return !f || inversePrefixOnly(*f, belowOther || !p->isInverse());
  }
  if (ce.is<And>()) {
    for (const auto& op : ce.as<And>().operands)
      if (!inversePrefixOnly(op, belowOther)) return false;
    return true;
  }
  if (ce.is<Or>()) {
    for (const auto& op : ce.as<Or>().operands)
      if (!inversePrefixOnly(op, true)) return false;
  }
  return true;
}

// hasEI fillers carry no object restrictions and no role-class annotations.
bool interfaceFillersFlat(const ClassExpression& ce, bool inInterface) {
  if (ce.is<Atomic>())
    return !inInterface || ce.as<Atomic>().kind != CaexKind::RoleClass;
  if (ce.is<Not>()) return interfaceFillersFlat(ce.as<Not>().operand, inInterface);
  if (auto p = restrictionProperty(ce)) {
    if (p->isObject() && inInterface && !p->isInverse()) return false;
    auto f = restrictionFiller(ce);
    return !f || interfaceFillersFlat(*f, p->name == "hasEI");
  }
  std::vector<ClassExpression> ops;
  if (ce.is<And>()) ops = ce.as<And>().operands;
  if (ce.is<Or>()) ops = ce.as<Or>().operands;
  for (const auto& op : ops)
    if (!interfaceFillersFlat(op, inInterface)) return false;
  return true;
}

std::size_t depthOf(const World& w, std::size_t x) {
  std::size_t d = 0;
  while (w.objects[x].parent) {
    x = *w.objects[x].parent;
    ++d;
  }
  return d;
}

} // namespace

TEST_SUITE("generators") {
  TEST_CASE("generation is deterministic per seed") {
    testkit::GenConfig cfg;
    cfg.seed = 42;
    CHECK(testkit::genProperClass(cfg) == testkit::genProperClass(cfg));
    CHECK(testkit::genArbitraryClass(cfg) == testkit::genArbitraryClass(cfg));
    CHECK(testkit::genProperDocument(cfg) == testkit::genProperDocument(cfg));
    testkit::WorldConfig wcfg;
    auto a = testkit::genWorld(wcfg), b = testkit::genWorld(wcfg);
    CHECK(a.objects.size() == b.objects.size());
  }

  TEST_CASE("proper classes keep inverses on the outer prefix and interfaces flat") {
    testkit::GenConfig cfg;
    std::size_t inverse = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      cfg.seed = seed;
      auto ce = testkit::genProperClass(cfg);
      if (containsInverse(ce)) ++inverse;
      CHECK_MESSAGE(inversePrefixOnly(ce, false), print(ce));
      CHECK_MESSAGE(interfaceFillersFlat(ce, false), print(ce));
      CHECK_MESSAGE(checkProper(nnf(ce)).empty(), print(ce));
    }
    CHECK(inverse > 0);
  }

  TEST_CASE("without inverses or disjunction the flags are honoured") {
    testkit::GenConfig cfg;
    cfg.allowInverse = false;
    cfg.allowDisjunction = false;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      cfg.seed = seed;
      auto ce = testkit::genProperClass(cfg);
      CHECK_FALSE(containsInverse(ce));
      CHECK(testkit::dnfCount(nnf(ce)) == 1);
      auto doc = testkit::genProperDocument(cfg);
      CHECK(doc.models.size() == 1);
    }
  }

  TEST_CASE("arbitrary classes survive nnf") {
    testkit::GenConfig cfg;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      cfg.seed = seed;
      CHECK_NOTHROW(nnf(testkit::genArbitraryClass(cfg)));
    }
  }

  TEST_CASE("proper documents have one primary per model on a default-window path") {
    testkit::GenConfig cfg;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      cfg.seed = seed;
      auto doc = testkit::genProperDocument(cfg);
      CHECK_NOTHROW(validate(doc));
      for (auto n : primaryCounts(doc)) CHECK(n == 1);
    }
  }

  TEST_CASE("worlds stay within their bounds") {
    testkit::WorldConfig wcfg;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      wcfg.seed = seed;
      auto w = testkit::genWorld(wcfg);
      std::set<std::string> individuals;
      std::size_t roots = 0;
      for (std::size_t x = 0; x < w.objects.size(); ++x) {
        const auto& o = w.objects[x];
        CHECK(o.children.size() <= static_cast<std::size_t>(wcfg.maxChildren));
        CHECK(o.labels.size() <= static_cast<std::size_t>(wcfg.maxLabels));
        CHECK(depthOf(w, x) <= static_cast<std::size_t>(wcfg.maxDepth));
        if (o.kind == ElementKind::ExternalInterface) CHECK(o.children.empty());
        if (!o.parent) ++roots;
        if (o.individual) CHECK(individuals.insert(*o.individual).second);
        for (auto c : o.children) CHECK(w.objects[c].parent == x);
      }
      CHECK(roots >= 1);
      CHECK(roots <= static_cast<std::size_t>(wcfg.maxRoots));
    }
  }
}

TEST_SUITE("dnf") {
  TEST_CASE("disjunct counts") {
    CHECK(testkit::dnfCount(parse("Robot and (hasIE some Gripper)")) == 1);
    CHECK(testkit::dnfCount(parse("Robot and (hasIE some (IOController or IODevice))")) == 2);
    CHECK(testkit::dnfCount(parse("(A or B) and (hasIE some (C or D or E))")) == 6);
    CHECK(testkit::dnfCount(parse("{a, b, c}")) == 3);
    CHECK(testkit::dnfCount(parse("hasIE some (A or (B and (C or D)))")) == 3);
  }

  TEST_CASE("disjuncts are union free") {
    auto ds = testkit::dnf(parse("(A or B) and (hasIE some (C or D))"));
    REQUIRE(ds.size() == 4);
    for (const auto& d : ds) CHECK_FALSE(containsDisjunction(d));
  }

  TEST_CASE("dnfCount equals the forest size on generated classes") {
    testkit::GenConfig cfg;
    cfg.maxDepth = 4;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      cfg.seed = seed;
      auto ce = nnf(testkit::genProperClass(cfg));
      CHECK_MESSAGE(constructD(ce).trees.size() == testkit::dnfCount(ce), print(ce));
    }
  }
}

TEST_SUITE("model checking") {
  TEST_CASE("Thing holds everywhere, Nothing nowhere") {
    auto w = testkit::genWorld({});
    CHECK(testkit::modelCheck(owlThing(), w).size() == w.objects.size());
    CHECK(testkit::modelCheck(owlNothing(), w).empty());
  }

  TEST_CASE("class C needs three interfaces on the controller") {
    auto c = parse(support::corpus("classC"));
    CHECK(testkit::modelCheck(c, robotWorld(3)) == std::set<std::size_t>{0});
    CHECK(testkit::modelCheck(c, robotWorld(2)).empty());
    CHECK(testkit::modelCheck(c, robotWorld(4)) == std::set<std::size_t>{0});
  }

  TEST_CASE("inverse restrictions look at the parent") {
    auto w = robotWorld(3);
    auto d = parse(support::corpus("classD"));
    CHECK(testkit::modelCheck(d, w) == std::set<std::size_t>{2, 3, 4});
    CHECK(testkit::modelCheck(d, robotWorld(2)).empty());
  }

  TEST_CASE("data and nominal constructors") {
    World w;
    auto r = add(w, ElementKind::InternalElement, {"Robot"}, std::nullopt);
    w.objects[r].attributes.push_back({"hasManufacturer", Literal{"KUKA", "string"}});
    w.objects[r].attributes.push_back({"hasWeight", Literal{"5", "integer"}});
    auto g = add(w, ElementKind::InternalElement, {"Gripper"}, r);
    w.objects[g].individual = "g1";
    CHECK(testkit::satisfies(parse("hasManufacturer value \"KUKA\""), w, r));
    CHECK_FALSE(testkit::satisfies(parse("hasManufacturer some (not {\"KUKA\"})"), w, r));
    CHECK(testkit::satisfies(parse("hasWeight some integer"), w, r));
    CHECK_FALSE(testkit::satisfies(parse("hasWeight some (not integer)"), w, r));
    CHECK(testkit::satisfies(parse("hasIE value g1"), w, r));
    CHECK(testkit::satisfies(parse("{g1}"), w, g));
    CHECK(testkit::satisfies(parse("hasIE exactly 1 Gripper"), w, r));
    CHECK(testkit::satisfies(parse("hasIE only Gripper"), w, r));
    CHECK_FALSE(testkit::satisfies(parse("hasEI some Thing"), w, r));
  }

  TEST_CASE("nnf keeps extensions on 200 random class and world pairs") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      testkit::GenConfig cfg;
      cfg.seed = seed;
      testkit::WorldConfig wcfg;
      wcfg.seed = seed;
      auto ce = testkit::genArbitraryClass(cfg);
      auto w = testkit::genWorld(wcfg);
      CHECK_MESSAGE(testkit::modelCheck(ce, w) == testkit::modelCheck(nnf(ce), w), print(ce));
    }
  }
}

TEST_SUITE("structural matching") {
  TEST_CASE("class C model matches the robot only with enough interfaces") {
    auto doc = transF(parse(support::corpus("classC")));
    CHECK(testkit::matchesDocument(doc, robotWorld(3), 0));
    CHECK_FALSE(testkit::matchesDocument(doc, robotWorld(2), 0));
    CHECK_FALSE(testkit::matchesDocument(doc, robotWorld(3), 1));
  }

  TEST_CASE("class D model matches the interfaces from their parent") {
    auto doc = transF(parse(support::corpus("classD")));
    auto w = robotWorld(3);
    for (std::size_t x = 0; x < w.objects.size(); ++x)
      CHECK(testkit::matchesDocument(doc, w, x) == (x >= 2));
  }

  TEST_CASE("matching agrees with model checking on 100 pairs") {
    std::map<bool, std::size_t> seen;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      testkit::GenConfig cfg;
      cfg.seed = seed;
      cfg.maxDepth = 2;
      testkit::WorldConfig wcfg;
      wcfg.seed = seed;
      auto ce = testkit::genProperClass(cfg);
      auto w = testkit::genWorld(wcfg);
      auto doc = transF(ce);
      for (std::size_t x = 0; x < w.objects.size(); ++x) {
        bool member = testkit::satisfies(ce, w, x);
        ++seen[member];
        CHECK_MESSAGE(testkit::matchesDocument(doc, w, x) == member, print(ce), " object ", x);
      }
    }
    CHECK(seen[true] > 0);
    CHECK(seen[false] > 0);
  }
}
