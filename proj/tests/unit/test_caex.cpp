#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amlowl/caex.hpp"
#include "amlowl/caex_xml.hpp"
#include "amlowl/errors.hpp"
#include "amlowl/testkit.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace amlowl;

namespace {

CaexElement ie(std::string id, std::optional<std::string> cls = std::nullopt) {
  CaexElement e;
  e.id = std::move(id);
  e.name = cls.value_or("Thing");
  if (cls) e.classRef = ClassRef{*cls, CaexKind::RoleClass};
  return e;
}

CaexElement ei(std::string id, std::string cls) {
  CaexElement e;
  e.id = std::move(id);
  e.name = cls;
  e.kind = ElementKind::ExternalInterface;
  e.classRef = ClassRef{std::move(cls), CaexKind::InterfaceClass};
  return e;
}

ConceptModelDocument single(CaexElement root) {
  ConceptModelDocument doc;
  doc.models.push_back(std::move(root));
  return doc;
}

std::string wrap(const std::string& body) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<CAEXFile FileName=\"x.aml\">\n"
         "<InstanceHierarchy Name=\"ConceptModels\">\n" + body +
         "\n</InstanceHierarchy>\n</CAEXFile>\n";
}

std::string window(const CaexElement& e) {
  const auto& c = e.conceptAttrs;
  return "[" + std::to_string(c.minCardinality) + "," +
         (c.maxCardinality ? std::to_string(*c.maxCardinality) : "-1") + "]";
}

} // namespace

TEST_SUITE("concept attributes") {
  TEST_CASE("defaults") {
    ConceptAttributes c;
    CHECK_FALSE(c.negated);
    CHECK(c.minCardinality == 1);
    CHECK_FALSE(c.maxCardinality.has_value());
    CHECK_FALSE(c.identifiedByID);
    CHECK_FALSE(c.primary);
    CHECK(c.isDefault());
    CHECK(c.hasDefaultWindow());
  }

  TEST_CASE("reserved names") {
    for (const char* n : {"negated", "minCardinality", "maxCardinality", "identifiedByID", "primary"})
      CHECK(isConceptAttributeName(n));
    CHECK_FALSE(isConceptAttributeName("hasManufacturer"));
  }
}

TEST_SUITE("validate") {
  TEST_CASE("invariant breaches name the element") {
    auto root = ie("r", "Robot");
    root.conceptAttrs.primary = true;
    CHECK_NOTHROW(validate(single(root)));

    CHECK_THROWS_AS(validate(ConceptModelDocument{}), InvalidModel);

    auto bad = root;
    auto iface = ei("e", "IOInterface");
    iface.internalElements.push_back(ie("x"));
    bad.externalInterfaces.push_back(iface);
    try {
      validate(single(bad));
      FAIL("no exception");
    } catch (const InvalidModel& e) {
      CHECK(std::string(e.what()).find("model[0].ei[0]") != std::string::npos);
    }

    bad = root;
    bad.classRef->refKind = CaexKind::InterfaceClass;
    CHECK_THROWS_AS(validate(single(bad)), InvalidModel);

    bad = root;
    auto child = ie("c", "Gripper");
    child.conceptAttrs.minCardinality = 3;
    child.conceptAttrs.maxCardinality = 2u;
    bad.internalElements.push_back(child);
    CHECK_THROWS_AS(validate(single(bad)), InvalidModel);

    bad = root;
    bad.attributes.push_back(CaexAttribute{"primary", "boolean", "true", {}});
    CHECK_THROWS_AS(validate(single(bad)), InvalidModel);

    bad = root;
    CaexAttribute idAttr{"hasManufacturer", "string", "KUKA", {}};
    idAttr.conceptAttrs.identifiedByID = true;
    bad.attributes.push_back(idAttr);
    CHECK_THROWS_AS(validate(single(bad)), InvalidModel);

    bad = root;
    bad.internalElements.push_back(ie("r"));
    CHECK_THROWS_AS(validate(single(bad)), InvalidModel);

    bad = root;
    bad.id.clear();
    CHECK_THROWS_AS(validate(single(bad)), InvalidModel);
  }

  TEST_CASE("writeXml refuses invalid documents") {
    auto root = ei("r", "IOInterface");
    CHECK_THROWS_AS(writeXml(single(root)), InvalidModel);
  }

  TEST_CASE("primary counts") {
    ConceptModelDocument doc;
    auto a = ie("a", "Robot");
    a.conceptAttrs.primary = true;
    auto b = ie("b", "Robot");
    auto c1 = ie("c1");
    c1.conceptAttrs.primary = true;
    auto c2 = ie("c2");
    c2.conceptAttrs.primary = true;
    b.internalElements = {c1, c2};
    doc.models = {a, b, ie("z")};
    CHECK(primaryCounts(doc) == std::vector<std::size_t>{1, 2, 0});
  }
}

TEST_SUITE("xml") {
  TEST_CASE("class A golden reads back with the negated controller") {
    auto doc = readXml(support::golden("classA"));
    REQUIRE(doc.models.size() == 1);
    const auto& root = doc.models[0];
    CHECK(root.classRef->path == "Robot");
    CHECK(root.conceptAttrs.primary);
    REQUIRE(root.internalElements.size() == 1);
    const auto& child = root.internalElements[0];
    CHECK(child.classRef->path == "IOController");
    CHECK(child.conceptAttrs.negated);
    CHECK(window(child) == "[0,0]");
  }

  TEST_CASE("class D golden reads back with the primary interface") {
    auto doc = readXml(support::golden("classD"));
    REQUIRE(doc.models.size() == 1);
    const auto& root = doc.models[0];
    CHECK(window(root) == "[1,-1]");
    CHECK_FALSE(root.classRef.has_value());
    REQUIRE(root.externalInterfaces.size() == 2);
    const auto& primary = root.externalInterfaces[0];
    CHECK(primary.conceptAttrs.primary);
    CHECK(primary.classRef->path == "IOInterface");
    CHECK(window(primary) == "[1,-1]");
    const auto& sibling = root.externalInterfaces[1];
    CHECK_FALSE(sibling.conceptAttrs.primary);
    CHECK(window(sibling) == "[3,-1]");
  }

  TEST_CASE("an empty internal element takes the defaults") {
    auto doc = readXml(wrap("<InternalElement ID=\"x\" Name=\"n\"/>"));
    REQUIRE(doc.models.size() == 1);
    CHECK(doc.models[0].conceptAttrs == ConceptAttributes{});
    CHECK(doc.models[0].attributes.empty());
  }

  TEST_CASE("defaults serialize with no concept attributes") {
    auto root = ie("x", "Robot");
    auto child = ie("y", "Gripper");
    root.internalElements.push_back(child);
    auto xml = writeXml(single(root));
    CHECK(xml.find("<Attribute") == std::string::npos);
    root.conceptAttrs.primary = true;
    xml = writeXml(single(root));
    CHECK(xml.find("Name=\"primary\"") != std::string::npos);
    CHECK(xml.find("Name=\"minCardinality\"") == std::string::npos);
  }

  TEST_CASE("cardinality values") {
    auto unlimited = readXml(wrap(
        "<InternalElement ID=\"x\"><Attribute Name=\"maxCardinality\"><Value>-1</Value></Attribute></InternalElement>"));
    CHECK_FALSE(unlimited.models[0].conceptAttrs.maxCardinality.has_value());
    CHECK_THROWS_AS(readXml(wrap("<InternalElement ID=\"x\"><Attribute Name=\"minCardinality\">"
                                 "<Value>-1</Value></Attribute></InternalElement>")),
                    SchemaError);
    CHECK_THROWS_AS(readXml(wrap("<InternalElement ID=\"x\"><Attribute Name=\"negated\">"
                                 "<Value>maybe</Value></Attribute></InternalElement>")),
                    SchemaError);
  }

  TEST_CASE("both spellings of the ID flag are accepted") {
    for (const char* name : {"identifiedByID", "isIdentifiedByID"}) {
      auto doc = readXml(wrap(std::string("<InternalElement ID=\"a\"><Attribute Name=\"") + name +
                              "\"><Value>true</Value></Attribute></InternalElement>"));
      CHECK(doc.models[0].conceptAttrs.identifiedByID);
    }
  }

  TEST_CASE("malformed and off-schema input") {
    CHECK_THROWS_AS(readXml("<CAEXFile><InstanceHierarchy>"), XmlSyntaxError);
    CHECK_THROWS_AS(readXml("<Other/>"), SchemaError);
    CHECK_THROWS_AS(readXml(wrap("")), SchemaError);
    CHECK_THROWS_AS(readXml(wrap("<InternalElement Name=\"n\"/>")), SchemaError);
    CHECK_THROWS_AS(readXml(wrap("<InternalElement ID=\"a\"><ExternalInterface ID=\"b\">"
                                 "<InternalElement ID=\"c\"/></ExternalInterface></InternalElement>")),
                    SchemaError);
  }

  TEST_CASE("unknown content produces warnings, not errors") {
    auto result = readXmlWithWarnings(
        wrap("<InternalElement ID=\"a\" Colour=\"red\"><Description>x</Description></InternalElement>"));
    CHECK(result.document.models.size() == 1);
    CHECK(result.warnings.size() == 2);
  }

  TEST_CASE("source class name survives the round trip") {
    auto root = ie("x", "Robot");
    root.conceptAttrs.primary = true;
    auto doc = single(root);
    doc.sourceClassName = "ClassC";
    CHECK(readXml(writeXml(doc)) == doc);
  }

  TEST_CASE("read of write is the identity on 500 generated documents") {
    testkit::GenConfig cfg;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      cfg.seed = seed;
      auto doc = testkit::genProperDocument(cfg);
      auto xml = writeXml(doc);
      auto back = readXml(xml);
      CHECK_MESSAGE(back == doc, xml);
      CHECK(writeXml(back) == xml);
    }
  }

  TEST_CASE("output uses LF line endings and two-space indentation") {
    auto xml = support::golden("classC");
    CHECK(xml.find('\r') == std::string::npos);
    CHECK(xml.find("\n  <InstanceHierarchy") != std::string::npos);
    CHECK(writeXml(readXml(xml)) == xml);
  }
}

TEST_SUITE("ids and ordering") {
  TEST_CASE("identifiers are deterministic Crockford base32") {
    IdGenerator a(7), b(7), c(8);
    std::set<std::string> seen;
    const std::string alphabet = "0123456789ABCDEFGHJKMNPQRSTVWXYZ";
    for (int i = 0; i < 100; ++i) {
      auto id = a.next();
      CHECK(id.size() == 26);
      CHECK(id.find_first_not_of(alphabet) == std::string::npos);
      CHECK(id == b.next());
      CHECK(id != c.next());
      seen.insert(id);
    }
    CHECK(seen.size() == 100);
  }

  TEST_CASE("assignIds keeps individual names") {
    auto root = ie("", "Robot");
    root.conceptAttrs.primary = true;
    auto named = ie("kuka1", "Robot");
    named.conceptAttrs.identifiedByID = true;
    root.internalElements = {ie(""), named};
    auto doc = single(root);
    assignIds(doc, 3);
    CHECK(doc.models[0].id.size() == 26);
    CHECK(doc.models[0].internalElements[1].id == "kuka1");
    CHECK_NOTHROW(validate(doc));
  }

  TEST_CASE("canonical order ignores input order and puts the primary path first") {
    testkit::GenConfig cfg;
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      cfg.seed = seed;
      auto doc = testkit::genProperDocument(cfg);
      auto shuffled = doc;
      for (auto& m : shuffled.models) {
        std::shuffle(m.internalElements.begin(), m.internalElements.end(), rng);
        std::shuffle(m.externalInterfaces.begin(), m.externalInterfaces.end(), rng);
        std::shuffle(m.attributes.begin(), m.attributes.end(), rng);
      }
      for (std::size_t i = 0; i < doc.models.size(); ++i) {
        auto x = doc.models[i], y = shuffled.models[i];
        canonicalOrder(x);
        canonicalOrder(y);
        CHECK(structuralKey(x) == structuralKey(doc.models[i]));
        CHECK(x == y);
        if (!x.internalElements.empty() && containsPrimary(x) && !x.conceptAttrs.primary) {
          bool anyChild = false;
          for (const auto& c : x.externalInterfaces) anyChild = anyChild || containsPrimary(c);
          for (const auto& c : x.internalElements) anyChild = anyChild || containsPrimary(c);
          if (anyChild) {
            bool first = (!x.externalInterfaces.empty() && containsPrimary(x.externalInterfaces[0])) ||
                         containsPrimary(x.internalElements[0]);
            CHECK(first);
          }
        }
      }
    }
  }

  TEST_CASE("render shows windows, negation and the primary marker") {
    auto doc = readXml(support::golden("classA"));
    auto text = renderModel(doc.models[0]);
    CHECK(text.find("*") != std::string::npos);
    CHECK(text.find("!IOController [0,0]") != std::string::npos);
  }
}
