#include "amlowl/caex.hpp"

#include "amlowl/errors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace amlowl {

ImproperModel::ImproperModel(std::string what, std::vector<std::size_t> primaryCounts)
    : Error(std::move(what)), counts_(std::move(primaryCounts)) {}

std::string_view toString(ElementKind kind) {
  return kind == ElementKind::InternalElement ? "InternalElement" : "ExternalInterface";
}

bool isConceptAttributeName(std::string_view name) {
  return name == "negated" || name == "minCardinality" || name == "maxCardinality" ||
         name == "identifiedByID" || name == "isIdentifiedByID" || name == "primary";
}

namespace {

void validateConcept(const ConceptAttributes& c, const std::string& path) {
  if (c.maxCardinality && *c.maxCardinality < c.minCardinality)
    throw InvalidModel(path + ": maxCardinality " + std::to_string(*c.maxCardinality) +
                       " is below minCardinality " + std::to_string(c.minCardinality));
}

void validateElement(const CaexElement& e, const std::string& path, std::set<std::string>& ids) {
  if (e.id.empty()) throw InvalidModel(path + ": element without ID");
  if (!ids.insert(e.id).second) throw InvalidModel(path + ": duplicate ID '" + e.id + "'");
  validateConcept(e.conceptAttrs, path);
  if (e.kind == ElementKind::ExternalInterface) {
    if (!e.internalElements.empty() || !e.externalInterfaces.empty())
      throw InvalidModel(path + ": external interface with children");
    if (e.classRef && e.classRef->refKind != CaexKind::InterfaceClass)
      throw InvalidModel(path + ": external interface references a " +
                         std::string(toString(e.classRef->refKind)));
  } else if (e.classRef && e.classRef->refKind == CaexKind::InterfaceClass) {
    throw InvalidModel(path + ": internal element references an InterfaceClass");
  }
  for (std::size_t i = 0; i < e.attributes.size(); ++i) {
    const auto& a = e.attributes[i];
    std::string apath = path + ".attr[" + std::to_string(i) + "]";
    if (a.name.empty()) throw InvalidModel(apath + ": attribute without name");
    if (isConceptAttributeName(a.name))
      throw InvalidModel(apath + ": '" + a.name + "' is reserved for concept attributes");
    if (a.conceptAttrs.identifiedByID) throw InvalidModel(apath + ": attributes carry no ID");
    validateConcept(a.conceptAttrs, apath);
  }
  for (std::size_t i = 0; i < e.externalInterfaces.size(); ++i) {
    if (e.externalInterfaces[i].kind != ElementKind::ExternalInterface)
      throw InvalidModel(path + ".ei[" + std::to_string(i) + "]: wrong element kind");
    validateElement(e.externalInterfaces[i], path + ".ei[" + std::to_string(i) + "]", ids);
  }
  for (std::size_t i = 0; i < e.internalElements.size(); ++i) {
    if (e.internalElements[i].kind != ElementKind::InternalElement)
      throw InvalidModel(path + ".ie[" + std::to_string(i) + "]: wrong element kind");
    validateElement(e.internalElements[i], path + ".ie[" + std::to_string(i) + "]", ids);
  }
}

} // namespace

void validate(const ConceptModelDocument& doc) {
  if (doc.models.empty()) throw InvalidModel("document has no models");
  for (std::size_t i = 0; i < doc.models.size(); ++i) {
    std::string path = "model[" + std::to_string(i) + "]";
    if (doc.models[i].kind != ElementKind::InternalElement)
      throw InvalidModel(path + ": model root must be an internal element");
    // Individual names may recur across models, so IDs are scoped per model.
    std::set<std::string> ids;
    validateElement(doc.models[i], path, ids);
  }
}

std::size_t countPrimary(const CaexElement& root) {
  std::size_t n = root.conceptAttrs.primary ? 1 : 0;
  for (const auto& a : root.attributes) n += a.conceptAttrs.primary ? 1 : 0;
  for (const auto& c : root.externalInterfaces) n += countPrimary(c);
  for (const auto& c : root.internalElements) n += countPrimary(c);
  return n;
}

std::vector<std::size_t> primaryCounts(const ConceptModelDocument& doc) {
  std::vector<std::size_t> out;
  for (const auto& m : doc.models) out.push_back(countPrimary(m));
  return out;
}

bool containsPrimary(const CaexElement& e) { return countPrimary(e) > 0; }

std::string classNameOf(const std::string& path) {
  auto pos = path.rfind('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string defaultName(const CaexElement& e) {
  if (e.classRef) return classNameOf(e.classRef->path);
  if (e.conceptAttrs.identifiedByID) return e.id;
  return "Thing";
}

namespace {

std::string conceptKey(const ConceptAttributes& c, bool includeWindow) {
  std::string s;
  s += c.negated ? 'N' : 'n';
  s += c.identifiedByID ? 'I' : 'i';
  s += c.primary ? 'P' : 'p';
  if (includeWindow) {
    s += '[' + std::to_string(c.minCardinality) + ',' +
         (c.maxCardinality ? std::to_string(*c.maxCardinality) : "-1") + ']';
  }
  return s;
}

std::string quoteKey(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string attributeKey(const CaexAttribute& a) {
  return "attr(" + quoteKey(a.name) + ":" + a.datatype +
         (a.requiredValue ? "=" + quoteKey(*a.requiredValue) : "") + "," +
         conceptKey(a.conceptAttrs, true) + ")";
}

template <class T, class Key>
void sortByKey(std::vector<T>& items, Key key) {
  std::vector<std::pair<std::pair<int, std::string>, T>> keyed;
  keyed.reserve(items.size());
  for (auto& item : items) keyed.push_back({key(item), std::move(item)});
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  items.clear();
  for (auto& k : keyed) items.push_back(std::move(k.second));
}

} // namespace

std::string structuralKey(const CaexElement& e, bool includeWindow) {
  std::string s = e.kind == ElementKind::InternalElement ? "IE(" : "EI(";
  if (e.classRef)
    s += std::string(toString(e.classRef->refKind)) + ":" + quoteKey(classNameOf(e.classRef->path));
  else
    s += "-";
  if (e.conceptAttrs.identifiedByID) s += "#" + quoteKey(e.id);
  s += "," + conceptKey(e.conceptAttrs, includeWindow);
  std::vector<std::string> parts;
  for (const auto& a : e.attributes) parts.push_back(attributeKey(a));
  std::sort(parts.begin(), parts.end());
  std::vector<std::string> kids;
  for (const auto& c : e.externalInterfaces) kids.push_back(structuralKey(c));
  for (const auto& c : e.internalElements) kids.push_back(structuralKey(c));
  std::sort(kids.begin(), kids.end());
  for (const auto& p : parts) s += "," + p;
  for (const auto& k : kids) s += "," + k;
  return s + ")";
}

void canonicalOrder(CaexElement& e) {
  for (auto& c : e.externalInterfaces) canonicalOrder(c);
  for (auto& c : e.internalElements) canonicalOrder(c);
  auto elementKey = [](const CaexElement& c) {
    return std::make_pair(containsPrimary(c) ? 0 : 1, structuralKey(c));
  };
  sortByKey(e.externalInterfaces, elementKey);
  sortByKey(e.internalElements, elementKey);
  sortByKey(e.attributes, [](const CaexAttribute& a) {
    return std::make_pair(a.conceptAttrs.primary ? 0 : 1, attributeKey(a));
  });
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::array<char, 32> kCrockford = {'0', '1', '2', '3', '4', '5', '6', '7', '8', '9', 'A',
                                             'B', 'C', 'D', 'E', 'F', 'G', 'H', 'J', 'K', 'M', 'N',
                                             'P', 'Q', 'R', 'S', 'T', 'V', 'W', 'X', 'Y', 'Z'};

void assign(CaexElement& e, IdGenerator& gen) {
  if (!e.conceptAttrs.identifiedByID) e.id = gen.next();
  for (auto& c : e.externalInterfaces) assign(c, gen);
  for (auto& c : e.internalElements) assign(c, gen);
}

} // namespace

IdGenerator::IdGenerator(std::uint64_t seed) : prefix_(splitmix64(seed)) {}

std::string IdGenerator::next() {
  unsigned __int128 value = (static_cast<unsigned __int128>(prefix_) << 64) | counter_++;
  std::string out(26, '0');
  for (int i = 25; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kCrockford[static_cast<std::size_t>(value & 31U)];
    value >>= 5;
  }
  return out;
}

void assignIds(ConceptModelDocument& doc, std::uint64_t seed) {
  IdGenerator gen(seed);
  for (auto& m : doc.models) assign(m, gen);
}

namespace {

struct Palette {
  bool on;
  std::string primary() const { return on ? "\033[1;32m" : ""; }
  std::string negated() const { return on ? "\033[31m" : ""; }
  std::string dim() const { return on ? "\033[2m" : ""; }
  std::string reset() const { return on ? "\033[0m" : ""; }
};

std::string window(const ConceptAttributes& c) {
  return "[" + std::to_string(c.minCardinality) + "," +
         (c.maxCardinality ? std::to_string(*c.maxCardinality) : "-1") + "]";
}

std::string elementLine(const CaexElement& e, const Palette& p) {
  std::string label;
  if (e.classRef) {
    label = e.classRef->path;
    bool positional = (e.kind == ElementKind::InternalElement)
                          ? e.classRef->refKind == CaexKind::RoleClass
                          : e.classRef->refKind == CaexKind::InterfaceClass;
    if (!positional) label += "@suc";
  } else {
    label = "Thing";
  }
  if (e.conceptAttrs.identifiedByID) label += " {" + e.id + "}";
  std::string s = e.kind == ElementKind::InternalElement ? "IE " : "EI ";
  if (e.conceptAttrs.negated) s += p.negated() + "!" + label + p.reset();
  else s += label;
  s += " " + window(e.conceptAttrs);
  if (e.conceptAttrs.primary) s += p.primary() + "*" + p.reset();
  return s;
}

std::string attributeLine(const CaexAttribute& a, const Palette& p) {
  std::string s = "attr ";
  if (a.conceptAttrs.negated) s += p.negated() + "!" + p.reset();
  s += a.name + ":" + a.datatype;
  if (a.requiredValue) s += " = \"" + *a.requiredValue + "\"";
  s += " " + window(a.conceptAttrs);
  if (a.conceptAttrs.primary) s += p.primary() + "*" + p.reset();
  return s;
}

void renderElement(const CaexElement& e, const std::string& indent, bool last, bool root,
                   const Palette& p, std::ostringstream& os) {
  if (root) os << elementLine(e, p) << '\n';
  else os << indent << (last ? "`- " : "+- ") << elementLine(e, p) << '\n';
  std::string childIndent = root ? "" : indent + (last ? "   " : "|  ");
  std::size_t total = e.attributes.size() + e.externalInterfaces.size() + e.internalElements.size();
  std::size_t i = 0;
  for (const auto& a : e.attributes) {
    ++i;
    os << childIndent << (i == total ? "`- " : "+- ") << attributeLine(a, p) << '\n';
  }
  for (const auto& c : e.externalInterfaces) {
    ++i;
    renderElement(c, childIndent, i == total, false, p, os);
  }
  for (const auto& c : e.internalElements) {
    ++i;
    renderElement(c, childIndent, i == total, false, p, os);
  }
}

} // namespace

std::string renderModel(const CaexElement& root, bool color) {
  std::ostringstream os;
  renderElement(root, "", true, true, Palette{color}, os);
  return os.str();
}

std::string renderDocument(const ConceptModelDocument& doc, bool color) {
  std::string out;
  for (std::size_t i = 0; i < doc.models.size(); ++i) {
    if (doc.models.size() > 1) out += "model " + std::to_string(i + 1) + ":\n";
    out += renderModel(doc.models[i], color);
  }
  return out;
}

} // namespace amlowl
