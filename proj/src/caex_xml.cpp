#include "amlowl/caex_xml.hpp"

#include "amlowl/errors.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <charconv>
#include <sstream>

namespace amlowl {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\r': out += "&#13;"; break;
      case '\n': out += "&#10;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

class Writer {
public:
  std::string str() const { return os_.str(); }

  void line(int depth, const std::string& text) {
    os_ << std::string(static_cast<std::size_t>(depth) * 2, ' ') << text << '\n';
  }

  void conceptAttribute(int depth, const char* name, const char* type, const std::string& value) {
    line(depth, std::string("<Attribute Name=\"") + name + "\" AttributeDataType=\"" + type + "\">");
    line(depth + 1, "<Value>" + escape(value) + "</Value>");
    line(depth, "</Attribute>");
  }

  void conceptAttrs(int depth, const ConceptAttributes& c) {
    const ConceptAttributes d;
    if (c.negated != d.negated) conceptAttribute(depth, "negated", "xs:boolean", "true");
    if (c.minCardinality != d.minCardinality)
      conceptAttribute(depth, "minCardinality", "xs:integer", std::to_string(c.minCardinality));
    if (c.maxCardinality != d.maxCardinality)
      conceptAttribute(depth, "maxCardinality", "xs:integer", std::to_string(*c.maxCardinality));
    if (c.identifiedByID != d.identifiedByID)
      conceptAttribute(depth, "identifiedByID", "xs:boolean", "true");
    if (c.primary != d.primary) conceptAttribute(depth, "primary", "xs:boolean", "true");
  }

  void attribute(int depth, const CaexAttribute& a) {
    std::string open = "<Attribute Name=\"" + escape(a.name) + "\" AttributeDataType=\"xs:" +
                       escape(a.datatype) + "\"";
    if (!a.requiredValue && a.conceptAttrs.isDefault()) {
      line(depth, open + "/>");
      return;
    }
    line(depth, open + ">");
    if (a.requiredValue) line(depth + 1, "<Value>" + escape(*a.requiredValue) + "</Value>");
    conceptAttrs(depth + 1, a.conceptAttrs);
    line(depth, "</Attribute>");
  }

  void element(int depth, const CaexElement& e) {
    const bool ie = e.kind == ElementKind::InternalElement;
    std::string open = std::string("<") + (ie ? "InternalElement" : "ExternalInterface") +
                       " ID=\"" + escape(e.id) + "\" Name=\"" + escape(e.name) + "\"";
    if (e.classRef) {
      if (!ie) open += " RefBaseClassPath=\"" + escape(e.classRef->path) + "\"";
      else if (e.classRef->refKind == CaexKind::SystemUnitClass)
        open += " RefBaseSystemUnitPath=\"" + escape(e.classRef->path) + "\"";
    }
    bool roleRequirement = ie && e.classRef && e.classRef->refKind == CaexKind::RoleClass;
    bool empty = e.conceptAttrs.isDefault() && e.attributes.empty() && e.externalInterfaces.empty() &&
                 e.internalElements.empty() && !roleRequirement;
    if (empty) {
      line(depth, open + "/>");
      return;
    }
    line(depth, open + ">");
    conceptAttrs(depth + 1, e.conceptAttrs);
    for (const auto& a : e.attributes) attribute(depth + 1, a);
    for (const auto& c : e.externalInterfaces) element(depth + 1, c);
    for (const auto& c : e.internalElements) element(depth + 1, c);
    if (roleRequirement)
      line(depth + 1, "<RoleRequirements RefBaseRoleClassPath=\"" + escape(e.classRef->path) + "\"/>");
    line(depth, std::string("</") + (ie ? "InternalElement" : "ExternalInterface") + ">");
  }

private:
  std::ostringstream os_;
};

using boost::property_tree::ptree;

class Reader {
public:
  XmlReadResult run(std::string_view xml) {
    ptree tree;
    std::istringstream in{std::string(xml)};
    try {
      boost::property_tree::read_xml(in, tree);
    } catch (const boost::property_tree::xml_parser_error& e) {
      throw XmlSyntaxError("malformed XML at line " + std::to_string(e.line()) + ": " + e.message());
    }

    const ptree* file = nullptr;
    for (const auto& [tag, node] : tree) {
      if (tag == "CAEXFile") {
        if (file) throw SchemaError("more than one CAEXFile element");
        file = &node;
      } else if (tag != "<xmlcomment>") {
        throw SchemaError("root element is <" + tag + ">, expected <CAEXFile>");
      }
    }
    if (!file) throw SchemaError("missing <CAEXFile> root element");

    for (const auto& [tag, node] : *file) {
      if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
      if (tag == "AdditionalInformation") {
        if (auto name = node.get_optional<std::string>("<xmlattr>.SourceClassName"))
          result_.document.sourceClassName = *name;
        continue;
      }
      if (tag != "InstanceHierarchy") {
        warn("CAEXFile", "ignored element <" + tag + ">");
        continue;
      }
      auto name = node.get<std::string>("<xmlattr>.Name", "");
      if (name != "ConceptModels") {
        warn("CAEXFile", "ignored instance hierarchy '" + name + "'");
        continue;
      }
      for (const auto& [childTag, child] : node) {
        if (childTag == "<xmlattr>" || childTag == "<xmlcomment>") continue;
        std::string path = "model[" + std::to_string(result_.document.models.size()) + "]";
        if (childTag == "InternalElement")
          result_.document.models.push_back(element(child, ElementKind::InternalElement, path));
        else
          warn("InstanceHierarchy", "ignored element <" + childTag + ">");
      }
    }
    if (result_.document.models.empty())
      throw SchemaError("no InternalElement under InstanceHierarchy 'ConceptModels'");
    return std::move(result_);
  }

private:
  void warn(const std::string& path, const std::string& message) {
    result_.warnings.push_back(path + ": " + message);
  }

  static std::string stripXs(std::string type) {
    return normalizeDatatype(type);
  }

  static std::string valueOf(const ptree& node, const std::string& path, const std::string& name) {
    auto v = node.get_child_optional("Value");
    if (!v) throw SchemaError(path + ": concept attribute '" + name + "' has no <Value>");
    return v->data();
  }

  static unsigned natural(const std::string& text, const std::string& path, const std::string& name) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
      throw SchemaError(path + ": " + name + " must be a natural number, got '" + text + "'");
    return value;
  }

  static bool boolean(const std::string& text, const std::string& path, const std::string& name) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw SchemaError(path + ": " + name + " must be a boolean, got '" + text + "'");
  }

  // Returns false if the attribute is not a concept attribute.
  bool conceptAttribute(const ptree& node, const std::string& path, ConceptAttributes& c) {
    auto name = node.get<std::string>("<xmlattr>.Name", "");
    if (!isConceptAttributeName(name)) return false;
    std::string text = valueOf(node, path, name);
    if (name == "negated") c.negated = boolean(text, path, name);
    else if (name == "primary") c.primary = boolean(text, path, name);
    else if (name == "identifiedByID" || name == "isIdentifiedByID")
      c.identifiedByID = boolean(text, path, name);
    else if (name == "minCardinality") c.minCardinality = natural(text, path, name);
    else if (text == "-1") c.maxCardinality.reset();
    else c.maxCardinality = natural(text, path, name);
    return true;
  }

  CaexAttribute dataAttribute(const ptree& node, const std::string& path) {
    CaexAttribute a;
    a.name = node.get<std::string>("<xmlattr>.Name", "");
    if (a.name.empty()) throw SchemaError(path + ": attribute without Name");
    a.datatype = stripXs(node.get<std::string>("<xmlattr>.AttributeDataType", "xs:string"));
    for (const auto& [tag, child] : node) {
      if (tag == "<xmlattr>") {
        for (const auto& [attr, _] : child)
          if (attr != "Name" && attr != "AttributeDataType")
            warn(path, "ignored XML attribute '" + attr + "'");
      } else if (tag == "Value") {
        a.requiredValue = child.data();
      } else if (tag == "Attribute") {
        if (!conceptAttribute(child, path, a.conceptAttrs))
          warn(path, "ignored nested attribute '" + child.get<std::string>("<xmlattr>.Name", "") + "'");
      } else if (tag != "<xmlcomment>") {
        warn(path, "ignored element <" + tag + ">");
      }
    }
    return a;
  }

  CaexElement element(const ptree& node, ElementKind kind, const std::string& path) {
    CaexElement e;
    e.kind = kind;
    const bool ie = kind == ElementKind::InternalElement;
    auto id = node.get_optional<std::string>("<xmlattr>.ID");
    if (!id || id->empty()) throw SchemaError(path + ": element without ID");
    e.id = *id;
    e.name = node.get<std::string>("<xmlattr>.Name", "");

    auto setRef = [&](const std::string& refPath, CaexKind refKind) {
      if (e.classRef) throw SchemaError(path + ": more than one class reference");
      e.classRef = ClassRef{refPath, refKind};
    };

    for (const auto& [tag, child] : node) {
      if (tag == "<xmlattr>") {
        for (const auto& [attr, value] : child) {
          if (attr == "ID" || attr == "Name") continue;
          if (!ie && attr == "RefBaseClassPath") setRef(value.data(), CaexKind::InterfaceClass);
          else if (ie && attr == "RefBaseSystemUnitPath")
            setRef(value.data(), CaexKind::SystemUnitClass);
          else warn(path, "ignored XML attribute '" + attr + "'");
        }
      } else if (tag == "Attribute") {
        std::string apath = path + ".attr[" + std::to_string(e.attributes.size()) + "]";
        if (!conceptAttribute(child, path, e.conceptAttrs))
          e.attributes.push_back(dataAttribute(child, apath));
      } else if (tag == "ExternalInterface" || tag == "InternalElement") {
        if (!ie) throw SchemaError(path + ": external interface with child <" + tag + ">");
        if (tag == "ExternalInterface")
          e.externalInterfaces.push_back(element(
              child, ElementKind::ExternalInterface,
              path + ".ei[" + std::to_string(e.externalInterfaces.size()) + "]"));
        else
          e.internalElements.push_back(element(
              child, ElementKind::InternalElement,
              path + ".ie[" + std::to_string(e.internalElements.size()) + "]"));
      } else if (tag == "RoleRequirements" && ie) {
        auto ref = child.get_optional<std::string>("<xmlattr>.RefBaseRoleClassPath");
        if (!ref) throw SchemaError(path + ": RoleRequirements without RefBaseRoleClassPath");
        setRef(*ref, CaexKind::RoleClass);
      } else if (tag != "<xmlcomment>") {
        warn(path, "ignored element <" + tag + ">");
      }
    }
    return e;
  }

  XmlReadResult result_;
};

} // namespace

std::string writeXml(const ConceptModelDocument& doc) {
  validate(doc);
  Writer w;
  w.line(0, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  w.line(0, "<CAEXFile FileName=\"ConceptModels.aml\" SchemaVersion=\"3.0\">");
  if (doc.sourceClassName)
    w.line(1, "<AdditionalInformation SourceClassName=\"" + escape(*doc.sourceClassName) + "\"/>");
  w.line(1, "<InstanceHierarchy Name=\"ConceptModels\">");
  for (const auto& m : doc.models) w.element(2, m);
  w.line(1, "</InstanceHierarchy>");
  w.line(0, "</CAEXFile>");
  return w.str();
}

XmlReadResult readXmlWithWarnings(std::string_view xml) { return Reader().run(xml); }

ConceptModelDocument readXml(std::string_view xml) { return readXmlWithWarnings(xml).document; }

} // namespace amlowl
