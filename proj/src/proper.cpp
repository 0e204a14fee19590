#include "amlowl/proper.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace amlowl {

std::string_view toString(ViolationTag tag) {
  switch (tag) {
    case ViolationTag::C1: return "C1";
    case ViolationTag::C2: return "C2";
    case ViolationTag::C3: return "C3";
    case ViolationTag::C4: return "C4";
    case ViolationTag::MixedSignAtomicConjunction: return "MixedSignAtomicConjunction";
    case ViolationTag::MultipleClassReferences: return "MultipleClassReferences";
    case ViolationTag::MultipleNominals: return "MultipleNominals";
    case ViolationTag::CaexKindMismatch: return "CaexKindMismatch";
    case ViolationTag::ChildUnderInterface: return "ChildUnderInterface";
    case ViolationTag::NonDistributableDisjunction: return "NonDistributableDisjunction";
    case ViolationTag::ComplexUniversalFiller: return "ComplexUniversalFiller";
  }
  return "?";
}

std::string describe(const Violation& v) {
  return std::string(toString(v.tag)) + " at " + (v.path.empty() ? "root" : v.path) + ": " +
         v.message;
}

namespace {

enum class Position { Element, Interface };

struct Enclosing {
  PropertyRef property;
  bool existential;  // ObjectSome / ObjectHasValue
  bool cardinalityLike;
};

using Alternative = std::vector<ClassExpression>;

constexpr std::size_t kMaxAlternatives = 4096;

// The conjunct lists a position can take once unions at this level are
// distributed. Fillers are not entered.
std::vector<Alternative> alternatives(const ClassExpression& ce) {
  if (ce.is<Or>()) {
    std::vector<Alternative> out;
    for (const auto& op : ce.as<Or>().operands) {
      auto sub = alternatives(op);
      out.insert(out.end(), sub.begin(), sub.end());
      if (out.size() > kMaxAlternatives) break;
    }
    return out;
  }
  if (ce.is<OneOf>()) {
    std::vector<Alternative> out;
    for (const auto& ind : ce.as<OneOf>().individuals) out.push_back({objectOneOf({ind})});
    return out;
  }
  if (ce.is<And>()) {
    std::vector<Alternative> acc{{}};
    for (const auto& op : ce.as<And>().operands) {
      auto sub = alternatives(op);
      std::vector<Alternative> next;
      for (const auto& left : acc)
        for (const auto& right : sub) {
          Alternative merged = left;
          merged.insert(merged.end(), right.begin(), right.end());
          next.push_back(std::move(merged));
          if (next.size() > kMaxAlternatives) break;
        }
      acc = std::move(next);
    }
    return acc;
  }
  return {{ce}};
}

bool isLiteral(const ClassExpression& ce) {
  return ce.is<Atomic>() || ce.is<Thing>() || ce.is<Nothing>() ||
         (ce.is<Not>() && ce.as<Not>().operand.is<Atomic>());
}

class Checker {
public:
  std::vector<Violation> run(const ClassExpression& ce) {
    position(ce, "", std::nullopt, {});
    return std::move(out_);
  }

private:
  void add(ViolationTag tag, const std::string& path, std::string message) {
    if (!seen_.insert({tag, path}).second) return;
    out_.push_back(Violation{tag, path, std::move(message)});
  }

  static std::string join(const std::string& path, const std::string& seg) {
    return path.empty() ? seg : path + "." + seg;
  }

  void checkAtomics(const Alternative& terms, const std::string& path, const char* where) {
    int pos = 0, neg = 0, nominals = 0;
    for (const auto& t : terms) {
      if (t.is<Atomic>()) ++pos;
      else if (t.is<Not>() && t.as<Not>().operand.is<Atomic>()) ++neg;
      else if (t.is<OneOf>()) ++nominals;
    }
    if (pos > 0 && neg > 0)
      add(ViolationTag::MixedSignAtomicConjunction, path,
          std::string("intersection of positive and negated atomic classes ") + where +
              " cannot be modeled by a single class reference");
    else if (pos + neg > 1)
      add(ViolationTag::MultipleClassReferences, path,
          std::string("more than one atomic class ") + where +
              " would need several class references on one element");
    if (nominals > 1)
      add(ViolationTag::MultipleNominals, path,
          std::string("more than one nominal ") + where + " would need several IDs");
  }

  // Checks that apply to the set of conjuncts describing one CAEX element.
  void checkPosition(const Alternative& terms, const std::string& path,
                     std::optional<Position> kind) {
    checkAtomics(terms, path, "at this position");

    std::vector<ClassExpression> inverse;
    for (const auto& t : terms)
      if (auto p = restrictionProperty(t); p && p->isInverse()) inverse.push_back(t);

    Position where = kind.value_or(Position::Element);
    if (!kind) {
      for (const auto& t : inverse)
        if (restrictionProperty(t)->name == "isEIOf") where = Position::Interface;
    }

    for (const auto& t : terms) {
      if (t.is<Atomic>() || (t.is<Not>() && t.as<Not>().operand.is<Atomic>())) {
        const auto& a = t.is<Atomic>() ? t.as<Atomic>() : t.as<Not>().operand.as<Atomic>();
        if (!a.kind) continue;
        bool interfaceClass = *a.kind == CaexKind::InterfaceClass;
        if (interfaceClass != (where == Position::Interface))
          add(ViolationTag::CaexKindMismatch, path,
              "class '" + a.name + "' is annotated " + std::string(toString(*a.kind)) +
                  " but describes an " +
                  (where == Position::Interface ? "external interface" : "internal element"));
      }
      if (auto p = restrictionProperty(t); p && p->kind == PropertyKind::ObjectForward &&
                                          where == Position::Interface)
        add(ViolationTag::ChildUnderInterface, path,
            "'" + print(t) + "' places a child under an external interface");
    }

    if (inverse.size() > 1) {
      std::set<std::string> names;
      for (const auto& t : inverse) names.insert(restrictionProperty(t)->name);
      if (names.size() > 1)
        add(ViolationTag::C3, path,
            "isIEOf and isEIOf on the same object: internal elements and external interfaces "
            "are disjoint");
      // The fillers all describe the unique parent and are merged into it.
      Alternative merged;
      for (const auto& t : inverse)
        if (auto f = restrictionFiller(t); f && !f->is<Or>()) {
          auto c = conjuncts(*f);
          merged.insert(merged.end(), c.begin(), c.end());
        }
      checkAtomics(merged, path, "in the merged parent description");
    }
  }

  void position(const ClassExpression& ce, const std::string& path,
                std::optional<Position> kind, const std::vector<Enclosing>& ctx) {
    auto alts = alternatives(ce);
    if (alts.size() <= kMaxAlternatives)
      for (const auto& alt : alts) checkPosition(alt, path, kind);
    walk(ce, path, kind, ctx);
  }

  void walk(const ClassExpression& ce, const std::string& path, std::optional<Position> kind,
            const std::vector<Enclosing>& ctx) {
    bool underNonExistential =
        std::any_of(ctx.begin(), ctx.end(), [](const Enclosing& e) { return !e.existential; });

    if (ce.is<And>() || ce.is<Or>()) {
      const auto& ops = ce.is<And>() ? ce.as<And>().operands : ce.as<Or>().operands;
      if (ce.is<Or>() && underNonExistential)
        add(ViolationTag::NonDistributableDisjunction, path,
            "union inside the filler of a universal or cardinality restriction cannot be split "
            "into separate concept models");
      for (std::size_t i = 0; i < ops.size(); ++i)
        walk(ops[i], join(path, "operand[" + std::to_string(i) + "]"), kind, ctx);
      return;
    }
    if (ce.is<OneOf>()) {
      if (ce.as<OneOf>().individuals.size() > 1 && underNonExistential)
        add(ViolationTag::NonDistributableDisjunction, path,
            "nominal with several individuals inside the filler of a universal or cardinality "
            "restriction cannot be split into separate concept models");
      return;
    }

    auto prop = restrictionProperty(ce);
    if (!prop || prop->isData()) return;

    bool existential = ce.is<ObjectSome>() || ce.is<ObjectHasValue>();
    bool cardinalityLike = ce.is<ObjectCardinality>() || ce.is<ObjectAll>();

    if (prop->isInverse()) {
      bool c2 = cardinalityLike ||
                std::any_of(ctx.begin(), ctx.end(), [](const Enclosing& e) { return e.cardinalityLike; });
      if (c2)
        add(ViolationTag::C2, path,
            "inverse property '" + prop->name +
                "' used with or inside a cardinality/universal restriction");
      auto forward = std::find_if(ctx.rbegin(), ctx.rend(), [](const Enclosing& e) {
        return e.property.kind == PropertyKind::ObjectForward;
      });
      if (forward != ctx.rend()) {
        if (forward->property.name == prop->inverse().name)
          add(ViolationTag::C1, path,
              "'" + prop->name + "' inside the filler of a restriction over '" +
                  forward->property.name + "'");
        else
          add(ViolationTag::C3, path,
              "'" + prop->name + "' inside the filler of a restriction over '" +
                  forward->property.name + "'");
      }
      if (prop->name == "isEIOf" &&
          std::any_of(ctx.begin(), ctx.end(), [](const Enclosing& e) { return e.property.isInverse(); }))
        add(ViolationTag::C4, path,
            "isEIOf inside the filler of an inverse restriction: external interfaces have no "
            "children");
    } else if (ce.is<ObjectAll>() && !isLiteral(ce.as<ObjectAll>().filler)) {
      add(ViolationTag::ComplexUniversalFiller, path,
          "universal restriction filler must be an atomic class, its complement, Thing or Nothing; "
          "rewrite as '" + prop->name + " max 0 (...)' over the complement");
    }

    auto filler = restrictionFiller(ce);
    if (!filler) return;
    Position fillerKind = prop->name == "hasEI" ? Position::Interface : Position::Element;
    auto inner = ctx;
    inner.push_back(Enclosing{*prop, existential, cardinalityLike});
    position(*filler, join(path, "filler"), fillerKind, inner);
  }

  std::vector<Violation> out_;
  std::set<std::pair<ViolationTag, std::string>> seen_;
};

} // namespace

std::vector<Violation> checkProper(const ClassExpression& ce) { return Checker().run(ce); }

} // namespace amlowl
