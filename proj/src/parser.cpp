#include "amlowl/parser.hpp"

#include "amlowl/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace amlowl {

SyntaxError::SyntaxError(std::size_t offset, std::size_t line, std::size_t column,
                         std::string found, std::vector<std::string> expected)
    : Error([&] {
        std::ostringstream os;
        os << "syntax error at line " << line << ", column " << column << ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i) os << (i + 1 == expected.size() ? " or " : ", ");
          os << expected[i];
        }
        os << ", found " << found;
        return os.str();
      }()),
      offset_(offset),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Name, String, Number, LParen, RParen, LBrace, RBrace, Comma, Caret2, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;              // name / unescaped string / number lexeme
  std::optional<CaexKind> annotation;
  bool iri = false;              // <...> names are never keywords
  std::size_t offset = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipTrivia();
      Token t;
      t.offset = pos_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (c == '(') { t.kind = Tok::LParen; ++pos_; }
      else if (c == ')') { t.kind = Tok::RParen; ++pos_; }
      else if (c == '{') { t.kind = Tok::LBrace; ++pos_; }
      else if (c == '}') { t.kind = Tok::RBrace; ++pos_; }
      else if (c == ',') { t.kind = Tok::Comma; ++pos_; }
      else if (c == '^' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '^') {
        t.kind = Tok::Caret2;
        pos_ += 2;
      } else if (c == '"') {
        lexString(t);
      } else if (c == '<') {
        lexIri(t);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 ((c == '-' || c == '+') && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        lexNumber(t);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        lexName(t);
      } else {
        fail(pos_, std::string("'") + c + "'", {"a token"});
      }
      out.push_back(std::move(t));
    }
  }

  [[noreturn]] void fail(std::size_t at, std::string found, std::vector<std::string> expected) const {
    auto [line, col] = lineColumn(src_, at);
    throw SyntaxError(at, line, col, std::move(found), std::move(expected));
  }

  static std::pair<std::size_t, std::size_t> lineColumn(std::string_view src, std::size_t at) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < src.size(); ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

private:
  void skipTrivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  static bool nameChar(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':';
  }

  void lexName(Token& t) {
    std::size_t start = pos_;
    while (pos_ < src_.size() && nameChar(src_[pos_])) ++pos_;
    // A trailing '.' or '-' is never part of a name.
    while (pos_ > start + 1 && (src_[pos_ - 1] == '.' || src_[pos_ - 1] == '-')) --pos_;
    t.kind = Tok::Name;
    t.text = std::string(src_.substr(start, pos_ - start));
    lexAnnotation(t);
  }

  void lexAnnotation(Token& t) {
    if (pos_ >= src_.size() || src_[pos_] != '@') return;
    std::size_t at = pos_++;
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    auto tag = src_.substr(start, pos_ - start);
    if (tag == "rc") t.annotation = CaexKind::RoleClass;
    else if (tag == "ic") t.annotation = CaexKind::InterfaceClass;
    else if (tag == "suc") t.annotation = CaexKind::SystemUnitClass;
    else fail(at, "'@" + std::string(tag) + "'", {"@rc", "@ic", "@suc"});
  }

  void lexIri(Token& t) {
    std::size_t start = ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '>' && src_[pos_] != '\n') ++pos_;
    if (pos_ >= src_.size() || src_[pos_] != '>') fail(t.offset, "unterminated IRI", {"'>'"});
    t.kind = Tok::Name;
    t.iri = true;
    t.text = std::string(src_.substr(start, pos_ - start));
    ++pos_;
    lexAnnotation(t);
  }

  void lexString(Token& t) {
    ++pos_;
    std::string s;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
      s += src_[pos_++];
    }
    if (pos_ >= src_.size()) fail(t.offset, "unterminated string", {"'\"'"});
    ++pos_;
    t.kind = Tok::String;
    t.text = std::move(s);
  }

  void lexNumber(Token& t) {
    std::size_t start = pos_;
    if (src_[pos_] == '-' || src_[pos_] == '+') ++pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        digits();
      else
        pos_ = save;
    }
    t.kind = Tok::Number;
    t.text = std::string(src_.substr(start, pos_ - start));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool isRestrictionKeyword(const std::string& s) {
  return s == "some" || s == "only" || s == "min" || s == "max" || s == "exactly" ||
         s == "value" || s == "Self";
}

bool isReserved(const std::string& s) {
  return isRestrictionKeyword(s) || s == "and" || s == "or" || s == "not";
}

class Parser {
public:
  Parser(std::string_view src) : src_(src), lexer_(src), toks_(lexer_.run()) {}

  ClassExpression parseAll() {
    auto ce = expr();
    if (peek().kind != Tok::End) fail({"'and'", "'or'", "end of input"});
    return ce;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool atKeyword(std::string_view kw, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind == Tok::Name && !t.iri && !t.annotation && t.text == kw;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Name: return "'" + t.text + "'";
      case Tok::String: return "string \"" + t.text + "\"";
      case Tok::Number: return "number " + t.text;
      case Tok::LParen: return "'('";
      case Tok::RParen: return "')'";
      case Tok::LBrace: return "'{'";
      case Tok::RBrace: return "'}'";
      case Tok::Comma: return "','";
      case Tok::Caret2: return "'^^'";
      case Tok::End: return "end of input";
    }
    return "?";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    lexer_.fail(peek().offset, describe(peek()), std::move(expected));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail({what});
    next();
  }

  ClassExpression expr() {
    std::vector<ClassExpression> ops{term()};
    while (atKeyword("or")) {
      next();
      ops.push_back(term());
    }
    return objectUnionOf(std::move(ops));
  }

  ClassExpression term() {
    std::vector<ClassExpression> ops{factor()};
    while (atKeyword("and")) {
      next();
      ops.push_back(factor());
    }
    return objectIntersectionOf(std::move(ops));
  }

  bool startsFactor() const {
    const auto& t = peek();
    if (t.kind == Tok::LParen || t.kind == Tok::LBrace) return true;
    if (t.kind != Tok::Name) return false;
    if (t.iri) return true;
    return !(t.text == "and" || t.text == "or" || isRestrictionKeyword(t.text));
  }

  ClassExpression factor() {
    const Token& t = peek();
    if (atKeyword("not")) {
      next();
      return objectComplementOf(factor());
    }
    if (t.kind == Tok::LParen) {
      next();
      auto ce = expr();
      expect(Tok::RParen, "')'");
      return ce;
    }
    if (t.kind == Tok::LBrace) {
      next();
      std::vector<std::string> names{individual()};
      while (peek().kind == Tok::Comma) {
        next();
        names.push_back(individual());
      }
      expect(Tok::RBrace, "'}'");
      return objectOneOf(std::move(names));
    }
    if (t.kind != Tok::Name || (!t.iri && isReserved(t.text)))
      fail({"class name", "'not'", "'('", "'{'", "'Thing'", "'Nothing'"});

    if (!t.iri && !t.annotation && (t.text == "Thing" || t.text == "owl:Thing")) {
      next();
      return owlThing();
    }
    if (!t.iri && !t.annotation && (t.text == "Nothing" || t.text == "owl:Nothing")) {
      next();
      return owlNothing();
    }
    if (peek(1).kind == Tok::Name && !peek(1).iri && isRestrictionKeyword(peek(1).text)) {
      if (t.annotation) fail({"property name without @ annotation"});
      return restriction();
    }
    Token name = next();
    return atomicClass(name.text, name.annotation);
  }

  std::string individual() {
    const Token& t = peek();
    if (t.kind != Tok::Name || t.annotation || (!t.iri && isReserved(t.text)))
      fail({"individual name"});
    return next().text;
  }

  unsigned cardinality() {
    const Token& t = peek();
    unsigned n = 0;
    if (t.kind != Tok::Number) fail({"non-negative integer"});
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail({"non-negative integer"});
    next();
    return n;
  }

  ClassExpression restriction() {
    const Token& propTok = next();
    std::size_t propOffset = propTok.offset;
    PropertyRef prop = PropertyRef::named(propTok.text);
    std::string kw = next().text;
    auto uncovered = [&](const std::string& what) {
      auto [line, col] = Lexer::lineColumn(src_, propOffset);
      throw UncoveredConstructor(what + " at line " + std::to_string(line) + ", column " +
                                 std::to_string(col) + " is not supported");
    };

    if (kw == "Self") uncovered("ObjectHasSelf (" + prop.name + " Self)");

    if (prop.isData()) {
      if (kw == "only") uncovered("DataAllValuesFrom (" + prop.name + " only ...)");
      if (kw == "min" || kw == "max" || kw == "exactly")
        uncovered("data cardinality restriction (" + prop.name + " " + kw + " ...)");
      if (kw == "value") return dataHasValue(prop, literal());
      return dataSomeValuesFrom(prop, dataRange());
    }

    if (kw == "some") return objectSomeValuesFrom(prop, factor());
    if (kw == "only") return objectAllValuesFrom(prop, factor());
    if (kw == "value") return objectHasValue(prop, individual());
    CardinalityKind ck = kw == "min"   ? CardinalityKind::Min
                         : kw == "max" ? CardinalityKind::Max
                                       : CardinalityKind::Exact;
    unsigned n = cardinality();
    ClassExpression filler = startsFactor() ? factor() : owlThing();
    return objectCardinality(ck, n, prop, filler);
  }

  Literal literal() {
    const Token& t = peek();
    if (t.kind == Tok::String) {
      Literal lit{next().text, "string"};
      if (peek().kind == Tok::Caret2) {
        next();
        if (peek().kind != Tok::Name) fail({"datatype"});
        lit.datatype = normalizeDatatype(next().text);
      }
      if (!conformsTo(lit.lexical, lit.datatype)) fail({"literal of type " + lit.datatype});
      return lit;
    }
    if (t.kind == Tok::Number) {
      bool real = t.text.find_first_of(".eE") != std::string::npos;
      return Literal{next().text, real ? "double" : "integer"};
    }
    if (atKeyword("true") || atKeyword("false")) return Literal{next().text, "boolean"};
    fail({"literal"});
  }

  DataRange dataRange() {
    if (atKeyword("not")) {
      next();
      auto r = dataRange();
      r.negated = !r.negated;
      return r;
    }
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      auto r = dataRange();
      expect(Tok::RParen, "')'");
      return r;
    }
    if (t.kind == Tok::LBrace) {
      next();
      Literal lit = literal();
      expect(Tok::RBrace, "'}'");
      return DataRange{lit.datatype, lit.lexical, false};
    }
    if (t.kind == Tok::Name && !t.annotation && (t.iri || !isReserved(t.text)))
      return DataRange{normalizeDatatype(next().text), std::nullopt, false};
    fail({"datatype", "'{'", "'not'", "'('"});
  }

  std::string_view src_;
  Lexer lexer_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

ClassExpression parse(std::string_view text) { return Parser(text).parseAll(); }

} // namespace amlowl
