#include "homnalg/hna.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace homnalg {

namespace {

struct Token {
  enum class Kind { Ident, Integer, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0, col = 0;
};

class Lexer {
public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  const Token& peek() {
    if (!have_) {
      tok_ = lex();
      have_ = true;
    }
    return tok_;
  }
  Token next() {
    const Token& t = peek();
    have_ = false;
    return t;
  }
  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(file_, at.line, at.col, msg);
  }
  const std::string& file() const { return file_; }

private:
  Token lex() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_, ++col_;
        continue;
      }
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
        continue;
      }
      break;
    }
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t s = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_, ++col_;
      t.kind = Token::Kind::Ident;
      t.text = std::string(text_.substr(s, pos_ - s));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_, ++col_;
      t.kind = Token::Kind::Integer;
      t.text = std::string(text_.substr(s, pos_ - s));
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      col_ += 2;
      t.kind = Token::Kind::Punct;
      t.text = "->";
      return t;
    }
    static const std::string punct = "{}[],;=:+-*/";
    if (punct.find(c) != std::string::npos) {
      ++pos_;
      ++col_;
      t.kind = Token::Kind::Punct;
      t.text = std::string(1, c);
      return t;
    }
    throw ParseError(file_, line_, col_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
  bool have_ = false;
};

class Parser {
public:
  Parser(std::string_view text, std::string file) : lx_(text, std::move(file)) {}

  Document parse() {
    Document doc;
    while (lx_.peek().kind != Token::Kind::End) {
      Token t = lx_.peek();
      if (t.kind != Token::Kind::Ident) lx_.fail(t, "expected 'algebra' or 'morphism'");
      if (t.text == "algebra") {
        parse_algebra(doc);
      } else if (t.text == "morphism") {
        parse_morphism(doc);
      } else {
        lx_.fail(t, "expected 'algebra' or 'morphism', got '" + t.text + "'");
      }
    }
    return doc;
  }

private:
  Token expect_ident(const char* what) {
    Token t = lx_.next();
    if (t.kind != Token::Kind::Ident) lx_.fail(t, std::string("expected ") + what);
    return t;
  }
  void expect_punct(const std::string& p) {
    Token t = lx_.next();
    if (t.kind != Token::Kind::Punct || t.text != p) lx_.fail(t, "expected '" + p + "'");
  }
  bool peek_punct(const std::string& p) {
    const Token& t = lx_.peek();
    return t.kind == Token::Kind::Punct && t.text == p;
  }
  std::uint32_t expect_number(const char* what) {
    Token t = lx_.next();
    if (t.kind != Token::Kind::Integer) lx_.fail(t, std::string("expected ") + what);
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  // <rat> ::= integer | integer/positive-integer (sign handled by the caller)
  Rat parse_rat_tail(const std::string& digits, const Token& at) {
    std::string s = digits;
    if (peek_punct("/")) {
      lx_.next();
      Token den = lx_.next();
      if (den.kind != Token::Kind::Integer) lx_.fail(den, "expected a denominator");
      s += "/" + den.text;
    }
    try {
      return rat_parse(s);
    } catch (const Error& e) {
      lx_.fail(at, e.what());
    }
  }

  // <lincomb> ::= 0 | [±] term (± term)*, term ::= [<rat> *] <id>
  Vec parse_lincomb(const std::vector<std::string>& labels,
                    const std::map<std::string, std::uint32_t>& index) {
    Vec v(labels.size());
    Token first = lx_.peek();
    if (first.kind == Token::Kind::Integer && first.text == "0") {
      lx_.next();
      if (!peek_punct("/") && !peek_punct("*")) return v;  // plain zero
      lx_.fail(first, "zero cannot carry a denominator or a basis factor");
    }
    bool negate = false;
    if (peek_punct("-")) {
      lx_.next();
      negate = true;
    } else if (peek_punct("+")) {
      lx_.next();
    }
    while (true) {
      Rat coef = 1;
      Token t = lx_.next();
      if (t.kind == Token::Kind::Integer) {
        coef = parse_rat_tail(t.text, t);
        expect_punct("*");
        t = lx_.next();
      }
      if (t.kind != Token::Kind::Ident) lx_.fail(t, "expected a basis label");
      auto it = index.find(t.text);
      if (it == index.end()) lx_.fail(t, "unknown basis label '" + t.text + "'");
      if (negate) coef = -coef;
      v[it->second] += coef;
      if (peek_punct("+")) {
        lx_.next();
        negate = false;
      } else if (peek_punct("-")) {
        lx_.next();
        negate = true;
      } else {
        break;
      }
    }
    return v;
  }

  void parse_algebra(Document& doc) {
    lx_.next();  // algebra
    Token name = expect_ident("an algebra name");
    if (doc.find_algebra(name.text)) lx_.fail(name, "duplicate algebra '" + name.text + "'");
    expect_punct("{");
    std::optional<std::uint32_t> arity, dim;
    std::vector<std::string> labels;
    std::map<std::string, std::uint32_t> index;
    std::vector<std::pair<IdxTuple, Vec>> entries;
    std::set<IdxTuple> seen;
    bool skew = false;
    std::optional<Matrix> alpha;
    std::map<std::uint32_t, Vec> alpha_rows;
    Token alpha_at = name;

    auto need_header = [&](const Token& at) {
      if (!arity || !dim || labels.empty())
        lx_.fail(at, "arity, dim and basis must come before brackets and alpha");
    };

    while (!peek_punct("}")) {
      Token key = expect_ident("a declaration");
      if (key.text == "arity") {
        arity = expect_number("the arity");
        if (*arity < 2) lx_.fail(key, "arity must be at least 2");
        expect_punct(";");
      } else if (key.text == "dim") {
        dim = expect_number("the dimension");
        expect_punct(";");
      } else if (key.text == "basis") {
        if (!dim) lx_.fail(key, "dim must come before basis");
        while (!peek_punct(";")) {
          Token lab = expect_ident("a basis label");
          if (index.count(lab.text)) lx_.fail(lab, "duplicate basis label '" + lab.text + "'");
          index.emplace(lab.text, static_cast<std::uint32_t>(labels.size()));
          labels.push_back(lab.text);
        }
        lx_.next();  // ;
        if (labels.size() != *dim) lx_.fail(key, "basis size does not match dim");
      } else if (key.text == "generate") {
        Token w = expect_ident("'skew'");
        if (w.text != "skew") lx_.fail(w, "expected 'skew'");
        skew = true;
        expect_punct(";");
      } else if (key.text == "bracket") {
        need_header(key);
        expect_punct("[");
        IdxTuple t;
        while (true) {
          Token lab = expect_ident("a basis label");
          auto it = index.find(lab.text);
          if (it == index.end()) lx_.fail(lab, "unknown basis label '" + lab.text + "'");
          t.push_back(it->second);
          if (peek_punct(",")) {
            lx_.next();
            continue;
          }
          break;
        }
        expect_punct("]");
        if (t.size() != *arity) lx_.fail(key, "bracket tuple arity mismatch");
        if (!seen.insert(t).second) lx_.fail(key, "duplicate bracket tuple");
        expect_punct("=");
        Vec v = parse_lincomb(labels, index);
        expect_punct(";");
        entries.emplace_back(std::move(t), std::move(v));
      } else if (key.text == "alpha") {
        need_header(key);
        alpha_at = key;
        Token t = lx_.peek();
        if (t.kind == Token::Kind::Ident && (t.text == "id" || t.text == "zero")) {
          lx_.next();
          alpha = t.text == "id" ? Matrix::identity(*dim) : Matrix(*dim, *dim);
          expect_punct(";");
        } else {
          // (<id> = <lincomb> ;)+
          while (true) {
            Token lab = expect_ident("a basis label");
            auto it = index.find(lab.text);
            if (it == index.end()) lx_.fail(lab, "unknown basis label '" + lab.text + "'");
            if (alpha_rows.count(it->second))
              lx_.fail(lab, "duplicate alpha entry for '" + lab.text + "'");
            expect_punct("=");
            alpha_rows.emplace(it->second, parse_lincomb(labels, index));
            expect_punct(";");
            const Token& nxt = lx_.peek();
            if (nxt.kind == Token::Kind::Ident && index.count(nxt.text)) continue;
            break;
          }
        }
      } else {
        lx_.fail(key, "unknown declaration '" + key.text + "'");
      }
    }
    expect_punct("}");
    Token closing = name;
    if (!arity || !dim || labels.size() != *dim)
      lx_.fail(closing, "algebra needs arity, dim and a basis");
    if (!alpha && alpha_rows.empty()) lx_.fail(closing, "algebra needs an alpha declaration");
    if (!alpha) {
      if (alpha_rows.size() != *dim)
        lx_.fail(alpha_at, "explicit alpha must map every basis element");
      Matrix m(*dim, *dim);
      for (const auto& [c, col] : alpha_rows) m.set_column(c, col);
      alpha = std::move(m);
    }
    AlgebraPtr a = new_algebra(name.text, *arity, *dim, labels, entries, std::move(*alpha),
                               {.generate_skew = skew});
    doc.algebras.emplace_back(name.text, std::move(a));
  }

  void parse_morphism(Document& doc) {
    lx_.next();  // morphism
    Token name = expect_ident("a morphism name");
    if (doc.find_morphism(name.text)) lx_.fail(name, "duplicate morphism '" + name.text + "'");
    expect_punct(":");
    Token src = expect_ident("a source algebra name");
    expect_punct("->");
    Token dst = expect_ident("a target algebra name");
    AlgebraPtr s = doc.find_algebra(src.text);
    AlgebraPtr t = doc.find_algebra(dst.text);
    if (!s) lx_.fail(src, "unknown algebra '" + src.text + "'");
    if (!t) lx_.fail(dst, "unknown algebra '" + dst.text + "'");
    std::map<std::string, std::uint32_t> sidx, tidx;
    for (std::uint32_t i = 0; i < s->dim(); ++i) sidx.emplace(s->labels()[i], i);
    for (std::uint32_t i = 0; i < t->dim(); ++i) tidx.emplace(t->labels()[i], i);
    expect_punct("{");
    Matrix m(t->dim(), s->dim());
    std::set<std::uint32_t> mapped;
    while (!peek_punct("}")) {
      Token key = expect_ident("'map'");
      if (key.text != "map") lx_.fail(key, "expected 'map'");
      Token lab = expect_ident("a source basis label");
      auto it = sidx.find(lab.text);
      if (it == sidx.end()) lx_.fail(lab, "unknown source basis label '" + lab.text + "'");
      if (!mapped.insert(it->second).second)
        lx_.fail(lab, "duplicate map entry for '" + lab.text + "'");
      expect_punct("=");
      m.set_column(it->second, parse_lincomb(t->labels(), tidx));
      expect_punct(";");
    }
    expect_punct("}");
    if (mapped.size() != s->dim())
      lx_.fail(name, "morphism must map every source basis element");
    Morphism f{name.text, s, t, std::move(m)};
    MorphismCheck chk = check_morphism(f);
    doc.morphisms.push_back(std::move(f));
    doc.morphism_checks.emplace_back(name.text, std::move(chk));
  }

  Lexer lx_;
};

}  // namespace

AlgebraPtr Document::find_algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return a;
  return nullptr;
}

const Morphism* Document::find_morphism(const std::string& name) const {
  for (const auto& m : morphisms)
    if (m.name == name) return &m;
  return nullptr;
}

Document parse_hna(std::string_view text, const std::string& filename) {
  return Parser(text, filename).parse();
}

Document parse_hna_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_hna(ss.str(), path.string());
}

std::string lincomb_str(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rat c = v[i];
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (c != 1) out += rat_str(c) + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string hna_identifier(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      out += c;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "A_" + out;
  return out;
}

std::string print_algebra_hna(const std::string& name, const HomNAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << hna_identifier(name) << " {\n";
  os << "  arity " << a.arity() << " ;\n";
  os << "  dim " << a.dim() << " ;\n";
  os << "  basis";
  for (const auto& l : a.labels()) os << " " << l;
  os << " ;\n";
  for (const auto& [t, v] : a.table()) {
    os << "  bracket [";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << a.labels()[t[i]];
    os << "] = " << lincomb_str(v, a.labels()) << " ;\n";
  }
  if (a.alpha().is_zero()) {
    os << "  alpha zero ;\n";
  } else if (a.alpha().is_identity()) {
    os << "  alpha id ;\n";
  } else {
    os << "  alpha";
    for (std::uint32_t c = 0; c < a.dim(); ++c)
      os << " " << a.labels()[c] << " = " << lincomb_str(a.alpha().column(c), a.labels()) << " ;";
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string print_hna(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, a] : doc.algebras) {
    if (!first) os << "\n";
    first = false;
    os << print_algebra_hna(name, *a);
  }
  for (const auto& m : doc.morphisms) {
    os << "\nmorphism " << m.name << " : ";
    // source and target names are the document names
    std::string sname, tname;
    for (const auto& [n, a] : doc.algebras) {
      if (a == m.source) sname = n;
      if (a == m.target) tname = n;
    }
    os << sname << " -> " << tname << " {\n";
    for (std::uint32_t c = 0; c < m.source->dim(); ++c)
      os << "  map " << m.source->labels()[c] << " = "
         << lincomb_str(m.matrix.column(c), m.target->labels()) << " ;\n";
    os << "}\n";
  }
  return os.str();
}

bool documents_equal(const Document& a, const Document& b) {
  if (a.algebras.size() != b.algebras.size() || a.morphisms.size() != b.morphisms.size())
    return false;
  for (std::size_t i = 0; i < a.algebras.size(); ++i) {
    const auto& [na, pa] = a.algebras[i];
    const auto& [nb, pb] = b.algebras[i];
    if (na != nb || pa->arity() != pb->arity() || pa->dim() != pb->dim() ||
        pa->labels() != pb->labels() || !(pa->table() == pb->table()) ||
        !(pa->alpha() == pb->alpha()))
      return false;
  }
  for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
    const Morphism& ma = a.morphisms[i];
    const Morphism& mb = b.morphisms[i];
    if (ma.name != mb.name || !(ma.matrix == mb.matrix)) return false;
  }
  return true;
}

}  // namespace homnalg
