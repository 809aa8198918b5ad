#include "novikov/dsl.hpp"

#include <cctype>
#include <map>

#include "novikov/error.hpp"

namespace novikov {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos),
      detail_(message) {}

namespace {

enum class Tok { Ident, Number, Star, Plus, Minus, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        if (j == line.size() || !std::isdigit(static_cast<unsigned char>(line[j])))
          throw ParseError({line_no, j + 1}, "expected a denominator after '/'");
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      if (j < line.size() && ident_start(line[j]))
        throw ParseError({line_no, j + 1}, "expected '*' between coefficient and basis name");
      out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      Tok k;
      switch (c) {
        case '*': k = Tok::Star; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '=': k = Tok::Equals; break;
        default:
          throw ParseError({line_no, col}, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  SourcePos where(const Token& t) const { return {line_, t.column}; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(where(t), msg);
  }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind)
      fail(t, std::string("expected ") + what +
                  (t.kind == Tok::End ? " before end of line" : ", found '" + t.text + "'"));
    return next();
  }

  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "' at end of line");
  }

  std::size_t basis_name(const AlgebraDoc& doc) {
    const Token& t = expect(Tok::Ident, "a basis name");
    if (auto idx = doc.basis_index(t.text)) return *idx;
    fail(t, "unknown basis name '" + t.text + "'");
  }

  Scalar coefficient(const AlgebraDoc& doc, const Token& t) const {
    mpq_class q;
    if (q.set_str(t.text, 10) != 0) fail(t, "malformed coefficient '" + t.text + "'");
    if (q.get_den() == 0) fail(t, "coefficient '" + t.text + "' has zero denominator");
    q.canonicalize();
    try {
      return Scalar(doc.field, q);
    } catch (const Error&) {
      fail(t, "coefficient '" + t.text + "' is not in " + doc.field.to_string());
    }
  }

  Vector combo(const AlgebraDoc& doc) {
    Vector v = zero_vector(doc.field, doc.basis.size());
    if (peek().kind == Tok::Number && peek().text == "0" &&
        toks_[pos_ + 1].kind == Tok::End) {
      next();
      return v;
    }
    bool first = true;
    while (true) {
      Scalar sign = Scalar::one(doc.field);
      if (peek().kind == Tok::Minus) {
        next();
        sign = -sign;
      } else if (peek().kind == Tok::Plus && !first) {
        next();
      } else if (!first) {
        fail(peek(), "expected '+' or '-' between terms");
      }
      Scalar c = Scalar::one(doc.field);
      if (peek().kind == Tok::Number) {
        c = coefficient(doc, next());
        expect(Tok::Star, "'*' after coefficient");
      }
      const std::size_t b = basis_name(doc);
      v[b] += sign * c;
      first = false;
      if (at_end()) return v;
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::string field_directive(const FieldSpec& f) {
  return f.is_rational() ? "field rational" : "field gf " + std::to_string(f.p);
}

}  // namespace

std::optional<std::size_t> AlgebraDoc::basis_index(std::string_view name) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == name) return i;
  return std::nullopt;
}

const NamedMap* AlgebraDoc::find_map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

AlgebraTable AlgebraDoc::table() const {
  AlgebraTable t(field, basis.size(), basis);
  for (const auto& p : products) t.set_product(p.left, p.right, p.value);
  return t;
}

LinearMap AlgebraDoc::linear_map(std::string_view name) const {
  const NamedMap* m = find_map(name);
  if (!m) throw Error(ErrorCode::InvalidArgument, "no map named '" + std::string(name) + "'");
  std::vector<Vector> images(basis.size(), zero_vector(field, basis.size()));
  for (const auto& e : m->entries) images[e.basis] = e.value;
  return LinearMap::from_images(field, images);
}

bool operator==(const AlgebraDoc& a, const AlgebraDoc& b) {
  if (a.field != b.field || a.basis != b.basis || !(a.table() == b.table())) return false;
  if (a.maps.size() != b.maps.size()) return false;
  for (std::size_t i = 0; i < a.maps.size(); ++i)
    if (a.maps[i].name != b.maps[i].name ||
        !(a.linear_map(a.maps[i].name) == b.linear_map(b.maps[i].name)))
      return false;
  return true;
}

AlgebraDoc parse_algebra_file(std::string_view text) {
  AlgebraDoc doc;
  bool have_field = false;
  bool have_basis = false;
  std::map<std::pair<std::size_t, std::size_t>, SourcePos> seen_products;
  std::map<std::pair<std::string, std::size_t>, SourcePos> seen_images;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    LineParser p(tokenize(line, line_no), line_no);
    if (p.at_end()) continue;
    const Token& head = p.expect(Tok::Ident, "a directive");

    if (head.text == "field") {
      if (have_field) p.fail(head, "field declared twice");
      const Token& kind = p.expect(Tok::Ident, "'rational' or 'gf'");
      if (kind.text == "rational") {
        doc.field = FieldSpec::rational();
      } else if (kind.text == "gf") {
        const Token& mod = p.expect(Tok::Number, "a prime modulus");
        unsigned long m = 0;
        try {
          m = std::stoul(mod.text);
        } catch (const std::exception&) {
          p.fail(mod, "modulus '" + mod.text + "' is not an integer");
        }
        if (mod.text.find('/') != std::string::npos || m > 0xFFFFFFFFul || !is_prime(m))
          p.fail(mod, "modulus " + mod.text + " is not prime");
        doc.field = FieldSpec::prime(static_cast<std::uint32_t>(m));
      } else {
        p.fail(kind, "unknown field '" + kind.text + "'");
      }
      p.expect_end();
      have_field = true;
    } else if (head.text == "basis") {
      if (!have_field) p.fail(head, "basis declared before field");
      if (have_basis) p.fail(head, "basis declared twice");
      while (!p.at_end()) {
        const Token& name = p.expect(Tok::Ident, "a basis name");
        if (doc.basis_index(name.text)) p.fail(name, "duplicate basis name '" + name.text + "'");
        doc.basis.push_back(name.text);
      }
      if (doc.basis.empty()) p.fail(head, "basis needs at least one name");
      have_basis = true;
    } else if (head.text == "mul") {
      if (!have_basis) p.fail(head, "product entry before basis declaration");
      const Token& lt = p.peek();
      const std::size_t l = p.basis_name(doc);
      const std::size_t r = p.basis_name(doc);
      p.expect(Tok::Equals, "'='");
      const SourcePos pos = p.where(lt);
      if (auto it = seen_products.find({l, r}); it != seen_products.end())
        p.fail(lt, "duplicate product entry " + doc.basis[l] + " " + doc.basis[r] +
                       " (first given on line " + std::to_string(it->second.line) + ")");
      seen_products[{l, r}] = pos;
      doc.products.push_back({l, r, p.combo(doc), pos});
    } else if (head.text == "map") {
      if (!have_basis) p.fail(head, "map entry before basis declaration");
      const Token& name = p.expect(Tok::Ident, "a map name");
      const Token& bt = p.peek();
      const std::size_t b = p.basis_name(doc);
      p.expect(Tok::Equals, "'='");
      if (auto it = seen_images.find({name.text, b}); it != seen_images.end())
        p.fail(bt, "duplicate image of " + doc.basis[b] + " under " + name.text +
                       " (first given on line " + std::to_string(it->second.line) + ")");
      seen_images[{name.text, b}] = p.where(bt);
      NamedMap* m = nullptr;
      for (auto& existing : doc.maps)
        if (existing.name == name.text) m = &existing;
      if (!m) {
        doc.maps.push_back({name.text, {}, p.where(name)});
        m = &doc.maps.back();
      }
      m->entries.push_back({b, p.combo(doc), p.where(bt)});
    } else {
      p.fail(head, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_field) throw ParseError({line_no, 1}, "missing field declaration");
  if (!have_basis) throw ParseError({line_no, 1}, "missing basis declaration");
  return doc;
}

Vector parse_combo(const AlgebraDoc& doc, std::string_view text, std::size_t line) {
  LineParser p(tokenize(text, line), line);
  if (p.at_end()) p.fail(p.peek(), "empty linear combination");
  return p.combo(doc);
}

std::string format_combo(const std::vector<std::string>& basis, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const bool rational = v[i].field().is_rational();
    const bool negative = rational && v[i].to_rational() < 0;
    const Scalar mag = negative ? -v[i] : v[i];
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += basis[i];
  }
  return out.empty() ? "0" : out;
}

std::string serialize(const AlgebraDoc& doc) {
  std::string out = field_directive(doc.field) + "\nbasis";
  for (const auto& b : doc.basis) out += " " + b;
  out += "\n";
  const AlgebraTable t = doc.table();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (!is_zero(t.product(i, j)))
        out += "mul " + doc.basis[i] + " " + doc.basis[j] + " = " +
               format_combo(doc.basis, t.product(i, j)) + "\n";
  for (const auto& m : doc.maps) {
    const LinearMap d = doc.linear_map(m.name);
    bool any = false;
    for (std::size_t i = 0; i < t.dim(); ++i) {
      const Vector img = d.matrix().column(i);
      if (is_zero(img)) continue;
      out += "map " + m.name + " " + doc.basis[i] + " = " + format_combo(doc.basis, img) + "\n";
      any = true;
    }
    if (!any && !doc.basis.empty()) out += "map " + m.name + " " + doc.basis[0] + " = 0\n";
  }
  return out;
}

namespace {

std::string identifier_for(std::string name) {
  for (auto& c : name)
    if (!ident_char(c)) c = '_';
  if (name.empty() || !ident_start(name[0])) name = "u" + name;
  return name;
}

}  // namespace

AlgebraDoc make_doc(const AlgebraTable& table,
                    const std::vector<std::pair<std::string, LinearMap>>& maps) {
  AlgebraDoc doc;
  doc.field = table.field();
  for (const auto& n : table.basis_names()) {
    std::string id = identifier_for(n);
    while (doc.basis_index(id)) id += "'";
    doc.basis.push_back(id);
  }
  for (std::size_t i = 0; i < table.dim(); ++i)
    for (std::size_t j = 0; j < table.dim(); ++j)
      if (!is_zero(table.product(i, j))) doc.products.push_back({i, j, table.product(i, j), {}});
  for (const auto& [name, d] : maps) {
    NamedMap m{identifier_for(name), {}, {}};
    for (std::size_t i = 0; i < table.dim(); ++i)
      m.entries.push_back({i, d.matrix().column(i), {}});
    doc.maps.push_back(std::move(m));
  }
  return doc;
}

}  // namespace novikov
