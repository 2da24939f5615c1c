#include "tiltglue/io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "tiltglue/error.hpp"

namespace tiltglue {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based, in bytes
};

struct Line {
  std::size_t number;
  std::string text;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

[[noreturn]] void parse_error(const Line& line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line.number) + ", column " + std::to_string(column) + ": " + what);
}

std::int64_t parse_int(const Line& line, const Token& tok) {
  std::int64_t v = 0;
  const char* b = tok.text.data();
  const char* e = b + tok.text.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) parse_error(line, tok.column, "expected an integer, got '" + tok.text + "'");
  return v;
}

Scalar to_field(std::int64_t v, const PrimeField& f) {
  const auto p = static_cast<std::int64_t>(f.modulus());
  return static_cast<Scalar>(((v % p) + p) % p);
}

void expect_count(const Line& line, std::size_t n, const char* usage) {
  if (line.tokens.size() != n) parse_error(line, line.tokens.front().column, std::string("expected '") + usage + "'");
}

// All ways to cut a word into arrow names.
void segmentations(const Quiver& q, const std::string& word, std::size_t at, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
  if (at == word.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::string& name = q.arrow(a).name;
    if (word.compare(at, name.size(), name) == 0) {
      current.push_back(a);
      segmentations(q, word, at + name.size(), current, out);
      current.pop_back();
    }
  }
}

RelationTerm parse_term(const Line& line, const Token& tok, bool negate, const Quiver& q, const PrimeField& f) {
  std::int64_t coeff = 1;
  std::string word = tok.text;
  if (auto star = word.find('*'); star != std::string::npos) {
    coeff = parse_int(line, Token{word.substr(0, star), tok.column});
    word = word.substr(star + 1);
  } else if (!word.empty() && word.front() == '-') {
    coeff = -1;
    word = word.substr(1);
  }
  if (negate) coeff = -coeff;
  if (word.empty()) parse_error(line, tok.column, "empty path in relation");
  std::vector<std::vector<std::size_t>> cuts;
  std::vector<std::size_t> current;
  segmentations(q, word, 0, current, cuts);
  if (cuts.empty()) parse_error(line, tok.column, "'" + word + "' is not a word in the arrow names");
  for (auto& cut : cuts) {
    std::vector<std::size_t> traversal(cut.rbegin(), cut.rend());
    bool composable = true;
    for (std::size_t i = 1; i < traversal.size(); ++i)
      if (q.arrow(traversal[i - 1]).target != q.arrow(traversal[i]).source) composable = false;
    if (composable) return {to_field(coeff, f), std::move(traversal)};
  }
  parse_error(line, tok.column, "arrows of '" + word + "' are not composable");
}

std::string signed_entry(Scalar v, const PrimeField& f) { return std::to_string(f.symmetric(v)); }

std::string word_of(const Quiver& q, const std::vector<std::size_t>& traversal) {
  std::string s;
  for (auto it = traversal.rbegin(); it != traversal.rend(); ++it) s += q.arrow(*it).name;
  return s;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

AlgebraPtr parse_algebra(std::string_view text, std::optional<Scalar> prime) {
  std::string name = "A";
  std::optional<Scalar> p = prime;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<const Line*> relation_lines;
  const auto lines = split_lines(text);
  bool saw_field = false, saw_vertices = false;
  for (const auto& line : lines) {
    const std::string& kw = line.tokens[0].text;
    if (kw == "algebra") {
      expect_count(line, 2, "algebra <name>");
      name = line.tokens[1].text;
    } else if (kw == "field") {
      expect_count(line, 2, "field <p>");
      const auto v = parse_int(line, line.tokens[1]);
      if (v <= 0) parse_error(line, line.tokens[1].column, "field modulus must be positive");
      if (!prime) p = static_cast<Scalar>(v);
      saw_field = true;
    } else if (kw == "vertices") {
      if (saw_vertices) parse_error(line, line.tokens[0].column, "vertices declared twice");
      saw_vertices = true;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) vertices.push_back(line.tokens[i].text);
    } else if (kw == "arrow") {
      expect_count(line, 4, "arrow <name> <source> <target>");
      auto find = [&](const Token& t) {
        for (std::size_t v = 0; v < vertices.size(); ++v)
          if (vertices[v] == t.text) return v;
        throw Error(ErrorCode::UnknownName, "line " + std::to_string(line.number) + ", column " +
                                                std::to_string(t.column) + ": unknown vertex '" + t.text + "'");
      };
      arrows.push_back({line.tokens[1].text, find(line.tokens[2]), find(line.tokens[3])});
    } else if (kw == "relation") {
      relation_lines.push_back(&line);
    } else {
      parse_error(line, line.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_field && !prime) throw Error(ErrorCode::ParseError, "missing 'field' line");
  if (!saw_vertices) throw Error(ErrorCode::ParseError, "missing 'vertices' line");
  const PrimeField field(*p);
  Quiver quiver(vertices, arrows);

  std::vector<Relation> relations;
  for (const Line* lp : relation_lines) {
    const Line& line = *lp;
    const auto& t = line.tokens;
    if (t.size() < 4 || t[t.size() - 2].text != "=" || t.back().text != "0")
      parse_error(line, t.front().column, "expected 'relation <c>*<word> [+ <c>*<word>] = 0'");
    Relation rel;
    bool negate = false, want_term = true;
    for (std::size_t i = 1; i + 2 < t.size(); ++i) {
      if (want_term) {
        rel.terms.push_back(parse_term(line, t[i], negate, quiver, field));
        want_term = false;
      } else if (t[i].text == "+" || t[i].text == "-") {
        negate = t[i].text == "-";
        want_term = true;
      } else {
        parse_error(line, t[i].column, "expected '+' or '-' between terms");
      }
    }
    if (want_term) parse_error(line, t.back().column, "relation ends with an operator");
    relations.push_back(std::move(rel));
  }
  return BoundQuiverAlgebra::build(name, std::move(quiver), std::move(relations), field);
}

std::string print_algebra(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "field " << a.field().modulus() << "\n";
  out << "vertices";
  for (const auto& v : q.vertex_names()) out << ' ' << v;
  out << "\n";
  for (const auto& arr : q.arrows())
    out << "arrow " << arr.name << ' ' << q.vertex_name(arr.source) << ' ' << q.vertex_name(arr.target) << "\n";
  for (const auto& r : a.relations()) {
    out << "relation";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      if (i) out << " +";
      out << ' ' << signed_entry(r.terms[i].coefficient, a.field()) << '*' << word_of(q, r.terms[i].arrows);
    }
    out << " = 0\n";
  }
  return out.str();
}

Matrix parse_matrix(std::string_view text, std::size_t rows, std::size_t cols, const PrimeField& field) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("matrix literal: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix literal must be a list of rows");
  if (j.size() != rows)
    throw Error(ErrorCode::ShapeMismatch,
                "matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(ErrorCode::ShapeMismatch, "matrix row " + std::to_string(r) + " must have " +
                                                std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) throw Error(ErrorCode::ParseError, "matrix entries must be integers");
      m(r, c) = to_field(j[r][c].get<std::int64_t>(), field);
    }
  }
  return m;
}

std::string print_matrix(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ',';
      s += signed_entry(m(r, c), m.field());
    }
    s += ']';
  }
  return s + "]";
}

NamedModule parse_module(std::string_view text, const AlgebraPtr& algebra) {
  const Quiver& q = algebra->quiver();
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].tokens[0].text != "module")
    throw Error(ErrorCode::ParseError, "line 1: expected 'module <name> over <algebra>'");
  const Line& head = lines[0];
  if (head.tokens.size() < 4 || head.tokens[head.tokens.size() - 2].text != "over")
    parse_error(head, 1, "expected 'module <name> over <algebra>'");
  std::string name;
  for (std::size_t i = 1; i + 2 < head.tokens.size(); ++i) name += (i > 1 ? " " : "") + head.tokens[i].text;
  if (head.tokens.back().text != algebra->name())
    throw Error(ErrorCode::AlgebraMismatch, "module '" + name + "' is over '" + head.tokens.back().text +
                                                "', expected '" + algebra->name() + "'");

  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<std::optional<std::pair<const Line*, std::string>>> map_text(q.arrow_count());
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.tokens[0].text;
    if (kw == "dim") {
      expect_count(line, 3, "dim <vertex> <d>");
      const auto v = q.find_vertex(line.tokens[1].text);
      if (!v)
        throw Error(ErrorCode::UnknownName, "line " + std::to_string(line.number) + ": unknown vertex '" +
                                                line.tokens[1].text + "'");
      const auto d = parse_int(line, line.tokens[2]);
      if (d < 0) parse_error(line, line.tokens[2].column, "negative dimension");
      dims[*v] = static_cast<std::size_t>(d);
    } else if (kw == "map") {
      if (line.tokens.size() < 3) parse_error(line, line.tokens[0].column, "expected 'map <arrow> <matrix>'");
      const auto a = q.find_arrow(line.tokens[1].text);
      if (!a)
        throw Error(ErrorCode::UnknownName, "line " + std::to_string(line.number) + ": unknown arrow '" +
                                                line.tokens[1].text + "'");
      map_text[*a] = std::make_pair(&line, line.text.substr(line.tokens[2].column - 1));
    } else {
      parse_error(line, line.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t rows = dims[q.arrow(a).target], cols = dims[q.arrow(a).source];
    if (!map_text[a]) {
      maps.emplace_back(rows, cols, algebra->field());
      continue;
    }
    try {
      maps.push_back(parse_matrix(map_text[a]->second, rows, cols, algebra->field()));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(map_text[a]->first->number) + ": " + e.what());
    }
  }
  return {name, Module(algebra, std::move(dims), std::move(maps))};
}

std::string print_module(const Module& m, const std::string& name) {
  const auto& a = *m.algebra();
  const Quiver& q = a.quiver();
  std::ostringstream out;
  out << "module " << name << " over " << a.name() << "\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << "dim " << q.vertex_name(v) << ' ' << m.dim(v) << "\n";
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    if (m.dim(q.arrow(k).source) && m.dim(q.arrow(k).target))
      out << "map " << q.arrow(k).name << ' ' << print_matrix(m.map(k)) << "\n";
  return out.str();
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  bool head = false;
  for (const auto& line : split_lines(text)) {
    const std::string& kw = line.tokens[0].text;
    if (kw == "universe") {
      expect_count(line, 4, "universe <name> over <algebra file>");
      if (line.tokens[2].text != "over") parse_error(line, line.tokens[2].column, "expected 'over'");
      m.name = line.tokens[1].text;
      m.algebra_path = line.tokens[3].text;
      head = true;
    } else if (kw == "member") {
      expect_count(line, 3, "member <display name> <module file>");
      m.members.emplace_back(line.tokens[1].text, line.tokens[2].text);
    } else {
      parse_error(line, line.tokens[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!head) throw Error(ErrorCode::ParseError, "missing 'universe <name> over <algebra file>' line");
  return m;
}

std::string print_manifest(const Manifest& m) {
  std::string s = "universe " + m.name + " over " + m.algebra_path + "\n";
  for (const auto& [display, path] : m.members) s += "member " + display + " " + path + "\n";
  return s;
}

std::string resolve_path(const std::string& base, const std::string& relative) {
  const std::filesystem::path rel(relative);
  if (rel.is_absolute()) return rel.lexically_normal().generic_string();
  return (std::filesystem::path(base).parent_path() / rel).lexically_normal().generic_string();
}

std::string DataSource::read(const std::string& path) const {
  if (root_) {
    const std::filesystem::path p(path);
    return read_file(p.is_absolute() ? p : *root_ / p);
  }
  const auto& data = embedded_data();
  const auto it = data.find(std::filesystem::path(path).lexically_normal().generic_string());
  if (it == data.end()) throw Error(ErrorCode::Io, "no bundled file '" + path + "'");
  return it->second;
}

AlgebraPtr Workspace::algebra(const std::string& path) {
  if (auto it = algebras_.find(path); it != algebras_.end()) return it->second;
  AlgebraPtr a;
  try {
    a = parse_algebra(source_.read(path), prime_);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  algebras_.emplace(path, a);
  return a;
}

NamedModule Workspace::module(const std::string& path, const AlgebraPtr& algebra) {
  try {
    return parse_module(source_.read(path), algebra);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::shared_ptr<const Universe> Workspace::universe(const std::string& path) {
  if (auto it = universes_.find(path); it != universes_.end()) return it->second;
  Manifest m;
  try {
    m = parse_manifest(source_.read(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  const AlgebraPtr a = algebra(resolve_path(path, m.algebra_path));
  std::vector<std::string> names;
  std::vector<Module> members;
  for (const auto& [display, file] : m.members) {
    names.push_back(display);
    members.push_back(module(resolve_path(path, file), a).module);
  }
  auto u = std::make_shared<const Universe>(m.name, a, std::move(names), std::move(members));
  universes_.emplace(path, u);
  return u;
}

}  // namespace tiltglue
