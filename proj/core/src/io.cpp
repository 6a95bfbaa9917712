#include "fincat/io.hpp"

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fincat/error.hpp"
#include "fincat/skeleton.hpp"

namespace fincat {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 10> kKindNames = {
    "category", "functor", "nattrans", "diagram", "adjunction",
    "galois",   "algebra", "group",    "monad",   "setfunctor"};

constexpr std::size_t kMaxNesting = 16;

// --- lexing ---------------------------------------------------------------------

struct Token {
  std::string text;
  std::size_t col = 1;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

struct Source {
  std::string path;
  fs::path base_dir;
  std::vector<Line> lines;
  std::size_t last_line = 0;  // for errors at end of input
};

[[noreturn]] void parse_error(const Source& src, std::size_t line, std::size_t col,
                              const std::string& msg) {
  throw Error(ErrorKind::ParseError, fmt::format("{}:{}:{}: {}", src.path, line, col, msg));
}

[[noreturn]] void schema_error(const Source& src, std::size_t line, std::size_t col,
                               const std::string& msg) {
  throw Error(ErrorKind::SchemaMismatch, fmt::format("{}:{}:{}: {}", src.path, line, col, msg));
}

Source lex(std::string_view text, std::string path, fs::path base_dir) {
  Source src{std::move(path), std::move(base_dir), {}, 0};
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '#') {
        break;
      } else if (c == '"') {
        Token t{{}, i + 1};
        ++i;
        bool closed = false;
        while (i < raw.size()) {
          if (raw[i] == '\\' && i + 1 < raw.size()) {
            t.text += raw[i + 1];
            i += 2;
          } else if (raw[i] == '"') {
            closed = true;
            ++i;
            break;
          } else {
            t.text += raw[i++];
          }
        }
        if (!closed) parse_error(src, number, t.col, "unterminated string");
        line.tokens.push_back(std::move(t));
      } else {
        Token t{{}, i + 1};
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' &&
               raw[i] != '#')
          t.text += raw[i++];
        line.tokens.push_back(std::move(t));
      }
    }
    if (!line.tokens.empty()) src.lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  src.last_line = number;
  return src;
}

// --- parsing ----------------------------------------------------------------------

struct Cursor {
  const Source& src;
  std::size_t pos = 0;
  std::size_t depth = 0;
  bool validate = true;

  bool done() const { return pos >= src.lines.size(); }
  const Line& peek() const { return src.lines[pos]; }
  [[noreturn]] void eof(const std::string& expected) const {
    parse_error(src, src.last_line + 1, 1, fmt::format("unexpected end of input, expected {}", expected));
  }
};

// One key line, with its nested bundle already parsed when the value is a reference.
struct Entry {
  const Line* line = nullptr;
  std::optional<Bundle> nested;
};

Bundle parse_block(Cursor& cur, bool top_level);

std::size_t to_index(const Source& src, const Line& line, std::size_t i) {
  if (i >= line.tokens.size())
    parse_error(src, line.number, line.tokens.back().col + line.tokens.back().text.size(),
                "missing number");
  const auto& t = line.tokens[i];
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    parse_error(src, line.number, t.col, fmt::format("expected a non-negative integer, got '{}'", t.text));
  return v;
}

std::vector<std::size_t> numbers_from(const Source& src, const Line& line, std::size_t first) {
  std::vector<std::size_t> out;
  for (std::size_t i = first; i < line.tokens.size(); ++i) out.push_back(to_index(src, line, i));
  return out;
}

void expect_arity(const Source& src, const Line& line, std::size_t n) {
  if (line.tokens.size() < n)
    parse_error(src, line.number, line.tokens.back().col + line.tokens.back().text.size(),
                fmt::format("'{}' takes {} argument(s)", line.tokens[0].text, n - 1));
  if (line.tokens.size() > n)
    parse_error(src, line.number, line.tokens[n].col, "unexpected extra token");
}

std::optional<Bundle> parse_reference(Cursor& cur, const Line& line) {
  if (line.tokens.size() < 2) return std::nullopt;
  const auto& t = line.tokens[1];
  if (t.text == "{") {
    expect_arity(cur.src, line, 2);
    if (cur.depth + 1 > kMaxNesting) parse_error(cur.src, line.number, t.col, "nesting too deep");
    ++cur.depth;
    Bundle b = parse_block(cur, false);
    --cur.depth;
    return b;
  }
  if (t.text == "file") {
    expect_arity(cur.src, line, 3);
    if (cur.depth + 1 > kMaxNesting) parse_error(cur.src, line.number, t.col, "nesting too deep");
    fs::path p = cur.src.base_dir / line.tokens[2].text;
    std::string text;
    try {
      text = read_file(p);
    } catch (const Error& e) {
      parse_error(cur.src, line.number, line.tokens[2].col, e.what());
    }
    Source nested = lex(text, p.string(), p.parent_path());
    Cursor inner{nested, 0, cur.depth + 1, cur.validate};
    return parse_block(inner, true);
  }
  return std::nullopt;
}

// Keys whose value is a nested bundle, per kind.
bool is_reference_key(BundleKind kind, const std::string& key) {
  switch (kind) {
    case BundleKind::Functor: return key == "source" || key == "target";
    case BundleKind::NatTrans: return key == "from" || key == "to";
    case BundleKind::Adjunction: return key == "left" || key == "right";
    case BundleKind::Monad: return key == "functor";
    case BundleKind::SetFunctor: return key == "source";
    default: return false;
  }
}

const std::set<std::string>& allowed_keys(BundleKind kind) {
  static const std::map<BundleKind, std::set<std::string>> keys = {
      {BundleKind::Category, {"preset", "objects", "object", "morphism", "identity", "compose", "no-fill"}},
      {BundleKind::Functor, {"source", "target", "objects", "morphisms"}},
      {BundleKind::NatTrans, {"from", "to", "components"}},
      {BundleKind::Diagram, {"vertex", "edge"}},
      {BundleKind::Adjunction, {"left", "right", "unit", "counit"}},
      {BundleKind::Galois, {"p-size", "p-leq", "q-size", "q-leq", "f", "g"}},
      {BundleKind::Algebra, {"modulus", "dim", "mult", "unit", "comult", "counit", "antipode"}},
      {BundleKind::Group, {"preset", "order", "identity", "table", "labels"}},
      {BundleKind::Monad, {"functor", "mult", "unit"}},
      {BundleKind::SetFunctor, {"source", "variance", "values", "map"}},
  };
  return keys.at(kind);
}

// Keys that may repeat; all others appear at most once.
bool repeatable(BundleKind kind, const std::string& key) {
  switch (kind) {
    case BundleKind::Category: return key == "object" || key == "morphism" || key == "identity" || key == "compose";
    case BundleKind::Diagram: return key == "vertex" || key == "edge";
    case BundleKind::SetFunctor: return key == "map";
    default: return false;
  }
}

class Fields {
 public:
  Fields(const Source& src, BundleKind kind, std::size_t header_line)
      : src_(src), kind_(kind), header_line_(header_line) {}

  void add(std::string key, Entry e) { entries_.emplace_back(std::move(key), std::move(e)); }

  bool has(const std::string& key) const {
    for (const auto& [k, e] : entries_)
      if (k == key) return true;
    return false;
  }

  const Entry& one(const std::string& key) const {
    for (const auto& [k, e] : entries_)
      if (k == key) return e;
    parse_error(src_, header_line_, 1,
                fmt::format("{} bundle is missing '{}'", to_string(kind_), key));
  }

  std::vector<const Entry*> all(const std::string& key) const {
    std::vector<const Entry*> out;
    for (const auto& [k, e] : entries_)
      if (k == key) out.push_back(&e);
    return out;
  }

  const Bundle& ref(const std::string& key, BundleKind expected) const {
    const auto& e = one(key);
    if (!e.nested)
      parse_error(src_, e.line->number, e.line->tokens[0].col,
                  fmt::format("'{}' expects '{{' or 'file <path>'", key));
    if (e.nested->kind != expected)
      schema_error(src_, e.line->number, e.line->tokens[1].col,
                   fmt::format("'{}' must be a {} bundle, got {}", key, to_string(expected),
                               to_string(e.nested->kind)));
    return *e.nested;
  }

  std::size_t number(const std::string& key) const {
    const auto& e = one(key);
    expect_arity(src_, *e.line, 2);
    return to_index(src_, *e.line, 1);
  }

  std::vector<std::size_t> list(const std::string& key) const {
    return numbers_from(src_, *one(key).line, 1);
  }

  std::vector<std::size_t> list(const std::string& key, std::size_t expected) const {
    const auto& line = *one(key).line;
    auto v = numbers_from(src_, line, 1);
    if (v.size() != expected)
      parse_error(src_, line.number, line.tokens[0].col,
                  fmt::format("'{}' needs {} entries, got {}", key, expected, v.size()));
    return v;
  }

  const Source& src() const { return src_; }
  std::size_t header_line() const { return header_line_; }

 private:
  const Source& src_;
  BundleKind kind_;
  std::size_t header_line_;
  std::vector<std::pair<std::string, Entry>> entries_;
};

std::vector<ObjId> to_objs(const std::vector<std::size_t>& v) {
  std::vector<ObjId> out;
  for (auto x : v) out.push_back(ObjId{x});
  return out;
}

std::vector<MorId> to_mors(const std::vector<std::size_t>& v) {
  std::vector<MorId> out;
  for (auto x : v) out.push_back(MorId{x});
  return out;
}

CategoryRef category_of(const Bundle& b) { return std::get<CategoryPayload>(b.payload).category; }

CategoryPayload build_category(const Fields& fl) {
  const auto& src = fl.src();
  if (fl.has("preset")) {
    for (const char* k : {"objects", "object", "morphism", "identity", "compose", "no-fill"})
      if (fl.has(k)) {
        const auto& e = *fl.all(k).front();
        parse_error(src, e.line->number, e.line->tokens[0].col, "a preset category takes no tables");
      }
    const auto& line = *fl.one("preset").line;
    std::string desc;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) desc += (i > 1 ? " " : "") + line.tokens[i].text;
    try {
      return category_preset(desc);
    } catch (const Error& e) {
      parse_error(src, line.number, line.tokens[0].col, e.what());
    }
  }
  CategoryBuilder b;
  if (fl.has("objects")) {
    std::size_t n = fl.number("objects");
    for (std::size_t i = 0; i < n; ++i) b.add_object(std::to_string(i));
  }
  for (const auto* e : fl.all("object")) {
    expect_arity(src, *e->line, 2);
    b.add_object(e->line->tokens[1].text);
  }
  auto check_obj = [&](const Line& line, std::size_t i) {
    std::size_t v = to_index(src, line, i);
    if (v >= b.object_count()) parse_error(src, line.number, line.tokens[i].col, "no such object");
    return ObjId{v};
  };
  auto check_mor = [&](const Line& line, std::size_t i) {
    std::size_t v = to_index(src, line, i);
    if (v >= b.morphism_count()) parse_error(src, line.number, line.tokens[i].col, "no such morphism");
    return MorId{v};
  };
  for (const auto* e : fl.all("morphism")) {
    expect_arity(src, *e->line, 4);
    b.add_morphism(e->line->tokens[1].text, check_obj(*e->line, 2), check_obj(*e->line, 3));
  }
  for (const auto* e : fl.all("identity")) {
    expect_arity(src, *e->line, 3);
    b.set_identity(check_obj(*e->line, 1), check_mor(*e->line, 2));
  }
  for (const auto* e : fl.all("compose")) {
    expect_arity(src, *e->line, 4);
    b.set_compose(check_mor(*e->line, 1), check_mor(*e->line, 2), check_mor(*e->line, 3));
  }
  try {
    return {share(b.build(!fl.has("no-fill"))), std::nullopt};
  } catch (const Error& e) {
    parse_error(src, fl.header_line(), 1, e.what());
  }
}

FinFunctor build_functor(const Fields& fl) {
  auto s = category_of(fl.ref("source", BundleKind::Category));
  auto t = category_of(fl.ref("target", BundleKind::Category));
  return FinFunctor(s, t, to_objs(fl.list("objects", s->object_count())),
                    to_mors(fl.list("morphisms", s->morphism_count())));
}

NatTrans build_nat(const Fields& fl) {
  const auto& from = std::get<FinFunctor>(fl.ref("from", BundleKind::Functor).payload);
  const auto& to = std::get<FinFunctor>(fl.ref("to", BundleKind::Functor).payload);
  return NatTrans(from, to, to_mors(fl.list("components", from.source()->object_count())));
}

Diagram build_diagram(const Fields& fl) {
  const auto& src = fl.src();
  Diagram d;
  std::size_t labelled = 0;
  for (const auto* e : fl.all("vertex")) {
    // vertex <size> [label <l>] [elements <e>...]
    const auto& line = *e->line;
    FinSetObj v{to_index(src, line, 1), {}};
    std::size_t i = 2;
    std::optional<std::string> label;
    while (i < line.tokens.size()) {
      if (line.tokens[i].text == "label" && i + 1 < line.tokens.size()) {
        label = line.tokens[i + 1].text;
        i += 2;
      } else if (line.tokens[i].text == "elements") {
        for (++i; i < line.tokens.size(); ++i) v.labels.push_back(line.tokens[i].text);
      } else {
        parse_error(src, line.number, line.tokens[i].col, "expected 'label' or 'elements'");
      }
    }
    if (label) {
      ++labelled;
      d.vertex_labels.push_back(*label);
    }
    d.vertices.push_back(std::move(v));
  }
  if (labelled != 0 && labelled != d.vertices.size())
    parse_error(src, fl.header_line(), 1, "either every vertex has a label or none does");
  for (const auto* e : fl.all("edge")) {
    // edge <label> <src> <tgt> <table...>
    const auto& line = *e->line;
    if (line.tokens.size() < 4) expect_arity(src, line, 4);
    std::size_t s = to_index(src, line, 2), t = to_index(src, line, 3);
    if (s >= d.vertices.size() || t >= d.vertices.size())
      parse_error(src, line.number, line.tokens[s >= d.vertices.size() ? 2 : 3].col, "no such vertex");
    auto table = numbers_from(src, line, 4);
    if (table.size() != d.vertices[s].size)
      parse_error(src, line.number, line.tokens[0].col,
                  fmt::format("edge table needs {} entries, got {}", d.vertices[s].size, table.size()));
    d.edges.push_back({line.tokens[1].text, s, t, FinFunction(d.vertices[s].size, d.vertices[t].size, table)});
  }
  return d;
}

AdjunctionData build_adjunction(const Fields& fl) {
  const auto& f = std::get<FinFunctor>(fl.ref("left", BundleKind::Functor).payload);
  const auto& h = std::get<FinFunctor>(fl.ref("right", BundleKind::Functor).payload);
  if (!same_category(f.source(), h.target()) || !same_category(f.target(), h.source()))
    throw Error(ErrorKind::BoundaryMismatch, "left and right functors do not form a pair");
  auto unit = fl.list("unit", f.source()->object_count());
  auto counit = fl.list("counit", f.target()->object_count());
  AdjunctionData a{f, h, NatTrans(identity_functor(f.source()), compose(h, f), to_mors(unit)),
                   NatTrans(compose(f, h), identity_functor(f.target()), to_mors(counit))};
  return a;
}

Preorder read_order(const Fields& fl, const std::string& size_key, const std::string& leq_key) {
  std::size_t n = fl.number(size_key);
  auto bits = fl.list(leq_key, n * n);
  Preorder p{n, std::vector<bool>(n * n)};
  const auto& line = *fl.one(leq_key).line;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (bits[i] > 1) parse_error(fl.src(), line.number, line.tokens[i + 1].col, "expected 0 or 1");
    p.leq[i] = bits[i] == 1;
  }
  return p;
}

GaloisConnection build_galois(const Fields& fl) {
  GaloisConnection gc;
  gc.p = read_order(fl, "p-size", "p-leq");
  gc.q = read_order(fl, "q-size", "q-leq");
  gc.f = fl.list("f", gc.q.size);
  gc.g = fl.list("g", gc.p.size);
  return gc;
}

AlgebraPayload build_algebra(const Fields& fl) {
  AlgebraPayload a;
  a.modulus = fl.number("modulus");
  a.dim = fl.number("dim");
  const std::size_t n = a.dim;
  auto read = [&](const char* key, std::size_t r, std::size_t c) -> std::optional<ModMatrix> {
    if (!fl.has(key)) return std::nullopt;
    auto v = fl.list(key, r * c);
    return ModMatrix(r, c, a.modulus, std::vector<std::uint64_t>(v.begin(), v.end()));
  };
  try {
    a.mult = read("mult", n, n * n);
    a.unit = read("unit", n, 1);
    a.comult = read("comult", n * n, n);
    a.counit = read("counit", 1, n);
    a.antipode = read("antipode", n, n);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    parse_error(fl.src(), fl.one("modulus").line->number, 1, e.what());
  }
  if (a.mult.has_value() != a.unit.has_value() || a.comult.has_value() != a.counit.has_value())
    parse_error(fl.src(), fl.header_line(), 1, "mult/unit and comult/counit come in pairs");
  return a;
}

FinGroup build_group(const Fields& fl) {
  if (fl.has("preset")) {
    const auto& line = *fl.one("preset").line;
    expect_arity(fl.src(), line, 3);
    std::size_t n = to_index(fl.src(), line, 2);
    if (line.tokens[1].text == "cyclic" && n >= 1 && n <= 64) return cyclic_group(n);
    if (line.tokens[1].text == "symmetric" && n >= 1 && n <= 5) return symmetric_group(n);
    parse_error(fl.src(), line.number, line.tokens[1].col, "unknown group preset");
  }
  std::size_t n = fl.number("order");
  std::vector<std::string> labels;
  if (fl.has("labels")) {
    const auto& line = *fl.one("labels").line;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) labels.push_back(line.tokens[i].text);
  }
  return FinGroup(n, fl.list("table", n * n), fl.has("identity") ? fl.number("identity") : 0,
                  std::move(labels));
}

MonadData build_monad(const Fields& fl) {
  const auto& t = std::get<FinFunctor>(fl.ref("functor", BundleKind::Functor).payload);
  std::size_t n = t.source()->object_count();
  return {t, NatTrans(compose(t, t), t, to_mors(fl.list("mult", n))),
          NatTrans(identity_functor(t.source()), t, to_mors(fl.list("unit", n)))};
}

SetValuedFunctor build_set_functor(const Fields& fl) {
  const auto& src = fl.src();
  SetValuedFunctor f;
  f.source = category_of(fl.ref("source", BundleKind::Category));
  const auto& vline = *fl.one("variance").line;
  expect_arity(src, vline, 2);
  if (vline.tokens[1].text == "covariant")
    f.variance = Variance::Covariant;
  else if (vline.tokens[1].text == "contravariant")
    f.variance = Variance::Contravariant;
  else
    parse_error(src, vline.number, vline.tokens[1].col, "expected covariant or contravariant");
  f.obj_val = fl.list("values", f.source->object_count());
  auto maps = fl.all("map");
  if (maps.size() != f.source->morphism_count())
    parse_error(src, fl.header_line(), 1,
                fmt::format("need one map per morphism ({}), got {}", f.source->morphism_count(), maps.size()));
  for (std::size_t m = 0; m < maps.size(); ++m) {
    // map <morphism> <dom> <cod> <table...>
    const auto& line = *maps[m]->line;
    if (line.tokens.size() < 4) expect_arity(src, line, 4);
    if (to_index(src, line, 1) != m)
      parse_error(src, line.number, line.tokens[1].col, fmt::format("expected map for morphism {}", m));
    std::size_t dom = to_index(src, line, 2), cod = to_index(src, line, 3);
    auto table = numbers_from(src, line, 4);
    if (table.size() != dom)
      parse_error(src, line.number, line.tokens[0].col,
                  fmt::format("map table needs {} entries, got {}", dom, table.size()));
    f.mor_val.push_back(FinFunction(dom, cod, table));
  }
  return f;
}

Bundle parse_block(Cursor& cur, bool top_level) {
  const auto& src = cur.src;
  if (cur.done()) cur.eof("'fincat <kind>'");
  const Line& header = src.lines[cur.pos++];
  if (header.tokens[0].text != "fincat" || header.tokens.size() != 2)
    parse_error(src, header.number, header.tokens[0].col, "expected 'fincat <kind>'");
  auto kind = bundle_kind_from_string(header.tokens[1].text);
  if (!kind) schema_error(src, header.number, header.tokens[1].col,
                          fmt::format("unknown bundle kind '{}'", header.tokens[1].text));

  Fields fl(src, *kind, header.number);
  const auto& keys = allowed_keys(*kind);
  std::set<std::string> seen;
  const std::string closer = top_level ? "end" : "}";
  while (true) {
    if (cur.done()) cur.eof(fmt::format("'{}'", closer));
    const Line& line = src.lines[cur.pos++];
    const auto& key = line.tokens[0].text;
    if (key == closer) {
      expect_arity(src, line, 1);
      break;
    }
    if (!keys.count(key))
      parse_error(src, line.number, line.tokens[0].col,
                  fmt::format("unknown key '{}' in {} bundle", key, to_string(*kind)));
    if (!repeatable(*kind, key) && !seen.insert(key).second)
      parse_error(src, line.number, line.tokens[0].col, fmt::format("duplicate key '{}'", key));
    Entry e{&line, std::nullopt};
    if (is_reference_key(*kind, key)) {
      e.nested = parse_reference(cur, line);
      if (!e.nested)
        parse_error(src, line.number, line.tokens[0].col,
                    fmt::format("'{}' expects '{{' or 'file <path>'", key));
    }
    fl.add(key, std::move(e));
  }

  Bundle b;
  b.kind = *kind;
  b.source_path = src.path;
  try {
    switch (*kind) {
      case BundleKind::Category: b.payload = build_category(fl); break;
      case BundleKind::Functor: b.payload = build_functor(fl); break;
      case BundleKind::NatTrans: b.payload = build_nat(fl); break;
      case BundleKind::Diagram: b.payload = build_diagram(fl); break;
      case BundleKind::Adjunction: b.payload = build_adjunction(fl); break;
      case BundleKind::Galois: b.payload = build_galois(fl); break;
      case BundleKind::Algebra: b.payload = build_algebra(fl); break;
      case BundleKind::Group: b.payload = build_group(fl); break;
      case BundleKind::Monad: b.payload = build_monad(fl); break;
      case BundleKind::SetFunctor: b.payload = build_set_functor(fl); break;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SchemaMismatch ||
        e.kind() == ErrorKind::ValidationFailed)
      throw;
    throw Error(ErrorKind::ValidationFailed,
                fmt::format("{}:{}: {} bundle: {}", src.path, header.number, to_string(*kind), e.what()));
  }
  if (cur.validate) {
    try {
      validate_payload(b);
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationFailed,
                  fmt::format("{}:{}: {}", src.path, header.number, e.what()));
    }
  }
  return b;
}

// --- writing -------------------------------------------------------------------------

std::string quote(const std::string& s) {
  bool plain = !s.empty() && s != "{" && s != "}" && s != "end";
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '#' || c == '"' || c == '\\' || c == '\n' || c == '\r')
      plain = false;
  if (plain) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

template <class Range>
std::string join(const Range& r) {
  std::string out;
  for (const auto& x : r) {
    out += ' ';
    out += fmt::format("{}", x);
  }
  return out;
}

std::vector<std::size_t> ids(const std::vector<ObjId>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x.value);
  return out;
}

std::vector<std::size_t> ids(const std::vector<MorId>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x.value);
  return out;
}

class Writer {
 public:
  std::string str() const { return out_; }

  void line(const std::string& s) {
    out_.append(indent_ * 2, ' ');
    out_ += s;
    out_ += '\n';
  }

  void block(const std::string& key, const Bundle& b) {
    line(key + " {");
    ++indent_;
    body(b);
    --indent_;
    line("}");
  }

  void body(const Bundle& b) {
    line(fmt::format("fincat {}", to_string(b.kind)));
    std::visit([this](const auto& p) { write(p); }, b.payload);
  }

 private:
  void write(const CategoryPayload& p) {
    if (p.preset) {
      line("preset " + *p.preset);
      return;
    }
    const auto& c = *p.category;
    for (ObjId x : c.objects()) line("object " + quote(c.object_label(x)));
    for (MorId f : c.morphisms())
      line(fmt::format("morphism {} {} {}", quote(c.morphism_label(f)), c.dom(f).value, c.cod(f).value));
    for (ObjId x : c.objects()) line(fmt::format("identity {} {}", x.value, c.identity(x).value));
    // entries the identity fill reproduces are left out unless the table lacks some
    const std::size_t n1 = c.morphism_count();
    bool fill_matches = true;
    for (MorId f : c.morphisms()) {
      auto left = c.compose(c.identity(c.cod(f)), f);
      auto right = c.compose(f, c.identity(c.dom(f)));
      if (left != f || right != f) fill_matches = false;
    }
    if (!fill_matches) line("no-fill");
    for (std::size_t g = 0; g < n1; ++g)
      for (std::size_t f = 0; f < n1; ++f) {
        auto h = c.compose(MorId{g}, MorId{f});
        if (!h) continue;
        if (fill_matches && ((MorId{g} == c.identity(c.cod(MorId{f})) && *h == MorId{f}) ||
                             (MorId{f} == c.identity(c.dom(MorId{g})) && *h == MorId{g})))
          continue;
        line(fmt::format("compose {} {} {}", g, f, h->value));
      }
  }

  void write(const FinFunctor& f) {
    block("source", make_bundle(CategoryPayload{f.source(), std::nullopt}));
    block("target", make_bundle(CategoryPayload{f.target(), std::nullopt}));
    line("objects" + join(ids(f.object_map())));
    line("morphisms" + join(ids(f.morphism_map())));
  }

  void write(const NatTrans& t) {
    block("from", make_bundle(t.from()));
    block("to", make_bundle(t.to()));
    line("components" + join(ids(t.components())));
  }

  void write(const Diagram& d) {
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
      std::string s = fmt::format("vertex {}", d.vertices[v].size);
      if (!d.vertex_labels.empty()) s += " label " + quote(d.vertex_labels[v]);
      if (!d.vertices[v].labels.empty()) {
        s += " elements";
        for (const auto& l : d.vertices[v].labels) s += " " + quote(l);
      }
      line(s);
    }
    for (const auto& e : d.edges)
      line(fmt::format("edge {} {} {}{}", quote(e.label), e.src, e.tgt, join(e.fun.table())));
  }

  void write(const AdjunctionData& a) {
    block("left", make_bundle(a.f));
    block("right", make_bundle(a.h));
    line("unit" + join(ids(a.unit.components())));
    line("counit" + join(ids(a.counit.components())));
  }

  void order(const std::string& prefix, const Preorder& p) {
    line(fmt::format("{}-size {}", prefix, p.size));
    std::string s = prefix + "-leq";
    for (std::size_t i = 0; i < p.size * p.size; ++i) s += p.leq[i] ? " 1" : " 0";
    line(s);
  }

  void write(const GaloisConnection& gc) {
    order("p", gc.p);
    order("q", gc.q);
    line("f" + join(gc.f));
    line("g" + join(gc.g));
  }

  void matrix(const std::string& key, const std::optional<ModMatrix>& m) {
    if (m) line(key + join(m->entries()));
  }

  void write(const AlgebraPayload& a) {
    line(fmt::format("modulus {}", a.modulus));
    line(fmt::format("dim {}", a.dim));
    matrix("mult", a.mult);
    matrix("unit", a.unit);
    matrix("comult", a.comult);
    matrix("counit", a.counit);
    matrix("antipode", a.antipode);
  }

  void write(const FinGroup& g) {
    line(fmt::format("order {}", g.order()));
    line(fmt::format("identity {}", g.identity()));
    line("table" + join(g.table()));
    if (!g.labels().empty()) {
      std::string s = "labels";
      for (const auto& l : g.labels()) s += " " + quote(l);
      line(s);
    }
  }

  void write(const MonadData& m) {
    block("functor", make_bundle(m.t));
    line("mult" + join(ids(m.mult.components())));
    line("unit" + join(ids(m.unit.components())));
  }

  void write(const SetValuedFunctor& f) {
    block("source", make_bundle(CategoryPayload{f.source, std::nullopt}));
    line(f.variance == Variance::Covariant ? "variance covariant" : "variance contravariant");
    line("values" + join(f.obj_val));
    for (std::size_t m = 0; m < f.mor_val.size(); ++m)
      line(fmt::format("map {} {} {}{}", m, f.mor_val[m].dom(), f.mor_val[m].cod(),
                       join(f.mor_val[m].table())));
  }

  std::string out_;
  std::size_t indent_ = 0;
};

}  // namespace

// --- public API ------------------------------------------------------------------------

std::string_view to_string(BundleKind kind) noexcept {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<BundleKind> bundle_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == s) return static_cast<BundleKind>(i);
  return std::nullopt;
}

namespace {

const ModMatrix& need(const std::optional<ModMatrix>& m, const char* what) {
  if (!m) throw Error(ErrorKind::SchemaMismatch, fmt::format("algebra bundle has no {}", what));
  return *m;
}

}  // namespace

AlgebraData AlgebraPayload::algebra() const {
  return {dim, need(mult, "mult"), need(unit, "unit")};
}

CoalgebraData AlgebraPayload::coalgebra() const {
  return {dim, need(comult, "comult"), need(counit, "counit")};
}

BimonoidData AlgebraPayload::bimonoid() const { return {algebra(), coalgebra()}; }

HopfData AlgebraPayload::hopf() const { return {bimonoid(), need(antipode, "antipode")}; }

CategoryPayload category_preset(const std::string& descriptor) {
  std::istringstream in(descriptor);
  std::string name;
  in >> name;
  std::vector<std::size_t> args;
  std::string tok;
  while (in >> tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw Error(ErrorKind::MalformedInput, fmt::format("bad preset argument '{}'", tok));
    args.push_back(v);
  }
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorKind::MalformedInput, fmt::format("preset '{}' takes {} argument(s)", name, n));
  };
  auto in_range = [&](std::size_t lo, std::size_t hi) {
    if (args[0] < lo || args[0] > hi)
      throw Error(ErrorKind::MalformedInput,
                  fmt::format("preset '{}' needs an argument in [{}, {}]", name, lo, hi));
  };
  FinCategory c;
  if (name == "terminal") {
    arity(0);
    c = terminal_category();
  } else if (name == "chain") {
    arity(1);
    in_range(1, 32);
    c = chain_category(args[0]);
  } else if (name == "discrete") {
    arity(1);
    in_range(0, 64);
    c = discrete_category(args[0]);
  } else if (name == "cyclic-monoid") {
    arity(1);
    in_range(1, 64);
    c = monoid_category(cyclic_monoid(args[0]));
  } else if (name == "finset-skeleton") {
    arity(1);
    in_range(0, 3);
    return {finset_skeleton(args[0]).category, descriptor};
  } else if (name == "poset-square") {
    arity(0);
    c = preorder_category(preorder_closure(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})).category;
  } else if (name == "parallel-pair") {
    arity(0);
    c = parallel_pair_category();
  } else if (name == "span") {
    arity(0);
    c = span_category();
  } else if (name == "iso-pair") {
    arity(0);
    c = iso_pair_category();
  } else {
    throw Error(ErrorKind::MalformedInput, fmt::format("unknown category preset '{}'", name));
  }
  return {share(std::move(c)), descriptor};
}

void validate_payload(const Bundle& b) {
  auto fail = [](const std::string& what, const ValidationReport& r) {
    if (!r.ok()) throw Error(ErrorKind::ValidationFailed, what + ": " + r.summary());
  };
  auto check_category = [&](const CategoryRef& c) {
    fail("category", validate_category(*c));
  };
  auto check_functor = [&](const FinFunctor& f) {
    check_category(f.source());
    check_category(f.target());
    fail("functor", validate_functor(f));
  };
  try {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, CategoryPayload>) {
            check_category(p.category);
          } else if constexpr (std::is_same_v<T, FinFunctor>) {
            check_functor(p);
          } else if constexpr (std::is_same_v<T, NatTrans>) {
            check_functor(p.from());
            check_functor(p.to());
            fail("natural transformation", validate_nat_trans(p));
          } else if constexpr (std::is_same_v<T, Diagram>) {
            validate_diagram(p);
            for (const auto& v : p.vertices) validate_finset(v);
          } else if constexpr (std::is_same_v<T, AdjunctionData>) {
            // triangles and naturality of η, ε are laws, checked by the adjoint command
            check_functor(p.f);
            check_functor(p.h);
            require_well_typed(p);
          } else if constexpr (std::is_same_v<T, GaloisConnection>) {
            validate_preorder(p.p);
            validate_preorder(p.q);
            require_monotone(p);
          } else if constexpr (std::is_same_v<T, AlgebraPayload>) {
            if (!is_prime(p.modulus))
              throw Error(ErrorKind::ValidationFailed, fmt::format("modulus {} is not prime", p.modulus));
            if (p.antipode && !(p.has_algebra() && p.has_coalgebra()))
              throw Error(ErrorKind::ValidationFailed, "an antipode needs both structures");
          } else if constexpr (std::is_same_v<T, FinGroup>) {
            // the constructor already validated the table
          } else if constexpr (std::is_same_v<T, MonadData>) {
            check_functor(p.t);
            if (!same_category(p.t.source(), p.t.target()))
              throw Error(ErrorKind::ValidationFailed, "monad functor is not an endofunctor");
          } else if constexpr (std::is_same_v<T, SetValuedFunctor>) {
            check_category(p.source);
            fail("set-valued functor", validate_set_functor(p));
          }
        },
        b.payload);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationFailed) throw;
    throw Error(ErrorKind::ValidationFailed, e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, fmt::format("cannot read '{}'", path.string()));
  return ss.str();
}

Bundle parse_bundle_text(std::string_view text, const fs::path& base_dir, bool validate,
                         std::string source_path) {
  Source src = lex(text, std::move(source_path), base_dir);
  Cursor cur{src, 0, 0, validate};
  Bundle b = parse_block(cur, true);
  if (!cur.done())
    parse_error(src, cur.peek().number, cur.peek().tokens[0].col, "content after 'end'");
  return b;
}

Bundle parse_bundle(const fs::path& path, bool validate) {
  std::string text = read_file(path);
  return parse_bundle_text(text, path.parent_path(), validate, path.string());
}

Bundle parse_bundle_as(const fs::path& path, BundleKind kind, bool validate) {
  Bundle b = parse_bundle(path, validate);
  if (b.kind != kind)
    throw Error(ErrorKind::SchemaMismatch, fmt::format("{}: expected a {} bundle, got {}", path.string(),
                                                       to_string(kind), to_string(b.kind)));
  return b;
}

Bundle make_bundle(BundlePayload payload) {
  Bundle b;
  b.kind = static_cast<BundleKind>(payload.index());
  b.payload = std::move(payload);
  return b;
}

std::string write_bundle(const Bundle& b) {
  Writer w;
  w.body(b);
  w.line("end");
  return w.str();
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

// --- corpus ------------------------------------------------------------------------------

namespace {

CategoryPayload explicit_cat(FinCategory c) { return {share(std::move(c)), std::nullopt}; }

AlgebraPayload algebra_payload(const HopfData& h) {
  const auto& b = h.bimonoid;
  return {b.algebra.mult.modulus(), b.algebra.dim, b.algebra.mult, b.algebra.unit,
          b.coalgebra.comult,       b.coalgebra.counit, h.antipode};
}

AlgebraPayload algebra_payload(const BimonoidData& b) {
  return {b.algebra.mult.modulus(), b.algebra.dim, b.algebra.mult, b.algebra.unit,
          b.coalgebra.comult,       b.coalgebra.counit, std::nullopt};
}

}  // namespace

std::vector<Fixture> corpus_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, BundlePayload p) { out.push_back({std::move(name), make_bundle(std::move(p))}); };

  add("terminal.cat", explicit_cat(terminal_category()));
  auto chain2 = share(chain_category(2));
  auto chain3 = share(chain_category(3));
  add("chain-1.cat", explicit_cat(chain_category(1)));
  add("chain-2.cat", CategoryPayload{chain2, std::nullopt});
  add("chain-3.cat", CategoryPayload{chain3, std::nullopt});
  add("poset-square.cat", category_preset("poset-square"));
  add("z2-monoid.cat", explicit_cat(monoid_category(cyclic_monoid(2))));
  add("s3-monoid.cat", explicit_cat(monoid_category(symmetric_group(3).as_monoid())));
  add("parallel-pair.cat", explicit_cat(parallel_pair_category()));
  add("span.cat", explicit_cat(span_category()));
  add("iso-pair.cat", explicit_cat(iso_pair_category()));
  for (std::size_t n = 0; n <= 3; ++n)
    add(fmt::format("finset-{}.cat", n), category_preset(fmt::format("finset-skeleton {}", n)));

  // inclusion 2 -> 3 onto the first two objects
  FinFunctor incl(chain2, chain3, {ObjId{0}, ObjId{1}},
                  {MorId{0}, MorId{1}, MorId{3}});
  add("chain-inclusion.fun", incl);
  add("chain-inclusion-id.nat", identity_nat(incl));

  add("galois-chain.gal", chain_inclusion_galois());
  add("subgroup-fixed-3.gal", subgroup_fixed_point_galois(3));
  auto galois_adj = galois_to_adjunction(chain_inclusion_galois());
  add("galois-chain.adj", galois_adj);
  add("identity-chain-3.adj", identity_adjunction(chain3));
  add("identity-s3.adj", identity_adjunction(share(monoid_category(symmetric_group(3).as_monoid()))));
  add("galois-chain.mnd", monad_from_adjunction(galois_adj));

  add("z2-group.grp", cyclic_group(2));
  add("z3-group.grp", cyclic_group(3));
  add("s3-group.grp", symmetric_group(3));

  auto poly = truncated_polynomial(3, 5);
  add("truncated-poly.alg",
      AlgebraPayload{5, poly.algebra.dim, poly.algebra.mult, poly.algebra.unit, poly.coalgebra.comult,
                     poly.coalgebra.counit, std::nullopt});
  add("k-z2-p3.alg", algebra_payload(group_algebra(cyclic_group(2), 3)));
  add("k-s3-p5.alg", algebra_payload(group_algebra(symmetric_group(3), 5)));
  add("fun-s3-p2.alg", algebra_payload(function_hopf(symmetric_group(3), 2)));
  add("k-absorbing-p3.alg", algebra_payload(monoid_algebra(absorbing_monoid(), 3)));

  // X -f-> Z <-g- Y with |X| = 3, |Y| = 2, |Z| = 2
  add("pullback-ex.dgm", cospan_diagram(FinFunction(3, 2, {0, 1, 1}), FinFunction(2, 2, {1, 1})));
  add("coequalizer-ex.dgm", parallel_diagram(FinFunction(2, 3, {0, 1}), FinFunction(2, 3, {1, 2})));

  // F(0) = 2, F(1) = 1 on the chain 0 <= 1
  SetValuedFunctor f{chain2, Variance::Covariant, {2, 1},
                     {identity_function(2), constant_function(2, 1, 0), identity_function(1)}};
  add("F.svf", f);
  return out;
}

std::vector<fs::path> emit_corpus(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  std::vector<fs::path> paths;
  for (const auto& fx : corpus_fixtures()) {
    fs::path p = dir / fx.name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, fmt::format("cannot write '{}'", p.string()));
    out << write_bundle(fx.bundle);
    out.close();
    if (!out) throw Error(ErrorKind::IoError, fmt::format("cannot write '{}'", p.string()));
    paths.push_back(p);
  }
  return paths;
}

}  // namespace fincat
