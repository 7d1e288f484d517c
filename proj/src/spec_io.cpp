#include "lockit/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "lockit/normal.hpp"

namespace lockit {

const std::vector<std::string> kSuiteNames = {"axioms", "frattini", "splitting", "cosets",
                                              "quotient", "products", "sylow",     "all"};

namespace {

std::string located(SourceLocation at, const std::string& msg) {
  return "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + msg;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

// Cursor over one line. Columns are 1-based byte offsets into the line.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  SourceLocation here() const { return {line_, pos_ + 1}; }
  // Position of the next token.
  SourceLocation next() {
    skip_ws();
    return here();
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(here(), msg); }
  [[noreturn]] void error_at(SourceLocation at, const std::string& msg) const { throw ParseError(at, msg); }

  std::string word(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) error(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }
  void keyword(std::string_view kw) {
    const auto at = next();
    if (word(std::string(kw).c_str()) != kw) error_at(at, "expected '" + std::string(kw) + "'");
  }
  std::size_t number(const char* what) {
    skip_ws();
    const auto at = here();
    const std::string w = word(what);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc{} || end != w.data() + w.size()) error_at(at, std::string("expected ") + what);
    return value;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ == text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void finish() {
    if (!at_end()) error("unexpected trailing text");
  }

  // One permutation: a run of cycles, terminated by a separator, '}' or the end of the line.
  Permutation permutation(std::size_t degree) {
    skip_ws();
    const auto at = here();
    const std::size_t start = pos_;
    if (pos_ == text_.size() || text_[pos_] != '(') error("expected a permutation in cycle notation");
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (depth++ > 0) error("nested '('");
      } else if (c == ')') {
        if (--depth < 0) error("unbalanced ')'");
      } else if (depth == 0 && !std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
    if (depth != 0) error_at(at, "unterminated cycle");
    try {
      return Permutation::parse_cycles(text_.substr(start, pos_ - start), degree);
    } catch (const Error& e) {
      error_at(at, e.what());
    }
  }
  // Permutations separated by any of `seps`, up to one of `stops` or the end of the line.
  Generators permutations(std::size_t degree, std::string_view seps, std::string_view stops = "}") {
    Generators out;
    out.push_back(permutation(degree));
    while (!at_end() && stops.find(text_[pos_]) == std::string_view::npos) {
      if (seps.find(text_[pos_]) == std::string_view::npos) error("expected a separator");
      ++pos_;
      out.push_back(permutation(degree));
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

DeltaMode delta_mode_from(std::string_view word, bool& ok) {
  ok = true;
  if (word == "explicit") return DeltaMode::explicit_list;
  if (word == "overclosure") return DeltaMode::overclosure;
  if (word == "all-nonidentity") return DeltaMode::all_nonidentity;
  if (word == "all") return DeltaMode::all;
  ok = false;
  return DeltaMode::all;
}

std::string join_perms(const Generators& gens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += sep;
    const std::string c = gens[i].to_cycles();
    out += c.empty() ? "()" : c;
  }
  return out;
}

}  // namespace

ParseError::ParseError(SourceLocation at, const std::string& msg) : Error(ErrorKind::parse, located(at, msg)), at_(at) {}

const GroupDef* SpecDocument::find_group(std::string_view name) const {
  for (const auto& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

const LocalityDef* SpecDocument::find_locality(std::string_view name) const {
  for (const auto& l : localities)
    if (l.name == name) return &l;
  return nullptr;
}

SpecDocument parse_spec(std::string_view text) {
  SpecDocument doc;
  enum class Block { none, group, locality } block = Block::none;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineCursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const auto at = cur.next();
    const std::string head = cur.word("a directive");

    if (head == "group") {
      GroupDef g;
      const auto name_at = cur.next();
      g.name = cur.word("a group name");
      if (doc.find_group(g.name)) cur.error_at(name_at, "group '" + g.name + "' is already defined");
      cur.keyword("degree");
      const auto deg_at = cur.next();
      g.degree = cur.number("a degree");
      if (g.degree == 0 || g.degree > 255) cur.error_at(deg_at, "degree must be between 1 and 255");
      cur.finish();
      doc.groups.push_back(std::move(g));
      block = Block::group;
    } else if (head == "gen") {
      if (block != Block::group) cur.error_at(at, "'gen' outside a group block");
      auto& g = doc.groups.back();
      g.gens.push_back(cur.permutation(g.degree));
      cur.finish();
    } else if (head == "locality") {
      LocalityDef l;
      l.line = line_no;
      const auto name_at = cur.next();
      l.name = cur.word("a locality name");
      if (doc.find_locality(l.name)) cur.error_at(name_at, "locality '" + l.name + "' is already defined");
      cur.keyword("group");
      const auto group_at = cur.next();
      l.group = cur.word("a group name");
      if (!doc.find_group(l.group)) cur.error_at(group_at, "unresolved group '" + l.group + "'");
      cur.keyword("prime");
      const auto prime_at = cur.next();
      const std::size_t p = cur.number("a prime");
      if (p > 65535 || !is_prime(static_cast<unsigned>(p))) cur.error_at(prime_at, std::to_string(p) + " is not prime");
      l.prime = static_cast<unsigned>(p);
      cur.finish();
      doc.localities.push_back(std::move(l));
      block = Block::locality;
    } else if (head == "sylow" || head == "delta" || head == "normal") {
      if (block != Block::locality) cur.error_at(at, "'" + head + "' outside a locality block");
      auto& l = doc.localities.back();
      const std::size_t degree = doc.find_group(l.group)->degree;
      if (head == "sylow") {
        const auto mode_at = cur.next();
        const std::string mode = cur.word("'auto' or 'gens'");
        if (mode == "auto") {
          l.sylow_auto = true;
          l.sylow.clear();
        } else if (mode == "gens") {
          l.sylow_auto = false;
          l.sylow = cur.permutations(degree, ",;");
        } else {
          cur.error_at(mode_at, "expected 'auto' or 'gens'");
        }
      } else if (head == "delta") {
        const auto mode_at = cur.next();
        const std::string mode = cur.word("a Δ mode");
        bool ok = false;
        l.delta_mode = delta_mode_from(mode, ok);
        if (!ok) cur.error_at(mode_at, "unsupported delta mode '" + mode + "'");
        l.delta_seeds.clear();
        if (l.delta_mode == DeltaMode::explicit_list || l.delta_mode == DeltaMode::overclosure) {
          cur.expect('{');
          while (true) {
            l.delta_seeds.push_back(cur.permutations(degree, ",", "};"));
            if (cur.peek('}')) break;
            cur.expect(';');
            if (cur.peek('}')) break;
          }
          cur.expect('}');
        }
      } else {
        NormalDef n;
        n.line = line_no;
        const auto name_at = cur.next();
        n.name = cur.word("a normal subgroup name");
        for (const auto& other : l.normals)
          if (other.name == n.name) cur.error_at(name_at, "normal '" + n.name + "' is already defined");
        cur.keyword("gens");
        n.gens = cur.permutations(degree, ",");
        l.normals.push_back(std::move(n));
      }
      cur.finish();
    } else if (head == "run") {
      Directive d;
      const auto suite_at = cur.next();
      d.suite = cur.word("a suite name");
      if (std::find(kSuiteNames.begin(), kSuiteNames.end(), d.suite) == kSuiteNames.end())
        cur.error_at(suite_at, "unknown suite '" + d.suite + "'");
      const auto loc_at = cur.next();
      d.locality = cur.word("a locality name");
      if (!doc.find_locality(d.locality)) cur.error_at(loc_at, "unresolved locality '" + d.locality + "'");
      cur.finish();
      doc.directives.push_back(std::move(d));
    } else {
      cur.error_at(at, "unknown directive '" + head + "'");
    }
    if (end == text.size()) break;
  }
  return doc;
}

std::string serialize_spec(const SpecDocument& doc) {
  std::ostringstream out;
  for (const auto& g : doc.groups) {
    out << "group " << g.name << " degree " << g.degree << "\n";
    for (const auto& p : g.gens) out << "gen " << join_perms({p}, "") << "\n";
    out << "\n";
  }
  for (const auto& l : doc.localities) {
    out << "locality " << l.name << " group " << l.group << " prime " << l.prime << "\n";
    if (l.sylow_auto)
      out << "sylow auto\n";
    else
      out << "sylow gens " << join_perms(l.sylow, "; ") << "\n";
    out << "delta " << to_string(l.delta_mode);
    if (l.delta_mode == DeltaMode::explicit_list || l.delta_mode == DeltaMode::overclosure) {
      out << " {";
      for (std::size_t i = 0; i < l.delta_seeds.size(); ++i) out << (i ? "; " : " ") << join_perms(l.delta_seeds[i], ", ");
      out << " }";
    }
    out << "\n";
    for (const auto& n : l.normals) out << "normal " << n.name << " gens " << join_perms(n.gens, ", ") << "\n";
    out << "\n";
  }
  for (const auto& d : doc.directives) out << "run " << d.suite << " " << d.locality << "\n";
  return out.str();
}

Generators parse_permutation_list(std::string_view text, std::size_t degree) {
  LineCursor cur(text, 1);
  Generators out = cur.permutations(degree, ",;");
  cur.finish();
  return out;
}

const BuiltLocality& Workspace::locality(std::string_view name) const {
  for (const auto& l : localities)
    if (l.name == name) return l;
  fail(ErrorKind::invalid_input, "unknown locality '" + std::string(name) + "'");
}

namespace {

std::string at_line(std::size_t line) { return line == 0 ? "" : "line " + std::to_string(line) + ": "; }

ElementSet ambient_elements(const FiniteGroup& g, const Generators& gens, std::size_t line, const std::string& what) {
  ElementSet out(g.order());
  for (const auto& p : gens) {
    const auto e = g.find(p);
    if (!e) {
      const std::string c = p.to_cycles();
      fail(ErrorKind::invalid_input, at_line(line) + (c.empty() ? "()" : c) +
                                         " in " + what + " is not an element of the group");
    }
    out.insert(*e);
  }
  return out;
}

ElementSet carrier_elements(const Locality& loc, const ElementSet& ambient, std::size_t line) {
  ElementSet out(loc.size());
  for (Element a : ambient) {
    const auto x = loc.fiber(a);
    if (!x)
      fail(ErrorKind::invalid_input, at_line(line) + loc.ambient().label(a) +
                                         " is not in the carrier of " + loc.name());
    out.insert(*x);
  }
  return out;
}

}  // namespace

Workspace build_workspace(const SpecDocument& doc, const Limits& limits) {
  Workspace ws;
  for (const auto& g : doc.groups)
    ws.groups[g.name] = std::make_shared<const FiniteGroup>(group_from_permutations(g.degree, g.gens, limits));
  for (const auto& l : doc.localities) {
    const auto it = ws.groups.find(l.group);
    if (it == ws.groups.end()) fail(ErrorKind::invalid_input, "unresolved group '" + l.group + "'");
    const auto& g = it->second;
    Subgroup s;
    if (l.sylow_auto) {
      s = sylow_auto(*g, l.prime, limits);
    } else {
      s = subgroup_closure(*g, ambient_elements(*g, l.sylow, l.line, "sylow gens"));
    }
    DeltaSpec spec;
    spec.mode = l.delta_mode;
    for (const auto& seed : l.delta_seeds) spec.seeds.push_back(ambient_elements(*g, seed, l.line, "delta"));
    BuiltLocality built;
    built.name = l.name;
    built.line = l.line;
    try {
      built.locality = std::make_shared<const Locality>(build_locality(g, l.prime, s, spec, l.name, limits));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::invalid_input) throw;
      fail(ErrorKind::invalid_input, at_line(l.line) + e.what());
    }
    for (const auto& n : l.normals) {
      const ElementSet gens = carrier_elements(*built.locality, ambient_elements(*g, n.gens, n.line, "normal"), n.line);
      built.normals.emplace_back(n.name, normal_closure(*built.locality, gens));
    }
    ws.localities.push_back(std::move(built));
  }
  return ws;
}

ElementSet resolve_elements(const Locality& loc, std::string_view text) {
  const FiniteGroup& g = loc.ambient();
  Generators gens;
  try {
    gens = parse_permutation_list(text, g.degree());
  } catch (const ParseError& e) {
    fail(ErrorKind::invalid_input, std::string("cannot read elements: ") + e.what());
  }
  return carrier_elements(loc, ambient_elements(g, gens, 0, "the element list"), 0);
}

}  // namespace lockit
