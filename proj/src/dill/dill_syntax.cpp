#include <algorithm>
#include <cctype>
#include <set>

#include "lincat/dill.hpp"
#include "lincat/parser.hpp"
#include "lincat/sugar.hpp"

namespace lincat {

bool is_lollipop(const Object& t) {
  return t.kind() == ObjKind::Par && t.right().kind() == ObjKind::Dual;
}

std::pair<Object, Object> lollipop_parts(const Object& t) {
  if (!is_lollipop(t)) throw DillError("not a -o type: " + t.str());
  return {t.right().inner(), t.left()};
}

bool is_dill_type(const Object& t) {
  switch (t.kind()) {
    case ObjKind::Atom:
    case ObjKind::One: return true;
    case ObjKind::Tensor: return is_dill_type(t.left()) && is_dill_type(t.right());
    case ObjKind::Bang: return is_dill_type(t.inner());
    case ObjKind::Par:
      return is_lollipop(t) && is_dill_type(t.left()) && is_dill_type(t.right().inner());
    default: return false;
  }
}

namespace {

// 0: -o, 1: tensor, 2: prefix and atoms
std::string type_str(const Object& t, int ctx) {
  std::string s;
  int own;
  if (is_lollipop(t)) {
    auto [a, b] = lollipop_parts(t);
    s = type_str(a, 1) + " -o " + type_str(b, 1);
    own = 0;
  } else if (t.kind() == ObjKind::Tensor) {
    s = type_str(t.left(), 1) + "*" + type_str(t.right(), 2);
    own = 1;
  } else if (t.kind() == ObjKind::Bang) {
    s = "!" + type_str(t.inner(), 2);
    own = 2;
  } else {
    s = t.str();
    own = 2;
  }
  return own < ctx ? "(" + s + ")" : s;
}

}  // namespace

std::string dill_type_str(const Object& t) { return type_str(t, 0); }

DillType parse_dill_type(const std::string& text) {
  Object t;
  try {
    t = parse_object(text);
  } catch (const ParseError& e) {
    throw DillError(std::string("bad type '") + text + "': " + e.what());
  }
  if (!is_dill_type(t)) throw DillError("not a DILL type: " + text);
  return t;
}

struct DillTerm::Node {
  DillTermKind kind;
  std::string name;
  DillTerm a, b;
};

DillTerm DillTerm::var(const std::string& x) {
  return DillTerm(std::make_shared<const Node>(Node{DillTermKind::Var, x, {}, {}}));
}
DillTerm DillTerm::sharp(const DillTerm& m) {
  return DillTerm(std::make_shared<const Node>(Node{DillTermKind::Sharp, "", m, {}}));
}
DillTerm DillTerm::let(const DillTerm& body, const std::string& x, const DillTerm& arg) {
  return DillTerm(std::make_shared<const Node>(Node{DillTermKind::Let, x, body, arg}));
}
DillTerm DillTerm::lam(const std::string& x, const DillTerm& body) {
  return DillTerm(std::make_shared<const Node>(Node{DillTermKind::Lam, x, body, {}}));
}
DillTerm DillTerm::app(const DillTerm& f, const DillTerm& a) {
  return DillTerm(std::make_shared<const Node>(Node{DillTermKind::App, "", f, a}));
}

DillTermKind DillTerm::kind() const { return node_->kind; }
const std::string& DillTerm::name() const { return node_->name; }
const DillTerm& DillTerm::first() const { return node_->a; }
const DillTerm& DillTerm::second() const { return node_->b; }

bool operator==(const DillTerm& a, const DillTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.valid() || !b.valid()) return false;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  switch (a.kind()) {
    case DillTermKind::Var: return true;
    case DillTermKind::Sharp:
    case DillTermKind::Lam: return a.first() == b.first();
    default: return a.first() == b.first() && a.second() == b.second();
  }
}

namespace {

// 0: lambda, 1: application, 2: let postfix, 3: sharp prefix, 4: variable
std::string term_str(const DillTerm& m, int ctx) {
  std::string s;
  int own;
  switch (m.kind()) {
    case DillTermKind::Var:
      return m.name();
    case DillTermKind::Sharp:
      s = "!" + term_str(m.first(), 3);
      own = 3;
      break;
    case DillTermKind::Let:
      s = term_str(m.first(), 2) + "{!" + m.name() + ":=" + term_str(m.second(), 0) + "}";
      own = 2;
      break;
    case DillTermKind::App:
      s = term_str(m.first(), 1) + " " + term_str(m.second(), 2);
      own = 1;
      break;
    default:
      s = "\\" + m.name() + "." + term_str(m.first(), 0);
      own = 0;
      break;
  }
  return own < ctx ? "(" + s + ")" : s;
}

// Maps the Unicode spellings to ASCII.
std::string ascii(const std::string& in) {
  static const std::pair<const char*, const char*> subs[] = {
      {"\xE2\x99\xAF", "!"}, {"\xCE\xBB", "\\"}, {"\xE2\x86\xA6", ":="}, {"\xE2\x8A\xA2", "|-"},
      {"\xE2\x8A\xB8", "-o"}, {"\xE2\x8A\x97", "*"}};
  std::string s = in;
  for (auto [from, to] : subs) {
    std::size_t p = 0;
    const std::string f = from;
    while ((p = s.find(f, p)) != std::string::npos) {
      s.replace(p, f.size(), to);
      p += std::string(to).size();
    }
  }
  return s;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class TermParser {
 public:
  explicit TermParser(const std::string& s) : s_(s) {}

  DillTerm parse_all() {
    DillTerm m = term();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return m;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(const std::string& t) {
    skip();
    if (s_.compare(i_, t.size(), t) != 0) fail("expected '" + t + "'");
    i_ += t.size();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw DillError("term '" + s_ + "': " + msg + " at byte " + std::to_string(i_));
  }
  std::string ident() {
    skip();
    if (i_ >= s_.size() || !ident_start(s_[i_])) fail("expected a variable");
    std::size_t a = i_;
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    return s_.substr(a, i_ - a);
  }
  bool at_operand() {
    skip();
    return i_ < s_.size() && (ident_start(s_[i_]) || s_[i_] == '!' || s_[i_] == '(');
  }

  DillTerm term() {
    if (peek('\\')) {
      ++i_;
      std::string x = ident();
      expect(".");
      return DillTerm::lam(x, term());
    }
    DillTerm m = postfix();
    while (at_operand() || peek('\\')) {
      if (peek('\\')) return DillTerm::app(m, term());
      m = DillTerm::app(m, postfix());
    }
    return m;
  }

  DillTerm postfix() {
    DillTerm m = prefix();
    while (peek('{')) {
      ++i_;
      expect("!");
      std::string x = ident();
      expect(":=");
      DillTerm n = term();
      expect("}");
      m = DillTerm::let(m, x, n);
    }
    return m;
  }

  DillTerm prefix() {
    if (peek('!')) {
      ++i_;
      return DillTerm::sharp(prefix());
    }
    if (peek('(')) {
      ++i_;
      DillTerm m = term();
      expect(")");
      return m;
    }
    return DillTerm::var(ident());
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

void collect_free(const DillTerm& m, std::set<std::string>& bound, std::vector<std::string>& out) {
  switch (m.kind()) {
    case DillTermKind::Var:
      if (!bound.count(m.name()) && std::find(out.begin(), out.end(), m.name()) == out.end())
        out.push_back(m.name());
      return;
    case DillTermKind::Sharp:
      collect_free(m.first(), bound, out);
      return;
    case DillTermKind::App:
      collect_free(m.first(), bound, out);
      collect_free(m.second(), bound, out);
      return;
    case DillTermKind::Let:
    case DillTermKind::Lam: {
      bool fresh = bound.insert(m.name()).second;
      collect_free(m.first(), bound, out);
      if (fresh) bound.erase(m.name());
      if (m.kind() == DillTermKind::Let) collect_free(m.second(), bound, out);
      return;
    }
  }
}

std::string fresh_name(const std::string& base, const DillTerm& avoid1, const DillTerm& avoid2) {
  for (int k = 1;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (!occurs_free(avoid1, c) && !occurs_free(avoid2, c)) return c;
  }
}

}  // namespace

std::string DillTerm::str() const { return term_str(*this, 0); }

DillTerm parse_dill_term(const std::string& text) {
  std::string s = ascii(text);
  return TermParser(s).parse_all();
}

std::vector<std::string> free_vars(const DillTerm& m) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  collect_free(m, bound, out);
  return out;
}

bool occurs_free(const DillTerm& m, const std::string& x) {
  auto fv = free_vars(m);
  return std::find(fv.begin(), fv.end(), x) != fv.end();
}

DillTerm subst(const DillTerm& m, const std::string& x, const DillTerm& n) {
  switch (m.kind()) {
    case DillTermKind::Var: return m.name() == x ? n : m;
    case DillTermKind::Sharp: return DillTerm::sharp(subst(m.first(), x, n));
    case DillTermKind::App: return DillTerm::app(subst(m.first(), x, n), subst(m.second(), x, n));
    case DillTermKind::Let:
    case DillTermKind::Lam: {
      DillTerm body = m.first();
      std::string y = m.name();
      if (y != x && occurs_free(n, y) && occurs_free(body, x)) {
        std::string z = fresh_name(y, body, n);
        body = subst(body, y, DillTerm::var(z));
        y = z;
      }
      if (y != x) body = subst(body, x, n);
      if (m.kind() == DillTermKind::Lam) return DillTerm::lam(y, body);
      return DillTerm::let(body, y, subst(m.second(), x, n));
    }
  }
  return m;
}

std::string Judgment::str() const {
  std::string s;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) s += ", ";
    s += (env[i].sharp ? "!" : "") + env[i].var + ":" + dill_type_str(env[i].type);
  }
  s += s.empty() ? "|- " : " |- ";
  return s + term.str() + " : " + dill_type_str(type);
}

Judgment parse_judgment(const std::string& text) {
  std::string s = ascii(text);
  std::size_t turn = s.find("|-");
  if (turn == std::string::npos) throw DillError("judgment without '|-': " + text);
  Judgment j;
  std::string env = trim(s.substr(0, turn));
  if (!env.empty()) {
    std::size_t depth = 0, start = 0;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i <= env.size(); ++i) {
      if (i == env.size() || (env[i] == ',' && depth == 0)) {
        parts.push_back(trim(env.substr(start, i - start)));
        start = i + 1;
      } else if (env[i] == '(') {
        ++depth;
      } else if (env[i] == ')' && depth > 0) {
        --depth;
      }
    }
    for (const std::string& p : parts) {
      EnvEntry e;
      std::string q = p;
      if (!q.empty() && q[0] == '!') {
        e.sharp = true;
        q = trim(q.substr(1));
      }
      std::size_t colon = q.find(':');
      if (colon == std::string::npos) throw DillError("environment entry without ':': " + p);
      e.var = trim(q.substr(0, colon));
      if (e.var.empty() || !ident_start(e.var[0]) ||
          !std::all_of(e.var.begin(), e.var.end(), ident_char))
        throw DillError("bad variable name in entry: " + p);
      e.type = parse_dill_type(q.substr(colon + 1));
      j.env.push_back(std::move(e));
    }
  }
  std::string rest = s.substr(turn + 2);
  std::size_t sep = std::string::npos;
  for (std::size_t i = 0; i < rest.size(); ++i)
    if (rest[i] == ':' && (i + 1 >= rest.size() || rest[i + 1] != '=')) sep = i;
  if (sep == std::string::npos) throw DillError("judgment without a type: " + text);
  j.term = parse_dill_term(rest.substr(0, sep));
  j.type = parse_dill_type(rest.substr(sep + 1));
  return j;
}

const char* dill_rule_name(DillRule r) {
  switch (r) {
    case DillRule::Axiom: return "ax";
    case DillRule::Lift: return "lift";
    case DillRule::Weaken: return "weak";
    case DillRule::Contract: return "contr";
    case DillRule::Promote: return "prom";
    case DillRule::Let: return "let";
    case DillRule::Lambda: return "lam";
    default: return "app";
  }
}

namespace {

struct RuleSpec {
  DillRule rule;
  std::size_t args;
  std::size_t premises;
};

const std::map<std::string, RuleSpec>& rule_specs() {
  static const std::map<std::string, RuleSpec> m = {
      {"ax", {DillRule::Axiom, 0, 0}},   {"lift", {DillRule::Lift, 1, 1}},
      {"weak", {DillRule::Weaken, 1, 1}}, {"contr", {DillRule::Contract, 3, 1}},
      {"prom", {DillRule::Promote, 0, 1}}, {"let", {DillRule::Let, 1, 2}},
      {"lam", {DillRule::Lambda, 1, 1}},  {"app", {DillRule::Apply, 0, 2}}};
  return m;
}

struct Line {
  int number;
  std::size_t indent;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text, int first_number) {
  std::vector<Line> out;
  std::size_t pos = 0;
  int number = first_number;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    std::string t = trim(raw);
    if (!t.empty() && t[0] != '#') {
      std::size_t ind = raw.find_first_not_of(" \t");
      out.push_back({number, ind, t});
    }
    ++number;
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

Derivation parse_node(const std::vector<Line>& lines, std::size_t& i) {
  const Line& ln = lines[i];
  std::size_t colon = ln.text.find(':');
  if (colon == std::string::npos) throw DillError("line " + std::to_string(ln.number) + ": expected 'rule: judgment'");
  std::vector<std::string> head;
  {
    std::string h = ln.text.substr(0, colon);
    std::size_t p = 0;
    while (p < h.size()) {
      std::size_t a = h.find_first_not_of(" \t", p);
      if (a == std::string::npos) break;
      std::size_t b = h.find_first_of(" \t", a);
      head.push_back(h.substr(a, b == std::string::npos ? std::string::npos : b - a));
      p = b == std::string::npos ? h.size() : b;
    }
  }
  if (head.empty()) throw DillError("line " + std::to_string(ln.number) + ": missing rule name");
  auto it = rule_specs().find(head[0]);
  if (it == rule_specs().end())
    throw DillError("line " + std::to_string(ln.number) + ": unknown rule '" + head[0] + "'");
  const RuleSpec& spec = it->second;
  Derivation d;
  d.rule = spec.rule;
  d.line = ln.number;
  d.args.assign(head.begin() + 1, head.end());
  if (d.args.size() != spec.args)
    throw DillError("line " + std::to_string(ln.number) + ": rule '" + head[0] + "' takes " +
                    std::to_string(spec.args) + " variable argument(s)");
  try {
    d.concl = parse_judgment(ln.text.substr(colon + 1));
  } catch (const DillError& e) {
    throw DillError("line " + std::to_string(ln.number) + ": " + e.what());
  }
  ++i;
  std::size_t child_indent = 0;
  while (i < lines.size() && lines[i].indent > ln.indent) {
    if (child_indent == 0) child_indent = lines[i].indent;
    if (lines[i].indent != child_indent)
      throw DillError("line " + std::to_string(lines[i].number) + ": inconsistent indentation");
    d.premises.push_back(parse_node(lines, i));
  }
  if (d.premises.size() != spec.premises)
    throw DillError("line " + std::to_string(ln.number) + ": rule '" + head[0] + "' needs " +
                    std::to_string(spec.premises) + " premise(s), found " + std::to_string(d.premises.size()));
  return d;
}

Derivation parse_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw DillError("empty derivation");
  std::size_t i = 0;
  Derivation d = parse_node(lines, i);
  if (i != lines.size()) throw DillError("line " + std::to_string(lines[i].number) + ": text after the root derivation");
  return d;
}

}  // namespace

std::string Derivation::str(int indent) const {
  std::string s(static_cast<std::size_t>(2 * indent), ' ');
  s += dill_rule_name(rule);
  for (const auto& a : args) s += " " + a;
  s += ": " + concl.str() + "\n";
  for (const auto& p : premises) s += p.str(indent + 1);
  return s;
}

Derivation parse_derivation(const std::string& text) { return parse_lines(split_lines(text, 1)); }

std::pair<Derivation, Derivation> parse_simulation(const std::string& text) {
  std::vector<Line> all = split_lines(text, 1);
  auto sep = std::find_if(all.begin(), all.end(), [](const Line& l) { return l.text == "=>"; });
  if (sep == all.end()) throw DillError("simulation file needs a '=>' line between the two derivations");
  std::vector<Line> a(all.begin(), sep), b(sep + 1, all.end());
  return {parse_lines(a), parse_lines(b)};
}

}  // namespace lincat
