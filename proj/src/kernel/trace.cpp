#include "lincat/trace.hpp"

#include <sstream>

#include "lincat/sugar.hpp"

namespace lincat {

namespace {

Dir dir_of(FrameKind k) {
  switch (k) {
    case FrameKind::TensorLeft:
    case FrameKind::ParLeft:
      return Dir::L;
    case FrameKind::TensorRight:
    case FrameKind::ParRight:
      return Dir::R;
    case FrameKind::Bang:
      return Dir::B;
  }
  return Dir::B;
}

const char* frame_name(FrameKind k) {
  switch (k) {
    case FrameKind::TensorLeft: return "TensorLeft";
    case FrameKind::TensorRight: return "TensorRight";
    case FrameKind::ParLeft: return "ParLeft";
    case FrameKind::ParRight: return "ParRight";
    case FrameKind::Bang: return "Bang";
  }
  return "?";
}

// Replaces the subobject at `p` (which must equal `from`) by `to`, recording
// the passive operand met at each frame.
Object replace_at(const Object& whole, const ContextPath& p, std::size_t i, const Generator& g,
                  ContextPath& out) {
  if (i == p.size()) {
    Object from = g.dom();
    if (whole != from)
      throw TypeError("cell " + g.str() + " expects " + from.str() + " but meets " + whole.str());
    return g.cod();
  }
  FrameKind k = p[i].kind;
  switch (k) {
    case FrameKind::Bang: {
      if (whole.kind() != ObjKind::Bang) throw TypeError("bang frame meets " + whole.str());
      out.push_back({k, Object()});
      return Object::bang(replace_at(whole.inner(), p, i + 1, g, out));
    }
    case FrameKind::TensorLeft:
    case FrameKind::TensorRight: {
      if (whole.kind() != ObjKind::Tensor) throw TypeError("tensor frame meets " + whole.str());
      bool left = k == FrameKind::TensorLeft;
      out.push_back({k, left ? whole.right() : whole.left()});
      Object sub = replace_at(left ? whole.left() : whole.right(), p, i + 1, g, out);
      return left ? Object::tensor(sub, whole.right()) : Object::tensor(whole.left(), sub);
    }
    case FrameKind::ParLeft:
    case FrameKind::ParRight: {
      if (whole.kind() != ObjKind::Par) throw TypeError("par frame meets " + whole.str());
      bool left = k == FrameKind::ParLeft;
      out.push_back({k, left ? whole.right() : whole.left()});
      Object sub = replace_at(left ? whole.left() : whole.right(), p, i + 1, g, out);
      return left ? Object::par(sub, whole.right()) : Object::par(whole.left(), sub);
    }
  }
  return whole;
}

void flatten_into(const MorphTerm& m, ContextPath& prefix, std::vector<Cell>& out) {
  switch (m.kind()) {
    case TermKind::Gen:
      if (m.generator().kind != GenKind::Id) out.push_back({m.generator(), prefix});
      return;
    case TermKind::Seq:
      flatten_into(m.first(), prefix, out);
      flatten_into(m.second(), prefix, out);
      return;
    case TermKind::Tensor:
    case TermKind::Par: {
      bool tensor = m.kind() == TermKind::Tensor;
      Typing f = infer_type(m.first());
      Typing g = infer_type(m.second());
      prefix.push_back({tensor ? FrameKind::TensorLeft : FrameKind::ParLeft, g.dom});
      flatten_into(m.first(), prefix, out);
      prefix.back() = {tensor ? FrameKind::TensorRight : FrameKind::ParRight, f.cod};
      flatten_into(m.second(), prefix, out);
      prefix.pop_back();
      return;
    }
    case TermKind::Bang:
      prefix.push_back({FrameKind::Bang, Object()});
      flatten_into(m.inner(), prefix, out);
      prefix.pop_back();
      return;
    default:
      flatten_into(expand_sugar(m), prefix, out);
      return;
  }
}

// For pairwise independent cells: the one on the left operand comes first.
bool before(const Cell& a, const Cell& b) {
  DirPath da = a.dirs();
  DirPath db = b.dirs();
  std::size_t n = std::min(da.size(), db.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (da[i] == db[i]) continue;
    if (da[i] == Dir::L && db[i] == Dir::R) return true;
    if (da[i] == Dir::R && db[i] == Dir::L) return false;
    break;
  }
  if (a.gen.kind != b.gen.kind) return a.gen.kind < b.gen.kind;
  return a.gen.str() < b.gen.str();
}

}  // namespace

Object Cell::dom() const { return whisker(path, gen.dom()); }
Object Cell::cod() const { return whisker(path, gen.cod()); }

DirPath Cell::dirs() const {
  DirPath d;
  d.reserve(path.size());
  for (const auto& f : path) d.push_back(dir_of(f.kind));
  return d;
}

std::string Cell::str() const { return gen.str() + " @ " + path_str(path); }

std::string path_str(const ContextPath& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += frame_name(p[i].kind);
    if (p[i].kind != FrameKind::Bang) out += "(" + p[i].passive.str() + ")";
  }
  return out + "]";
}

std::string CanonicalForm::dump() const {
  std::ostringstream os;
  for (const auto& c : cells) os << c.str() << "\n";
  return os.str();
}

Object whisker(const ContextPath& p, const Object& inner) {
  Object o = inner;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    switch (it->kind) {
      case FrameKind::TensorLeft: o = Object::tensor(o, it->passive); break;
      case FrameKind::TensorRight: o = Object::tensor(it->passive, o); break;
      case FrameKind::ParLeft: o = Object::par(o, it->passive); break;
      case FrameKind::ParRight: o = Object::par(it->passive, o); break;
      case FrameKind::Bang: o = Object::bang(o); break;
    }
  }
  return o;
}

ContextPath path_from_dirs(const Object& whole, const DirPath& dirs) {
  ContextPath out;
  Object o = whole;
  for (Dir d : dirs) {
    if (d == Dir::B) {
      if (o.kind() != ObjKind::Bang) throw TypeError("bang step meets " + o.str());
      out.push_back({FrameKind::Bang, Object()});
      o = o.inner();
      continue;
    }
    if (!o.is_binary()) throw TypeError("binary step meets " + o.str());
    bool tensor = o.kind() == ObjKind::Tensor;
    if (d == Dir::L) {
      out.push_back({tensor ? FrameKind::TensorLeft : FrameKind::ParLeft, o.right()});
      o = o.left();
    } else {
      out.push_back({tensor ? FrameKind::TensorRight : FrameKind::ParRight, o.left()});
      o = o.right();
    }
  }
  return out;
}

bool independent(const Cell& a, const Cell& b) {
  std::size_t n = std::min(a.path.size(), b.path.size());
  for (std::size_t i = 0; i < n; ++i) {
    Dir x = dir_of(a.path[i].kind);
    Dir y = dir_of(b.path[i].kind);
    if (x == y) continue;
    return x != Dir::B && y != Dir::B;
  }
  return false;
}

void retype(CanonicalForm& c) {
  Object cur = c.dom;
  for (auto& cell : c.cells) {
    ContextPath fresh;
    fresh.reserve(cell.path.size());
    cur = replace_at(cur, cell.path, 0, cell.gen, fresh);
    cell.path = std::move(fresh);
  }
  c.cod = cur;
}

CanonicalForm flatten(const MorphTerm& m) {
  Typing t = infer_type(m);
  CanonicalForm c{t.dom, t.cod, {}};
  ContextPath prefix;
  flatten_into(m, prefix, c.cells);
  retype(c);
  return c;
}

void sort_cells(CanonicalForm& c) {
  std::vector<Cell> rest = std::move(c.cells);
  std::vector<Cell> done;
  done.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      bool movable = true;
      for (std::size_t k = 0; k < j && movable; ++k) movable = independent(rest[k], rest[j]);
      if (!movable) continue;
      if (before(rest[j], rest[best])) best = j;
    }
    done.push_back(std::move(rest[best]));
    rest.erase(rest.begin() + static_cast<long>(best));
  }
  c.cells = std::move(done);
  retype(c);
}

CanonicalForm canonicalize(const MorphTerm& m) {
  CanonicalForm c = flatten(m);
  sort_cells(c);
  return c;
}

bool inverse_pair(const Generator& a, const Generator& b) {
  if (!is_structural(a.kind) || !is_structural(b.kind)) return false;
  auto ik = inverse_kind(a.kind);
  if (ik && b.kind == *ik && a.subs == b.subs) return true;
  auto swapped = [](const Generator& g) { return std::vector<Object>{g.subs[1], g.subs[0]}; };
  bool a_sym = a.kind == GenKind::Sig || a.kind == GenKind::SigInv;
  bool b_sym = b.kind == GenKind::Sig || b.kind == GenKind::SigInv;
  if (a_sym && b_sym && a.kind == b.kind) return b.subs == swapped(a);
  a_sym = a.kind == GenKind::BSig || a.kind == GenKind::BSigInv;
  b_sym = b.kind == GenKind::BSig || b.kind == GenKind::BSigInv;
  if (a_sym && b_sym && a.kind == b.kind) return b.subs == swapped(a);
  return false;
}

CanonicalForm cancel_inverses(const CanonicalForm& input) {
  CanonicalForm c = input;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < c.cells.size() && !changed; ++i) {
      DirPath di = c.cells[i].dirs();
      for (std::size_t j = i + 1; j < c.cells.size(); ++j) {
        const Cell& cj = c.cells[j];
        if (cj.dirs() == di && inverse_pair(c.cells[i].gen, cj.gen)) {
          c.cells.erase(c.cells.begin() + static_cast<long>(j));
          c.cells.erase(c.cells.begin() + static_cast<long>(i));
          retype(c);
          changed = true;
          break;
        }
        if (!independent(c.cells[i], cj)) break;
      }
    }
  }
  return c;
}

CanonicalForm tidy(CanonicalForm c) {
  for (;;) {
    sort_cells(c);
    std::size_t n = c.cells.size();
    c = cancel_inverses(c);
    if (c.cells.size() == n) return c;
  }
}

MorphTerm cell_term(const Cell& c) {
  MorphTerm t = MorphTerm::gen(c.gen);
  for (auto it = c.path.rbegin(); it != c.path.rend(); ++it) {
    switch (it->kind) {
      case FrameKind::TensorLeft:
        t = MorphTerm::tensor(t, MorphTerm::gen(GenKind::Id, {it->passive}));
        break;
      case FrameKind::TensorRight:
        t = MorphTerm::tensor(MorphTerm::gen(GenKind::Id, {it->passive}), t);
        break;
      case FrameKind::ParLeft:
        t = MorphTerm::par(t, MorphTerm::gen(GenKind::Id, {it->passive}));
        break;
      case FrameKind::ParRight:
        t = MorphTerm::par(MorphTerm::gen(GenKind::Id, {it->passive}), t);
        break;
      case FrameKind::Bang:
        t = MorphTerm::bang(t);
        break;
    }
  }
  return t;
}

MorphTerm to_term(const CanonicalForm& c) {
  std::vector<MorphTerm> parts;
  parts.reserve(c.cells.size());
  for (const auto& cell : c.cells) parts.push_back(cell_term(cell));
  return seq_all(parts, c.dom);
}

}  // namespace lincat
