#include "lincat/sequentialize.hpp"

#include <algorithm>
#include <set>

namespace lincat {

namespace {

struct Stuck {};

bool contains(const STree* root, const STree* x) {
  if (!root) return false;
  if (root == x) return true;
  return contains(root->l.get(), x) || contains(root->r.get(), x);
}

bool same_shape(const STree& a, const STree& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case STree::Leaf: return a.wire == b.wire;
    case STree::One:
    case STree::Bot: return true;
    case STree::Bang: return same_shape(*a.l, *b.l);
    default: return same_shape(*a.l, *b.l) && same_shape(*a.r, *b.r);
  }
}

GenKind assoc(STree::Kind c) { return c == STree::Tensor ? GenKind::Alpha : GenKind::BAlpha; }
GenKind assoc_inv(STree::Kind c) { return c == STree::Tensor ? GenKind::AlphaInv : GenKind::BAlphaInv; }
GenKind swap_kind(STree::Kind c) { return c == STree::Tensor ? GenKind::Sig : GenKind::BSig; }

std::vector<Object> glue_subs(GenKind k, const STree& t) {
  switch (k) {
    case GenKind::Alpha:
    case GenKind::BAlpha:
    case GenKind::DistP:
      return {t.l->l->object(), t.l->r->object(), t.r->object()};
    case GenKind::AlphaInv:
    case GenKind::BAlphaInv:
    case GenKind::Dist:
      return {t.l->object(), t.r->l->object(), t.r->r->object()};
    case GenKind::Lam:
    case GenKind::BLam:
      return {t.r->object()};
    case GenKind::Rho:
    case GenKind::BRho:
      return {t.l->object()};
    case GenKind::Sig:
    case GenKind::BSig:
      return {t.l->object(), t.r->object()};
    default:
      return {t.object()};
  }
}

class Builder {
 public:
  Builder(const Object& dom, const std::vector<int>& wires) : cur_(stree_with_wires(dom, wires)) {}
  explicit Builder(STreePtr t) : cur_(std::move(t)) {}

  std::vector<Cell> cells;
  std::vector<std::pair<GenKind, DirPath>> glued;
  bool reuse_units = false;
  // Unit inputs get a new token instead of consuming one already present.
  bool fresh_units = false;

  std::set<int> present() const {
    std::vector<int> ws;
    stree_wires(cur_.get(), ws);
    return {ws.begin(), ws.end()};
  }

  DirPath path_of(const STree* x) const {
    DirPath p;
    if (!find_ptr(cur_.get(), x, p)) throw Stuck{};
    return p;
  }

  STree* at(const DirPath& p) const { return stree_at(cur_.get(), p); }

  // Tags survive snapshot/restore, which replaces the tree's nodes.
  int hold(STree* x) {
    if (x->tag == 0) x->tag = ++next_tag_;
    return x->tag;
  }

  STree* held(int tag) const {
    if (STree* x = find_tag(cur_.get(), tag)) return x;
    throw Stuck{};
  }

  void glue(GenKind k, const DirPath& p) {
    STree* t = at(p);
    Generator g(k, glue_subs(k, *t));
    cells.push_back(Cell{g, path_from_dirs(cur_->object(), p)});
    apply_glue(cur_, p, k);
    glued.emplace_back(k, p);
  }

  void place(const Generator& g, const DirPath& p, const std::vector<int>& outs) {
    cells.push_back(Cell{g, path_from_dirs(cur_->object(), p)});
    stree_slot(cur_, p) = stree_with_wires(g.cod(), outs);
  }

  void place_box(const std::vector<Cell>& inner, const DirPath& p, const Object& out, int wire) {
    ContextPath prefix = path_from_dirs(cur_->object(), p);
    prefix.push_back({FrameKind::Bang, Object()});
    for (const auto& c : inner) {
      ContextPath full = prefix;
      full.insert(full.end(), c.path.begin(), c.path.end());
      cells.push_back(Cell{c.gen, std::move(full)});
    }
    stree_slot(cur_, p) = stree_with_wires(out, {wire});
  }

  // Finds or creates a token `1` for a node with unit input.
  DirPath unit_site() {
    if (cur_->kind == STree::One) return {};
    std::vector<DirPath> sites = tokens(STree::One);
    int n = static_cast<int>(sites.size());
    int fresh = fresh_units ? 0 : n;
    int c = choose(n + 1);
    if (c != fresh) return sites[static_cast<std::size_t>(c < fresh ? c : c - 1)];
    glue(GenKind::RhoInv, {});
    return {Dir::R};
  }

  // Choice points replayed from `script`; unrecorded ones take option 0.
  struct Choices {
    std::vector<int> script, arity;
    std::size_t pos = 0;
    // Moves to the next untried script, depth first; false when exhausted.
    bool advance() {
      arity.resize(std::min(arity.size(), pos));
      script.resize(arity.size());
      while (!script.empty() && script.back() + 1 >= arity.back()) {
        script.pop_back();
        arity.pop_back();
      }
      if (script.empty()) return false;
      ++script.back();
      arity.clear();
      pos = 0;
      return true;
    }
  };
  Choices* choices = nullptr;

  int choose(int n) {
    if (n <= 1 || !choices) return 0;
    Choices& c = *choices;
    if (c.pos >= c.script.size()) c.script.push_back(0);
    if (c.pos >= c.arity.size()) c.arity.resize(c.pos + 1);
    c.arity[c.pos] = n;
    return std::min(c.script[c.pos++], n - 1);
  }

  STree* form(const STree& pat) {
    if (pat.is_unit()) return unit_token(pat.kind);
    if (STree* hit = find_match(cur_.get(), pat)) return hit;
    if (pat.kind == STree::Leaf) throw Stuck{};
    if (has_unit(pat)) return form_stripped(pat);
    STree::Kind c = pat.kind;
    STree::Kind neutral = c == STree::Tensor ? STree::One : STree::Bot;
    bool unit_side = pat.l->kind == neutral || pat.r->kind == neutral;
    if (unit_side && reuse_units) {
      // Prefer a unit already present (e.g. inside a par), which a
      // distributivity step can bring next to the other operand.
      auto snap = snapshot();
      try {
        return pair_up(pat, c);
      } catch (const Stuck&) {
        restore(std::move(snap));
      }
    }
    if (pat.r->kind == neutral) {
      DirPath p = path_of(form(*pat.l));
      glue(c == STree::Tensor ? GenKind::RhoInv : GenKind::BRhoInv, p);
      return at(p);
    }
    if (pat.l->kind == neutral) {
      DirPath p = path_of(form(*pat.r));
      glue(c == STree::Tensor ? GenKind::LamInv : GenKind::BLamInv, p);
      return at(p);
    }
    return pair_up(pat, c);
  }

  STree* pair_up(const STree& pat, STree::Kind c) {
    if (c == STree::Tensor && reuse_units && bottom_side(pat) >= 0) {
      DirPath unused;
      if (!find_token(cur_.get(), STree::Bot, unused))
        if (STree* r = pair_with_new_bottom(pat)) return r;
    }
    // Wired operand first, so unit tokens it contains are not taken.
    bool swap = pure_unit(*pat.l) && !pure_unit(*pat.r);
    STree* a = form(swap ? *pat.r : *pat.l);
    a->frozen = true;
    int ta = hold(a);
    STree* b = form(swap ? *pat.l : *pat.r);
    a = held(ta);
    b->frozen = true;
    if (swap) std::swap(a, b);
    STree* r = join(a, b, c);
    a->frozen = false;
    b->frozen = false;
    return r;
  }

  static bool has_unit(const STree& t) {
    if (t.is_unit()) return true;
    return (t.kind == STree::Tensor || t.kind == STree::Par) && (has_unit(*t.l) || has_unit(*t.r));
  }

  // Forms the pattern with its removable units stripped, then puts them
  // back by the inverse unit isos.
  STree* form_stripped(const STree& pat) {
    Builder strip(pat.clone());
    strip.cleanup_units();
    if (strip.glued.empty()) return pair_up(pat, pat.kind);
    DirPath p = path_of(form(*strip.cur_));
    for (auto it = strip.glued.rbegin(); it != strip.glued.rend(); ++it) {
      DirPath q = p;
      q.insert(q.end(), it->second.begin(), it->second.end());
      glue(*inverse_kind(it->first), q);
    }
    return at(p);
  }

  static bool pure_unit(const STree& t) {
    if (t.is_unit()) return true;
    return (t.kind == STree::Tensor || t.kind == STree::Par) && pure_unit(*t.l) && pure_unit(*t.r);
  }

  static bool has_bottom(const STree& t) {
    if (t.kind == STree::Bot) return true;
    return (t.kind == STree::Tensor || t.kind == STree::Par) && (has_bottom(*t.l) || has_bottom(*t.r));
  }

  // 0 or 1 when exactly that operand is a unit-only tree holding a bottom.
  static int bottom_side(const STree& pat) {
    bool l = pure_unit(*pat.l) && has_bottom(*pat.l);
    bool r = pure_unit(*pat.r) && has_bottom(*pat.r);
    return l == r ? -1 : l ? 0 : 1;
  }

  // A tensor with a unit-only operand that needs a bottom: the bottom is
  // introduced beside a tensor neighbour Y as Y%bot, the operand is grown
  // from it, and distributivity moves it next to the other operand.
  STree* pair_with_new_bottom(const STree& pat) {
    bool left = bottom_side(pat) == 0;
    STree* o = form(left ? *pat.r : *pat.l);
    DirPath po = path_of(o);
    bool tensor_parent = false;
    if (!po.empty()) {
      STree* parent = at(DirPath(po.begin(), po.end() - 1));
      tensor_parent = parent->kind == STree::Tensor && !parent->frozen;
    }
    if (!tensor_parent) {
      // No neighbour: make one, leaving a 1 beside the result in a par.
      glue(GenKind::RhoInv, po);
      po.push_back(Dir::L);
      o = at(po);
    }
    DirPath parent(po.begin(), po.end() - 1);
    DirPath sib = parent;
    sib.push_back(po.back() == Dir::L ? Dir::R : Dir::L);
    o->frozen = true;
    int to = hold(o);
    // The neighbour is the sibling by default, or any other operand of the
    // tensor cluster around o.
    DirPath top = parent;
    while (!top.empty()) {
      STree* up = at(DirPath(top.begin(), top.end() - 1));
      if (up->kind != STree::Tensor || up->frozen) break;
      top.pop_back();
    }
    std::vector<DirPath> sites{sib};
    std::vector<STree*> comps;
    components(at(top), STree::Tensor, comps);
    for (STree* x : comps)
      if (x != o && x != at(sib)) sites.push_back(path_of(x));
    glue(GenKind::BRhoInv, sites[static_cast<std::size_t>(choose(static_cast<int>(sites.size())))]);
    o = held(to);
    STree* u = form(left ? *pat.l : *pat.r);
    o = held(to);
    u->frozen = true;
    STree* r = left ? join(u, o, STree::Tensor) : join(o, u, STree::Tensor);
    o->frozen = false;
    u->frozen = false;
    return r;
  }

  void cleanup_units() {
    for (;;) {
      DirPath p;
      bool left = false;
      if (!find_removable(cur_.get(), p, left)) return;
      STree* parent = at(p);
      bool tensor = parent->kind == STree::Tensor;
      GenKind k = left ? (tensor ? GenKind::Lam : GenKind::BLam) : (tensor ? GenKind::Rho : GenKind::BRho);
      glue(k, p);
    }
  }

  // T*(1%A) -> (T*1)%A -> T%A, for a tensor unit stranded inside a par.
  bool absorb_par_unit() {
    DirPath p;
    if (!find_tensor_over_unit_par(cur_.get(), p)) return false;
    STree* t = at(p);
    if (t->l->kind == STree::Par && has_one_operand(*t->l) &&
        !(t->r->kind == STree::Par && has_one_operand(*t->r))) {
      glue(GenKind::Sig, p);
      t = at(p);
    }
    DirPath pr = p;
    pr.push_back(Dir::R);
    if (t->r->r->kind == STree::One) glue(GenKind::BSig, pr);
    glue(GenKind::Dist, p);
    cleanup_units();
    return true;
  }

  struct Snapshot {
    STreePtr tree;
    std::size_t ncells;
  };
  Snapshot snapshot() const { return {cur_->clone(), cells.size()}; }
  void restore(Snapshot s) {
    cur_ = std::move(s.tree);
    cells.erase(cells.begin() + static_cast<long>(s.ncells), cells.end());
  }

 private:
  static bool find_ptr(const STree* t, const STree* x, DirPath& p) {
    if (!t) return false;
    if (t == x) return true;
    if (t->kind == STree::Tensor || t->kind == STree::Par) {
      p.push_back(Dir::L);
      if (find_ptr(t->l.get(), x, p)) return true;
      p.back() = Dir::R;
      if (find_ptr(t->r.get(), x, p)) return true;
      p.pop_back();
    }
    return false;
  }

  static STree* find_match(STree* t, const STree& pat) {
    if (!t || t->frozen) return nullptr;
    if (same_shape(*t, pat)) return t;
    if (t->kind == STree::Tensor || t->kind == STree::Par) {
      if (STree* x = find_match(t->l.get(), pat)) return x;
      return find_match(t->r.get(), pat);
    }
    return nullptr;
  }

  static bool has_one_operand(const STree& t) { return t.l->kind == STree::One || t.r->kind == STree::One; }

  static bool find_tensor_over_unit_par(const STree* t, DirPath& p) {
    if (!t || (t->kind != STree::Tensor && t->kind != STree::Par)) return false;
    if (t->kind == STree::Tensor && !t->frozen) {
      for (const STree* c : {t->l.get(), t->r.get()})
        if (c->kind == STree::Par && !c->frozen && has_one_operand(*c)) return true;
    }
    p.push_back(Dir::L);
    if (find_tensor_over_unit_par(t->l.get(), p)) return true;
    p.back() = Dir::R;
    if (find_tensor_over_unit_par(t->r.get(), p)) return true;
    p.pop_back();
    return false;
  }

  static bool find_token(const STree* t, STree::Kind k, DirPath& p) {
    if (!t || t->frozen) return false;
    if (t->kind == k) return true;
    if (t->kind == STree::Tensor || t->kind == STree::Par) {
      p.push_back(Dir::L);
      if (find_token(t->l.get(), k, p)) return true;
      p.back() = Dir::R;
      if (find_token(t->r.get(), k, p)) return true;
      p.pop_back();
    }
    return false;
  }

  static bool find_removable(const STree* t, DirPath& p, bool& left) {
    if (!t || (t->kind != STree::Tensor && t->kind != STree::Par)) return false;
    STree::Kind neutral = t->kind == STree::Tensor ? STree::One : STree::Bot;
    if (!t->frozen) {
      if (t->l->kind == neutral) {
        left = true;
        return true;
      }
      if (t->r->kind == neutral) {
        left = false;
        return true;
      }
    }
    p.push_back(Dir::L);
    if (find_removable(t->l.get(), p, left)) return true;
    p.back() = Dir::R;
    if (find_removable(t->r.get(), p, left)) return true;
    p.pop_back();
    return false;
  }

  void collect_tokens(const STree* t, STree::Kind k, DirPath& p, std::vector<DirPath>& out) const {
    if (!t || t->frozen) return;
    if (t->kind == k) out.push_back(p);
    if (t->kind == STree::Tensor || t->kind == STree::Par) {
      p.push_back(Dir::L);
      collect_tokens(t->l.get(), k, p, out);
      p.back() = Dir::R;
      collect_tokens(t->r.get(), k, p, out);
      p.pop_back();
    }
  }

  std::vector<DirPath> tokens(STree::Kind k) const {
    std::vector<DirPath> out;
    DirPath p;
    collect_tokens(cur_.get(), k, p, out);
    return out;
  }

  STree* unit_token(STree::Kind k) {
    std::vector<DirPath> found = tokens(k);
    int c = choose(static_cast<int>(found.size()) + 1);
    if (c < static_cast<int>(found.size())) return at(found[static_cast<std::size_t>(c)]);
    glue(k == STree::One ? GenKind::RhoInv : GenKind::BRhoInv, {});
    return at({Dir::R});
  }

  static void components(STree* n, STree::Kind c, std::vector<STree*>& out) {
    if (n->kind == c && !n->frozen) {
      components(n->l.get(), c, out);
      components(n->r.get(), c, out);
    } else {
      out.push_back(n);
    }
  }

  void right_comb(DirPath p, STree::Kind c) {
    for (;;) {
      STree* n = at(p);
      if (n->kind != c || n->frozen) return;
      while (n->l->kind == c && !n->l->frozen) {
        glue(assoc(c), p);
        n = at(p);
      }
      p.push_back(Dir::R);
    }
  }

  void swap_adjacent(const DirPath& base, std::size_t i, std::size_t k, STree::Kind c) {
    DirPath p = base;
    p.insert(p.end(), i, Dir::R);
    if (i + 2 == k) {
      glue(swap_kind(c), p);
      return;
    }
    glue(assoc_inv(c), p);
    DirPath pl = p;
    pl.push_back(Dir::L);
    glue(swap_kind(c), pl);
    glue(assoc(c), p);
  }

  // Regroups the cluster rooted at `base` so that ca and cb become the left
  // and right operand of one node; returns that node's path.
  DirPath make_pair(const DirPath& base, STree* ca, STree* cb, STree::Kind c) {
    DirPath sib;
    if (find_parent(at(base), ca, cb, c, sib)) {
      DirPath p = base;
      p.insert(p.end(), sib.begin(), sib.end());
      return p;
    }
    if (find_parent(at(base), cb, ca, c, sib)) {
      DirPath p = base;
      p.insert(p.end(), sib.begin(), sib.end());
      glue(swap_kind(c), p);
      return p;
    }
    right_comb(base, c);
    std::vector<STree*> order;
    components(at(base), c, order);
    std::size_t k = order.size();
    auto move_to = [&](STree* x, std::size_t target) {
      std::size_t idx = static_cast<std::size_t>(std::find(order.begin(), order.end(), x) - order.begin());
      while (idx > target) {
        swap_adjacent(base, idx - 1, k, c);
        std::swap(order[idx - 1], order[idx]);
        --idx;
      }
    };
    move_to(ca, 0);
    move_to(cb, 1);
    if (k > 2) {
      glue(assoc_inv(c), base);
      DirPath p = base;
      p.push_back(Dir::L);
      return p;
    }
    return base;
  }

  static bool find_parent(STree* n, STree* l, STree* r, STree::Kind c, DirPath& p) {
    if (!n || n->kind != c || n->frozen) return false;
    if (n->l.get() == l && n->r.get() == r) return true;
    p.push_back(Dir::L);
    if (find_parent(n->l.get(), l, r, c, p)) return true;
    p.back() = Dir::R;
    if (find_parent(n->r.get(), l, r, c, p)) return true;
    p.pop_back();
    return false;
  }

  STree* join(STree* a, STree* b, STree::Kind c) {
    for (int iter = 0; iter < 256; ++iter) {
      DirPath pa = path_of(a);
      DirPath pb = path_of(b);
      std::size_t n = 0;
      while (n < pa.size() && n < pb.size() && pa[n] == pb[n]) ++n;
      DirPath base(pa.begin(), pa.begin() + static_cast<long>(n));
      STree* top = at(base);
      if (top->kind == c && top->l.get() == a && top->r.get() == b) return top;
      if (top->kind != c) throw Stuck{};
      std::vector<STree*> comps;
      components(top, c, comps);
      STree* ca = nullptr;
      STree* cb = nullptr;
      for (STree* x : comps) {
        if (contains(x, a)) ca = x;
        if (contains(x, b)) cb = x;
      }
      if (!ca || !cb || ca == cb) throw Stuck{};
      DirPath pp = make_pair(base, ca, cb, c);
      if (ca == a && cb == b) continue;
      if (c != STree::Tensor) throw Stuck{};
      if (ca != a) {
        if (ca->kind != STree::Par || ca->frozen) throw Stuck{};
        DirPath pc = pp;
        pc.push_back(Dir::L);
        if (contains(ca->l.get(), a)) glue(GenKind::BSig, pc);
        glue(GenKind::DistP, pp);
      } else {
        if (cb->kind != STree::Par || cb->frozen) throw Stuck{};
        DirPath pc = pp;
        pc.push_back(Dir::R);
        if (contains(cb->r.get(), b)) glue(GenKind::BSig, pc);
        glue(GenKind::Dist, pp);
      }
    }
    throw Stuck{};
  }

  static STree* find_tag(STree* t, int tag) {
    if (!t) return nullptr;
    if (t->tag == tag) return t;
    if (STree* x = find_tag(t->l.get(), tag)) return x;
    return find_tag(t->r.get(), tag);
  }

  STreePtr cur_;
  int next_tag_ = 0;
};

bool run_node(Builder& bld, const NetNode& nd, std::string* why) {
  DirPath p;
  if (nd.ins.empty()) {
    if (nd.in.kind() != ObjKind::One) throw Stuck{};
    p = bld.unit_site();
  } else {
    STreePtr pat = stree_with_wires(nd.in, nd.ins);
    p = bld.path_of(bld.form(*pat));
  }
  if (nd.kind == NetNode::Gen) {
    bld.place(nd.gen, p, nd.outs);
    return true;
  }
  auto inner = sequentialize(*nd.inner, why);
  if (!inner) return false;
  bld.place_box(*inner, p, nd.out, nd.outs.at(0));
  return true;
}

// A node whose only output is an unwired bottom; placing it late lets the
// bottom land in a par, where it can be removed.
bool sinks_to_bottom(const NetNode& nd) { return nd.outs.empty() && nd.out.kind() == ObjKind::Bot; }

constexpr int kUnitSearchBudget = 512;

struct Mode {
  bool defer_bottoms;
  bool reuse_units;
  bool fresh_units;
};

std::optional<std::vector<Cell>> schedule(const Net& net, Mode mode, Builder::Choices* choices, std::string* why) {
  bool defer_bottoms = mode.defer_bottoms;
  Builder bld(net.dom, net.dom_wires);
  bld.choices = choices;
  bld.reuse_units = mode.reuse_units;
  bld.fresh_units = mode.fresh_units;
  std::vector<int> todo;
  for (std::size_t k = 0; k < net.nodes.size(); ++k)
    if (net.nodes[k].alive) todo.push_back(static_cast<int>(k));
  std::stable_sort(todo.begin(), todo.end(), [&](int x, int y) {
    const NetNode &a = net.nodes[x], &b = net.nodes[y];
    if (defer_bottoms && sinks_to_bottom(a) != sinks_to_bottom(b)) return sinks_to_bottom(b);
    return a.rank < b.rank;
  });
  try {
    while (!todo.empty()) {
      std::set<int> have = bld.present();
      bool progressed = false;
      for (std::size_t t = 0; t < todo.size() && !progressed; ++t) {
        const NetNode& nd = net.nodes[todo[t]];
        bool ready = std::all_of(nd.ins.begin(), nd.ins.end(), [&](int w) { return have.count(w) > 0; });
        if (!ready) continue;
        auto snap = bld.snapshot();
        bool ok = false;
        try {
          ok = run_node(bld, nd, why);
        } catch (const Stuck&) {
          ok = false;
        }
        if (ok) {
          bld.cleanup_units();
          todo.erase(todo.begin() + static_cast<long>(t));
          progressed = true;
        } else {
          bld.restore(std::move(snap));
        }
      }
      if (!progressed) {
        if (why) *why = "no schedulable node";
        return std::nullopt;
      }
    }
    bld.cleanup_units();
    STreePtr pat = stree_with_wires(net.cod, net.cod_wires);
    for (;;) {
      auto snap = bld.snapshot();
      bool stuck = false;
      try {
        if (bld.path_of(bld.form(*pat)).empty()) break;
      } catch (const Stuck&) {
        stuck = true;
      }
      bld.restore(std::move(snap));
      if (!bld.absorb_par_unit()) {
        if (why) *why = stuck ? "cannot arrange wires" : "leftover units around the codomain";
        return std::nullopt;
      }
    }
  } catch (const Stuck&) {
    if (why) *why = "cannot arrange wires";
    return std::nullopt;
  }
  return bld.cells;
}

}  // namespace

std::optional<std::vector<Cell>> sequentialize(const Net& net, std::string* why) {
  // Units carry no wires, so a schedule may strand one; retry with bottoms
  // placed last, unit tokens reused, or fresh tokens for unit inputs.
  std::vector<Mode> modes;
  for (bool fresh : {false, true})
    for (auto [defer, reuse] : {std::pair{false, false}, std::pair{true, true}, std::pair{false, true}, std::pair{true, false}})
      modes.push_back(Mode{defer, reuse, fresh});
  for (const Mode& m : modes)
    if (auto cells = schedule(net, m, nullptr, why)) return cells;
  // Last resort: search over which unit token each unit input takes.
  int budget = kUnitSearchBudget;
  for (const Mode& m : modes) {
    Builder::Choices ch;
    if (!schedule(net, m, &ch, why) && ch.advance()) {
      do {
        if (auto cells = schedule(net, m, &ch, why)) return cells;
      } while (--budget > 0 && ch.advance());
    }
    if (budget <= 0) break;
  }
  return std::nullopt;
}

std::optional<std::vector<Cell>> rewire(const Object& src, const std::vector<int>& src_wires,
                                        const Object& dst, const std::vector<int>& dst_wires) {
  Net n;
  n.dom = src;
  n.cod = dst;
  n.dom_wires = src_wires;
  n.cod_wires = dst_wires;
  return sequentialize(n);
}

std::optional<CanonicalForm> net_to_form(const Net& net, std::string* why) {
  auto cells = sequentialize(net, why);
  if (!cells) return std::nullopt;
  CanonicalForm c{net.dom, net.cod, std::move(*cells)};
  retype(c);
  if (c.cod != net.cod) {
    if (why) *why = "codomain drift";
    return std::nullopt;
  }
  return tidy(std::move(c));
}

}  // namespace lincat
