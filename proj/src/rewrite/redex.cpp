#include "lincat/redex.hpp"

#include <algorithm>
#include <climits>

namespace lincat {

Net form_net(const CanonicalForm& c) {
  Net n = build_net(c);
  normalize_net(n);
  return n;
}

namespace {

bool gen_is(const NetNode& nd, GenKind k) { return nd.kind == NetNode::Gen && nd.gen.kind == k; }

void wired_leaves(const Object& o, std::vector<Object>& out) {
  switch (o.kind()) {
    case ObjKind::One:
    case ObjKind::Bot:
      return;
    case ObjKind::Tensor:
    case ObjKind::Par:
      wired_leaves(o.left(), out);
      wired_leaves(o.right(), out);
      return;
    default:
      out.push_back(o);
  }
}

// Yanking joins the wires of tau{A} and gamma{B}; that needs the wires to
// agree in type: the wired leaves of A and B (rule 22), or A^ and B^ as
// single wires (rule 23).
bool yank_types_agree(const NetNode& tau, const NetNode& gamma, int rule) {
  const Object& a = tau.gen.subs[0];
  const Object& b = gamma.gen.subs[0];
  if (rule == 23) return a == b;
  std::vector<Object> la, lb;
  wired_leaves(a, la);
  wired_leaves(b, lb);
  return la == lb;
}

class Scanner {
 public:
  explicit Scanner(std::vector<Redex>& out) : out_(out) {}

  void scan(const Net& n, const std::vector<int>& boxes) {
    WireIndex ix = index_wires(n);
    auto consumer = [&](int w) -> End {
      auto it = ix.consumer.find(w);
      return it == ix.consumer.end() ? End{} : it->second;
    };
    for (std::size_t k = 0; k < n.nodes.size(); ++k) {
      const NetNode& a = n.nodes[k];
      if (!a.alive) continue;
      int ki = static_cast<int>(k);
      if (a.kind == NetNode::Box) {
        scan(*a.inner, extend(boxes, ki));
        End c = consumer(a.outs[0]);
        if (c.node < 0) continue;
        const NetNode& q = n.nodes[static_cast<std::size_t>(c.node)];
        int rule = 0;
        if (gen_is(q, GenKind::Delta)) rule = 18;
        else if (gen_is(q, GenKind::Eps)) rule = 19;
        else if (gen_is(q, GenKind::Dup)) rule = 20;
        else if (gen_is(q, GenKind::Drop)) rule = 21;
        if (rule) {
          Redex r = make(n, rule, boxes, {ki, c.node});
          r.reversible = is_wiring_only(*a.inner);
          out_.push_back(std::move(r));
        }
        continue;
      }
      switch (a.gen.kind) {
        case GenKind::Delta: {
          End c = consumer(a.outs[0]);
          if (c.node < 0) break;
          const NetNode& q = n.nodes[static_cast<std::size_t>(c.node)];
          int rule = 0;
          if (gen_is(q, GenKind::Delta)) rule = 1;
          else if (gen_is(q, GenKind::Eps)) rule = 2;
          else if (gen_is(q, GenKind::Dup)) rule = 4;
          else if (gen_is(q, GenKind::Drop)) rule = 6;
          if (rule) {
            out_.push_back(make(n, rule, boxes, {ki, c.node}));
            break;
          }
          look_through(n, ix, ki, boxes);
          break;
        }
        case GenKind::Dup:
          for (int j = 0; j < 2; ++j) {
            End c = consumer(a.outs[static_cast<std::size_t>(j)]);
            if (c.node >= 0 && gen_is(n.nodes[static_cast<std::size_t>(c.node)], GenKind::Drop)) {
              Redex r = make(n, 8, boxes, {ki, c.node});
              r.port = j;
              out_.push_back(std::move(r));
              break;
            }
          }
          break;
        case GenKind::Phi: {
          End c = consumer(a.outs[0]);
          if (c.node < 0) break;
          const NetNode& q = n.nodes[static_cast<std::size_t>(c.node)];
          int rule = 0;
          if (gen_is(q, GenKind::Delta)) rule = 9;
          else if (gen_is(q, GenKind::Eps)) rule = 10;
          else if (gen_is(q, GenKind::Dup)) rule = 11;
          else if (gen_is(q, GenKind::Drop)) rule = 12;
          if (rule) out_.push_back(make(n, rule, boxes, {ki, c.node}));
          break;
        }
        case GenKind::Phi0: {
          End c = consumer(a.outs[0]);
          if (c.node < 0) break;
          const NetNode& q = n.nodes[static_cast<std::size_t>(c.node)];
          int rule = 0;
          if (gen_is(q, GenKind::Delta)) rule = 13;
          else if (gen_is(q, GenKind::Eps)) rule = 14;
          else if (gen_is(q, GenKind::Dup)) rule = 15;
          else if (gen_is(q, GenKind::Drop)) rule = 16;
          if (rule) {
            out_.push_back(make(n, rule, boxes, {ki, c.node}));
          } else if (gen_is(q, GenKind::Phi)) {
            Redex r = make(n, 17, boxes, {ki, c.node});
            r.port = c.port;
            out_.push_back(std::move(r));
          } else if (q.kind == NetNode::Box) {
            End c2 = consumer(q.outs[0]);
            if (c2.node >= 0 && gen_is(n.nodes[static_cast<std::size_t>(c2.node)], GenKind::Phi)) {
              Redex r = make(n, 17, boxes, {ki, c.node, c2.node});
              r.port = c2.port;
              out_.push_back(std::move(r));
            }
          }
          break;
        }
        case GenKind::Tau: {
          std::size_t na = a.outs.size() - 1;
          End c = consumer(a.outs[na]);
          if (c.node >= 0 && c.port == 0 && gen_is(n.nodes[static_cast<std::size_t>(c.node)], GenKind::Gamma)) {
            if (yank_types_agree(a, n.nodes[static_cast<std::size_t>(c.node)], 22))
              out_.push_back(make(n, 22, boxes, {ki, c.node}));
            break;
          }
          if (na == 0) break;
          End first = consumer(a.outs[0]);
          if (first.node < 0 || !gen_is(n.nodes[static_cast<std::size_t>(first.node)], GenKind::Gamma)) break;
          bool all = true;
          for (std::size_t j = 0; j < na && all; ++j) {
            End cj = consumer(a.outs[j]);
            all = cj.node == first.node && cj.port == static_cast<int>(j) + 1;
          }
          if (all && yank_types_agree(a, n.nodes[static_cast<std::size_t>(first.node)], 23))
            out_.push_back(make(n, 23, boxes, {ki, first.node}));
          break;
        }
        default:
          break;
      }
    }
  }

 private:
  static std::vector<int> extend(std::vector<int> v, int k) {
    v.push_back(k);
    return v;
  }

  static void span(const NetNode& nd, int& lo, int& hi) {
    for (int c : nd.cells) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }

  static Redex make(const Net& n, int rule, const std::vector<int>& boxes, std::vector<int> nodes) {
    Redex r;
    r.rule = rule;
    r.boxes = boxes;
    r.nodes = std::move(nodes);
    int lo = INT_MAX, hi = INT_MIN;
    for (int k : r.nodes) span(n.nodes[static_cast<std::size_t>(k)], lo, hi);
    r.start = lo;
    r.end = hi;
    return r;
  }

  // delta -> phi* -> box whose inner net starts with eps, dup or drop on
  // the component fed by the delta.
  void look_through(const Net& n, const WireIndex& ix, int d, const std::vector<int>& boxes) {
    std::vector<std::pair<int, int>> chain;
    int w = n.nodes[static_cast<std::size_t>(d)].outs[0];
    std::size_t idx = 0;
    for (;;) {
      auto it = ix.consumer.find(w);
      if (it == ix.consumer.end() || it->second.node < 0) return;
      const NetNode& q = n.nodes[static_cast<std::size_t>(it->second.node)];
      if (gen_is(q, GenKind::Phi)) {
        if (it->second.port == 1) idx += wire_leaves(q.gen.subs[0]).size();
        chain.push_back({it->second.node, it->second.port});
        w = q.outs[0];
        continue;
      }
      if (q.kind != NetNode::Box) return;
      const Net& in = *q.inner;
      int x = in.dom_wires.at(idx);
      WireIndex iix = index_wires(in);
      End u = iix.consumer.at(x);
      if (u.node < 0) return;
      const NetNode& un = in.nodes[static_cast<std::size_t>(u.node)];
      int rule = 0;
      if (gen_is(un, GenKind::Eps)) rule = 3;
      else if (gen_is(un, GenKind::Dup)) rule = 5;
      else if (gen_is(un, GenKind::Drop)) rule = 7;
      if (!rule) return;
      Redex r = make(n, rule, boxes, {d, it->second.node});
      int lo = INT_MAX, hi = INT_MIN;
      span(n.nodes[static_cast<std::size_t>(d)], lo, hi);
      span(un, lo, hi);
      for (auto [k, p] : chain) span(n.nodes[static_cast<std::size_t>(k)], lo, hi);
      r.start = lo;
      r.end = hi;
      r.chain = std::move(chain);
      r.inner = u.node;
      out_.push_back(std::move(r));
      return;
    }
  }

  std::vector<Redex>& out_;
};

}  // namespace

std::vector<Redex> find_redexes(const Net& top) {
  std::vector<Redex> out;
  Scanner(out).scan(top, {});
  std::stable_sort(out.begin(), out.end(), [](const Redex& a, const Redex& b) {
    return a.start != b.start ? a.start < b.start : a.rule < b.rule;
  });
  return out;
}

std::vector<Redex> find_redexes(const CanonicalForm& c) { return find_redexes(form_net(c)); }

}  // namespace lincat
