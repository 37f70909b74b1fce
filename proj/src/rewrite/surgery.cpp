#include "lincat/surgery.hpp"

#include <algorithm>

#include "lincat/sequentialize.hpp"

namespace lincat {

namespace {

std::vector<int> fresh_wires(Net& n, const Object& o) {
  std::vector<int> ws;
  for (std::size_t i = 0; i < wire_leaves(o).size(); ++i) ws.push_back(n.fresh());
  return ws;
}

class Surgeon {
 public:
  Surgeon(Net& t, const Redex& r) : t_(t), r_(r) {
    const NetNode& first = t.nodes.at(static_cast<std::size_t>(r.nodes.at(0)));
    rank_ = first.rank;
    cells_ = first.cells;
  }

  NetNode& node(int k) { return t_.nodes.at(static_cast<std::size_t>(k)); }
  void kill(int k) { node(k).alive = false; }

  // Adds a generator node; returns its output wires.
  std::vector<int> gen(const Generator& g, std::vector<int> ins, std::vector<int> outs = {}, bool given = false) {
    NetNode nd;
    nd.kind = NetNode::Gen;
    nd.gen = g;
    nd.in = g.dom();
    nd.out = g.cod();
    nd.ins = std::move(ins);
    nd.outs = given ? std::move(outs) : fresh_wires(t_, g.cod());
    nd.rank = next_rank();
    nd.cells = cells_;
    std::vector<int> r = nd.outs;
    t_.nodes.push_back(std::move(nd));
    return r;
  }

  int gen1(const Generator& g, int in) { return gen(g, {in}).at(0); }

  void box(const Object& in, const Object& out, int win, int wout, std::shared_ptr<Net> inner) {
    NetNode nd;
    nd.kind = NetNode::Box;
    nd.in = in;
    nd.out = out;
    nd.ins = {win};
    nd.outs = {wout};
    nd.inner = std::move(inner);
    nd.rank = next_rank();
    nd.cells = cells_;
    t_.nodes.push_back(std::move(nd));
  }

  static std::shared_ptr<Net> single(const Generator& g) {
    auto n = std::make_shared<Net>();
    n->dom = g.dom();
    n->cod = g.cod();
    n->dom_wires = fresh_wires(*n, n->dom);
    NetNode nd;
    nd.kind = NetNode::Gen;
    nd.gen = g;
    nd.in = g.dom();
    nd.out = g.cod();
    nd.ins = n->dom_wires;
    nd.outs = fresh_wires(*n, n->cod);
    n->cod_wires = nd.outs;
    n->nodes.push_back(std::move(nd));
    return n;
  }

  void run() {
    const std::vector<int>& k = r_.nodes;
    switch (r_.rule) {
      case 1: {
        NetNode& d2 = node(k[1]);
        Object a = node(k[0]).gen.subs[0];
        int b = d2.ins[0], c = d2.outs[0];
        Object in = d2.in, out = d2.out;
        kill(k[1]);
        box(in, Object::bang(out.inner()), b, c, single(Generator(GenKind::Delta, {a})));
        break;
      }
      case 2: {
        int a = node(k[0]).ins[0];
        std::vector<int> c = node(k[1]).outs;
        kill(k[0]);
        kill(k[1]);
        redirect_consumer(t_, c.at(0), a);
        break;
      }
      case 3:
      case 5:
      case 7:
        through_box();
        break;
      case 4: {
        Object a = node(k[0]).gen.subs[0];
        int in = node(k[0]).ins[0];
        std::vector<int> c = node(k[1]).outs;
        kill(k[0]);
        kill(k[1]);
        std::vector<int> x = gen(Generator(GenKind::Dup, {a}), {in});
        gen(Generator(GenKind::Delta, {a}), {x[0]}, {c[0]}, true);
        gen(Generator(GenKind::Delta, {a}), {x[1]}, {c[1]}, true);
        break;
      }
      case 6: {
        Object a = node(k[0]).gen.subs[0];
        int in = node(k[0]).ins[0];
        kill(k[0]);
        kill(k[1]);
        gen(Generator(GenKind::Drop, {a}), {in});
        break;
      }
      case 8: {
        int a = node(k[0]).ins[0];
        int other = node(k[0]).outs.at(static_cast<std::size_t>(1 - r_.port));
        kill(k[0]);
        kill(k[1]);
        redirect_consumer(t_, other, a);
        break;
      }
      case 9: {
        std::vector<Object> s = node(k[0]).gen.subs;
        std::vector<int> in = node(k[0]).ins;
        int c = node(k[1]).outs[0];
        kill(k[0]);
        kill(k[1]);
        int x0 = gen1(Generator(GenKind::Delta, {s[0]}), in[0]);
        int x1 = gen1(Generator(GenKind::Delta, {s[1]}), in[1]);
        Generator outer(GenKind::Phi, {Object::bang(s[0]), Object::bang(s[1])});
        int y = gen(outer, {x0, x1}).at(0);
        Generator inner(GenKind::Phi, s);
        box(outer.cod(), Object::bang(inner.cod()), y, c, single(inner));
        break;
      }
      case 10: {
        std::vector<Object> s = node(k[0]).gen.subs;
        std::vector<int> in = node(k[0]).ins;
        std::vector<int> c = node(k[1]).outs;
        kill(k[0]);
        kill(k[1]);
        std::size_t na = wire_leaves(s[0]).size();
        gen(Generator(GenKind::Eps, {s[0]}), {in[0]}, std::vector<int>(c.begin(), c.begin() + static_cast<long>(na)), true);
        gen(Generator(GenKind::Eps, {s[1]}), {in[1]}, std::vector<int>(c.begin() + static_cast<long>(na), c.end()), true);
        break;
      }
      case 11: {
        std::vector<Object> s = node(k[0]).gen.subs;
        std::vector<int> in = node(k[0]).ins;
        std::vector<int> c = node(k[1]).outs;
        kill(k[0]);
        kill(k[1]);
        std::vector<int> p = gen(Generator(GenKind::Dup, {s[0]}), {in[0]});
        std::vector<int> q = gen(Generator(GenKind::Dup, {s[1]}), {in[1]});
        gen(Generator(GenKind::Phi, s), {p[0], q[0]}, {c[0]}, true);
        gen(Generator(GenKind::Phi, s), {p[1], q[1]}, {c[1]}, true);
        break;
      }
      case 12: {
        std::vector<Object> s = node(k[0]).gen.subs;
        std::vector<int> in = node(k[0]).ins;
        kill(k[0]);
        kill(k[1]);
        gen(Generator(GenKind::Drop, {s[0]}), {in[0]});
        gen(Generator(GenKind::Drop, {s[1]}), {in[1]});
        break;
      }
      case 13: {
        NetNode& d = node(k[1]);
        int b = d.ins[0], c = d.outs[0];
        Object in = d.in, out = d.out;
        kill(k[1]);
        box(in, out, b, c, single(Generator(GenKind::Phi0, {})));
        break;
      }
      case 14:
      case 16:
        kill(k[0]);
        kill(k[1]);
        break;
      case 15: {
        std::vector<int> c = node(k[1]).outs;
        kill(k[0]);
        kill(k[1]);
        gen(Generator(GenKind::Phi0, {}), {}, {c[0]}, true);
        gen(Generator(GenKind::Phi0, {}), {}, {c[1]}, true);
        break;
      }
      case 17:
        unit_into_box();
        break;
      case 18: {
        int d = k[1];
        int c = node(d).outs[0];
        kill(d);
        NetNode old = node(k[0]);
        Object a0 = old.in.inner();
        int x = gen1(Generator(GenKind::Delta, {a0}), old.ins[0]);
        auto inner = std::make_shared<Net>();
        inner->dom = old.in;
        inner->cod = old.out;
        int w = inner->fresh();
        int z = inner->fresh();
        inner->dom_wires = {w};
        inner->cod_wires = {z};
        NetNode nested = old;
        nested.ins = {w};
        nested.outs = {z};
        inner->nodes.push_back(std::move(nested));
        NetNode& b = node(k[0]);
        b.in = Object::bang(old.in);
        b.out = Object::bang(old.out);
        b.ins = {x};
        b.outs = {c};
        b.inner = inner;
        break;
      }
      case 19: {
        NetNode b = node(k[0]);
        std::vector<int> c = node(k[1]).outs;
        kill(k[0]);
        kill(k[1]);
        std::vector<int> e = gen(Generator(GenKind::Eps, {b.in.inner()}), {b.ins[0]});
        std::unordered_map<int, int> bind;
        for (std::size_t i = 0; i < b.inner->dom_wires.size(); ++i) bind[b.inner->dom_wires[i]] = e.at(i);
        auto map = splice(t_, *b.inner, bind);
        for (std::size_t j = 0; j < c.size(); ++j) redirect_consumer(t_, c[j], map.at(b.inner->cod_wires[j]));
        break;
      }
      case 20: {
        std::vector<int> c = node(k[1]).outs;
        kill(k[1]);
        NetNode b = node(k[0]);
        std::vector<int> x = gen(Generator(GenKind::Dup, {b.in.inner()}), {b.ins[0]});
        NetNode& b1 = node(k[0]);
        b1.ins = {x[0]};
        b1.outs = {c[0]};
        NetNode b2 = b;
        b2.inner = deep_copy(*b.inner);
        b2.ins = {x[1]};
        b2.outs = {c[1]};
        t_.nodes.push_back(std::move(b2));
        break;
      }
      case 21: {
        NetNode b = node(k[0]);
        kill(k[0]);
        kill(k[1]);
        gen(Generator(GenKind::Drop, {b.in.inner()}), {b.ins[0]});
        break;
      }
      case 22: {
        std::vector<int> tau = node(k[0]).outs;
        std::vector<int> gam = node(k[1]).ins;
        kill(k[0]);
        kill(k[1]);
        for (std::size_t j = 0; j + 1 < tau.size(); ++j) redirect_consumer(t_, tau[j], gam.at(j + 1));
        break;
      }
      case 23: {
        std::vector<int> tau = node(k[0]).outs;
        std::vector<int> gam = node(k[1]).ins;
        kill(k[0]);
        kill(k[1]);
        redirect_consumer(t_, tau.back(), gam.at(0));
        break;
      }
      default:
        throw StaleRedex("unknown rule " + std::to_string(r_.rule));
    }
  }

 private:
  double next_rank() {
    step_ += 1e-3;
    return rank_ + step_;
  }

  // Rules 3, 5, 7: delta then (phi chain) box whose inner net begins with
  // eps, dup or drop on the delta's component.
  void through_box() {
    int d = r_.nodes[0];
    int bx = r_.nodes[1];
    Object a = node(d).gen.subs[0];
    int in = node(d).ins[0];
    int out = node(d).outs[0];
    kill(d);
    Net& inner = *node(bx).inner;
    NetNode& u = inner.nodes.at(static_cast<std::size_t>(r_.inner));
    Object comp = u.gen.cod();
    std::vector<int> u_outs = u.outs;
    int x = u.ins.at(0);
    u.alive = false;
    int p = in;
    if (r_.rule == 5) {
      std::vector<int> two = gen(Generator(GenKind::Dup, {a}), {in});
      int b1 = gen1(Generator(GenKind::Delta, {a}), two[0]);
      int b2 = gen1(Generator(GenKind::Delta, {a}), two[1]);
      p = gen(Generator(GenKind::Phi, {Object::bang(a), Object::bang(a)}), {b1, b2}).at(0);
    } else if (r_.rule == 7) {
      gen(Generator(GenKind::Drop, {a}), {in});
      p = gen(Generator(GenKind::Phi0, {}), {}).at(0);
    }
    redirect_consumer(t_, out, p);
    for (auto [k, port] : r_.chain) {
      NetNode& f = node(k);
      std::vector<Object> subs = f.gen.subs;
      subs[static_cast<std::size_t>(port)] = comp;
      f.gen = Generator(GenKind::Phi, subs);
      f.in = f.gen.dom();
      f.out = f.gen.cod();
      comp = Object::tensor(subs[0], subs[1]);
    }
    NetNode& b = node(bx);
    b.in = Object::bang(comp);
    Net& in2 = *b.inner;
    in2.dom = comp;
    auto pos = std::find(in2.dom_wires.begin(), in2.dom_wires.end(), x);
    pos = in2.dom_wires.erase(pos);
    in2.dom_wires.insert(pos, u_outs.begin(), u_outs.end());
  }

  // Rule 17, optionally through a box h on phi0's output.
  void unit_into_box() {
    const std::vector<int>& k = r_.nodes;
    int fk = k.back();
    NetNode f = node(fk);
    std::size_t port = static_cast<std::size_t>(r_.port);
    int other = f.ins.at(1 - port);
    Object a = f.gen.subs.at(1 - port);
    auto inner = std::make_shared<Net>();
    inner->dom = a;
    inner->cod = f.out.inner();
    inner->dom_wires = fresh_wires(*inner, a);
    std::vector<int> hcod;
    if (k.size() == 3) {
      const NetNode& h = node(k[1]);
      auto map = splice(*inner, *h.inner, {});
      for (int w : h.inner->cod_wires) hcod.push_back(map.at(w));
    }
    if (port == 0) {
      inner->cod_wires = hcod;
      inner->cod_wires.insert(inner->cod_wires.end(), inner->dom_wires.begin(), inner->dom_wires.end());
    } else {
      inner->cod_wires = inner->dom_wires;
      inner->cod_wires.insert(inner->cod_wires.end(), hcod.begin(), hcod.end());
    }
    for (int x : k) kill(x);
    box(Object::bang(a), f.out, other, f.outs[0], inner);
  }

  Net& t_;
  const Redex& r_;
  double rank_ = 0;
  double step_ = 0;
  std::vector<int> cells_;
};

}  // namespace

Net contract(const Net& top, const Redex& r) {
  Net copy = *deep_copy(top);
  Net* t = &copy;
  for (int b : r.boxes) t = t->nodes.at(static_cast<std::size_t>(b)).inner.get();
  Surgeon(*t, r).run();
  normalize_net(copy);
  return copy;
}

std::optional<CanonicalForm> step(const CanonicalForm& c, const Redex& r, std::string* why) {
  Net n = form_net(c);
  std::vector<Redex> all = find_redexes(n);
  if (std::find(all.begin(), all.end(), r) == all.end()) throw StaleRedex("redex no longer matches");
  Net m = contract(n, r);
  auto f = net_to_form(m, why);
  if (f && (f->dom != c.dom || f->cod != c.cod)) {
    if (why) *why = "contractum changed the type";
    return std::nullopt;
  }
  return f;
}

}  // namespace lincat
