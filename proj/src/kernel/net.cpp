#include "lincat/net.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lincat {

WireIndex index_wires(const Net& n) {
  WireIndex ix;
  for (std::size_t i = 0; i < n.dom_wires.size(); ++i) ix.producer[n.dom_wires[i]] = {-1, static_cast<int>(i)};
  for (std::size_t i = 0; i < n.cod_wires.size(); ++i) ix.consumer[n.cod_wires[i]] = {-1, static_cast<int>(i)};
  for (std::size_t k = 0; k < n.nodes.size(); ++k) {
    const NetNode& nd = n.nodes[k];
    if (!nd.alive) continue;
    for (std::size_t p = 0; p < nd.ins.size(); ++p) ix.consumer[nd.ins[p]] = {static_cast<int>(k), static_cast<int>(p)};
    for (std::size_t p = 0; p < nd.outs.size(); ++p) ix.producer[nd.outs[p]] = {static_cast<int>(k), static_cast<int>(p)};
  }
  return ix;
}

Net build_net(const Object& dom, const std::vector<Cell>& cells, const std::vector<int>& ids) {
  Net net;
  net.dom = dom;
  STreePtr cur = stree_from_object(dom, false, net.next_wire, &net.dom_wires);

  struct Pending {
    Object start;
    Object now;
    std::vector<Cell> cells;
    std::vector<int> ids;
  };
  std::map<int, Pending> pending;

  auto flush = [&](int w) {
    Pending p = std::move(pending.at(w));
    pending.erase(w);
    NetNode box;
    box.kind = NetNode::Box;
    box.in = Object::bang(p.start);
    box.out = Object::bang(p.now);
    box.ins = {w};
    int w2 = net.fresh();
    box.outs = {w2};
    box.inner = std::make_shared<Net>(build_net(p.start, p.cells, p.ids));
    box.cells = p.ids;
    box.rank = *std::min_element(p.ids.begin(), p.ids.end());
    DirPath where;
    if (!stree_find(cur.get(), w, where)) throw TypeError("internal: lost box wire");
    stree_at(cur.get(), where)->wire = w2;
    net.nodes.push_back(std::move(box));
  };

  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    DirPath d = cell.dirs();
    auto bpos = std::find(d.begin(), d.end(), Dir::B);
    if (bpos != d.end()) {
      std::size_t k = static_cast<std::size_t>(bpos - d.begin());
      DirPath pre(d.begin(), bpos);
      STree* leaf = stree_at(cur.get(), pre);
      if (!leaf || leaf->kind != STree::Leaf || leaf->obj.kind() != ObjKind::Bang)
        throw TypeError("internal: bang frame does not meet a banged leaf");
      int w = leaf->wire;
      auto it = pending.find(w);
      if (it == pending.end())
        it = pending.emplace(w, Pending{leaf->obj.inner(), leaf->obj.inner(), {}, {}}).first;
      Cell inner{cell.gen, ContextPath(cell.path.begin() + static_cast<long>(k) + 1, cell.path.end())};
      CanonicalForm step{it->second.now, Object(), {inner}};
      retype(step);
      it->second.now = step.cod;
      it->second.cells.push_back(step.cells[0]);
      it->second.ids.push_back(ids[i]);
      leaf->obj = Object::bang(step.cod);
      continue;
    }
    if (is_glue(cell.gen.kind)) {
      apply_glue(cur, d, cell.gen.kind);
      continue;
    }
    STree* sub = stree_at(cur.get(), d);
    if (!sub) throw TypeError("internal: cell path leaves the object");
    std::vector<int> ws;
    stree_wires(sub, ws);
    for (int w : ws)
      if (pending.count(w)) flush(w);
    ws.clear();
    stree_wires(sub, ws);
    NetNode node;
    node.kind = NetNode::Gen;
    node.gen = cell.gen;
    node.in = cell.gen.dom();
    node.out = cell.gen.cod();
    node.ins = ws;
    node.cells = {ids[i]};
    node.rank = ids[i];
    STreePtr& slot = stree_slot(cur, d);
    slot = stree_from_object(node.out, false, net.next_wire, &node.outs);
    net.nodes.push_back(std::move(node));
  }
  std::vector<int> keys;
  for (const auto& [w, p] : pending) keys.push_back(w);
  for (int w : keys) flush(w);
  stree_wires(cur.get(), net.cod_wires);
  net.cod = cur->object();
  return net;
}

Net build_net(const CanonicalForm& c) {
  std::vector<int> ids(c.cells.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return build_net(c.dom, c.cells, ids);
}

std::shared_ptr<Net> deep_copy(const Net& n) {
  auto r = std::make_shared<Net>(n);
  for (auto& nd : r->nodes)
    if (nd.kind == NetNode::Box && nd.inner) nd.inner = deep_copy(*nd.inner);
  return r;
}

bool is_wiring_only(const Net& n) {
  for (const auto& nd : n.nodes) {
    if (!nd.alive) continue;
    if (nd.kind != NetNode::Box || !is_wiring_only(*nd.inner)) return false;
  }
  return true;
}

bool is_identity_net(const Net& n) {
  for (const auto& nd : n.nodes)
    if (nd.alive) return false;
  return n.dom == n.cod && n.dom_wires == n.cod_wires;
}

std::unordered_map<int, int> splice(Net& dst, const Net& src,
                                    const std::unordered_map<int, int>& bind) {
  std::unordered_map<int, int> map = bind;
  auto m = [&](int w) {
    auto it = map.find(w);
    if (it != map.end()) return it->second;
    int f = dst.fresh();
    map.emplace(w, f);
    return f;
  };
  for (int w : src.dom_wires) m(w);
  for (const auto& nd : src.nodes) {
    if (!nd.alive) continue;
    NetNode c = nd;
    for (auto& w : c.ins) w = m(w);
    for (auto& w : c.outs) w = m(w);
    if (c.kind == NetNode::Box) c.inner = deep_copy(*nd.inner);
    dst.nodes.push_back(std::move(c));
  }
  for (int w : src.cod_wires) m(w);
  return map;
}

Net compose_nets(const Net& a, const Net& b) {
  Net r = *deep_copy(a);
  std::unordered_map<int, int> bind;
  for (std::size_t i = 0; i < b.dom_wires.size(); ++i) bind[b.dom_wires[i]] = a.cod_wires.at(i);
  auto map = splice(r, b, bind);
  r.cod = b.cod;
  r.cod_wires.clear();
  for (int w : b.cod_wires) r.cod_wires.push_back(map.at(w));
  return r;
}

void redirect_consumer(Net& n, int from, int to) {
  for (auto& nd : n.nodes) {
    if (!nd.alive) continue;
    for (auto& w : nd.ins)
      if (w == from) w = to;
  }
  for (auto& w : n.cod_wires)
    if (w == from) w = to;
}

namespace {

void compact(Net& n) {
  n.nodes.erase(std::remove_if(n.nodes.begin(), n.nodes.end(), [](const NetNode& x) { return !x.alive; }),
                n.nodes.end());
}

// Box k feeds a chain of phi nodes ending in another box: moves box k past
// the chain (phi naturality) and into the last box (functoriality).
bool push_through_phi(Net& n, const WireIndex& ix, std::size_t k) {
  std::vector<std::pair<int, int>> chain;
  int w = n.nodes[k].outs[0];
  End c = ix.consumer.at(w);
  while (c.node >= 0 && n.nodes[static_cast<std::size_t>(c.node)].kind == NetNode::Gen &&
         n.nodes[static_cast<std::size_t>(c.node)].gen.kind == GenKind::Phi) {
    chain.push_back({c.node, c.port});
    c = ix.consumer.at(n.nodes[static_cast<std::size_t>(c.node)].outs[0]);
  }
  if (chain.empty() || c.node < 0 || n.nodes[static_cast<std::size_t>(c.node)].kind != NetNode::Box) return false;

  NetNode& b = n.nodes[k];
  Object now = b.in.inner();
  std::size_t offset = 0;
  for (auto [p, port] : chain) {
    NetNode& phi = n.nodes[static_cast<std::size_t>(p)];
    if (port == 1) offset += wire_leaves(phi.gen.subs[0]).size();
    phi.gen.subs[static_cast<std::size_t>(port)] = now;
    phi.in = phi.gen.dom();
    phi.out = phi.gen.cod();
    now = phi.out.inner();
  }
  n.nodes[static_cast<std::size_t>(chain[0].first)].ins[static_cast<std::size_t>(chain[0].second)] = b.ins[0];

  NetNode& target = n.nodes[static_cast<std::size_t>(c.node)];
  const Net& moved = *b.inner;
  auto r = deep_copy(*target.inner);
  std::unordered_map<int, int> bind;
  for (std::size_t i = 0; i < moved.cod_wires.size(); ++i) bind[moved.cod_wires[i]] = r->dom_wires.at(offset + i);
  auto map = splice(*r, moved, bind);
  std::vector<int> dom(r->dom_wires.begin(), r->dom_wires.begin() + static_cast<long>(offset));
  for (int x : moved.dom_wires) dom.push_back(map.at(x));
  dom.insert(dom.end(), r->dom_wires.begin() + static_cast<long>(offset + moved.cod_wires.size()), r->dom_wires.end());
  r->dom_wires = std::move(dom);
  r->dom = now;
  normalize_net(*r);
  target.inner = r;
  target.in = Object::bang(now);
  target.cells.insert(target.cells.end(), b.cells.begin(), b.cells.end());
  std::sort(target.cells.begin(), target.cells.end());
  target.rank = std::min(target.rank, b.rank);
  b.alive = false;
  return true;
}

}  // namespace

void normalize_net(Net& n) {
  for (auto& nd : n.nodes)
    if (nd.alive && nd.kind == NetNode::Box) normalize_net(*nd.inner);
  bool changed = true;
  while (changed) {
    changed = false;
    WireIndex ix = index_wires(n);
    for (std::size_t k = 0; k < n.nodes.size() && !changed; ++k) {
      NetNode& b = n.nodes[k];
      if (!b.alive || b.kind != NetNode::Box) continue;
      if (b.in == b.out && is_identity_net(*b.inner)) {
        b.alive = false;
        redirect_consumer(n, b.outs[0], b.ins[0]);
        changed = true;
        break;
      }
      End c = ix.consumer.at(b.outs[0]);
      if (c.node < 0) continue;
      NetNode& nx = n.nodes[c.node];
      if (!nx.alive) continue;
      if (nx.kind != NetNode::Box) {
        changed = push_through_phi(n, ix, k);
        continue;
      }
      b.inner = std::make_shared<Net>(compose_nets(*b.inner, *nx.inner));
      normalize_net(*b.inner);
      b.out = nx.out;
      b.outs = nx.outs;
      b.cells.insert(b.cells.end(), nx.cells.begin(), nx.cells.end());
      std::sort(b.cells.begin(), b.cells.end());
      nx.alive = false;
      changed = true;
    }
  }
  compact(n);
}

void collect_cells(const Net& n, std::vector<int>& out) {
  for (const auto& nd : n.nodes)
    if (nd.alive) out.insert(out.end(), nd.cells.begin(), nd.cells.end());
}

std::string net_debug(const Net& n, int indent) {
  std::ostringstream os;
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  os << pad << "net " << n.dom << " -> " << n.cod << " dom" << list(n.dom_wires) << " cod"
     << list(n.cod_wires) << "\n";
  for (std::size_t k = 0; k < n.nodes.size(); ++k) {
    const auto& nd = n.nodes[k];
    if (!nd.alive) continue;
    os << pad << "  #" << k << " " << (nd.kind == NetNode::Box ? "box" : nd.gen.str()) << " "
       << list(nd.ins) << "->" << list(nd.outs) << " cells" << list(nd.cells) << "\n";
    if (nd.kind == NetNode::Box) os << net_debug(*nd.inner, indent + 4);
  }
  return os.str();
}

}  // namespace lincat
