#include "lincat/canon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace lincat {

namespace {

struct Endpoint {
  int vertex = -1;
  std::string port;
};

struct Graph {
  std::vector<std::string> labels;
  std::vector<std::tuple<int, int, std::string>> edges;

  int add(std::string label) {
    labels.push_back(std::move(label));
    return static_cast<int>(labels.size()) - 1;
  }
  void link(int s, int d, std::string label) { edges.emplace_back(s, d, std::move(label)); }
};

Net identity_net(const Object& x) {
  Net n;
  n.dom = x;
  n.cod = x;
  for (std::size_t i = 0; i < wire_leaves(x).size(); ++i) n.dom_wires.push_back(n.fresh());
  n.cod_wires = n.dom_wires;
  return n;
}

Net juxtapose(const Net& a, const Net& b) {
  Net r = *deep_copy(a);
  auto map = splice(r, b, {});
  r.dom = Object::tensor(a.dom, b.dom);
  r.cod = Object::tensor(a.cod, b.cod);
  for (int w : b.dom_wires) r.dom_wires.push_back(map.at(w));
  for (int w : b.cod_wires) r.cod_wires.push_back(map.at(w));
  return r;
}

bool is_phi(const NetNode& nd) { return nd.kind == NetNode::Gen && nd.gen.kind == GenKind::Phi; }
bool is_dup(const NetNode& nd) { return nd.kind == NetNode::Gen && nd.gen.kind == GenKind::Dup; }
bool is_promo(const NetNode& nd) { return nd.kind == NetNode::Box || is_phi(nd); }

class Flattener {
 public:
  explicit Flattener(Graph& g) : g_(g) {}

  void add_net(const Net& n, int owner, const std::vector<Endpoint>& dom_prod,
               const std::vector<Endpoint>& cod_cons) {
    std::map<int, Endpoint> prod, cons;
    for (std::size_t i = 0; i < n.dom_wires.size(); ++i) prod[n.dom_wires[i]] = dom_prod[i];
    for (std::size_t i = 0; i < n.cod_wires.size(); ++i) cons[n.cod_wires[i]] = cod_cons[i];
    WireIndex ix = index_wires(n);
    auto consumer_node = [&](int w) -> const NetNode* {
      auto it = ix.consumer.find(w);
      if (it == ix.consumer.end() || it->second.node < 0) return nullptr;
      return &n.nodes[it->second.node];
    };
    auto producer_node = [&](int w) -> const NetNode* {
      auto it = ix.producer.find(w);
      if (it == ix.producer.end() || it->second.node < 0) return nullptr;
      return &n.nodes[it->second.node];
    };

    for (const auto& nd : n.nodes) {
      if (!nd.alive) continue;
      if (is_promo(nd)) {
        const NetNode* c = consumer_node(nd.outs[0]);
        if (c && is_promo(*c)) continue;
        add_superbox(n, nd, owner, cons, prod, producer_node);
        continue;
      }
      if (is_dup(nd)) {
        const NetNode* p = producer_node(nd.ins[0]);
        if (p && is_dup(*p)) continue;
        int v = vertex(nd.gen.str(), owner);
        cons[nd.ins[0]] = {v, "i"};
        collect_dup_outputs(nd, consumer_node, v, prod);
        continue;
      }
      int v = vertex(nd.gen.str(), owner);
      for (std::size_t p = 0; p < nd.ins.size(); ++p) cons[nd.ins[p]] = {v, "i" + std::to_string(p)};
      for (std::size_t p = 0; p < nd.outs.size(); ++p) prod[nd.outs[p]] = {v, "o" + std::to_string(p)};
    }
    for (const auto& [w, e] : prod) {
      auto it = cons.find(w);
      if (it == cons.end()) continue;
      g_.link(e.vertex, it->second.vertex, e.port + ">" + it->second.port);
    }
  }

 private:
  int vertex(std::string label, int owner) {
    int v = g_.add(std::move(label));
    if (owner >= 0) g_.link(owner, v, "in");
    return v;
  }

  template <class F>
  void collect_dup_outputs(const NetNode& nd, F consumer_node, int v, std::map<int, Endpoint>& prod) {
    for (int w : nd.outs) {
      const NetNode* c = consumer_node(w);
      if (c && is_dup(*c))
        collect_dup_outputs(*c, consumer_node, v, prod);
      else
        prod[w] = {v, "o"};
    }
  }

  struct Piece {
    Net net;
    std::vector<int> aux_wires;
    std::vector<Object> aux_objs;
  };

  template <class F>
  Piece piece_for(int w, const Object& banged, F producer_node) {
    const NetNode* p = producer_node(w);
    if (p && is_promo(*p)) return build(*p, producer_node);
    Piece r;
    r.net = identity_net(banged.inner());
    r.aux_wires = {w};
    r.aux_objs = {banged.inner()};
    return r;
  }

  template <class F>
  Piece build(const NetNode& nd, F producer_node) {
    if (nd.kind == NetNode::Box) {
      Piece sub = piece_for(nd.ins[0], nd.in, producer_node);
      sub.net = compose_nets(sub.net, *nd.inner);
      return sub;
    }
    Piece a = piece_for(nd.ins[0], Object::bang(nd.gen.subs[0]), producer_node);
    Piece b = piece_for(nd.ins[1], Object::bang(nd.gen.subs[1]), producer_node);
    a.net = juxtapose(a.net, b.net);
    a.aux_wires.insert(a.aux_wires.end(), b.aux_wires.begin(), b.aux_wires.end());
    a.aux_objs.insert(a.aux_objs.end(), b.aux_objs.begin(), b.aux_objs.end());
    return a;
  }

  template <class F>
  void add_superbox(const Net&, const NetNode& root, int owner, std::map<int, Endpoint>& cons,
                    std::map<int, Endpoint>& prod, F producer_node) {
    Piece pc = build(root, producer_node);
    normalize_net(pc.net);
    int b = vertex("box", owner);
    std::vector<Endpoint> dom_prod;
    for (std::size_t k = 0; k < pc.aux_wires.size(); ++k) {
      int a = g_.add("aux " + pc.aux_objs[k].str());
      g_.link(b, a, "door");
      cons[pc.aux_wires[k]] = {a, "i"};
      std::size_t nleaves = wire_leaves(pc.aux_objs[k]).size();
      for (std::size_t j = 0; j < nleaves; ++j) dom_prod.push_back({a, "o" + std::to_string(j)});
    }
    Object out = root.kind == NetNode::Box ? root.out : root.gen.cod();
    int pr = g_.add("pri " + out.str());
    g_.link(b, pr, "door");
    prod[root.outs[0]] = {pr, "o"};
    std::vector<Endpoint> cod_cons;
    for (std::size_t j = 0; j < pc.net.cod_wires.size(); ++j) cod_cons.push_back({pr, "i" + std::to_string(j)});
    add_net(pc.net, b, dom_prod, cod_cons);
  }

  Graph& g_;
};

class Canonizer {
 public:
  Canonizer(const Graph& g, int cap) : g_(g), cap_(cap) {
    n_ = static_cast<int>(g.labels.size());
    std::set<std::string> elabs;
    for (const auto& e : g.edges) elabs.insert(std::get<2>(e));
    std::map<std::string, int> eid;
    for (const auto& s : elabs) eid.emplace(s, static_cast<int>(eid.size()));
    out_.resize(static_cast<std::size_t>(n_));
    in_.resize(static_cast<std::size_t>(n_));
    for (const auto& [s, d, l] : g.edges) {
      out_[static_cast<std::size_t>(s)].push_back({eid.at(l), d});
      in_[static_cast<std::size_t>(d)].push_back({eid.at(l), s});
    }
  }

  NetCertificate run() {
    std::vector<std::string> sorted = g_.labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> col(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      col[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), g_.labels[static_cast<std::size_t>(v)]) - sorted.begin());
    std::string best;
    bool have = false;
    search(col, best, have);
    return {best, !capped_};
  }

 private:
  using Sig = std::tuple<int, std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;

  void refine(std::vector<int>& col) const {
    std::size_t classes = std::set<int>(col.begin(), col.end()).size();
    for (;;) {
      std::vector<Sig> sig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        std::get<0>(s) = col[static_cast<std::size_t>(v)];
        for (auto [l, d] : out_[static_cast<std::size_t>(v)]) std::get<1>(s).push_back({l, col[static_cast<std::size_t>(d)]});
        for (auto [l, u] : in_[static_cast<std::size_t>(v)]) std::get<2>(s).push_back({l, col[static_cast<std::size_t>(u)]});
        std::sort(std::get<1>(s).begin(), std::get<1>(s).end());
        std::sort(std::get<2>(s).begin(), std::get<2>(s).end());
      }
      std::vector<Sig> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (int v = 0; v < n_; ++v)
        col[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) - uniq.begin());
      if (uniq.size() == classes) return;
      classes = uniq.size();
    }
  }

  std::string certificate(const std::vector<int>& col) const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] = v;
    std::string s;
    for (int v : order) s += g_.labels[static_cast<std::size_t>(v)] + "\n";
    std::vector<std::tuple<int, int, std::string>> es;
    for (const auto& [a, b, l] : g_.edges) es.emplace_back(col[static_cast<std::size_t>(a)], col[static_cast<std::size_t>(b)], l);
    std::sort(es.begin(), es.end());
    for (const auto& [a, b, l] : es) s += std::to_string(a) + " " + std::to_string(b) + " " + l + "\n";
    return s;
  }

  void search(std::vector<int> col, std::string& best, bool& have) {
    refine(col);
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n_; ++v) cells[col[static_cast<std::size_t>(v)]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, vs] : cells)
      if (vs.size() > 1) {
        target = &vs;
        break;
      }
    if (!target) {
      std::string c = certificate(col);
      if (!have || c < best) best = c;
      have = true;
      ++leaves_;
      return;
    }
    std::vector<int> members = *target;
    for (int v : members) {
      if (have && leaves_ >= cap_) {
        capped_ = true;
        return;
      }
      std::vector<int> c2(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u) c2[static_cast<std::size_t>(u)] = 2 * col[static_cast<std::size_t>(u)] + (u == v ? 0 : 1);
      search(std::move(c2), best, have);
    }
  }

  const Graph& g_;
  int cap_;
  int n_ = 0;
  int leaves_ = 0;
  bool capped_ = false;
  std::vector<std::vector<std::pair<int, int>>> out_, in_;
};

}  // namespace

NetCertificate net_certificate(const Net& n, int branch_cap) {
  Net copy = *deep_copy(n);
  normalize_net(copy);
  Graph g;
  std::vector<Endpoint> dom_prod, cod_cons;
  std::vector<Object> dl = wire_leaves(copy.dom);
  std::vector<Object> cl = wire_leaves(copy.cod);
  for (std::size_t i = 0; i < copy.dom_wires.size(); ++i)
    dom_prod.push_back({g.add("dom " + std::to_string(i) + " " + dl[i].str()), "o"});
  for (std::size_t i = 0; i < copy.cod_wires.size(); ++i)
    cod_cons.push_back({g.add("cod " + std::to_string(i) + " " + cl[i].str()), "i"});
  Flattener(g).add_net(copy, -1, dom_prod, cod_cons);
  NetCertificate c = Canonizer(g, branch_cap).run();
  c.text = copy.dom.str() + " -> " + copy.cod.str() + "\n" + c.text;
  return c;
}

}  // namespace lincat
