#include <algorithm>
#include <queue>
#include <vector>

#include "icol/graph.hpp"

namespace icol {

namespace {

// Demoucron's face-placement test on one biconnected block (>= 3 vertices).
// Faces are simple vertex cycles; a fragment is admissible in a face iff all
// its attachment vertices lie on that face. Embedding a path keeps the
// embedded subgraph 2-connected, so faces stay simple cycles.
class Demoucron {
 public:
  explicit Demoucron(const Graph& g) : g_(g) {}

  bool planar() {
    int n = g_.vertex_count();
    int m = g_.edge_count();
    if (n <= 3) return true;
    if (m > 3 * n - 6) return false;
    in_emb_.assign(n, false);
    edge_emb_.assign(m, false);
    std::vector<int> cycle = find_cycle();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
      in_emb_[u] = in_emb_[v] = true;
      mark_edge(u, v);
    }
    faces_.push_back(cycle);
    faces_.push_back(cycle);
    while (true) {
      auto fragments = compute_fragments();
      if (fragments.empty()) return true;
      int chosen = -1;
      std::vector<int> chosen_faces;
      for (std::size_t f = 0; f < fragments.size(); ++f) {
        std::vector<int> adm = admissible_faces(fragments[f]);
        if (adm.empty()) return false;
        if (chosen < 0 || adm.size() == 1) {
          chosen = static_cast<int>(f);
          chosen_faces = adm;
          if (adm.size() == 1) break;
        }
      }
      embed(fragments[chosen], chosen_faces.front());
    }
  }

 private:
  struct Fragment {
    std::vector<int> interior;     // non-embedded vertices (may be empty)
    std::vector<int> attachments;  // embedded vertices touched
    int solo_edge = -1;            // set when the fragment is a single edge
  };

  std::vector<int> find_cycle() const {
    int n = g_.vertex_count();
    std::vector<int> parent(n, -2), order;
    for (int s = 0; s < n; ++s) {
      if (parent[s] != -2) continue;
      parent[s] = -1;
      std::vector<int> stack{s};
      std::vector<std::size_t> it(n, 0);
      while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < g_.neighbours(v).size()) {
          const AdjEntry& a = g_.neighbours(v)[it[v]++];
          if (parent[a.to] == -2) {
            parent[a.to] = v;
            stack.push_back(a.to);
          } else if (a.to != parent[v] &&
                     std::find(stack.begin(), stack.end(), a.to) !=
                         stack.end()) {
            // back edge v -> a.to: cycle along the DFS stack
            std::vector<int> cycle;
            for (std::size_t i = stack.size(); i-- > 0;) {
              cycle.push_back(stack[i]);
              if (stack[i] == a.to) break;
            }
            return cycle;
          }
        } else {
          stack.pop_back();
        }
      }
    }
    return {};  // acyclic blocks never reach the search (handled earlier)
  }

  void mark_edge(int u, int v) {
    for (const AdjEntry& a : g_.neighbours(u))
      if (a.to == v) {
        edge_emb_[a.edge] = true;
        return;
      }
  }

  std::vector<Fragment> compute_fragments() const {
    int n = g_.vertex_count();
    int m = g_.edge_count();
    std::vector<Fragment> out;
    // single non-embedded edges between embedded vertices
    for (int e = 0; e < m; ++e) {
      if (edge_emb_[e]) continue;
      int u = g_.edge(e).u, v = g_.edge(e).v;
      if (in_emb_[u] && in_emb_[v]) {
        Fragment f;
        f.attachments = {u, v};
        f.solo_edge = e;
        out.push_back(std::move(f));
      }
    }
    // components of non-embedded vertices with their attachments
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (in_emb_[s] || comp[s] >= 0) continue;
      Fragment f;
      std::queue<int> q;
      q.push(s);
      comp[s] = 1;
      std::vector<bool> att(n, false);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        f.interior.push_back(v);
        for (const AdjEntry& a : g_.neighbours(v)) {
          if (in_emb_[a.to]) {
            att[a.to] = true;
          } else if (comp[a.to] < 0) {
            comp[a.to] = 1;
            q.push(a.to);
          }
        }
      }
      for (int v = 0; v < n; ++v)
        if (att[v]) f.attachments.push_back(v);
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<int> admissible_faces(const Fragment& f) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      bool ok = true;
      for (int a : f.attachments) {
        if (std::find(faces_[i].begin(), faces_[i].end(), a) ==
            faces_[i].end()) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  // Shortest path from attachment a through the fragment interior to any
  // other attachment; returns the full vertex sequence a .. b.
  std::vector<int> alpha_path(const Fragment& f) const {
    if (f.solo_edge >= 0)
      return {g_.edge(f.solo_edge).u, g_.edge(f.solo_edge).v};
    int n = g_.vertex_count();
    int a = f.attachments.front();
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    for (const AdjEntry& e : g_.neighbours(a)) {
      if (!in_emb_[e.to] && parent[e.to] == -2) {
        parent[e.to] = -1;
        q.push(e.to);
      }
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const AdjEntry& e : g_.neighbours(v)) {
        if (in_emb_[e.to]) {
          if (e.to != a) {
            std::vector<int> path{e.to, v};
            int x = v;
            while (parent[x] >= 0) {
              x = parent[x];
              path.push_back(x);
            }
            path.push_back(a);
            std::reverse(path.begin(), path.end());
            return path;
          }
        } else if (parent[e.to] == -2) {
          parent[e.to] = v;
          q.push(e.to);
        }
      }
    }
    return {};  // unreachable in a 2-connected block
  }

  void embed(const Fragment& f, int face_idx) {
    std::vector<int> path = alpha_path(f);
    int a = path.front(), b = path.back();
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      mark_edge(path[i], path[i + 1]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) in_emb_[path[i]] = true;
    const std::vector<int> face = faces_[face_idx];
    std::size_t ia = std::find(face.begin(), face.end(), a) - face.begin();
    std::size_t ib = std::find(face.begin(), face.end(), b) - face.begin();
    std::vector<int> f1, f2;
    for (std::size_t i = ia;; i = (i + 1) % face.size()) {
      f1.push_back(face[i]);
      if (i == ib) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    for (std::size_t i = ib;; i = (i + 1) % face.size()) {
      f2.push_back(face[i]);
      if (i == ia) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    faces_[face_idx] = std::move(f1);
    faces_.push_back(std::move(f2));
  }

  const Graph& g_;
  std::vector<bool> in_emb_;
  std::vector<bool> edge_emb_;
  std::vector<std::vector<int>> faces_;
};

// Biconnected components as edge lists (Tarjan, explicit stack).
std::vector<std::vector<int>> blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> it(n, 0);
  std::vector<int> estack;
  std::vector<std::vector<int>> out;
  int counter = 0;
  for (int s = 0; s < n; ++s) {
    if (num[s] >= 0) continue;
    std::vector<int> stack{s};
    num[s] = low[s] = counter++;
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] < g.neighbours(v).size()) {
        const AdjEntry& a = g.neighbours(v)[it[v]++];
        if (num[a.to] < 0) {
          estack.push_back(a.edge);
          parent[a.to] = v;
          num[a.to] = low[a.to] = counter++;
          stack.push_back(a.to);
        } else if (a.to != parent[v] && num[a.to] < num[v]) {
          estack.push_back(a.edge);
          low[v] = std::min(low[v], num[a.to]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back();
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= num[u]) {
            // u is a cut vertex (or root): pop one block, ending at the
            // tree edge u-v (unique u-v edge in a simple graph)
            std::vector<int> blk;
            while (!estack.empty()) {
              int e = estack.back();
              estack.pop_back();
              blk.push_back(e);
              const Edge& ed = g.edge(e);
              if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) break;
            }
            if (!blk.empty()) out.push_back(std::move(blk));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

bool is_planar(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  for (const auto& blk : blocks(g)) {
    if (blk.size() <= 2) continue;  // bridges are trivially planar
    // compact the block onto its own vertex set
    std::vector<int> remap(n, -1);
    int bn = 0;
    for (int e : blk) {
      for (int v : {g.edge(e).u, g.edge(e).v})
        if (remap[v] < 0) remap[v] = bn++;
    }
    Graph bg(bn);
    for (int e : blk) bg.add_edge(remap[g.edge(e).u], remap[g.edge(e).v]);
    if (!Demoucron(bg).planar()) return false;
  }
  return true;
}

}  // namespace icol
