// Brauer (k,l)-diagrams: perfect matchings on k bottom and l top vertices,
// with composition (tracking closed loops), tensor product, the named arc
// diagrams, and JSON serialization.
//
// Vertex indexing: 0..l-1 are the top vertices T1..Tl left to right,
// l..l+k-1 are the bottom vertices B1..Bk.  This realizes the fixed total
// order T1 < ... < Tl < B1 < ... < Bk, and the partner array is already the
// canonical form used for equality and ordering.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/combinatorics.hpp"

#include "json.hpp"

namespace brauer {

class BrauerDiagram {
 public:
  BrauerDiagram() : k_(0), l_(0) {}

  // Edges as vertex-index pairs; every vertex must appear exactly once.
  BrauerDiagram(int k, int l, const std::vector<std::pair<int, int>>& edges) : k_(k), l_(l) {
    if ((k + l) % 2 != 0) throw std::invalid_argument("k+l must be even");
    partner_.assign(k + l, -1);
    if (static_cast<int>(edges.size()) * 2 != k + l)
      throw std::invalid_argument("wrong number of edges");
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= k + l || b >= k + l || a == b)
        throw std::invalid_argument("bad edge");
      if (partner_[a] != -1 || partner_[b] != -1)
        throw std::invalid_argument("vertex covered twice");
      partner_[a] = static_cast<std::int16_t>(b);
      partner_[b] = static_cast<std::int16_t>(a);
    }
  }

  int bottom_count() const { return k_; }
  int top_count() const { return l_; }
  int vertex_count() const { return k_ + l_; }
  int partner(int v) const { return partner_[v]; }

  int top_vertex(int j) const { return j; }            // 0-based position
  int bottom_vertex(int i) const { return l_ + i; }    // 0-based position
  bool is_top(int v) const { return v < l_; }

  // Edges in canonical order: each pair sorted, list sorted by first vertex.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vertex_count(); ++v)
      if (partner_[v] > v) out.emplace_back(v, partner_[v]);
    return out;
  }

  bool is_permutation() const {
    for (int v = 0; v < l_; ++v)
      if (partner_[v] < l_) return false;
    return true;
  }

  // Only valid for permutation diagrams: the map bottom position -> top
  // position (0-based).
  Perm to_permutation() const {
    if (k_ != l_ || !is_permutation()) throw std::invalid_argument("not a permutation diagram");
    Perm p(k_);
    for (int i = 0; i < k_; ++i) p[i] = partner_[l_ + i];
    return p;
  }

  bool has_horizontal_edge() const {
    for (int v = 0; v < l_; ++v)
      if (partner_[v] < l_) return true;
    for (int v = l_; v < vertex_count(); ++v)
      if (partner_[v] >= l_) return true;
    return false;
  }

  auto operator<=>(const BrauerDiagram& o) const = default;

  std::string vertex_name(int v) const {
    return is_top(v) ? "T" + std::to_string(v + 1) : "B" + std::to_string(v - l_ + 1);
  }

  // One-line debug form, e.g. "(2,2)[T1-B1 T2-B2]".
  std::string str() const {
    std::string s = "(" + std::to_string(k_) + "," + std::to_string(l_) + ")[";
    bool first = true;
    for (auto [a, b] : edges()) {
      if (!first) s += " ";
      first = false;
      s += vertex_name(a) + "-" + vertex_name(b);
    }
    return s + "]";
  }

 private:
  int k_, l_;
  std::vector<std::int16_t> partner_;
};

struct CompositionResult {
  BrauerDiagram diagram;
  int loop_count = 0;
};

// d1 after d2: d1 has signature l -> p, d2 has k -> l; the middle row is
// traced out and closed loops are counted.
inline CompositionResult compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  if (d1.bottom_count() != d2.top_count())
    throw std::invalid_argument("compose: middle sizes differ");
  int l = d1.bottom_count();
  int p = d1.top_count();
  int k = d2.bottom_count();

  // Walk each strand from an outer vertex through the middle row.  Outer
  // vertices of the composite: tops of d1 (0..p-1) and bottoms of d2
  // (encoded p..p+k-1).
  std::vector<std::pair<int, int>> edges;
  edges.reserve((p + k) / 2);
  std::vector<char> seen_mid(l, 0);  // middle strand visited by an outer walk
  std::vector<char> done(p + k, 0);

  auto walk = [&](bool in_d1, int v) {
    // Follow the strand leaving vertex v of the indicated diagram (as a
    // non-middle endpoint) until it exits at a non-middle endpoint.
    while (true) {
      if (in_d1) {
        int w = d1.partner(v);
        if (d1.is_top(w)) return std::pair<int, int>{0, w};
        int mid = w - p;
        seen_mid[mid] = 1;
        in_d1 = false;
        v = mid;  // enter d2 at its top vertex `mid`
      } else {
        int w = d2.partner(v);
        if (!d2.is_top(w)) return std::pair<int, int>{1, w - l};
        seen_mid[w] = 1;
        in_d1 = true;
        v = p + w;  // enter d1 at its bottom vertex index p + w
      }
    }
  };

  for (int t = 0; t < p; ++t) {
    if (done[t]) continue;
    done[t] = 1;
    auto [side, pos] = walk(true, t);
    int other = side == 0 ? pos : p + pos;
    done[other] = 1;
    edges.emplace_back(t, other);
  }
  for (int b = 0; b < k; ++b) {
    if (done[p + b]) continue;
    done[p + b] = 1;
    auto [side, pos] = walk(false, l + b);
    int other = side == 0 ? pos : p + pos;
    done[other] = 1;
    edges.emplace_back(p + b, other);
  }

  // Loops: cycles entirely inside the middle row.
  int loops = 0;
  for (int midv = 0; midv < l; ++midv) {
    if (seen_mid[midv]) continue;
    ++loops;
    int side = 0;  // 0: at d1 bottom `cur`, about to jump through d1
    int cur = midv;
    while (true) {
      if (side == 0) {
        seen_mid[cur] = 1;
        int w = d1.partner(p + cur);
        cur = w - p;
        side = 1;
      } else {
        seen_mid[cur] = 1;
        int w = d2.partner(cur);
        cur = w;
        side = 0;
      }
      if (cur == midv && side == 0) break;
    }
  }

  return {BrauerDiagram(k, p, edges), loops};
}

inline BrauerDiagram tensor(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  int k = d1.bottom_count() + d2.bottom_count();
  int l = d1.top_count() + d2.top_count();
  std::vector<std::pair<int, int>> edges;
  auto shift1 = [&](int v) {
    return d1.is_top(v) ? v : v + d2.top_count();
  };
  auto shift2 = [&](int v) {
    return d2.is_top(v) ? v + d1.top_count() : v + d1.top_count() + d1.bottom_count();
  };
  for (auto [a, b] : d1.edges()) edges.emplace_back(shift1(a), shift1(b));
  for (auto [a, b] : d2.edges()) edges.emplace_back(shift2(a), shift2(b));
  return BrauerDiagram(k, l, edges);
}

inline BrauerDiagram identity_diagram(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i) edges.emplace_back(i, r + i);
  return BrauerDiagram(r, r, edges);
}

// Crossing of strands i, i+1 (1-based), identity elsewhere.
inline BrauerDiagram generator_s(int i, int r) {
  if (i < 1 || i > r - 1) throw std::out_of_range("generator index");
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < r; ++j) {
    int top = j;
    if (j == i - 1) top = i;
    else if (j == i) top = i - 1;
    edges.emplace_back(top, r + j);
  }
  return BrauerDiagram(r, r, edges);
}

// Cap/cup on strands i, i+1 (1-based), identity elsewhere.
inline BrauerDiagram generator_e(int i, int r) {
  if (i < 1 || i > r - 1) throw std::out_of_range("generator index");
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(i - 1, i);          // top horizontal
  edges.emplace_back(r + i - 1, r + i);  // bottom horizontal
  for (int j = 0; j < r; ++j)
    if (j != i - 1 && j != i) edges.emplace_back(j, r + j);
  return BrauerDiagram(r, r, edges);
}

// The (k,k)-diagram of a permutation: bottom i joins top sigma(i).
inline BrauerDiagram perm_to_diagram(const Perm& sigma, int k) {
  if (static_cast<int>(sigma.size()) != k) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(sigma[i], k + i);
  return BrauerDiagram(k, k, edges);
}

// (2r,0)-diagram pairing adjacent vertices {1,2},{3,4},...
inline BrauerDiagram a_hat_diagram(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < r; ++s) edges.emplace_back(2 * s, 2 * s + 1);
  return BrauerDiagram(2 * r, 0, edges);
}

// (0,2r)-diagram with nested arcs joining top s and top r+s.
inline BrauerDiagram u_r_diagram(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < r; ++s) edges.emplace_back(s, r + s);
  return BrauerDiagram(0, 2 * r, edges);
}

// (2r,0)-diagram with nested arcs joining bottom s and bottom r+s.
inline BrauerDiagram a_r_diagram(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < r; ++s) edges.emplace_back(s, r + s);
  return BrauerDiagram(2 * r, 0, edges);
}

// The shuffle sending i -> 2i-1 and r+i -> 2i (1-based) as a (2r,2r)-diagram.
inline Perm omega_perm(int r) {
  Perm w(2 * r);
  for (int i = 0; i < r; ++i) {
    w[i] = 2 * i;
    w[r + i] = 2 * i + 1;
  }
  return w;
}

inline BrauerDiagram omega_diagram(int r) { return perm_to_diagram(omega_perm(r), 2 * r); }

namespace detail {

inline void enumerate_rec(int total, std::vector<std::int16_t>& partner,
                          std::vector<std::pair<int, int>>& acc, int k, int l,
                          std::vector<BrauerDiagram>& out) {
  int first = -1;
  for (int v = 0; v < total; ++v)
    if (partner[v] == -1) {
      first = v;
      break;
    }
  if (first == -1) {
    out.push_back(BrauerDiagram(k, l, acc));
    return;
  }
  for (int w = first + 1; w < total; ++w) {
    if (partner[w] != -1) continue;
    partner[first] = static_cast<std::int16_t>(w);
    partner[w] = static_cast<std::int16_t>(first);
    acc.emplace_back(first, w);
    enumerate_rec(total, partner, acc, k, l, out);
    acc.pop_back();
    partner[first] = -1;
    partner[w] = -1;
  }
}

}  // namespace detail

// All (k+l-1)!! diagrams, deterministic order: the lowest uncovered vertex is
// paired with each later vertex in turn, recursively.  Odd k+l: empty list.
inline std::vector<BrauerDiagram> enumerate_diagrams(int k, int l) {
  if ((k + l) % 2 != 0) return {};
  std::vector<std::int16_t> partner(k + l, -1);
  std::vector<std::pair<int, int>> acc;
  std::vector<BrauerDiagram> out;
  detail::enumerate_rec(k + l, partner, acc, k, l, out);
  return out;
}

inline nlohmann::json diagram_to_json(const BrauerDiagram& d) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : d.edges())
    edges.push_back({d.vertex_name(a), d.vertex_name(b)});
  return {{"k", d.bottom_count()}, {"l", d.top_count()}, {"edges", edges}};
}

inline BrauerDiagram diagram_from_json(const nlohmann::json& j) {
  int k = j.at("k").get<int>();
  int l = j.at("l").get<int>();
  std::vector<std::pair<int, int>> edges;
  auto parse_vertex = [&](const std::string& s) {
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B')) throw std::invalid_argument("bad vertex name");
    int idx = std::stoi(s.substr(1)) - 1;
    return s[0] == 'T' ? idx : l + idx;
  };
  for (const auto& e : j.at("edges"))
    edges.emplace_back(parse_vertex(e.at(0).get<std::string>()),
                       parse_vertex(e.at(1).get<std::string>()));
  return BrauerDiagram(k, l, edges);
}

}  // namespace brauer
