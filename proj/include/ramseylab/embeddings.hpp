#pragma once

/**
 * Enumeration of induced copies of a pattern graph inside a host. Copies are
 * image sets, not maps: interchangeable pattern vertices (twins) do not
 * multiply the count. One witness map per image is kept, the first found in
 * the deterministic search order.
 */

#include <algorithm>
#include <set>
#include <vector>

#include "ramseylab/bitset.hpp"
#include "ramseylab/error.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/predimension.hpp"

namespace ramseylab::predim {

struct Embedding {
  std::vector<std::size_t> map;  // pattern index -> host index

  Bitset image(std::size_t host_n) const {
    Bitset b(host_n);
    for (auto v : map) b.set(v);
    return b;
  }

  std::vector<std::size_t> sorted_image() const {
    std::vector<std::size_t> s = map;
    std::sort(s.begin(), s.end());
    return s;
  }
};

struct EmbedOptions {
  std::size_t max_nodes = 50'000'000;
  EngineOptions engine;  // for closedness filtering
};

namespace detail {

// Twin classes: vertices with equal open neighborhoods (nonadjacent twins) or
// equal closed neighborhoods (adjacent twins) are interchangeable by an
// automorphism, so images are enumerated with ascending host indices inside
// each class.
inline std::vector<std::size_t> twin_classes(const Graph& g) {
  std::vector<std::size_t> cls(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) cls[v] = v;
  std::vector<std::size_t> root(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) root[v] = v;
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      bool open_twin = g.adjacency(u) == g.adjacency(v);
      Bitset cu = g.adjacency(u), cv = g.adjacency(v);
      cu.set(u);
      cv.set(v);
      bool closed_twin = cu == cv;
      if (open_twin || closed_twin) root[find(u)] = find(v);
    }
  for (std::size_t v = 0; v < g.n(); ++v) cls[v] = find(v);
  return cls;
}

struct CopySearch {
  const Graph& pattern;
  const Graph& host;
  std::size_t max_nodes;
  std::vector<std::size_t> order;          // pattern vertices, search order
  std::vector<std::size_t> twin_class;     // pattern vertex -> class root
  std::vector<std::size_t> assignment;     // pattern vertex -> host vertex
  std::vector<char> assigned;
  std::size_t nodes = 0;
  std::set<std::vector<std::size_t>> images;
  std::vector<Embedding> out;

  CopySearch(const Graph& p, const Graph& h, std::size_t budget)
      : pattern(p), host(h), max_nodes(budget), twin_class(twin_classes(p)),
        assignment(p.n(), 0), assigned(p.n(), 0) {
    // Start from the highest-degree vertex, then grow by maximal adjacency to
    // the already-ordered prefix.
    std::vector<char> placed(p.n(), 0);
    for (std::size_t step = 0; step < p.n(); ++step) {
      std::size_t best = p.n();
      std::size_t best_adj = 0, best_deg = 0;
      for (std::size_t v = 0; v < p.n(); ++v) {
        if (placed[v]) continue;
        std::size_t adj = 0;
        for (auto u : order)
          if (p.adjacency(v).test(u)) ++adj;
        std::size_t deg = p.degree(v);
        if (best == p.n() || adj > best_adj ||
            (adj == best_adj && deg > best_deg)) {
          best = v;
          best_adj = adj;
          best_deg = deg;
        }
      }
      order.push_back(best);
      placed[best] = 1;
    }
  }

  void run() {
    extend(0);
  }

  void extend(std::size_t depth) {
    if (depth == pattern.n()) {
      Embedding e{assignment};
      auto key = e.sorted_image();
      if (images.insert(key).second) out.push_back(std::move(e));
      return;
    }
    std::size_t q = order[depth];
    for (std::size_t cand = 0; cand < host.n(); ++cand) {
      if (++nodes > max_nodes)
        fail(ErrorCode::SizeLimit, "copy enumeration budget exhausted");
      if (host.degree(cand) < pattern.degree(q)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t p = order[d];
        if (assignment[p] == cand) { ok = false; break; }
        bool pa = pattern.adjacency(q).test(p);
        bool ha = host.adjacency(cand).test(assignment[p]);
        if (pa != ha) ok = false;
        if (ok && twin_class[p] == twin_class[q]) {
          // ascending images inside a twin class
          if ((p < q) != (assignment[p] < cand)) ok = false;
        }
      }
      if (!ok) continue;
      assignment[q] = cand;
      assigned[q] = 1;
      extend(depth + 1);
      assigned[q] = 0;
    }
  }
};

}  // namespace detail

// All induced copies of `pattern` in `host`, sorted by image.
inline std::vector<Embedding> copies_of(const Graph& pattern, const Graph& host,
                                        const EmbedOptions& opts = {}) {
  require(pattern.n() >= 1, ErrorCode::DomainError, "empty pattern");
  if (pattern.n() > host.n()) return {};
  detail::CopySearch search(pattern, host, opts.max_nodes);
  search.run();
  std::sort(search.out.begin(), search.out.end(),
            [](const Embedding& a, const Embedding& b) {
              return a.sorted_image() < b.sorted_image();
            });
  return search.out;
}

// Copies filtered to closed images when closed_only is set.
inline std::vector<Embedding> closed_embeddings(const Graph& pattern,
                                                const Graph& host,
                                                const Alpha& alpha,
                                                bool closed_only = true,
                                                const EmbedOptions& opts = {}) {
  std::vector<Embedding> all = copies_of(pattern, host, opts);
  if (!closed_only) return all;
  std::vector<Embedding> closed;
  for (auto& e : all)
    if (is_closed(e.image(host.n()), host, alpha, opts.engine))
      closed.push_back(std::move(e));
  return closed;
}

}  // namespace ramseylab::predim
