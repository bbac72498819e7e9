#pragma once

/**
 * Exact pre-dimension calculus on finite graphs: delta(A) = |A| - alpha*|E(A)|,
 * subset minimization, closedness, K_alpha membership, closures and free
 * amalgams. Two minimization engines share one interface:
 *
 *  - brute force over <= 22 free vertices, Gray-code incremental edge counts;
 *  - a decomposition engine for graphs carrying free-amalgam metadata:
 *    minimize per piece conditioned on the subset of its boundary, then
 *    combine across base components by bucket elimination.
 *
 * All verdicts are exact; ties break by smaller delta, then smaller
 * cardinality, then lexicographically earliest vertex set (per elimination
 * step in the decomposition engine).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "ramseylab/bitset.hpp"
#include "ramseylab/error.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/quadratic.hpp"

namespace ramseylab::predim {

inline DeltaValue delta_of(const Graph& g, const Bitset& s) {
  return DeltaValue((long long)s.count(), (long long)g.edges_within(s));
}

inline DeltaValue delta(const Graph& g) { return delta_of(g, g.full_set()); }

// delta(S u T) - delta(T), both on induced subgraphs.
inline DeltaValue rel_delta(const Graph& g, const Bitset& s, const Bitset& t) {
  return delta_of(g, s | t) - delta_of(g, t);
}

struct MinDeltaResult {
  Bitset set;
  DeltaValue value;
};

struct EngineOptions {
  std::size_t brute_force_limit = 22;
  std::optional<Bitset> forbidden;  // vertices excluded from every candidate
  std::size_t factor_state_limit = std::size_t{1} << 22;
};

namespace detail {

struct Candidate {
  DeltaValue value;
  std::size_t card = 0;
  Bitset set;
};

inline bool candidate_better(const Candidate& a, const Candidate& b,
                             const Alpha& alpha) {
  int c = delta_compare(a.value, b.value, alpha);
  if (c != 0) return c < 0;
  if (a.card != b.card) return a.card < b.card;
  return a.set.lex_before(b.set);
}

// Exhaustive scan over subsets of `free_list` added to `anchor`, reflected
// Gray order with incremental vertex/edge bookkeeping.
inline MinDeltaResult brute_force_min(const Bitset& anchor, const Graph& host,
                                      const Alpha& alpha,
                                      const std::vector<std::size_t>& free_list) {
  const std::size_t m = free_list.size();
  std::vector<std::uint64_t> adj_free(m, 0);  // adjacency among free vertices
  std::vector<long long> deg_anchor(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    deg_anchor[i] = (long long)(host.adjacency(free_list[i]) & anchor).count();
    for (std::size_t j = 0; j < m; ++j)
      if (host.adjacency(free_list[i]).test(free_list[j]))
        adj_free[i] |= std::uint64_t{1} << j;
  }

  DeltaValue anchor_delta = delta_of(host, anchor);
  DeltaValue cur = anchor_delta;
  std::uint64_t cur_mask = 0;
  DeltaValue best = cur;
  std::uint64_t best_mask = 0;
  std::size_t best_card = anchor.count();

  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    std::size_t bit = (std::size_t)std::countr_zero(i);
    std::uint64_t vbit = std::uint64_t{1} << bit;
    if (cur_mask & vbit) {
      cur_mask ^= vbit;
      cur.v -= 1;
      cur.e -= deg_anchor[bit] +
               (long long)std::popcount(adj_free[bit] & cur_mask);
    } else {
      cur.e += deg_anchor[bit] +
               (long long)std::popcount(adj_free[bit] & cur_mask);
      cur.v += 1;
      cur_mask ^= vbit;
    }
    int c = delta_compare(cur, best, alpha);
    bool better = c < 0;
    if (c == 0) {
      if ((std::size_t)cur.v != best_card) {
        better = (std::size_t)cur.v < best_card;
      } else {
        // Lex tie-break: free positions follow ascending vertex order, so the
        // mask holding the lowest differing bit is the earlier set.
        std::uint64_t diff = cur_mask ^ best_mask;
        better = diff && (cur_mask & (diff & -diff));
      }
    }
    if (better) {
      best = cur;
      best_mask = cur_mask;
      best_card = (std::size_t)cur.v;
    }
  }

  Bitset out = anchor;
  for (std::size_t i = 0; i < m; ++i)
    if (best_mask & (std::uint64_t{1} << i)) out.set(free_list[i]);
  return {out, best};
}

// ---- decomposition engine ----

struct Factor {
  std::vector<std::size_t> scope;  // component ids, ascending
  std::vector<Candidate> table;    // mixed-radix over component domain sizes
};

struct Component {
  std::vector<std::size_t> vertices;  // ascending host indices
  std::vector<std::uint32_t> domain;  // admissible local masks
};

inline void validate_amalgam(const Graph& g, const AmalgamInfo& info) {
  Bitset seen = info.base;
  for (const auto& piece : info.pieces) {
    require(!piece.private_vertices.intersects(seen), ErrorCode::DomainError,
            "amalgam pieces must be disjoint from the base and each other");
    require(piece.boundary.is_subset_of(info.base), ErrorCode::DomainError,
            "piece boundary must lie in the base");
    seen |= piece.private_vertices;
  }
  require(seen == g.full_set(), ErrorCode::DomainError,
          "amalgam metadata must cover the whole graph");
  for (std::size_t p = 0; p < info.pieces.size(); ++p) {
    const auto& piece = info.pieces[p];
    Bitset allowed = piece.private_vertices | piece.boundary;
    piece.private_vertices.for_each([&](std::size_t v) {
      require(g.adjacency(v).is_subset_of(allowed), ErrorCode::DomainError,
              "piece vertex with an edge outside its boundary");
    });
  }
}

inline MinDeltaResult decomposition_min(const Bitset& anchor, const Graph& host,
                                        const Alpha& alpha,
                                        const AmalgamInfo& info,
                                        const EngineOptions& opts) {
  validate_amalgam(host, info);
  Bitset forbidden = opts.forbidden ? *opts.forbidden : Bitset(host.n());
  require(!anchor.intersects(forbidden), ErrorCode::DomainError,
          "anchor and forbidden sets overlap");

  // Connected components of the base.
  std::vector<int> comp_of(host.n(), -1);
  std::vector<Component> comps;
  info.base.for_each([&](std::size_t v) {
    if (comp_of[v] >= 0) return;
    Component c;
    std::vector<std::size_t> stack{v};
    comp_of[v] = (int)comps.size();
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      c.vertices.push_back(u);
      (host.adjacency(u) & info.base).for_each([&](std::size_t w) {
        if (comp_of[w] < 0) {
          comp_of[w] = (int)comps.size();
          stack.push_back(w);
        }
      });
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    comps.push_back(std::move(c));
  });

  // Domains: all component subsets containing the anchored vertices and
  // avoiding forbidden ones.
  for (auto& c : comps) {
    const std::size_t k = c.vertices.size();
    require(k <= 22, ErrorCode::SizeLimit, "base component too large");
    std::uint32_t forced = 0, banned = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (anchor.test(c.vertices[i])) forced |= 1u << i;
      if (forbidden.test(c.vertices[i])) banned |= 1u << i;
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
      if ((mask & forced) == forced && !(mask & banned)) c.domain.push_back(mask);
  }

  auto component_subset = [&](std::size_t ci, std::uint32_t mask) {
    Bitset b(host.n());
    for (std::size_t i = 0; i < comps[ci].vertices.size(); ++i)
      if (mask & (1u << i)) b.set(comps[ci].vertices[i]);
    return b;
  };

  std::vector<Factor> factors;

  // Unary factor per component: delta of the chosen base subset.
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    Factor f;
    f.scope = {ci};
    for (std::uint32_t mask : comps[ci].domain) {
      Bitset s = component_subset(ci, mask);
      f.table.push_back({delta_of(host, s), s.count(), s});
    }
    factors.push_back(std::move(f));
  }

  // Piece factors: conditional minimum over the piece's private subsets for
  // every subset of its boundary.
  for (const auto& piece : info.pieces) {
    std::vector<std::size_t> bverts = piece.boundary.to_vector();
    std::vector<std::size_t> pverts;
    piece.private_vertices.for_each([&](std::size_t v) {
      if (!forbidden.test(v)) pverts.push_back(v);
    });
    Bitset piece_forced(host.n());
    piece.private_vertices.for_each([&](std::size_t v) {
      if (anchor.test(v)) piece_forced.set(v);
    });
    require(!piece_forced.intersects(forbidden), ErrorCode::DomainError,
            "anchored piece vertex is forbidden");

    const std::size_t nb = bverts.size(), np = pverts.size();
    require(np <= 22 && nb <= 22 && (np + nb) <= 36, ErrorCode::SizeLimit,
            "amalgam piece too large for the decomposition engine");

    std::uint32_t forced_mask = 0;
    for (std::size_t i = 0; i < np; ++i)
      if (anchor.test(pverts[i])) forced_mask |= 1u << i;

    std::vector<std::uint32_t> adj_priv(np, 0);
    std::vector<std::vector<int>> deg_into_boundary(np,
                                                    std::vector<int>(nb, 0));
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j)
        if (host.adjacency(pverts[i]).test(pverts[j])) adj_priv[i] |= 1u << j;
      for (std::size_t j = 0; j < nb; ++j)
        if (host.adjacency(pverts[i]).test(bverts[j]))
          deg_into_boundary[i][j] = 1;
    }

    // Scope: components meeting the boundary; local map boundary vertex ->
    // (scope position, bit in that component's mask).
    std::vector<std::size_t> scope;
    for (std::size_t j = 0; j < nb; ++j) {
      std::size_t ci = (std::size_t)comp_of[bverts[j]];
      if (std::find(scope.begin(), scope.end(), ci) == scope.end())
        scope.push_back(ci);
    }
    std::sort(scope.begin(), scope.end());

    std::size_t states = 1;
    for (auto ci : scope) {
      states *= comps[ci].domain.size();
      require(states <= opts.factor_state_limit, ErrorCode::SizeLimit,
              "factor table too large");
    }

    Factor f;
    f.scope = scope;
    f.table.resize(states);
    std::vector<std::size_t> assign(scope.size(), 0);
    for (std::size_t cell = 0; cell < states; ++cell) {
      // Boundary membership under this assignment.
      std::uint32_t bmask = 0;
      for (std::size_t j = 0; j < nb; ++j) {
        std::size_t ci = (std::size_t)comp_of[bverts[j]];
        std::size_t pos =
            (std::size_t)(std::find(scope.begin(), scope.end(), ci) -
                          scope.begin());
        std::uint32_t cmask = comps[ci].domain[assign[pos]];
        const auto& cverts = comps[ci].vertices;
        std::size_t local =
            (std::size_t)(std::find(cverts.begin(), cverts.end(),
                                    (std::size_t)bverts[j]) -
                          cverts.begin());
        if (cmask & (1u << local)) bmask |= 1u << j;
      }
      // Minimize over private subsets containing forced_mask (Gray scan).
      std::vector<long long> cross(np, 0);
      for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nb; ++j)
          if ((bmask >> j) & 1) cross[i] += deg_into_boundary[i][j];

      DeltaValue cur(0, 0);
      std::uint32_t cur_mask = 0;
      auto apply_forced = [&](std::uint32_t fm) {
        while (fm) {
          std::size_t bit = (std::size_t)std::countr_zero(fm);
          fm &= fm - 1;
          cur.e += cross[bit] +
                   (long long)std::popcount(adj_priv[bit] & cur_mask);
          cur.v += 1;
          cur_mask |= 1u << bit;
        }
      };
      apply_forced(forced_mask);
      Candidate best{cur, (std::size_t)cur.v, Bitset(host.n())};
      std::uint32_t best_mask = cur_mask;
      std::vector<std::size_t> scan;
      for (std::size_t i = 0; i < np; ++i)
        if (!(forced_mask & (1u << i))) scan.push_back(i);
      const std::uint64_t total = std::uint64_t{1} << scan.size();
      for (std::uint64_t it = 1; it < total; ++it) {
        std::size_t bit = scan[(std::size_t)std::countr_zero(it)];
        std::uint32_t vbit = 1u << bit;
        if (cur_mask & vbit) {
          cur_mask ^= vbit;
          cur.v -= 1;
          cur.e -= cross[bit] +
                   (long long)std::popcount(adj_priv[bit] & cur_mask);
        } else {
          cur.e += cross[bit] +
                   (long long)std::popcount(adj_priv[bit] & cur_mask);
          cur.v += 1;
          cur_mask ^= vbit;
        }
        int c = delta_compare(cur, best.value, alpha);
        bool better = c < 0;
        if (c == 0) {
          if ((std::size_t)cur.v != best.card)
            better = (std::size_t)cur.v < best.card;
          else {
            std::uint32_t diff = cur_mask ^ best_mask;
            better = diff && (cur_mask & (diff & -diff));
          }
        }
        if (better) {
          best.value = cur;
          best.card = (std::size_t)cur.v;
          best_mask = cur_mask;
        }
      }
      Bitset chosen(host.n());
      for (std::size_t i = 0; i < np; ++i)
        if (best_mask & (1u << i)) chosen.set(pverts[i]);
      best.set = chosen;
      f.table[cell] = best;

      // Advance the mixed-radix assignment.
      for (std::size_t pos = 0; pos < scope.size(); ++pos) {
        if (++assign[pos] < comps[f.scope[pos]].domain.size()) break;
        assign[pos] = 0;
      }
    }
    factors.push_back(std::move(f));
  }

  // Bucket elimination, greedily eliminating the variable with the smallest
  // joined table. Scope-free results accumulate additively in `constant`.
  std::vector<char> alive_comp(comps.size(), 1);
  Candidate constant{DeltaValue(0, 0), 0, Bitset(host.n())};

  auto add_candidates = [&](const Candidate& a, const Candidate& b) {
    return Candidate{a.value + b.value, a.card + b.card, a.set | b.set};
  };

  std::vector<char> factor_alive(factors.size(), 1);
  for (std::size_t remaining = comps.size(); remaining > 0; --remaining) {
    // Choose the variable whose elimination yields the smallest state count.
    std::size_t best_var = comps.size();
    std::size_t best_states = SIZE_MAX;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      if (!alive_comp[ci]) continue;
      std::vector<std::size_t> joined;
      for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        if (!factor_alive[fi]) continue;
        const auto& sc = factors[fi].scope;
        if (std::find(sc.begin(), sc.end(), ci) == sc.end()) continue;
        for (auto v : sc)
          if (v != ci && std::find(joined.begin(), joined.end(), v) ==
                             joined.end())
            joined.push_back(v);
      }
      std::size_t states = 1;
      for (auto v : joined) states *= comps[v].domain.size();
      if (states < best_states) {
        best_states = states;
        best_var = ci;
      }
    }
    require(best_states <= opts.factor_state_limit, ErrorCode::SizeLimit,
            "bucket elimination state space too large");

    std::vector<std::size_t> joined;
    std::vector<std::size_t> involved;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      if (!factor_alive[fi]) continue;
      const auto& sc = factors[fi].scope;
      if (std::find(sc.begin(), sc.end(), best_var) == sc.end()) continue;
      involved.push_back(fi);
      for (auto v : sc)
        if (v != best_var &&
            std::find(joined.begin(), joined.end(), v) == joined.end())
          joined.push_back(v);
    }
    std::sort(joined.begin(), joined.end());

    Factor merged;
    merged.scope = joined;
    merged.table.resize(best_states);
    std::vector<std::size_t> assign(joined.size(), 0);
    for (std::size_t cell = 0; cell < best_states; ++cell) {
      std::optional<Candidate> cell_best;
      for (std::size_t xi = 0; xi < comps[best_var].domain.size(); ++xi) {
        Candidate acc{DeltaValue(0, 0), 0, Bitset(host.n())};
        for (auto fi : involved) {
          const auto& f = factors[fi];
          std::size_t idx = 0;
          for (std::size_t pos = f.scope.size(); pos-- > 0;) {
            std::size_t var = f.scope[pos];
            std::size_t a;
            if (var == best_var)
              a = xi;
            else {
              std::size_t jpos =
                  (std::size_t)(std::lower_bound(joined.begin(), joined.end(),
                                                 var) -
                                joined.begin());
              a = assign[jpos];
            }
            idx = idx * comps[var].domain.size() + a;
          }
          acc = add_candidates(acc, f.table[idx]);
        }
        if (!cell_best || candidate_better(acc, *cell_best, alpha))
          cell_best = acc;
      }
      merged.table[cell] = *cell_best;
      for (std::size_t pos = 0; pos < joined.size(); ++pos) {
        if (++assign[pos] < comps[joined[pos]].domain.size()) break;
        assign[pos] = 0;
      }
    }

    for (auto fi : involved) factor_alive[fi] = 0;
    alive_comp[best_var] = 0;
    if (merged.scope.empty()) {
      constant = add_candidates(constant, merged.table[0]);
    } else {
      factors.push_back(std::move(merged));
      factor_alive.push_back(1);
    }
  }

  // Any remaining scope-free factors fold into the constant.
  Candidate result = constant;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    if (!factor_alive[fi]) continue;
    require(factors[fi].scope.empty(), ErrorCode::DomainError,
            "internal: dangling factor after elimination");
    result = add_candidates(result, factors[fi].table[0]);
  }

  return {result.set, result.value};
}

}  // namespace detail

// Minimizes delta over all C with anchor subset of C subset of host vertices
// (minus any forbidden set). Ties break by cardinality, then vertex order.
inline MinDeltaResult min_delta_over(const Bitset& anchor, const Graph& host,
                                     const Alpha& alpha,
                                     const EngineOptions& opts = {}) {
  Bitset forbidden = opts.forbidden ? *opts.forbidden : Bitset(host.n());
  require(!anchor.intersects(forbidden), ErrorCode::DomainError,
          "anchor and forbidden sets overlap");
  std::vector<std::size_t> free_list;
  for (std::size_t v = 0; v < host.n(); ++v)
    if (!anchor.test(v) && !forbidden.test(v)) free_list.push_back(v);
  if (free_list.size() <= opts.brute_force_limit)
    return detail::brute_force_min(anchor, host, alpha, free_list);
  if (host.amalgam_info())
    return detail::decomposition_min(anchor, host, alpha, *host.amalgam_info(),
                                     opts);
  fail(ErrorCode::SizeLimit,
       "too many free vertices for brute force and no amalgam metadata");
}

// A is closed in host iff no superset drops delta below delta(A).
inline bool is_closed(const Bitset& a, const Graph& host, const Alpha& alpha,
                      const EngineOptions& opts = {}) {
  auto r = min_delta_over(a, host, alpha, opts);
  return delta_compare(r.value, delta_of(host, a), alpha) == 0;
}

struct KalphaReport {
  bool member = false;
  std::optional<Bitset> violator;  // subset with negative delta
};

// Membership in K_alpha: every induced subgraph has delta >= 0. On the brute
// force path the witness is a minimum-cardinality violator (hence minimal);
// the decomposition path reports the delta-minimizing one.
inline KalphaReport kalpha_member(const Graph& g, const Alpha& alpha,
                                  const EngineOptions& opts = {}) {
  Bitset empty(g.n());
  auto r = min_delta_over(empty, g, alpha, opts);
  if (delta_compare(r.value, DeltaValue(0, 0), alpha) >= 0) return {true, {}};

  std::size_t free_count = g.n() - (opts.forbidden ? opts.forbidden->count() : 0);
  if (free_count <= opts.brute_force_limit) {
    // Scan for the smallest violating subset; any proper subset of it is
    // smaller, so it is subset-minimal.
    std::optional<Bitset> best;
    std::size_t best_card = SIZE_MAX;
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < g.n(); ++v)
      if (!(opts.forbidden && opts.forbidden->test(v))) verts.push_back(v);
    const std::uint64_t total = std::uint64_t{1} << verts.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::size_t card = (std::size_t)std::popcount(mask);
      if (card >= best_card) continue;
      Bitset s(g.n());
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) s.set(verts[i]);
      if (delta_of(g, s).eval(alpha).sign() < 0) {
        best = s;
        best_card = card;
      }
    }
    return {false, best};
  }
  return {false, r.set};
}

// Least closed superset of a inside host: replace the current set by the
// tie-broken minimizer until it is closed. Delta strictly decreases at every
// step, so the loop terminates; with the smallest-cardinality tie-break each
// iterate stays inside every closed superset of a.
inline Bitset closure(const Bitset& a, const Graph& host, const Alpha& alpha,
                      const EngineOptions& opts = {}) {
  Bitset cur = a;
  for (;;) {
    auto r = min_delta_over(cur, host, alpha, opts);
    if (delta_compare(r.value, delta_of(host, cur), alpha) == 0) return cur;
    cur = r.set;
  }
}

// Decomposition metadata with the given base; the rest splits into connected
// components, each a piece bounded by its base neighborhood. Returns null if
// the result does not satisfy the amalgam validity conditions.
inline std::shared_ptr<const AmalgamInfo> synthesize_info(const Graph& g,
                                                          const Bitset& base) {
  auto info = std::make_shared<AmalgamInfo>();
  info->base = base;
  std::vector<char> seen(g.n(), 0);
  base.for_each([&](std::size_t v) { seen[v] = 1; });
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (seen[v]) continue;
    AmalgamPiece piece;
    piece.private_vertices = Bitset(g.n());
    piece.boundary = Bitset(g.n());
    std::vector<std::size_t> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      piece.private_vertices.set(u);
      g.adjacency(u).for_each([&](std::size_t w) {
        if (base.test(w)) {
          piece.boundary.set(w);
        } else if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      });
    }
    info->pieces.push_back(std::move(piece));
  }
  try {
    detail::validate_amalgam(g, *info);
  } catch (const Error&) {
    return nullptr;
  }
  return info;
}

// Disjoint union of b and c over their shared labels, which must induce the
// same structure in both; no new edges.
inline Graph free_amalgam(const Graph& b, const Graph& c,
                          const std::vector<std::string>& shared) {
  for (const auto& l : shared) {
    require(b.has_label(l) && c.has_label(l), ErrorCode::IncompatibleOverlap,
            "shared vertex '" + l + "' missing from a side");
  }
  for (std::size_t v = 0; v < c.n(); ++v) {
    bool is_shared =
        std::find(shared.begin(), shared.end(), c.label(v)) != shared.end();
    require(is_shared == b.has_label(c.label(v)), ErrorCode::IncompatibleOverlap,
            "overlap differs from the declared shared set");
  }
  for (std::size_t v = 0; v < b.n(); ++v) {
    bool is_shared =
        std::find(shared.begin(), shared.end(), b.label(v)) != shared.end();
    require(is_shared == c.has_label(b.label(v)), ErrorCode::IncompatibleOverlap,
            "overlap differs from the declared shared set");
  }
  for (std::size_t i = 0; i < shared.size(); ++i)
    for (std::size_t j = i + 1; j < shared.size(); ++j) {
      bool eb = b.has_edge(b.index_of(shared[i]), b.index_of(shared[j]));
      bool ec = c.has_edge(c.index_of(shared[i]), c.index_of(shared[j]));
      require(eb == ec, ErrorCode::IncompatibleOverlap,
              "shared part induces different structures");
    }

  Graph g;
  for (std::size_t v = 0; v < b.n(); ++v) g.add_vertex(b.label(v));
  for (std::size_t v = 0; v < c.n(); ++v)
    if (!g.has_label(c.label(v))) g.add_vertex(c.label(v));
  for (std::size_t u = 0; u < b.n(); ++u)
    for (std::size_t v = u + 1; v < b.n(); ++v)
      if (b.has_edge(u, v)) g.add_edge(g.index_of(b.label(u)), g.index_of(b.label(v)));
  for (std::size_t u = 0; u < c.n(); ++u)
    for (std::size_t v = u + 1; v < c.n(); ++v) {
      std::size_t gu = g.index_of(c.label(u)), gv = g.index_of(c.label(v));
      if (c.has_edge(u, v) && !g.has_edge(gu, gv)) g.add_edge(gu, gv);
    }
  return g;
}

}  // namespace ramseylab::predim
