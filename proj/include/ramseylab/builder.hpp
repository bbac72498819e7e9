#pragma once

/**
 * Explicit constructions in K_alpha, each shipped with a verification report
 * whose every value is recomputed by the pre-dimension engines; the builders
 * never certify their own output.
 *
 *  - build_ef: a bipartite graph E = K_{r0,r1} wired onto a base graph F by
 *    cross edges so that delta(E/F) = r - alpha*s lands in (-1/N, 0) and no
 *    triangle appears outside F.
 *  - build_ab: A = K3 and B = a free amalgam of n triangles with one
 *    triangle-free bipartite piece X_u per subset u of the triangles
 *    (|u| >= 2), tuned so that exactly the n triangles are closed and the
 *    half-delta criterion for free 2-pseudoplanes holds.
 *  - glue_lines: iterated free amalgams of B-copies along closed A-copies.
 *  - extend_generic: one generic extension step M_{i+1} = M_i (x)_A B.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramseylab/diophantine.hpp"
#include "ramseylab/embeddings.hpp"
#include "ramseylab/error.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/predimension.hpp"
#include "ramseylab/quadratic.hpp"

namespace ramseylab::builder {

using predim::Alpha;
using predim::AmalgamInfo;
using predim::AmalgamPiece;
using predim::DeltaValue;
using predim::Graph;
using predim::QuadValue;

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check& operator[](const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    fail(ErrorCode::DomainError, "no check named '" + name + "'");
  }
};

// ---------------------------------------------------------------------------
// build_ef

struct EFParams {
  long long n_bound = 0;  // the N of the window (-1/N, 0)
  long long m = 0;        // 1/(m+1) <= alpha <= 1/m
  long long r = 0, s = 0;
  long long r0 = 0, r1 = 0;  // bipartition of E, r0 + r1 = r
  long long m0 = 0, m1 = 0;  // cross edges to the first anchor pair
  long long extra0 = 0, extra1 = 0;  // spill to the second anchor pair
};

struct EFResult {
  Graph ef;
  Bitset e_set, f_set;  // over ef's vertices
  EFParams params;
  VerificationReport report;
};

inline EFResult build_ef(const Alpha& alpha, long long n_bound, const Graph& f) {
  require(n_bound >= 1, ErrorCode::DomainError, "N must be positive");
  require(f.n() >= 4, ErrorCode::PreconditionFailed, "F needs at least 4 vertices");
  require(f.n() <= 20, ErrorCode::SizeLimit, "F too large for exact subset checks");
  require(predim::kalpha_member(f, alpha).member, ErrorCode::PreconditionFailed,
          "F is not in K_alpha");

  // delta(F') >= 1/N for every nonempty F' (exact scan).
  QuadValue one_over_n = QuadValue::rational(Rational(1, n_bound), alpha.d());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.n()); ++mask) {
    Bitset sub(f.n());
    for (std::size_t v = 0; v < f.n(); ++v)
      if (mask & (std::uint64_t{1} << v)) sub.set(v);
    require((predim::delta_of(f, sub).eval(alpha) - one_over_n).sign() >= 0,
            ErrorCode::PreconditionFailed,
            "F has a nonempty subset with delta below 1/N");
  }

  // Two disjoint non-adjacent anchor pairs (f1,f3) and (f2,f4); part-one
  // cross edges go to f1 and spill to f3, part-two to f2 and f4, so no cross
  // triangle can close.
  std::optional<std::array<std::size_t, 4>> anchors;
  for (std::size_t p = 0; p < f.n() && !anchors; ++p)
    for (std::size_t q = p + 1; q < f.n() && !anchors; ++q) {
      if (f.has_edge(p, q)) continue;
      for (std::size_t x = 0; x < f.n() && !anchors; ++x)
        for (std::size_t y = x + 1; y < f.n() && !anchors; ++y) {
          if (x == p || x == q || y == p || y == q || f.has_edge(x, y)) continue;
          anchors = {p, x, q, y};  // f1, f2, f3, f4
        }
    }
  require(anchors.has_value(), ErrorCode::PreconditionFailed,
          "F has no two disjoint non-adjacent vertex pairs");

  EFParams params;
  params.n_bound = n_bound;
  params.m = alpha.floor_inverse();
  // Smallest r with r > m^2 + (m+1)/N, then the minimal-r pair with
  // -1/N < r - alpha*s < 0.
  long long r_min =
      (params.m * params.m * n_bound + params.m + 1) / n_bound + 1;
  predim::HitOptions hops;
  hops.r_min = r_min;
  auto pair = predim::hit_interval(
      alpha, QuadValue::rational(Rational(-1, n_bound), alpha.d()),
      QuadValue::integer(0, alpha.d()), hops);
  params.r = pair.r;
  params.s = pair.s;
  params.r0 = params.r - params.m;
  params.r1 = params.m;

  long long cross = params.s - params.r0 * params.r1;
  require(cross >= 0, ErrorCode::DomainError, "internal: negative cross count");
  params.m0 = std::min(params.r0, cross);
  params.m1 = std::min(params.r1, cross - params.m0);
  long long rest = cross - params.m0 - params.m1;
  params.extra0 = std::min(params.r0, rest);
  params.extra1 = std::min(params.r1, rest - params.extra0);
  require(params.m0 + params.m1 + params.extra0 + params.extra1 == cross,
          ErrorCode::NotFound, "cross edges exceed the anchor capacity");

  // Assemble EF: F's vertices first, then the bipartite classes of E.
  Graph ef;
  for (std::size_t v = 0; v < f.n(); ++v) {
    require(f.label(v).rfind("E1_", 0) != 0 && f.label(v).rfind("E2_", 0) != 0,
            ErrorCode::DomainError, "F labels collide with E labels");
    ef.add_vertex(f.label(v));
  }
  for (std::size_t u = 0; u < f.n(); ++u)
    for (std::size_t v = u + 1; v < f.n(); ++v)
      if (f.has_edge(u, v)) ef.add_edge(u, v);
  std::vector<std::size_t> part1, part2;
  for (long long i = 0; i < params.r0; ++i)
    part1.push_back(ef.add_vertex("E1_" + std::to_string(i)));
  for (long long i = 0; i < params.r1; ++i)
    part2.push_back(ef.add_vertex("E2_" + std::to_string(i)));
  for (auto u : part1)
    for (auto v : part2) ef.add_edge(u, v);
  auto [f1, f2, f3, f4] = *anchors;
  for (long long i = 0; i < params.m0; ++i) ef.add_edge(part1[i], f1);
  for (long long i = 0; i < params.m1; ++i) ef.add_edge(part2[i], f2);
  for (long long i = 0; i < params.extra0; ++i) ef.add_edge(part1[i], f3);
  for (long long i = 0; i < params.extra1; ++i) ef.add_edge(part2[i], f4);

  Bitset e_set(ef.n()), f_set(ef.n());
  for (std::size_t v = 0; v < f.n(); ++v) f_set.set(v);
  for (std::size_t v = f.n(); v < ef.n(); ++v) e_set.set(v);

  // Every verdict below is recomputed from the built graph.
  VerificationReport report;
  {
    auto member = predim::kalpha_member(ef, alpha);
    report.add("ef_in_kalpha", member.member, "exact scan over all subsets");

    DeltaValue rel = predim::rel_delta(ef, e_set, f_set);
    QuadValue val = rel.eval(alpha);
    bool window = val.sign() < 0 && (val + one_over_n).sign() > 0;
    report.add("delta_e_over_f_window",
               rel == DeltaValue(params.r, params.s) && window,
               "delta(E/F) = " + val.str() + ", window (-1/" +
                   std::to_string(n_bound) + ", 0)");

    std::size_t tri_ef = predim::copies_of(Graph::complete(3), ef).size();
    std::size_t tri_f = predim::copies_of(Graph::complete(3), f).size();
    report.add("triangle_census", tri_ef == tri_f,
               "EF has " + std::to_string(tri_ef) + " triangles, F has " +
                   std::to_string(tri_f));

    // Closed triangle copies of EF all lie inside F.
    bool inside = true;
    for (const auto& e : predim::closed_embeddings(Graph::complete(3), ef, alpha))
      if (!e.image(ef.n()).is_subset_of(f_set)) inside = false;
    report.add("closed_triangles_in_f", inside,
               "closed triangle copies stay within F");
  }

  return EFResult{std::move(ef), e_set, f_set, params, std::move(report)};
}

// ---------------------------------------------------------------------------
// build_ab

struct ABParams {
  std::size_t n = 0;
  long long big_c = 0;
  long long r = 0, s = 0;           // shared by every piece (so xi = 0)
  QuadValue eps;                    // alpha*s - r
  std::vector<std::vector<std::size_t>> subsets;  // the u's, |u| >= 2
  std::size_t vertices = 0, edges = 0;
};

struct ABResult {
  Graph a;
  Graph b;
  std::vector<Bitset> triangles;  // images of A_0..A_{n-1} in b
  ABParams params;
  VerificationReport report;
};

namespace detail {

struct CrossGroup {
  int target;       // triangle vertex 0, 1 or 2
  long long count;  // edges into that vertex
  bool from_b;      // source bipartition class
};

struct PieceWiring {
  long long part_a = 0, part_b = 0;  // part_a <= part_b
  long long removed_internal = 0;    // complete-bipartite edges dropped
  std::vector<std::vector<CrossGroup>> cross;  // one list per triangle of u
};

// Triangle-free piece with r vertices and s-r internal edges, plus r cross
// edges split over i triangles. Within one triangle the edges spread as
// evenly as possible over its three vertices; concentrating them on a single
// vertex would let a subset keep all cross edges at a third of the vertex
// cost and push delta negative. No new triangle can close because each
// target vertex draws from a single bipartition class, and each source
// vertex sends at most one edge into any one triangle.
inline std::optional<PieceWiring> plan_piece(long long r, long long s,
                                             std::size_t i) {
  if (r < (long long)i || s < r) return std::nullopt;
  long long internal = s - r;
  PieceWiring w;
  w.part_a = -1;
  for (long long a = r / 2; a >= 0; --a)
    if (a * (r - a) >= internal) {
      w.part_a = a;
      w.part_b = r - a;
      break;
    }
  if (w.part_a < 0) return std::nullopt;
  w.removed_internal = w.part_a * w.part_b - internal;
  for (std::size_t idx = 0; idx < i; ++idx) {
    long long c = r / (long long)i + ((long long)idx < r % (long long)i);
    std::vector<CrossGroup> groups;
    for (int k = 0; k < 3; ++k) {
      long long part = c / 3 + (k < (int)(c % 3));
      if (part > 0) groups.push_back({k, part, false});
    }
    // Distinct source vertices within one triangle; greedily draw each
    // target's sources from the class with more remaining capacity.
    long long a_rem = w.part_a, b_rem = w.part_b;
    std::sort(groups.begin(), groups.end(),
              [](const CrossGroup& x, const CrossGroup& y) {
                return x.count > y.count ||
                       (x.count == y.count && x.target < y.target);
              });
    for (auto& g : groups) {
      if (b_rem >= a_rem && g.count <= b_rem) {
        g.from_b = true;
        b_rem -= g.count;
      } else if (g.count <= a_rem) {
        g.from_b = false;
        a_rem -= g.count;
      } else if (g.count <= b_rem) {
        g.from_b = true;
        b_rem -= g.count;
      } else {
        return std::nullopt;
      }
    }
    w.cross.push_back(std::move(groups));
  }
  return w;
}

inline std::string subset_tag(const std::vector<std::size_t>& u) {
  std::string t;
  for (auto j : u) {
    if (!t.empty()) t += ".";
    t += std::to_string(j);
  }
  return t;
}

}  // namespace detail

inline ABResult build_ab(const Alpha& alpha, std::size_t n, long long big_c) {
  require(n >= 3, ErrorCode::PreconditionFailed, "n must be at least 3");
  require(n <= 8, ErrorCode::SizeLimit, "n too large for the exact engines");
  long long pieces_count = (1LL << n) - (long long)n - 1;
  require(big_c > 2 * pieces_count, ErrorCode::ParameterError,
          "C must exceed 2*(2^n - n - 1)");

  QuadValue delta_a = DeltaValue(3, 3).eval(alpha);
  // Window: -(n-1)/(2^n - n - 1)*delta(A) < r - alpha*s <= lo + 1/C.
  QuadValue lo =
      -(delta_a * QuadValue::rational(Rational((long long)n - 1, pieces_count),
                                      alpha.d()));
  QuadValue hi = lo + QuadValue::rational(Rational(1, big_c), alpha.d());

  predim::HitOptions hops;
  hops.r_min = 1;
  hops.accept = [&](long long r, long long s) {
    if (predim::DeltaValue(r, s - r).eval(alpha).sign() < 0) return false;
    for (std::size_t i = 2; i <= n; ++i)
      if (!detail::plan_piece(r, s, i)) return false;
    return true;
  };
  auto pair = predim::hit_interval(alpha, lo, hi, hops);

  ABParams params;
  params.n = n;
  params.big_c = big_c;
  params.r = pair.r;
  params.s = pair.s;
  params.eps = -DeltaValue(pair.r, pair.s).eval(alpha);

  Graph b;
  std::vector<Bitset> triangles;
  std::vector<std::array<std::size_t, 3>> tri_verts;
  for (std::size_t j = 0; j < n; ++j) {
    std::array<std::size_t, 3> t{};
    for (int k = 0; k < 3; ++k)
      t[k] = b.add_vertex("A" + std::to_string(j) + "_" + std::to_string(k));
    b.add_edge(t[0], t[1]);
    b.add_edge(t[1], t[2]);
    b.add_edge(t[0], t[2]);
    tri_verts.push_back(t);
  }

  std::vector<std::size_t> base_list;
  for (const auto& t : tri_verts)
    base_list.insert(base_list.end(), t.begin(), t.end());
  std::vector<std::vector<std::size_t>> piece_privates, piece_boundaries;

  // One piece per subset u of the triangles with |u| >= 2.
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<std::size_t> u(size);
    for (std::size_t i = 0; i < size; ++i) u[i] = i;
    for (;;) {
      params.subsets.push_back(u);
      auto w = detail::plan_piece(params.r, params.s, size);
      require(w.has_value(), ErrorCode::NotFound, "internal: wiring vanished");
      std::string tag = detail::subset_tag(u);
      std::vector<std::size_t> pa, pb;
      for (long long i = 0; i < w->part_a; ++i)
        pa.push_back(b.add_vertex("X" + tag + "_a" + std::to_string(i)));
      for (long long i = 0; i < w->part_b; ++i)
        pb.push_back(b.add_vertex("X" + tag + "_b" + std::to_string(i)));
      // Internal edges: complete bipartite minus the reverse-lex tail.
      long long kept = (long long)pa.size() * (long long)pb.size() -
                       w->removed_internal;
      long long added = 0;
      for (auto va : pa)
        for (auto vb : pb) {
          if (added >= kept) break;
          b.add_edge(va, vb);
          ++added;
        }
      // Cross edges: per triangle, distinct sources; per target, one class.
      for (std::size_t t = 0; t < u.size(); ++t) {
        std::size_t a_used = 0, b_used = 0;
        for (const auto& g : w->cross[t]) {
          for (long long i = 0; i < g.count; ++i) {
            std::size_t src = g.from_b ? pb[b_used++] : pa[a_used++];
            b.add_edge(src, tri_verts[u[t]][(std::size_t)g.target]);
          }
        }
      }
      std::vector<std::size_t> privates;
      privates.insert(privates.end(), pa.begin(), pa.end());
      privates.insert(privates.end(), pb.begin(), pb.end());
      std::vector<std::size_t> boundary;
      for (auto j : u)
        boundary.insert(boundary.end(), tri_verts[j].begin(), tri_verts[j].end());
      piece_privates.push_back(std::move(privates));
      piece_boundaries.push_back(std::move(boundary));

      // next subset
      std::size_t i = size;
      while (i > 0 && u[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++u[i - 1];
      for (std::size_t k = i; k < size; ++k) u[k] = u[k - 1] + 1;
    }
  }

  // Finalize metadata bitsets now that b's vertex count is known.
  auto info = std::make_shared<AmalgamInfo>();
  info->base = Bitset(b.n());
  for (auto v : base_list) info->base.set(v);
  for (std::size_t p = 0; p < piece_privates.size(); ++p) {
    AmalgamPiece piece;
    piece.private_vertices = Bitset(b.n());
    for (auto v : piece_privates[p]) piece.private_vertices.set(v);
    piece.boundary = Bitset(b.n());
    for (auto v : piece_boundaries[p]) piece.boundary.set(v);
    info->pieces.push_back(std::move(piece));
  }
  b.set_amalgam_info(info);

  for (const auto& t : tri_verts) {
    Bitset img(b.n());
    for (auto v : t) img.set(v);
    triangles.push_back(img);
  }
  params.vertices = b.n();
  params.edges = b.edge_count();

  // ---- verification, all via the pre-dimension engines ----
  VerificationReport report;
  QuadValue delta_b = predim::delta(b).eval(alpha);

  auto closed_tris =
      predim::closed_embeddings(Graph::complete(3), b, alpha, true);
  report.add("closed_triangle_count", closed_tris.size() == n,
             std::to_string(closed_tris.size()) + " closed triangle copies");

  bool window_ok =
      ((params.eps -
        delta_a * QuadValue::rational(
                      Rational((long long)n - 2, pieces_count - 1), alpha.d()))
           .sign() >= 0) &&
      ((delta_a * QuadValue::rational(Rational((long long)n - 1, pieces_count),
                                      alpha.d()) -
        params.eps)
           .sign() >= 0);
  report.add("epsilon_window", window_ok, "eps = " + params.eps.str());

  report.add("condition1_delta_b_vs_a",
             (delta_b - delta_a).sign() >= 0,
             "delta(B) = " + delta_b.str() + " >= delta(A) = " + delta_a.str());

  // Condition 2: every proper subset containing at least two triangle copies
  // has delta strictly above delta(B). Properness is enforced by forbidding
  // one vertex at a time.
  bool cond2 = true;
  for (std::size_t i = 0; i < n && cond2; ++i)
    for (std::size_t j = i + 1; j < n && cond2; ++j) {
      Bitset anchor = triangles[i] | triangles[j];
      for (std::size_t v = 0; v < b.n() && cond2; ++v) {
        if (anchor.test(v)) continue;
        predim::EngineOptions opts;
        opts.forbidden = Bitset(b.n());
        opts.forbidden->set(v);
        auto r = predim::min_delta_over(anchor, b, alpha, opts);
        if ((r.value.eval(alpha) - delta_b).sign() <= 0) cond2 = false;
      }
    }
  report.add("condition2_proper_subsets", cond2,
             "delta(C) > delta(B) for proper C with two triangle copies");

  report.add("b_in_kalpha", predim::kalpha_member(b, alpha).member,
             "decomposition engine scan");

  QuadValue rel = (delta_b - delta_a);
  QuadValue half = delta_a * QuadValue::rational(Rational(1, 2), alpha.d());
  report.add("half_delta_criterion", (half - rel).sign() > 0,
             "delta(B/A) = " + rel.str() + " < delta(A)/2 = " + half.str());

  ABResult out{Graph::complete(3, "a"), std::move(b), std::move(triangles),
               std::move(params), std::move(report)};
  return out;
}

// ---------------------------------------------------------------------------
// glue_lines / extend_generic

enum class GluePattern { Chain, Star, Cycle };

inline GluePattern glue_pattern_from_string(const std::string& s) {
  if (s == "chain") return GluePattern::Chain;
  if (s == "star") return GluePattern::Star;
  if (s == "cycle") return GluePattern::Cycle;
  fail(ErrorCode::ParseError, "pattern must be chain, star or cycle");
}

namespace detail {

// Base vertices of g for decomposition purposes: its own metadata base if
// present, otherwise the whole graph.
inline Bitset base_of(const Graph& g) {
  if (g.amalgam_info()) return g.amalgam_info()->base;
  return g.full_set();
}

}  // namespace detail

// Iterated free amalgams of copies of `b` along closed copies of `a_pattern`:
// consecutive copies share one closed a-copy (chain), all copies share one
// (star), or the chain closes up (cycle, count >= 3). The result keeps
// decomposition metadata when it can be synthesized.
inline Graph glue_lines(const Graph& b, const Graph& a_pattern,
                        GluePattern pattern, std::size_t count,
                        const Alpha& alpha) {
  require(count >= 1, ErrorCode::InfeasiblePattern, "count must be positive");
  require(pattern != GluePattern::Cycle || count >= 3,
          ErrorCode::InfeasiblePattern, "cycles need at least 3 copies");
  auto sites = predim::closed_embeddings(a_pattern, b, alpha, true);
  require(!sites.empty(), ErrorCode::PreconditionFailed,
          "no closed copy of the point pattern in the line pattern");
  const auto& first_site = sites.front();
  const auto& last_site = sites.back();

  Graph x;
  std::vector<std::vector<std::size_t>> copy_map;  // per copy: b idx -> x idx

  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> map(b.n(), SIZE_MAX);
    if (k > 0) {
      // Glue this copy's first site onto the previous attachment site.
      const auto& prev = pattern == GluePattern::Star ? copy_map[0]
                                                      : copy_map[k - 1];
      const auto& prev_site =
          pattern == GluePattern::Star ? first_site : last_site;
      for (std::size_t t = 0; t < a_pattern.n(); ++t)
        map[first_site.map[t]] = prev[prev_site.map[t]];
    }
    if (pattern == GluePattern::Cycle && k == count - 1) {
      // Also identify this copy's last site with copy 0's first site.
      for (std::size_t t = 0; t < a_pattern.n(); ++t) {
        std::size_t bv = last_site.map[t];
        std::size_t target = copy_map[0][first_site.map[t]];
        require(map[bv] == SIZE_MAX || map[bv] == target,
                ErrorCode::InfeasiblePattern,
                "cycle identification collides with the chain gluing");
        map[bv] = target;
      }
    }
    for (std::size_t v = 0; v < b.n(); ++v)
      if (map[v] == SIZE_MAX)
        map[v] = x.add_vertex("c" + std::to_string(k) + "." + b.label(v));
    for (std::size_t u = 0; u < b.n(); ++u)
      for (std::size_t v = u + 1; v < b.n(); ++v)
        if (b.has_edge(u, v) && !x.has_edge(map[u], map[v]))
          x.add_edge(map[u], map[v]);
    copy_map.push_back(std::move(map));
  }

  // Metadata: the union of the copies' base images.
  Bitset base(x.n());
  Bitset b_base = detail::base_of(b);
  for (const auto& map : copy_map)
    b_base.for_each([&](std::size_t v) { base.set(map[v]); });
  if (auto info = predim::synthesize_info(x, base)) x.set_amalgam_info(info);
  return x;
}

struct ExtendResult {
  Graph extended;
  Bitset new_copy;  // image of b in the extension
  VerificationReport report;
};

// One generic extension step: the free amalgam of m with a fresh copy of b
// over a closed image of a_pattern. Postconditions (new copy closed, m closed
// in the extension, membership in K_alpha) are recomputed by the engines and
// reported, never assumed.
inline ExtendResult extend_generic(const Graph& m,
                                   const std::vector<std::string>& a_image_labels,
                                   const Graph& b, const Graph& a_pattern,
                                   const Alpha& alpha) {
  Bitset a_image = m.set_of(a_image_labels);

  // The image must induce the pattern; take the witness isomorphism.
  Graph induced = m.induced(a_image);
  require(induced.n() == a_pattern.n(), ErrorCode::PreconditionFailed,
          "image size differs from the pattern");
  std::optional<predim::Embedding> iso;
  for (const auto& e : predim::copies_of(a_pattern, induced))
    if (e.image(induced.n()).count() == induced.n()) {
      iso = e;
      break;
    }
  require(iso.has_value(), ErrorCode::PreconditionFailed,
          "image does not induce the pattern");
  require(predim::is_closed(a_image, m, alpha), ErrorCode::PreconditionFailed,
          "the image is not closed in the host");

  auto sites = predim::closed_embeddings(a_pattern, b, alpha, true);
  require(!sites.empty(), ErrorCode::PreconditionFailed,
          "pattern has no closed copy in the extension graph");
  const auto& site = sites.front();

  std::vector<std::size_t> a_image_list = a_image.to_vector();  // ascending

  Graph out = m;
  out.set_amalgam_info(nullptr);
  std::vector<std::size_t> map(b.n(), SIZE_MAX);
  for (std::size_t t = 0; t < a_pattern.n(); ++t)
    map[site.map[t]] = a_image_list[iso->map[t]];
  std::string prefix = "g" + std::to_string(m.n()) + "_";
  for (std::size_t v = 0; v < b.n(); ++v)
    if (map[v] == SIZE_MAX) map[v] = out.add_vertex(prefix + b.label(v));
  for (std::size_t u = 0; u < b.n(); ++u)
    for (std::size_t v = u + 1; v < b.n(); ++v)
      if (b.has_edge(u, v) && !out.has_edge(map[u], map[v]))
        out.add_edge(map[u], map[v]);

  Bitset new_copy(out.n());
  for (auto v : map) new_copy.set(v);

  // Merge decomposition metadata so the closedness checks scale.
  Bitset base(out.n());
  detail::base_of(m).for_each([&](std::size_t v) { base.set(v); });
  Bitset b_base = detail::base_of(b);
  b_base.for_each([&](std::size_t v) { base.set(map[v]); });
  if (auto info = predim::synthesize_info(out, base)) out.set_amalgam_info(info);

  VerificationReport report;
  report.add("new_copy_closed", predim::is_closed(new_copy, out, alpha),
             "image of the extension graph is closed");
  Bitset m_set(out.n());
  for (std::size_t v = 0; v < m.n(); ++v) m_set.set(v);
  report.add("host_closed_in_extension", predim::is_closed(m_set, out, alpha),
             "previous stage is closed in the extension");
  report.add("extension_in_kalpha", predim::kalpha_member(out, alpha).member,
             "membership rechecked after the step");
  return ExtendResult{std::move(out), new_copy, std::move(report)};
}

}  // namespace ramseylab::builder
