#pragma once

/**
 * Point-line incidence machinery: extraction of closed pattern copies from a
 * graph (lines = copies of B, points = copies of A, incidence by image
 * containment), the k-pseudoplane test, line distance and cycles, peeling to
 * a fixpoint, the freeness test, and consistent matrix colorings.
 *
 * Abstract structures are first class: lines are point sets plus an "extra
 * mass" of private vertices, so counterexamples like the Fano plane run
 * without any graph backing. Peeling always operates on the vertex level;
 * abstract inputs get synthetic vertices.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramseylab/binary_matrix.hpp"
#include "ramseylab/bitset.hpp"
#include "ramseylab/embeddings.hpp"
#include "ramseylab/error.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/predimension.hpp"

namespace ramseylab::incidence {

using matrices::BinaryMatrix;
using predim::Alpha;
using predim::EmbedOptions;
using predim::Graph;

struct Point {
  std::string name;
  Bitset vertices;
};

struct Line {
  std::string name;
  std::vector<std::size_t> point_ids;  // canonical order, used as columns
  Bitset vertices;
};

class IncidenceStructure {
 public:
  IncidenceStructure(std::size_t universe, std::vector<Point> points,
                     std::vector<Line> lines)
      : universe_(universe), points_(std::move(points)), lines_(std::move(lines)) {
    for (const auto& l : lines_)
      for (auto p : l.point_ids) {
        require(p < points_.size(), ErrorCode::DomainError,
                "line references a missing point");
        require(points_[p].vertices.is_subset_of(l.vertices),
                ErrorCode::DomainError, "incident point outside its line");
      }
  }

  std::size_t universe() const { return universe_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<Line>& lines() const { return lines_; }

  std::size_t point_index(const std::string& name) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].name == name) return i;
    fail(ErrorCode::UnknownVertex, "unknown point '" + name + "'");
  }

  std::size_t line_index(const std::string& name) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
      if (lines_[i].name == name) return i;
    fail(ErrorCode::UnknownLine, "unknown line '" + name + "'");
  }

  std::size_t extra_mass(std::size_t line) const {
    Bitset covered(universe_);
    for (auto p : lines_[line].point_ids) covered |= points_[p].vertices;
    return lines_[line].vertices.count() - covered.count();
  }

  // Shared point ids of two lines.
  std::vector<std::size_t> shared_points(std::size_t l1, std::size_t l2) const {
    std::vector<std::size_t> out;
    for (auto p : lines_[l1].point_ids)
      if (std::find(lines_[l2].point_ids.begin(), lines_[l2].point_ids.end(),
                    p) != lines_[l2].point_ids.end())
        out.push_back(p);
    return out;
  }

  // Abstract form: {points:[ids], lines:[{id, points:[ids], extra_mass:n}]}.
  static IncidenceStructure from_json(const nlohmann::json& j) {
    require(j.contains("points") && j.contains("lines"), ErrorCode::ParseError,
            "incidence JSON needs 'points' and 'lines'");
    std::vector<Point> points;
    std::map<std::string, std::size_t> index;
    for (const auto& p : j.at("points")) {
      std::string name = id_of(p);
      require(!index.count(name), ErrorCode::ParseError,
              "duplicate point '" + name + "'");
      index[name] = points.size();
      points.push_back({name, Bitset()});
    }
    std::size_t universe = points.size();
    struct RawLine {
      std::string name;
      std::vector<std::size_t> pts;
      std::size_t mass;
    };
    std::vector<RawLine> raw;
    for (const auto& l : j.at("lines")) {
      RawLine r;
      r.name = id_of(l.at("id"));
      for (const auto& p : l.at("points")) {
        auto it = index.find(id_of(p));
        require(it != index.end(), ErrorCode::ParseError,
                "line references unknown point");
        r.pts.push_back(it->second);
      }
      r.mass = l.value("extra_mass", 0);
      universe += r.mass;
      raw.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      points[i].vertices = Bitset(universe);
      points[i].vertices.set(i);
    }
    std::vector<Line> lines;
    std::size_t next_mass_vertex = points.size();
    for (const auto& r : raw) {
      Line l;
      l.name = r.name;
      l.point_ids = r.pts;
      l.vertices = Bitset(universe);
      for (auto p : r.pts) l.vertices.set(p);
      for (std::size_t m = 0; m < r.mass; ++m) l.vertices.set(next_mass_vertex++);
      lines.push_back(std::move(l));
    }
    return IncidenceStructure(universe, std::move(points), std::move(lines));
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    auto pts = nlohmann::json::array();
    for (const auto& p : points_) pts.push_back(p.name);
    j["points"] = pts;
    auto ls = nlohmann::json::array();
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      nlohmann::json l;
      l["id"] = lines_[i].name;
      auto lp = nlohmann::json::array();
      for (auto p : lines_[i].point_ids) lp.push_back(points_[p].name);
      l["points"] = lp;
      l["extra_mass"] = extra_mass(i);
      ls.push_back(l);
    }
    j["lines"] = ls;
    return j;
  }

 private:
  static std::string id_of(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(ErrorCode::ParseError, "id must be a string or integer");
  }

  std::size_t universe_;
  std::vector<Point> points_;
  std::vector<Line> lines_;
};

// Lines = closed copies of b in x, points = closed copies of a in x,
// incidence by image containment. Every line orders its points by the
// canonical enumeration of closed a-copies inside the pattern b, mapped
// through the line's witness embedding; that order fixes the matrix columns
// used by the coloring operations.
inline IncidenceStructure extract_incidence(const Graph& x_in, const Graph& a,
                                            const Graph& b, const Alpha& alpha,
                                            const EmbedOptions& opts = {}) {
  auto a_in_b = predim::closed_embeddings(a, b, alpha, true, opts);
  require(!a_in_b.empty(), ErrorCode::PreconditionFailed,
          "pattern pair invalid: no closed copy of the point pattern in the "
          "line pattern");

  // Large hosts without decomposition metadata: gluing interfaces are
  // a-copies, so the union of all a-copy images is a base candidate.
  Graph x = x_in;
  if (!x.amalgam_info() && x.n() > opts.engine.brute_force_limit) {
    Bitset base(x.n());
    for (const auto& e : predim::copies_of(a, x, opts))
      base |= e.image(x.n());
    x.set_amalgam_info(predim::synthesize_info(x, base));
  }

  auto line_embeddings = predim::closed_embeddings(b, x, alpha, true, opts);
  auto point_embeddings = predim::closed_embeddings(a, x, alpha, true, opts);

  std::vector<Point> points;
  std::map<std::vector<std::size_t>, std::size_t> point_by_image;
  for (const auto& e : point_embeddings) {
    Point p;
    p.name = "p" + std::to_string(points.size());
    p.vertices = e.image(x.n());
    point_by_image[e.sorted_image()] = points.size();
    points.push_back(std::move(p));
  }

  std::vector<Line> lines;
  for (const auto& le : line_embeddings) {
    Line l;
    l.name = "L" + std::to_string(lines.size());
    l.vertices = le.image(x.n());
    for (const auto& ae : a_in_b) {
      std::vector<std::size_t> mapped;
      for (auto v : ae.sorted_image()) mapped.push_back(le.map[v]);
      std::sort(mapped.begin(), mapped.end());
      auto it = point_by_image.find(mapped);
      require(it != point_by_image.end(), ErrorCode::DomainError,
              "internal: closed point copy missing from extraction");
      l.point_ids.push_back(it->second);
    }
    lines.push_back(std::move(l));
  }
  return IncidenceStructure(x.n(), std::move(points), std::move(lines));
}

// Every two distinct lines share at most k-1 points.
inline bool is_k_pseudoplane(const IncidenceStructure& inc, std::size_t k) {
  require(k >= 2, ErrorCode::DomainError, "k must be at least 2");
  for (std::size_t i = 0; i < inc.lines().size(); ++i)
    for (std::size_t j = i + 1; j < inc.lines().size(); ++j)
      if (inc.shared_points(i, j).size() > k - 1) return false;
  return true;
}

// BFS distance on the line-intersection graph; d+1 lines form the shortest
// connecting chain. Same line: 0. Disconnected: nullopt.
inline std::optional<std::size_t> line_distance(const IncidenceStructure& inc,
                                                std::size_t l1, std::size_t l2) {
  require(l1 < inc.lines().size() && l2 < inc.lines().size(),
          ErrorCode::UnknownLine, "line id out of range");
  if (l1 == l2) return 0;
  std::vector<std::size_t> dist(inc.lines().size(), SIZE_MAX);
  std::vector<std::size_t> queue{l1};
  dist[l1] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t cur = queue[qi];
    for (std::size_t other = 0; other < inc.lines().size(); ++other) {
      if (dist[other] != SIZE_MAX || inc.shared_points(cur, other).empty())
        continue;
      dist[other] = dist[cur] + 1;
      if (other == l2) return dist[other];
      queue.push_back(other);
    }
  }
  return std::nullopt;
}

// m distinct lines cyclically intersecting; the m designated intersections
// must pairwise share no point. Exhaustive search with a node budget.
inline std::optional<std::vector<std::size_t>> find_cycle(
    const IncidenceStructure& inc, std::size_t m,
    std::size_t budget = 5'000'000) {
  require(m >= 3, ErrorCode::DomainError, "cycles need m >= 3");
  const std::size_t nl = inc.lines().size();
  if (nl < m) return std::nullopt;

  std::vector<std::vector<std::vector<std::size_t>>> shared(
      nl, std::vector<std::vector<std::size_t>>(nl));
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      if (i != j) shared[i][j] = inc.shared_points(i, j);

  std::vector<std::size_t> path;
  std::vector<char> used(nl, 0);
  std::size_t nodes = 0;

  auto intersections_ok = [&](const std::vector<std::size_t>& cycle) {
    std::vector<std::vector<std::size_t>> inters;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto s = shared[cycle[i]][cycle[(i + 1) % cycle.size()]];
      if (s.empty()) return false;
      std::sort(s.begin(), s.end());
      inters.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < inters.size(); ++i)
      for (std::size_t j = i + 1; j < inters.size(); ++j) {
        std::vector<std::size_t> common;
        std::set_intersection(inters[i].begin(), inters[i].end(),
                              inters[j].begin(), inters[j].end(),
                              std::back_inserter(common));
        if (!common.empty()) return false;
      }
    return true;
  };

  std::function<std::optional<std::vector<std::size_t>>()> dfs =
      [&]() -> std::optional<std::vector<std::size_t>> {
    if (++nodes > budget)
      fail(ErrorCode::SizeLimit, "cycle search budget exhausted");
    if (path.size() == m) {
      if (!shared[path.back()][path.front()].empty() && intersections_ok(path))
        return path;
      return std::nullopt;
    }
    for (std::size_t next = 0; next < nl; ++next) {
      if (used[next]) continue;
      if (!path.empty() && shared[path.back()][next].empty()) continue;
      path.push_back(next);
      used[next] = 1;
      auto r = dfs();
      used[next] = 0;
      path.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  };
  return dfs();
}

struct PeelStep {
  std::size_t line;
  std::size_t shared_count;  // |I(line)| when processed
  bool removed;
};

struct PeelState {
  Bitset alive;                                         // surviving vertices
  std::vector<PeelStep> log;                            // processed live lines
  std::vector<std::optional<std::size_t>> death_rank;   // per line
  std::vector<std::vector<std::size_t>> shared_at_death;  // point ids kept
  std::vector<char> collateral;  // destroyed by another line's removal
  std::size_t sweeps = 0;
};

// Repeated sweeps in the given cyclic order. A live line with at most k
// points shared with other live lines loses its exclusive material: the line
// dies, its non-shared points die. Stops at the first sweep with no change.
inline PeelState peel_to_fixpoint(const IncidenceStructure& inc, std::size_t k,
                                  std::vector<std::size_t> order = {}) {
  require(k >= 2, ErrorCode::DomainError, "k must be at least 2");
  const std::size_t nl = inc.lines().size();
  if (order.empty()) {
    order.resize(nl);
    for (std::size_t i = 0; i < nl; ++i) order[i] = i;
  }
  require(order.size() == nl, ErrorCode::DomainError,
          "order must be a permutation of the lines");
  {
    std::vector<char> seen(nl, 0);
    for (auto l : order) {
      require(l < nl && !seen[l], ErrorCode::DomainError,
              "order must be a permutation of the lines");
      seen[l] = 1;
    }
  }

  PeelState st;
  st.alive = Bitset(inc.universe());
  for (std::size_t v = 0; v < inc.universe(); ++v) st.alive.set(v);
  st.death_rank.assign(nl, std::nullopt);
  st.shared_at_death.assign(nl, {});
  st.collateral.assign(nl, 0);

  auto line_live = [&](std::size_t l) {
    return !st.death_rank[l].has_value() &&
           inc.lines()[l].vertices.is_subset_of(st.alive);
  };
  auto point_live = [&](std::size_t p) {
    return inc.points()[p].vertices.is_subset_of(st.alive);
  };

  std::size_t rank = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++st.sweeps;
    for (std::size_t l : order) {
      if (!line_live(l)) continue;
      std::vector<std::size_t> shared;
      for (auto p : inc.lines()[l].point_ids) {
        if (!point_live(p)) continue;
        bool elsewhere = false;
        for (std::size_t other = 0; other < nl && !elsewhere; ++other) {
          if (other == l || !line_live(other)) continue;
          if (inc.points()[p].vertices.is_subset_of(inc.lines()[other].vertices))
            elsewhere = true;
        }
        if (elsewhere) shared.push_back(p);
      }
      if (shared.size() > k) {
        st.log.push_back({l, shared.size(), false});
        continue;
      }
      Bitset h = inc.lines()[l].vertices;
      for (auto p : shared) h -= inc.points()[p].vertices;
      if (h.none()) {
        st.log.push_back({l, shared.size(), false});
        continue;
      }
      st.alive -= h;
      changed = true;
      st.log.push_back({l, shared.size(), true});
      st.death_rank[l] = rank++;
      st.shared_at_death[l] = shared;
      for (std::size_t other = 0; other < nl; ++other) {
        if (other == l || st.death_rank[other]) continue;
        if (inc.lines()[other].vertices.intersects(h)) {
          st.death_rank[other] = rank++;
          st.collateral[other] = 1;
        }
      }
    }
    require(st.sweeps <= nl + 1, ErrorCode::DomainError,
            "internal: peeling failed to reach a fixpoint");
  }
  return st;
}

// Free iff the fixpoint residual contains no point.
inline std::pair<bool, PeelState> is_free_k_pseudoplane(
    const IncidenceStructure& inc, std::size_t k,
    std::vector<std::size_t> order = {}) {
  PeelState st = peel_to_fixpoint(inc, k, std::move(order));
  for (const auto& p : inc.points())
    if (p.vertices.is_subset_of(st.alive)) return {false, st};
  return {true, st};
}

struct Coloring {
  std::vector<std::optional<int>> color;  // per point id

  nlohmann::json to_json(const IncidenceStructure& inc) const {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t p = 0; p < color.size(); ++p)
      if (color[p]) j[inc.points()[p].name] = *color[p];
    return j;
  }

  static Coloring from_json(const IncidenceStructure& inc,
                            const nlohmann::json& j) {
    Coloring c;
    c.color.assign(inc.points().size(), std::nullopt);
    for (auto it = j.begin(); it != j.end(); ++it) {
      int v = it.value().get<int>();
      require(v == 0 || v == 1, ErrorCode::ParseError, "colors must be 0 or 1");
      c.color[inc.point_index(it.key())] = v;
    }
    return c;
  }
};

struct ColoringOptions {
  std::vector<std::size_t> order;  // peel order; empty = canonical
  bool check_config = true;        // verify the matrix first
};

// Colors every point so that each line's induced color vector is a row of m.
// Reverse of the peeling order: the last-peeled line takes the first row; at
// every earlier line at most k of its points are already colored (the
// peeling bound), and the k-configuration condition guarantees a matching
// row; the first matching row is chosen.
inline Coloring consistent_coloring(const IncidenceStructure& inc,
                                    const BinaryMatrix& m, std::size_t k,
                                    const ColoringOptions& opts = {}) {
  for (const auto& l : inc.lines())
    require(l.point_ids.size() == m.n_cols(), ErrorCode::DomainError,
            "matrix column count must equal points per line");
  if (opts.check_config)
    require(matrices::k_config_check(m, k).holds, ErrorCode::PreconditionFailed,
            "matrix fails the k-configuration condition");

  auto [free, st] = is_free_k_pseudoplane(inc, k, opts.order);
  require(free, ErrorCode::NotFree, "structure is not a free k-pseudoplane");
  for (std::size_t l = 0; l < inc.lines().size(); ++l)
    require(!st.collateral[l], ErrorCode::PreconditionFailed,
            "a line was destroyed collaterally; no coloring order exists");

  std::vector<std::size_t> by_death(inc.lines().size());
  for (std::size_t l = 0; l < inc.lines().size(); ++l) {
    require(st.death_rank[l].has_value(), ErrorCode::NotFree,
            "internal: live line in a free structure");
    by_death[*st.death_rank[l]] = l;
  }

  Coloring coloring;
  coloring.color.assign(inc.points().size(), std::nullopt);
  for (std::size_t ri = by_death.size(); ri-- > 0;) {
    std::size_t l = by_death[ri];
    const auto& pts = inc.lines()[l].point_ids;
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < m.n_rows() && !row; ++r) {
      bool match = true;
      for (std::size_t c = 0; c < pts.size() && match; ++c)
        if (coloring.color[pts[c]] && *coloring.color[pts[c]] != m.get(r, c))
          match = false;
      if (match) row = r;
    }
    if (!row)
      fail(ErrorCode::NoMatchingRow,
           "no matrix row extends the colors already fixed on line '" +
               inc.lines()[l].name + "'");
    for (std::size_t c = 0; c < pts.size(); ++c)
      coloring.color[pts[c]] = m.get(*row, c);
  }
  for (auto& c : coloring.color)
    if (!c) c = 0;  // points on no line
  return coloring;
}

// True iff every line's induced color vector equals some matrix row.
inline bool verify_coloring(const IncidenceStructure& inc, const BinaryMatrix& m,
                            const Coloring& coloring) {
  require(coloring.color.size() == inc.points().size(), ErrorCode::PartialColoring,
          "coloring size mismatch");
  for (const auto& c : coloring.color)
    require(c.has_value(), ErrorCode::PartialColoring, "uncolored point");
  for (const auto& l : inc.lines()) {
    if (l.point_ids.size() != m.n_cols()) return false;
    bool found = false;
    for (std::size_t r = 0; r < m.n_rows() && !found; ++r) {
      bool match = true;
      for (std::size_t c = 0; c < l.point_ids.size() && match; ++c)
        if (*coloring.color[l.point_ids[c]] != m.get(r, c)) match = false;
      found = match;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ramseylab::incidence
