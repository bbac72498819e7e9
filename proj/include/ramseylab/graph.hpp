#pragma once

/**
 * Finite simple undirected graphs with string vertex labels and bitset
 * adjacency. Vertices are indexed densely; labels survive induced subgraphs
 * and amalgams so fixtures can be replayed from JSON.
 */

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "ramseylab/bitset.hpp"
#include "ramseylab/error.hpp"

namespace ramseylab::predim {

struct AmalgamPiece {
  Bitset private_vertices;  // disjoint from the base and from other pieces
  Bitset boundary;          // the base vertices this piece attaches to
};

// Free-amalgam decomposition metadata: the graph is the base plus pieces,
// pieces pairwise disjoint, and every edge leaving a piece lands in its
// boundary. Lets the subset engines minimize per piece instead of over the
// whole vertex set.
struct AmalgamInfo {
  Bitset base;
  std::vector<AmalgamPiece> pieces;
};

class Graph {
 public:
  Graph() = default;

  std::size_t add_vertex(const std::string& label) {
    require(!index_.count(label), ErrorCode::DomainError,
            "duplicate vertex label '" + label + "'");
    std::size_t id = labels_.size();
    labels_.push_back(label);
    index_[label] = id;
    adj_.emplace_back(0);
    for (auto& row : adj_) row = resized(row, labels_.size());
    return id;
  }

  void add_edge(std::size_t u, std::size_t v) {
    require(u < n() && v < n(), ErrorCode::UnknownVertex, "vertex out of range");
    require(u != v, ErrorCode::DomainError, "loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    require(u < n() && v < n(), ErrorCode::UnknownVertex, "vertex out of range");
    return adj_[u].test(v);
  }

  std::size_t n() const { return labels_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  const Bitset& adjacency(std::size_t v) const { return adj_[v]; }

  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  const std::string& label(std::size_t v) const { return labels_[v]; }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    require(it != index_.end(), ErrorCode::UnknownVertex,
            "unknown vertex '" + label + "'");
    return it->second;
  }

  bool has_label(const std::string& label) const { return index_.count(label); }

  Bitset full_set() const {
    Bitset b(n());
    for (std::size_t i = 0; i < n(); ++i) b.set(i);
    return b;
  }

  Bitset set_of(const std::vector<std::string>& labels) const {
    Bitset b(n());
    for (const auto& l : labels) b.set(index_of(l));
    return b;
  }

  std::size_t edges_within(const Bitset& s) const {
    std::size_t twice = 0;
    s.for_each([&](std::size_t v) { twice += (adj_[v] & s).count(); });
    return twice / 2;
  }

  std::size_t edges_between(const Bitset& s, const Bitset& t) const {
    std::size_t c = 0;
    s.for_each([&](std::size_t v) { c += (adj_[v] & t).count(); });
    return c;
  }

  // Induced subgraph; vertex order follows ascending index, labels preserved.
  Graph induced(const Bitset& s) const {
    Graph g;
    std::vector<std::size_t> ids = s.to_vector();
    for (auto v : ids) g.add_vertex(labels_[v]);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (adj_[ids[i]].test(ids[j])) g.add_edge(i, j);
    return g;
  }

  std::shared_ptr<const AmalgamInfo> amalgam_info() const { return info_; }
  void set_amalgam_info(std::shared_ptr<const AmalgamInfo> info) {
    info_ = std::move(info);
  }

  // ---- factories ----

  static Graph complete(std::size_t k, const std::string& prefix = "v") {
    Graph g;
    for (std::size_t i = 0; i < k; ++i) g.add_vertex(prefix + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
  }

  static Graph edgeless(std::size_t k, const std::string& prefix = "v") {
    Graph g;
    for (std::size_t i = 0; i < k; ++i) g.add_vertex(prefix + std::to_string(i));
    return g;
  }

  static Graph complete_bipartite(std::size_t a, std::size_t b,
                                  const std::string& prefix = "v") {
    Graph g;
    for (std::size_t i = 0; i < a + b; ++i)
      g.add_vertex(prefix + std::to_string(i));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = a; j < a + b; ++j) g.add_edge(i, j);
    return g;
  }

  // ---- JSON ----

  // Core format: {vertices:[labels], edges:[[u,v],...]}. When the graph
  // carries free-amalgam metadata it is emitted under the optional
  // "decomposition" key and restored on parse; plain graphs ignore it.
  static Graph from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("edges"),
            ErrorCode::ParseError, "graph JSON needs 'vertices' and 'edges'");
    Graph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(label_of(v));
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, ErrorCode::ParseError,
              "edge must be a pair");
      std::size_t u = g.index_of(label_of(e[0]));
      std::size_t v = g.index_of(label_of(e[1]));
      require(!g.has_edge(u, v), ErrorCode::ParseError, "parallel edge");
      g.add_edge(u, v);
    }
    if (j.contains("decomposition")) {
      const auto& d = j.at("decomposition");
      auto set_of_labels = [&](const nlohmann::json& arr) {
        Bitset b(g.n());
        for (const auto& l : arr) b.set(g.index_of(label_of(l)));
        return b;
      };
      auto info = std::make_shared<AmalgamInfo>();
      info->base = set_of_labels(d.at("base"));
      for (const auto& p : d.at("pieces"))
        info->pieces.push_back(AmalgamPiece{set_of_labels(p.at("private")),
                                            set_of_labels(p.at("boundary"))});
      g.set_amalgam_info(info);
    }
    return g;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = labels_;
    auto edges = nlohmann::json::array();
    for (std::size_t u = 0; u < n(); ++u)
      for (std::size_t v = u + 1; v < n(); ++v)
        if (adj_[u].test(v))
          edges.push_back(nlohmann::json::array({labels_[u], labels_[v]}));
    j["edges"] = edges;
    if (info_) {
      auto labels_arr = [&](const Bitset& b) {
        auto arr = nlohmann::json::array();
        b.for_each([&](std::size_t v) { arr.push_back(labels_[v]); });
        return arr;
      };
      nlohmann::json d;
      d["base"] = labels_arr(info_->base);
      auto pieces = nlohmann::json::array();
      for (const auto& p : info_->pieces) {
        nlohmann::json pj;
        pj["private"] = labels_arr(p.private_vertices);
        pj["boundary"] = labels_arr(p.boundary);
        pieces.push_back(pj);
      }
      d["pieces"] = pieces;
      j["decomposition"] = d;
    }
    return j;
  }

 private:
  static std::string label_of(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(ErrorCode::ParseError, "vertex label must be a string or integer");
  }

  static Bitset resized(const Bitset& b, std::size_t n) {
    if (b.universe() >= n) return b;
    Bitset out(n);
    b.for_each([&](std::size_t i) { out.set(i); });
    return out;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bitset> adj_;
  std::shared_ptr<const AmalgamInfo> info_;
};

}  // namespace ramseylab::predim
