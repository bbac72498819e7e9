#include <catch2/catch_amalgamated.hpp>

#include "ramseylab/builder.hpp"
#include "ramseylab/incidence.hpp"

using namespace ramseylab;
using namespace ramseylab::builder;
using predim::Alpha;
using predim::DeltaValue;
using predim::Graph;
using predim::QuadValue;

namespace {
const Alpha kA(-1, 1, 1, 2);

Graph triangle_with_pendant() {
  Graph b;
  for (auto l : {"a0", "a1", "a2", "t0"}) b.add_vertex(l);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  b.add_edge(0, 3);
  return b;
}
}  // namespace

TEST_CASE("build_ef on four isolated vertices hits (7,17) and K_{5,2}") {
  auto res = build_ef(kA, 10, Graph::edgeless(4, "f"));
  CHECK(res.params.m == 2);
  CHECK(res.params.r == 7);
  CHECK(res.params.s == 17);
  CHECK(res.params.r0 == 5);
  CHECK(res.params.r1 == 2);
  CHECK(res.params.m0 == 5);
  CHECK(res.params.m1 == 2);
  CHECK(res.params.extra0 == 0);
  CHECK(res.params.extra1 == 0);

  CHECK(res.ef.n() == 11);
  CHECK(res.ef.edge_count() == 17);
  CHECK(predim::rel_delta(res.ef, res.e_set, res.f_set) == DeltaValue(7, 17));
  CHECK(predim::rel_delta(res.ef, res.e_set, res.f_set).eval(kA) ==
        QuadValue(24, -17, 1, 2));

  CHECK(res.report.all_pass());
  CHECK(res.report["ef_in_kalpha"].pass);
  CHECK(res.report["delta_e_over_f_window"].pass);
  CHECK(res.report["triangle_census"].pass);
  CHECK(predim::copies_of(Graph::complete(3), res.ef).empty());
}

TEST_CASE("build_ef preconditions") {
  CHECK_THROWS_MATCHES(build_ef(kA, 10, Graph::edgeless(3, "f")), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("PreconditionFailed")));
  CHECK_THROWS_MATCHES(build_ef(kA, 10, Graph::complete(4, "f")), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("PreconditionFailed")));
}

TEST_CASE("build_ab fixture at n=3, C=17") {
  auto res = build_ab(kA, 3, 17);
  CHECK(res.params.r == 7);
  CHECK(res.params.s == 19);
  CHECK(res.params.subsets.size() == 4);
  CHECK(res.params.eps == QuadValue(-26, 19, 1, 2));  // 19*sqrt(2) - 26

  CHECK(res.b.n() == 37);
  CHECK(res.b.edge_count() == 85);
  CHECK(predim::delta(res.b) == DeltaValue(37, 85));

  REQUIRE(res.report.all_pass());
  CHECK(res.report["closed_triangle_count"].pass);
  CHECK(res.report["condition1_delta_b_vs_a"].pass);
  CHECK(res.report["condition2_proper_subsets"].pass);
  CHECK(res.report["b_in_kalpha"].pass);
  CHECK(res.report["half_delta_criterion"].pass);

  // delta(B/A) = 34 - 82*alpha, strictly below delta(A)/2.
  QuadValue rel = DeltaValue(34, 82).eval(kA);
  CHECK(rel == QuadValue(116, -82, 1, 2));
  QuadValue half = DeltaValue(3, 3).eval(kA) *
                   QuadValue::rational(Rational(1, 2), 2);
  CHECK((half - rel).sign() > 0);

  // Exactly three closed triangles, via the decomposition engine.
  auto tris = predim::closed_embeddings(Graph::complete(3), res.b, kA, true);
  CHECK(tris.size() == 3);
}

TEST_CASE("build_ab parameter validation") {
  CHECK_THROWS_MATCHES(build_ab(kA, 3, 8), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("ParameterError")));
  CHECK_THROWS_MATCHES(build_ab(kA, 2, 17), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("PreconditionFailed")));
}

TEST_CASE("glue_lines small fixtures") {
  Graph b = triangle_with_pendant();
  Graph a = Graph::complete(3);

  Graph chain2 = glue_lines(b, a, GluePattern::Chain, 2, kA);
  CHECK(chain2.n() == 2 * b.n() - 3);
  CHECK(chain2.edge_count() == 2 * b.edge_count() - 3);
  CHECK(predim::kalpha_member(chain2, kA).member);

  Graph star3 = glue_lines(b, a, GluePattern::Star, 3, kA);
  CHECK(star3.n() == 3 + 3);  // shared triangle plus three pendants
  auto inc = incidence::extract_incidence(star3, a, b, kA);
  CHECK(inc.lines().size() == 3);
  CHECK(incidence::is_k_pseudoplane(inc, 2));
  CHECK(incidence::is_free_k_pseudoplane(inc, 2).first);

  // With a single closed a-copy in b, chain, star and cycle all collapse
  // onto the same shared site.
  Graph cyc3 = glue_lines(b, a, GluePattern::Cycle, 3, kA);
  CHECK(cyc3.n() == star3.n());
  CHECK(cyc3.edge_count() == star3.edge_count());
  CHECK_THROWS_AS(glue_lines(b, a, GluePattern::Cycle, 2, kA), Error);
}

TEST_CASE("extend_generic") {
  Graph m = Graph::complete(3);
  Graph a = Graph::complete(3);

  // Extending by the pattern itself is the identity.
  auto same = extend_generic(m, {"v0", "v1", "v2"}, a, a, kA);
  CHECK(same.extended.n() == 3);
  CHECK(same.report.all_pass());

  // Extending K3 by the 37-vertex fixture gives the fixture.
  auto ab = build_ab(kA, 3, 17);
  auto ext = extend_generic(m, {"v0", "v1", "v2"}, ab.b, a, kA);
  CHECK(ext.extended.n() == 37);
  CHECK(ext.new_copy.count() == 37);
  REQUIRE(ext.report.all_pass());

  // A second extension at a fresh triangle keeps everything closed and in
  // K_alpha; the merged metadata keeps the engines exact at 71 vertices.
  std::vector<std::string> second_site;
  for (std::size_t v = 0; v < ext.extended.n(); ++v) {
    const std::string& l = ext.extended.label(v);
    if (l.find("A1_") != std::string::npos) second_site.push_back(l);
  }
  REQUIRE(second_site.size() == 3);
  auto ext2 = extend_generic(ext.extended, second_site, ab.b, a, kA);
  CHECK(ext2.extended.n() == 37 + 34);
  CHECK(ext2.report.all_pass());

  // Unknown or non-closed images are rejected.
  CHECK_THROWS_AS(extend_generic(m, {"v0", "v1", "nope"}, ab.b, a, kA), Error);
  Graph path3;
  for (auto l : {"p0", "p1", "p2"}) path3.add_vertex(l);
  path3.add_edge(0, 1);
  path3.add_edge(1, 2);
  CHECK_THROWS_MATCHES(extend_generic(path3, {"p0", "p1", "p2"}, ab.b, a, kA),
                       Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("PreconditionFailed")));
}
