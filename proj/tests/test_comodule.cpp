#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gralg/comodule.hpp"

using namespace gralg;

namespace {

GradedRing zx() {
  GradingSignature sig;
  sig.dim = 1;
  sig.weight = {1};
  sig.gen_degrees = {{1}};
  sig.var_names = {"x"};
  return GradedRing::make(sig, {});
}

GradedRing zxy(std::vector<Poly> ideal = {}) {
  GradingSignature sig;
  sig.dim = 1;
  sig.weight = {1};
  sig.gen_degrees = {{1}, {1}};
  sig.var_names = {"x", "y"};
  return GradedRing::make(sig, std::move(ideal));
}

GradedRing weighted() {
  GradingSignature sig;
  sig.dim = 1;
  sig.weight = {1};
  sig.gen_degrees = {{1}, {2}};
  sig.var_names = {"x", "y"};
  return GradedRing::make(sig, {});
}

GradedRing bigraded() {
  GradingSignature sig;
  sig.dim = 2;
  sig.weight = {1, 1};
  sig.gen_degrees = {{1, 0}, {0, 1}};
  sig.var_names = {"s", "t"};
  return GradedRing::make(sig, {});
}

Poly pp(const GradedRing& r, const std::string& s) { return parse_poly(s, r.names()); }

}  // namespace

TEST_CASE("labeled sums: arithmetic, cancellation, rendering") {
  GradedRing r = zx();
  GroupRingElement a = GroupRingElement::ring_term(pp(r, "x"), {1});
  GroupRingElement b = GroupRingElement::ring_term(pp(r, "2"), {0});
  GroupRingElement s = a + b;
  CHECK(s.terms.size() == 2);
  CHECK(s.str(r.sig) == "(2)*t^0 + (x)*t^1");
  CHECK((s + (-s)).is_zero());
  CHECK((a + a).str(r.sig) == "(2*x)*t^1");

  // labels add under multiplication
  GroupRingElement p = a.ring_mul(a);
  CHECK(p.str(r.sig) == "(x^2)*t^2");
  CHECK(s.ring_mul(s).str(r.sig) == "(4)*t^0 + (4*x)*t^1 + (x^2)*t^2");

  CHECK(GroupRingElement::zero(1, 1).is_zero());
  CHECK(GroupRingElement::zero(1, 1).str(r.sig) == "0");

  GroupRingElement m =
      GroupRingElement::module_term({pp(r, "x"), pp(r, "0")}, {1});
  CHECK(m.str(r.sig) == "[x, 0]*t^1");
  GroupRingElement xm = act(a, m);
  CHECK(xm.str(r.sig) == "[x^2, 0]*t^2");
}

TEST_CASE("counit and antipode") {
  GradedRing r = zx();
  GroupRingElement s = GroupRingElement::ring_term(pp(r, "x"), {1}) +
                       GroupRingElement::ring_term(pp(r, "2"), {0});
  CHECK(counit_ring(s).str(r.names()) == "x + 2");

  GroupRingElement m = GroupRingElement::module_term({pp(r, "x"), pp(r, "0")}, {1}) +
                       GroupRingElement::module_term({pp(r, "0"), pp(r, "3")}, {0});
  std::vector<Poly> cm = counit(m);
  CHECK(cm[0].str(r.names()) == "x");
  CHECK(cm[1].str(r.names()) == "3");

  GroupRingElement sa = antipode(s);
  CHECK(sa.str(r.sig) == "(x)*t^-1 + (2)*t^0");
  // involution
  GroupRingElement saa = antipode(sa);
  CHECK((saa + (-s)).is_zero());
  // antihomomorphism on the grouplike basis: S(ab) = S(b)S(a)
  GroupRingElement t2 = GroupRingElement::ring_term(pp(r, "x^2"), {2});
  CHECK((antipode(s.ring_mul(t2)) + (-antipode(t2).ring_mul(antipode(s)))).is_zero());
}

TEST_CASE("comultiplication is grouplike on labels") {
  GradedRing r = zx();
  GroupRingElement s = GroupRingElement::ring_term(pp(r, "x"), {1}) +
                       GroupRingElement::ring_term(pp(r, "3"), {0});
  TensorExpansion d = comultiply(s);
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms.count({Degree{0}, Degree{0}}) == 1);
  CHECK(d.terms.count({Degree{1}, Degree{1}}) == 1);
  CHECK(d.terms.count({Degree{0}, Degree{1}}) == 0);
  CHECK(d.terms.at({Degree{1}, Degree{1}})[0].str(r.names()) == "x");
}

TEST_CASE("canonical ring coaction and its axioms") {
  GradedRing r = zxy();
  CoactionData c = coaction_from_grading(r);
  CHECK(c.ring_carrier());
  GroupRingElement img = c.apply_ring(pp(r, "x^2 + 3*y"));
  CHECK(img.str(r.sig) == "(3*y)*t^1 + (x^2)*t^2");
  CHECK(c.apply_ring(pp(r, "5")).str(r.sig) == "(5)*t^0");
  CHECK(c.apply_ring(pp(r, "0")).is_zero());

  CoactionReport rep = verify_coaction_axioms(
      c, {{pp(r, "x*y - 2*x")}, {pp(r, "x^2 + 3*y")}, {pp(r, "1 + x + x^2")}});
  CHECK(rep.passed());
  CHECK(rep.checks > 0);

  // homogeneous relations stay zero labelwise
  GradedRing conic = zxy({parse_poly("x^2 + y^2", {"x", "y"})});
  CHECK(verify_coaction_axioms(coaction_from_grading(conic), {{pp(conic, "x*y")}}).passed());
}

TEST_CASE("broken coactions are caught") {
  GradedRing r = zx();
  // doubled label: counit sums to 2x
  CoactionData bad;
  bad.ring = r;
  bad.images = {GroupRingElement::ring_term(pp(r, "x"), {1}) +
                GroupRingElement::ring_term(pp(r, "x"), {2})};
  CoactionReport rep = verify_coaction_axioms(bad, {});
  CHECK_FALSE(rep.passed());
  bool counit_failed = false;
  for (const AxiomFailure& f : rep.failures) counit_failed |= f.axiom == "counit";
  CHECK(counit_failed);

  CHECK_THROWS_AS(grading_from_coaction(bad, {0, 4}), MixedGeneratorImage);

  // image is a different variable
  GradedRing r2 = zxy();
  CoactionData swap;
  swap.ring = r2;
  swap.images = {GroupRingElement::ring_term(pp(r2, "y"), {1}),
                 GroupRingElement::ring_term(pp(r2, "x"), {1})};
  CHECK_THROWS_AS(grading_from_coaction(swap, {0, 4}), MixedGeneratorImage);

  // degree-zero label: recovered grading is not pointed
  CoactionData flat;
  flat.ring = r;
  flat.images = {GroupRingElement::ring_term(pp(r, "x"), {0})};
  CHECK_THROWS_AS(grading_from_coaction(flat, {0, 4}), NotPointed);
}

TEST_CASE("grading recovered from the canonical coaction") {
  for (const GradedRing& r : {zx(), weighted(), zxy({parse_poly("x^2 + y^2", {"x", "y"})}),
                              bigraded()}) {
    CoactionData c = coaction_from_grading(r);
    GradingRecovery rec = grading_from_coaction(c, {0, 6});
    CHECK(rec.report.passed());
    CHECK(rec.report.checks > 0);
    REQUIRE(rec.ring.sig.gen_degrees.size() == r.sig.gen_degrees.size());
    for (size_t v = 0; v < r.sig.gen_degrees.size(); ++v)
      CHECK(rec.ring.sig.gen_degrees[v] == r.sig.gen_degrees[v]);
    // same ring: identical pieces across a few degrees
    for (long d = 0; d <= 3; ++d) {
      Degree g(static_cast<size_t>(r.sig.dim), Rat(0));
      g[0] = d;
      CHECK(rec.ring.piece(g).group.same_invariants(r.piece(g).group));
    }
  }
}

TEST_CASE("module coaction is semilinear over the ring coaction") {
  GradedRing r = zx();
  GradedModule m = GradedModule::make(r, {{0}, {1}}, {{pp(r, "x"), pp(r, "-1")}}, "M");
  CoactionData c = comodule_coaction(m);
  CHECK_FALSE(c.ring_carrier());
  CHECK(c.carrier_gens() == 2);

  GroupRingElement e0 = c.apply({pp(r, "1"), pp(r, "0")});
  CHECK(e0.str(r.sig) == "[1, 0]*t^0");
  GroupRingElement xe0 = c.apply({pp(r, "x"), pp(r, "0")});
  CHECK(xe0.str(r.sig) == "[x, 0]*t^1");
  // rho(x e0) = act(rho(x), rho(e0))
  CoactionData cr = coaction_from_grading(r);
  GroupRingElement viaact = act(cr.apply_ring(pp(r, "x")), e0);
  CHECK((xe0 + (-viaact)).is_zero());

  CoactionReport rep = verify_coaction_axioms(c, {{pp(r, "x^2"), pp(r, "x")}});
  CHECK(rep.passed());
}

TEST_CASE("twisted module over the label ring") {
  GradedRing r = zx();
  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "M");
  ModuleGroupRing mg = module_group_ring(m, {0, 2});
  REQUIRE(mg.labels.size() == 3);
  for (size_t k = 0; k < mg.labels.size(); ++k)
    CHECK(mg.gen_offset[k] == static_cast<Eigen::Index>(k));
  // piece g = (+)_h M_{g-h}
  for (long d = 0; d <= 2; ++d) {
    long expect = 0;
    for (const Degree& h : mg.labels) {
      Degree g{Rat(d)};
      Degree diff = deg_sub(g, h);
      if (diff[0] >= 0) expect += m.piece(diff).group.free_rank;
    }
    CHECK(mg.module.piece({d}).group.free_rank == expect);
    CHECK(mg.module.piece({d}).group.torsion.empty());
  }
  CHECK(mg.module.piece({0}).group.invariant_string() == "Z");
  CHECK(mg.module.piece({1}).group.invariant_string() == "Z^2");
  CHECK(mg.module.piece({2}).group.invariant_string() == "Z^2");

  // generators sit above the window: no labels at all
  GradedModule high = GradedModule::free_module(r, {{2}});
  ModuleGroupRing none = module_group_ring(high, {0, 1});
  CHECK(none.labels.empty());
  CHECK(none.module.ngens() == 0);
}

TEST_CASE("graded part recovered as an equalizer") {
  GradedRing r = zx();
  GradedModule tor = GradedModule::make(r, {{0}}, {{pp(r, "2*x")}}, "T");
  CoactionData c = comodule_coaction(tor);
  for (long d = 0; d <= 3; ++d) {
    GradedPartRecovery rec = graded_part_from_coaction(tor, c, {d}, {0, 3});
    CHECK(rec.group.same_invariants(tor.piece({d}).group));
    CHECK(rec.projection_roundtrip);
  }
  CHECK(graded_part_from_coaction(tor, c, {1}, {0, 3}).group.invariant_string() == "Z/2");

  // the ring as a rank-one comodule over itself
  GradedModule free1 = GradedModule::free_module(r, {{0}});
  CoactionData cr = coaction_from_grading(r);
  GradedPartRecovery rec = graded_part_from_coaction(free1, cr, {2}, {0, 3});
  CHECK(rec.group.invariant_string() == "Z");
  CHECK(rec.projection_roundtrip);

  GradedModule two = GradedModule::free_module(r, {{0}, {1}});
  CHECK_THROWS_AS(graded_part_from_coaction(two, cr, {1}, {0, 3}), ValidationError);
}

TEST_CASE("roundtrip equivalence across modules") {
  GradedRing r = zx();
  std::vector<GradedModule> mods;
  mods.push_back(GradedModule::free_module(r, {{0}}));
  mods.push_back(GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "A"));
  mods.push_back(GradedModule::make(r, {{0}}, {{pp(r, "2*x")}}, "B"));
  mods.push_back(GradedModule::make(r, {{0}, {1}}, {{pp(r, "x"), pp(r, "-1")}}, "C"));
  GradedRing r2 = bigraded();
  mods.push_back(GradedModule::free_module(r2, {{0, 0}}));

  for (const GradedModule& m : mods) {
    WeightWindow w{0, m.ring.sig.dim == 2 ? 2 : 4};
    RoundtripReport rep = roundtrip_equivalence_check(m, w);
    CHECK(rep.axioms_ok);
    CHECK(rep.action_ok);
    CHECK_FALSE(rep.entries.empty());
    for (const RoundtripEntry& e : rep.entries) {
      CHECK(e.match);
      CHECK(e.projection_ok);
      CHECK(e.recovered == e.expected);
      CHECK(e.expected == m.piece(e.degree).group.invariant_string());
    }
    CHECK(rep.passed());
  }
}
