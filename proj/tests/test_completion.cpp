#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gralg/completion.hpp"

using namespace gralg;

namespace {

GradedRing ring1() {
  GradingSignature sig;
  sig.dim = 1;
  sig.weight = {1};
  sig.gen_degrees = {{1}};
  sig.var_names = {"x"};
  return GradedRing::make(sig, {});
}

GradedRing ring2() {
  GradingSignature sig;
  sig.dim = 1;
  sig.weight = {1};
  sig.gen_degrees = {{1}, {1}};
  sig.var_names = {"x", "y"};
  return GradedRing::make(sig, {});
}

Poly pp(const GradedRing& r, const std::string& s) { return parse_poly(s, r.names()); }

AbTower const_tower(const FpAbGroup& g, const IntMat& step, int depth) {
  AbTower t;
  for (int k = 0; k <= depth; ++k) t.objs.push_back(g);
  for (int k = 0; k < depth; ++k) t.maps.push_back(AbMap::checked(g, g, step));
  return t;
}

}  // namespace

TEST_CASE("tower limit verdicts on handmade towers") {
  IntMat one = IntMat::Identity(1, 1);
  IntMat two = 2 * one;
  IntMat zero = IntMat::Zero(1, 1);
  FpAbGroup z = FpAbGroup::free_group(1);
  FpAbGroup z4 = FpAbGroup::cyclic(4);

  TowerVerdict v = tower_limits(const_tower(z, one, 4));
  CHECK(v.status == LimStatus::Stabilized);
  CHECK(v.value->invariant_string() == "Z");
  CHECK(v.stage == 0);
  CHECK(v.lim1_zero);

  v = tower_limits(const_tower(z4, zero, 3));
  CHECK(v.status == LimStatus::Stabilized);
  CHECK(v.value->is_zero());
  CHECK(v.lim1_zero);

  // x2 on Z/4 is neither iso nor surjective nor zero
  v = tower_limits(const_tower(z4, two, 4));
  CHECK(v.status == LimStatus::Undetermined);
  CHECK_FALSE(v.lim1_zero);

  // p-adic shape: Z/2 <- Z/4 <- Z/8 <- ... surjective, never iso
  AbTower padic;
  for (int k = 0; k <= 4; ++k) padic.objs.push_back(FpAbGroup::cyclic(Int(1) << (k + 1)));
  for (int k = 0; k < 4; ++k)
    padic.maps.push_back(AbMap::checked(padic.objs[static_cast<size_t>(k) + 1],
                                        padic.objs[static_cast<size_t>(k)], one));
  v = tower_limits(padic);
  CHECK(v.status == LimStatus::SurjectiveTail);
  CHECK(v.lim1_zero);
  CHECK_FALSE(v.value.has_value());

  // a zero prefix with growth at the top must not read as pro-zero
  AbTower spike;
  spike.objs = {FpAbGroup::zero(), FpAbGroup::zero(), FpAbGroup::zero(), z, z};
  spike.maps = {AbMap::zero_map(FpAbGroup::zero(), FpAbGroup::zero()),
                AbMap::zero_map(FpAbGroup::zero(), FpAbGroup::zero()),
                AbMap::zero_map(z, FpAbGroup::zero()), AbMap::checked(z, z, one)};
  v = tower_limits(spike);
  CHECK(v.status == LimStatus::SurjectiveTail);
  CHECK_FALSE(v.value.has_value());

  AbTower shallow = const_tower(z, one, 1);
  CHECK_THROWS_AS(tower_limits(shallow), ValidationError);
}

TEST_CASE("classical completion of the free module at the irrelevant ideal") {
  GradedRing r = ring1();
  GradedModule m = GradedModule::free_module(r, {{0}});
  WeightWindow w{0, 4};
  CompletionApproximation c = gradedwise_completion(m, {pp(r, "x")}, 7, w);
  REQUIRE(c.stage_modules.size() == 8);
  CHECK_FALSE(c.derived);
  for (long d = 0; d <= 4; ++d) {
    const TowerVerdict& v = c.flags.at({d});
    CHECK(v.status == LimStatus::Stabilized);
    CHECK(v.value->invariant_string() == "Z");
    CHECK(v.stage == d + 1);
    CHECK(v.lim1_zero);
  }
  // stage m realizes M/I^m: degree d piece is Z for m > d, 0 for m <= d
  CHECK(c.stage_modules[3].piece({2}).group.invariant_string() == "Z");
  CHECK(c.stage_modules[2].piece({2}).group.is_zero());
  CHECK(c.stage_modules[0].piece({0}).group.is_zero());

  CHECK_THROWS_AS(gradedwise_completion(m, {pp(r, "x")}, 1, w), ValidationError);
  CHECK_THROWS_AS(gradedwise_completion(m, {Poly::zero(1)}, 4, w), ValidationError);
  CHECK_THROWS_AS(gradedwise_completion(m, {pp(r, "x + 1")}, 4, w), NotHomogeneous);
}

TEST_CASE("classical completion at a constant ideal is the p-adic tower") {
  GradedRing r = ring1();
  GradedModule m = GradedModule::free_module(r, {{0}});
  WeightWindow w{0, 2};
  CompletionApproximation c = gradedwise_completion(m, {pp(r, "2")}, 5, w);
  for (long d = 0; d <= 2; ++d) {
    const TowerVerdict& v = c.flags.at({d});
    CHECK(v.status == LimStatus::SurjectiveTail);
    CHECK(v.lim1_zero);
  }
  CHECK(c.stage_modules[1].piece({0}).group.invariant_string() == "Z/2");
  CHECK(c.stage_modules[3].piece({0}).group.invariant_string() == "Z/8");
  CHECK(c.stage_modules[5].piece({2}).group.invariant_string() == "Z/32");
}

TEST_CASE("empty ideal completes to the module itself") {
  GradedRing r = ring1();
  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "M");
  CompletionApproximation c = gradedwise_completion(m, {}, 4, {0, 3});
  for (long d = 0; d <= 1; ++d) {
    const TowerVerdict& v = c.flags.at({d});
    CHECK(v.status == LimStatus::Stabilized);
    CHECK(v.stage == 1);
    CHECK(v.value->same_invariants(m.piece({d}).group));
  }
}

TEST_CASE("derived completion towers and their homotopy flags") {
  GradedRing r = ring1();
  GradedModule m = GradedModule::free_module(r, {{0}});
  WeightWindow w{0, 3};
  CompletionApproximation c = derived_gradedwise_completion(m, {pp(r, "x")}, 6, w);
  CHECK(c.derived);
  CHECK(c.tower.stages.size() == 7);
  CHECK(c.tower.transitions.size() == 6);
  for (long d = 0; d <= 3; ++d) {
    const TowerVerdict& v0 = c.pi_flags.at(0).at({d});
    CHECK(v0.status == LimStatus::Stabilized);
    CHECK(v0.value->invariant_string() == "Z");
    const TowerVerdict& v1 = c.pi_flags.at(1).at({d});
    CHECK(v1.status == LimStatus::Stabilized);
    CHECK(v1.value->is_zero());
  }

  // torsion module: pi_0 of the completion recovers the module
  GradedModule t = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "T");
  CompletionApproximation ct = derived_gradedwise_completion(t, {pp(r, "x")}, 6, w);
  for (long d = 0; d <= 3; ++d) {
    const TowerVerdict& v0 = ct.pi_flags.at(0).at({d});
    CHECK(v0.status == LimStatus::Stabilized);
    CHECK(v0.value->same_invariants(t.piece({d}).group));
    const TowerVerdict& v1 = ct.pi_flags.at(1).at({d});
    CHECK(v1.status == LimStatus::Stabilized);
    CHECK(v1.value->is_zero());
  }
}

TEST_CASE("joint completion at two generators") {
  GradedRing r = ring2();
  GradedModule m = GradedModule::free_module(r, {{0}});
  WeightWindow w{0, 2};
  CompletionApproximation c = derived_gradedwise_completion(m, {pp(r, "x"), pp(r, "y")}, 6, w);
  for (long d = 0; d <= 2; ++d) {
    const TowerVerdict& v0 = c.pi_flags.at(0).at({d});
    CHECK(v0.status == LimStatus::Stabilized);
    CHECK(v0.value->free_rank == d + 1);
    for (int i = 1; i <= 2; ++i) {
      const TowerVerdict& vi = c.pi_flags.at(i).at({d});
      CHECK(vi.status == LimStatus::Stabilized);
      CHECK(vi.value->is_zero());
    }
  }
}

TEST_CASE("classical and derived pi_0 agree on window degrees") {
  GradedRing r = ring1();
  for (const char* rel : {"x^2", "2 x", "x^3"}) {
    GradedModule m = GradedModule::make(r, {{0}, {1}}, {{pp(r, rel), Poly::zero(1)}}, "M");
    WeightWindow w{0, 3};
    CompletionApproximation cl = gradedwise_completion(m, {pp(r, "x")}, 6, w);
    CompletionApproximation dv = derived_gradedwise_completion(m, {pp(r, "x")}, 6, w);
    for (const Degree& g : cl.degrees) {
      const TowerVerdict& a = cl.flags.at(g);
      const TowerVerdict& b = dv.pi_flags.at(0).at(g);
      REQUIRE(a.status == LimStatus::Stabilized);
      REQUIRE(b.status == LimStatus::Stabilized);
      CHECK(a.value->same_invariants(*b.value));
    }
  }
}

TEST_CASE("milnor window check on stabilized towers") {
  GradedRing r = ring1();
  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "M");
  ComplexTower t = koszul_tower(GradedComplex::from_module(m), {pp(r, "x")}, 6);
  std::vector<Degree> degs = m.window_degrees({0, 2});
  for (const MilnorEntry& e : milnor_check(t, 0, degs)) {
    CHECK(e.match);
    CHECK(e.v_i.lim1_zero);
    CHECK(e.limit.same_invariants(*e.v_i.value));
  }
  for (const MilnorEntry& e : milnor_check(t, 1, degs)) CHECK(e.match);

  // p-adic pi_0 towers have surjective tails, no stabilization: refuse a value
  GradedModule f = GradedModule::free_module(r, {{0}});
  ComplexTower tp = koszul_tower(GradedComplex::from_module(f), {pp(r, "2")}, 5);
  CHECK_THROWS_AS(milnor_check(tp, 0, f.window_degrees({0, 1})), NotStabilized);
}

TEST_CASE("telescope certificates") {
  GradedRing r = ring1();
  GradedModule free1 = GradedModule::free_module(r, {{0}});

  TelescopeResult t = telescope_vanishes(free1, Poly::zero(1), {2}, 4);
  CHECK(t.status == TelescopeStatus::Vanishes);

  // positive degree: weight certificate
  t = telescope_vanishes(free1, pp(r, "x"), {2}, 8);
  CHECK(t.status == TelescopeStatus::Vanishes);
  CHECK(t.param == 3);

  // constant on torsion killed by it: nilpotent certificate
  GradedModule m2 = GradedModule::make(r, {{0}}, {{pp(r, "2")}}, "M2");
  t = telescope_vanishes(m2, pp(r, "2"), {1}, 6);
  CHECK(t.status == TelescopeStatus::Vanishes);

  // constant acting invertibly on torsion: certified nonvanishing
  t = telescope_vanishes(m2, pp(r, "3"), {1}, 6);
  CHECK(t.status == TelescopeStatus::NonVanishing);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->invariant_string() == "Z/2");

  // 2 on a free piece: strictly decreasing images, no verdict
  t = telescope_vanishes(free1, pp(r, "2"), {0}, 6);
  CHECK(t.status == TelescopeStatus::Undetermined);

  // unit: stable image is everything
  t = telescope_vanishes(free1, pp(r, "1"), {0}, 4);
  CHECK(t.status == TelescopeStatus::NonVanishing);

  CHECK_THROWS_AS(telescope_vanishes(free1, pp(r, "x"), {2}, 0), ValidationError);
}

TEST_CASE("completeness verdicts") {
  GradedRing r = ring1();
  WeightWindow w{0, 3};

  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^3")}}, "M");
  CompletenessReport rep = is_derived_gradedwise_complete(m, {pp(r, "x")}, w, 8);
  CHECK(rep.verdict == CertVerdict::Yes);
  for (const CompletenessEntry& e : rep.entries)
    CHECK(e.result.status == TelescopeStatus::Vanishes);

  GradedModule free1 = GradedModule::free_module(r, {{0}});
  rep = is_derived_gradedwise_complete(free1, {pp(r, "2")}, w, 6);
  CHECK(rep.verdict == CertVerdict::Undetermined);

  GradedModule m2 = GradedModule::make(r, {{0}}, {{pp(r, "2")}}, "M2");
  rep = is_derived_gradedwise_complete(m2, {pp(r, "3")}, w, 6);
  CHECK(rep.verdict == CertVerdict::No);

  rep = is_derived_gradedwise_complete(m2, {pp(r, "2")}, w, 6);
  CHECK(rep.verdict == CertVerdict::Yes);

  // mixed ideal: positive-degree generator certified by weight, constant by nilpotence
  rep = is_derived_gradedwise_complete(m2, {pp(r, "x"), pp(r, "2")}, w, 6);
  CHECK(rep.verdict == CertVerdict::Yes);
}

TEST_CASE("derived nakayama") {
  GradedRing r = ring1();
  WeightWindow w{0, 3};

  // zero module: quotient connective, assertion fires and holds
  GradedModule z = GradedModule::zero_module(r);
  NakayamaReport rep = derived_nakayama_check(z, {pp(r, "2")}, 1, w, 6);
  CHECK(rep.completeness.verdict == CertVerdict::Yes);
  CHECK(rep.quotient_connective);
  CHECK(rep.asserted);
  CHECK(rep.module_connective);
  CHECK(rep.passed());

  // nonzero complete module: pi_0 of the quotient is nonzero, nothing asserted
  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "M");
  rep = derived_nakayama_check(m, {pp(r, "x")}, 1, w, 8);
  CHECK(rep.completeness.verdict == CertVerdict::Yes);
  CHECK_FALSE(rep.quotient_connective);
  CHECK_FALSE(rep.asserted);
  CHECK(rep.passed());

  // uncertified module: refuse to run
  GradedModule free1 = GradedModule::free_module(r, {{0}});
  CHECK_THROWS_AS(derived_nakayama_check(free1, {pp(r, "2")}, 1, w, 6),
                  PreconditionNotCertified);
}

TEST_CASE("pro-isomorphism bound for torsion towers") {
  GradedRing r = ring1();
  WeightWindow w{0, 4};

  GradedModule free1 = GradedModule::free_module(r, {{0}});
  ProIsoReport rep = pro_isomorphism_check(free1, pp(r, "x"), 5, w);
  CHECK(rep.certified);
  CHECK(rep.global_c == 0);

  // Z[x] (+) Z[x]/(x): the x-torsion is killed by x itself
  GradedModule m = GradedModule::make(r, {{0}, {0}},
                                      {{Poly::zero(1), pp(r, "x")}}, "M");
  rep = pro_isomorphism_check(m, pp(r, "x"), 5, w);
  CHECK(rep.certified);
  CHECK(rep.global_c == 1);
  for (const auto& [g, c] : rep.c_of_degree) CHECK(c <= 1);

  // x^2-torsion needs c = 2
  GradedModule m2 = GradedModule::make(r, {{0}, {0}},
                                       {{Poly::zero(1), pp(r, "x^2")}}, "M2");
  rep = pro_isomorphism_check(m2, pp(r, "x"), 5, w);
  CHECK(rep.certified);
  CHECK(rep.global_c == 2);

  CHECK_THROWS_AS(pro_isomorphism_check(m, pp(r, "x"), 1, w), ValidationError);
  CHECK_THROWS_AS(pro_isomorphism_check(m, Poly::zero(1), 5, w), ValidationError);
}

TEST_CASE("completion is idempotent on certified-complete modules") {
  GradedRing r = ring1();
  WeightWindow w{0, 3};
  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}}, "M");
  CompletionApproximation once = gradedwise_completion(m, {pp(r, "x")}, 6, w);
  const GradedModule& completed = once.stage_modules.back();
  CompletionApproximation twice = gradedwise_completion(completed, {pp(r, "x")}, 6, w);
  for (const Degree& g : once.degrees) {
    REQUIRE(once.flags.at(g).status == LimStatus::Stabilized);
    REQUIRE(twice.flags.at(g).status == LimStatus::Stabilized);
    CHECK(once.flags.at(g).value->same_invariants(*twice.flags.at(g).value));
    CHECK(once.flags.at(g).value->same_invariants(m.piece(g).group));
  }
}

TEST_CASE("iterated completion agrees with joint completion degreewise") {
  GradedRing r = ring2();
  WeightWindow w{0, 2};
  GradedModule m = GradedModule::make(r, {{0}}, {{pp(r, "x^2")}, {pp(r, "y^2")}}, "M");
  CompletionApproximation joint = gradedwise_completion(m, {pp(r, "x"), pp(r, "y")}, 6, w);
  CompletionApproximation first = gradedwise_completion(m, {pp(r, "x")}, 6, w);
  CompletionApproximation second =
      gradedwise_completion(first.stage_modules.back(), {pp(r, "y")}, 6, w);
  for (const Degree& g : joint.degrees) {
    REQUIRE(joint.flags.at(g).status == LimStatus::Stabilized);
    REQUIRE(second.flags.at(g).status == LimStatus::Stabilized);
    CHECK(joint.flags.at(g).value->same_invariants(*second.flags.at(g).value));
  }
}

TEST_CASE("completed tensor with a koszul complex") {
  GradedRing r = ring1();
  WeightWindow w{0, 2};
  GradedModule m = GradedModule::free_module(r, {{0}});
  KoszulData k = koszul_complex(r, {pp(r, "x")}, 1);
  CompletionApproximation c = completed_tensor(m, k.complex, {pp(r, "x")}, 6, w);
  CHECK(c.derived);
  // pi_0 of (M (x) K(x))^ at degree 0 is Z, and pi_1 telescopes away
  const TowerVerdict& v0 = c.pi_flags.at(0).at({0});
  CHECK(v0.status == LimStatus::Stabilized);
  CHECK(v0.value->invariant_string() == "Z");
  for (long d = 1; d <= 2; ++d) {
    const TowerVerdict& vd = c.pi_flags.at(0).at({d});
    CHECK(vd.status == LimStatus::Stabilized);
    CHECK(vd.value->is_zero());
  }
}
