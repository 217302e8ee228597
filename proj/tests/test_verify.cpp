#include <catch2/catch_amalgamated.hpp>

#include "ortho8/sweep.hpp"

using namespace ortho8;
using namespace ortho8::verify;
using gf::Elt;

namespace {

generators::GeneratorPair pair_of(generators::Family fam, std::uint32_t p, std::uint32_t f,
                                  std::optional<long long> a = std::nullopt,
                                  bool with_xi = false) {
  auto F = gf::field_make(p, f);
  std::optional<Elt> av, xv;
  if (a) av = F->from_int(*a);
  if (with_xi) xv = gf::find_nonsquare(F);
  return generators::build_pair(fam, F, av, xv);
}

}  // namespace

TEST_CASE("every applicable pointwise check is green on small pairs") {
  using generators::Family;
  std::vector<generators::GeneratorPair> pairs;
  auto F4 = gf::field_make(2, 2);
  for (std::uint32_t c = 2; c < 4; ++c)
    pairs.push_back(generators::build_pair(Family::kPlusEven, F4, F4->elt(c)));
  auto F8 = gf::field_make(2, 3);
  pairs.push_back(generators::build_pair(Family::kPlusEven, F8, F8->elt(2)));
  pairs.push_back(pair_of(Family::kPlusOdd, 5, 1, 1));
  pairs.push_back(pair_of(Family::kPlusOdd, 7, 1, 3));
  auto F9 = gf::field_make(3, 2);
  pairs.push_back(generators::build_pair(Family::kPlusOdd, F9, F9->elt(3)));
  pairs.push_back(pair_of(Family::kMinus2, 2, 1));
  pairs.push_back(generators::build_pair(Family::kMinusEven, F4, F4->elt(2)));
  pairs.push_back(pair_of(Family::kMinusOdd, 3, 1, 1, true));
  pairs.push_back(pair_of(Family::kMinusOdd, 5, 1, 1, true));
  pairs.push_back(pair_of(Family::kMinusOdd, 7, 1, 1, true));

  for (const auto& pair : pairs)
    for (const auto& def : registry()) {
      if (!def.pointwise || !check_applies(def, pair.family)) continue;
      CheckReport rep = run_pointwise(def, pair);
      INFO(rep.check_id << " [" << rep.params.str() << "]: " << rep.evidence);
      CHECK(rep.status != Status::kFail);
    }
}

TEST_CASE("the full symbolic battery is green") {
  for (const auto& def : registry()) {
    if (!def.symbolic) continue;
    for (std::uint32_t p : def.sym_primes) {
      CheckReport rep = run_symbolic(def, p);
      INFO(rep.check_id << " at p = " << p << ": " << rep.evidence);
      CHECK(rep.status == Status::kPass);
    }
  }
}

TEST_CASE("C2 case-1 orders reproduce the stated values") {
  const CheckDef* def = find_check("C2.case1-orders");
  REQUIRE(def != nullptr);
  struct Row {
    long long a;
    std::uint32_t q;
  };
  for (Row row : {Row{1, 5}, Row{-1, 5}, Row{1, 7}, Row{3, 7}, Row{-3, 7}, Row{-1, 7}}) {
    auto pair = pair_of(generators::Family::kPlusOdd, row.q, 1, row.a);
    CheckReport rep = run_pointwise(*def, pair);
    INFO(rep.params.str() << ": " << rep.evidence);
    CHECK(rep.status == Status::kPass);
  }
  // no stated fact at q = 9
  auto F9 = gf::field_make(3, 2);
  auto pair = generators::build_pair(generators::Family::kPlusOdd, F9, F9->elt(3));
  CHECK(run_pointwise(*def, pair).status == Status::kSkipped);
}

TEST_CASE("skips are exact and name the failed hypothesis") {
  // irr+2.detMbar applies only when a^2 = a + w
  auto F4 = gf::field_make(2, 2);
  auto pair = generators::build_pair(generators::Family::kPlusEven, F4, F4->elt(2));
  const CheckDef* def = find_check("irr+2.detMbar");
  CheckReport rep = run_pointwise(*def, pair);
  CHECK(rep.status == Status::kSkipped);
  CHECK(rep.evidence.find("a^2 = a + w") != std::string::npos);

  // and fires at q = 16 where the hypothesis has solutions
  auto F16 = gf::field_make(2, 4);
  Elt w16 = gf::cube_root_unity(F16);
  bool fired = false;
  for (std::uint32_t c = 0; c < 16 && !fired; ++c) {
    Elt a = F16->elt(c);
    if (!(a * a == a + w16)) continue;
    auto p16 = generators::build_pair(generators::Family::kPlusEven, F16, a);
    CheckReport r16 = run_pointwise(*def, p16);
    INFO(r16.evidence);
    CHECK(r16.status == Status::kPass);
    fired = true;
  }
  CHECK(fired);
}

TEST_CASE("spin dimension: scalars vs full algebra") {
  auto F = gf::field_make(2, 2);
  auto id = linalg::Mat<Elt>::identity(8, F->zero());
  CHECK(spin::spin_dimension(id, id).dimension == 1);
  auto pair = generators::build_pair(generators::Family::kPlusEven, F, F->elt(2));
  auto res = spin::spin_dimension(pair.x, pair.y);
  CHECK(res.dimension == 64);
  CHECK(res.basis_words.size() == 64);
  auto F5 = gf::field_make(5, 1);
  auto pm = generators::build_pair(generators::Family::kMinusOdd, F5, F5->elt(1), F5->elt(2));
  CHECK(spin::spin_dimension(pm.x, pm.y).dimension == 64);
}

TEST_CASE("prime sets of the orthogonal groups") {
  auto minus2 = primes::prime_set_omega(forms::Sign::kMinus, 2);
  CHECK(minus2 == std::set<std::uint64_t>{2, 3, 5, 7, 17});
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
    for (auto sign : {forms::Sign::kPlus, forms::Sign::kMinus}) {
      auto ps = primes::prime_set_omega(sign, q);
      CHECK(ps.count(2) == 1);
      CHECK(ps.count(3) == 1);
    }
  }
  // |Omega_8^+(2)| = 2^12 3^5 5^2 7: prime set {2,3,5,7}
  CHECK(primes::prime_set_omega(forms::Sign::kPlus, 2) == std::set<std::uint64_t>{2, 3, 5, 7});
}

TEST_CASE("generation evidence bundles") {
  auto F4 = gf::field_make(2, 2);
  auto reps = generation_evidence(generators::Family::kPlusEven, F4, F4->elt(2));
  std::size_t fails = 0;
  for (const auto& r : reps) {
    INFO(r.check_id << ": " << r.evidence);
    if (r.status == Status::kFail) ++fails;
  }
  CHECK(fails == 0);
  CHECK(reps.size() > 10);

  // q = 3 plus family is rejected (not (2,3)-generated)
  auto F3 = gf::field_make(3, 1);
  auto rej = generation_evidence(generators::Family::kPlusOdd, F3, F3->elt(1));
  REQUIRE(rej.size() == 1);
  CHECK(rej[0].status == Status::kRejected);

  // minus-odd at q = 3: Theorem main-odd covers it
  auto rep3 =
      generation_evidence(generators::Family::kMinusOdd, F3, F3->elt(1), gf::find_nonsquare(F3));
  std::size_t fails3 = 0;
  for (const auto& r : rep3) {
    INFO(r.check_id << ": " << r.evidence);
    if (r.status == Status::kFail) ++fails3;
  }
  CHECK(fails3 == 0);
}

TEST_CASE("carlitz field check") {
  for (std::uint32_t f = 1; f <= 6; ++f) {
    CheckReport rep = run_carlitz(gf::field_make(2, f));
    INFO("f = " << f << ": " << rep.evidence);
    CHECK(rep.status == Status::kPass);
  }
}

TEST_CASE("sweep planning, globs and determinism") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("irr+2.*", "irr+2.detM"));
  CHECK_FALSE(glob_match("irr+2.*", "irr+odd.psi"));
  CHECK(glob_match("*orders", "C2.case1-orders"));

  SweepConfig cfg;
  cfg.q_even_max = 4;
  cfg.q_odd_max = 5;
  cfg.checks = "pair.*";
  cfg.symbolic = false;
  cfg.jobs = 2;
  auto res1 = run_sweep(cfg);
  CHECK(res1.failed == 0);
  CHECK(res1.passed > 0);
  cfg.jobs = 7;
  auto res2 = run_sweep(cfg);
  REQUIRE(res1.reports.size() == res2.reports.size());
  for (std::size_t i = 0; i < res1.reports.size(); ++i) {
    CHECK(res1.reports[i].check_id == res2.reports[i].check_id);
    CHECK(res1.reports[i].params.str() == res2.reports[i].params.str());
    CHECK(res1.reports[i].status == res2.reports[i].status);
    CHECK(res1.reports[i].evidence == res2.reports[i].evidence);
  }
}

TEST_CASE("sampled sweeps are reproducible") {
  SweepConfig cfg;
  cfg.q_even_max = 8;
  cfg.q_odd_max = 7;
  cfg.sample = true;
  cfg.samples = 2;
  cfg.seed = 12345;
  cfg.checks = "pair.invariants";
  cfg.symbolic = false;
  auto res1 = run_sweep(cfg);
  auto res2 = run_sweep(cfg);
  REQUIRE(res1.reports.size() == res2.reports.size());
  for (std::size_t i = 0; i < res1.reports.size(); ++i)
    CHECK(res1.reports[i].params.str() == res2.reports[i].params.str());
  CHECK(res1.failed == 0);
}
