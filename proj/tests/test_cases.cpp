#include <doctest.h>

#include <set>

#include "sarkisov/cases.hpp"
#include "sarkisov/oracle.hpp"

using namespace sarkisov;

namespace {

SolutionPair pair(std::int64_t a, std::int64_t b) { return {Rational(a), Rational(b)}; }

const std::vector<DiamondTriple> kDiamond{
    {6, 20, 8}, {8, 14, 7}, {14, 5, 5}, {18, 2, 4}, {22, 0, 0}, {22, 0, 3}};

}  // namespace

TEST_CASE("admissible discriminant degrees") {
  CHECK(admissible_discriminants() == std::set<int>{0, 3, 4, 5, 7, 8});
  CHECK(conic_bundle_h12(6) == 9);
  CHECK_FALSE(h12_values().contains(9));
  CHECK(conic_bundle_h12(3) == 0);
  CHECK(conic_bundle_h12(11) == 44);
}

TEST_CASE("diamond list") {
  CHECK(derive_diamond_list() == kDiamond);
  CHECK(derive_diamond_list() == derive_diamond_list());
  for (const auto& t : derive_diamond_list()) CHECK(t.d != 2);

  // Index-2 rows: h12 in {21, 10, 5, 2, 0}; only 5 (d1=5), 2 (d1=4), 0 (d1=0,3) are hit.
  const std::vector<DiamondTriple> index_two{{24, 5, 5}, {32, 2, 4}, {40, 0, 0}, {40, 0, 3}};
  CHECK(derive_diamond_list(default_dataset(), 2) == index_two);
}

TEST_CASE("conic bundle against a point contraction is empty in every subcase") {
  const auto report = case_conic_times_point();
  CHECK(report.candidates.empty());
  CHECK(report.unresolved.empty());
  REQUIRE(report.trail.size() == 18);
  for (const auto& step : report.trail) {
    CHECK(step.text.find("subcase emptied") != std::string::npos);
    CHECK(step.checks.size() == 1);
  }
  // The only integral root among all 18 subcases has a < 0.
  const auto sys = DiophantineSystem::make(6, 8, -2, 2);
  CHECK(solve_system(sys) == std::vector<SolutionPair>{pair(-1, -2)});

  // Independent check of every subcase with the lattice scan.
  for (const auto& t : kDiamond) {
    for (const auto& kind : point_contraction_kinds()) {
      for (const auto& p :
           brute_force_oracle(DiophantineSystem::make(t.d, t.d1, kind.k_d2_squared, kind.k2_d2), 100)) {
        CHECK(p.a.sign() < 0);
      }
    }
  }
}

TEST_CASE("subcase d=22, d1=3, kind A records its rational solution set") {
  const auto report = case_conic_times_point();
  const auto it = std::find_if(report.trail.begin(), report.trail.end(), [](const TrailStep& s) {
    return s.text.find("(d=22, h12=0, d1=3) x point contraction A") == 0;
  });
  REQUIRE(it != report.trail.end());
  CHECK(it->checks.front() == "22a^2 - 18ab + 2b^2 = -2; 22a - 9b = 4");
  CHECK(it->text.find("rational solutions") != std::string::npos);
}

TEST_CASE("conic bundle against a curve blow-up") {
  const auto report = case_conic_times_curve_blowup();
  CHECK(report.unresolved.empty());
  REQUIRE(report.candidates.size() == 2);

  const auto& first = report.candidates[0];
  CHECK(first.d == 18);
  CHECK(std::get<ConicBundleSide>(first.left).d1 == 4);
  CHECK(std::get<CurveBlowupSide>(first.right) == CurveBlowupSide{{64, 4, 0}, 2, 24});
  CHECK(first.solution == pair(3, 4));
  CHECK(first.link_id == 11);
  CHECK(first.errata.empty());

  const auto& second = report.candidates[1];
  CHECK(second.d == 22);
  CHECK(std::get<ConicBundleSide>(second.left).d1 == 3);
  CHECK(std::get<CurveBlowupSide>(second.right) == CurveBlowupSide{{54, 3, 0}, 0, 15});
  CHECK(second.solution == pair(2, 3));
  CHECK(second.link_id == 14);
  REQUIRE(second.errata.size() == 1);
  CHECK(second.errata.front() == "published (3,4); derived (2,3)");

  for (const auto& c : report.candidates) {
    CHECK(residuals(*c.system, *c.solution).zero());
  }

  const auto skipped = std::find_if(report.trail.begin(), report.trail.end(), [](auto& s) {
    return s.text.find("(d=22, h12=0, d1=3) x base (22,1,0)") == 0;
  });
  REQUIRE(skipped != report.trail.end());
  CHECK(skipped->text.find("skipped") != std::string::npos);
}

TEST_CASE("two conic bundles") {
  const auto report = case_conic_times_conic();
  REQUIRE(report.candidates.size() == 1);
  const auto& c = report.candidates.front();
  CHECK(c.d == 14);
  CHECK(std::get<ConicBundleSide>(c.left).d1 == 5);
  CHECK(std::get<ConicBundleSide>(c.right).d1 == 5);
  CHECK(c.solution == pair(1, 1));
  CHECK(c.link_id == 7);

  // (0,-1) is found and discarded whenever d2 = d1.
  int discarded = 0;
  for (const auto& step : report.trail) {
    if (step.text.find("(0,-1) discarded") != std::string::npos) ++discarded;
  }
  CHECK(discarded == 6);
  CHECK(report.trail.size() == 8);

  CHECK(brute_force_oracle(DiophantineSystem::make(22, 0, 2, 12), 100) ==
        std::vector<SolutionPair>{pair(0, -1)});
  CHECK(solve_system(DiophantineSystem::make(22, 0, 2, 9)).empty());
  CHECK(solve_rational(DiophantineSystem::make(22, 0, 2, 9)).rational_points.empty());
}

TEST_CASE("birational pairs contain the two quintic-curve blow-ups of P^3") {
  const auto report = case_birational_times_birational(default_dataset(), {20, 64});
  const CurveBlowupSide quintic{{64, 4, 0}, 0, 20};
  int found = 0;
  for (const auto& c : report.candidates) {
    CHECK(c.d > 0);
    CHECK(c.d % 2 == 0);
    CHECK(find_row(c.d, 1).has_value());
    const auto& left = std::get<CurveBlowupSide>(c.left);
    const auto& right = std::get<CurveBlowupSide>(c.right);
    CHECK_FALSE(right < left);
    for (const auto* side : {&left, &right}) {
      CHECK(side->base.d - 2 + 2 * side->genus - 2 * side->curve_degree == c.d);
      CHECK(side->base.h12 + side->genus == c.h12);
    }
    CHECK_FALSE(c.trail.empty());
    CHECK(c.trail.front().checks.size() == 5);
    if (left == quintic && right == quintic) {
      ++found;
      CHECK(c.d == 22);
      CHECK(c.link_id == 13);
    }
  }
  CHECK(found == 1);
}

TEST_CASE("birational search with tiny bounds finds nothing") {
  CHECK(case_birational_times_birational(default_dataset(), {0, 1}).candidates.empty());
}

TEST_CASE("birational search bound checks") {
  CHECK_THROWS_AS(case_birational_times_birational(default_dataset(), {-1, 64}),
                  std::invalid_argument);
  CHECK_THROWS_AS(case_birational_times_birational(default_dataset(), {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(case_birational_times_birational(default_dataset(), {20, 641}),
                       doctest::Contains("bound too large"), std::invalid_argument);
  CHECK_NOTHROW(case_birational_times_birational(default_dataset(), {20, 640}));
}

TEST_CASE("birational output is invariant under swapping sides") {
  const auto report = case_birational_times_birational();
  std::set<std::pair<std::string, std::string>> unordered;
  for (const auto& c : report.candidates) {
    auto l = describe(c.left);
    auto r = describe(c.right);
    CHECK(unordered.insert(std::minmax(l, r)).second);
  }
}

TEST_CASE("assembled classification") {
  const auto rows = assemble_classification();
  REQUIRE(rows.size() == 17);
  for (int i = 0; i < 17; ++i) CHECK(rows[i].link_id == i + 1);
  std::set<int> derived;
  for (const auto& row : rows) {
    if (row.status == LinkStatus::Derived) {
      derived.insert(row.link_id);
      CHECK(row.solution.has_value() == (row.link_id != 13));
      CHECK_FALSE(row.trail.empty());
    } else {
      CHECK(row.citation.has_value());
    }
  }
  CHECK(derived == std::set<int>{7, 11, 13, 14});
  CHECK(rows[6].numerics == FanoNumerics{14, 1, 5});
  CHECK(rows[15].numerics == FanoNumerics{40, 2, 0});
  CHECK(rows[16].numerics == FanoNumerics{54, 3, 0});
}

TEST_CASE("classification fails loudly on a dataset that loses a derived link") {
  Dataset broken = default_dataset();
  std::erase_if(broken.fano_rows, [](const FanoNumerics& r) { return r.d == 64; });
  CHECK_THROWS_AS(assemble_classification(broken), InconsistencyError);

  Dataset extra = default_dataset();
  extra.cited_links.push_back({7, "duplicate", false, std::nullopt});
  CHECK_THROWS_AS(assemble_classification(extra), InconsistencyError);
}
