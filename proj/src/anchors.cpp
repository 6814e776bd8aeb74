#include "sarkisov/anchors.hpp"

#include <algorithm>

#include "sarkisov/lattice.hpp"

namespace sarkisov {

namespace {

AnchorCheck make(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

const LinkCandidate* find_link(const CaseReport& report, int link_id) {
  for (const auto& candidate : report.candidates) {
    if (candidate.link_id == link_id) return &candidate;
  }
  return nullptr;
}

bool residuals_vanish(const LinkCandidate& candidate) {
  return candidate.system && candidate.solution &&
         residuals(*candidate.system, *candidate.solution).zero();
}

}  // namespace

bool all_passed(const AnchorChecks& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

AnchorChecks check_discriminants(const std::set<int>& discriminants) {
  const std::set<int> published{0, 3, 4, 5, 7, 8};
  return {make("admissible discriminant degrees are {0,3,4,5,7,8}", discriminants == published,
               std::to_string(discriminants.size()) + " values")};
}

AnchorChecks check_diamond(const std::vector<DiamondTriple>& diamond) {
  const std::vector<DiamondTriple> published{
      {6, 20, 8}, {8, 14, 7}, {14, 5, 5}, {18, 2, 4}, {22, 0, 0}, {22, 0, 3}};
  return {make("(d,h12,d1) list equals the six published triples", diamond == published,
               std::to_string(diamond.size()) + " triples")};
}

AnchorChecks check_conic_point(const CaseReport& report) {
  return {
      make("conic x point: 18 subcases examined", report.trail.size() == 18,
           std::to_string(report.trail.size()) + " subcases"),
      make("conic x point: no admissible (a,b) in any subcase",
           report.candidates.empty() && report.unresolved.empty(),
           std::to_string(report.candidates.size()) + " candidates"),
  };
}

AnchorChecks check_conic_curve(const CaseReport& report) {
  AnchorChecks checks;
  checks.push_back(make("conic x curve blow-up: exactly two candidates",
                        report.candidates.size() == 2 && report.unresolved.empty(),
                        std::to_string(report.candidates.size()) + " candidates"));

  const auto* first = find_link(report, 11);
  bool first_ok = first != nullptr && first->d == 18 && first->h12 == 2 &&
                  first->solution == SolutionPair{Rational(3), Rational(4)} &&
                  residuals_vanish(*first) && first->errata.empty();
  checks.push_back(make("case (I): d=18, d1=4, Z=P^3, g2=2, d2=24, (a,b)=(3,4)", first_ok,
                        first ? describe(first->right) : "missing"));

  const auto* second = find_link(report, 14);
  bool second_ok = second != nullptr && second->d == 22 && second->h12 == 0 &&
                   std::get<ConicBundleSide>(second->left).d1 == 3 &&
                   residuals_vanish(*second) && !second->errata.empty();
  checks.push_back(make("case (II): d=22, d1=3, Z=quadric, g2=0, d2=15, erratum on (a,b)",
                        second_ok, second ? describe(second->right) : "missing"));
  return checks;
}

AnchorChecks check_conic_conic(const CaseReport& report) {
  const auto* link = find_link(report, 7);
  const bool ok = report.candidates.size() == 1 && report.unresolved.empty() && link != nullptr &&
                  link->d == 14 && link->solution == SolutionPair{Rational(1), Rational(1)} &&
                  residuals_vanish(*link);
  return {make("conic x conic: single survivor d=14, d1=d2=5, (a,b)=(1,1)", ok,
               std::to_string(report.candidates.size()) + " candidates")};
}

AnchorChecks check_birational(const CaseReport& report) {
  const auto* link = find_link(report, 13);
  return {make("birational x birational: contains P^3 x P^3 with quintic curves, d=22",
               link != nullptr && link->d == 22,
               std::to_string(report.candidates.size()) + " candidates")};
}

AnchorChecks check_lattice() {
  using enum Generator;
  const auto form = CubicForm3::standard();
  const auto h1 = LatticeVector::basis(H1);
  const auto h2 = LatticeVector::basis(H2);
  const auto e = LatticeVector::basis(E);
  AnchorChecks checks;

  const auto anticanonical = h1 + h2;
  const auto degree = triple_product(anticanonical, anticanonical, anticanonical, form);
  checks.push_back(make("(h1+h2)^3 = 12", degree == Rational(12), degree.str()));

  const bool products = triple_product(h1, h1, h2, form) == Rational(2) &&
                        triple_product(h1, h2, h2, form) == Rational(2) &&
                        triple_product(h1, h2, e, form) == Rational(1) &&
                        triple_product(h1, h1, e, form) == Rational(0) &&
                        triple_product(h2, h2, e, form) == Rational(0);
  checks.push_back(make("h1^2.h2 = h1.h2^2 = 2, h1.h2.E = 1, h1^2.E = h2^2.E = 0", products, ""));

  const auto contracted = solve_contracted_divisor(form);
  checks.push_back(make("contracted divisor (a1,a2,a3) = (0,0,0)",
                        contracted == LatticeVector{}, contracted.str()));

  const auto image = solve_involution_image(form);
  checks.push_back(make("involution image (b1,b2,b3) = (0,0,1)", image == e, image.str()));

  const auto splits = symmetric_degree_splits(12);
  const bool split_ok = std::find(splits.begin(), splits.end(), DegreeSplit{1, 2, 2}) != splits.end() &&
                        std::find(splits.begin(), splits.end(), DegreeSplit{2, 1, 1}) != splits.end();
  checks.push_back(make("12 = 3 deg(sigma)(e1+e2) admits (1,2,2) and (2,1,1)", split_ok,
                        std::to_string(splits.size()) + " symmetric splits"));

  const auto cube = anticanonical_minus_h_cubed(14, 5);
  checks.push_back(make("(-K-H)^3 = -1 for d=14, d1=5", cube == -1, std::to_string(cube)));

  bool dc_ok = false;
  std::string dc_detail;
  try {
    const auto dc = intersection_from_cube(BigInt(cube));
    dc_ok = dc == 1;
    dc_detail = dc.str();
  } catch (const std::domain_error& err) {
    dc_detail = err.what();
  }
  checks.push_back(make("D2.C2 = 1 by exact cube root", dc_ok, dc_detail));
  return checks;
}

AnchorChecks check_classification(const std::vector<LinkRow>& rows) {
  AnchorChecks checks;
  std::vector<int> ids;
  std::vector<int> derived;
  for (const auto& row : rows) {
    ids.push_back(row.link_id);
    if (row.status == LinkStatus::Derived) derived.push_back(row.link_id);
  }
  std::vector<int> expected(17);
  for (int i = 0; i < 17; ++i) expected[i] = i + 1;
  checks.push_back(make("exactly 17 link types with ids 1..17", ids == expected,
                        std::to_string(rows.size()) + " rows"));
  checks.push_back(make("links 7, 11, 13, 14 derived; the rest cited",
                        derived == std::vector<int>{7, 11, 13, 14}, ""));
  return checks;
}

}  // namespace sarkisov
