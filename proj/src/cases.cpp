#include "sarkisov/cases.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>

namespace sarkisov {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_points(const std::vector<SolutionPair>& points) {
  if (points.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += points[i].str();
  }
  return out + "}";
}

std::string triple_str(const DiamondTriple& t) {
  return "(d=" + std::to_string(t.d) + ", h12=" + std::to_string(t.h12) +
         ", d1=" + std::to_string(t.d1) + ")";
}

/// Solutions surviving integrality (and a >= 0 when required), with a trail
/// step recording the full rational solution set.
struct SubcaseSolve {
  std::vector<SolutionPair> admissible;
  bool degenerate = false;
  TrailStep step;
};

SubcaseSolve solve_subcase(const DiophantineSystem& sys, bool require_nonnegative_a,
                           const std::string& label) {
  SubcaseSolve out;
  out.step.checks.push_back(sys.equations());
  auto set = solve_rational(sys);
  if (set.family) {
    out.degenerate = true;
    out.step.text = label + ": degenerate system, solution set is the line a = " +
                    set.family->intercept.str() + " + " + set.family->slope.str() + "*b";
    return out;
  }
  std::string filter = std::string(to_string(sys.integrality));
  if (require_nonnegative_a) filter += ", a >= 0";
  for (const auto& point : set.rational_points) {
    if (!respects(sys.integrality, point)) continue;
    if (require_nonnegative_a && point.a.sign() < 0) continue;
    out.admissible.push_back(point);
  }
  out.step.text = label + ": rational solutions " + join_points(set.rational_points) +
                  "; admissible (" + filter + ") " + join_points(out.admissible);
  return out;
}

struct PublishedCurveCase {
  std::int64_t d;
  int d1;
  FanoNumerics base;
  int genus;
  std::int64_t curve_degree;
  int link_id;
  SolutionPair printed;
};

// Printed data of the two conic x curve-blow-up links, including the printed
// (a, b) which is compared against the derived pair.
const std::vector<PublishedCurveCase>& published_curve_cases() {
  static const std::vector<PublishedCurveCase> cases{
      {18, 4, {64, 4, 0}, 2, 24, 11, {Rational(3), Rational(4)}},
      {22, 3, {54, 3, 0}, 0, 15, 14, {Rational(3), Rational(4)}},
  };
  return cases;
}

constexpr std::int64_t kConicConicDegree = 14;
constexpr int kConicConicDiscriminant = 5;
constexpr int kConicConicLink = 7;

const CurveBlowupSide kQuinticInP3{{64, 4, 0}, 0, 20};
constexpr std::int64_t kBirationalDegree = 22;
constexpr int kBirationalLink = 13;

}  // namespace

std::string describe(const LinkSide& side) {
  return std::visit(
      Overloaded{
          [](const ConicBundleSide& s) {
            return "conic bundle over P^2 (d1=" + std::to_string(s.d1) + ")";
          },
          [](const CurveBlowupSide& s) {
            return "blow-up of " + s.base.str() + " along a curve (g=" + std::to_string(s.genus) +
                   " dC=" + std::to_string(s.curve_degree) + ")";
          },
          [](const PointContractionSide& s) {
            return "divisor contracted to a point (kind " + std::string(to_string(s.kind.kind)) +
                   ")";
          },
          [](const CitedFibrationSide&) { return std::string("del Pezzo fibration"); },
      },
      side);
}

std::string_view to_string(LinkStatus status) {
  return status == LinkStatus::Derived ? "derived" : "cited";
}

std::int64_t conic_bundle_h12(int d1) {
  return static_cast<std::int64_t>(d1) * (d1 - 3) / 2;
}

std::set<int> admissible_discriminants(const Dataset& dataset) {
  const auto values = h12_values(std::nullopt, dataset);
  std::set<int> out;
  for (int d1 = 0; d1 <= 11; ++d1) {
    if (d1 == 1 || d1 == 2) continue;
    if (values.contains(static_cast<int>(conic_bundle_h12(d1)))) {
      out.insert(d1);
    }
  }
  return out;
}

std::vector<DiamondTriple> derive_diamond_list(const Dataset& dataset, int index) {
  const auto discriminants = admissible_discriminants(dataset);
  std::vector<DiamondTriple> out;
  for (const auto& row : master_table(dataset)) {
    if (row.index != index) continue;
    for (int d1 : discriminants) {
      if (conic_bundle_h12(d1) == row.h12) {
        out.push_back({row.d, row.h12, d1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CaseReport case_conic_times_point(const Dataset& dataset) {
  CaseReport report;
  for (const auto& triple : derive_diamond_list(dataset)) {
    for (const auto& kind : point_contraction_kinds()) {
      const auto sys =
          DiophantineSystem::make(triple.d, triple.d1, kind.k_d2_squared, kind.k2_d2);
      const std::string label =
          triple_str(triple) + " x point contraction " + std::string(to_string(kind.kind));
      auto solved = solve_subcase(sys, /*require_nonnegative_a=*/true, label);
      if (solved.degenerate) {
        report.unresolved.push_back(label);
      }
      for (const auto& point : solved.admissible) {
        LinkCandidate candidate{ConicBundleSide{triple.d1}, PointContractionSide{kind},
                                triple.d, triple.h12, sys, point, std::nullopt, {}, {}};
        candidate.trail.push_back(solved.step);
        report.candidates.push_back(std::move(candidate));
      }
      if (solved.admissible.empty() && !solved.degenerate) {
        solved.step.text += "; subcase emptied";
      }
      report.trail.push_back(std::move(solved.step));
    }
  }
  return report;
}

CaseReport case_conic_times_curve_blowup(const Dataset& dataset) {
  CaseReport report;
  report.trail.push_back({"bases restricted to smooth rank-1 rows with h12(Z) <= h12; "
                          "g2 = h12 - h12(Z), d2 = (e - 2 + 2 g2 - d) / 2",
                          {}});
  const auto bases = master_table(dataset);
  for (const auto& triple : derive_diamond_list(dataset)) {
    for (const auto& base : bases) {
      const std::string base_label = triple_str(triple) + " x base " + base.str();
      if (base.h12 > triple.h12) {
        continue;
      }
      const int genus = triple.h12 - base.h12;
      const std::int64_t twice_d2 = base.d - 2 + 2 * genus - triple.d;
      if (twice_d2 <= 0 || twice_d2 % 2 != 0) {
        report.trail.push_back({base_label + ": d2 = (" + std::to_string(base.d) + " - 2 + " +
                                    std::to_string(2 * genus) + " - " + std::to_string(triple.d) +
                                    ")/2 is not a positive integer; skipped",
                                {}});
        continue;
      }
      const std::int64_t d2 = twice_d2 / 2;
      const auto sys =
          DiophantineSystem::make(triple.d, triple.d1, 2 * genus - 2, d2 + 2 - 2 * genus);
      const std::string label = base_label + " g2=" + std::to_string(genus) +
                                " d2=" + std::to_string(d2);
      auto solved = solve_subcase(sys, /*require_nonnegative_a=*/true, label);
      solved.step.checks.push_back("d = e - 2 + 2 g2 - 2 d2: " + std::to_string(triple.d) +
                                   " = " + std::to_string(base.d) + " - 2 + " +
                                   std::to_string(2 * genus) + " - " + std::to_string(2 * d2));
      if (solved.degenerate) {
        report.unresolved.push_back(label);
      }
      for (const auto& point : solved.admissible) {
        const CurveBlowupSide right{base, genus, d2};
        LinkCandidate candidate{ConicBundleSide{triple.d1}, right, triple.d, triple.h12, sys,
                                point, std::nullopt, {}, {}};
        candidate.trail.push_back(solved.step);
        for (const auto& published : published_curve_cases()) {
          if (published.d != triple.d || published.d1 != triple.d1 || published.base != base ||
              published.genus != genus || published.curve_degree != d2) {
            continue;
          }
          candidate.link_id = published.link_id;
          if (published.printed != point) {
            const auto printed_residual = residuals(sys, published.printed);
            candidate.errata.push_back("published " + published.printed.str() + "; derived " +
                                       point.str());
            candidate.trail.push_back(
                {"published pair " + published.printed.str() + " leaves residuals (" +
                     printed_residual.quadratic.str() + ", " + printed_residual.linear.str() +
                     "); derived pair " + point.str() + " leaves (0, 0)",
                 {sys.equations()}});
          }
        }
        report.candidates.push_back(std::move(candidate));
      }
      report.trail.push_back(std::move(solved.step));
    }
  }
  return report;
}

CaseReport case_conic_times_conic(const Dataset& dataset) {
  CaseReport report;
  const auto discriminants = admissible_discriminants(dataset);
  const SolutionPair biregular{Rational(0), Rational(-1)};
  for (const auto& triple : derive_diamond_list(dataset)) {
    for (int d2 : discriminants) {
      const bool paired = d2 == triple.d1 || (std::min(d2, triple.d1) == 0 &&
                                              std::max(d2, triple.d1) == 3);
      if (!paired) continue;
      const auto sys = DiophantineSystem::make(triple.d, triple.d1, 2, 12 - d2);
      const std::string label = triple_str(triple) + " x conic bundle (d2=" +
                                std::to_string(d2) + ")";
      auto solved = solve_subcase(sys, /*require_nonnegative_a=*/false, label);
      if (solved.degenerate) {
        report.unresolved.push_back(label);
      }
      for (const auto& point : solved.admissible) {
        if (point == biregular) {
          solved.step.text += "; (0,-1) discarded: D1 = H1, the flop composition is biregular";
          continue;
        }
        LinkCandidate candidate{ConicBundleSide{triple.d1}, ConicBundleSide{d2}, triple.d,
                                triple.h12, sys, point, std::nullopt, {}, {}};
        if (triple.d == kConicConicDegree && triple.d1 == kConicConicDiscriminant &&
            d2 == kConicConicDiscriminant) {
          candidate.link_id = kConicConicLink;
        }
        candidate.trail.push_back(solved.step);
        report.candidates.push_back(std::move(candidate));
      }
      report.trail.push_back(std::move(solved.step));
    }
  }
  return report;
}

CaseReport case_birational_times_birational(const Dataset& dataset, BirationalBounds bounds) {
  const auto bases = master_table(dataset);
  std::int64_t largest_e = 0;
  for (const auto& row : bases) largest_e = std::max(largest_e, row.d);
  if (bounds.g_max < 0 || bounds.dc_max < 1) {
    throw std::invalid_argument("birational search needs g_max >= 0 and dc_max >= 1");
  }
  if (bounds.g_max > 10 * largest_e || bounds.dc_max > 10 * largest_e) {
    throw std::invalid_argument("bound too large: g_max and dc_max must be <= " +
                                std::to_string(10 * largest_e));
  }

  CaseReport report;
  report.trail.push_back({"search bounds g <= " + std::to_string(bounds.g_max) +
                              ", dC <= " + std::to_string(bounds.dc_max) +
                              " (engineering defaults, not forced by the numerics)",
                          {}});
  report.trail.push_back({"singular rank-1 bases are not enumerated; that branch is closed by a "
                          "non-numerical argument",
                          {}});
  report.trail.push_back({"output is a candidate list; pruning against external link tables is "
                          "not performed",
                          {}});

  struct Side {
    CurveBlowupSide side;
    std::int64_t d;
    int h12;
  };
  std::map<std::int64_t, std::vector<Side>> by_degree;
  for (const auto& base : bases) {
    for (int g = 0; g <= bounds.g_max; ++g) {
      for (std::int64_t dc = 1; dc <= bounds.dc_max; ++dc) {
        const std::int64_t d = base.d - 2 + 2 * g - 2 * dc;
        if (d <= 0) break;
        const auto row = find_row(d, 1, dataset);
        if (!row || row->h12 != base.h12 + g) continue;
        by_degree[d].push_back({CurveBlowupSide{base, g, dc}, d, row->h12});
      }
    }
  }

  for (auto& [d, sides] : by_degree) {
    std::sort(sides.begin(), sides.end(),
              [](const Side& lhs, const Side& rhs) { return lhs.side < rhs.side; });
    for (std::size_t i = 0; i < sides.size(); ++i) {
      for (std::size_t j = i; j < sides.size(); ++j) {
        const auto& left = sides[i];
        const auto& right = sides[j];
        LinkCandidate candidate{left.side, right.side, d,           left.h12,
                                std::nullopt, std::nullopt, std::nullopt, {}, {}};
        TrailStep step;
        step.text = "curve blow-ups on both sides pass every numerical constraint";
        for (const auto* s : {&left.side, &right.side}) {
          step.checks.push_back("d = e - 2 + 2g - 2dC: " + std::to_string(d) + " = " +
                                std::to_string(s->base.d) + " - 2 + " +
                                std::to_string(2 * s->genus) + " - " +
                                std::to_string(2 * s->curve_degree));
          step.checks.push_back("h12 = h12(Z) + g: " + std::to_string(left.h12) + " = " +
                                std::to_string(s->base.h12) + " + " + std::to_string(s->genus));
        }
        step.checks.push_back("d > 0 and (" + std::to_string(d) + ",1," +
                              std::to_string(left.h12) + ") is a table row");
        candidate.trail.push_back(std::move(step));
        if (d == kBirationalDegree && left.side == kQuinticInP3 && right.side == kQuinticInP3) {
          candidate.link_id = kBirationalLink;
          candidate.trail.push_back(
              {"Z1 = Z2 = P^3, curves of degree dC / 4 = 5 and genus 0", {}});
        }
        report.candidates.push_back(std::move(candidate));
      }
    }
  }
  report.trail.push_back(
      {std::to_string(report.candidates.size()) + " candidate pairs survive", {}});
  return report;
}

std::vector<LinkRow> assemble_classification(const Dataset& dataset, BirationalBounds bounds,
                                             unsigned jobs) {
  std::vector<std::function<CaseReport()>> analyses{
      [&] { return case_conic_times_point(dataset); },
      [&] { return case_conic_times_curve_blowup(dataset); },
      [&] { return case_conic_times_conic(dataset); },
      [&] { return case_birational_times_birational(dataset, bounds); },
  };
  std::vector<CaseReport> reports;
  if (jobs > 1) {
    std::vector<std::future<CaseReport>> pending;
    for (auto& analysis : analyses) {
      pending.push_back(std::async(std::launch::async, analysis));
    }
    for (auto& future : pending) reports.push_back(future.get());
  } else {
    for (auto& analysis : analyses) reports.push_back(analysis());
  }

  std::map<int, LinkRow> rows;
  for (const auto& report : reports) {
    for (const auto& candidate : report.candidates) {
      if (!candidate.link_id) continue;
      const int id = *candidate.link_id;
      if (rows.contains(id)) {
        throw InconsistencyError("link " + std::to_string(id) + " derived twice");
      }
      rows[id] = LinkRow{id,
                         LinkStatus::Derived,
                         FanoNumerics{candidate.d, 1, candidate.h12},
                         describe(candidate.left),
                         describe(candidate.right),
                         candidate.solution,
                         candidate.errata,
                         std::nullopt,
                         candidate.trail};
    }
  }
  for (int id : {kConicConicLink, 11, kBirationalLink, 14}) {
    if (!rows.contains(id)) {
      throw InconsistencyError("derived link " + std::to_string(id) +
                               " not produced by the case analyses");
    }
  }
  for (const auto& cited : dataset.cited_links) {
    if (rows.contains(cited.link_id)) {
      throw InconsistencyError("link " + std::to_string(cited.link_id) +
                               " is both cited and derived");
    }
    rows[cited.link_id] = LinkRow{cited.link_id,
                                  LinkStatus::Cited,
                                  cited.numerics,
                                  describe(CitedFibrationSide{cited.link_id}),
                                  "per citation",
                                  std::nullopt,
                                  {},
                                  cited.citation,
                                  {{"cited: " + cited.citation, {}}}};
  }
  std::vector<LinkRow> out;
  for (auto& [id, row] : rows) out.push_back(std::move(row));
  if (out.size() != 17 || out.front().link_id != 1 || out.back().link_id != 17) {
    throw InconsistencyError("link ids do not form {1,...,17} (got " + std::to_string(out.size()) +
                             " rows)");
  }
  return out;
}

}  // namespace sarkisov
