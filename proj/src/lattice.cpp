#include "sarkisov/lattice.hpp"

#include <algorithm>
#include <utility>

namespace sarkisov {

namespace {

constexpr std::size_t flat(std::size_t i, std::size_t j, std::size_t k) { return (i * 3 + j) * 3 + k; }

constexpr std::size_t idx(Generator g) { return static_cast<std::size_t>(g); }

}  // namespace

CubicForm3 CubicForm3::standard() {
  auto form = standard_without_e_squared();
  form.set(Generator::H1, Generator::E, Generator::E, -1);
  form.set(Generator::H2, Generator::E, Generator::E, -1);
  form.set(Generator::E, Generator::E, Generator::E, 2);
  return form;
}

CubicForm3 CubicForm3::standard_without_e_squared() {
  using enum Generator;
  CubicForm3 form;
  form.set(H1, H1, H2, 2);
  form.set(H1, H2, H2, 2);
  form.set(H1, H2, E, 1);
  form.set(H1, H1, E, 0);
  form.set(H2, H2, E, 0);
  form.set(H1, H1, H1, 0);
  form.set(H2, H2, H2, 0);
  return form;
}

std::int64_t CubicForm3::at(Generator i, Generator j, Generator k) const {
  return entries_[flat(idx(i), idx(j), idx(k))];
}

void CubicForm3::set(Generator i, Generator j, Generator k, std::int64_t value) {
  std::array<std::size_t, 3> p{idx(i), idx(j), idx(k)};
  std::sort(p.begin(), p.end());
  do {
    entries_[flat(p[0], p[1], p[2])] = value;
  } while (std::next_permutation(p.begin(), p.end()));
}

CubicForm3 CubicForm3::scaled(std::int64_t factor) const {
  CubicForm3 out = *this;
  for (auto& entry : out.entries_) entry *= factor;
  return out;
}

bool CubicForm3::symmetric() const {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        const auto v = entries_[flat(i, j, k)];
        if (v != entries_[flat(j, i, k)] || v != entries_[flat(i, k, j)] ||
            v != entries_[flat(k, j, i)]) {
          return false;
        }
      }
    }
  }
  return true;
}

LatticeVector LatticeVector::basis(Generator g) {
  LatticeVector v;
  v.coefficients[idx(g)] = Rational(1);
  return v;
}

LatticeVector operator+(const LatticeVector& lhs, const LatticeVector& rhs) {
  LatticeVector out;
  for (std::size_t i = 0; i < 3; ++i) out.coefficients[i] = lhs.coefficients[i] + rhs.coefficients[i];
  return out;
}

LatticeVector operator*(const Rational& scalar, const LatticeVector& v) {
  LatticeVector out;
  for (std::size_t i = 0; i < 3; ++i) out.coefficients[i] = scalar * v.coefficients[i];
  return out;
}

std::string LatticeVector::str() const {
  return "(" + coefficients[0].str() + "," + coefficients[1].str() + "," + coefficients[2].str() +
         ")";
}

Rational triple_product(const LatticeVector& u, const LatticeVector& v, const LatticeVector& w,
                        const CubicForm3& form) {
  static constexpr std::array<Generator, 3> gens{Generator::H1, Generator::H2, Generator::E};
  Rational total(0);
  for (auto i : gens) {
    if (u[i].is_zero()) continue;
    for (auto j : gens) {
      if (v[j].is_zero()) continue;
      for (auto k : gens) {
        const auto entry = form.at(i, j, k);
        if (entry == 0 || w[k].is_zero()) continue;
        total += u[i] * v[j] * w[k] * Rational(entry);
      }
    }
  }
  return total;
}

std::array<Rational, 3> solve3(std::array<std::array<Rational, 3>, 3> m, std::array<Rational, 3> rhs) {
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 3) {
      throw SingularSystem("intersection test system is singular");
    }
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < 3; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t c = col; c < 3; ++c) m[row][c] -= factor * m[col][c];
      rhs[row] -= factor * rhs[col];
    }
  }
  return {rhs[0] / m[0][0], rhs[1] / m[1][1], rhs[2] / m[2][2]};
}

std::array<std::array<Rational, 3>, 3> test_matrix(const CubicForm3& form) {
  using enum Generator;
  const std::array<std::pair<Generator, Generator>, 3> tests{{{H1, H1}, {H2, H2}, {H1, H2}}};
  std::array<std::array<Rational, 3>, 3> m;
  for (std::size_t r = 0; r < 3; ++r) {
    for (auto g : {H1, H2, E}) {
      m[r][idx(g)] = Rational(form.at(g, tests[r].first, tests[r].second));
    }
  }
  return m;
}

LatticeVector solve_by_test_curves(const CubicForm3& form, const std::array<Rational, 3>& rhs) {
  return LatticeVector{solve3(test_matrix(form), rhs)};
}

LatticeVector solve_contracted_divisor(const CubicForm3& form) {
  return solve_by_test_curves(form, {Rational(0), Rational(0), Rational(0)});
}

LatticeVector solve_involution_image(const CubicForm3& form) {
  using enum Generator;
  const auto e = LatticeVector::basis(E);
  const auto h1 = LatticeVector::basis(H1);
  const auto h2 = LatticeVector::basis(H2);
  return solve_by_test_curves(form, {triple_product(e, h1, h1, form),
                                     triple_product(e, h2, h2, form),
                                     triple_product(e, h1, h2, form)});
}

std::vector<DegreeSplit> degree_split(std::int64_t total) {
  if (total <= 0 || total % 3 != 0) {
    throw std::invalid_argument("degree total must be a positive multiple of 3, got " +
                                std::to_string(total));
  }
  const std::int64_t product = total / 3;  // s * (e1 + e2)
  std::vector<DegreeSplit> out;
  for (std::int64_t s = 1; s <= product; ++s) {
    if (product % s != 0) continue;
    const std::int64_t sum = product / s;
    for (std::int64_t e1 = 1; 2 * e1 <= sum; ++e1) {
      out.push_back({s, e1, sum - e1});
    }
  }
  return out;
}

std::vector<DegreeSplit> symmetric_degree_splits(std::int64_t total) {
  auto all = degree_split(total);
  std::erase_if(all, [](const DegreeSplit& s) { return s.e1 != s.e2; });
  return all;
}

BigInt intersection_from_cube(const BigInt& cube_value) {
  auto root = exact_icbrt(BigInt(-cube_value));
  if (!root) {
    throw std::domain_error("-(" + cube_value.str() + ") is not a perfect cube");
  }
  return *root;
}

}  // namespace sarkisov
