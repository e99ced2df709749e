#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "dwt/config.hpp"
#include "dwt/errors.hpp"
#include "dwt/group.hpp"

namespace dwt {

/// Complete table of irreducible complex characters. Row r, column c is
/// chi_r evaluated on the representative of class c. Rows are sorted by
/// (degree, value sequence), the trivial character first.
struct CharacterTable {
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<int> degrees;
  std::vector<std::vector<std::complex<double>>> values;  // rows = characters

  int num_classes() const { return static_cast<int>(class_reps.size()); }

  std::complex<double> at(int row, int element, const FiniteGroup& g) const {
    return values[row][g.class_of(element)];
  }
};

namespace detail {

// Deterministic comparison of value sequences: at the first position that
// differs beyond a snap grid, the value with larger real part (then larger
// imaginary part) sorts first. The all-ones row therefore leads degree 1.
inline bool char_row_less(const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b) {
  auto snap = [](double v) { return std::llround(v * 1e9); };
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ra = snap(a[i].real()), rb = snap(b[i].real());
    if (ra != rb) return ra > rb;
    auto ia = snap(a[i].imag()), ib = snap(b[i].imag());
    if (ia != ib) return ia > ib;
  }
  return false;
}

}  // namespace detail

/// Character table by simultaneous diagonalization of the class-sum algebra:
/// a random seeded combination of the class-sum multiplication matrices is
/// diagonalized; each eigenvector, normalized at the identity class, is the
/// vector of class-sum eigenvalues |C_i| chi(g_i)/deg of one character. If
/// eigenvalues fail to separate, a new random combination is tried.
inline CharacterTable character_table(const FiniteGroup& g,
                                      const EngineConfig& cfg = EngineConfig{}) {
  if (g.order() > cfg.max_char_order)
    throw ResourceError("character table requested for order " + std::to_string(g.order()) +
                        " above the configured cap " + std::to_string(cfg.max_char_order));
  const auto& classes = g.classes();
  const int k = static_cast<int>(classes.size());
  const int n = g.order();

  CharacterTable table;
  table.class_reps.resize(k);
  table.class_sizes.resize(k);
  for (int i = 0; i < k; ++i) {
    table.class_reps[i] = classes[i].representative;
    table.class_sizes[i] = static_cast<int>(classes[i].members.size());
  }

  const double tol = 1e-9;
  const int max_attempts = 32;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(cfg.seed * 1000003ULL + 0x9e3779b97f4a7c15ULL + attempt);
    std::vector<double> coeff(k);
    for (int i = 0; i < k; ++i)
      coeff[i] = 0.25 + static_cast<double>(rng() >> 11) / 9007199254740992.0;

    // M[j][t] = sum_i coeff[i] a_{ij}^t with a the class-sum structure
    // constants; built in one pass over all products.
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (int u = 0; u < n; ++u) {
      int cu = g.class_of(u);
      double w = coeff[cu];
      for (int v = 0; v < n; ++v)
        m(g.class_of(v), g.class_of(g.mul(u, v))) += w;
    }
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < k; ++t) m(j, t) /= table.class_sizes[t];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.cast<std::complex<double>>());
    if (solver.info() != Eigen::Success) continue;

    // require separated eigenvalues so eigenvectors are pure characters
    bool separated = true;
    double scale = 1.0;
    for (int i = 0; i < k; ++i) scale = std::max(scale, std::abs(solver.eigenvalues()(i)));
    for (int i = 0; i < k && separated; ++i)
      for (int j = i + 1; j < k; ++j)
        if (std::abs(solver.eigenvalues()(i) - solver.eigenvalues()(j)) < 1e-7 * scale) {
          separated = false;
          break;
        }
    if (!separated) continue;

    std::vector<std::vector<std::complex<double>>> rows;
    std::vector<int> degs;
    bool good = true;
    for (int col = 0; col < k && good; ++col) {
      Eigen::VectorXcd v = solver.eigenvectors().col(col);
      if (std::abs(v(0)) < 1e-10) {
        good = false;
        break;
      }
      v /= v(0);  // identity class has eigenvalue 1
      double inv_sq = 0;
      for (int i = 0; i < k; ++i) inv_sq += std::norm(v(i)) / table.class_sizes[i];
      double d = std::sqrt(static_cast<double>(n) / inv_sq);
      int deg = static_cast<int>(std::llround(d));
      if (deg < 1 || std::abs(d - deg) > 1e-6) {
        good = false;
        break;
      }
      std::vector<std::complex<double>> row(k);
      for (int i = 0; i < k; ++i)
        row[i] = v(i) * static_cast<double>(deg) / static_cast<double>(table.class_sizes[i]);
      rows.push_back(std::move(row));
      degs.push_back(deg);
    }
    if (!good) continue;

    long long deg_sq = 0;
    for (int d : degs) deg_sq += static_cast<long long>(d) * d;
    if (deg_sq != n) continue;

    // row orthonormality under the class-weighted inner product
    double worst = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        std::complex<double> ip = 0;
        for (int i = 0; i < k; ++i)
          ip += static_cast<double>(table.class_sizes[i]) * rows[a][i] * std::conj(rows[b][i]);
        ip /= static_cast<double>(n);
        worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
      }
    if (worst > tol) continue;

    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (degs[a] != degs[b]) return degs[a] < degs[b];
      return detail::char_row_less(rows[a], rows[b]);
    });
    for (int i : perm) {
      table.values.push_back(rows[i]);
      table.degrees.push_back(degs[i]);
    }
    for (int d : table.degrees)
      if (n % d != 0)
        throw NumericalError("irreducible degree does not divide the group order");
    return table;
  }
  throw NumericalError("class-sum diagonalization failed to separate characters for " +
                       g.name());
}

}  // namespace dwt
