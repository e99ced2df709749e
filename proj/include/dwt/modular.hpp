#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "dwt/character.hpp"
#include "dwt/cochain.hpp"
#include "dwt/config.hpp"
#include "dwt/errors.hpp"
#include "dwt/group.hpp"

namespace dwt {

using Complex = std::complex<double>;

/// A simple object of the (twisted) Drinfeld center: a conjugacy class
/// together with a theta-projective irreducible character of the
/// centralizer of its representative.
struct SimpleObject {
  int class_index = 0;
  int class_rep = 0;
  int class_size = 1;
  int degree = 1;
  long long quantum_dim = 1;       // |class| * degree
  std::int64_t projective_order = 1;  // root order N of the transgressed cocycle
  std::shared_ptr<const Subgroup> centralizer;
  std::vector<Complex> character;  // on centralizer local elements

  Complex character_at_parent(int parent_elem) const {
    int l = centralizer->local_index(parent_elem);
    return l < 0 ? Complex(0, 0) : character[l];
  }
};

struct ModularCheck {
  std::string name;
  double residual = 0;
  double threshold = 0;
  bool pass = true;
};

struct ModularChecks {
  std::vector<ModularCheck> checks;

  double max_residual() const {
    double r = 0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const ModularCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

/// S and T matrices, quantum dimensions and Verlinde fusion coefficients of
/// the twisted Drinfeld center of (G, omega). Construction enforces every
/// modular invariant at the configured tolerance and throws rather than
/// returning questionable data.
class ModularData {
public:
  static ModularData build(const GroupPtr& group, const Cochain& omega,
                           const EngineConfig& cfg = EngineConfig{}) {
    ModularData d(group, cfg);
    d.construct(omega);
    return d;
  }

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int size() const { return static_cast<int>(simples_.size()); }
  const std::vector<SimpleObject>& simples() const { return simples_; }
  const Eigen::MatrixXcd& s_matrix() const { return s_; }
  const std::vector<Complex>& t_matrix() const { return t_; }

  long long fusion(int i, int j, int k) const {
    int n = size();
    return fusion_[(static_cast<std::size_t>(i) * n + j) * n + k];
  }

  std::vector<long long> quantum_dimensions() const {
    std::vector<long long> d;
    d.reserve(simples_.size());
    for (const auto& s : simples_) d.push_back(s.quantum_dim);
    return d;
  }

  /// Charge conjugation permutation (from S^2).
  const std::vector<int>& conjugation() const { return conj_perm_; }

  const ModularChecks& checks() const { return checks_; }

  /// Verlinde dimension sum_a (S_{0a})^(2-2g), before integer rounding.
  double verlinde_dimension(int genus) const {
    double total = 0;
    for (int a = 0; a < size(); ++a)
      total += std::pow(s_(0, a).real(), 2.0 - 2.0 * genus);
    return total;
  }

private:
  ModularData(GroupPtr group, EngineConfig cfg) : group_(std::move(group)), cfg_(cfg) {}

  void construct(const Cochain& omega) {
    const FiniteGroup& g = *group_;
    if (omega.group().order() != g.order())
      throw UsageError("cocycle and group sizes do not match");
    if (!omega.is_unit() && !g.is_abelian())
      throw ScopeError(
          "twisted doubles of nonabelian groups are outside the supported scope; "
          "use the unit cocycle or an abelian group");
    {
      CocycleCheck chk = is_cocycle(omega);
      if (!chk.ok) throw UsageError("the supplied 3-cochain is not a cocycle");
    }
    build_simples(omega);
    build_t();
    build_s();
    build_fusion();
    checks_ = run_checks();
    if (!checks_.pass()) {
      const ModularCheck* f = checks_.first_failure();
      throw NumericalError("modularity violation in check '" + f->name +
                           "' (residual " + std::to_string(f->residual) + ")");
    }
  }

  void build_simples(const Cochain& omega) {
    const FiniteGroup& g = *group_;
    for (int ci = 0; ci < static_cast<int>(g.classes().size()); ++ci) {
      const ConjugacyClass& cl = g.classes()[ci];
      TransgressedCocycle theta = transgress(omega, cl.representative, cfg_);
      std::vector<SimpleObject> sector =
          projective_simples(ci, cl, theta);
      std::sort(sector.begin(), sector.end(), [](const SimpleObject& a, const SimpleObject& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return detail::char_row_less(a.character, b.character);
      });
      for (auto& s : sector) simples_.push_back(std::move(s));
    }
    long long sq = 0;
    for (const auto& s : simples_) sq += s.quantum_dim * s.quantum_dim;
    long long expect = static_cast<long long>(g.order()) * g.order();
    if (sq != expect)
      throw NumericalError("sum of squared quantum dimensions is " + std::to_string(sq) +
                           ", expected " + std::to_string(expect));
  }

  // Projective irreducibles of the centralizer via the central-extension
  // trick: ordinary irreducibles of the extension mu_N x H with twisted
  // multiplication, keeping the rows where the central mu_N acts by the
  // standard primitive character.
  std::vector<SimpleObject> projective_simples(int class_index, const ConjugacyClass& cl,
                                               const TransgressedCocycle& theta) {
    const Subgroup& cz = *theta.centralizer;
    const int m = cz.size();
    std::vector<SimpleObject> out;
    const std::int64_t n_ext = theta.phase_order();
    if (n_ext == 1) {
      CharacterTable ct = character_table(cz.as_group(), cfg_);
      for (int r = 0; r < ct.num_classes(); ++r) {
        SimpleObject s;
        s.class_index = class_index;
        s.class_rep = cl.representative;
        s.class_size = static_cast<int>(cl.members.size());
        s.degree = ct.degrees[r];
        s.quantum_dim = static_cast<long long>(s.class_size) * s.degree;
        s.projective_order = 1;
        s.centralizer = theta.centralizer;
        s.character.resize(m);
        for (int h = 0; h < m; ++h) s.character[h] = ct.at(r, h, cz.as_group());
        out.push_back(std::move(s));
      }
      return out;
    }

    long long ext_order = n_ext * m;
    if (ext_order > cfg_.max_char_order)
      throw ResourceError("central extension of order " + std::to_string(ext_order) +
                          " exceeds the character-table cap");
    // element (j, h) has index j*m + h; identity (0, e) is index 0
    const FiniteGroup& local = cz.as_group();
    int eo = static_cast<int>(ext_order);
    std::vector<std::uint16_t> table(static_cast<std::size_t>(eo) * eo);
    for (int j1 = 0; j1 < n_ext; ++j1)
      for (int h1 = 0; h1 < m; ++h1)
        for (int j2 = 0; j2 < n_ext; ++j2)
          for (int h2 = 0; h2 < m; ++h2) {
            std::int64_t j = (j1 + j2 + theta.at(h1, h2).numerator_at_order(n_ext)) % n_ext;
            int h = local.mul(h1, h2);
            table[static_cast<std::size_t>(j1 * m + h1) * eo + (j2 * m + h2)] =
                static_cast<std::uint16_t>(j * m + h);
          }
    FiniteGroup ext("ext(" + std::to_string(n_ext) + "," + local.name() + ")", eo,
                    std::move(table), cfg_);
    CharacterTable ct = character_table(ext, cfg_);
    const Complex zeta = Phase(1, n_ext).value();
    const int central_one = 1 * m + 0;  // (1, e)
    long long kept_sq = 0;
    for (int r = 0; r < ct.num_classes(); ++r) {
      Complex ratio = ct.at(r, central_one, ext) / static_cast<double>(ct.degrees[r]);
      if (std::abs(ratio - zeta) > 1e-6) continue;
      SimpleObject s;
      s.class_index = class_index;
      s.class_rep = cl.representative;
      s.class_size = static_cast<int>(cl.members.size());
      s.degree = ct.degrees[r];
      s.quantum_dim = static_cast<long long>(s.class_size) * s.degree;
      s.projective_order = n_ext;
      s.centralizer = theta.centralizer;
      s.character.resize(m);
      for (int h = 0; h < m; ++h) s.character[h] = ct.at(r, 0 * m + h, ext);
      kept_sq += static_cast<long long>(s.degree) * s.degree;
      out.push_back(std::move(s));
    }
    if (kept_sq != m)
      throw NumericalError("projective character sector has wrong total dimension");
    return out;
  }

  void build_t() {
    t_.resize(simples_.size());
    for (std::size_t a = 0; a < simples_.size(); ++a) {
      const SimpleObject& s = simples_[a];
      int local_rep = s.centralizer->local_index(s.class_rep);
      t_[a] = s.character[local_rep] / static_cast<double>(s.degree);
    }
  }

  // S_{ab} = (1/(|C(x_a)||C(x_b)|)) * sum over g with x_a commuting with
  // g x_b g^-1 of conj(chi_a(g x_b g^-1)) * conj(chi_b(g^-1 x_a g)).
  // Every entry is computed independently; symmetry is verified, not assumed.
  void build_s() {
    const FiniteGroup& g = *group_;
    const int n = size();
    s_.resize(n, n);
    for (int a = 0; a < n; ++a) {
      const SimpleObject& sa = simples_[a];
      for (int b = 0; b < n; ++b) {
        const SimpleObject& sb = simples_[b];
        Complex acc(0, 0);
        for (int u = 0; u < g.order(); ++u) {
          int xb = g.conjugate(u, sb.class_rep);
          if (!g.commute(sa.class_rep, xb)) continue;
          int xa = g.conjugate(g.inverse(u), sa.class_rep);
          acc += std::conj(sa.character_at_parent(xb)) * std::conj(sb.character_at_parent(xa));
        }
        acc /= static_cast<double>(sa.centralizer->size()) *
               static_cast<double>(sb.centralizer->size());
        s_(a, b) = acc;
      }
    }
  }

  void build_fusion() {
    const int n = size();
    fusion_.assign(static_cast<std::size_t>(n) * n * n, 0);
    fusion_residual_ = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Complex acc(0, 0);
          for (int m = 0; m < n; ++m)
            acc += s_(i, m) * s_(j, m) * std::conj(s_(k, m)) / s_(0, m);
          long long v = std::llround(acc.real());
          double dev = std::max(std::abs(acc.real() - static_cast<double>(v)),
                                std::abs(acc.imag()));
          fusion_residual_ = std::max(fusion_residual_, dev);
          if (dev > cfg_.verlinde_tolerance || v < 0)
            throw NumericalError("Verlinde coefficient at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 ") is not a nonnegative integer: " + std::to_string(acc.real()));
          fusion_[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
        }
  }

  ModularChecks run_checks() {
    const FiniteGroup& g = *group_;
    const int n = size();
    const double tol = cfg_.tolerance;
    ModularChecks out;
    auto add = [&out](std::string name, double residual, double threshold) {
      out.checks.push_back({std::move(name), residual, threshold, residual <= threshold});
    };

    Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(n, n);
    add("s_unitarity", (s_ * s_.adjoint() - ident).cwiseAbs().maxCoeff(), tol);
    add("s_symmetry", (s_ - s_.transpose()).cwiseAbs().maxCoeff(), tol);

    // S^2 must be a permutation matrix C with C^2 = I
    Eigen::MatrixXcd s2 = s_ * s_;
    conj_perm_.assign(n, -1);
    double perm_res = 0;
    bool perm_ok = true;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double d0 = std::abs(s2(i, j));
        double d1 = std::abs(s2(i, j) - Complex(1, 0));
        if (d1 < 0.5) {
          if (conj_perm_[i] >= 0) perm_ok = false;
          conj_perm_[i] = j;
          perm_res = std::max(perm_res, d1);
        } else {
          perm_res = std::max(perm_res, d0);
        }
      }
      if (conj_perm_[i] < 0) perm_ok = false;
    }
    std::vector<int> seen(n, 0);
    for (int i = 0; i < n && perm_ok; ++i) {
      if (seen[conj_perm_[i]]) perm_ok = false;
      seen[conj_perm_[i]] = 1;
    }
    bool involution = perm_ok;
    for (int i = 0; i < n && involution; ++i)
      if (conj_perm_[conj_perm_[i]] != i) involution = false;
    add("s_squared_permutation", perm_ok ? perm_res : 1.0, tol);
    add("charge_conjugation_involution", involution ? 0.0 : 1.0, tol);

    Eigen::MatrixXcd st = s_;
    for (int j = 0; j < n; ++j) st.col(j) *= t_[j];
    add("st_cubed_vs_s_squared", (st * st * st - s2).cwiseAbs().maxCoeff(), tol);

    double row0 = 0;
    bool row0_pos = true;
    for (int a = 0; a < n; ++a) {
      double expect = static_cast<double>(simples_[a].quantum_dim) / g.order();
      row0 = std::max(row0, std::abs(s_(0, a) - Complex(expect, 0)));
      if (s_(0, a).real() <= 0) row0_pos = false;
    }
    add("vacuum_row", row0_pos ? row0 : 1.0, tol);

    long long sq = 0;
    for (const auto& s : simples_) sq += s.quantum_dim * s.quantum_dim;
    add("qdim_sum", sq == static_cast<long long>(g.order()) * g.order() ? 0.0 : 1.0, tol);

    double t_mod = 0;
    for (const Complex& t : t_) t_mod = std::max(t_mod, std::abs(std::abs(t) - 1.0));
    add("t_unit_modulus", t_mod, tol);
    add("t_vacuum", std::abs(t_[0] - Complex(1, 0)), tol);

    // Each T entry is a root of unity: the projective scalar of x_a
    // satisfies T^(N * ord(x_a)) = 1. Checked through the angle so no
    // error accumulates from repeated multiplication.
    double t_ord = 0;
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (int a = 0; a < n; ++a) {
      std::int64_t bound =
          simples_[a].projective_order * g.element_order(simples_[a].class_rep);
      double turns = std::arg(t_[a]) / two_pi * static_cast<double>(bound);
      double frac = turns - std::llround(turns);
      t_ord = std::max(t_ord, std::abs(std::polar(1.0, two_pi * frac) - Complex(1, 0)));
    }
    add("t_finite_order", t_ord, 1e-6);

    Complex gauss(0, 0);
    for (int a = 0; a < n; ++a)
      gauss += static_cast<double>(simples_[a].quantum_dim * simples_[a].quantum_dim) * t_[a];
    gauss /= static_cast<double>(g.order());
    add("gauss_sum", std::abs(gauss - Complex(1, 0)), tol);

    add("verlinde_integrality", fusion_residual_, cfg_.verlinde_tolerance);

    bool unit_ok = true;
    for (int i = 0; i < n && unit_ok; ++i)
      for (int k = 0; k < n; ++k)
        if (fusion(i, 0, k) != (i == k ? 1 : 0)) {
          unit_ok = false;
          break;
        }
    add("fusion_unit_constraint", unit_ok ? 0.0 : 1.0, tol);

    return out;
  }

  GroupPtr group_;
  EngineConfig cfg_;
  std::vector<SimpleObject> simples_;
  Eigen::MatrixXcd s_;
  std::vector<Complex> t_;
  std::vector<long long> fusion_;
  double fusion_residual_ = 0;
  std::vector<int> conj_perm_;
  ModularChecks checks_;
};

inline std::vector<SimpleObject> simple_objects(const GroupPtr& g, const Cochain& omega,
                                                const EngineConfig& cfg = EngineConfig{}) {
  return ModularData::build(g, omega, cfg).simples();
}

inline ModularChecks verify_modular_axioms(const ModularData& d) { return d.checks(); }

}  // namespace dwt
