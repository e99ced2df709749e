#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "dwt/config.hpp"
#include "dwt/errors.hpp"
#include "dwt/modular.hpp"

namespace dwt {

/// A commutative Frobenius ring over C: basis e_i, structure constants
/// c_{ij}^k, a unit vector and a trace functional. Construction validates
/// commutativity, associativity, the unit law and the nondegeneracy of the
/// pairing theta(e_i e_j).
class FrobeniusRing {
public:
  FrobeniusRing(std::vector<std::string> labels, std::vector<Complex> constants,
                std::vector<Complex> unit, std::vector<Complex> trace,
                double tolerance = 1e-9)
      : rank_(static_cast<int>(labels.size())),
        labels_(std::move(labels)),
        constants_(std::move(constants)),
        unit_(std::move(unit)),
        trace_(std::move(trace)) {
    if (rank_ < 1) throw UsageError("Frobenius ring needs positive rank");
    std::size_t n = static_cast<std::size_t>(rank_);
    if (constants_.size() != n * n * n || unit_.size() != n || trace_.size() != n)
      throw UsageError("Frobenius ring data has inconsistent shapes");
    validate(tolerance);
  }

  int rank() const { return rank_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Complex structure_constant(int i, int j, int k) const { return c(i, j, k); }
  const std::vector<Complex>& unit() const { return unit_; }
  const std::vector<Complex>& trace() const { return trace_; }
  double pairing_condition() const { return pairing_condition_; }

  /// theta applied to a coefficient vector.
  Complex apply_trace(const Eigen::VectorXcd& v) const {
    Complex acc(0, 0);
    for (int i = 0; i < rank_; ++i) acc += trace_[i] * v(i);
    return acc;
  }

  /// Matrix of multiplication by basis element i.
  Eigen::MatrixXcd left_multiplication(int i) const {
    Eigen::MatrixXcd m(rank_, rank_);
    for (int k = 0; k < rank_; ++k)
      for (int j = 0; j < rank_; ++j) m(k, j) = c(i, j, k);
    return m;
  }

  /// Pairing matrix P_{ij} = theta(e_i e_j).
  Eigen::MatrixXcd pairing() const {
    Eigen::MatrixXcd p(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        Complex acc(0, 0);
        for (int k = 0; k < rank_; ++k) acc += c(i, j, k) * trace_[k];
        p(i, j) = acc;
      }
    return p;
  }

  /// The handle element m(copairing): multiply the inverse-pairing tensor.
  Eigen::VectorXcd handle_element() const {
    Eigen::MatrixXcd p = pairing();
    Eigen::MatrixXcd pinv = p.partialPivLu().inverse();
    Eigen::VectorXcd h = Eigen::VectorXcd::Zero(rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k) h(k) += pinv(i, j) * c(i, j, k);
    return h;
  }

private:
  Complex c(int i, int j, int k) const {
    return constants_[(static_cast<std::size_t>(i) * rank_ + j) * rank_ + k];
  }

  void validate(double tol) {
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k)
          if (std::abs(c(i, j, k) - c(j, i, k)) > tol)
            throw NumericalError("Frobenius structure constants are not commutative");
    // associativity on basis triples: (e_i e_j) e_k = e_i (e_j e_k)
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k)
          for (int l = 0; l < rank_; ++l) {
            Complex lhs(0, 0), rhs(0, 0);
            for (int m = 0; m < rank_; ++m) {
              lhs += c(i, j, m) * c(m, k, l);
              rhs += c(j, k, m) * c(i, m, l);
            }
            if (std::abs(lhs - rhs) > tol)
              throw NumericalError("Frobenius structure constants are not associative");
          }
    // unit law
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) {
        Complex acc(0, 0);
        for (int i = 0; i < rank_; ++i) acc += unit_[i] * c(i, j, k);
        if (std::abs(acc - (j == k ? Complex(1, 0) : Complex(0, 0))) > tol)
          throw NumericalError("unit vector does not act as identity");
      }
    Eigen::MatrixXcd p = pairing();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(p);
    double det = std::abs(lu.determinant());
    if (det < 1e-12) throw NumericalError("Frobenius pairing is degenerate");
    Eigen::MatrixXcd pinv = lu.inverse();
    pairing_condition_ = p.cwiseAbs().maxCoeff() * pinv.cwiseAbs().maxCoeff();
  }

  int rank_;
  std::vector<std::string> labels_;
  std::vector<Complex> constants_;
  std::vector<Complex> unit_;
  std::vector<Complex> trace_;
  double pairing_condition_ = 0;
};

/// The fusion ring of the modular data as a Frobenius ring: basis = simples,
/// structure constants = Verlinde coefficients, trace = vacuum coefficient.
/// The induced pairing is the charge-conjugation permutation, which is
/// cross-checked against S^2.
inline FrobeniusRing verlinde_ring(const ModularData& data,
                                   const EngineConfig& cfg = EngineConfig{}) {
  const int n = data.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : data.simples())
    labels.push_back("[" + std::to_string(s.class_rep) + "]d" + std::to_string(s.degree));
  std::vector<Complex> constants(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        constants[(static_cast<std::size_t>(i) * n + j) * n + k] =
            static_cast<double>(data.fusion(i, j, k));
  std::vector<Complex> unit(n, Complex(0, 0));
  unit[0] = Complex(1, 0);
  std::vector<Complex> trace(n, Complex(0, 0));
  trace[0] = Complex(1, 0);
  FrobeniusRing ring(std::move(labels), std::move(constants), std::move(unit),
                     std::move(trace), cfg.tolerance);
  // pairing must be the charge-conjugation permutation from S^2
  Eigen::MatrixXcd p = ring.pairing();
  const auto& conj = data.conjugation();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double expect = (conj[i] == j) ? 1.0 : 0.0;
      if (std::abs(p(i, j) - Complex(expect, 0)) > cfg.tolerance)
        throw NumericalError("Verlinde pairing disagrees with the S^2 permutation");
    }
  return ring;
}

/// F'(Sigma_g): trace of the g-th power of the handle operator applied to
/// the unit. Basis-free; needs only the nondegenerate pairing.
inline Complex surface_value(const FrobeniusRing& r, int genus) {
  if (genus < 0) throw UsageError("genus must be nonnegative");
  Eigen::VectorXcd state(r.rank());
  for (int i = 0; i < r.rank(); ++i) state(i) = r.unit()[i];
  if (genus > 0) {
    Eigen::VectorXcd h = r.handle_element();
    Eigen::MatrixXcd handle_op = Eigen::MatrixXcd::Zero(r.rank(), r.rank());
    for (int k = 0; k < r.rank(); ++k) handle_op += h(k) * r.left_multiplication(k);
    for (int i = 0; i < genus; ++i) state = handle_op * state;
  }
  return r.apply_trace(state);
}

struct ReducedTheory {
  FrobeniusRing ring;
  std::vector<long long> genus_table;  // F'(Sigma_g) for g = 0..max_genus
};

/// The 2-dimensional reduction: the Verlinde ring plus the integer table
/// g -> F'(Sigma_g). Every entry must round to a nonnegative integer within
/// the Verlinde tolerance.
inline ReducedTheory reduce_theory(const ModularData& data, int max_genus = 4,
                                   const EngineConfig& cfg = EngineConfig{}) {
  ReducedTheory out{verlinde_ring(data, cfg), {}};
  for (int g = 0; g <= max_genus; ++g) {
    Complex v = surface_value(out.ring, g);
    long long n = std::llround(v.real());
    double dev = std::max(std::abs(v.real() - static_cast<double>(n)), std::abs(v.imag()));
    if (dev > cfg.verlinde_tolerance || n < 0)
      throw NumericalError("2d reduction value at genus " + std::to_string(g) +
                           " is not a nonnegative integer");
    out.genus_table.push_back(n);
  }
  return out;
}

}  // namespace dwt
