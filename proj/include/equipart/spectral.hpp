#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "equipart/graph.hpp"
#include "equipart/number.hpp"

namespace equipart {

struct SpectralOptions {
  double tolerance = 1e-9;        // relative residual bound for eigenpairs
  double merge_tolerance = 1e-6;  // eigenvalues closer than this * max(1, r) share an eigenspace
  double integral_tolerance = 1e-6;
  int max_sweeps = 100;
};

struct Eigenspace {
  double value = 0.0;     // snapped to the integer when integral
  double computed = 0.0;  // solver mean before snapping
  std::size_t multiplicity = 0;
  std::optional<std::int64_t> integral;  // set when value is within integral_tolerance of an integer
  std::vector<std::vector<double>> basis;

  // Exact when the eigenvalue is integral.
  Number number() const { return integral ? Number(Rational(*integral)) : Number::approx(value); }
};

// Eigenspaces of the adjacency matrix, sorted by decreasing eigenvalue.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<Eigenspace> spaces, std::size_t n, double scale, SpectralOptions options)
      : spaces_(std::move(spaces)), n_(n), scale_(scale), options_(options) {}

  const std::vector<Eigenspace>& spaces() const { return spaces_; }
  std::size_t order() const { return n_; }
  const SpectralOptions& options() const { return options_; }
  // Absolute tolerance used when matching values against the spectrum.
  double match_tolerance() const { return options_.merge_tolerance * scale_; }

  const Eigenspace& largest() const { return spaces_.front(); }
  const Eigenspace& smallest() const { return spaces_.back(); }

  // lambda_1: largest eigenvalue below the top one (the top one when it is the only one).
  const Eigenspace& second_largest() const { return spaces_.size() > 1 ? spaces_[1] : spaces_[0]; }

  // Largest |lambda| after removing a single copy of the top eigenvalue.
  const Eigenspace& second_max_modulus() const {
    const Eigenspace* best = nullptr;
    for (std::size_t i = 0; i < spaces_.size(); ++i) {
      if (i == 0 && spaces_[0].multiplicity == 1) continue;
      if (best == nullptr || std::abs(spaces_[i].value) > std::abs(best->value)) best = &spaces_[i];
    }
    if (best == nullptr) throw precondition_error("spectrum has a single eigenvalue of multiplicity one");
    return *best;
  }

  // Eigenspace whose value lies within `slack` * match_tolerance() of `value`.
  const Eigenspace* find(double value, double slack = 1.0) const {
    const Eigenspace* best = nullptr;
    for (const auto& s : spaces_)
      if (std::abs(s.value - value) <= slack * match_tolerance() &&
          (best == nullptr || std::abs(s.value - value) < std::abs(best->value - value)))
        best = &s;
    return best;
  }

  bool integral() const {
    return std::all_of(spaces_.begin(), spaces_.end(), [](const auto& s) { return s.integral.has_value(); });
  }

  // sum_i lambda_i^k * mult_i
  double power_trace(int k) const {
    double t = 0.0;
    for (const auto& s : spaces_) t += std::pow(s.value, k) * static_cast<double>(s.multiplicity);
    return t;
  }

 private:
  std::vector<Eigenspace> spaces_;
  std::size_t n_ = 0;
  double scale_ = 1.0;
  SpectralOptions options_;
};

namespace detail {

struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // vectors[k] is the k-th eigenvector
};

// Cyclic Jacobi on a dense symmetric matrix (row-major, modified in place).
// Sweep order is fixed (p < q, row by row), so results are reproducible.
inline EigenPairs jacobi_eigen(std::vector<double> a, std::size_t n, int max_sweeps) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);
  const double stop = 1e-15 * std::max(1.0, frob);

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(off) <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  EigenPairs out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = at(k, k);
    for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = v[i * n + k];
  }
  return out;
}

inline std::vector<double> multiply(const Graph& g, const std::vector<double>& x) {
  std::vector<double> y(g.order(), 0.0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (auto w : g.neighbors(u).members()) y[u] += x[w];
  return y;
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

}  // namespace detail

inline Spectrum eigen_decompose(const Graph& g, const SpectralOptions& options = {}) {
  const auto n = g.order();
  std::vector<double> m(n * n, 0.0);
  std::size_t max_degree = 0;
  for (Vertex u = 0; u < n; ++u) {
    max_degree = std::max(max_degree, g.degree(u));
    for (auto v : g.neighbors(u).members()) m[u * n + v] = 1.0;
  }
  const double scale = std::max(1.0, static_cast<double>(max_degree));

  auto pairs = detail::jacobi_eigen(m, n, options.max_sweeps);

  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto mv = detail::multiply(g, pairs.vectors[k]);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(mv[i] - pairs.values[k] * pairs.vectors[k][i]));
  }
  if (worst > options.tolerance * scale) {
    std::ostringstream os;
    os << "eigensolver did not converge in " << options.max_sweeps << " sweeps (residual " << worst << ")";
    throw numeric_error(os.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return pairs.values[x] > pairs.values[y]; });

  std::vector<Eigenspace> spaces;
  const double merge = options.merge_tolerance * scale;
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto k = order[idx];
    if (idx == 0 || std::abs(pairs.values[order[idx - 1]] - pairs.values[k]) > merge) {
      spaces.push_back({});
    }
    auto& s = spaces.back();
    s.value += pairs.values[k];
    s.multiplicity += 1;
    s.basis.push_back(std::move(pairs.vectors[k]));
  }
  for (auto& s : spaces) {
    s.value /= static_cast<double>(s.multiplicity);
    s.computed = s.value;
    const double nearest = std::round(s.value);
    if (std::abs(s.value - nearest) <= options.integral_tolerance) {
      s.integral = static_cast<std::int64_t>(nearest);
      s.value = nearest;
    }
  }
  return Spectrum(std::move(spaces), n, scale, options);
}

struct IndicatorExpansion {
  struct Component {
    double eigenvalue = 0.0;
    double alpha_sq = 0.0;
  };
  std::vector<Component> coefficients;  // every eigenspace except the top one
  double alpha0 = 0.0;                  // |S| / sqrt(n)
  double m0 = 0.0;                      // sum alpha_i^2
  double m1 = 0.0;                      // sum alpha_i^2 lambda_i
  double m2 = 0.0;                      // sum alpha_i^2 lambda_i^2
};

inline void require_simple_top(const Spectrum& spec) {
  if (spec.largest().multiplicity != 1) throw precondition_error("graph is not connected (top eigenvalue is repeated)");
}

inline IndicatorExpansion indicator_expansion(const Graph& g, const VertexSet& s, const Spectrum& spec) {
  if (s.empty()) throw precondition_error("indicator expansion of an empty set");
  if (spec.order() != g.order()) throw precondition_error("spectrum does not belong to this graph");
  require_connected_regular(g);
  require_simple_top(spec);

  const auto members = s.members();
  IndicatorExpansion e;
  e.alpha0 = static_cast<double>(members.size()) / std::sqrt(static_cast<double>(g.order()));
  for (std::size_t i = 1; i < spec.spaces().size(); ++i) {
    const auto& space = spec.spaces()[i];
    double mass = 0.0;
    for (const auto& phi : space.basis) {
      double proj = 0.0;
      for (auto v : members) proj += phi[v];
      mass += proj * proj;
    }
    e.coefficients.push_back({space.value, mass});
    e.m0 += mass;
    e.m1 += mass * space.value;
    e.m2 += mass * space.value * space.value;
  }
  return e;
}

// Returns lambda when 1_S - (|S|/n) 1_V is an eigenvector of M (equivalently,
// {S, V \ S} is equitable). The value returned is the matching spectrum entry.
inline std::optional<double> eigenfunction_shift_test(const Graph& g, const VertexSet& s, const Spectrum& spec) {
  require_connected_regular(g);
  if (s.empty() || s.size() == g.order()) throw precondition_error("shift test needs a nonempty proper subset");
  const auto n = g.order();
  const double rho = static_cast<double>(s.size()) / static_cast<double>(n);
  const double r = static_cast<double>(g.degree(0));

  std::vector<double> f(n);
  std::vector<double> mf(n);
  for (Vertex v = 0; v < n; ++v) {
    f[v] = (s.contains(v) ? 1.0 : 0.0) - rho;
    mf[v] = static_cast<double>(g.neighbors(v).intersection_size(s)) - rho * r;
  }
  const double lambda = detail::dot(f, mf) / detail::dot(f, f);
  for (Vertex v = 0; v < n; ++v)
    if (std::abs(mf[v] - lambda * f[v]) > spec.match_tolerance()) return std::nullopt;

  const auto* space = spec.find(lambda, 10.0);
  if (space == nullptr) {
    std::ostringstream os;
    os << "tolerance diagnostic: shifted indicator is an eigenvector for " << lambda
       << " but no spectrum entry matches";
    throw numeric_error(os.str());
  }
  return space->value;
}

}  // namespace equipart
