#include "turan/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "turan/bounds.hpp"
#include "turan/error.hpp"
#include "turan/minors.hpp"

namespace turan {

namespace {

class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

void check_dimension(int n, std::size_t got) {
  if (static_cast<std::size_t>(n) != got) {
    throw std::invalid_argument("weight vector has " + std::to_string(got) + " entries, expected " + std::to_string(n));
  }
}

double eval_edges(const std::vector<ElementSet>& edges, std::span<const double> x) {
  CompensatedSum total;
  for (ElementSet e : edges) {
    double term = 1;
    for (int i : e) term *= x[i];
    total.add(term);
  }
  return total.value();
}

std::vector<double> gradient_edges(const std::vector<ElementSet>& edges, std::span<const double> x) {
  std::vector<CompensatedSum> acc(x.size());
  for (ElementSet e : edges) {
    for (int i : e) {
      double term = 1;
      for (int j : e) {
        if (j != i) term *= x[j];
      }
      acc[i].add(term);
    }
  }
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = acc[i].value();
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform Dirichlet point from exponential draws; start 0 is the barycentre.
WeightVector starting_point(int n, std::uint64_t seed, int index) {
  WeightVector x(n, 1.0 / n);
  if (index == 0) return x;
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(index));
  double total = 0;
  for (double& xi : x) {
    const double u = (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
    xi = -std::log(u);
    total += xi;
  }
  for (double& xi : x) xi /= total;
  return x;
}

struct Run {
  double value = 0;
  WeightVector x;
  int iterations = 0;
  bool converged = false;
  bool monotone = true;
};

Run climb(const Matroid& m, WeightVector x, const MaximizeOptions& opt) {
  const int n = m.size();
  const double r = m.rank();
  Run run;
  double p = poly_eval(m, x);
  for (int it = 1; it <= opt.max_iter; ++it) {
    const std::vector<double> g = poly_gradient(m, x);
    double total = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = x[i] * g[i] / (r * p);
      if (x[i] < 1e-15) x[i] = 0;
      total += x[i];
    }
    for (double& xi : x) xi /= total;
    const double next = poly_eval(m, x);
    if (next < p - 1e-12) run.monotone = false;
    run.iterations = it;
    const bool done = std::abs(next - p) < opt.tol;
    p = next;
    if (done) {
      run.converged = true;
      break;
    }
  }
  run.value = p;
  run.x = std::move(x);
  return run;
}

int smallest_valid_t(const Matroid& simple) {
  if (simple.rank() < 2) return 2;
  for (int t = 2;; ++t) {
    if (!has_uniform_minor(simple, 2, t + 2)) return t;
  }
}

}  // namespace

double poly_eval(const Matroid& m, std::span<const double> x) {
  check_dimension(m.size(), x.size());
  return eval_edges(m.bases(), x);
}

double poly_eval(const UniformHypergraph& h, std::span<const double> x) {
  check_dimension(h.vertex_count(), x.size());
  return eval_edges(h.edges(), x);
}

std::vector<double> poly_gradient(const Matroid& m, std::span<const double> x) {
  check_dimension(m.size(), x.size());
  return gradient_edges(m.bases(), x);
}

std::vector<double> poly_gradient(const UniformHypergraph& h, std::span<const double> x) {
  check_dimension(h.vertex_count(), x.size());
  return gradient_edges(h.edges(), x);
}

Rational theorem43_bound(int r, int t) {
  if (r < 1 || t < 2) throw std::invalid_argument("theorem43_bound: need r >= 1, t >= 2");
  const BigInt tr = power(BigInt(t), static_cast<unsigned>(r));
  return b_formula(r, t) * power(Rational(t - 1, tr - 1), static_cast<unsigned>(r));
}

LagrangianResult maximize(const Matroid& m, const MaximizeOptions& options) {
  if (m.rank() == 0) throw std::invalid_argument("maximize: the matroid has rank 0 (every element is a loop)");
  if (options.restarts < 0 || options.max_iter < 1) throw std::invalid_argument("maximize: bad iteration settings");
  const auto [simple, map] = simplify(m);

  const int starts = options.restarts + 1;
  std::vector<Run> runs(starts);
  const int workers = std::clamp(options.workers, 1, starts);
  auto work = [&](int w) {
    for (int i = w; i < starts; i += workers) {
      runs[i] = climb(simple, starting_point(simple.size(), options.seed, i), options);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  // Highest value wins; earlier start breaks ties.
  int best = 0;
  for (int i = 1; i < starts; ++i) {
    if (runs[i].value > runs[best].value) best = i;
  }

  LagrangianResult result;
  result.value = runs[best].value;
  result.iterations = runs[best].iterations;
  result.converged = runs[best].converged;
  result.restarts_used = starts;
  result.monotone = std::all_of(runs.begin(), runs.end(), [](const Run& r) { return r.monotone; });
  result.argmax.assign(m.size(), 0.0);
  for (std::size_t i = 0; i < map.representatives.size(); ++i) {
    result.argmax[map.representatives[i]] = runs[best].x[i];
  }

  int t = 0;
  if (options.bound_t) {
    t = *options.bound_t;
    if (t < 2) throw std::invalid_argument("maximize: bound t must be >= 2");
    if (simple.rank() >= 2 && has_uniform_minor(simple, 2, t + 2)) {
      throw std::invalid_argument("maximize: matroid has a U_{2," + std::to_string(t + 2) + "}-minor");
    }
  } else {
    t = smallest_valid_t(simple);
  }
  result.bound_t = t;
  result.exact_bound = theorem43_bound(m.rank(), t);
  result.bound = to_double(*result.exact_bound);
  if (result.value > *result.bound + 1e-9) {
    throw TheoremViolation("Lagrangian " + std::to_string(result.value) + " exceeds the ceiling " +
                           std::to_string(*result.bound) + " for t = " + std::to_string(t));
  }
  result.certified = std::abs(result.value - *result.bound) < 1e-9;
  return result;
}

}  // namespace turan
