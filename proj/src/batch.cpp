#include "dconic/batch.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>

#include "dconic/error.hpp"

namespace dconic {

std::vector<DiscreteConic> make_ellipse_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> p_dist(-0.9, 0.9);
  std::uniform_int_distribution<int> n_dist(4, 16);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<DiscreteConic> corpus;
  corpus.reserve(count);
  while (corpus.size() < count) {
    const double p = p_dist(rng);
    const int n = n_dist(rng);
    const double phi = phase(rng);
    const double t_max = p == 0.0 ? 3.0 : std::min(3.0, 0.9 / (p * p));
    const double t = 0.2 + (t_max - 0.2) * unit(rng);
    corpus.push_back(synthesize(p, t, kTwoPi / n, phi, n));
  }
  return corpus;
}

DiscreteConic perturb_vertex(const DiscreteConic& d, int j, double amount) {
  if (j < 1 || j > d.n) throw GeometryError(ErrorCode::InvalidArgument, "vertex index out of range");
  DiscreteConic out = d;
  Point& v = out.vertices[static_cast<std::size_t>(j - 1)];
  const Point ray = v - d.focus();
  const double len = norm(ray);
  if (len <= kDegeneracyEps) throw GeometryError(ErrorCode::DegenerateRay, "vertex coincides with the focus");
  v = v + (amount / len) * perp(ray);
  return out;
}

std::vector<std::vector<Report>> verify_corpus_serial(const std::vector<DiscreteConic>& corpus,
                                                      std::string_view which, double tol) {
  std::vector<std::vector<Report>> rows;
  rows.reserve(corpus.size());
  for (const DiscreteConic& d : corpus) rows.push_back(run_checks(d, which, tol));
  return rows;
}

std::vector<std::vector<Report>> verify_corpus_parallel(const std::vector<DiscreteConic>& corpus,
                                                        std::string_view which, double tol) {
  const auto count = static_cast<std::ptrdiff_t>(corpus.size());
  std::vector<std::vector<Report>> rows(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = run_checks(corpus[static_cast<std::size_t>(i)], which, tol);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  // Same failure as the serial loop: the first polygon in corpus order.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

bool all_pass(const std::vector<std::vector<Report>>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const std::vector<Report>& row) {
    return std::all_of(row.begin(), row.end(), [](const Report& r) { return r.pass; });
  });
}

}  // namespace dconic
