#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dconic/discrete_conic.hpp"
#include "dconic/verifier.hpp"

namespace dconic {

/// Closed polygons on ellipse members: p uniform in (-0.9, 0.9), n in 4..16,
/// theta = 2pi/n, phi uniform in [0, 2pi), t uniform in (0.2, min(3, 0.9/p^2)).
std::vector<DiscreteConic> make_ellipse_corpus(std::size_t count, std::uint64_t seed);

/// Moves vertex j (1-based) by `amount` perpendicular to its focal ray.
DiscreteConic perturb_vertex(const DiscreteConic& d, int j, double amount = 1e-3);

/// One row of reports per polygon, in corpus order. Both versions produce
/// bitwise-identical output; the serial one is the reference.
std::vector<std::vector<Report>> verify_corpus_serial(const std::vector<DiscreteConic>& corpus,
                                                      std::string_view which = "all",
                                                      double tol = kDefaultTolerance);
std::vector<std::vector<Report>> verify_corpus_parallel(const std::vector<DiscreteConic>& corpus,
                                                        std::string_view which = "all",
                                                        double tol = kDefaultTolerance);

/// True iff every report in every row passes.
bool all_pass(const std::vector<std::vector<Report>>& rows);

}  // namespace dconic
