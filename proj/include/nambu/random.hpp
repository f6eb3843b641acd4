#pragma once

#include <cstdint>
#include <random>

#include "nambu/exterior.hpp"

namespace nambu {

/// Seeded generator for random polynomial test data. Uses mt19937_64 and
/// its own range reduction, so the sequence is identical on every platform.
class PolyRng {
  public:
    explicit PolyRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);

    /// Random polynomial of total degree <= max_degree with up to max_terms
    /// terms and small rational coefficients.
    Polynomial polynomial(const CoordsPtr& coords, unsigned max_degree, unsigned max_terms = 6);

    /// Random form of the given grade with random polynomial coefficients.
    KForm form(const CoordsPtr& coords, std::size_t grade, unsigned max_degree, unsigned max_terms = 3);

    KVector vector(const CoordsPtr& coords, std::size_t grade, unsigned max_degree, unsigned max_terms = 3);

  private:
    std::mt19937_64 engine_;
};

} // namespace nambu
