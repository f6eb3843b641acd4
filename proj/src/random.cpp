#include "nambu/random.hpp"

namespace nambu {

long PolyRng::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Polynomial PolyRng::polynomial(const CoordsPtr& coords, unsigned max_degree, unsigned max_terms) {
    const std::size_t n = coords->size();
    Polynomial p(coords);
    const auto terms = uniform(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> exps(n, 0);
        const auto deg = uniform(0, max_degree);
        for (long e = 0; e < deg; ++e) ++exps[static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1))];
        long num = uniform(-5, 5);
        if (num == 0) num = 1;
        const long den = uniform(1, 3);
        p += Polynomial::monomial(coords, Monomial(std::move(exps)), Rational(num, den));
    }
    return p;
}

namespace {

template <class G>
G random_graded(PolyRng& rng, const CoordsPtr& coords, std::size_t grade, unsigned max_degree, unsigned max_terms) {
    G out(coords, grade);
    const auto subsets = index_subsets(coords->size(), grade);
    if (subsets.empty()) return out;
    const auto terms = rng.uniform(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        const auto& idx = subsets[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(subsets.size()) - 1))];
        out.add_term(idx, rng.polynomial(coords, max_degree, 4));
    }
    return out;
}

} // namespace

KForm PolyRng::form(const CoordsPtr& coords, std::size_t grade, unsigned max_degree, unsigned max_terms) {
    return random_graded<KForm>(*this, coords, grade, max_degree, max_terms);
}

KVector PolyRng::vector(const CoordsPtr& coords, std::size_t grade, unsigned max_degree, unsigned max_terms) {
    return random_graded<KVector>(*this, coords, grade, max_degree, max_terms);
}

} // namespace nambu
