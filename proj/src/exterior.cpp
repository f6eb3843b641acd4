#include "nambu/exterior.hpp"

#include <algorithm>

namespace nambu {
namespace {

bool strictly_increasing(const IndexSet& idx) { return std::adjacent_find(idx.begin(), idx.end(), std::greater_equal<>()) == idx.end(); }

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexSet& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return std::adjacent_find(idx.begin(), idx.end()) == idx.end() ? sign : 0;
}

// Merge of two sorted index sets; 0 when they overlap, else the shuffle sign.
int shuffle(const IndexSet& a, const IndexSet& b, IndexSet& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t inversions = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            inversions += a.size() - i;
            out.push_back(b[j++]);
        } else {
            return 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

template <GradedKind K>
Graded<K> wedge_impl(const Graded<K>& a, const Graded<K>& b) {
    if (!same_coords(a.coords(), b.coords())) throw CoordinateMismatch();
    Graded<K> r(a.coords(), a.grade() + b.grade());
    IndexSet merged;
    for (const auto& [ia, fa] : a.terms())
        for (const auto& [ib, fb] : b.terms()) {
            const int s = shuffle(ia, ib, merged);
            if (s == 0) continue;
            r.add_term(merged, s > 0 ? fa * fb : -(fa * fb));
        }
    return r;
}

// i_j on a single basis element; 0 when j is absent.
int interior_basis(std::size_t j, IndexSet& idx) {
    const auto it = std::find(idx.begin(), idx.end(), j);
    if (it == idx.end()) return 0;
    const auto pos = static_cast<std::size_t>(it - idx.begin());
    idx.erase(it);
    return pos % 2 == 0 ? 1 : -1;
}

} // namespace

template <GradedKind Kind>
Graded<Kind>::Graded(CoordsPtr coords, std::size_t grade) : coords_(std::move(coords)), grade_(grade) {
    if (!coords_) throw std::invalid_argument("graded element requires a coordinate system");
}

template <GradedKind Kind>
Graded<Kind> Graded<Kind>::scalar(const Polynomial& f) {
    Graded r(f.coords(), 0);
    r.add_term({}, f);
    return r;
}

template <GradedKind Kind>
Graded<Kind> Graded<Kind>::basis(CoordsPtr coords, IndexSet idx, const Polynomial& coef) {
    Graded r(coords, idx.size());
    const int s = sort_with_sign(idx);
    if (s != 0) r.add_term(idx, s > 0 ? coef : -coef);
    return r;
}

template <GradedKind Kind>
Graded<Kind> Graded<Kind>::basis(CoordsPtr coords, IndexSet idx) {
    Polynomial one(coords, 1);
    return basis(std::move(coords), std::move(idx), one);
}

template <GradedKind Kind>
Polynomial Graded<Kind>::coefficient(const IndexSet& idx) const {
    const auto it = terms_.find(idx);
    return it == terms_.end() ? Polynomial(coords_) : it->second;
}

template <GradedKind Kind>
void Graded<Kind>::add_term(const IndexSet& idx, const Polynomial& coef) {
    if (idx.size() != grade_) throw GradeError("index set length does not match the grade");
    if (!strictly_increasing(idx)) throw std::invalid_argument("index set must be strictly increasing");
    if (!idx.empty() && idx.back() >= coords_->size()) throw std::out_of_range("coordinate index out of range");
    if (!same_coords(coords_, coef.coords())) throw CoordinateMismatch();
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <GradedKind Kind>
void Graded<Kind>::require_compatible(const Graded& o) const {
    if (!same_coords(coords_, o.coords_)) throw CoordinateMismatch();
    if (grade_ != o.grade_) throw GradeError("cannot add elements of different grade");
}

template <GradedKind Kind>
Graded<Kind>& Graded<Kind>::operator+=(const Graded& o) {
    require_compatible(o);
    for (const auto& [idx, f] : o.terms_) add_term(idx, f);
    return *this;
}

template <GradedKind Kind>
Graded<Kind>& Graded<Kind>::operator-=(const Graded& o) {
    require_compatible(o);
    for (const auto& [idx, f] : o.terms_) add_term(idx, -f);
    return *this;
}

template <GradedKind Kind>
Graded<Kind>& Graded<Kind>::operator*=(const Polynomial& f) {
    if (!same_coords(coords_, f.coords())) throw CoordinateMismatch();
    TermMap scaled;
    for (const auto& [idx, g] : terms_) {
        Polynomial p = g * f;
        if (!p.is_zero()) scaled.emplace(idx, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
}

template <GradedKind Kind>
Graded<Kind> Graded<Kind>::operator-() const {
    Graded r(*this);
    for (auto& [idx, f] : r.terms_) f = -f;
    return r;
}

template class Graded<GradedKind::Form>;
template class Graded<GradedKind::Multivector>;

KForm dx(const CoordsPtr& coords, std::size_t i) {
    if (i >= coords->size()) throw std::out_of_range("coordinate index out of range");
    return KForm::basis(coords, {i});
}

KVector dd(const CoordsPtr& coords, std::size_t i) {
    if (i >= coords->size()) throw std::out_of_range("coordinate index out of range");
    return KVector::basis(coords, {i});
}

KForm volume_form(const CoordsPtr& coords) {
    IndexSet all(coords->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return KForm::basis(coords, all);
}

KVector vector_field(const std::vector<Polynomial>& comps) {
    if (comps.empty()) throw std::invalid_argument("vector field needs components");
    const auto& coords = comps.front().coords();
    if (comps.size() != coords->size()) throw std::invalid_argument("one component per coordinate required");
    KVector v(coords, 1);
    for (std::size_t i = 0; i < comps.size(); ++i) v.add_term({i}, comps[i]);
    return v;
}

std::vector<Polynomial> components(const KVector& v) {
    if (v.grade() != 1) throw GradeError("components need a grade-1 field");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < v.dimension(); ++i) out.push_back(v.coefficient({i}));
    return out;
}

KForm wedge(const KForm& a, const KForm& b) { return wedge_impl(a, b); }
KVector wedge(const KVector& a, const KVector& b) { return wedge_impl(a, b); }

KForm d(const KForm& a) {
    KForm r(a.coords(), a.grade() + 1);
    IndexSet merged;
    for (const auto& [idx, f] : a.terms())
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            const int s = shuffle({j}, idx, merged);
            if (s == 0) continue;
            Polynomial df = f.partial(j);
            if (df.is_zero()) continue;
            r.add_term(merged, s > 0 ? df : -df);
        }
    return r;
}

KForm contract(const KVector& v, const KForm& a) {
    if (!same_coords(v.coords(), a.coords())) throw CoordinateMismatch();
    if (v.grade() > a.grade()) throw GradeError("multivector grade exceeds form grade");
    KForm r(a.coords(), a.grade() - v.grade());
    for (const auto& [jv, c] : v.terms())
        for (const auto& [ia, f] : a.terms()) {
            IndexSet rest = ia;
            int sign = 1;
            for (std::size_t j : jv) {
                sign *= interior_basis(j, rest);
                if (sign == 0) break;
            }
            if (sign == 0) continue;
            Polynomial p = c * f;
            r.add_term(rest, sign > 0 ? p : -p);
        }
    return r;
}

KForm lie_derivative(const KVector& v, const KForm& a) {
    if (!same_coords(v.coords(), a.coords())) throw CoordinateMismatch();
    if (v.grade() > a.grade() + 1) throw GradeError("multivector grade exceeds form grade + 1");
    const std::size_t out_grade = a.grade() + 1 - v.grade();
    KForm r(a.coords(), out_grade);
    r += contract(v, d(a));
    if (v.grade() <= a.grade()) r += d(contract(v, a));
    return r;
}

KForm homotopy(const KForm& a) {
    if (a.grade() == 0) throw GradeError("homotopy operator needs a form of grade >= 1");
    const auto& coords = a.coords();
    const std::size_t k = a.grade();
    KForm r(coords, k - 1);
    for (const auto& [idx, f] : a.terms())
        for (const auto& [mono, c] : f.terms()) {
            const Rational scale = c / Rational(static_cast<long>(k + mono.degree()));
            const Polynomial g = Polynomial::monomial(coords, mono, scale);
            for (std::size_t j = 0; j < k; ++j) {
                IndexSet rest = idx;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
                Polynomial term = Polynomial::variable(coords, idx[j]) * g;
                r.add_term(rest, j % 2 == 0 ? term : -term);
            }
        }
    return r;
}

int volume_pairing_sign(const IndexSet& j) {
    std::size_t parity = 0;
    for (std::size_t m = 0; m < j.size(); ++m) parity += j[m] - m;
    return parity % 2 == 0 ? 1 : -1;
}

KVector omega_inverse(const KForm& a, const KForm& omega) {
    if (!same_coords(a.coords(), omega.coords())) throw CoordinateMismatch();
    const auto& coords = a.coords();
    const std::size_t n = coords->size();
    if (!(omega == volume_form(coords))) throw std::invalid_argument("omega must be the standard volume form");
    if (a.grade() > n) throw GradeError("form grade exceeds dimension");
    KVector x(coords, n - a.grade());
    for (const auto& [idx, f] : a.terms()) {
        IndexSet comp;
        for (std::size_t i = 0, p = 0; i < n; ++i) {
            if (p < idx.size() && idx[p] == i)
                ++p;
            else
                comp.push_back(i);
        }
        x.add_term(comp, volume_pairing_sign(comp) > 0 ? f : -f);
    }
    return x;
}

std::vector<IndexSet> index_subsets(std::size_t n, std::size_t size) {
    std::vector<IndexSet> out;
    if (size > n) return out;
    IndexSet cur(size);
    for (std::size_t i = 0; i < size; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = size;
        while (i > 0 && cur[i - 1] == n - size + i - 1) --i;
        if (i == 0) return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
}

} // namespace nambu
