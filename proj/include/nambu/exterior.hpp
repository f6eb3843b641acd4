#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nambu/poly.hpp"

namespace nambu {

/// Strictly increasing list of coordinate indices naming a basis element
/// dx_{i1}^...^dx_{ik} (or d/dx_{i1}^...^d/dx_{ik}).
using IndexSet = std::vector<std::size_t>;

enum class GradedKind { Form, Multivector };

/// Homogeneous element of the exterior algebra over polynomial coefficients:
/// a k-form when Kind is Form, a k-vector field when Kind is Multivector.
///
/// The term map never holds a zero coefficient, so every zero element has the
/// empty map as its single representation. A grade above the dimension is
/// allowed and is always zero (there are no basis elements of that length);
/// this is what d returns for a top-degree form.
template <GradedKind Kind>
class Graded {
  public:
    using TermMap = std::map<IndexSet, Polynomial>;

    Graded(CoordsPtr coords, std::size_t grade);

    /// Grade-0 element carrying a single function.
    static Graded scalar(const Polynomial& f);

    /// coef times the basis element on `idx`. The indices need not be
    /// sorted: they are sorted with the permutation sign, and a repeated
    /// index yields zero.
    static Graded basis(CoordsPtr coords, IndexSet idx, const Polynomial& coef);
    static Graded basis(CoordsPtr coords, IndexSet idx);

    const CoordsPtr& coords() const noexcept { return coords_; }
    std::size_t dimension() const noexcept { return coords_->size(); }
    std::size_t grade() const noexcept { return grade_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient on a sorted index set; zero when absent.
    Polynomial coefficient(const IndexSet& idx) const;

    /// Accumulates coef on a strictly increasing index set.
    void add_term(const IndexSet& idx, const Polynomial& coef);

    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);
    Graded& operator*=(const Polynomial& f);

    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(Graded a, const Polynomial& f) { return a *= f; }
    friend Graded operator*(const Polynomial& f, Graded a) { return a *= f; }
    Graded operator-() const;

    friend bool operator==(const Graded& a, const Graded& b) {
        return same_coords(a.coords_, b.coords_) && a.grade_ == b.grade_ && a.terms_ == b.terms_;
    }

  private:
    void require_compatible(const Graded& o) const;

    CoordsPtr coords_;
    std::size_t grade_;
    TermMap terms_;
};

using KForm = Graded<GradedKind::Form>;
using KVector = Graded<GradedKind::Multivector>;

extern template class Graded<GradedKind::Form>;
extern template class Graded<GradedKind::Multivector>;

struct GradeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// dx_i
KForm dx(const CoordsPtr& coords, std::size_t i);
/// d/dx_i
KVector dd(const CoordsPtr& coords, std::size_t i);
/// dx_0 ^ ... ^ dx_{n-1}
KForm volume_form(const CoordsPtr& coords);
/// sum_i components[i] d/dx_i
KVector vector_field(const std::vector<Polynomial>& components);
/// Components of a grade-1 multivector, one per coordinate.
std::vector<Polynomial> components(const KVector& v);

KForm wedge(const KForm& a, const KForm& b);
KVector wedge(const KVector& a, const KVector& b);

/// Exterior derivative. A grade-n form maps to the zero form of grade n+1.
KForm d(const KForm& a);

/// Interior product of a multivector with a form. For u1^...^uk the
/// contraction is applied first-factor-first: i_{uk}(...(i_{u1}(a))).
/// Throws GradeError when v.grade() > a.grade().
KForm contract(const KVector& v, const KForm& a);

/// i_v(da) + d(i_v a); a contraction whose multivector outranks the form is
/// taken as zero.
KForm lie_derivative(const KVector& v, const KForm& a);

/// Homotopy operator centred at the origin. Satisfies d(K a) + K(d a) = a
/// for every polynomial form of grade >= 1. Throws GradeError on grade 0.
KForm homotopy(const KForm& a);

/// Sign of contract(basis(J), volume) relative to dx over the complement of J.
int volume_pairing_sign(const IndexSet& j);

/// Solves contract(X, omega) = a for X. Requires omega to be the standard
/// volume form on a's coordinates.
KVector omega_inverse(const KForm& a, const KForm& omega);

/// All strictly increasing subsets of {0..n-1} with `size` elements, in
/// lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t size);

} // namespace nambu
