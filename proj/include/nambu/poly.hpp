#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nambu/rational.hpp"

namespace nambu {

/// Ordered list of distinct coordinate names. The position of a name is its
/// identity everywhere else in the library. Optional aliases map extra
/// spellings onto the same positions (x, y, z for x0, x1, x2).
class Coords {
  public:
    explicit Coords(std::vector<std::string> names, std::vector<std::string> aliases = {});

    /// x0 ... x{n-1}
    static std::shared_ptr<const Coords> standard(std::size_t n);
    static std::shared_ptr<const Coords> make(std::vector<std::string> names,
                                              std::vector<std::string> aliases = {});

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::string>& aliases() const noexcept { return aliases_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Coords& a, const Coords& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
    std::vector<std::string> aliases_;
};

using CoordsPtr = std::shared_ptr<const Coords>;

bool same_coords(const CoordsPtr& a, const CoordsPtr& b);

struct CoordinateMismatch : std::invalid_argument {
    CoordinateMismatch() : std::invalid_argument("operands live on different coordinate systems") {}
};

/// Dense exponent vector; position i is the power of coordinate i.
class Monomial {
  public:
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint32_t degree() const;
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  private:
    std::vector<std::uint32_t> exps_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by Monomial in ascending lexicographic order of the
/// exponent vector; zero coefficients are never stored, so two polynomials
/// over the same coordinates are equal iff their term maps are equal.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(CoordsPtr coords);
    Polynomial(CoordsPtr coords, const Rational& constant);

    static Polynomial variable(CoordsPtr coords, std::size_t i);
    static Polynomial monomial(CoordsPtr coords, Monomial m, const Rational& coef);

    const CoordsPtr& coords() const noexcept { return coords_; }
    std::size_t dimension() const noexcept { return coords_->size(); }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    Polynomial pow(std::uint32_t e) const;

    /// Formal partial derivative with respect to coordinate i.
    Polynomial partial(std::size_t i) const;

    double eval(std::span<const double> point) const;
    Rational eval(std::span<const Rational> point) const;

    /// Re-expresses the polynomial on `target`, sending coordinate i to
    /// coordinate i + offset.
    Polynomial embed(CoordsPtr target, std::size_t offset) const;

    /// Canonical text form, e.g. "3*z - 3*y" or "1/2*x0^2 + 1/2*x1^2".
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

  private:
    void add_term(const Monomial& m, const Rational& c);
    void require_same(const Polynomial& o) const;

    CoordsPtr coords_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace nambu
