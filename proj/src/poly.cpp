#include "nambu/poly.hpp"

#include <numeric>
#include <ostream>
#include <set>

namespace nambu {

Coords::Coords(std::vector<std::string> names, std::vector<std::string> aliases)
    : names_(std::move(names)), aliases_(std::move(aliases)) {
    if (names_.empty()) throw std::invalid_argument("coordinate system needs at least one name");
    if (!aliases_.empty() && aliases_.size() != names_.size())
        throw std::invalid_argument("alias list must match the coordinate count");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (n.empty() || !seen.insert(n).second) throw std::invalid_argument("duplicate or empty coordinate name '" + n + "'");
    for (const auto& a : aliases_)
        if (a.empty() || !seen.insert(a).second) throw std::invalid_argument("alias '" + a + "' clashes with another name");
}

CoordsPtr Coords::standard(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return make(std::move(names));
}

CoordsPtr Coords::make(std::vector<std::string> names, std::vector<std::string> aliases) {
    return std::make_shared<const Coords>(std::move(names), std::move(aliases));
}

std::optional<std::size_t> Coords::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    for (std::size_t i = 0; i < aliases_.size(); ++i)
        if (aliases_[i] == name) return i;
    return std::nullopt;
}

bool same_coords(const CoordsPtr& a, const CoordsPtr& b) { return a == b || *a == *b; }

Monomial Monomial::variable(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.exps_.at(i) = 1;
    return m;
}

std::uint32_t Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0}); }

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

Polynomial::Polynomial(CoordsPtr coords) : coords_(std::move(coords)) {
    if (!coords_) throw std::invalid_argument("polynomial requires a coordinate system");
}

Polynomial::Polynomial(CoordsPtr coords, const Rational& constant) : Polynomial(std::move(coords)) {
    add_term(Monomial(coords_->size()), constant);
}

Polynomial Polynomial::variable(CoordsPtr coords, std::size_t i) {
    if (i >= coords->size()) throw std::out_of_range("variable index out of range");
    const auto n = coords->size();
    return monomial(std::move(coords), Monomial::variable(n, i), 1);
}

Polynomial Polynomial::monomial(CoordsPtr coords, Monomial m, const Rational& coef) {
    if (m.size() != coords->size()) throw std::invalid_argument("monomial arity does not match coordinates");
    Polynomial p(std::move(coords));
    p.add_term(m, coef);
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial(coords_->size()));
    return it == terms_.end() ? Rational{} : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same(const Polynomial& o) const {
    if (!same_coords(coords_, o.coords_)) throw CoordinateMismatch();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    Polynomial r(a.coords_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result(coords_, 1);
    Polynomial base(*this);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial(std::size_t i) const {
    if (i >= coords_->size()) throw std::out_of_range("partial derivative index out of range");
    Polynomial r(coords_);
    for (const auto& [m, c] : terms_) {
        const auto e = m[i];
        if (e == 0) continue;
        auto exps = m.exponents();
        exps[i] = e - 1;
        r.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
    }
    return r;
}

double Polynomial::eval(std::span<const double> point) const {
    if (point.size() != coords_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (point.size() != coords_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::embed(CoordsPtr target, std::size_t offset) const {
    if (coords_->size() + offset > target->size()) throw std::invalid_argument("target coordinate system too small");
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> exps(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) exps[i + offset] = m[i];
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += coords_->name(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += mag.to_string();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.to_string() + "*" + mono;
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_coords(a.coords_, b.coords_) && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

} // namespace nambu
