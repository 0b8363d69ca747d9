#ifndef LIEQUANT_POLY_HPP
#define LIEQUANT_POLY_HPP

#include "liequant/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace liequant {

/// Exponent vector, trailing zeros trimmed. Index = symbol index.
using Monomial = std::vector<unsigned>;

unsigned mono_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b; throws if not divisible.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& b, const Monomial& a);

/// Graded lexicographic order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q(i).
class Poly {
public:
    using TermMap = std::map<Monomial, GRat, GrlexLess>;

    Poly() = default;
    explicit Poly(GRat c);
    static Poly variable(int idx, unsigned exp = 1);
    static Poly constant(long n) { return Poly(GRat(n)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (zero polynomial -> 0).
    GRat constant_value() const;

    const TermMap& terms() const { return terms_; }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    unsigned total_degree() const;
    unsigned degree_in(int var) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }
    int max_var() const;

    /// Leading (grlex-greatest) term.
    const Monomial& leading_monomial() const;
    const GRat& leading_coefficient() const;

    void add_term(const Monomial& m, const GRat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const GRat& c);
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative (aux chain rule lives in Expr).
    Poly diff(int var) const;

    /// View as univariate in `var` with Poly coefficients, dense low-to-high.
    std::vector<Poly> univariate_in(int var) const;
    static Poly from_univariate(const std::vector<Poly>& coeffs, int var);

    /// Common monomial factor of all terms (1 if constant present).
    Monomial monomial_content() const;

private:
    TermMap terms_;
};

/// Exact division; nullopt when b does not divide a.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

/// Multivariate gcd over Q(i), monic-normalized leading coefficient 1.
/// gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

} // namespace liequant

#endif
