#ifndef LIEQUANT_EXPR_HPP
#define LIEQUANT_EXPR_HPP

#include "liequant/poly.hpp"
#include "liequant/symbols.hpp"

#include <map>
#include <memory>
#include <string>

namespace liequant {

/// Shared evaluation context: the symbol table plus the defining squares
/// of adjoined root symbols (s^2 = square polynomial, square aux-free).
class ExprContext {
public:
    explicit ExprContext(SymbolTablePtr table) : table_(std::move(table)) {}

    const SymbolTable& table() const { return *table_; }
    SymbolTablePtr table_ptr() const { return table_; }

    void define_aux_square(int aux_var, Poly square);
    bool is_aux(int var) const { return aux_squares_.count(var) > 0; }
    const Poly& aux_square(int var) const;
    const std::map<int, Poly>& aux_squares() const { return aux_squares_; }

private:
    SymbolTablePtr table_;
    std::map<int, Poly> aux_squares_;
};

using ExprContextPtr = std::shared_ptr<const ExprContext>;

/// Exact rational function over Q(i) in the context's symbols.
///
/// Canonical form: numerator/denominator coprime, aux exponents reduced
/// below 2, denominator aux-free, primitive over the Gaussian integers,
/// leading coefficient in the canonical quadrant (re > 0, or re = 0 and
/// im > 0 componentwise selector). Two Exprs are mathematically equal iff
/// their canonical forms coincide.
class Expr {
public:
    Expr() = default;
    Expr(ExprContextPtr ctx, GRat c);
    Expr(ExprContextPtr ctx, Poly num, Poly den);

    static Expr zero(const ExprContextPtr& ctx) { return Expr(ctx, GRat(0)); }
    static Expr one(const ExprContextPtr& ctx) { return Expr(ctx, GRat(1)); }
    static Expr constant(const ExprContextPtr& ctx, GRat c) { return Expr(ctx, std::move(c)); }
    static Expr rational(const ExprContextPtr& ctx, long num, long den = 1);
    static Expr imaginary_unit(const ExprContextPtr& ctx) { return Expr(ctx, GRat::i()); }
    static Expr variable(const ExprContextPtr& ctx, int var);
    static Expr variable(const ExprContextPtr& ctx, const std::string& name);

    const ExprContextPtr& context() const { return ctx_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_constant().
    GRat constant_value() const;
    bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

    Expr operator-() const;
    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }
    Expr& operator/=(const Expr& o) { return *this = *this / o; }
    Expr pow(long e) const;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Exact partial derivative; adjoined roots differentiate through
    /// d(s)/dx = (dE/dx) s / (2E) where s^2 = E.
    Expr diff(int var) const;
    Expr diff(const std::string& name) const;

    /// Simultaneous substitution var -> expression. Bindings must share the
    /// context. Throws when a denominator collapses to zero.
    Expr substitute(const std::map<int, Expr>& bindings) const;

    std::string str() const;

private:
    void normalize();

    ExprContextPtr ctx_;
    Poly num_;
    Poly den_ = Poly(GRat(1));
};

} // namespace liequant

#endif
