#include "liequant/expr.hpp"

#include <algorithm>
#include <sstream>

namespace liequant {

void ExprContext::define_aux_square(int aux_var, Poly square) {
    if (table().info(aux_var).kind != SymbolKind::Aux)
        throw error("symbol is not an adjoined root: " + table().name(aux_var));
    for (auto& [m, c] : square.terms()) {
        (void)c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && table().info(static_cast<int>(i)).kind == SymbolKind::Aux)
                throw error("defining square of an adjoined root must be root-free");
    }
    aux_squares_[aux_var] = std::move(square);
}

const Poly& ExprContext::aux_square(int var) const {
    auto it = aux_squares_.find(var);
    if (it == aux_squares_.end()) throw error("no defining square for symbol index " + std::to_string(var));
    return it->second;
}

namespace {

// reduce every aux exponent below 2 using s^2 = E
Poly reduce_aux(const Poly& p, const ExprContext& ctx) {
    if (ctx.aux_squares().empty()) return p;
    bool needed = false;
    for (auto& [v, E] : ctx.aux_squares()) {
        (void)E;
        if (p.degree_in(v) >= 2) {
            needed = true;
            break;
        }
    }
    if (!needed) return p;
    Poly out;
    for (auto& [m, c] : p.terms()) {
        Poly term;
        Monomial base = m;
        Poly extra(GRat(1));
        bool have_extra = false;
        for (auto& [v, E] : ctx.aux_squares()) {
            if (static_cast<size_t>(v) < base.size() && base[v] >= 2) {
                unsigned q = base[v] / 2;
                base[v] %= 2;
                extra = have_extra ? extra * E.pow(q) : E.pow(q);
                have_extra = true;
            }
        }
        while (!base.empty() && base.back() == 0) base.pop_back();
        term.add_term(base, c);
        out += have_extra ? term * extra : term;
    }
    return out;
}

int find_aux_in(const Poly& p, const ExprContext& ctx) {
    for (auto& [v, E] : ctx.aux_squares()) {
        (void)E;
        if (p.depends_on(v)) return v;
    }
    return -1;
}

// positive-rational content over the Gaussian integers
BigRat rational_content(const Poly& p) {
    BigInt num_gcd = 0, den_lcm = 1;
    auto absorb = [&](const BigRat& q) {
        if (q == 0) return;
        BigInt n = rat_num(q);
        if (n < 0) n = -n;
        num_gcd = boost::multiprecision::gcd(num_gcd, n);
        BigInt d = rat_den(q);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    };
    for (auto& [m, c] : p.terms()) {
        (void)m;
        absorb(c.re());
        absorb(c.im());
    }
    if (num_gcd == 0) return BigRat(1);
    return BigRat(num_gcd) / BigRat(den_lcm);
}

// unique unit u in {1,i,-1,-i} with L/u in the quadrant {re>0, im>=0}
GRat canonical_unit(const GRat& L) {
    const GRat units[4] = {GRat(1), GRat::i(), GRat(-1), -GRat::i()};
    for (const auto& u : units) {
        GRat t = L / u;
        if (t.re() > 0 && t.im() >= 0) return u;
    }
    return GRat(1); // L == 0
}

} // namespace

Expr::Expr(ExprContextPtr ctx, GRat c) : ctx_(std::move(ctx)), num_(Poly(std::move(c))), den_(GRat(1)) {}

Expr::Expr(ExprContextPtr ctx, Poly num, Poly den) : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Expr Expr::rational(const ExprContextPtr& ctx, long num, long den) {
    return Expr(ctx, GRat(BigRat(num) / BigRat(den)));
}

Expr Expr::variable(const ExprContextPtr& ctx, int var) {
    return Expr(ctx, Poly::variable(var), Poly(GRat(1)));
}

Expr Expr::variable(const ExprContextPtr& ctx, const std::string& name) {
    return variable(ctx, ctx->table().require(name));
}

GRat Expr::constant_value() const {
    if (!is_constant()) throw error("expression is not constant: " + str());
    if (num_.is_zero()) return GRat(0);
    return num_.constant_value() / den_.constant_value();
}

void Expr::normalize() {
    if (!ctx_) throw error("expression without context");
    num_ = reduce_aux(num_, *ctx_);
    den_ = reduce_aux(den_, *ctx_);
    if (den_.is_zero()) throw error("zero denominator");
    // clear adjoined roots out of the denominator
    for (int v = find_aux_in(den_, *ctx_); v >= 0; v = find_aux_in(den_, *ctx_)) {
        auto parts = den_.univariate_in(v);
        Poly d0 = parts[0];
        Poly d1 = parts.size() > 1 ? parts[1] : Poly();
        Poly conj = d0 - d1 * Poly::variable(v);
        num_ = reduce_aux(num_ * conj, *ctx_);
        den_ = reduce_aux(den_ * conj, *ctx_);
        if (den_.is_zero()) throw error("denominator is a zero divisor (defining square is a perfect square?)");
        if (den_.depends_on(v)) throw error("internal: root elimination failed");
    }
    if (num_.is_zero()) {
        den_ = Poly(GRat(1));
        return;
    }
    // common monomial factor (cheap), then full gcd
    Monomial mc;
    {
        Monomial ca = num_.monomial_content(), cb = den_.monomial_content();
        Monomial g(std::min(ca.size(), cb.size()));
        for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(ca[i], cb[i]);
        while (!g.empty() && g.back() == 0) g.pop_back();
        mc = g;
    }
    if (!mc.empty()) {
        Poly d;
        d.add_term(mc, GRat(1));
        num_ = *poly_divide_exact(num_, d);
        den_ = *poly_divide_exact(den_, d);
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            auto qn = poly_divide_exact(num_, g);
            auto qd = poly_divide_exact(den_, g);
            if (!qn || !qd) throw error("internal: gcd does not divide");
            num_ = *qn;
            den_ = *qd;
        }
    }
    // primitive, sign-normalized denominator
    BigRat c = rational_content(den_);
    GRat u = canonical_unit(den_.leading_coefficient() * GRat(BigRat(1) / c));
    GRat scale = GRat(1) / (GRat(c) * u);
    den_ *= scale;
    num_ *= scale;
}

Expr Expr::operator-() const {
    Expr r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {
void check_ctx(const Expr& a, const Expr& b) {
    if (a.context().get() != b.context().get()) throw error("expressions from different contexts");
}
} // namespace

Expr operator+(const Expr& a, const Expr& b) {
    check_ctx(a, b);
    if (a.den() == b.den()) return Expr(a.context(), a.num() + b.num(), a.den());
    return Expr(a.context(), a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Expr operator-(const Expr& a, const Expr& b) {
    check_ctx(a, b);
    if (a.den() == b.den()) return Expr(a.context(), a.num() - b.num(), a.den());
    return Expr(a.context(), a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Expr operator*(const Expr& a, const Expr& b) {
    check_ctx(a, b);
    return Expr(a.context(), a.num() * b.num(), a.den() * b.den());
}

Expr operator/(const Expr& a, const Expr& b) {
    check_ctx(a, b);
    if (b.is_zero()) throw error("division by zero expression");
    return Expr(a.context(), a.num() * b.den(), a.den() * b.num());
}

Expr Expr::pow(long e) const {
    if (e == 0) return one(ctx_);
    Expr base = e < 0 ? one(ctx_) / *this : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Expr r = one(ctx_);
    while (n) {
        if (n & 1ul) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.context().get() != b.context().get()) return false;
    return a.num() == b.num() && a.den() == b.den();
}

Expr Expr::diff(int var) const {
    auto dpoly = [&](const Poly& p) -> Expr {
        Expr total(ctx_, p.diff(var), Poly(GRat(1)));
        for (auto& [s, E] : ctx_->aux_squares()) {
            Poly ps = p.diff(s);
            if (ps.is_zero()) continue;
            Poly dE = E.diff(var);
            if (dE.is_zero()) continue;
            // ds/dvar = dE/dvar * s / (2 E)
            total += Expr(ctx_, ps * dE * Poly::variable(s), E * Poly(GRat(2)));
        }
        return total;
    };
    Expr dn = dpoly(num_);
    Expr dd = dpoly(den_);
    Expr denE(ctx_, den_, Poly(GRat(1)));
    Expr numE(ctx_, num_, Poly(GRat(1)));
    return dn / denE - numE * dd / (denE * denE);
}

Expr Expr::diff(const std::string& name) const { return diff(ctx_->table().require(name)); }

namespace {

Expr eval_poly(const Poly& p, const std::map<int, Expr>& bindings, const ExprContextPtr& ctx) {
    // precompute powers per bound variable
    std::map<int, std::vector<Expr>> powers;
    Expr out = Expr::zero(ctx);
    for (auto& [m, c] : p.terms()) {
        Expr term = Expr::constant(ctx, c);
        Poly passthrough(GRat(1));
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            auto it = bindings.find(static_cast<int>(v));
            if (it == bindings.end()) {
                passthrough = passthrough * Poly::variable(static_cast<int>(v), m[v]);
                continue;
            }
            auto& cache = powers[static_cast<int>(v)];
            if (cache.empty()) cache.push_back(it->second);
            while (cache.size() < m[v]) cache.push_back(cache.back() * it->second);
            term *= cache[m[v] - 1];
        }
        term *= Expr(ctx, passthrough, Poly(GRat(1)));
        out += term;
    }
    return out;
}

} // namespace

Expr Expr::substitute(const std::map<int, Expr>& bindings) const {
    for (auto& [v, e] : bindings) {
        if (v < 0 || v >= ctx_->table().size()) throw error("substitution target out of range");
        check_ctx(*this, e);
    }
    Expr n = eval_poly(num_, bindings, ctx_);
    Expr d = eval_poly(den_, bindings, ctx_);
    if (d.is_zero()) throw error("substitution produced an identically zero denominator");
    return n / d;
}

std::string Expr::str() const {
    auto poly_str = [&](const Poly& p) -> std::string {
        if (p.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const auto& [m, c] = *it;
            GRat coeff = c;
            bool negative = coeff.im() == 0 && coeff.re() < 0;
            if (negative) coeff = -coeff;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::string mono;
            for (size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ctx_->table().name(static_cast<int>(v));
                if (m[v] > 1) mono += "^" + std::to_string(m[v]);
            }
            if (mono.empty()) {
                os << coeff.str();
            } else if (coeff.is_one()) {
                os << mono;
            } else {
                os << coeff.str() << "*" << mono;
            }
        }
        return os.str();
    };
    if (den_.is_constant() && den_.constant_value().is_one()) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

} // namespace liequant
