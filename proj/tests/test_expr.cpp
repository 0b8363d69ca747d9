#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liequant/parse.hpp"

using namespace liequant;

namespace {

struct Ctx {
    std::shared_ptr<SymbolTable> table = std::make_shared<SymbolTable>();
    std::shared_ptr<ExprContext> ctx;

    Ctx(std::initializer_list<std::string> coords, std::initializer_list<std::string> params = {}) {
        for (auto& c : coords) table->add_coordinate(c);
        for (auto& p : params) table->add_parameter(p, true);
        ctx = std::make_shared<ExprContext>(table);
    }
    Expr operator()(const std::string& text) const { return parse_expr(text, ctx); }
};

// deterministic generator for property tests
struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    unsigned long next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<unsigned>(state >> 33);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<unsigned long>(hi - lo + 1)); }
};

Expr random_poly(const Ctx& c, Lcg& rng, int nvars, int terms) {
    Expr e = Expr::zero(c.ctx);
    for (int t = 0; t < terms; ++t) {
        Expr term = Expr::rational(c.ctx, rng.range(-9, 9), rng.range(1, 5));
        if (rng.range(0, 3) == 0) term = term * Expr::imaginary_unit(c.ctx);
        for (int v = 0; v < nvars; ++v) {
            long e1 = rng.range(0, 2);
            if (e1) term = term * Expr::variable(c.ctx, v).pow(e1);
        }
        e += term;
    }
    return e;
}

} // namespace

TEST_CASE("parse: polynomial smoke test") {
    Ctx c({"q", "v", "t"});
    Expr e = c("q + v*t");
    CHECK(e == c("q") + c("v") * c("t"));
    CHECK(e.depends_on(0));
    CHECK(e.depends_on(1));
    CHECK(e.depends_on(2));
    CHECK(e.str() == "v*t + q");
}

TEST_CASE("parse: extended Galilei cocycle body") {
    Ctx c({"A1", "B", "V", "V1"}, {"m", "hbar"});
    Expr e = c("(m/hbar)*(A1*V + B*(V1*V + V1^2/2))");
    Expr byhand = c("m") / c("hbar") * (c("A1") * c("V") + c("B") * (c("V1") * c("V") + c("V1").pow(2) / c("2")));
    CHECK(e == byhand);
    CHECK(e.substitute({{c.table->require("A1"), Expr::zero(c.ctx)},
                        {c.table->require("V1"), Expr::zero(c.ctx)}})
              .is_zero());
}

TEST_CASE("parse: rational function tracks denominator") {
    Ctx c({"z1", "z1c", "z2", "z2c"});
    Expr e = c("1/(z1*z1c + z2*z2c)");
    CHECK(e.den() == (c("z1*z1c + z2*z2c")).num());
    CHECK((e * c("z1*z1c + z2*z2c")) == Expr::one(c.ctx));
}

TEST_CASE("parse: errors carry position and name") {
    Ctx c({"q"});
    CHECK_THROWS_AS(c("q + "), parse_error);
    CHECK_THROWS_AS(c("q + w"), parse_error);
    CHECK_THROWS_AS(c("(q"), parse_error);
    CHECK_THROWS_AS(c("q^x"), parse_error);
}

TEST_CASE("canonical form: gcd reduction and equality") {
    Ctx c({"x", "y"});
    CHECK(c("(x^2 - 1)/(x - 1)") == c("x + 1"));
    CHECK(c("(x^2 - y^2)/(x + y)") == c("x - y"));
    CHECK(c("x/x") == Expr::one(c.ctx));
    CHECK(c("(2*x + 2*y)/2") == c("x + y"));
    CHECK(c("(x*y + x)/(x)") == c("y + 1"));
    // identical canonical forms for different construction routes
    Expr a = (c("x") + c("y")).pow(3) / (c("x") + c("y"));
    Expr b = c("x^2 + 2*x*y + y^2");
    CHECK(a == b);
}

TEST_CASE("imaginary unit: i^2 = -1 exactly") {
    Ctx c({"x"});
    Expr i = Expr::imaginary_unit(c.ctx);
    CHECK(i * i == -Expr::one(c.ctx));
    CHECK(c("i^2 + 1").is_zero());
    CHECK((c("(x + i)*(x - i)")) == c("x^2 + 1"));
    CHECK(c("1/i") == -i);
}

TEST_CASE("diff: product and quotient basics") {
    Ctx c({"q", "v"});
    CHECK(c("q*v").diff("q") == c("v"));
    CHECK(c("q^3").diff("q") == c("3*q^2"));
    CHECK(c("1/q").diff("q") == c("-1/q^2"));
}

TEST_CASE("diff: boost generating function slope") {
    // d/dV of m*(V*x + V^2*t/2) = m*(x + V*t)
    Ctx c({"x", "t", "V"}, {"m"});
    Expr lam = c("m*(V*x + V^2*t/2)");
    CHECK(lam.diff("V") == c("m*(x + V*t)"));
}

TEST_CASE("diff: difference-quotient oracle on rational functions") {
    // (f(x+h) - f(x))/h at h = 0 equals the derivative; exact limit of the
    // rational quotient, computed independently of diff()
    Ctx c({"x", "h", "y"});
    int x = 0, h = 1;
    Lcg rng(20240809);
    for (int trial = 0; trial < 5; ++trial) {
        Expr f = random_poly(c, rng, 1, 4) / (c("x^2 + 1") + random_poly(c, rng, 1, 2) * c("x"));
        if (f.den().is_constant()) continue;
        Expr shifted = f.substitute({{x, c("x + h")}});
        Expr quotient = (shifted - f) / c("h");
        Expr limit = quotient.substitute({{h, Expr::zero(c.ctx)}});
        CHECK(limit == f.diff(x));
    }
}

TEST_CASE("substitute: basics and composition") {
    Ctx c({"q", "v", "w"});
    CHECK(c("q + v").substitute({{1, Expr::zero(c.ctx)}}) == c("q"));
    // simultaneous, not sequential
    Expr swapped = c("q - v").substitute({{0, c("v")}, {1, c("q")}});
    CHECK(swapped == c("v - q"));
    // composition on disjoint bindings commutes
    Expr e = c("q*v + w^2");
    Expr ab = e.substitute({{0, c("w + 1")}}).substitute({{1, c("w - 1")}});
    Expr ba = e.substitute({{1, c("w - 1")}}).substitute({{0, c("w + 1")}});
    CHECK(ab == ba);
}

TEST_CASE("substitute: zero denominator is reported") {
    Ctx c({"x", "y"});
    Expr f = c("1/(x - y)");
    CHECK_THROWS_AS(f.substitute({{0, c("y")}}), error);
}

TEST_CASE("adjoined root: reduction, denominators, derivatives") {
    auto table = std::make_shared<SymbolTable>();
    int A = table->add_coordinate("A");
    int D = table->add_coordinate("D");
    int s = table->add({"s", SymbolKind::Aux, true, true});
    auto ctx = std::make_shared<ExprContext>(table);
    ctx->define_aux_square(s, (Poly::variable(A) * Poly::variable(D)));
    auto E = [&](const std::string& t) { return parse_expr(t, ctx); };

    CHECK(E("s^2") == E("A*D"));
    CHECK(E("s^3") == E("A*D*s"));
    CHECK(E("s*s") == E("A*D"));
    // denominators are root-free after normalization
    Expr inv = E("1/s");
    CHECK(inv == E("s/(A*D)"));
    CHECK(inv * E("s") == Expr::one(ctx));
    // chain rule: d(s)/dA = D*s/(2*A*D) = s/(2*A)
    CHECK(E("s").diff(A) == E("s/(2*A)"));
    CHECK((E("s").diff(A) * E("s").diff(A)) == E("D/(4*A)"));
}

TEST_CASE("property: print/parse round trip") {
    Ctx c({"x", "y", "z"});
    Lcg rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Expr num = random_poly(c, rng, 3, 4);
        Expr den = random_poly(c, rng, 3, 2) + Expr::one(c.ctx);
        if (den.is_zero()) continue;
        Expr e = num / den;
        CHECK(parse_expr(e.str(), c.ctx) == e);
    }
}

TEST_CASE("property: Leibniz rule on random pairs") {
    Ctx c({"x", "y", "z"});
    Lcg rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Expr a = random_poly(c, rng, 3, 3);
        Expr b = random_poly(c, rng, 3, 3);
        int var = static_cast<int>(rng.range(0, 2));
        CHECK((a * b).diff(var) == a.diff(var) * b + a * b.diff(var));
    }
}

TEST_CASE("property: substitution respects arithmetic") {
    Ctx c({"x", "y"});
    Lcg rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        Expr a = random_poly(c, rng, 2, 3);
        Expr b = random_poly(c, rng, 2, 3);
        std::map<int, Expr> bind{{0, c("y + 2")}};
        CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
        CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    }
}
