#include "liequant/poly.hpp"

#include <algorithm>

namespace liequant {

namespace {

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial g(std::min(a.size(), b.size()));
    for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(a[i], b[i]);
    trim(g);
    return g;
}

BigInt int_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

} // namespace

unsigned mono_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    if (!mono_divides(b, a)) throw error("monomial division is not exact");
    Monomial r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

bool mono_divides(const Monomial& b, const Monomial& a) {
    if (b.size() > a.size()) {
        for (size_t i = a.size(); i < b.size(); ++i)
            if (b[i] > 0) return false;
    }
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Poly::Poly(GRat c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::variable(int idx, unsigned exp) {
    Poly p;
    if (exp == 0) return Poly(GRat(1));
    Monomial m(idx + 1, 0);
    m[idx] = exp;
    p.terms_.emplace(std::move(m), GRat(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GRat Poly::constant_value() const {
    if (terms_.empty()) return GRat(0);
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GRat(0) : it->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

unsigned Poly::degree_in(int var) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_)
        if (static_cast<size_t>(var) < m.size()) d = std::max(d, m[var]);
    return d;
}

int Poly::max_var() const {
    int mv = -1;
    for (auto& [m, c] : terms_) mv = std::max(mv, static_cast<int>(m.size()) - 1);
    return mv;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const GRat& Poly::leading_coefficient() const {
    if (terms_.empty()) throw error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const GRat& c) {
    if (c.is_zero()) return;
    Monomial key = m;
    trim(key);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const GRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly r(GRat(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::diff(int var) const {
    Poly r;
    for (auto& [m, c] : terms_) {
        if (static_cast<size_t>(var) >= m.size() || m[var] == 0) continue;
        Monomial d = m;
        unsigned e = d[var];
        d[var] -= 1;
        trim(d);
        r.add_term(d, c * GRat(static_cast<long>(e)));
    }
    return r;
}

std::vector<Poly> Poly::univariate_in(int var) const {
    std::vector<Poly> coeffs(degree_in(var) + 1);
    for (auto& [m, c] : terms_) {
        unsigned e = static_cast<size_t>(var) < m.size() ? m[var] : 0;
        Monomial rest = m;
        if (static_cast<size_t>(var) < rest.size()) rest[var] = 0;
        trim(rest);
        coeffs[e].add_term(rest, c);
    }
    return coeffs;
}

Poly Poly::from_univariate(const std::vector<Poly>& coeffs, int var) {
    Poly r;
    for (size_t d = 0; d < coeffs.size(); ++d) r += coeffs[d] * Poly::variable(var, static_cast<unsigned>(d));
    return r;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return {};
    auto it = terms_.begin();
    Monomial g = it->first;
    for (++it; it != terms_.end() && !g.empty(); ++it) g = mono_gcd(g, it->first);
    return g;
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (b.is_constant()) {
        Poly q = a;
        q *= GRat(1) / b.constant_value();
        return q;
    }
    Poly r = a, q;
    const Monomial& lb = b.leading_monomial();
    const GRat& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!mono_divides(lb, lr)) return std::nullopt;
        Monomial qm = mono_div(lr, lb);
        GRat qc = r.leading_coefficient() / cb;
        Poly t;
        t.add_term(qm, qc);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

Poly make_monic(Poly p) {
    if (p.is_zero()) return p;
    p *= GRat(1) / p.leading_coefficient();
    return p;
}

int pick_main_var(const Poly& a, const Poly& b) {
    int n = std::max(a.max_var(), b.max_var());
    for (int v = 0; v <= n; ++v)
        if (a.depends_on(v) || b.depends_on(v)) return v;
    return -1;
}

// gcd of the coefficient list (content with respect to the main variable)
Poly coeff_gcd(const std::vector<Poly>& cs) {
    Poly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant()) return Poly(GRat(1));
    }
    return g.is_zero() ? Poly(GRat(0)) : make_monic(g);
}

// pseudo-remainder of A by B as univariate polys in v (coefficients Poly)
std::vector<Poly> pseudo_rem(std::vector<Poly> A, const std::vector<Poly>& B) {
    int degB = static_cast<int>(B.size()) - 1;
    const Poly& lb = B.back();
    while (static_cast<int>(A.size()) - 1 >= degB) {
        int degA = static_cast<int>(A.size()) - 1;
        Poly la = A.back();
        // A = lb*A - la * x^(degA-degB) * B
        for (auto& c : A) c = c * lb;
        for (int j = 0; j <= degB; ++j) A[degA - degB + j] -= la * B[j];
        while (!A.empty() && A.back().is_zero()) A.pop_back();
        if (A.empty()) break;
    }
    return A;
}

Poly primitive_part(const std::vector<Poly>& cs, int v) {
    Poly g = coeff_gcd(cs);
    Poly p = Poly::from_univariate(cs, v);
    if (g.is_constant()) return p;
    auto q = poly_divide_exact(p, g);
    if (!q) throw error("internal: content division failed");
    return *q;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);

    // split off common monomial factor
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mc = mono_gcd(ma, mb);
    Poly mono;
    mono.add_term(mc, GRat(1));
    if (!ma.empty()) {
        Poly d;
        d.add_term(ma, GRat(1));
        a = *poly_divide_exact(a, d);
    }
    if (!mb.empty()) {
        Poly d;
        d.add_term(mb, GRat(1));
        b = *poly_divide_exact(b, d);
    }
    if (a.is_constant() || b.is_constant()) return mono;

    // cheap exact-divisibility probes avoid most PRS runs
    if (poly_divide_exact(a, b)) return make_monic(b) * mono;
    if (poly_divide_exact(b, a)) return make_monic(a) * mono;

    int v = pick_main_var(a, b);
    std::vector<Poly> A = a.univariate_in(v);
    std::vector<Poly> B = b.univariate_in(v);
    if (A.size() == 1 || B.size() == 1) {
        // one of them does not depend on v after content stripping
        Poly ca = coeff_gcd(A), cb = coeff_gcd(B);
        return poly_gcd(ca, cb) * mono;
    }

    Poly contA = coeff_gcd(A), contB = coeff_gcd(B);
    Poly cont = poly_gcd(contA, contB);

    Poly pa = primitive_part(A, v);
    Poly pb = primitive_part(B, v);

    while (true) {
        std::vector<Poly> UA = pa.univariate_in(v);
        std::vector<Poly> UB = pb.univariate_in(v);
        if (UA.size() < UB.size()) std::swap(UA, UB), std::swap(pa, pb);
        std::vector<Poly> R = pseudo_rem(UA, UB);
        if (R.empty()) {
            return make_monic(pb * cont) * mono;
        }
        if (R.size() == 1) {
            // remainder free of v: primitive parts are coprime in v
            return make_monic(cont) * mono;
        }
        pa = pb;
        pb = primitive_part(R, v);
    }
}

} // namespace liequant
