#include "gqc/poly.hpp"

#include <algorithm>
#include <cctype>

namespace gqc {

FqPoly fq_trim(std::vector<int> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return {std::move(c)};
}

FqPoly fq_add(const Field& F, const FqPoly& f, const FqPoly& g) {
    std::vector<int> out(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out[i] = F.add(out[i], g.c[i]);
    return fq_trim(std::move(out));
}

FqPoly fq_neg(const Field& F, const FqPoly& f) {
    std::vector<int> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = F.neg(f.c[i]);
    return {std::move(out)};
}

FqPoly fq_sub(const Field& F, const FqPoly& f, const FqPoly& g) {
    return fq_add(F, f, fq_neg(F, g));
}

FqPoly fq_mul(const Field& F, const FqPoly& f, const FqPoly& g) {
    if (f.is_zero() || g.is_zero()) return FqPoly::zero();
    std::vector<int> out(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i]) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(f.c[i], g.c[j]));
    }
    return fq_trim(std::move(out));
}

FqPoly fq_scale(const Field& F, int c, const FqPoly& f) {
    if (!c) return FqPoly::zero();
    std::vector<int> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = F.mul(c, f.c[i]);
    return {std::move(out)};
}

FqPoly fq_shift(const FqPoly& f, int k) {
    if (f.is_zero()) return f;
    std::vector<int> out(f.c.size() + k, 0);
    std::copy(f.c.begin(), f.c.end(), out.begin() + k);
    return {std::move(out)};
}

FqPoly fq_pow(const Field& F, const FqPoly& f, int e) {
    FqPoly r = FqPoly::one();
    for (int i = 0; i < e; ++i) r = fq_mul(F, r, f);
    return r;
}

FqPoly fq_make_monic(const Field& F, const FqPoly& f) {
    if (f.is_zero() || f.c.back() == 1) return f;
    return fq_scale(F, F.inv(f.c.back()), f);
}

std::pair<FqPoly, FqPoly> fq_divmod(const Field& F, const FqPoly& f, const FqPoly& g) {
    if (g.is_zero()) throw precondition_error("divmod: division by zero");
    if (g.c.back() != 1) throw precondition_error("divmod: divisor must be monic");
    std::vector<int> rem = f.c;
    std::vector<int> quo(f.c.size() > g.c.size() - 1 ? f.c.size() - g.c.size() + 1 : 0, 0);
    int dr = (int)rem.size() - 1;
    while (!rem.empty() && dr >= g.deg()) {
        int c = rem[dr];
        if (c) {
            quo[dr - g.deg()] = c;
            for (int j = 0; j <= g.deg(); ++j)
                rem[dr - g.deg() + j] = F.sub(rem[dr - g.deg() + j], F.mul(c, g.c[j]));
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        dr = (int)rem.size() - 1;
    }
    return {fq_trim(std::move(quo)), fq_trim(std::move(rem))};
}

FqPoly fq_mod(const Field& F, const FqPoly& f, const FqPoly& g) {
    return fq_divmod(F, f, g).second;
}

bool fq_divides(const Field& F, const FqPoly& a, const FqPoly& f) {
    if (a.is_zero()) return f.is_zero();
    return fq_mod(F, f, fq_make_monic(F, a)).is_zero();
}

FqPoly fq_gcd(const Field& F, FqPoly f, FqPoly g) {
    if (f.is_zero() && g.is_zero()) throw precondition_error("gcd(0,0) is undefined");
    while (!g.is_zero()) {
        FqPoly r = fq_mod(F, f, fq_make_monic(F, g));
        f = std::move(g);
        g = std::move(r);
    }
    return fq_make_monic(F, f);
}

FqPoly fq_lcm(const Field& F, const FqPoly& f, const FqPoly& g) {
    if (f.is_zero() || g.is_zero()) return FqPoly::zero();
    FqPoly d = fq_gcd(F, f, g);
    FqPoly q = fq_divmod(F, fq_mul(F, f, g), d).first;
    return fq_make_monic(F, q);
}

Xgcd fq_xgcd(const Field& F, const FqPoly& f, const FqPoly& g) {
    FqPoly r0 = f, r1 = g;
    FqPoly a0 = FqPoly::one(), a1 = FqPoly::zero();
    FqPoly b0 = FqPoly::zero(), b1 = FqPoly::one();
    while (!r1.is_zero()) {
        FqPoly r1m = fq_make_monic(F, r1);
        int lc_inv = F.inv(r1.c.back());
        auto [q, r] = fq_divmod(F, r0, r1m);
        q = fq_scale(F, lc_inv, q);  // quotient w.r.t. the unscaled r1
        r0 = r1;
        r1 = r;
        FqPoly a2 = fq_sub(F, a0, fq_mul(F, q, a1));
        FqPoly b2 = fq_sub(F, b0, fq_mul(F, q, b1));
        a0 = a1; a1 = a2;
        b0 = b1; b1 = b2;
    }
    if (!r0.is_zero() && r0.c.back() != 1) {
        int s = F.inv(r0.c.back());
        r0 = fq_scale(F, s, r0);
        a0 = fq_scale(F, s, a0);
        b0 = fq_scale(F, s, b0);
    }
    return {r0, a0, b0};
}

FqPoly fq_xm1(const Field& F, int m) {
    if (m < 1) throw precondition_error("x^m-1 needs m >= 1");
    std::vector<int> c(m + 1, 0);
    c[0] = F.neg(1);
    c[m] = 1;
    return {std::move(c)};
}

RPoly r_trim(const Field&, std::vector<REl> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return {std::move(c)};
}

RPoly r_add(const Field& F, const RPoly& f, const RPoly& g) {
    std::vector<REl> out(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out[i] = r_add(F, out[i], g.c[i]);
    return r_trim(F, std::move(out));
}

RPoly r_neg(const Field& F, const RPoly& f) {
    std::vector<REl> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = r_neg(F, f.c[i]);
    return {std::move(out)};
}

RPoly r_sub(const Field& F, const RPoly& f, const RPoly& g) {
    return r_add(F, f, r_neg(F, g));
}

RPoly r_mul(const Field& F, const RPoly& f, const RPoly& g) {
    if (f.is_zero() || g.is_zero()) return RPoly::zero();
    std::vector<REl> out(f.c.size() + g.c.size() - 1);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            out[i + j] = r_add(F, out[i + j], r_mul(F, f.c[i], g.c[j]));
    }
    return r_trim(F, std::move(out));
}

RPoly r_scale(const Field& F, REl c, const RPoly& f) {
    std::vector<REl> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = r_mul(F, c, f.c[i]);
    return r_trim(F, std::move(out));
}

RPoly r_shift(const RPoly& f, int k) {
    if (f.is_zero()) return f;
    std::vector<REl> out(f.c.size() + k);
    std::copy(f.c.begin(), f.c.end(), out.begin() + k);
    return {std::move(out)};
}

RPoly r_pow(const Field& F, const RPoly& f, int e) {
    RPoly r = RPoly::one();
    for (int i = 0; i < e; ++i) r = r_mul(F, r, f);
    return r;
}

std::pair<RPoly, RPoly> r_divmod(const Field& F, const RPoly& f, const RPoly& g) {
    if (g.is_zero()) throw precondition_error("divmod: division by zero");
    if (!(g.c.back() == r_one())) throw precondition_error("divmod: divisor must be monic");
    std::vector<REl> rem = f.c;
    std::vector<REl> quo(f.c.size() > g.c.size() - 1 ? f.c.size() - g.c.size() + 1 : 0);
    int dr = (int)rem.size() - 1;
    while (!rem.empty() && dr >= g.deg()) {
        REl c = rem[dr];
        if (!c.is_zero()) {
            quo[dr - g.deg()] = c;
            for (int j = 0; j <= g.deg(); ++j)
                rem[dr - g.deg() + j] = r_sub(F, rem[dr - g.deg() + j], r_mul(F, c, g.c[j]));
        }
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        dr = (int)rem.size() - 1;
    }
    return {r_trim(F, std::move(quo)), r_trim(F, std::move(rem))};
}

RPoly r_mod(const Field& F, const RPoly& f, const RPoly& g) {
    return r_divmod(F, f, g).second;
}

RPoly r_mulmod(const Field& F, const RPoly& f, const RPoly& g, const RPoly& mod) {
    return r_mod(F, r_mul(F, f, g), mod);
}

RPoly r_xm1(const Field& F, int m) {
    return lift(fq_xm1(F, m));
}

FqPoly bar(const Field&, const RPoly& f) {
    std::vector<int> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i].a;
    return fq_trim(std::move(out));
}

FqPoly u_part(const Field&, const RPoly& f) {
    std::vector<int> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = f.c[i].b;
    return fq_trim(std::move(out));
}

RPoly lift(const FqPoly& f) {
    std::vector<REl> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = {f.c[i], 0};
    return {std::move(out)};
}

RPoly u_times(const FqPoly& f) {
    std::vector<REl> out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = {0, f.c[i]};
    return {std::move(out)};
}

RPoly r_from_parts(const Field& F, const FqPoly& a, const FqPoly& b) {
    return r_add(F, lift(a), u_times(b));
}

bool factor_order_less(const FqPoly& a, const FqPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = 0; i <= a.deg(); ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] > b.c[i];
    }
    return false;
}

CyclotomicFactorization factor_cyclotomic(const Field& F, int m) {
    if (m < 1) throw precondition_error("factor_cyclotomic: m must be >= 1");
    CyclotomicFactorization out;
    out.m = m;
    out.e = 0;
    out.p_power = 1;
    int mt = m;
    while (mt % F.p() == 0) {
        mt /= F.p();
        ++out.e;
        out.p_power *= F.p();
    }
    out.m_reduced = mt;

    // Trial division of x^mt - 1 in increasing candidate degree; the smallest
    // nontrivial monic divisor found at each step is automatically irreducible.
    FqPoly rem = fq_xm1(F, mt);
    int d = 1;
    while (rem.deg() > 0) {
        if (d > rem.deg() / 2) {
            out.factors.push_back(rem);
            break;
        }
        bool found = false;
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (long long k = 0; k < count && !found; ++k) {
            std::vector<int> cand(d + 1, 0);
            long long kk = k;
            for (int i = 0; i < d; ++i) { cand[i] = (int)(kk % F.q()); kk /= F.q(); }
            cand[d] = 1;
            FqPoly g{cand};
            auto [q, r] = fq_divmod(F, rem, g);
            if (r.is_zero()) {
                out.factors.push_back(g);
                rem = q;
                found = true;
            }
        }
        if (!found) ++d;
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_order_less);
    return out;
}

std::vector<RPoly> crt_idempotents(const Field& F, const CyclotomicFactorization& fact) {
    FqPoly whole = fq_xm1(F, fact.m);
    std::vector<RPoly> out;
    out.reserve(fact.factors.size());
    for (const auto& g : fact.factors) {
        FqPoly G = fq_pow(F, g, fact.p_power);
        FqPoly ghat = fq_divmod(F, whole, G).first;
        // b*ghat + c*G = 1 over F_q, then eps = b*ghat mod (x^m - 1)
        Xgcd x = fq_xgcd(F, ghat, G);
        if (!(x.d == FqPoly::one()))
            throw precondition_error("crt_idempotents: factor powers are not coprime");
        FqPoly eps = fq_mod(F, fq_mul(F, x.a, ghat), whole);
        out.push_back(lift(eps));
    }
    return out;
}

bool is_regular(const Field& F, const RPoly& f, int m) {
    FqPoly fb = bar(F, f);
    if (fb.is_zero()) return false;
    return fq_gcd(F, fb, fq_xm1(F, m)) == FqPoly::one();
}

namespace {

// ----- printing -----

std::string coef_token(const Field& F, REl c) {
    if (c.b == 0) return F.elem_to_string(c.a);
    if (c.a == 0) {
        if (c.b == 1) return "u";
        return "u*" + F.elem_to_string(c.b);
    }
    std::string s = "(" + F.elem_to_string(c.a) + "+u";
    if (c.b != 1) s += "*" + F.elem_to_string(c.b);
    return s + ")";
}

std::string poly_to_string_impl(const Field& F, const std::vector<REl>& c) {
    if (c.empty()) return "0";
    std::string out;
    for (int i = (int)c.size() - 1; i >= 0; --i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string tok = coef_token(F, c[i]);
        if (i == 0) {
            out += tok;
        } else {
            std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
            out += (tok == "1") ? xs : tok + "*" + xs;
        }
    }
    return out.empty() ? "0" : out;
}

// ----- parsing -----

struct Parser {
    const Field& F;
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("polynomial parse error at position " + std::to_string(i) + ": " + what + " in '" + s + "'");
    }

    long long number() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) fail("expected number");
        long long v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    }

    RPoly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        char c = s[i];
        if (std::isdigit((unsigned char)c)) {
            int e = F.from_int(number());
            return e ? RPoly{{{e, 0}}} : RPoly::zero();
        }
        if (c == '[') {
            size_t j = s.find(']', i);
            if (j == std::string::npos) fail("missing ']'");
            int e = F.parse_elem(s.substr(i, j - i + 1));
            i = j + 1;
            return e ? RPoly{{{e, 0}}} : RPoly::zero();
        }
        if (c == 'u') {
            ++i;
            return RPoly{{{0, 1}}};
        }
        if (c == 'x') {
            ++i;
            return RPoly{{{0, 0}, {1, 0}}};
        }
        if (c == '(') {
            ++i;
            RPoly e1 = expr();
            if (peek() == ',') {
                ++i;
                RPoly e2 = expr();
                if (!eat(')')) fail("missing ')'");
                if (e1.deg() > 0 || e2.deg() > 0) fail("(a,b) parts must be constants");
                REl a = e1.c.empty() ? REl{} : e1.c[0];
                REl b = e2.c.empty() ? REl{} : e2.c[0];
                if (a.b != 0 || b.b != 0) fail("(a,b) parts must be field elements");
                REl v{a.a, b.a};
                return v.is_zero() ? RPoly::zero() : RPoly{{v}};
            }
            if (!eat(')')) fail("missing ')'");
            return e1;
        }
        fail("unexpected character");
    }

    RPoly factor() {
        RPoly a = atom();
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            long long e = number();
            if (e < 0) fail("negative exponent");
            RPoly r = RPoly::one();
            for (long long k = 0; k < e; ++k) r = r_mul(F, r, a);
            return r;
        }
        return a;
    }

    RPoly term() {
        RPoly t = factor();
        while (peek() == '*') {
            ++i;
            t = r_mul(F, t, factor());
        }
        return t;
    }

    RPoly expr() {
        bool neg = false;
        if (peek() == '+') ++i;
        else if (peek() == '-') { neg = true; ++i; }
        RPoly acc = term();
        if (neg) acc = r_neg(F, acc);
        while (true) {
            char c = peek();
            if (c == '+') { ++i; acc = r_add(F, acc, term()); }
            else if (c == '-') { ++i; acc = r_sub(F, acc, term()); }
            else break;
        }
        return acc;
    }
};

}  // namespace

std::string rpoly_to_string(const Field& F, const RPoly& f) {
    return poly_to_string_impl(F, f.c);
}

std::string fqpoly_to_string(const Field& F, const FqPoly& f) {
    return rpoly_to_string(F, lift(f));
}

RPoly parse_rpoly(const Field& F, const std::string& s) {
    Parser p{F, s};
    RPoly r = p.expr();
    p.skip();
    if (p.i != s.size()) p.fail("trailing input");
    return r;
}

FqPoly parse_fqpoly(const Field& F, const std::string& s) {
    RPoly r = parse_rpoly(F, s);
    if (!u_part(F, r).is_zero())
        throw parse_error("expected a polynomial over F_q (no u terms): " + s);
    return bar(F, r);
}

}  // namespace gqc
