#include "gqc/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gqc {

namespace {

constexpr int kMaxQ = 1024;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Plain mod-p polynomial helpers on little-endian coefficient vectors,
// used only at construction time (before the tables exist).
std::vector<int> ztrim(std::vector<int> f, int p) {
    for (auto& c : f) c = ((c % p) + p) % p;
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

std::vector<int> zmod(std::vector<int> f, const std::vector<int>& g, int p) {
    // remainder of f by monic-after-scaling g
    f = ztrim(std::move(f), p);
    int linv = 1;
    {  // inverse of leading coefficient of g mod p
        int lc = g.back() % p;
        for (int t = 1; t < p; ++t)
            if (lc * t % p == 1) { linv = t; break; }
    }
    while (f.size() >= g.size() && !f.empty()) {
        int c = f.back() * linv % p;
        size_t off = f.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j)
            f[off + j] = ((f[off + j] - c * g[j]) % p + p) % p;
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f;
}

bool zirreducible(const std::vector<int>& f, int p) {
    // trial division by every monic polynomial of degree <= deg(f)/2
    int deg = (int)f.size() - 1;
    if (deg <= 0) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long k = 0; k < count; ++k) {
            std::vector<int> g(d + 1, 0);
            long long kk = k;
            for (int i = 0; i < d; ++i) { g[i] = (int)(kk % p); kk /= p; }
            g[d] = 1;
            if (zmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw precondition_error("Field: p must be prime, got " + std::to_string(p));
    if (n < 1) throw precondition_error("Field: extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxQ) throw precondition_error("Field: q = p^n exceeds supported size");
    }
    q_ = (int)q;
    if (n == 1) {
        mod_ = {0, 1};  // identity x
    } else {
        // ascending little-endian counter over the non-leading coefficients
        for (int k = 0; k < q_; ++k) {
            std::vector<int> cand(n + 1, 0);
            int kk = k;
            for (int i = 0; i < n; ++i) { cand[i] = kk % p; kk /= p; }
            cand[n] = 1;
            if (zirreducible(cand, p)) { mod_ = cand; break; }
        }
    }
    build_tables();
}

Field::Field(int p, int n, std::vector<int> modulus) : p_(p), n_(n), mod_(std::move(modulus)) {
    if (!is_prime(p)) throw precondition_error("Field: p must be prime, got " + std::to_string(p));
    if (n < 1) throw precondition_error("Field: extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxQ) throw precondition_error("Field: q = p^n exceeds supported size");
    }
    q_ = (int)q;
    for (auto& c : mod_) c = ((c % p) + p) % p;
    if ((int)mod_.size() != n + 1 || mod_.back() != 1)
        throw precondition_error("Field: modulus must be monic of degree n");
    if (n > 1 && !zirreducible(mod_, p))
        throw precondition_error("Field: modulus is reducible");
    build_tables();
}

void Field::build_tables() {
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    add_.assign((size_t)q_ * q_, 0);
    mul_.assign((size_t)q_ * q_, 0);

    auto decode = [&](int a) {
        std::vector<int> c(n_);
        for (int i = 0; i < n_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (int i = n_ - 1; i >= 0; --i) a = a * p_ + (i < (int)c.size() ? c[i] : 0);
        return a;
    };

    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        for (auto& x : ca) x = (p_ - x) % p_;
        neg_[a] = encode(ca);
    }
    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < q_; ++b) {
            auto cb = decode(b);
            std::vector<int> s(n_);
            for (int i = 0; i < n_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[(size_t)a * q_ + b] = encode(s);
        }
    }
    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        for (int b = a; b < q_; ++b) {
            auto cb = decode(b);
            std::vector<int> prod(2 * n_ - 1, 0);
            for (int i = 0; i < n_; ++i)
                if (ca[i])
                    for (int j = 0; j < n_; ++j)
                        prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            // reduce mod modulus
            for (int d = 2 * n_ - 2; d >= n_; --d) {
                int c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (int j = 0; j < n_; ++j)
                    prod[d - n_ + j] = ((prod[d - n_ + j] - c * mod_[j]) % p_ + p_) % p_;
            }
            prod.resize(n_);
            int v = encode(prod);
            mul_[(size_t)a * q_ + b] = v;
            mul_[(size_t)b * q_ + a] = v;
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[(size_t)a * q_ + b] == 1) { inv_[a] = b; break; }
        }
    }
}

int Field::inv(int a) const {
    if (a == 0) throw precondition_error("Field: inverse of zero");
    return inv_[a];
}

int Field::pow(int a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int Field::from_int(long long v) const {
    return (int)(((v % p_) + p_) % p_);
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c(n_);
    for (int i = 0; i < n_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
    if ((int)c.size() != n_)
        throw precondition_error("Field: coefficient vector must have length n");
    int a = 0;
    for (int i = n_ - 1; i >= 0; --i) a = a * p_ + ((c[i] % p_) + p_) % p_;
    return a;
}

std::string Field::elem_to_string(int a) const {
    if (n_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

int Field::parse_elem(const std::string& s) const {
    size_t i = 0;
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i < s.size() && s[i] == '[') {
        std::vector<int> c;
        ++i;
        while (true) {
            size_t j = i;
            while (j < s.size() && s[j] != ',' && s[j] != ']') ++j;
            if (j >= s.size()) throw parse_error("element literal: missing ']'");
            c.push_back(std::stoi(s.substr(i, j - i)));
            i = j + 1;
            if (s[j] == ']') break;
        }
        if ((int)c.size() != n_) throw parse_error("element literal: expected " + std::to_string(n_) + " coefficients");
        for (auto& x : c) x = ((x % p_) + p_) % p_;
        return from_coeffs(c);
    }
    try {
        return from_int(std::stoll(s));
    } catch (const std::exception&) {
        throw parse_error("bad field element literal: " + s);
    }
}

std::string Field::to_string() const {
    std::string s = "GF(" + std::to_string(p_) + "," + std::to_string(n_);
    if (n_ > 1) {
        // modulus printed over F_p in descending form
        std::string m;
        for (int i = n_; i >= 0; --i) {
            int c = mod_[i];
            if (!c) continue;
            if (!m.empty()) m += "+";
            if (i == 0) m += std::to_string(c);
            else {
                if (c != 1) m += std::to_string(c) + "*";
                m += (i == 1 ? "x" : "x^" + std::to_string(i));
            }
        }
        s += "," + (m.empty() ? "0" : m);
    }
    return s + ")";
}

Field Field::parse(const std::string& str) {
    auto fail = [&]() -> Field { throw parse_error("bad field spec: " + str); };
    std::string s;
    for (char c : str)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.substr(0, 3) != "GF(" || s.back() != ')') return fail();
    std::string body = s.substr(3, s.size() - 4);
    std::vector<std::string> parts;
    size_t pos = 0;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        (void)pos;
        if (c == ',' && depth == 0) { parts.push_back(cur); cur.clear(); continue; }
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        cur += c;
    }
    parts.push_back(cur);
    if (parts.size() < 2 || parts.size() > 3) return fail();
    int p, n;
    try {
        p = std::stoi(parts[0]);
        n = std::stoi(parts[1]);
    } catch (const std::exception&) {
        return fail();
    }
    if (parts.size() == 2) return Field(p, n);
    // modulus over F_p, e.g. x^3+x+1 — parse with a tiny term scanner
    std::vector<int> mod(n + 1, 0);
    const std::string& ms = parts[2];
    size_t i = 0;
    int sign = 1;
    while (i < ms.size()) {
        if (ms[i] == '+') { sign = 1; ++i; continue; }
        if (ms[i] == '-') { sign = -1; ++i; continue; }
        long long coef = 1;
        int deg = 0;
        if (std::isdigit((unsigned char)ms[i])) {
            size_t j = i;
            while (j < ms.size() && std::isdigit((unsigned char)ms[j])) ++j;
            coef = std::stoll(ms.substr(i, j - i));
            i = j;
            if (i < ms.size() && ms[i] == '*') ++i;
        }
        if (i < ms.size() && ms[i] == 'x') {
            ++i;
            deg = 1;
            if (i < ms.size() && ms[i] == '^') {
                ++i;
                size_t j = i;
                while (j < ms.size() && std::isdigit((unsigned char)ms[j])) ++j;
                deg = std::stoi(ms.substr(i, j - i));
                i = j;
            }
        }
        if (deg > n) throw parse_error("modulus degree exceeds n: " + str);
        mod[deg] = (int)(((mod[deg] + sign * coef) % p + p) % p);
    }
    return Field(p, n, mod);
}

}  // namespace gqc
