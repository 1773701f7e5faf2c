#include "hullcraft/field.hpp"

#include <algorithm>
#include <sstream>

namespace hullcraft {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense little-endian polynomials over GF(p), for modulus search only.
using Poly = std::vector<std::uint32_t>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    const std::size_t d = mod.size() - 1; // mod is monic of degree d
    for (std::size_t i = acc.size(); i-- > d;) {
        std::uint64_t c = acc[i];
        if (!c) continue;
        for (std::size_t j = 0; j <= d; ++j) {
            std::uint64_t t = (c * mod[j]) % p;
            acc[i - d + j] = (acc[i - d + j] + p - t) % p;
        }
    }
    Poly out(d, 0);
    for (std::size_t i = 0; i < d && i < acc.size(); ++i)
        out[i] = static_cast<std::uint32_t>(acc[i]);
    return out;
}

std::uint32_t mod_pow_u32(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    while (poly_deg(b) >= 0) {
        int da = poly_deg(a), db = poly_deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        std::uint32_t f =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[da]) *
                                       mod_pow_u32(b[db], p - 2, p) % p);
        for (int j = 0; j <= db; ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(f) * b[j] % p;
            a[da - db + j] = static_cast<std::uint32_t>((a[da - db + j] + p - t) % p);
        }
        if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
    }
    return a;
}

// A monic degree-D polynomial is irreducible over GF(p) iff it shares no
// factor with x^{p^i} - x for i = 1..D/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t D = f.size() - 1;
    Poly x(D, 0);
    if (D >= 2) x[1] = 1;
    else return false;
    Poly g = x;
    for (std::size_t i = 1; i <= D / 2; ++i) {
        // g <- g^p mod f
        Poly acc(D, 0);
        acc[0] = 1;
        Poly base = g;
        std::uint32_t e = p;
        while (e) {
            if (e & 1) acc = poly_mul_mod(acc, base, f, p);
            base = poly_mul_mod(base, base, f, p);
            e >>= 1;
        }
        g = acc;
        Poly h = g;
        h[1] = (h[1] + p - 1) % p;
        if (poly_deg(poly_gcd(f, h, p)) > 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

} // namespace

std::shared_ptr<const FieldTower> FieldTower::build(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p));
    if (m == 0) throw BadSpec("extension degree m must be positive");
    const std::uint32_t D = 2 * m;
    double sz = 1.0;
    for (std::uint32_t i = 0; i < D; ++i) sz *= p;
    if (sz > 2147483648.0) // 2^31 desk-scale guard
        throw SizeExceeded("p^(2m) = " + std::to_string(p) + "^" + std::to_string(D));

    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->p_ = p;
    t->m_ = m;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    t->q_ = static_cast<std::uint32_t>(q);
    t->q2_ = static_cast<std::uint32_t>(q * q);

    // Lexicographically smallest monic irreducible of degree 2m: iterate the
    // integer encoding of the non-leading coefficients.
    std::uint64_t limit = t->q2_; // p^D
    for (std::uint64_t v = 0; v < limit; ++v) {
        Poly f(D + 1, 0);
        std::uint64_t w = v;
        for (std::uint32_t i = 0; i < D; ++i) {
            f[i] = static_cast<std::uint32_t>(w % p);
            w /= p;
        }
        f[D] = 1;
        if (poly_irreducible(f, p)) {
            t->modulus_ = f;
            break;
        }
    }

    t->init_tables();
    return t;
}

Elt FieldTower::poly_mul(Elt a, Elt b) const {
    const std::uint32_t D = 2 * m_;
    std::vector<std::uint32_t> da(D), db(D);
    std::uint32_t wa = a, wb = b;
    for (std::uint32_t i = 0; i < D; ++i) {
        da[i] = wa % p_;
        wa /= p_;
        db[i] = wb % p_;
        wb /= p_;
    }
    std::vector<std::uint64_t> acc(2 * D - 1, 0);
    for (std::uint32_t i = 0; i < D; ++i)
        if (da[i])
            for (std::uint32_t j = 0; j < D; ++j)
                acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    for (std::size_t i = acc.size(); i-- > D;) {
        std::uint64_t c = acc[i];
        if (!c) continue;
        for (std::uint32_t j = 0; j <= D; ++j) {
            std::uint64_t s = (c * modulus_[j]) % p_;
            acc[i - D + j] = (acc[i - D + j] + p_ - s) % p_;
        }
    }
    Elt out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < D; ++i) {
        out += static_cast<Elt>(acc[i] * mult);
        mult *= p_;
    }
    return out;
}

void FieldTower::init_tables() {
    const std::uint32_t n = q2_;

    if (n <= 65536) {
        neg_tab_.resize(n);
        for (Elt a = 0; a < n; ++a) {
            Elt out = 0;
            std::uint64_t mult = 1;
            std::uint32_t w = a;
            for (std::uint32_t i = 0; i < 2 * m_; ++i) {
                std::uint32_t d = w % p_;
                w /= p_;
                out += static_cast<Elt>(((p_ - d) % p_) * mult);
                mult *= p_;
            }
            neg_tab_[a] = out;
        }
    }

    if (n <= 1024) {
        have_add_ = true;
        add_tab_.resize(static_cast<std::size_t>(n) * n);
        for (Elt a = 0; a < n; ++a)
            for (Elt b = 0; b < n; ++b) {
                Elt out = 0;
                std::uint64_t mult = 1;
                std::uint32_t wa = a, wb = b;
                for (std::uint32_t i = 0; i < 2 * m_; ++i) {
                    out += static_cast<Elt>(((wa % p_ + wb % p_) % p_) * mult);
                    wa /= p_;
                    wb /= p_;
                    mult *= p_;
                }
                add_tab_[static_cast<std::size_t>(a) * n + b] = out;
            }
    }

    // Smallest primitive element, then log/antilog when the field is small.
    const auto factors = prime_factors(n - 1);
    for (Elt g = 2; g < n; ++g) {
        bool primitive = true;
        for (auto r : factors)
            if (pow(g, (n - 1) / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            generator_ = g;
            break;
        }
    }
    if (n <= 65536) {
        have_log_ = true;
        log_.assign(n, 0);
        exp_.assign(2 * (n - 1), 0);
        Elt x = 1;
        for (std::uint32_t i = 0; i < n - 1; ++i) {
            exp_[i] = x;
            exp_[i + (n - 1)] = x;
            log_[x] = i;
            x = poly_mul(x, generator_);
        }
    }

    if (n <= 65536) {
        frob_.resize(n);
        norm_.resize(n);
        for (Elt a = 0; a < n; ++a) {
            frob_[a] = pow(a, q_);
            norm_[a] = pow(a, q_ + 1);
        }
    }
}

Elt FieldTower::add(Elt a, Elt b) const {
    if (have_add_) return add_tab_[static_cast<std::size_t>(a) * q2_ + b];
    Elt out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < 2 * m_; ++i) {
        out += static_cast<Elt>(((a % p_ + b % p_) % p_) * mult);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Elt FieldTower::neg(Elt a) const {
    if (!neg_tab_.empty()) return neg_tab_[a];
    Elt out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < 2 * m_; ++i) {
        out += static_cast<Elt>(((p_ - a % p_) % p_) * mult);
        a /= p_;
        mult *= p_;
    }
    return out;
}

Elt FieldTower::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt FieldTower::mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    if (have_log_) return exp_[log_[a] + log_[b]];
    return poly_mul(a, b);
}

Elt FieldTower::inv(Elt a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (have_log_) return exp_[(q2_ - 1) - log_[a]];
    return pow(a, q2_ - 2);
}

Elt FieldTower::div(Elt a, Elt b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    return mul(a, inv(b));
}

Elt FieldTower::pow(Elt a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (have_log_) {
        std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q2_ - 1))) % (q2_ - 1);
        return exp_[le];
    }
    Elt r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldTower::order(Elt x) const {
    if (x == 0) return 0;
    std::uint32_t o = 1;
    Elt y = x;
    while (y != 1) {
        y = mul(y, x);
        ++o;
    }
    return o;
}

std::vector<Elt> FieldTower::subgroup_of_order(std::uint32_t n) const {
    if (n == 0 || (q2_ - 1) % n != 0)
        throw NotADivisor(std::to_string(n) + " does not divide " + std::to_string(q2_ - 1));
    const Elt s = pow(generator_, (q2_ - 1) / n);
    std::vector<Elt> out(n);
    Elt x = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
        out[j] = x;
        x = mul(x, s);
    }
    return out;
}

std::vector<Elt> FieldTower::subfield_star() const {
    std::vector<Elt> out;
    out.reserve(q_ - 1);
    for (Elt x = 1; x < q2_; ++x)
        if (in_subfield(x)) out.push_back(x);
    return out;
}

Elt FieldTower::norm_preimage(Elt b) const {
    if (b == 0 || !in_subfield(b)) throw BadSpec("norm preimage of a non-subfield element");
    for (Elt x = 1; x < q2_; ++x)
        if (norm_[x] == b) return x;
    throw Error("norm surjectivity violated"); // unreachable
}

std::string FieldTower::header() const {
    std::ostringstream os;
    os << "GF(" << q2_ << ") p=" << p_ << " modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

std::shared_ptr<const FieldTower> FieldTower::parse_header(const std::string& line) {
    std::uint64_t q2 = 0, p = 0;
    std::string mods;
    std::istringstream is(line);
    std::string tok;
    if (!(is >> tok) || tok.rfind("GF(", 0) != 0 || tok.back() != ')')
        throw ParseError("bad field header: " + line);
    q2 = std::stoull(tok.substr(3, tok.size() - 4));
    while (is >> tok) {
        if (tok.rfind("p=", 0) == 0) p = std::stoull(tok.substr(2));
        else if (tok.rfind("modulus=", 0) == 0) mods = tok.substr(8);
    }
    if (!p || mods.empty()) throw ParseError("bad field header: " + line);
    std::vector<std::uint32_t> coeffs;
    std::istringstream ms(mods);
    std::string c;
    while (std::getline(ms, c, ','))
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(c)));
    if (coeffs.size() < 3 || coeffs.size() % 2 == 0)
        throw ParseError("modulus degree must be even and >= 2");
    const std::uint32_t m = static_cast<std::uint32_t>((coeffs.size() - 1) / 2);
    auto t = build(static_cast<std::uint32_t>(p), m);
    if (t->q2() != q2 || t->modulus() != coeffs)
        throw ParseError("field header does not match the canonical tower");
    return t;
}

Elt arith(const FieldTower& t, Elt a, Elt b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return t.add(a, b);
        case ArithOp::Sub: return t.sub(a, b);
        case ArithOp::Mul: return t.mul(a, b);
        case ArithOp::Div: return t.div(a, b);
        case ArithOp::Neg: return t.neg(a);
        case ArithOp::Inv: return t.inv(a);
        case ArithOp::Pow: return t.pow(a, b);
    }
    throw Error("unknown op");
}

} // namespace hullcraft
