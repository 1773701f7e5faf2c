#ifndef HULLCRAFT_FIELD_HPP
#define HULLCRAFT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hullcraft/errors.hpp"

namespace hullcraft {

/// Element of GF(q^2), encoded as an integer in [0, q^2): the little-endian
/// base-p digits of the value are the polynomial coordinates over GF(p).
/// 0 encodes the zero element, 1 the unit.
using Elt = std::uint32_t;

/// The field tower GF(p) < GF(q) < GF(q^2), q = p^m.
///
/// GF(q^2) is realized as GF(p)[x]/(f) where f is the lexicographically
/// smallest monic irreducible polynomial of degree 2m over GF(p) (smallest by
/// the integer encoding of its coefficient sequence). The stored generator is
/// the smallest element, in encoding order, of multiplicative order q^2-1.
/// Towers are immutable after construction and safe to share across threads;
/// all operations are pure.
class FieldTower {
  public:
    /// Builds the tower. Deterministic: identical (p, m) give identical towers.
    /// Throws NotPrime if p is composite, SizeExceeded if p^(2m) > 2^31.
    static std::shared_ptr<const FieldTower> build(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t q2() const { return q2_; }
    /// Monic irreducible modulus, little-endian coefficients, degree 2m.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elt generator() const { return generator_; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    /// Throws DivisionByZero if b == 0.
    Elt div(Elt a, Elt b) const;
    /// Throws DivisionByZero if a == 0.
    Elt inv(Elt a) const;
    /// a^e, e >= 0; pow(0,0) = 1.
    Elt pow(Elt a, std::uint64_t e) const;

    /// The q-power Frobenius x -> x^q; an involution on GF(q^2) fixing GF(q).
    Elt frobenius_q(Elt x) const { return frob_.empty() ? pow(x, q_) : frob_[x]; }
    /// The norm x -> x^{q+1}, landing in the GF(q) subfield.
    Elt norm_q(Elt x) const { return norm_.empty() ? pow(x, q_ + 1) : norm_[x]; }
    /// True iff x lies in the GF(q) subfield (fixed by Frobenius).
    bool in_subfield(Elt x) const { return frobenius_q(x) == x; }

    /// Multiplicative order (0 for the zero element).
    std::uint32_t order(Elt x) const;

    /// The n distinct n-th roots of unity as powers g^{(q^2-1)/n * j}, j = 0..n-1,
    /// of the fixed generator. Throws NotADivisor if n does not divide q^2-1.
    std::vector<Elt> subgroup_of_order(std::uint32_t n) const;

    /// Nonzero subfield elements GF(q)*, in encoding order.
    std::vector<Elt> subfield_star() const;

    /// Smallest element (encoding order) with norm_q equal to b; b must be a
    /// nonzero subfield element. The norm GF(q^2)* -> GF(q)* is surjective, so
    /// a preimage always exists.
    Elt norm_preimage(Elt b) const;

    /// Image of an integer in the prime subfield (n mod p).
    Elt from_int(std::uint64_t v) const { return static_cast<Elt>(v % p_); }

    /// Header line `GF(p^{2m}) p=<p> modulus=<c_0,...,c_{2m}>` used by all
    /// exported artifacts.
    std::string header() const;
    /// Parses a header line; rebuilds the tower and checks the modulus matches
    /// the canonical one. Throws ParseError on mismatch or bad syntax.
    static std::shared_ptr<const FieldTower> parse_header(const std::string& line);

    bool same_field(const FieldTower& other) const {
        return p_ == other.p_ && m_ == other.m_;
    }

  private:
    FieldTower() = default;
    void init_tables();
    Elt poly_mul(Elt a, Elt b) const; // multiplication mod the modulus

    std::uint32_t p_ = 0, m_ = 0, q_ = 0, q2_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elt generator_ = 0;

    // q2 <= 2^16: log/antilog tables drive mul/inv; below 1025 a full addition
    // table as well. Larger fields fall back to digit/polynomial arithmetic.
    bool have_log_ = false;
    std::vector<std::uint32_t> log_, exp_;
    bool have_add_ = false;
    std::vector<Elt> add_tab_;
    std::vector<Elt> frob_, norm_, neg_tab_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Dispatch table over the element operations; Pow reads b as a non-negative
/// integer exponent.
enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv, Pow };
Elt arith(const FieldTower& t, Elt a, Elt b, ArithOp op);

} // namespace hullcraft

#endif
