#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "sgr/errors.hpp"

namespace sgr {

/**
 * Element of Z/2[t, x, y] / (t^2, x^4, y^2), graded by
 * deg t = 1, deg y = 3, deg x = 4.
 *
 * The ring has 16 monomials t^a x^b y^c (a <= 1, b <= 3, c <= 1), stored as
 * one bit each: bit index a + 2c + 4b.
 */
class TruncatedPoly {
public:
    TruncatedPoly() = default;

    static TruncatedPoly zero() { return TruncatedPoly{}; }
    static TruncatedPoly one() { return monomial(0, 0, 0); }

    static TruncatedPoly monomial(int et, int ex, int ey) {
        if (et < 0 || et > 1 || ex < 0 || ex > 3 || ey < 0 || ey > 1)
            throw DomainError("TruncatedPoly: exponents must satisfy t^<=1, x^<=3, y^<=1");
        TruncatedPoly p;
        p.bits_ = static_cast<std::uint16_t>(1u << index(et, ex, ey));
        return p;
    }

    bool coeff(int et, int ex, int ey) const { return (bits_ >> index(et, ex, ey)) & 1u; }

    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    /// Constant term is the coefficient of 1.
    bool constant_term() const { return bits_ & 1u; }

    friend TruncatedPoly operator+(TruncatedPoly a, TruncatedPoly b) {
        a.bits_ ^= b.bits_;
        return a;
    }

    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
        TruncatedPoly prod;
        for (int i = 0; i < 16; ++i) {
            if (!((a.bits_ >> i) & 1u)) continue;
            for (int j = 0; j < 16; ++j) {
                if (!((b.bits_ >> j) & 1u)) continue;
                int et = (i & 1) + (j & 1);
                int ey = ((i >> 1) & 1) + ((j >> 1) & 1);
                int ex = (i >> 2) + (j >> 2);
                if (et > 1 || ey > 1 || ex > 3) continue; // truncated to 0
                prod.bits_ ^= static_cast<std::uint16_t>(1u << index(et, ex, ey));
            }
        }
        return prod;
    }

    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const TruncatedPoly& a, const TruncatedPoly& b) { return !(a == b); }

    /// Inverse of a unit (constant term 1): geometric series in u = p + 1,
    /// which is nilpotent (u^6 = 0, every monomial has exponent sum <= 5).
    TruncatedPoly inverse() const {
        if (!constant_term()) throw DomainError("TruncatedPoly::inverse: not a unit (constant term 0)");
        TruncatedPoly u = *this + one();
        TruncatedPoly inv = one(), power = one();
        for (int i = 1; i <= 5; ++i) {
            power = power * u;
            inv = inv + power;
        }
        return inv;
    }

    TruncatedPoly pow(unsigned e) const {
        TruncatedPoly r = one();
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Sum of the monomials of graded degree exactly d (deg t^a x^b y^c = a + 4b + 3c).
    TruncatedPoly graded_component(int d) const {
        TruncatedPoly comp;
        for (int i = 0; i < 16; ++i) {
            if (!((bits_ >> i) & 1u)) continue;
            int et = i & 1, ey = (i >> 1) & 1, ex = i >> 2;
            if (et + 4 * ex + 3 * ey == d) comp.bits_ |= static_cast<std::uint16_t>(1u << i);
        }
        return comp;
    }

    std::string to_string() const {
        if (bits_ == 0) return "0";
        std::ostringstream os;
        bool first = true;
        for (int ex = 0; ex <= 3; ++ex)
            for (int ey = 0; ey <= 1; ++ey)
                for (int et = 0; et <= 1; ++et) {
                    if (!coeff(et, ex, ey)) continue;
                    if (!first) os << " + ";
                    first = false;
                    if (et == 0 && ex == 0 && ey == 0) {
                        os << "1";
                        continue;
                    }
                    bool need_sep = false;
                    if (ex > 0) {
                        os << "x";
                        if (ex > 1) os << "^" << ex;
                        need_sep = true;
                    }
                    if (et > 0) {
                        if (need_sep) os << "*";
                        os << "t";
                        need_sep = true;
                    }
                    if (ey > 0) {
                        if (need_sep) os << "*";
                        os << "y";
                    }
                }
        return os.str();
    }

private:
    static int index(int et, int ex, int ey) { return et + 2 * ey + 4 * ex; }

    std::uint16_t bits_ = 0;
};

/**
 * Total Stiefel-Whitney class of the virtual bundle behind the Sp(3)
 * exterior-square reduction into SO(15): with constituent classes
 * 1 + x + ty, 1 + x, 1, 1 + ty the product
 *
 *   w = (1 + x + ty)^3 (1 + x)^-3 (1 + ty)^-1
 *
 * must equal 1 + (x + x^2 + x^3) t y, with nonzero degree-16 component
 * x^3 t y. Throws std::logic_error if either check fails (a ring-arithmetic
 * bug); returns w.
 */
inline TruncatedPoly verify_lemma_sp3() {
    const TruncatedPoly one = TruncatedPoly::one();
    const TruncatedPoly x = TruncatedPoly::monomial(0, 1, 0);
    const TruncatedPoly ty = TruncatedPoly::monomial(1, 0, 1);

    TruncatedPoly w = (one + x + ty).pow(3) * (one + x).inverse().pow(3) * (one + ty).inverse();

    const TruncatedPoly x2 = x * x;
    const TruncatedPoly x3 = x2 * x;
    const TruncatedPoly expected = one + (x + x2 + x3) * ty;
    if (w != expected)
        throw std::logic_error("verify_lemma_sp3: product != 1 + (x + x^2 + x^3)ty, got " + w.to_string());

    const TruncatedPoly top = w.graded_component(16);
    if (top != x3 * ty)
        throw std::logic_error("verify_lemma_sp3: degree-16 component is not x^3*t*y, got " + top.to_string());
    return w;
}

} // namespace sgr
