#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "resint/errors.hpp"

namespace resint {

// Field element: either a prime-field residue (canonical, in [0,p)) or an
// arbitrary-precision rational (mpq keeps it gcd-reduced with positive
// denominator). All arithmetic goes through FieldCtx so the characteristic
// lives in one place (the ring), not in every coefficient.
class Coeff {
public:
    Coeff() : v_(static_cast<long long>(0)) {}
    static Coeff residue(long long r) { return Coeff(r); }
    static Coeff rational(mpq_class q) {
        q.canonicalize();
        return Coeff(std::move(q));
    }

    bool is_residue() const { return v_.index() == 0; }
    long long res() const { return std::get<0>(v_); }
    const mpq_class& rat() const { return std::get<1>(v_); }

    bool operator==(const Coeff& o) const { return v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

private:
    explicit Coeff(long long r) : v_(r) {}
    explicit Coeff(mpq_class q) : v_(std::move(q)) {}
    std::variant<long long, mpq_class> v_;
};

class FieldCtx {
public:
    explicit FieldCtx(long long characteristic = 0) : p_(characteristic) {
        if (p_ < 0) throw error("characteristic must be 0 or a prime");
        if (p_ > 0 && !is_prime(p_)) throw error("characteristic " + std::to_string(p_) + " is not prime");
        if (p_ > (1LL << 31)) throw error("prime characteristic must be < 2^31");
    }

    long long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Coeff zero() const { return from_int(0); }
    Coeff one() const { return from_int(1); }

    Coeff from_int(long long n) const {
        if (p_) return Coeff::residue(mod(n));
        return Coeff::rational(mpq_class(static_cast<long>(n)));
    }

    Coeff from_fraction(long long num, long long den) const {
        if (den == 0) throw error("zero denominator");
        if (p_) return mul(from_int(num), inv(from_int(den)));
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        return Coeff::rational(q);
    }

    Coeff from_mpq(const mpq_class& q) const {
        if (!p_) return Coeff::rational(q);
        // reduce a rational into F_p (denominator must be invertible)
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<long>(p_));
        mpz_class nr = num % pz, dr = den % pz;
        if (dr < 0) dr += pz;
        if (nr < 0) nr += pz;
        if (dr == 0) throw error("denominator not invertible mod p");
        Coeff n = Coeff::residue(nr.get_si());
        Coeff d = Coeff::residue(dr.get_si());
        return mul(n, inv(d));
    }

    bool is_zero(const Coeff& a) const {
        return p_ ? a.res() == 0 : a.rat() == 0;
    }
    bool is_one(const Coeff& a) const {
        return p_ ? a.res() == 1 : a.rat() == 1;
    }

    Coeff add(const Coeff& a, const Coeff& b) const {
        if (p_) return Coeff::residue(mod(a.res() + b.res()));
        return Coeff::rational(a.rat() + b.rat());
    }
    Coeff sub(const Coeff& a, const Coeff& b) const {
        if (p_) return Coeff::residue(mod(a.res() - b.res()));
        return Coeff::rational(a.rat() - b.rat());
    }
    Coeff neg(const Coeff& a) const {
        if (p_) return Coeff::residue(mod(-a.res()));
        return Coeff::rational(-a.rat());
    }
    Coeff mul(const Coeff& a, const Coeff& b) const {
        if (p_) return Coeff::residue(static_cast<long long>(
            (static_cast<__int128>(a.res()) * b.res()) % p_));
        return Coeff::rational(a.rat() * b.rat());
    }
    Coeff inv(const Coeff& a) const {
        if (is_zero(a)) throw error("division by zero coefficient");
        if (p_) return Coeff::residue(inv_mod(a.res()));
        return Coeff::rational(1 / a.rat());
    }
    Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

    std::string to_string(const Coeff& a) const {
        if (p_) return std::to_string(a.res());
        return a.rat().get_str();
    }

    // sign matters only for pretty-printing; F_p residues print as-is
    bool is_negative(const Coeff& a) const {
        return !p_ && a.rat() < 0;
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    long long mod(long long x) const {
        long long r = x % p_;
        return r < 0 ? r + p_ : r;
    }
    long long inv_mod(long long a) const {
        long long t = 0, nt = 1, r = p_, nr = a % p_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw error("residue not invertible");
        return t < 0 ? t + p_ : t;
    }

    long long p_;
};

}  // namespace resint
