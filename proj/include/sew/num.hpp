#pragma once

// Exact scalars: rationals and cyclotomic numbers of conductor 24.
// Every zero test in the operator algebra goes through these types, so
// there is no floating point anywhere in the library.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sew {

struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make_checked(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make_checked((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return make_checked((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    // Reduce into [0,1); phases live in Q/Z.
    Rat mod1() const {
        long long n = num % den;
        if (n < 0) n += den;
        return Rat(n, den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

  private:
    static Rat make_checked(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        // gcd on __int128
        __int128 x = a, y = d;
        while (y) { __int128 t = x % y; x = y; y = t; }
        if (x > 1) { n /= x; d /= x; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: overflow");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }
};

// Element of the cyclotomic field Q(zeta_24).  Basis 1, z, ..., z^7 with
// z^8 = z^4 - 1 (the 24th cyclotomic polynomial).  Conductor 24 covers all
// roots of unity used in the models: -1, i, omega = e^{2pi i/3}, zeta_8,
// zeta_12.
class Cyc {
  public:
    static constexpr int N = 24;   // conductor
    static constexpr int D = 8;    // phi(24)

    Cyc() = default;
    Cyc(const Rat& r) { c_[0] = r; }
    Cyc(long long n) { c_[0] = Rat(n); }

    // zeta_24^k
    static Cyc root(int k) {
        k %= N;
        if (k < 0) k += N;
        return power_table()[k];
    }
    // e^{2 pi i t} for t with denominator dividing 24
    static Cyc phase(const Rat& t) {
        Rat u = t.mod1();
        if (N % u.den != 0) throw std::domain_error("Cyc: phase denominator must divide 24, got " + u.str());
        return root((int)(u.num * (N / u.den)));
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        Cyc r;
        for (int i = 0; i < D; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        Cyc r;
        for (int i = 0; i < D; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Cyc operator-() const {
        Cyc r;
        for (int i = 0; i < D; ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        // multiply, then rewrite z^k (k >= 8) via z^8 = z^4 - 1
        std::array<Rat, 2 * D - 1> t;
        for (int i = 0; i < D; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < D; ++j) {
                if (b.c_[j].is_zero()) continue;
                t[i + j] = t[i + j] + a.c_[i] * b.c_[j];
            }
        }
        for (int k = 2 * D - 2; k >= D; --k) {
            if (t[k].is_zero()) continue;
            t[k - 4] = t[k - 4] + t[k];
            t[k - 8] = t[k - 8] - t[k];
            t[k] = Rat(0);
        }
        Cyc r;
        for (int i = 0; i < D; ++i) r.c_[i] = t[i];
        return r;
    }
    friend bool operator==(const Cyc& a, const Cyc& b) {
        for (int i = 0; i < D; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    bool is_zero() const {
        for (int i = 0; i < D; ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (int i = 1; i < D; ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rat rational_part() const { return c_[0]; }

    Cyc conj() const {  // complex conjugation: z^k -> z^{24-k}
        Cyc r;
        for (int k = 0; k < D; ++k) {
            if (c_[k].is_zero()) continue;
            Cyc p = k == 0 ? Cyc(Rat(1)) : root(N - k);
            for (int i = 0; i < D; ++i) r.c_[i] = r.c_[i] + c_[k] * p.c_[i];
        }
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < D; ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            if (i > 0) s += "*z^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    size_t hash() const {
        size_t h = 0;
        for (int i = 0; i < D; ++i) {
            h = h * 1000003u + (size_t)c_[i].num;
            h = h * 1000003u + (size_t)c_[i].den;
        }
        return h;
    }

  private:
    std::array<Rat, D> c_{};

    static const std::array<Cyc, N>& power_table() {
        static const std::array<Cyc, N> tbl = [] {
            std::array<Cyc, N> t;
            t[0].c_[0] = Rat(1);
            for (int k = 1; k < N; ++k) {
                // t[k] = t[k-1] * z
                std::array<Rat, D + 1> tmp;
                for (int i = 0; i < D; ++i) tmp[i + 1] = t[k - 1].c_[i];
                if (!tmp[D].is_zero()) {
                    tmp[4] = tmp[4] + tmp[D];
                    tmp[0] = tmp[0] - tmp[D];
                }
                for (int i = 0; i < D; ++i) t[k].c_[i] = tmp[i];
            }
            return t;
        }();
        return tbl;
    }
};

}  // namespace sew
