#include "sprawl/rational.hpp"

#include <algorithm>
#include <sstream>

namespace sprawl {

Rat parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw InvalidInput("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            return make_rat(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(BigInt(s));
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("bad decimal literal: " + text);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
        BigInt num = (ip.empty() ? BigInt(0) : BigInt(ip));
        BigInt den = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        if (neg) num = -num;
        return make_rat(num, den);
    } catch (const std::exception& e) {
        throw InvalidInput("cannot parse rational '" + text + "': " + e.what());
    }
}

std::string rat_to_string(const Rat& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << "/" << denominator(x);
    return os.str();
}

std::string rat_to_decimal(const Rat& x, int digits) {
    BigInt num = numerator(x), den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt ip = num / den, rem = num % den;
    std::ostringstream os;
    if (neg) os << '-';
    os << ip;
    if (digits > 0) {
        os << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            os << (rem / den);
            rem %= den;
        }
    }
    return os.str();
}

VecR vec_add(const VecR& a, const VecR& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
    VecR r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecR vec_sub(const VecR& a, const VecR& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
    VecR r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecR vec_scale(const Rat& c, const VecR& a) {
    VecR r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

VecR vec_neg(const VecR& a) {
    VecR r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool vec_is_zero(const VecR& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

MatR mat_identity(int d) {
    MatR m(d, VecR(d, Rat(0)));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

MatR mat_mul(const MatR& a, const MatR& b) {
    size_t n = a.size(), k = b.size(), p = b[0].size();
    MatR r(n, VecR(p, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

VecR mat_apply(const MatR& m, const VecR& v) {
    VecR r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

MatR mat_transpose(const MatR& m) {
    size_t n = m.size(), p = m[0].size();
    MatR r(p, VecR(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < p; ++j) r[j][i] = m[i][j];
    return r;
}

Rat mat_det(MatR m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

VecR solve_linear(MatR m, VecR rhs) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("solve_linear: singular system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat inv = Rat(1) / m[col][col];
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    VecR x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

MatR mat_inverse(const MatR& m) {
    size_t n = m.size();
    MatR a = m, inv = mat_identity((int)n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("mat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace sprawl
