#pragma once

// Exact rational scalars and small dense linear algebra over them.  Every
// exact-path computation in the toolkit (hulls, norms, cone weights, volumes,
// cutline integration) runs on these types; floating point is confined to the
// Monte Carlo and quadrature modules.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "sprawl/errors.hpp"

namespace sprawl {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor requires sign-canonical input, so
// all construction from raw numerator/denominator goes through here.
inline Rat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    BigInt g = gcd(abs(num), den);
    if (g > 1) { num /= g; den /= g; }
    return Rat(num, den);
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline int rat_sign(const Rat& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// Parses "p", "p/q", or a plain decimal like "0.05" into an exact rational.
Rat parse_rational(const std::string& text);

std::string rat_to_string(const Rat& x);

// Decimal expansion with the given number of fractional digits, correctly
// rounded toward zero (sufficient for display; exact values travel as pairs).
std::string rat_to_decimal(const Rat& x, int digits);

// ---------------------------------------------------------------------------
// Vectors and matrices

using VecR = std::vector<Rat>;
using MatR = std::vector<VecR>; // row-major, rows of equal length

inline Rat dot(const VecR& a, const VecR& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VecR vec_add(const VecR& a, const VecR& b);
VecR vec_sub(const VecR& a, const VecR& b);
VecR vec_scale(const Rat& c, const VecR& a);
VecR vec_neg(const VecR& a);
bool vec_is_zero(const VecR& a);

// 2D cross product (scalar).
inline Rat cross2(const VecR& a, const VecR& b) {
    return a[0] * b[1] - a[1] * b[0];
}

MatR mat_identity(int d);
MatR mat_mul(const MatR& a, const MatR& b);
VecR mat_apply(const MatR& m, const VecR& v);
Rat mat_det(MatR m);                 // by fraction-free-ish Gaussian elimination
MatR mat_inverse(const MatR& m);     // throws SingularMatrix
MatR mat_transpose(const MatR& m);

// Solves m x = rhs exactly; throws SingularMatrix when m is not invertible.
VecR solve_linear(MatR m, VecR rhs);

} // namespace sprawl
