// Sign-exact 2D orientation predicate. Fast path evaluates the determinant in
// doubles with a forward error bound; when the bound cannot certify the sign
// the determinant is recomputed exactly with floating-point expansions
// (nonoverlapping multi-term sums, Dekker/Knuth style).

#include "opsg/geometry.hpp"

namespace opsg {
namespace {

constexpr double kEpsilon = 1.1102230246251565e-16;           // 2^-53
constexpr double kSplitter = 134217729.0;                     // 2^27 + 1
constexpr double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bvirt = x - a;
    const double avirt = x - bvirt;
    const double bround = b - bvirt;
    const double around = a - avirt;
    y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    const double bvirt = a - x;
    const double avirt = x + bvirt;
    const double bround = bvirt - b;
    const double around = a - avirt;
    y = around + bround;
}

inline void split(double a, double& hi, double& lo) {
    const double c = kSplitter * a;
    const double abig = c - a;
    hi = c - abig;
    lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    const double err1 = x - ahi * bhi;
    const double err2 = err1 - alo * bhi;
    const double err3 = err2 - ahi * blo;
    y = alo * blo - err3;
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1, double& x0) {
    double i;
    two_diff(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

// (a1 + a0) - (b1 + b0) as a four-component expansion x3..x0.
inline void two_two_diff(double a1, double a0, double b1, double b0,
                         double& x3, double& x2, double& x1, double& x0) {
    double j, r0;
    two_one_diff(a1, a0, b0, j, r0, x0);
    two_one_diff(j, r0, b1, x3, x2, x1);
}

// Merges two nonoverlapping expansions, dropping zero components.
int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f,
                                double* h) {
    int eindex = 0, findex = 0;
    double enow = e[0];
    double fnow = f[0];
    double q;
    if ((fnow > enow) == (fnow > -enow)) {
        q = enow;
        ++eindex;
    } else {
        q = fnow;
        ++findex;
    }
    int hindex = 0;
    double qnew, hh;
    if (eindex < elen && findex < flen) {
        enow = e[eindex];
        fnow = f[findex];
        if ((fnow > enow) == (fnow > -enow)) {
            two_sum(enow, q, qnew, hh);
            ++eindex;
        } else {
            two_sum(fnow, q, qnew, hh);
            ++findex;
        }
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
        while (eindex < elen && findex < flen) {
            enow = e[eindex];
            fnow = f[findex];
            if ((fnow > enow) == (fnow > -enow)) {
                two_sum(q, enow, qnew, hh);
                ++eindex;
            } else {
                two_sum(q, fnow, qnew, hh);
                ++findex;
            }
            q = qnew;
            if (hh != 0.0) h[hindex++] = hh;
        }
    }
    while (eindex < elen) {
        two_sum(q, e[eindex++], qnew, hh);
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    while (findex < flen) {
        two_sum(q, f[findex++], qnew, hh);
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    if (q != 0.0 || hindex == 0) h[hindex++] = q;
    return hindex;
}

double orient2d_exact(const Point& a, const Point& b, const Point& c) {
    // det = (ax*by - ay*bx) + (ay*cx - ax*cy) + (bx*cy - by*cx)
    double p1, p0, q1, q0;
    double m1[4], m2[4], m3[4];

    two_product(a.x, b.y, p1, p0);
    two_product(a.y, b.x, q1, q0);
    two_two_diff(p1, p0, q1, q0, m1[3], m1[2], m1[1], m1[0]);

    two_product(a.y, c.x, p1, p0);
    two_product(a.x, c.y, q1, q0);
    two_two_diff(p1, p0, q1, q0, m2[3], m2[2], m2[1], m2[0]);

    two_product(b.x, c.y, p1, p0);
    two_product(b.y, c.x, q1, q0);
    two_two_diff(p1, p0, q1, q0, m3[3], m3[2], m3[1], m3[0]);

    double t[8], d[12];
    const int tlen = fast_expansion_sum_zeroelim(4, m1, 4, m2, t);
    const int dlen = fast_expansion_sum_zeroelim(tlen, t, 4, m3, d);
    return d[dlen - 1];
}

} // namespace

double orient2d(const Point& a, const Point& b, const Point& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det;
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det;
        detsum = -detleft - detright;
    } else {
        return det;
    }
    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) return det;
    return orient2d_exact(a, b, c);
}

} // namespace opsg
