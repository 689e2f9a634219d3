"""Compiled hot-path kernels over raw (32,) coefficient arrays.

The public API wraps these in Multivector objects; the FK/IK inner loops call
them directly.  All kernels are allocation-light and read the blade tables as
compile-time constants.
"""

import numpy as np
from numba import njit

from ._tables import (
    DIM,
    GP_A,
    GP_B,
    GP_O,
    GP_S,
    OP_S,
    LC_S,
    REVERSE_SIGN,
    DUAL_IDX,
    DUAL_SIGN,
    UNDUAL_IDX,
    UNDUAL_SIGN,
)

_N = GP_A.shape[0]


@njit(cache=True)
def gp(a, b):
    """Geometric product."""
    out = np.zeros(DIM)
    for t in range(_N):
        out[GP_O[t]] += GP_S[t] * a[GP_A[t]] * b[GP_B[t]]
    return out


@njit(cache=True)
def op(a, b):
    """Outer (wedge) product."""
    out = np.zeros(DIM)
    for t in range(_N):
        s = OP_S[t]
        if s != 0.0:
            out[GP_O[t]] += s * a[GP_A[t]] * b[GP_B[t]]
    return out


@njit(cache=True)
def lc(a, b):
    """Inner product as left contraction."""
    out = np.zeros(DIM)
    for t in range(_N):
        s = LC_S[t]
        if s != 0.0:
            out[GP_O[t]] += s * a[GP_A[t]] * b[GP_B[t]]
    return out


@njit(cache=True)
def rev(a):
    out = np.empty(DIM)
    for i in range(DIM):
        out[i] = REVERSE_SIGN[i] * a[i]
    return out


@njit(cache=True)
def dual(a):
    out = np.zeros(DIM)
    for i in range(DIM):
        out[DUAL_IDX[i]] += DUAL_SIGN[i] * a[i]
    return out


@njit(cache=True)
def undual(a):
    out = np.zeros(DIM)
    for i in range(DIM):
        out[UNDUAL_IDX[i]] += UNDUAL_SIGN[i] * a[i]
    return out


@njit(cache=True)
def sandwich(m, x):
    """m x ~m."""
    return gp(gp(m, x), rev(m))


@njit(cache=True)
def embed_point(x, y, z):
    """Hestenes embedding: X = x + e0 + x^2/2 einf as raw coefficients.

    e0 = (ebar + e)/2 -> coeffs 0.5 at EPLUS(8), EMINUS(16);
    einf = ebar - e   -> coeffs -1 at EPLUS, +1 at EMINUS.
    """
    out = np.zeros(DIM)
    out[1] = x
    out[2] = y
    out[4] = z
    h = 0.5 * (x * x + y * y + z * z)
    out[8] = 0.5 - h
    out[16] = 0.5 + h
    return out


@njit(cache=True)
def point_weight(p):
    """-(P . einf): the e0 coefficient scale of a conformal point."""
    # einf . P for P = w e0 + v + u einf gives -w; compute from EP/EM slots:
    # e0 coefficient w = p[EPLUS] + p[EMINUS] evaluated in the null basis.
    return p[8] + p[16]


@njit(cache=True)
def to_euclidean(p):
    """Euclidean part of a conformal point, normalized by its e0 weight."""
    w = p[8] + p[16]
    return np.array([p[1] / w, p[2] / w, p[4] / w])


@njit(cache=True)
def dh_motor(a, alpha, d, theta):
    """Joint motor Tz(d) Rz(theta) Tx(a) Rx(alpha) as one even multivector.

    Tz = 1 - d/2 e3 einf, Rz = cos(t/2) - sin(t/2) e12,
    Tx = 1 - a/2 e1 einf, Rx = cos(al/2) - sin(al/2) e23.
    """
    tz = np.zeros(DIM)
    tz[0] = 1.0
    # e3 einf = e3(ebar - e): blade(4|16)=20 and -(4|8)=12
    tz[20] = -0.5 * d
    tz[12] = 0.5 * d
    rz = np.zeros(DIM)
    rz[0] = np.cos(theta / 2.0)
    rz[3] = -np.sin(theta / 2.0)
    tx = np.zeros(DIM)
    tx[0] = 1.0
    tx[17] = -0.5 * a
    tx[9] = 0.5 * a
    rx = np.zeros(DIM)
    rx[0] = np.cos(alpha / 2.0)
    rx[6] = -np.sin(alpha / 2.0)
    return gp(gp(gp(tz, rz), tx), rx)


@njit(cache=True)
def translator(vx, vy, vz):
    """T = 1 - v einf / 2."""
    out = np.zeros(DIM)
    out[0] = 1.0
    # e1 einf: +(1|16)=17, -(1|8)=9 ; e2 einf: 18, 10 ; e3 einf: 20, 12
    out[17] = -0.5 * vx
    out[9] = 0.5 * vx
    out[18] = -0.5 * vy
    out[10] = 0.5 * vy
    out[20] = -0.5 * vz
    out[12] = 0.5 * vz
    return out


@njit(cache=True)
def chain_motor(dh, jt, q, n):
    """Motor product of the first n joints. dh rows: (a, alpha, d, theta)."""
    m = np.zeros(DIM)
    m[0] = 1.0
    for i in range(n):
        d = dh[i, 2]
        th = dh[i, 3]
        if jt[i] == 0:
            th += q[i]
        else:
            d += q[i]
        m = gp(m, dh_motor(dh[i, 0], dh[i, 1], d, th))
    return m


@njit(cache=True)
def motor_apply_point(m, x, y, z):
    """Euclidean image of the point (x,y,z) under the motor m."""
    mr = rev(m)
    p = gp(gp(m, embed_point(x, y, z)), mr)
    w = p[8] + p[16]
    return np.array([p[1] / w, p[2] / w, p[4] / w])


@njit(cache=True)
def motor_frame(m):
    """Rotation matrix (columns = images of e1,e2,e3) of the motor m."""
    mr = rev(m)
    out = np.empty((3, 3))
    for k in range(3):
        v = np.zeros(DIM)
        v[1 << k] = 1.0
        f = gp(gp(m, v), mr)
        out[0, k] = f[1]
        out[1, k] = f[2]
        out[2, k] = f[4]
    return out


@njit(cache=True)
def fk_pose(dh, jt, q):
    """Full chain pose: returns (px,py,pz, r11,r21,r31, r12,r22,r32, r13,r23,r33).

    Rotation entries are column-major: columns are the end frame axes.
    """
    m = chain_motor(dh, jt, q, dh.shape[0])
    mr = rev(m)
    p = gp(gp(m, embed_point(0.0, 0.0, 0.0)), mr)
    w = p[8] + p[16]
    out = np.empty(12)
    out[0] = p[1] / w
    out[1] = p[2] / w
    out[2] = p[4] / w
    for k in range(3):
        v = np.zeros(DIM)
        v[1 << k] = 1.0
        f = gp(gp(m, v), mr)
        out[3 + 3 * k] = f[1]
        out[4 + 3 * k] = f[2]
        out[5 + 3 * k] = f[4]
    return out


@njit(cache=True)
def wrist_target(dh, jt, q, npos, lever):
    """Position reached by the wrist center: frame-npos image of (0,0,lever)."""
    m = chain_motor(dh, jt, q, npos)
    return motor_apply_point(m, 0.0, 0.0, lever)


@njit(cache=True)
def local_coords(m, wx, wy, wz):
    """Coordinates of the world point w in the frame of motor m."""
    mr = rev(m)
    p = gp(gp(mr, embed_point(wx, wy, wz)), m)
    w = p[8] + p[16]
    return np.array([p[1] / w, p[2] / w, p[4] / w])


@njit(cache=True)
def rotor_g3_of_motor(m):
    """Unit G(3) rotor part of a rigid motor (its rotation)."""
    out = np.zeros(DIM)
    out[0] = m[0]
    out[3] = m[3]
    out[5] = m[5]
    out[6] = m[6]
    n = np.sqrt(out[0] ** 2 + out[3] ** 2 + out[5] ** 2 + out[6] ** 2)
    return out / n
