"""Independent high-precision derivation of the frozen expected values used in
the C++ unit and acceptance tests.  Run with `python3 derive_values.py`.

Everything here is computed from first principles with mpmath (50 digits):
norms are written out by hand for the concrete vectors, integrals use
mpmath.quad, series use exact binomial coefficients.  Nothing in this file
calls into the C++ library.
"""
from mpmath import mp, mpf, sqrt, quad, binomial, log, asinh, nsum, inf

mp.dps = 50


def l1(v):
    return sum(abs(c) for c in v)


def l2(v):
    return sqrt(sum(c * c for c in v))


def scale(c, v):
    return [c * e for e in v]


def sub(u, v):
    return [a - b for a, b in zip(u, v)]


def add(u, v):
    return [a + b for a, b in zip(u, v)]


def alpha(norm, x, y, p):
    return norm(sub(scale(norm(x) ** (p - 1), x), scale(norm(y) ** (p - 1), y)))


def beta(norm, x, y, p):
    return norm(sub(scale(norm(y) ** (p - 1), x), scale(norm(x) ** (p - 1), y)))


def show(name, value):
    print(f"{name:55s} {mp.nstr(value, 20)}")


x, y = [mpf(3), mpf(0)], [mpf(0), mpf(4)]
show("alpha_2 euclid (3,0),(0,4)", alpha(l2, x, y, 2))
show("beta_2 euclid (3,0),(0,4)", beta(l2, x, y, 2))
show("alpha_0 euclid (3,0),(0,4)", alpha(l2, x, y, 0))
show("beta_0 euclid (3,0),(0,4)", beta(l2, x, y, 0))
show("skew cap p=0 2*min(3/4,4/3)*beta_0", 2 * mpf(3) / 4 * beta(l2, x, y, 0))

# Dragomir integral for p=2, q=1 and its closed-form antiderivative
f = lambda t: sqrt(25 * t * t - 18 * t + 9)
I = quad(f, [0, 1])
show("int_0^1 sqrt(25t^2-18t+9)", I)
a, b, c = mpf(25), mpf(-18), mpf(9)
F = lambda t: (2 * a * t + b) / (4 * a) * sqrt(a * t * t + b * t + c) + \
    (4 * a * c - b * b) / (8 * a ** mpf(1.5)) * log(2 * sqrt(a) * sqrt(a * t * t + b * t + c) + 2 * a * t + b)
show("  antiderivative check", F(1) - F(0))
show("dragomir upper p=2 q=1 = 10*I", 10 * I)
show("dragomir reverse p=1 q=2 lower = sqrt(337)/(2*I)", sqrt(337) / (2 * I))

# p=0, q=1, unit vectors (1,0),(0,1)
J = quad(lambda t: 1 / sqrt((1 - t) ** 2 + t ** 2), [0, 0.5, 1])
show("int_0^1 |(1-t,t)|^-1", J)
show("dragomir upper p=0 q=1 unit = 2*sqrt2*J", 2 * sqrt(2) * J)

# chain for l1, p=4, q=2, x=(1,0), y=(1,1)
x1, y1 = [mpf(1), mpf(0)], [mpf(1), mpf(1)]
p, q = mpf(4), mpf(2)
nx, ny = l1(x1), l1(y1)
u, v = scale(nx ** (q - 1), x1), scale(ny ** (q - 1), y1)
aq = alpha(l1, x1, y1, q)
seg = quad(lambda t: l1(add(scale(1 - t, u), scale(t, v))) ** (p / q - 1), [0, mpf(2) / 3, 1])
sca = quad(lambda t: ((1 - t) * nx ** q + t * ny ** q) ** (p / q - 1), [0, 1])
chain = [alpha(l1, x1, y1, p), p / q * aq * seg, p / q * aq * sca,
         (ny ** p - nx ** p) / (ny ** q - nx ** q) * aq,
         p / q * aq * (nx ** (p - q) + ny ** (p - q)) / 2,
         p / q * aq * max(nx ** (p - q), ny ** (p - q))]
for i, t in enumerate(chain):
    show(f"l1 chain p=4 q=2 term {i}", t)

# series: binomial sums
z = (2 - sqrt(3)) ** 2
show("(2-sqrt3)^2", z)
show("sqrt(2-sqrt3)", sqrt(2 - sqrt(3)))
show("sqrt(2+sqrt3)", sqrt(2 + sqrt(3)))
show("sum binom(1/2,k) z^k", nsum(lambda k: binomial(mpf(1) / 2, k) * z ** k, [0, inf]))

# beta witness, p=0, s=0.1: x=2a, y=s a, z=a on a 1-d subspace
s = mpf(1) / 10
line = lambda v: abs(v[0])
X, Y, Z = [mpf(2)], [s], [mpf(1)]
lhs = beta(line, X, Y, 0)
rhs = beta(line, X, Z, 0) + beta(line, Y, Z, 0)
show("beta_0 witness s=0.1 lhs", lhs)
show("beta_0 witness s=0.1 rhs", rhs)
show("beta_0 witness s=0.1 margin", lhs - rhs)

# certifier l1 witness
xw, yw = [mpf(1), mpf(0)], [mpf(5) / 6, mpf(11) / 30]
show("l1 witness alpha_2", alpha(l1, xw, yw, 2))
show("l1 witness beta_2", beta(l1, xw, yw, 2))
nxw, nyw = l1(xw), l1(yw)
rad = (nxw ** 3 - nyw ** 3) * (nxw - nyw) + nxw * nyw * l1(sub(xw, yw)) ** 2
show("l1 witness identity rhs", sqrt(rad))
show("l1 witness identity residual", abs(alpha(l1, xw, yw, 2) - sqrt(rad)))

# best-constant ratio p=2,q=1 eps=1e-5 via the case-wise ratio
for (pp, qq, eps) in [(2, 1, mpf(1)), (2, 1, mpf('1e-5')), (1, 2, mpf('1e-5')), (3, 2, mpf('1e-6')), (-1, 1, mpf('1e-6'))]:
    pp, qq = mpf(pp), mpf(qq)
    xe = scale((1 + eps) ** ((1 - qq) / qq), [mpf(1), eps])
    ye = [mpf(1), mpf(0)]
    a_, b_ = l1(xe), l1(ye)
    r = pp / qq
    if r >= 1:
        ratio = alpha(l1, xe, ye, pp) / (alpha(l1, xe, ye, qq) * max(a_ ** (pp - qq), b_ ** (pp - qq)))
    elif r >= 0:
        ratio = alpha(l1, xe, ye, pp) / alpha(l1, xe, ye, qq) * max(a_ ** (qq - pp), b_ ** (qq - pp))
    else:
        R = max(a_ ** pp, b_ ** pp) / max(a_ ** qq, b_ ** qq)
        ratio = alpha(l1, xe, ye, pp) / (R * alpha(l1, xe, ye, qq))
    show(f"best constant ratio p={pp} q={qq} eps={mp.nstr(eps, 3)}", ratio)
