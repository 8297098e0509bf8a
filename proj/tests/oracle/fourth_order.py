"""Eliminates x from the motion equations with sympy (independent oracle)."""
import sympy as sp

x, x1, y, y1, y2, H, lam, C = sp.symbols("x x1 y y1 y2 H lam C")
x2 = -lam * x - 2 * x * y
yy2 = -y - x ** 2 + C * y ** 2
yy3 = -y1 - 2 * x * x1 + 2 * C * y * y1
yy4 = sp.expand(-yy2 - 2 * x1 ** 2 - 2 * x * x2 + 2 * C * y1 ** 2 + 2 * C * y * yy2)
x1sq = 2 * H - y1 ** 2 - lam * x ** 2 - y ** 2 - 2 * x ** 2 * y + sp.Rational(2, 3) * C * y ** 3
r = sp.expand(yy4.subs(x1 ** 2, x1sq))
assert not r.has(x1)
r = sp.expand(r.subs(x ** 2, C * y ** 2 - y - y2))
assert not r.has(x)
print(sp.collect(r, [y, y1, y2, H]))
