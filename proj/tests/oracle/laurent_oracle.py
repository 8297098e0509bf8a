"""Independent undetermined-coefficient solver for the Henon-Heiles series.

Substitutes the ansatz directly into x'' + lam x + 2xy = 0 and
y'' + y + x^2 - C y^2 = 0 with sympy and solves order by order. The output
is what the unit tests freeze; it shares no code with the C++ engine.
"""
import sys

import sympy as sp

s = sp.symbols("s", positive=True)  # tau = s^(2q)


FORCED = {}


def solve(lam, C, q, shift, a_lead, b_lead, n_labels, free):
    """Labels L: y has b_L tau^(L/q), x has a_L tau^(L/q + shift).

    free: {label: (component, symbol)} for the singular steps."""
    m = 2 * q
    sx = int(shift * m)
    L0 = -2 * q
    a, b = {L0: a_lead}, {L0: b_lead}
    A, B = sp.symbols("A B")

    def d2(f):
        d = lambda g: sp.diff(g, s) / (m * s ** (m - 1))
        return d(d(f))

    for L in range(L0 + 1, L0 + n_labels + 1):
        a[L], b[L] = A, B
        x = sum(c * s ** (2 * k + sx) for k, c in a.items())
        y = sum(c * s ** (2 * k) for k, c in b.items())
        ex = sp.expand((d2(x) + lam * x + 2 * x * y) * s ** (-(2 * L + sx - 2 * m)))
        ey = sp.expand((d2(y) + y + x ** 2 - C * y ** 2) * s ** (-(2 * L - 2 * m)))
        cx = ex.coeff(s, 0)
        cy = ey.coeff(s, 0)
        if L in free:
            comp, sym = free[L]
            if comp == "a":
                a[L] = sym
                eqs = [e.subs(A, sym) for e in (cx, cy)]
                eq = next(e for e in eqs if e.has(B))
                b[L] = sp.expand(sp.solve(eq, B)[0])
            else:
                b[L] = sym
                eqs = [e.subs(B, sym) for e in (cx, cy)]
                eq = next((e for e in eqs if e.has(A)), None)
                a[L] = sp.expand(sp.solve(eq, A)[0]) if eq is not None else sp.Integer(0)
            rest = [sp.simplify(e.subs({A: a[L], B: b[L]})) for e in (cx, cy)]
            rest = [r for r in rest if r != 0]
            if rest:
                # Compatibility forces an earlier free datum; record and substitute.
                earlier = [sy for _, sy in (free[k] for k in free if k < L)]
                forced = sp.solve(rest, earlier, dict=True)
                assert len(forced) == 1, (L, rest)
                FORCED.update(forced[0])
                for tbl in (a, b):
                    for k in tbl:
                        tbl[k] = sp.expand(sp.sympify(tbl[k]).subs(forced[0]))
        else:
            sol = sp.solve([cx, cy], [A, B], dict=True)
            assert len(sol) == 1, (L, cx, cy)
            a[L] = sp.expand(sp.radsimp(sol[0][A]))
            b[L] = sp.expand(sp.radsimp(sol[0][B]))
    return a, b


def case2(branch_i, n_labels=8):
    th = sp.root(2, 4)
    c1 = sp.Rational(5, 4) * th * (sp.I if branch_i else 1)
    a2, b4 = sp.symbols("a2 b4")
    return solve(sp.Rational(1, 9), sp.Rational(-16, 5), 1, sp.Rational(1, 2), c1, sp.Rational(-15, 8), n_labels,
                 {2: ("a", a2), 4: ("b", b4)})


def puiseux(n_labels=16):
    D0, D1, D2 = sp.symbols("D0 D1 D2")
    return solve(1, sp.Rational(-9, 8), 2, 0, sp.Rational(3, 4) * sp.sqrt(14), -3, n_labels,
                 {-1: ("b", D0), 3: ("b", D1), 8: ("b", D2)})


if __name__ == "__main__":
    which = sys.argv[1] if len(sys.argv) > 1 else "real-plus"
    if which == "puiseux":
        a, b = puiseux()
        q = 2
    else:
        a, b = case2(which == "real-i")
        q = 1
    for L in sorted(a):
        print(f"x t^({sp.Rational(L, q)}+shift):", sp.nsimplify(sp.expand(a[L])))
    for L in sorted(b):
        print(f"y t^({sp.Rational(L, q)}):", sp.expand(b[L]))


def closed_form_y(which, n):
    """Laurent coefficients of y = -5/(3(1 -+ 3 sin(tau/3 + phi))^2) through tau^n."""
    tau = sp.symbols("tau")
    sgn = -1 if which == "minus" else 1
    sin_phi, cos_phi = sp.Rational(-sgn, 3), -2 * sp.sqrt(2) / 3
    u = 1 + sgn * 3 * (sin_phi * sp.cos(tau / 3) + cos_phi * sp.sin(tau / 3))
    v = sp.series(u / tau, tau, 0, n + 4).removeO()
    y = sp.series(-sp.Rational(5, 3) / v ** 2, tau, 0, n + 3).removeO()
    y = sp.expand(y)
    return {k - 2: sp.radsimp(y.coeff(tau, k)) for k in range(0, n + 3)}


def coords(expr, gen, deg, syms):
    """Rows (exponents, [QI strings on the power basis of gen])."""
    t = sp.symbols("t")
    e = sp.expand(expr)
    if gen is not None:
        base, k = gen
        e = e.replace(lambda z: z.is_Pow and z.base == base and z.exp.is_Rational and (z.exp * k).is_integer,
                      lambda z: t ** int(z.exp * k))
        e = sp.expand(e)
    poly = sp.Poly(e, t, *syms)
    rows = {}
    for mon, c in poly.terms():
        re, im = sp.Rational(sp.re(c)), sp.Rational(sp.im(c))
        key = tuple(mon[1:])
        rows.setdefault(key, ["0"] * deg)
        d = mon[0] % deg
        assert mon[0] < deg, (expr, mon)
        v = str(re) if im == 0 else (f"{re}+{im}*i" if re != 0 else f"{im}*i")
        rows[key][d] = v
    return rows


def export(path, a, b, q, shift, gen, deg, syms):
    with open(path, "w") as f:
        f.write("# component exponent | parameter exponents | coordinates on 1, th, th^2, ...\n")
        for comp, table, off in (("x", a, shift), ("y", b, 0)):
            for L in sorted(table):
                e = sp.Rational(L, q) + off
                for mon, cs in sorted(coords(table[L], gen, deg, syms).items()):
                    f.write(f"{comp} {e} | {' '.join(map(str, mon))} | {' '.join(cs)}\n")


def energy(a, b, q, shift, lam, C):
    """Constant term of the Hamiltonian on the truncated series."""
    m = 2 * q
    sx = int(shift * m)
    x = sum(c * s ** (2 * k + sx) for k, c in a.items())
    y = sum(c * s ** (2 * k) for k, c in b.items())
    d = lambda g: sp.diff(g, s) / (m * s ** (m - 1))
    H = sp.expand(sp.Rational(1, 2) * (d(x) ** 2 + d(y) ** 2 + lam * x ** 2 + y ** 2) + x ** 2 * y - C * y ** 3 / 3)
    return sp.radsimp(H.coeff(s, 0))
