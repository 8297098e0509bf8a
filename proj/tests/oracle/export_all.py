"""Writes the frozen oracle tables used by the unit tests."""
import os

import sympy as sp

from laurent_oracle import case2, closed_form_y, coords, export, puiseux

out = os.path.join(os.path.dirname(__file__), "..", "data")
os.makedirs(out, exist_ok=True)
a2, b4 = sp.symbols("a2 b4")
D0, D1, D2 = sp.symbols("D0 D1 D2")
for br in ("real-plus", "real-i"):
    a, b = case2(br == "real-i", 10)
    export(os.path.join(out, f"case2_{br}.txt"), a, b, 1, sp.Rational(1, 2), (sp.Integer(2), 4), 4, (a2, b4))
a, b = puiseux(16)
export(os.path.join(out, "puiseux_plus.txt"), a, b, 2, 0, (sp.Integer(14), 2), 2, (D0, D1, D2))
for w in ("minus", "plus"):
    y = closed_form_y(w, 20)
    export(os.path.join(out, f"closed_{w}_y.txt"), {}, y, 1, 0, (sp.Integer(2), 2), 2, ())
print("forced:", __import__("laurent_oracle").FORCED)
from laurent_oracle import energy  # noqa: E402

a, b = case2(False, 10)
H = energy(a, b, 1, sp.Rational(1, 2), sp.Rational(1, 9), sp.Rational(-16, 5))
with open(os.path.join(out, "energy_case2_real-plus.txt"), "w") as f:
    f.write("# constant term of the Hamiltonian | a2 b4 | coordinates on 1, th, th^2, th^3\n")
    for mon, cs in sorted(coords(H, (sp.Integer(2), 4), 4, (a2, b4)).items()):
        f.write(f"H 0 | {' '.join(map(str, mon))} | {' '.join(cs)}\n")
a, b = puiseux(16)
H = energy(a, b, 2, 0, 1, sp.Rational(-9, 8))
with open(os.path.join(out, "energy_puiseux_plus.txt"), "w") as f:
    f.write("# constant term of the Hamiltonian | D0 D1 D2 | coordinates on 1, th\n")
    for mon, cs in sorted(coords(H, (sp.Integer(14), 2), 2, (D0, D1, D2)).items()):
        f.write(f"H 0 | {' '.join(map(str, mon))} | {' '.join(cs)}\n")
