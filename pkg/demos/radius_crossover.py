"""Which bound wins on S^2(r) x N^2 as the sphere radius varies.

Shrinking the sphere raises both the scalar curvature and the Ricci
spread. The Kaehler comparison bound wins for small radii; past
r = 1/sqrt(2) ~ 0.7071 the refined spread-sensitive bound takes over,
and beyond r = 1 it is the only one left standing (R turns negative).
The same data comes out of
    diracbound sweep --example s2r-x-hyperbolic --param radius \
        --from 0.5 --to 1.2 --steps 15 --kaehler-dim 2
"""

import numpy as np

import diracbound as db


def profile(radius):
    return db.realize(db.Product((db.Sphere(radius), db.Surface(-2.0))))


if __name__ == "__main__":
    print(f"{'r':>6} {'friedrich':>10} {'kaehler':>10} "
          f"{'theorem31':>10}  winner")
    previous = None
    for r in np.linspace(0.5, 1.2, 15):
        p = profile(r)
        fr = db.friedrich_bound(p).value
        ka = db.kaehler_bound(p, 2).value
        th = db.theorem31_bound(p).value
        winner = "kaehler" if ka > th else "theorem31"
        mark = "   <- crossover" if previous not in (None, winner) else ""
        previous = winner
        print(f"{r:6.3f} {fr:10.6f} {ka:10.6f} {th:10.6f}  {winner}{mark}")
