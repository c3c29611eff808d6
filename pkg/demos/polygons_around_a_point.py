"""N chords through one point cut out a parabolic 2N-gon with concyclic vertices.

Run with ``python demos/polygons_around_a_point.py [out.svg]``; with an
argument the hexagon is also rendered.
"""

import sys

from parapoly import Circle, Point, build_ngon
from parapoly.render import RenderSpec, render_svg
from parapoly.scene import Environment

k = Circle(Point(0.0, 0.0), 1.0)
x = Point(0.3, 0.1)

for n in range(2, 7):
    res = build_ngon(k, x, n, 0.4)
    fc = res.fitted_circle
    print(f"N={n}: {len(res.vertices)} vertices, circle ({fc.center.x:+.6f}, {fc.center.y:+.6f}) "
          f"r={fc.r:.6f}, residual {res.residual:.1e}")

if len(sys.argv) > 1:
    env = Environment()
    env.values["hexagon"] = build_ngon(k, x, 3, 0.4)
    env.kinds["hexagon"] = "ngon"
    render_svg(env, RenderSpec(sys.argv[1]))
    print("wrote", sys.argv[1])
