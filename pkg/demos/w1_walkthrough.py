"""Unit circle, two chords, and the quadrilateral their tangent parabolas bound.

Run with ``python demos/w1_walkthrough.py``.
"""

import math

from parapoly import (Circle, Point, inscribed_circle, parabola_from_tangent_chord,
                      parabolas_through_four_points, parabolic_quadrilateral,
                      perpendicular_diagonals_residual)

k = Circle(Point(0.0, 0.0), 1.0)
h = math.sqrt(3.0) / 2.0

# chords y = 1/2 and x = 1/2 cross inside the circle
p1 = parabola_from_tangent_chord(k, Point(-h, 0.5), Point(h, 0.5))
p2 = parabola_from_tangent_chord(k, Point(0.5, -h), Point(0.5, h))
print("p1:", p1)
print("p2:", p2)

pq = parabolic_quadrilateral(p1, p2)
for v in pq.vertices:
    print(f"vertex ({v.x:+.12f}, {v.y:+.12f})")
print("diagonals meet at", pq.L)
print("|cos| between diagonals:", perpendicular_diagonals_residual(pq))

ic = inscribed_circle(pq)
c = ic.circle
print(f"incircle center ({c.center.x:.3e}, {c.center.y:.3e}), radius {c.r:.15f}")
print("contacts on p1:", ic.tangency_p1)
print("contacts on p2:", ic.tangency_p2)

# the vertices determine the two parabolas again
back = parabolas_through_four_points(*pq.vertices)
print("recovered:", [q.same_as(p1, 1e-12) or q.same_as(p2, 1e-12) for q in back])
