"""Brute-force and third-party oracles shared by the tests."""
from fractions import Fraction


def brute_triangle(t, b):
    # points with x, y >= 1 on or below the segment (0, b)-(t, 0): y * t <= b * (t - x)
    return sum(1 for x in range(1, t + 1) for y in range(1, b + 1) if y * t <= b * (t - x))


def brute_polygon(vertices):
    """Points x >= 1 strictly above the last vertex and on or under the piecewise-linear chain."""
    base = vertices[-1][1]
    total = 0
    for x in range(1, vertices[-1][0] + 1):
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
            if x0 <= x <= x1:
                top = Fraction(y0) + Fraction(y1 - y0, x1 - x0) * (x - x0)
                break
        y = base + 1
        while y <= top:
            total += 1
            y += 1
    return total
