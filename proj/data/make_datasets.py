"""Regenerates the bundled synthetic datasets in this directory.

V_a follows a ln(d / 1 um) + b with a = 3 mV, b = 5 mV. The parallel-plate
force file adds a Casimir-like -K/d^3 term to the closed-form background
F = eps0 A a^2 (d/D - 1)^2 / (2 d^2), D = 100 um.
"""
import math
import os

here = os.path.dirname(os.path.abspath(__file__))
eps0 = 8.8541878128e-12
a, b = 3e-3, 5e-3
area = 1e-4
D = 100e-6
K = 1e-26


def geomspace(lo, hi, n):
    return [math.exp(math.log(lo) + (math.log(hi) - math.log(lo)) * i / (n - 1)) for i in range(n)]


def write(name, header, rows):
    with open(os.path.join(here, name), "w", newline="\n") as f:
        f.write(header + "\n")
        for r in rows:
            f.write(",".join("%.16e" % x for x in r) + "\n")


va_grid = geomspace(1e-6, 50e-6, 50)
va = [(d, a * math.log(d / 1e-6) + b) for d in va_grid]
write("parallel_plate_va.csv", "d_m,va_V", va)
write("sphere_plate_va.csv", "d_m,va_V", va)

force = []
for d in geomspace(1e-6, 10e-6, 40):
    background = eps0 * area * a * a * (d / D - 1) ** 2 / (2 * d * d)
    force.append((d, -K / d ** 3 + background))
write("parallel_plate_force.csv", "d_m,F_N", force)
